use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cut::CutSemimetric;
use super::ser_ratio;
use crate::dyadic::{sample_bernoulli_with, DyadicWord};
use crate::error::{Error, Result};
use crate::pascal::successor_mut;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dynamics {
    Pascal,
    Odometer,
}

impl Dynamics {
    pub fn step(self, x: &mut DyadicWord) -> Result<()> {
        match self {
            Dynamics::Pascal => successor_mut(x),
            Dynamics::Odometer => x.odometer_step_mut(),
        }
    }
}

impl FromStr for Dynamics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Dynamics> {
        match s {
            "pascal" => Ok(Dynamics::Pascal),
            "odometer" => Ok(Dynamics::Odometer),
            _ => Err(Error::BadParameter(format!("unknown dynamics {s:?}"))),
        }
    }
}

impl fmt::Display for Dynamics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dynamics::Pascal => "pascal",
            Dynamics::Odometer => "odometer",
        })
    }
}

/// Classes of `x, T x, ..., T^(steps-1) x`.
pub fn class_sequence(dynamics: Dynamics, metric: &CutSemimetric, x: &DyadicWord, steps: usize) -> Result<Vec<u8>> {
    let mut y = x.clone();
    let mut out = Vec::with_capacity(steps);
    for s in 0..steps {
        out.push(metric.classify_point(&y)?);
        if s + 1 < steps {
            dynamics.step(&mut y)?;
        }
    }
    Ok(out)
}

/// `n^-1 sum_(s<n) rho(T^s x, T^s y)` for each `n` in `checkpoints`.
pub fn prefix_averages(
    dynamics: Dynamics,
    metric: &CutSemimetric,
    x: &DyadicWord,
    y: &DyadicWord,
    checkpoints: &[usize],
) -> Result<Vec<Ratio<u64>>> {
    let steps = checkpoints.iter().copied().max().unwrap_or(0);
    let a = class_sequence(dynamics, metric, x, steps)?;
    let b = class_sequence(dynamics, metric, y, steps)?;
    let mut mismatches = vec![0u64; steps + 1];
    for s in 0..steps {
        mismatches[s + 1] = mismatches[s] + u64::from(a[s] != b[s]);
    }
    checkpoints
        .iter()
        .map(|&n| {
            if n == 0 {
                Err(Error::BadParameter("averaging length must be positive".into()))
            } else {
                Ok(Ratio::new(mismatches[n], n as u64))
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairAverage {
    pub pair: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub average: Ratio<u64>,
}

/// Orbit averages of the cut semimetric for `pairs` random pairs of
/// `len`-bit points drawn from one seeded stream.
pub fn averaged_cut_metric(
    dynamics: Dynamics,
    metric: &CutSemimetric,
    pairs: usize,
    steps: usize,
    seed: u64,
    len: usize,
) -> Result<Vec<PairAverage>> {
    if steps == 0 {
        return Err(Error::BadParameter("steps must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..pairs)
        .map(|pair| {
            let x = sample_bernoulli_with(&mut rng, 0.5, len)?;
            let y = sample_bernoulli_with(&mut rng, 0.5, len)?;
            let average = prefix_averages(dynamics, metric, &x, &y, &[steps])?[0];
            Ok(PairAverage { pair, average })
        })
        .collect()
}

pub fn to_f64(r: &Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Mean and sample standard deviation (divisor `n - 1`).
pub fn mean_and_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}
