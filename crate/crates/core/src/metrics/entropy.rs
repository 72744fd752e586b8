use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::averaged::{class_sequence, Dynamics};
use super::cut::CutSemimetric;
use crate::dyadic::sample_bernoulli_with;
use crate::error::{Error, Result};

/// Greedy epsilon-net of a finite metric sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Covering {
    pub centers: Vec<usize>,
    /// Every point lies within epsilon of some center (re-checked).
    pub verified: bool,
}

fn within(d: &Ratio<u64>, epsilon: f64) -> bool {
    (*d.numer() as f64) <= epsilon * (*d.denom() as f64)
}

/// Farthest-point greedy covering: start at point 0, then repeatedly add the
/// point farthest from its nearest center (lowest index on ties) until all
/// points are within `epsilon`.
pub fn epsilon_entropy(dist: &[Vec<Ratio<u64>>], epsilon: f64) -> Result<Covering> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::BadParameter(format!("epsilon = {epsilon} must be positive")));
    }
    let n = dist.len();
    if n == 0 || dist.iter().any(|row| row.len() != n) {
        return Err(Error::BadParameter("distance matrix must be square and nonempty".into()));
    }
    let mut centers = vec![0];
    let mut near: Vec<Ratio<u64>> = dist[0].clone();
    loop {
        let mut far = 0;
        for i in 1..n {
            if near[i] > near[far] {
                far = i;
            }
        }
        if within(&near[far], epsilon) {
            break;
        }
        centers.push(far);
        for i in 0..n {
            if dist[far][i] < near[i] {
                near[i] = dist[far][i];
            }
        }
    }
    let verified = (0..n).all(|i| centers.iter().any(|&c| within(&dist[c][i], epsilon)));
    Ok(Covering { centers, verified })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntropyEntry {
    pub n: usize,
    pub k: usize,
    pub centers: Vec<usize>,
}

/// Covering numbers of a point sample under orbit-averaged cut metrics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    pub dynamics: Dynamics,
    pub epsilon: f64,
    pub points: usize,
    pub horizons: Vec<EntropyEntry>,
    pub covering_verified: bool,
}

/// `d_n(i, j)` for each horizon `n`, from the class sequences of the points.
pub fn averaged_distance_matrices(classes: &[Vec<u8>], horizons: &[usize]) -> Vec<Vec<Vec<Ratio<u64>>>> {
    let p = classes.len();
    let mut out = vec![vec![vec![Ratio::from_integer(0); p]; p]; horizons.len()];
    for i in 0..p {
        for j in i + 1..p {
            let mut count = 0u64;
            let mut s = 0;
            for (h, &n) in horizons.iter().enumerate() {
                while s < n {
                    count += u64::from(classes[i][s] != classes[j][s]);
                    s += 1;
                }
                let d = Ratio::new(count, n as u64);
                out[h][i][j] = d;
                out[h][j][i] = d;
            }
        }
    }
    out
}

pub fn entropy_profile(
    dynamics: Dynamics,
    metric: &CutSemimetric,
    points: usize,
    horizons: &[usize],
    epsilon: f64,
    seed: u64,
    len: usize,
) -> Result<EntropyReport> {
    if points == 0 {
        return Err(Error::BadParameter("need at least one point".into()));
    }
    let mut hs = horizons.to_vec();
    if hs.is_empty() || hs.contains(&0) {
        return Err(Error::BadParameter("horizons must be positive".into()));
    }
    hs.sort_unstable();
    hs.dedup();
    let steps = *hs.last().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let classes = (0..points)
        .map(|_| class_sequence(dynamics, metric, &sample_bernoulli_with(&mut rng, 0.5, len)?, steps))
        .collect::<Result<Vec<_>>>()?;
    let mats = averaged_distance_matrices(&classes, &hs);
    let mut entries = Vec::with_capacity(hs.len());
    let mut verified = true;
    for (n, d) in hs.iter().zip(&mats) {
        let c = epsilon_entropy(d, epsilon)?;
        verified &= c.verified;
        entries.push(EntropyEntry { n: *n, k: c.centers.len(), centers: c.centers });
    }
    Ok(EntropyReport { dynamics, epsilon, points, horizons: entries, covering_verified: verified })
}
