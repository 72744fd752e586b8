use num_rational::Ratio;
use serde::Serialize;

use super::ser_ratio;
use crate::error::{Error, Result};

/// Best periodic approximation found for one period length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodEntry {
    pub length: usize,
    /// The period word, phase already applied: `p_j = word[j mod length]`.
    pub word: String,
    #[serde(serialize_with = "ser_ratio")]
    pub distance: Ratio<u64>,
}

/// Truncated Besicovitch-Hamming distances from a sequence to periodic ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicScanReport {
    pub sequence_id: String,
    /// Number of compared symbols.
    pub n: usize,
    pub max_period: usize,
    pub subword_periods: bool,
    pub scanned: Vec<PeriodEntry>,
    pub minimum: PeriodEntry,
}

pub(crate) fn symbol_char(s: u8) -> char {
    char::from_digit(s as u32, 36).expect("alphabet of at most 36 symbols")
}

fn render(word: &[u8]) -> String {
    word.iter().map(|&s| symbol_char(s)).collect()
}

fn alphabet(seq: &[u8]) -> Result<usize> {
    let a = seq.iter().copied().max().map_or(1, |m| m as usize + 1);
    if a > 36 {
        return Err(Error::BadParameter(format!("alphabet of {a} symbols, at most 36 supported")));
    }
    Ok(a.max(2))
}

/// `counts[r * alpha + s]`: occurrences of symbol `s` at positions `j = r mod len`.
fn residue_counts(seq: &[u8], len: usize, alpha: usize) -> Vec<u32> {
    let mut c = vec![0u32; len * alpha];
    let mut r = 0;
    for &s in seq {
        c[r * alpha + s as usize] += 1;
        r += 1;
        if r == len {
            r = 0;
        }
    }
    c
}

/// Distance to the periodic extension of `period`, minimized over phases.
pub fn bh_to_periodic(seq: &[u8], period: &[u8]) -> Result<Ratio<u64>> {
    if period.is_empty() || seq.len() < period.len() {
        return Err(Error::LengthMismatch(seq.len(), period.len()));
    }
    let alpha = alphabet(seq)?.max(alphabet(period)?);
    let l = period.len();
    let c = residue_counts(seq, l, alpha);
    let best = (0..l)
        .map(|phi| (0..l).map(|r| c[r * alpha + period[(r + phi) % l] as usize] as u64).sum::<u64>())
        .max()
        .unwrap();
    Ok(Ratio::new(seq.len() as u64 - best, seq.len() as u64))
}

/// For every period length up to `max_period`, the periodic sequence
/// closest to `seq`. With `subword_periods` the candidates are the factors
/// of `seq` in every phase; otherwise all words (a per-residue majority
/// vote is then exact).
pub fn periodic_scan(seq: &[u8], max_period: usize, subword_periods: bool) -> Result<PeriodicScanReport> {
    periodic_scan_named(seq, max_period, subword_periods, "sequence")
}

pub fn periodic_scan_named(
    seq: &[u8],
    max_period: usize,
    subword_periods: bool,
    sequence_id: &str,
) -> Result<PeriodicScanReport> {
    if max_period == 0 {
        return Err(Error::BadParameter("max_period must be positive".into()));
    }
    if seq.len() < 4 * max_period {
        return Err(Error::TooLarge(format!(
            "max_period {max_period} needs at least {} symbols, got {}",
            4 * max_period,
            seq.len()
        )));
    }
    let alpha = alphabet(seq)?;
    let n = seq.len();
    let mut scanned = Vec::with_capacity(max_period);
    for l in 1..=max_period {
        let c = residue_counts(seq, l, alpha);
        let (agree, word) = if subword_periods {
            best_factor(seq, l, alpha, &c)
        } else {
            majority(l, alpha, &c)
        };
        scanned.push(PeriodEntry {
            length: l,
            word: render(&word),
            distance: Ratio::new((n as u64) - agree, n as u64),
        });
    }
    let minimum = scanned
        .iter()
        .min_by(|a, b| a.distance.cmp(&b.distance))
        .cloned()
        .unwrap();
    Ok(PeriodicScanReport {
        sequence_id: sequence_id.to_string(),
        n,
        max_period,
        subword_periods,
        scanned,
        minimum,
    })
}

fn majority(l: usize, alpha: usize, c: &[u32]) -> (u64, Vec<u8>) {
    let mut agree = 0u64;
    let mut word = Vec::with_capacity(l);
    for r in 0..l {
        let row = &c[r * alpha..(r + 1) * alpha];
        let (s, &k) = row.iter().enumerate().rev().max_by_key(|&(_, k)| *k).unwrap();
        agree += k as u64;
        word.push(s as u8);
    }
    (agree, word)
}

/// Periodizing the factor at `t` and shifting by `s` gives
/// `p_j = seq[t + (j + s - t) mod l]`. For fixed `s`, moving `t` to `t+1`
/// only changes residue `(t - s) mod l`, from `seq[t]` to `seq[t+l]`.
fn best_factor(seq: &[u8], l: usize, alpha: usize, c: &[u32]) -> (u64, Vec<u8>) {
    let n = seq.len();
    let mut best = (-1i64, 0usize, 0usize);
    for s in 0..l {
        let mut a: i64 = (0..l).map(|r| c[r * alpha + seq[(r + s) % l] as usize] as i64).sum();
        if a > best.0 {
            best = (a, 0, s);
        }
        let mut rho = (l - s) % l;
        for t in 0..n - l {
            let (old, new) = (seq[t], seq[t + l]);
            if old != new {
                let row = rho * alpha;
                a += c[row + new as usize] as i64 - c[row + old as usize] as i64;
                if a > best.0 {
                    best = (a, t + 1, s);
                }
            }
            rho += 1;
            if rho == l {
                rho = 0;
            }
        }
    }
    let (a, t, s) = best;
    let word = (0..l).map(|r| seq[t + (r + s + l - t % l) % l]).collect();
    (a as u64, word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn periodic(word: &[u8], n: usize) -> Vec<u8> {
        (0..n).map(|j| word[j % word.len()]).collect()
    }

    /// Every factor, every phase, straight from the definition.
    fn brute_factor_min(seq: &[u8], l: usize) -> u64 {
        let mut best = u64::MAX;
        for t in 0..=seq.len() - l {
            let u = &seq[t..t + l];
            for phi in 0..l {
                let d = (0..seq.len()).filter(|&j| seq[j] != u[(j + phi) % l]).count() as u64;
                best = best.min(d);
            }
        }
        best
    }

    #[test]
    fn constant_and_periodic() {
        let r = periodic_scan(&[1; 40], 5, false).unwrap();
        assert_eq!(r.minimum.distance, Ratio::from_integer(0));
        assert_eq!(r.minimum.word, "1");
        let seq = periodic(&[0, 1, 1, 0, 1], 200);
        let r = periodic_scan(&seq, 12, true).unwrap();
        assert_eq!(r.minimum.distance, Ratio::from_integer(0));
        assert_eq!(bh_to_periodic(&seq, &[1, 0, 1, 0, 1]).unwrap(), Ratio::from_integer(0));
    }

    #[test]
    fn rotation_invariance() {
        let seq: Vec<u8> = (0..300u32).map(|j| ((j * j / 7) % 3 % 2) as u8).collect();
        let p = [1, 1, 0, 1, 0, 0, 0];
        let d = bh_to_periodic(&seq, &p).unwrap();
        for k in 1..p.len() {
            let mut q = p;
            q.rotate_left(k);
            assert_eq!(bh_to_periodic(&seq, &q).unwrap(), d);
        }
    }

    #[test]
    fn sweep_matches_brute_force() {
        let seq: Vec<u8> = (0..160u64).map(|j| ((j * 2654435761) >> 13 & 1) as u8).collect();
        let r = periodic_scan(&seq, 9, true).unwrap();
        for e in &r.scanned {
            let want = brute_factor_min(&seq, e.length);
            assert_eq!(e.distance, Ratio::new(want, 160), "length {}", e.length);
            let word: Vec<u8> = e.word.bytes().map(|c| c - b'0').collect();
            assert!(bh_to_periodic(&seq, &word).unwrap() <= e.distance);
        }
        // all-words optimum is never worse than the factor optimum
        let all = periodic_scan(&seq, 9, false).unwrap();
        for (a, f) in all.scanned.iter().zip(&r.scanned) {
            assert!(a.distance <= f.distance);
            let word: Vec<u8> = a.word.bytes().map(|c| c - b'0').collect();
            assert_eq!(bh_to_periodic(&seq, &word).unwrap(), a.distance);
        }
    }

    #[test]
    fn too_short() {
        assert!(matches!(periodic_scan(&[0; 10], 3, false), Err(Error::TooLarge(_))));
    }
}
