use super::cut::CutSemimetric;
use super::periodic::{periodic_scan_named, PeriodicScanReport};
use crate::coding::encode;
use crate::dyadic::DyadicWord;
use crate::error::Result;

/// `f(T^k)` for `k < n`: the classifier applied to the windows
/// `y_k .. y_(k+w-1)` of the coded orbit.
pub fn derived_sequence(x: &DyadicWord, cut: &CutSemimetric, n: usize) -> Result<Vec<u8>> {
    let w = cut.window();
    let y = encode(x, 0, (n + w - 2) as i64)?.symbols;
    Ok(y.windows(w).take(n).map(|win| cut.classify(win)).collect())
}

/// Periodic scan (factor periods) of the derived sequence.
pub fn nbh_probe(x: &DyadicWord, cut: &CutSemimetric, n: usize, max_period: usize) -> Result<PeriodicScanReport> {
    let seq = derived_sequence(x, cut, n)?;
    periodic_scan_named(&seq, max_period, true, &format!("nbh:{x}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::periodic_scan;

    #[test]
    fn first_bit_is_the_coded_orbit() {
        let x: DyadicWord = ":(10)*".parse().unwrap();
        let f = CutSemimetric::first_bit();
        let seq = derived_sequence(&x, &f, 2000).unwrap();
        assert_eq!(seq, encode(&x, 0, 1999).unwrap().symbols);
        let a = nbh_probe(&x, &f, 2000, 16).unwrap();
        let b = periodic_scan(&seq, 16, true).unwrap();
        assert_eq!(a.scanned, b.scanned);
    }

    #[test]
    fn windowed_classifier() {
        let x: DyadicWord = "0110100111010010111:?".parse().unwrap();
        let c = CutSemimetric::new(2, vec![0, 1, 1, 0]).unwrap();
        let seq = derived_sequence(&x, &c, 8).unwrap();
        let y = encode(&x, 0, 8).unwrap().symbols;
        for k in 0..8 {
            assert_eq!(seq[k], y[k] ^ y[k + 1]);
        }
    }
}
