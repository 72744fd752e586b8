use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Adic order on words of equal length and weight.
///
/// Compares the last coordinates; if they differ the word ending in 1 is
/// larger, otherwise drop them and repeat.
pub fn adic_compare(u: &[u8], v: &[u8]) -> Result<Ordering> {
    if u.len() != v.len() {
        return Err(Error::Incomparable(format!("lengths {} and {}", u.len(), v.len())));
    }
    let (wu, wv) = (weight(u), weight(v));
    if wu != wv {
        return Err(Error::Incomparable(format!("weights {wu} and {wv}")));
    }
    for (a, b) in u.iter().rev().zip(v.iter().rev()) {
        if a != b {
            return Ok(a.cmp(b));
        }
    }
    Ok(Ordering::Equal)
}

pub(crate) fn weight(u: &[u8]) -> usize {
    u.iter().filter(|&&b| b == 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<u8> {
        s.bytes().map(|c| c - b'0').collect()
    }

    #[test]
    fn examples() {
        assert_eq!(adic_compare(&bits("10"), &bits("01")).unwrap(), Ordering::Less);
        assert_eq!(adic_compare(&bits("1100"), &bits("0011")).unwrap(), Ordering::Less);
        assert_eq!(adic_compare(&bits("0110"), &bits("0110")).unwrap(), Ordering::Equal);
        assert!(adic_compare(&bits("10"), &bits("11")).is_err());
        assert!(adic_compare(&bits("10"), &bits("100")).is_err());
    }

    #[test]
    fn agrees_with_numeric_order() {
        for n in 1..=12usize {
            let words: Vec<u32> = (0..1u32 << n).collect();
            for &a in &words {
                for &b in words.iter().filter(|b| b.count_ones() == a.count_ones()) {
                    let wa: Vec<u8> = (0..n).map(|i| ((a >> i) & 1) as u8).collect();
                    let wb: Vec<u8> = (0..n).map(|i| ((b >> i) & 1) as u8).collect();
                    assert_eq!(adic_compare(&wa, &wb).unwrap(), a.cmp(&b));
                }
            }
        }
    }
}
