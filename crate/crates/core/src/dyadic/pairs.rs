use serde::Serialize;

use super::rational::DyadicRational;
use super::word::{DyadicWord, Tail};
use crate::error::{Error, Result};

/// Run lengths `(m_i, k_i)` parsing a point as `0^m1 1^k1 10 0^m2 1^k2 10 ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCoords {
    pub pairs: Vec<(u64, u64)>,
    /// Number of bits covered by the complete blocks.
    pub consumed: usize,
}

/// Scans one block starting at `pos`. `Ok(None)` means the bits ran out
/// (or, past the explicit prefix, a constant tail never closes the block).
fn next_block(x: &DyadicWord, pos: usize, through_tail: bool) -> Result<Option<(u64, u64, usize)>> {
    let limit = if through_tail { usize::MAX } else { x.len() };
    let constant_tail = matches!(x.tail(), Tail::AllZero | Tail::AllOne);
    let read = |i: usize| -> Result<Option<u8>> {
        if i >= limit || (i >= x.len() && constant_tail && i > x.len() + 1) {
            return Ok(None);
        }
        match x.bit(i) {
            Some(b) => Ok(Some(b)),
            None => Err(Error::RefineNeeded(format!("block at {pos} of {x} needs bit {i}"))),
        }
    };
    let mut i = pos;
    let mut m = 0u64;
    loop {
        match read(i)? {
            Some(0) => {
                m += 1;
                i += 1;
            }
            Some(_) => break,
            None => return Ok(None),
        }
    }
    let mut c = 0u64;
    loop {
        match read(i)? {
            Some(1) => {
                c += 1;
                i += 1;
            }
            Some(_) => return Ok(Some((m, c - 1, i + 1))),
            None => return Ok(None),
        }
    }
}

/// All blocks completed inside the explicit bits.
pub fn pair_coords(x: &DyadicWord) -> Result<PairCoords> {
    let mut pairs = Vec::new();
    let mut pos = 0;
    while let Some((m, k, next)) = next_block(x, pos, false)? {
        pairs.push((m, k));
        pos = next;
    }
    if pairs.is_empty() {
        return Err(Error::RefineNeeded(format!("{x} contains no complete 0^m1^k10 block")));
    }
    Ok(PairCoords { pairs, consumed: pos })
}

/// The first `count` blocks, reading into the tail when it is determined.
pub fn pair_coords_n(x: &DyadicWord, count: usize) -> Result<PairCoords> {
    let mut pairs = Vec::with_capacity(count);
    let mut pos = 0;
    while pairs.len() < count {
        match next_block(x, pos, true)? {
            Some((m, k, next)) => {
                pairs.push((m, k));
                pos = next;
            }
            None => {
                return Err(Error::Boundary(format!(
                    "{x} has only {} blocks",
                    pairs.len()
                )))
            }
        }
    }
    Ok(PairCoords { pairs, consumed: pos })
}

/// Blocks `(m, k)` in order, reading into the tail when it is determined.
/// Ends (yields nothing more) when a constant tail never closes a block.
pub fn blocks(x: &DyadicWord) -> impl Iterator<Item = Result<(u64, u64)>> + '_ {
    let mut pos = 0;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        match next_block(x, pos, true) {
            Ok(Some((m, k, next))) => {
                pos = next;
                Some(Ok((m, k)))
            }
            Ok(None) => {
                done = true;
                None
            }
            Err(e) => {
                done = true;
                Some(Err(e))
            }
        }
    })
}

/// Concatenates `0^m 1^k 10` over the pairs.
pub fn from_pair_coords(pairs: &[(u64, u64)]) -> Vec<u8> {
    let mut bits = Vec::new();
    for &(m, k) in pairs {
        bits.extend(std::iter::repeat_n(0, m as usize));
        bits.extend(std::iter::repeat_n(1, k as usize + 1));
        bits.push(0);
    }
    bits
}

/// Probability of the block `0^m 1^k 10` under the uniform Bernoulli measure.
pub fn pair_distribution(m: u64, k: u64) -> DyadicRational {
    DyadicRational::pow2_neg(m + k + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DyadicWord {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let p = pair_coords(&w("10101010:(10)*")).unwrap();
        assert_eq!(p.pairs, vec![(0, 0); 4]);
        assert_eq!(pair_coords_n(&w(":(10)*"), 7).unwrap().pairs, vec![(0, 0); 7]);
        assert_eq!(pair_coords(&w("00011110:0*")).unwrap().pairs, vec![(3, 3)]);
        assert_eq!(pair_coords(&w("110:?")).unwrap().pairs[0], (0, 1));
        assert_eq!(pair_coords(&w("1110:?")).unwrap().pairs[0], (0, 2));
        assert!(matches!(pair_coords(&w("0011:?")), Err(Error::RefineNeeded(_))));
    }

    #[test]
    fn reading_tails() {
        assert_eq!(pair_coords_n(&w("0011:0*"), 1).unwrap().pairs, vec![(2, 1)]);
        assert!(matches!(pair_coords_n(&w("0011:0*"), 2), Err(Error::Boundary(_))));
        assert!(matches!(pair_coords_n(&w("0:1*"), 1), Err(Error::Boundary(_))));
        assert!(matches!(pair_coords_n(&w("0011:?"), 1), Err(Error::RefineNeeded(_))));
    }

    #[test]
    fn exhaustive_reconstruction() {
        for len in 0..=16usize {
            for v in 0u32..(1 << len) {
                let bits: Vec<u8> = (0..len).map(|i| ((v >> i) & 1) as u8).collect();
                let x = DyadicWord::new(&bits, Tail::Unknown).unwrap();
                if let Ok(p) = pair_coords(&x) {
                    assert_eq!(from_pair_coords(&p.pairs), bits[..p.consumed]);
                }
            }
        }
    }

    #[test]
    fn distribution_examples() {
        assert_eq!(pair_distribution(0, 0), DyadicRational::pow2_neg(2));
        assert_eq!(pair_distribution(1, 1), DyadicRational::pow2_neg(4));
        let m = 30;
        let s: DyadicRational = (0..=m)
            .flat_map(|a| (0..=m).map(move |b| pair_distribution(a, b)))
            .sum();
        // (1 - 2^-(M+1))^2 exactly
        let q = DyadicRational::one().checked_sub(&DyadicRational::pow2_neg(m + 1)).unwrap();
        assert_eq!(s, &q * &q);
    }
}
