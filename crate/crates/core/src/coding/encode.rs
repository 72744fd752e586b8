use serde::Serialize;

use crate::dyadic::{first_difference, DyadicWord};
use crate::error::{Error, Result};
use crate::pascal::{predecessor_mut, successor_mut};

/// Position of the exotic sequence inside the coded orbit of `(10)^inf`:
/// `exotic[j] == encode((10)^inf)[j + EXOTIC_OFFSET]`.
pub const EXOTIC_OFFSET: usize = 1;

/// Largest sequence produced without an explicit bound.
pub const DEFAULT_MAX_SEQUENCE: usize = 1 << 28;

/// Symbols `y_lo ..= y_hi` of the coded orbit, `y_j` the first bit of `P^j x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicWindow {
    pub lo: i64,
    pub hi: i64,
    #[serde(serialize_with = "ser_bits")]
    pub symbols: Vec<u8>,
}

impl SymbolicWindow {
    pub fn get(&self, j: i64) -> Option<u8> {
        if j < self.lo || j > self.hi {
            return None;
        }
        Some(self.symbols[(j - self.lo) as usize])
    }
}

pub fn bits_to_string(bits: &[u8]) -> String {
    bits.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
}

fn ser_bits<S: serde::Serializer>(bits: &[u8], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&bits_to_string(bits))
}

fn first_symbol(y: &DyadicWord) -> Result<u8> {
    y.bit(0).ok_or_else(|| Error::RefineNeeded(format!("{y} has no known first bit")))
}

pub fn encode(x: &DyadicWord, lo: i64, hi: i64) -> Result<SymbolicWindow> {
    if lo > hi {
        return Err(Error::BadParameter(format!("empty window [{lo}, {hi}]")));
    }
    let mut symbols = Vec::with_capacity((hi - lo + 1) as usize);
    if lo < 0 {
        // back[j - 1] is the symbol at index -j
        let mut y = x.clone();
        let mut back = Vec::with_capacity((-lo) as usize);
        for _ in 0..-lo {
            predecessor_mut(&mut y)?;
            back.push(first_symbol(&y)?);
        }
        symbols.extend((lo..=hi.min(-1)).map(|i| back[(-i - 1) as usize]));
    }
    if hi >= 0 {
        let mut y = x.clone();
        let start = lo.max(0);
        for j in 0..=hi {
            if j >= start {
                symbols.push(first_symbol(&y)?);
            }
            if j < hi {
                successor_mut(&mut y)?;
            }
        }
    }
    Ok(SymbolicWindow { lo, hi, symbols })
}

/// Gosper's hack: next larger integer with the same popcount.
#[inline]
pub(crate) fn next_same_weight(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

fn exotic_walk(len: usize, mut f: impl FnMut(u64)) {
    let mut emitted = 0;
    let mut n = 0u32;
    while emitted < len {
        // (2n+1)-bit numbers with n ones, increasing
        if n == 0 {
            f(0);
            emitted += 1;
        } else {
            let top = 1u64 << (2 * n + 1);
            let mut v = (1u64 << n) - 1;
            while v < top && emitted < len {
                f(v);
                emitted += 1;
                v = next_same_weight(v);
            }
        }
        n += 1;
    }
}

fn check_len(len: usize) -> Result<()> {
    if len > DEFAULT_MAX_SEQUENCE {
        return Err(Error::TooLarge(format!("{len} symbols exceeds {DEFAULT_MAX_SEQUENCE}")));
    }
    Ok(())
}

/// Parities of the sets `F_n` of `(2n+1)`-bit numbers with `n` ones.
pub fn exotic_sequence(len: usize) -> Result<Vec<u8>> {
    check_len(len)?;
    let mut out = Vec::with_capacity(len);
    exotic_walk(len, |v| out.push((v & 1) as u8));
    Ok(out)
}

/// The integers whose parities form the exotic sequence.
pub fn exotic_integers(len: usize) -> Result<Vec<u64>> {
    check_len(len)?;
    let mut out = Vec::with_capacity(len);
    exotic_walk(len, |v| out.push(v));
    Ok(out)
}

/// Outcome of comparing two coded orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GeneratorOutcome {
    /// Least step whose first symbols differ.
    FirstDifference(u64),
    /// The points are equal.
    NoDifference,
    /// No difference within the horizon.
    NotWithin(u64),
}

pub fn generator_check(x: &DyadicWord, x2: &DyadicWord, horizon: u64) -> Result<GeneratorOutcome> {
    if first_difference(x, x2)?.is_none() {
        return Ok(GeneratorOutcome::NoDifference);
    }
    let (mut a, mut b) = (x.clone(), x2.clone());
    for j in 0..horizon {
        if first_symbol(&a)? != first_symbol(&b)? {
            return Ok(GeneratorOutcome::FirstDifference(j));
        }
        successor_mut(&mut a)?;
        successor_mut(&mut b)?;
    }
    Ok(GeneratorOutcome::NotWithin(horizon))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pascal::supporting_word;

    fn w(s: &str) -> DyadicWord {
        s.parse().unwrap()
    }

    #[test]
    fn exotic_prefix() {
        assert_eq!(bits_to_string(&exotic_sequence(14).unwrap()), "01001101001000");
        assert_eq!(
            exotic_integers(14).unwrap(),
            vec![0, 1, 2, 4, 3, 5, 6, 9, 10, 12, 17, 18, 20, 24]
        );
    }

    #[test]
    fn exotic_from_orbit() {
        let y = encode(&w(":(10)*"), 0, 3000).unwrap();
        let e = exotic_sequence(3000).unwrap();
        assert_eq!(y.symbols[0], 1);
        assert_eq!(&y.symbols[EXOTIC_OFFSET..], &e[..]);
    }

    #[test]
    fn block_of_the_table_row() {
        let y = encode(&w("00011110:0*"), 1, 35).unwrap();
        assert_eq!(y.symbols, supporting_word(4, 3).unwrap().symbols);
    }

    #[test]
    fn windows() {
        let x = w("0110100111010010:?");
        let all = encode(&x, -3, 5).unwrap();
        assert_eq!(all.symbols.len(), 9);
        assert_eq!(all.get(0), Some(0));
        assert_eq!(encode(&x, -3, -1).unwrap().symbols, all.symbols[..3]);
        assert_eq!(encode(&x, -3, -2).unwrap().symbols, all.symbols[..2]);
        assert_eq!(encode(&x, -2, -2).unwrap().symbols, all.symbols[1..2]);
        assert_eq!(encode(&x, 2, 5).unwrap().symbols, all.symbols[5..]);
        let short = encode(&x, 0, 3).unwrap();
        assert_eq!(short.symbols, all.symbols[3..7]);
    }

    #[test]
    fn generator_trivia() {
        let x = w("0110100111010010:?");
        assert_eq!(generator_check(&x, &x, 10).unwrap(), GeneratorOutcome::NoDifference);
        let x2 = w("1110100111010010:?");
        assert_eq!(generator_check(&x, &x2, 10).unwrap(), GeneratorOutcome::FirstDifference(0));
    }

    #[test]
    fn generator_bound_counterexample() {
        // first difference at bit 1, yet four equal symbols
        let x = w("000000100010:?");
        let x2 = w("010000100010:?");
        assert_eq!(generator_check(&x, &x2, 100).unwrap(), GeneratorOutcome::FirstDifference(4));
        // 00 1^s against 01 1^s: the delay grows with s
        for s in [8usize, 16, 40] {
            let x = w(&format!("00{}:(10)*", "1".repeat(s)));
            let x2 = w(&format!("01{}:(10)*", "1".repeat(s)));
            let j = generator_check(&x, &x2, 1000).unwrap();
            assert_eq!(j, GeneratorOutcome::FirstDifference(s as u64 + 1));
        }
    }
}
