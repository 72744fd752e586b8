use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supporting word produced without an explicit bound.
pub const DEFAULT_MAX_SYMBOLS: u64 = 1 << 26;

/// `O(m, k)`: parities of the `(m+k)`-bit numbers with `k` ones, increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportingWord {
    pub m: u64,
    pub k: u64,
    pub symbols: Vec<u8>,
}

impl SupportingWord {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn to_bit_string(&self) -> String {
        self.symbols.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
    }
}

/// Length `C(m+k, m)` of `O(m, k)`, if it does not exceed `bound`.
pub fn supporting_len(m: u64, k: u64, bound: u64) -> Result<u64> {
    let (lo, n) = (m.min(k) as u128, (m + k) as u128);
    let mut c: u128 = 1;
    for i in 0..lo {
        c = c * (n - i) / (i + 1);
        if c > bound as u128 {
            return Err(Error::TooLarge(format!("O({m},{k}) has more than {bound} symbols")));
        }
    }
    Ok(c as u64)
}

pub fn supporting_word(m: u64, k: u64) -> Result<SupportingWord> {
    supporting_word_bounded(m, k, DEFAULT_MAX_SYMBOLS)
}

pub fn supporting_word_bounded(m: u64, k: u64, bound: u64) -> Result<SupportingWord> {
    let n = supporting_len(m, k, bound)?;
    let mut symbols = Vec::with_capacity(n as usize);
    write_supporting_word(m, k, &mut symbols);
    Ok(SupportingWord { m, k, symbols })
}

/// Appends `O(m, k)` to `out`, using `O(m,k) = O(m-1,k) O(m,k-1)`:
/// the numbers whose top bit is 0 come first.
pub fn write_supporting_word(m: u64, k: u64, out: &mut Vec<u8>) {
    let mut stack = vec![(m, k)];
    while let Some((m, k)) = stack.pop() {
        match (m, k) {
            (0, _) => out.push(1),
            (_, 0) => out.push(0),
            _ => {
                stack.push((m, k - 1));
                stack.push((m - 1, k));
            }
        }
    }
}
