use serde::Serialize;

use crate::dyadic::{blocks, DyadicWord};
use crate::error::{Error, Result};
use crate::pascal::write_supporting_word;

/// One supporting-word block of a coded orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BarEntry {
    /// Number of bits of `x` before the block-closing zero.
    pub r: u64,
    pub m_bar: u64,
    pub k_bar: u64,
}

/// Parameters of the blocks `O(m_bar_i, k_bar_i)` making up the coded orbit.
///
/// Block `i` closes at a zero of `x`: the zero of the first "10" for `i = 1`,
/// then every later zero. `k_bar_i` is the number of ones before that zero,
/// minus one, and `m_bar_i = r_i - k_bar_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BarParams {
    pub entries: Vec<BarEntry>,
}

/// Computed from the pair coordinates: the first pair `(m, k)` opens with
/// `(m+k+1, m+1, k)`; each later pair adds `m` steps `(+1, +0)` then one
/// step `(+k+2, +k+1)`.
pub fn bar_params(x: &DyadicWord, count: usize) -> Result<BarParams> {
    let mut entries: Vec<BarEntry> = Vec::with_capacity(count);
    let mut it = blocks(x);
    while entries.len() < count {
        let (m, k) = match it.next() {
            Some(b) => b?,
            None => {
                return Err(Error::Boundary(format!(
                    "{x} closes only {} blocks",
                    entries.len()
                )))
            }
        };
        match entries.last().copied() {
            None => entries.push(BarEntry { r: m + k + 1, m_bar: m + 1, k_bar: k }),
            Some(mut e) => {
                for _ in 0..m {
                    if entries.len() == count {
                        break;
                    }
                    e = BarEntry { r: e.r + 1, m_bar: e.m_bar + 1, k_bar: e.k_bar };
                    entries.push(e);
                }
                if entries.len() < count {
                    entries.push(BarEntry { r: e.r + k + 2, m_bar: e.m_bar + 1, k_bar: e.k_bar + k + 1 });
                }
            }
        }
    }
    Ok(BarParams { entries })
}

/// `O(m_bar_1, k_bar_1) O(m_bar_2, k_bar_2) ...`; equals the coded orbit
/// from index 1 on.
pub fn concatenation_image(x: &DyadicWord, count: usize, max_len: usize) -> Result<Vec<u8>> {
    let params = bar_params(x, count)?;
    let mut out = Vec::new();
    for e in &params.entries {
        let len = crate::pascal::supporting_len(e.m_bar, e.k_bar, (max_len - out.len()) as u64)?;
        out.reserve(len as usize);
        write_supporting_word(e.m_bar, e.k_bar, &mut out);
    }
    Ok(out)
}
