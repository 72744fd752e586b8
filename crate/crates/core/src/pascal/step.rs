use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::dyadic::{DyadicWord, Tail};
use crate::error::{Error, Result};

/// The additive time change `n(x)` with `P x = x + n(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JumpValue {
    pub m: u64,
    pub k: u64,
    #[serde(serialize_with = "crate::pascal::ser_biguint")]
    pub value: BigUint,
}

impl JumpValue {
    pub fn from_block(m: u64, k: u64) -> JumpValue {
        let value = (BigUint::one() << m as usize) + (BigUint::one() << k as usize) - 1u32;
        JumpValue { m, k, value }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Pattern {
    /// "10": where the successor rewrites.
    OneZero,
    /// "01": where the predecessor rewrites.
    ZeroOne,
}

/// First position `i` with bits `i, i+1` equal to the pattern, explicit bits only.
fn scan(x: &DyadicWord, pat: Pattern) -> Option<usize> {
    let n = x.len();
    if n < 2 {
        return None;
    }
    let limbs = x.limbs();
    for (q, &v) in limbs.iter().enumerate() {
        let next = limbs.get(q + 1).map_or(0, |l| l & 1);
        let up = (v >> 1) | (next << 63);
        let cand = match pat {
            Pattern::OneZero => v & !up,
            Pattern::ZeroOne => !v & up,
        };
        if cand != 0 {
            let i = q * 64 + cand.trailing_zeros() as usize;
            return (i + 1 < n).then_some(i);
        }
    }
    None
}

/// Like [`scan`], but extends the explicit bits from a determined tail.
fn locate(x: &mut DyadicWord, pat: Pattern) -> Result<usize> {
    if let Some(i) = scan(x, pat) {
        return Ok(i);
    }
    if *x.tail() == Tail::Unknown {
        return Err(Error::RefineNeeded(format!(
            "{x}: no {} occurrence among the known bits",
            if pat == Pattern::OneZero { "\"10\"" } else { "\"01\"" }
        )));
    }
    let shown = x.to_string();
    let n = x.len() + x.tail().period() + 1;
    x.materialize(n)?;
    scan(x, pat).ok_or_else(|| {
        Error::Boundary(match pat {
            Pattern::OneZero => format!("{shown} is of the form 0^m 1^inf and has no successor"),
            Pattern::ZeroOne => format!("{shown} is of the form 1^k 0^inf and has no predecessor"),
        })
    })
}

/// `(m, k)` of the leading block `0^m 1^k 10`, and the position of its "10".
fn leading_block(x: &mut DyadicWord) -> Result<(u64, u64, usize)> {
    let i = locate(x, Pattern::OneZero)?;
    let m = x.trailing_run(false, i);
    Ok((m as u64, (i - m) as u64, i))
}

/// Rewrites `0^m 1^k 10` into `1^k 0^(m+1) 1` in place.
pub fn successor_mut(x: &mut DyadicWord) -> Result<()> {
    let (m, k, i) = leading_block(x)?;
    let (m, k) = (m as usize, k as usize);
    x.fill(0, k, 1);
    x.fill(k, k + m + 1, 0);
    x.fill(i + 1, i + 2, 1);
    Ok(())
}

/// The Pascal automorphism: the immediate adic successor.
pub fn successor(x: &DyadicWord) -> Result<DyadicWord> {
    let mut y = x.clone();
    successor_mut(&mut y)?;
    Ok(y)
}

/// Rewrites `1^k 0^m 01` into `0^m 1^k 10` in place.
pub fn predecessor_mut(x: &mut DyadicWord) -> Result<()> {
    let i = locate(x, Pattern::ZeroOne)?;
    let k = x.trailing_run(true, i);
    let m = i - k;
    x.fill(0, m, 0);
    x.fill(m, i + 1, 1);
    x.fill(i + 1, i + 2, 0);
    Ok(())
}

pub fn predecessor(x: &DyadicWord) -> Result<DyadicWord> {
    let mut y = x.clone();
    predecessor_mut(&mut y)?;
    Ok(y)
}

/// `n(x) = 2^m + 2^k - 1` for the leading block of `x`.
pub fn jump(x: &DyadicWord) -> Result<JumpValue> {
    let (m, k) = first_block(x)?;
    Ok(JumpValue::from_block(m, k))
}

/// `(m, k)` of the leading block.
pub fn first_block(x: &DyadicWord) -> Result<(u64, u64)> {
    if let Some(i) = scan(x, Pattern::OneZero) {
        let m = x.trailing_run(false, i);
        return Ok((m as u64, (i - m) as u64));
    }
    let mut y = x.clone();
    leading_block(&mut y).map(|(m, k, _)| (m, k))
}

/// `n_k(x)` with `P^k x = x + n_k(x)`, by `n_(j+1) = n(x + n_j) + n_j`.
pub fn jump_k(x: &DyadicWord, k: u64) -> Result<BigUint> {
    let mut n = BigUint::zero();
    for _ in 0..k {
        let y = x.add_int(&BigInt::from(n.clone()))?;
        n += jump(&y)?.value;
    }
    Ok(n)
}
