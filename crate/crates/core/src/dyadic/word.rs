use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// What lies beyond the explicit bits of a [`DyadicWord`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tail {
    Unknown,
    AllZero,
    AllOne,
    /// Repeats forever, starting right after the explicit bits.
    Periodic(Vec<u8>),
}

impl Tail {
    /// Builds a periodic tail, collapsing constant patterns.
    pub fn periodic(pattern: Vec<u8>) -> Result<Tail> {
        if pattern.is_empty() {
            return Err(Error::Parse("empty periodic tail".into()));
        }
        if let Some(b) = pattern.iter().find(|&&b| b > 1) {
            return Err(Error::Parse(format!("bit value {b} in tail")));
        }
        if pattern.iter().all(|&b| b == 0) {
            Ok(Tail::AllZero)
        } else if pattern.iter().all(|&b| b == 1) {
            Ok(Tail::AllOne)
        } else {
            Ok(Tail::Periodic(pattern))
        }
    }

    /// Bit `j` of the tail itself, `None` when unknown.
    pub fn bit(&self, j: usize) -> Option<u8> {
        match self {
            Tail::Unknown => None,
            Tail::AllZero => Some(0),
            Tail::AllOne => Some(1),
            Tail::Periodic(p) => Some(p[j % p.len()]),
        }
    }

    /// Period of the tail (1 for constants, 0 when unknown).
    pub fn period(&self) -> usize {
        match self {
            Tail::Unknown => 0,
            Tail::AllZero | Tail::AllOne => 1,
            Tail::Periodic(p) => p.len(),
        }
    }

    /// The tail left after `n` of its bits have been moved into the prefix.
    fn advanced(&self, n: usize) -> Tail {
        match self {
            Tail::Periodic(p) => {
                let s = n % p.len();
                let mut q = p[s..].to_vec();
                q.extend_from_slice(&p[..s]);
                Tail::Periodic(q)
            }
            t => t.clone(),
        }
    }
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tail::Unknown => f.write_str("?"),
            Tail::AllZero => f.write_str("0*"),
            Tail::AllOne => f.write_str("1*"),
            Tail::Periodic(p) => {
                f.write_str("(")?;
                for b in p {
                    write!(f, "{b}")?;
                }
                f.write_str(")*")
            }
        }
    }
}

/// A dyadic integer known through `len` explicit bits (least significant
/// first) followed by a tail convention.
///
/// Bits are packed into 64-bit limbs; bits past `len` in the last limb are
/// kept zero so that derived equality is structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicWord {
    limbs: Vec<u64>,
    len: usize,
    tail: Tail,
}

impl DyadicWord {
    pub fn new(bits: &[u8], tail: Tail) -> Result<DyadicWord> {
        let mut w = DyadicWord::zeros(bits.len(), tail);
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => w.set(i, 1),
                _ => return Err(Error::Parse(format!("bit value {b} at index {i}"))),
            }
        }
        Ok(w)
    }

    pub(crate) fn zeros(len: usize, tail: Tail) -> DyadicWord {
        DyadicWord { limbs: vec![0; len.div_ceil(64)], len, tail }
    }

    /// Number of explicit bits.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn with_tail(mut self, tail: Tail) -> DyadicWord {
        self.tail = tail;
        self
    }

    pub(crate) fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub(crate) fn limbs_mut(&mut self) -> &mut [u64] {
        &mut self.limbs
    }

    /// Explicit bit `i`; panics when `i >= len`.
    #[inline]
    pub fn explicit_bit(&self, i: usize) -> u8 {
        assert!(i < self.len, "bit {i} out of explicit range {}", self.len);
        ((self.limbs[i / 64] >> (i % 64)) & 1) as u8
    }

    /// Bit `i`, reading through the tail; `None` if it is not known.
    #[inline]
    pub fn bit(&self, i: usize) -> Option<u8> {
        if i < self.len {
            Some(((self.limbs[i / 64] >> (i % 64)) & 1) as u8)
        } else {
            self.tail.bit(i - self.len)
        }
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, b: u8) {
        let (q, r) = (i / 64, i % 64);
        if b == 1 {
            self.limbs[q] |= 1 << r;
        } else {
            self.limbs[q] &= !(1 << r);
        }
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.explicit_bit(i)).collect()
    }

    /// Moves tail bits into the explicit prefix until it holds `n` bits.
    pub fn materialize(&mut self, n: usize) -> Result<()> {
        if n <= self.len {
            return Ok(());
        }
        if self.tail == Tail::Unknown {
            return Err(Error::RefineNeeded(format!(
                "bit {} requested but only {} bits are known",
                n - 1,
                self.len
            )));
        }
        let old = self.len;
        self.limbs.resize(n.div_ceil(64), 0);
        self.len = n;
        for i in old..n {
            let b = self.tail.bit(i - old).unwrap();
            self.set(i, b);
        }
        self.tail = self.tail.advanced(n - old);
        Ok(())
    }

    /// Number of ones among the explicit bits.
    pub fn count_ones(&self) -> u64 {
        self.limbs.iter().map(|l| l.count_ones() as u64).sum()
    }

    pub fn from_uint(n: &BigUint, len: usize) -> Result<DyadicWord> {
        if n.bits() as usize > len {
            return Err(Error::LengthTooSmall(n.to_string(), len));
        }
        let mut w = DyadicWord::zeros(len, Tail::AllZero);
        for (i, d) in n.iter_u64_digits().enumerate() {
            w.limbs[i] = d;
        }
        Ok(w)
    }

    pub fn from_u64(n: u64, len: usize) -> Result<DyadicWord> {
        DyadicWord::from_uint(&BigUint::from(n), len)
    }

    /// Value of the explicit prefix, ignoring the tail.
    pub fn prefix_value(&self) -> BigUint {
        let mut digits = Vec::with_capacity(self.limbs.len() * 2);
        for l in &self.limbs {
            digits.push(*l as u32);
            digits.push((*l >> 32) as u32);
        }
        BigUint::new(digits)
    }

    pub fn to_uint(&self) -> Result<BigUint> {
        if self.tail != Tail::AllZero {
            return Err(Error::NotAnInteger(self.to_string()));
        }
        Ok(self.prefix_value())
    }

    pub fn to_u64(&self) -> Result<u64> {
        let v = self.to_uint()?;
        if v.is_zero() {
            return Ok(0);
        }
        u64::try_from(&v).map_err(|_| Error::TooLarge(format!("{v} exceeds u64")))
    }

    pub(crate) fn set_prefix_value(&mut self, v: &BigUint) {
        self.limbs.iter_mut().for_each(|l| *l = 0);
        for (i, d) in v.iter_u64_digits().enumerate() {
            if i < self.limbs.len() {
                self.limbs[i] = d;
            }
        }
        self.trim();
    }

    /// Sets bits `lo..hi` to `b`.
    pub(crate) fn fill(&mut self, lo: usize, hi: usize, b: u8) {
        let mut i = lo;
        while i < hi {
            let (q, r) = (i / 64, i % 64);
            let n = (64 - r).min(hi - i);
            let mask = if n == 64 { u64::MAX } else { ((1u64 << n) - 1) << r };
            if b == 1 {
                self.limbs[q] |= mask;
            } else {
                self.limbs[q] &= !mask;
            }
            i += n;
        }
    }

    /// Trailing zeros (`ones = false`) or ones of the explicit bits, capped at `cap`.
    pub(crate) fn trailing_run(&self, ones: bool, cap: usize) -> usize {
        let mut n = 0;
        for &l in &self.limbs {
            let v = if ones { !l } else { l };
            let tz = v.trailing_zeros() as usize;
            n += tz;
            if tz < 64 || n >= cap {
                break;
            }
        }
        n.min(cap)
    }

    pub(crate) fn push(&mut self, b: u8) {
        if self.len.is_multiple_of(64) {
            self.limbs.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, b);
    }

    fn trim(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            if let Some(last) = self.limbs.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

impl fmt::Display for DyadicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(self.len + 8);
        for i in 0..self.len {
            s.push(if self.explicit_bit(i) == 1 { '1' } else { '0' });
        }
        write!(f, "{s}:{}", self.tail)
    }
}

fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::Parse(format!("unexpected character {c:?}"))),
        })
        .collect()
}

impl FromStr for Tail {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tail> {
        match s {
            "?" => Ok(Tail::Unknown),
            "0*" => Ok(Tail::AllZero),
            "1*" => Ok(Tail::AllOne),
            _ => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(")*"))
                    .ok_or_else(|| Error::Parse(format!("bad tail {s:?}")))?;
                Tail::periodic(parse_bits(inner)?)
            }
        }
    }
}

/// Parses `bits:tail`; a missing `:tail` means an unknown tail.
impl FromStr for DyadicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<DyadicWord> {
        let s = s.trim();
        let (bits, tail) = match s.split_once(':') {
            Some((b, t)) => (b, t.parse()?),
            None => (s, Tail::Unknown),
        };
        DyadicWord::new(&parse_bits(bits)?, tail)
    }
}
