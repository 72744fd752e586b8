use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact value `num / 2^exp`, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    num: BigUint,
    exp: u64,
}

impl DyadicRational {
    pub fn new(num: BigUint, exp: u64) -> DyadicRational {
        let mut r = DyadicRational { num, exp };
        r.normalize();
        r
    }

    pub fn zero() -> DyadicRational {
        DyadicRational { num: BigUint::zero(), exp: 0 }
    }

    pub fn one() -> DyadicRational {
        DyadicRational { num: BigUint::one(), exp: 0 }
    }

    /// `2^-e`.
    pub fn pow2_neg(e: u64) -> DyadicRational {
        DyadicRational { num: BigUint::one(), exp: e }
    }

    pub fn from_int(n: BigUint) -> DyadicRational {
        DyadicRational { num: n, exp: 0 }
    }

    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn exp(&self) -> u64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.exp);
        if tz > 0 {
            self.num >>= tz as usize;
            self.exp -= tz;
        }
    }

    /// Numerators of `self` and `other` over the common denominator.
    fn aligned(&self, other: &DyadicRational) -> (BigUint, BigUint, u64) {
        let e = self.exp.max(other.exp);
        (
            &self.num << (e - self.exp) as usize,
            &other.num << (e - other.exp) as usize,
            e,
        )
    }

    pub fn checked_sub(&self, other: &DyadicRational) -> Result<DyadicRational> {
        let (a, b, e) = self.aligned(other);
        if a < b {
            return Err(Error::OutOfRange(format!("{self} - {other} is negative")));
        }
        Ok(DyadicRational::new(a - b, e))
    }

    /// Halves the value.
    pub fn half(&self) -> DyadicRational {
        DyadicRational::new(self.num.clone(), self.exp + 1)
    }

    pub fn to_f64(&self) -> f64 {
        if self.num.is_zero() {
            return 0.0;
        }
        // keep the 64 leading bits so huge exponents do not overflow
        let bits = self.num.bits();
        let shift = bits.saturating_sub(64);
        let top = (&self.num >> shift as usize).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powf(shift as f64 - self.exp as f64)
    }

    /// Decimal rendering rounded half-up to `places` digits.
    pub fn decimal(&self, places: u32) -> String {
        let scaled = &self.num * BigUint::from(10u32).pow(places);
        let den = BigUint::one() << self.exp as usize;
        let (q, r) = scaled.div_rem(&den);
        let q = if r << 1usize >= den { q + 1u32 } else { q };
        let s = q.to_string();
        let p = places as usize;
        if p == 0 {
            return s;
        }
        let s = format!("{s:0>width$}", width = p + 1);
        format!("{}.{}", &s[..s.len() - p], &s[s.len() - p..])
    }
}

impl Add for &DyadicRational {
    type Output = DyadicRational;

    fn add(self, other: &DyadicRational) -> DyadicRational {
        let (a, b, e) = self.aligned(other);
        DyadicRational::new(a + b, e)
    }
}

impl Add for DyadicRational {
    type Output = DyadicRational;

    fn add(self, other: DyadicRational) -> DyadicRational {
        &self + &other
    }
}

impl Mul for &DyadicRational {
    type Output = DyadicRational;

    fn mul(self, other: &DyadicRational) -> DyadicRational {
        DyadicRational::new(&self.num * &other.num, self.exp + other.exp)
    }
}

impl std::iter::Sum for DyadicRational {
    fn sum<I: Iterator<Item = DyadicRational>>(iter: I) -> DyadicRational {
        iter.fold(DyadicRational::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Sum<&'a DyadicRational> for DyadicRational {
    fn sum<I: Iterator<Item = &'a DyadicRational>>(iter: I) -> DyadicRational {
        iter.fold(DyadicRational::zero(), |a, b| &a + b)
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &DyadicRational) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &DyadicRational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

/// Serialized as `{num, exp}`; the numerator is a decimal string so that it
/// never loses precision in JSON readers.
impl Serialize for DyadicRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DyadicRational", 2)?;
        st.serialize_field("num", &self.num.to_string())?;
        st.serialize_field("exp", &self.exp)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dr(n: u64, e: u64) -> DyadicRational {
        DyadicRational::new(BigUint::from(n), e)
    }

    #[test]
    fn lowest_terms() {
        let r = dr(12, 5);
        assert_eq!((r.num().clone(), r.exp()), (BigUint::from(3u32), 3));
        assert_eq!(dr(0, 9), DyadicRational::zero());
        assert_eq!(dr(8, 2), DyadicRational::from_int(BigUint::from(2u32)));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&dr(1, 2) + &dr(1, 2), dr(1, 1));
        assert_eq!(&dr(3, 2) * &dr(1, 1), dr(3, 3));
        assert_eq!(dr(1, 1).checked_sub(&dr(1, 3)).unwrap(), dr(3, 3));
        assert!(dr(1, 3).checked_sub(&dr(1, 1)).is_err());
        assert!(dr(1, 3) < dr(1, 2));
        let s: DyadicRational = (1..=10).map(|e| dr(1, e)).sum();
        assert_eq!(s, dr(1023, 10));
    }

    #[test]
    fn decimals() {
        assert_eq!(dr(1, 2).decimal(3), "0.250");
        assert_eq!(dr(1, 3).decimal(2), "0.13");
        assert_eq!(dr(1, 1).decimal(0), "1");
        assert_eq!(dr(36, 10).decimal(9), "0.035156250");
        assert_eq!(DyadicRational::one().decimal(2), "1.00");
        assert!((dr(5, 3).to_f64() - 0.625).abs() < 1e-15);
        assert_eq!(DyadicRational::pow2_neg(2000).to_f64(), 0.0);
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(dr(3, 4)).unwrap();
        assert_eq!(v, serde_json::json!({"num": "3", "exp": 4}));
    }
}
