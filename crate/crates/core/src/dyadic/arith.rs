use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::DyadicRational;
use super::word::{DyadicWord, Tail};
use crate::error::{Error, Result};

impl DyadicWord {
    /// `x + 1` in place.
    pub fn odometer_step_mut(&mut self) -> Result<()> {
        let n = self.len();
        let first_zero = (0..self.limbs().len())
            .find_map(|q| {
                let tz = (!self.limbs()[q]).trailing_zeros() as usize;
                (tz < 64).then_some(q * 64 + tz)
            })
            .filter(|&p| p < n);
        match first_zero {
            Some(p) => {
                let q = p / 64;
                for l in &mut self.limbs_mut()[..q] {
                    *l = 0;
                }
                self.limbs_mut()[q] += 1;
                Ok(())
            }
            None => {
                // every explicit bit is 1: the carry leaves the prefix
                match self.tail().clone() {
                    Tail::Unknown => Err(Error::RefineNeeded(format!(
                        "carry of {self} + 1 runs into the unknown tail"
                    ))),
                    Tail::AllZero => {
                        self.limbs_mut().iter_mut().for_each(|l| *l = 0);
                        self.push(1);
                        Ok(())
                    }
                    Tail::AllOne => {
                        self.limbs_mut().iter_mut().for_each(|l| *l = 0);
                        *self = self.clone().with_tail(Tail::AllZero);
                        Ok(())
                    }
                    Tail::Periodic(p) => {
                        self.materialize(n + p.len())?;
                        self.odometer_step_mut()
                    }
                }
            }
        }
    }

    /// The odometer `T x = x + 1`.
    pub fn odometer_step(&self) -> Result<DyadicWord> {
        let mut w = self.clone();
        w.odometer_step_mut()?;
        Ok(w)
    }

    /// `x + t` in the dyadic integers.
    pub fn add_int(&self, t: &BigInt) -> Result<DyadicWord> {
        let mut w = self.clone();
        let need = t.bits() as usize + 1;
        if let Tail::Periodic(p) = w.tail() {
            // a full period above the summand stops any carry or borrow
            let target = w.len().max(need) + p.len();
            w.materialize(target)?;
        } else if need > w.len() && *w.tail() != Tail::Unknown {
            w.materialize(need)?;
        }
        let modulus = BigInt::one() << w.len();
        let v = BigInt::from(w.prefix_value()) + t;
        let (q, r) = v.div_mod_floor(&modulus);
        let r = r.to_biguint().expect("floor remainder is nonnegative");
        let carry = if q.is_zero() { 0 } else if q.is_positive() { 1 } else { -1 };
        if carry != 0 && q.abs() != BigInt::one() {
            return Err(Error::RefineNeeded(format!(
                "{self} + {t} needs more than {} known bits",
                self.len()
            )));
        }
        match (carry, w.tail().clone()) {
            (0, _) => w.set_prefix_value(&r),
            (_, Tail::Unknown) => {
                return Err(Error::RefineNeeded(format!(
                    "{self} + {t} carries into the unknown tail"
                )))
            }
            (1, Tail::AllZero) => {
                w.set_prefix_value(&r);
                w.push(1);
            }
            (1, Tail::AllOne) => {
                w.set_prefix_value(&r);
                w = w.with_tail(Tail::AllZero);
            }
            (-1, Tail::AllZero) => {
                w.set_prefix_value(&r);
                w = w.with_tail(Tail::AllOne);
            }
            (-1, Tail::AllOne) => {
                w.set_prefix_value(&r);
                w.push(0);
            }
            _ => unreachable!("periodic tails absorb carries"),
        }
        Ok(w)
    }

    pub fn add_i64(&self, t: i64) -> Result<DyadicWord> {
        self.add_int(&BigInt::from(t))
    }

    /// `self - other` as an ordinary integer, when both share the same tail
    /// beyond a common prefix length.
    pub fn int_difference(&self, other: &DyadicWord) -> Result<BigInt> {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (self.clone(), other.clone());
        a.materialize(n)?;
        b.materialize(n)?;
        if a.tail() != b.tail() {
            return Err(Error::NotAnInteger(format!(
                "{self} - {other} is not determined as an integer"
            )));
        }
        Ok(BigInt::from(a.prefix_value()) - BigInt::from(b.prefix_value()))
    }
}

/// Index of the first coordinate where `x` and `y` differ, `None` if equal.
pub fn first_difference(x: &DyadicWord, y: &DyadicWord) -> Result<Option<usize>> {
    let n = x.len().max(y.len());
    for i in 0..n {
        match (x.bit(i), y.bit(i)) {
            (Some(a), Some(b)) if a != b => return Ok(Some(i)),
            (Some(_), Some(_)) => {}
            _ => {
                return Err(Error::RefineNeeded(format!(
                    "cannot compare {x} and {y} at bit {i}"
                )))
            }
        }
    }
    match (x.tail(), y.tail()) {
        (Tail::Unknown, Tail::Unknown) if x.len() == y.len() => Ok(None),
        (Tail::Unknown, _) | (_, Tail::Unknown) => Err(Error::RefineNeeded(format!(
            "{x} and {y} agree on all known bits"
        ))),
        (s, t) => {
            let span = lcm(s.period(), t.period());
            Ok((n..n + span).find(|&i| x.bit(i) != y.bit(i)))
        }
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / a.gcd(&b) * b
}

/// `2^-t` where `t` is the first coordinate of `x - y` that is nonzero.
pub fn dyadic_metric(x: &DyadicWord, y: &DyadicWord) -> Result<DyadicRational> {
    Ok(match first_difference(x, y)? {
        Some(t) => DyadicRational::pow2_neg(t as u64),
        None => DyadicRational::zero(),
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn w(s: &str) -> DyadicWord {
        s.parse().unwrap()
    }

    #[test]
    fn odometer_examples() {
        assert_eq!(w("110:0*").odometer_step().unwrap(), w("001:0*"));
        assert_eq!(w("0101:?").odometer_step().unwrap(), w("1101:?"));
        assert_eq!(w("111:1*").odometer_step().unwrap(), w("000:0*"));
        assert_eq!(w("11:0*").odometer_step().unwrap(), w("001:0*"));
        assert!(matches!(w("111:?").odometer_step(), Err(Error::RefineNeeded(_))));
        // ...(10)(10) + 1 past an all-ones prefix
        assert_eq!(w("11:(10)*").odometer_step().unwrap(), w("0001:(10)*"));
    }

    #[test]
    fn odometer_across_limbs() {
        let mut x = DyadicWord::from_u64(u64::MAX, 70).unwrap();
        x.odometer_step_mut().unwrap();
        assert_eq!(x.to_uint().unwrap(), BigUint::from(1u128 << 64));
    }

    #[test]
    fn add_int_integers() {
        for a in 0u64..40 {
            for t in -40i64..40 {
                let x = DyadicWord::from_u64(a, 6).unwrap();
                let y = x.add_i64(t).unwrap();
                let expect = a as i64 + t;
                if expect >= 0 {
                    assert_eq!(y.to_u64().unwrap(), expect as u64);
                } else {
                    // negative results end in ones
                    assert_eq!(*y.tail(), Tail::AllOne);
                    let back = y.add_i64(-expect).unwrap();
                    assert_eq!(first_difference(&back, &w(":0*")).unwrap(), None);
                }
            }
        }
    }

    #[test]
    fn add_int_minus_one() {
        let m1 = w(":0*").add_i64(-1).unwrap();
        assert_eq!(m1, w("11:1*"));
        assert_eq!(first_difference(&m1, &w(":1*")).unwrap(), None);
        assert_eq!(w(":1*").add_i64(-1).unwrap(), w("01:1*"));
        let x = w("01:(10)*");
        let y = x.add_i64(-1).unwrap();
        assert_eq!(y, w("1010:(10)*"));
        assert_eq!(first_difference(&y.add_i64(1).unwrap(), &x).unwrap(), None);
    }

    #[test]
    fn metric_examples() {
        let z = DyadicWord::from_u64(0, 4).unwrap();
        assert_eq!(dyadic_metric(&z, &z).unwrap(), DyadicRational::zero());
        let one = DyadicWord::from_u64(1, 4).unwrap();
        assert_eq!(dyadic_metric(&z, &one).unwrap(), DyadicRational::one());
        let four = DyadicWord::from_u64(4, 4).unwrap();
        assert_eq!(dyadic_metric(&z, &four).unwrap(), DyadicRational::pow2_neg(2));
        let r = w("1011:?");
        assert_eq!(dyadic_metric(&r, &r).unwrap(), DyadicRational::zero());
        assert!(dyadic_metric(&w("1:?"), &w("10:?")).is_err());
        assert_eq!(dyadic_metric(&w(":(10)*"), &w("10:(01)*")).unwrap(), DyadicRational::pow2_neg(2));
        assert_eq!(dyadic_metric(&w(":(10)*"), &w("1010:(10)*")).unwrap(), DyadicRational::zero());
    }
}
