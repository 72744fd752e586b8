use num_bigint::BigUint;
use num_traits::Zero;

use super::step::{jump, successor};
use crate::dyadic::DyadicWord;
use crate::error::{Error, Result};

/// A point of the tower over the Pascal base with ceiling `n(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerPoint {
    pub base: DyadicWord,
    pub height: BigUint,
}

impl TowerPoint {
    pub fn new(base: DyadicWord, height: BigUint) -> Result<TowerPoint> {
        if let Ok(j) = jump(&base) {
            if height >= j.value {
                return Err(Error::OutOfRange(format!("height {height} >= n(x) = {}", j.value)));
            }
        }
        Ok(TowerPoint { base, height })
    }

    pub fn ground(base: DyadicWord) -> TowerPoint {
        TowerPoint { base, height: BigUint::zero() }
    }
}

/// Climbs one floor, or returns to the base over `P x` from the top floor.
pub fn tower_step(p: &TowerPoint) -> Result<TowerPoint> {
    let ceiling = jump(&p.base)?.value;
    let h = &p.height + 1u32;
    if h < ceiling {
        Ok(TowerPoint { base: p.base.clone(), height: h })
    } else {
        Ok(TowerPoint::ground(successor(&p.base)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DyadicWord {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let x = w("10:?");
        assert_eq!(tower_step(&TowerPoint::ground(x.clone())).unwrap(), TowerPoint::ground(successor(&x).unwrap()));
        let x = w("00011110:0*");
        let p = TowerPoint::new(x.clone(), BigUint::from(3u32)).unwrap();
        assert_eq!(tower_step(&p).unwrap().height, BigUint::from(4u32));
        let mut q = TowerPoint::ground(x.clone());
        for _ in 0..15 {
            q = tower_step(&q).unwrap();
        }
        assert_eq!(q, TowerPoint::ground(successor(&x).unwrap()));
        assert!(TowerPoint::new(x, BigUint::from(15u32)).is_err());
    }
}
