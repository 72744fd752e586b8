use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Pascal's triangle of exact binomials `C(n, k)` for `n <= n_max`.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new(n_max: usize) -> BinomialTable {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = vec![BigUint::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`, zero when `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Result<BigUint> {
        if n > self.n_max() {
            return Err(Error::TooLarge(format!(
                "C({n}, {k}) is beyond the binomial table (n_max = {})",
                self.n_max()
            )));
        }
        Ok(if k > n { BigUint::zero() } else { self.rows[n][k].clone() })
    }

    pub fn rank(&self, w: &[u8]) -> Result<BigUint> {
        let mut r = BigUint::zero();
        let mut j = 0;
        for (p, &b) in w.iter().enumerate() {
            if b == 1 {
                j += 1;
                r += self.get(p, j)?;
            }
        }
        self.get(w.len(), 0)?;
        Ok(r)
    }

    pub fn unrank(&self, n_len: usize, k: usize, index: &BigUint) -> Result<Vec<u8>> {
        let total = self.get(n_len, k)?;
        if *index >= total {
            return Err(Error::OutOfRange(format!("index {index} >= C({n_len}, {k}) = {total}")));
        }
        let mut w = vec![0u8; n_len];
        let mut rest = index.clone();
        let mut top = n_len;
        for j in (1..=k).rev() {
            // largest p < top with C(p, j) <= rest
            let mut p = top - 1;
            while self.get(p, j)? > rest {
                p -= 1;
            }
            w[p] = 1;
            rest -= self.get(p, j)?;
            top = p;
        }
        Ok(w)
    }
}

fn default_table() -> &'static BinomialTable {
    static TABLE: OnceLock<BinomialTable> = OnceLock::new();
    TABLE.get_or_init(|| BinomialTable::new(64))
}

pub fn binomial(n: usize, k: usize) -> Result<BigUint> {
    default_table().get(n, k)
}

/// Position of `w` among the words of its length and weight, in adic order.
pub fn adic_rank(w: &[u8]) -> Result<BigUint> {
    default_table().rank(w)
}

pub fn adic_unrank(n_len: usize, k: usize, index: &BigUint) -> Result<Vec<u8>> {
    default_table().unrank(n_len, k, index)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::adic_compare;
    use crate::dyadic::weight;
    use std::cmp::Ordering;

    fn bits(s: &str) -> Vec<u8> {
        s.bytes().map(|c| c - b'0').collect()
    }

    #[test]
    fn examples() {
        assert_eq!(adic_rank(&bits("1100")).unwrap(), BigUint::zero());
        assert_eq!(adic_rank(&bits("0011")).unwrap(), BigUint::from(5u32));
        assert_eq!(binomial(64, 32).unwrap(), BigUint::from(1832624140942590534u64));
        assert!(matches!(adic_unrank(4, 2, &BigUint::from(6u32)), Err(Error::OutOfRange(_))));
        assert!(matches!(binomial(65, 3), Err(Error::TooLarge(_))));
    }

    #[test]
    fn exhaustive_bijection() {
        for n in 0..=12usize {
            for k in 0..=n {
                let total: usize = binomial(n, k).unwrap().try_into().unwrap();
                let mut prev: Option<Vec<u8>> = None;
                for i in 0..total {
                    let w = adic_unrank(n, k, &BigUint::from(i)).unwrap();
                    assert_eq!(weight(&w), k);
                    assert_eq!(adic_rank(&w).unwrap(), BigUint::from(i));
                    if let Some(p) = prev {
                        assert_eq!(adic_compare(&p, &w).unwrap(), Ordering::Less);
                    }
                    prev = Some(w);
                }
            }
        }
    }
}
