use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::word::{DyadicWord, Tail};
use crate::error::{Error, Result};

/// `len` independent Bernoulli(p) bits with an unknown tail.
pub fn sample_bernoulli(p: f64, len: usize, seed: u64) -> Result<DyadicWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_bernoulli_with(&mut rng, p, len)
}

pub fn sample_bernoulli_with<R: Rng + ?Sized>(rng: &mut R, p: f64, len: usize) -> Result<DyadicWord> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::BadParameter(format!("p = {p} is not in (0, 1)")));
    }
    if len == 0 {
        return Err(Error::BadParameter("sample length must be positive".into()));
    }
    let mut w = DyadicWord::zeros(len, Tail::Unknown);
    if p == 0.5 {
        let n = w.limbs().len();
        for q in 0..n {
            let r = len - q * 64;
            let mut v: u64 = rng.random();
            if r < 64 {
                v &= (1u64 << r) - 1;
            }
            w.limbs_mut()[q] = v;
        }
    } else {
        for i in 0..len {
            if rng.random::<f64>() < p {
                w.set(i, 1);
            }
        }
    }
    Ok(w)
}
