use num_rational::Ratio;

use crate::error::{Error, Result};

/// Fraction of positions where `u` and `v` disagree.
pub fn hamming_density(u: &[u8], v: &[u8]) -> Result<Ratio<u64>> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    if u.is_empty() {
        return Err(Error::BadParameter("empty words".into()));
    }
    let d = u.iter().zip(v).filter(|(a, b)| a != b).count();
    Ok(Ratio::new(d as u64, u.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let w = [0, 1, 1, 0, 1];
        assert_eq!(hamming_density(&w, &w).unwrap(), Ratio::from_integer(0));
        let c: Vec<u8> = w.iter().map(|b| 1 - b).collect();
        assert_eq!(hamming_density(&w, &c).unwrap(), Ratio::from_integer(1));
        assert_eq!(hamming_density(&[0, 1, 0, 1], &[0, 1, 1, 0]).unwrap(), Ratio::new(1, 2));
        assert!(matches!(hamming_density(&[0], &[0, 1]), Err(Error::LengthMismatch(1, 2))));
    }
}
