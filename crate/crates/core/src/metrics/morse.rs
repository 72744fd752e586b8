use crate::coding::DEFAULT_MAX_SEQUENCE;
use crate::error::{Error, Result};

/// Prefix of the fixed point of `0 -> 01, 1 -> 10`.
pub fn morse_sequence(len: usize) -> Result<Vec<u8>> {
    if len > DEFAULT_MAX_SEQUENCE {
        return Err(Error::TooLarge(format!("{len} symbols exceeds {DEFAULT_MAX_SEQUENCE}")));
    }
    let mut s = vec![0u8];
    while s.len() < len {
        s = s.iter().flat_map(|&b| [b, 1 - b]).collect();
    }
    s.truncate(len);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::bits_to_string;

    #[test]
    fn prefix() {
        assert_eq!(bits_to_string(&morse_sequence(16).unwrap()), "0110100110010110");
        assert!(morse_sequence(0).unwrap().is_empty());
    }

    #[test]
    fn popcount_parity() {
        let s = morse_sequence(5000).unwrap();
        for (j, &b) in s.iter().enumerate() {
            assert_eq!(b as u32, (j as u32).count_ones() % 2);
        }
        assert_eq!(&morse_sequence(777).unwrap()[..], &s[..777]);
    }
}
