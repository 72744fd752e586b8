use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use super::step::jump;
use crate::dyadic::DyadicWord;
use crate::error::Result;

/// Finite window of `sigma_x : t -> n(x + t)`.
#[derive(Debug, Clone, Serialize)]
pub struct SubstitutionWindow {
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub center: DyadicWord,
    pub width: u64,
    /// `(t, n(x + t))` for `t` in `-width..=width`.
    #[serde(serialize_with = "ser_image")]
    pub image: Vec<(i64, BigUint)>,
    /// Orbit segments of `t -> t + n(x + t)` that stay inside the window,
    /// each starting at an offset with no preimage in the window.
    pub chains: Vec<Vec<i64>>,
}

impl SubstitutionWindow {
    /// `t + n(x + t)`: where the successor of `x + t` sits relative to `x`.
    pub fn successor_offset(&self, t: i64) -> Option<BigInt> {
        let w = self.width as i64;
        if t < -w || t > w {
            return None;
        }
        let (_, n) = &self.image[(t + w) as usize];
        Some(BigInt::from(t) + BigInt::from(n.clone()))
    }
}

fn ser_image<S: serde::Serializer>(img: &[(i64, BigUint)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(img.len()))?;
    for (t, n) in img {
        seq.serialize_element(&(t, n.to_string()))?;
    }
    seq.end()
}

pub fn substitution_window(x: &DyadicWord, width: u64) -> Result<SubstitutionWindow> {
    let w = width as i64;
    let mut image = Vec::with_capacity(2 * width as usize + 1);
    for t in -w..=w {
        image.push((t, jump(&x.add_i64(t)?)?.value));
    }
    let next = |t: i64| -> Option<i64> {
        let n = i64::try_from(&image[(t + w) as usize].1).ok()?;
        let s = t.checked_add(n)?;
        (s <= w).then_some(s)
    };
    let mut has_pre = vec![false; image.len()];
    for t in -w..=w {
        if let Some(s) = next(t) {
            has_pre[(s + w) as usize] = true;
        }
    }
    let mut chains = Vec::new();
    for t in -w..=w {
        if has_pre[(t + w) as usize] {
            continue;
        }
        let mut chain = vec![t];
        let mut c = t;
        while let Some(s) = next(c) {
            chain.push(s);
            c = s;
        }
        chains.push(chain);
    }
    Ok(SubstitutionWindow { center: x.clone(), width, image, chains })
}
