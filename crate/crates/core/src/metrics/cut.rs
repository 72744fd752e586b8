use crate::dyadic::DyadicWord;
use crate::error::{Error, Result};

/// Cut semimetric of a partition by the first `window` bits:
/// `rho(x, y) = 0` iff both land in the same class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSemimetric {
    window: usize,
    /// `labels[v]` is the class of the word whose bit `i` is bit `i` of `v`.
    labels: Vec<u8>,
    classes: usize,
}

impl CutSemimetric {
    pub fn new(window: usize, labels: Vec<u8>) -> Result<CutSemimetric> {
        if window == 0 || window > 16 {
            return Err(Error::BadParameter(format!("window {window} not in 1..=16")));
        }
        if labels.len() != 1 << window {
            return Err(Error::BadParameter(format!(
                "{} labels for {} words",
                labels.len(),
                1usize << window
            )));
        }
        let mut seen = labels.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() < 2 {
            return Err(Error::BadParameter("a cut semimetric needs at least two classes".into()));
        }
        if seen.len() > 36 || *seen.last().unwrap() >= 36 {
            return Err(Error::BadParameter("at most 36 class labels (0..36)".into()));
        }
        Ok(CutSemimetric { window, labels, classes: seen.len() })
    }

    /// The partition by the first coordinate.
    pub fn first_bit() -> CutSemimetric {
        CutSemimetric::new(1, vec![0, 1]).unwrap()
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    /// Class of a window of symbols (`w.len() == window`).
    pub fn classify(&self, w: &[u8]) -> u8 {
        let v = w.iter().rev().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        self.labels[v]
    }

    pub fn classify_point(&self, x: &DyadicWord) -> Result<u8> {
        let mut v = 0usize;
        for i in (0..self.window).rev() {
            let b = x.bit(i).ok_or_else(|| {
                Error::RefineNeeded(format!("{x}: bit {i} needed by the classifier"))
            })?;
            v = (v << 1) | b as usize;
        }
        Ok(self.labels[v])
    }

    pub fn distance(&self, x: &DyadicWord, y: &DyadicWord) -> Result<u8> {
        Ok(u8::from(self.classify_point(x)? != self.classify_point(y)?))
    }
}
