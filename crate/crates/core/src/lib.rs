//! The Pascal adic automorphism on the dyadic integers.
//!
//! Points are [`DyadicWord`]s: finitely many known bits (least significant
//! first) plus a tail convention. [`pascal`] steps the automorphism,
//! [`coding`] turns orbits into 0-1 sequences and measures cylinders exactly,
//! and [`metrics`] holds the Besicovitch-Hamming and averaged-metric tooling.

pub mod cli;
pub mod coding;
pub mod dyadic;
pub mod error;
pub mod metrics;
pub mod pascal;

pub use dyadic::{DyadicRational, DyadicWord, Tail};
pub use error::{Error, Result};
