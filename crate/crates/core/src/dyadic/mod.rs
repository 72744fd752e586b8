//! Dyadic integers truncated to finitely many known bits.

mod arith;
mod order;
mod pairs;
mod rational;
mod sample;
mod word;

pub use arith::{dyadic_metric, first_difference};
pub use order::adic_compare;
#[cfg(test)]
pub(crate) use order::weight;
pub use pairs::{blocks, from_pair_coords, pair_coords, pair_coords_n, pair_distribution, PairCoords};
pub use rational::DyadicRational;
pub use sample::{sample_bernoulli, sample_bernoulli_with};
pub use word::{DyadicWord, Tail};
