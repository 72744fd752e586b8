//! The Pascal automorphism, its time change, supporting words and relatives.

mod rank;
mod step;
mod substitution;
mod supporting;
mod tower;

pub use rank::{adic_rank, adic_unrank, binomial, BinomialTable};
pub use step::{first_block, jump, jump_k, predecessor, predecessor_mut, successor, successor_mut, JumpValue};
pub use substitution::{substitution_window, SubstitutionWindow};
pub use supporting::{
    supporting_len, supporting_word, supporting_word_bounded, write_supporting_word, SupportingWord,
    DEFAULT_MAX_SYMBOLS,
};
pub use tower::{tower_step, TowerPoint};

pub(crate) fn ser_biguint<S: serde::Serializer>(
    v: &num_bigint::BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
