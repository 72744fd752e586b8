//! Besicovitch-Hamming distances, periodic scans, orbit-averaged cut
//! semimetrics and covering numbers.

mod averaged;
mod cut;
mod entropy;
mod hamming;
mod morse;
mod nbh;
mod periodic;

use num_rational::Ratio;
use serde::ser::SerializeStruct;

pub use averaged::{
    averaged_cut_metric, class_sequence, mean_and_std, prefix_averages, to_f64, Dynamics, PairAverage,
};
pub use cut::CutSemimetric;
pub use entropy::{averaged_distance_matrices, entropy_profile, epsilon_entropy, Covering, EntropyEntry, EntropyReport};
pub use hamming::hamming_density;
pub use morse::morse_sequence;
pub use nbh::{derived_sequence, nbh_probe};
pub use periodic::{bh_to_periodic, periodic_scan, periodic_scan_named, PeriodEntry, PeriodicScanReport};

/// Decimal rendering of a fraction, rounded half-up to `places` digits.
pub fn ratio_decimal(r: &Ratio<u64>, places: u32) -> String {
    let scale = 10u128.pow(places);
    let (n, d) = (*r.numer() as u128, *r.denom() as u128);
    let q = (2 * n * scale + d) / (2 * d);
    let (int, frac) = (q / scale, q % scale);
    if places == 0 {
        return int.to_string();
    }
    format!("{int}.{frac:0width$}", width = places as usize)
}

/// `{num, den, decimal_rounded}`, the decimal rounded to 9 places.
pub(crate) fn ser_ratio<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Fraction", 3)?;
    st.serialize_field("num", r.numer())?;
    st.serialize_field("den", r.denom())?;
    st.serialize_field("decimal_rounded", &ratio_decimal(r, 9))?;
    st.end()
}
