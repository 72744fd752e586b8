//! Python bindings for `pascal_adic`.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use pascal_adic::{coding, dyadic, metrics, pascal};

create_exception!(pascal_adic_py, PascalAdicError, PyException);

fn err(e: pascal_adic::Error) -> PyErr {
    PascalAdicError::new_err(e.to_string())
}

/// A 2-adic integer: explicit low bits followed by a tail.
#[pyclass(name = "DyadicWord", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyDyadicWord(dyadic::DyadicWord);

#[pymethods]
impl PyDyadicWord {
    /// Parses `bits:tail`, e.g. `"0110:0*"`, `"1:(10)*"`, `"0101:?"`.
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        s.parse().map(PyDyadicWord).map_err(err)
    }

    #[staticmethod]
    fn from_int(n: u64, length: usize) -> PyResult<Self> {
        dyadic::DyadicWord::from_u64(n, length).map(PyDyadicWord).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (length, seed, p = 0.5))]
    fn sample(length: usize, seed: u64, p: f64) -> PyResult<Self> {
        dyadic::sample_bernoulli(p, length, seed).map(PyDyadicWord).map_err(err)
    }

    fn bits(&self) -> Vec<u8> {
        self.0.bits()
    }

    fn tail(&self) -> String {
        self.0.tail().to_string()
    }

    fn bit(&self, i: usize) -> Option<u8> {
        self.0.bit(i)
    }

    fn successor(&self) -> PyResult<Self> {
        pascal::successor(&self.0).map(PyDyadicWord).map_err(err)
    }

    fn predecessor(&self) -> PyResult<Self> {
        pascal::predecessor(&self.0).map(PyDyadicWord).map_err(err)
    }

    fn odometer(&self) -> PyResult<Self> {
        self.0.odometer_step().map(PyDyadicWord).map_err(err)
    }

    /// `n(x)` with `P x = x + n(x)`.
    fn jump(&self) -> PyResult<BigUint> {
        pascal::jump(&self.0).map(|j| j.value).map_err(err)
    }

    fn jump_k(&self, k: u64) -> PyResult<BigUint> {
        pascal::jump_k(&self.0, k).map_err(err)
    }

    fn pair_coords(&self, count: usize) -> PyResult<Vec<(u64, u64)>> {
        dyadic::pair_coords_n(&self.0, count).map(|p| p.pairs).map_err(err)
    }

    /// First bits of `P^j x` for `lo <= j <= hi`.
    fn encode(&self, lo: i64, hi: i64) -> PyResult<Vec<u8>> {
        coding::encode(&self.0, lo, hi).map(|w| w.symbols).map_err(err)
    }

    fn to_int(&self) -> PyResult<BigUint> {
        self.0.to_uint().map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DyadicWord('{}')", self.0)
    }
}

#[pyfunction]
fn supporting_word(m: u64, k: u64) -> PyResult<String> {
    pascal::supporting_word(m, k).map(|w| w.to_bit_string()).map_err(err)
}

#[pyfunction]
fn exotic_sequence(length: usize) -> PyResult<Vec<u8>> {
    coding::exotic_sequence(length).map_err(err)
}

#[pyfunction]
fn morse_sequence(length: usize) -> PyResult<Vec<u8>> {
    metrics::morse_sequence(length).map_err(err)
}

type CylinderRow = (String, BigUint, u64, usize);

/// `[(word, measure_num, measure_exp, group_id)]` and the residual mass as `(num, exp)`.
#[pyfunction]
#[pyo3(signature = (n, max_depth = None))]
fn cylinder_table(n: usize, max_depth: Option<usize>) -> PyResult<(Vec<CylinderRow>, (BigUint, u64))> {
    let t = coding::cylinder_table(n, max_depth.unwrap_or(coding::default_max_depth(n))).map_err(err)?;
    let rows = t
        .entries
        .iter()
        .map(|e| (coding::bits_to_string(&e.word), e.measure.num().clone(), e.measure.exp(), e.group_id))
        .collect();
    Ok((rows, (t.residual_mass.num().clone(), t.residual_mass.exp())))
}

/// `[p(1), ..., p(n_max)]`.
#[pyfunction]
fn complexity(n_max: usize) -> PyResult<Vec<u64>> {
    let c = coding::complexity(n_max, coding::complexity_depth(n_max)).map_err(err)?;
    Ok(c.entries.into_iter().map(|e| e.1).collect())
}

/// `(num, den)` of the disagreement density.
#[pyfunction]
fn hamming_density(u: Vec<u8>, v: Vec<u8>) -> PyResult<(u64, u64)> {
    let r = metrics::hamming_density(&u, &v).map_err(err)?;
    Ok((*r.numer(), *r.denom()))
}

#[pyfunction]
fn bh_to_periodic(seq: Vec<u8>, period: Vec<u8>) -> PyResult<(u64, u64)> {
    let r = metrics::bh_to_periodic(&seq, &period).map_err(err)?;
    Ok((*r.numer(), *r.denom()))
}

/// Minimum over periods: `(length, word, num, den)`.
#[pyfunction]
#[pyo3(signature = (seq, max_period, subword_periods = false))]
fn periodic_scan(seq: Vec<u8>, max_period: usize, subword_periods: bool) -> PyResult<(usize, String, u64, u64)> {
    let r = metrics::periodic_scan(&seq, max_period, subword_periods).map_err(err)?;
    let m = r.minimum;
    Ok((m.length, m.word, *m.distance.numer(), *m.distance.denom()))
}

/// Orbit averages of the first-bit cut metric for seeded random pairs.
#[pyfunction]
#[pyo3(signature = (dynamics, pairs, steps, seed, length = 256))]
fn averaged_metric(dynamics: &str, pairs: usize, steps: usize, seed: u64, length: usize) -> PyResult<Vec<f64>> {
    let d: metrics::Dynamics = dynamics.parse().map_err(err)?;
    let f = metrics::CutSemimetric::first_bit();
    let avs = metrics::averaged_cut_metric(d, &f, pairs, steps, seed, length).map_err(err)?;
    Ok(avs.iter().map(|p| metrics::to_f64(&p.average)).collect())
}

#[pymodule]
pub fn pascal_adic_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PascalAdicError", m.py().get_type::<PascalAdicError>())?;
    m.add_class::<PyDyadicWord>()?;
    m.add_function(wrap_pyfunction!(supporting_word, m)?)?;
    m.add_function(wrap_pyfunction!(exotic_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(morse_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(cylinder_table, m)?)?;
    m.add_function(wrap_pyfunction!(complexity, m)?)?;
    m.add_function(wrap_pyfunction!(hamming_density, m)?)?;
    m.add_function(wrap_pyfunction!(bh_to_periodic, m)?)?;
    m.add_function(wrap_pyfunction!(periodic_scan, m)?)?;
    m.add_function(wrap_pyfunction!(averaged_metric, m)?)?;
    Ok(())
}
