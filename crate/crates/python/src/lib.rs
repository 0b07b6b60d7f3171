//! Python module `morse_snakes`.
//!
//! Rationals are accepted as `int`, `str` (`"3/4"`, `"0.1"`, `"1e-12"`),
//! `fractions.Fraction`, `decimal.Decimal` or `float` (taken exactly), and
//! returned as `fractions.Fraction`. Structured results come back as plain
//! dicts and lists.

use std::str::FromStr;

use morse_core::morse::{self, ConstructOptions, CriticalPointSpec, PassportOutcome};
use morse_core::polycore::rational::{fmt_rational, from_f64_exact};
use morse_core::polycore::{parse_rational, Polynomial as CorePolynomial, Rational};
use morse_core::snakes::{self, EBTriangle};
use morse_core::{strata5, strata6};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyFloat, PyList};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if obj.is_instance_of::<pyo3::types::PyBool>() {
        return Err(PyTypeError::new_err("expected a number, got bool"));
    }
    if obj.is_instance_of::<PyFloat>() {
        let x: f64 = obj.extract()?;
        return from_f64_exact(x).ok_or_else(|| value_error(format!("{x} is not finite")));
    }
    let text = obj.str()?.to_string();
    parse_rational(&text).map_err(value_error)
}

fn to_rationals(objs: &Bound<'_, PyAny>) -> PyResult<Vec<Rational>> {
    objs.try_iter()?.map(|o| to_rational(&o?)).collect()
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((fmt_rational(r),))
}

fn fractions<'py>(py: Python<'py>, rs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    PyList::new(py, rs.iter().map(|r| fraction(py, r)).collect::<PyResult<Vec<_>>>()?)
}

fn big_int<'py>(py: Python<'py>, n: &impl ToString) -> PyResult<Bound<'py, PyAny>> {
    py.import("builtins")?.getattr("int")?.call1((n.to_string(),))
}

/// Serde value as nested dicts and lists.
fn plain<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(value_error)?;
    py.import("json")?.getattr("loads")?.call1((text,))
}

/// Proper alternating permutation used as a passport.
#[pyclass(frozen, eq, hash, module = "morse_snakes")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Passport(snakes::Passport);

#[pymethods]
impl Passport {
    #[new]
    fn new(entries: Vec<usize>) -> PyResult<Self> {
        snakes::Passport::new(entries).map(Passport).map_err(value_error)
    }

    /// Parses `"3,1,4,2"` or `"(3,1,4,2)"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        snakes::Passport::from_str(text).map(Passport).map_err(value_error)
    }

    #[getter]
    fn entries(&self) -> Vec<usize> {
        self.0.entries().to_vec()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn level(&self) -> usize {
        self.0.level()
    }

    /// Passport of order `n + 1` with first entry `k`.
    fn extend(&self, k: usize) -> PyResult<Self> {
        self.0.extend(k).map(Passport).map_err(value_error)
    }

    fn delete_first(&self) -> PyResult<Self> {
        self.0.delete_first().map(Passport).map_err(value_error)
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Passport({:?})", self.0.entries())
    }
}

/// Polynomial with rational coefficients, lowest degree first.
#[pyclass(frozen, module = "morse_snakes")]
#[derive(Clone)]
struct Polynomial(CorePolynomial);

#[pymethods]
impl Polynomial {
    #[new]
    fn new(coeffs: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Polynomial(CorePolynomial::new(to_rationals(coeffs)?)))
    }

    /// `∫₀ˣ ∏(t - x_i) dt` for critical points `0 = x_0 < x_1 < ...`.
    #[staticmethod]
    fn from_critical_points(points: &Bound<'_, PyAny>) -> PyResult<Self> {
        let spec = CriticalPointSpec::new(to_rationals(points)?).map_err(value_error)?;
        Ok(Polynomial(morse::from_critical_points(&spec)))
    }

    #[getter]
    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, self.0.coeffs())
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn __call__<'py>(&self, py: Python<'py>, x: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.eval(&to_rational(x)?))
    }

    fn derivative(&self) -> Self {
        Polynomial(self.0.derivative())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.0)
    }
}

fn outcome<'py>(py: Python<'py>, o: PassportOutcome) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    match o {
        PassportOutcome::Snake(p) => {
            d.set_item("kind", "snake")?;
            d.set_item("passport", Passport(p))?;
        }
        PassportOutcome::Degenerate(ranks) => {
            d.set_item("kind", "degenerate")?;
            d.set_item("ranks", ranks)?;
        }
        PassportOutcome::NonMorse(reason) => {
            d.set_item("kind", "non_morse")?;
            d.set_item("reason", reason.to_string())?;
        }
    }
    Ok(d)
}

/// All proper alternating permutations of order `n`, lexicographically.
#[pyfunction]
fn enumerate_paps(n: usize) -> PyResult<Vec<Passport>> {
    Ok(snakes::enumerate(n).map_err(value_error)?.into_iter().map(Passport).collect())
}

/// Number of PAPs of order `n`, or of those with first entry `level`.
#[pyfunction]
#[pyo3(signature = (n, level=None))]
fn count_paps(py: Python<'_>, n: usize, level: Option<usize>) -> PyResult<Bound<'_, PyAny>> {
    let c = match level {
        Some(m) => snakes::count(n, m).map_err(value_error)?,
        None => EBTriangle::build(n).map_err(value_error)?.row_total(n).expect("row"),
    };
    big_int(py, &c)
}

#[pyfunction]
fn euler_bernoulli_triangle(py: Python<'_>, rows: usize) -> PyResult<Vec<Vec<Bound<'_, PyAny>>>> {
    let t = EBTriangle::build(rows).map_err(value_error)?;
    t.rows().iter().map(|r| r.iter().map(|x| big_int(py, x)).collect()).collect()
}

#[pyfunction]
fn is_pap(seq: Vec<i64>) -> bool {
    morse_core::is_pap(&seq)
}

/// Ranks the critical values of `p` (a `Polynomial` or coefficients lowest
/// first). The result is a dict with `kind` among `snake`, `degenerate`
/// and `non_morse`.
#[pyfunction]
#[pyo3(signature = (p, tol="1e-12"))]
fn passport<'py>(py: Python<'py>, p: &Bound<'py, PyAny>, tol: &str) -> PyResult<Bound<'py, PyDict>> {
    let poly = match p.downcast::<Polynomial>() {
        Ok(p) => p.get().0.clone(),
        Err(_) => CorePolynomial::new(to_rationals(p)?),
    };
    let tol = parse_rational(tol).map_err(value_error)?;
    outcome(py, morse::passport(&poly, &tol).map_err(value_error)?)
}

/// Critical points `0 = x_0 < ...` of a polynomial with the given passport.
#[pyfunction]
#[pyo3(signature = (passport, budget=10_000, seed=0))]
fn construct<'py>(py: Python<'py>, passport: &Bound<'py, PyAny>, budget: usize, seed: u64) -> PyResult<Bound<'py, PyList>> {
    let target = match passport.downcast::<Passport>() {
        Ok(p) => p.get().0.clone(),
        Err(_) => match passport.extract::<String>() {
            Ok(s) => snakes::Passport::from_str(&s).map_err(value_error)?,
            Err(_) => snakes::Passport::new(passport.extract()?).map_err(value_error)?,
        },
    };
    let spec = py
        .allow_threads(|| morse::construct_with(&target, &ConstructOptions { budget, seed }))
        .map_err(value_error)?;
    fractions(py, spec.points())
}

/// Stratum of the degree-5 normal form at `(b, c)` as a dict.
#[pyfunction]
fn classify5<'py>(py: Python<'py>, b: &Bound<'py, PyAny>, c: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyDict>> {
    let pt = strata5::Param5::new(to_rational(b)?, to_rational(c)?);
    let s = strata5::classify5(&pt).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("description", s.to_string())?;
    match s {
        strata5::Stratum5::Region { region, passport } => {
            d.set_item("kind", "region")?;
            d.set_item("name", region.to_string())?;
            d.set_item("passport", Passport(passport))?;
        }
        strata5::Stratum5::Arc { arc, degenerate_index } => {
            d.set_item("kind", "arc")?;
            d.set_item("name", arc.to_string())?;
            d.set_item("pattern", arc.pattern())?;
            d.set_item("degenerate_index", degenerate_index)?;
        }
        strata5::Stratum5::Junction => d.set_item("kind", "junction")?,
        strata5::Stratum5::OutsideOAB => d.set_item("kind", "outside")?,
    }
    Ok(d)
}

#[pyfunction]
fn landmarks5(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    plain(py, &strata5::landmarks5().map_err(value_error)?)
}

/// Constant-passport components of the degree-6 section `c = gamma`.
#[pyfunction]
#[pyo3(signature = (gamma, resolution=256))]
fn scan_section<'py>(py: Python<'py>, gamma: &Bound<'py, PyAny>, resolution: usize) -> PyResult<Bound<'py, PyAny>> {
    let g = to_rational(gamma)?;
    let scan = py.allow_threads(|| strata6::scan_section(&g, resolution)).map_err(value_error)?;
    plain(py, &scan)
}

/// Thresholds in `[lo, hi]` where the section partition changes.
#[pyfunction]
#[pyo3(signature = (lo, hi, tol="1e-4", resolution=64))]
fn detect_bifurcations<'py>(
    py: Python<'py>,
    lo: &Bound<'py, PyAny>,
    hi: &Bound<'py, PyAny>,
    tol: &str,
    resolution: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let (lo, hi) = (to_rational(lo)?, to_rational(hi)?);
    let tol = parse_rational(tol).map_err(value_error)?;
    let report =
        py.allow_threads(|| strata6::detect_bifurcations(&lo, &hi, &tol, resolution)).map_err(value_error)?;
    plain(py, &report)
}

#[pymodule]
fn morse_snakes(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Passport>()?;
    m.add_class::<Polynomial>()?;
    m.add_function(wrap_pyfunction!(enumerate_paps, m)?)?;
    m.add_function(wrap_pyfunction!(count_paps, m)?)?;
    m.add_function(wrap_pyfunction!(euler_bernoulli_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(is_pap, m)?)?;
    m.add_function(wrap_pyfunction!(passport, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(classify5, m)?)?;
    m.add_function(wrap_pyfunction!(landmarks5, m)?)?;
    m.add_function(wrap_pyfunction!(scan_section, m)?)?;
    m.add_function(wrap_pyfunction!(detect_bifurcations, m)?)?;
    Ok(())
}
