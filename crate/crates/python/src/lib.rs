//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! inputs may be `Fraction`, `int` or rational strings like `"9/41"`.

use std::path::PathBuf;

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyIOError, PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyString};

use hankel_approx::driver::{self, Method, OutputFormat};
use hankel_approx::emit::render;
use hankel_approx::moments::{parse_moments, ReferenceConstant};
use hankel_approx::{
    numerics, ortho, Error, MomentSequence, Rational, RoundingMode, SquareMatrix,
};

create_exception!(hankel_py, HankelError, PyValueError, "Errors raised by the core library.");
create_exception!(
    hankel_py,
    PositivityError,
    HankelError,
    "The moment functional is not positive definite at some index."
);

fn to_pyerr(e: Error) -> PyErr {
    match e {
        Error::PositivityViolation { .. } | Error::NonPositiveQ { .. } => {
            PositivityError::new_err(e.to_string())
        }
        Error::Io { .. } => PyIOError::new_err(e.to_string()),
        _ => HankelError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer().clone(), r.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, values: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = values
        .iter()
        .map(|v| fraction(py, v))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(s) = obj.cast::<PyString>() {
        let text = s.to_str()?;
        return numerics::parse_rational(text)
            .map_err(|e| HankelError::new_err(format!("bad rational {text:?}: {e}")));
    }
    if let Ok(n) = obj.extract::<BigInt>() {
        return Ok(Rational::from_integer(n));
    }
    if let (Ok(num), Ok(den)) = (obj.getattr("numerator"), obj.getattr("denominator")) {
        let num: BigInt = num.extract()?;
        let den: BigInt = den.extract()?;
        return numerics::make_rational(num, den).map_err(to_pyerr);
    }
    Err(PyTypeError::new_err(
        "expected a Fraction, an int, or a rational string",
    ))
}

fn matrix(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<SquareMatrix> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(rational).collect::<PyResult<Vec<_>>>())
        .collect::<PyResult<Vec<_>>>()?;
    SquareMatrix::from_rows(rows).map_err(to_pyerr)
}

fn parse_method(method: &str) -> PyResult<Method> {
    method.parse().map_err(to_pyerr)
}

/// A source of exact moments a_1, a_2, ... (a_0 is fixed to 0).
#[pyclass(name = "MomentSequence", frozen, module = "hankel_py")]
struct PyMomentSequence {
    inner: MomentSequence,
}

impl From<MomentSequence> for PyMomentSequence {
    fn from(inner: MomentSequence) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyMomentSequence {
    #[staticmethod]
    fn gamma() -> Self {
        MomentSequence::gamma().into()
    }

    #[staticmethod]
    fn gompertz() -> Self {
        MomentSequence::gompertz().into()
    }

    #[staticmethod]
    fn zeta(k: u32) -> PyResult<Self> {
        MomentSequence::zeta(k).map(Into::into).map_err(to_pyerr)
    }

    #[staticmethod]
    fn factorial() -> Self {
        MomentSequence::factorial().into()
    }

    /// `moments[0]` is a_1.
    #[staticmethod]
    #[pyo3(signature = (name, moments, reference = None))]
    fn custom(name: String, moments: Vec<Bound<'_, PyAny>>, reference: Option<&str>) -> PyResult<Self> {
        let moments = moments.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        let reference = reference
            .map(|r| ReferenceConstant::new(name.clone(), r))
            .transpose()
            .map_err(to_pyerr)?;
        Ok(MomentSequence::custom(name, moments, reference).into())
    }

    /// Read a moment file (`{"name": ..., "a": [...], "reference": ...}`).
    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        hankel_approx::load_moments(path).map(Into::into).map_err(to_pyerr)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_moments(text).map(Into::into).map_err(to_pyerr)
    }

    #[getter]
    fn name(&self) -> &str {
        self.inner.name()
    }

    #[getter]
    fn kind(&self) -> String {
        self.inner.kind().to_string()
    }

    /// Target constant as decimal text, if known.
    #[getter]
    fn reference(&self) -> Option<String> {
        self.inner.reference().map(|r| r.decimal.to_string())
    }

    fn moment<'py>(&self, py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
        let a = self.inner.moment(n).map_err(to_pyerr)?;
        fraction(py, &a)
    }

    /// `[a_1, ..., a_count]`.
    fn moments<'py>(&self, py: Python<'py>, count: usize) -> PyResult<Bound<'py, PyList>> {
        let a = py.detach(|| self.inner.moments(count)).map_err(to_pyerr)?;
        fractions(py, &a)
    }

    fn __repr__(&self) -> String {
        format!("MomentSequence({:?}, kind={})", self.inner.name(), self.inner.kind())
    }
}

/// P_n = -det(a_{i+j})_{i,j=0}^{n+1}.
#[pyfunction]
fn hankel_p<'py>(py: Python<'py>, seq: &PyMomentSequence, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let p = py.detach(|| hankel_approx::hankel_p(&seq.inner, n)).map_err(to_pyerr)?;
    fraction(py, &p)
}

/// Q_n = det(a_{i+j+2})_{i,j=0}^{n}; raises PositivityError when Q_n <= 0.
#[pyfunction]
fn hankel_q<'py>(py: Python<'py>, seq: &PyMomentSequence, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let q = py.detach(|| hankel_approx::hankel_q(&seq.inner, n)).map_err(to_pyerr)?;
    fraction(py, &q)
}

/// P_n / Q_n by determinants (`"det"`) or orthogonal polynomials (`"ortho"`).
#[pyfunction]
#[pyo3(signature = (seq, n, method = "ortho"))]
fn approximant<'py>(
    py: Python<'py>,
    seq: &PyMomentSequence,
    n: usize,
    method: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let value = match parse_method(method)? {
        Method::Det => py.detach(|| hankel_approx::hankel_pq(&seq.inner, n).map(|(p, q)| p / q)),
        Method::Ortho => py.detach(|| ortho::approximant_ortho(&seq.inner, n)),
        Method::Both => {
            return Err(PyValueError::new_err("method must be \"det\" or \"ortho\""));
        }
    }
    .map_err(to_pyerr)?;
    fraction(py, &value)
}

/// Monic orthogonal polynomials q_0..q_{count-1} as coefficient lists (constant term first).
#[pyfunction]
fn orthogonal_polys<'py>(
    py: Python<'py>,
    seq: &PyMomentSequence,
    count: usize,
) -> PyResult<Bound<'py, PyList>> {
    let polys = py
        .detach(|| ortho::orthogonal_polys(&seq.inner, count))
        .map_err(to_pyerr)?;
    let items = polys
        .iter()
        .map(|p| fractions(py, p.coeffs()))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Exact determinant of a square matrix given as a list of rows.
#[pyfunction]
fn det<'py>(py: Python<'py>, rows: Vec<Vec<Bound<'py, PyAny>>>) -> PyResult<Bound<'py, PyAny>> {
    let m = matrix(rows)?;
    fraction(py, &hankel_approx::det_rational(&m))
}

/// Determinant of a matrix that is diagonal outside its first row and column.
#[pyfunction]
fn arrow_det<'py>(py: Python<'py>, rows: Vec<Vec<Bound<'py, PyAny>>>) -> PyResult<Bound<'py, PyAny>> {
    let m = matrix(rows)?;
    let d = hankel_approx::arrow_det(&m).map_err(to_pyerr)?;
    fraction(py, &d)
}

#[pyfunction]
fn binomial(n: u64, k: u64) -> PyResult<BigInt> {
    numerics::binomial(n, k).map_err(to_pyerr)
}

#[pyfunction]
fn harmonic(py: Python<'_>, n: u64) -> PyResult<Bound<'_, PyAny>> {
    let h = numerics::harmonic(n).map_err(to_pyerr)?;
    fraction(py, &h)
}

/// Fixed-point text with `digits` fractional digits, rounding half away from zero.
#[pyfunction]
#[pyo3(signature = (value, digits = 10, truncate = false))]
fn to_decimal(value: &Bound<'_, PyAny>, digits: usize, truncate: bool) -> PyResult<String> {
    let mode = if truncate {
        RoundingMode::Truncate
    } else {
        RoundingMode::RoundHalfAway
    };
    numerics::rat_to_decimal(&rational(value)?, digits, mode)
        .map(|d| d.to_string())
        .map_err(to_pyerr)
}

/// Approximant records for n = 0..=n_max as dicts with Fraction values.
///
/// A positivity failure partway through returns the records computed before it;
/// an engine mismatch raises.
#[pyfunction]
#[pyo3(signature = (seq, n_max, method = "both", digits = 10))]
fn run<'py>(
    py: Python<'py>,
    seq: &PyMomentSequence,
    n_max: usize,
    method: &str,
    digits: usize,
) -> PyResult<Bound<'py, PyList>> {
    let method = parse_method(method)?;
    let outcome = py
        .detach(|| driver::run_sequence(&seq.inner, n_max, method, digits))
        .map_err(to_pyerr)?;
    if let Some(e @ Error::EngineMismatch { .. }) = outcome.failure {
        return Err(to_pyerr(e));
    }
    let rows = outcome
        .records
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("n", r.n)?;
            d.set_item("P", fraction(py, &r.p)?)?;
            d.set_item("Q", fraction(py, &r.q)?)?;
            d.set_item("value", fraction(py, &r.value)?)?;
            d.set_item("decimal", r.decimal.as_str())?;
            let gap = r.reference_gap.as_ref().map(|g| fraction(py, g)).transpose()?;
            d.set_item("gap", gap)?;
            d.set_item("method", r.method.as_str())?;
            Ok(d)
        })
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, rows)
}

/// Table, CSV or JSON text for n = 0..=n_max, as the CLI prints it.
#[pyfunction]
#[pyo3(signature = (seq, n_max, method = "both", digits = 10, format = "table", exact = false))]
fn render_table(
    py: Python<'_>,
    seq: &PyMomentSequence,
    n_max: usize,
    method: &str,
    digits: usize,
    format: &str,
    exact: bool,
) -> PyResult<String> {
    let method = parse_method(method)?;
    let format: OutputFormat = format.parse().map_err(to_pyerr)?;
    let outcome = py
        .detach(|| driver::run_sequence(&seq.inner, n_max, method, digits))
        .map_err(to_pyerr)?;
    render(&outcome.records, format, exact).map_err(to_pyerr)
}

/// Cross-check both engines; returns `{"passed", "checks", "positivity", "report"}`.
#[pyfunction]
fn validate<'py>(py: Python<'py>, seq: &PyMomentSequence, n_max: usize) -> PyResult<Bound<'py, PyDict>> {
    let report = py
        .detach(|| driver::cross_validate(&seq.inner, n_max))
        .map_err(to_pyerr)?;
    let d = PyDict::new(py);
    d.set_item("passed", report.passed())?;
    let checks: Vec<(String, bool, String)> = report
        .checks
        .iter()
        .map(|c| (c.name.clone(), c.passed, c.detail.clone()))
        .collect();
    d.set_item("checks", checks)?;
    d.set_item("positivity", report.positivity.as_ref().map(ToString::to_string))?;
    d.set_item("report", report.to_string())?;
    Ok(d)
}

#[pymodule]
fn hankel_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("HankelError", py.get_type::<HankelError>())?;
    m.add("PositivityError", py.get_type::<PositivityError>())?;
    m.add_class::<PyMomentSequence>()?;
    m.add_function(wrap_pyfunction!(hankel_p, m)?)?;
    m.add_function(wrap_pyfunction!(hankel_q, m)?)?;
    m.add_function(wrap_pyfunction!(approximant, m)?)?;
    m.add_function(wrap_pyfunction!(orthogonal_polys, m)?)?;
    m.add_function(wrap_pyfunction!(det, m)?)?;
    m.add_function(wrap_pyfunction!(arrow_det, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic, m)?)?;
    m.add_function(wrap_pyfunction!(to_decimal, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(render_table, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    Ok(())
}
