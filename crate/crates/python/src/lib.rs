//! Python bindings: diagrams, finite psyquandles, counting invariants and
//! the polynomial invariants.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use psyknot::coloring::{
    count_alexander_linear, counting_invariant, enumerate_colorings, strong_p_colorings,
};
use psyknot::diagram::{emit_pd, parse_pd, CrossingKind, Move, Site};
use psyknot::invariants::{
    alexander_groebner, classical_alexander, jablan_polynomial, were_weighted_sum,
};
use psyknot::poly::MonomialOrder;
use psyknot::psyquandle::{
    emit_psy, parse_psy, search as census, verify_psyquandle, Op, SearchOptions,
};

fn err(e: psyknot::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn op(name: &str) -> PyResult<Op> {
    match name {
        "under_tri" | "ut" => Ok(Op::UnderTri),
        "over_tri" | "ot" => Ok(Op::OverTri),
        "under_dot" | "ud" => Ok(Op::UnderDot),
        "over_dot" | "od" => Ok(Op::OverDot),
        _ => Err(PyValueError::new_err(format!("unknown operation {name:?}"))),
    }
}

fn kind(name: &str) -> PyResult<CrossingKind> {
    match name {
        "+" | "positive" => Ok(CrossingKind::PositiveClassical),
        "-" | "negative" => Ok(CrossingKind::NegativeClassical),
        "s" | "singular" => Ok(CrossingKind::Singular),
        "p" | "precrossing" => Ok(CrossingKind::Precrossing),
        _ => Err(PyValueError::new_err(format!(
            "unknown crossing kind {name:?}"
        ))),
    }
}

/// A planar diagram with classical, singular or precrossings.
#[pyclass(name = "Diagram", module = "psyknot_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDiagram(psyknot::diagram::Diagram);

#[pymethods]
impl PyDiagram {
    /// Parses the `.pd` text format.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_pd(text).map(PyDiagram).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PyValueError::new_err(format!("{path}: {e}")))?;
        Self::new(&text)
    }

    /// Closure of a braid word of `(kind, generator)` pairs, generators 0-based.
    #[staticmethod]
    fn from_braid(word: Vec<(String, usize)>, strands: usize) -> PyResult<Self> {
        let w = word
            .iter()
            .map(|(k, i)| Ok((kind(k)?, *i)))
            .collect::<PyResult<Vec<_>>>()?;
        psyknot::diagram::Diagram::from_braid(&w, strands)
            .map(PyDiagram)
            .map_err(err)
    }

    fn to_pd(&self) -> String {
        emit_pd(&self.0)
    }

    #[getter]
    fn semiarcs(&self) -> usize {
        self.0.semiarc_count()
    }

    #[getter]
    fn crossings(&self) -> usize {
        self.0.crossings().len()
    }

    #[getter]
    fn components(&self) -> usize {
        self.0.component_count()
    }

    #[getter]
    fn precrossings(&self) -> usize {
        self.0.precrossing_count()
    }

    #[getter]
    fn class_name(&self) -> String {
        self.0.class().to_string()
    }

    /// Every resolution of the precrossings, with its sign word.
    fn resolutions(&self) -> PyResult<Vec<(PyDiagram, String)>> {
        let rs = self.0.resolutions().map_err(err)?;
        Ok(rs.into_iter().map(|(d, w)| (PyDiagram(d), w)).collect())
    }

    /// Applies a move; `site` is a semiarc label, or a crossing index for `psII`.
    fn apply_move(&self, name: &str, site: usize) -> PyResult<PyDiagram> {
        let mv: Move = name.parse().map_err(err)?;
        let site = if mv == Move::PsII {
            Site::Crossing(site)
        } else {
            Site::Semiarc(site as u32)
        };
        self.0.insert_move(mv, site).map(PyDiagram).map_err(err)
    }

    fn __eq__(&self, other: &PyDiagram) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!(
            "Diagram({} crossings, {} semiarcs)",
            self.0.crossings().len(),
            self.0.semiarc_count()
        )
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A verified finite psyquandle.
#[pyclass(
    name = "Psyquandle",
    module = "psyknot_py",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyPsyquandle(psyknot::psyquandle::FinitePsyquandle);

#[pymethods]
impl PyPsyquandle {
    /// Parses the `.psy` text format and checks the axioms.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let t = parse_psy(text).map_err(err)?;
        psyknot::psyquandle::FinitePsyquandle::new(t)
            .map(PyPsyquandle)
            .map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PyValueError::new_err(format!("{path}: {e}")))?;
        Self::new(&text)
    }

    /// Alexander psyquandle over `Z/m`.
    #[staticmethod]
    fn alexander(m: u64, s: i64, t: i64, a: i64, b: i64) -> PyResult<Self> {
        psyknot::psyquandle::FinitePsyquandle::alexander_mod(m, s, t, a, b)
            .map(PyPsyquandle)
            .map_err(err)
    }

    #[staticmethod]
    fn x_p(p: u64) -> PyResult<Self> {
        psyknot::psyquandle::FinitePsyquandle::x_p(p)
            .map(PyPsyquandle)
            .map_err(err)
    }

    #[staticmethod]
    fn x_p_prime(p: u64) -> PyResult<Self> {
        psyknot::psyquandle::FinitePsyquandle::x_p_prime(p)
            .map(PyPsyquandle)
            .map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn pi_adequate(&self) -> bool {
        self.0.is_pi_adequate()
    }

    /// `x op y`, labels from 1.
    fn get(&self, operation: &str, x: usize, y: usize) -> PyResult<usize> {
        let n = self.0.order();
        if !(1..=n).contains(&x) || !(1..=n).contains(&y) {
            return Err(PyIndexError::new_err(format!("labels must lie in 1..={n}")));
        }
        Ok(self.0.get(op(operation)?, x, y))
    }

    fn to_psy(&self) -> String {
        emit_psy(self.0.tables())
    }

    fn __repr__(&self) -> String {
        format!("Psyquandle(order {})", self.0.order())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Checks the axioms of a `.psy` text; returns the failures, empty when it passes.
#[pyfunction]
fn verify(text: &str) -> PyResult<Vec<String>> {
    let t = parse_psy(text).map_err(err)?;
    let report = verify_psyquandle(&t);
    if report.passed() {
        Ok(Vec::new())
    } else {
        Ok(report.to_string().lines().map(String::from).collect())
    }
}

#[pyfunction]
fn count(d: &PyDiagram, p: &PyPsyquandle) -> PyResult<u64> {
    counting_invariant(&d.0, &p.0).map_err(err)
}

/// All colorings as lists of labels indexed by semiarc.
#[pyfunction]
fn colorings(d: &PyDiagram, p: &PyPsyquandle) -> PyResult<Vec<Vec<usize>>> {
    enumerate_colorings(&d.0, &p.0)
        .map(|h| h.colorings)
        .map_err(err)
}

/// Kernel dimension and count of Alexander colorings over `Z/m`.
#[pyfunction]
fn alexander_count(
    d: &PyDiagram,
    m: u64,
    s: i64,
    t: i64,
    a: i64,
    b: i64,
) -> PyResult<(Option<usize>, u64)> {
    let c = count_alexander_linear(&d.0, m, s, t, a, b).map_err(err)?;
    Ok((c.kernel_dimension, c.count))
}

#[pyfunction]
fn strong_colorings(d: &PyDiagram, p: u64) -> PyResult<usize> {
    strong_p_colorings(&d.0, p).map(|h| h.count()).map_err(err)
}

/// The Jablan polynomial in `s, t`, normalized up to units.
#[pyfunction]
fn jablan(d: &PyDiagram) -> PyResult<String> {
    jablan_polynomial(&d.0)
        .map(|j| j.polynomial().to_string())
        .map_err(err)
}

#[pyfunction]
fn alexander_polynomial(d: &PyDiagram) -> PyResult<String> {
    classical_alexander(&d.0)
        .map(|n| n.polynomial.to_string())
        .map_err(err)
}

/// Reduced Groebner basis of the codimension-`k` minor ideal.
#[pyfunction]
#[pyo3(signature = (d, k = 1, order = "grevlex"))]
fn groebner(d: &PyDiagram, k: usize, order: &str) -> PyResult<Vec<String>> {
    let order: MonomialOrder = order.parse().map_err(err)?;
    let g = alexander_groebner(&d.0, k, order).map_err(err)?;
    Ok(g.basis.iter().map(|p| p.to_string()).collect())
}

/// Symmetrized resolution polynomials of a pseudoknot, keyed by sign word.
#[pyfunction]
#[pyo3(signature = (d, bound = 8))]
fn were_resolutions(d: &PyDiagram, bound: usize) -> PyResult<Vec<(String, String)>> {
    let r = were_weighted_sum(&d.0, bound).map_err(err)?;
    Ok(r.resolutions
        .into_iter()
        .map(|(w, p)| (w, p.to_string()))
        .collect())
}

/// Every psyquandle of order `n`, in table order.
#[pyfunction]
#[pyo3(signature = (n, require_pi = false))]
fn search(n: usize, require_pi: bool) -> PyResult<Vec<PyPsyquandle>> {
    let opts = SearchOptions {
        require_pi,
        ..Default::default()
    };
    Ok(census(n, opts).map_err(err)?.map(PyPsyquandle).collect())
}

#[pymodule]
fn psyknot_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyPsyquandle>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(colorings, m)?)?;
    m.add_function(wrap_pyfunction!(alexander_count, m)?)?;
    m.add_function(wrap_pyfunction!(strong_colorings, m)?)?;
    m.add_function(wrap_pyfunction!(jablan, m)?)?;
    m.add_function(wrap_pyfunction!(alexander_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(groebner, m)?)?;
    m.add_function(wrap_pyfunction!(were_resolutions, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    Ok(())
}
