//! Python bindings. Errors surface as `ValueError` carrying the library
//! message; reports and verification rows come back as JSON text.

use homrk_core::classify::{
    run_classification, solve_eq10, solve_eq9, DiophantineSolution, REPORT_SCHEMA, REPORT_VERSION,
};
use homrk_core::homrank::{homogeneity_rank, ActionRecord, Catalog as CoreCatalog};
use homrk_core::lie::{fs_indicator, weyl_dim, HighestWeight};
use homrk_core::parse::{parse_group, parse_rep};
use homrk_core::repcalc::{realify, IrrepSpec, RealRepSpec};
use homrk_core::verify::{verify as run_verify, Suite};
use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn simple(name: &str) -> PyResult<homrk_core::lie::SimpleType> {
    let g = parse_group(name).map_err(err)?;
    match g.simple_factors.as_slice() {
        [t] if g.torus_rank == 0 => Ok(*t),
        _ => Err(err(format!("{name} is not simple"))),
    }
}

/// An irreducible representation of a compact group, parsed from text such
/// as `"Sp1*Spin11 [1]x[0,0,0,0,1]"`.
#[pyclass(frozen, module = "homrk")]
struct Rep {
    irrep: IrrepSpec,
    real: RealRepSpec,
}

#[pymethods]
impl Rep {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let irrep = parse_rep(text).map_err(err)?;
        let real = realify(&irrep).map_err(err)?;
        Ok(Rep { irrep, real })
    }

    /// complex degree
    #[getter]
    fn degree(&self) -> PyResult<u64> {
        self.irrep.complex_degree().map_err(err)
    }

    #[getter]
    fn real_dim(&self) -> u64 {
        self.real.real_dim
    }

    #[getter]
    fn reality(&self) -> String {
        self.real.reality.to_string()
    }

    #[getter]
    fn indicator(&self) -> i8 {
        self.real.reality.indicator()
    }

    #[getter]
    fn abs_irreducible(&self) -> bool {
        self.real.abs_irred
    }

    #[getter]
    fn group(&self) -> String {
        self.irrep.group.name()
    }

    fn __str__(&self) -> String {
        self.irrep.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Rep({:?})", self.irrep.to_string())
    }
}

/// A linear action with its orbit data.
#[pyclass(frozen, module = "homrk")]
struct Action {
    rec: ActionRecord,
}

#[pymethods]
impl Action {
    #[getter]
    fn id(&self) -> String {
        self.rec.id.clone()
    }

    #[getter]
    fn group(&self) -> String {
        self.rec.group.name()
    }

    #[getter]
    fn rep(&self) -> String {
        self.rec.rep.source.to_string()
    }

    #[getter]
    fn d(&self) -> u64 {
        self.rec.dim_v()
    }

    #[getter]
    fn cohom(&self) -> u64 {
        self.rec.cohom
    }

    #[getter]
    fn princ_dim(&self) -> u64 {
        self.rec.princ.dim
    }

    #[getter]
    fn princ_rank(&self) -> u64 {
        self.rec.princ.rank
    }

    #[getter]
    fn homrank(&self) -> PyResult<i64> {
        homogeneity_rank(&self.rec).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Action({:?}, d={}, cohom={})", self.rec.id, self.rec.dim_v(), self.rec.cohom)
    }
}

/// The catalog of actions with known orbit data, from `HOMRK_CATALOG` or
/// the built-in copy.
#[pyclass(frozen, module = "homrk")]
struct Catalog {
    inner: CoreCatalog,
}

#[pymethods]
impl Catalog {
    #[new]
    #[pyo3(signature = (path=None))]
    fn new(path: Option<std::path::PathBuf>) -> PyResult<Self> {
        let inner = match path {
            Some(p) => CoreCatalog::load(&p),
            None => CoreCatalog::from_env(),
        }
        .map_err(err)?;
        Ok(Catalog { inner })
    }

    fn action(&self, id: &str) -> Option<Action> {
        self.inner.action(id).map(|r| Action { rec: r.clone() })
    }

    fn actions(&self) -> Vec<Action> {
        self.inner
            .actions()
            .iter()
            .map(|r| Action { rec: r.clone() })
            .collect()
    }

    /// Member `n` of a theorem family.
    fn family_member(&self, id: &str, n: u64) -> PyResult<Action> {
        let fam = self
            .inner
            .theorem_families()
            .iter()
            .find(|f| f.id == id)
            .ok_or_else(|| err(format!("no family {id}")))?;
        Ok(Action {
            rec: fam.instance(n).map_err(err)?,
        })
    }

    /// Theorem examples with `dim V ≤ max_dim`.
    fn theorem_examples(&self, max_dim: u64) -> PyResult<Vec<Action>> {
        Ok(self
            .inner
            .theorem_examples(max_dim)
            .map_err(err)?
            .into_iter()
            .map(|rec| Action { rec })
            .collect())
    }
}

/// `(complex degree, real dimension)` of an irreducible representation.
#[pyfunction]
fn rep_dim(rep: &str) -> PyResult<(u64, u64)> {
    let ir = parse_rep(rep).map_err(err)?;
    Ok((ir.complex_degree().map_err(err)?, realify(&ir).map_err(err)?.real_dim))
}

/// `(reality, indicator, real dimension)`.
#[pyfunction]
fn rep_type(rep: &str) -> PyResult<(String, i8, u64)> {
    let ir = parse_rep(rep).map_err(err)?;
    let r = realify(&ir).map_err(err)?;
    Ok((r.reality.to_string(), r.reality.indicator(), r.real_dim))
}

#[pyfunction]
fn weyl_dimension(group: &str, weight: Vec<u32>) -> PyResult<BigUint> {
    let t = simple(group)?;
    let w = HighestWeight(weight);
    w.check(t).map_err(err)?;
    Ok(weyl_dim(t, &w))
}

#[pyfunction]
fn frobenius_schur(group: &str, weight: Vec<u32>) -> PyResult<i8> {
    let t = simple(group)?;
    let w = HighestWeight(weight);
    w.check(t).map_err(err)?;
    Ok(fs_indicator(t, &w).indicator())
}

/// Homogeneity rank of a catalog record, or of a theorem-family member when
/// `n` is given.
#[pyfunction]
#[pyo3(signature = (id, n=None))]
fn homrank(id: &str, n: Option<u64>) -> PyResult<i64> {
    let cat = CoreCatalog::from_env().map_err(err)?;
    let rec = match (cat.action(id), n) {
        (Some(r), None) => r.clone(),
        _ => cat
            .theorem_families()
            .iter()
            .find(|f| f.id == id)
            .ok_or_else(|| err(format!("no record {id}")))?
            .instance(n.unwrap_or(0))
            .map_err(err)?,
    };
    homogeneity_rank(&rec).map_err(err)
}

fn quads(sols: Vec<DiophantineSolution>) -> Vec<(u64, u64, u64, u64)> {
    let mut v: Vec<_> = sols.iter().map(|s| (s.p, s.q, s.l, s.m)).collect();
    v.sort();
    v
}

/// `(p, q, l, m)` for the even-`m` equation with `p, q ≤ bound`.
#[pyfunction]
#[pyo3(signature = (bound=100))]
fn solve_even(bound: u64) -> Vec<(u64, u64, u64, u64)> {
    quads(solve_eq9(bound, bound))
}

/// `(p, q, l, m)` for the odd-`m` equation with `[m/2] ≤ p + q`.
#[pyfunction]
#[pyo3(signature = (bound=100))]
fn solve_odd(bound: u64) -> Vec<(u64, u64, u64, u64)> {
    quads(solve_eq10(bound, bound))
}

/// The classification report as JSON.
#[pyfunction]
#[pyo3(signature = (max_dim=256))]
fn classify(py: Python<'_>, max_dim: u64) -> PyResult<String> {
    let report = py
        .detach(|| run_classification(max_dim))
        .map_err(err)?;
    serde_json_string(&report)
}

fn serde_json_string<T: serde::Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(v).map_err(err)
}

/// Verification rows as JSON; each row has `pass`.
#[pyfunction]
#[pyo3(signature = (suite="all"))]
fn verify(suite: &str) -> PyResult<String> {
    let s: Suite = suite.parse().map_err(err)?;
    let cat = CoreCatalog::from_env().map_err(err)?;
    serde_json_string(&run_verify(s, &cat).map_err(err)?.rows)
}

#[pymodule]
fn homrk(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Rep>()?;
    m.add_class::<Action>()?;
    m.add_class::<Catalog>()?;
    m.add_function(wrap_pyfunction!(rep_dim, m)?)?;
    m.add_function(wrap_pyfunction!(rep_type, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius_schur, m)?)?;
    m.add_function(wrap_pyfunction!(homrank, m)?)?;
    m.add_function(wrap_pyfunction!(solve_even, m)?)?;
    m.add_function(wrap_pyfunction!(solve_odd, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("REPORT_VERSION", REPORT_VERSION)?;
    m.add("REPORT_SCHEMA", REPORT_SCHEMA)?;
    Ok(())
}
