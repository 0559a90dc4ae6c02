//! Python bindings: cyclotomic tables, cyclotomic integers, roots-of-unity
//! sums and the verification drivers. Reports come back as plain dicts.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyMemoryError, PyNotImplementedError, PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use cyclonum_core::cyclo_integers::{
    mul_mod_phi, norm, norm_bound_general, norm_bound_prime, norm_via_circulant, CycInt,
};
use cyclonum_core::cyclotomy::{brute_force_table, compute_table, make_config, CyclotomicTable};
use cyclonum_core::harness::{
    class_of_two, fermat_check as core_fermat, grid_search, predicted_00, verify_table, FermatMode,
    GridParams,
};
use cyclonum_core::transfer::{check_equivalence, norm_congruence_check};
use cyclonum_core::vanishing_sums::{
    classify_up_to_6, is_minimal, is_vanishing, vanishing_subsums, RootSum,
};
use cyclonum_core::Error;

create_exception!(cyclonum, CounterexampleError, PyException);

fn err(e: Error) -> PyErr {
    match e {
        Error::InvalidArgument(m) => PyValueError::new_err(m),
        Error::ResourceLimit { .. } => PyMemoryError::new_err(e.to_string()),
        Error::UnsupportedCase(m) => PyNotImplementedError::new_err(m),
        Error::Counterexample(m) => CounterexampleError::new_err(m),
        Error::Io(e) => PyOSError::new_err(e.to_string()),
        Error::Json(e) => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match (n.as_u64(), n.as_i64()) {
            (Some(u), _) => u.into_pyobject(py)?.into_any(),
            (None, Some(i)) => i.into_pyobject(py)?.into_any(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => {
            let list = PyList::empty(py);
            for x in a {
                list.append(to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(o) => {
            let dict = PyDict::new(py);
            for (k, x) in o {
                dict.set_item(k, to_py(py, x)?)?;
            }
            dict.into_any()
        }
    })
}

fn json_to_py<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(v).map_err(|e| err(e.into()))?;
    to_py(py, &v)
}

/// The `e x e` table of cyclotomic numbers of `F_q`, `q = p^n`.
#[pyclass(name = "CyclotomicTable", module = "cyclonum", frozen)]
struct PyTable {
    inner: CyclotomicTable,
}

#[pymethods]
impl PyTable {
    #[new]
    #[pyo3(signature = (p, e, n = 1))]
    fn new(p: u64, e: u64, n: u32) -> PyResult<Self> {
        let cfg = make_config(p, n, e).map_err(err)?;
        Ok(PyTable {
            inner: compute_table(&cfg).map_err(err)?,
        })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.config().p()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.config().n()
    }

    #[getter]
    fn q(&self) -> u64 {
        self.inner.config().q()
    }

    #[getter]
    fn e(&self) -> u64 {
        self.inner.config().e()
    }

    #[getter]
    fn k(&self) -> u64 {
        self.inner.config().k()
    }

    /// `(a, b)`, indices taken mod `e`.
    fn get(&self, a: i64, b: i64) -> u64 {
        self.inner.get(a, b)
    }

    fn counts(&self) -> Vec<Vec<u64>> {
        self.inner.counts().to_vec()
    }

    fn total(&self) -> u64 {
        self.inner.total()
    }

    fn max_entry(&self) -> u64 {
        self.inner.max_entry()
    }

    fn to_csv(&self) -> String {
        self.inner.to_csv()
    }

    fn to_pretty(&self) -> String {
        self.inner.to_pretty()
    }

    /// The same table by direct enumeration of all pairs.
    fn brute_force(&self) -> PyTable {
        PyTable {
            inner: brute_force_table(self.inner.config()),
        }
    }

    /// Every applicable bound checked against this table.
    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &verify_table(&self.inner).map_err(err)?)
    }

    /// `(value, premise)` predicted for `(0,0)`.
    fn predicted_00(&self) -> PyResult<(u64, bool)> {
        let p = predicted_00(self.inner.config()).map_err(err)?;
        Ok((p.value, p.premise))
    }

    fn class_of_two(&self) -> PyResult<u64> {
        class_of_two(self.inner.config()).map_err(err)
    }

    fn __repr__(&self) -> String {
        let c = self.inner.config();
        format!("CyclotomicTable(q={}, e={}, k={})", c.q(), c.e(), c.k())
    }
}

/// `f(zeta_k)` for `f` given by its `k` integer coefficients.
#[pyclass(name = "CycInt", module = "cyclonum", frozen)]
struct PyCycInt {
    inner: CycInt,
}

#[pymethods]
impl PyCycInt {
    #[new]
    fn new(k: u64, coeffs: Vec<BigInt>) -> PyResult<Self> {
        Ok(PyCycInt {
            inner: CycInt::new(k, coeffs).map_err(err)?,
        })
    }

    #[getter]
    fn k(&self) -> u64 {
        self.inner.k()
    }

    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.inner.coeffs().to_vec()
    }

    fn norm(&self) -> BigInt {
        norm(&self.inner)
    }

    fn vanishes(&self) -> bool {
        self.inner.vanishes()
    }

    /// The norm through circulant determinants; prime `k` only.
    fn circulant_norm(&self) -> PyResult<BigInt> {
        norm_via_circulant(&self.inner).map_err(err)
    }

    fn general_bound<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let b = norm_bound_general(&self.inner);
        let d = PyDict::new(py);
        d.set_item("norm", &b.norm)?;
        d.set_item("sum_sq", &b.sum_sq)?;
        d.set_item("phi", b.phi)?;
        d.set_item("lhs", &b.lhs)?;
        d.set_item("rhs", &b.rhs)?;
        d.set_item("holds", b.holds)?;
        d.set_item("weak_holds", b.weak_holds)?;
        Ok(d)
    }

    fn prime_bound<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let b = norm_bound_prime(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("norm", &b.norm)?;
        d.set_item("a", &b.a)?;
        d.set_item("coeff_sum", &b.coeff_sum)?;
        d.set_item("bound_num", b.bound.numer())?;
        d.set_item("bound_den", b.bound.denom())?;
        d.set_item("holds", b.holds)?;
        Ok(d)
    }

    fn __mul__(&self, other: &PyCycInt) -> PyResult<PyCycInt> {
        Ok(PyCycInt {
            inner: mul_mod_phi(&self.inner, &other.inner).map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("CycInt({})", self.inner)
    }
}

/// `sum c_i zeta_m^(e_i)` with rational coefficients.
#[pyclass(name = "RootSum", module = "cyclonum", frozen)]
struct PyRootSum {
    inner: RootSum,
}

#[pymethods]
impl PyRootSum {
    /// Integer terms `[(c, e), ...]`.
    #[new]
    fn new(m: u64, terms: Vec<(i64, u64)>) -> PyResult<Self> {
        Ok(PyRootSum {
            inner: RootSum::from_ints(m, &terms).map_err(err)?,
        })
    }

    /// Parses `"c:e,c:e,..."`; coefficients may be written `num/den`.
    #[staticmethod]
    fn parse(m: u64, spec: &str) -> PyResult<Self> {
        Ok(PyRootSum {
            inner: RootSum::parse(m, spec).map_err(err)?,
        })
    }

    #[getter]
    fn m(&self) -> u64 {
        self.inner.m()
    }

    fn exponent(&self) -> u64 {
        self.inner.exponent()
    }

    fn is_vanishing(&self) -> bool {
        is_vanishing(&self.inner)
    }

    fn is_minimal(&self) -> PyResult<bool> {
        is_minimal(&self.inner).map_err(err)
    }

    fn vanishing_subsums(&self) -> PyResult<Vec<Vec<usize>>> {
        vanishing_subsums(&self.inner).map_err(err)
    }

    fn classify(&self) -> PyResult<&'static str> {
        Ok(classify_up_to_6(&self.inner).map_err(err)?.as_str())
    }

    fn rotate(&self, t: u64) -> PyRootSum {
        PyRootSum {
            inner: self.inner.rotate(t),
        }
    }

    fn galois(&self, j: u64) -> PyResult<PyRootSum> {
        Ok(PyRootSum {
            inner: self.inner.galois(j).map_err(err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("RootSum({})", self.inner)
    }
}

/// Residue check for `x^e + y^e` mod `p`; exhaustive unless `samples` is given.
#[pyfunction]
#[pyo3(signature = (p, e, samples = None, seed = 0))]
fn fermat_check<'py>(
    py: Python<'py>,
    p: u64,
    e: u64,
    samples: Option<u64>,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let mode = match samples {
        Some(samples) => FermatMode::Sampled { samples, seed },
        None => FermatMode::Exhaustive,
    };
    json_to_py(py, &core_fermat(p, e, mode).map_err(err)?)
}

/// Compares `f(g^e) = 0` in `F_q` with `f(zeta_k) = 0`.
#[pyfunction]
#[pyo3(signature = (p, e, coeffs, n = 1))]
fn check_transfer<'py>(
    py: Python<'py>,
    p: u64,
    e: u64,
    coeffs: Vec<BigInt>,
    n: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = make_config(p, n, e).map_err(err)?;
    let f = CycInt::new(cfg.k(), coeffs).map_err(err)?;
    let eq = check_equivalence(&cfg, &f).map_err(err)?;
    let divisible = if eq.fq_zero {
        Some(norm_congruence_check(&cfg, &f).map_err(err)?)
    } else {
        None
    };
    let mut v = serde_json::to_value(&eq).map_err(|e| err(e.into()))?;
    v["norm_divisible"] = divisible.into();
    to_py(py, &v)
}

/// Verification reports for every configuration with `q <= q_max`,
/// `k <= k_max`, in enumeration order.
#[pyfunction]
#[pyo3(signature = (q_max, k_max, p_max = None, jobs = 1))]
fn verify_grid<'py>(
    py: Python<'py>,
    q_max: u64,
    k_max: u64,
    p_max: Option<u64>,
    jobs: usize,
) -> PyResult<Bound<'py, PyList>> {
    let mut params = GridParams::new(q_max, k_max);
    params.p_max = p_max.unwrap_or(q_max);
    params.jobs = jobs;
    params.keep_going = true;
    let mut reports = Vec::new();
    grid_search(&params, None, |r| {
        reports.push(serde_json::to_value(r)?);
        Ok(())
    })
    .map_err(err)?;
    let out = PyList::empty(py);
    for r in &reports {
        out.append(to_py(py, r)?)?;
    }
    Ok(out)
}

#[pymodule]
fn cyclonum(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTable>()?;
    m.add_class::<PyCycInt>()?;
    m.add_class::<PyRootSum>()?;
    m.add_function(wrap_pyfunction!(fermat_check, m)?)?;
    m.add_function(wrap_pyfunction!(check_transfer, m)?)?;
    m.add_function(wrap_pyfunction!(verify_grid, m)?)?;
    m.add("CounterexampleError", m.py().get_type::<CounterexampleError>())?;
    Ok(())
}
