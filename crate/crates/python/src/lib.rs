//! Python bindings for the `idempart` crate.
//!
//! Big integers cross the boundary as Python `int`; maps and permutations as
//! lists of 1-based points.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use idempart::action::{BruteForce, DEFAULT_BRUTE_FORCE_MAX};
use idempart::verify::{self, VerifyConfig};
use idempart::{BigNat, TypeVector};

fn err(e: idempart::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn big(v: BigNat) -> BigUint {
    v.as_biguint().clone()
}

fn type_vector(counts: Vec<usize>) -> PyResult<TypeVector> {
    TypeVector::new(counts)
        .ok_or_else(|| PyValueError::new_err("type vector entry exceeds its length"))
}

/// A bijection of [n] in one-line notation.
#[pyclass(
    name = "Permutation",
    module = "idempart_py",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(idempart::Permutation);

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(values: Vec<usize>) -> PyResult<Self> {
        idempart::Permutation::new(values)
            .map(PyPermutation)
            .map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyPermutation(idempart::Permutation::identity(n))
    }

    #[getter]
    fn values(&self) -> Vec<usize> {
        self.0.forward().to_vec()
    }

    fn __call__(&self, x: usize) -> PyResult<usize> {
        if x == 0 || x > self.0.n() {
            return Err(PyValueError::new_err(format!(
                "point {x} outside [1..{}]",
                self.0.n()
            )));
        }
        Ok(self.0.apply(x))
    }

    fn inverse(&self) -> Self {
        PyPermutation(self.0.inverse())
    }

    /// `self ∘ other`.
    fn compose(&self, other: &PyPermutation) -> PyResult<Self> {
        self.0.compose(&other.0).map(PyPermutation).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.forward())
    }
}

/// An idempotent self-map of [n].
#[pyclass(
    name = "Idempotent",
    module = "idempart_py",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyIdempotent(idempart::Idempotent);

#[pymethods]
impl PyIdempotent {
    #[new]
    fn new(values: Vec<usize>) -> PyResult<Self> {
        idempart::Idempotent::from_values(values)
            .map(PyIdempotent)
            .map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn values(&self) -> Vec<usize> {
        self.0.map().values().to_vec()
    }

    #[getter]
    fn image(&self) -> Vec<usize> {
        self.0.image().to_vec()
    }

    fn fiber(&self, x: usize) -> Vec<usize> {
        self.0.fiber(x).to_vec()
    }

    /// Counts of image points by fiber size, indexed from size 1.
    fn type_vector(&self) -> Vec<usize> {
        idempart::type_vector_of(&self.0).counts().to_vec()
    }

    /// `(image, retraction)` with the retraction as a dict.
    fn decompose(&self) -> (Vec<usize>, std::collections::BTreeMap<usize, usize>) {
        idempart::decompose_idempotent(&self.0)
    }

    fn conjugate(&self, sigma: &PyPermutation) -> PyResult<Self> {
        idempart::conjugate_idempotent(&self.0, &sigma.0)
            .map(PyIdempotent)
            .map_err(err)
    }

    fn orbit(&self) -> PyResult<Vec<PyIdempotent>> {
        Ok(idempart::orbit_of(&self.0)
            .map_err(err)?
            .into_iter()
            .map(PyIdempotent)
            .collect())
    }

    fn stabilizer(&self) -> PyResult<Vec<PyPermutation>> {
        Ok(idempart::stabilizer_bruteforce(&self.0)
            .map_err(err)?
            .into_iter()
            .map(PyPermutation)
            .collect())
    }

    fn same_orbit(&self, other: &PyIdempotent) -> PyResult<bool> {
        idempart::same_orbit(&self.0, &other.0).map_err(err)
    }

    /// A permutation conjugating `self` to `other`.
    fn conjugator(&self, other: &PyIdempotent) -> PyResult<PyPermutation> {
        idempart::conjugator(&self.0, &other.0)
            .map(PyPermutation)
            .map_err(err)
    }

    /// Fiber-size classes as `(fiber_size, members)` pairs.
    fn fiber_classes(&self) -> Vec<(usize, Vec<usize>)> {
        idempart::eta_classes(&self.0)
            .into_iter()
            .map(|c| (c.fiber_size(), c.members().to_vec()))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Idempotent({:?})", self.0.map().values())
    }
}

#[pyfunction]
fn assemble_idempotent(
    n: usize,
    image: Vec<usize>,
    retraction: std::collections::BTreeMap<usize, usize>,
) -> PyResult<PyIdempotent> {
    idempart::assemble_idempotent(n, &image, &retraction)
        .map(PyIdempotent)
        .map_err(err)
}

#[pyfunction]
fn factorial(n: u64) -> BigUint {
    big(idempart::factorial(n))
}

#[pyfunction]
fn binomial(n: u64, k: i64) -> BigUint {
    big(idempart::binomial(n, k))
}

#[pyfunction]
fn p_pentagonal(n: usize) -> BigUint {
    big(idempart::p_pentagonal(n))
}

#[pyfunction]
#[pyo3(signature = (n, parallel = false))]
fn p_via_formula(py: Python<'_>, n: usize, parallel: bool) -> PyResult<BigUint> {
    py.detach(|| idempart::formula::p_via_formula_with(n, parallel))
        .map(big)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, parallel = false))]
fn count_orbits_burnside(py: Python<'_>, n: usize, parallel: bool) -> PyResult<BigUint> {
    py.detach(|| BruteForce::default().parallel(parallel).count_orbits(n))
        .map(big)
        .map_err(err)
}

#[pyfunction]
fn enumerate_partitions(n: usize) -> Vec<Vec<usize>> {
    idempart::enumerate_partitions(n)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

#[pyfunction]
fn enumerate_type_vectors(n: usize) -> Vec<Vec<usize>> {
    idempart::enumerate_type_vectors(n)
        .into_iter()
        .map(|g| g.counts().to_vec())
        .collect()
}

#[pyfunction]
fn enumerate_idempotents(n: usize) -> Vec<PyIdempotent> {
    idempart::enumerate_idempotents(n)
        .into_iter()
        .map(PyIdempotent)
        .collect()
}

#[pyfunction]
fn count_idempotents_of_type(n: usize, g: Vec<usize>) -> PyResult<BigUint> {
    idempart::count_idempotents_of_type(n, &type_vector(g)?)
        .map(big)
        .map_err(err)
}

#[pyfunction]
fn stabilizer_order_formula(g: Vec<usize>) -> PyResult<BigUint> {
    Ok(big(idempart::stabilizer_order_formula(&type_vector(g)?)))
}

#[pyfunction]
fn total_idempotents(n: usize) -> BigUint {
    big(idempart::total_idempotents(n))
}

#[pyfunction]
fn cumulative_identity(m: usize) -> (BigUint, BigUint) {
    let (l, r) = idempart::cumulative_identity(m);
    (big(l), big(r))
}

/// Runs the cross-check harness; returns `(name, n, passed, detail)` tuples.
#[pyfunction]
#[pyo3(signature = (exhaustive = 5, formula = 50))]
fn run_checks(
    py: Python<'_>,
    exhaustive: usize,
    formula: usize,
) -> PyResult<Vec<(String, usize, bool, String)>> {
    let cfg = VerifyConfig {
        exhaustive,
        formula,
        ..VerifyConfig::default()
    };
    let outcomes = py
        .detach(|| verify::run(&cfg, BruteForce::new(DEFAULT_BRUTE_FORCE_MAX)))
        .map_err(err)?;
    Ok(outcomes
        .into_iter()
        .map(|o| (o.name.to_string(), o.n, o.passed, o.detail))
        .collect())
}

#[pymodule]
fn idempart_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyIdempotent>()?;
    m.add_function(wrap_pyfunction!(assemble_idempotent, m)?)?;
    m.add_function(wrap_pyfunction!(factorial, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(p_pentagonal, m)?)?;
    m.add_function(wrap_pyfunction!(p_via_formula, m)?)?;
    m.add_function(wrap_pyfunction!(count_orbits_burnside, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_type_vectors, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_idempotents, m)?)?;
    m.add_function(wrap_pyfunction!(count_idempotents_of_type, m)?)?;
    m.add_function(wrap_pyfunction!(stabilizer_order_formula, m)?)?;
    m.add_function(wrap_pyfunction!(total_idempotents, m)?)?;
    m.add_function(wrap_pyfunction!(cumulative_identity, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    Ok(())
}
