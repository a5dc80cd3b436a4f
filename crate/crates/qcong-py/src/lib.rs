//! Python bindings for the qcong kernel: exact integer polynomials, formal
//! rational functions, the q-objects and quotients built from them, and the
//! congruence checkers.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qcong::numtheory;
use qcong::polyring::{IntPoly, Modulus, RatFunc};
use qcong::qobjects::{self, QBinomialSpec};
use qcong::quotients;
use qcong::verifier::{self, CaseReport, ClaimId};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Dense integer polynomial in q, ascending coefficients.
#[pyclass(name = "IntPoly", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyIntPoly {
    inner: IntPoly,
}

#[pymethods]
impl PyIntPoly {
    #[new]
    fn new(coeffs: Vec<BigInt>) -> Self {
        PyIntPoly {
            inner: IntPoly::new(coeffs),
        }
    }

    /// Ascending coefficients with no trailing zeros.
    fn coeffs(&self) -> Vec<BigInt> {
        self.inner.coeffs().to_vec()
    }

    /// Degree, or None for the zero polynomial.
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn eval_int(&self, x: BigInt) -> BigInt {
        self.inner.eval_int(&x)
    }

    /// Base change q -> q^t.
    fn inflate(&self, t: usize) -> PyResult<Self> {
        if t < 1 {
            return Err(value_err("inflation exponent must be positive"));
        }
        Ok(PyIntPoly {
            inner: self.inner.inflate(t),
        })
    }

    /// Quotient and remainder modulo a monic polynomial.
    fn divrem_monic(&self, modulus: &PyIntPoly) -> PyResult<(Self, Self)> {
        let (q, r) = self.inner.divrem_monic(&modulus.inner).map_err(value_err)?;
        Ok((PyIntPoly { inner: q }, PyIntPoly { inner: r }))
    }

    fn __add__(&self, rhs: &PyIntPoly) -> Self {
        PyIntPoly {
            inner: &self.inner + &rhs.inner,
        }
    }

    fn __sub__(&self, rhs: &PyIntPoly) -> Self {
        PyIntPoly {
            inner: &self.inner - &rhs.inner,
        }
    }

    fn __mul__(&self, rhs: &PyIntPoly) -> Self {
        PyIntPoly {
            inner: &self.inner * &rhs.inner,
        }
    }

    fn __neg__(&self) -> Self {
        PyIntPoly {
            inner: -&self.inner,
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IntPoly({})", self.inner)
    }
}

/// Formal quotient of two integer polynomials; never reduced.
#[pyclass(name = "RatFunc", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRatFunc {
    inner: RatFunc,
}

#[pymethods]
impl PyRatFunc {
    #[new]
    #[pyo3(signature = (num, den=None))]
    fn new(num: &PyIntPoly, den: Option<&PyIntPoly>) -> PyResult<Self> {
        let den = den.map_or_else(IntPoly::one, |d| d.inner.clone());
        Ok(PyRatFunc {
            inner: RatFunc::new(num.inner.clone(), den).map_err(value_err)?,
        })
    }

    #[getter]
    fn num(&self) -> PyIntPoly {
        PyIntPoly {
            inner: self.inner.num().clone(),
        }
    }

    #[getter]
    fn den(&self) -> PyIntPoly {
        PyIntPoly {
            inner: self.inner.den().clone(),
        }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Value at q = 1 as a reduced (numerator, denominator) pair.
    fn eval_at_one(&self) -> PyResult<(BigInt, BigInt)> {
        let r = self.inner.eval_at_one().map_err(value_err)?;
        Ok((r.num().clone(), r.den().clone()))
    }

    fn inflate(&self, t: usize) -> PyResult<Self> {
        if t < 1 {
            return Err(value_err("inflation exponent must be positive"));
        }
        Ok(PyRatFunc {
            inner: self.inner.inflate(t),
        })
    }

    fn __add__(&self, rhs: &PyRatFunc) -> Self {
        PyRatFunc {
            inner: &self.inner + &rhs.inner,
        }
    }

    fn __sub__(&self, rhs: &PyRatFunc) -> Self {
        PyRatFunc {
            inner: &self.inner - &rhs.inner,
        }
    }

    fn __mul__(&self, rhs: &PyRatFunc) -> Self {
        PyRatFunc {
            inner: &self.inner * &rhs.inner,
        }
    }

    fn __truediv__(&self, rhs: &PyRatFunc) -> PyResult<Self> {
        Ok(PyRatFunc {
            inner: self.inner.div(&rhs.inner).map_err(value_err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RatFunc({})", self.inner)
    }
}

/// The Gauss-lemma set R_p(m) with its statistics.
#[pyclass(name = "ResidueSet")]
struct PyResidueSet {
    inner: numtheory::ResidueSet,
}

#[pymethods]
impl PyResidueSet {
    #[getter]
    fn p(&self) -> u64 {
        self.inner.p
    }

    #[getter]
    fn m(&self) -> i64 {
        self.inner.m
    }

    #[getter]
    fn members(&self) -> Vec<u64> {
        self.inner.members.clone()
    }

    #[getter]
    fn sigma(&self) -> u64 {
        self.inner.sigma
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyfunction]
#[pyo3(signature = (n, t=1))]
fn q_int(n: u64, t: u64) -> PyIntPoly {
    PyIntPoly {
        inner: qobjects::q_int(n, t),
    }
}

#[pyfunction]
fn q_pochhammer(a: u64, n: u64) -> PyIntPoly {
    PyIntPoly {
        inner: qobjects::q_pochhammer(a, n),
    }
}

#[pyfunction]
#[pyo3(signature = (n, k, t=1))]
fn q_binomial(n: u64, k: u64, t: u64) -> PyIntPoly {
    PyIntPoly {
        inner: qobjects::q_binomial(QBinomialSpec::new(n, k, t)),
    }
}

#[pyfunction]
#[pyo3(signature = (n, k, t=1))]
fn q_binomial_recurrence(n: u64, k: u64, t: u64) -> PyIntPoly {
    PyIntPoly {
        inner: qobjects::q_binomial_recurrence(QBinomialSpec::new(n, k, t)),
    }
}

#[pyfunction]
fn least_residue(x: i64, p: u64) -> u64 {
    numtheory::least_residue(x, p)
}

#[pyfunction]
fn residue_set(p: u64, m: i64) -> PyResult<PyResidueSet> {
    Ok(PyResidueSet {
        inner: numtheory::residue_set(p, m).map_err(value_err)?,
    })
}

#[pyfunction]
fn legendre_gauss(p: u64, m: i64) -> PyResult<i32> {
    numtheory::legendre_gauss(p, m).map_err(value_err)
}

#[pyfunction]
fn legendre_euler(p: u64, m: i64) -> PyResult<i32> {
    numtheory::legendre_euler(p, m).map_err(value_err)
}

#[pyfunction]
fn mod_inverse(m: i64, p: u64) -> PyResult<u64> {
    numtheory::mod_inverse(m, p).map_err(value_err)
}

#[pyfunction]
fn floor_sum_half(p: u64, m: u64) -> u64 {
    numtheory::floor_sum_half(p, m)
}

#[pyfunction]
fn fermat_quotient(p: u64, m: i64) -> PyResult<BigInt> {
    numtheory::fermat_quotient_int(p, m).map_err(value_err)
}

#[pyfunction]
fn euler_quotient(p: u64, m: i64) -> PyResult<BigInt> {
    numtheory::euler_quotient_int(p, m).map_err(value_err)
}

#[pyfunction]
fn parity_identity_check(p: u64, m: u64) -> PyResult<bool> {
    numtheory::parity_identity_check(p, m).map_err(value_err)
}

#[pyfunction]
fn is_prime(n: u64) -> bool {
    numtheory::is_prime(n)
}

#[pyfunction]
#[pyo3(signature = (p, m, base=1))]
fn q_fermat_quotient(p: u64, m: u64, base: u64) -> PyResult<PyRatFunc> {
    Ok(PyRatFunc {
        inner: quotients::q_fermat_quotient(p, m, base).map_err(value_err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (p, m, base=1))]
fn q_euler_quotient(p: u64, m: u64, base: u64) -> PyResult<PyRatFunc> {
    Ok(PyRatFunc {
        inner: quotients::q_euler_quotient(p, m, base).map_err(value_err)?,
    })
}

#[pyfunction]
fn eq_star(p: u64, m: u64) -> PyResult<PyRatFunc> {
    Ok(PyRatFunc {
        inner: quotients::eq_star(p, m).map_err(value_err)?,
    })
}

/// Congruence of two rational functions modulo `[p]_q^power`.
#[pyfunction]
#[pyo3(signature = (a, b, p, power=1))]
fn is_congruent(a: &PyRatFunc, b: &PyRatFunc, p: u64, power: u32) -> PyResult<bool> {
    if !numtheory::is_prime(p) {
        return Err(value_err(format!("modulus requires a prime, got {p}")));
    }
    if power < 1 {
        return Err(value_err("power must be positive"));
    }
    let modulus = Modulus::cyclotomic_power(p, power);
    Ok(qcong::polyring::is_congruent(&a.inner, &b.inner, &modulus))
}

fn report_dict<'py>(py: Python<'py>, r: &CaseReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("claim", r.claim.as_str())?;
    d.set_item("p", r.p)?;
    d.set_item("m", r.m)?;
    d.set_item("status", r.status.to_string())?;
    d.set_item("remainder_nonzero_terms", r.remainder_nonzero_terms)?;
    d.set_item("max_degree_seen", r.max_degree_seen)?;
    d.set_item("elapsed_ms", r.elapsed.as_millis() as u64)?;
    Ok(d)
}

fn parse_claim(claim: &str) -> PyResult<ClaimId> {
    ClaimId::parse(claim).ok_or_else(|| {
        let known: Vec<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
        value_err(format!("unknown claim '{claim}'; known: {}", known.join(", ")))
    })
}

/// Run one claim check; returns a report dict.
#[pyfunction]
fn check_claim<'py>(py: Python<'py>, claim: &str, p: u64, m: u64) -> PyResult<Bound<'py, PyDict>> {
    let report = verifier::check_claim(parse_claim(claim)?, p, m);
    report_dict(py, &report)
}

/// Run several claims over a grid of (p, m) pairs; returns report dicts in
/// canonical order.
#[pyfunction]
fn run_suite<'py>(
    py: Python<'py>,
    claims: Vec<String>,
    grid: Vec<(u64, u64)>,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let claims: Vec<ClaimId> = claims
        .iter()
        .map(|c| parse_claim(c))
        .collect::<PyResult<_>>()?;
    verifier::run_suite(&grid, &claims)
        .iter()
        .map(|r| report_dict(py, r))
        .collect()
}

/// The fixed verification grid: primes {5,7,11,13} x m in 2..=24, p not
/// dividing m.
#[pyfunction]
fn acceptance_grid() -> Vec<(u64, u64)> {
    verifier::acceptance_grid()
}

#[pyfunction]
fn claim_ids() -> Vec<&'static str> {
    ClaimId::ALL.iter().map(|c| c.as_str()).collect()
}

#[pymodule]
fn qcong_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIntPoly>()?;
    m.add_class::<PyRatFunc>()?;
    m.add_class::<PyResidueSet>()?;
    m.add_function(wrap_pyfunction!(q_int, m)?)?;
    m.add_function(wrap_pyfunction!(q_pochhammer, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(least_residue, m)?)?;
    m.add_function(wrap_pyfunction!(residue_set, m)?)?;
    m.add_function(wrap_pyfunction!(legendre_gauss, m)?)?;
    m.add_function(wrap_pyfunction!(legendre_euler, m)?)?;
    m.add_function(wrap_pyfunction!(mod_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(floor_sum_half, m)?)?;
    m.add_function(wrap_pyfunction!(fermat_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(euler_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(parity_identity_check, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(q_fermat_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(q_euler_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(eq_star, m)?)?;
    m.add_function(wrap_pyfunction!(is_congruent, m)?)?;
    m.add_function(wrap_pyfunction!(check_claim, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(acceptance_grid, m)?)?;
    m.add_function(wrap_pyfunction!(claim_ids, m)?)?;
    Ok(())
}
