//! The q-objects: q-integers, q-Pochhammer symbols and Gaussian binomial
//! coefficients in arbitrary bases, with two independent construction paths
//! (product formula and q-Pascal recurrence) for cross-validation.

use num_bigint::BigInt;
use num_traits::One;

use crate::numtheory::{least_residue, DividesError};
use crate::polyring::IntPoly;

/// Parameters of a Gaussian binomial coefficient in base `q^t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QBinomialSpec {
    pub n: u64,
    pub k: u64,
    /// Base exponent; the coefficient is a polynomial in `q^t`.
    pub t: u64,
}

impl QBinomialSpec {
    pub fn new(n: u64, k: u64, t: u64) -> Self {
        assert!(t >= 1, "base exponent must be positive");
        QBinomialSpec { n, k, t }
    }
}

/// The q-integer `[n]_{q^t} = 1 + q^t + ... + q^{(n-1)t}`; zero for n = 0.
pub fn q_int(n: u64, t: u64) -> IntPoly {
    assert!(t >= 1);
    if n == 0 {
        return IntPoly::zero();
    }
    let mut coeffs = vec![BigInt::ZERO; ((n - 1) * t + 1) as usize];
    for i in 0..n {
        coeffs[(i * t) as usize] = BigInt::one();
    }
    IntPoly::new(coeffs)
}

/// The q-Pochhammer symbol `(q^a; q^a)_n = prod_{i=1}^{n} (1 - q^{a i})`;
/// the empty product 1 for n = 0.
pub fn q_pochhammer(a: u64, n: u64) -> IntPoly {
    assert!(a >= 1);
    let mut out = IntPoly::one();
    for i in 1..=n {
        let factor = &IntPoly::one() - &IntPoly::q_pow((a * i) as usize);
        out = &out * &factor;
    }
    out
}

/// Gaussian binomial coefficient by the product formula, with an exact
/// division at every step.
///
/// Multiplying by `[n-k+i]_{q^t}` before dividing by `[i]_{q^t}` keeps every
/// intermediate a Gaussian binomial, so each division is exact; a non-exact
/// division is an invariant breach and panics.
pub fn q_binomial(spec: QBinomialSpec) -> IntPoly {
    let QBinomialSpec { n, k, t } = spec;
    if k > n {
        return IntPoly::zero();
    }
    let mut out = IntPoly::one();
    for i in 1..=k {
        out = &out * &q_int(n - k + i, t);
        let (quot, rem) = out
            .divrem_monic(&q_int(i, t))
            .expect("q-integers are monic");
        assert!(
            rem.is_zero(),
            "internal non-exact division in q_binomial({n},{k},{t})"
        );
        out = quot;
    }
    out
}

/// Independent oracle for [`q_binomial`]: the q-Pascal recurrence
/// `C(n,k) = C(n-1,k-1) + q^{tk} C(n-1,k)` with `C(n,0) = 1`.
pub fn q_binomial_recurrence(spec: QBinomialSpec) -> IntPoly {
    let QBinomialSpec { n, k, t } = spec;
    if k > n {
        return IntPoly::zero();
    }
    // row-by-row, keeping entries 0..=k of each row
    let width = k as usize + 1;
    let mut row = vec![IntPoly::zero(); width];
    row[0] = IntPoly::one();
    for _ in 1..=n {
        let mut next = vec![IntPoly::zero(); width];
        next[0] = IntPoly::one();
        for j in 1..width {
            let shifted = row[j].shifted(j * t as usize);
            next[j] = &row[j - 1] + &shifted;
        }
        row = next;
    }
    row[k as usize].clone()
}

/// The factor list `([jm]_q, [j]_q)` for j = 1..p-1 (or j = 1..(p-1)/2 when
/// `half` is set). The product of the factors equals
/// `(q^m; q^m)_{p-1} / (q; q)_{p-1}` (respectively the half-length ratio).
pub fn ratio_factors(
    p: u64,
    m: u64,
    half: bool,
) -> Result<Vec<(IntPoly, IntPoly)>, DividesError> {
    if least_residue(m as i64, p) == 0 {
        return Err(DividesError { p, m: m as i64 });
    }
    let upper = if half { (p - 1) / 2 } else { p - 1 };
    Ok((1..=upper)
        .map(|j| (q_int(j * m, 1), q_int(j, 1)))
        .collect())
}
