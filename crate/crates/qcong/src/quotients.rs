//! The q-Fermat quotient Q_p(m,q), the q-Euler quotient EQ_p(m,q), and the
//! symmetrized variant EQ*_p(m,q), built as formal rational functions with
//! their defining prerequisites verified before any division by `[p]_q`.
//!
//! Division by `[p]_{q^t}` is denominator multiplication: the returned
//! fractions carry the q-integer in the denominator and are never reduced.
//! Base changes construct at base q and inflate, which is exact because
//! inflation is a ring morphism.

use thiserror::Error;

use crate::numtheory::{
    legendre_euler, legendre_gauss, residue_set, DividesError,
};
use crate::polyring::{coprimality_check, IntPoly, RatFunc};
use crate::qobjects::{q_int, ratio_factors};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error(transparent)]
    Divides(#[from] DividesError),
    /// The defining congruence failed before dividing by `[p]_q`; cannot
    /// happen for prime p and p not dividing m.
    #[error("prerequisite congruence failed for p={p}, m={m}, base={base}")]
    PrerequisiteFailed { p: u64, m: u64, base: u64 },
    /// The two defining forms of EQ*_p disagree; cannot happen, since
    /// `[p]_{q^2} = [p]_q (1 + q^p) / (1 + q)`.
    #[error("the two forms of EQ*_p disagree for p={p}, m={m}")]
    FormsDisagree { p: u64, m: u64 },
}

fn product(factors: impl Iterator<Item = IntPoly>) -> IntPoly {
    let mut out = IntPoly::one();
    for f in factors {
        out = &out * &f;
    }
    out
}

/// Numerator and denominator of `(q^m; q^m)_{p-1} / (q; q)_{p-1}` as the
/// product of the factors `[jm]_q / [j]_q`.
fn full_ratio_parts(p: u64, m: u64) -> Result<(IntPoly, IntPoly), DividesError> {
    let factors = ratio_factors(p, m, false)?;
    let num = product(factors.iter().map(|(n, _)| n.clone()));
    let den = product(factors.iter().map(|(_, d)| d.clone()));
    Ok((num, den))
}

fn half_ratio_parts(p: u64, m: u64) -> Result<(IntPoly, IntPoly), DividesError> {
    let factors = ratio_factors(p, m, true)?;
    let num = product(factors.iter().map(|(n, _)| n.clone()));
    let den = product(factors.iter().map(|(_, d)| d.clone()));
    Ok((num, den))
}

/// The q-Fermat quotient in base `q^base`:
///
/// ```text
/// Q_p(m, q^t) = ((q^{mt}; q^{mt})_{p-1} / (q^t; q^t)_{p-1} - 1) / [p]_{q^t}
/// ```
///
/// The ratio is verified to be congruent to 1 modulo `[p]_{q^base}` before
/// the division is encoded.
pub fn q_fermat_quotient(p: u64, m: u64, base: u64) -> Result<RatFunc, QuotientError> {
    let (num, den) = full_ratio_parts(p, m)?;
    let deviation = (&num - &den).inflate(base as usize);
    let den = den.inflate(base as usize);
    let p_qt = q_int(p, base);
    if !deviation
        .rem_monic(&p_qt)
        .expect("q-integer is monic")
        .is_zero()
    {
        return Err(QuotientError::PrerequisiteFailed { p, m, base });
    }
    Ok(RatFunc::new(deviation, &den * &p_qt).expect("nonzero denominator"))
}

/// The q-Euler quotient in base `q^base`:
///
/// ```text
/// EQ_p(m, q^t) = (q^{t sigma} (q^{mt}; q^{mt})_{(p-1)/2} / (q^t; q^t)_{(p-1)/2} - (m/p)) / [p]_{q^t}
/// ```
///
/// with `sigma = sum_{j in R_p(m)} (p - <jm>_p)`. The shifted half-ratio is
/// verified congruent to the Legendre symbol modulo `[p]_{q^base}` first.
/// The Legendre symbol is computed by both Gauss's lemma and Euler's
/// criterion; disagreement is a hard failure.
pub fn q_euler_quotient(p: u64, m: u64, base: u64) -> Result<RatFunc, QuotientError> {
    let set = residue_set(p, m as i64)?;
    let eps = legendre_gauss(p, m as i64)?;
    assert_eq!(
        eps,
        legendre_euler(p, m as i64)?,
        "Legendre symbol oracles disagree at p={p}, m={m}"
    );
    let (hn, hd) = half_ratio_parts(p, m)?;
    let deviation =
        (&hn.shifted(set.sigma as usize) - &hd.scale(eps)).inflate(base as usize);
    let hd = hd.inflate(base as usize);
    let p_qt = q_int(p, base);
    if !deviation
        .rem_monic(&p_qt)
        .expect("q-integer is monic")
        .is_zero()
    {
        return Err(QuotientError::PrerequisiteFailed { p, m, base });
    }
    Ok(RatFunc::new(deviation, &hd * &p_qt).expect("nonzero denominator"))
}

/// Both defining forms of EQ*_p(m, q):
///
/// ```text
/// EQ*_p(m,q) = (m/p) (1 + q^p) EQ_p(m, q^2) / (1 + q)
///            = ((m/p) q^{2 sigma} (q^{2m}; q^{2m})_{(p-1)/2} / (q^2; q^2)_{(p-1)/2} - 1) / [p]_q
/// ```
pub fn eq_star_forms(p: u64, m: u64) -> Result<(RatFunc, RatFunc), QuotientError> {
    let eps = legendre_gauss(p, m as i64)?;
    let eq2 = q_euler_quotient(p, m, 2)?;
    let one_plus_qp = &IntPoly::one() + &IntPoly::q_pow(p as usize);
    let one_plus_q = IntPoly::from_ints(&[1, 1]);
    let form1 = RatFunc::new(
        (&one_plus_qp * eq2.num()).scale(eps),
        &one_plus_q * eq2.den(),
    )
    .expect("nonzero denominator");

    let set = residue_set(p, m as i64)?;
    let (hn, hd) = half_ratio_parts(p, m)?;
    let ihn = hn.inflate(2);
    let ihd = hd.inflate(2);
    let num2 = &ihn.shifted(2 * set.sigma as usize).scale(eps) - &ihd;
    let form2 =
        RatFunc::new(num2, &ihd * &q_int(p, 1)).expect("nonzero denominator");

    if form1 != form2 {
        return Err(QuotientError::FormsDisagree { p, m });
    }
    Ok((form1, form2))
}

/// EQ*_p(m, q), returned in its first defining form after checking that
/// both forms agree.
pub fn eq_star(p: u64, m: u64) -> Result<RatFunc, QuotientError> {
    Ok(eq_star_forms(p, m)?.0)
}

/// The triple (Q_p, EQ_p, EQ*_p) at base q, with the shared integer data.
#[derive(Debug, Clone)]
pub struct QuotientBundle {
    pub p: u64,
    pub m: u64,
    pub q_fermat: RatFunc,
    pub q_euler: RatFunc,
    pub eq_star: RatFunc,
    pub legendre: i32,
    pub sigma: u64,
}

impl QuotientBundle {
    pub fn build(p: u64, m: u64) -> Result<Self, QuotientError> {
        let q_fermat = q_fermat_quotient(p, m, 1)?;
        let q_euler = q_euler_quotient(p, m, 1)?;
        let eq_star = eq_star(p, m)?;
        let set = residue_set(p, m as i64)?;
        let legendre = legendre_gauss(p, m as i64)?;
        // each denominator is (coprime cofactor) * [p]-power; check the
        // cofactor by stripping the known radical content
        for den in [q_fermat.den(), q_euler.den(), eq_star.den()] {
            let mut cofactor = den.clone();
            loop {
                let (quot, rem) = cofactor.divrem_monic(&q_int(p, 1)).expect("monic");
                if !rem.is_zero() {
                    break;
                }
                cofactor = quot;
            }
            assert!(
                coprimality_check(&cofactor, p),
                "denominator cofactor shares a factor with [p]_q at p={p}, m={m}"
            );
        }
        Ok(QuotientBundle {
            p,
            m,
            q_fermat,
            q_euler,
            eq_star,
            legendre,
            sigma: set.sigma,
        })
    }
}
