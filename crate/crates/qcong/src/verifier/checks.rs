//! Assembly and judgement of the individual congruence checks.
//!
//! Every polynomial claim is assembled as two full rational-function sides
//! plus a modulus and judged by [`congruence_remainder`]; neither side is
//! simplified first. Integer claims (the q -> 1 specializations) carry
//! integer sides and the modulus p^2.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numtheory::{
    big_mod, binomial, euler_quotient_int, fermat_quotient_int, floor_sum_half, is_prime,
    legendre_gauss, mod_inverse, residue_set,
};
use crate::polyring::{congruence_remainder, IntPoly, Modulus, RatFunc};
use crate::qobjects::{q_binomial, q_int, QBinomialSpec};
use crate::quotients::{eq_star_forms, q_fermat_quotient};

use super::{CaseReport, CaseStatus, ClaimId, SkipReason};

/// Range bound for the elementary congruence families when run in a suite.
pub const ELEMENTARY_J_MAX_DEFAULT: u64 = 8;

/// Mutation applied to the left side of a claim's primary congruence, for
/// soundness probes of the framework.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Perturbation {
    None,
    /// Add the modulus; must preserve the verdict.
    AddModulus,
    /// Add 1; must break a holding congruence.
    AddOne,
}

enum Subcheck {
    Poly {
        lhs: RatFunc,
        rhs: RatFunc,
        modulus: Modulus,
    },
    Int {
        lhs: BigInt,
        rhs: BigInt,
        modulus: BigInt,
    },
    Exact {
        ok: bool,
        mismatches: usize,
    },
}

fn poly_check(lhs: RatFunc, rhs: RatFunc, modulus: Modulus) -> Subcheck {
    Subcheck::Poly { lhs, rhs, modulus }
}

/// `1 / den` as a rational function.
fn inverse(den: IntPoly) -> RatFunc {
    RatFunc::new(IntPoly::one(), den).expect("nonzero denominator")
}

/// `f / den`, encoded by denominator multiplication.
fn div_poly(f: &RatFunc, den: &IntPoly) -> RatFunc {
    RatFunc::new(f.num().clone(), f.den() * den).expect("nonzero denominator")
}

fn rf_sum(terms: impl IntoIterator<Item = RatFunc>) -> RatFunc {
    let mut acc = RatFunc::zero();
    for t in terms {
        acc = &acc + &t;
    }
    acc
}

/// `(q^m; q^m)_{p-1} / (q; q)_{p-1}` as the unreduced factor product.
fn full_ratio(p: u64, m: u64) -> RatFunc {
    let factors = crate::qobjects::ratio_factors(p, m, false).expect("p does not divide m");
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for (n, d) in factors {
        num = &num * &n;
        den = &den * &d;
    }
    RatFunc::new(num, den).expect("nonzero denominator")
}

fn triangular(n: u64) -> u64 {
    n * (n + 1) / 2
}

fn parity_sign(negative: bool) -> i64 {
    if negative {
        -1
    } else {
        1
    }
}

/// Sign, q-power and q-binomial product on the product side of the
/// theorem_1_1 claim, plus the matched integer sign for the q -> 1
/// specialization.
fn theorem_lhs(p: u64, m: u64) -> (RatFunc, i64) {
    let eps_m = legendre_gauss(p, m as i64).expect("p does not divide m");
    let eps_2 = legendre_gauss(p, 2).expect("p is odd");
    let half = m / 2;
    let mut sign = parity_sign(((p - 1) / 2 * half) % 2 == 1) * i64::from(eps_m);
    if (m - 1) % 2 == 1 {
        sign *= i64::from(eps_2);
    }
    let exponent: u64 = 2 * m * (1..=half).map(|k| triangular(k * p / m)).sum::<u64>();
    let mut prod = IntPoly::one();
    for k in 1..=half {
        prod = &prod * &q_binomial(QBinomialSpec::new(p - 1, k * p / m, 2 * m));
    }
    let lhs = RatFunc::from_poly(prod.shifted(exponent as usize).scale(sign));
    (lhs, sign)
}

fn theorem_rhs(p: u64, m: u64) -> RatFunc {
    let set = residue_set(p, m as i64).expect("p does not divide m");
    let half = m / 2;
    let p_q = q_int(p, 1);
    let star = eq_star_forms(p, m).expect("grid point is valid").0;
    let q2 = q_fermat_quotient(p, 2, 1).expect("p is odd");
    let q2m = q_fermat_quotient(p, 2, m).expect("p does not divide 2m");
    let one_minus_qp = &IntPoly::one() - &IntPoly::q_pow(p as usize);

    let t1 = (&RatFunc::from_poly(p_q.clone()) * &star).scale(m as i64);
    let t2 = (&RatFunc::from_poly(q_int(p, m)) * &q2m).scale(2 * half as i64 + 1);
    let t3 = (&RatFunc::from_poly(p_q) * &q2).scale(m as i64);
    let weight = m * (set.members.len() as u64 + 2 * floor_sum_half(p, m));
    let t4 = RatFunc::from_poly(one_minus_qp.scale(BigInt::from(weight)));
    &(&(&(&RatFunc::one() + &t1) + &t2) - &t3) + &t4
}

fn pan_lhs(p: u64, m: u64) -> (RatFunc, i64) {
    let sign = parity_sign(((p - 1) * (m - 1) / 2) % 2 == 1);
    let exponent: u64 = m * (1..m).map(|k| triangular(k * p / m)).sum::<u64>();
    let mut prod = IntPoly::one();
    for k in 1..m {
        prod = &prod * &q_binomial(QBinomialSpec::new(p - 1, k * p / m, m));
    }
    let lhs = RatFunc::from_poly(prod.shifted(exponent as usize).scale(sign));
    (lhs, sign)
}

fn pan_rhs(p: u64, m: u64) -> RatFunc {
    // m * ratio - (m - 1) over the ratio's own denominator
    let ratio = full_ratio(p, m);
    let num = &ratio.num().scale(m as i64) - &ratio.den().scale(m as i64 - 1);
    RatFunc::new(num, ratio.den().clone()).expect("nonzero denominator")
}

/// Right side of the lemma_2_2 claim for one inverse representative.
fn lemma_2_2_rhs(p: u64, m: u64, rep: u64) -> RatFunc {
    let set = residue_set(p, m as i64).expect("p does not divide m");
    let r_size = set.members.len() as i64;
    let q_rep = q_fermat_quotient(p, 2, rep).expect("p does not divide rep");
    let q_base = q_fermat_quotient(p, 2, 1).expect("p is odd");
    let t1 = RatFunc::from_poly(IntPoly::from_ints(&[1, -1]).scale(r_size));
    let t2 = div_poly(&q_rep, &q_int(rep, 1));
    &(&t1 + &t2) - &q_base
}

/// Doubled form of the intermediate identity (both sides multiplied by 2):
/// `2 sum_{j in R} 1/[j]_{q^2}` against
/// `|R| (1 - q^2) + (1 + q^rep) Q_p(2, q^rep) / [rep]_{q^2} - (1 + q) Q_p(2, q)`.
fn lemma_2_2_intermediate(p: u64, m: u64, rep: u64) -> (RatFunc, RatFunc) {
    let set = residue_set(p, m as i64).expect("p does not divide m");
    let lhs = rf_sum(
        set.members
            .iter()
            .map(|&j| inverse(q_int(j, 2)).scale(2)),
    );
    let r_size = set.members.len() as i64;
    let q_rep = q_fermat_quotient(p, 2, rep).expect("p does not divide rep");
    let q_base = q_fermat_quotient(p, 2, 1).expect("p is odd");
    let one_plus_qrep = &IntPoly::one() + &IntPoly::q_pow(rep as usize);
    let t1 = RatFunc::from_poly(IntPoly::from_ints(&[1, 0, -1]).scale(r_size));
    let t2 = div_poly(
        &(&RatFunc::from_poly(one_plus_qrep) * &q_rep),
        &q_int(rep, 2),
    );
    let t3 = &RatFunc::from_poly(IntPoly::from_ints(&[1, 1])) * &q_base;
    let rhs = &(&t1 + &t2) - &t3;
    (lhs, rhs)
}

fn assemble(claim: ClaimId, p: u64, m: u64, j_max: u64) -> Vec<Subcheck> {
    match claim {
        ClaimId::PrerequisiteRatio => {
            vec![poly_check(
                full_ratio(p, m),
                RatFunc::one(),
                Modulus::cyclotomic(p),
            )]
        }
        ClaimId::Lemma2_1 => {
            let lhs = rf_sum((1..=(p - 1) / 2).map(|j| inverse(q_int(j, 2))));
            let q2 = q_fermat_quotient(p, 2, 1).expect("p is odd");
            let rhs = -&(&RatFunc::from_poly(IntPoly::from_ints(&[1, 1])) * &q2);
            vec![poly_check(lhs, rhs, Modulus::cyclotomic(p))]
        }
        ClaimId::Lemma2_2 => {
            let set = residue_set(p, m as i64).expect("p does not divide m");
            let inv = mod_inverse(m as i64, p).expect("p does not divide m");
            let mut checks = Vec::new();
            // the main congruence, re-verified with the shifted
            // representative m' + p, plus the doubled intermediate identity
            for rep in [inv, inv + p] {
                let lhs = rf_sum(
                    set.members
                        .iter()
                        .map(|&j| inverse(q_int(2 * j, 1)).scale(2)),
                );
                checks.push(poly_check(
                    lhs,
                    lemma_2_2_rhs(p, m, rep),
                    Modulus::cyclotomic(p),
                ));
                let (lhs2, rhs2) = lemma_2_2_intermediate(p, m, rep);
                checks.push(poly_check(lhs2, rhs2, Modulus::cyclotomic(p)));
            }
            checks
        }
        ClaimId::Lemma2_3 => {
            let set = residue_set(p, m as i64).expect("p does not divide m");
            let lhs = eq_star_forms(p, m).expect("grid point is valid").1;
            let q2 = q_fermat_quotient(p, 2, 1).expect("p is odd");
            let q2m = q_fermat_quotient(p, 2, m).expect("p does not divide m");
            let floor_terms = rf_sum((1..=(p - 1) / 2).filter_map(|j| {
                let fl = j * m / p;
                if fl == 0 {
                    return None;
                }
                let num = IntPoly::q_pow((2 * j * m) as usize).scale(2 * fl as i64);
                Some(RatFunc::new(num, q_int(2 * j * m, 1)).expect("nonzero"))
            }));
            let r_term =
                RatFunc::from_poly(IntPoly::from_ints(&[1, -1]).scale(set.members.len() as i64));
            let rhs = &(&(&floor_terms + &q2) - &div_poly(&q2m, &q_int(m, 1))) - &r_term;
            vec![poly_check(lhs, rhs, Modulus::cyclotomic(p))]
        }
        ClaimId::Complement => {
            let pos = residue_set(p, m as i64).expect("p does not divide m");
            let neg = residue_set(p, -(m as i64)).expect("p does not divide m");
            let full: Vec<u64> = (1..=(p - 1) / 2).collect();
            let complement: Vec<u64> = full
                .iter()
                .copied()
                .filter(|j| !pos.members.contains(j))
                .collect();
            let mismatches = neg
                .members
                .iter()
                .filter(|j| !complement.contains(j))
                .count()
                + complement
                    .iter()
                    .filter(|j| !neg.members.contains(j))
                    .count();
            vec![Subcheck::Exact {
                ok: mismatches == 0,
                mismatches,
            }]
        }
        ClaimId::Elementary => {
            let p_q = q_int(p, 1);
            let modulus_sq = Modulus::cyclotomic_squared(p);
            let mut checks = Vec::new();
            for j in 1..=j_max {
                if j % p == 0 {
                    continue;
                }
                // 1 + q^p + ... + q^{(j-1)p} = j (mod [p]_q)
                checks.push(poly_check(
                    RatFunc::from_poly(q_int(j, p)),
                    RatFunc::from_int(j),
                    Modulus::cyclotomic(p),
                ));
            }
            for mm in 1..=j_max {
                if mm % p == 0 {
                    continue;
                }
                // [mp]_q / [m]_q = m [p]_q / [m]_q (mod [p]_q^2)
                checks.push(poly_check(
                    RatFunc::new(q_int(mm * p, 1), q_int(mm, 1)).expect("nonzero"),
                    RatFunc::new(p_q.scale(mm as i64), q_int(mm, 1)).expect("nonzero"),
                    modulus_sq.clone(),
                ));
                // 1 - q^{2mp} = 2m (1 - q) [p]_q (mod [p]_q^2)
                let lhs = &IntPoly::one() - &IntPoly::q_pow((2 * mm * p) as usize);
                let rhs = (&IntPoly::from_ints(&[1, -1]) * &p_q).scale(2 * mm as i64);
                checks.push(poly_check(
                    RatFunc::from_poly(lhs),
                    RatFunc::from_poly(rhs),
                    modulus_sq.clone(),
                ));
            }
            checks
        }
        ClaimId::Pan1_4 => {
            vec![poly_check(
                pan_lhs(p, m).0,
                pan_rhs(p, m),
                Modulus::cyclotomic_squared(p),
            )]
        }
        ClaimId::Theorem1_1 => {
            vec![poly_check(
                theorem_lhs(p, m).0,
                theorem_rhs(p, m),
                Modulus::cyclotomic_squared(p),
            )]
        }
        ClaimId::Q1Sun => {
            let eps_m = legendre_gauss(p, m as i64).expect("p does not divide m");
            let half = m / 2;
            let (lhs_poly, sign) = theorem_lhs(p, m);
            let mut lhs_int = BigInt::from(sign);
            for k in 1..=half {
                lhs_int *= binomial(p - 1, p * k / m);
            }
            let rhs_int = BigInt::one()
                + BigInt::from(eps_m)
                    * euler_quotient_int(p, m as i64).expect("coprime")
                    * BigInt::from(m)
                    * BigInt::from(p)
                + BigInt::from(2 * half as i64 + 1 - m as i64)
                    * fermat_quotient_int(p, 2).expect("p is odd")
                    * BigInt::from(p);
            let modulus = BigInt::from(p * p);
            // the q = 1 degeneration of the polynomial sides must reproduce
            // the same integers exactly
            let lhs_eval = lhs_poly.eval_at_one().expect("polynomial side");
            let rhs_eval = theorem_rhs(p, m).eval_at_one().expect("no pole at 1");
            vec![
                Subcheck::Int {
                    lhs: lhs_int.clone(),
                    rhs: rhs_int.clone(),
                    modulus,
                },
                Subcheck::Exact {
                    ok: lhs_eval.to_integer().as_ref() == Some(&lhs_int),
                    mismatches: 1,
                },
                Subcheck::Exact {
                    ok: rhs_eval.to_integer().as_ref() == Some(&rhs_int),
                    mismatches: 1,
                },
            ]
        }
        ClaimId::Q1Granville => {
            let (lhs_poly, sign) = pan_lhs(p, m);
            let mut lhs_int = BigInt::from(sign);
            for k in 1..m {
                lhs_int *= binomial(p - 1, k * p / m);
            }
            let rhs_int = BigInt::from(m).pow(p as u32) - m + 1u32;
            let modulus = BigInt::from(p * p);
            let lhs_eval = lhs_poly.eval_at_one().expect("polynomial side");
            let rhs_eval = pan_rhs(p, m).eval_at_one().expect("no pole at 1");
            vec![
                Subcheck::Int {
                    lhs: lhs_int.clone(),
                    rhs: rhs_int.clone(),
                    modulus,
                },
                Subcheck::Exact {
                    ok: lhs_eval.to_integer().as_ref() == Some(&lhs_int),
                    mismatches: 1,
                },
                Subcheck::Exact {
                    ok: rhs_eval.to_integer().as_ref() == Some(&rhs_int),
                    mismatches: 1,
                },
            ]
        }
    }
}

fn perturb(subchecks: &mut [Subcheck], perturbation: Perturbation) {
    if perturbation == Perturbation::None {
        return;
    }
    for sc in subchecks.iter_mut() {
        match sc {
            Subcheck::Poly { lhs, modulus, .. } => {
                let extra = match perturbation {
                    Perturbation::AddModulus => modulus.poly() * lhs.den(),
                    Perturbation::AddOne => lhs.den().clone(),
                    Perturbation::None => unreachable!(),
                };
                *lhs = RatFunc::new(&lhs.num().clone() + &extra, lhs.den().clone())
                    .expect("nonzero denominator");
                return;
            }
            Subcheck::Int { lhs, modulus, .. } => {
                match perturbation {
                    Perturbation::AddModulus => *lhs += &*modulus,
                    Perturbation::AddOne => *lhs += 1,
                    Perturbation::None => unreachable!(),
                }
                return;
            }
            Subcheck::Exact { .. } => continue,
        }
    }
}

fn judge(claim: ClaimId, p: u64, m: u64, subchecks: Vec<Subcheck>, started: Instant) -> CaseReport {
    let mut max_degree: i64 = 0;
    let mut status = CaseStatus::Pass;
    let mut remainder_nonzero_terms = 0;
    let mut offending_remainder = None;

    for sc in &subchecks {
        match sc {
            Subcheck::Poly { lhs, rhs, modulus } => {
                for poly in [lhs.num(), lhs.den(), rhs.num(), rhs.den()] {
                    let deg = poly.degree().map_or(-1, |d| d as i64);
                    max_degree = max_degree.max(deg);
                }
                if status != CaseStatus::Pass {
                    continue;
                }
                let rem = congruence_remainder(lhs, rhs, modulus);
                if !rem.is_zero() {
                    status = CaseStatus::Fail;
                    remainder_nonzero_terms = rem.nonzero_terms();
                    offending_remainder = Some(rem);
                }
            }
            Subcheck::Int { lhs, rhs, modulus } => {
                if status != CaseStatus::Pass {
                    continue;
                }
                let rem = big_mod(&(lhs - rhs), modulus);
                if !rem.is_zero() {
                    status = CaseStatus::Fail;
                    remainder_nonzero_terms = 1;
                    offending_remainder = Some(IntPoly::constant(rem));
                }
            }
            Subcheck::Exact { ok, mismatches } => {
                if status == CaseStatus::Pass && !ok {
                    status = CaseStatus::Fail;
                    remainder_nonzero_terms = *mismatches;
                }
            }
        }
    }

    CaseReport {
        claim,
        p,
        m,
        status,
        remainder_nonzero_terms,
        max_degree_seen: max_degree,
        elapsed: started.elapsed(),
        offending_remainder,
    }
}

fn skipped(claim: ClaimId, p: u64, m: u64, reason: SkipReason, started: Instant) -> CaseReport {
    CaseReport {
        claim,
        p,
        m,
        status: CaseStatus::Skipped(reason),
        remainder_nonzero_terms: 0,
        max_degree_seen: 0,
        elapsed: started.elapsed(),
        offending_remainder: None,
    }
}

fn run_check(
    claim: ClaimId,
    p: u64,
    m: u64,
    j_max: u64,
    perturbation: Perturbation,
) -> CaseReport {
    let started = Instant::now();
    let m = if claim.per_prime() { 0 } else { m };
    if !is_prime(p) {
        return skipped(claim, p, m, SkipReason::PNotPrime, started);
    }
    if p < 5 {
        return skipped(claim, p, m, SkipReason::PBelowFive, started);
    }
    if !claim.per_prime() {
        if m % p == 0 {
            return skipped(claim, p, m, SkipReason::PDividesM, started);
        }
        let needs_m_at_least_2 = matches!(
            claim,
            ClaimId::Pan1_4 | ClaimId::Theorem1_1 | ClaimId::Q1Sun | ClaimId::Q1Granville
        );
        if needs_m_at_least_2 && m < 2 {
            return skipped(claim, p, m, SkipReason::MOutOfRange, started);
        }
    }
    let mut subchecks = assemble(claim, p, m, j_max);
    perturb(&mut subchecks, perturbation);
    judge(claim, p, m, subchecks, started)
}

/// Dispatches any claim at (p, m); per-prime claims ignore m.
pub fn check_claim(claim: ClaimId, p: u64, m: u64) -> CaseReport {
    run_check(claim, p, m, ELEMENTARY_J_MAX_DEFAULT, Perturbation::None)
}

/// Like [`check_claim`], with the left side of the primary congruence
/// mutated first. Used for soundness probes of the framework.
pub fn check_claim_perturbed(
    claim: ClaimId,
    p: u64,
    m: u64,
    perturbation: Perturbation,
) -> CaseReport {
    run_check(claim, p, m, ELEMENTARY_J_MAX_DEFAULT, perturbation)
}

pub fn check_prerequisite_ratio(p: u64, m: u64) -> CaseReport {
    check_claim(ClaimId::PrerequisiteRatio, p, m)
}

pub fn check_lemma_2_1(p: u64) -> CaseReport {
    check_claim(ClaimId::Lemma2_1, p, 0)
}

pub fn check_lemma_2_2(p: u64, m: u64) -> CaseReport {
    check_claim(ClaimId::Lemma2_2, p, m)
}

pub fn check_lemma_2_3(p: u64, m: u64) -> CaseReport {
    check_claim(ClaimId::Lemma2_3, p, m)
}

pub fn check_complement_identity(p: u64, m: u64) -> CaseReport {
    check_claim(ClaimId::Complement, p, m)
}

pub fn check_elementary_congruences(p: u64, j_max: u64) -> CaseReport {
    run_check(ClaimId::Elementary, p, 0, j_max, Perturbation::None)
}

pub fn check_pan_1_4(p: u64, m: u64) -> CaseReport {
    check_claim(ClaimId::Pan1_4, p, m)
}

pub fn check_theorem_1_1(p: u64, m: u64) -> CaseReport {
    check_claim(ClaimId::Theorem1_1, p, m)
}

pub fn check_q1_sun(p: u64, m: u64) -> CaseReport {
    check_claim(ClaimId::Q1Sun, p, m)
}

pub fn check_q1_granville(p: u64, m: u64) -> CaseReport {
    check_claim(ClaimId::Q1Granville, p, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_pass(r: &CaseReport) {
        assert_eq!(
            r.status,
            CaseStatus::Pass,
            "{} p={} m={} gave {}, remainder terms {}",
            r.claim,
            r.p,
            r.m,
            r.status,
            r.remainder_nonzero_terms
        );
        assert_eq!(r.remainder_nonzero_terms, 0);
    }

    #[test]
    fn prerequisite_examples() {
        assert_pass(&check_prerequisite_ratio(5, 2));
        assert_pass(&check_prerequisite_ratio(7, 10));
        let r = check_prerequisite_ratio(5, 5);
        assert_eq!(r.status, CaseStatus::Skipped(SkipReason::PDividesM));
    }

    #[test]
    fn lemma_2_1_small_primes() {
        assert_pass(&check_lemma_2_1(5));
        assert_pass(&check_lemma_2_1(7));
        assert_pass(&check_lemma_2_1(13));
    }

    #[test]
    fn lemma_2_2_examples() {
        assert_pass(&check_lemma_2_2(5, 2));
        assert_pass(&check_lemma_2_2(7, 3));
        assert_pass(&check_lemma_2_2(11, 10));
    }

    #[test]
    fn lemma_2_3_examples() {
        assert_pass(&check_lemma_2_3(5, 2));
        assert_pass(&check_lemma_2_3(7, 4));
        assert_pass(&check_lemma_2_3(13, 6));
    }

    #[test]
    fn complement_examples() {
        assert_pass(&check_complement_identity(5, 2));
        assert_pass(&check_complement_identity(7, 1));
        assert_pass(&check_complement_identity(11, 7));
    }

    #[test]
    fn elementary_examples() {
        assert_pass(&check_elementary_congruences(5, 8));
        assert_pass(&check_elementary_congruences(7, 8));
    }

    #[test]
    fn pan_examples() {
        assert_pass(&check_pan_1_4(5, 2));
        assert_pass(&check_pan_1_4(7, 3));
        let r = check_pan_1_4(5, 10);
        assert_eq!(r.status, CaseStatus::Skipped(SkipReason::PDividesM));
    }

    #[test]
    fn theorem_examples() {
        assert_pass(&check_theorem_1_1(5, 2));
        assert_pass(&check_theorem_1_1(7, 3));
    }

    #[test]
    fn q1_examples() {
        assert_pass(&check_q1_sun(5, 2));
        assert_pass(&check_q1_sun(7, 6));
        assert_pass(&check_q1_sun(11, 4));
        assert_pass(&check_q1_granville(5, 2));
        assert_pass(&check_q1_granville(7, 2));
        assert_pass(&check_q1_granville(13, 5));
    }

    #[test]
    fn theorem_metamorphic_in_m() {
        // shifting m by 2p leaves the verdict unchanged
        for (p, m, t) in [(5u64, 2u64, 1u64), (5, 2, 2), (7, 3, 1)] {
            let base = check_theorem_1_1(p, m);
            let shifted = check_theorem_1_1(p, m + 2 * p * t);
            assert_eq!(base.status, shifted.status, "p={p} m={m} t={t}");
        }
    }

    #[test]
    fn perturbations_probe_soundness() {
        for (claim, p, m) in [
            (ClaimId::Theorem1_1, 5, 3),
            (ClaimId::Lemma2_1, 7, 0),
            (ClaimId::Q1Sun, 5, 4),
        ] {
            let plus_mod = check_claim_perturbed(claim, p, m, Perturbation::AddModulus);
            assert_eq!(plus_mod.status, CaseStatus::Pass, "{claim} +modulus");
            let plus_one = check_claim_perturbed(claim, p, m, Perturbation::AddOne);
            assert_eq!(plus_one.status, CaseStatus::Fail, "{claim} +1");
            assert!(plus_one.remainder_nonzero_terms > 0);
        }
    }

    #[test]
    fn skip_reasons() {
        let r = check_claim(ClaimId::Theorem1_1, 9, 2);
        assert_eq!(r.status, CaseStatus::Skipped(SkipReason::PNotPrime));
        let r = check_claim(ClaimId::Theorem1_1, 3, 2);
        assert_eq!(r.status, CaseStatus::Skipped(SkipReason::PBelowFive));
        let r = check_claim(ClaimId::Theorem1_1, 5, 1);
        assert_eq!(r.status, CaseStatus::Skipped(SkipReason::MOutOfRange));
    }
}
