//! Built-in self test: the fixed verification grid, the oracle-pair
//! equivalences, the structural identities, the q -> 1 degenerations, and
//! randomized soundness probes of the congruence framework.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numtheory::{
    big_mod, euler_quotient_int, fermat_quotient_int, legendre_euler, legendre_gauss,
    parity_identity_check, residue_set,
};
use crate::polyring::Rational;
use crate::qobjects::{q_binomial, q_binomial_recurrence, QBinomialSpec};
use crate::quotients::{eq_star_forms, q_euler_quotient, q_fermat_quotient};

use super::{
    acceptance_grid, check_claim_perturbed, run_suite, CaseStatus, ClaimId, Perturbation,
    SuiteSummary,
};

const PRIMES_TO_97: &[u64] = &[
    5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Runs every self-test section, emitting one summary line per section
/// through `out`. Returns true iff everything passed.
pub fn run_selftest(mut out: impl FnMut(&str)) -> bool {
    let grid = acceptance_grid();
    let mut all_ok = true;
    let mut section = |name: &str, ok: bool, detail: String| {
        all_ok &= ok;
        out(&format!(
            "{name}: {} ({detail})",
            if ok { "PASS" } else { "FAIL" }
        ));
    };

    // oracle pair: product formula vs q-Pascal recurrence
    let mut ok = true;
    let mut count = 0;
    for t in 1..=3u64 {
        for n in 0..=30u64 {
            for k in 0..=n {
                let spec = QBinomialSpec::new(n, k, t);
                ok &= q_binomial(spec) == q_binomial_recurrence(spec);
                count += 1;
            }
        }
    }
    section("oracle q_binomial vs recurrence", ok, format!("{count} cases"));

    // oracle pair: Gauss's lemma vs Euler's criterion
    let mut ok = true;
    let mut count = 0;
    for &p in PRIMES_TO_97 {
        for m in 1..p as i64 {
            ok &= legendre_gauss(p, m).unwrap() == legendre_euler(p, m).unwrap();
            count += 1;
        }
    }
    section("oracle legendre gauss vs euler", ok, format!("{count} cases"));

    // oracle pair: both forms of EQ*_p
    let ok = grid.iter().all(|&(p, m)| match eq_star_forms(p, m) {
        Ok((f1, f2)) => f1 == f2,
        Err(_) => false,
    });
    section("oracle eq_star forms", ok, format!("{} grid points", grid.len()));

    // structural identities on the grid
    let ok = grid.iter().all(|&(p, m)| {
        let pos = residue_set(p, m as i64).unwrap();
        let neg = residue_set(p, -(m as i64)).unwrap();
        let mut union: Vec<u64> = pos.members.iter().chain(&neg.members).copied().collect();
        union.sort_unstable();
        let complement_ok = union == (1..=(p - 1) / 2).collect::<Vec<_>>();
        let mut image: Vec<u64> = pos
            .members
            .iter()
            .map(|&j| crate::numtheory::least_residue(-(j as i64) * m as i64, p))
            .chain(
                neg.members
                    .iter()
                    .map(|&j| crate::numtheory::least_residue(j as i64 * m as i64, p)),
            )
            .collect();
        image.sort_unstable();
        let partition_ok = image == (1..=(p - 1) / 2).collect::<Vec<_>>();
        complement_ok && partition_ok && parity_identity_check(p, m).unwrap()
    });
    section("structural identities", ok, format!("{} grid points", grid.len()));

    // Fermat/Euler relation mod p
    let ok = PRIMES_TO_97.iter().all(|&p| {
        let diff = fermat_quotient_int(p, 2).unwrap()
            - BigInt::from(2 * legendre_euler(p, 2).unwrap()) * euler_quotient_int(p, 2).unwrap();
        big_mod(&diff, &BigInt::from(p)).is_zero()
    });
    section(
        "fermat/euler relation",
        ok,
        format!("primes up to {}", PRIMES_TO_97.last().unwrap()),
    );

    // q -> 1 degenerations of the three quotients
    let ok = grid.iter().all(|&(p, m)| {
        let fermat_ok = q_fermat_quotient(p, m, 1).unwrap().eval_at_one().unwrap()
            == Rational::from_int(fermat_quotient_int(p, m as i64).unwrap());
        let euler_ok = q_euler_quotient(p, m, 1).unwrap().eval_at_one().unwrap()
            == Rational::from_int(euler_quotient_int(p, m as i64).unwrap());
        let star_ok = eq_star_forms(p, m).unwrap().0.eval_at_one().unwrap()
            == Rational::from_int(
                BigInt::from(legendre_gauss(p, m as i64).unwrap())
                    * euler_quotient_int(p, m as i64).unwrap(),
            );
        fermat_ok && euler_ok && star_ok
    });
    section("q->1 degenerations", ok, format!("{} grid points", grid.len()));

    // the full grid, every claim family
    let reports = run_suite(&grid, &ClaimId::ALL);
    let summary = SuiteSummary::of(&reports);
    for claim in ClaimId::ALL {
        let family: Vec<_> = reports.iter().filter(|r| r.claim == claim).collect();
        let ok = family
            .iter()
            .all(|r| matches!(r.status, CaseStatus::Pass | CaseStatus::Skipped(_)));
        section(
            &format!("claim {claim}"),
            ok,
            format!("{} cases", family.len()),
        );
    }

    // soundness probes: +modulus keeps PASS, +1 forces FAIL, on three
    // deterministically sampled grid points per congruence family
    let mut state = 0x5eed_c0de_u64;
    let probe_claims: Vec<ClaimId> = ClaimId::ALL
        .into_iter()
        .filter(|c| *c != ClaimId::Complement)
        .collect();
    let mut ok = true;
    let mut count = 0;
    for claim in probe_claims {
        for _ in 0..3 {
            let (p, m) = grid[(splitmix(&mut state) % grid.len() as u64) as usize];
            let kept = check_claim_perturbed(claim, p, m, Perturbation::AddModulus);
            let broken = check_claim_perturbed(claim, p, m, Perturbation::AddOne);
            ok &= kept.status == CaseStatus::Pass && broken.status == CaseStatus::Fail;
            count += 1;
        }
    }
    section("soundness probes", ok, format!("{count} probes"));

    out(&format!("suite: {summary}"));
    all_ok && summary.fail == 0
}
