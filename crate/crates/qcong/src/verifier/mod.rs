//! Executable checks for each claimed congruence, with aggregation over
//! grids of (p, m) pairs and deterministic reporting.

mod checks;
pub mod selftest;

pub use checks::{
    check_claim, check_claim_perturbed, check_complement_identity,
    check_elementary_congruences, check_lemma_2_1, check_lemma_2_2, check_lemma_2_3,
    check_pan_1_4, check_prerequisite_ratio, check_q1_granville, check_q1_sun,
    check_theorem_1_1, Perturbation, ELEMENTARY_J_MAX_DEFAULT,
};

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use rayon::prelude::*;

use crate::numtheory::is_prime;
use crate::polyring::IntPoly;

/// Identifier of one verifiable claim family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    PrerequisiteRatio,
    Lemma2_1,
    Lemma2_2,
    Lemma2_3,
    Complement,
    Elementary,
    Pan1_4,
    Theorem1_1,
    Q1Sun,
    Q1Granville,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        ClaimId::PrerequisiteRatio,
        ClaimId::Lemma2_1,
        ClaimId::Lemma2_2,
        ClaimId::Lemma2_3,
        ClaimId::Complement,
        ClaimId::Elementary,
        ClaimId::Pan1_4,
        ClaimId::Theorem1_1,
        ClaimId::Q1Sun,
        ClaimId::Q1Granville,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::PrerequisiteRatio => "prerequisite_ratio",
            ClaimId::Lemma2_1 => "lemma_2_1",
            ClaimId::Lemma2_2 => "lemma_2_2",
            ClaimId::Lemma2_3 => "lemma_2_3",
            ClaimId::Complement => "complement",
            ClaimId::Elementary => "elementary",
            ClaimId::Pan1_4 => "pan_1_4",
            ClaimId::Theorem1_1 => "theorem_1_1",
            ClaimId::Q1Sun => "q1_sun",
            ClaimId::Q1Granville => "q1_granville",
        }
    }

    pub fn parse(s: &str) -> Option<ClaimId> {
        ClaimId::ALL.iter().copied().find(|c| c.as_str() == s)
    }

    /// Claims checked once per prime rather than per (p, m) pair.
    pub fn per_prime(self) -> bool {
        matches!(self, ClaimId::Lemma2_1 | ClaimId::Elementary)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Machine-readable reason a case was skipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipReason {
    PDividesM,
    MOutOfRange,
    PNotPrime,
    PBelowFive,
}

impl SkipReason {
    pub fn as_str(self) -> &'static str {
        match self {
            SkipReason::PDividesM => "p_divides_m",
            SkipReason::MOutOfRange => "m_out_of_range",
            SkipReason::PNotPrime => "p_not_prime",
            SkipReason::PBelowFive => "p_below_5",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseStatus {
    Pass,
    Fail,
    Skipped(SkipReason),
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseStatus::Pass => write!(f, "PASS"),
            CaseStatus::Fail => write!(f, "FAIL"),
            CaseStatus::Skipped(r) => write!(f, "SKIPPED({})", r.as_str()),
        }
    }
}

/// Outcome of one claim check at one (p, m).
#[derive(Debug, Clone)]
pub struct CaseReport {
    pub claim: ClaimId,
    pub p: u64,
    /// 0 for per-prime claims.
    pub m: u64,
    pub status: CaseStatus,
    /// Nonzero coefficients of the offending remainder; 0 on PASS/SKIPPED.
    pub remainder_nonzero_terms: usize,
    /// Largest polynomial degree materialized while assembling the sides.
    pub max_degree_seen: i64,
    pub elapsed: Duration,
    /// Full remainder of the first failing congruence, for witness files.
    pub offending_remainder: Option<IntPoly>,
}

impl CaseReport {
    /// The fixed line-record form: field names and order are stable.
    pub fn record_line(&self) -> String {
        format!(
            "claim={} p={} m={} status={} remainder_nonzero_terms={} max_degree_seen={} elapsed_ms={}",
            self.claim,
            self.p,
            self.m,
            self.status,
            self.remainder_nonzero_terms,
            self.max_degree_seen,
            self.elapsed.as_millis()
        )
    }

    /// Everything except the wall-clock field; byte-for-byte deterministic.
    pub fn verdict_line(&self) -> String {
        format!(
            "claim={} p={} m={} status={} remainder_nonzero_terms={} max_degree_seen={}",
            self.claim, self.p, self.m, self.status, self.remainder_nonzero_terms,
            self.max_degree_seen
        )
    }

    pub fn human_line(&self) -> String {
        format!(
            "{:<18} p={:<3} m={:<3} {:<10} ({} ms)",
            self.claim.to_string(),
            self.p,
            self.m,
            self.status.to_string(),
            self.elapsed.as_millis()
        )
    }
}

/// Summary counts over a report sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SuiteSummary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl SuiteSummary {
    pub fn of(reports: &[CaseReport]) -> Self {
        let mut s = SuiteSummary::default();
        for r in reports {
            match r.status {
                CaseStatus::Pass => s.pass += 1,
                CaseStatus::Fail => s.fail += 1,
                CaseStatus::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} passed, {} failed, {} skipped",
            self.pass, self.fail, self.skipped
        )
    }
}

/// Runs the selected claims over the grid. Cases execute concurrently; the
/// report order is canonical (claim, p, m) regardless of scheduling.
pub fn run_suite(grid: &[(u64, u64)], claims: &[ClaimId]) -> Vec<CaseReport> {
    let mut claim_list: Vec<ClaimId> = claims.to_vec();
    claim_list.sort_unstable();
    claim_list.dedup();

    let mut cases: Vec<(ClaimId, u64, u64)> = Vec::new();
    for &claim in &claim_list {
        if claim.per_prime() {
            let mut primes: Vec<u64> = grid.iter().map(|&(p, _)| p).collect();
            primes.sort_unstable();
            primes.dedup();
            cases.extend(primes.into_iter().map(|p| (claim, p, 0)));
        } else {
            let mut pairs: Vec<(u64, u64)> = grid.to_vec();
            pairs.sort_unstable();
            pairs.dedup();
            cases.extend(pairs.into_iter().map(|(p, m)| (claim, p, m)));
        }
    }

    let mut reports: Vec<CaseReport> = cases
        .into_par_iter()
        .map(|(claim, p, m)| check_claim(claim, p, m))
        .collect();
    reports.sort_by_key(|r| (r.claim, r.p, r.m));
    reports
}

/// The fixed verification grid: primes {5,7,11,13} x m in {2..=24}, p not
/// dividing m (82 cases).
pub fn acceptance_grid() -> Vec<(u64, u64)> {
    let mut grid = Vec::new();
    for p in [5u64, 7, 11, 13] {
        for m in 2..=24u64 {
            if m % p != 0 {
                grid.push((p, m));
            }
        }
    }
    grid
}

/// Primes in [lo, hi] that are >= 5.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(5)..=hi).filter(|&p| is_prime(p)).collect()
}

/// Persists the offending remainder of a FAIL report: a header naming the
/// claim, then one coefficient per line in ascending powers.
pub fn write_witness(report: &CaseReport, dir: &Path) -> std::io::Result<Option<PathBuf>> {
    let Some(rem) = &report.offending_remainder else {
        return Ok(None);
    };
    let path = dir.join(format!(
        "witness_{}_{}_{}.txt",
        report.claim, report.p, report.m
    ));
    let mut f = std::fs::File::create(&path)?;
    writeln!(f, "claim: {}", report.claim)?;
    writeln!(f, "p: {}", report.p)?;
    writeln!(f, "m: {}", report.m)?;
    writeln!(f, "# remainder coefficients, ascending powers of q")?;
    for c in rem.coeffs() {
        writeln!(f, "{c}")?;
    }
    Ok(Some(path))
}
