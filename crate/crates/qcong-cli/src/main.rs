//! `qcong` — verify q-binomial congruences, inspect the underlying objects,
//! and run the built-in self test.
//!
//! Exit status: 0 when nothing failed, 1 when any check failed, 2 on usage
//! errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qcong::numtheory::{is_prime, residue_set};
use qcong::qobjects::{q_binomial, QBinomialSpec};
use qcong::quotients::{eq_star, q_euler_quotient, q_fermat_quotient};
use qcong::verifier::{
    primes_in_range, run_suite, write_witness, CaseStatus, ClaimId, SuiteSummary,
};

#[derive(Parser)]
#[command(name = "qcong", version, about = "Exact verification of q-binomial congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run claim checkers over a grid of primes p and integers m.
    Verify(VerifyArgs),
    /// Print one of the constructed objects.
    Show {
        #[command(subcommand)]
        object: ShowObject,
    },
    /// Run the fixed verification grid plus all oracle-pair invariants.
    Selftest,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated claim ids, or "all".
    #[arg(long, default_value = "all")]
    claims: String,
    /// Prime range "A..B" (inclusive); composite values are skipped.
    #[arg(long, default_value = "5..13")]
    p: String,
    /// Integer range "A..B" (inclusive); pairs with p | m are excluded.
    #[arg(long, default_value = "2..24")]
    m: String,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Records,
}

#[derive(Subcommand)]
enum ShowObject {
    /// Gaussian binomial coefficient in base q^t.
    Qbinomial {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// q-Fermat quotient Q_p(m, q^base).
    Qfermat {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        base: u64,
    },
    /// q-Euler quotient EQ_p(m, q^base).
    Qeuler {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        base: u64,
    },
    /// EQ*_p(m, q).
    Eqstar {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
    },
    /// Gauss-lemma residue set R_p(m) with sigma.
    Rset {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: i64,
    },
}

/// Validated verify-run configuration.
struct RunConfig {
    p_range: (u64, u64),
    m_range: (u64, u64),
    claims: Vec<ClaimId>,
    format: Format,
    out: Option<PathBuf>,
    jobs: usize,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("range must look like A..B, got '{s}'"))?;
    let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range start '{lo}'"))?;
    let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range end '{hi}'"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_claims(s: &str) -> Result<Vec<ClaimId>, String> {
    if s.trim() == "all" {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        out.push(ClaimId::parse(part).ok_or_else(|| {
            let known: Vec<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
            format!("unknown claim '{part}'; known: {}", known.join(", "))
        })?);
    }
    if out.is_empty() {
        return Err("no claims selected".into());
    }
    Ok(out)
}

impl RunConfig {
    fn from_args(args: &VerifyArgs) -> Result<Self, String> {
        let p_range = parse_range(&args.p)?;
        let m_range = parse_range(&args.m)?;
        if m_range.0 < 1 {
            return Err("m range must start at 1 or above".into());
        }
        let claims = parse_claims(&args.claims)?;
        let jobs = match args.jobs {
            Some(0) => return Err("--jobs must be positive".into()),
            Some(n) => n,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Ok(RunConfig {
            p_range,
            m_range,
            claims,
            format: args.format,
            out: args.out.clone(),
            jobs,
        })
    }

    fn grid(&self) -> Vec<(u64, u64)> {
        let mut grid = Vec::new();
        for p in primes_in_range(self.p_range.0, self.p_range.1) {
            for m in self.m_range.0..=self.m_range.1 {
                if m % p != 0 {
                    grid.push((p, m));
                }
            }
        }
        grid
    }
}

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let config = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(msg) => return usage_error(&msg),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .expect("thread pool");
    let reports = pool.install(|| run_suite(&config.grid(), &config.claims));

    let mut output = String::new();
    match config.format {
        Format::Records => {
            for r in &reports {
                output.push_str(&r.record_line());
                output.push('\n');
            }
        }
        Format::Human => {
            for r in &reports {
                output.push_str(&r.human_line());
                output.push('\n');
            }
            output.push_str(&format!("{}\n", SuiteSummary::of(&reports)));
        }
    }

    let witness_dir = config
        .out
        .as_ref()
        .and_then(|p| p.parent().map(PathBuf::from))
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or_else(|| PathBuf::from("."));
    for r in &reports {
        if r.status == CaseStatus::Fail {
            match write_witness(r, &witness_dir) {
                Ok(Some(path)) => eprintln!("witness written to {}", path.display()),
                Ok(None) => {}
                Err(e) => eprintln!("could not write witness: {e}"),
            }
        }
    }

    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            print!("{output}");
            let _ = std::io::stdout().flush();
        }
    }

    exit_code_for(&reports)
}

fn exit_code_for(reports: &[qcong::verifier::CaseReport]) -> u8 {
    if reports.iter().any(|r| r.status == CaseStatus::Fail) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn require_valid(p: u64, m: u64) -> Result<(), String> {
    if !is_prime(p) || p < 5 {
        return Err(format!("p must be a prime >= 5, got {p}"));
    }
    if m.is_multiple_of(p) {
        return Err(format!("{p} divides {m}"));
    }
    Ok(())
}

fn require_positive_base(base: u64) -> Result<(), String> {
    if base < 1 {
        Err("--base must be positive".into())
    } else {
        Ok(())
    }
}

fn cmd_show(object: &ShowObject) -> u8 {
    let result: Result<String, String> = match *object {
        ShowObject::Qbinomial { n, k, t } => {
            if t < 1 {
                Err("t must be positive".into())
            } else {
                Ok(q_binomial(QBinomialSpec::new(n, k, t)).to_string())
            }
        }
        ShowObject::Qfermat { p, m, base } => require_valid(p, m)
            .and_then(|()| require_positive_base(base))
            .and_then(|()| {
                q_fermat_quotient(p, m, base)
                    .map(|f| f.to_string())
                    .map_err(|e| e.to_string())
            }),
        ShowObject::Qeuler { p, m, base } => require_valid(p, m)
            .and_then(|()| require_positive_base(base))
            .and_then(|()| {
                q_euler_quotient(p, m, base)
                    .map(|f| f.to_string())
                    .map_err(|e| e.to_string())
            }),
        ShowObject::Eqstar { p, m } => require_valid(p, m).and_then(|()| {
            eq_star(p, m).map(|f| f.to_string()).map_err(|e| e.to_string())
        }),
        ShowObject::Rset { p, m } => {
            if !is_prime(p) || p < 3 {
                Err(format!("p must be an odd prime, got {p}"))
            } else {
                residue_set(p, m)
                    .map(|s| s.to_string())
                    .map_err(|e| e.to_string())
            }
        }
    };
    match result {
        Ok(text) => {
            println!("{text}");
            EXIT_OK
        }
        Err(msg) => usage_error(&msg),
    }
}

fn cmd_selftest() -> u8 {
    let ok = qcong::verifier::selftest::run_selftest(|line| println!("{line}"));
    if ok {
        println!("selftest: PASS");
        EXIT_OK
    } else {
        println!("selftest: FAIL");
        EXIT_FAIL
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Show { object } => cmd_show(object),
        Command::Selftest => cmd_selftest(),
    };
    ExitCode::from(code)
}
