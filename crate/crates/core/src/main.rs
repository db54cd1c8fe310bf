use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cyclomahonian::bijection::{exhaustive_check, word_to_pair_traced};
use cyclomahonian::cyclotomic::CycRing;
use cyclomahonian::error::Error;
use cyclomahonian::identities::{parse_suites, run_matrix, MatrixConfig};
use cyclomahonian::permstat::{
    coinv, des, euler_mahonian_with, inv, maj, maxw, sumt, EnumOptions, Word,
    DEFAULT_ENUMERATION_CAP, EXTENDED_ENUMERATION_CAP,
};

/// Euler–Mahonian polynomials at roots of unity, with exact identity checks.
#[derive(Parser)]
#[command(name = "cyclomahonian", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print A_n(t,q,p), optionally with p = ξ_m and t or q set to 1.
    Poly(PolyArgs),
    /// Run identity suites and report each check.
    Verify(VerifyArgs),
    /// Trace the word ↔ (permutation, partition) bijection or sweep all small words.
    Bijection(BijectionArgs),
}

#[derive(Args)]
struct Common {
    /// Worker threads; output does not depend on this.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    /// Also write standard output to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    n: usize,
    /// Substitute p = ξ_m; p stays symbolic when absent.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: Option<u32>,
    /// Set t = 1.
    #[arg(long)]
    t1: bool,
    /// Set q = 1.
    #[arg(long)]
    q1: bool,
    /// Permit n = 10.
    #[arg(long)]
    allow_n10: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated suite names, or `all`.
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6")]
    m_set: Vec<u32>,
    /// Series are compared through t^TRUNC.
    #[arg(long, env = "CYCLOMAHONIAN_TRUNC", default_value_t = 12)]
    trunc: usize,
    /// Largest ℓ for the `util` suite.
    #[arg(long, default_value_t = 4)]
    ell_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Permit n_max = 10.
    #[arg(long)]
    allow_n10: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BijectionArgs {
    /// Comma-separated letters, e.g. 4,5,4,1,2,2,2,5.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["n", "exhaustive"])]
    word: Option<Vec<u32>>,
    /// Word length for the sweep.
    #[arg(long, requires = "exhaustive")]
    n: Option<usize>,
    #[arg(long, default_value_t = 5)]
    max_letter: u32,
    /// Check every word of length n over 0..=max-letter.
    #[arg(long, requires = "n")]
    exhaustive: bool,
    #[command(flatten)]
    common: Common,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Poly(a) => (&a.common, cmd_poly(a)),
        Command::Verify(a) => (&a.common, cmd_verify(a)),
        Command::Bijection(a) => (&a.common, cmd_bijection(a)),
    };
    match result {
        Ok((text, outcome)) => {
            print!("{text}");
            if let Some(path) = &common.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            match outcome {
                Outcome::Pass => ExitCode::SUCCESS,
                Outcome::Fail => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cap(allow_n10: bool) -> usize {
    if allow_n10 {
        EXTENDED_ENUMERATION_CAP
    } else {
        DEFAULT_ENUMERATION_CAP
    }
}

fn cmd_poly(a: &PolyArgs) -> Result<(String, Outcome), Error> {
    let opts = EnumOptions {
        cap: cap(a.allow_n10),
        jobs: a.common.jobs as usize,
    };
    let mut poly = euler_mahonian_with(a.n, &opts)?;
    if a.t1 {
        poly = poly.at_t_one();
    }
    if a.q1 {
        poly = poly.at_q_one();
    }
    let text = match a.m {
        Some(m) => poly.specialize(&CycRing::new(m)).render(),
        None => poly.render(),
    };
    Ok((format!("{text}\n"), Outcome::Pass))
}

fn cmd_verify(a: &VerifyArgs) -> Result<(String, Outcome), Error> {
    let suites = parse_suites(&a.suite)?;
    if suites.is_empty() {
        return Err(Error::Domain("no suites selected".into()));
    }
    let config = MatrixConfig {
        n_max: a.n_max,
        m_set: a.m_set.clone(),
        trunc: a.trunc,
        ell_max: a.ell_max,
        jobs: a.common.jobs as usize,
        allow_n10: a.allow_n10,
    };
    let reports = run_matrix(&suites, &config)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut out = String::new();
    match a.format {
        Format::Json => {
            for r in &reports {
                writeln!(out, "{}", r.to_json()).unwrap();
            }
        }
        Format::Table => {
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                write!(out, "{status}  {:<14} {}", r.suite.name(), r.params_text()).unwrap();
                if let Some(mm) = &r.first_mismatch {
                    write!(
                        out,
                        "  first mismatch at t^{} q^{}: {} vs {}",
                        mm.t_degree, mm.q_degree, mm.lhs_coeff, mm.rhs_coeff
                    )
                    .unwrap();
                }
                out.push('\n');
            }
            writeln!(out, "{} checks, {} failed", reports.len(), failed).unwrap();
        }
    }
    let outcome = if failed == 0 {
        Outcome::Pass
    } else {
        Outcome::Fail
    };
    Ok((out, outcome))
}

fn digits(xs: impl IntoIterator<Item = u64>) -> String {
    let xs: Vec<u64> = xs.into_iter().collect();
    let sep = if xs.iter().any(|&x| x >= 10) { " " } else { "" };
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn cmd_bijection(a: &BijectionArgs) -> Result<(String, Outcome), Error> {
    let mut out = String::new();
    if let Some(letters) = &a.word {
        let w = Word(letters.clone());
        let tr = word_to_pair_traced(&w)?;
        let row = |name: &str, v: String| format!("{name:<7}{v}\n");
        out += &row("w", w.to_string());
        out += &row("wbar", tr.wbar.to_string());
        out += &row("sigma", tr.sigma.to_string());
        out += &row("z", digits(tr.z.iter().map(|&x| u64::from(x))));
        out += &row("mu", digits(tr.mu.iter().map(|&x| u64::from(x))));
        out += &row("lambda", tr.lambda.to_string());
        let (p1l, p1a, p1b) = (maxw(&w) as usize, des(&tr.sigma), tr.lambda.len());
        let (p2l, p2a, p2b) = (sumt(&w), maj(&tr.sigma) as u64, tr.lambda.size());
        let (p3l, p3r) = (coinv(&w), inv(&tr.sigma));
        writeln!(out, "P1 maxw = des + len:  {p1l}={p1a}+{p1b}").unwrap();
        writeln!(out, "P2 sumt = maj + size: {p2l}={p2a}+{p2b}").unwrap();
        writeln!(out, "P3 coinv = inv:       {p3l}={p3r}").unwrap();
        let ok = p1l == p1a + p1b && p2l == p2a + p2b && p3l == p3r;
        return Ok((out, if ok { Outcome::Pass } else { Outcome::Fail }));
    }
    let (Some(n), true) = (a.n, a.exhaustive) else {
        return Err(Error::Domain(
            "give --word, or --n with --exhaustive".into(),
        ));
    };
    let summary = exhaustive_check(n, a.max_letter, a.common.jobs as usize)?;
    if summary.passed() {
        writeln!(out, "{} words, all pass", summary.words).unwrap();
        return Ok((out, Outcome::Pass));
    }
    writeln!(
        out,
        "{} words, {} failing{}",
        summary.words,
        summary.failures.len(),
        if summary.injective {
            ""
        } else {
            ", not injective"
        }
    )
    .unwrap();
    for f in &summary.failures {
        writeln!(out, "{}: {}", f.word, f.reasons.join("; ")).unwrap();
    }
    Ok((out, Outcome::Fail))
}
