//! Command-line front end for the `continuants` library.
//!
//! Every subcommand renders to a [`Report`] so that output can be tested
//! without spawning a process.

pub mod config;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use continuants::bench::{run_bench, BenchReport};
use continuants::chebyshev::{u_coeffs, u_coeffs_hypergeometric, u_genfun_coeff};
use continuants::continuant::{continuant_det_oracle, continuant_rec, transfer_matrix, PeriodicAlpha};
use continuants::periodic::{evaluate, Strategy};
use continuants::qrational::{cf_digits, q_fibonacci, q_fibonacci_closed, q_rational};
use continuants::quaternion::Quaternion;
use continuants::ring::{IntegralDomain, LaurentFrac, ModInt61, MERSENNE_61};
use continuants::verify::{verify_alpha, verify_cf, IdentityCheck, Status, VerifyLimits};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use config::{parse_config, AlphaConfig, AnyAlpha, ConfigError, RingKind};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Config { path: PathBuf, source: ConfigError },
    #[error(transparent)]
    Core(#[from] continuants::Error),
    #[error("{0}")]
    Usage(String),
}

/// Rendered output of one command. `ok` is false when a check failed.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub ok: bool,
}

impl Report {
    fn line(text: impl Into<String>) -> Self {
        let mut stdout = text.into();
        stdout.push('\n');
        Report { stdout, ok: true }
    }
}

#[derive(Debug, Parser)]
#[command(name = "continuants", version, about = "Exact continuants of periodic tridiagonal sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// K_n(alpha_p) for a configured sequence.
    Continuant {
        #[arg(long)]
        config: PathBuf,
        /// Starting index; defaults to the config's `p`.
        #[arg(long, allow_hyphen_values = true)]
        p: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = ContinuantStrategy::Rec)]
        strategy: ContinuantStrategy,
    },
    /// K_{lm+j}(alpha_{p-j}) over whole periods.
    Periodic {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<i64>,
        #[arg(long)]
        m: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        j: i64,
        #[arg(long, default_value = "closed", value_parser = parse_strategy)]
        strategy: Strategy,
        /// Also evaluate by every other strategy and report agreement.
        #[arg(long)]
        verify: bool,
    },
    /// q-deformed rational [r/s]_q.
    Qrat {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
    },
    /// q-deformed Fibonacci number F_n(q).
    Qfib {
        #[arg(long)]
        n: i64,
        /// Use the closed form instead of the recurrence.
        #[arg(long)]
        closed: bool,
    },
    /// Power of a rational quaternion "a,b,c,d".
    Quatpow {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        naive: bool,
    },
    /// Coefficients of U_n in ascending degree.
    Chebyshev {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = ChebMethod::Rec)]
        method: ChebMethod,
    },
    /// Time every evaluation strategy on a random period-l sequence mod 2^61 - 1.
    Bench {
        #[arg(long, default_value_t = 3)]
        l: usize,
        #[arg(long, value_delimiter = ',', default_value = "10,1000,100000")]
        m_list: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write CSV rows to this file (`-` for stdout instead of the table).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check every identity on a configured sequence.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 10)]
        max_n: i64,
        #[arg(long, default_value_t = 6)]
        max_m: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ContinuantStrategy {
    Oracle,
    Rec,
    Transfer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChebMethod {
    Rec,
    Hyper,
    Genfun,
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse().map_err(|e: continuants::Error| e.to_string())
}

pub fn load_config(path: &PathBuf) -> Result<AlphaConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    parse_config(&text).map_err(|source| CliError::Config { path: path.clone(), source })
}

macro_rules! with_alpha {
    ($any:expr, $alpha:ident => $body:expr) => {
        match $any {
            AnyAlpha::Rational($alpha) => $body,
            AnyAlpha::Laurent($alpha) => $body,
            AnyAlpha::ModInt($alpha) => $body,
        }
    };
}

pub fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Continuant { config, p, n, strategy } => {
            let cfg = load_config(&config)?;
            let p = p.unwrap_or(cfg.p);
            with_alpha!(cfg.alpha(), alpha => continuant(&alpha, p, n, strategy))
        }
        Command::Periodic { config, p, m, j, strategy, verify } => {
            let cfg = load_config(&config)?;
            let p = p.unwrap_or(cfg.p);
            with_alpha!(cfg.alpha(), alpha => periodic(&alpha, p, m, j, strategy, verify))
        }
        Command::Qrat { r, s } => {
            let digits = cf_digits(r, s)?;
            let value = q_rational(&digits);
            let list = digits.digits().iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
            Ok(Report {
                stdout: format!("digits: [{list}]\nnumerator: {}\ndenominator: {}\n", value.numer(), value.denom()),
                ok: true,
            })
        }
        Command::Qfib { n, closed } => {
            let f = if closed { q_fibonacci_closed(n)? } else { q_fibonacci(n)? };
            Ok(Report::line(f.to_string()))
        }
        Command::Quatpow { q, n, naive } => {
            let x: Quaternion = q.parse().map_err(|e: continuants::Error| CliError::Usage(format!("--q: {e}")))?;
            let y = if naive { x.pow_naive(n) } else { x.pow_cheb(n)? };
            Ok(Report::line(y.to_string()))
        }
        Command::Chebyshev { n, method } => {
            let u = match method {
                ChebMethod::Rec => u_coeffs(n)?,
                ChebMethod::Hyper => u_coeffs_hypergeometric(n)?,
                ChebMethod::Genfun => u_genfun_coeff(n, n.max(0))?,
            };
            let list = u.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
            Ok(Report::line(format!("[{list}]")))
        }
        Command::Bench { l, m_list, seed, csv } => bench(l, &m_list, seed, csv),
        Command::Verify { config, max_n, max_m } => {
            let cfg = load_config(&config)?;
            verify(&cfg, VerifyLimits { max_n, max_m })
        }
    }
}

fn continuant<R: IntegralDomain>(
    alpha: &PeriodicAlpha<R>,
    p: i64,
    n: i64,
    strategy: ContinuantStrategy,
) -> Result<Report, CliError> {
    let value = match strategy {
        ContinuantStrategy::Rec => continuant_rec(alpha, p, n)?,
        ContinuantStrategy::Oracle => continuant_det_oracle(alpha, p, n)?,
        ContinuantStrategy::Transfer => match n {
            -1 => R::zero(),
            n if n >= 0 => transfer_matrix(alpha, p, n as usize).a,
            n => return Err(continuants::Error::InvalidArgument(format!("order must be >= -1, got {n}")).into()),
        },
    };
    Ok(Report::line(value.to_string()))
}

fn periodic<R: IntegralDomain>(
    alpha: &PeriodicAlpha<R>,
    p: i64,
    m: i64,
    j: i64,
    strategy: Strategy,
    verify: bool,
) -> Result<Report, CliError> {
    let value = evaluate(alpha, p, m, j, strategy)?;
    let mut report = Report::line(value.to_string());
    if verify {
        let mut mismatch = Vec::new();
        for other in Strategy::ALL {
            let v = evaluate(alpha, p, m, j, other)?;
            if v != value {
                mismatch.push(format!("{other} gives {v}"));
            }
        }
        let names = Strategy::ALL.map(|s| s.name()).join(" = ");
        if mismatch.is_empty() {
            writeln!(report.stdout, "PASS {names}").unwrap();
        } else {
            writeln!(report.stdout, "FAIL {names}: {}", mismatch.join(", ")).unwrap();
            report.ok = false;
        }
    }
    Ok(report)
}

fn bench(l: usize, m_list: &[u64], seed: u64, csv: Option<PathBuf>) -> Result<Report, CliError> {
    if l == 0 {
        return Err(CliError::Usage("--l must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || (0..l).map(|_| ModInt61::new(rng.gen_range(0..MERSENNE_61))).collect::<Vec<_>>();
    let (a, b, c) = (draw(), draw(), draw());
    let alpha = PeriodicAlpha::new(a, b, c, 0)?;
    let reports = run_bench(&alpha, 0, m_list)?;

    let mut csv_text = String::new();
    writeln!(csv_text, "{}", BenchReport::CSV_HEADER).unwrap();
    for r in &reports {
        writeln!(csv_text, "{}", r.csv_row()).unwrap();
    }
    match csv {
        Some(path) if path.as_os_str() == "-" => return Ok(Report { stdout: csv_text, ok: true }),
        Some(path) => std::fs::write(&path, &csv_text).map_err(|source| CliError::Io { path, source })?,
        None => {}
    }

    let mut out = String::new();
    writeln!(out, "{:<14} {:>3} {:>10} {:>14} {:>12}  digest", "strategy", "l", "m", "ns", "ops").unwrap();
    for r in &reports {
        writeln!(
            out,
            "{:<14} {:>3} {:>10} {:>14} {:>12}  {}",
            r.strategy.name(),
            r.l,
            r.m,
            r.nanos,
            r.ops,
            r.digest
        )
        .unwrap();
    }
    Ok(Report { stdout: out, ok: true })
}

fn verify(cfg: &AlphaConfig, limits: VerifyLimits) -> Result<Report, CliError> {
    let max_n = limits.max_n;
    let mut checks: Vec<IdentityCheck> = match cfg.alpha() {
        AnyAlpha::Rational(alpha) => {
            let mut v = verify_alpha(&alpha, cfg.p, limits)?;
            v.push(verify_cf(&alpha, cfg.p, max_n)?);
            v
        }
        AnyAlpha::Laurent(alpha) => {
            let mut v = verify_alpha(&alpha, cfg.p, limits)?;
            // Quotients live in the fraction field.
            let frac = alpha.map(|x| LaurentFrac::from_poly(x.clone()));
            v.push(verify_cf(&frac, cfg.p, max_n)?);
            v
        }
        AnyAlpha::ModInt(alpha) => {
            let mut v = verify_alpha(&alpha, cfg.p, limits)?;
            v.push(verify_cf(&alpha, cfg.p, max_n)?);
            v
        }
    };
    checks.sort_by_key(|c| c.status == Status::Skip);
    let mut report = Report { stdout: String::new(), ok: true };
    for check in &checks {
        writeln!(report.stdout, "{check}").unwrap();
        if check.status == Status::Fail {
            report.ok = false;
        }
    }
    Ok(report)
}
