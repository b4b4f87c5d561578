//! `rstirling`: exact degenerate r-Stirling triangles, special-polynomial
//! families, generating-function inspection, and the identity verification
//! suite, from the command line.
//!
//! Exit codes: 0 on success, 1 when verification reports failures, 2 on
//! usage or argument errors. Data goes to stdout (or `--out`), diagnostics
//! to stderr. Output for a fixed invocation is deterministic; `verify`
//! additionally offers `--stable` to strip timing fields.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rstirling_core::export::{FamilyExport, SeriesExport, TriangleExport};
use rstirling_core::families::{
    bernoulli_second_kind, carlitz_bernoulli, euler, euler_polynomials, fubini,
    fully_degenerate_bernoulli, harmonic, hyperharmonic, hyperharmonic_gf,
};
use rstirling_core::identities::{run_all, FaultTarget, SuiteConfig};
use rstirling_core::rational::{factorial, Rational};
use rstirling_core::series::{
    degenerate_exp_at, degenerate_log, neg_degenerate_log_neg_t, one_minus_t_inv_pow, scaled_log,
    Series,
};
use rstirling_core::triangle::StirlingTriangle;
use rstirling_core::LambdaPoly;

#[derive(Parser)]
#[command(name = "rstirling", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a degenerate (r-)Stirling triangle.
    Table {
        kind: TableKind,
        /// Pinned-element parameter r (signed-first requires r = 0).
        #[arg(long, default_value_t = 0)]
        r: u32,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Evaluate entries at this exact rational λ instead of printing
        /// symbolic polynomials.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Write output to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a polynomial family or number sequence.
    Poly {
        family: FamilyArg,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: usize,
        /// Evaluation point r (euler, fubini, poly-bernoulli) or order
        /// (hyperharmonic, where r ≥ 1 is required).
        #[arg(long)]
        r: Option<u32>,
        /// Polylogarithm index for poly-bernoulli (required there).
        #[arg(long, allow_negative_numbers = true)]
        p: Option<i64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the coefficients of a named generating function.
    Series {
        name: SeriesName,
        #[arg(long, default_value_t = 24)]
        order: usize,
        /// r parameter (egf-first-kind, egf-second-kind, hyperharmonic-gf).
        #[arg(long)]
        r: Option<u32>,
        /// Column index k (egf-first-kind, egf-second-kind).
        #[arg(long)]
        k: Option<usize>,
        /// Evaluation point for exp-deg (default 1, i.e. e_λ(t)).
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the identity verification suite.
    Verify {
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: usize,
        #[arg(long = "r-max", default_value_t = 3)]
        r_max: u32,
        /// Comma-separated polylogarithm indices, e.g. "-2,-1,0,1,2,3".
        #[arg(
            long = "p-set",
            default_value = "-2,-1,0,1,2,3",
            allow_hyphen_values = true
        )]
        p_set: String,
        #[arg(long, default_value_t = rstirling_core::identities::DEFAULT_SEED)]
        seed: u64,
        /// Random vectors per inverse-relation round-trip check.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Worker threads for independent checks.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Perturb one input artifact to self-test the suite's
        /// sensitivity; accepts artifact names or check ids (e.g. thm1).
        #[arg(long = "fault-inject")]
        fault_inject: Option<String>,
        /// Omit timing fields so identical runs emit identical bytes.
        #[arg(long)]
        stable: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Second,
    UnsignedFirst,
    SignedFirst,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    CarlitzBernoulli,
    FullyDegenerateBernoulli,
    Fubini,
    Euler,
    PolyBernoulli,
    BernoulliSecondKind,
    Harmonic,
    Hyperharmonic,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesName {
    ExpDeg,
    LogDeg,
    ScaledLog,
    EgfFirstKind,
    EgfSecondKind,
    HyperharmonicGf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Usage-level failure: message to stderr, exit code 2.
struct UsageError(String);

impl From<rstirling_core::Error> for UsageError {
    fn from(e: rstirling_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_lambda(lambda: &Option<String>) -> Result<Option<Rational>, UsageError> {
    match lambda {
        None => Ok(None),
        Some(s) => s
            .parse::<Rational>()
            .map(Some)
            .map_err(|e| UsageError(e.to_string())),
    }
}

fn emit(text: String, out: &Option<PathBuf>) -> Result<(), UsageError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, UsageError> {
    match command {
        Command::Table {
            kind,
            r,
            n_max,
            format,
            lambda,
            out,
        } => cmd_table(kind, r, n_max, format, &parse_lambda(&lambda)?, &out),
        Command::Poly {
            family,
            n_max,
            r,
            p,
            format,
            lambda,
            out,
        } => cmd_poly(family, n_max, r, p, format, &parse_lambda(&lambda)?, &out),
        Command::Series {
            name,
            order,
            r,
            k,
            x,
            format,
            lambda,
            out,
        } => cmd_series(name, order, r, k, &x, format, &parse_lambda(&lambda)?, &out),
        Command::Verify {
            n_max,
            r_max,
            p_set,
            seed,
            trials,
            jobs,
            format,
            fault_inject,
            stable,
            out,
        } => cmd_verify(
            n_max,
            r_max,
            &p_set,
            seed,
            trials,
            jobs,
            format,
            &fault_inject,
            stable,
            &out,
        ),
    }
}

fn cmd_table(
    kind: TableKind,
    r: u32,
    n_max: usize,
    format: OutputFormat,
    lambda: &Option<Rational>,
    out: &Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    let triangle = match kind {
        TableKind::Second => StirlingTriangle::second_kind_basis(n_max, r),
        TableKind::UnsignedFirst => StirlingTriangle::first_kind_unsigned_basis(n_max, r),
        TableKind::SignedFirst => {
            if r != 0 {
                return Err(UsageError(
                    "signed-first is defined at r = 0 only".to_string(),
                ));
            }
            StirlingTriangle::signed_first_kind(n_max)
        }
    };
    let export = TriangleExport::from_triangle(&triangle, lambda.as_ref());
    let text = match format {
        OutputFormat::Json => export.to_json(),
        OutputFormat::Csv => export.to_csv(),
        OutputFormat::Text => {
            let mut s = format!(
                "kind={} r={} n_max={} lambda={}\n",
                export.kind,
                export.r,
                export.n_max,
                export.lambda.as_deref().unwrap_or("symbolic")
            );
            for (n, row) in export.entries.iter().enumerate() {
                for (k, cell) in row.iter().enumerate() {
                    s.push_str(&format!("({n},{k}): {cell}\n"));
                }
            }
            s
        }
    };
    emit(text, out)?;
    Ok(ExitCode::SUCCESS)
}

/// Builds the export record for one `poly` invocation.
fn family_export(
    family: FamilyArg,
    n_max: usize,
    r: Option<u32>,
    p: Option<i64>,
    lambda: &Option<Rational>,
) -> Result<FamilyExport, UsageError> {
    let lam = lambda.as_ref();
    match family {
        FamilyArg::CarlitzBernoulli => {
            let fam = carlitz_bernoulli(n_max);
            Ok(FamilyExport::from_xpoly_values(
                fam.family().as_str(),
                None,
                None,
                fam.values(),
                lam,
            ))
        }
        FamilyArg::FullyDegenerateBernoulli => {
            let fam = fully_degenerate_bernoulli(n_max);
            Ok(FamilyExport::from_xpoly_values(
                fam.family().as_str(),
                None,
                None,
                fam.values(),
                lam,
            ))
        }
        FamilyArg::BernoulliSecondKind => {
            let fam = bernoulli_second_kind(n_max);
            Ok(FamilyExport::from_xpoly_values(
                fam.family().as_str(),
                None,
                None,
                fam.values(),
                lam,
            ))
        }
        FamilyArg::Fubini => {
            let r = r.unwrap_or(0);
            let fam = fubini(n_max, &Rational::from_integer(r as i64));
            Ok(FamilyExport::from_xpoly_values(
                fam.family().as_str(),
                Some(r),
                None,
                fam.values(),
                lam,
            ))
        }
        FamilyArg::Euler => match r {
            Some(r) => {
                let values = euler(n_max, r)?;
                Ok(FamilyExport::from_lambda_values(
                    "euler",
                    Some(r),
                    None,
                    &values,
                    lam,
                ))
            }
            None => {
                let fam = euler_polynomials(n_max);
                Ok(FamilyExport::from_xpoly_values(
                    fam.family().as_str(),
                    None,
                    None,
                    fam.values(),
                    lam,
                ))
            }
        },
        FamilyArg::PolyBernoulli => {
            let p =
                p.ok_or_else(|| UsageError("poly-bernoulli requires --p <index>".to_string()))?;
            let r = r.unwrap_or(0);
            let values = rstirling_core::families::poly_bernoulli(p, n_max, r)?;
            Ok(FamilyExport::from_lambda_values(
                "poly-bernoulli",
                Some(r),
                Some(p),
                &values,
                lam,
            ))
        }
        FamilyArg::Harmonic => {
            let seq = harmonic(n_max)?;
            let values: Vec<LambdaPoly> = (0..=n_max).map(|n| seq.standalone(n)).collect();
            Ok(FamilyExport::from_lambda_values(
                "harmonic", None, None, &values, lam,
            ))
        }
        FamilyArg::Hyperharmonic => {
            let r = r
                .filter(|&r| r >= 1)
                .ok_or_else(|| UsageError("hyperharmonic requires --r >= 1".to_string()))?;
            let seq = hyperharmonic(r, n_max)?;
            Ok(FamilyExport::from_lambda_values(
                "hyperharmonic",
                Some(r),
                None,
                seq.values(),
                lam,
            ))
        }
    }
}

fn cmd_poly(
    family: FamilyArg,
    n_max: usize,
    r: Option<u32>,
    p: Option<i64>,
    format: OutputFormat,
    lambda: &Option<Rational>,
    out: &Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    let export = family_export(family, n_max, r, p, lambda)?;
    let text = match format {
        OutputFormat::Json => export.to_json(),
        OutputFormat::Csv => export.to_csv(),
        OutputFormat::Text => {
            let mut s = format!("family={}", export.family);
            if let Some(r) = export.r {
                s.push_str(&format!(" r={r}"));
            }
            if let Some(p) = export.p {
                s.push_str(&format!(" p={p}"));
            }
            s.push_str(&format!(" n_max={}\n", export.n_max));
            for (n, value) in export.values.iter().enumerate() {
                s.push_str(&format!("{n}: {value}\n"));
            }
            s
        }
    };
    emit(text, out)?;
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_series(
    name: SeriesName,
    order: usize,
    r: Option<u32>,
    k: Option<usize>,
    x: &Option<String>,
    format: OutputFormat,
    lambda: &Option<Rational>,
    out: &Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    let (series, label, used_r, used_k, used_x): (
        Series<LambdaPoly>,
        &str,
        Option<u32>,
        Option<usize>,
        Option<Rational>,
    ) = match name {
        SeriesName::ExpDeg => {
            let x = match x {
                Some(s) => s
                    .parse::<Rational>()
                    .map_err(|e| UsageError(e.to_string()))?,
                None => Rational::one(),
            };
            (degenerate_exp_at(&x, order), "exp-deg", None, None, Some(x))
        }
        SeriesName::LogDeg => (degenerate_log(order), "log-deg", None, None, None),
        SeriesName::ScaledLog => (scaled_log(order), "scaled-log", None, None, None),
        SeriesName::EgfFirstKind => {
            let (r, k) = (r.unwrap_or(0), k.unwrap_or(0));
            let series = one_minus_t_inv_pow(r, order)
                .mul(&neg_degenerate_log_neg_t(order).pow(k))?
                .scale(&factorial(k).recip().expect("k! > 0"));
            (series, "egf-first-kind", Some(r), Some(k), None)
        }
        SeriesName::EgfSecondKind => {
            let (r, k) = (r.unwrap_or(0), k.unwrap_or(0));
            let e = degenerate_exp_at(&Rational::one(), order);
            let series = degenerate_exp_at(&Rational::from_integer(r as i64), order)
                .mul(&e.sub(&Series::one(order)).pow(k))?
                .scale(&factorial(k).recip().expect("k! > 0"));
            (series, "egf-second-kind", Some(r), Some(k), None)
        }
        SeriesName::HyperharmonicGf => {
            let r = r.unwrap_or(1);
            let series = hyperharmonic_gf(r, order)?;
            (series, "hyperharmonic-gf", Some(r), None, None)
        }
    };

    let export = SeriesExport::from_lambda_series(
        label,
        used_r,
        used_k,
        used_x.as_ref(),
        &series,
        lambda.as_ref(),
    );
    let text = match format {
        OutputFormat::Json => export.to_json(),
        OutputFormat::Csv => export.to_csv(),
        OutputFormat::Text => export.to_text(),
    };
    emit(text, out)?;
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    n_max: usize,
    r_max: u32,
    p_set: &str,
    seed: u64,
    trials: usize,
    jobs: usize,
    format: OutputFormat,
    fault_inject: &Option<String>,
    stable: bool,
    out: &Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    let p_set: Vec<i64> = p_set
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| UsageError(format!("bad p-set entry {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    if p_set.is_empty() {
        return Err(UsageError("p-set must not be empty".to_string()));
    }
    let fault = match fault_inject {
        None => None,
        Some(s) => Some(s.parse::<FaultTarget>()?),
    };

    let cfg = SuiteConfig {
        n_max,
        r_max,
        p_set,
        seed,
        trials,
        jobs,
        fault,
    };
    let report = match run_all(&cfg) {
        Ok(report) => report,
        Err(e) => {
            // A construction-time route disagreement is itself a failed
            // verification, not a usage problem.
            eprintln!("verification aborted: {e}");
            return Ok(ExitCode::from(1));
        }
    };

    let text = match format {
        OutputFormat::Json => report.to_json(stable),
        OutputFormat::Text => report.to_text(stable),
        OutputFormat::Csv => {
            return Err(UsageError(
                "verify emits text or json reports, not csv".to_string(),
            ))
        }
    };
    emit(text, out)?;
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
