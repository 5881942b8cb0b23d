//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 the two nonnegativity
//! routes disagree, 4 every requested point is singular, 5 a verification
//! check contradicts its expected outcome.

pub mod literal;
pub mod sweep;
pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::clifford::{pauli_decompose, KreinMetricParams};
use crate::extension::{classify_nonnegative, ExtensionParams};
use crate::matrix::ComplexMatrix2;
use crate::pt_krein::symmetry_report;
use crate::scattering::{grid, SpectralPoint};
use crate::DEFAULT_TOL;

use sweep::Source;
use verify::{CaseInput, CaseKind, CaseRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;
pub const EXIT_ALL_SINGULAR: i32 = 4;
pub const EXIT_VIOLATION: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "ptsym",
    version,
    about = "PT-symmetric zero-range extensions and their scattering matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pauli coefficients and symmetry report of a matrix
    Decompose {
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Nonnegativity of the spectrum by closed form and by eigenvalues
    Classify {
        #[command(flatten)]
        params: BetaArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Scattering matrix at a single point
    Smatrix {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, allow_negative_numbers = true)]
        z_re: f64,
        #[arg(long, allow_negative_numbers = true)]
        z_im: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Scattering matrix over a rectangular grid
    Sweep {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Characteristic-property suite for one parameter set or a random batch
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        /// Number of random rounds (admissible, inadmissible, control)
        #[arg(long, conflicts_with_all = ["beta0", "beta1", "matrix"])]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tolerance: f64,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BetaArgs {
    #[arg(long, allow_negative_numbers = true)]
    beta0: f64,
    #[arg(long, allow_negative_numbers = true)]
    beta1: f64,
    #[arg(long, allow_negative_numbers = true)]
    chi: f64,
    #[arg(long, allow_negative_numbers = true)]
    xi: f64,
}

#[derive(Debug, Args)]
struct SourceArgs {
    #[arg(
        long,
        allow_negative_numbers = true,
        requires = "beta1",
        conflicts_with = "matrix"
    )]
    beta0: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires = "beta0")]
    beta1: Option<f64>,
    /// Metric parameter; with --matrix it only selects G
    #[arg(long, allow_negative_numbers = true)]
    chi: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    xi: Option<f64>,
    /// Matrix literal `[[a,b],[c,d]]`
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Debug, Args, Serialize)]
struct GridArgs {
    #[arg(long, default_value_t = -3.0, allow_negative_numbers = true)]
    re_min: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    re_max: f64,
    #[arg(long, default_value_t = -3.0, allow_negative_numbers = true)]
    im_min: f64,
    #[arg(long, default_value_t = -0.1, allow_negative_numbers = true)]
    im_max: f64,
    #[arg(long, default_value_t = 7)]
    steps: usize,
}

/// Failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CliResult = std::result::Result<i32, Failure>;

#[derive(Debug, Serialize)]
struct RunConfig<'a> {
    command: &'static str,
    params: Option<ExtensionParams>,
    matrix: Option<ComplexMatrix2>,
    metric: Option<KreinMetricParams>,
    grid: Option<&'a GridArgs>,
    z: Option<[f64; 2]>,
    tolerance: f64,
    output_format: Format,
    output_path: Option<&'a PathBuf>,
    random: Option<usize>,
    seed: Option<u64>,
}

impl CommonArgs {
    fn validate(&self) -> std::result::Result<(), Failure> {
        if self.tolerance > 0.0 && self.tolerance.is_finite() {
            Ok(())
        } else {
            Err(usage(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )))
        }
    }

    fn format_or(
        &self,
        default: Format,
        allowed: &[Format],
    ) -> std::result::Result<Format, Failure> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(usage(format!(
                "format {f:?} is not available for this command"
            )))
        }
    }

    fn emit(&self, text: &str) -> std::result::Result<(), Failure> {
        match &self.output {
            Some(path) => fs::write(path, text)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

impl BetaArgs {
    fn params(&self) -> std::result::Result<ExtensionParams, Failure> {
        ExtensionParams::new(self.beta0, self.beta1, self.chi, self.xi)
            .map_err(|e| usage(e.to_string()))
    }
}

impl SourceArgs {
    fn metric(&self) -> std::result::Result<KreinMetricParams, Failure> {
        KreinMetricParams::new(self.xi.unwrap_or(0.0), self.chi.unwrap_or(0.0))
            .map_err(|e| usage(e.to_string()))
    }

    fn resolve(&self) -> std::result::Result<Source, Failure> {
        match (&self.matrix, self.beta0, self.beta1) {
            (Some(lit), None, None) => Ok(Source::Matrix {
                t: literal::parse_matrix(lit).map_err(usage)?,
                metric: self.metric()?,
            }),
            (None, Some(b0), Some(b1)) => {
                let m = self.metric()?;
                ExtensionParams::new(b0, b1, m.chi(), m.xi())
                    .map(Source::Params)
                    .map_err(|e| usage(e.to_string()))
            }
            _ => Err(usage(
                "give either --beta0/--beta1 (with --chi/--xi) or --matrix",
            )),
        }
    }
}

fn echo_source(
    source: &Source,
) -> (
    Option<ExtensionParams>,
    Option<ComplexMatrix2>,
    Option<KreinMetricParams>,
) {
    match *source {
        Source::Params(e) => (Some(e), None, None),
        Source::Matrix { t, metric } => (None, Some(t), Some(metric)),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn cmd_decompose(matrix: &str, common: &CommonArgs) -> CliResult {
    common.validate()?;
    let format = common.format_or(Format::Text, &[Format::Text, Format::Json])?;
    let m = literal::parse_matrix(matrix).map_err(usage)?;
    let coeffs = pauli_decompose(&m);
    let report = symmetry_report(&m, common.tolerance).map_err(|e| usage(e.to_string()))?;
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                matrix: ComplexMatrix2,
                tolerance: f64,
                coefficients: crate::clifford::PauliCoefficients,
                symmetry: &'a crate::pt_krein::SymmetryReport,
            }
            to_json(&Out {
                matrix: m,
                tolerance: common.tolerance,
                coefficients: coeffs,
                symmetry: &report,
            })
        }
        _ => {
            let mut out = String::new();
            for (name, a) in ["a0", "a1", "a2", "a3"].iter().zip(coeffs.as_array()) {
                out.push_str(&format!("{name} = {a}\n"));
            }
            out.push_str(&format!("pt_symmetric = {}\n", report.pt_symmetric));
            match report.krein_xi {
                Some(xi) => out.push_str(&format!("krein_xi = {xi}\n")),
                None => out.push_str("krein_xi = none\n"),
            }
            out.push_str(&format!("xi_degenerate = {}\n", report.xi_degenerate));
            match report.c_params {
                Some(p) => out.push_str(&format!("c_params = chi {} xi {}\n", p.chi(), p.xi())),
                None => out.push_str("c_params = none\n"),
            }
            for (k, v) in &report.residuals {
                out.push_str(&format!("residual.{k} = {v:e}\n"));
            }
            out
        }
    };
    common.emit(&text)?;
    Ok(EXIT_OK)
}

fn cmd_classify(params: &BetaArgs, common: &CommonArgs) -> CliResult {
    common.validate()?;
    let format = common.format_or(Format::Text, &[Format::Text, Format::Json])?;
    let e = params.params()?;
    let cls = classify_nonnegative(&e);
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                params: ExtensionParams,
                classification: crate::extension::SpectraClassification,
                consistent: bool,
            }
            to_json(&Out {
                params: e,
                classification: cls,
                consistent: cls.consistent(),
            })
        }
        _ => format!(
            "nonnegative = {}\nclosed_form_verdict = {}\noracle_verdict = {}\neigenvalues_lower = {:e} {:e}\neigenvalues_upper = {:e} {:e}\n",
            cls.nonnegative,
            cls.closed_form_verdict,
            cls.oracle_verdict,
            cls.eigenvalues_lower.0,
            cls.eigenvalues_lower.1,
            cls.eigenvalues_upper.0,
            cls.eigenvalues_upper.1
        ),
    };
    common.emit(&text)?;
    if cls.consistent() {
        Ok(EXIT_OK)
    } else {
        Err(Failure {
            code: EXIT_INCONSISTENT,
            message: format!(
                "closed form says {} but the eigenvalue oracle says {}",
                cls.closed_form_verdict, cls.oracle_verdict
            ),
        })
    }
}

fn emit_records(
    config: &RunConfig,
    format: Format,
    common: &CommonArgs,
    records: &[sweep::SweepRecord],
) -> CliResult {
    let singular = records.iter().filter(|r| r.singular).count();
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                config: &'a RunConfig<'a>,
                records: &'a [sweep::SweepRecord],
                singular_count: usize,
            }
            to_json(&Out {
                config,
                records,
                singular_count: singular,
            })
        }
        _ => sweep::to_csv(records),
    };
    common.emit(&text)?;
    if !records.is_empty() && singular == records.len() {
        return Err(Failure {
            code: EXIT_ALL_SINGULAR,
            message: format!("all {singular} points are singular"),
        });
    }
    Ok(EXIT_OK)
}

fn cmd_smatrix(source: &SourceArgs, z_re: f64, z_im: f64, common: &CommonArgs) -> CliResult {
    common.validate()?;
    let format = common.format_or(Format::Csv, &[Format::Csv, Format::Json])?;
    let src = source.resolve()?;
    let z = SpectralPoint::new(z_re, z_im).map_err(|e| usage(e.to_string()))?;
    let (params, matrix, metric) = echo_source(&src);
    let config = RunConfig {
        command: "smatrix",
        params,
        matrix,
        metric,
        grid: None,
        z: Some([z_re, z_im]),
        tolerance: common.tolerance,
        output_format: format,
        output_path: common.output.as_ref(),
        random: None,
        seed: None,
    };
    emit_records(&config, format, common, &sweep::evaluate(&src, &[z]))
}

fn cmd_sweep(source: &SourceArgs, g: &GridArgs, common: &CommonArgs) -> CliResult {
    common.validate()?;
    let format = common.format_or(Format::Csv, &[Format::Csv, Format::Json])?;
    if g.steps < 1 {
        return Err(usage("steps must be at least 1"));
    }
    if g.im_max > 0.0 {
        return Err(usage(format!("im_max must be <= 0, got {}", g.im_max)));
    }
    if !(g.re_min <= g.re_max && g.im_min <= g.im_max) {
        return Err(usage("grid bounds must satisfy min <= max"));
    }
    let zs =
        grid(g.re_min, g.re_max, g.im_min, g.im_max, g.steps).map_err(|e| usage(e.to_string()))?;
    let src = source.resolve()?;
    let (params, matrix, metric) = echo_source(&src);
    let config = RunConfig {
        command: "sweep",
        params,
        matrix,
        metric,
        grid: Some(g),
        z: None,
        tolerance: common.tolerance,
        output_format: format,
        output_path: common.output.as_ref(),
        random: None,
        seed: None,
    };
    emit_records(&config, format, common, &sweep::evaluate(&src, &zs))
}

fn cmd_verify(
    source: &SourceArgs,
    random: Option<usize>,
    seed: u64,
    common: &CommonArgs,
) -> CliResult {
    common.validate()?;
    let format = common.format_or(Format::Json, &[Format::Json])?;
    let tol = common.tolerance;
    let (cases, config) = match random {
        Some(n) => (
            verify::random_suite(n, seed, tol),
            RunConfig {
                command: "verify",
                params: None,
                matrix: None,
                metric: None,
                grid: None,
                z: None,
                tolerance: tol,
                output_format: format,
                output_path: common.output.as_ref(),
                random: Some(n),
                seed: Some(seed),
            },
        ),
        None => {
            let src = source.resolve()?;
            let input = match src {
                Source::Params(e) => CaseInput::Params(e),
                Source::Matrix { t, metric } => CaseInput::Matrix { t, metric },
            };
            let (params, matrix, metric) = echo_source(&src);
            (
                vec![verify::run_case(0, CaseKind::Given, input, tol)],
                RunConfig {
                    command: "verify",
                    params,
                    matrix,
                    metric,
                    grid: None,
                    z: None,
                    tolerance: tol,
                    output_format: format,
                    output_path: common.output.as_ref(),
                    random: None,
                    seed: None,
                },
            )
        }
    };

    #[derive(Serialize)]
    struct Summary {
        cases: usize,
        consistent: usize,
        all_consistent: bool,
    }
    #[derive(Serialize)]
    struct Out<'a> {
        config: &'a RunConfig<'a>,
        cases: &'a [CaseRecord],
        summary: Summary,
    }
    let consistent = cases.iter().filter(|c| c.consistent).count();
    let summary = Summary {
        cases: cases.len(),
        consistent,
        all_consistent: consistent == cases.len(),
    };
    common.emit(&to_json(&Out {
        config: &config,
        cases: &cases,
        summary,
    }))?;

    match cases.iter().find(|c| !c.consistent) {
        None => Ok(EXIT_OK),
        Some(bad) => {
            let what = match &bad.error {
                Some(err) => err.clone(),
                None => bad
                    .checks
                    .iter()
                    .filter(|c| c.expected != c.observed)
                    .map(|c| format!("{} expected {} observed {}", c.name, c.expected, c.observed))
                    .collect::<Vec<_>>()
                    .join("; "),
            };
            Err(Failure {
                code: EXIT_VIOLATION,
                message: format!(
                    "case {} ({:?}): {what}\nreplay: ptsym verify {} --tolerance {:?}",
                    bad.index,
                    bad.kind,
                    bad.input.replay_args(),
                    tol
                ),
            })
        }
    }
}

/// Runs the CLI on explicit arguments and returns the exit code.
pub fn run_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
        }
    };
    let result = match &cli.command {
        Command::Decompose { matrix, common } => cmd_decompose(matrix, common),
        Command::Classify { params, common } => cmd_classify(params, common),
        Command::Smatrix {
            source,
            z_re,
            z_im,
            common,
        } => cmd_smatrix(source, *z_re, *z_im, common),
        Command::Sweep {
            source,
            grid,
            common,
        } => cmd_sweep(source, grid, common),
        Command::Verify {
            source,
            random,
            seed,
            common,
        } => cmd_verify(source, *random, *seed, common),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("ptsym: {}", f.message);
            f.code
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os())
}
