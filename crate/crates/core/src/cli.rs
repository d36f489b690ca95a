//! Command-line front end. Exit status: 0 when every check passes, 1 on a
//! verification failure, 2 on a usage or configuration error.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::em::{self, EMField};
use crate::format::{format_complex, format_f64_sci, parse_complex};
use crate::operator::PhaseOperator;
use crate::representations::{np_block_report, NpBlockReport, PoincareGenerator, Representation};
use crate::space::{scalar_product, PhaseVector};
use crate::verify::{self, SuiteReport, VerifyConfig};
use crate::DEFAULT_TOLERANCE;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Nominal tolerance for the pattern residuals reported by `np-dump`.
pub const NP_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "phasespace", version, about = "Complex relativistic phase space toolkit")]
pub struct Cli {
    /// Base tolerance; check thresholds scale with it (must be > 0).
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Seed for every randomized draw.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Output format; defaults to csv for `evolve` and json otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every invariant suite.
    Verify,
    /// Apply exp(φ X) for a generator image X to a phase vector.
    Transform(TransformArgs),
    /// Evolve a momentum in a uniform field.
    Evolve(EvolveArgs),
    /// Print the spin-1/2 generators in the Newman-Penrose basis.
    NpDump(NpDumpArgs),
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// spin1, spin_half_plus or spin_half_minus.
    pub rep: String,
    /// Angular generator label such as M01 or M23.
    pub generator: String,
    #[arg(allow_hyphen_values = true)]
    pub phi: f64,
    /// Complex components such as `1`, `-0.5+2i` or `-i`.
    #[arg(allow_hyphen_values = true)]
    pub v0: String,
    #[arg(allow_hyphen_values = true)]
    pub v1: String,
    #[arg(allow_hyphen_values = true)]
    pub v2: String,
    #[arg(allow_hyphen_values = true)]
    pub v3: String,
}

impl TransformArgs {
    fn vector(&self) -> [String; 4] {
        [self.v0.clone(), self.v1.clone(), self.v2.clone(), self.v3.clone()]
    }
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long = "e", num_args = 3, value_names = ["EX", "EY", "EZ"], allow_negative_numbers = true, default_values_t = [0.0, 0.0, 0.0])]
    pub e: Vec<f64>,
    #[arg(long = "b", num_args = 3, value_names = ["BX", "BY", "BZ"], allow_negative_numbers = true, default_values_t = [0.0, 0.0, 0.0])]
    pub b: Vec<f64>,
    /// Initial momentum; components must be real.
    #[arg(long, num_args = 4, value_names = ["P0", "P1", "P2", "P3"], allow_hyphen_values = true, required = true)]
    pub p0: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub tau_max: f64,
    /// Number of rows, including τ = 0 and τ = τ_max.
    #[arg(long, default_value_t = 11)]
    pub samples: usize,
    /// Add RK4 columns, deviation and mass-shell residual.
    #[arg(long)]
    pub compare: bool,
    /// RK4 steps per sample.
    #[arg(long, default_value_t = verify::RK4_STEPS)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct NpDumpArgs {
    /// spin_half_plus or spin_half_minus.
    pub rep: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

/// Parses `args` (including the program name), runs, and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("phasespace: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs a parsed command; `Ok` carries the exit status.
pub fn run(cli: &Cli) -> Result<i32, CliError> {
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        return Err(CliError::Config(format!(
            "tolerance must be a positive finite number, got {}",
            cli.tolerance
        )));
    }
    let format = cli.format.unwrap_or(match cli.command {
        Command::Evolve(_) => OutputFormat::Csv,
        _ => OutputFormat::Json,
    });
    // Open the destination before doing any work so a bad path fails fast.
    let mut sink = open_output(cli.output.as_ref())?;
    let (text, code) = match &cli.command {
        Command::Verify => cmd_verify(cli, format),
        Command::Transform(args) => cmd_transform(args, format)?,
        Command::Evolve(args) => cmd_evolve(args, format)?,
        Command::NpDump(args) => cmd_np_dump(args, cli.tolerance, format)?,
    };
    sink.write_all(text.as_bytes())?;
    sink.flush()?;
    Ok(code)
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    match path {
        None => Ok(Box::new(io::stdout().lock())),
        Some(p) => File::create(p)
            .map(|f| Box::new(io::BufWriter::new(f)) as Box<dyn Write>)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", p.display()))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

fn cmd_verify(cli: &Cli, format: OutputFormat) -> (String, i32) {
    let cfg = VerifyConfig {
        tolerance: cli.tolerance,
        seed: cli.seed,
    };
    let reports = verify::run_all(&cfg);
    for r in &reports {
        eprintln!(
            "{:<16} {:>4} checks  max residual {:.3e}  {}  ({:.2?})",
            r.suite,
            r.checks.len(),
            r.max_residual(),
            if r.pass { "PASS" } else { "FAIL" },
            r.wall_time
        );
        for c in r.failures() {
            eprintln!("  FAIL {} residual {:.3e} > {:.3e}", c.id, c.residual, c.threshold);
        }
    }
    let text = match format {
        OutputFormat::Json => to_json(&reports),
        OutputFormat::Csv => verify_csv(&reports),
    };
    let code = if verify::all_pass(&reports) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    };
    (text, code)
}

fn verify_csv(reports: &[SuiteReport]) -> String {
    let rows = reports.iter().flat_map(|r| {
        r.checks.iter().map(move |c| {
            vec![
                r.suite.clone(),
                c.id.clone(),
                format_f64_sci(c.residual),
                c.pass.to_string(),
            ]
        })
    });
    csv_text(&["suite", "id", "residual", "pass"], rows)
}

fn parse_rep(s: &str) -> Result<Representation, CliError> {
    s.parse::<Representation>().map_err(CliError::Usage)
}

fn parse_vector(parts: &[String]) -> Result<PhaseVector, CliError> {
    let mut coords = [Complex64::new(0.0, 0.0); 4];
    for (slot, s) in coords.iter_mut().zip(parts) {
        *slot = parse_complex(s).map_err(|e| CliError::Input(e.to_string()))?;
    }
    PhaseVector::try_new(coords).map_err(|e| CliError::Input(e.to_string()))
}

fn complex_strings(v: &PhaseVector) -> Vec<String> {
    v.coords().iter().map(|z| format_complex(*z)).collect()
}

fn matrix_strings(op: &PhaseOperator) -> Vec<Vec<String>> {
    op.rows()
        .iter()
        .map(|row| row.iter().map(|z| format_complex(*z)).collect())
        .collect()
}

#[derive(Serialize)]
struct TransformReport {
    representation: String,
    generator: String,
    phi: f64,
    input: Vec<String>,
    matrix: Vec<Vec<String>>,
    output: Vec<String>,
}

fn cmd_transform(args: &TransformArgs, format: OutputFormat) -> Result<(String, i32), CliError> {
    let rep = parse_rep(&args.rep)?;
    let generator: PoincareGenerator = args
        .generator
        .parse()
        .map_err(|e: crate::PhaseError| CliError::Usage(e.to_string()))?;
    if generator.is_translation() {
        return Err(CliError::Usage(format!(
            "{generator} is a translation; transform needs an angular generator M_ab"
        )));
    }
    if !args.phi.is_finite() {
        return Err(CliError::Usage("phi must be finite".into()));
    }
    let v = parse_vector(&args.vector())?;
    let flow = crate::representations::exponential_flow(&rep.angular_operator(generator), args.phi);
    let out = flow.apply(&v);
    let text = match format {
        OutputFormat::Json => to_json(&TransformReport {
            representation: rep.name().to_string(),
            generator: generator.to_string(),
            phi: args.phi,
            input: complex_strings(&v),
            matrix: matrix_strings(&flow),
            output: complex_strings(&out),
        }),
        OutputFormat::Csv => {
            let rows = (0..4).map(|mu| {
                let (a, b) = (v.component(mu), out.component(mu));
                vec![
                    mu.to_string(),
                    format_f64_sci(a.re),
                    format_f64_sci(a.im),
                    format_f64_sci(b.re),
                    format_f64_sci(b.im),
                ]
            });
            csv_text(&["component", "input_re", "input_im", "output_re", "output_im"], rows)
        }
    };
    Ok((text, EXIT_PASS))
}

/// One trajectory sample.
#[derive(Debug, Clone, Serialize)]
pub struct EvolveRow {
    pub tau: f64,
    pub p: [f64; 4],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_num: Option<[f64; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dev: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shell_residual: Option<f64>,
}

fn real4(v: &PhaseVector) -> [f64; 4] {
    std::array::from_fn(|k| v.component(k).re)
}

/// Samples the closed-form trajectory at `samples` uniformly spaced proper
/// times in `[0, τ_max]`, optionally against RK4.
pub fn evolve_rows(
    field: &EMField,
    p0: &PhaseVector,
    tau_max: f64,
    samples: usize,
    compare: Option<usize>,
) -> Result<Vec<EvolveRow>, CliError> {
    let shell0 = scalar_product(p0, p0);
    (0..samples)
        .map(|k| {
            let tau = tau_max * k as f64 / (samples - 1) as f64;
            let closed = em::evolve_closed_form(field, p0, tau).map_err(|e| CliError::Input(e.to_string()))?;
            let mut row = EvolveRow {
                tau,
                p: real4(&closed),
                p_num: None,
                dev: None,
                shell_residual: None,
            };
            if let Some(steps) = compare {
                let numeric = em::evolve_numeric(field, p0, tau, steps).map_err(|e| CliError::Usage(e.to_string()))?;
                row.p_num = Some(real4(&numeric));
                row.dev = Some(closed.max_abs_diff(&numeric));
                row.shell_residual = Some((scalar_product(&closed, &closed) - shell0).norm());
            }
            Ok(row)
        })
        .collect()
}

fn cmd_evolve(args: &EvolveArgs, format: OutputFormat) -> Result<(String, i32), CliError> {
    if args.samples < 2 {
        return Err(CliError::Usage(format!(
            "samples must be at least 2, got {}",
            args.samples
        )));
    }
    if !(args.tau_max.is_finite() && args.tau_max > 0.0) {
        return Err(CliError::Usage(format!(
            "tau-max must be positive, got {}",
            args.tau_max
        )));
    }
    if args.compare && args.steps == 0 {
        return Err(CliError::Usage("steps must be at least 1".into()));
    }
    let e: [f64; 3] = args.e.as_slice().try_into().expect("clap enforces three values");
    let b: [f64; 3] = args.b.as_slice().try_into().expect("clap enforces three values");
    let field = EMField::try_new(e, b).map_err(|err| CliError::Input(err.to_string()))?;
    let p0 = parse_vector(&args.p0)?;
    em::require_real(&p0).map_err(|err| CliError::Input(format!("p0 must be real: {err}")))?;
    let rows = evolve_rows(
        &field,
        &p0,
        args.tau_max,
        args.samples,
        args.compare.then_some(args.steps),
    )?;
    let text = match format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => {
            let mut header = vec!["tau", "p0", "p1", "p2", "p3"];
            if args.compare {
                header.extend(["p0_num", "p1_num", "p2_num", "p3_num", "dev", "shell_residual"]);
            }
            let rows = rows.iter().map(|r| {
                let mut cells = vec![format_f64_sci(r.tau)];
                cells.extend(r.p.iter().map(|x| format_f64_sci(*x)));
                if let (Some(num), Some(dev), Some(shell)) = (r.p_num, r.dev, r.shell_residual) {
                    cells.extend(num.iter().map(|x| format_f64_sci(*x)));
                    cells.push(format_f64_sci(dev));
                    cells.push(format_f64_sci(shell));
                }
                cells
            });
            csv_text(&header, rows)
        }
    };
    Ok((text, EXIT_PASS))
}

#[derive(Serialize)]
struct NpEntry {
    label: String,
    matrix: Vec<Vec<String>>,
    offdiag_residual: f64,
    upper_residual: f64,
    lower_residual: f64,
    pass: bool,
}

#[derive(Serialize)]
struct NpDump {
    representation: String,
    generators: Vec<NpEntry>,
    pass: bool,
}

fn cmd_np_dump(args: &NpDumpArgs, tolerance: f64, format: OutputFormat) -> Result<(String, i32), CliError> {
    let rep = parse_rep(&args.rep)?;
    let chirality = rep
        .chirality()
        .ok_or_else(|| CliError::Usage("np-dump needs spin_half_plus or spin_half_minus".into()))?;
    let threshold = NP_TOLERANCE * tolerance / DEFAULT_TOLERANCE;
    let entries: Vec<NpEntry> = np_block_report(chirality)
        .into_iter()
        .map(|r: NpBlockReport| NpEntry {
            pass: r.max_residual() <= threshold,
            matrix: matrix_strings(&r.matrix),
            label: r.label,
            offdiag_residual: r.offdiag_residual,
            upper_residual: r.upper_residual,
            lower_residual: r.lower_residual,
        })
        .collect();
    let pass = entries.iter().all(|e| e.pass);
    for e in &entries {
        eprintln!(
            "{:<8} offdiag {:.3e}  upper {:.3e}  lower {:.3e}  {}",
            e.label,
            e.offdiag_residual,
            e.upper_residual,
            e.lower_residual,
            if e.pass { "PASS" } else { "FAIL" }
        );
    }
    let text = match format {
        OutputFormat::Json => to_json(&NpDump {
            representation: rep.name().to_string(),
            generators: entries,
            pass,
        }),
        OutputFormat::Csv => {
            let rows = entries.iter().map(|e| {
                vec![
                    e.label.clone(),
                    format_f64_sci(e.offdiag_residual),
                    format_f64_sci(e.upper_residual),
                    format_f64_sci(e.lower_residual),
                    e.pass.to_string(),
                ]
            });
            csv_text(
                &["label", "offdiag_residual", "upper_residual", "lower_residual", "pass"],
                rows,
            )
        }
    };
    Ok((text, if pass { EXIT_PASS } else { EXIT_FAIL }))
}
