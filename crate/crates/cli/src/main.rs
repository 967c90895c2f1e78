//! `ttk`: Alexander polynomials and lens-surgery obstructions for twisted
//! torus knots.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success; for `check-lens`, the lens-space form FAILS (obstruction present) |
//! | 1 | `check-lens` only: the lens-space form passes (no obstruction) |
//! | 2 | invalid parameters or usage |
//! | 3 | the braid closure is not a knot |
//! | 4 | internal consistency failure or I/O error |

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ttk_core::obstruction::default_mu_excluded;
use ttk_core::scan::{to_csv, to_json, to_pretty};
use ttk_core::{
    alexander_from_braid, gamma_primitivity_verdict, middle_splitting_primitive, scan, BraidWord, Error, Form,
    ScanConfig, TwistedTorusKnot,
};

#[derive(Parser)]
#[command(name = "ttk", version, about = "Twisted torus knot invariants and surgery obstructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Alexander polynomial of T(p,q,2,r) or of a raw braid closure.
    Alex(AlexArgs),
    /// Print the obstruction report for T(p,q,2,r) as JSON.
    CheckLens(CheckLensArgs),
    /// Tabulate the family T(p,q,10m-4) over a range of m.
    Scan(ScanArgs),
    /// Decide primitivity of the middle splitting of the (p,q) torus knot.
    Primitive(PrimitiveArgs),
}

#[derive(Args)]
struct AlexArgs {
    #[arg(long, required_unless_present = "braid")]
    p: Option<i64>,
    #[arg(long, required_unless_present = "braid")]
    q: Option<i64>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    r: i64,
    /// Raw braid word, whitespace-separated signed generator indices.
    #[arg(long, conflicts_with_all = ["p", "q"], requires = "strands", allow_hyphen_values = true)]
    braid: Option<String>,
    #[arg(long)]
    strands: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormArg::Paper)]
    form: FormArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Paper,
    Symmetric,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Paper => Form::Paper,
            FormArg::Symmetric => Form::Symmetric,
        }
    }
}

#[derive(Args)]
struct CheckLensArgs {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
    /// Whether μ-primitivity is known to be excluded. Defaults to true exactly
    /// for the K_m = T(7,17,10m-4) family.
    #[arg(long)]
    mu_excluded: Option<bool>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 7)]
    p: i64,
    #[arg(long, default_value_t = 17)]
    q: i64,
    #[arg(long, allow_hyphen_values = true)]
    m_start: i64,
    #[arg(long, allow_hyphen_values = true)]
    m_end: i64,
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    out: OutFormat,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write to this file instead of stdout. Written atomically.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Render an aligned human-readable table instead of CSV/JSON.
    #[arg(long)]
    pretty: bool,
    #[arg(long)]
    mu_excluded: Option<bool>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct PrimitiveArgs {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
}

enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) => match e {
                Error::InvalidTorusParameters { .. }
                | Error::InvalidBraid(_)
                | Error::Parse(_)
                | Error::InvalidScan(_)
                | Error::NoInverse { .. } => 2,
                Error::NotAKnot { .. } => 3,
                _ => 4,
            },
            Failure::Io(_) => 4,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Alex(a) => run_alex(a),
        Command::CheckLens(a) => run_check_lens(a),
        Command::Scan(a) => run_scan(a),
        Command::Primitive(a) => run_primitive(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            match &f {
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}

fn run_alex(a: AlexArgs) -> Result<u8, Failure> {
    let braid = match (&a.braid, a.strands) {
        (Some(text), Some(n)) => BraidWord::parse(n, text)?,
        _ => {
            // clap guarantees p and q when no braid is given
            let knot = TwistedTorusKnot::new(a.p.unwrap_or_default(), a.q.unwrap_or_default(), a.r)?;
            knot.dean_braid()
        }
    };
    let d = alexander_from_braid(&braid)?;
    println!("{}", d.form(a.form.into()));
    Ok(0)
}

fn run_check_lens(a: CheckLensArgs) -> Result<u8, Failure> {
    let knot = TwistedTorusKnot::new(a.p, a.q, a.r)?;
    let mu = a.mu_excluded.unwrap_or_else(|| default_mu_excluded(&knot));
    let report = gamma_primitivity_verdict(&knot, mu)?;
    println!("{}", report.to_json());
    Ok(if report.lens_form_ok { 1 } else { 0 })
}

fn run_scan(a: ScanArgs) -> Result<u8, Failure> {
    let cfg = ScanConfig {
        p: a.p,
        q: a.q,
        m_start: a.m_start,
        m_end: a.m_end,
        jobs: a.jobs,
        mu_excluded: a.mu_excluded,
    };
    let rows = scan(&cfg)?;
    let text = if a.pretty {
        to_pretty(&rows)
    } else {
        match a.out {
            OutFormat::Csv => to_csv(&rows)?,
            OutFormat::Json => to_json(&rows),
        }
    };
    match a.output {
        Some(path) => write_atomic(&path, text.as_bytes())?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(0)
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn run_primitive(a: PrimitiveArgs) -> Result<u8, Failure> {
    let res = middle_splitting_primitive(a.p, a.q)?;
    println!("{res}");
    println!("{}", res.to_json());
    Ok(0)
}
