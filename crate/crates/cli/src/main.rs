//! `ovalkit` command-line front end.

mod commands;
mod error;
mod format;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ovalkit::{CurveSpec, FourierSupport};

use commands::{Format, Settings};
use error::CliError;

const DEFAULT_SAMPLES: usize = 4096;
const SAMPLES_ENV: &str = "OVALKIT_SAMPLES";

#[derive(Parser, Debug)]
#[command(
    name = "ovalkit",
    version,
    about = "Analyse planar ovals given by support functions"
)]
struct Cli {
    /// Sample count for rendering and quadrature panels [default: 4096, or $OVALKIT_SAMPLES]
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Relative tolerance on even harmonics for constant-width detection
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,

    /// Output format (default depends on the command)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of stdout (atomically)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Length, area, Wigner caustic area and the improved isoperimetric inequality
    Analyze { spec: PathBuf },
    /// Oriented area, length and cusps of one affine equidistant
    Equidistant {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
    },
    /// Bounds on equidistant areas over a range of lambda (CSV)
    Sweep {
        spec: PathBuf,
        /// lo:hi:steps
        #[arg(long, allow_hyphen_values = true)]
        lambda_range: String,
    },
    /// Stability of the improved isoperimetric inequality
    Stability { spec: PathBuf },
    /// Member n of the constant-width family with 2n+1 caustic cusps; --out receives the curve spec
    Family { n: u32 },
    /// SVG figure of the oval and its equidistants
    Render {
        spec: PathBuf,
        /// Affine time of an equidistant to draw (repeatable)
        #[arg(long, allow_hyphen_values = true)]
        lambda: Vec<f64>,
        /// Also draw the Wigner-caustic-type curve (dashed)
        #[arg(long)]
        wigner_type: bool,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn samples(cli: &Cli) -> Result<usize, CliError> {
    if let Some(n) = cli.samples {
        return Ok(n);
    }
    match std::env::var(SAMPLES_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SAMPLES_ENV} must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_SAMPLES),
    }
}

fn load(path: &Path) -> Result<FourierSupport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    let spec: CurveSpec = serde_json::from_str(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })?;
    Ok(FourierSupport::try_from(spec)?)
}

/// Writes via a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn emit(out: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match out {
        Some(p) => write_atomic(p, contents),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(contents.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let settings = Settings {
        samples: samples(&cli)?,
        tol: cli.tol,
    };
    if settings.samples < 3 {
        return Err(CliError::Usage("--samples must be at least 3".to_owned()));
    }
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Analyze { spec } => {
            let s = load(spec)?;
            emit(
                out,
                &commands::analyze(&s, &settings, cli.format.unwrap_or(Format::Text))?,
            )
        }
        Command::Equidistant { spec, lambda } => {
            let s = load(spec)?;
            let f = cli.format.unwrap_or(Format::Text);
            emit(out, &commands::equidistant(&s, *lambda, &settings, f)?)
        }
        Command::Sweep { spec, lambda_range } => {
            let s = load(spec)?;
            let range = commands::parse_lambda_range(lambda_range)?;
            let f = cli.format.unwrap_or(Format::Csv);
            emit(out, &commands::sweep_command(&s, range, &settings, f)?)
        }
        Command::Stability { spec } => {
            let s = load(spec)?;
            emit(
                out,
                &commands::stability(&s, cli.format.unwrap_or(Format::Text))?,
            )
        }
        Command::Family { n } => {
            let (report, spec) =
                commands::family(*n, &settings, cli.format.unwrap_or(Format::Text))?;
            if let Some(p) = out {
                write_atomic(p, &spec)?;
            }
            emit(None, &report)
        }
        Command::Render {
            spec,
            lambda,
            wigner_type,
        } => {
            if let Some(f) = cli.format.filter(|f| *f != Format::Svg) {
                return Err(CliError::Usage(format!(
                    "render only writes svg, not {f:?}"
                )));
            }
            let s = load(spec)?;
            emit(out, &commands::render(&s, lambda, *wigner_type, &settings))
        }
    }
}
