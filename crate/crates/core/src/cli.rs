//! Command-line front end. [`run`] does all the work so it can be driven
//! from tests; the binary only forwards arguments and the exit code.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, write_csv};
use crate::driver::{cos_sin, pade_cos_sin, wave_cos_sin, Precision, ThetaTable};
use crate::error::Error;
use crate::gallery::{generate_corpus, write_corpus, CorpusSpec};
use crate::matrix::DenseMatrix;
use crate::verify::{compute_theta, Variant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "trigmat", version, about = "Matrix cosine and sine by factored Taylor polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// cos(A) and sin(A) of a matrix file, written to <path>.cos and <path>.sin
    Cossin(CossinArgs),
    /// c(t²A) and s(t, A) of a matrix file, written to <path>.c and <path>.s
    Wave(WaveArgs),
    /// Taylor against Padé on a generated corpus, CSV per run
    Bench(BenchArgs),
    /// Print the threshold tables
    Theta(ThetaArgs),
    /// Write a corpus as matrix files plus manifest.csv
    Gallery(GalleryArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Taylor,
    Pade,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PrecisionArg {
    Double,
    Single,
}

impl From<PrecisionArg> for Precision {
    fn from(p: PrecisionArg) -> Self {
        match p {
            PrecisionArg::Double => Precision::Double,
            PrecisionArg::Single => Precision::Single,
        }
    }
}

#[derive(Args, Debug)]
struct CossinArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value = "taylor")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "double")]
    precision: PrecisionArg,
    /// Compute the wave kernels instead (needs --t)
    #[arg(long, requires = "t")]
    wave: bool,
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,
}

#[derive(Args, Debug)]
struct WaveArgs {
    path: PathBuf,
    #[arg(long, allow_negative_numbers = true)]
    t: f64,
    #[arg(long, value_enum, default_value = "double")]
    precision: PrecisionArg,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long, default_value_t = 16)]
    dim_cap: usize,
    #[arg(long, default_value_t = 2500)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

impl CorpusArgs {
    fn spec(&self) -> CorpusSpec {
        CorpusSpec::sized(self.dim_cap, self.count, self.seed)
    }
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    #[arg(long, value_enum, default_value = "double")]
    precision: PrecisionArg,
    /// CSV destination; standard output if omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ThetaArgs {
    #[arg(long, value_enum, default_value = "double")]
    precision: PrecisionArg,
    /// Recompute every threshold and print the relative difference
    #[arg(long)]
    recompute: bool,
}

#[derive(Args, Debug)]
struct GalleryArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    #[arg(long)]
    out: PathBuf,
}

struct Failure {
    code: i32,
    message: String,
}

fn input(e: Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: e.to_string(),
    }
}

fn failure(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_FAILURE,
        message: e.to_string(),
    }
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

fn read_input(path: &Path) -> Result<DenseMatrix, Failure> {
    let a = DenseMatrix::read(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })?;
    a.ensure_square().map_err(input)?;
    Ok(a)
}

fn write_pair(path: &Path, suffixes: [&str; 2], parts: [&DenseMatrix; 2]) -> Result<(), Failure> {
    for (suffix, m) in suffixes.into_iter().zip(parts) {
        m.write(with_suffix(path, suffix)).map_err(failure)?;
    }
    Ok(())
}

fn cmd_cossin(args: &CossinArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if args.wave {
        let wave = WaveArgs {
            path: args.path.clone(),
            t: args.t.expect("required by clap"),
            precision: args.precision,
        };
        return cmd_wave(&wave, out);
    }
    let a = read_input(&args.path)?;
    let precision = args.precision.into();
    let report = match args.method {
        MethodArg::Taylor => cos_sin(&a, precision),
        MethodArg::Pade => pade_cos_sin(&a, precision),
    }
    .map_err(input)?;
    write_pair(&args.path, ["cos", "sin"], [&report.result.cos_part, &report.result.sin_part])?;
    writeln!(
        out,
        "scheme {} s {} products {}",
        report.scheme_used, report.scaling_exponent, report.total_products
    )
    .map_err(failure)
}

fn cmd_wave(args: &WaveArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let a = read_input(&args.path)?;
    let report = wave_cos_sin(&a, args.t, args.precision.into()).map_err(input)?;
    write_pair(&args.path, ["c", "s"], [&report.result.c_part, &report.result.s_part])?;
    writeln!(
        out,
        "scheme {} s {} products {}",
        report.scheme_used, report.scaling_exponent, report.total_products
    )
    .map_err(failure)
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let corpus = generate_corpus(&args.corpus.spec()).map_err(input)?;
    let report = run_bench(&corpus, args.precision.into()).map_err(failure)?;
    match &args.out {
        Some(path) => write_csv(&report.records, File::create(path).map_err(failure)?).map_err(failure)?,
        None => write_csv(&report.records, &mut *out).map_err(failure)?,
    }
    writeln!(out, "summary: {}", report.summary).map_err(failure)?;
    for o in &report.overscaled {
        writeln!(
            out,
            "overscaled: matrix {} ({}) {:?} s {} where the norm of A² gives s {}",
            o.matrix_id, o.class_tag, o.method, o.scaling_s, o.scaling_from_square
        )
        .map_err(failure)?;
    }
    Ok(())
}

fn cmd_theta(args: &ThetaArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let precision: Precision = args.precision.into();
    let mut text = format!("{precision} precision (u = {:e})\n", precision.unit_roundoff());
    text.push_str(&format!("{:<10} {:>8} {:>11} {:>11}", "scheme", "products", "theta_cos", "theta_sin"));
    if args.recompute {
        text.push_str(&format!(" {:>12} {:>12} {:>9} {:>9}", "recomp_cos", "recomp_sin", "delta_cos", "delta_sin"));
    }
    text.push('\n');
    let tables = [ThetaTable::taylor(precision), ThetaTable::pade8(precision), ThetaTable::wave(precision)];
    for entry in tables.iter().flat_map(|t| &t.entries) {
        text.push_str(&format!(
            "{:<10} {:>8} {:>11} {:>11}",
            entry.scheme.to_string(),
            entry.cost.to_string(),
            format!("{:e}", entry.theta_cos),
            format!("{:e}", entry.theta_sin)
        ));
        if args.recompute {
            let fresh = compute_theta(Variant::Scheme(entry.scheme), precision).map_err(failure)?;
            let delta = |new: f64, old: f64| (new - old).abs() / old;
            text.push_str(&format!(
                " {:>12.5e} {:>12.5e} {:>9.1e} {:>9.1e}",
                fresh.theta_cos,
                fresh.theta_sin,
                delta(fresh.theta_cos, entry.theta_cos),
                delta(fresh.theta_sin, entry.theta_sin)
            ));
        }
        text.push('\n');
    }
    out.write_all(text.as_bytes()).map_err(failure)
}

fn cmd_gallery(args: &GalleryArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let corpus = generate_corpus(&args.corpus.spec()).map_err(input)?;
    write_corpus(&corpus, &args.out).map_err(failure)?;
    writeln!(out, "wrote {} matrices to {}", corpus.len(), args.out.display()).map_err(failure)
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match &cli.command {
        Command::Cossin(a) => cmd_cossin(a, out),
        Command::Wave(a) => cmd_wave(a, out),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Theta(a) => cmd_theta(a, out),
        Command::Gallery(a) => cmd_gallery(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "trigmat: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main_with_std() -> i32 {
    run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock())
}
