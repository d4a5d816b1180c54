//! Argument parsing and subcommand dispatch for `toombench`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use toom_core::{alpha_exponent, parse_numeral, to_decimal, to_hex, Limb, Mode};

use crate::bench::{
    build_engine, overhead_trend_holds, run_bench, BenchOptions, DEFAULT_ORACLE_CUTOFF,
};
use crate::error::{BenchError, Result};
use crate::record::{append_records, read_records, read_records_from, write_records};
use crate::selftest::{run_selftest, SelftestOptions};
use crate::slope::fit_records;

#[derive(Debug, Parser)]
#[command(
    name = "toombench",
    version,
    about = "Toom-Cook multiplication harness"
)]
pub struct Cli {
    /// Limb width used for every computation in the run.
    #[arg(long, global = true, default_value_t = 32, value_parser = parse_limb_bits)]
    pub limb_bits: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Recursive,
    Wrapper,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Recursive => Mode::Recursive,
            ModeArg::Wrapper => Mode::Wrapper,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply two numerals (decimal, or hex with 0x).
    Mul(MulArgs),
    /// Time multiplication over a list of sizes and emit CSV.
    Bench(BenchArgs),
    /// Fit log T against log N for every configuration in a CSV file.
    Slope(SlopeArgs),
    /// Run the built-in verification suites.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct MulArgs {
    pub a: String,
    pub b: String,
    /// Output base.
    #[arg(long, default_value_t = 10, value_parser = parse_base)]
    pub base: u32,
    #[arg(long = "B")]
    pub blocks: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[arg(long, value_enum, default_value = "recursive")]
    pub mode: ModeArg,
    /// Also check the product against schoolbook multiplication.
    #[arg(long)]
    pub selftest: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated bit sizes; accepts 65536, 1e5 or 2^16.
    #[arg(long, default_value = "65536", value_delimiter = ',', value_parser = parse_size)]
    pub sizes: Vec<u64>,
    /// Block count; recursive mode defaults to 16, wrapper mode to threads / 2.
    #[arg(long = "B")]
    pub blocks: Option<usize>,
    /// Comma-separated thread counts; the first is the baseline for ratios.
    #[arg(long, default_value = "1", value_delimiter = ',')]
    pub threads: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "recursive")]
    pub mode: ModeArg,
    /// Append rows here instead of printing them.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Largest size checked against schoolbook.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CUTOFF)]
    pub oracle_cutoff: u64,
    /// Also time schoolbook up to the oracle cutoff.
    #[arg(long)]
    pub baseline: bool,
    /// Print operand and product digests to stderr.
    #[arg(long)]
    pub digests: bool,
}

#[derive(Debug, Args)]
pub struct SlopeArgs {
    /// CSV file written by `bench`; reads stdin when absent.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random pairs in the oracle suite.
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
    /// Verify every product of operands below 2^12.
    #[arg(long)]
    pub exhaustive_small: bool,
    /// Corrupt one point product; the run must then fail.
    #[arg(long)]
    pub inject_fault: bool,
}

fn parse_base(s: &str) -> std::result::Result<u32, String> {
    match s {
        "10" => Ok(10),
        "16" => Ok(16),
        _ => Err("base must be 10 or 16".into()),
    }
}

fn parse_limb_bits(s: &str) -> std::result::Result<u32, String> {
    match s {
        "32" => Ok(32),
        "64" => Ok(64),
        _ => Err("limb width must be 32 or 64".into()),
    }
}

/// Parses `65536`, `1e5`, `2.5e6` or `2^16`.
pub fn parse_size(s: &str) -> std::result::Result<u64, String> {
    let s = s.trim();
    let bad = || format!("invalid size {s:?}");
    if let Some((base, exp)) = s.split_once('^') {
        let base: u64 = base.parse().map_err(|_| bad())?;
        let exp: u32 = exp.parse().map_err(|_| bad())?;
        return base.checked_pow(exp).ok_or_else(bad);
    }
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let v: f64 = s.parse().map_err(|_| bad())?;
    if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 {
        Ok(v as u64)
    } else {
        Err(bad())
    }
}

fn cmd_mul<L: Limb>(args: &MulArgs, out: &mut dyn Write) -> Result<()> {
    let a = parse_numeral::<L>(&args.a)
        .map_err(|e| BenchError::Usage(format!("first operand: {e}")))?;
    let b = parse_numeral::<L>(&args.b)
        .map_err(|e| BenchError::Usage(format!("second operand: {e}")))?;
    let engine = build_engine::<L>(args.mode.into(), args.blocks, args.threads)?;
    let w = engine.multiply(&a, &b)?;
    if args.selftest && w != a.mul_schoolbook(&b) {
        return Err(BenchError::Verification(
            "product differs from schoolbook".into(),
        ));
    }
    match args.base {
        16 => writeln!(out, "0x{}", to_hex(&w))?,
        _ => writeln!(out, "{}", to_decimal(&w))?,
    }
    Ok(())
}

fn cmd_bench<L: Limb>(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    if args.threads.contains(&0) {
        return Err(BenchError::Usage("--threads must be positive".into()));
    }
    let opts = BenchOptions {
        sizes: args.sizes.clone(),
        blocks: args.blocks,
        threads: args.threads.clone(),
        reps: args.reps,
        seed: args.seed,
        mode: args.mode.into(),
        oracle_cutoff: args.oracle_cutoff,
        baseline: args.baseline,
    };
    let report = run_bench::<L>(&opts)?;
    match &args.csv {
        Some(path) => append_records(path, &report.records)?,
        None => write_records(&mut *out, &report.records, true)?,
    }
    for imp in &report.improvements {
        writeln!(
            err,
            "improvement at {} bits: {:.3}x ({} -> {} threads)",
            imp.size_bits, imp.ratio, imp.base_threads, imp.threads
        )?;
    }
    if args.digests {
        for d in &report.digests {
            writeln!(
                err,
                "digest size={} seed={} u={:016x} v={:016x} product={:016x}",
                d.size_bits, d.operand_seed, d.u, d.v, d.product
            )?;
        }
    }
    let toom_rows: Vec<_> = report
        .records
        .iter()
        .filter(|r| r.threads == opts.threads[0] && r.algorithm != crate::Algorithm::Schoolbook)
        .cloned()
        .collect();
    if toom_rows.len() >= 3 {
        let trend = if overhead_trend_holds(&toom_rows) {
            "non-increasing"
        } else {
            "not monotone"
        };
        writeln!(err, "overhead fraction trend: {trend}")?;
    }
    Ok(())
}

fn cmd_slope(args: &SlopeArgs, out: &mut dyn Write) -> Result<()> {
    let records = match &args.csv {
        Some(path) => read_records_from(path)?,
        None => read_records(std::io::stdin().lock())?,
    };
    for ((algorithm, blocks, threads), est) in fit_records(&records)? {
        write!(
            out,
            "algorithm={algorithm} B={blocks} threads={threads} points={} slope={:.4} intercept={:.4} r2={:.4}",
            est.points.len(),
            est.slope,
            est.intercept,
            est.r_squared
        )?;
        if blocks >= 2 {
            write!(
                out,
                " theoretical={:.4}",
                alpha_exponent::<f64>(blocks as u32)
            )?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn cmd_selftest<L: Limb>(args: &SelftestArgs, out: &mut dyn Write) -> Result<()> {
    let opts = SelftestOptions {
        seed: args.seed,
        oracle_cases: args.cases,
        exhaustive_small: args.exhaustive_small,
        inject_fault: args.inject_fault,
        ..SelftestOptions::default()
    };
    run_selftest::<L>(&opts, out)?;
    writeln!(out, "selftest passed")?;
    Ok(())
}

fn dispatch<L: Limb>(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Mul(a) => cmd_mul::<L>(a, out),
        Command::Bench(a) => cmd_bench::<L>(a, out, err),
        Command::Slope(a) => cmd_slope(a, out),
        Command::Selftest(a) => cmd_selftest::<L>(a, out),
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match cli.limb_bits {
        64 => dispatch::<u64>(&cli, out, err),
        _ => dispatch::<u32>(&cli, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
