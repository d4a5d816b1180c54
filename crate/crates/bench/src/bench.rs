//! Timed runs over a list of operand sizes.

use std::sync::Arc;
use std::time::{Duration, Instant};

use toom_core::{Limb, Mode, Natural, RecursiveToom, ToomConfig, ToomEngine};

use crate::error::{BenchError, Result};
use crate::operands::{digest, operand_pair, operand_seed};
use crate::record::{Algorithm, BenchRecord};

/// Sizes at or below this many bits are checked against schoolbook.
pub const DEFAULT_ORACLE_CUTOFF: u64 = 100_000;

/// Block count used by recursive runs when none is given.
pub const DEFAULT_RECURSIVE_BLOCKS: usize = 16;

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub sizes: Vec<u64>,
    /// Fixed block count; `None` uses 16 in recursive mode and
    /// `threads / 2` in wrapper mode.
    pub blocks: Option<usize>,
    pub threads: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub mode: Mode,
    pub oracle_cutoff: u64,
    /// Also time plain schoolbook at sizes up to the oracle cutoff.
    pub baseline: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            sizes: vec![1 << 16],
            blocks: None,
            threads: vec![1],
            reps: 3,
            seed: 1,
            mode: Mode::Recursive,
            oracle_cutoff: DEFAULT_ORACLE_CUTOFF,
            baseline: false,
        }
    }
}

/// Operands and product of one size, as digests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeDigest {
    pub size_bits: u64,
    pub operand_seed: u64,
    pub u: u64,
    pub v: u64,
    pub product: u64,
}

/// `base_threads` time over `threads` time at one size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Improvement {
    pub size_bits: u64,
    pub base_threads: usize,
    pub threads: usize,
    pub ratio: f64,
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub digests: Vec<SizeDigest>,
    pub improvements: Vec<Improvement>,
}

/// Builds the engine for one configuration. Wrapper mode wraps the
/// recursive multiplier with default tiers.
pub fn build_engine<L: Limb>(
    mode: Mode,
    blocks: Option<usize>,
    threads: usize,
) -> Result<ToomEngine<L>> {
    let engine = match mode {
        Mode::Recursive => ToomEngine::recursive(ToomConfig::default(), threads)
            .with_fixed_blocks(blocks.unwrap_or(DEFAULT_RECURSIVE_BLOCKS))?,
        Mode::Wrapper => {
            let inner = Arc::new(RecursiveToom::new(ToomConfig::default()));
            let engine = ToomEngine::wrapper(inner, threads)?;
            match blocks {
                Some(b) => engine.with_fixed_blocks(b)?,
                None => engine,
            }
        }
    };
    Ok(engine)
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

fn algorithm_of(mode: Mode) -> Algorithm {
    match mode {
        Mode::Recursive => Algorithm::ToomRecursive,
        Mode::Wrapper => Algorithm::ToomWrapper,
    }
}

/// Checks one product: schoolbook up to the cutoff, otherwise agreement of
/// the 4-way and 16-way recursive results.
pub fn verify_product<L: Limb>(
    u: &Natural<L>,
    v: &Natural<L>,
    w: &Natural<L>,
    oracle_cutoff: u64,
) -> Result<()> {
    let size = u.bit_len().max(v.bit_len());
    if size <= oracle_cutoff {
        if &u.mul_schoolbook(v) != w {
            return Err(BenchError::Verification(format!(
                "{size}-bit product differs from schoolbook"
            )));
        }
        return Ok(());
    }
    let four = build_engine::<L>(Mode::Recursive, Some(4), 1)?.multiply(u, v)?;
    let sixteen = build_engine::<L>(Mode::Recursive, Some(16), 1)?.multiply(u, v)?;
    if four != sixteen {
        return Err(BenchError::Verification(format!(
            "{size}-bit products with B=4 and B=16 disagree"
        )));
    }
    if &four != w {
        return Err(BenchError::Verification(format!(
            "{size}-bit product differs from the B=4/B=16 reference"
        )));
    }
    Ok(())
}

/// Times every size at every thread count and verifies one product per size.
pub fn run_bench<L: Limb>(opts: &BenchOptions) -> Result<BenchReport> {
    if opts.reps == 0 {
        return Err(BenchError::Usage("--reps must be at least 1".into()));
    }
    if opts.sizes.is_empty() || opts.threads.is_empty() {
        return Err(BenchError::Usage(
            "need at least one size and one thread count".into(),
        ));
    }
    let mut report = BenchReport::default();
    for &size in &opts.sizes {
        let seed = operand_seed(opts.seed, size);
        let (u, v) = operand_pair::<L>(seed, size);
        let mut reference: Option<Natural<L>> = None;
        let mut timings: Vec<(usize, Duration)> = Vec::new();

        for &threads in &opts.threads {
            let engine = build_engine::<L>(opts.mode, opts.blocks, threads)?;
            let blocks = match opts.mode {
                Mode::Recursive => opts.blocks.unwrap_or(DEFAULT_RECURSIVE_BLOCKS),
                Mode::Wrapper => engine.plan(size, size).blocks().unwrap_or(1),
            };
            let mut walls = Vec::with_capacity(opts.reps);
            let mut overheads = Vec::with_capacity(opts.reps);
            let mut product = None;
            for _ in 0..opts.reps {
                let start = Instant::now();
                let (w, stats) = engine.multiply_with_stats(&u, &v)?;
                let wall = start.elapsed();
                walls.push(wall);
                overheads.push(stats.overhead.min(wall));
                product = Some(w);
            }
            let w = product.expect("reps >= 1");
            match &reference {
                None => {
                    verify_product(&u, &v, &w, opts.oracle_cutoff)?;
                    reference = Some(w);
                }
                Some(r) if *r != w => {
                    return Err(BenchError::Verification(format!(
                        "{size}-bit product with {threads} threads differs from {} threads",
                        opts.threads[0]
                    )));
                }
                Some(_) => {}
            }
            let wall = median(walls);
            timings.push((threads, wall));
            report.records.push(BenchRecord {
                size_bits: size,
                algorithm: algorithm_of(opts.mode),
                blocks,
                threads,
                rep: opts.reps,
                wall_seconds: wall.as_secs_f64(),
                overhead_seconds: median(overheads).as_secs_f64(),
                operand_seed: seed,
            });
        }

        if opts.baseline && size <= opts.oracle_cutoff {
            let walls = (0..opts.reps)
                .map(|_| {
                    let start = Instant::now();
                    std::hint::black_box(u.mul_schoolbook(&v));
                    start.elapsed()
                })
                .collect();
            report.records.push(BenchRecord {
                size_bits: size,
                algorithm: Algorithm::Schoolbook,
                blocks: 1,
                threads: 1,
                rep: opts.reps,
                wall_seconds: median(walls).as_secs_f64(),
                overhead_seconds: 0.0,
                operand_seed: seed,
            });
        }

        let (base_threads, base) = timings[0];
        for &(threads, t) in &timings[1..] {
            report.improvements.push(Improvement {
                size_bits: size,
                base_threads,
                threads,
                ratio: base.as_secs_f64() / t.as_secs_f64().max(f64::MIN_POSITIVE),
            });
        }
        report.digests.push(SizeDigest {
            size_bits: size,
            operand_seed: seed,
            u: digest(&u),
            v: digest(&v),
            product: digest(reference.as_ref().expect("at least one thread count")),
        });
    }
    Ok(report)
}

/// Whether `overhead / wall` is non-increasing over increasing sizes with at
/// most one inversion. Records should share one configuration.
pub fn overhead_trend_holds(records: &[BenchRecord]) -> bool {
    let mut rows: Vec<&BenchRecord> = records.iter().filter(|r| r.wall_seconds > 0.0).collect();
    rows.sort_by_key(|r| r.size_bits);
    let fractions: Vec<f64> = rows
        .iter()
        .map(|r| r.overhead_seconds / r.wall_seconds)
        .collect();
    fractions.windows(2).filter(|w| w[1] > w[0]).count() <= 1
}
