//! The B-way Toom-Cook driver.
//!
//! One level of the algorithm splits both operands into `B` blocks, evaluates
//! them at `0` and `±2^j` for `j < B - 1`, forms the `2B - 1` point products
//! through an [`InnerMultiplier`], interpolates with the even-odd method and
//! recombines at `2^b`.
//!
//! Two modes sit on top of that step. In recursive mode the point products
//! are again Toom-Cook products down to a schoolbook threshold. In wrapper
//! mode a single top-level split parallelizes an arbitrary inner multiplier,
//! with `B` chosen so that the `2B - 1` products fit the thread count.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::Float;

use crate::error::{Error, Result};
use crate::executor::Executor;
use crate::int::Integer;
use crate::interp::even_odd_interpolate;
use crate::limb::Limb;
use crate::nat::Natural;
use crate::poly::{eval_pair, recombine, split};

/// Largest supported block count.
pub const MAX_BLOCKS: usize = 16;

/// Default bit size below which schoolbook multiplication is used
/// (about 3000 decimal digits).
pub const DEFAULT_SCHOOLBOOK_THRESHOLD: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Recursive,
    Wrapper,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Recursive => "recursive",
            Mode::Wrapper => "wrapper",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursive" => Ok(Mode::Recursive),
            "wrapper" => Ok(Mode::Wrapper),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// An exact multiplication backend for point products.
///
/// Implementations must be pure: the same inputs always give the same exact
/// product. This is the attachment point for external backends.
pub trait InnerMultiplier<L: Limb>: Send + Sync {
    fn name(&self) -> &str;

    fn multiply(&self, a: &Natural<L>, b: &Natural<L>) -> Result<Natural<L>>;
}

/// Quadratic reference backend.
#[derive(Debug, Clone, Copy, Default)]
pub struct Schoolbook;

impl<L: Limb> InnerMultiplier<L> for Schoolbook {
    fn name(&self) -> &str {
        "schoolbook"
    }

    fn multiply(&self, a: &Natural<L>, b: &Natural<L>) -> Result<Natural<L>> {
        Ok(a.mul_schoolbook(b))
    }
}

/// Counts calls to a wrapped multiplier.
pub struct CountingMultiplier<M> {
    inner: M,
    calls: AtomicUsize,
}

impl<M> CountingMultiplier<M> {
    pub fn new(inner: M) -> Self {
        CountingMultiplier {
            inner,
            calls: AtomicUsize::new(0),
        }
    }

    pub fn calls(&self) -> usize {
        self.calls.load(Ordering::SeqCst)
    }

    pub fn reset(&self) {
        self.calls.store(0, Ordering::SeqCst);
    }
}

impl<L: Limb, M: InnerMultiplier<L>> InnerMultiplier<L> for CountingMultiplier<M> {
    fn name(&self) -> &str {
        self.inner.name()
    }

    fn multiply(&self, a: &Natural<L>, b: &Natural<L>) -> Result<Natural<L>> {
        self.calls.fetch_add(1, Ordering::SeqCst);
        self.inner.multiply(a, b)
    }
}

/// Checks a backend against schoolbook multiplication on small inputs.
pub fn verify_inner<L: Limb>(inner: &dyn InnerMultiplier<L>) -> Result<()> {
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut cases: Vec<(Natural<L>, Natural<L>)> = vec![
        (Natural::zero(), Natural::from_u64(12345)),
        (Natural::one(), Natural::from_u64(u64::MAX)),
        (Natural::from_u64(u64::MAX), Natural::from_u64(u64::MAX)),
    ];
    for len in [1usize, 3, 8, 21] {
        let limbs = |n: &mut dyn FnMut() -> u64| {
            Natural::from_limbs((0..len).map(|_| L::from_u64_lossy(n())).collect())
        };
        cases.push((limbs(&mut next), limbs(&mut next)));
    }
    for (a, b) in &cases {
        if inner.multiply(a, b)? != a.mul_schoolbook(b) {
            return Err(Error::InexactMultiplier(inner.name().to_string()));
        }
    }
    Ok(())
}

/// Size tiers for recursive mode: a product whose larger operand is below
/// `multiple × threshold` bits uses the paired block count, and anything
/// larger uses `top`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TierTable {
    tiers: Vec<(u64, usize)>,
    top: usize,
}

impl TierTable {
    pub fn new(tiers: Vec<(u64, usize)>, top: usize) -> Result<Self> {
        let all = tiers.iter().map(|&(_, b)| b).chain(std::iter::once(top));
        for b in all {
            if !(2..=MAX_BLOCKS).contains(&b) {
                return Err(Error::InvalidPlan(format!(
                    "block count {b} outside 2..=16"
                )));
            }
        }
        if tiers.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidPlan("tier bounds must increase".into()));
        }
        Ok(TierTable { tiers, top })
    }

    pub fn blocks_for(&self, bits: u64, threshold: u64) -> usize {
        let threshold = threshold.max(1);
        self.tiers
            .iter()
            .find(|&&(multiple, _)| bits < multiple.saturating_mul(threshold))
            .map_or(self.top, |&(_, b)| b)
    }
}

impl Default for TierTable {
    fn default() -> Self {
        TierTable {
            tiers: vec![(4, 2), (32, 4), (256, 8)],
            top: 16,
        }
    }
}

/// Tunables for plan selection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToomConfig {
    /// Products whose smaller operand has fewer bits use schoolbook.
    pub schoolbook_threshold: u64,
    pub tiers: TierTable,
    /// Overrides the tier table at every level when set.
    pub fixed_blocks: Option<usize>,
    /// Lets recursive levels below the top also run products concurrently.
    pub nested_concurrency: bool,
}

impl Default for ToomConfig {
    fn default() -> Self {
        ToomConfig {
            schoolbook_threshold: DEFAULT_SCHOOLBOOK_THRESHOLD,
            tiers: TierTable::default(),
            fixed_blocks: None,
            nested_concurrency: false,
        }
    }
}

impl ToomConfig {
    pub fn with_fixed_blocks(mut self, blocks: usize) -> Result<Self> {
        check_blocks(blocks)?;
        self.fixed_blocks = Some(blocks);
        Ok(self)
    }

    pub fn with_threshold(mut self, bits: u64) -> Self {
        self.schoolbook_threshold = bits;
        self
    }
}

fn check_blocks(blocks: usize) -> Result<()> {
    if (2..=MAX_BLOCKS).contains(&blocks) {
        Ok(())
    } else {
        Err(Error::InvalidPlan(format!(
            "block count {blocks} outside 2..={MAX_BLOCKS}"
        )))
    }
}

/// Block layout of one Toom-Cook level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub blocks: usize,
    pub block_bits: u64,
}

/// The outcome of plan selection for one product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToomPlan {
    /// `None` means no split: schoolbook in recursive mode, a direct inner
    /// call in wrapper mode.
    pub split: Option<Split>,
    pub schoolbook_threshold: u64,
    pub concurrency_budget: usize,
    pub mode: Mode,
}

impl ToomPlan {
    /// Number of products at the top level.
    pub fn products(&self) -> usize {
        self.split.map_or(1, |s| 2 * s.blocks - 1)
    }

    pub fn blocks(&self) -> Option<usize> {
        self.split.map(|s| s.blocks)
    }
}

/// Smallest multiple of the limb width with `blocks × b ≥ bits`.
pub fn block_bits_for<L: Limb>(bits: u64, blocks: usize) -> u64 {
    let limb = L::BITS as u64;
    let per_block = bits.div_ceil(blocks as u64).max(1);
    per_block.div_ceil(limb) * limb
}

fn bits_to_limbs<L: Limb>(bits: u64) -> u64 {
    bits.div_ceil(L::BITS as u64)
}

pub fn choose_plan<L: Limb>(
    u_bits: u64,
    v_bits: u64,
    threads: usize,
    mode: Mode,
    config: &ToomConfig,
) -> ToomPlan {
    let threads = threads.max(1);
    let max_bits = u_bits.max(v_bits);
    let min_bits = u_bits.min(v_bits);
    let blocks = match mode {
        Mode::Recursive => {
            let b = config.fixed_blocks.unwrap_or_else(|| {
                config
                    .tiers
                    .blocks_for(max_bits, config.schoolbook_threshold)
            });
            // Below 2B limbs the evaluated points would not be smaller than
            // the operands, so the recursion has to stop there.
            let too_small = min_bits < config.schoolbook_threshold
                || bits_to_limbs::<L>(min_bits) < 2 * b as u64;
            (!too_small).then_some(b)
        }
        Mode::Wrapper => (threads > 1 && min_bits > 0).then(|| {
            config
                .fixed_blocks
                .unwrap_or((threads / 2).clamp(2, MAX_BLOCKS))
        }),
    };
    ToomPlan {
        split: blocks.map(|blocks| Split {
            blocks,
            block_bits: block_bits_for::<L>(max_bits, blocks),
        }),
        schoolbook_threshold: config.schoolbook_threshold,
        concurrency_budget: threads,
        mode,
    }
}

/// `log(2B - 1) / log(B)`, the exponent of B-way Toom-Cook without parallelism.
pub fn alpha_exponent<T: Float>(blocks: u32) -> T {
    let b = T::from(blocks).expect("block count is representable");
    let m = T::from(2 * blocks - 1).expect("product count is representable");
    m.ln() / b.ln()
}

/// Timing and bookkeeping of one top-level product.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ToomStats {
    /// Inner multiplications issued at the top level.
    pub products: usize,
    pub wall: Duration,
    /// Splitting, evaluation, interpolation and recombination.
    pub overhead: Duration,
    pub blocks: Option<usize>,
    /// Extra memory guidance: six times the larger argument, scaled by
    /// `threads / B` when that exceeds one. Reported only.
    pub scratch_estimate_bytes: u64,
}

/// One level of Toom-Cook with `blocks` blocks per operand.
pub fn toom_once<L: Limb>(
    u: &Natural<L>,
    v: &Natural<L>,
    blocks: usize,
    inner: &dyn InnerMultiplier<L>,
    budget: usize,
) -> Result<Natural<L>> {
    toom_once_with_stats(u, v, blocks, inner, budget).map(|(w, _)| w)
}

pub fn toom_once_with_stats<L: Limb>(
    u: &Natural<L>,
    v: &Natural<L>,
    blocks: usize,
    inner: &dyn InnerMultiplier<L>,
    budget: usize,
) -> Result<(Natural<L>, ToomStats)> {
    check_blocks(blocks)?;
    let start = Instant::now();
    let n = blocks - 1;
    let block_bits = block_bits_for::<L>(u.bit_len().max(v.bit_len()), blocks);
    let up = split(u, blocks, block_bits)?;
    let vp = split(v, blocks, block_bits)?;

    // Task order: W(0), then W(2^j), W(-2^j) for each j.
    let mut tasks: Vec<(Natural<L>, Natural<L>)> = Vec::with_capacity(2 * n + 1);
    let mut minus_signs = Vec::with_capacity(n);
    tasks.push((up.blocks()[0].clone(), vp.blocks()[0].clone()));
    for j in 0..n as u32 {
        let (u_plus, u_minus) = eval_pair(&up, j);
        let (v_plus, v_minus) = eval_pair(&vp, j);
        let (_, u_plus) = u_plus.into_parts();
        let (_, v_plus) = v_plus.into_parts();
        let (u_neg, u_minus) = u_minus.into_parts();
        let (v_neg, v_minus) = v_minus.into_parts();
        tasks.push((u_plus, v_plus));
        tasks.push((u_minus, v_minus));
        minus_signs.push(u_neg != v_neg);
    }
    drop(up);
    drop(vp);

    let products_start = Instant::now();
    let products = Executor::new(budget).run(&tasks, |(a, b)| inner.multiply(a, b));
    let products_time = products_start.elapsed();
    let product_count = products.len();
    drop(tasks);

    let mut products = products.into_iter();
    let w0 = Integer::from(products.next().expect("W(0) task")?);
    let mut pairs = Vec::with_capacity(n);
    for (j, negative) in minus_signs.into_iter().enumerate() {
        let plus = products.next().expect("W(2^j) task")?;
        let minus = products.next().expect("W(-2^j) task")?;
        pairs.push((
            Integer::from(plus),
            Integer::from_parts(negative, minus),
            L::one() << j,
        ));
    }
    let coeffs = even_odd_interpolate(&w0, &pairs, n, budget > 1)?;
    let w = recombine(coeffs.coeffs(), block_bits)?;

    let wall = start.elapsed();
    let stats = ToomStats {
        products: product_count,
        wall,
        overhead: wall.saturating_sub(products_time),
        blocks: Some(blocks),
        scratch_estimate_bytes: scratch_estimate::<L>(u, v, blocks, budget),
    };
    Ok((w, stats))
}

fn scratch_estimate<L: Limb>(u: &Natural<L>, v: &Natural<L>, blocks: usize, threads: usize) -> u64 {
    let bytes = u.len().max(v.len()) as f64 * (L::BITS / 8) as f64;
    let scale = (threads as f64 / blocks as f64).max(1.0);
    (6.0 * bytes * scale) as u64
}

/// Recursive Toom-Cook used as an inner multiplier.
#[derive(Debug, Clone)]
pub struct RecursiveToom {
    config: ToomConfig,
    budget: usize,
}

impl RecursiveToom {
    pub fn new(config: ToomConfig) -> Self {
        RecursiveToom { config, budget: 1 }
    }

    /// Lets every level dispatch its products on up to `budget` threads.
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget.max(1);
        self
    }
}

impl<L: Limb> InnerMultiplier<L> for RecursiveToom {
    fn name(&self) -> &str {
        "toom-recursive"
    }

    fn multiply(&self, a: &Natural<L>, b: &Natural<L>) -> Result<Natural<L>> {
        if a.is_zero() || b.is_zero() {
            return Ok(Natural::zero());
        }
        let plan = choose_plan::<L>(a.bit_len(), b.bit_len(), 1, Mode::Recursive, &self.config);
        match plan.split {
            None => Ok(a.mul_schoolbook(b)),
            Some(s) => toom_once(a, b, s.blocks, self, self.budget),
        }
    }
}

/// A configured multiplier: mode, thread budget and, in wrapper mode, the
/// inner backend.
#[derive(Clone)]
pub struct ToomEngine<L: Limb = u32> {
    mode: Mode,
    threads: usize,
    config: ToomConfig,
    inner: Arc<dyn InnerMultiplier<L>>,
}

impl<L: Limb> fmt::Debug for ToomEngine<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ToomEngine")
            .field("mode", &self.mode)
            .field("threads", &self.threads)
            .field("config", &self.config)
            .field("inner", &self.inner.name())
            .finish()
    }
}

impl<L: Limb> ToomEngine<L> {
    /// Recursive Toom-Cook; `threads` bounds the top-level concurrency.
    pub fn recursive(config: ToomConfig, threads: usize) -> Self {
        let threads = threads.max(1);
        let inner_budget = if config.nested_concurrency {
            threads
        } else {
            1
        };
        let inner = RecursiveToom::new(config.clone()).with_budget(inner_budget);
        ToomEngine {
            mode: Mode::Recursive,
            threads,
            config,
            inner: Arc::new(inner),
        }
    }

    /// One top-level split spreading the products of `inner` over `threads`.
    /// The backend is checked against schoolbook before it is accepted.
    pub fn wrapper(inner: Arc<dyn InnerMultiplier<L>>, threads: usize) -> Result<Self> {
        verify_inner(inner.as_ref())?;
        Ok(ToomEngine {
            mode: Mode::Wrapper,
            threads: threads.max(1),
            config: ToomConfig::default(),
            inner,
        })
    }

    /// Wrapper mode with a fixed block count instead of `threads / 2`.
    pub fn with_fixed_blocks(mut self, blocks: usize) -> Result<Self> {
        self.config = self.config.with_fixed_blocks(blocks)?;
        if self.mode == Mode::Recursive {
            let inner_budget = if self.config.nested_concurrency {
                self.threads
            } else {
                1
            };
            self.inner =
                Arc::new(RecursiveToom::new(self.config.clone()).with_budget(inner_budget));
        }
        Ok(self)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    pub fn config(&self) -> &ToomConfig {
        &self.config
    }

    pub fn inner(&self) -> &dyn InnerMultiplier<L> {
        self.inner.as_ref()
    }

    pub fn plan(&self, u_bits: u64, v_bits: u64) -> ToomPlan {
        choose_plan::<L>(u_bits, v_bits, self.threads, self.mode, &self.config)
    }

    pub fn multiply(&self, u: &Natural<L>, v: &Natural<L>) -> Result<Natural<L>> {
        self.multiply_with_stats(u, v).map(|(w, _)| w)
    }

    pub fn multiply_with_stats(
        &self,
        u: &Natural<L>,
        v: &Natural<L>,
    ) -> Result<(Natural<L>, ToomStats)> {
        let start = Instant::now();
        let plan = self.plan(u.bit_len(), v.bit_len());
        match plan.split {
            Some(s) => toom_once_with_stats(u, v, s.blocks, self.inner.as_ref(), self.threads),
            None => {
                let w = match self.mode {
                    Mode::Wrapper => self.inner.multiply(u, v)?,
                    Mode::Recursive if u.is_zero() || v.is_zero() => Natural::zero(),
                    Mode::Recursive => u.mul_schoolbook(v),
                };
                let stats = ToomStats {
                    products: 1,
                    wall: start.elapsed(),
                    ..ToomStats::default()
                };
                Ok((w, stats))
            }
        }
    }
}

impl<L: Limb> InnerMultiplier<L> for ToomEngine<L> {
    fn name(&self) -> &str {
        match self.mode {
            Mode::Recursive => "toom-recursive",
            Mode::Wrapper => "toom-wrapper",
        }
    }

    fn multiply(&self, a: &Natural<L>, b: &Natural<L>) -> Result<Natural<L>> {
        ToomEngine::multiply(self, a, b)
    }
}

/// Single-threaded recursive Toom-Cook with the default plan.
pub fn multiply<L: Limb>(u: &Natural<L>, v: &Natural<L>) -> Result<Natural<L>> {
    ToomEngine::recursive(ToomConfig::default(), 1).multiply(u, v)
}
