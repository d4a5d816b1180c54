//! Built-in verification suites.

use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toom_core::{
    even_odd_interpolate, interpolate, toom_once, CoeffVector, InnerMultiplier, Integer,
    InterpProblem, Limb, Mode, Natural, Schoolbook, ToomConfig, ToomEngine,
};

use crate::error::{BenchError, Result};
use crate::operands::{operand_seed, random_below, random_operand};

#[derive(Debug, Clone)]
pub struct SelftestOptions {
    pub seed: u64,
    /// Random pairs in the oracle suite.
    pub oracle_cases: usize,
    /// Polynomials per degree in the interpolation suites.
    pub interp_cases: usize,
    pub exhaustive_small: bool,
    /// Corrupts one point product so the run must fail.
    pub inject_fault: bool,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        SelftestOptions {
            seed: 1,
            oracle_cases: 200,
            interp_cases: 10,
            exhaustive_small: false,
            inject_fault: false,
        }
    }
}

/// Adds one to the product with the given call index.
pub struct FaultyMultiplier {
    calls: AtomicUsize,
    at: usize,
}

impl FaultyMultiplier {
    pub fn new(at: usize) -> Self {
        FaultyMultiplier {
            calls: AtomicUsize::new(0),
            at,
        }
    }
}

impl<L: Limb> InnerMultiplier<L> for FaultyMultiplier {
    fn name(&self) -> &str {
        "faulty"
    }

    fn multiply(&self, a: &Natural<L>, b: &Natural<L>) -> toom_core::Result<Natural<L>> {
        let w = a.mul_schoolbook(b);
        if self.calls.fetch_add(1, Ordering::SeqCst) == self.at {
            Ok(&w + &Natural::one())
        } else {
            Ok(w)
        }
    }
}

fn fail(suite: &str, seed: u64, case: usize, what: String) -> BenchError {
    BenchError::Verification(format!("{suite}: case {case} (seed {seed}): {what}"))
}

/// Signed value with up to `bits` bits.
pub fn random_int<L: Limb, R: Rng>(rng: &mut R, bits: u64) -> Integer<L> {
    let negative = rng.gen::<bool>();
    Integer::from_parts(negative, random_below(rng, bits))
}

/// Engine results against schoolbook for both modes and B in {2, 4, 8, 16}.
pub fn oracle_suite<L: Limb>(seed: u64, cases: usize, max_bits: u64) -> Result<usize> {
    let mut engines = Vec::new();
    for blocks in [2usize, 4, 8, 16] {
        let config = ToomConfig::default()
            .with_threshold(256)
            .with_fixed_blocks(blocks)?;
        engines.push((
            Mode::Recursive,
            blocks,
            ToomEngine::<L>::recursive(config, 1),
        ));
        let inner = std::sync::Arc::new(toom_core::RecursiveToom::new(
            ToomConfig::default().with_threshold(256),
        ));
        let wrapper = ToomEngine::<L>::wrapper(inner, 2 * blocks)?.with_fixed_blocks(blocks)?;
        engines.push((Mode::Wrapper, blocks, wrapper));
    }
    let max_log = (max_bits.max(16) as f64).ln();
    for case in 0..cases {
        let case_seed = operand_seed(seed, case as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(case_seed);
        let ub = rng.gen_range(16f64.ln()..=max_log).exp() as u64;
        let vb = if rng.gen::<bool>() {
            ub
        } else {
            rng.gen_range(16f64.ln()..=max_log).exp() as u64
        };
        let u: Natural<L> = random_operand(&mut rng, ub);
        let v: Natural<L> = random_operand(&mut rng, vb);
        let (mode, blocks, engine) = &engines[case % engines.len()];
        let w = engine.multiply(&u, &v)?;
        if w != u.mul_schoolbook(&v) {
            return Err(fail(
                "oracle",
                seed,
                case,
                format!("{mode} B={blocks} {ub}x{vb} bits differs from schoolbook"),
            ));
        }
    }
    Ok(cases)
}

fn powers_of_two(n: usize) -> Vec<i64> {
    std::iter::once(0)
        .chain((0..n).map(|j| 1i64 << j))
        .collect()
}

/// Random degree-`n` polynomials recovered from their values at
/// `0, 1, 2, ..., 2^(n-1)`.
pub fn interpolation_suite<L: Limb>(seed: u64, cases: usize, coeff_bits: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(operand_seed(seed, 0x1e7));
    let mut done = 0;
    for n in 1..=15usize {
        let xs = powers_of_two(n);
        for case in 0..cases {
            let coeffs: Vec<Integer<L>> =
                (0..=n).map(|_| random_int(&mut rng, coeff_bits)).collect();
            let poly = CoeffVector::new(coeffs.clone());
            let ys = xs.iter().map(|&x| poly.eval(x)).collect();
            let got = interpolate(&InterpProblem::new(xs.clone(), ys)?)?;
            if got.coeffs() != coeffs.as_slice() {
                return Err(fail(
                    "interpolation",
                    seed,
                    case,
                    format!("degree {n} not recovered"),
                ));
            }
            done += 1;
        }
    }
    Ok(done)
}

/// Even-odd interpolation against direct interpolation on `0, ±2^j`.
pub fn even_odd_suite<L: Limb>(seed: u64, cases: usize, coeff_bits: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(operand_seed(seed, 0xe0));
    let mut done = 0;
    for n in 1..=15usize {
        for case in 0..cases {
            let w = random_product_poly::<L, _>(&mut rng, n, coeff_bits);
            let w0 = w.eval(0);
            let mut xs = vec![0i64];
            let mut ys = vec![w0.clone()];
            let mut pairs = Vec::with_capacity(n);
            for j in 0..n {
                let x = 1i64 << j;
                let (p, m) = (w.eval(x), w.eval(-x));
                xs.extend([x, -x]);
                ys.extend([p.clone(), m.clone()]);
                pairs.push((p, m, L::one() << j));
            }
            let direct = interpolate(&InterpProblem::new(xs, ys)?)?;
            let split = even_odd_interpolate(&w0, &pairs, n, false)?;
            if direct != split || direct.coeffs() != w.coeffs() {
                return Err(fail("even-odd", seed, case, format!("degree {n} mismatch")));
            }
            done += 1;
        }
    }
    Ok(done)
}

/// Coefficients of `U·V` for random degree-`n` block polynomials.
pub fn random_product_poly<L: Limb, R: Rng>(rng: &mut R, n: usize, bits: u64) -> CoeffVector<L> {
    let u: Vec<Natural<L>> = (0..=n).map(|_| random_below(rng, bits)).collect();
    let v: Vec<Natural<L>> = (0..=n).map(|_| random_below(rng, bits)).collect();
    let mut w = vec![Natural::<L>::zero(); 2 * n + 1];
    for (i, a) in u.iter().enumerate() {
        for (j, b) in v.iter().enumerate() {
            w[i + j] = &w[i + j] + &a.mul_schoolbook(b);
        }
    }
    CoeffVector::new(w.into_iter().map(Integer::from).collect())
}

/// Every product `a·b` with `a, b < 2^12` through one Karatsuba level, and
/// every pair below `2^6` through each B in 2..=16.
pub fn exhaustive_small<L: Limb>() -> Result<u64> {
    let naturals: Vec<Natural<L>> = (0..1u64 << 12).map(Natural::from_u64).collect();
    let mut checked = 0u64;
    for (a, na) in naturals.iter().enumerate() {
        for (b, nb) in naturals.iter().enumerate() {
            let w = toom_once(na, nb, 2, &Schoolbook, 1)?;
            if w.to_u64() != Some(a as u64 * b as u64) {
                return Err(BenchError::Verification(format!("exhaustive: {a} x {b}")));
            }
            checked += 1;
        }
    }
    for blocks in 3..=16 {
        for (a, na) in naturals[..64].iter().enumerate() {
            for (b, nb) in naturals[..64].iter().enumerate() {
                let w = toom_once(na, nb, blocks, &Schoolbook, 1)?;
                if w.to_u64() != Some(a as u64 * b as u64) {
                    return Err(BenchError::Verification(format!(
                        "exhaustive: {a} x {b} with B={blocks}"
                    )));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// One Toom-Cook product with a corrupted point product. Succeeds only if
/// the corruption goes undetected, which is a bug.
pub fn fault_injection<L: Limb>(seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(operand_seed(seed, 0xfa));
    let u: Natural<L> = random_operand(&mut rng, 4096);
    let v: Natural<L> = random_operand(&mut rng, 4096);
    let at = rng.gen_range(0..15);
    let w = toom_once(&u, &v, 8, &FaultyMultiplier::new(at), 1)?;
    if w != u.mul_schoolbook(&v) {
        return Err(BenchError::Verification(format!(
            "corrupted point product {at} produced a wrong result without an exactness error"
        )));
    }
    Err(BenchError::Verification(format!(
        "corrupted point product {at} was not detected"
    )))
}

/// Runs the suites in order, writing one line per suite. Stops at the first
/// failure.
pub fn run_selftest<L: Limb>(opts: &SelftestOptions, out: &mut dyn Write) -> Result<()> {
    if opts.inject_fault {
        writeln!(
            out,
            "fault injection: corrupting one point product (seed {})",
            opts.seed
        )?;
        fault_injection::<L>(opts.seed)?;
    }
    let n = oracle_suite::<L>(opts.seed, opts.oracle_cases, 20_000)?;
    writeln!(
        out,
        "oracle equivalence: ok ({n} cases, seed {})",
        opts.seed
    )?;
    let n = interpolation_suite::<L>(opts.seed, opts.interp_cases, 256)?;
    writeln!(
        out,
        "interpolation round trip: ok ({n} cases, seed {})",
        opts.seed
    )?;
    let n = even_odd_suite::<L>(opts.seed, opts.interp_cases, 256)?;
    writeln!(
        out,
        "even-odd equivalence: ok ({n} cases, seed {})",
        opts.seed
    )?;
    if opts.exhaustive_small {
        let n = exhaustive_small::<L>()?;
        writeln!(out, "exhaustive below 2^12: ok ({n} products)")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        assert_eq!(oracle_suite::<u32>(3, 16, 5000).unwrap(), 16);
        assert_eq!(interpolation_suite::<u64>(3, 1, 64).unwrap(), 15);
        assert_eq!(even_odd_suite::<u32>(3, 1, 64).unwrap(), 15);
    }

    #[test]
    fn injected_fault_is_an_exactness_error() {
        for seed in 0..8 {
            match fault_injection::<u32>(seed) {
                Err(BenchError::Engine(e)) => assert!(e.is_inexact(), "{e:?}"),
                other => panic!("seed {seed}: {other:?}"),
            }
        }
    }
}
