//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toom_bench::bench::{build_engine, run_bench, BenchOptions};
use toom_bench::operands::{operand_pair, random_below, random_operand};
use toom_bench::selftest::{even_odd_suite, exhaustive_small, interpolation_suite};
use toom_bench::slope::fit_records;
use toom_core::interp::{even_odd_interpolate_counted, interpolate_counted};
use toom_core::{
    alpha_exponent, parse_decimal, to_decimal, toom_once, CoeffVector, CountingMultiplier, Integer,
    InterpProblem, Mode, Nat, RecursiveToom, Schoolbook, ToomConfig, ToomEngine, WorkCount,
};

const SEED: u64 = 20_260_101;

// Criterion 1.
const ORACLE_PAIRS: usize = 10_000;
const ORACLE_MIN_BITS: u64 = 16;
const ORACLE_MAX_BITS: u64 = 1_000_000;
/// Schoolbook threshold of the engines under test, low enough that
/// Toom-Cook runs at nearly every size in range.
const ORACLE_ENGINE_THRESHOLD: u64 = 512;

// Criteria 2 and 3.
const POLYS_PER_DEGREE: usize = 100;
const COEFF_BITS: u64 = 256;

// Criterion 4.
const ALPHA_TOLERANCE: f64 = 0.001;
const ALPHA_EXPECTED: [(u32, f64); 3] = [(2, 1.585), (16, 1.239), (32, 1.195)];

// Criterion 6.
const WORK_DEGREE: usize = 15;
const WORK_VALUE_BITS: u64 = 100_000;
const WORK_RATIO_BAND: (f64, f64) = (1.6, 2.4);

// Criterion 7. Ten log-spaced sizes.
const SLOPE_SIZES: [u64; 10] = [
    100_000, 166_810, 278_256, 464_159, 774_264, 1_291_550, 2_154_435, 3_593_814, 5_994_843,
    10_000_000,
];
const SLOPE_REPS: usize = 3;
const SLOPE_BAND: (f64, f64) = (1.20, 1.45);
const SLOPE_MIN_R2: f64 = 0.98;

// Criterion 8.
const SCALING_BITS: u64 = 10_000_000;
const SCALING_THREADS: [usize; 4] = [1, 2, 4, 8];
const SCALING_MIN_HOST_THREADS: usize = 8;
const SCALING_MIN_RATIO: f64 = 2.0;
const SCALING_REPS: usize = 3;

// Criterion 9.
const DECIMAL_VALUES: usize = 1_000;
const DECIMAL_MAX_BITS: u64 = 100_000;

type Check = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn log_uniform<R: Rng>(rng: &mut R, lo: u64, hi: u64) -> u64 {
    rng.gen_range((lo as f64).ln()..=(hi as f64).ln())
        .exp()
        .round() as u64
}

fn oracle_equivalence() -> Outcome {
    let mut engines: Vec<(String, ToomEngine<u32>)> = Vec::new();
    for blocks in [2usize, 4, 8, 16] {
        let config = ToomConfig::default()
            .with_threshold(ORACLE_ENGINE_THRESHOLD)
            .with_fixed_blocks(blocks)
            .unwrap();
        engines.push((
            format!("recursive B={blocks}"),
            ToomEngine::recursive(config, 1),
        ));
        let inner = Arc::new(RecursiveToom::new(
            ToomConfig::default().with_threshold(ORACLE_ENGINE_THRESHOLD),
        ));
        let wrapper = ToomEngine::wrapper(inner, 2 * blocks)
            .and_then(|e| e.with_fixed_blocks(blocks))
            .unwrap();
        engines.push((format!("wrapper B={blocks}"), wrapper));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut mismatches = Vec::new();
    for case in 0..ORACLE_PAIRS {
        let ub = log_uniform(&mut rng, ORACLE_MIN_BITS, ORACLE_MAX_BITS);
        // Alternate balanced and independently sized operands.
        let vb = if case % 2 == 0 {
            ub
        } else {
            log_uniform(&mut rng, ORACLE_MIN_BITS, ORACLE_MAX_BITS)
        };
        let u: Nat = random_operand(&mut rng, ub);
        let v: Nat = random_operand(&mut rng, vb);
        let (name, engine) = &engines[case % engines.len()];
        match engine.multiply(&u, &v) {
            Ok(w) if w == u.mul_schoolbook(&v) => {}
            Ok(_) => mismatches.push(format!("case {case} {name} {ub}x{vb}")),
            Err(e) => mismatches.push(format!("case {case} {name} {ub}x{vb}: {e}")),
        }
    }
    let exhaustive = exhaustive_small::<u32>();
    let pass = mismatches.is_empty() && exhaustive.is_ok();
    let mut detail = format!(
        "{ORACLE_PAIRS} pairs over {ORACLE_MIN_BITS}..{ORACLE_MAX_BITS} bits, {} mismatches",
        mismatches.len()
    );
    if let Some(first) = mismatches.first() {
        detail.push_str(&format!(" (first: {first}, seed {SEED})"));
    }
    match exhaustive {
        Ok(n) => detail.push_str(&format!("; {n} products below 2^12 exact")),
        Err(e) => detail.push_str(&format!("; exhaustive: {e}")),
    }
    outcome(pass, detail)
}

fn interpolation_round_trip() -> Outcome {
    match interpolation_suite::<u32>(SEED, POLYS_PER_DEGREE, COEFF_BITS) {
        Ok(n) => outcome(
            true,
            format!(
                "{n} polynomials, degrees 1..15, |coeff| < 2^{COEFF_BITS}, all divisions exact"
            ),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn even_odd_equivalence() -> Outcome {
    match even_odd_suite::<u32>(SEED, POLYS_PER_DEGREE, COEFF_BITS) {
        Ok(n) => outcome(true, format!("{n} product polynomials bit-identical")),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn exponent_formula() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (b, expected) in ALPHA_EXPECTED {
        let a = alpha_exponent::<f64>(b);
        pass &= (a - expected).abs() <= ALPHA_TOLERANCE;
        parts.push(format!(
            "B={b}: {a:.4} (want {expected} +/- {ALPHA_TOLERANCE})"
        ));
    }
    outcome(pass, parts.join(", "))
}

fn product_count() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let u: Nat = random_operand(&mut rng, 8192);
    let v: Nat = random_operand(&mut rng, 8192);
    let expect = u.mul_schoolbook(&v);
    let counter = CountingMultiplier::new(Schoolbook);
    let mut wrong = Vec::new();
    for blocks in 2..=16usize {
        counter.reset();
        let ok = toom_once(&u, &v, blocks, &counter, 1).is_ok_and(|w| w == expect);
        if !ok || counter.calls() != 2 * blocks - 1 {
            wrong.push(format!("B={blocks}: {} calls, exact={ok}", counter.calls()));
        }
    }
    if wrong.is_empty() {
        outcome(true, "2B-1 inner products for every B in 2..16")
    } else {
        outcome(false, wrong.join(", "))
    }
}

fn work_ratio() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let n = WORK_DEGREE;
    // Products of full half-width blocks, so the values are just above the
    // target width.
    let u: Vec<Nat> = (0..=n)
        .map(|_| random_operand(&mut rng, WORK_VALUE_BITS / 2))
        .collect();
    let v: Vec<Nat> = (0..=n)
        .map(|_| random_operand(&mut rng, WORK_VALUE_BITS / 2))
        .collect();
    let mut coeffs = vec![Nat::zero(); 2 * n + 1];
    for (i, a) in u.iter().enumerate() {
        for (j, b) in v.iter().enumerate() {
            coeffs[i + j] = &coeffs[i + j] + &a.mul_schoolbook(b);
        }
    }
    let w = CoeffVector::new(coeffs.into_iter().map(Integer::from).collect());
    let w0 = w.eval(0);
    let mut xs = vec![0i64];
    let mut ys = vec![w0.clone()];
    let mut pairs = Vec::new();
    for j in 0..n {
        let x = 1i64 << j;
        let (p, m) = (w.eval(x), w.eval(-x));
        xs.extend([x, -x]);
        ys.extend([p.clone(), m.clone()]);
        pairs.push((p, m, 1u32 << j));
    }
    let value_bits = ys
        .iter()
        .map(|y: &Integer<u32>| y.magnitude().bit_len())
        .max()
        .unwrap_or(0);
    let mut direct = WorkCount::default();
    let direct_res = interpolate_counted(&InterpProblem::new(xs, ys).unwrap(), &mut direct);
    let eo = even_odd_interpolate_counted(&w0, &pairs, n, false);
    match (direct_res, eo) {
        (Ok(d), Ok((e, eo_work))) if d == e => {
            let ratio = direct.limb_ops as f64 / eo_work.limb_ops as f64;
            let pass = ratio >= WORK_RATIO_BAND.0 && ratio <= WORK_RATIO_BAND.1;
            outcome(
                pass,
                format!(
                    "n={n}, values up to {value_bits} bits: direct {} / even-odd {} limb ops = {ratio:.3} (band [{}, {}])",
                    direct.limb_ops, eo_work.limb_ops, WORK_RATIO_BAND.0, WORK_RATIO_BAND.1
                ),
            )
        }
        _ => outcome(false, "interpolations failed or disagreed"),
    }
}

fn empirical_slope() -> Outcome {
    let opts = BenchOptions {
        sizes: SLOPE_SIZES.to_vec(),
        blocks: Some(16),
        threads: vec![1],
        reps: SLOPE_REPS,
        seed: SEED,
        mode: Mode::Recursive,
        ..BenchOptions::default()
    };
    let report = match run_bench::<u32>(&opts) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    match fit_records(&report.records) {
        Ok(fits) => {
            let (_, est) = &fits[0];
            let pass = est.slope >= SLOPE_BAND.0
                && est.slope <= SLOPE_BAND.1
                && est.r_squared >= SLOPE_MIN_R2;
            outcome(
                pass,
                format!(
                    "16-way recursive, 1 thread, {} sizes 1e5..1e7 bits: slope {:.4} (band [{}, {}]), r2 {:.4} (min {SLOPE_MIN_R2})",
                    est.points.len(),
                    est.slope,
                    SLOPE_BAND.0,
                    SLOPE_BAND.1,
                    est.r_squared
                ),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn median_time(engine: &ToomEngine<u32>, u: &Nat, v: &Nat) -> Duration {
    let mut times: Vec<Duration> = (0..SCALING_REPS)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(engine.multiply(u, v).unwrap());
            start.elapsed()
        })
        .collect();
    times.sort();
    times[times.len() / 2]
}

fn thread_scaling() -> Outcome {
    let (u, v) = operand_pair::<u32>(SEED, SCALING_BITS);
    let mut products = Vec::new();
    for mode in [Mode::Wrapper, Mode::Recursive] {
        for threads in SCALING_THREADS {
            let engine = build_engine::<u32>(mode, None, threads).unwrap();
            products.push(engine.multiply(&u, &v).unwrap());
        }
    }
    let identical = products.windows(2).all(|p| p[0] == p[1]);
    let mut detail = format!(
        "results at {SCALING_BITS} bits over threads {:?}, both modes: {}",
        SCALING_THREADS,
        if identical {
            "bit-identical"
        } else {
            "MISMATCH"
        }
    );

    let one = build_engine::<u32>(Mode::Wrapper, None, 1).unwrap();
    let eight = build_engine::<u32>(Mode::Wrapper, None, 8).unwrap();
    let ratio = median_time(&one, &u, &v).as_secs_f64() / median_time(&eight, &u, &v).as_secs_f64();
    let host = std::thread::available_parallelism().map_or(1, |n| n.get());
    let speedup_ok = if host >= SCALING_MIN_HOST_THREADS {
        detail.push_str(&format!(
            "; wrapper 8 vs 1 threads: {ratio:.3}x (min {SCALING_MIN_RATIO}x)"
        ));
        ratio >= SCALING_MIN_RATIO
    } else {
        detail.insert_str(0, "determinism part only: ");
        detail.push_str(&format!(
            "; speedup NOT EVALUATED: host has {host} hardware thread(s), needs {SCALING_MIN_HOST_THREADS} (measured {ratio:.3}x)"
        ));
        true
    };
    outcome(identical && speedup_ok, detail)
}

fn decimal_conversion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = 0;
    for _ in 0..DECIMAL_VALUES {
        let bits = log_uniform(&mut rng, 1, DECIMAL_MAX_BITS);
        let x: Nat = random_below(&mut rng, bits);
        let s = to_decimal(&x);
        if parse_decimal::<u32>(&s).ok() != Some(x) {
            failures += 1;
        }
    }
    let fixed = to_decimal(&Nat::from_u64(1024)) == "1024"
        && to_decimal(&Nat::zero()) == "0"
        && parse_decimal::<u32>("1024").ok() == Some(Nat::from_u64(1024))
        && parse_decimal::<u32>("0").ok() == Some(Nat::zero());
    outcome(
        failures == 0 && fixed,
        format!(
            "{DECIMAL_VALUES} values up to {DECIMAL_MAX_BITS} bits, {failures} round-trip failures; fixed cases {}",
            if fixed { "exact" } else { "WRONG" }
        ),
    )
}

fn main() {
    let criteria: [(&str, Check); 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("interpolation round trip", interpolation_round_trip),
        ("even-odd equivalence", even_odd_equivalence),
        ("exponent formula", exponent_formula),
        ("product count", product_count),
        ("even-odd work ratio", work_ratio),
        ("empirical slope", empirical_slope),
        ("thread scaling", thread_scaling),
        ("decimal conversion", decimal_conversion),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {} ({name}): {} [{:.1}s]",
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        failed += !o.pass as usize;
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
