use std::io::Write;

use toom_bench::cli::run_with;
use toom_bench::record::{append_records, read_records_from};
use toom_bench::{fit_records, Algorithm, BenchRecord};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("toombench").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn mul_fixed_cases() {
    assert_eq!(
        run(&["mul", "1024", "1024"]),
        (0, "1048576\n".into(), String::new())
    );
    let (code, out, _) = run(&["mul", "0", "98765432109876543210"]);
    assert_eq!((code, out.as_str()), (0, "0\n"));
    let (code, out, _) = run(&["mul", "0xff", "0x100", "--base", "16"]);
    assert_eq!((code, out.as_str()), (0, "0xff00\n"));
    let (code, out, _) = run(&["--limb-bits", "64", "mul", "18446744073709551616", "3"]);
    assert_eq!((code, out.as_str()), (0, "55340232221128654848\n"));
}

#[test]
fn mul_large_matches_schoolbook() {
    let a = "7".repeat(2000);
    let b = "3".repeat(1500);
    for mode in ["recursive", "wrapper"] {
        let (code, out, err) = run(&[
            "mul",
            &a,
            &b,
            "--mode",
            mode,
            "--threads",
            "4",
            "--selftest",
        ]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out.trim().len(), 3500);
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["mul", "12a", "3"]).0, 1);
    assert_eq!(run(&["mul", "1"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["mul", "1", "2", "--B", "17"]).0, 1);
    assert_eq!(run(&["bench", "--sizes", "abc"]).0, 1);
    assert_eq!(run(&["--limb-bits", "16", "mul", "1", "2"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn bench_single_size_one_row() {
    let (code, out, err) = run(&["bench", "--sizes", "2^16", "--threads", "1", "--reps", "3"]);
    assert_eq!(code, 0, "{err}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "size_bits,algorithm,B,threads,rep,wall_seconds,overhead_seconds,operand_seed"
    );
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("65536,toom-recursive,16,1,3,"));
}

#[test]
fn bench_reports_improvement_ratio() {
    let (code, out, err) = run(&[
        "bench",
        "--sizes",
        "50000",
        "--threads",
        "1,4",
        "--reps",
        "1",
        "--mode",
        "wrapper",
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.lines().count(), 3);
    assert!(err.contains("improvement at 50000 bits"), "{err}");
}

#[test]
fn seeded_digests_repeat() {
    let args = [
        "bench",
        "--sizes",
        "3000,9000",
        "--reps",
        "1",
        "--seed",
        "7",
        "--digests",
    ];
    let digests = |err: String| -> Vec<String> {
        err.lines()
            .filter(|l| l.starts_with("digest"))
            .map(str::to_owned)
            .collect()
    };
    let (_, _, first) = run(&args);
    let (_, _, second) = run(&args);
    let first = digests(first);
    assert_eq!(first.len(), 2);
    assert_eq!(first, digests(second));
    let (_, _, wide) = run(&[&["--limb-bits", "64"], &args[..]].concat());
    assert_eq!(first, digests(wide));
}

#[test]
fn csv_append_and_slope_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("runs.csv");
    let p = path.to_str().unwrap();
    for sizes in ["20000,40000", "80000,160000"] {
        let (code, out, err) = run(&["bench", "--sizes", sizes, "--reps", "3", "--csv", p]);
        assert_eq!(code, 0, "{err}");
        assert!(out.is_empty());
    }
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.matches("size_bits").count(), 1);
    assert!(!text.contains('\r'));
    let rows = read_records_from(&path).unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.overhead_seconds <= r.wall_seconds));

    let (code, out, err) = run(&["slope", "--csv", p]);
    assert_eq!(code, 0, "{err}");
    assert!(
        out.starts_with("algorithm=toom-recursive B=16 threads=1 points=4 slope="),
        "{out}"
    );
}

fn synthetic(path: &std::path::Path, sizes: &[u64], f: impl Fn(f64) -> f64) {
    let rows: Vec<BenchRecord> = sizes
        .iter()
        .map(|&n| BenchRecord {
            size_bits: n,
            algorithm: Algorithm::ToomRecursive,
            blocks: 16,
            threads: 1,
            rep: 3,
            wall_seconds: f(n as f64),
            overhead_seconds: 0.0,
            operand_seed: 0,
        })
        .collect();
    append_records(path, &rows).unwrap();
}

#[test]
fn slope_of_synthetic_rows() {
    let dir = tempfile::tempdir().unwrap();
    let sizes = [100_000, 300_000, 1_000_000, 3_000_000, 10_000_000];

    let power = dir.path().join("power.csv");
    synthetic(&power, &sizes, |n| 1e-9 * n.powf(1.3));
    let est = &fit_records(&read_records_from(&power).unwrap()).unwrap()[0].1;
    assert!((est.slope - 1.3).abs() <= 1e-6, "{}", est.slope);
    let (code, out, _) = run(&["slope", "--csv", power.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("slope=1.3000"), "{out}");

    let linear = dir.path().join("linear.csv");
    synthetic(&linear, &sizes, |n| 4e-8 * n);
    let est = &fit_records(&read_records_from(&linear).unwrap()).unwrap()[0].1;
    assert!((est.slope - 1.0).abs() <= 1e-9);
}

#[test]
fn slope_needs_four_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("short.csv");
    synthetic(&path, &[1000, 2000, 4000], |n| n);
    let (code, _, err) = run(&["slope", "--csv", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("at least 4 rows"), "{err}");

    let (code, _, _) = run(&[
        "slope",
        "--csv",
        dir.path().join("missing.csv").to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
}

#[test]
fn slope_rejects_foreign_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("other.csv");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "n,t\n1,2").unwrap();
    assert_eq!(run(&["slope", "--csv", path.to_str().unwrap()]).0, 1);
}

#[test]
fn selftest_passes_and_fault_fails() {
    let (code, out, err) = run(&["selftest", "--cases", "40", "--seed", "9"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("oracle equivalence: ok"));
    assert!(out.contains("even-odd equivalence: ok"));
    assert!(out.ends_with("selftest passed\n"));

    let (code, _, err) = run(&["selftest", "--inject-fault"]);
    assert_eq!(code, 3, "{err}");
    assert!(err.contains("inexact"), "{err}");
}
