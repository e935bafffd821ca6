use evenodd_cli::{run, Outcome, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use std::fs;

fn cli(args: &str) -> Outcome {
    run(std::iter::once("evenodd").chain(args.split_whitespace()))
}

#[test]
fn formula_thm2() {
    let o = cli("formula thm2 --k 2 --n 4");
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "-1\n");
}

#[test]
fn signed_shifts_size_by_k() {
    let o = cli("signed --class minpart --k 2 --n 5");
    assert_eq!(o.stdout, "odd=2 even=3 diff=-1 size=6\n");
    let o = cli("signed --class minpart --k 2 --size 5");
    assert_eq!(o.stdout, "odd=1 even=2 diff=-1 size=5\n");
}

#[test]
fn signed_matches_formula() {
    for n in 1..=12 {
        let s = cli(&format!(
            "signed --class minpart --k 3 --n {n} --format bfile"
        ));
        let f = cli(&format!("formula thm2 --k 3 --n {n}"));
        let diff = s.stdout.split_whitespace().nth(1).unwrap().to_string();
        assert_eq!(format!("{diff}\n"), f.stdout, "n={n}");
    }
}

#[test]
fn count_csv() {
    let o = cli("count --class all --n 5 --format csv");
    assert_eq!(o.stdout, "size,count\n5,16\n");
}

#[test]
fn missing_parameter_is_usage_error() {
    let o = cli("count --class minpart --n 5");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("--k"));
    assert_eq!(cli("signed --class all").code, EXIT_USAGE);
    assert_eq!(cli("frobnicate").code, EXIT_USAGE);
}

#[test]
fn invalid_parameter_is_usage_error() {
    assert_eq!(cli("formula thm3 --k 3 --r 2 --s 2 --n 4").code, EXIT_USAGE);
    assert_eq!(cli("count --class minpart --k 0 --n 3").code, EXIT_USAGE);
}

#[test]
fn rational_series() {
    let o = cli("series rational --num 1 --den 1,-1,-1 --order 7");
    assert_eq!(o.stdout, "1,1,2,3,5,8,13,21\n");
    let o = cli("series rational --num 1 --den 2,1 --order 3");
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn pentagonal_series() {
    let o = cli("series pentagonal --order 12");
    assert_eq!(o.stdout, "1,-1,-1,0,0,1,0,1,0,0,0,0,-1\n");
}

#[test]
fn verify_pass_and_report() {
    let o = cli("verify thm2 --max-n 10 --max-k 3");
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("status: pass"));
    assert!(o.stdout.contains("instances: 30"));
    assert_eq!(cli("verify nonsense").code, EXIT_USAGE);
}

#[test]
fn verify_sequential_matches_parallel() {
    let a = cli("verify franklin --max-n 12");
    let b = cli("verify franklin --max-n 12 --sequential");
    assert_eq!(a, b);
}

#[test]
fn period_of_corollary_sequence() {
    let o = cli("period --seq cor-period --r 2 --s 1 --max-n 48");
    assert_eq!(o.stdout, "preperiod=0 period=12 window=48\n");
    let o = cli("period --seq thm2 --k 3 --max-n 60");
    assert!(o.stdout.starts_with("aperiodic"));
}

#[test]
fn bfile_emit_exact_bytes() {
    let o = cli("bfile emit --seq thm2 --k 2 --max-n 6");
    assert_eq!(o.stdout, "1 1\n2 1\n3 0\n4 -1\n5 -1\n6 0\n");
}

#[test]
fn bfile_round_trip_and_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    let p = path.to_str().unwrap();

    let o = cli(&format!(
        "bfile emit --seq thm3 --k 2 --r 3 --s 1 --max-n 25 --file {p}"
    ));
    assert_eq!(o.code, EXIT_OK);
    let o = cli(&format!(
        "bfile check --seq thm3 --k 2 --r 3 --s 1 --file {p}"
    ));
    assert_eq!(o.code, EXIT_OK, "{o:?}");
    assert!(o.stdout.contains("25 terms"));

    let text = fs::read_to_string(&path)
        .unwrap()
        .replace("\n10 ", "\n10 999");
    fs::write(&path, text).unwrap();
    let o = cli(&format!(
        "bfile check --seq thm3 --k 2 --r 3 --s 1 --file {p}"
    ));
    assert_eq!(o.code, EXIT_FAIL);
    assert!(o.stdout.contains("index 10"), "{}", o.stdout);
}

#[test]
fn bfile_offset_relabels() {
    let o = cli("bfile emit --seq thm2 --k 2 --max-n 3 --offset 0");
    assert_eq!(o.stdout, "0 1\n1 1\n2 0\n");
}

#[test]
fn bfile_malformed_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "1 1\n3 0\n").unwrap();
    let o = cli(&format!(
        "bfile check --seq thm2 --k 2 --file {}",
        path.display()
    ));
    assert_eq!(o.code, EXIT_USAGE);
}
