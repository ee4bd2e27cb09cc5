use jacobspin::cli::{run, EXIT_OK, EXIT_STRICT, EXIT_USAGE};
use jacobspin::output::Row;
use jacobspin::report::{Report, Status};
use jacobspin_core::{HypSpinor, Rational};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jacobspin").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn pretty_gen_prints_only_terms_on_stdout() {
    let (code, out, err) = call(&[
        "gen", "--seq", "hsj", "--from", "0", "--to", "2", "--format", "pretty",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "[3u; -1+u]\n[1+5u; -1+3u]\n[1+11u; -3+5u]\n");
    assert!(err.contains("u^2 = +1"));
}

#[test]
fn integer_sequences() {
    let (_, out, _) = call(&["gen", "--seq", "j", "--to", "10"]);
    assert_eq!(out.lines().last(), Some("341"));
    let (_, out, _) = call(&["gen", "--seq", "jl", "--from", "5", "--to", "5"]);
    assert_eq!(out, "31\n");
    let (_, out, _) = call(&["gen", "--seq", "sjlq", "--to", "0"]);
    assert_eq!(out, "2+i+5j+7k\n");
}

#[test]
fn quaternion_ops() {
    assert_eq!(
        call(&["quat", "--op", "mul", "--lhs", "i", "--rhs", "j"]).1,
        "k\n"
    );
    assert_eq!(
        call(&["quat", "--op", "mul", "--lhs", "j", "--rhs", "k"]).1,
        "-i\n"
    );
    assert_eq!(
        call(&["quat", "--op", "conj", "--lhs", "1+2i+3j+4k"]).1,
        "1-2i-3j-4k\n"
    );
    assert_eq!(call(&["quat", "--op", "norm", "--lhs", "i+j+3k"]).1, "-9\n");
    assert_eq!(call(&["quat", "--op", "norm", "--lhs", "j"]).1, "-1\n");
    assert_eq!(call(&["quat", "--op", "mul", "--lhs", "i"]).0, EXIT_USAGE);
    assert_eq!(call(&["quat", "--op", "norm", "--lhs", "2x"]).0, EXIT_USAGE);
}

#[test]
fn polynomial_terms() {
    let (code, out, _) = call(&["poly", "--n", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "[1+(1 + 4*x)u; -1+(1 + 2*x)u]\n");
    assert_eq!(
        call(&["poly", "--n", "0", "--eval-at", "1"]).1,
        "[3u; -1+u]\n"
    );
    assert_eq!(
        call(&["poly", "--n", "3", "--eval-at", "1/2"]).1,
        "[2+8u; -3+5u]\n"
    );
}

#[test]
fn series_output() {
    let (_, out, _) = call(&["series", "--seq", "hsjl", "--order", "1"]);
    assert_eq!(out, "x^0: [2+7u; -1+5u]\nx^1: [1+17u; -5+7u]\n");
    let (_, out, _) = call(&["series", "--seq", "hsj", "--order", "0", "--printed"]);
    assert_eq!(out, "x^0: [-1-8u; 2-4u]\n");
    let (_, json, _) = call(&["series", "--seq", "hsj", "--order", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[1]["n"], 1);
    assert_eq!(v[1]["coeff"]["c1"]["hy"], "5");
}

#[test]
fn csv_and_json_agree() {
    let args = |f| {
        [
            "gen", "--seq", "hsjl", "--from", "60", "--to", "66", "--format", f,
        ]
    };
    let (_, json, _) = call(&args("json"));
    let (_, csv, _) = call(&args("csv"));
    let rows: Vec<Row<HypSpinor>> = serde_json::from_str(&json).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,a1,b1,a2,b2"));
    for (row, line) in rows.iter().zip(lines) {
        let cells: Vec<&str> = line.split(',').collect();
        let s = &row.value;
        let expect = [
            row.n.to_string(),
            s.c1.re.to_string(),
            s.c1.hy.to_string(),
            s.c2.re.to_string(),
            s.c2.hy.to_string(),
        ];
        assert_eq!(cells, expect);
    }
}

#[test]
fn large_values_stay_exact() {
    let (_, json, _) = call(&[
        "gen", "--seq", "j", "--from", "100", "--to", "100", "--format", "json",
    ]);
    let rows: Vec<Row<Rational>> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows[0].value.to_string(), "422550200076076467165567735125");
    assert!(json.contains("\"422550200076076467165567735125\""));
}

#[test]
fn verify_reports() {
    let (code, json, _) = call(&[
        "verify",
        "--suite",
        "hsj-consecutive,hsj-sum",
        "--n-max",
        "16",
        "--format",
        "json",
        "--strict",
    ]);
    assert_eq!(code, EXIT_OK);
    let report: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report.results.len(), 2);
    assert_eq!(report.results[0].status, Status::HoldsCorrected);
    assert_eq!(report.results[1].status, Status::Holds);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v["results"][1]["counterexample"].is_null());
    assert!(v["results"][1]["corrected_statement"].is_null());
    assert_eq!(v["results"][0]["status"], "holds_corrected");
    assert!(v["runtime_ms"].is_u64());

    let (_, csv, _) = call(&[
        "verify",
        "--suite",
        "hsj-consecutive",
        "--n-max",
        "4",
        "--format",
        "csv",
    ]);
    assert!(csv
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("hsj-consecutive,holds_corrected,4,1,,,"));

    let (_, pretty, _) = call(&["verify", "--suite", "hsj-binet", "--n-max", "4"]);
    assert!(pretty.contains("corrected: HSJ_n = (1/3)(2^n [1+8u; -2+4u] - (-1)^n [1-u; 1+u])"));
}

#[test]
fn strict_exit_code_is_distinct() {
    assert_ne!(EXIT_STRICT, EXIT_USAGE);
    let (code, _, _) = call(&["verify", "--strict", "--n-max", "6"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["gen", "--seq", "fib", "--to", "3"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["gen", "--seq", "hsj", "--from", "5", "--to", "3"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["gen", "--seq", "hsj", "--from", "-1", "--to", "3"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["gen", "--seq", "hsj", "--to", "3", "--format", "xml"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["series", "--seq", "j"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--suite", ","]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--n-max", "0"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["poly", "--n", "2", "--eval-at", "1/0"]).0,
        EXIT_USAGE
    );
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_jacobspin");
    let status = |args: &[&str]| {
        std::process::Command::new(bin)
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(
        status(&["quat", "--op", "mul", "--lhs", "i", "--rhs", "j"]),
        Some(0)
    );
    assert_eq!(status(&["nonsense"]), Some(1));
}
