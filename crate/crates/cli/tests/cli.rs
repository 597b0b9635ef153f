use std::io::Write;
use std::process::Command;

use monolc_cli::{run, EXIT_OK, EXIT_USAGE};

const GOLDEN: &str = "vars x y\ngens x^2, x*y\n";

fn run_with(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["monolc"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ideal_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn table_json_schema() {
    let f = ideal_file(GOLDEN);
    let (code, out, _) = run_with(
        &["table", f.path().to_str().unwrap(), "--format", "json"],
        "",
    );
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v,
        serde_json::json!({
            "vars": ["x", "y"],
            "field": "q",
            "entries": [
                {"degree": [0, -1], "i": 1, "dim": 1},
                {"degree": [1, 0], "i": 0, "dim": 1}
            ]
        })
    );
}

#[test]
fn table_and_oracle_are_byte_identical() {
    let ideals = [
        GOLDEN,
        "vars x y z\ngens x^2*y, y^3, x*z^2\n",
        "vars a\ngens\n",
        "vars a b\ngens 1\n",
    ];
    for text in ideals {
        for format in ["text", "json", "tsv"] {
            for field in ["q", "gf:2"] {
                let args = ["--field", field, "--format", format];
                let t = run_with(&[&["table"], &args[..]].concat(), text);
                let o = run_with(&[&["oracle"], &args[..]].concat(), text);
                assert_eq!(t.0, EXIT_OK);
                assert_eq!(t, o, "{text} {format} {field}");
            }
        }
    }
}

#[test]
fn verify_passes_on_golden() {
    let (code, out, _) = run_with(&["verify", "--chain", "--depth-shift"], GOLDEN);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.trim_end().ends_with("PASS"));
    let (code, out, _) = run_with(&["verify", "--format", "json"], GOLDEN);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["field"], "q");
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"] == "main_theorem"));
}

#[test]
fn complex_rendering() {
    assert_eq!(run_with(&["complex", "--degree", "1,0"], GOLDEN).1, "{∅}\n");
    assert_eq!(
        run_with(&["complex", "--degree", "0,0"], GOLDEN).1,
        "{{y}}\n"
    );
    assert_eq!(
        run_with(&["complex", "--degree", "-1,-1"], GOLDEN).1,
        "void\n"
    );
    let (_, out, _) = run_with(
        &["complex", "--degree", "0,0,0"],
        "vars a b c\ngens a*b, b*c, a*c\n",
    );
    assert_eq!(out, "{{a}, {b}, {c}}\n");
    let (_, out, _) = run_with(&["complex", "--degree", "0,0", "--format", "json"], GOLDEN);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["facets"], serde_json::json!([["y"]]));
    assert_eq!(v["void"], false);
}

#[test]
fn parse_and_polarize() {
    let (code, out, _) = run_with(&["parse"], "vars x y # ring\ngens x^3, x^2*y^0, x*y\n");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, GOLDEN);
    let (_, out, _) = run_with(&["polarize"], GOLDEN);
    assert_eq!(
        out,
        "vars x_1_1 x_1_2 x_2_1\ngens x_1_1*x_1_2, x_1_1*x_2_1\n"
    );
    let (_, out, _) = run_with(&["polarize", "--format", "json"], GOLDEN);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rho"], serde_json::json!([2, 1]));
    assert_eq!(v["shift"], 1);
}

#[test]
fn depth_output() {
    let (code, out, _) = run_with(&["depth"], GOLDEN);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "depth 0\ndim 1\ncohen-macaulay no\n");
    let (code, _, err) = run_with(&["depth"], "vars x\ngens 1\n");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("zero ring"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run_with(&["nonsense"], GOLDEN).0, EXIT_USAGE);
    assert_eq!(
        run_with(&["table", "--field", "gf:9"], GOLDEN).0,
        EXIT_USAGE
    );
    assert_eq!(
        run_with(&["complex", "--degree", "1"], GOLDEN).0,
        EXIT_USAGE
    );
    assert_eq!(
        run_with(&["complex", "--degree", "1,a"], GOLDEN).0,
        EXIT_USAGE
    );
    assert_eq!(
        run_with(&["depth", "--format", "tsv"], GOLDEN).0,
        EXIT_USAGE
    );
    assert_eq!(run_with(&["table", "/no/such/file"], GOLDEN).0, EXIT_USAGE);
    let (code, _, err) = run_with(&["table"], "vars x\ngens y\n");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2, column 6"), "{err}");
}

#[test]
fn fuzz_is_deterministic_and_passes() {
    let args = [
        "fuzz",
        "--trials",
        "15",
        "--n",
        "3",
        "--max-exp",
        "3",
        "--gens",
        "4",
        "--seed",
        "7",
    ];
    let a = run_with(&args, "");
    let b = run_with(&args, "");
    assert_eq!(a, b);
    assert_eq!(a.0, EXIT_OK);
    assert!(a.1.contains("15 trials, 0 failures: PASS"));
    let (code, out, _) = run_with(
        &[
            "fuzz", "--trials", "3", "--field", "gf:32003", "--format", "json",
        ],
        "",
    );
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run_with(&["--help"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn binary_exit_codes() {
    let f = ideal_file(GOLDEN);
    let bin = env!("CARGO_BIN_EXE_monolc");
    let ok = Command::new(bin)
        .args(["verify", f.path().to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin)
        .args(["complex", f.path().to_str().unwrap(), "--degree", "1,2,3"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
