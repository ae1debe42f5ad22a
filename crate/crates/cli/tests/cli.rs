use std::path::PathBuf;
use std::process::{Command, Output};

use qsymq_cli::{parse_polynomial, OutputRecord};

fn qsymq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsymq"))
        .args(args)
        .env_remove("QSYMQ_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qsymq(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn reduce_single_variable() {
    assert_eq!(stdout(&["reduce", "-n", "2", "--expr", "x1"]), "-x2\n");
}

#[test]
fn hilbert_row() {
    let text = stdout(&["hilbert", "-n", "6"]);
    assert_eq!(text.lines().next(), Some("1 5 14 28 42 42"));
    for method in ["formula", "enum", "oracle"] {
        let text = stdout(&["hilbert", "-n", "4", "--method", method]);
        assert_eq!(text, "1 3 5 5\n1+3t+5t^2+5t^3\n");
    }
}

#[test]
fn g_element_expansion() {
    let text = stdout(&["gbasis", "-n", "4", "--vector", "1,0,2"]);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("x1*x3^2 + x1*x3*x4 + x1*x4^2 - x2^2*x3 - x2^2*x4 + x2*x3^2 + x2*x4^2 + x3*x4^2")
    );
    assert_eq!(lines.next(), Some("leading monomial (1,0,2,0)"));
}

#[test]
fn json_matches_text_output() {
    let cases: &[&[&str]] = &[
        &["reduce", "-n", "3", "--expr", "x1*x2 + 1/2*x3^2 - 4*x1 + 2"],
        &["gbasis", "-n", "5", "--vector", "0,3,2"],
        &["qsym", "-n", "4", "--fundamental", "2,1"],
        &["qsym", "-n", "3", "--monomial", "1,1"],
        &["qsym-mul", "-n", "4", "--left", "2", "--right", "1,1"],
    ];
    for args in cases {
        let text = stdout(args);
        let mut json_args = args.to_vec();
        json_args.push("--json");
        let record = OutputRecord::from_json(&stdout(&json_args)).unwrap();
        let from_json = record.to_polynomial().unwrap();
        let line = match text.lines().find_map(|l| l.strip_prefix("expansion ")) {
            Some(expansion) => expansion,
            None => text.lines().next().unwrap(),
        };
        assert_eq!(from_json, parse_polynomial(line, record.n).unwrap(), "{args:?}");
    }
}

#[test]
fn reduce_certificate_from_file() {
    let path = scratch("input.poly");
    std::fs::write(&path, "x1*x3\n  - x2^2\n").unwrap();
    let file = path.to_str().unwrap();
    let text = stdout(&["reduce", "-n", "3", "--file", file, "--certificate", "--json"]);
    let record = OutputRecord::from_json(&text).unwrap();
    let family = qsymq::GFamily::new(3);
    let mut total = record.to_polynomial().unwrap();
    for (c, eps) in record.certificate_terms().unwrap() {
        total.add_scaled(&c, &family.g_element(&eps).unwrap().expansion);
    }
    assert_eq!(total, parse_polynomial("x1*x3 - x2^2", 3).unwrap());
    let plain = stdout(&["reduce", "-n", "3", "--file", file, "--certificate"]);
    assert!(plain.contains("certificate\n"));
}

#[test]
fn membership_verdicts() {
    let out = qsymq(&["member", "-n", "3", "--expr", "x1^2 + x2^2 + x3^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "in the ideal\n");
    let out = qsymq(&["member", "-n", "3", "--expr", "x2*x3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn basis_listing() {
    let text = stdout(&["basis", "-n", "4", "-k", "2"]);
    assert_eq!(text, "(0,0,0,2)\n(0,0,1,1)\n(0,0,2,0)\n(0,1,0,1)\n(0,1,1,0)\ncount 5\n");
    let paths = stdout(&["basis", "-n", "2", "--paths"]);
    assert_eq!(paths, "(0,0)\no .\no.\no\n\n(0,1)\n o.\noo\no\n\ncount 2\n");
}

#[test]
fn oracle_dump_file() {
    let path = scratch("slices.txt");
    let _ = std::fs::remove_file(&path);
    stdout(&["hilbert", "-n", "3", "--method", "oracle", "--dump", path.to_str().unwrap()]);
    let dump = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dump.matches("# ideal slice").count(), 5);
    assert!(dump.contains("quotient_dim 2"));
}

#[test]
fn verify_small_sizes() {
    for n in ["1", "2", "3"] {
        let text = stdout(&["verify", "-n", n]);
        assert!(text.ends_with("all checks passed\n"), "{text}");
    }
    let record = OutputRecord::from_json(&stdout(&["verify", "-n", "2", "--json"])).unwrap();
    assert_eq!(record.details["passed"], serde_json::Value::Bool(true));
}

#[test]
fn generating_function_verdicts() {
    assert_eq!(
        stdout(&["gf-check", "--order", "11"]),
        "numerator with -2x: identity holds mod x^11\n"
    );
    let out = qsymq(&["gf-check", "--order", "2", "--as-printed"]);
    assert_eq!(out.status.code(), Some(3));
}
