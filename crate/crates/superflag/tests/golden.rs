use std::process::Command;

use serde_json::Value;
use superflag::build::{all_diagrams, build_full};
use superflag::cases::{export_full, render, verify_all, Format};
use superflag::roots::{enumerate_roots, positive_roots, Algebra, DiagramId};
use superflag::GradedLieSuperalgebra;

#[test]
fn negative_roots_table() {
    let mut seen = 0;
    for line in include_str!("data/negative_roots.txt").lines().filter(|l| !l.starts_with('#')) {
        let f: Vec<&str> = line.split_whitespace().collect();
        let d = DiagramId::parse(f[0].parse::<Algebra>().unwrap(), f[1]).unwrap();
        let odd = f[2] == "odd";
        let mut want: Vec<String> = f[3..].iter().map(|s| format!("-{s}")).collect();
        let mut got: Vec<String> = enumerate_roots(d)
            .into_iter()
            .filter(|r| !r.is_positive() && r.parity.is_odd() == odd)
            .map(|r| r.label())
            .collect();
        want.sort();
        got.sort();
        assert_eq!(got, want, "{d} {}", f[2]);
        let pos = positive_roots(d).into_iter().filter(|r| r.parity.is_odd() == odd).count();
        assert_eq!(pos, want.len());
        seen += 1;
    }
    assert_eq!(seen, 2 * all_diagrams().len());
}

#[test]
fn exports_round_trip() {
    for (a, n) in [(Algebra::G3, 31), (Algebra::F4, 40)] {
        for d in a.diagrams() {
            let text = export_full(d).unwrap();
            let v: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(v["basis"].as_array().unwrap().len(), n);
            let back = GradedLieSuperalgebra::from_json(&v).unwrap();
            assert!(back.check_jacobi().is_ok());
            let full = build_full(d).unwrap();
            assert_eq!(back.to_json(), v);
            assert_eq!(back.graded_dims(), full.graded_dims());
            assert_eq!(back.bracket_ranks(), full.bracket_ranks());
        }
    }
}

#[test]
fn mutated_constant_is_caught() {
    let d = DiagramId::parse(Algebra::G3, "I").unwrap();
    let mut v: Value = serde_json::from_str(&export_full(d).unwrap()).unwrap();
    // scale the first structure constant by 2
    let term = &mut v["brackets"][0][2][0];
    let num = term[1].as_i64().unwrap();
    term[1] = Value::from(2 * num);
    let g = GradedLieSuperalgebra::from_json(&v).unwrap();
    assert!(g.check_jacobi().is_err());
}

#[test]
fn reports_are_deterministic() {
    let a = verify_all(&[Algebra::G3], Some(4)).unwrap();
    let b = verify_all(&[Algebra::G3], Some(1)).unwrap();
    for f in [Format::Text, Format::Json] {
        assert_eq!(a.render(f).unwrap(), b.render(f).unwrap());
    }
    assert!(a.passed());
    let json: Value = serde_json::from_str(&render(&a.reports, Format::Json, None).unwrap()).unwrap();
    assert_eq!(json["cases"].as_array().unwrap().len(), 19);
    assert_eq!(json["cases"][0]["status"], "finite");
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_superflag")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn cli_exit_codes() {
    let (code, out) = cli(&["--algebra", "g3", "--diagram", "IV", "--parabolic", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("G3 IV_2\treduce=auto\tfinite\t(17|14)"), "{out}");
    let (code, out) = cli(&["--algebra", "g3", "--diagram", "I", "--parabolic", "1", "--reduce", "none"]);
    assert_eq!(code, 1);
    assert!(out.contains("threshold exceeded"));
    let (code, out) = cli(&["--algebra", "f4", "--diagram", "III", "--format", "json", "--jobs", "2"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cases"].as_array().unwrap().len(), 15);
    let (code, _) = cli(&["--algebra", "g3", "--diagram", "VII"]);
    assert_eq!(code, 1);
}
