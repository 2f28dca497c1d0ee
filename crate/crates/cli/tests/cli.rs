use std::path::Path;
use std::process::{Command, Output};

use qtsym_core::bases::{inhom_f, interp_func, BasisElement, BasisValue, FRoute};
use qtsym_core::identities::CheckReport;
use qtsym_core::operators::{apply_hn, eigen_ck, EigenData};
use qtsym_core::polyengine::MPoly;
use qtsym_core::symfunc::SymFuncP;
use qtsym_core::Partition;

fn qtsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtsym"))
        .args(args)
        .output()
        .expect("run qtsym")
}

fn qtsym_with_cache(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtsym"))
        .args(args)
        .env("MACD_CACHE_DIR", dir)
        .output()
        .expect("run qtsym")
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn stdout_json<T: serde::de::DeserializeOwned>(out: &Output) -> T {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn expand_matches_engine() {
    let out = qtsym(&[
        "expand",
        "--family",
        "inhom_f",
        "--lambda",
        "2,1",
        "--N",
        "3",
        "--route",
        "definition",
    ]);
    let elem: BasisElement = stdout_json(&out);
    assert_eq!(elem.index, p(&[2, 1]));
    assert_eq!(elem.n, Some(3));
    match elem.value {
        BasisValue::Poly(f) => assert_eq!(f, inhom_f(&p(&[2, 1]), 3, FRoute::Definition).unwrap()),
        BasisValue::Func(_) => panic!("expected a polynomial"),
    }
}

#[test]
fn expand_is_byte_identical() {
    let args = ["expand", "--family", "macdonald", "--lambda", "2,1"];
    assert_eq!(qtsym(&args).stdout, qtsym(&args).stdout);
}

#[test]
fn eigen_matches_engine() {
    let data: EigenData = stdout_json(&qtsym(&["eigen", "--mu", "2,1"]));
    assert_eq!(data, eigen_ck(&p(&[2, 1])).unwrap());
}

#[test]
fn verify_writes_report_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = qtsym(&[
        "verify",
        "--suite",
        "all",
        "--max-N",
        "2",
        "--max-deg",
        "3",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let reports: Vec<CheckReport> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(CheckReport::passed));
    assert!(reports.iter().any(|r| r.name == "refined_cauchy"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["expand", "--family", "inhom_f", "--lambda", "1,x", "--N", "2"],
        vec!["expand", "--family", "nope", "--lambda", "1"],
        vec!["expand", "--family", "hl_p", "--lambda", "1", "--bogus"],
        vec!["verify", "--suite", "everything"],
        vec!["eigen", "--mu", "1,2"],
        vec!["frobnicate"],
        vec!["apply-op", "ak", "--family", "interp", "--lambda", "1"],
    ] {
        let out = qtsym(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn apply_op_on_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("m.json");
    let out = qtsym(&[
        "expand",
        "--family",
        "macdonald",
        "--lambda",
        "1",
        "--N",
        "2",
        "--output",
        input.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let elem: BasisElement = serde_json::from_str(&std::fs::read_to_string(&input).unwrap()).unwrap();
    let BasisValue::Poly(m) = elem.value else {
        panic!("expected a polynomial")
    };
    std::fs::write(&input, serde_json::to_string(&m).unwrap()).unwrap();
    let got: MPoly = stdout_json(&qtsym(&[
        "apply-op",
        "hn",
        "--k",
        "1",
        "--input",
        input.to_str().unwrap(),
    ]));
    assert_eq!(got, apply_hn(1, &m, 2).unwrap());
}

#[test]
fn lift_recovers_interpolation_function() {
    let f: SymFuncP = stdout_json(&qtsym(&["lift", "--family", "interp", "--lambda", "2", "--N", "3"]));
    assert_eq!(f, interp_func(&p(&[2])).unwrap());
}

#[test]
fn table_is_stable_across_routes() {
    let a = qtsym(&[
        "table",
        "--family",
        "inhom_f",
        "--max-deg",
        "3",
        "--N",
        "2",
        "--route",
        "definition",
    ]);
    let b = qtsym(&[
        "table",
        "--family",
        "inhom_f",
        "--max-deg",
        "3",
        "--N",
        "2",
        "--route",
        "tableau",
    ]);
    assert!(a.status.success() && b.status.success());
    let strip = |o: &Output| String::from_utf8(o.stdout.clone()).unwrap();
    assert_eq!(strip(&a), strip(&b));
    let table: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(table["entries"].as_array().unwrap().len(), 6);
}

#[test]
fn cache_directory_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["expand", "--family", "interp", "--lambda", "2,1", "--N", "3"];
    let first = qtsym_with_cache(&args, dir.path());
    assert!(first.status.success());
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let second = qtsym_with_cache(&args, dir.path());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, qtsym(&args).stdout);
}

#[test]
fn special_values_report() {
    let v: serde_json::Value = stdout_json(&qtsym(&["special", "--lambda", "1", "--N", "2"]));
    assert!(v.get("c_norm").is_some() && v.get("at_zeros").is_some());
    assert_eq!(
        qtsym(&["special", "--lambda", "1,1,1", "--N", "2"]).status.code(),
        Some(2)
    );
}
