use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hopfeq::catalog::{example, Params};
use hopfeq::formats::{to_json, MatrixFile};
use hopfeq::Field;
use tempfile::TempDir;

fn hopfeq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfeq")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

const FK_GF2: &str = r#"{"field":{"GF":2},"n":2,"matrix":[[1,0,0,0],[0,1,1,0],[0,0,1,0],[0,0,0,1]]}"#;
const FK_Q: &str = r#"{"field":"Q","n":2,"matrix":[[1,0,0,0],[0,1,1,0],[0,0,1,0],[0,0,0,1]]}"#;

/// Writes the `tk` example over GF(2) as bialgebra, σ and element files.
fn tk_files(dir: &Path) -> (PathBuf, PathBuf, PathBuf) {
    let b = example("tk", &Params { field: Some(Field::prime(2)), ..Params::default() }).unwrap();
    let e = b.export();
    (
        write(dir, "tk.json", &to_json(&e.bialgebra)),
        write(dir, "sigma.json", &to_json(&e.sigmas[0].1)),
        write(dir, "element.json", &to_json(&e.elements[0].1)),
    )
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f2 = write(dir.path(), "fk2.json", FK_GF2);
    let q = write(dir.path(), "fkq.json", FK_Q);
    let ok = hopfeq(&["check", "hopf", "--matrix", f2.to_str().unwrap()]);
    assert_eq!(code(&ok), 0, "{}", stdout(&ok));
    let bad = hopfeq(&["check", "hopf", "--matrix", q.to_str().unwrap()]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("hopf at m"));
    let mixed = hopfeq(&["check", "mixed", "--matrix", f2.to_str().unwrap(), "--second", f2.to_str().unwrap()]);
    assert_eq!(code(&mixed), 0);
    let missing = hopfeq(&["check", "mixed", "--matrix", f2.to_str().unwrap()]);
    assert_eq!(code(&missing), 3);
}

#[test]
fn usage_and_io_errors_exit_three() {
    assert_eq!(code(&hopfeq(&["check", "hopf", "--matrix", "/nonexistent/r.json"])), 3);
    assert_eq!(code(&hopfeq(&["--degree", "1", "verify-example", "tk"])), 3);
    assert_eq!(code(&hopfeq(&["frobnicate"])), 3);
    assert_eq!(code(&hopfeq(&["verify-example", "nope"])), 3);
    let dir = TempDir::new().unwrap();
    let junk = write(dir.path(), "junk.json", "{\"field\":\"Q\"}");
    assert_eq!(code(&hopfeq(&["check", "hopf", "--matrix", junk.to_str().unwrap()])), 3);
}

#[test]
fn verbatim_table_fails_at_zz() {
    let o = hopfeq(&["verify-example", "fk", "--variant", "verbatim"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("(H1) c=z h=z: lhs x, rhs t"), "{}", stdout(&o));
    let both = hopfeq(&["verify-example", "fk"]);
    assert_eq!(code(&both), 0, "{}", stdout(&both));
}

#[test]
fn examples_pass() {
    for args in [
        vec!["verify-example", "tk"],
        vec!["verify-example", "dq2", "--q", "2"],
        vec!["verify-example", "eq2", "--q=-1"],
        vec!["verify-example", "quantum-plane", "--a", "2", "--q", "1"],
        vec!["verify-example", "group_algebra", "--field", "GF(3)"],
        vec!["verify-example", "monoid", "--points", "3"],
    ] {
        let o = hopfeq(&args);
        assert_eq!(code(&o), 0, "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn search_solutions() {
    let o = hopfeq(&["search", "solutions", "--field", "GF(3)", "--n", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("2 solutions"));
    let big = hopfeq(&["search", "solutions", "--field", "GF(3)", "--n", "2"]);
    assert_eq!(code(&big), 3);
    let part = hopfeq(&["search", "solutions", "--field", "GF(3)", "--n", "2", "--range", "0..100"]);
    assert_eq!(code(&part), 0);
}

#[test]
fn json_round_trip_of_search_results() {
    let o = hopfeq(&["--json", "search", "solutions", "--field", "GF(2)", "--n", "1"]);
    assert_eq!(code(&o), 0);
    let found: Vec<MatrixFile> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(found.len(), 2);
    let dir = TempDir::new().unwrap();
    for (k, m) in found.iter().enumerate() {
        let p = write(dir.path(), &format!("r{k}.json"), &to_json(m));
        let back = hopfeq(&["check", "hopf", "--matrix", p.to_str().unwrap()]);
        assert_eq!(code(&back), 0);
        let reread: MatrixFile = serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap();
        assert_eq!(&reread, m);
    }
}

#[test]
fn build_br_emits_relations() {
    let dir = TempDir::new().unwrap();
    let f2 = write(dir.path(), "fk2.json", FK_GF2);
    let o = hopfeq(&["build-br", "--matrix", f2.to_str().unwrap(), "--emit-relations"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("16 relations"));
    assert!(out.contains("χ(1,1,1,1): c11·c11 + c11"));
    let j = hopfeq(&["--json", "build-br", "--matrix", f2.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
}

#[test]
fn sigma_integral_and_element_files() {
    let dir = TempDir::new().unwrap();
    let (b, s, e) = tk_files(dir.path());
    let (b, s, e) = (b.to_str().unwrap(), s.to_str().unwrap(), e.to_str().unwrap());
    assert_eq!(code(&hopfeq(&["verify-sigma", "--bialgebra", b, "--sigma", s])), 0);
    let ints = hopfeq(&["integrals", "--bialgebra", b]);
    assert_eq!(code(&ints), 0);
    assert!(stdout(&ints).contains("dimension 2"));
    assert_eq!(code(&hopfeq(&["hopf-element", "--bialgebra", b, "--element", e])), 0);
    let qt = hopfeq(&["hopf-element", "--bialgebra", b, "--element", e, "--quasitriangular"]);
    assert_eq!(code(&qt), 1);
    assert!(stdout(&qt).contains("!! fail"));
    let sig = hopfeq(&["search", "sigmas", "--bialgebra", b, "--subcoalgebra", "x"]);
    assert_eq!(code(&sig), 0);
    assert!(stdout(&sig).starts_with("2 σ tables"), "{}", stdout(&sig));
}
