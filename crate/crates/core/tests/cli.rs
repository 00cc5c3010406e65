mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use alexq::matrix_file::{parse_matrix, write_matrix, write_vector};
use alexq::{alexander_quandle, dihedral_quandle, CayleyMatrix, Permutation, QuandleMatrix};
use common::*;
use serde_json::Value;
use tempfile::TempDir;

fn alexq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alexq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is one JSON document")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn rows_of(v: &Value) -> Rows {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "good.txt", &write_matrix(&klein_twist_rows()));
    let not_quandle = write(&dir, "bad.txt", "2\n1 1\n1 2\n");
    let malformed = write(&dir, "broken.txt", "3\n1 2 3\n1 2\n");

    let o = alexq(&["validate", s(&good)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid quandle of order 4\n");

    let o = alexq(&["--json", "validate", s(&not_quandle)]);
    assert_eq!(o.status.code(), Some(2));
    let doc = json(&o);
    assert_eq!(doc["status"], "invalid");
    assert!(doc["violation"]["witnesses"].as_array().is_some());

    let o = alexq(&["validate", s(&malformed)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());

    let o = alexq(&["validate", "/nonexistent/matrix"]);
    assert_eq!(o.status.code(), Some(1));

    let o = alexq(&["--quiet", "validate", s(&good)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn presentations_of_klein_twist_round_trip() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "q.txt", &write_matrix(&klein_twist_rows()));
    let o = alexq(&["--json", "presentations", s(&path)]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["status"], "success");
    let q = quandle(&klein_twist_rows());
    let list = doc["presentations"].as_array().unwrap();
    assert!(!list.is_empty());
    let mut saw_klein = false;
    for p in list {
        let c = CayleyMatrix::from_rows(&rows_of(&p["cayley"])).unwrap();
        let phi: Vec<usize> = serde_json::from_value(p["phi"].clone()).unwrap();
        saw_klein |= c.to_rows() == klein_rows() && phi == [1, 3, 2, 4];
        let phi = Permutation::new(phi).unwrap();
        assert_eq!(alexander_quandle(&c, &phi).unwrap(), q);
    }
    assert!(saw_klein);
    assert_eq!(doc["obstruction"]["status"], "inconclusive");
}

#[test]
fn non_alexander_example_is_negative() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "q.txt", &write_matrix(&non_alexander_rows()));
    let o = alexq(&["--json", "--trace", "classify", s(&path)]);
    assert_eq!(o.status.code(), Some(2));
    let doc = json(&o);
    assert_eq!(doc["alexander"], false);
    assert_eq!(doc["abelian"], true);
    assert_eq!(doc["obstruction"]["status"], "not-injective");
    assert_eq!(
        doc["obstruction"]["witnesses"][0],
        serde_json::json!([1, 2])
    );
    assert!(!doc["obstruction"]["trace"].as_array().unwrap().is_empty());

    let o = alexq(&["presentations", s(&path)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("presentations: 0"));
}

#[test]
fn trivial_four_has_four_presentations() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("t4.txt");
    assert_eq!(
        alexq(&["generate", "trivial", "4", "-o", s(&out)])
            .status
            .code(),
        Some(0)
    );
    let o = alexq(&["--json", "presentations", s(&out)]);
    let doc = json(&o);
    let list = doc["presentations"].as_array().unwrap();
    assert_eq!(list.len(), 4);
    assert!(list
        .iter()
        .all(|p| p["phi"] == serde_json::json!([1, 2, 3, 4])));
    let o = alexq(&["classify", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("alexander: yes (4 presentations; status success)"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "q.txt", &write_matrix(&dihedral_quandle(6).to_rows()));
    for args in [
        vec!["--json", "presentations", s(&path)],
        vec!["--trace", "classify", s(&path)],
        vec!["enumerate", "3"],
    ] {
        let a = alexq(&args);
        let b = alexq(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn timing_is_opt_in() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "q.txt", &write_matrix(&klein_twist_rows()));
    let plain = json(&alexq(&["--json", "classify", s(&path)]));
    assert!(plain.get("timing_ms").is_none());
    let timed = json(&alexq(&["--json", "--timing", "classify", s(&path)]));
    assert!(timed["timing_ms"].as_f64().is_some());
}

#[test]
fn generate_then_validate() {
    let dir = TempDir::new().unwrap();
    for (kind, n) in [("trivial", "3"), ("dihedral", "5"), ("dihedral", "6")] {
        let out = dir.path().join(format!("{kind}{n}.txt"));
        let o = alexq(&["generate", kind, n, "-o", s(&out)]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(alexq(&["validate", s(&out)]).status.code(), Some(0));
    }
    // stdout form parses back to the library's table
    let o = alexq(&["generate", "dihedral", "5"]);
    let t = parse_matrix(&stdout(&o)).unwrap();
    assert_eq!(t.to_rows(), dihedral_quandle(5).to_rows());
}

#[test]
fn generate_alexander_from_files() {
    let dir = TempDir::new().unwrap();
    let cayley = write(&dir, "klein.txt", &write_matrix(&klein_rows()));
    let phi = write(
        &dir,
        "phi.txt",
        &write_vector(&Permutation::new(vec![1, 3, 2, 4]).unwrap()),
    );
    let o = alexq(&["generate", "alexander", s(&cayley), s(&phi)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        parse_matrix(&stdout(&o)).unwrap().to_rows(),
        klein_twist_rows()
    );

    // the same vector is not an automorphism of Z4
    let z4 = write(&dir, "z4.txt", &write_matrix(&alexq_group_rows(4)));
    let o = alexq(&["generate", "alexander", s(&z4), s(&phi)]);
    assert_eq!(o.status.code(), Some(2));

    let short = write(&dir, "short.txt", "1 2\n");
    let o = alexq(&["generate", "alexander", s(&cayley), s(&short)]);
    assert_eq!(o.status.code(), Some(1));
}

fn alexq_group_rows(n: usize) -> Rows {
    let o = alexq(&["group", "cyclic", &n.to_string()]);
    assert_eq!(o.status.code(), Some(0));
    parse_matrix(&stdout(&o)).unwrap().to_rows()
}

#[test]
fn conj_of_cyclic_group_is_trivial() {
    let dir = TempDir::new().unwrap();
    let z5 = write(&dir, "z5.txt", &write_matrix(&alexq_group_rows(5)));
    let o = alexq(&["generate", "conj", s(&z5)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        parse_matrix(&stdout(&o)).unwrap().to_rows(),
        alexq::trivial_quandle(5).to_rows()
    );
    let o = alexq(&["generate", "conj", "Z5"]);
    assert_eq!(
        parse_matrix(&stdout(&o)).unwrap().to_rows(),
        alexq::trivial_quandle(5).to_rows()
    );
    let s3 = write(&dir, "s3.txt", &write_matrix(&s3_rows()));
    let o = alexq(&["generate", "conj", s(&s3)]);
    assert_eq!(o.status.code(), Some(0));
    let q = QuandleMatrix::from_rows(&parse_matrix(&stdout(&o)).unwrap().to_rows()).unwrap();
    assert!(!q.is_abelian());
}

#[test]
fn group_subcommands() {
    assert_eq!(alexq_group_rows(3), alexq::cyclic_group(3).to_rows());

    let o = alexq(&["group", "product", "Z2", "Z3"]);
    assert_eq!(o.status.code(), Some(0));
    let p = parse_matrix(&stdout(&o)).unwrap();
    assert!(alexq::validate_abelian_group(p).is_ok());

    let o = alexq(&["--json", "group", "auts", "Z7"]);
    let doc = json(&o);
    assert_eq!(doc["count"], 6);

    let o = alexq(&["group", "auts", "Z8"]);
    assert_eq!(stdout(&o).lines().count(), 4);

    let o = alexq(&["--max-size", "4", "group", "auts", "Z5"]);
    assert_eq!(o.status.code(), Some(1));

    let dir = TempDir::new().unwrap();
    let s3 = write(&dir, "s3.txt", &write_matrix(&s3_rows()));
    let o = alexq(&["group", "validate", s(&s3)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("group: yes\nabelian: no"));
    let bad = write(&dir, "bad.txt", "3\n1 2 3\n2 1 3\n3 1 2\n");
    let o = alexq(&["--json", "group", "validate", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["group"], false);
}

#[test]
fn enumerate_counts_and_cap() {
    for (n, count) in [(1, 1), (2, 1), (3, 5)] {
        let o = alexq(&["--json", "enumerate", &n.to_string()]);
        assert_eq!(o.status.code(), Some(0));
        let doc = json(&o);
        assert_eq!(doc["count"], count);
        assert_eq!(doc["quandles"].as_array().unwrap().len(), count);
    }
    let doc = json(&alexq(&["--json", "enumerate", "3"]));
    assert_eq!(doc["alexander_count"], 2);
    let o = alexq(&["enumerate", "6"]);
    assert_eq!(o.status.code(), Some(1));
    let o = alexq(&["--max-size", "2", "enumerate", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = alexq(&["--json", "enumerate", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["status"], "error");
}

#[test]
fn search_cap_applies() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "d5.txt",
        &write_matrix(&dihedral_quandle(5).to_rows()),
    );
    assert_eq!(
        alexq(&["--max-size", "4", "classify", s(&path)])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(alexq(&["classify", s(&path)]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(alexq(&[]).status.code(), Some(1));
    assert_eq!(alexq(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(alexq(&["--help"]).status.code(), Some(0));
}
