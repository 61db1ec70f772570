use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcentral"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Compares against `tests/golden/<name>`; set `FCENTRAL_BLESS=1` to rewrite.
fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("FCENTRAL_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

#[test]
fn validate_accepts_cyclic_group() {
    let o = run(&["validate", data("z3.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("associative semigroup of order 3"));
}

#[test]
fn validate_reports_witness_triple() {
    let o = run(&["validate", data("nonassociative.txt").to_str().unwrap(), "--structured"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("associative\tfalse\n"));
    assert!(out.contains("witness\t1,0,1\n"));
}

#[test]
fn validate_rejects_malformed_order() {
    let o = run(&["validate", data("malformed.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn validate_missing_file_is_usage_error() {
    assert_eq!(run(&["validate", "/nonexistent/table.txt"]).status.code(), Some(2));
}

#[test]
fn classify_even_residues_golden() {
    let o = run(&[
        "classify",
        data("z6.txt").to_str().unwrap(),
        "--set",
        "0,2,4",
        "--filter",
        "filter=0,2,4",
        "--structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let recs = fcentral::report::parse(&out);
    let value = |name: &str| {
        recs.iter()
            .find(|r| r.get("predicate") == Some(name))
            .and_then(|r| r.get("value"))
            .map(str::to_string)
    };
    assert_eq!(value("f_thick").as_deref(), Some("true"));
    assert_eq!(value("thick").as_deref(), Some("false"));
    assert_eq!(value("strongly_f_central").as_deref(), Some("true"));
    golden("classify_z6_evens.tsv", &out);
}

#[test]
fn classify_empty_set_is_all_false() {
    let o = run(&["classify", "--family", "Z6", "--set", "", "--structured"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = fcentral::report::parse(&stdout(&o));
    let preds: Vec<_> = recs.iter().filter(|r| r.get("predicate").is_some()).collect();
    assert_eq!(preds.len(), 12);
    assert!(preds.iter().all(|r| r.get("value") == Some("false")));
}

#[test]
fn classify_non_idempotent_filter_marks_undefined() {
    let o = run(&["classify", "--family", "Z6", "--set", "0,2,4", "--filter", "filter=2", "--structured"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("filter_idempotent\tfalse\n"));
    golden("classify_z6_non_idempotent.tsv", &out);
}

#[test]
fn classify_rejects_bad_literals() {
    assert_eq!(run(&["classify", "--family", "Z6", "--set", "0,9"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--family", "Z6", "--set", "0", "--filter", "filter="]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--family", "Q7", "--set", "0"]).status.code(), Some(2));
}

#[test]
fn catalog_golden() {
    let o = run(&["catalog", "--family", "RB2x2", "--structured"]);
    assert_eq!(o.status.code(), Some(0));
    golden("catalog_rb2x2.tsv", &stdout(&o));
    let human = stdout(&run(&["catalog", data("z3.txt").to_str().unwrap()]));
    assert!(human.contains("smallest ideal       {0,1,2}"));
}

#[test]
fn verify_duality_golden() {
    let o = run(&["verify", "duality", "--max-order", "2", "--structured"]);
    assert_eq!(o.status.code(), Some(0));
    golden("verify_duality_2.tsv", &stdout(&o));
}

#[test]
fn verify_all_small_passes() {
    let o = run(&["verify", "all", "--max-order", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.matches(": pass\n").count(), 9);
}

#[test]
fn verify_sampled_without_seed_is_usage_error() {
    let o = run(&["verify", "all", "--max-order", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("seed"));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_sampled_with_seed() {
    let o = run(&["verify", "enumeration", "--max-order", "4", "--seed", "3", "--samples", "4", "--structured"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("check\tsampled_tables_associative\npassed\ttrue\ninstances\t5\n"));
}

#[test]
fn search_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.tsv");
    let b = dir.path().join("b.tsv");
    for p in [&a, &b] {
        let o = run(&["search", "--max-order", "2", "--seed", "1", "--structured", "--output", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let first = std::fs::read(&a).unwrap();
    assert_eq!(first, std::fs::read(&b).unwrap());
    golden("search_2_seed1.tsv", &String::from_utf8(first).unwrap());
    let leftovers: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .filter(|n| n.to_string_lossy().starts_with('.'))
        .collect();
    assert!(leftovers.is_empty(), "temporary files left behind: {leftovers:?}");
}

#[test]
fn search_rejects_large_orders() {
    let o = run(&["search", "--max-order", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size limit"));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
