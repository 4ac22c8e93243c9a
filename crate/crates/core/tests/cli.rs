use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use stablerank::cli::input::{parse_input, serialize, InputDocument};
use stablerank::ideal::{LinearChange, MonomialIdeal, PolyIdeal, SparsePolynomial};
use stablerank::rat;
use stablerank::tensor::{SymmetricSupport, TensorSupport};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_stablerank"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (code, out, err) = bin(&all);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(out.trim()).expect("one JSON object")
}

#[test]
fn rank_tensor_prints_three_halves() {
    let (code, out, _) = bin(&["rank", "tensor", &data("w_tensor.txt")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("3/2"));
    assert!(out.contains("upper bound on rk^G"));
}

#[test]
fn rank_tensor_with_alpha() {
    let v = json(&["rank", "tensor", &data("w_tensor.txt"), "--alpha", "2,2,2"]);
    assert_eq!(v["value"], "3");
    let (code, _, err) = bin(&["rank", "tensor", &data("w_tensor.txt"), "--alpha", "1,0,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("positive"));
    let (code, _, _) = bin(&["rank", "tensor", &data("w_tensor.txt"), "--alpha", "1,1"]);
    assert_eq!(code, 2);
    let (code, _, _) = bin(&["rank", "tensor", &data("w_tensor.txt"), "--alpha", "0.5,1,1"]);
    assert_eq!(code, 2);
}

#[test]
fn rank_symm_and_lct() {
    let v = json(&["rank", "symm", &data("w_form.txt")]);
    assert_eq!(v["value"], "3/2");
    assert_eq!(v["witness"], serde_json::json!([1, 0]));

    let (code, out, _) = bin(&["lct", &data("cyclic.txt")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("1"));
}

#[test]
fn rank_ideal_with_change() {
    let v = json(&["rank", "ideal", &data("square_of_sum.txt")]);
    assert_eq!(v["value"], "1");
    let v = json(&[
        "rank",
        "ideal",
        &data("square_of_sum.txt"),
        "--change",
        &data("sum_difference.txt"),
    ]);
    assert_eq!(v["value"], "1/2");
    let notes: Vec<&str> = v["notes"].as_array().unwrap().iter().map(|n| n.as_str().unwrap()).collect();
    assert!(notes.iter().any(|n| n.starts_with("standard parameters: 1")));
    assert!(notes.iter().any(|n| n.contains("upper bound on rk^G")));

    let v = json(&["rank", "ideal", &data("cusp_parameter.txt")]);
    assert_eq!(v["value"], "3/2");
    let v = json(&["rank", "ideal", &data("cyclic.txt")]);
    assert_eq!(v["value"], "1");
}

#[test]
fn change_dimension_mismatch_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m3.txt");
    std::fs::write(&m, "matrix 3\n1 0 0\n0 1 0\n0 0 1\n").unwrap();
    let (code, _, err) = bin(&["rank", "ideal", &data("square_of_sum.txt"), "--change", m.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("dimension mismatch"));
}

#[test]
fn semistable_by_kind() {
    let v = json(&["semistable", &data("w_tensor.txt")]);
    assert_eq!(v["value"], false);
    assert!(v["witness"].is_array());
    let v = json(&["semistable", &data("w_form.txt")]);
    assert_eq!(v["value"], false);
    let v = json(&["semistable", &data("fermat_cubic.txt")]);
    assert_eq!(v["value"], true);
    assert!(v["witness"].is_null());
    let (code, _, _) = bin(&["semistable", &data("cyclic.txt")]);
    assert_eq!(code, 2);
}

#[test]
fn infinite_rank_prints_inf() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("unit.txt");
    std::fs::write(&f, "pideal 2\n1 : 0 0\n1 : 1 0\n").unwrap();
    let v = json(&["rank", "ideal", f.to_str().unwrap()]);
    assert_eq!(v["value"], "inf");
    assert!(v["witness"].is_null());

    let g = dir.path().join("unit_m.txt");
    std::fs::write(&g, "mideal 2\n0 0\n").unwrap();
    let (code, _, err) = bin(&["lct", g.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("lct undefined"));
}

#[test]
fn parse_errors_report_line_and_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.txt");
    std::fs::write(&f, "# header next\ntensor 2 2\n1 1\n1 3\n").unwrap();
    let (code, out, err) = bin(&["rank", "tensor", f.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("line 4"), "{err}");

    std::fs::write(&f, "tensor 2 2\n0 1\n").unwrap();
    let (code, _, err) = bin(&["rank", "tensor", f.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bin(&[]).0, 2);
    assert_eq!(bin(&["rank"]).0, 2);
    assert_eq!(bin(&["rank", "matrix", "x"]).0, 2);
    assert_eq!(bin(&["verify", "all", "--seed", "x"]).0, 2);
    assert_eq!(bin(&["lct", &data("cyclic.txt"), "--frobnicate"]).0, 2);
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["--json", "verify", "all", "--seed", "5", "--cases", "15"];
    let (code, first, _) = bin(&args);
    assert_eq!(code, 0);
    let (_, second, _) = bin(&args);
    assert_eq!(first, second);
    let v: Value = serde_json::from_str(first.trim()).unwrap();
    assert_eq!(v["value"], "pass");
    assert!(v["notes"][0].as_str().unwrap().starts_with("symm-multi: 15/15"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["rank", "tensor", "W"],
        vec!["--json", "rank", "ideal", "S", "--change", "M"],
        vec!["semistable", "W"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| match *a {
                "W" => data("w_tensor.txt"),
                "S" => data("square_of_sum.txt"),
                "M" => data("sum_difference.txt"),
                other => other.to_string(),
            })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(bin(&args), bin(&args));
    }
}

fn document() -> impl Strategy<Value = InputDocument> {
    let tensor = (1usize..=3, 1usize..=3).prop_flat_map(|(d, n)| {
        prop::collection::vec(prop::collection::vec(1..=n, d), 1..=5).prop_map(move |t| {
            InputDocument::Tensor(TensorSupport::new(d, n, t.into_iter().collect::<BTreeSet<_>>()).unwrap())
        })
    });
    let symm = (1usize..=4, 1usize..=3).prop_flat_map(|(d, n)| {
        prop::collection::vec(prop::collection::vec(0..n, d), 1..=4).prop_map(move |words| {
            let exps: BTreeSet<Vec<u32>> = words
                .into_iter()
                .map(|w| {
                    let mut m = vec![0u32; n];
                    w.into_iter().for_each(|j| m[j] += 1);
                    m
                })
                .collect();
            InputDocument::Symm(SymmetricSupport::new(d, n, exps).unwrap())
        })
    });
    let mideal = (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=6, n), 1..=5)
            .prop_map(move |g| InputDocument::MonomialIdeal(MonomialIdeal::new(n, g).unwrap()))
    });
    let pideal = (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(
            prop::collection::vec((prop::collection::vec(0u32..=3, n), -5i64..=5, 1i64..=4), 1..=3),
            1..=3,
        )
        .prop_filter_map("zero ideal", move |gens| {
            let gens = gens
                .into_iter()
                .map(|t| SparsePolynomial::from_terms(n, t.into_iter().map(|(e, p, q)| (e, rat(p, q)))).unwrap())
                .collect();
            PolyIdeal::new(n, gens).ok().map(InputDocument::PolyIdeal)
        })
    });
    let matrix = (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=3), n), n).prop_filter_map("singular", |m| {
            LinearChange::new(m.into_iter().map(|r| r.into_iter().map(|(p, q)| rat(p, q)).collect()).collect())
                .ok()
                .map(InputDocument::Matrix)
        })
    });
    prop_oneof![tensor, symm, mideal, pideal, matrix]
}

proptest! {
    #[test]
    fn serialized_documents_parse_back(doc in document()) {
        let text = serialize(&doc);
        prop_assert_eq!(parse_input(&text).unwrap(), doc);
    }
}
