use std::path::PathBuf;
use std::process::Command;

use dpcodes::codes::{CodeJson, LinearCode};

fn dpcodes(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_dpcodes")).args(args).output().expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn fixture(name: &str) -> String {
    format!("{}/../core/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn flynn_example_from_flags() {
    let (out, code) =
        dpcodes(&["build", "--degree", "4", "--q", "5", "--type", "4_3", "--f2", "2,4,1", "--f3", "3,3,0,1", "--delta", "x"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("type 4_3 (3[-1]2[-1])"));
    assert!(out.contains("points: 31 (trace 1)"));
    assert!(out.contains("n=31 k=5"));
}

#[test]
fn flynn_factor_degree_is_checked() {
    let (out, code) = dpcodes(&["build", "--degree", "4", "--q", "5", "--f2", "2,4,1,1", "--f3", "3,3,0,1"]);
    assert_eq!(code, 3, "{out}");
}

#[test]
fn degree5_build_length() {
    let (out, code) = dpcodes(&["build", "--degree", "5", "--q", "9"]);
    assert_eq!(code, 0);
    assert!(out.contains("n=82 k=6"), "{out}");
}

#[test]
fn degree6_guard_cites_the_reason() {
    let (out, code) = dpcodes(&["build", "--degree", "6", "--q", "3"]);
    assert_eq!(code, 3);
    assert!(out.contains("q >= 4"), "{out}");
}

#[test]
fn digit_matrix_and_distance() {
    let (out, code) = dpcodes(&["code", "--degree", "4", "--q", "5", "--type", "4_3"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.len() == 31 && r.chars().all(|c| ('0'..='4').contains(&c))));
    let (out, code) = dpcodes(&["mindist", "--degree", "4", "--q", "5", "--type", "4_3"]);
    assert_eq!(code, 0);
    assert!(out.contains("[31,5,21]") && out.contains("d=21"), "{out}");
}

#[test]
fn distance_reports() {
    let (out, code) = dpcodes(&["mindist", "--degree", "6", "--q", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("d=5"), "{out}");
    let (out, code) = dpcodes(&["mindist", "--degree", "5", "--q", "8"]);
    assert_eq!(code, 0);
    assert!(out.contains("d=51 beats prior 50"), "{out}");
}

#[test]
fn extension_fields_use_json() {
    let (out, code) = dpcodes(&["code", "--degree", "5", "--q", "4", "--emit", "matrix"]);
    assert_eq!(code, 3, "{out}");
    let (out, code) = dpcodes(&["code", "--degree", "5", "--q", "4"]);
    assert_eq!(code, 0);
    let json: String = out.lines().skip(1).collect::<Vec<_>>().join("\n");
    let parsed: CodeJson = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed.modulus.len(), 3);
    let c = LinearCode::from_json(&parsed).unwrap();
    assert_eq!((c.len(), c.dim(), c.min_distance().unwrap()), (17, 6, 8));
}

#[test]
fn weight_distribution_sums() {
    let (out, code) = dpcodes(&["wdist", "--degree", "5", "--q", "3"]);
    assert_eq!(code, 0);
    let total: u64 = out
        .lines()
        .skip_while(|l| *l != "weight count")
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 3u64.pow(6) - 1);
}

#[test]
fn degree4_table_leaves_missing_type_blank() {
    let (out, code) = dpcodes(&["tables", "--degree", "4"]);
    assert_eq!(code, 0);
    let row = out.lines().find(|l| l.trim_start().starts_with("3  4_1")).unwrap();
    assert_eq!(row.trim_end(), " 3  4_1");
    assert!(out.contains("[31,5,21]  tabled [31,5,21]"));
}

#[test]
fn automorphism_command() {
    let (out, code) = dpcodes(&["auto5", "--q", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("order 5, automorphism: yes"), "{out}");
}

#[test]
fn pencil_fixture() {
    let (out, code) = dpcodes(&["pencil", &fixture("f8_quadrics.txt")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("3[-1]2[-1]"));
    assert!(out.contains("[73,5,59]"));
}

#[test]
fn singular_pencil_is_rejected() {
    let path = tmp("cone.txt");
    std::fs::write(&path, "field 5 0,1\nA = x0^2 + x1^2\nB = x2^2 + x3^2\n").unwrap();
    let (out, code) = dpcodes(&["pencil", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(out.starts_with("rejected: "), "{out}");
}

#[test]
fn model_file_replays() {
    let path = tmp("dp6_q5.json");
    let p = path.to_str().unwrap();
    let (_, code) = dpcodes(&["build", "--degree", "6", "--q", "5", "--seed", "2", "--out", p]);
    assert_eq!(code, 0);
    let (direct, _) = dpcodes(&["mindist", "--degree", "6", "--q", "5", "--seed", "2"]);
    let (replayed, code) = dpcodes(&["mindist", "--model", p]);
    assert_eq!(code, 0);
    assert_eq!(direct, replayed);
}

#[test]
fn output_is_deterministic() {
    let args = ["build", "--degree", "4", "--q", "7", "--type", "4_1", "--seed", "3"];
    assert_eq!(dpcodes(&args), dpcodes(&args));
    let one = Command::new(env!("CARGO_BIN_EXE_dpcodes"))
        .args(["wdist", "--degree", "6", "--q", "5"])
        .env("DPCODES_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(one.stdout).unwrap(), dpcodes(&["wdist", "--degree", "6", "--q", "5"]).0);
}

#[test]
fn invalid_inputs_exit_3() {
    assert_eq!(dpcodes(&["build", "--degree", "7", "--q", "5"]).1, 3);
    assert_eq!(dpcodes(&["build", "--degree", "4", "--q", "5"]).1, 3);
    assert_eq!(dpcodes(&["build", "--degree", "5", "--q", "6"]).1, 3);
    assert_eq!(dpcodes(&["build", "--degree", "4", "--q", "3", "--type", "4_1"]).1, 3);
}

#[test]
fn single_criterion() {
    let (out, code) = dpcodes(&["verify", "--criterion", "10"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("criterion 10: PASS"));
}
