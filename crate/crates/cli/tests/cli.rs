use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn qcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcat"))
        .args(args)
        .env_remove("QCAT_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qcat-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

/// Truncated Clebsch-Gordan rule for sl2 at level k.
fn a1_fusion(k: i64, a: i64, b: i64, c: i64) -> u64 {
    ((a - b).abs() <= c && c <= a + b && (a + b + c) % 2 == 0 && a + b + c <= 2 * k) as u64
}

#[test]
fn fusion_a1_level_two_is_ising() {
    let out = qcat(&["fusion", "--type", "A", "--rank", "1", "--level", "2", "--format", "json", "--output", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    let n = &doc["data"]["N"];
    assert_eq!(n.as_array().unwrap().len(), 3);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                assert_eq!(n[a][b][c].as_u64().unwrap(), a1_fusion(2, a as i64, b as i64, c as i64), "{a}{b}{c}");
            }
        }
    }
    assert_eq!(doc["conventions"]["q"], "zeta_8");
}

#[test]
fn duality_a1_level_three_is_all_equal() {
    let out = qcat(&["duality", "--type", "A", "--rank", "1", "--level", "3", "--n-max", "6", "--format", "json", "--output", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    let tower = doc["data"]["tower"].as_array().unwrap();
    assert_eq!(tower.len(), 5);
    // path counts on the A4 graph 0-1-2-3, squared and summed
    let mut paths = vec![1u64, 0, 0, 0];
    for n in 1..=6 {
        let mut next = vec![0u64; 4];
        for (a, &m) in paths.iter().enumerate() {
            if a > 0 {
                next[a - 1] += m;
            }
            if a < 3 {
                next[a + 1] += m;
            }
        }
        paths = next;
        if n >= 2 {
            let e = &tower[n - 2];
            let c: u64 = paths.iter().map(|m| m * m).sum();
            assert_eq!(e["centralizer_dim"].as_u64(), Some(c));
            assert_eq!(e["braid_image_dim"].as_u64(), Some(c));
            assert_eq!(e["duality"], true);
        }
    }
}

#[test]
fn verify_g2_level_one() {
    let out = qcat(&["verify", "--type", "G2", "--level", "1", "--format", "json", "--output", "-"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json_of(&out);
    assert_eq!(doc["passed"], true);
    assert!(doc["checks"].as_array().unwrap().iter().any(|c| c["name"] == "Verlinde integrality"));
    let fusion = qcat(&["fusion", "--type", "G2", "--level", "1", "--format", "json", "--output", "-"]);
    assert_eq!(json_of(&fusion)["data"]["weights"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_a1_runs_f_and_r_suites() {
    let out = qcat(&["verify", "--type", "A", "--level", "2", "--trials", "5", "--seed", "3", "--format", "json", "--output", "-"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json_of(&out);
    let names: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for want in ["pentagon", "hexagon", "inverse hexagon", "weak quasi-bialgebra axioms", "twist round trip"] {
        assert!(names.contains(&want), "missing {want}: {names:?}");
    }
    assert!(doc["conventions"]["f_symbols"].is_string());
}

#[test]
fn twist_reports_sign_blocks() {
    let out = qcat(&["twist", "--type", "A", "--level", "3", "--format", "json", "--output", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    for row in doc["data"]["rows"].as_array().unwrap() {
        let sign = row["sign"].as_i64().unwrap();
        let after = &row["after"]["coeffs"];
        assert_eq!(after[0].as_str().unwrap(), sign.to_string());
        assert!(after.as_array().unwrap()[1..].iter().all(|c| c == "0"));
    }
}

#[test]
fn invalid_configurations_exit_with_two() {
    for args in [
        vec!["fusion", "--type", "X", "--level", "2"],
        vec!["fusion", "--type", "A", "--level", "0"],
        vec!["fusion", "--type", "A", "--rank", "0", "--level", "1"],
        vec!["twist", "--type", "B", "--rank", "2", "--level", "2"],
        vec!["duality", "--type", "A", "--level", "2", "--n-max", "1"],
        vec!["fusion", "--level", "2"],
    ] {
        assert_eq!(qcat(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exit_code_reflects_report() {
    for args in [
        ["modular", "--type", "B", "--rank", "2"],
        ["verify", "--type", "C", "--rank", "2"],
        ["duality", "--type", "A", "--rank", "2"],
    ] {
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--level", "2", "--format", "json", "--output", "-"]);
        let out = qcat(&full);
        let passed = json_of(&out)["passed"].as_bool().unwrap();
        assert_eq!(out.status.code(), Some(if passed { 0 } else { 1 }));
    }
}

fn read(p: &Path) -> Vec<u8> {
    std::fs::read(p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

#[test]
fn seeded_runs_are_byte_identical() {
    let dir = scratch("det");
    let run = |name: &str| {
        let p = dir.join(name);
        let out = qcat(&["verify", "--type", "A", "--level", "2", "--trials", "4", "--seed", "17", "--format", "json", "--output", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        read(&p)
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn output_directory_from_environment() {
    let dir = scratch("env");
    let out = Command::new(env!("CARGO_BIN_EXE_qcat"))
        .args(["fusion", "--type", "A", "--level", "3", "--format", "csv"])
        .env("QCAT_OUTPUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let body = String::from_utf8(read(&dir.join("fusion_A1_k3.csv"))).unwrap();
    assert!(body.starts_with("# "));
    assert!(body.contains("lambda,mu,nu,N"));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS fusion associativity"));
}
