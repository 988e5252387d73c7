use std::process::Command;

fn infhecke(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_infhecke"))
        .args(args)
        .output()
        .expect("run infhecke");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

#[test]
fn center_reports_centrality() {
    let (code, out) = infhecke(&["center", "--z", "Delta^2"]);
    assert_eq!(code, 0);
    assert!(out.contains("central: true"));
    assert!(out.contains("q_z = -1/6*Delta^3"));
}

#[test]
fn fg_prints_both_polynomials() {
    let (code, out) = infhecke(&["fg", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("f_3 = 6*T^2 + 20*T + 14"));
    assert!(out.contains("g_3 = -21*T^2"));
    assert!(out.contains("methods agree: true"));
}

#[test]
fn verma_finds_depths_zero_and_two() {
    let (code, out) = infhecke(&["verma", "--z", "1", "--lambda", "-1/2", "--depth", "8", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let depths: Vec<u64> = v["maximal_vectors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["depth"].as_u64().unwrap())
        .collect();
    assert_eq!(depths, vec![0, 2]);
    assert_eq!(v["phi"], "1/8");
}

#[test]
fn syntax_error_is_a_usage_error() {
    let (code, _) = infhecke(&["nf", "e +* f"]);
    assert_eq!(code, 2);
    let (code, out) = infhecke(&["nf", "e +* f", "--json"]);
    assert_eq!(code, 2);
    assert!(out.contains("offset 3"));
    assert_eq!(infhecke(&["nf", "q"]).0, 2);
    assert_eq!(infhecke(&["verma", "--lambda", "0.5"]).0, 2);
    assert_eq!(infhecke(&["no-such-command"]).0, 2);
}

#[test]
fn nf_and_comm() {
    let (code, out) = infhecke(&["nf", "e*y^2 + h*x*y - f*x^2 - t", "--z", "Delta"]);
    assert_eq!((code, out.trim()), (0, "0"));
    let (_, out) = infhecke(&["comm", "y", "x", "--z", "Delta"]);
    assert_eq!(out.trim(), "-4*e*f - h^2 + 2*h");
    let (_, out) = infhecke(&["nf", "f*e"]);
    assert_eq!(out.trim(), "e*f - h");
}

#[test]
fn verification_failure_exits_one() {
    // degree 0 leaves no room for the correction
    let (code, out) = infhecke(&["families", "lift", "--family", "gln", "--n", "2", "--beta1", "1", "--degree", "0"]);
    assert_eq!(code, 1);
    assert!(out.contains("no central lift"));
}

#[test]
fn families_and_abelian_commands() {
    let (code, out) = infhecke(&["families", "central", "--family", "sp2n", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("central: true"));
    let (code, _) = infhecke(&["families", "build", "--family", "sp2n", "--n", "1", "--beta1", "1"]);
    assert_eq!(code, 2);
    let (code, out) = infhecke(&["abelian", "pstep", "--a", "1", "--b", "0", "--z", "Delta", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["expected_degree"], 2);
    assert_eq!(v["verified"], true);
    let (code, out) = infhecke(&["abelian", "independence", "--z", "0", "--degree", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("1 in commutator span at N=4: false"));
    let (code, _) = infhecke(&["abelian", "lfilt", "e^2*f", "--v", "y", "--z", "1"]);
    assert_eq!(code, 0);
}

#[test]
fn findim_and_block() {
    let (_, out) = infhecke(&["findim", "--r", "2", "--z", "1"]);
    assert!(out.contains("infinite-dimensional"));
    let (_, out) = infhecke(&["block", "--lambda", "0", "--mu", "-3", "--z", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["same_block"], true);
}
