//! End-to-end checks of the command-line interface: exit codes,
//! deterministic outputs, and the documented pipelines.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trinerve"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("trinerve-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn nerve_command_writes_deterministic_ssx() {
    let input = tmp("ordinal2.json");
    std::fs::write(&input, r#"{"type": "ordinal", "p": 2}"#).unwrap();
    let out = tmp("ordinal2.ssx");
    for _ in 0..2 {
        let status = bin()
            .args(["nerve"])
            .arg(&input)
            .args(["--kind", "nerve", "--trunc", "3", "--out"])
            .arg(&out)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let first = std::fs::read_to_string(&out).unwrap();
    let status = bin()
        .args(["nerve"])
        .arg(&input)
        .args(["--kind", "nerve", "--trunc", "3", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    assert_eq!(first, std::fs::read_to_string(&out).unwrap());
}

#[test]
fn homology_and_compare_pipeline() {
    let input = tmp("z3.json");
    std::fs::write(&input, r#"{"type": "group", "cyclic": 3}"#).unwrap();
    let ssx = tmp("z3.ssx");
    assert!(bin()
        .args(["nerve"])
        .arg(&input)
        .args(["--kind", "nerve", "--trunc", "5", "--out"])
        .arg(&ssx)
        .status()
        .unwrap()
        .success());
    let output = bin()
        .args(["homology"])
        .arg(&ssx)
        .args(["--degrees", "0:3", "--coeff", "z"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("H_1 = betti 0 torsion [3]"), "{text}");
    assert!(text.contains("H_3 = betti 0 torsion [3]"), "{text}");
    // a complex compared with itself is equal
    let status = bin()
        .args(["compare"])
        .arg(&ssx)
        .arg(&ssx)
        .args(["--degrees", "0:3", "--coeff", "zp:2"])
        .status()
        .unwrap();
    assert!(status.success());
}

#[test]
fn kan_command_flags_poset_horn() {
    let input = tmp("ord1.json");
    std::fs::write(&input, r#"{"type": "ordinal", "p": 1}"#).unwrap();
    let ssx = tmp("ord1.ssx");
    assert!(bin()
        .args(["nerve"])
        .arg(&input)
        .args(["--kind", "nerve", "--trunc", "2", "--out"])
        .arg(&ssx)
        .status()
        .unwrap()
        .success());
    let status = bin()
        .args(["kan"])
        .arg(&ssx)
        .args(["--n", "2", "--k", "0"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}

#[test]
fn postnikov_command_full_verification() {
    let g = r#"{"table": [[0,1],[1,0]]}"#;
    let module = format!(
        r#"{{"group": {g}, "coeff": {{"rank": 0, "torsion": [2]}}, "action": [[[1]],[[1]]]}}"#
    );
    let h: Vec<String> = (0..8).map(|i| if i == 7 { "[1]" } else { "[0]" }.into()).collect();
    let t: Vec<String> = (0..1024).map(|_| "[0]".to_string()).collect();
    let input = tmp("postnikov-z2.json");
    std::fs::write(
        &input,
        format!(
            r#"{{"G": {g}, "A": {module}, "B": {module}, "h": [{}], "t": [{}]}}"#,
            h.join(","),
            t.join(",")
        ),
    )
    .unwrap();
    let out_m = tmp("m.ssx");
    let output = bin()
        .args(["postnikov"])
        .arg(&input)
        .args(["--verify", "basic", "--out"])
        .arg(&out_m)
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("verification passed"), "{text}");
    assert!(text.contains("\"pi1\":2"), "{text}");
    // the written complex has the documented carrier counts
    let m = trinerve::simplicial::read_ssx(&std::fs::read_to_string(&out_m).unwrap()).unwrap();
    assert_eq!(m.count(1), 1);
    assert_eq!(m.count(4), 15913);
}

#[test]
fn broken_t_fails_with_exit_one() {
    let g = r#"{"table": [[0,1],[1,0]]}"#;
    let module = format!(
        r#"{{"group": {g}, "coeff": {{"rank": 0, "torsion": [2]}}, "action": [[[1]],[[1]]]}}"#
    );
    let h: Vec<String> = (0..8).map(|_| "[0]".to_string()).collect();
    // a nonzero entry at a nondegenerate coordinate that is not a cocycle:
    // x = (1,0,0,0,0,0), sigma = (g,g,g,g) -> flat index
    let na = 2usize;
    let n = 2usize;
    let idx = {
        let xs = [1usize, 0, 0, 0, 0, 0];
        let ss = [1usize, 1, 1, 1];
        let mut ix = 0usize;
        for &x in &xs {
            ix = ix * na + x;
        }
        let mut is = 0usize;
        for &s in &ss {
            is = is * n + s;
        }
        ix * n.pow(4) + is
    };
    let t: Vec<String> =
        (0..1024).map(|i| if i == idx { "[1]" } else { "[0]" }.to_string()).collect();
    let input = tmp("postnikov-bad.json");
    std::fs::write(
        &input,
        format!(
            r#"{{"G": {g}, "A": {module}, "B": {module}, "h": [{}], "t": [{}]}}"#,
            h.join(","),
            t.join(",")
        ),
    )
    .unwrap();
    let status = bin().args(["postnikov"]).arg(&input).status().unwrap();
    assert_eq!(status.code(), Some(1));
}

#[test]
fn budget_errors_use_exit_three() {
    let input = tmp("sigma2-z2.json");
    std::fs::write(&input, r#"{"type": "suspension2", "group": {"rank": 0, "torsion": [2]}}"#)
        .unwrap();
    let status = bin()
        .args(["--budget", "4", "nerve"])
        .arg(&input)
        .args(["--kind", "geometric3", "--trunc", "4"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(3));
}

#[test]
fn diag_triple_and_geometric_carrier_counts() {
    let input = tmp("tprime.json");
    std::fs::write(
        &input,
        r#"{"type": "one-object-one-arrow", "group": {"rank": 0, "torsion": [2]}}"#,
    )
    .unwrap();
    let output = bin()
        .args(["nerve"])
        .arg(&input)
        .args(["--kind", "diag-triple", "--trunc", "3"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    // carrier counts 2^{n^2} for the diagonal of the triple nerve
    assert!(text.contains(r#""carriers":[1,2,16,512]"#), "{text}");

    let input2 = tmp("sigma2.json");
    std::fs::write(&input2, r#"{"type": "suspension2", "group": {"rank": 0, "torsion": [2]}}"#)
        .unwrap();
    let output = bin()
        .args(["nerve"])
        .arg(&input2)
        .args(["--kind", "geometric3", "--trunc", "4"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains(r#""carriers":[1,1,1,2,16]"#), "{text}");
}

#[test]
fn cocycle_check_command() {
    let input = tmp("cocycle.json");
    std::fs::write(
        &input,
        r#"{
            "base": {"type": "group", "cyclic": 2},
            "coeff": {"rank": 0, "torsion": [4]},
            "degree": 3,
            "tuples": [[1, 1, 1]],
            "values": [[1]]
        }"#,
    )
    .unwrap();
    // h(g,g,g) = 1 over Z/4 is not a twisted cocycle
    let status = bin().args(["cocycle-check"]).arg(&input).status().unwrap();
    assert_eq!(status.code(), Some(1));
    std::fs::write(
        &input,
        r#"{
            "base": {"type": "group", "cyclic": 2},
            "coeff": {"rank": 0, "torsion": [2]},
            "degree": 3,
            "tuples": [[1, 1, 1]],
            "values": [[1]]
        }"#,
    )
    .unwrap();
    assert!(bin().args(["cocycle-check"]).arg(&input).status().unwrap().success());
}
