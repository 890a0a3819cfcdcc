//! End-to-end checks of the `refmon` binary: outputs, file handling and
//! exit codes (0 ok, 1 verification failure, 2 usage, 3 cap).

use std::io::Write;
use std::process::{Command, Output};

fn refmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_refmon")).args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn order_boolean_b2() {
    let out = refmon(&["order", "--family", "boolean", "--type", "B", "--n", "2"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("17"));
}

#[test]
fn order_methods_agree() {
    for method in ["formula", "isotropy", "enumerate"] {
        let out = refmon(&[
            "order", "--family", "arrangement", "--type", "D", "--n", "3", "--method", method,
        ]);
        assert!(out.status.success(), "{method}: {out:?}");
        assert!(stdout_of(&out).contains("131"), "{method}");
    }
}

#[test]
fn order_f4_orbit_data() {
    let out = refmon(&[
        "order", "--family", "arrangement", "--type", "F4", "--method", "orbit-data",
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("54241"));
}

#[test]
fn order_orbit_data_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"[{{"size":1,"isotropy_order":1,"label":"V"}},
            {{"size":3,"isotropy_order":2,"label":"short"}},
            {{"size":3,"isotropy_order":2,"label":"long"}},
            {{"size":1,"isotropy_order":12,"label":"0"}}]"#
    )
    .unwrap();
    let out = refmon(&[
        "order", "--family", "arrangement", "--type", "G2", "--method", "orbit-data",
        "--orbit-data", f.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("49"));
}

#[test]
fn order_seed_system() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // The four reflecting lines of the B2 arrangement as seeds.
    write!(
        f,
        r#"{{"ambient":2,"subspaces":[[["1","0"]],[["0","1"]],[["1","1"]],[["1","-1"]]]}}"#
    )
    .unwrap();
    let out = refmon(&[
        "order", "--type", "B", "--n", "2", "--seed-system", f.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout_of(&out);
    assert!(text.contains("25"), "{text}");
    assert!(text.contains("6"), "{text}"); // six subspaces in the closure
}

#[test]
fn deterministic_output() {
    let run = || {
        stdout_of(&refmon(&[
            "enumerate", "--family", "boolean", "--type", "A", "--n", "3", "--elements", "--json",
        ]))
    };
    let first = run();
    assert!(!first.is_empty());
    assert_eq!(first, run());
    // 34 elements, stated in the payload.
    assert!(first.contains("\"elements\": 34"));
}

#[test]
fn verify_named_isomorphism() {
    let out = refmon(&["verify", "--iso", "An-boolean:In", "--n", "3"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("PASS"));
    let out = refmon(&["verify", "--iso", "nonsense", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn green_counts() {
    let out = refmon(&["green", "--family", "boolean", "--type", "A", "--n", "3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["elements"], 34);
    assert_eq!(v["classes"]["R"], 8);
    assert_eq!(v["classes"]["D"], 4);
    assert_eq!(v["classes"]["D"], v["classes"]["J"]);
}

#[test]
fn cone_report() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"ambient":3,"generators":[["1","1","1"],["-1","1","1"],["-1","-1","1"],["1","-1","1"]]}}"#
    )
    .unwrap();
    let out = refmon(&["cone", "--cone", f.path().to_str().unwrap(), "--json"]);
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["faces"], 10);
    assert_eq!(v["simplicial"], false);
    assert_eq!(v["surjective"], true);
    assert_eq!(v["isomorphism"], false);
}

#[test]
fn exceptional_table() {
    let out = refmon(&["exceptional"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for v in ["49", "54241", "16217200"] {
        assert!(text.contains(v), "{text}");
    }
    let out2 = refmon(&["exceptional"]);
    assert_eq!(out.stdout, out2.stdout, "byte-identical output");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(refmon(&["order"]).status.code(), Some(2));
    assert_eq!(refmon(&["order", "--family", "boolean", "--type", "Q", "--n", "1"]).status.code(), Some(2));
    assert_eq!(refmon(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn cap_errors_exit_3() {
    let out = refmon(&[
        "order", "--family", "arrangement", "--type", "E8", "--method", "enumerate",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = refmon(&[
        "order", "--family", "boolean", "--type", "A", "--n", "4", "--method", "enumerate",
        "--cap", "5",
    ]);
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn verification_failure_exits_1() {
    // Orbit data whose total mismatches the stored E6 order.
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"[{{"size":1,"isotropy_order":1,"label":"V"}}]"#).unwrap();
    let out = refmon(&[
        "order", "--family", "arrangement", "--type", "E6", "--method", "orbit-data",
        "--orbit-data", f.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn selftest_quick() {
    let out = refmon(&["selftest", "--quick"]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout_of(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);
    assert_eq!(text.lines().filter(|l| l.starts_with("FAIL")).count(), 0);
}

#[test]
fn table_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = refmon(&[
        "enumerate", "--family", "boolean", "--type", "A", "--n", "2", "--table",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 7); // |M(A1, Boolean on Q^2)| = 7
}
