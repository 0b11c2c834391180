use std::path::PathBuf;
use std::process::{Command as Process, Output};

use refltk::cli::{parse_group_spec, run, Command, Flags, GroupSpec};
use refltk::group::CoxeterType;

fn spec_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("refltk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn refltk(args: &[&str], spec: &PathBuf) -> Output {
    Process::new(env!("CARGO_BIN_EXE_refltk"))
        .args(args)
        .arg("--spec")
        .arg(spec)
        .output()
        .unwrap()
}

#[test]
fn verify_all_on_a2_exits_zero() {
    let path = spec_file("a2.json", r#"{"named":{"type":"A","rank":2}}"#);
    let out = refltk(&["verify-all"], &path);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("degrees [2, 3]"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn classify_b2_reports_two_classes() {
    let path = spec_file("b2.json", r#"{"named":{"type":"B","rank":2}}"#);
    let out = refltk(&["classify", "--json"], &path);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["splitting"]["r"], 2);
    assert_eq!(
        v["splitting"]["class-size-sum"],
        v["splitting"]["total-maximal"]
    );
}

#[test]
fn order_cap_exits_nonzero_with_code() {
    let path = spec_file("a2-cap.json", r#"{"named":{"type":"A","rank":2}}"#);
    let out = refltk(&["enumerate", "--json", "--cap", "4"], &path);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["code"], "order-cap-exceeded");

    let path = spec_file(
        "a2-cap-file.json",
        r#"{"named":{"type":"A","rank":2},"options":{"order-cap":5}}"#,
    );
    assert_eq!(refltk(&["enumerate"], &path).status.code(), Some(2));
}

#[test]
fn malformed_and_singular_specs_exit_nonzero() {
    let path = spec_file("bad.json", "{\"named\": {\"type\": }}");
    let out = refltk(&["enumerate"], &path);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[parse]"));

    let path = spec_file(
        "singular.json",
        r#"{"explicit":{"field":"Q","gram":[["1","0"],["0","0"]],"generators":[["1","0"]]}}"#,
    );
    let out = refltk(&["enumerate"], &path);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular-gram"));
}

#[test]
fn json_reports_are_byte_identical() {
    let path = spec_file(
        "h3-explicit.json",
        r#"{"explicit":{"field":"Q(sqrt 5)","gram":[["2","-1","0"],["-1","2","-1/2-1/2r"],["0","-1/2-1/2r","2"]],
            "generators":[["1","0","0"],["0","1","0"],["0","0","1"]]}}"#,
    );
    let a = refltk(&["verify-all", "--json"], &path);
    let b = refltk(&["verify-all", "--json"], &path);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stdout)
    );
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["group"]["order"], 120);
    assert_eq!(v["degrees"]["degrees"], serde_json::json!([2, 6, 10]));
}

#[test]
fn exit_code_tracks_failed_checks() {
    for ty in [
        CoxeterType::A(1),
        CoxeterType::B(2),
        CoxeterType::I2(5),
        CoxeterType::D(3),
    ] {
        for command in Command::ALL {
            let report = run(command, &GroupSpec::named(ty), &Flags::default());
            assert!(report.error.is_none());
            assert_eq!(
                report.exit_code() == 0,
                report.summary.failed == 0,
                "{ty} {command}"
            );
            assert_eq!(report.exit_code(), 0, "{}", report.to_text());
        }
    }
    let mut report = run(
        Command::Enumerate,
        &GroupSpec::named(CoxeterType::A(2)),
        &Flags::default(),
    );
    report.checks[0].fail("injected".into());
    report.summary.failed = 1;
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn spec_round_trip_through_json() {
    for ty in [CoxeterType::A(3), CoxeterType::H4, CoxeterType::I2(8)] {
        let spec = GroupSpec::named(ty);
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(parse_group_spec(&text).unwrap(), spec);
    }
}
