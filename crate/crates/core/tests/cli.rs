use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cayley-plane"))
}

fn strip_elapsed(s: &str) -> String {
    s.lines()
        .filter(|l| !l.trim_start().starts_with("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn identities_json_exit_zero() {
    let out = bin()
        .args([
            "identities",
            "--kind",
            "okubo",
            "--trials",
            "20",
            "--seed",
            "7",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["passed"], true);
    assert!(doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["seed"] == 7));
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let out = bin()
            .args([
                "collineations",
                "--kind",
                "para",
                "--trials",
                "5",
                "--format",
                "json",
            ])
            .env("CAYLEY_SEED", "11")
            .output()
            .unwrap();
        strip_elapsed(&String::from_utf8(out.stdout).unwrap())
    };
    assert_eq!(run(), run());
}

#[test]
fn flag_overrides_env_seed() {
    let out = bin()
        .args(["ptr", "--seed", "3", "--trials", "2", "--format", "json"])
        .env("CAYLEY_SEED", "9")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["reports"][0]["seed"], 3);
}

#[test]
fn bad_arguments_exit_two() {
    for args in [
        &["identities", "--trials", "0"][..],
        &["nonsense"],
        &["ptr", "--kind", "quaternion"],
        &[],
    ] {
        let out = bin().args(args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn desargues_all_kinds() {
    let out = bin()
        .args(["desargues", "--trials", "3", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 6);
    let with_witness = reports
        .iter()
        .filter(|r| r.get("witnesses").is_some())
        .count();
    assert_eq!(with_witness, 3);
}

#[test]
fn dump_tables_to_file() {
    let path = std::env::temp_dir().join(format!("cayley-tables-{}.json", std::process::id()));
    let out = bin()
        .args(["dump-tables", "--output"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(doc["tables"].as_array().unwrap().len(), 3);
    assert_eq!(doc["gram"][0][4], "1*sqrt3");
    assert_eq!(doc["tables"][2]["kind"], "okubo");
}

#[test]
fn text_format_ends_with_summary() {
    let out = bin().args(["g2", "--trials", "5"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("0 failed: ok"), "{text}");
}
