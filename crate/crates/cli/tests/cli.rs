use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_symtele");

fn run(args: &[&str]) -> Output { Command::new(BIN).args(args).output().expect("run symtele") }

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn teleport_identical_reference_input() {
    let v = json(&["teleport-identical", "--alpha", "0.6", "--beta", "0.8", "--format", "json"]);
    assert_eq!(v["protocol"], "identical");
    assert_eq!(v["input"]["alpha"], "0.6+0.0i");
    let outcomes = v["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 4);
    for o in outcomes {
        assert!((o["probability"].as_f64().unwrap() - 0.25).abs() < 1e-12);
        assert!((o["fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(o["conditional"].as_array().unwrap().len(), 6);
    }
    assert!((v["probability_sum"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["pass"], true);
        assert!(c["residual"].is_number());
    }
}

#[test]
fn teleport_distinguishable_accepts_complex_flags() {
    let v = json(&["teleport-distinguishable", "--alpha", "0.6", "--beta", "-0.8i", "--format", "json"]);
    assert_eq!(v["input"]["beta"], "0.0-0.8i");
    assert_eq!(v["outcomes"][3]["kind"], "PsiMinus");
    assert_eq!(v["outcomes"][0]["conditional"][0]["label"], "0_2");
}

#[test]
fn dims_table_and_exit_code() {
    let out = run(&["dims"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("56"));
    let csv = String::from_utf8(run(&["dims", "--format", "csv"]).stdout).unwrap();
    assert_eq!(csv, "modes,photons,dimension\n2,2,3\n4,2,10\n6,3,56\n");
}

#[test]
fn impossibility_reports_rank() {
    let v = json(&["impossibility", "--format", "json"]);
    let row = &v["table"]["rows"][0];
    assert_eq!(row[1], "3");
    assert!(row[2].as_str().unwrap().parse::<usize>().unwrap() <= 3);
}

#[test]
fn sweep_csv_layout() {
    let out = run(&["sweep", "--trials", "2", "--seed", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "trial,alpha_re,alpha_im,beta_re,beta_im,kind,probability,fidelity");
    assert_eq!(lines.len(), 1 + 2 * 4);
    assert!(lines[1].starts_with("0,") && lines[8].starts_with("1,"));
}

#[test]
fn sweep_depends_on_seed() {
    let a = run(&["sweep", "--trials", "3", "--seed", "1", "--format", "json"]).stdout;
    let b = run(&["sweep", "--trials", "3", "--seed", "2", "--format", "json"]).stdout;
    assert_ne!(a, b);
}

#[test]
fn verify_passes() {
    let v = json(&["verify", "--trials", "5", "--format", "json"]);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
    let verbatim = checks.iter().find(|c| c["name"].as_str().unwrap().contains("verbatim")).unwrap();
    assert!(verbatim["tolerance"].is_null());
    assert!(verbatim["residual"].as_f64().unwrap() > 0.1);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("symtele-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["dims", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["protocol"], "dims");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["teleport-identical", "--alpha", "0.6"][..],
        &["teleport-identical", "--alpha", "x", "--beta", "1"],
        &["teleport-identical", "--alpha", "0", "--beta", "0"],
        &["sweep", "--trials", "0"],
        &["sweep", "--format", "xml"],
        &["teleport"],
        &[],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_1() {
    let out = run(&["dims", "--out", "/nonexistent-dir/report.txt"]);
    assert_eq!(out.status.code(), Some(1));
}
