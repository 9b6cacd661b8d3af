use std::process::{Command, Output};

use dynsym::suite::{parse_report, Status};

fn dynsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dynsym")).args(args).env_remove("DYNSYM_CONFIG").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_json_report() {
    let o = dynsym(&["verify", "weyl", "--format", "json", "--trials", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let r = parse_report(&stdout(&o)).unwrap();
    assert_eq!(r.schema, 1);
    assert_eq!(r.config.trials, 4);
    assert_eq!(r.summary.fail, 0);
    assert_eq!(r.summary.pass, r.records.len());
}

#[test]
fn verify_is_byte_deterministic() {
    let args = ["verify", "jordan", "--format", "json", "--seed", "7"];
    let a = dynsym(&args);
    let b = dynsym(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn so23_single_presentation() {
    let o = dynsym(&["verify", "so23", "--presentation", "oscillator", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = parse_report(&stdout(&o)).unwrap();
    let brackets = r.records.iter().filter(|c| c.id.starts_with("so23/oscillator/[")).count();
    assert_eq!(brackets, 45);
    assert!(r.records.len() > 45);
}

#[test]
fn literal_ks_mode_records_expected_failure() {
    let o = dynsym(&["verify", "transforms", "--ks-mode", "paper-literal", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = parse_report(&stdout(&o)).unwrap();
    let norm = r.records.iter().find(|c| c.id.starts_with("transforms/|x|^2")).unwrap();
    assert_eq!(norm.status, Status::ExpectedFail);
}

#[test]
fn failing_check_exits_one() {
    let o = dynsym(&["verify", "landau", "--fock-cutoff-2mode", "4", "--tolerance", "1e-300"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dynsym(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(dynsym(&["verify", "weyl", "--tolerance", "-1"]).status.code(), Some(2));
    assert_eq!(dynsym(&["verify", "weyl", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(dynsym(&["spectrum", "landau", "--mass", "1"]).status.code(), Some(2));
}

#[test]
fn config_file_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("suite.toml");
    std::fs::write(&path, "trials = 3\nseed = 5\noutput = \"json\"\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_dynsym"))
        .args(["verify", "weyl", "--seed", "9"])
        .env("DYNSYM_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let r = parse_report(&stdout(&o)).unwrap();
    assert_eq!((r.config.trials, r.config.seed), (3, 9));

    std::fs::write(&path, "colour = \"blue\"\n").unwrap();
    let bad = dynsym(&["--config", path.to_str().unwrap(), "verify", "weyl"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = dynsym(&["verify", "weyl", "--trials", "2", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let r = parse_report(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.config.trials, 2);
}

#[test]
fn landau_spectrum_json() {
    let o = dynsym(&["spectrum", "landau", "--cutoff", "6", "--field-gauss", "1e4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let lines = v["lines"].as_array().unwrap();
    assert_eq!(lines[0]["multiplicity"], 7);
    assert!((lines[1]["value"].as_f64().unwrap() - 1.5).abs() < 1e-8);
    assert!(v["magnetic_length"].as_f64().unwrap() > 0.0);
}

#[test]
fn dumps() {
    let s: serde_json::Value = serde_json::from_str(&stdout(&dynsym(&["dump", "sigma", "--format", "json"]))).unwrap();
    assert_eq!(s.as_object().unwrap().len(), 15);
    assert_eq!(s["sigma[-1,0]"][0][0], serde_json::json!(["-1/2", "0"]));
    let g: serde_json::Value = serde_json::from_str(&stdout(&dynsym(&["dump", "generators"]))).unwrap();
    assert_eq!(g.as_object().unwrap().len(), 4);
    assert_eq!(g["phase"]["generators"].as_object().unwrap().len(), 10);
    let c: serde_json::Value = serde_json::from_str(&stdout(&dynsym(&["dump", "structure-constants"]))).unwrap();
    assert_eq!(c["triple"]["complex"].as_array().unwrap().len(), 4);
    assert!(c["so23_phase"].as_object().unwrap().len() > 0);
}
