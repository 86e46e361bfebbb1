use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use wq_cli::{Cache, Report};

fn wq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wq"))
        .args(args)
        .env_remove("WQ_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = wq(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).expect("valid JSON");
    assert_eq!(v["schema"], "wq/1");
    v
}

#[test]
fn generators_for_n2() {
    let o = wq(&["gens", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("z_1 = x1*x2 - xi1*xi2"), "{text}");
    assert!(text.contains("phi_0 = xi1 + xi2"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["gens", "--n", "0"][..],
        &["gens", "--n", "99"],
        &["bogus"],
        &["module", "v", "--roots", "1,zz"],
        &["module", "s", "--t", "0", "--lambda-roots", "2"],
        &["iso", "--a", "{", "--b", "{}"],
        &["verify", "--suite", "nothing"],
    ] {
        let o = wq(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn typical_module_v() {
    let v = json(&["module", "v", "--roots", "1,2"]);
    assert_eq!(v["dims"], serde_json::json!([1, 1]));
    assert_eq!(v["simplicity"], "SimpleM");
    assert_eq!(v["central_character_text"], "(5*u^-1) / (1 + 4*u^-2)");
}

#[test]
fn atypical_module_v() {
    let v = json(&["module", "v", "--roots", "1,i"]);
    assert_eq!(v["simplicity"], "Reducible");
    let z: Vec<&str> = v["factors"].as_array().unwrap().iter().map(|f| f["z_1"].as_str().unwrap()).collect();
    assert_eq!(z, ["0", "-2"]);
}

#[test]
fn module_s_and_core_and_char() {
    let v = json(&["module", "s", "--t", "5", "--lambda-roots", "2"]);
    assert_eq!(v["simplicity"], "SimpleQ");
    assert_eq!(v["dims"], serde_json::json!([1, 1]));
    let c = json(&["core", "--s", "1,0,3,-1,-1"]);
    assert_eq!(c["core"], serde_json::json!(["-1", "3"]));
    let x = json(&["char", "--s", "1,1", "--order", "3"]);
    assert_eq!(x["expansion"], serde_json::json!(["2", "-2", "2", "-2"]));
    assert_eq!(x["recurrence"]["coeffs"], serde_json::json!(["1"]));
}

#[test]
fn iso_and_yangian_commands() {
    let a = r#"{"t":["2"],"lambda_roots":["1"]}"#;
    let b = r#"{"t":["2"],"lambda_roots":["-1"]}"#;
    let v = json(&["iso", "--a", a, "--b", b]);
    assert_eq!(v["isomorphic"], true);
    let d = json(&["yangian", "diagram", "--m", "2", "--n", "2", "--order", "4"]);
    assert_eq!(d["verdict"], "pass");
    assert_eq!(d["records"][0]["derived_constants"]["flip"], "koszul");
    let y = json(&["yangian", "verify", "--n", "2", "--order-max", "3"]);
    assert_eq!(y["verdict"], "pass");
    let t = json(&["yangian", "twist", "--roots", "1,2", "--f", "3"]);
    assert_eq!(t["check"]["holds"], true);
    let c = json(&["yangian", "chi-inverse", "--a", "3", "--c", "2"]);
    assert_eq!(c["polynomial"], "T^2 - 3*T + 2");
}

#[test]
fn verify_is_deterministic_and_round_trips() {
    let args = ["verify", "--n-max", "2", "--trials", "3", "--seed", "7", "--format", "json"];
    let first: Report = serde_json::from_str(&stdout(&wq(&args))).unwrap();
    let second: Report = serde_json::from_str(&stdout(&wq(&args))).unwrap();
    assert!(first.passed());
    assert_eq!(first.without_timings(), second.without_timings());
    let again: Report = serde_json::from_str(&serde_json::to_string(&first).unwrap()).unwrap();
    assert_eq!(again, first);
    let other: Report =
        serde_json::from_str(&stdout(&wq(&["verify", "--n-max", "2", "--trials", "3", "--seed", "8", "--format", "json"])))
            .unwrap();
    assert_ne!(first.without_timings(), other.without_timings());
}

#[test]
fn suite_selection_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = wq(&["verify", "--suite", "uh,wgen", "--n-max", "2", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let r: Report = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(r.records.iter().all(|x| x.suite == "uh" || x.suite == "wgen"));
    assert!(r.records.iter().any(|x| x.suite == "wgen"));
}

fn cache_file(dir: &Path, n: usize) -> std::path::PathBuf {
    dir.join(format!("wgen-v1-n{n}.json"))
}

#[test]
fn cache_is_written_reused_and_repaired() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let fresh = stdout(&wq(&["gens", "--n", "3"]));
    let o = wq(&["gens", "--n", "3", "--cache-dir", d]);
    assert_eq!(stdout(&o), fresh);
    let file = cache_file(dir.path(), 3);
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.contains("\"format\":\"wq-wgen/1\""));
    assert_eq!(stdout(&wq(&["gens", "--n", "3", "--cache-dir", d])), fresh);

    // a tampered body fails its checksum and is recomputed
    std::fs::write(&file, text.replacen("xi1", "xi2", 1)).unwrap();
    assert!(Cache::at(dir.path()).load(3).is_none());
    assert_eq!(stdout(&wq(&["gens", "--n", "3", "--cache-dir", d])), fresh);
    assert!(Cache::at(dir.path()).load(3).is_some());
    assert_eq!(Cache::at(dir.path()).verify(3), Some(true));

    let o = wq(&["verify", "--suite", "wgen", "--n-max", "3", "--check-cache", "--cache-dir", d]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cache/cache-matches-fresh"));
}

#[test]
fn environment_cache_dir_is_used_and_flag_wins() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let run = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_wq"))
            .args(["gens", "--n", "2"])
            .args(extra)
            .env("WQ_CACHE_DIR", env_dir.path())
            .output()
            .unwrap()
    };
    assert_eq!(run(&[]).status.code(), Some(0));
    assert!(cache_file(env_dir.path(), 2).exists());
    std::fs::remove_file(cache_file(env_dir.path(), 2)).unwrap();
    assert_eq!(run(&["--cache-dir", flag_dir.path().to_str().unwrap()]).status.code(), Some(0));
    assert!(cache_file(flag_dir.path(), 2).exists());
    assert!(!cache_file(env_dir.path(), 2).exists());
}

#[test]
fn help_exits_zero() {
    assert_eq!(wq(&["--help"]).status.code(), Some(0));
    assert_eq!(wq(&["--version"]).status.code(), Some(0));
}
