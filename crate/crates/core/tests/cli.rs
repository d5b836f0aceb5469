use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta-hecke")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_orbits_example() {
    let o = run(&["verify", "orbits", "--m", "2", "--n", "1", "--bounds", "0,1", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["suite"], "orbits");
    assert_eq!(report["checks"][0]["value"], "4");
}

#[test]
fn verify_polyrep_has_tsm_and_is_reproducible() {
    let args = ["verify", "polyrep", "--m", "2..5", "--seed", "0", "--json", "-"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let ids: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    for m in 2..=5 {
        assert!(ids.contains(&format!("polyrep/m{m}/Tsm").as_str()));
    }
    assert_eq!(stdout(&a), stdout(&run(&args)));
    let text = stdout(&run(&["verify", "polyrep", "--m", "2..3"]));
    assert!(text.starts_with("suite polyrep m=2..3 seed=0: PASS"));
}

#[test]
fn verify_writes_json_file() {
    let dir = std::env::temp_dir().join(format!("theta-hecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = run(&["verify", "main-theorem", "--m", "1..3", "--json", path.to_str().unwrap(), "--timings"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    assert!(report["checks"][0]["elapsed_ms"].is_u64());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn configuration_errors_exit_2() {
    for args in [
        &["verify", "nope", "--m", "2"][..],
        &["verify", "hecke", "--m", "3..2"],
        &["verify", "hecke", "--m", "x"],
        &["eval", "--m", "2", "T[1] +"],
        &["orbits", "--n", "3", "--m", "2", "--bounds", "0,1"],
        &["theta", "--m", "2"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn eval_and_act() {
    assert_eq!(stdout(&run(&["eval", "--m", "2", "(T[1] + 1)*(T[1] - v)"])), "0\n");
    assert_eq!(stdout(&run(&["eval", "--m", "3", "--act", "T[3]"])), "s^4*x1*x3^-1 + s^2 - 1\n");
    assert_eq!(stdout(&run(&["eval", "--m", "2", "T[2]*(x1^0)"])), "s^2*x1*x2^-1 + s^2 - 1\n");
}

#[test]
fn weyl_conventions() {
    let out = stdout(&run(&["weyl", "--m", "3", "W1"]));
    assert!(out.contains("length: 0"));
    let out = stdout(&run(&["weyl", "--m", "3", "--positive-omega", "W1"]));
    assert!(out.contains("length: 4"));
    let out = stdout(&run(&["weyl", "--m", "2", "t[1,-1]"]));
    assert!(out.contains("length: 2"));
}

#[test]
fn springer_matrix_schema() {
    let o = run(&["springer", "--m", "2", "--show", "matrix", "--json"]);
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["m"], 2);
    assert_eq!(j["basis"], "theorem");
    assert_eq!(j["generator"], "T_sm");
    assert_eq!(j["matrix"], serde_json::json!([["-1", "0"], ["g*s + s", "s^2"]]));
    let flags = stdout(&run(&["springer", "--m", "3", "--show", "flags"]));
    assert_eq!(flags, "p1: g, s, s^-1\np2: s, g, s^-1\np3: s, s^-1, g\n");
    let bases = stdout(&run(&["springer", "--m", "2", "--show", "bases", "--json"]));
    let j: serde_json::Value = serde_json::from_str(&bases).unwrap();
    assert_eq!(j["elements"][1]["preimage"], "s*x1");
}

#[test]
fn theta_matrices_and_dictionary() {
    let o = run(&["theta", "--m", "3", "--matrices", "--dictionary", "--json"]);
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = j["matrices"].as_array().unwrap().iter().map(|x| x["generator"].as_str().unwrap()).collect();
    assert_eq!(names, ["T[1]", "T[2]", "T[3]", "Tw[1]", "Tw[-1]", "e[1,0,0]", "e[1,1,0]", "e[1,1,1]", "g", "s"]);
    assert_eq!(j["matrices"][3]["matrix"], serde_json::json!([["0", "0", "g^-1"], ["1", "0", "0"], ["0", "1", "0"]]));
    assert_eq!(j["dictionary"]["reproducing"], serde_json::json!(["A"]));
}

#[test]
fn orbits_listing() {
    assert_eq!(stdout(&run(&["orbits", "--n", "1", "--m", "2", "--bounds", "0,1", "--count-only"])), "4\n");
    let out = stdout(&run(&["orbits", "--n", "1", "--m", "2", "--bounds", "0,1"]));
    assert!(out.starts_with("4 orbits\n"));
    assert!(out.contains("  0 t"));
}

#[test]
fn term_cap_is_an_error() {
    let cmd = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_theta-hecke")).env("THETA_HECKE_MAX_TERMS", "2").args(args).output().unwrap()
    };
    let o = cmd(&["eval", "--m", "3", "--act", "T[3]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert_eq!(String::from_utf8(o.stderr).unwrap(), "error: term count 3 exceeds cap 2\n");
    let o = cmd(&["verify", "polyrep", "--m", "3", "--json", "-"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("exceeds cap 2"));
}
