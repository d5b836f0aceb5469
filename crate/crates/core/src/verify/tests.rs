use super::*;

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("nope".parse::<Suite>().is_err());
}

#[test]
fn invalid_configs_are_rejected() {
    assert!(run_suite(&VerifyConfig::new(Suite::Hecke, (3, 2))).is_err());
    assert!(run_suite(&VerifyConfig::new(Suite::Hecke, (0, 2))).is_err());
    let mut cfg = VerifyConfig::new(Suite::Orbits, (2, 2));
    cfg.n = Some(3);
    assert!(run_suite(&cfg).is_err());
    let mut cfg = VerifyConfig::new(Suite::Hecke, (2, 2));
    cfg.bounds = Some((0, 1));
    assert!(run_suite(&cfg).is_err());
}

#[test]
fn streams_depend_on_seed_and_id() {
    use rand::Rng;
    let a: u64 = rng_for(0, "x").gen();
    assert_eq!(a, rng_for(0, "x").gen::<u64>());
    assert_ne!(a, rng_for(1, "x").gen::<u64>());
    assert_ne!(a, rng_for(0, "y").gen::<u64>());
}

#[test]
fn orbit_example() {
    let mut cfg = VerifyConfig::new(Suite::Orbits, (2, 2));
    cfg.n = Some(1);
    cfg.bounds = Some((0, 1));
    let report = run_suite(&cfg).unwrap();
    assert!(report.passed);
    assert_eq!(report.checks[0].value.as_deref(), Some("4"));
}

#[test]
fn length_oracle_agrees() {
    for m in 1..=3 {
        assert!(length_oracle(m, 2).is_empty(), "m={m}");
    }
}

#[test]
fn reports_are_deterministic() {
    let cfg = VerifyConfig::new(Suite::Polyrep, (2, 3));
    let a = run_suite(&cfg).unwrap();
    let b = run_suite(&cfg).unwrap();
    assert!(a.passed, "{}", a.render_text());
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.checks.iter().any(|c| c.id == "polyrep/m2/Tsm"));
    assert!(!a.to_json().contains("elapsed_ms"));
}
