use identity_suites::*;

fn run(suite: Suite, seed: u64) -> Report {
    run_suite(&SuiteSpec::new(suite, seed)).unwrap()
}

#[test]
fn every_suite_passes_at_defaults() {
    for suite in Suite::ALL {
        let start = std::time::Instant::now();
        let report = run(suite, 7);
        let failures: Vec<_> = report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        eprintln!("{suite}: {} checks in {:.1?}", report.checks.len(), start.elapsed());
        assert!(failures.is_empty(), "{suite}: {failures:#?}");
    }
}

#[test]
fn reports_are_byte_identical_for_equal_specs() {
    for suite in [Suite::Tq, Suite::Bethe, Suite::Gaudin] {
        let a = run(suite, 11).to_json();
        let b = run(suite, 11).to_json();
        assert_eq!(a, b);
        assert_ne!(a, run(suite, 12).to_json());
    }
}

#[test]
fn json_schema_fields() {
    let report = run(Suite::PaperMatrices, 3);
    let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(value["suite"], "paper-matrices");
    assert_eq!(value["seed"], 3);
    assert!(value["params"].is_object());
    let check = &value["checks"][0];
    for key in ["name", "identity", "status", "deviation", "detail"] {
        assert!(check.get(key).is_some(), "missing {key}");
    }
    assert_eq!(check["status"], "pass");
    assert_eq!(check["deviation"], 0.0);
    assert!(report.checks.len() >= 10);
}

#[test]
fn unknown_and_infeasible() {
    assert_eq!("nope".parse::<Suite>(), Err(SuiteError::UnknownSuite("nope".into())));
    for suite in Suite::ALL {
        assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
    }
    let mut spec = SuiteSpec::new(Suite::Tq, 1);
    spec.sites = Some(9);
    assert!(matches!(run_suite(&spec), Err(SuiteError::Infeasible(_))));
    let mut spec = SuiteSpec::new(Suite::GammaCommute, 1);
    spec.degree = Some(12);
    assert!(matches!(run_suite(&spec), Err(SuiteError::Infeasible(_))));
    let mut spec = SuiteSpec::new(Suite::Cauchy, 1);
    spec.draws = Some(0);
    assert!(run_suite(&spec).is_err());
}

#[test]
fn cauchy_degree_zero_is_trivial() {
    let mut spec = SuiteSpec::new(Suite::Cauchy, 5);
    spec.degree = Some(0);
    let report = run_suite(&spec).unwrap();
    assert!(report.passed());
    assert_eq!(report.worst_deviation(), Some(0.0));
}

#[test]
fn fixed_tq_point() {
    let mut spec = SuiteSpec::new(Suite::Tq, 7);
    spec.sites = Some(3);
    spec.particles = Some(2);
    spec.t = Some(exact_core::frac(1, 3));
    spec.x = Some(exact_core::int(2));
    let report = run_suite(&spec).unwrap();
    assert!(report.passed());
    let tq: Vec<_> = report.checks.iter().filter(|c| c.name.starts_with("tq")).collect();
    assert_eq!(tq.len(), 3);
    assert!(tq.iter().all(|c| c.name.contains("t=1/3 x=2")));
}

#[test]
fn human_summary_matches_status() {
    let report = run(Suite::Lascoux, 2);
    let text = report.to_string();
    assert!(text.ends_with(&format!("PASS: {} of {} checks passed", report.checks.len(), report.checks.len())));
    assert!(text.lines().skip(1).all(|l| !l.starts_with("FAIL")));
}

#[test]
fn numeric_suites_across_seeds() {
    for seed in 100..103 {
        for suite in [Suite::Bethe, Suite::Gaudin, Suite::Lascoux, Suite::PaperMatrices] {
            let report = run(suite, seed);
            let failures: Vec<_> = report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
            assert!(failures.is_empty(), "{suite} seed {seed}: {failures:#?}");
        }
    }
}
