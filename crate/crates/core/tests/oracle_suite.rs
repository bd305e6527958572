use gkz_core::oracle::{property_suite, OracleConfig};

#[test]
fn small_suite_passes_and_is_reproducible() {
    let cfg = OracleConfig { queries: 60, instances: 6, samples: 3, seed: 7, ..OracleConfig::default() };
    let report = property_suite(&cfg).unwrap();
    for c in &report.checks {
        for f in &c.failures {
            println!("{} seed {}: {}", c.name, f.seed, f.detail);
        }
    }
    assert!(report.passed());
    assert_eq!(report.check("membership-oracle").unwrap().cases, 60);
    assert_eq!(property_suite(&cfg).unwrap(), report);
}

#[test]
fn zero_column_is_skipped_as_degenerate() {
    let cfg = OracleConfig { queries: 0, instances: 0, fixed: vec![vec![vec![0, 0]]], ..OracleConfig::default() };
    let report = property_suite(&cfg).unwrap();
    assert!(report.passed());
    assert!(report.notes.iter().any(|n| n.contains("degenerate")));
}
