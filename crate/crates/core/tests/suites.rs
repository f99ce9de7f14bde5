use std::time::{Duration, Instant};

use glmcr::harness::{case_ids, run_suite, Status, Suite, SuiteConfig};
use glmcr::monodromy::{AuxOrder, OddSign};
use glmcr::{Error, Rat};

#[test]
fn lemmas_seed_seven_passes() {
    let cfg = SuiteConfig {
        seed: 7,
        max_set_size: 4,
        ..SuiteConfig::new(Suite::Lemmas)
    };
    let report = run_suite(&cfg).unwrap();
    assert!(report.all_passed(), "{}", report.to_text());
    assert_eq!(report.count(Status::Pass), report.cases.len());
}

#[test]
fn everything_on_one_site_is_quick() {
    let cfg = SuiteConfig {
        sites: 1,
        ..SuiteConfig::new(Suite::All)
    };
    let start = Instant::now();
    let report = run_suite(&cfg).unwrap();
    assert!(start.elapsed() < Duration::from_secs(60));
    assert!(report.all_passed(), "{}", report.to_text());
    let suites: std::collections::BTreeSet<&str> =
        report.cases.iter().map(|r| r.suite.as_str()).collect();
    assert_eq!(suites.len(), Suite::CONCRETE.len());
}

#[test]
fn unknown_suite_is_a_config_error() {
    assert!(matches!("mcr".parse::<Suite>(), Err(Error::Config(_))));
}

#[test]
fn other_coupling_and_flipped_convention() {
    let cfg = SuiteConfig {
        sites: 2,
        c: Rat::new((-5).into(), 3.into()),
        draws: 2,
        sign: OddSign::Flipped,
        ..SuiteConfig::new(Suite::McrRows)
    };
    let report = run_suite(&cfg).unwrap();
    assert!(report.all_passed(), "{}", report.to_text());
}

#[test]
fn ascending_order_still_satisfies_rtt() {
    let cfg = SuiteConfig {
        sites: 2,
        draws: 2,
        order: AuxOrder::Ascending,
        ..SuiteConfig::new(Suite::Rtt)
    };
    let report = run_suite(&cfg).unwrap();
    for r in report
        .cases
        .iter()
        .filter(|r| r.equation_ref == "monodromy:rtt")
    {
        assert_eq!(r.status, Status::Pass, "{}", r.detail);
    }
}

#[test]
fn ids_depend_on_config_not_seed() {
    let a = SuiteConfig::new(Suite::All);
    let b = SuiteConfig {
        seed: 99,
        ..a.clone()
    };
    assert_eq!(case_ids(&a).unwrap(), case_ids(&b).unwrap());
    let seven = SuiteConfig {
        seed: 7,
        ..SuiteConfig::new(Suite::Dwpf)
    };
    let first = run_suite(&seven).unwrap();
    let other = run_suite(&SuiteConfig {
        seed: 8,
        ..seven.clone()
    })
    .unwrap();
    assert_ne!(first.cases[0].params, other.cases[0].params);
}
