use eiii_atlas::liealg::JacobiMode;
use eiii_atlas::suites::{run_suite, SUITES};

fn failures(suite: &str, seed: u64, trials: u64) -> Vec<String> {
    let r = run_suite(suite, seed, trials, JacobiMode::Sampled(4)).unwrap();
    assert!(!r.checks.is_empty(), "{suite} ran no checks");
    assert!(r.checks.iter().all(|c| c.name.starts_with(&format!("{suite}."))), "{suite}: stray check name");
    r.checks.iter().filter(|c| !c.passed()).map(|c| format!("{} {:?}", c.name, c.witness)).collect()
}

#[test]
fn every_suite_passes_with_few_trials() {
    for s in SUITES {
        assert_eq!(failures(s, 3, 4), Vec::<String>::new());
    }
}

#[test]
fn a_second_seed_passes_too() {
    for s in ["clifford", "octonion", "eiii", "albert"] {
        assert_eq!(failures(s, 91, 6), Vec::<String>::new());
    }
}

#[test]
fn reports_are_sorted_and_reproducible() {
    let a = run_suite("octonion", 5, 5, JacobiMode::Exhaustive).unwrap();
    let b = run_suite("octonion", 5, 5, JacobiMode::Exhaustive).unwrap();
    assert_eq!(a.to_json_string(), b.to_json_string());
    assert!(a.checks.windows(2).all(|w| w[0].name <= w[1].name));
    assert!(!a.to_json_string().contains("elapsed_ms"));
}

#[test]
fn a_suite_inside_all_matches_the_suite_alone() {
    // each suite forks its own stream from the seed
    let alone = run_suite("eiii", 8, 3, JacobiMode::Sampled(2)).unwrap();
    let both: Vec<_> = ["octonion", "eiii"]
        .iter()
        .flat_map(|s| run_suite(s, 8, 3, JacobiMode::Sampled(2)).unwrap().checks)
        .filter(|c| c.name.starts_with("eiii."))
        .collect();
    assert_eq!(serde_json::to_string(&alone.checks).unwrap(), serde_json::to_string(&both).unwrap());
}

#[test]
fn unknown_suite_is_rejected() {
    assert!(run_suite("bogus", 0, 1, JacobiMode::Exhaustive).is_err());
}
