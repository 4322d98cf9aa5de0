//! Named verification suites and the report `verify` prints.

use crate::error::{AtlasError, Result};
use crate::liealg::JacobiMode;
use crate::report::{CheckResult, Report};
use crate::rng::Rng;
use crate::{albert, clifford, eiii, fierz, liealg, octonion, rep27};

pub const SUITES: [&str; 7] = ["clifford", "fierz", "octonion", "liealg", "rep27", "eiii", "albert"];

fn run_one(name: &str, rng: &mut Rng, trials: u64, jacobi: JacobiMode) -> Vec<CheckResult> {
    match name {
        "clifford" => clifford::run_checks(rng, trials),
        "fierz" => fierz::run_checks(rng, trials),
        "octonion" => octonion::run_checks(rng, trials),
        "liealg" => liealg::run_checks(rng, jacobi),
        "rep27" => rep27::run_checks(rng, trials),
        "eiii" => eiii::run_checks(rng, trials),
        "albert" => albert::run_checks(rng, trials),
        _ => unreachable!("suite names are validated first"),
    }
}

/// Runs `suite` (one of `SUITES` or "all"). Each suite draws from its own stream forked
/// off the seed, so a suite's checks do not depend on which other suites ran.
pub fn run_suite(suite: &str, seed: u64, trials: u64, jacobi: JacobiMode) -> Result<Report> {
    let names: Vec<&str> = match suite {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        s => return Err(AtlasError::Parse(format!("unknown suite {s:?}; expected all or one of {}", SUITES.join(", ")))),
    };
    let root = Rng::new(seed);
    let checks = names.into_iter().flat_map(|n| run_one(n, &mut root.fork(n), trials, jacobi)).collect();
    Ok(Report::new(suite, seed, checks))
}
