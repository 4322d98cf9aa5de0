use crate::clifford::{Chirality, Spinor};
use crate::report::CheckResult;
use crate::rng::Rng;
use crate::scalar::ExtScalar;

use super::*;

pub fn random_antisymmetric(rng: &mut Rng, n: usize) -> Matrix {
    let mut k = vec![vec![ExtScalar::zero(); n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let c = rng.gaussian();
            k[b][a] = -&c;
            k[a][b] = c;
        }
    }
    k
}

fn residual_failure(p: Result<Vector27>) -> Option<String> {
    match p {
        Ok(p) => (!on_orbit(&p)).then(|| "nonzero residual".to_string()),
        Err(e) => Some(e.to_string()),
    }
}

fn each(n: u64, mut f: impl FnMut() -> Option<String>) -> Option<String> {
    (0..n).find_map(|k| f().map(|w| format!("input {k}: {w}")))
}

/// Each of the s, t₊, t₋ and X∞ charts lands on the orbit for `n` random parameter sets.
pub fn chart_failures(n: u64, rng: &mut Rng) -> [(ChartKind, Option<String>); 4] {
    let fr = pure_frame(&standard_psi0()).expect("standard frame");
    let s = each(n, || residual_failure(chart_s(&Spinor::random(5, Chirality::Plus, rng), &rng.nonzero_gaussian())));
    let tp = each(n, || {
        let eta = Spinor::random(4, Chirality::Minus, rng);
        residual_failure(chart_tpm(Side::Plus, &rng.nonzero_gaussian(), &eta, &rng.gaussians(8)))
    });
    let tm = each(n, || {
        let xi = Spinor::random(4, Chirality::Plus, rng);
        residual_failure(chart_tpm(Side::Minus, &rng.nonzero_gaussian(), &xi, &rng.gaussians(8)))
    });
    let xi = each(n, || {
        let c = constrain(&fr, &random_antisymmetric(rng, 10), &rng.gaussians(10));
        residual_failure(chart_xinfty(&fr, &rng.nonzero_gaussian(), &c.k, &c.ubar, &rng.gaussian()))
    });
    [(ChartKind::S, s), (ChartKind::TPlus, tp), (ChartKind::TMinus, tm), (ChartKind::XInfty, xi)]
}

/// ψ is recovered exactly from (f, x, K) for `n` random spinors.
pub fn reconstruction_failure(n: u64, rng: &mut Rng) -> Option<String> {
    let fr = pure_frame(&standard_psi0()).expect("standard frame");
    each(n, || {
        let psi = Spinor::random(5, Chirality::Plus, rng);
        let d = pure_decompose(&psi, &fr);
        if reconstruct(&d, &fr) != psi {
            Some("reconstruction differs".into())
        } else {
            (!is_type_01(&fr, &d.x) || !is_type_20(&fr, &d.k)).then(|| "decomposition has the wrong type".into())
        }
    })
}

/// J² = −1, rank(J − i) = 5, ΩΩ̄ = 1 and the rank-4 identity for the standard frame.
pub fn frame_failure() -> Option<String> {
    let fr = match pure_frame(&standard_psi0()) {
        Ok(f) => f,
        Err(e) => return Some(e.to_string()),
    };
    let id = |c: ExtScalar| -> Matrix {
        (0..10).map(|a| (0..10).map(|b| if a == b { c.clone() } else { ExtScalar::zero() }).collect()).collect()
    };
    let j_minus_i: Matrix = fr
        .j
        .iter()
        .enumerate()
        .map(|(a, row)| row.iter().enumerate().map(|(b, c)| if a == b { c - &ExtScalar::i() } else { c.clone() }).collect())
        .collect();
    if mat_mul(&fr.j, &fr.j) != id(ExtScalar::from_int(-1)) {
        Some("J^2 != -1".into())
    } else if matrix_rank(&j_minus_i) != 5 {
        Some(format!("rank(J - i) = {}", matrix_rank(&j_minus_i)))
    } else if !fr.contraction().is_one() {
        Some(format!("Omega.Omegabar = {}", fr.contraction()))
    } else {
        fr.rank4_identity()
    }
}

/// The Plücker quadric z₁₂z₃₄ − z₁₃z₂₄ + z₁₄z₂₃ vanishes on `n` random 4×4 matrices.
pub fn gr24_failure(n: u64, rng: &mut Rng) -> Option<String> {
    each(n, || {
        let g: Matrix = (0..4).map(|_| rng.gaussians(4)).collect();
        match gr24_plucker(&g) {
            Ok(z) => (!gr24_relation(&z).is_zero()).then(|| "quadric does not vanish".into()),
            Err(e) => Some(e.to_string()),
        }
    })
}

pub fn run_checks(rng: &mut Rng, trials: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (kind, fail) in chart_failures(trials, rng) {
        out.push(CheckResult::from_outcome(format!("eiii.chart.{}", kind.name()), trials, fail));
    }
    out.push(CheckResult::from_outcome("eiii.reconstruction", trials, reconstruction_failure(trials, rng)));
    out.push(CheckResult::from_outcome("eiii.frame", 1, frame_failure()));
    out.push(CheckResult::from_outcome("eiii.gr24_quadric", trials, gr24_failure(trials, rng)));

    let few = trials.min(20);
    let mut orbit = None;
    let mut transit = None;
    let mut covered = None;
    for t in 0..few {
        let p = match orbit_sample(rng.next_u64(), 1 + rng.below(6) as usize) {
            Ok(p) => p,
            Err(e) => {
                orbit = Some(e.to_string());
                break;
            }
        };
        if orbit.is_none() && !on_orbit(&p) {
            orbit = Some(format!("sample {t}"));
        }
        if covered.is_none() && !coverage(&p).covered() {
            covered = Some(format!("sample {t}"));
        }
        if transit.is_none() && !p.s.is_zero() {
            let back = ChartPoint::from_vector(&p, ChartKind::S).and_then(|c| c.assemble());
            if back.as_ref().ok() != Some(&p) {
                transit = Some(format!("sample {t}"));
            }
        }
    }
    out.push(CheckResult::from_outcome("eiii.orbit_samples", few, orbit));
    out.push(CheckResult::from_outcome("eiii.chart_coverage", few, covered));
    out.push(CheckResult::from_outcome("eiii.s_chart_roundtrip", few, transit));
    out
}
