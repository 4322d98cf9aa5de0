use crate::eiii::orbit_sample;
use crate::liealg::f4_basis;
use crate::octonion::Octonion;
use crate::rep27::{act27, act27_dual, Covector27, Vector27};
use crate::report::CheckResult;
use crate::rng::Rng;
use crate::scalar::{q, ExtScalar};

use super::*;

/// Runs `f` on trials 0..n and reports the first failing trial.
fn first_failure(n: u64, mut f: impl FnMut(u64) -> Option<String>) -> Option<String> {
    (0..n).find_map(|k| f(k).map(|w| format!("trial {k}: {w}")))
}

fn flag(ok: bool, what: &str) -> Option<String> {
    (!ok).then(|| what.to_string())
}

fn master_failure(a: &Vector27, b: &Vector27) -> Option<String> {
    let lhs = jordan_star(&j_map(a), &j_map(b));
    let rhs = j_map(&diamond_f4(a, b))
        .scale(&q(-1, 2))
        .add(&JordanMatrix::identity().scale(&(&f4_pairing(a, b) * &q(1, 4))));
    flag(lhs == rhs, "J(a)*J(b) != -J(a<>b)/2 + <a,b>/4")
}

/// Orbit samples of the lowest weight with random seeds and word lengths 1..=6.
pub fn orbit_samples(rng: &mut Rng, n: u64) -> Vec<Vector27> {
    (0..n)
        .map(|_| {
            let seed = rng.next_u64();
            let len = 1 + rng.below(6) as usize;
            orbit_sample(seed, len).expect("positive length")
        })
        .collect()
}

/// A random real Veronese point in U₁ ∩ U₂ ∩ U₃.
pub fn random_real_veronese(rng: &mut Rng) -> Veronese {
    loop {
        let a = Octonion::random_real(rng);
        let b = Octonion::random_real(rng);
        if !a.is_zero() && !b.is_zero() {
            return veronese_from_chart(1, &a, &b).expect("1 + |a|² + |b|² > 0");
        }
    }
}

pub fn run_checks(rng: &mut Rng, trials: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let two = ExtScalar::from_int(2);
    let basis = f4_basis();
    let few = trials.min(20);

    out.push(CheckResult::from_outcome(
        "albert.sigma_singlet",
        1,
        flag(phi_empty().map(sigma_iso) == psi_empty(), "sigma(Phi_0) != Psi_0"),
    ));
    out.push(CheckResult::from_outcome(
        "albert.sigma_equivariance",
        few * basis.len() as u64,
        first_failure(few, |_| {
            let f = Covector27::random(rng);
            if sigma_inv(&sigma_iso(&f)) != f {
                return Some("sigma^-1 sigma != 1".into());
            }
            basis.iter().enumerate().find_map(|(k, x)| {
                let ok = sigma_iso(&act27_dual(x, &f).unwrap()) == act27(x, &sigma_iso(&f)).unwrap();
                flag(ok, &format!("generator {k}"))
            })
        }),
    ));
    out.push(CheckResult::from_outcome(
        "albert.pairing_routes_and_invariance",
        few,
        first_failure(few, |_| {
            let a = Vector27::random(rng);
            let b = Vector27::random(rng);
            let p = f4_pairing(&a, &b);
            if p != f4_pairing_split(&a, &b) || p != f4_pairing(&b, &a) {
                return Some("pairing routes disagree or pairing not symmetric".into());
            }
            basis.iter().enumerate().find_map(|(k, x)| {
                let s = &f4_pairing(&act27(x, &a).unwrap(), &b) + &f4_pairing(&a, &act27(x, &b).unwrap());
                flag(s.is_zero(), &format!("generator {k}"))
            })
        }),
    ));
    out.push(CheckResult::from_outcome(
        "albert.diamond_routes",
        trials,
        first_failure(trials, |_| {
            let a = Vector27::random(rng);
            let b = Vector27::random(rng);
            let d = diamond_f4(&a, &b);
            flag(d == diamond_f4_split(&a, &b) && d == diamond_f4(&b, &a), "diamond routes disagree")
        }),
    ));
    out.push(CheckResult::from_outcome("albert.psi_o", 1, {
        let o = psi_o();
        let sq = Surd3::rational(diamond_f4(&o, &o).add(&o.scale(&two)));
        let unit_j = JordanMatrix::diagonal([ExtScalar::zero(), ExtScalar::one(), ExtScalar::zero()]);
        if !sq.add(&psi_empty().scale(&Surd3::root3(two.clone()))).is_zero() {
            Some("Psi_o<>Psi_o != -2 Psi_o - 2 sqrt3 Psi_0".into())
        } else if f4_pairing(&o, &o) != two {
            Some("<Psi_o, Psi_o> != 2".into())
        } else {
            flag(j_map(&o) == unit_j && reality_check(&o), "J(Psi_o) != diag(0,1,0) or Psi_o not real")
        }
    }));
    out.push(CheckResult::from_outcome(
        "albert.master_identity_real",
        trials,
        first_failure(trials, |_| master_failure(&random_real(rng), &random_real(rng))),
    ));
    out.push(CheckResult::from_outcome(
        "albert.master_identity_complex",
        few,
        first_failure(few, |_| master_failure(&Vector27::random(rng), &Vector27::random(rng))),
    ));
    out.push(CheckResult::from_outcome("albert.trace_f4_invariant", basis.len() as u64, {
        let p = Vector27::random(rng);
        basis.iter().enumerate().find_map(|(k, x)| {
            flag(j_map(&act27(x, &p).unwrap()).trace().is_zero(), &format!("generator {k}"))
        })
    }));
    out.push(CheckResult::from_outcome(
        "albert.determinant_routes",
        trials,
        first_failure(trials, |_| {
            let p = Vector27::random(rng);
            let d = jordan_det(&p);
            flag(d == det_generic(&j_map_complex(&p)) && d == jordan_det_split(&p), "determinant routes disagree")
        }),
    ));

    let samples = orbit_samples(rng, trials);
    out.push(CheckResult::from_outcome(
        "albert.orbit_plucker8",
        trials,
        first_failure(trials, |k| {
            let p = &samples[k as usize];
            plucker8_failure(p).or_else(|| flag(veronese_complex(p).check(), "not complexified Veronese"))
        }),
    ));
    let mut regular = 0;
    out.push(CheckResult::from_outcome(
        "albert.orbit_projection",
        trials,
        first_failure(trials, |k| {
            let p = &samples[k as usize];
            let sp = Split::of(p);
            match f4_orbit_project(p) {
                Ok(pr) => {
                    regular += 1;
                    if (&sp.s + &sp.t).is_zero() {
                        Some("projected a point with s + t = 0".into())
                    } else {
                        flag(jordan_star(&pr, &pr) == pr && pr.trace().is_one(), "not an idempotent of trace 1")
                    }
                }
                Err(_) => flag((&sp.s + &sp.t).is_zero(), "error although s + t != 0"),
            }
        }),
    ));
    out.push(match stratum_witness(400) {
        Some((seed, len, p)) => {
            let orth = psi_empty().map(|w| f4_pairing(&p, w)).is_zero();
            CheckResult::from_outcome(
                "albert.stratum_at_infinity",
                1,
                flag(f4_orbit_project(&p).is_err() && orth, "witness was projected or is not orthogonal to Psi_0"),
            )
            .with_witness(format!("orbit_sample(seed={seed}, len={len})"))
        }
        None => CheckResult::fail("albert.stratum_at_infinity", 400, "no orbit sample with s + t = 0"),
    });
    // J⋆J = c·J with c = s + t = Tr J for the complex-case arrangement
    out.push(CheckResult::from_outcome(
        "albert.orbit_square_constant",
        trials,
        first_failure(trials, |k| {
            let p = &samples[k as usize];
            let sp = Split::of(p);
            let j = j_map_complex(p);
            let c = &sp.s + &sp.t;
            flag(jordan_star(&j, &j) == j.scale(&c) && j.trace() == c, "J*J != (s+t)J")
        }),
    ).with_witness(format!("c = s+t = Tr J; {regular} of {trials} samples off the stratum at infinity")));

    let points: Vec<Veronese> = (0..trials).map(|_| random_real_veronese(rng)).collect();
    out.push(CheckResult::from_outcome(
        "albert.real_veronese",
        trials,
        first_failure(trials, |k| {
            let ver = &points[k as usize];
            if !ver.check() || !ver.lambda_sum().is_one() {
                return Some("not a Veronese vector with unit sum".into());
            }
            let p = match real_from_veronese(ver) {
                Ok(p) => p,
                Err(e) => return Some(e.to_string()),
            };
            let j = j_map(&p);
            flag(
                reality_check(&p) && veronese_real(&p) == *ver && jordan_star(&j, &j) == j && j.trace().is_one(),
                "Veronese point does not give a real idempotent",
            )
        }),
    ));
    out.push(CheckResult::from_outcome(
        "albert.projective_transitions",
        trials,
        first_failure(trials, |k| {
            let ver = &points[k as usize];
            let c: Vec<_> = (1..=3).map(|i| projective_chart(i, ver).unwrap()).collect();
            (0..3).find_map(|i| {
                let t = chart_transition_oct(&c[i].0, &c[i].1).ok();
                flag(t.as_ref() == Some(&c[(i + 1) % 3]), &format!("U{} -> U{}", i + 1, (i + 1) % 3 + 1))
            })
        }),
    ));
    out.push(CheckResult::from_outcome(
        "albert.projective_cocycle",
        trials,
        first_failure(trials, |k| {
            let start = projective_chart(1, &points[k as usize]).unwrap();
            let mut cur = start.clone();
            for _ in 0..3 {
                cur = match chart_transition_oct(&cur.0, &cur.1) {
                    Ok(c) => c,
                    Err(e) => return Some(e.to_string()),
                };
            }
            flag(cur == start, "1 -> 2 -> 3 -> 1 is not the identity")
        }),
    ));
    out
}
