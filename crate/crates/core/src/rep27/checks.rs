use crate::liealg::{bracket, same_span, Algebra, LieElement, E6_DIM, SO10};
use crate::report::CheckResult;
use crate::rng::Rng;

use super::*;

fn e6_basis() -> Vec<LieElement> {
    (0..E6_DIM).map(|k| LieElement::basis(Algebra::E6, k)).collect()
}

/// δd = 0 for every e6 basis generator on `triples` random triples each.
pub fn d_invariance_failure(triples: u64, rng: &mut Rng) -> Option<String> {
    for (k, x) in e6_basis().iter().enumerate() {
        for t in 0..triples {
            let [a, b, c] = [0, 1, 2].map(|_| Vector27::random(rng));
            let act = |p: &Vector27| act27(x, p).expect("e6 element");
            let s = &(&d_cubic(&act(&a), &b, &c) + &d_cubic(&a, &act(&b), &c)) + &d_cubic(&a, &b, &act(&c));
            if !s.is_zero() {
                return Some(format!("generator {k}, triple {t}"));
            }
        }
    }
    None
}

/// The stabiliser of the lowest weight is 45-dimensional and equals so(10).
pub fn stabilizer_failure() -> Option<String> {
    let stab = stabilizer_psi0();
    let so10: Vec<LieElement> = (0..SO10).map(|k| LieElement::basis(Algebra::E6, k)).collect();
    if stab.len() != 45 {
        Some(format!("stabiliser has dimension {}, expected 45", stab.len()))
    } else {
        (!same_span(&stab, &so10)).then(|| "stabiliser is not so(10)".into())
    }
}

pub fn run_checks(rng: &mut Rng, trials: u64) -> Vec<CheckResult> {
    let few = trials.min(20);
    let basis = e6_basis();
    let mut out = vec![
        CheckResult::from_outcome("rep27.d_invariance", E6_DIM as u64 * few, d_invariance_failure(few, rng)),
        CheckResult::from_outcome(
            "rep27.lowest_weight_square",
            1,
            (!diamond27(&Vector27::lowest(), &Vector27::lowest()).is_zero()).then(|| "Psi0<>Psi0 != 0".into()),
        ),
        CheckResult::from_outcome("rep27.stabilizer_psi0", 1, stabilizer_failure()),
    ];
    let mut rep_fail = None;
    let mut dual_fail = None;
    let mut diamond_fail = None;
    for t in 0..few {
        let x = LieElement::from_coords(Algebra::E6, rng.gaussians(E6_DIM)).expect("78 coordinates");
        let y = LieElement::from_coords(Algebra::E6, rng.gaussians(E6_DIM)).expect("78 coordinates");
        let p = Vector27::random(rng);
        if rep_fail.is_none() {
            let lhs = act27(&bracket(&x, &y).unwrap(), &p).unwrap();
            let rhs = act27(&x, &act27(&y, &p).unwrap()).unwrap().sub(&act27(&y, &act27(&x, &p).unwrap()).unwrap());
            if lhs != rhs {
                rep_fail = Some(format!("trial {t}"));
            }
        }
        if dual_fail.is_none() {
            let f = Covector27::random(rng);
            let k = rng.below(E6_DIM as u32) as usize;
            let a = pairing(&act27_dual(&basis[k], &f).unwrap(), &p);
            let b = pairing(&f, &act27(&basis[k], &p).unwrap());
            if !(&a + &b).is_zero() {
                dual_fail = Some(format!("trial {t}, generator {k}"));
            }
        }
        if diamond_fail.is_none() {
            let [a, b, c, d] = [0, 1, 2, 3].map(|_| Vector27::random(rng));
            let f = Covector27::random(rng);
            diamond_fail = diamond_identity_one([&a, &b, &c, &d])
                .or_else(|| diamond_identity_two([&a, &b, &c], &f))
                .map(|w| format!("trial {t}: {w}"));
        }
    }
    out.push(CheckResult::from_outcome("rep27.representation", few, rep_fail));
    out.push(CheckResult::from_outcome("rep27.dual_contragredient", few, dual_fail));
    out.push(CheckResult::from_outcome("rep27.diamond_identities", few, diamond_fail));
    out
}
