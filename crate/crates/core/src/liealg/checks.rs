use crate::clifford::so_act_spinor;
use crate::octonion::spinor_s;
use crate::report::CheckResult;
use crate::rng::Rng;

use super::{
    centralizer, e6_basis_in_e8, embed_e6_in_e8, f4_basis, g2_basis, g2_in_e8, same_span, su3_in_e8, Algebra,
    JacobiMode, LieElement, StructureConstants,
};

fn expect_dim(got: usize, want: usize, what: &str) -> Option<String> {
    (got != want).then(|| format!("{what}: dimension {got}, expected {want}"))
}

/// g2 has 14 generators, all annihilating the reference spinor.
pub fn g2_failure() -> Option<String> {
    let g2 = g2_basis();
    let s = spinor_s();
    expect_dim(g2.len(), 14, "g2")
        .or_else(|| g2.iter().position(|x| !so_act_spinor(&x.coords, &s).is_zero()).map(|k| format!("g2 generator {k} moves s")))
}

/// The centraliser of g2 in e8 is the 52-dimensional f4.
pub fn centralizer_g2_failure() -> Option<String> {
    let c = match centralizer(&g2_in_e8(), Algebra::E8) {
        Ok(c) => c,
        Err(e) => return Some(e.to_string()),
    };
    let f4: Vec<LieElement> = f4_basis().iter().map(|x| embed_e6_in_e8(x).expect("f4 sits in e6")).collect();
    expect_dim(c.len(), 52, "centraliser of g2").or_else(|| (!same_span(&c, &f4)).then(|| "centraliser of g2 is not f4".into()))
}

/// The centraliser of su(3) in e8 is the 78-dimensional e6.
pub fn centralizer_su3_failure() -> Option<String> {
    let c = match centralizer(&su3_in_e8(), Algebra::E8) {
        Ok(c) => c,
        Err(e) => return Some(e.to_string()),
    };
    expect_dim(c.len(), 78, "centraliser of su(3)")
        .or_else(|| (!same_span(&c, &e6_basis_in_e8())).then(|| "centraliser of su(3) is not e6".into()))
}

/// Jacobi identity over the structure table of `algebra`; returns (triples checked, failure).
pub fn jacobi_check(algebra: Algebra, mode: JacobiMode, rng: &mut Rng) -> (u64, Option<String>) {
    match StructureConstants::get(algebra) {
        Ok(t) => {
            let out = t.jacobi(mode, rng);
            (out.triples, out.failure)
        }
        Err(e) => (0, Some(e.to_string())),
    }
}

pub fn run_checks(rng: &mut Rng, e8_mode: JacobiMode) -> Vec<CheckResult> {
    let mut out = vec![
        CheckResult::from_outcome("liealg.g2_dimension", 1, g2_failure()),
        CheckResult::from_outcome("liealg.centralizer_g2_is_f4", 1, centralizer_g2_failure()),
        CheckResult::from_outcome("liealg.centralizer_su3_is_e6", 1, centralizer_su3_failure()),
    ];
    for a in [Algebra::G2, Algebra::F4, Algebra::E6] {
        let (n, fail) = jacobi_check(a, JacobiMode::Exhaustive, rng);
        out.push(CheckResult::from_outcome(format!("liealg.jacobi.{}", a.name()), n, fail));
    }
    let (n, fail) = jacobi_check(Algebra::E8, e8_mode, rng);
    let mode = if matches!(e8_mode, JacobiMode::Exhaustive) { "exhaustive" } else { "sampled" };
    out.push(CheckResult::from_outcome(format!("liealg.jacobi.e8.{mode}"), n, fail));
    out
}
