use super::{reorder_sign, Blade, GammaRep, SignedPerm};
use crate::report::CheckResult;
use crate::rng::Rng;

/// Supported spinor dimensions D with n = D/2 tensor factors.
pub const SUITE_DIMS: [usize; 3] = [8, 10, 16];

fn random_mask(rng: &mut Rng, dim: usize) -> u32 {
    rng.next_u32() & ((1u32 << dim) - 1)
}

fn signed(p: &SignedPerm, sign: i32) -> SignedPerm {
    if sign < 0 {
        p.times_phase(2)
    } else {
        p.clone()
    }
}

fn sign_of(b: &Blade) -> Option<i32> {
    if b.coeff.is_one() {
        Some(1)
    } else if (-&b.coeff).is_one() {
        Some(-1)
    } else {
        None
    }
}

/// The blade product e^A e^B computed symbolically agrees with the product of gamma matrices,
/// on `pairs` random pairs of blades.
pub fn blade_matrix_failure(dim: usize, pairs: u64, rng: &mut Rng) -> Option<String> {
    let rep = GammaRep::get(dim / 2);
    (0..pairs).find_map(|k| {
        let (a, b) = (random_mask(rng, dim), random_mask(rng, dim));
        let prod = Blade::unit(a).mul(&Blade::unit(b));
        let Some(sign) = sign_of(&prod) else {
            return Some(format!("pair {k}: product coefficient {} is not a sign", prod.coeff));
        };
        let lhs = signed(&rep.blade(prod.mask), sign);
        let rhs = rep.blade(a).compose(&rep.blade(b));
        (lhs != rhs || sign != reorder_sign(a, b)).then(|| format!("pair {k}: masks {a:#b}, {b:#b}"))
    })
}

/// C⁻¹ xᵀ C = xᵗ (reversion) on `blades` random blades.
pub fn charge_transpose_failure(dim: usize, blades: u64, rng: &mut Rng) -> Option<String> {
    let rep = GammaRep::get(dim / 2);
    let c = rep.charge();
    let cinv = c.inverse();
    (0..blades).find_map(|k| {
        let m = random_mask(rng, dim);
        let g = m.count_ones() as i32;
        let rev = if (g * (g - 1) / 2) % 2 == 0 { 1 } else { -1 };
        let lhs = cinv.compose(&rep.blade(m).transpose()).compose(c);
        (lhs != signed(&rep.blade(m), rev)).then(|| format!("blade {k}: mask {m:#b}"))
    })
}

/// {eⁱ, eʲ} = 2δⁱʲ and γ anticommutes with every generator.
pub fn generator_failure(dim: usize) -> Option<String> {
    let rep = GammaRep::get(dim / 2);
    let id = SignedPerm::identity(rep.size());
    for i in 0..dim {
        let gi = rep.gamma(i);
        if gi.compose(gi) != id {
            return Some(format!("e{i} squared is not 1"));
        }
        if gi.compose(rep.chirality()) != signed(&rep.chirality().compose(gi), -1) {
            return Some(format!("chirality does not anticommute with e{i}"));
        }
        for j in (i + 1)..dim {
            let gj = rep.gamma(j);
            if gi.compose(gj) != signed(&gj.compose(gi), -1) {
                return Some(format!("e{i} and e{j} commute"));
            }
        }
    }
    None
}

pub fn run_checks(rng: &mut Rng, trials: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for dim in SUITE_DIMS {
        out.push(CheckResult::from_outcome(format!("clifford.d{dim}.generators"), 1, generator_failure(dim)));
        out.push(CheckResult::from_outcome(
            format!("clifford.d{dim}.blade_vs_matrix"),
            trials,
            blade_matrix_failure(dim, trials, rng),
        ));
        out.push(CheckResult::from_outcome(
            format!("clifford.d{dim}.charge_transpose"),
            trials,
            charge_transpose_failure(dim, trials, rng),
        ));
    }
    out
}
