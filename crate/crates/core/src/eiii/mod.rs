//! The orbit of the lowest weight in the 27: quadratic relations, affine charts,
//! pure spinor frames and the Gr(2,4) warm-up.

mod atlas;
mod checks;
mod frame;

pub use atlas::{
    chart_transition, coverage, gr24_plucker, gr24_relation, orbit_sample, orbit_tangent_rank, orbit_word,
    proportional, ChartKind, ChartPoint, Coverage, Letter,
};
pub use checks::{
    chart_failures, frame_failure, gr24_failure, random_antisymmetric, reconstruction_failure, run_checks,
};
pub use frame::{
    bilinear_identity_residual, chart_xinfty, constrain, epsilon_contraction, epsilon_kk, form_component,
    is_pure, is_type_01, is_type_20, masks, mat_mul, mat_vec, matrix_rank, pure_decompose, pure_frame,
    reconstruct, standard_psi0, transpose, two_form_act, Constrained, Decomposition, Form5, Matrix,
    PureSpinorFrame,
};

use crate::clifford::{bilinear_vector, dot, vector_act, Chirality, GammaRep, Spinor};
use crate::error::{AtlasError, Result};
use crate::rep27::Vector27;
use crate::scalar::{q, ExtScalar};

/// (2vs − (1/√2)(ψeⁱψ)eⁱ ; vψ ; v·v) as 10 + 16 + 1 values.
pub fn plucker_residual(p: &Vector27) -> Vec<ExtScalar> {
    let two_s = &p.s * &ExtScalar::from_int(2);
    let h = ExtScalar::inv_sqrt2();
    let mut out: Vec<ExtScalar> =
        p.v.iter().zip(bilinear_vector(&p.psi, &p.psi)).map(|(v, b)| &(v * &two_s) - &(&b * &h)).collect();
    let mut vpsi = vector_act(&p.v, &p.psi);
    vpsi.chirality = Chirality::Minus;
    out.extend(vpsi.chiral_components());
    out.push(dot(&p.v, &p.v));
    out
}

pub fn on_orbit(p: &Vector27) -> bool {
    plucker_residual(p).iter().all(|c| c.is_zero())
}

/// s-chart: v = (1/(2√2 s))(ψeⁱψ)eⁱ.
pub fn chart_s(psi: &Spinor, s: &ExtScalar) -> Result<Vector27> {
    let inv = s.inverse().map_err(|_| AtlasError::ChartPrecondition("s = 0 is outside the s-chart".into()))?;
    let c = &(&inv * &ExtScalar::sqrt2()) * &q(1, 4);
    let v = bilinear_vector(psi, psi).iter().map(|b| b * &c).collect();
    Vector27::new(v, psi.clone(), s.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

/// t± = √2(v₈ ± i v₉), 0-based coordinates of the last two directions.
pub fn t_pm(v: &[ExtScalar]) -> (ExtScalar, ExtScalar) {
    let iv = &ExtScalar::i() * &v[9];
    let r2 = ExtScalar::sqrt2();
    (&r2 * &(&v[8] + &iv), &r2 * &(&v[8] - &iv))
}

/// Inverse of `t_pm`: (v₈, v₉) from (t₊, t₋).
pub fn v_from_t(tp: &ExtScalar, tm: &ExtScalar) -> (ExtScalar, ExtScalar) {
    let c = &ExtScalar::sqrt2() * &q(1, 4);
    let v8 = &(tp + tm) * &c;
    let v9 = &(&(tp - tm) * &c) * &-&ExtScalar::i();
    (v8, v9)
}

/// ψ = ξ⊗|+⟩ + η⊗|−⟩ along the last tensor factor: ξ ∈ Δ⁺₈, η ∈ Δ⁻₈.
pub fn split8(psi: &Spinor) -> (Spinor, Spinor) {
    let xi: Vec<ExtScalar> = (0..16).map(|k| psi.coeffs[2 * k].clone()).collect();
    let eta: Vec<ExtScalar> = (0..16).map(|k| psi.coeffs[2 * k + 1].clone()).collect();
    (Spinor { n: 4, chirality: Chirality::Plus, coeffs: xi }, Spinor { n: 4, chirality: Chirality::Minus, coeffs: eta })
}

pub fn join8(xi: &Spinor, eta: &Spinor) -> Spinor {
    let mut coeffs = vec![ExtScalar::zero(); 32];
    for k in 0..16 {
        coeffs[2 * k] = xi.coeffs[k].clone();
        coeffs[2 * k + 1] = eta.coeffs[k].clone();
    }
    Spinor { n: 5, chirality: Chirality::Plus, coeffs }
}

fn pair8(a: &Spinor, b: &Spinor) -> ExtScalar {
    GammaRep::get(4).charge().sandwich(&a.coeffs, &b.coeffs)
}

/// t₊-chart (side Plus, spin8 = η ∈ Δ⁻₈): ξ = −√2t₊⁻¹uη, s = −t₊⁻¹(ηη), t₋ = −2t₊⁻¹u·u.
/// t₋-chart (side Minus, spin8 = ξ ∈ Δ⁺₈): s = t₋⁻¹(ξξ), t₊ = −2t₋⁻¹u·u, η = √2t₋⁻¹uξ.
pub fn chart_tpm(side: Side, t: &ExtScalar, spin8: &Spinor, u8: &[ExtScalar]) -> Result<Vector27> {
    if u8.len() != 8 || spin8.n != 4 {
        return Err(AtlasError::DimensionMismatch("t-charts take u ∈ ℂ⁸ and an eight-dimensional spinor".into()));
    }
    let want = if side == Side::Plus { Chirality::Minus } else { Chirality::Plus };
    let spin8 = Spinor::new(4, want, spin8.coeffs.clone())?;
    let tinv = t.inverse().map_err(|_| AtlasError::ChartPrecondition(format!("tcoord must be nonzero (t{} = 0)", side_sign(side))))?;
    let uu = dot(u8, u8);
    let other = &(&tinv * &uu) * &ExtScalar::from_int(-2);
    let r2t = &ExtScalar::sqrt2() * &tinv;
    let (xi, eta, s, tp, tm) = match side {
        Side::Plus => {
            let xi = vector_act(u8, &spin8).scale(&-&r2t);
            let s = -&(&tinv * &pair8(&spin8, &spin8));
            (xi, spin8, s, t.clone(), other)
        }
        Side::Minus => {
            let eta = vector_act(u8, &spin8).scale(&r2t);
            let s = &tinv * &pair8(&spin8, &spin8);
            (spin8, eta, s, other, t.clone())
        }
    };
    let (v8, v9) = v_from_t(&tp, &tm);
    let mut v = u8.to_vec();
    v.push(v8);
    v.push(v9);
    Vector27::new(v, join8(&xi, &eta), s)
}

fn side_sign(side: Side) -> char {
    match side {
        Side::Plus => '+',
        Side::Minus => '-',
    }
}

/// Ω = (1/√2)(1 + eᵃeᵇ) for a ≠ b (0-based), acting as a rotation by π/2 in the (a, b) plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaneRotation {
    pub a: usize,
    pub b: usize,
}

impl PlaneRotation {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a >= 10 || b >= 10 {
            return Err(AtlasError::IndexOutOfRange(format!("rotation plane ({a}, {b})")));
        }
        Ok(PlaneRotation { a, b })
    }

    /// ΩvΩ⁻¹: eᵃ ↦ −eᵇ, eᵇ ↦ eᵃ.
    pub fn vector(&self, v: &[ExtScalar]) -> Vec<ExtScalar> {
        let mut out = v.to_vec();
        out[self.a] = v[self.b].clone();
        out[self.b] = -&v[self.a];
        out
    }

    /// Ωψ = (1/√2)(ψ + eᵃeᵇψ).
    pub fn spinor(&self, psi: &Spinor) -> Spinor {
        let mut ea = vec![ExtScalar::zero(); 10];
        ea[self.a] = ExtScalar::one();
        let mut eb = vec![ExtScalar::zero(); 10];
        eb[self.b] = ExtScalar::one();
        let ab = vector_act(&ea, &vector_act(&eb, psi));
        psi.add(&ab).scale(&ExtScalar::inv_sqrt2())
    }

    pub fn apply(&self, p: &Vector27) -> Vector27 {
        Vector27 { v: self.vector(&p.v), psi: self.spinor(&p.psi), s: p.s.clone() }
    }

    /// Blockwise action on a residual (vector; Δ⁻ spinor; scalar).
    pub fn residual_blocks(&self, r: &[ExtScalar]) -> Vec<ExtScalar> {
        let mut out = self.vector(&r[..10]);
        let sp = Spinor::from_chiral(5, Chirality::Minus, &r[10..26]).expect("16 components");
        out.extend(self.spinor(&sp).chiral_components());
        out.push(r[26].clone());
        out
    }
}

/// Ω = (1/√2)(1 + eᵃe¹⁰) with a in 1..=9 (1-based, matching the plane with the tenth direction).
pub fn rotate_frame(a: usize, p: &Vector27) -> Result<Vector27> {
    if !(1..=9).contains(&a) {
        return Err(AtlasError::IndexOutOfRange(format!("rotation index {a} not in 1..9")));
    }
    Ok(PlaneRotation::new(a - 1, 9)?.apply(p))
}

/// Smallest a in 1..=9 whose rotation gives a nonzero t̂₊ or t̂₋.
pub fn rotation_for_tcharts(p: &Vector27) -> Option<usize> {
    (1..=9).find(|&a| {
        let v = PlaneRotation { a: a - 1, b: 9 }.vector(&p.v);
        let (tp, tm) = t_pm(&v);
        !tp.is_zero() || !tm.is_zero()
    })
}

#[cfg(test)]
mod tests;
