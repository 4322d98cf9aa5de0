use crate::clifford::{bilinear_vector, dot, vector_act};
use crate::eiii::{on_orbit, orbit_sample};
use crate::error::{AtlasError, Result};
use crate::octonion::Octonion;
use crate::rep27::Vector27;
use crate::scalar::{q, ExtScalar};

use super::{j_map_complex, pair8, JordanMatrix, Split};

/// (x⃗; λ⃗) with xᵢ octonions and λᵢ scalars, indices taken mod 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Veronese {
    pub x: [Octonion; 3],
    pub lam: [ExtScalar; 3],
}

/// λᵢx̄ᵢ = xᵢ₊₁⋆xᵢ₊₂ and xᵢ⋆x̄ᵢ = λᵢ₊₁λᵢ₊₂ for every i; bar and norm are ℂ-linear.
pub fn veronese_check(x: &[Octonion; 3], lam: &[ExtScalar; 3]) -> bool {
    (0..3).all(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        x[i].bar().scale(&lam[i]) == x[j].star(&x[k]) && x[i].norm2() == &lam[j] * &lam[k]
    })
}

impl Veronese {
    pub fn check(&self) -> bool {
        veronese_check(&self.x, &self.lam)
    }

    pub fn lambda_sum(&self) -> ExtScalar {
        &(&self.lam[0] + &self.lam[1]) + &self.lam[2]
    }

    /// The Hermitian matrix [[λ₂, x̄₃, x₁], [x₃, λ₁, x̄₂], [x̄₁, x₂, λ₃]] that `j_map` produces.
    pub fn matrix(&self) -> JordanMatrix {
        JordanMatrix {
            d: [self.lam[1].clone(), self.lam[0].clone(), self.lam[2].clone()],
            x12: self.x[2].bar(),
            x23: self.x[1].bar(),
            x13: self.x[0].clone(),
        }
    }
}

fn shared_x(p: &Vector27) -> (Split, [Octonion; 3]) {
    let sp = Split::of(p);
    let h = ExtScalar::inv_sqrt2();
    let x = [sp.u_oct().scale(&h), sp.eta_oct().bar().scale(&h), sp.xi_oct().bar().scale(&h)];
    (sp, x)
}

/// Real form: (u/√2, η̄/√2, ξ̄/√2; s+1, (r−s)/2, −(r+s)/2).
pub fn veronese_real(p: &Vector27) -> Veronese {
    let (sp, x) = shared_x(p);
    let half = q(1, 2);
    let lam = [&sp.s + &ExtScalar::one(), &(&sp.r - &sp.s) * &half, &(&sp.r + &sp.s) * &-&half];
    Veronese { x, lam }
}

/// Complexified: (u/√2, η̄/√2, ξ̄/√2; s, (t+r)/2, (t−r)/2).
pub fn veronese_complex(p: &Vector27) -> Veronese {
    let (sp, x) = shared_x(p);
    let half = q(1, 2);
    let lam = [sp.s.clone(), &(&sp.t + &sp.r) * &half, &(&sp.t - &sp.r) * &half];
    Veronese { x, lam }
}

/// Inverse of `veronese_real` on Σλ = 1, where the trace coordinate is s + t = −2.
pub fn real_from_veronese(ver: &Veronese) -> Result<Vector27> {
    if !ver.lambda_sum().is_one() {
        return Err(AtlasError::ChartPrecondition("the real assignment needs λ₁+λ₂+λ₃ = 1".into()));
    }
    let r2 = ExtScalar::sqrt2();
    let s = &ver.lam[0] - &ExtScalar::one();
    let r = &(&ver.lam[1] * &ExtScalar::from_int(2)) + &s;
    let t = &ExtScalar::from_int(-2) - &s;
    let sp = Split::from_octonions(&ver.x[0].scale(&r2), r, t, s, &ver.x[2].bar().scale(&r2), &ver.x[1].bar().scale(&r2));
    Ok(sp.join())
}

fn chart_inverse(o: &Octonion) -> Result<Octonion> {
    o.inverse().map_err(|_| AtlasError::ChartPrecondition(format!("{o:?} has zero norm and cannot be inverted")))
}

/// Uᵢ (i = 1, 2, 3): (aᵢ, bᵢ) = (λᵢ⁻¹xᵢ₊₁, λᵢ⁻¹xᵢ₊₂).
pub fn projective_chart(i: usize, ver: &Veronese) -> Result<(Octonion, Octonion)> {
    if !(1..=3).contains(&i) {
        return Err(AtlasError::IndexOutOfRange(format!("chart index {i} not in 1..3")));
    }
    let k = i - 1;
    let inv = ver.lam[k].inverse().map_err(|_| AtlasError::ChartPrecondition(format!("λ{i} = 0: not in U{i}")))?;
    Ok((ver.x[(k + 1) % 3].scale(&inv), ver.x[(k + 2) % 3].scale(&inv)))
}

/// Uᵢ → Uᵢ₊₁: a' = b̄⁻¹, b' = b⁻¹⋆ā.
pub fn chart_transition_oct(a: &Octonion, b: &Octonion) -> Result<(Octonion, Octonion)> {
    let binv = chart_inverse(b)?;
    Ok((chart_inverse(&b.bar())?, binv.star(&a.bar())))
}

/// The point of Uᵢ with coordinates (a, b), normalised to Σλ = 1:
/// λᵢ = 1, xᵢ₊₁ = a, xᵢ₊₂ = b, xᵢ = (a⋆b)‾, λᵢ₊₁ = b⋆b̄, λᵢ₊₂ = a⋆ā.
pub fn veronese_from_chart(i: usize, a: &Octonion, b: &Octonion) -> Result<Veronese> {
    if !(1..=3).contains(&i) {
        return Err(AtlasError::IndexOutOfRange(format!("chart index {i} not in 1..3")));
    }
    let k = i - 1;
    let mut x: [Octonion; 3] = Default::default();
    let mut lam: [ExtScalar; 3] = Default::default();
    x[k] = a.star(b).bar();
    x[(k + 1) % 3] = a.clone();
    x[(k + 2) % 3] = b.clone();
    lam[k] = ExtScalar::one();
    lam[(k + 1) % 3] = b.norm2();
    lam[(k + 2) % 3] = a.norm2();
    let total = &(&ExtScalar::one() + &a.norm2()) + &b.norm2();
    let inv = total.inverse().map_err(|_| AtlasError::ChartPrecondition("1 + |a|² + |b|² = 0".into()))?;
    Ok(Veronese { x: x.map(|o| o.scale(&inv)), lam: lam.map(|l| &l * &inv) })
}

/// J(Ψ)/(s+t) for Ψ on the orbit of the lowest weight; the result is idempotent with trace 1.
pub fn f4_orbit_project(p: &Vector27) -> Result<JordanMatrix> {
    if !on_orbit(p) {
        return Err(AtlasError::ChartPrecondition("point is off the orbit of the lowest weight".into()));
    }
    let sp = Split::of(p);
    let tau = &sp.s + &sp.t;
    let inv = tau
        .inverse()
        .map_err(|_| AtlasError::ChartPrecondition("s + t = 0: point lies on the stratum at infinity".into()))?;
    Ok(j_map_complex(p).scale(&inv))
}

/// First orbit sample (seed, length) with s + t = 0, scanning seeds 0..max_seed and word
/// lengths 1..=4.
pub fn stratum_witness(max_seed: u64) -> Option<(u64, usize, Vector27)> {
    for seed in 0..max_seed {
        for len in 1..=4 {
            let p = orbit_sample(seed, len).ok()?;
            let sp = Split::of(&p);
            if (&sp.s + &sp.t).is_zero() {
                return Some((seed, len, p));
            }
        }
    }
    None
}

/// The 8D consequences of the quadratic relations:
/// uη = −(r−t)ξ/√2, uξ = (r+t)η/√2, (ξeⁱη)eⁱ = √2 s u, (ξξ) = s(r+t), (ηη) = −s(r−t),
/// u·u = −½(r² − t²). Returns the name of the first failing relation.
pub fn plucker8_failure(p: &Vector27) -> Option<String> {
    let x = Split::of(p);
    let h = ExtScalar::inv_sqrt2();
    let rmt = &x.r - &x.t;
    let rpt = &x.r + &x.t;
    let checks = [
        ("u eta", vector_act(&x.u, &x.eta).coeffs == x.xi.scale(&-&(&rmt * &h)).coeffs),
        ("u xi", vector_act(&x.u, &x.xi).coeffs == x.eta.scale(&(&rpt * &h)).coeffs),
        ("(xi e eta) e", {
            let c = &ExtScalar::sqrt2() * &x.s;
            bilinear_vector(&x.xi, &x.eta) == x.u.iter().map(|a| a * &c).collect::<Vec<_>>()
        }),
        ("(xi xi)", pair8(&x.xi, &x.xi) == &x.s * &rpt),
        ("(eta eta)", pair8(&x.eta, &x.eta) == -&(&x.s * &rmt)),
        ("u.u", dot(&x.u, &x.u) == &(&(&x.r * &x.r) - &(&x.t * &x.t)) * &q(-1, 2)),
    ];
    checks.into_iter().find(|(_, ok)| !ok).map(|(n, _)| n.to_string())
}
