//! The Jordan-algebra layer on 26 ⊕ 1: the f4 pairing and the isomorphism 27* → 27, the
//! ⋄-product, Hermitian octonion matrices, determinants, Veronese vectors and octonion
//! projective charts.
//!
//! Vectors use the 8+2 split v = (u, r/√2, it/√2) with ψ = ξ⊗|+⟩ + η⊗|−⟩; ξ and η become
//! octonions through t⁻¹ and s⁻¹ of the octonion module.

mod jordan;
mod veronese;

pub use jordan::{det_generic, full_mul, jordan_star, Full3, JordanMatrix};
pub use veronese::{
    chart_transition_oct, f4_orbit_project, plucker8_failure, projective_chart, real_from_veronese,
    stratum_witness, veronese_check, veronese_complex, veronese_from_chart, veronese_real, Veronese,
};

use crate::clifford::{bilinear_vector, dot, pair_bilinear, vector_act, Chirality, Spinor};
use crate::eiii::{join8, split8};
use crate::octonion::{s_inv, s_map, t_inv, t_map, Octonion};
use crate::rep27::{d_cubic, diamond27, pairing, Covector27, Vector27};
use crate::rng::Rng;
use crate::scalar::{q, ExtScalar};

mod checks;
pub use checks::run_checks;

/// Things that can carry a √3-graded coefficient.
pub trait Linear: Clone {
    fn zero_like(&self) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn times(&self, c: &ExtScalar) -> Self;
    fn vanishes(&self) -> bool;
}

impl Linear for ExtScalar {
    fn zero_like(&self) -> Self {
        ExtScalar::zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, c: &ExtScalar) -> Self {
        self * c
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl Linear for Vector27 {
    fn zero_like(&self) -> Self {
        Vector27::zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn times(&self, c: &ExtScalar) -> Self {
        self.scale(c)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl Linear for Covector27 {
    fn zero_like(&self) -> Self {
        Covector27::zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn times(&self, c: &ExtScalar) -> Self {
        self.scale(c)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

/// one + √3·root3, kept local so the scalar ring stays ℚ(i, √2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd3<T> {
    pub one: T,
    pub root3: T,
}

impl<T: Linear> Surd3<T> {
    pub fn rational(x: T) -> Self {
        Surd3 { root3: x.zero_like(), one: x }
    }

    pub fn root3(x: T) -> Self {
        Surd3 { one: x.zero_like(), root3: x }
    }

    pub fn add(&self, o: &Self) -> Self {
        Surd3 { one: self.one.plus(&o.one), root3: self.root3.plus(&o.root3) }
    }

    pub fn times(&self, c: &ExtScalar) -> Self {
        Surd3 { one: self.one.times(c), root3: self.root3.times(c) }
    }

    /// (a + √3b)(c + √3d) = (ac + 3bd) + √3(ad + bc).
    pub fn scale(&self, c: &Surd3<ExtScalar>) -> Self {
        let three = ExtScalar::from_int(3);
        Surd3 {
            one: self.one.times(&c.one).plus(&self.root3.times(&(&c.root3 * &three))),
            root3: self.one.times(&c.root3).plus(&self.root3.times(&c.one)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.one.vanishes() && self.root3.vanishes()
    }

    /// The value when the √3 part has cancelled.
    pub fn rational_part(&self) -> Option<&T> {
        self.root3.vanishes().then_some(&self.one)
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Surd3<U> {
        Surd3 { one: f(&self.one), root3: f(&self.root3) }
    }
}

/// Ψ_∅ = √(2/3)(i e₁₀; 0; 1/√2) = √3·(i√2/3 e₁₀; 0; 1/3): the f4 singlet.
pub fn psi_empty() -> Surd3<Vector27> {
    let mut w = Vector27::zero();
    w.v[9] = &(&ExtScalar::i() * &ExtScalar::sqrt2()) * &q(1, 3);
    w.s = q(1, 3);
    Surd3::root3(w)
}

/// Φ_∅ = √(2/3)(−i e₁₀; 0; 1/√2).
pub fn phi_empty() -> Surd3<Covector27> {
    let mut w = Covector27::zero();
    w.u[9] = &(&ExtScalar::i() * &ExtScalar::sqrt2()) * &q(-1, 3);
    w.t = q(1, 3);
    Surd3::root3(w)
}

/// Ψ_o = (−√2 i e₁₀; 0; 0), whose f4 orbit is the octonion projective plane.
pub fn psi_o() -> Vector27 {
    let mut p = Vector27::zero();
    p.v[9] = -&(&ExtScalar::i() * &ExtScalar::sqrt2());
    p
}

fn e10() -> Vec<ExtScalar> {
    let mut e = vec![ExtScalar::zero(); 10];
    e[9] = ExtScalar::one();
    e
}

/// σ: 27* → 27, (u; φ; t) ↦ (u with the e₁₀ slot negated; i e¹⁰φ; t).
pub fn sigma_iso(f: &Covector27) -> Vector27 {
    let mut v = f.u.clone();
    v[9] = -&v[9];
    let psi = vector_act(&e10(), &f.phi).scale(&ExtScalar::i());
    Vector27 { v, psi, s: f.t.clone() }
}

pub fn sigma_inv(p: &Vector27) -> Covector27 {
    let mut u = p.v.clone();
    u[9] = -&u[9];
    let phi = vector_act(&e10(), &p.psi).scale(&-&ExtScalar::i());
    Covector27 { u, phi, t: p.s.clone() }
}

/// ⟨Ψ₁, Ψ₂⟩ = (σ⁻¹Ψ₂)(Ψ₁).
pub fn f4_pairing(a: &Vector27, b: &Vector27) -> ExtScalar {
    pairing(&sigma_inv(b), a)
}

/// Ψ₁⋄Ψ₂ = σ(d(Ψ₁, Ψ₂, ·)).
pub fn diamond_f4(a: &Vector27, b: &Vector27) -> Vector27 {
    sigma_iso(&diamond27(a, b))
}

/// The 8+2 coordinates of a 27 vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub u: Vec<ExtScalar>,
    pub r: ExtScalar,
    pub t: ExtScalar,
    pub s: ExtScalar,
    pub xi: Spinor,
    pub eta: Spinor,
}

impl Split {
    pub fn of(p: &Vector27) -> Split {
        let r2 = ExtScalar::sqrt2();
        let (xi, eta) = split8(&p.psi);
        Split {
            u: p.v[..8].to_vec(),
            r: &r2 * &p.v[8],
            t: &(&r2 * &p.v[9]) * &-&ExtScalar::i(),
            s: p.s.clone(),
            xi,
            eta,
        }
    }

    pub fn join(&self) -> Vector27 {
        let h = ExtScalar::inv_sqrt2();
        let mut v = self.u.clone();
        v.push(&self.r * &h);
        v.push(&(&self.t * &h) * &ExtScalar::i());
        Vector27 { v, psi: join8(&self.xi, &self.eta), s: self.s.clone() }
    }

    /// t⁺ = r − t.
    pub fn t_plus(&self) -> ExtScalar {
        &self.r - &self.t
    }

    /// t⁻ = r + t.
    pub fn t_minus(&self) -> ExtScalar {
        &self.r + &self.t
    }

    pub fn u_oct(&self) -> Octonion {
        Octonion::from_slice(&self.u).expect("8 components")
    }

    pub fn xi_oct(&self) -> Octonion {
        t_inv(&self.xi)
    }

    pub fn eta_oct(&self) -> Octonion {
        s_inv(&self.eta)
    }

    pub fn from_octonions(u: &Octonion, r: ExtScalar, t: ExtScalar, s: ExtScalar, xi: &Octonion, eta: &Octonion) -> Self {
        Split { u: u.0.to_vec(), r, t, s, xi: t_map(xi), eta: s_map(eta) }
    }
}

pub(crate) fn pair8(a: &Spinor, b: &Spinor) -> ExtScalar {
    pair_bilinear(a, 0, b).expect("matching eight-dimensional chiralities")
}

/// u₁·u₂ + ½(r₁r₂ + t₁t₂) + (ξ₁ξ₂) + (η₁η₂) + s₁s₂, computed in the 8+2 split.
pub fn f4_pairing_split(a: &Vector27, b: &Vector27) -> ExtScalar {
    let (x, y) = (Split::of(a), Split::of(b));
    let half = q(1, 2);
    let rt = &(&(&x.r * &y.r) + &(&x.t * &y.t)) * &half;
    let spin = &pair8(&x.xi, &y.xi) + &pair8(&x.eta, &y.eta);
    &(&(&dot(&x.u, &y.u) + &rt) + &spin) + &(&x.s * &y.s)
}

/// The ⋄-product written out in the 8+2 split, with x₍₁y₂₎ = x₁y₂ + x₂y₁.
pub fn diamond_f4_split(a: &Vector27, b: &Vector27) -> Vector27 {
    let (x, y) = (Split::of(a), Split::of(b));
    let h = ExtScalar::inv_sqrt2();
    let half = q(1, 2);
    let sym = |p: &ExtScalar, q2: &ExtScalar, p2: &ExtScalar, q1: &ExtScalar| &(p * q2) + &(p2 * q1);

    let cross: Vec<ExtScalar> =
        bilinear_vector(&x.xi, &y.eta).iter().zip(bilinear_vector(&y.xi, &x.eta)).map(|(a, b)| a + &b).collect();
    let mut v: Vec<ExtScalar> = (0..8)
        .map(|k| &sym(&x.u[k], &y.s, &y.u[k], &x.s) - &(&cross[k] * &h))
        .collect();
    let c = &h * &half;
    let two = ExtScalar::from_int(2);
    let minus = &(&sym(&x.t_minus(), &y.s, &y.t_minus(), &x.s) - &(&pair8(&x.xi, &y.xi) * &two)) * &c;
    let plus = &(&sym(&x.t_plus(), &y.s, &y.t_plus(), &x.s) + &(&pair8(&x.eta, &y.eta) * &two)) * &c;
    // e^± = e⁹ ± i e¹⁰ (1-based)
    v.push(&minus + &plus);
    v.push(&ExtScalar::i() * &(&plus - &minus));

    let uy = |u: &[ExtScalar], sp: &Spinor| vector_act(u, sp);
    let xi = uy(&x.u, &y.eta)
        .add(&uy(&y.u, &x.eta))
        .scale(&-&h)
        .sub(&y.xi.scale(&x.t_plus()).add(&x.xi.scale(&y.t_plus())).scale(&half));
    let eta = uy(&x.u, &y.xi)
        .add(&uy(&y.u, &x.xi))
        .scale(&-&h)
        .add(&y.eta.scale(&x.t_minus()).add(&x.eta.scale(&y.t_minus())).scale(&half));
    let s = &dot(&x.u, &y.u) + &(&sym(&x.t_plus(), &y.t_minus(), &y.t_plus(), &x.t_minus()) * &q(1, 4));
    Vector27 { v, psi: join8(&retag(xi, Chirality::Plus), &retag(eta, Chirality::Minus)), s }
}

fn retag(mut s: Spinor, c: Chirality) -> Spinor {
    s.chirality = c;
    s
}

/// The arrangement used for the master identity:
/// [[½(r−s), ξ/√2, u/√2], [·, ½(s−t), η/√2], [·, ·, −½(r+s)]].
pub fn j_map(p: &Vector27) -> JordanMatrix {
    let x = Split::of(p);
    let half = q(1, 2);
    let h = ExtScalar::inv_sqrt2();
    JordanMatrix {
        d: [&(&x.r - &x.s) * &half, &(&x.s - &x.t) * &half, &(&x.r + &x.s) * &-&half],
        x12: x.xi_oct().scale(&h),
        x23: x.eta_oct().scale(&h),
        x13: x.u_oct().scale(&h),
    }
}

/// The complex-case arrangement: diagonal ½(r+t), s, −½(r−t), same off-diagonal entries.
pub fn j_map_complex(p: &Vector27) -> JordanMatrix {
    let x = Split::of(p);
    let half = q(1, 2);
    let mut m = j_map(p);
    m.d = [&x.t_minus() * &half, x.s.clone(), &(&x.r - &x.t) * &-&half];
    m
}

/// det J = −(1/6) d(Ψ,Ψ,Ψ).
pub fn jordan_det(p: &Vector27) -> ExtScalar {
    &d_cubic(p, p, p) * &q(-1, 6)
}

/// −½s(v·v) + (√2/2)(η u ξ) + ¼(ξξ)t⁺ − ¼(ηη)t⁻.
pub fn jordan_det_split(p: &Vector27) -> ExtScalar {
    let x = Split::of(p);
    let quarter = q(1, 4);
    let a = &(&x.s * &dot(&p.v, &p.v)) * &q(-1, 2);
    let b = &dot(&x.u, &bilinear_vector(&x.eta, &x.xi)) * &(&ExtScalar::sqrt2() * &q(1, 2));
    let c = &(&pair8(&x.xi, &x.xi) * &x.t_plus()) * &quarter;
    let d = &(&pair8(&x.eta, &x.eta) * &x.t_minus()) * &quarter;
    &(&(&a + &b) + &c) - &d
}

fn reality_map(psi: &Spinor) -> Spinor {
    vector_act(&e10(), &psi.charge_conjugate()).scale(&ExtScalar::i())
}

/// Real form of 26 ⊕ 1: u ∈ ℝ⁹, s, t ∈ ℝ and i e¹⁰ C ψ* = ψ.
pub fn reality_check(p: &Vector27) -> bool {
    let real = |c: &ExtScalar| c.conjugate() == *c;
    p.v[..9].iter().all(real)
        && p.v[9].conjugate() == -&p.v[9]
        && real(&p.s)
        && reality_map(&p.psi) == p.psi
}

/// A random element of the real form.
pub fn random_real(rng: &mut Rng) -> Vector27 {
    let mut v: Vec<ExtScalar> = (0..9).map(|_| rng.real()).collect();
    v.push(&ExtScalar::i() * &rng.real());
    let raw = Spinor::random(5, Chirality::Plus, rng);
    let psi = raw.add(&reality_map(&raw)).scale(&q(1, 2));
    Vector27 { v, psi, s: rng.real() }
}

#[cfg(test)]
mod tests;
