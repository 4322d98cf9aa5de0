//! The 27 of e6 and its dual: actions, the cubic invariant, diamond products, nilpotent exponentials.

use serde_json::{json, Value};

use crate::clifford::{bilinear_vector, dot, so_act_spinor, so_act_vector, vector_act, Chirality, GammaRep, Spinor};
use crate::error::{AtlasError, Result};
use crate::liealg::{compact_e6_basis, Algebra, LieElement, E6_DIM, E6_MINUS, E6_PLUS, E6_RHO};
use crate::linalg::{Echelon, SparseRow};
use crate::rng::Rng;
use crate::scalar::{q, ExtScalar};

/// Sign of the spinor term in the dual cubic relative to the transcribed formula.
pub const DUAL_SPINOR_SIGN: i64 = 1;
/// Overall scale of the dual cubic.
pub const DUAL_SCALE: i64 = 1;

/// (v, ψ, s) ∈ V ⊕ Δ⁺ ⊕ ℂ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector27 {
    pub v: Vec<ExtScalar>,
    pub psi: Spinor,
    pub s: ExtScalar,
}

/// (u, φ, t) ∈ V ⊕ Δ⁻ ⊕ ℂ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covector27 {
    pub u: Vec<ExtScalar>,
    pub phi: Spinor,
    pub t: ExtScalar,
}

pub type Matrix27 = Vec<Vec<ExtScalar>>;

fn vadd(a: &[ExtScalar], b: &[ExtScalar]) -> Vec<ExtScalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vscale(a: &[ExtScalar], c: &ExtScalar) -> Vec<ExtScalar> {
    a.iter().map(|x| if x.is_zero() { x.clone() } else { x * c }).collect()
}

fn pair(phi: &Spinor, psi: &Spinor) -> ExtScalar {
    GammaRep::get(5).charge().sandwich(&phi.coeffs, &psi.coeffs)
}

fn tag(mut s: Spinor, c: Chirality) -> Spinor {
    s.chirality = c;
    s
}

fn i_times(k: i64) -> ExtScalar {
    &ExtScalar::i() * &ExtScalar::from_int(k)
}

macro_rules! triple_impl {
    ($ty:ident, $vec:ident, $sp:ident, $sc:ident, $ch:expr) => {
        impl $ty {
            pub fn zero() -> Self {
                $ty { $vec: vec![ExtScalar::zero(); 10], $sp: Spinor::zero(5, $ch), $sc: ExtScalar::zero() }
            }

            pub fn new(vec: Vec<ExtScalar>, sp: Spinor, sc: ExtScalar) -> Result<Self> {
                if vec.len() != 10 {
                    return Err(AtlasError::DimensionMismatch(format!("vector part needs 10 entries, got {}", vec.len())));
                }
                if sp.n != 5 {
                    return Err(AtlasError::DimensionMismatch("spinor part must be 10-dimensional".into()));
                }
                let sp = Spinor::new(5, $ch, sp.coeffs)?;
                Ok($ty { $vec: vec, $sp: sp, $sc: sc })
            }

            /// The element with only the scalar slot set to 1.
            pub fn lowest() -> Self {
                let mut x = Self::zero();
                x.$sc = ExtScalar::one();
                x
            }

            pub fn random(rng: &mut Rng) -> Self {
                let v = rng.gaussians(10);
                let sp = Spinor::random(5, $ch, rng);
                $ty { $vec: v, $sp: sp, $sc: rng.gaussian() }
            }

            /// 27 coordinates: vector, chiral spinor components, scalar.
            pub fn coords(&self) -> Vec<ExtScalar> {
                let mut out = self.$vec.clone();
                out.extend(self.$sp.chiral_components());
                out.push(self.$sc.clone());
                out
            }

            pub fn from_coords(c: &[ExtScalar]) -> Result<Self> {
                if c.len() != 27 {
                    return Err(AtlasError::DimensionMismatch(format!("27 coordinates expected, got {}", c.len())));
                }
                Ok($ty {
                    $vec: c[..10].to_vec(),
                    $sp: Spinor::from_chiral(5, $ch, &c[10..26])?,
                    $sc: c[26].clone(),
                })
            }

            pub fn add(&self, o: &Self) -> Self {
                $ty { $vec: vadd(&self.$vec, &o.$vec), $sp: self.$sp.add(&o.$sp), $sc: &self.$sc + &o.$sc }
            }

            pub fn sub(&self, o: &Self) -> Self {
                self.add(&o.scale(&ExtScalar::from_int(-1)))
            }

            pub fn scale(&self, c: &ExtScalar) -> Self {
                $ty { $vec: vscale(&self.$vec, c), $sp: self.$sp.scale(c), $sc: &self.$sc * c }
            }

            pub fn is_zero(&self) -> bool {
                self.$vec.iter().all(|x| x.is_zero()) && self.$sp.is_zero() && self.$sc.is_zero()
            }

            /// Componentwise complex conjugate.
            pub fn conjugate(&self) -> Self {
                $ty {
                    $vec: self.$vec.iter().map(|x| x.conjugate()).collect(),
                    $sp: self.$sp.conjugate(),
                    $sc: self.$sc.conjugate(),
                }
            }

            pub fn to_json(&self) -> Value {
                json!({
                    stringify!($vec): self.$vec.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                    stringify!($sp): self.$sp.to_json(),
                    stringify!($sc): self.$sc.to_json(),
                })
            }

            pub fn from_json(v: &Value) -> Result<Self> {
                let arr = v[stringify!($vec)]
                    .as_array()
                    .ok_or_else(|| AtlasError::Parse(concat!("missing ", stringify!($vec)).into()))?;
                let vec = arr.iter().map(ExtScalar::from_json).collect::<Result<Vec<_>>>()?;
                let sp = Spinor::from_json(5, $ch, &v[stringify!($sp)])?;
                let sc = ExtScalar::from_json(&v[stringify!($sc)])?;
                Self::new(vec, sp, sc)
            }
        }
    };
}

triple_impl!(Vector27, v, psi, s, Chirality::Plus);
triple_impl!(Covector27, u, phi, t, Chirality::Minus);

fn e6_parts(x: &LieElement) -> Result<(&[ExtScalar], Spinor, Spinor, ExtScalar)> {
    if !matches!(x.algebra, Algebra::E6 | Algebra::F4) {
        return Err(AtlasError::Invalid(format!("{} does not act on the 27", x.algebra.name())));
    }
    Ok((x.so_part(), x.spinor_plus().expect("e6"), x.spinor_minus().expect("e6"), x.u1()))
}

/// X∘Ψ: the sum of the so(10), ϱ, ξ and η block actions.
pub fn act27(x: &LieElement, p: &Vector27) -> Result<Vector27> {
    let (so, xi, eta, r) = e6_parts(x)?;
    let h = ExtScalar::inv_sqrt2();
    let mut v = so_act_vector(so, &p.v);
    v = vadd(&v, &vscale(&p.v, &(&i_times(2) * &r)));
    v = vadd(&v, &vscale(&bilinear_vector(&xi, &p.psi), &h));
    let psi = so_act_spinor(so, &p.psi)
        .add(&p.psi.scale(&(&i_times(-1) * &r)))
        .add(&xi.scale(&p.s))
        .sub(&vector_act(&p.v, &eta).scale(&h));
    let s = &(&(&i_times(-4) * &r) * &p.s) - &pair(&eta, &p.psi);
    Ok(Vector27 { v, psi: tag(psi, Chirality::Plus), s })
}

/// X∘Φ on the dual, fixed by ⟨X∘Φ, Ψ⟩ = −⟨Φ, X∘Ψ⟩.
pub fn act27_dual(x: &LieElement, f: &Covector27) -> Result<Covector27> {
    let (so, xi, eta, r) = e6_parts(x)?;
    let h = ExtScalar::inv_sqrt2();
    let mut u = so_act_vector(so, &f.u);
    u = vadd(&u, &vscale(&f.u, &(&i_times(-2) * &r)));
    u = vadd(&u, &vscale(&bilinear_vector(&f.phi, &eta), &h));
    let phi = so_act_spinor(so, &f.phi)
        .add(&f.phi.scale(&(&ExtScalar::i() * &r)))
        .sub(&vector_act(&f.u, &xi).scale(&h))
        .add(&eta.scale(&f.t));
    let t = &(&(&i_times(4) * &r) * &f.t) - &pair(&f.phi, &xi);
    Ok(Covector27 { u, phi: tag(phi, Chirality::Minus), t })
}

/// ⟨Φ, Ψ⟩ = u·v + (φψ) + ts.
pub fn pairing(f: &Covector27, p: &Vector27) -> ExtScalar {
    &(&dot(&f.u, &p.v) + &pair(&f.phi, &p.psi)) + &(&f.t * &p.s)
}

fn d_term(v1: &[ExtScalar], s2: &ExtScalar, v3: &[ExtScalar], psi1: &Spinor, psi2: &Spinor) -> ExtScalar {
    let vv = &dot(v1, v3) * s2;
    let sp = dot(v3, &bilinear_vector(psi1, psi2));
    &vv - &(&sp * &ExtScalar::inv_sqrt2())
}

/// d(Ψ₁,Ψ₂,Ψ₃) = (v₁·v₃)s₂ − (1/√2)(ψ₁v₃ψ₂) + cyclic.
pub fn d_cubic(a: &Vector27, b: &Vector27, c: &Vector27) -> ExtScalar {
    let t1 = d_term(&a.v, &b.s, &c.v, &a.psi, &b.psi);
    let t2 = d_term(&b.v, &c.s, &a.v, &b.psi, &c.psi);
    let t3 = d_term(&c.v, &a.s, &b.v, &c.psi, &a.psi);
    &(&t1 + &t2) + &t3
}

/// Ψ₁⋄Ψ₂ ∈ 27*, characterised by ⟨Ψ₁⋄Ψ₂, Ψ₃⟩ = d(Ψ₁,Ψ₂,Ψ₃).
pub fn diamond27(a: &Vector27, b: &Vector27) -> Covector27 {
    let h = ExtScalar::inv_sqrt2();
    let u = vadd(&vadd(&vscale(&a.v, &b.s), &vscale(&b.v, &a.s)), &vscale(&bilinear_vector(&a.psi, &b.psi), &-&h));
    let phi = vector_act(&a.v, &b.psi).add(&vector_act(&b.v, &a.psi)).scale(&-&h);
    Covector27 { u, phi: tag(phi, Chirality::Minus), t: dot(&a.v, &b.v) }
}

/// The dual cubic on 27*: the same block formula with (u, φ, t) in place of (v, ψ, s).
pub fn d_dual(a: &Covector27, b: &Covector27, c: &Covector27) -> ExtScalar {
    let term = |u1: &[ExtScalar], t2: &ExtScalar, u3: &[ExtScalar], p1: &Spinor, p2: &Spinor| {
        let uu = &dot(u1, u3) * t2;
        let sp = &dot(u3, &bilinear_vector(p1, p2)) * &ExtScalar::inv_sqrt2();
        &uu - &(&sp * &ExtScalar::from_int(DUAL_SPINOR_SIGN))
    };
    let sum = &(&term(&a.u, &b.t, &c.u, &a.phi, &b.phi) + &term(&b.u, &c.t, &a.u, &b.phi, &c.phi))
        + &term(&c.u, &a.t, &b.u, &c.phi, &a.phi);
    &sum * &ExtScalar::from_int(DUAL_SCALE)
}

/// Φ₁⋄Φ₂ ∈ 27, characterised by ⟨Φ₃, Φ₁⋄Φ₂⟩ = d*(Φ₁,Φ₂,Φ₃).
pub fn diamond27_dual(a: &Covector27, b: &Covector27) -> Vector27 {
    let h = &ExtScalar::inv_sqrt2() * &ExtScalar::from_int(DUAL_SPINOR_SIGN);
    let u = vadd(&vadd(&vscale(&a.u, &b.t), &vscale(&b.u, &a.t)), &vscale(&bilinear_vector(&a.phi, &b.phi), &-&h));
    let psi = vector_act(&a.u, &b.phi).add(&vector_act(&b.u, &a.phi)).scale(&-&h);
    let out = Vector27 { v: u, psi: tag(psi, Chirality::Plus), s: dot(&a.u, &b.u) };
    out.scale(&ExtScalar::from_int(DUAL_SCALE))
}

/// Dense 27×27 matrix of X acting on Vector27 coordinates.
pub fn act27_matrix(x: &LieElement) -> Result<Matrix27> {
    let mut cols = Vec::with_capacity(27);
    for k in 0..27 {
        let mut e = vec![ExtScalar::zero(); 27];
        e[k] = ExtScalar::one();
        cols.push(act27(x, &Vector27::from_coords(&e)?)?.coords());
    }
    Ok((0..27).map(|r| (0..27).map(|c| cols[c][r].clone()).collect()).collect())
}

pub fn mat_mul(a: &Matrix27, b: &Matrix27) -> Matrix27 {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![ExtScalar::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += &(aik * &b[k][j]);
                }
            }
        }
    }
    out
}

pub fn mat_apply(a: &Matrix27, p: &Vector27) -> Vector27 {
    let c = p.coords();
    let out: Vec<ExtScalar> = a.iter().map(|row| dot(row, &c)).collect();
    Vector27::from_coords(&out).expect("27")
}

pub fn identity27() -> Matrix27 {
    (0..27).map(|i| (0..27).map(|j| if i == j { ExtScalar::one() } else { ExtScalar::zero() }).collect()).collect()
}

fn is_zero_matrix(a: &Matrix27) -> bool {
    a.iter().all(|r| r.iter().all(|c| c.is_zero()))
}

/// exp(z) = 1 + N + N²/2 for z purely in Δ⁺ or purely in Δ⁻, with N³ = 0 checked.
pub fn exp_nilpotent(z: &LieElement) -> Result<Matrix27> {
    if !matches!(z.algebra, Algebra::E6 | Algebra::F4) {
        return Err(AtlasError::Invalid("exp_nilpotent needs an e6 element".into()));
    }
    let so_or_rho = z.coords[..E6_PLUS].iter().any(|c| !c.is_zero()) || !z.coords[E6_RHO].is_zero();
    let plus = z.coords[E6_PLUS..E6_MINUS].iter().any(|c| !c.is_zero());
    let minus = z.coords[E6_MINUS..E6_RHO].iter().any(|c| !c.is_zero());
    if so_or_rho || (plus && minus) {
        return Err(AtlasError::Invalid("exp_nilpotent needs a generator in a single spinor sector".into()));
    }
    let n = act27_matrix(z)?;
    let n2 = mat_mul(&n, &n);
    if !is_zero_matrix(&mat_mul(&n2, &n)) {
        return Err(AtlasError::IdentityFailed("N³ ≠ 0 for a spinor generator".into()));
    }
    let half = q(1, 2);
    let mut out = identity27();
    for i in 0..27 {
        for j in 0..27 {
            let add = &n[i][j] + &(&n2[i][j] * &half);
            if !add.is_zero() {
                out[i][j] += &add;
            }
        }
    }
    Ok(out)
}

/// e6 element with only a Δ⁺ part.
pub fn xi_generator(xi: &Spinor) -> LieElement {
    let mut e = LieElement::zero(Algebra::E6);
    for (k, c) in xi.chiral_components().into_iter().enumerate() {
        e.coords[E6_PLUS + k] = c;
    }
    e
}

/// e6 element with only a Δ⁻ part.
pub fn eta_generator(eta: &Spinor) -> LieElement {
    let mut e = LieElement::zero(Algebra::E6);
    for (k, c) in eta.chiral_components().into_iter().enumerate() {
        e.coords[E6_MINUS + k] = c;
    }
    e
}

fn kernel_of_images(basis: &[LieElement], images: &[Vec<ExtScalar>]) -> Vec<LieElement> {
    let mut ech = Echelon::untracked(basis.len());
    for r in 0..images.first().map_or(0, |v| v.len()) {
        let row: SparseRow =
            (0..basis.len()).filter(|&k| !images[k][r].is_zero()).map(|k| (k, images[k][r].clone())).collect();
        if !row.is_empty() {
            ech.insert(&row);
        }
    }
    ech.kernel()
        .iter()
        .map(|v| {
            let mut acc = LieElement::zero(Algebra::E6);
            for (&k, c) in v {
                acc = acc.add(&basis[k].scale(c));
            }
            acc
        })
        .collect()
}

/// Stabiliser of Ψ₀ in the compact real form: the real kernel of X ↦ X∘Ψ₀ (so(10), dimension 45).
/// Images are split into real and imaginary parts so the kernel is taken over ℝ.
pub fn stabilizer_psi0() -> Vec<LieElement> {
    let psi0 = Vector27::lowest();
    let basis = compact_e6_basis();
    let half = q(1, 2);
    let minus_half_i = &ExtScalar::i() * &q(-1, 2);
    let images: Vec<Vec<ExtScalar>> = basis
        .iter()
        .map(|x| {
            let img = act27(x, &psi0).expect("e6").coords();
            let re = img.iter().map(|c| &(c + &c.conjugate()) * &half);
            let im = img.iter().map(|c| &(c - &c.conjugate()) * &minus_half_i);
            re.chain(im).collect()
        })
        .collect();
    kernel_of_images(&basis, &images)
}

/// Complex kernel of X ↦ X∘Ψ₀ on the complexified algebra: so(10) ⊕ Δ⁻ (dimension 61).
pub fn annihilator_psi0_complex() -> Vec<LieElement> {
    let psi0 = Vector27::lowest();
    let basis: Vec<LieElement> = (0..E6_DIM).map(|k| LieElement::basis(Algebra::E6, k)).collect();
    let images: Vec<Vec<ExtScalar>> = basis.iter().map(|x| act27(x, &psi0).expect("e6").coords()).collect();
    kernel_of_images(&basis, &images)
}

/// Failure witness for the first diamond identity on one quadruple, if any.
pub fn diamond_identity_one(p: [&Vector27; 4]) -> Option<String> {
    let [p1, p2, p3, p4] = p;
    let mut lhs = Vector27::zero();
    for (a, b, c) in [(p1, p2, p3), (p2, p3, p1), (p3, p1, p2)] {
        let term = diamond27_dual(&diamond27(a, b), &diamond27(c, p4));
        lhs = lhs.add(&term).sub(&c.scale(&d_cubic(a, b, p4)));
    }
    let rhs = p4.scale(&d_cubic(p1, p2, p3));
    (lhs != rhs).then(|| format!("residual {:?}", lhs.sub(&rhs).coords()))
}

/// Failure witness for the second diamond identity, if any.
pub fn diamond_identity_two(p: [&Vector27; 3], f: &Covector27) -> Option<String> {
    let [p1, p2, p3] = p;
    let mut lhs = Covector27::zero();
    for (a, b, c) in [(p1, p2, p3), (p2, p3, p1), (p3, p1, p2)] {
        let inner = diamond27_dual(&diamond27(b, c), f);
        lhs = lhs.add(&diamond27(a, &inner)).sub(&diamond27(a, b).scale(&pairing(f, c)));
    }
    let rhs = f.scale(&d_cubic(p1, p2, p3));
    (lhs != rhs).then(|| format!("residual {:?}", lhs.sub(&rhs).coords()))
}

mod checks;
pub use checks::{d_invariance_failure, run_checks, stabilizer_failure};

#[cfg(test)]
mod tests;
