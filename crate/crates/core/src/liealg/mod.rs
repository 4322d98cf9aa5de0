//! Exceptional Lie algebras built from orthogonal algebras and spinors.
//!
//! Elements are stored as coordinate vectors in an ambient basis:
//! - e8: so(16) pairs (p<q, lexicographic), then the Δ⁺₁₆ basis (even-weight states, ascending): 248 in all;
//! - e6: so(10) pairs, then Δ⁺₁₀, then Δ⁻₁₀, then ϱ: 78 in all;
//! - f4 lives inside the e6 coordinates, g2 inside so(8) (28 coordinates).

mod checks;
mod structure;
mod sub;

pub use checks::{centralizer_g2_failure, centralizer_su3_failure, g2_failure, jacobi_check, run_checks};
pub use structure::{so_table, with_pool, JacobiMode, JacobiOutcome, StructureConstants};
pub use sub::{
    centralizer, e6_basis_in_e8, embed_e6_in_e8, f4_basis, g2_basis, g2_in_e8, rho_in_so16, same_span, su3_basis,
    su3_in_e8, F4_SPINOR_PHASE,
};

use std::fmt;

use serde_json::Value;

use crate::clifford::{chiral_indices, pairs, so_act_spinor, so_bracket, so_vector_matrix, Chirality, GammaRep, Spinor};
use crate::error::{AtlasError, Result};
use crate::linalg::SparseRow;
use crate::scalar::{q, ExtScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    G2,
    F4,
    E6,
    E8,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::G2 => "g2",
            Algebra::F4 => "f4",
            Algebra::E6 => "e6",
            Algebra::E8 => "e8",
        }
    }

    pub fn parse(s: &str) -> Result<Algebra> {
        match s {
            "g2" => Ok(Algebra::G2),
            "f4" => Ok(Algebra::F4),
            "e6" => Ok(Algebra::E6),
            "e8" => Ok(Algebra::E8),
            _ => Err(AtlasError::Parse(format!("unknown algebra {s:?}"))),
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Algebra::G2 => 14,
            Algebra::F4 => 52,
            Algebra::E6 => 78,
            Algebra::E8 => 248,
        }
    }

    pub fn ambient_dim(self) -> usize {
        match self {
            Algebra::G2 => 28,
            Algebra::F4 | Algebra::E6 => E6_DIM,
            Algebra::E8 => E8_DIM,
        }
    }
}

pub const SO16: usize = 120;
pub const E8_DIM: usize = 248;
pub const SO10: usize = 45;
pub const E6_PLUS: usize = SO10;
pub const E6_MINUS: usize = SO10 + 16;
pub const E6_RHO: usize = SO10 + 32;
pub const E6_DIM: usize = 78;

#[derive(Clone, PartialEq, Eq)]
pub struct LieElement {
    pub algebra: Algebra,
    pub coords: Vec<ExtScalar>,
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| format!("{k}:{c}")).collect();
        write!(f, "{}[{}]", self.algebra.name(), terms.join(", "))
    }
}

impl LieElement {
    pub fn zero(algebra: Algebra) -> Self {
        LieElement { algebra, coords: vec![ExtScalar::zero(); algebra.ambient_dim()] }
    }

    pub fn from_coords(algebra: Algebra, coords: Vec<ExtScalar>) -> Result<Self> {
        if coords.len() != algebra.ambient_dim() {
            return Err(AtlasError::DimensionMismatch(format!(
                "{} element needs {} coordinates, got {}",
                algebra.name(),
                algebra.ambient_dim(),
                coords.len()
            )));
        }
        Ok(LieElement { algebra, coords })
    }

    pub fn from_sparse(algebra: Algebra, v: &SparseRow) -> Self {
        let mut e = Self::zero(algebra);
        for (&k, c) in v {
            e.coords[k] = c.clone();
        }
        e
    }

    pub fn to_sparse(&self) -> SparseRow {
        crate::linalg::sparse_from_dense(&self.coords)
    }

    pub fn basis(algebra: Algebra, k: usize) -> Self {
        let mut e = Self::zero(algebra);
        e.coords[k] = ExtScalar::one();
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &LieElement) -> LieElement {
        LieElement { algebra: self.algebra, coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &LieElement) -> LieElement {
        LieElement { algebra: self.algebra, coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &ExtScalar) -> LieElement {
        LieElement { algebra: self.algebra, coords: self.coords.iter().map(|x| x * c).collect() }
    }

    /// Coefficients of xᵖᑫ, p < q.
    pub fn so_part(&self) -> &[ExtScalar] {
        match self.algebra {
            Algebra::E8 => &self.coords[..SO16],
            Algebra::E6 | Algebra::F4 => &self.coords[..SO10],
            Algebra::G2 => &self.coords[..],
        }
    }

    pub fn spinor_plus(&self) -> Option<Spinor> {
        match self.algebra {
            Algebra::E8 => Some(Spinor::from_chiral(8, Chirality::Plus, &self.coords[SO16..]).expect("128")),
            Algebra::E6 | Algebra::F4 => {
                Some(Spinor::from_chiral(5, Chirality::Plus, &self.coords[E6_PLUS..E6_MINUS]).expect("16"))
            }
            Algebra::G2 => None,
        }
    }

    pub fn spinor_minus(&self) -> Option<Spinor> {
        match self.algebra {
            Algebra::E6 | Algebra::F4 => {
                Some(Spinor::from_chiral(5, Chirality::Minus, &self.coords[E6_MINUS..E6_RHO]).expect("16"))
            }
            _ => None,
        }
    }

    pub fn u1(&self) -> ExtScalar {
        match self.algebra {
            Algebra::E6 | Algebra::F4 => self.coords[E6_RHO].clone(),
            _ => ExtScalar::zero(),
        }
    }

    /// Assemble an e6 element from its parts.
    pub fn e6(so: &[ExtScalar], plus: &Spinor, minus: &Spinor, rho: ExtScalar) -> LieElement {
        let mut coords = Vec::with_capacity(E6_DIM);
        coords.extend_from_slice(so);
        coords.extend(plus.chiral_components());
        coords.extend(minus.chiral_components());
        coords.push(rho);
        LieElement { algebra: Algebra::E6, coords }
    }

    pub fn e8(so: &[ExtScalar], plus: &Spinor) -> LieElement {
        let mut coords = Vec::with_capacity(E8_DIM);
        coords.extend_from_slice(so);
        coords.extend(plus.chiral_components());
        LieElement { algebra: Algebra::E8, coords }
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "algebra": self.algebra.name(),
            "coords": self.coords.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// −½ Σ_{p<q} (φ eᵖeᑫ ψ) xᵖᑫ: the so part of a spinor–spinor bracket.
pub fn spinor_spinor_so(phi: &Spinor, psi: &Spinor) -> Vec<ExtScalar> {
    let rep = GammaRep::get(phi.n);
    let minus_half = q(-1, 2);
    pairs(rep.dim())
        .into_iter()
        .map(|(p, qq)| {
            let c = rep.c_pair(p, qq).sandwich(&phi.coeffs, &psi.coeffs);
            if c.is_zero() {
                c
            } else {
                &c * &minus_half
            }
        })
        .collect()
}

fn add_into(dst: &mut [ExtScalar], src: &[ExtScalar], sign: i32) {
    for (d, s) in dst.iter_mut().zip(src) {
        if s.is_zero() {
            continue;
        }
        if sign > 0 {
            *d += s;
        } else {
            *d -= s;
        }
    }
}

fn bracket_e8(x: &LieElement, y: &LieElement) -> LieElement {
    let (a, b) = (x.so_part(), y.so_part());
    let xi = x.spinor_plus().expect("e8");
    let eta = y.spinor_plus().expect("e8");
    let mut so = so_bracket(a, b, 16);
    add_into(&mut so, &spinor_spinor_so(&xi, &eta), 1);
    let sp = so_act_spinor(a, &eta).sub(&so_act_spinor(b, &xi));
    LieElement::e8(&so, &tagged(sp, Chirality::Plus))
}

fn tagged(mut s: Spinor, c: Chirality) -> Spinor {
    s.chirality = c;
    s
}

fn pair0(a: &Spinor, b: &Spinor) -> ExtScalar {
    let rep = GammaRep::get(a.n);
    rep.charge().sandwich(&a.coeffs, &b.coeffs)
}

fn bracket_e6(x: &LieElement, y: &LieElement) -> LieElement {
    let (a, b) = (x.so_part(), y.so_part());
    let (xp, xm, xr) = (x.spinor_plus().unwrap(), x.spinor_minus().unwrap(), x.u1());
    let (yp, ym, yr) = (y.spinor_plus().unwrap(), y.spinor_minus().unwrap(), y.u1());
    let mut so = so_bracket(a, b, 10);
    add_into(&mut so, &spinor_spinor_so(&xp, &ym), 1);
    add_into(&mut so, &spinor_spinor_so(&yp, &xm), -1);
    let i4 = ExtScalar::gaussian(crate::Rational::ZERO, crate::Rational::new(1, 4));
    let rho = &i4 * &(&pair0(&xp, &ym) - &pair0(&yp, &xm));
    let three_i = ExtScalar::gaussian(crate::Rational::ZERO, crate::Rational::from_int(3));
    let plus = so_act_spinor(a, &yp)
        .sub(&so_act_spinor(b, &xp))
        .add(&yp.scale(&(&three_i * &xr)))
        .sub(&xp.scale(&(&three_i * &yr)));
    let minus = so_act_spinor(a, &ym)
        .sub(&so_act_spinor(b, &xm))
        .sub(&ym.scale(&(&three_i * &xr)))
        .add(&xm.scale(&(&three_i * &yr)));
    let (plus, minus) = (tagged(plus, Chirality::Plus), tagged(minus, Chirality::Minus));
    LieElement::e6(&so, &plus, &minus, rho)
}

/// Lie bracket in the ambient algebra. f4 and g2 elements are bracketed in e6 and so(8).
pub fn bracket(x: &LieElement, y: &LieElement) -> Result<LieElement> {
    let ambient = |a: Algebra| match a {
        Algebra::F4 | Algebra::E6 => Algebra::E6,
        other => other,
    };
    if ambient(x.algebra) != ambient(y.algebra) {
        return Err(AtlasError::Invalid(format!("bracket of {} and {}", x.algebra.name(), y.algebra.name())));
    }
    let mut out = match x.algebra {
        Algebra::E8 => bracket_e8(x, y),
        Algebra::E6 | Algebra::F4 => bracket_e6(x, y),
        Algebra::G2 => LieElement { algebra: Algebra::G2, coords: so_bracket(&x.coords, &y.coords, 8) },
    };
    if x.algebra == y.algebra {
        out.algebra = x.algebra;
    }
    Ok(out)
}

/// Hermitian invariant form on e6: −⅛ Tr[x̄ y] with the trace over the full 32-dimensional
/// spin module Δ⁺ ⊕ Δ⁻ of so(10), plus φ†ψ on both spinor parts, plus 12 r̄ s.
pub fn killing(x: &LieElement, y: &LieElement) -> Result<ExtScalar> {
    if !matches!(x.algebra, Algebra::E6 | Algebra::F4) || !matches!(y.algebra, Algebra::E6 | Algebra::F4) {
        return Err(AtlasError::Invalid("the invariant form is defined on e6".into()));
    }
    // Tr over Δ of (½eᵖeᑫ)(½eʳeˢ) is −8δ on the pair basis, so −⅛Tr = Σ ā b.
    let mut acc = ExtScalar::zero();
    for (a, b) in x.so_part().iter().zip(y.so_part()) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(&a.conjugate() * b);
        }
    }
    for k in E6_PLUS..E6_RHO {
        let (a, b) = (&x.coords[k], &y.coords[k]);
        if !a.is_zero() && !b.is_zero() {
            acc += &(&a.conjugate() * b);
        }
    }
    acc += &(&(&x.u1().conjugate() * &y.u1()) * &ExtScalar::from_int(12));
    Ok(acc)
}

/// Random element of the compact real form of e6: real so(10) and ϱ parts, η = Cξ*.
pub fn random_compact_e6(rng: &mut crate::rng::Rng) -> LieElement {
    let so: Vec<ExtScalar> = (0..SO10).map(|_| rng.real()).collect();
    let xi = Spinor::random(5, Chirality::Plus, rng);
    let eta = xi.charge_conjugate();
    LieElement::e6(&so, &xi, &eta, rng.real())
}

/// Basis of the compact real form over ℝ: xᵖᑫ, then (ξₐ, Cξₐ*) and (iξₐ, C(iξₐ)*) per Δ⁺ state, then ϱ.
pub fn compact_e6_basis() -> Vec<LieElement> {
    let zero_so = vec![ExtScalar::zero(); SO10];
    let mut out: Vec<LieElement> = (0..SO10).map(|k| LieElement::basis(Algebra::E6, k)).collect();
    for idx in chiral_indices(5, Chirality::Plus) {
        for c in [ExtScalar::one(), ExtScalar::i()] {
            let xi = Spinor::basis(5, idx).scale(&c);
            let eta = xi.charge_conjugate();
            out.push(LieElement::e6(&zero_so, &xi, &eta, ExtScalar::zero()));
        }
    }
    out.push(LieElement::basis(Algebra::E6, E6_RHO));
    out
}

/// True when the element lies in the compact real form.
pub fn is_compact_e6(x: &LieElement) -> bool {
    let (xi, eta) = (x.spinor_plus().expect("e6"), x.spinor_minus().expect("e6"));
    x.so_part().iter().all(|c| c.is_real()) && x.u1().is_real() && xi.charge_conjugate() == eta
}

/// Dense vector-representation matrix of the so part.
pub fn so_matrix(x: &LieElement) -> Vec<Vec<ExtScalar>> {
    let dim = match x.algebra {
        Algebra::E8 => 16,
        Algebra::E6 | Algebra::F4 => 10,
        Algebra::G2 => 8,
    };
    so_vector_matrix(x.so_part(), dim)
}

/// Δ⁺ basis states of the given half-dimension (used to index spinor coordinates).
pub fn spinor_coordinate_states(n: usize) -> Vec<usize> {
    chiral_indices(n, Chirality::Plus)
}
