//! g2, su(3), f4 and the e6 ⊂ e8 embedding, plus centralizers.

use std::collections::BTreeMap;

use super::{Algebra, LieElement, StructureConstants, E6_DIM, E6_MINUS, E6_PLUS, E6_RHO, SO16};
use crate::clifford::{chiral_indices, pair_index, pairs, Chirality, GammaRep};
use crate::error::{AtlasError, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::scalar::{q, ExtScalar};

/// f4 spinor constraint: η = iᵏ e¹⁰ξ with this k (k = 3 is η = −i e¹⁰ξ, i.e. e¹⁰ξ = iη).
pub const F4_SPINOR_PHASE: u8 = 3;

/// Offset of the octonion 8-plane inside the 16 coordinates of e8.
const G2_OFFSET: usize = 8;

fn cvec(dim: usize, terms: &[(usize, ExtScalar)]) -> Vec<ExtScalar> {
    let mut v = vec![ExtScalar::zero(); dim];
    for (k, c) in terms {
        v[*k] += c;
    }
    v
}

/// eᵃ ± i eᵃ⁺¹.
fn z(a: usize, sign: i64) -> Vec<ExtScalar> {
    let i = ExtScalar::i();
    cvec(8, &[(a, ExtScalar::one()), (a + 1, &i * &ExtScalar::from_int(sign))])
}

/// so coefficients of the element acting on spinors as c·u·w (u ⊥ w, disjoint supports).
/// Since xᵖᑫ acts as ½eᵖeᑫ, the so coefficient is twice the Clifford coefficient.
fn so_of_product(c: &ExtScalar, u: &[ExtScalar], w: &[ExtScalar]) -> Vec<ExtScalar> {
    let dim = u.len();
    let mut out = vec![ExtScalar::zero(); dim * (dim - 1) / 2];
    let two_c = c * &ExtScalar::from_int(2);
    for p in 0..dim {
        for qq in 0..dim {
            if p == qq || u[p].is_zero() || w[qq].is_zero() {
                continue;
            }
            let t = &(&u[p] * &w[qq]) * &two_c;
            if p < qq {
                out[pair_index(dim, p, qq)] += &t;
            } else {
                out[pair_index(dim, qq, p)] -= &t;
            }
        }
    }
    out
}

/// u ∧ w as an so element.
fn wedge(u: &[ExtScalar], w: &[ExtScalar]) -> Vec<ExtScalar> {
    let dim = u.len();
    pairs(dim).into_iter().map(|(p, qq)| &(&u[p] * &w[qq]) - &(&u[qq] * &w[p])).collect()
}

fn g2_elem(coords: Vec<ExtScalar>) -> LieElement {
    LieElement { algebra: Algebra::G2, coords }
}

/// The 8 su(3) generators on the planes (2,3), (4,5), (6,7) of the octonions.
pub fn su3_basis() -> Vec<LieElement> {
    let planes = [2usize, 4, 6];
    let mut out = Vec::new();
    for &a in &planes {
        for &b in &planes {
            if a != b {
                out.push(g2_elem(wedge(&z(a, 1), &z(b, -1))));
            }
        }
    }
    for w in planes.windows(2) {
        let mut v = vec![ExtScalar::zero(); 28];
        v[pair_index(8, w[0], w[0] + 1)] = ExtScalar::one();
        v[pair_index(8, w[1], w[1] + 1)] = ExtScalar::from_int(-1);
        out.push(g2_elem(v));
    }
    out
}

/// 14 generators of g2 inside so(8): su(3) and the three mixed generators with their conjugates.
pub fn g2_basis() -> Vec<LieElement> {
    let mut out = su3_basis();
    let quarter = q(1, 4);
    let minus_half_i = &ExtScalar::i() * &q(-1, 2);
    let e1 = cvec(8, &[(1, ExtScalar::one())]);
    for (a, b, c) in [(2, 4, 6), (4, 6, 2), (6, 2, 4)] {
        let first = so_of_product(&quarter, &z(a, 1), &z(b, 1));
        let second = so_of_product(&minus_half_i, &e1, &z(c, -1));
        let x: Vec<ExtScalar> = first.iter().zip(&second).map(|(x, y)| x + y).collect();
        let xc: Vec<ExtScalar> = x.iter().map(|c| c.conjugate()).collect();
        out.push(g2_elem(x));
        out.push(g2_elem(xc));
    }
    out
}

fn so8_to_so16(coords: &[ExtScalar]) -> Vec<ExtScalar> {
    let mut out = vec![ExtScalar::zero(); super::E8_DIM];
    for (k, (p, qq)) in pairs(8).into_iter().enumerate() {
        out[pair_index(16, p + G2_OFFSET, qq + G2_OFFSET)] = coords[k].clone();
    }
    out
}

/// g2 placed on the second 8-plane of the 16 coordinates.
pub fn g2_in_e8() -> Vec<LieElement> {
    g2_basis().iter().map(|x| LieElement { algebra: Algebra::E8, coords: so8_to_so16(&x.coords) }).collect()
}

/// su(3) on the last six coordinates of the 16.
pub fn su3_in_e8() -> Vec<LieElement> {
    su3_basis().iter().map(|x| LieElement { algebra: Algebra::E8, coords: so8_to_so16(&x.coords) }).collect()
}

/// ϱ = 2x^{10,11} + 2x^{12,13} + 2x^{14,15} (0-based), the u(1) commuting with su(3).
pub fn rho_in_so16() -> Vec<ExtScalar> {
    let mut v = vec![ExtScalar::zero(); SO16];
    for a in [10, 12, 14] {
        v[pair_index(16, a, a + 1)] = ExtScalar::from_int(2);
    }
    v
}

/// Position of each 16-dimensional spinor state among the e8 spinor coordinates.
fn e8_spinor_positions() -> Vec<usize> {
    let mut pos = vec![usize::MAX; 256];
    for (k, s) in chiral_indices(8, Chirality::Plus).into_iter().enumerate() {
        pos[s] = k;
    }
    pos
}

/// e6 → e8: so(10) on the first ten coordinates, ϱ as above, ξ ↦ ξ⊗|+++⟩, η ↦ η⊗|−−−⟩.
pub fn embed_e6_in_e8(x: &LieElement) -> Result<LieElement> {
    if !matches!(x.algebra, Algebra::E6 | Algebra::F4) {
        return Err(AtlasError::Invalid(format!("cannot embed a {} element as e6", x.algebra.name())));
    }
    let mut out = vec![ExtScalar::zero(); super::E8_DIM];
    for (k, (p, qq)) in pairs(10).into_iter().enumerate() {
        out[pair_index(16, p, qq)] = x.coords[k].clone();
    }
    let r = &x.coords[E6_RHO];
    if !r.is_zero() {
        for (o, v) in out.iter_mut().zip(rho_in_so16()) {
            *o += &(&v * r);
        }
    }
    let pos = e8_spinor_positions();
    for (k, s) in chiral_indices(5, Chirality::Plus).into_iter().enumerate() {
        out[SO16 + pos[s * 8]] = x.coords[E6_PLUS + k].clone();
    }
    for (k, s) in chiral_indices(5, Chirality::Minus).into_iter().enumerate() {
        out[SO16 + pos[s * 8 + 7]] = x.coords[E6_MINUS + k].clone();
    }
    Ok(LieElement { algebra: Algebra::E8, coords: out })
}

pub fn e6_basis_in_e8() -> Vec<LieElement> {
    (0..E6_DIM).map(|k| embed_e6_in_e8(&LieElement::basis(Algebra::E6, k)).expect("e6")).collect()
}

/// 52 generators of f4 in e6 coordinates: so(9), then (ξ, iᵏ e¹⁰ξ) for each Δ⁺ basis state.
pub fn f4_basis() -> Vec<LieElement> {
    let mut out = Vec::with_capacity(52);
    for (k, (_, qq)) in pairs(10).into_iter().enumerate() {
        if qq < 9 {
            let mut e = LieElement::zero(Algebra::F4);
            e.coords[k] = ExtScalar::one();
            out.push(e);
        }
    }
    let rep = GammaRep::get(5);
    let g = rep.gamma(9);
    let minus: Vec<usize> = chiral_indices(5, Chirality::Minus);
    for (k, s) in chiral_indices(5, Chirality::Plus).into_iter().enumerate() {
        let mut e = LieElement::zero(Algebra::F4);
        e.coords[E6_PLUS + k] = ExtScalar::one();
        // (e⁹ξ)[r] = i^phase[r] ξ[perm[r]]; the single r with perm[r] = s
        let r = (0..rep.size()).find(|&r| g.perm[r] as usize == s).expect("permutation");
        let m = minus.iter().position(|&t| t == r).expect("opposite chirality");
        e.coords[E6_MINUS + m] = ExtScalar::one().mul_i_pow((g.phase[r] + F4_SPINOR_PHASE) % 4);
        out.push(e);
    }
    out
}

/// Ambient table used for centralizers: e8 or e6 (f4 elements are read as e6).
fn ambient_table(a: Algebra) -> Result<&'static StructureConstants> {
    match a {
        Algebra::E8 => StructureConstants::get(Algebra::E8),
        Algebra::E6 | Algebra::F4 => StructureConstants::get(Algebra::E6),
        Algebra::G2 => Err(AtlasError::Invalid("centralizers are computed in e6 or e8".into())),
    }
}

/// Basis of {y : [s, y] = 0 for all s in `sub`} as an exact kernel.
pub fn centralizer(sub: &[LieElement], ambient: Algebra) -> Result<Vec<LieElement>> {
    let table = ambient_table(ambient)?;
    let n = table.dim;
    for s in sub {
        if s.coords.len() != n {
            return Err(AtlasError::DimensionMismatch(format!(
                "{} element is not in {}",
                s.algebra.name(),
                ambient.name()
            )));
        }
    }
    let mut ech = Echelon::untracked(n);
    for s in sub {
        // rows of ad_s: (ad_s)_{k, j} = Σ_i s_i c_{ij}^k
        let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (i, si) in s.coords.iter().enumerate() {
            if si.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in table.entry(i, j) {
                    let e = rows.entry(*k as usize).or_default().entry(j).or_insert_with(ExtScalar::zero);
                    *e += &(si * c);
                }
            }
        }
        for (_, mut r) in rows {
            r.retain(|_, c| !c.is_zero());
            if !r.is_empty() {
                ech.insert(&r);
            }
        }
    }
    let algebra = if ambient == Algebra::F4 { Algebra::E6 } else { ambient };
    Ok(ech.kernel().iter().map(|v| LieElement::from_sparse(algebra, v)).collect())
}

/// True when the two families span the same subspace.
pub fn same_span(a: &[LieElement], b: &[LieElement]) -> bool {
    let n = match (a.first(), b.first()) {
        (Some(x), _) | (None, Some(x)) => x.coords.len(),
        (None, None) => return true,
    };
    let mut ea = Echelon::untracked(n);
    for x in a {
        ea.insert(&x.to_sparse());
    }
    let mut eb = Echelon::untracked(n);
    for x in b {
        eb.insert(&x.to_sparse());
    }
    ea.rank() == eb.rank() && b.iter().all(|x| ea.contains(&x.to_sparse()))
}
