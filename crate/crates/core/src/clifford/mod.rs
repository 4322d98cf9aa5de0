//! Clifford algebra of ℂ^{2n} with the standard metric, its spinor module and pairings.
//!
//! Generator indices are 0-based: index `i` is eⁱ⁺¹.

mod checks;
mod gamma;
mod perm;
mod spinor;

pub use checks::{blade_matrix_failure, charge_transpose_failure, generator_failure, run_checks, SUITE_DIMS};
pub use gamma::{pair_index, pairs, GammaRep, MAX_HALF_DIM};
pub use perm::SignedPerm;
pub use spinor::{chiral_indices, Chirality, Spinor};

use std::collections::BTreeMap;

use crate::error::{AtlasError, Result};
use crate::scalar::ExtScalar;

/// A coefficient times e^{i₁}⋯e^{iₖ} with ascending indices taken from the bits of `mask`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blade {
    pub mask: u32,
    pub coeff: ExtScalar,
}

/// Sign of e^I e^J = ± e^{I△J}: the parity of pairs i ∈ I, j ∈ J with i > j.
pub fn reorder_sign(a: u32, b: u32) -> i32 {
    let mut swaps = 0;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Blade {
    pub fn new(mask: u32, coeff: ExtScalar) -> Self {
        Blade { mask, coeff }
    }

    pub fn unit(mask: u32) -> Self {
        Blade { mask, coeff: ExtScalar::one() }
    }

    /// Blade from 0-based indices, sorting them and tracking the sign.
    pub fn from_indices(indices: &[usize], dim: usize) -> Result<Self> {
        let mut mask = 0u32;
        let mut sign = 1;
        for &i in indices {
            if i >= dim {
                return Err(AtlasError::IndexOutOfRange(format!("generator {i} in dimension {dim}")));
            }
            let bit = 1u32 << i;
            sign *= reorder_sign(mask, bit);
            mask ^= bit;
        }
        let coeff = if sign > 0 { ExtScalar::one() } else { -ExtScalar::one() };
        Ok(Blade { mask, coeff })
    }

    pub fn grade(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn indices(&self) -> Vec<usize> {
        mask_indices(self.mask)
    }

    pub fn mul(&self, rhs: &Blade) -> Blade {
        let s = reorder_sign(self.mask, rhs.mask);
        let c = &self.coeff * &rhs.coeff;
        Blade { mask: self.mask ^ rhs.mask, coeff: if s > 0 { c } else { -c } }
    }

    /// Reversal anti-automorphism: grade k picks up (−1)^{k(k−1)/2}.
    pub fn reverse(&self) -> Blade {
        let k = self.grade();
        let s = (k * k.saturating_sub(1) / 2) % 2;
        Blade { mask: self.mask, coeff: if s == 0 { self.coeff.clone() } else { -&self.coeff } }
    }
}

pub fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Matrix of a blade: the unit product in ascending order and the coefficient.
pub fn blade_matrix(x: &Blade, rep: &GammaRep) -> Result<(ExtScalar, SignedPerm)> {
    if x.mask >> rep.dim() != 0 {
        return Err(AtlasError::IndexOutOfRange(format!(
            "blade mask {:#b} in dimension {}",
            x.mask,
            rep.dim()
        )));
    }
    Ok((x.coeff.clone(), rep.blade(x.mask)))
}

/// Sparse multivector: mask ↦ coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliffordElement {
    pub terms: BTreeMap<u32, ExtScalar>,
}

impl CliffordElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_blade(b: &Blade) -> Self {
        let mut e = Self::zero();
        e.add_blade(b);
        e
    }

    /// Σ vᵢ eⁱ.
    pub fn vector(v: &[ExtScalar]) -> Self {
        let mut e = Self::zero();
        for (i, c) in v.iter().enumerate() {
            e.add_blade(&Blade::new(1 << i, c.clone()));
        }
        e
    }

    pub fn add_blade(&mut self, b: &Blade) {
        if b.coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(b.mask).or_default();
        *entry += &b.coeff;
        if entry.is_zero() {
            self.terms.remove(&b.mask);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn blades(&self) -> impl Iterator<Item = Blade> + '_ {
        self.terms.iter().map(|(&m, c)| Blade::new(m, c.clone()))
    }

    pub fn mul(&self, rhs: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for a in self.blades() {
            for b in rhs.blades() {
                out.add_blade(&a.mul(&b));
            }
        }
        out
    }

    pub fn add(&self, rhs: &CliffordElement) -> CliffordElement {
        let mut out = self.clone();
        for b in rhs.blades() {
            out.add_blade(&b);
        }
        out
    }

    pub fn scale(&self, c: &ExtScalar) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for b in self.blades() {
            out.add_blade(&Blade::new(b.mask, &b.coeff * c));
        }
        out
    }

    pub fn reverse(&self) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for b in self.blades() {
            out.add_blade(&b.reverse());
        }
        out
    }

    /// Dense matrix of the element in the given representation.
    pub fn to_dense(&self, rep: &GammaRep) -> Result<Vec<Vec<ExtScalar>>> {
        let n = rep.size();
        let mut m = vec![vec![ExtScalar::zero(); n]; n];
        for b in self.blades() {
            let (c, p) = blade_matrix(&b, rep)?;
            for r in 0..n {
                let col = p.perm[r] as usize;
                m[r][col] += c.mul_i_pow(p.phase[r]);
            }
        }
        Ok(m)
    }

    pub fn act(&self, psi: &Spinor) -> Result<Spinor> {
        let rep = GammaRep::get(psi.n);
        let mut out = vec![ExtScalar::zero(); rep.size()];
        let mut parity = None;
        for b in self.blades() {
            let (c, p) = blade_matrix(&b, rep)?;
            let moved = p.apply(&psi.coeffs);
            for (o, m) in out.iter_mut().zip(moved) {
                if !m.is_zero() {
                    *o += &(&m * &c);
                }
            }
            let par = b.grade() % 2;
            parity = match parity {
                None => Some(par),
                Some(x) if x == par => Some(x),
                _ => Some(2),
            };
        }
        let chirality = match parity {
            None | Some(0) => psi.chirality,
            Some(1) => psi.chirality.flip(),
            _ => Chirality::Mixed,
        };
        Ok(Spinor::raw(psi.n, chirality, out))
    }
}

/// Bilinear pairing (φ e^I ψ) = φᵀ C e^I ψ, no conjugation.
pub fn pair_bilinear(phi: &Spinor, mask: u32, psi: &Spinor) -> Result<ExtScalar> {
    if phi.n != psi.n {
        return Err(AtlasError::DimensionMismatch(format!("spinors of half-dimension {} and {}", phi.n, psi.n)));
    }
    let rep = GammaRep::get(psi.n);
    if mask >> rep.dim() != 0 {
        return Err(AtlasError::IndexOutOfRange(format!("blade mask {mask:#b}")));
    }
    // C has grade n; the pairing is nonzero only when χ(φ) = χ(ψ)·(−1)^{k+n}.
    let flips = (mask.count_ones() as usize + psi.n) % 2 == 1;
    if let (Some(a), Some(b)) = (phi.chirality.sign(), psi.chirality.sign()) {
        let expected = if flips { -b } else { b };
        if a != expected {
            return Err(AtlasError::Chirality(format!(
                "pairing {:?} with e^I ψ, |I| = {}, ψ {:?}, n = {}",
                phi.chirality,
                mask.count_ones(),
                psi.chirality,
                psi.n
            )));
        }
    }
    Ok(rep.c_blade(mask).sandwich(&phi.coeffs, &psi.coeffs))
}

/// Hermitian pairing ⟨φ, ψ⟩ = φ†ψ.
pub fn pair_hermitian(phi: &Spinor, psi: &Spinor) -> ExtScalar {
    phi.coeffs.iter().zip(&psi.coeffs).map(|(a, b)| &a.conjugate() * b).sum()
}

/// ⟨φ, e^I ψ⟩ = φ† e^I ψ.
pub fn pair_hermitian_blade(phi: &Spinor, mask: u32, psi: &Spinor) -> ExtScalar {
    let rep = GammaRep::get(psi.n);
    let conj: Vec<ExtScalar> = phi.coeffs.iter().map(|c| c.conjugate()).collect();
    rep.blade(mask).sandwich(&conj, &psi.coeffs)
}

/// Dense matrix of an antisymmetric coefficient array acting on vectors:
/// xᵖᑫ = E_{pq} − E_{qp}, so that xᵖᑫ∘eᑫ = eᵖ.
pub fn so_vector_matrix(coeffs: &[ExtScalar], dim: usize) -> Vec<Vec<ExtScalar>> {
    let mut m = vec![vec![ExtScalar::zero(); dim]; dim];
    for (k, (p, q)) in pairs(dim).into_iter().enumerate() {
        if coeffs[k].is_zero() {
            continue;
        }
        m[p][q] += &coeffs[k];
        m[q][p] -= &coeffs[k];
    }
    m
}

/// Vector action of Σ a_{pq} xᵖᑫ.
pub fn so_act_vector(coeffs: &[ExtScalar], v: &[ExtScalar]) -> Vec<ExtScalar> {
    let dim = v.len();
    let mut out = vec![ExtScalar::zero(); dim];
    for (k, (p, q)) in pairs(dim).into_iter().enumerate() {
        let a = &coeffs[k];
        if a.is_zero() {
            continue;
        }
        if !v[q].is_zero() {
            out[p] += &(a * &v[q]);
        }
        if !v[p].is_zero() {
            out[q] -= &(a * &v[p]);
        }
    }
    out
}

/// Spin action of Σ a_{pq} xᵖᑫ, with xᵖᑫ∘ψ = ½ eᵖeᑫ ψ.
pub fn so_act_spinor(coeffs: &[ExtScalar], psi: &Spinor) -> Spinor {
    let rep = GammaRep::get(psi.n);
    let half = crate::scalar::q(1, 2);
    let mut out = vec![ExtScalar::zero(); rep.size()];
    for (k, (p, q)) in pairs(rep.dim()).into_iter().enumerate() {
        let a = &coeffs[k];
        if a.is_zero() {
            continue;
        }
        let c = a * &half;
        let m = rep.pair(p, q);
        for r in 0..rep.size() {
            let src = &psi.coeffs[m.perm[r] as usize];
            if !src.is_zero() {
                out[r] += &(src * &c).mul_i_pow(m.phase[r]);
            }
        }
    }
    Spinor::raw(psi.n, psi.chirality, out)
}

/// The so bracket of two antisymmetric coefficient arrays.
pub fn so_bracket(a: &[ExtScalar], b: &[ExtScalar], dim: usize) -> Vec<ExtScalar> {
    let ma = so_vector_matrix(a, dim);
    let mb = so_vector_matrix(b, dim);
    let mut out = vec![ExtScalar::zero(); a.len()];
    for (k, (p, q)) in pairs(dim).into_iter().enumerate() {
        let mut acc = ExtScalar::zero();
        for r in 0..dim {
            if !ma[p][r].is_zero() && !mb[r][q].is_zero() {
                acc += &(&ma[p][r] * &mb[r][q]);
            }
            if !mb[p][r].is_zero() && !ma[r][q].is_zero() {
                acc -= &(&mb[p][r] * &ma[r][q]);
            }
        }
        out[k] = acc;
    }
    out
}

/// Σ vᵢ eⁱ ψ.
pub fn vector_act(v: &[ExtScalar], psi: &Spinor) -> Spinor {
    let rep = GammaRep::get(psi.n);
    assert_eq!(v.len(), rep.dim());
    let mut out = vec![ExtScalar::zero(); rep.size()];
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        let g = rep.gamma(i);
        for r in 0..rep.size() {
            let src = &psi.coeffs[g.perm[r] as usize];
            if !src.is_zero() {
                out[r] += &(src * vi).mul_i_pow(g.phase[r]);
            }
        }
    }
    Spinor::raw(psi.n, psi.chirality.flip(), out)
}

/// The vector (φ eⁱ ψ) eⁱ.
pub fn bilinear_vector(phi: &Spinor, psi: &Spinor) -> Vec<ExtScalar> {
    let rep = GammaRep::get(psi.n);
    (0..rep.dim()).map(|i| rep.c_vec(i).sandwich(&phi.coeffs, &psi.coeffs)).collect()
}

/// Components (φ eᵖeᑫ ψ) for p < q.
pub fn bilinear_pairs(phi: &Spinor, psi: &Spinor) -> Vec<ExtScalar> {
    let rep = GammaRep::get(psi.n);
    pairs(rep.dim()).into_iter().map(|(p, q)| rep.c_pair(p, q).sandwich(&phi.coeffs, &psi.coeffs)).collect()
}

pub fn dot(u: &[ExtScalar], v: &[ExtScalar]) -> ExtScalar {
    u.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::scalar::q;

    fn random_element(rng: &mut Rng, dim: usize, terms: usize) -> CliffordElement {
        let mut e = CliffordElement::zero();
        for _ in 0..terms {
            let mask = rng.next_u32() & ((1u32 << dim) - 1);
            e.add_blade(&Blade::new(mask, rng.gaussian()));
        }
        e
    }

    fn mat_mul(a: &[Vec<ExtScalar>], b: &[Vec<ExtScalar>]) -> Vec<Vec<ExtScalar>> {
        let n = a.len();
        let mut out = vec![vec![ExtScalar::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !b[k][j].is_zero() {
                        out[i][j] += &(&a[i][k] * &b[k][j]);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn reorder_sign_examples() {
        // e2 e1 = −e1 e2
        assert_eq!(reorder_sign(0b10, 0b01), -1);
        assert_eq!(reorder_sign(0b01, 0b10), 1);
        // e1e2 · e1e2 = −1
        let b = Blade::unit(0b11);
        let sq = b.mul(&b);
        assert_eq!(sq.mask, 0);
        assert_eq!(sq.coeff, ExtScalar::from_int(-1));
    }

    #[test]
    fn blade_product_is_homomorphism() {
        let mut rng = Rng::new(11);
        for n in [4usize, 5] {
            let rep = GammaRep::get(n);
            for _ in 0..20 {
                let a = random_element(&mut rng, rep.dim(), 3);
                let b = random_element(&mut rng, rep.dim(), 3);
                let lhs = a.mul(&b).to_dense(rep).unwrap();
                let rhs = mat_mul(&a.to_dense(rep).unwrap(), &b.to_dense(rep).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn charge_conjugation_transposes_to_reversal() {
        let mut rng = Rng::new(5);
        for n in [4usize, 5] {
            let rep = GammaRep::get(n);
            let c = rep.charge().to_dense();
            let cinv = rep.charge().inverse().to_dense();
            for _ in 0..10 {
                let x = random_element(&mut rng, rep.dim(), 4);
                let xt: Vec<Vec<ExtScalar>> = {
                    let d = x.to_dense(rep).unwrap();
                    (0..d.len()).map(|i| (0..d.len()).map(|j| d[j][i].clone()).collect()).collect()
                };
                let lhs = mat_mul(&mat_mul(&cinv, &xt), &c);
                assert_eq!(lhs, x.reverse().to_dense(rep).unwrap());
            }
        }
    }

    #[test]
    fn spin_action_rotates_vectors() {
        // [¼ e^[1 e^2], e¹] = −e²
        let rep = GammaRep::get(4);
        let mut coeffs = vec![ExtScalar::zero(); 28];
        coeffs[pair_index(8, 0, 1)] = ExtScalar::one();
        let mut e1 = vec![ExtScalar::zero(); 8];
        e1[0] = ExtScalar::one();
        let out = so_act_vector(&coeffs, &e1);
        assert_eq!(out[1], ExtScalar::from_int(-1));
        assert!(out.iter().enumerate().all(|(i, x)| i == 1 || x.is_zero()));

        // matches the commutator with ½ e¹e² in the Clifford algebra
        let half_e12 = CliffordElement::from_blade(&Blade::new(0b11, q(1, 2)));
        let v = CliffordElement::vector(&e1);
        let comm = half_e12.mul(&v).add(&v.mul(&half_e12).scale(&ExtScalar::from_int(-1)));
        assert_eq!(comm, CliffordElement::vector(&out));
        let _ = rep;
    }

    #[test]
    fn so_bracket_structure() {
        // [x¹², x²³] = x¹³
        let dim = 4;
        let unit = |p, q| {
            let mut c = vec![ExtScalar::zero(); 6];
            c[pair_index(dim, p, q)] = ExtScalar::one();
            c
        };
        assert_eq!(so_bracket(&unit(0, 1), &unit(1, 2), dim), unit(0, 2));
    }

    #[test]
    fn pairing_chirality_rules() {
        let mut rng = Rng::new(3);
        let plus = Spinor::random(5, Chirality::Plus, &mut rng);
        let minus = Spinor::random(5, Chirality::Minus, &mut rng);
        // n odd: scalar pairing couples opposite chiralities
        assert!(pair_bilinear(&plus, 0, &minus).is_ok());
        assert!(pair_bilinear(&plus, 0, &plus).is_err());
        assert!(pair_bilinear(&plus, 1, &plus).is_ok());
    }
}
