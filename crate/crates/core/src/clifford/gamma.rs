//! Gamma matrices in the tensor-product basis.
//!
//! The basis of the 2ⁿ-dimensional spinor space is labelled by n-bit strings, most
//! significant bit = first tensor factor, bit 0 = |+⟩ (σ₃ = +1), bit 1 = |−⟩.
//! Generator index `i` (0-based) stands for eⁱ⁺¹:
//! `e_{2k}` is σ₃ on factors `0..k`, σ₁ on factor k; `e_{2k+1}` has σ₂ on factor k.

use std::sync::OnceLock;

use super::perm::SignedPerm;

pub const MAX_HALF_DIM: usize = 8;

pub struct GammaRep {
    pub n: usize,
    gammas: Vec<SignedPerm>,
    chirality: SignedPerm,
    charge: SignedPerm,
    /// `e_p e_q` for p < q in lexicographic order.
    pairs: Vec<SignedPerm>,
    /// `C e_i`.
    c_vec: Vec<SignedPerm>,
    /// `C e_p e_q` for p < q.
    c_pairs: Vec<SignedPerm>,
}

/// Position of the pair (p, q), p < q, in lexicographic order among `dim` generators.
pub fn pair_index(dim: usize, p: usize, q: usize) -> usize {
    debug_assert!(p < q && q < dim);
    p * (2 * dim - p - 1) / 2 + (q - p - 1)
}

/// All pairs (p, q), p < q, in lexicographic order.
pub fn pairs(dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(dim * (dim - 1) / 2);
    for p in 0..dim {
        for q in p + 1..dim {
            out.push((p, q));
        }
    }
    out
}

fn build_gamma(n: usize, i: usize) -> SignedPerm {
    let size = 1usize << n;
    let factor = i / 2;
    let flip = 1u32 << (n - 1 - factor);
    // bits of the factors carrying σ₃
    let zmask: u32 = ((1u32 << n) - 1) & !((1u32 << (n - factor)) - 1);
    let mut perm = Vec::with_capacity(size);
    let mut phase = Vec::with_capacity(size);
    for r in 0..size as u32 {
        perm.push(r ^ flip);
        let zsign = ((r & zmask).count_ones() & 1) as u8 * 2;
        let local = if i % 2 == 0 {
            0
        } else if r & flip == 0 {
            3 // σ₂[0][1] = −i
        } else {
            1 // σ₂[1][0] = i
        };
        phase.push((zsign + local) & 3);
    }
    SignedPerm { perm, phase }
}

impl GammaRep {
    fn build(n: usize) -> GammaRep {
        assert!((1..=MAX_HALF_DIM).contains(&n));
        let size = 1usize << n;
        let dim = 2 * n;
        let gammas: Vec<SignedPerm> = (0..dim).map(|i| build_gamma(n, i)).collect();

        // (−i)ⁿ e₁⋯e₂ₙ
        let mut chirality = SignedPerm::identity(size);
        for g in &gammas {
            chirality = chirality.compose(g);
        }
        let chirality = chirality.times_phase(((3 * n) % 4) as u8);

        let mut charge = SignedPerm::identity(size);
        if n % 2 == 0 {
            for g in gammas.iter().skip(1).step_by(2) {
                charge = charge.compose(g);
            }
        } else {
            for g in gammas.iter().step_by(2) {
                charge = charge.compose(g);
            }
            if ((n - 1) / 2) % 2 == 1 {
                charge = charge.times_phase(2);
            }
        }

        let pairs_list = pairs(dim);
        let pair_mats: Vec<SignedPerm> =
            pairs_list.iter().map(|&(p, q)| gammas[p].compose(&gammas[q])).collect();
        let c_vec = gammas.iter().map(|g| charge.compose(g)).collect();
        let c_pairs = pair_mats.iter().map(|m| charge.compose(m)).collect();
        GammaRep { n, gammas, chirality, charge, pairs: pair_mats, c_vec, c_pairs }
    }

    /// Shared representation with 2n generators acting on 2ⁿ-dimensional spinors.
    pub fn get(n: usize) -> &'static GammaRep {
        static REPS: [OnceLock<GammaRep>; MAX_HALF_DIM + 1] = [const { OnceLock::new() }; MAX_HALF_DIM + 1];
        assert!((1..=MAX_HALF_DIM).contains(&n), "half dimension {n} unsupported");
        REPS[n].get_or_init(|| GammaRep::build(n))
    }

    /// Representation for the even vector dimension `dim`.
    pub fn for_dim(dim: usize) -> crate::Result<&'static GammaRep> {
        if dim % 2 != 0 || dim == 0 || dim > 2 * MAX_HALF_DIM {
            return Err(crate::AtlasError::UnsupportedDimension(dim));
        }
        Ok(GammaRep::get(dim / 2))
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn size(&self) -> usize {
        1 << self.n
    }

    pub fn gamma(&self, i: usize) -> &SignedPerm {
        &self.gammas[i]
    }

    pub fn chirality(&self) -> &SignedPerm {
        &self.chirality
    }

    pub fn charge(&self) -> &SignedPerm {
        &self.charge
    }

    pub fn pair(&self, p: usize, q: usize) -> &SignedPerm {
        &self.pairs[pair_index(self.dim(), p, q)]
    }

    pub fn c_vec(&self, i: usize) -> &SignedPerm {
        &self.c_vec[i]
    }

    pub fn c_pair(&self, p: usize, q: usize) -> &SignedPerm {
        &self.c_pairs[pair_index(self.dim(), p, q)]
    }

    /// Product of generators in ascending index order over the bits of `mask`.
    pub fn blade(&self, mask: u32) -> SignedPerm {
        let mut m = SignedPerm::identity(self.size());
        for i in 0..self.dim() {
            if mask >> i & 1 == 1 {
                m = m.compose(&self.gammas[i]);
            }
        }
        m
    }

    /// `C · e^I`.
    pub fn c_blade(&self, mask: u32) -> SignedPerm {
        match mask.count_ones() {
            0 => self.charge.clone(),
            1 => self.c_vec[mask.trailing_zeros() as usize].clone(),
            _ => self.charge.compose(&self.blade(mask)),
        }
    }

    /// +1 on Δ⁺ basis states.
    pub fn chirality_sign(&self, index: usize) -> i8 {
        if (index as u32).count_ones() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExtScalar;

    fn kron(a: &[Vec<ExtScalar>], b: &[Vec<ExtScalar>]) -> Vec<Vec<ExtScalar>> {
        let (n, m) = (a.len(), b.len());
        let mut out = vec![vec![ExtScalar::zero(); n * m]; n * m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        out[i * m + k][j * m + l] = &a[i][j] * &b[k][l];
                    }
                }
            }
        }
        out
    }

    fn int(x: i64) -> ExtScalar {
        ExtScalar::from_int(x)
    }

    fn pauli(k: usize) -> Vec<Vec<ExtScalar>> {
        let i = ExtScalar::i();
        match k {
            0 => vec![vec![int(1), int(0)], vec![int(0), int(1)]],
            1 => vec![vec![int(0), int(1)], vec![int(1), int(0)]],
            2 => vec![vec![int(0), -&i], vec![i.clone(), int(0)]],
            _ => vec![vec![int(1), int(0)], vec![int(0), int(-1)]],
        }
    }

    fn tensor(factors: &[usize]) -> Vec<Vec<ExtScalar>> {
        let mut m = pauli(factors[0]);
        for &f in &factors[1..] {
            m = kron(&m, &pauli(f));
        }
        m
    }

    #[test]
    fn gammas_match_kronecker_products() {
        for n in 1..=4 {
            let rep = GammaRep::get(n);
            for i in 0..2 * n {
                let k = i / 2;
                let mut f = vec![3; k];
                f.push(if i % 2 == 0 { 1 } else { 2 });
                f.extend(std::iter::repeat(0).take(n - k - 1));
                assert_eq!(rep.gamma(i).to_dense(), tensor(&f), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn clifford_relations() {
        for n in 1..=5 {
            let rep = GammaRep::get(n);
            let id = SignedPerm::identity(rep.size());
            for i in 0..rep.dim() {
                assert_eq!(rep.gamma(i).compose(rep.gamma(i)), id);
                for j in i + 1..rep.dim() {
                    let ab = rep.gamma(i).compose(rep.gamma(j));
                    let ba = rep.gamma(j).compose(rep.gamma(i));
                    assert_eq!(ab, ba.times_phase(2));
                }
            }
        }
    }

    #[test]
    fn chirality_is_sigma3_tensor_power() {
        for n in 1..=8 {
            let rep = GammaRep::get(n);
            let d = rep.chirality().diagonal().expect("diagonal");
            for (r, &p) in d.iter().enumerate() {
                let expected = if rep.chirality_sign(r) == 1 { 0 } else { 2 };
                assert_eq!(p, expected);
            }
        }
    }

    #[test]
    fn d8_charge_conjugation_tensor_form() {
        // C = σ₁ ⊗ iσ₂ ⊗ σ₁ ⊗ iσ₂
        let rep = GammaRep::get(4);
        let isig2 = {
            let s = pauli(2);
            s.iter().map(|row| row.iter().map(|x| x * &ExtScalar::i()).collect()).collect::<Vec<_>>()
        };
        let expected = kron(&kron(&kron(&pauli(1), &isig2), &pauli(1)), &isig2);
        assert_eq!(rep.charge().to_dense(), expected);
    }

    #[test]
    fn pair_index_is_lexicographic() {
        for dim in [8, 10, 16] {
            for (k, (p, q)) in pairs(dim).into_iter().enumerate() {
                assert_eq!(pair_index(dim, p, q), k);
            }
        }
    }
}
