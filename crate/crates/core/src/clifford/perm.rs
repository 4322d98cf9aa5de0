//! Matrices with exactly one entry of the form i^k in every row.

use crate::scalar::ExtScalar;

/// Row form: `(M ψ)[r] = i^phase[r] · ψ[perm[r]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub perm: Vec<u32>,
    pub phase: Vec<u8>,
}

impl SignedPerm {
    pub fn identity(size: usize) -> Self {
        SignedPerm { perm: (0..size as u32).collect(), phase: vec![0; size] }
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    /// `self · rhs`.
    pub fn compose(&self, rhs: &SignedPerm) -> SignedPerm {
        let mut perm = Vec::with_capacity(self.size());
        let mut phase = Vec::with_capacity(self.size());
        for (r, &c) in self.perm.iter().enumerate() {
            perm.push(rhs.perm[c as usize]);
            phase.push((self.phase[r] + rhs.phase[c as usize]) & 3);
        }
        SignedPerm { perm, phase }
    }

    /// Multiply every entry by i^k.
    pub fn times_phase(&self, k: u8) -> SignedPerm {
        SignedPerm {
            perm: self.perm.clone(),
            phase: self.phase.iter().map(|p| (p + k) & 3).collect(),
        }
    }

    pub fn transpose(&self) -> SignedPerm {
        let mut perm = vec![0u32; self.size()];
        let mut phase = vec![0u8; self.size()];
        for (r, &c) in self.perm.iter().enumerate() {
            perm[c as usize] = r as u32;
            phase[c as usize] = self.phase[r];
        }
        SignedPerm { perm, phase }
    }

    /// Inverse: the conjugate transpose.
    pub fn inverse(&self) -> SignedPerm {
        let t = self.transpose();
        SignedPerm { perm: t.perm, phase: t.phase.iter().map(|p| (4 - p) & 3).collect() }
    }

    /// Entry (r, c) as a power of i, or `None` when zero.
    pub fn entry(&self, r: usize, c: usize) -> Option<u8> {
        (self.perm[r] as usize == c).then_some(self.phase[r])
    }

    pub fn apply(&self, v: &[ExtScalar]) -> Vec<ExtScalar> {
        debug_assert_eq!(v.len(), self.size());
        self.perm
            .iter()
            .zip(&self.phase)
            .map(|(&c, &p)| v[c as usize].mul_i_pow(p))
            .collect()
    }

    /// `φᵀ M ψ`.
    pub fn sandwich(&self, phi: &[ExtScalar], psi: &[ExtScalar]) -> ExtScalar {
        let mut acc = ExtScalar::zero();
        for (r, (&c, &p)) in self.perm.iter().zip(&self.phase).enumerate() {
            if phi[r].is_zero() || psi[c as usize].is_zero() {
                continue;
            }
            acc += (&phi[r] * &psi[c as usize]).mul_i_pow(p);
        }
        acc
    }

    /// Diagonal of a diagonal matrix as ±1/±i powers; `None` if not diagonal.
    pub fn diagonal(&self) -> Option<&[u8]> {
        self.perm.iter().enumerate().all(|(r, &c)| r == c as usize).then_some(&self.phase[..])
    }

    pub fn to_dense(&self) -> Vec<Vec<ExtScalar>> {
        let n = self.size();
        let mut m = vec![vec![ExtScalar::zero(); n]; n];
        for (r, (&c, &p)) in self.perm.iter().zip(&self.phase).enumerate() {
            m[r][c as usize] = ExtScalar::one().mul_i_pow(p);
        }
        m
    }
}
