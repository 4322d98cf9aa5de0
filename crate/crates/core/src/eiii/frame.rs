//! Pure spinors in ten dimensions: the complex structure, the holomorphic volume forms,
//! and the (f, x, K) decomposition of an arbitrary Δ⁺ spinor.

use crate::clifford::{
    bilinear_vector, pair_bilinear, pair_hermitian, pair_hermitian_blade, pairs, vector_act, Chirality, GammaRep,
    Spinor,
};
use crate::error::{AtlasError, Result};
use crate::linalg::{rank_of, SparseRow};
use crate::scalar::{q, ExtScalar};

pub type Matrix = Vec<Vec<ExtScalar>>;

/// Antisymmetric rank-5 array on ten indices, stored by the bit mask of its ascending index set.
pub type Form5 = Vec<ExtScalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureSpinorFrame {
    pub psi0: Spinor,
    pub j: Matrix,
    pub omega: Form5,
    pub omega_bar: Form5,
}

/// Ten-bit masks with the given popcount, ascending.
pub fn masks(k: u32) -> Vec<u32> {
    (0u32..1 << 10).filter(|m| m.count_ones() == k).collect()
}

/// Sign of the permutation sorting `idx`; zero on repeated indices.
pub fn perm_sign(idx: &[usize]) -> i64 {
    let mut s = 1;
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if idx[a] == idx[b] {
                return 0;
            }
            if idx[a] > idx[b] {
                s = -s;
            }
        }
    }
    s
}

/// Component of a stored 5-form at an arbitrary index tuple.
pub fn form_component(form: &Form5, idx: &[usize]) -> ExtScalar {
    let s = perm_sign(idx);
    if s == 0 {
        return ExtScalar::zero();
    }
    let mask = idx.iter().fold(0u32, |m, &i| m | 1 << i);
    &form[mask as usize] * &ExtScalar::from_int(s)
}

/// The standard pure spinor: the basis state |+++++⟩ (index 0).
pub fn standard_psi0() -> Spinor {
    Spinor::basis(5, 0)
}

/// True iff (ψ eⁱ ψ) = 0 for all ten i.
pub fn is_pure(psi: &Spinor) -> bool {
    bilinear_vector(psi, psi).iter().all(|c| c.is_zero())
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { ExtScalar::one() } else { ExtScalar::zero() }).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, x)| !x.is_zero() && !b[*k][j].is_zero())
                        .map(|(k, x)| x * &b[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[ExtScalar]) -> Vec<ExtScalar> {
    a.iter().map(|row| crate::clifford::dot(row, v)).collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let n = a.first().map_or(0, |r| r.len());
    (0..n).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

fn lin(a: &Matrix, ca: &ExtScalar, b: &Matrix, cb: &ExtScalar) -> Matrix {
    a.iter().zip(b).map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| &(x * ca) + &(y * cb)).collect()).collect()
}

pub fn matrix_rank(a: &Matrix) -> usize {
    let ncols = a.first().map_or(0, |r| r.len());
    let rows: Vec<SparseRow> = a
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect())
        .collect();
    rank_of(&rows, ncols)
}

impl PureSpinorFrame {
    /// Projector ½(1 − iJ) onto the +i eigenspace of J, the (1,0) vectors.
    pub fn p10(&self) -> Matrix {
        lin(&identity(10), &q(1, 2), &self.j, &(&ExtScalar::i() * &q(-1, 2)))
    }

    /// Projector ½(1 + iJ) onto the −i eigenspace, the (0,1) vectors.
    pub fn p01(&self) -> Matrix {
        lin(&identity(10), &q(1, 2), &self.j, &(&ExtScalar::i() * &q(1, 2)))
    }

    /// (1/5!) Ω^{i₁…i₅} Ω̄^{i₁…i₅}.
    pub fn contraction(&self) -> ExtScalar {
        masks(5).into_iter().map(|m| &self.omega[m as usize] * &self.omega_bar[m as usize]).sum()
    }

    /// Failure witness for (1/4!)⟨ψ e^{ijkl} ψ⟩ e∧e∧e∧e = −½ J∧J, with J = Σ_{i<j} J_{ij} eⁱ∧eʲ.
    pub fn rank4_identity(&self) -> Option<String> {
        for m in masks(4) {
            let idx: Vec<usize> = (0..10).filter(|i| m >> i & 1 == 1).collect();
            let lhs = pair_hermitian_blade(&self.psi0, m, &self.psi0);
            let rhs = -&pfaffian4(&self.j, &idx);
            if lhs != rhs {
                return Some(format!("component {idx:?}: {lhs} vs {rhs}"));
            }
        }
        None
    }

    /// Σ_{pqrs} Ω̄^{ipqrs} K^{pq} K^{rs}, a ten-vector.
    pub fn omega_bar_kk(&self, k: &Matrix) -> Vec<ExtScalar> {
        let eight = ExtScalar::from_int(8);
        let mut out = vec![ExtScalar::zero(); 10];
        for m in masks(4) {
            let idx: Vec<usize> = (0..10).filter(|i| m >> i & 1 == 1).collect();
            let pf = pfaffian4(k, &idx);
            if pf.is_zero() {
                continue;
            }
            let pf8 = &pf * &eight;
            for (i, o) in out.iter_mut().enumerate() {
                if m >> i & 1 == 1 {
                    continue;
                }
                let mut full = vec![i];
                full.extend(&idx);
                let c = form_component(&self.omega_bar, &full);
                if !c.is_zero() {
                    *o += &(&c * &pf8);
                }
            }
        }
        out
    }
}

/// K_ab K_cd − K_ac K_bd + K_ad K_bc.
fn pfaffian4(k: &Matrix, idx: &[usize]) -> ExtScalar {
    let (a, b, c, d) = (idx[0], idx[1], idx[2], idx[3]);
    &(&(&k[a][b] * &k[c][d]) - &(&k[a][c] * &k[b][d])) + &(&k[a][d] * &k[b][c])
}

/// J, Ω and Ω̄ of a normalised pure spinor.
pub fn pure_frame(psi0: &Spinor) -> Result<PureSpinorFrame> {
    if psi0.n != 5 || psi0.chirality != Chirality::Plus {
        return Err(AtlasError::Chirality("a pure spinor frame needs a ten-dimensional Δ⁺ spinor".into()));
    }
    if !is_pure(psi0) {
        return Err(AtlasError::ChartPrecondition("spinor is not pure".into()));
    }
    if !pair_hermitian(psi0, psi0).is_one() {
        return Err(AtlasError::ChartPrecondition("pure spinor is not normalised".into()));
    }
    let i = ExtScalar::i();
    let mut j = vec![vec![ExtScalar::zero(); 10]; 10];
    for (p, qq) in pairs(10) {
        // Jv = (i/2)⟨ψ,[eⁱ,v]ψ⟩eⁱ gives J_{pq} = i⟨ψ, eᵖeᑫ ψ⟩
        let c = &i * &pair_hermitian_blade(psi0, 1 << p | 1 << qq, psi0);
        j[qq][p] = -&c;
        j[p][qq] = c;
    }
    let norm = &ExtScalar::sqrt2() * &q(1, 8);
    let cc = psi0.charge_conjugate();
    let mut omega = vec![ExtScalar::zero(); 1 << 10];
    let mut omega_bar = vec![ExtScalar::zero(); 1 << 10];
    for m in masks(5) {
        omega[m as usize] = &norm * &pair_hermitian_blade(psi0, m, &cc);
        omega_bar[m as usize] = &norm * &pair_bilinear(psi0, m, psi0)?;
    }
    Ok(PureSpinorFrame { psi0: psi0.clone(), j, omega, omega_bar })
}

/// ψ = f ψ₀ − ⅛ K^{ij}eⁱʲ ψ₀ + ½ x C ψ₀*.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub f: ExtScalar,
    pub x: Vec<ExtScalar>,
    pub k: Matrix,
}

/// Σ_{i,j} K^{ij} eⁱeʲ ψ over all ordered pairs.
pub fn two_form_act(k: &Matrix, psi: &Spinor) -> Spinor {
    let rep = GammaRep::get(psi.n);
    let mut out = vec![ExtScalar::zero(); rep.size()];
    for (p, qq) in pairs(rep.dim()) {
        let c = &(&k[p][qq] - &k[qq][p]);
        if c.is_zero() {
            continue;
        }
        let m = rep.pair(p, qq);
        for r in 0..rep.size() {
            let src = &psi.coeffs[m.perm[r] as usize];
            if !src.is_zero() {
                out[r] += &(src * c).mul_i_pow(m.phase[r]);
            }
        }
    }
    Spinor { n: psi.n, chirality: psi.chirality, coeffs: out }
}

/// f = ⟨ψ₀ψ⟩, x = (ψ₀eⁱψ)eⁱ, K^{ij} = ⟨ψ₀eⁱʲψ⟩ − f⟨ψ₀eⁱʲψ₀⟩.
pub fn pure_decompose(psi: &Spinor, frame: &PureSpinorFrame) -> Decomposition {
    let psi0 = &frame.psi0;
    let f = pair_hermitian(psi0, psi);
    let x = bilinear_vector(psi0, psi);
    let mut k = vec![vec![ExtScalar::zero(); 10]; 10];
    for (p, qq) in pairs(10) {
        let m = 1 << p | 1 << qq;
        let c = &pair_hermitian_blade(psi0, m, psi) - &(&f * &pair_hermitian_blade(psi0, m, psi0));
        k[qq][p] = -&c;
        k[p][qq] = c;
    }
    Decomposition { f, x, k }
}

/// f ψ₀ − ⅛ K ψ₀ + ½ x C ψ₀*.
pub fn reconstruct(d: &Decomposition, frame: &PureSpinorFrame) -> Spinor {
    let psi0 = &frame.psi0;
    let a = psi0.scale(&d.f);
    let b = two_form_act(&d.k, psi0).scale(&q(-1, 8));
    let c = vector_act(&d.x, &psi0.charge_conjugate()).scale(&q(1, 2));
    let mut out = a.add(&b).add(&c);
    out.chirality = Chirality::Plus;
    out
}

/// (ψeⁱψ)eⁱ − [2fx − Kx − (1/(8√2)) Ω̄^{ipqrs}K^{pq}K^{rs} eⁱ]; zero when the identity holds.
pub fn bilinear_identity_residual(psi: &Spinor, frame: &PureSpinorFrame) -> Vec<ExtScalar> {
    let d = pure_decompose(psi, frame);
    let lhs = bilinear_vector(psi, psi);
    let kx = mat_vec(&d.k, &d.x);
    let okk = frame.omega_bar_kk(&d.k);
    let c = &ExtScalar::inv_sqrt2() * &q(1, 8);
    (0..10)
        .map(|i| {
            let rhs = &(&(&(&d.f * &d.x[i]) * &ExtScalar::from_int(2)) - &kx[i]) - &(&okk[i] * &c);
            &lhs[i] - &rhs
        })
        .collect()
}

/// The constrained part of (K, ū): K ↦ M K Mᵀ with M the projector onto the vectors K may not kill,
/// ū ↦ its (0,1) part. `projected` reports whether anything changed.
#[derive(Clone, Debug)]
pub struct Constrained {
    pub k: Matrix,
    pub ubar: Vec<ExtScalar>,
    pub projected: bool,
}

/// K is (2,0): it annihilates every (1,0) vector.
pub fn is_type_20(frame: &PureSpinorFrame, k: &Matrix) -> bool {
    let antisym = (0..10).all(|a| (0..10).all(|b| (&k[a][b] + &k[b][a]).is_zero()));
    antisym && mat_mul(k, &frame.p10()).iter().all(|r| r.iter().all(|c| c.is_zero()))
}

/// ū is (0,1): Jū = −iū.
pub fn is_type_01(frame: &PureSpinorFrame, u: &[ExtScalar]) -> bool {
    let ju = mat_vec(&frame.j, u);
    ju.iter().zip(u).all(|(a, b)| (a + &(&ExtScalar::i() * b)).is_zero())
}

pub fn constrain(frame: &PureSpinorFrame, k: &Matrix, ubar: &[ExtScalar]) -> Constrained {
    // P₁₀ᵀ = P₀₁, so P₁₀ K P₀₁ is antisymmetric and kills (1,0) vectors
    let m = frame.p10();
    let kp = mat_mul(&mat_mul(&m, k), &transpose(&m));
    let up = mat_vec(&frame.p01(), ubar);
    let projected = kp != *k || up != ubar;
    Constrained { k: kp, ubar: up, projected }
}

/// v = −½f⁻¹Kū + ū, ψ = ψ₀f − ⅛Kψ₀ + (1/√2)f⁻¹(sū + (1/32)Ω̄^{ipqrs}K^{pq}K^{rs}eⁱ)Cψ₀*.
pub fn chart_xinfty(
    frame: &PureSpinorFrame,
    f: &ExtScalar,
    k: &Matrix,
    ubar: &[ExtScalar],
    s: &ExtScalar,
) -> Result<crate::rep27::Vector27> {
    if k.len() != 10 || k.iter().any(|r| r.len() != 10) || ubar.len() != 10 {
        return Err(AtlasError::DimensionMismatch("K must be 10×10 and ū a ten-vector".into()));
    }
    let finv = f.inverse().map_err(|_| AtlasError::ChartPrecondition("f = 0 is outside the chart".into()))?;
    if !is_type_20(frame, k) {
        return Err(AtlasError::ChartPrecondition("K is not an antisymmetric (2,0) tensor".into()));
    }
    if !is_type_01(frame, ubar) {
        return Err(AtlasError::ChartPrecondition("ū is not of type (0,1)".into()));
    }
    let ku = mat_vec(k, ubar);
    let half_finv = &finv * &q(-1, 2);
    let v: Vec<ExtScalar> = ku.iter().zip(ubar).map(|(a, b)| &(a * &half_finv) + b).collect();
    let okk = frame.omega_bar_kk(k);
    let w: Vec<ExtScalar> = ubar.iter().zip(&okk).map(|(u, o)| &(u * s) + &(o * &q(1, 32))).collect();
    let coef = &finv * &ExtScalar::inv_sqrt2();
    let psi0 = &frame.psi0;
    let mut psi = psi0
        .scale(f)
        .add(&two_form_act(k, psi0).scale(&q(-1, 8)))
        .add(&vector_act(&w, &psi0.charge_conjugate()).scale(&coef));
    psi.chirality = Chirality::Plus;
    Ok(crate::rep27::Vector27 { v, psi, s: s.clone() })
}

/// ε_{a₀a₁a₂a₃a₄} K^{a₀a₁} K^{a₂a₃} K^{a₄b} for a 5×5 antisymmetric K; vanishes since
/// ε K K lies in the kernel of K.
pub fn epsilon_contraction(k: &Matrix) -> Vec<ExtScalar> {
    let w = epsilon_kk(k);
    (0..5).map(|b| (0..5).map(|a| &w[a] * &k[a][b]).sum()).collect()
}

/// w_{a₄} = ε_{a₀a₁a₂a₃a₄} K^{a₀a₁} K^{a₂a₃}.
pub fn epsilon_kk(k: &Matrix) -> Vec<ExtScalar> {
    let mut w = vec![ExtScalar::zero(); 5];
    for (a4, wa) in w.iter_mut().enumerate() {
        for a0 in 0..5 {
            for a1 in 0..5 {
                for a2 in 0..5 {
                    for a3 in 0..5 {
                        let s = perm_sign(&[a0, a1, a2, a3, a4]);
                        if s != 0 {
                            *wa += &(&(&k[a0][a1] * &k[a2][a3]) * &ExtScalar::from_int(s));
                        }
                    }
                }
            }
        }
    }
    w
}
