//! Sparse structure constants and Jacobi sweeps.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{bracket, sub, Algebra, LieElement, E8_DIM, SO16};
use crate::clifford::{chiral_indices, pair_index, pairs, so_bracket, Chirality, GammaRep};
use crate::error::{AtlasError, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::rng::Rng;
use crate::scalar::{q, ExtScalar};

/// Bracket table over a fixed basis: `entry(i, j)` is [bᵢ, bⱼ] as a sparse vector.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub algebra: Algebra,
    pub dim: usize,
    table: Vec<Vec<(u32, ExtScalar)>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiMode {
    Exhaustive,
    Sampled(u64),
}

#[derive(Clone, Debug)]
pub struct JacobiOutcome {
    pub triples: u64,
    pub failure: Option<String>,
}

/// Runs `f` on a rayon pool capped by `EIII_ATLAS_THREADS` when that is set.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let cap = std::env::var("EIII_ATLAS_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok());
    match cap {
        Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

fn to_entries(v: SparseRow) -> Vec<(u32, ExtScalar)> {
    v.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k as u32, c)).collect()
}

impl StructureConstants {
    /// Table from a bracket on basis indices; only i < j is evaluated.
    pub fn from_fn(algebra: Algebra, dim: usize, f: impl Fn(usize, usize) -> SparseRow + Sync) -> Self {
        let upper: Vec<Vec<Vec<(u32, ExtScalar)>>> = with_pool(|| {
            (0..dim).into_par_iter().map(|i| ((i + 1)..dim).map(|j| to_entries(f(i, j))).collect()).collect()
        });
        let mut table = vec![Vec::new(); dim * dim];
        for (i, row) in upper.into_iter().enumerate() {
            for (off, v) in row.into_iter().enumerate() {
                let j = i + 1 + off;
                table[j * dim + i] = v.iter().map(|(k, c)| (*k, -c)).collect();
                table[i * dim + j] = v;
            }
        }
        StructureConstants { algebra, dim, table }
    }

    /// Cached table for the algebra's canonical basis.
    pub fn get(algebra: Algebra) -> Result<&'static StructureConstants> {
        static E8: OnceLock<StructureConstants> = OnceLock::new();
        static E6: OnceLock<StructureConstants> = OnceLock::new();
        static F4: OnceLock<std::result::Result<StructureConstants, String>> = OnceLock::new();
        static G2: OnceLock<std::result::Result<StructureConstants, String>> = OnceLock::new();
        match algebra {
            Algebra::E8 => Ok(E8.get_or_init(build_e8)),
            Algebra::E6 => Ok(E6.get_or_init(build_e6)),
            Algebra::F4 => F4
                .get_or_init(|| {
                    let basis: Vec<SparseRow> = sub::f4_basis().iter().map(|x| x.to_sparse()).collect();
                    Self::for_subalgebra(Algebra::F4, &basis, Self::get(Algebra::E6).expect("e6"))
                        .map_err(|e| e.to_string())
                })
                .as_ref()
                .map_err(|e| AtlasError::NotClosed(e.clone())),
            Algebra::G2 => G2
                .get_or_init(|| {
                    let basis: Vec<SparseRow> = sub::g2_basis().iter().map(|x| x.to_sparse()).collect();
                    Self::for_subalgebra(Algebra::G2, &basis, &so_table(8)).map_err(|e| e.to_string())
                })
                .as_ref()
                .map_err(|e| AtlasError::NotClosed(e.clone())),
        }
    }

    /// Structure constants of the span of `basis` (ambient coordinates); fails if not closed.
    pub fn for_subalgebra(algebra: Algebra, basis: &[SparseRow], ambient: &StructureConstants) -> Result<Self> {
        let mut ech = Echelon::new(ambient.dim);
        for b in basis {
            if !ech.insert(b) {
                return Err(AtlasError::Invalid("subalgebra basis is linearly dependent".into()));
            }
        }
        let n = basis.len();
        let results: Vec<Vec<std::result::Result<SparseRow, (usize, usize)>>> = with_pool(|| {
            (0..n)
                .into_par_iter()
                .map(|i| {
                    ((i + 1)..n)
                        .map(|j| ech.solve(&ambient.bracket_sparse(&basis[i], &basis[j])).ok_or((i, j)))
                        .collect()
                })
                .collect()
        });
        let mut upper = Vec::with_capacity(n);
        for row in results {
            let mut r = Vec::with_capacity(row.len());
            for v in row {
                match v {
                    Ok(v) => r.push(v),
                    Err((i, j)) => {
                        return Err(AtlasError::NotClosed(format!(
                            "{}: bracket of basis elements {i} and {j} leaves the span",
                            algebra.name()
                        )))
                    }
                }
            }
            upper.push(r);
        }
        Ok(Self::from_fn(algebra, n, |i, j| upper[i][j - i - 1].clone()))
    }

    pub fn entry(&self, i: usize, j: usize) -> &[(u32, ExtScalar)] {
        &self.table[i * self.dim + j]
    }

    /// Bracket of two sparse coordinate vectors.
    pub fn bracket_sparse(&self, x: &SparseRow, y: &SparseRow) -> SparseRow {
        let mut out = SparseRow::new();
        for (&i, a) in x {
            for (&j, b) in y {
                if i == j {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.entry(i, j) {
                    let e = out.entry(*k as usize).or_insert_with(ExtScalar::zero);
                    *e += &(&ab * c);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            self.entry(i, i).is_empty()
                && ((i + 1)..self.dim).all(|j| {
                    let a = self.entry(i, j);
                    let b = self.entry(j, i);
                    a.len() == b.len() && a.iter().zip(b).all(|((ka, ca), (kb, cb))| ka == kb && (ca + cb).is_zero())
                })
        })
    }

    /// Number of nonzero coefficients over ordered pairs.
    pub fn nnz(&self) -> usize {
        self.table.iter().map(|v| v.len()).sum()
    }

    pub fn jacobi(&self, mode: JacobiMode, rng: &mut Rng) -> JacobiOutcome {
        match mode {
            JacobiMode::Exhaustive => self.jacobi_exhaustive(),
            JacobiMode::Sampled(budget) => self.jacobi_sampled(budget, rng),
        }
    }

    fn jacobi_exhaustive(&self) -> JacobiOutcome {
        let n = self.dim as u64;
        let triples = if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
        let failure = match IntTable::from(self) {
            Some(t) => t.exhaustive(),
            None => self.exhaustive_exact(),
        };
        JacobiOutcome { triples, failure }
    }

    fn exhaustive_exact(&self) -> Option<String> {
        let d = self.dim;
        let fails: Vec<Option<String>> = with_pool(|| {
            (0..d)
                .into_par_iter()
                .map(|i| {
                    for j in (i + 1)..d {
                        for k in (j + 1)..d {
                            let mut acc = SparseRow::new();
                            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                                for (m, x) in self.entry(b, c) {
                                    for (t, y) in self.entry(a, *m as usize) {
                                        *acc.entry(*t as usize).or_insert_with(ExtScalar::zero) += &(x * y);
                                    }
                                }
                            }
                            if acc.values().any(|c| !c.is_zero()) {
                                return Some(format!("basis triple ({i}, {j}, {k})"));
                            }
                        }
                    }
                    None
                })
                .collect()
        });
        fails.into_iter().flatten().next()
    }

    fn jacobi_sampled(&self, budget: u64, rng: &mut Rng) -> JacobiOutcome {
        let seeds: Vec<u64> = (0..budget).map(|_| rng.next_u64()).collect();
        if let Some(t) = IntTable::from(self) {
            return JacobiOutcome { triples: budget, failure: t.sampled(&seeds) };
        }
        let d = self.dim;
        let fails: Vec<Option<String>> = with_pool(|| {
            seeds
                .par_iter()
                .enumerate()
                .map(|(t, &seed)| {
                    let mut r = Rng::new(seed);
                    let x = crate::linalg::sparse_from_dense(&r.gaussians(d));
                    let y = crate::linalg::sparse_from_dense(&r.gaussians(d));
                    let z = crate::linalg::sparse_from_dense(&r.gaussians(d));
                    let a = self.bracket_sparse(&x, &self.bracket_sparse(&y, &z));
                    let b = self.bracket_sparse(&y, &self.bracket_sparse(&z, &x));
                    let c = self.bracket_sparse(&z, &self.bracket_sparse(&x, &y));
                    let mut sum = a;
                    for v in [b, c] {
                        for (k, s) in v {
                            *sum.entry(k).or_insert_with(ExtScalar::zero) += &s;
                        }
                    }
                    if sum.values().any(|c| !c.is_zero()) {
                        Some(format!("sample {t} (seed {seed})"))
                    } else {
                        None
                    }
                })
                .collect()
        });
        JacobiOutcome { triples: budget, failure: fails.into_iter().flatten().next() }
    }

    /// {"algebra", "dim", "brackets": [{"i", "j", "coeffs": [[k, scalar]]}]} over i < j with nonzero bracket.
    pub fn to_json(&self) -> Value {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let e = self.entry(i, j);
                if e.is_empty() {
                    continue;
                }
                let coeffs: Vec<Value> = e.iter().map(|(k, c)| json!([k, c.to_json()])).collect();
                brackets.push(json!({"i": i, "j": j, "coeffs": coeffs}));
            }
        }
        json!({"algebra": self.algebra.name(), "dim": self.dim, "brackets": brackets})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| AtlasError::Parse(format!("structure constants: {m}"));
        let algebra = Algebra::parse(v["algebra"].as_str().ok_or_else(|| bad("algebra"))?)?;
        let dim = v["dim"].as_u64().ok_or_else(|| bad("dim"))? as usize;
        let mut upper = vec![SparseRow::new(); dim * dim];
        for b in v["brackets"].as_array().ok_or_else(|| bad("brackets"))? {
            let i = b["i"].as_u64().ok_or_else(|| bad("i"))? as usize;
            let j = b["j"].as_u64().ok_or_else(|| bad("j"))? as usize;
            if i >= j || j >= dim {
                return Err(bad("index order"));
            }
            for c in b["coeffs"].as_array().ok_or_else(|| bad("coeffs"))? {
                let k = c[0].as_u64().ok_or_else(|| bad("k"))? as usize;
                upper[i * dim + j].insert(k, ExtScalar::from_json(&c[1])?);
            }
        }
        Ok(Self::from_fn(algebra, dim, |i, j| upper[i * dim + j].clone()))
    }
}

/// so(dim) on the pair basis.
pub fn so_table(dim: usize) -> StructureConstants {
    let n = dim * (dim - 1) / 2;
    let unit = |k: usize| {
        let mut v = vec![ExtScalar::zero(); n];
        v[k] = ExtScalar::one();
        v
    };
    StructureConstants::from_fn(Algebra::G2, n, |i, j| {
        crate::linalg::sparse_from_dense(&so_bracket(&unit(i), &unit(j), dim))
    })
}

fn build_e6() -> StructureConstants {
    StructureConstants::from_fn(Algebra::E6, super::E6_DIM, |i, j| {
        bracket(&LieElement::basis(Algebra::E6, i), &LieElement::basis(Algebra::E6, j)).expect("e6").to_sparse()
    })
}

/// e8 basis brackets read directly off the gamma tables.
fn build_e8() -> StructureConstants {
    let rep = GammaRep::get(8);
    let states = chiral_indices(8, Chirality::Plus);
    let mut pos = vec![usize::MAX; rep.size()];
    for (k, &s) in states.iter().enumerate() {
        pos[s] = k;
    }
    let prs = pairs(16);
    let half = q(1, 2);
    let minus_half = q(-1, 2);
    StructureConstants::from_fn(Algebra::E8, E8_DIM, |i, j| {
        let mut out = SparseRow::new();
        if j < SO16 {
            // [x^{pq}, x^{rs}] = δ_{qr} x^{ps} − δ_{qs} x^{pr} − δ_{pr} x^{qs} + δ_{ps} x^{qr}
            let (p, qq) = prs[i];
            let (r, s) = prs[j];
            let mut add = |a: usize, b: usize, sign: i64| {
                if a == b {
                    return;
                }
                let (lo, hi, sg) = if a < b { (a, b, sign) } else { (b, a, -sign) };
                let e = out.entry(pair_index(16, lo, hi)).or_insert_with(ExtScalar::zero);
                *e += &ExtScalar::from_int(sg);
            };
            if qq == r {
                add(p, s, 1);
            }
            if qq == s {
                add(p, r, -1);
            }
            if p == r {
                add(qq, s, -1);
            }
            if p == s {
                add(qq, r, 1);
            }
        } else if i < SO16 {
            // x^{pq}∘ξ_b = ½ eᵖeᑫ ξ_b
            let (p, qq) = prs[i];
            let m = rep.pair(p, qq);
            let b = states[j - SO16];
            for r in 0..rep.size() {
                if m.perm[r] as usize == b {
                    out.insert(SO16 + pos[r], half.mul_i_pow(m.phase[r]));
                }
            }
        } else {
            // [ξ_a, ξ_b] = −½ Σ_{p<q} (ξ_a C eᵖeᑫ ξ_b) xᵖᑫ
            let (a, b) = (states[i - SO16], states[j - SO16]);
            for (k, &(p, qq)) in prs.iter().enumerate() {
                let m = rep.c_pair(p, qq);
                if m.perm[a] as usize == b {
                    out.insert(k, minus_half.mul_i_pow(m.phase[a]));
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    })
}

/// Table rescaled to Gaussian integers, for the exhaustive sweep.
struct IntTable {
    dim: usize,
    table: Vec<Vec<(u32, i64, i64)>>,
}

impl IntTable {
    fn from(sc: &StructureConstants) -> Option<IntTable> {
        let mut l = BigInt::one();
        for e in &sc.table {
            for (_, c) in e {
                if !(c.b_re.is_zero() && c.b_im.is_zero()) {
                    return None;
                }
                l = l.lcm(&c.a_re.denom()).lcm(&c.a_im.denom());
            }
        }
        let lr = crate::Rational::from_big(num_rational::BigRational::from_integer(l));
        let mut table = Vec::with_capacity(sc.table.len());
        for e in &sc.table {
            let mut row = Vec::with_capacity(e.len());
            for (k, c) in e {
                let re = (&c.a_re * &lr).numer().to_i64()?;
                let im = (&c.a_im * &lr).numer().to_i64()?;
                if re.unsigned_abs() > 1 << 20 || im.unsigned_abs() > 1 << 20 {
                    return None;
                }
                row.push((*k, re, im));
            }
            table.push(row);
        }
        Some(IntTable { dim: sc.dim, table })
    }

    /// [x, y] for dense Gaussian-integer vectors; the table's common denominator scales
    /// every bracket by the same factor, which leaves "is zero" unchanged.
    /// [x, y] for dense Gaussian-integer vectors, visiting only the pairs (i, j) with a
    /// nonzero bracket. The table's common denominator scales every bracket by the same
    /// factor, which leaves "is zero" unchanged.
    fn bracket_dense(&self, nonzero: &[(usize, usize)], x: &[(i128, i128)], y: &[(i128, i128)]) -> Vec<(i128, i128)> {
        let d = self.dim;
        let mut out = vec![(0i128, 0i128); d];
        for &(i, j) in nonzero {
            let (a, b) = (x[i], y[j]);
            if a == (0, 0) || b == (0, 0) {
                continue;
            }
            let ab = (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
            for &(k, cr, ci) in &self.table[i * d + j] {
                let (cr, ci) = (cr as i128, ci as i128);
                let slot = &mut out[k as usize];
                slot.0 += ab.0 * cr - ab.1 * ci;
                slot.1 += ab.0 * ci + ab.1 * cr;
            }
        }
        out
    }

    /// Dense random triples drawn exactly as in the rational route, scaled by 6 to clear
    /// the denominators {1, 2, 3}; Jacobi is trilinear so the scaling is harmless.
    fn sampled(&self, seeds: &[u64]) -> Option<String> {
        let d = self.dim;
        let six = crate::Rational::from_int(6);
        let int = |c: &crate::Rational| (c * &six).numer().to_i64().expect("bounded sample") as i128;
        let draw = |r: &mut Rng| -> Vec<(i128, i128)> {
            r.gaussians(d).iter().map(|g| (int(&g.a_re), int(&g.a_im))).collect()
        };
        let nz: Vec<(usize, usize)> =
            (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).filter(|&(i, j)| !self.table[i * d + j].is_empty()).collect();
        let br = |x: &[(i128, i128)], y: &[(i128, i128)]| self.bracket_dense(&nz, x, y);
        let fails: Vec<Option<String>> = with_pool(|| {
            seeds
                .par_iter()
                .enumerate()
                .map(|(t, &seed)| {
                    let mut r = Rng::new(seed);
                    let (x, y, z) = (draw(&mut r), draw(&mut r), draw(&mut r));
                    let a = br(&x, &br(&y, &z));
                    let b = br(&y, &br(&z, &x));
                    let c = br(&z, &br(&x, &y));
                    let bad = (0..d).any(|k| a[k].0 + b[k].0 + c[k].0 != 0 || a[k].1 + b[k].1 + c[k].1 != 0);
                    bad.then(|| format!("sample {t} (seed {seed})"))
                })
                .collect()
        });
        fails.into_iter().flatten().next()
    }

    fn exhaustive(&self) -> Option<String> {
        let d = self.dim;
        let fails: Vec<Option<String>> = with_pool(|| {
            (0..d)
                .into_par_iter()
                .map(|i| {
                    let mut acc = vec![(0i64, 0i64); d];
                    let mut touched: Vec<usize> = Vec::new();
                    for j in (i + 1)..d {
                        for k in (j + 1)..d {
                            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                                for &(m, xr, xi) in &self.table[b * d + c] {
                                    for &(t, yr, yi) in &self.table[a * d + m as usize] {
                                        let slot = &mut acc[t as usize];
                                        if *slot == (0, 0) {
                                            touched.push(t as usize);
                                        }
                                        slot.0 += xr * yr - xi * yi;
                                        slot.1 += xr * yi + xi * yr;
                                    }
                                }
                            }
                            let mut bad = false;
                            for &t in &touched {
                                if acc[t] != (0, 0) {
                                    bad = true;
                                }
                                acc[t] = (0, 0);
                            }
                            touched.clear();
                            if bad {
                                return Some(format!("basis triple ({i}, {j}, {k})"));
                            }
                        }
                    }
                    None
                })
                .collect()
        });
        fails.into_iter().flatten().next()
    }
}
