//! Exact sparse Gaussian elimination over ℚ(i)[√2].

use std::collections::BTreeMap;

use crate::scalar::ExtScalar;

pub type SparseRow = BTreeMap<usize, ExtScalar>;

pub fn sparse_from_dense(v: &[ExtScalar]) -> SparseRow {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn dense_from_sparse(v: &SparseRow, n: usize) -> Vec<ExtScalar> {
    let mut out = vec![ExtScalar::zero(); n];
    for (&i, c) in v {
        out[i] = c.clone();
    }
    out
}

/// `row += c · other`, dropping cancelled entries.
pub fn axpy(row: &mut SparseRow, c: &ExtScalar, other: &SparseRow) {
    if c.is_zero() {
        return;
    }
    for (&k, v) in other {
        let entry = row.entry(k).or_default();
        *entry += &(c * v);
        if entry.is_zero() {
            row.remove(&k);
        }
    }
}

/// Reduced row echelon form built incrementally. Each stored row carries the combination
/// of inserted vectors that produced it.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pub ncols: usize,
    rows: BTreeMap<usize, (SparseRow, SparseRow)>,
    inserted: usize,
    untracked: bool,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new(), inserted: 0, untracked: false }
    }

    /// Echelon form that skips combination bookkeeping (`solve` is then unavailable).
    pub fn untracked(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new(), inserted: 0, untracked: true }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduce against the stored rows; returns the residual and the combination of inserted
    /// vectors subtracted from it.
    fn reduce(&self, row: &SparseRow) -> (SparseRow, SparseRow) {
        let mut out = row.clone();
        let mut combo = SparseRow::new();
        let hits: Vec<(usize, ExtScalar)> =
            row.iter().filter(|(k, _)| self.rows.contains_key(k)).map(|(&k, v)| (k, v.clone())).collect();
        for (k, c) in hits {
            let (prow, pcombo) = &self.rows[&k];
            let neg = -&c;
            axpy(&mut out, &neg, prow);
            if !self.untracked {
                axpy(&mut combo, &c, pcombo);
            }
        }
        (out, combo)
    }

    /// Residual of `row` modulo the span (zero iff `row` is in the span).
    pub fn residual(&self, row: &SparseRow) -> SparseRow {
        self.reduce(row).0
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.residual(row).is_empty()
    }

    /// Coefficients expressing `row` in the inserted vectors, if it lies in the span.
    /// Keys index the insertion order.
    pub fn solve(&self, row: &SparseRow) -> Option<SparseRow> {
        assert!(!self.untracked, "solve needs a tracked echelon form");
        let (res, combo) = self.reduce(row);
        res.is_empty().then_some(combo)
    }

    /// Insert a vector; returns true if it increased the rank.
    pub fn insert(&mut self, row: &SparseRow) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let (mut res, combo) = self.reduce(row);
        if res.is_empty() {
            return false;
        }
        // combination for res = row − Σ …
        let mut res_combo = SparseRow::new();
        if !self.untracked {
            res_combo.insert(id, ExtScalar::one());
            axpy(&mut res_combo, &ExtScalar::from_int(-1), &combo);
        }

        let (&pivot, lead) = res.iter().next().expect("nonempty");
        let inv = lead.inverse().expect("nonzero pivot");
        for v in res.values_mut() {
            *v = &*v * &inv;
        }
        for v in res_combo.values_mut() {
            *v = &*v * &inv;
        }
        // keep the form fully reduced
        let keys: Vec<usize> = self.rows.keys().copied().collect();
        for k in keys {
            let c = match self.rows[&k].0.get(&pivot) {
                Some(c) => -c,
                None => continue,
            };
            let entry = self.rows.get_mut(&k).expect("present");
            axpy(&mut entry.0, &c, &res);
            axpy(&mut entry.1, &c, &res_combo);
        }
        self.rows.insert(pivot, (res, res_combo));
        true
    }

    /// Basis of the null space of the stored rows (as a linear system in `ncols` unknowns).
    pub fn kernel(&self) -> Vec<SparseRow> {
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.rows.contains_key(&f) {
                continue;
            }
            let mut v = SparseRow::new();
            v.insert(f, ExtScalar::one());
            for (&p, (row, _)) in &self.rows {
                if let Some(c) = row.get(&f) {
                    v.insert(p, -c);
                }
            }
            out.push(v);
        }
        out
    }
}

pub fn rank_of(rows: &[SparseRow], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Solve the square or overdetermined system `A x = b` exactly; `None` when inconsistent
/// or underdetermined.
pub fn solve_unique(a: &[Vec<ExtScalar>], b: &[ExtScalar]) -> Option<Vec<ExtScalar>> {
    let ncols = a.first().map_or(0, |r| r.len());
    // rows [A | b]
    let mut e = Echelon::new(ncols + 1);
    for (r, rhs) in a.iter().zip(b) {
        let mut row = sparse_from_dense(r);
        if !rhs.is_zero() {
            row.insert(ncols, rhs.clone());
        }
        e.insert(&row);
    }
    if e.rank() != ncols || e.rows.contains_key(&ncols) {
        return None;
    }
    let mut x = vec![ExtScalar::zero(); ncols];
    for (&p, (row, _)) in &e.rows {
        x[p] = row.get(&ncols).cloned().unwrap_or_default();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::scalar::q;

    #[test]
    fn kernel_of_simple_system() {
        // x + y + z = 0, y − z = 0
        let rows = vec![
            sparse_from_dense(&[q(1, 1), q(1, 1), q(1, 1)]),
            sparse_from_dense(&[q(0, 1), q(1, 1), q(-1, 1)]),
        ];
        let mut e = Echelon::new(3);
        for r in &rows {
            e.insert(r);
        }
        let k = e.kernel();
        assert_eq!(k.len(), 1);
        let v = dense_from_sparse(&k[0], 3);
        assert_eq!(v, vec![q(-2, 1), q(1, 1), q(1, 1)]);
    }

    #[test]
    fn solve_tracks_combinations() {
        let mut rng = Rng::new(1);
        let n = 6;
        let basis: Vec<Vec<ExtScalar>> = (0..4).map(|_| rng.gaussians(n)).collect();
        let mut e = Echelon::new(n);
        for b in &basis {
            assert!(e.insert(&sparse_from_dense(b)));
        }
        let coeffs = rng.gaussians(4);
        let mut y = vec![ExtScalar::zero(); n];
        for (c, b) in coeffs.iter().zip(&basis) {
            for (yi, bi) in y.iter_mut().zip(b) {
                *yi += &(c * bi);
            }
        }
        let sol = e.solve(&sparse_from_dense(&y)).unwrap();
        assert_eq!(dense_from_sparse(&sol, 4), coeffs);
    }

    #[test]
    fn solve_unique_detects_inconsistency() {
        let a = vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)], vec![q(1, 1), q(1, 1)]];
        assert_eq!(solve_unique(&a, &[q(1, 1), q(2, 1), q(3, 1)]), Some(vec![q(1, 1), q(2, 1)]));
        assert_eq!(solve_unique(&a, &[q(1, 1), q(2, 1), q(4, 1)]), None);
    }
}
