//! Fierz rearrangement tables.
//!
//! `A_k(ψ₁,ψ₂,ψ₃,ψ₄) = Σ_{|I|=k} (ψ₁ e^I ψ₂)(ψ₃ e^I ψ₄)` over ascending index sets, and the
//! transposed sum `A^T_k` swaps ψ₂ and ψ₄. A table row k lists the coefficients of the
//! `A^T_{k'}` in `A_k`. Sectors fix the chiralities: in the plain sectors ψ₂ and ψ₄ share a
//! chirality, in the mixed sectors they are opposite.

use std::fmt;

use serde_json::{json, Value};

use crate::clifford::{bilinear_pairs, bilinear_vector, pair_bilinear, pairs, vector_act, Chirality, GammaRep, SignedPerm, Spinor};
use crate::error::{AtlasError, Result};
use crate::linalg::solve_unique;
use crate::rational::Rational;
use crate::report::CheckResult;
use crate::rng::Rng;
use crate::scalar::ExtScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sector {
    /// ψ₂, ψ₄ same chirality, even grades.
    Even,
    /// ψ₂, ψ₄ same chirality, odd grades.
    Odd,
    /// ψ₂, ψ₄ opposite, even row grades.
    MixedEven,
    /// ψ₂, ψ₄ opposite, odd row grades.
    MixedOdd,
}

impl Sector {
    pub fn name(self) -> &'static str {
        match self {
            Sector::Even => "even",
            Sector::Odd => "odd",
            Sector::MixedEven => "mixed-even",
            Sector::MixedOdd => "mixed-odd",
        }
    }

    pub fn parse(s: &str) -> Result<Sector> {
        match s {
            "even" => Ok(Sector::Even),
            "odd" => Ok(Sector::Odd),
            "mixed-even" => Ok(Sector::MixedEven),
            "mixed-odd" => Ok(Sector::MixedOdd),
            _ => Err(AtlasError::Parse(format!("unknown Fierz sector {s:?}"))),
        }
    }

    fn same_chirality(self) -> bool {
        matches!(self, Sector::Even | Sector::Odd)
    }

    fn row_parity(self) -> usize {
        match self {
            Sector::Even | Sector::MixedEven => 0,
            Sector::Odd | Sector::MixedOdd => 1,
        }
    }

    /// The sector whose table inverts this one.
    pub fn partner(self) -> Sector {
        match self {
            Sector::MixedEven => Sector::MixedOdd,
            Sector::MixedOdd => Sector::MixedEven,
            s => s,
        }
    }
}

/// Sectors available in each supported dimension.
pub fn sectors(dim: usize) -> Result<Vec<Sector>> {
    match dim {
        8 | 10 => Ok(vec![Sector::Even, Sector::Odd, Sector::MixedEven, Sector::MixedOdd]),
        16 => Ok(vec![Sector::Even]),
        d => Err(AtlasError::UnsupportedDimension(d)),
    }
}

/// Row and column grades of a sector.
pub fn sector_grades(dim: usize, sector: Sector) -> Result<(Vec<usize>, Vec<usize>)> {
    let g = |v: &[usize]| v.to_vec();
    Ok(match (dim, sector) {
        (8, Sector::Even) => (g(&[0, 2, 4]), g(&[0, 2, 4])),
        (8, Sector::Odd) => (g(&[1, 3]), g(&[1, 3])),
        (8, Sector::MixedEven) => (g(&[0, 2]), g(&[1, 3])),
        (8, Sector::MixedOdd) => (g(&[1, 3]), g(&[0, 2])),
        (10, Sector::Even) => (g(&[0, 2, 4]), g(&[0, 2, 4])),
        (10, Sector::Odd) => (g(&[1, 3]), g(&[1, 3])),
        (10, Sector::MixedEven) => (g(&[0, 2, 4]), g(&[1, 3, 5])),
        (10, Sector::MixedOdd) => (g(&[1, 3, 5]), g(&[0, 2, 4])),
        (16, Sector::Even) => (g(&[0, 2, 4, 6, 8]), g(&[0, 2, 4, 6, 8])),
        (d, s) => {
            return Err(AtlasError::Invalid(format!("no {} sector in dimension {d}", s.name())));
        }
    })
}

/// Chiralities of (ψ₁, ψ₂, ψ₃, ψ₄) for a sector, taking ψ₂ ∈ Δ⁺ (or Δ⁻ if `flip`).
pub fn sector_chiralities(dim: usize, sector: Sector, flip: bool) -> [Chirality; 4] {
    let n = dim / 2;
    let c2: i8 = if flip { -1 } else { 1 };
    let c4 = if sector.same_chirality() { c2 } else { -c2 };
    let s: i8 = if (sector.row_parity() + n) % 2 == 1 { -1 } else { 1 };
    [
        Chirality::from_sign(c2 * s),
        Chirality::from_sign(c2),
        Chirality::from_sign(c4 * s),
        Chirality::from_sign(c4),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FierzTable {
    pub dim: usize,
    pub sector: Sector,
    pub row_grades: Vec<usize>,
    pub col_grades: Vec<usize>,
    pub matrix: Vec<Vec<Rational>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct GInt {
    re: i64,
    im: i64,
}

impl GInt {
    const ZERO: GInt = GInt { re: 0, im: 0 };

    fn mul_i_pow(self, k: u8) -> GInt {
        match k & 3 {
            0 => self,
            1 => GInt { re: -self.im, im: self.re },
            2 => GInt { re: -self.re, im: -self.im },
            _ => GInt { re: self.im, im: -self.re },
        }
    }
}

/// Gaussian-integer spinor, padded to the full 2ⁿ basis.
type IntSpinor = Vec<GInt>;

fn sandwich_int(m: &SignedPerm, phi: &IntSpinor, psi: &IntSpinor) -> (i128, i128) {
    let (mut re, mut im) = (0i128, 0i128);
    for (r, a) in phi.iter().enumerate() {
        if a.re == 0 && a.im == 0 {
            continue;
        }
        let b = psi[m.perm[r] as usize].mul_i_pow(m.phase[r]);
        re += a.re as i128 * b.re as i128 - a.im as i128 * b.im as i128;
        im += a.re as i128 * b.im as i128 + a.im as i128 * b.re as i128;
    }
    (re, im)
}

fn cmul(a: (i128, i128), b: (i128, i128)) -> (i128, i128) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

/// Grade sums (A_k, A^T_k) for the requested grades, with exact integer arithmetic.
fn grade_sums(
    rep: &GammaRep,
    psi: &[IntSpinor; 4],
    row_grades: &[usize],
    col_grades: &[usize],
) -> (Vec<(i128, i128)>, Vec<(i128, i128)>) {
    let max_grade = row_grades.iter().chain(col_grades).copied().max().unwrap_or(0);
    let mut a = vec![(0i128, 0i128); max_grade + 1];
    let mut at = vec![(0i128, 0i128); max_grade + 1];
    let want_row: Vec<bool> = (0..=max_grade).map(|k| row_grades.contains(&k)).collect();
    let want_col: Vec<bool> = (0..=max_grade).map(|k| col_grades.contains(&k)).collect();

    // depth-first over ascending index sets, carrying C e^I
    let mut stack: Vec<(usize, usize, SignedPerm)> = vec![(0, 0, rep.charge().clone())];
    while let Some((grade, next, m)) = stack.pop() {
        if want_row[grade] {
            let x = cmul(sandwich_int(&m, &psi[0], &psi[1]), sandwich_int(&m, &psi[2], &psi[3]));
            a[grade].0 += x.0;
            a[grade].1 += x.1;
        }
        if want_col[grade] {
            let x = cmul(sandwich_int(&m, &psi[0], &psi[3]), sandwich_int(&m, &psi[2], &psi[1]));
            at[grade].0 += x.0;
            at[grade].1 += x.1;
        }
        if grade < max_grade {
            for j in next..rep.dim() {
                stack.push((grade + 1, j + 1, m.compose(rep.gamma(j))));
            }
        }
    }
    (
        row_grades.iter().map(|&k| a[k]).collect(),
        col_grades.iter().map(|&k| at[k]).collect(),
    )
}

fn random_int_spinor(n: usize, chirality: Chirality, rng: &mut Rng, bound: u32) -> IntSpinor {
    (0..1usize << n)
        .map(|r| {
            let s = if (r as u32).count_ones() % 2 == 0 { 1 } else { -1 };
            if chirality.sign() == Some(s) {
                let v = |rng: &mut Rng| rng.below(2 * bound + 1) as i64 - bound as i64;
                GInt { re: v(rng), im: v(rng) }
            } else {
                GInt::ZERO
            }
        })
        .collect()
}

/// Scale a spinor with Gaussian-rational entries to Gaussian integers by the common
/// denominator; returns `None` if a component has a √2 part or does not fit.
fn to_int_spinor(psi: &Spinor) -> Option<IntSpinor> {
    use num_integer::Integer;
    let mut den: i64 = 1;
    for c in &psi.coeffs {
        if !c.b_re.is_zero() || !c.b_im.is_zero() {
            return None;
        }
        for r in [&c.a_re, &c.a_im] {
            let (_, d) = r.as_small()?;
            den = den.lcm(&d);
        }
    }
    psi.coeffs
        .iter()
        .map(|c| {
            let f = |r: &Rational| -> Option<i64> {
                let (n, d) = r.as_small()?;
                n.checked_mul(den / d)
            };
            Some(GInt { re: f(&c.a_re)?, im: f(&c.a_im)? })
        })
        .collect()
}

fn gint_scalar(x: (i128, i128)) -> ExtScalar {
    let r = |v: i128| -> Rational {
        match i64::try_from(v) {
            Ok(v) => Rational::from_int(v),
            Err(_) => v.to_string().parse().expect("integer"),
        }
    };
    ExtScalar::gaussian(r(x.0), r(x.1))
}

/// Derive a table exactly: each row solves `A_k = Σ c_{kk'} A^T_{k'}` on generic
/// integer quadruples of the sector's chiralities.
pub fn derive_table(dim: usize, sector: Sector) -> Result<FierzTable> {
    let rep = GammaRep::for_dim(dim)?;
    let (row_grades, col_grades) = sector_grades(dim, sector)?;
    let ch = sector_chiralities(dim, sector, false);
    let mut rng = Rng::new(0x5eed_f1e2 ^ dim as u64 ^ ((sector as u64) << 8));
    let samples = col_grades.len() + 3;
    let mut lhs: Vec<Vec<ExtScalar>> = vec![Vec::new(); row_grades.len()];
    let mut sys: Vec<Vec<ExtScalar>> = Vec::new();
    for _ in 0..samples {
        let psi: [IntSpinor; 4] = std::array::from_fn(|i| random_int_spinor(rep.n, ch[i], &mut rng, 3));
        let (a, at) = grade_sums(rep, &psi, &row_grades, &col_grades);
        sys.push(at.into_iter().map(gint_scalar).collect());
        for (k, v) in a.into_iter().enumerate() {
            lhs[k].push(gint_scalar(v));
        }
    }
    let mut matrix = Vec::new();
    for (k, rhs) in lhs.iter().enumerate() {
        let sol = solve_unique(&sys, rhs).ok_or_else(|| {
            AtlasError::IdentityFailed(format!("row for grade {} in D={dim} {} has no unique solution", row_grades[k], sector.name()))
        })?;
        let row = sol
            .into_iter()
            .map(|c| {
                if c.is_rational() {
                    Ok(c.a_re)
                } else {
                    Err(AtlasError::IdentityFailed(format!("non-rational Fierz coefficient {c}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        matrix.push(row);
    }
    Ok(FierzTable { dim, sector, row_grades, col_grades, matrix })
}

impl FierzTable {
    /// Check the table on `trials` random quadruples of rational spinors.
    pub fn verify(&self, trials: u64, rng: &mut Rng) -> Result<()> {
        for flip in [false, true] {
            let ch = sector_chiralities(self.dim, self.sector, flip);
            for t in 0..trials.div_ceil(2) {
                let psi: [Spinor; 4] = std::array::from_fn(|i| Spinor::random(self.dim / 2, ch[i], rng));
                self.verify_on(&psi).map_err(|e| AtlasError::IdentityFailed(format!("trial {t}: {e}")))?;
            }
        }
        Ok(())
    }

    /// Check the identity on one quadruple.
    pub fn verify_on(&self, psi: &[Spinor; 4]) -> Result<()> {
        let rep = GammaRep::for_dim(self.dim)?;
        let ints: Vec<IntSpinor> = psi
            .iter()
            .map(|p| to_int_spinor(p).ok_or_else(|| AtlasError::Invalid("spinor not Gaussian-rational".into())))
            .collect::<Result<_>>()?;
        let ints: [IntSpinor; 4] = ints.try_into().expect("four spinors");
        let (a, at) = grade_sums(rep, &ints, &self.row_grades, &self.col_grades);
        for (k, row) in self.matrix.iter().enumerate() {
            let mut rhs = ExtScalar::zero();
            for (c, v) in row.iter().zip(&at) {
                rhs += &gint_scalar(*v).scale(c);
            }
            if rhs != gint_scalar(a[k]) {
                return Err(AtlasError::IdentityFailed(format!(
                    "D={} {} row {}: {} != {}",
                    self.dim,
                    self.sector.name(),
                    self.row_grades[k],
                    gint_scalar(a[k]),
                    rhs
                )));
            }
        }
        Ok(())
    }

    pub fn product(&self, rhs: &FierzTable) -> Vec<Vec<Rational>> {
        let n = self.matrix.len();
        let m = rhs.matrix.first().map_or(0, |r| r.len());
        let mut out = vec![vec![Rational::ZERO; m]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..rhs.matrix.len() {
                    *cell += &(&self.matrix[i][k] * &rhs.matrix[k][j]);
                }
            }
        }
        out
    }

    /// Aligned text: a header of column grades, then one row per row grade.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self.matrix.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1).max(4);
        let mut out = format!("D={} {}\n{:>6}", self.dim, self.sector.name(), "");
        for g in &self.col_grades {
            out.push_str(&format!(" {:>width$}", format!("A^T{g}")));
        }
        out.push('\n');
        for (g, row) in self.row_grades.iter().zip(&cells) {
            out.push_str(&format!("{:>6}", format!("A{g}")));
            for c in row {
                out.push_str(&format!(" {c:>width$}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "sector": self.sector.name(),
            "grades": self.row_grades,
            "col_grades": self.col_grades,
            "matrix": self.matrix.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<FierzTable> {
        let err = |m: &str| AtlasError::Parse(format!("Fierz table: {m}"));
        let dim = v["dim"].as_u64().ok_or_else(|| err("dim"))? as usize;
        let sector = Sector::parse(v["sector"].as_str().ok_or_else(|| err("sector"))?)?;
        let grades = |key: &str| -> Result<Vec<usize>> {
            v[key].as_array().ok_or_else(|| err(key))?.iter().map(|g| g.as_u64().map(|x| x as usize).ok_or_else(|| err(key))).collect()
        };
        let row_grades = grades("grades")?;
        let col_grades = match v.get("col_grades") {
            Some(_) => grades("col_grades")?,
            None => row_grades.clone(),
        };
        let matrix = v["matrix"]
            .as_array()
            .ok_or_else(|| err("matrix"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| err("matrix row"))?
                    .iter()
                    .map(|c| c.as_str().ok_or_else(|| err("entry")).and_then(|s| s.parse().map_err(|_| err("entry"))))
                    .collect::<Result<Vec<Rational>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FierzTable { dim, sector, row_grades, col_grades, matrix })
    }
}

impl fmt::Display for FierzTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, at) = if self.sector.same_chirality() { ("A", "A^T") } else { ("B", "B^T") };
        writeln!(f, "D={} {} sector", self.dim, self.sector.name())?;
        let width = 9;
        write!(f, "{:>6}", "")?;
        for g in &self.col_grades {
            write!(f, "{:>width$}", format!("{at}_{g}"))?;
        }
        writeln!(f)?;
        for (k, row) in self.matrix.iter().enumerate() {
            write!(f, "{:>6}", format!("{a}_{}", self.row_grades[k]))?;
            for c in row {
                write!(f, "{:>width$}", c.to_string())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Whether applying the rearrangement twice gives the identity (A sectors square to 1,
/// the two mixed tables are mutually inverse).
pub fn involution_holds(table: &FierzTable, partner: &FierzTable) -> bool {
    let p = table.product(partner);
    p.iter().enumerate().all(|(i, row)| {
        row.len() == p.len() && row.iter().enumerate().all(|(j, c)| *c == if i == j { Rational::ONE } else { Rational::ZERO })
    })
}

/// Σ_{i<j} eⁱeʲ χ (φ eⁱeʲ ψ), i.e. ½ e^{ij} χ (φ e^{ij} ψ) summed over all i, j.
pub fn pair_contraction(chi: &Spinor, phi: &Spinor, psi: &Spinor) -> Spinor {
    let rep = GammaRep::get(chi.n);
    let coeffs = bilinear_pairs(phi, psi);
    let mut out = Spinor::zero(chi.n, chi.chirality);
    for (k, (p, q)) in pairs(rep.dim()).into_iter().enumerate() {
        if coeffs[k].is_zero() {
            continue;
        }
        out = out.add(&chi.apply_perm(rep.pair(p, q), false).scale(&coeffs[k]));
    }
    out
}

/// Σ eⁱ χ (φ eⁱ ψ).
pub fn vector_contraction(chi: &Spinor, phi: &Spinor, psi: &Spinor) -> Spinor {
    let v = bilinear_vector(phi, psi);
    vector_act(&v, chi)
}

fn pair0(a: &Spinor, b: &Spinor) -> ExtScalar {
    pair_bilinear(a, 0, b).expect("chiralities checked by caller")
}

/// The spinor identities that follow from the tables. Returns the name of the first
/// failing identity.
pub fn derived_identity_failure(dim: usize, rng: &mut Rng) -> Result<Option<String>> {
    let n = dim / 2;
    let plus = |rng: &mut Rng| Spinor::random(n, Chirality::Plus, rng);
    let minus = |rng: &mut Rng| Spinor::random(n, Chirality::Minus, rng);
    let four = ExtScalar::from_int(4);
    let two = ExtScalar::from_int(2);
    match dim {
        8 => {
            let (xi, phi, psi, eta) = (plus(rng), plus(rng), plus(rng), minus(rng));
            // ½ e^{ij} ξ (φ e^{ij} ψ) = 4φ(ψξ) − 4ψ(φξ)
            let lhs = pair_contraction(&xi, &phi, &psi);
            let rhs = phi.scale(&(&four * &pair0(&psi, &xi))).sub(&psi.scale(&(&four * &pair0(&phi, &xi))));
            if lhs.coeffs != rhs.coeffs {
                return Ok(Some("D8 pair contraction".into()));
            }
            // 2η(φψ) = eⁱψ(φ eⁱ η) + eⁱφ(ψ eⁱ η)
            let lhs = eta.scale(&(&two * &pair0(&phi, &psi)));
            let rhs = vector_contraction(&psi, &phi, &eta).add(&vector_contraction(&phi, &psi, &eta));
            if lhs.coeffs != rhs.coeffs {
                return Ok(Some("D8 vector contraction".into()));
            }
        }
        10 => {
            for flipped in [false, true] {
                let (p, m) = if flipped { (Chirality::Minus, Chirality::Plus) } else { (Chirality::Plus, Chirality::Minus) };
                let (psi1, psi2, psi3) = (Spinor::random(n, p, rng), Spinor::random(n, p, rng), Spinor::random(n, p, rng));
                let eta = Spinor::random(n, m, rng);
                // ψ₁(ηψ₂) + ½e^{ij}ψ₁(ηe^{ij}ψ₂) − 2eⁱη(ψ₁eⁱψ₂) = −4ψ₂(ψ₁η)
                let lhs = psi1
                    .scale(&pair0(&eta, &psi2))
                    .add(&pair_contraction(&psi1, &eta, &psi2))
                    .sub(&vector_contraction(&eta, &psi1, &psi2).scale(&two));
                let rhs = psi2.scale(&(-&(&four * &pair0(&psi1, &eta))));
                if lhs.coeffs != rhs.coeffs {
                    return Ok(Some(format!("D10 key identity (flipped = {flipped})")));
                }
                // eⁱψ₁(ψ₂eⁱψ₃) + cyclic = 0
                let cyc = vector_contraction(&psi1, &psi2, &psi3)
                    .add(&vector_contraction(&psi2, &psi3, &psi1))
                    .add(&vector_contraction(&psi3, &psi1, &psi2));
                if !cyc.is_zero() {
                    return Ok(Some(format!("D10 cyclic identity (flipped = {flipped})")));
                }
            }
        }
        16 => {
            let (a, b, c) = (plus(rng), plus(rng), plus(rng));
            let cyc = pair_contraction(&a, &b, &c).add(&pair_contraction(&b, &c, &a)).add(&pair_contraction(&c, &a, &b));
            if !cyc.is_zero() {
                return Ok(Some("D16 cyclic identity".into()));
            }
        }
        d => return Err(AtlasError::UnsupportedDimension(d)),
    }
    Ok(None)
}

pub fn run_checks(rng: &mut Rng, trials: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for dim in [8usize, 10, 16] {
        let secs = sectors(dim).expect("supported");
        let mut tables = Vec::new();
        for &s in &secs {
            match derive_table(dim, s) {
                Ok(t) => tables.push(t),
                Err(e) => {
                    out.push(CheckResult::fail(format!("fierz.d{dim}.{}.derive", s.name()), 0, e.to_string()));
                }
            }
        }
        let table_trials = if dim == 16 { trials.clamp(2, 8) } else { trials.max(2) };
        for t in &tables {
            let name = format!("fierz.d{dim}.{}", t.sector.name());
            let res = t.verify(table_trials, rng);
            out.push(CheckResult::from_outcome(format!("{name}.verify"), table_trials, res.err().map(|e| e.to_string())));
            if let Some(p) = tables.iter().find(|p| p.sector == t.sector.partner()) {
                out.push(CheckResult::from_outcome(
                    format!("{name}.involution"),
                    1,
                    (!involution_holds(t, p)).then(|| "table composed with its partner is not the identity".to_string()),
                ));
            }
        }
        let derived_trials = if dim == 16 { trials.clamp(1, 4) } else { trials };
        let mut fail = None;
        for t in 0..derived_trials {
            match derived_identity_failure(dim, rng) {
                Ok(None) => {}
                Ok(Some(w)) => {
                    fail = Some(format!("trial {t}: {w}"));
                    break;
                }
                Err(e) => {
                    fail = Some(e.to_string());
                    break;
                }
            }
        }
        out.push(CheckResult::from_outcome(format!("fierz.d{dim}.derived_identities"), derived_trials, fail));
    }
    out
}
