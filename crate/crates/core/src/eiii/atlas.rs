//! Chart points, transitions between charts, seeded orbit samples and the Gr(2,4) relation.

use serde_json::{json, Value};

use super::frame::{chart_xinfty, pure_decompose, pure_frame, standard_psi0, Matrix};
use super::{chart_s, chart_tpm, rotation_for_tcharts, split8, t_pm, PlaneRotation, Side};
use crate::clifford::{chiral_indices, pairs, Chirality, Spinor};
use crate::error::{AtlasError, Result};
use crate::liealg::{Algebra, LieElement, E6_DIM};
use crate::linalg::{rank_of, SparseRow};
use crate::rep27::{act27, eta_generator, xi_generator, Vector27};
use crate::rng::Rng;
use crate::scalar::{q, ExtScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartKind {
    S,
    TPlus,
    TMinus,
    XInfty,
    Gr24,
}

impl ChartKind {
    pub fn name(self) -> &'static str {
        match self {
            ChartKind::S => "s",
            ChartKind::TPlus => "tplus",
            ChartKind::TMinus => "tminus",
            ChartKind::XInfty => "xinfty",
            ChartKind::Gr24 => "gr24",
        }
    }

    pub fn parse(s: &str) -> Result<ChartKind> {
        Ok(match s {
            "s" => ChartKind::S,
            "tplus" => ChartKind::TPlus,
            "tminus" => ChartKind::TMinus,
            "xinfty" => ChartKind::XInfty,
            "gr24" => ChartKind::Gr24,
            _ => return Err(AtlasError::Parse(format!("unknown chart '{s}'"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChartPoint {
    S { psi: Spinor, s: ExtScalar },
    TPlus { t: ExtScalar, eta: Spinor, u: Vec<ExtScalar> },
    TMinus { t: ExtScalar, xi: Spinor, u: Vec<ExtScalar> },
    /// K holds the full antisymmetric 10×10 array; ū is a ten-vector of type (0,1).
    XInfty { psi0: Spinor, f: ExtScalar, k: Matrix, ubar: Vec<ExtScalar>, s: ExtScalar },
    Gr24 { g: Matrix },
}

fn scalars_json(v: &[ExtScalar]) -> Value {
    Value::Array(v.iter().map(|c| c.to_json()).collect())
}

fn scalars_from(v: &Value, n: usize, what: &str) -> Result<Vec<ExtScalar>> {
    let arr = v.as_array().ok_or_else(|| AtlasError::Parse(format!("{what}: expected an array")))?;
    if arr.len() != n {
        return Err(AtlasError::DimensionMismatch(format!("{what}: expected {n} entries, got {}", arr.len())));
    }
    arr.iter().map(ExtScalar::from_json).collect()
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| AtlasError::Parse(format!("missing field '{key}'")))
}

fn upper(k: &Matrix) -> Vec<ExtScalar> {
    pairs(10).into_iter().map(|(a, b)| k[a][b].clone()).collect()
}

fn from_upper(c: &[ExtScalar]) -> Matrix {
    let mut k = vec![vec![ExtScalar::zero(); 10]; 10];
    for ((a, b), x) in pairs(10).into_iter().zip(c) {
        k[b][a] = -x;
        k[a][b] = x.clone();
    }
    k
}

impl ChartPoint {
    pub fn kind(&self) -> ChartKind {
        match self {
            ChartPoint::S { .. } => ChartKind::S,
            ChartPoint::TPlus { .. } => ChartKind::TPlus,
            ChartPoint::TMinus { .. } => ChartKind::TMinus,
            ChartPoint::XInfty { .. } => ChartKind::XInfty,
            ChartPoint::Gr24 { .. } => ChartKind::Gr24,
        }
    }

    /// The 27-vector the parameters describe.
    pub fn assemble(&self) -> Result<Vector27> {
        match self {
            ChartPoint::S { psi, s } => chart_s(psi, s),
            ChartPoint::TPlus { t, eta, u } => chart_tpm(Side::Plus, t, eta, u),
            ChartPoint::TMinus { t, xi, u } => chart_tpm(Side::Minus, t, xi, u),
            ChartPoint::XInfty { psi0, f, k, ubar, s } => chart_xinfty(&pure_frame(psi0)?, f, k, ubar, s),
            ChartPoint::Gr24 { .. } => Err(AtlasError::Invalid("a Gr(2,4) point has no 27-vector".into())),
        }
    }

    /// Read the free coordinates of `kind` off a point of the orbit.
    pub fn from_vector(p: &Vector27, kind: ChartKind) -> Result<ChartPoint> {
        let outside = |what: &str| AtlasError::ChartPrecondition(format!("{what} = 0: point is not in the {} chart", kind.name()));
        match kind {
            ChartKind::S => {
                if p.s.is_zero() {
                    return Err(outside("s"));
                }
                Ok(ChartPoint::S { psi: p.psi.clone(), s: p.s.clone() })
            }
            ChartKind::TPlus | ChartKind::TMinus => {
                let (tp, tm) = t_pm(&p.v);
                let (xi, eta) = split8(&p.psi);
                let u = p.v[..8].to_vec();
                if kind == ChartKind::TPlus {
                    if tp.is_zero() {
                        return Err(outside("t₊"));
                    }
                    Ok(ChartPoint::TPlus { t: tp, eta, u })
                } else {
                    if tm.is_zero() {
                        return Err(outside("t₋"));
                    }
                    Ok(ChartPoint::TMinus { t: tm, xi, u })
                }
            }
            ChartKind::XInfty => {
                let frame = pure_frame(&standard_psi0())?;
                let d = pure_decompose(&p.psi, &frame);
                if d.f.is_zero() {
                    return Err(outside("f"));
                }
                let ubar = super::mat_vec(&frame.p01(), &p.v);
                Ok(ChartPoint::XInfty { psi0: frame.psi0, f: d.f, k: d.k, ubar, s: p.s.clone() })
            }
            ChartKind::Gr24 => Err(AtlasError::Invalid("no transition into Gr(2,4)".into())),
        }
    }

    pub fn to_json(&self) -> Value {
        let params = match self {
            ChartPoint::S { psi, s } => json!({"psi": psi.to_json(), "s": s.to_json()}),
            ChartPoint::TPlus { t, eta, u } => json!({"t": t.to_json(), "eta": eta.to_json(), "u": scalars_json(u)}),
            ChartPoint::TMinus { t, xi, u } => json!({"t": t.to_json(), "xi": xi.to_json(), "u": scalars_json(u)}),
            ChartPoint::XInfty { psi0, f, k, ubar, s } => json!({
                "psi0": psi0.to_json(),
                "f": f.to_json(),
                "k": scalars_json(&upper(k)),
                "ubar": scalars_json(ubar),
                "s": s.to_json(),
            }),
            ChartPoint::Gr24 { g } => json!({"g": g.iter().map(|r| scalars_json(r)).collect::<Vec<_>>()}),
        };
        json!({"chart": self.kind().name(), "params": params})
    }

    pub fn from_json(v: &Value) -> Result<ChartPoint> {
        let kind = ChartKind::parse(field(v, "chart")?.as_str().ok_or_else(|| AtlasError::Parse("chart must be a string".into()))?)?;
        let p = field(v, "params")?;
        let sc = |key: &str| ExtScalar::from_json(field(p, key)?);
        Ok(match kind {
            ChartKind::S => ChartPoint::S { psi: Spinor::from_json(5, Chirality::Plus, field(p, "psi")?)?, s: sc("s")? },
            ChartKind::TPlus => ChartPoint::TPlus {
                t: sc("t")?,
                eta: Spinor::from_json(4, Chirality::Minus, field(p, "eta")?)?,
                u: scalars_from(field(p, "u")?, 8, "u")?,
            },
            ChartKind::TMinus => ChartPoint::TMinus {
                t: sc("t")?,
                xi: Spinor::from_json(4, Chirality::Plus, field(p, "xi")?)?,
                u: scalars_from(field(p, "u")?, 8, "u")?,
            },
            ChartKind::XInfty => ChartPoint::XInfty {
                psi0: Spinor::from_json(5, Chirality::Plus, field(p, "psi0")?)?,
                f: sc("f")?,
                k: from_upper(&scalars_from(field(p, "k")?, 45, "k")?),
                ubar: scalars_from(field(p, "ubar")?, 10, "ubar")?,
                s: sc("s")?,
            },
            ChartKind::Gr24 => {
                let rows = field(p, "g")?.as_array().ok_or_else(|| AtlasError::Parse("g: expected rows".into()))?;
                if rows.len() != 4 {
                    return Err(AtlasError::DimensionMismatch("g must be 4×4".into()));
                }
                ChartPoint::Gr24 { g: rows.iter().map(|r| scalars_from(r, 4, "g row")).collect::<Result<_>>()? }
            }
        })
    }
}

/// Re-solve a chart point in another chart.
pub fn chart_transition(p: &ChartPoint, target: ChartKind) -> Result<ChartPoint> {
    ChartPoint::from_vector(&p.assemble()?, target)
}

/// Equal up to scale: every 2×2 minor of the stacked coordinates vanishes.
pub fn proportional(a: &Vector27, b: &Vector27) -> bool {
    let x = a.coords();
    let y = b.coords();
    for i in 0..27 {
        for j in i + 1..27 {
            if !(&(&x[i] * &y[j]) - &(&x[j] * &y[i])).is_zero() {
                return false;
            }
        }
    }
    true
}

/// One factor of an orbit word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    Xi(Spinor),
    Eta(Spinor),
    Rotate(PlaneRotation),
}

impl Letter {
    fn generator(&self) -> Option<LieElement> {
        match self {
            Letter::Xi(x) => Some(xi_generator(x)),
            Letter::Eta(e) => Some(eta_generator(e)),
            Letter::Rotate(_) => None,
        }
    }

    /// exp(z)Ψ = Ψ + zΨ + ½ z(zΨ) for spinor letters; Ωψ, ΩvΩ⁻¹ for rotations.
    pub fn apply(&self, p: &Vector27) -> Vector27 {
        match (self, self.generator()) {
            (Letter::Rotate(r), _) => r.apply(p),
            (_, Some(z)) => {
                let once = act27(&z, p).expect("e6 element");
                let twice = act27(&z, &once).expect("e6 element");
                p.add(&once).add(&twice.scale(&q(1, 2)))
            }
            _ => unreachable!(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Letter::Xi(x) => json!({"xi": x.to_json()}),
            Letter::Eta(e) => json!({"eta": e.to_json()}),
            Letter::Rotate(r) => json!({"rotate": [r.a, r.b]}),
        }
    }
}

const SMALL: [(i64, i64); 6] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)];

fn sparse_spinor(rng: &mut Rng, chirality: Chirality) -> Spinor {
    let idx = chiral_indices(5, chirality);
    let at = idx[rng.below(idx.len() as u32) as usize];
    let (n, d) = SMALL[rng.below(SMALL.len() as u32) as usize];
    let mut s = Spinor::zero(5, chirality);
    s.coeffs[at] = q(n, d);
    s
}

/// A seeded word: dense or single-state spinor exponentials and plane rotations.
pub fn orbit_word(seed: u64, len: usize) -> Vec<Letter> {
    let mut rng = Rng::new(seed).fork("orbit");
    (0..len)
        .map(|_| match rng.below(7) {
            0 => Letter::Xi(Spinor::random(5, Chirality::Plus, &mut rng)),
            1 => Letter::Eta(Spinor::random(5, Chirality::Minus, &mut rng)),
            2 | 3 => Letter::Xi(sparse_spinor(&mut rng, Chirality::Plus)),
            4 | 5 => Letter::Eta(sparse_spinor(&mut rng, Chirality::Minus)),
            _ => {
                let a = rng.below(10) as usize;
                let b = (a + 1 + rng.below(9) as usize) % 10;
                Letter::Rotate(PlaneRotation { a, b })
            }
        })
        .collect()
}

/// The word of `orbit_word(seed, len)` applied to Ψ₀ = (0, 0, 1).
pub fn orbit_sample(seed: u64, len: usize) -> Result<Vector27> {
    if len == 0 {
        return Err(AtlasError::Invalid("word length must be at least 1".into()));
    }
    Ok(orbit_word(seed, len).iter().rev().fold(Vector27::lowest(), |p, l| l.apply(&p)))
}

/// Dimension of e6∘P, the tangent space of the affine cone at P (17 on the orbit).
pub fn orbit_tangent_rank(p: &Vector27) -> usize {
    let rows: Vec<SparseRow> = (0..E6_DIM)
        .map(|k| {
            let img = act27(&LieElement::basis(Algebra::E6, k), p).expect("e6").coords();
            img.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect();
    rank_of(&rows, 27)
}

/// Which charts contain a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub s: bool,
    pub tplus: bool,
    pub tminus: bool,
    /// Smallest a with a nonzero rotated t̂±, when t₊ = t₋ = 0.
    pub rotation: Option<usize>,
    /// f ≠ 0 for the standard pure spinor.
    pub xinfty_standard: bool,
    /// First Δ⁺ basis state ψ₀ (all are pure) with ⟨ψ₀ψ⟩ ≠ 0.
    pub xinfty_frame: Option<usize>,
}

impl Coverage {
    /// Covered using only the standard frame for the X∞ chart.
    pub fn covered_standard(&self) -> bool {
        self.s || self.tplus || self.tminus || self.rotation.is_some() || self.xinfty_standard
    }

    /// Covered when the X∞ chart may be centred on any coordinate pure spinor.
    pub fn covered(&self) -> bool {
        self.covered_standard() || self.xinfty_frame.is_some()
    }
}

pub fn coverage(p: &Vector27) -> Coverage {
    let (tp, tm) = t_pm(&p.v);
    let rotation = if tp.is_zero() && tm.is_zero() { rotation_for_tcharts(p) } else { None };
    let plus = chiral_indices(5, Chirality::Plus);
    Coverage {
        s: !p.s.is_zero(),
        tplus: !tp.is_zero(),
        tminus: !tm.is_zero(),
        rotation,
        xinfty_standard: !p.psi.coeffs[plus[0]].is_zero(),
        xinfty_frame: plus.into_iter().find(|&k| !p.psi.coeffs[k].is_zero()),
    }
}

/// z_ij = g_i1 g_j2 − g_j1 g_i2 in the order z₁₂, z₁₃, z₁₄, z₂₃, z₂₄, z₃₄.
pub fn gr24_plucker(g: &Matrix) -> Result<[ExtScalar; 6]> {
    if g.len() != 4 || g.iter().any(|r| r.len() != 4) {
        return Err(AtlasError::DimensionMismatch("Gr(2,4) needs a 4×4 matrix".into()));
    }
    let z = |i: usize, j: usize| &(&g[i][0] * &g[j][1]) - &(&g[j][0] * &g[i][1]);
    Ok([z(0, 1), z(0, 2), z(0, 3), z(1, 2), z(1, 3), z(2, 3)])
}

/// z₁₂z₃₄ + z₁₃z₄₂ + z₁₄z₂₃.
pub fn gr24_relation(z: &[ExtScalar; 6]) -> ExtScalar {
    let [z12, z13, z14, z23, z24, z34] = z;
    &(&(z12 * z34) - &(z13 * z24)) + &(z14 * z23)
}
