use serde_json::{json, Value};

use crate::error::{AtlasError, Result};
use crate::octonion::Octonion;
use crate::rng::Rng;
use crate::scalar::{q, ExtScalar};

/// 3×3 Hermitian octonion matrix stored by its diagonal and upper triangle; the lower
/// triangle is the ℂ-linear bar of the upper one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanMatrix {
    pub d: [ExtScalar; 3],
    pub x12: Octonion,
    pub x23: Octonion,
    pub x13: Octonion,
}

pub type Full3 = [[Octonion; 3]; 3];

impl JordanMatrix {
    pub fn zero() -> Self {
        Self::diagonal([ExtScalar::zero(), ExtScalar::zero(), ExtScalar::zero()])
    }

    pub fn identity() -> Self {
        Self::diagonal([ExtScalar::one(), ExtScalar::one(), ExtScalar::one()])
    }

    pub fn diagonal(d: [ExtScalar; 3]) -> Self {
        JordanMatrix { d, x12: Octonion::zero(), x23: Octonion::zero(), x13: Octonion::zero() }
    }

    pub fn random(rng: &mut Rng) -> Self {
        JordanMatrix {
            d: [rng.gaussian(), rng.gaussian(), rng.gaussian()],
            x12: Octonion::random(rng),
            x23: Octonion::random(rng),
            x13: Octonion::random(rng),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Octonion {
        match (i, j) {
            (a, b) if a == b => Octonion::real(self.d[a].clone()),
            (0, 1) => self.x12.clone(),
            (1, 2) => self.x23.clone(),
            (0, 2) => self.x13.clone(),
            (1, 0) => self.x12.bar(),
            (2, 1) => self.x23.bar(),
            (2, 0) => self.x13.bar(),
            _ => panic!("entry ({i}, {j}) out of range"),
        }
    }

    pub fn full(&self) -> Full3 {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j)))
    }

    /// Reads back a full matrix, failing unless it is Hermitian with scalar diagonal.
    pub fn from_full(m: &Full3) -> Result<Self> {
        let mut d: [ExtScalar; 3] = Default::default();
        for (k, dk) in d.iter_mut().enumerate() {
            let e = &m[k][k];
            if e.0[1..].iter().any(|c| !c.is_zero()) {
                return Err(AtlasError::Invalid(format!("diagonal entry {k} is not a scalar")));
            }
            *dk = e.0[0].clone();
        }
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            if m[j][i] != m[i][j].bar() {
                return Err(AtlasError::Invalid(format!("entries ({i},{j}) and ({j},{i}) are not conjugate")));
            }
        }
        Ok(JordanMatrix { d, x12: m[0][1].clone(), x23: m[1][2].clone(), x13: m[0][2].clone() })
    }

    pub fn add(&self, o: &Self) -> Self {
        JordanMatrix {
            d: std::array::from_fn(|k| &self.d[k] + &o.d[k]),
            x12: self.x12.add(&o.x12),
            x23: self.x23.add(&o.x23),
            x13: self.x13.add(&o.x13),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&ExtScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &ExtScalar) -> Self {
        JordanMatrix {
            d: std::array::from_fn(|k| &self.d[k] * c),
            x12: self.x12.scale(c),
            x23: self.x23.scale(c),
            x13: self.x13.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(|c| c.is_zero()) && self.x12.is_zero() && self.x23.is_zero() && self.x13.is_zero()
    }

    pub fn trace(&self) -> ExtScalar {
        &(&self.d[0] + &self.d[1]) + &self.d[2]
    }

    /// Upper-triangle octonions in the order x12, x23, x13.
    pub fn to_json(&self) -> Value {
        json!({
            "diag": self.d.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "oct": [self.x12.to_json(), self.x23.to_json(), self.x13.to_json()],
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let diag = v
            .get("diag")
            .and_then(|d| d.as_array())
            .filter(|d| d.len() == 3)
            .ok_or_else(|| AtlasError::Parse("Jordan matrix needs \"diag\" with 3 entries".into()))?;
        let oct = v
            .get("oct")
            .and_then(|d| d.as_array())
            .filter(|d| d.len() == 3)
            .ok_or_else(|| AtlasError::Parse("Jordan matrix needs \"oct\" with 3 octonions".into()))?;
        let d = diag.iter().map(ExtScalar::from_json).collect::<Result<Vec<_>>>()?;
        let o = oct.iter().map(Octonion::from_json).collect::<Result<Vec<_>>>()?;
        Ok(JordanMatrix {
            d: [d[0].clone(), d[1].clone(), d[2].clone()],
            x12: o[0].clone(),
            x23: o[1].clone(),
            x13: o[2].clone(),
        })
    }
}

pub fn full_mul(a: &Full3, b: &Full3) -> Full3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(Octonion::zero(), |acc, k| acc.add(&a[i][k].star(&b[k][j]))))
    })
}

/// A⋆B = ½(AB + BA).
pub fn jordan_star(a: &JordanMatrix, b: &JordanMatrix) -> JordanMatrix {
    let (fa, fb) = (a.full(), b.full());
    let ab = full_mul(&fa, &fb);
    let ba = full_mul(&fb, &fa);
    let half = q(1, 2);
    let sum: Full3 = std::array::from_fn(|i| std::array::from_fn(|j| ab[i][j].add(&ba[i][j]).scale(&half)));
    JordanMatrix::from_full(&sum).expect("the anticommutator of Hermitian matrices is Hermitian")
}

/// αβγ − (α x⋆x̄ + β y⋆ȳ + γ z⋆z̄) + 2 z·(x⋆y) for [[α, z̄, ȳ], [z, β, x], [y, x̄, γ]].
pub fn det_generic(m: &JordanMatrix) -> ExtScalar {
    let [al, be, ga] = &m.d;
    let x = &m.x23;
    let y = m.x13.bar();
    let z = m.x12.bar();
    let prod = &(al * be) * ga;
    let norms = &(&(al * &x.norm2()) + &(be * &y.norm2())) + &(ga * &z.norm2());
    let cross = &z.dot(&x.star(&y)) * &ExtScalar::from_int(2);
    &(&prod - &norms) + &cross
}
