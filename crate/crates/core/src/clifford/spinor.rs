use serde_json::Value;

use super::GammaRep;
use crate::error::{AtlasError, Result};
use crate::rng::Rng;
use crate::scalar::ExtScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chirality {
    Plus,
    Minus,
    Mixed,
}

impl Chirality {
    pub fn flip(self) -> Chirality {
        match self {
            Chirality::Plus => Chirality::Minus,
            Chirality::Minus => Chirality::Plus,
            Chirality::Mixed => Chirality::Mixed,
        }
    }

    pub fn sign(self) -> Option<i8> {
        match self {
            Chirality::Plus => Some(1),
            Chirality::Minus => Some(-1),
            Chirality::Mixed => None,
        }
    }

    pub fn from_sign(s: i8) -> Chirality {
        if s > 0 {
            Chirality::Plus
        } else {
            Chirality::Minus
        }
    }
}

/// Dense spinor of length 2ⁿ with a chirality tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spinor {
    pub n: usize,
    pub chirality: Chirality,
    pub coeffs: Vec<ExtScalar>,
}

/// Indices of the basis states with the given chirality, ascending.
pub fn chiral_indices(n: usize, chirality: Chirality) -> Vec<usize> {
    let want = chirality.sign();
    (0..1usize << n)
        .filter(|&r| {
            let s = if (r as u32).count_ones() % 2 == 0 { 1 } else { -1 };
            want.map_or(true, |w| w == s)
        })
        .collect()
}

impl Spinor {
    pub(crate) fn raw(n: usize, chirality: Chirality, coeffs: Vec<ExtScalar>) -> Spinor {
        Spinor { n, chirality, coeffs }
    }

    pub fn zero(n: usize, chirality: Chirality) -> Spinor {
        Spinor { n, chirality, coeffs: vec![ExtScalar::zero(); 1 << n] }
    }

    /// Checks that the coefficients respect the chirality tag.
    pub fn new(n: usize, chirality: Chirality, coeffs: Vec<ExtScalar>) -> Result<Spinor> {
        if coeffs.len() != 1 << n {
            return Err(AtlasError::DimensionMismatch(format!(
                "spinor of half-dimension {n} needs {} coefficients, got {}",
                1 << n,
                coeffs.len()
            )));
        }
        if let Some(s) = chirality.sign() {
            for (r, c) in coeffs.iter().enumerate() {
                let rs = if (r as u32).count_ones() % 2 == 0 { 1 } else { -1 };
                if rs != s && !c.is_zero() {
                    return Err(AtlasError::Chirality(format!(
                        "component {r} nonzero in a {chirality:?} spinor"
                    )));
                }
            }
        }
        Ok(Spinor { n, chirality, coeffs })
    }

    /// Basis state with the given index.
    pub fn basis(n: usize, index: usize) -> Spinor {
        let mut coeffs = vec![ExtScalar::zero(); 1 << n];
        coeffs[index] = ExtScalar::one();
        let chirality = Chirality::from_sign(GammaRep::get(n).chirality_sign(index));
        Spinor { n, chirality, coeffs }
    }

    /// Build from the 2ⁿ⁻¹ components of a chiral half, in ascending index order.
    pub fn from_chiral(n: usize, chirality: Chirality, comps: &[ExtScalar]) -> Result<Spinor> {
        let idx = chiral_indices(n, chirality);
        if comps.len() != idx.len() {
            return Err(AtlasError::DimensionMismatch(format!(
                "chiral spinor needs {} components, got {}",
                idx.len(),
                comps.len()
            )));
        }
        let mut coeffs = vec![ExtScalar::zero(); 1 << n];
        for (i, c) in idx.into_iter().zip(comps) {
            coeffs[i] = c.clone();
        }
        Ok(Spinor { n, chirality, coeffs })
    }

    pub fn chiral_components(&self) -> Vec<ExtScalar> {
        chiral_indices(self.n, self.chirality).into_iter().map(|i| self.coeffs[i].clone()).collect()
    }

    pub fn random(n: usize, chirality: Chirality, rng: &mut Rng) -> Spinor {
        let comps: Vec<ExtScalar> = (0..chiral_indices(n, chirality).len()).map(|_| rng.gaussian()).collect();
        Spinor::from_chiral(n, chirality, &comps).expect("sizes agree")
    }

    /// Spinor whose chirality tag is recomputed from the coefficients.
    pub fn retag(mut self) -> Spinor {
        let mut plus = false;
        let mut minus = false;
        for (r, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if (r as u32).count_ones() % 2 == 0 {
                    plus = true;
                } else {
                    minus = true;
                }
            }
        }
        self.chirality = match (plus, minus) {
            (true, true) => Chirality::Mixed,
            (false, true) => Chirality::Minus,
            (true, false) => Chirality::Plus,
            (false, false) => self.chirality,
        };
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Spinor) -> Spinor {
        let chirality = if self.chirality == rhs.chirality || rhs.is_zero() {
            self.chirality
        } else if self.is_zero() {
            rhs.chirality
        } else {
            Chirality::Mixed
        };
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Spinor { n: self.n, chirality, coeffs }
    }

    pub fn sub(&self, rhs: &Spinor) -> Spinor {
        self.add(&rhs.scale(&ExtScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &ExtScalar) -> Spinor {
        Spinor {
            n: self.n,
            chirality: self.chirality,
            coeffs: self.coeffs.iter().map(|x| if x.is_zero() { x.clone() } else { x * c }).collect(),
        }
    }

    pub fn conjugate(&self) -> Spinor {
        Spinor { n: self.n, chirality: self.chirality, coeffs: self.coeffs.iter().map(|c| c.conjugate()).collect() }
    }

    /// C ψ*.
    pub fn charge_conjugate(&self) -> Spinor {
        let rep = GammaRep::get(self.n);
        let coeffs = rep.charge().apply(&self.conjugate().coeffs);
        let chirality = if self.n % 2 == 0 { self.chirality } else { self.chirality.flip() };
        Spinor { n: self.n, chirality, coeffs }
    }

    pub fn apply_perm(&self, m: &super::SignedPerm, flips: bool) -> Spinor {
        Spinor {
            n: self.n,
            chirality: if flips { self.chirality.flip() } else { self.chirality },
            coeffs: m.apply(&self.coeffs),
        }
    }

    /// JSON array of the chiral components (all 2ⁿ components for a mixed spinor).
    pub fn to_json(&self) -> Value {
        let comps = match self.chirality {
            Chirality::Mixed => self.coeffs.clone(),
            _ => self.chiral_components(),
        };
        Value::Array(comps.iter().map(|c| c.to_json()).collect())
    }

    pub fn from_json(n: usize, chirality: Chirality, v: &Value) -> Result<Spinor> {
        let arr = v.as_array().ok_or_else(|| AtlasError::Parse(format!("expected spinor array, got {v}")))?;
        let comps = arr.iter().map(ExtScalar::from_json).collect::<Result<Vec<_>>>()?;
        match chirality {
            Chirality::Mixed => Spinor::new(n, chirality, comps),
            _ => Spinor::from_chiral(n, chirality, &comps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chiral_roundtrip() {
        let mut rng = Rng::new(9);
        let s = Spinor::random(5, Chirality::Plus, &mut rng);
        assert_eq!(s.chiral_components().len(), 16);
        let back = Spinor::from_chiral(5, Chirality::Plus, &s.chiral_components()).unwrap();
        assert_eq!(back, s);
        let j = s.to_json();
        assert_eq!(Spinor::from_json(5, Chirality::Plus, &j).unwrap(), s);
    }

    #[test]
    fn rejects_wrong_chirality() {
        let mut c = vec![ExtScalar::zero(); 16];
        c[1] = ExtScalar::one();
        assert!(Spinor::new(4, Chirality::Plus, c.clone()).is_err());
        assert!(Spinor::new(4, Chirality::Minus, c).is_ok());
    }
}
