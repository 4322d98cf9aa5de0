//! Octonions from the D=8 spinor representation.
//!
//! Octonion basis eᵏ (k = 0..7) is the 8D generator with 0-based index k. The product is
//! u⋆v = (t(u) eⁱ s(v)) eⁱ with s = (|++++⟩ + |−−−−⟩)/√2 ∈ Δ⁺ and t = e⁰s ∈ Δ⁻.

use std::fmt;
use std::sync::OnceLock;

use serde_json::Value;

use crate::clifford::{bilinear_vector, pair_bilinear, vector_act, Chirality, GammaRep, Spinor};
use crate::error::{AtlasError, Result};
use crate::report::CheckResult;
use crate::rng::Rng;
use crate::scalar::{q, ExtScalar};

pub const HALF: usize = 4;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Octonion(pub [ExtScalar; 8]);

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})e{k}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Octonion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(k: usize) -> Self {
        let mut o = Self::zero();
        o.0[k] = ExtScalar::one();
        o
    }

    pub fn real(c: ExtScalar) -> Self {
        let mut o = Self::zero();
        o.0[0] = c;
        o
    }

    pub fn from_slice(v: &[ExtScalar]) -> Result<Self> {
        if v.len() != 8 {
            return Err(AtlasError::DimensionMismatch(format!("octonion needs 8 components, got {}", v.len())));
        }
        Ok(Octonion(std::array::from_fn(|k| v[k].clone())))
    }

    pub fn random(rng: &mut Rng) -> Self {
        Octonion(std::array::from_fn(|_| rng.gaussian()))
    }

    pub fn random_real(rng: &mut Rng) -> Self {
        Octonion(std::array::from_fn(|_| rng.real()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|k| &self.0[k] + &o.0[k]))
    }

    pub fn sub(&self, o: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|k| &self.0[k] - &o.0[k]))
    }

    pub fn scale(&self, c: &ExtScalar) -> Octonion {
        Octonion(std::array::from_fn(|k| &self.0[k] * c))
    }

    pub fn neg(&self) -> Octonion {
        self.scale(&ExtScalar::from_int(-1))
    }

    /// x̄ = 2(x·e⁰)e⁰ − x.
    pub fn bar(&self) -> Octonion {
        Octonion(std::array::from_fn(|k| if k == 0 { self.0[0].clone() } else { -&self.0[k] }))
    }

    /// Complex conjugation of the coefficients.
    pub fn conj_coeffs(&self) -> Octonion {
        Octonion(std::array::from_fn(|k| self.0[k].conjugate()))
    }

    /// Bilinear dot product.
    pub fn dot(&self, o: &Octonion) -> ExtScalar {
        crate::clifford::dot(&self.0, &o.0)
    }

    pub fn norm2(&self) -> ExtScalar {
        self.dot(self)
    }

    pub fn star(&self, o: &Octonion) -> Octonion {
        let table = structure_table();
        let mut out = Octonion::zero();
        for a in 0..8 {
            if self.0[a].is_zero() {
                continue;
            }
            for b in 0..8 {
                if o.0[b].is_zero() {
                    continue;
                }
                let (sign, k) = table[a][b];
                let c = &self.0[a] * &o.0[b];
                if sign > 0 {
                    out.0[k] += &c;
                } else {
                    out.0[k] -= &c;
                }
            }
        }
        out
    }

    /// x⁻¹ = x̄ / (x·x).
    pub fn inverse(&self) -> Result<Octonion> {
        let n = self.norm2();
        let inv = n.inverse().map_err(|_| AtlasError::DivisionByZero)?;
        Ok(self.bar().scale(&inv))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(|c| c.to_json()).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| AtlasError::Parse(format!("expected octonion array, got {v}")))?;
        let comps = arr.iter().map(ExtScalar::from_json).collect::<Result<Vec<_>>>()?;
        Octonion::from_slice(&comps)
    }
}

/// The reference spinor s ∈ Δ⁺₈.
pub fn spinor_s() -> Spinor {
    let mut s = Spinor::zero(HALF, Chirality::Plus);
    s.coeffs[0] = ExtScalar::inv_sqrt2();
    s.coeffs[15] = ExtScalar::inv_sqrt2();
    s
}

/// t = e⁰ s ∈ Δ⁻₈.
pub fn spinor_t() -> Spinor {
    let rep = GammaRep::get(HALF);
    spinor_s().apply_perm(rep.gamma(0), true)
}

/// s(v) = v s ∈ Δ⁻.
pub fn s_map(v: &Octonion) -> Spinor {
    vector_act(&v.0, &spinor_s())
}

/// t(v) = v t ∈ Δ⁺.
pub fn t_map(v: &Octonion) -> Spinor {
    vector_act(&v.0, &spinor_t())
}

/// s⁻¹(η) = (s eⁱ η) eⁱ for η ∈ Δ⁻.
pub fn s_inv(eta: &Spinor) -> Octonion {
    Octonion::from_slice(&bilinear_vector(&spinor_s(), eta)).expect("8 components")
}

/// t⁻¹(ξ) = (t eⁱ ξ) eⁱ for ξ ∈ Δ⁺.
pub fn t_inv(xi: &Spinor) -> Octonion {
    Octonion::from_slice(&bilinear_vector(&spinor_t(), xi)).expect("8 components")
}

/// ξ̄ = 2(sξ)s − ξ.
pub fn bar_plus(xi: &Spinor) -> Spinor {
    let s = spinor_s();
    let c = pair_bilinear(&s, 0, xi).expect("Δ⁺ pairing");
    s.scale(&(&c * &ExtScalar::from_int(2))).sub(xi).retag_as(xi.chirality)
}

/// η̄ = 2(tη)t − η.
pub fn bar_minus(eta: &Spinor) -> Spinor {
    let t = spinor_t();
    let c = pair_bilinear(&t, 0, eta).expect("Δ⁻ pairing");
    t.scale(&(&c * &ExtScalar::from_int(2))).sub(eta).retag_as(eta.chirality)
}

trait RetagAs {
    fn retag_as(self, c: Chirality) -> Spinor;
}

impl RetagAs for Spinor {
    fn retag_as(mut self, c: Chirality) -> Spinor {
        self.chirality = c;
        self
    }
}

/// The product computed directly from spinor bilinears, without the cached table.
pub fn star_via_spinors(u: &Octonion, v: &Octonion) -> Octonion {
    let tu = t_map(u);
    let sv = s_map(v);
    Octonion::from_slice(&bilinear_vector(&tu, &sv)).expect("8 components")
}

/// eᵃ⋆eᵇ = sign · eᵏ for every pair of basis elements.
pub fn structure_table() -> &'static [[(i8, usize); 8]; 8] {
    static TABLE: OnceLock<[[(i8, usize); 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [[(0i8, 0usize); 8]; 8];
        for (a, row) in table.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                let p = star_via_spinors(&Octonion::unit(a), &Octonion::unit(b));
                let nz: Vec<usize> = (0..8).filter(|&k| !p.0[k].is_zero()).collect();
                assert_eq!(nz.len(), 1, "basis product e{a}⋆e{b} is not a signed basis element: {p:?}");
                let k = nz[0];
                *cell = if p.0[k] == ExtScalar::one() {
                    (1, k)
                } else if p.0[k] == ExtScalar::from_int(-1) {
                    (-1, k)
                } else {
                    panic!("basis product e{a}⋆e{b} has coefficient {}", p.0[k]);
                };
            }
        }
        table
    })
}

/// Row-major text rendering of the multiplication table.
pub fn table_text() -> String {
    let t = structure_table();
    let mut out = String::from("  ⋆ |");
    for b in 0..8 {
        out.push_str(&format!("  e{b}"));
    }
    out.push('\n');
    for (a, row) in t.iter().enumerate() {
        out.push_str(&format!(" e{a} |"));
        for &(s, k) in row {
            out.push_str(&format!(" {}e{k}", if s > 0 { " " } else { "-" }));
        }
        out.push('\n');
    }
    out
}

pub fn table_json() -> Value {
    let t = structure_table();
    Value::Array(
        t.iter()
            .map(|row| Value::Array(row.iter().map(|&(s, k)| Value::from(s as i64 * (k as i64 + 1))).collect()))
            .collect(),
    )
}

pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
    a.star(b).star(c).sub(&a.star(&b.star(c)))
}

/// Randomised checks of the octonion laws and the spinor dictionary.
pub fn run_checks(rng: &mut Rng, trials: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let two = ExtScalar::from_int(2);

    out.push(CheckResult::from_outcome("octonion.table_matches_spinor_route", 64, {
        let mut fail = None;
        'outer: for a in 0..8 {
            for b in 0..8 {
                let (s, k) = structure_table()[a][b];
                let direct = star_via_spinors(&Octonion::unit(a), &Octonion::unit(b));
                if direct != Octonion::unit(k).scale(&ExtScalar::from_int(s as i64)) {
                    fail = Some(format!("e{a}*e{b}"));
                    break 'outer;
                }
            }
        }
        fail
    }));

    let mut sym = None;
    let mut alt = None;
    let mut moufang = None;
    let mut dict = None;
    let mut bars = None;
    for trial in 0..trials {
        let u = Octonion::random(rng);
        let v = Octonion::random(rng);
        let w = Octonion::random(rng);
        // u⋆ū = u·u
        if sym.is_none() {
            let lhs1 = u.star(&u.bar());
            let lhs2 = u.star(&v).add(&v.star(&u));
            let rhs2 = v
                .scale(&u.0[0])
                .add(&u.scale(&v.0[0]))
                .sub(&Octonion::real(u.dot(&v)))
                .scale(&two);
            let lhs3 = u.star(&v.bar()).add(&v.star(&u.bar()));
            if lhs1 != Octonion::real(u.norm2()) || lhs2 != rhs2 || lhs3 != Octonion::real(u.dot(&v).scale(&2.into()))
            {
                sym = Some(format!("trial {trial}"));
            }
        }
        if alt.is_none() {
            let a1 = associator(&u, &v, &w);
            let a2 = associator(&v, &u, &w);
            let a3 = associator(&u, &w, &v);
            if !a1.add(&a2).is_zero() || !a1.add(&a3).is_zero() || !associator(&u, &u, &v).is_zero() {
                alt = Some(format!("trial {trial}"));
            }
        }
        if moufang.is_none() {
            let l = u.star(&v).star(&u);
            let r = u.star(&v.star(&u));
            let expect = v.bar().scale(&-u.norm2()).add(&u.scale(&(&two * &u.dot(&v.bar()))));
            let inner = u.star(&u.bar().star(&v));
            if l != r || l != expect || inner != v.scale(&u.norm2()) {
                moufang = Some(format!("trial {trial}"));
            }
        }
        if dict.is_none() || bars.is_none() {
            let xi = Spinor::random(HALF, Chirality::Plus, rng);
            let eta = Spinor::random(HALF, Chirality::Minus, rng);
            let xi2 = Spinor::random(HALF, Chirality::Plus, rng);
            let eta2 = Spinor::random(HALF, Chirality::Minus, rng);
            if let Some(w) = dictionary_failure(&u, &xi, &eta, &xi2, &eta2) {
                dict = Some(format!("trial {trial}: {w}"));
            }
            // bars are compatible with the maps
            if t_inv(&bar_plus(&xi)) != t_inv(&xi).bar() || s_inv(&bar_minus(&eta)) != s_inv(&eta).bar() {
                bars = Some(format!("trial {trial}"));
            }
        }
    }
    out.push(CheckResult::from_outcome("octonion.symmetric_part_laws", trials, sym));
    out.push(CheckResult::from_outcome("octonion.alternative", trials, alt));
    out.push(CheckResult::from_outcome("octonion.flexible_and_inverse", trials, moufang));
    out.push(CheckResult::from_outcome("octonion.spinor_dictionary", trials, dict));
    out.push(CheckResult::from_outcome("octonion.bar_compatible_with_maps", trials, bars));
    out
}

/// The eight dictionary identities between ⋆ and Clifford multiplication.
pub fn dictionary_failure(x: &Octonion, xi: &Spinor, eta: &Spinor, xi2: &Spinor, eta2: &Spinor) -> Option<String> {
    let sinv = s_inv(eta);
    let tinv = t_inv(xi);
    let xbar = x.bar();
    let act = |o: &Octonion, sp: &Spinor| vector_act(&o.0, sp);
    let checks: Vec<(&str, bool)> = vec![
        ("t(x*s^-1(eta)) = x eta_bar", t_map(&x.star(&sinv)) == act(x, &bar_minus(eta))),
        ("t(s^-1(eta)*x) = bar(x_bar eta)", t_map(&sinv.star(x)) == bar_plus(&act(&xbar, eta))),
        ("s(t^-1(xi)*x) = x xi_bar", s_map(&tinv.star(x)) == act(x, &bar_plus(xi))),
        ("s(x*t^-1(xi)) = bar(x_bar xi)", s_map(&x.star(&tinv)) == bar_minus(&act(&xbar, xi))),
        (
            "t^-1(xi)*s^-1(eta) = (xi e eta) e",
            tinv.star(&sinv).0.to_vec() == bilinear_vector(xi, eta),
        ),
        ("s^-1(eta)*t^-1(xi) = bar((eta_bar e xi_bar) e)", {
            let v = Octonion::from_slice(&bilinear_vector(&bar_minus(eta), &bar_plus(xi))).unwrap();
            sinv.star(&tinv) == v.bar()
        }),
        ("t^-1 symmetrised = 2(xi1 xi2)", {
            let lhs = t_inv(&bar_plus(xi)).star(&t_inv(xi2)).add(&t_inv(&bar_plus(xi2)).star(&t_inv(xi)));
            let c = pair_bilinear(xi, 0, xi2).unwrap();
            lhs == Octonion::real(c.scale(&2.into()))
        }),
        ("s^-1 symmetrised = 2(eta1 eta2)", {
            let lhs = s_inv(&bar_minus(eta)).star(&s_inv(eta2)).add(&s_inv(&bar_minus(eta2)).star(&s_inv(eta)));
            let c = pair_bilinear(eta, 0, eta2).unwrap();
            lhs == Octonion::real(c.scale(&2.into()))
        }),
    ];
    checks.into_iter().find(|(_, ok)| !ok).map(|(name, _)| name.to_string())
}

/// ½ as a scalar, used by callers building octonion matrices.
pub fn half() -> ExtScalar {
    q(1, 2)
}
