//! Exact scalars in ℚ(i)[√2].
//!
//! A value is `(a_re + i a_im) + (b_re + i b_im)·√2` with every component a reduced
//! rational.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde_json::{json, Value};

use crate::error::{AtlasError, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtScalar {
    pub a_re: Rational,
    pub a_im: Rational,
    pub b_re: Rational,
    pub b_im: Rational,
}

/// Gaussian-rational helpers on (re, im) pairs.
fn gmul(ar: &Rational, ai: &Rational, br: &Rational, bi: &Rational) -> (Rational, Rational) {
    if ai.is_zero() && bi.is_zero() {
        return (ar * br, Rational::ZERO);
    }
    (ar * br - ai * bi, ar * bi + ai * br)
}

impl ExtScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::gaussian(Rational::ZERO, Rational::ONE)
    }

    pub fn sqrt2() -> Self {
        ExtScalar { b_re: Rational::ONE, ..Self::default() }
    }

    /// 1/√2 = √2/2.
    pub fn inv_sqrt2() -> Self {
        ExtScalar { b_re: Rational::new(1, 2), ..Self::default() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n, d))
    }

    pub fn from_rational(r: Rational) -> Self {
        ExtScalar { a_re: r, ..Self::default() }
    }

    pub fn gaussian(re: Rational, im: Rational) -> Self {
        ExtScalar { a_re: re, a_im: im, ..Self::default() }
    }

    pub fn new(a_re: Rational, a_im: Rational, b_re: Rational, b_im: Rational) -> Self {
        ExtScalar { a_re, a_im, b_re, b_im }
    }

    pub fn is_zero(&self) -> bool {
        self.a_re.is_zero() && self.a_im.is_zero() && self.b_re.is_zero() && self.b_im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a_re.is_one() && self.a_im.is_zero() && self.b_re.is_zero() && self.b_im.is_zero()
    }

    /// True when the value lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.a_im.is_zero() && self.b_re.is_zero() && self.b_im.is_zero()
    }

    /// True when the value lies in ℝ (ℚ[√2]).
    pub fn is_real(&self) -> bool {
        self.a_im.is_zero() && self.b_im.is_zero()
    }

    /// Complex conjugation: i ↦ −i, √2 fixed.
    pub fn conjugate(&self) -> Self {
        ExtScalar {
            a_re: self.a_re.clone(),
            a_im: -&self.a_im,
            b_re: self.b_re.clone(),
            b_im: -&self.b_im,
        }
    }

    /// Galois conjugation √2 ↦ −√2, i fixed.
    pub fn sqrt2_conjugate(&self) -> Self {
        ExtScalar {
            a_re: self.a_re.clone(),
            a_im: self.a_im.clone(),
            b_re: -&self.b_re,
            b_im: -&self.b_im,
        }
    }

    /// Product of all four Galois conjugates; a non-negative rational, zero iff `self` is zero.
    pub fn norm(&self) -> Rational {
        // x · σ(x) = (a² − 2b²) with a, b Gaussian; then |·|².
        let (g_re, g_im) = self.sqrt2_norm_gaussian();
        &g_re * &g_re + &g_im * &g_im
    }

    /// a² − 2b² as a Gaussian rational.
    fn sqrt2_norm_gaussian(&self) -> (Rational, Rational) {
        let (aa_re, aa_im) = gmul(&self.a_re, &self.a_im, &self.a_re, &self.a_im);
        let (bb_re, bb_im) = gmul(&self.b_re, &self.b_im, &self.b_re, &self.b_im);
        let two = Rational::from_int(2);
        (aa_re - &two * &bb_re, aa_im - &two * &bb_im)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AtlasError::DivisionByZero);
        }
        let (g_re, g_im) = self.sqrt2_norm_gaussian();
        let n = &g_re * &g_re + &g_im * &g_im;
        let inv_n = n.recip().expect("norm of nonzero scalar vanished");
        // g⁻¹ = ḡ / |g|²
        let gi_re = &g_re * &inv_n;
        let gi_im = -(&g_im * &inv_n);
        let c = self.sqrt2_conjugate();
        Ok(c.mul_gaussian(&gi_re, &gi_im))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    fn mul_gaussian(&self, re: &Rational, im: &Rational) -> Self {
        let (a_re, a_im) = gmul(&self.a_re, &self.a_im, re, im);
        let (b_re, b_im) = gmul(&self.b_re, &self.b_im, re, im);
        ExtScalar { a_re, a_im, b_re, b_im }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ExtScalar {
            a_re: &self.a_re * r,
            a_im: &self.a_im * r,
            b_re: &self.b_re * r,
            b_im: &self.b_im * r,
        }
    }

    /// Multiply by i^k.
    pub fn mul_i_pow(&self, k: u8) -> Self {
        match k & 3 {
            0 => self.clone(),
            1 => ExtScalar {
                a_re: -&self.a_im,
                a_im: self.a_re.clone(),
                b_re: -&self.b_im,
                b_im: self.b_re.clone(),
            },
            2 => -self,
            _ => ExtScalar {
                a_re: self.a_im.clone(),
                a_im: -&self.a_re,
                b_re: self.b_im.clone(),
                b_im: -&self.b_re,
            },
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Numerical value (re, im), for display only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let s2 = std::f64::consts::SQRT_2;
        (
            self.a_re.to_f64() + s2 * self.b_re.to_f64(),
            self.a_im.to_f64() + s2 * self.b_im.to_f64(),
        )
    }

    pub fn to_json(&self) -> Value {
        fn q(r: &Rational) -> Value {
            json!([num(&r.numer().to_string()), num(&r.denom().to_string())])
        }
        json!({
            "a": {"re": q(&self.a_re), "im": q(&self.a_im)},
            "b": {"re": q(&self.b_re), "im": q(&self.b_im)},
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        fn q(v: &Value) -> Result<Rational> {
            let arr = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
                AtlasError::Parse(format!("expected [numerator, denominator], got {v}"))
            })?;
            let text = |x: &Value| -> Result<String> {
                match x {
                    Value::Number(n) => Ok(n.to_string()),
                    Value::String(s) => Ok(s.clone()),
                    _ => Err(AtlasError::Parse(format!("expected integer, got {x}"))),
                }
            };
            format!("{}/{}", text(&arr[0])?, text(&arr[1])?)
                .parse()
                .map_err(|e: crate::rational::ParseRationalError| AtlasError::Parse(e.to_string()))
        }
        let part = |key: &str| -> Result<(Rational, Rational)> {
            match v.get(key) {
                None => Ok((Rational::ZERO, Rational::ZERO)),
                Some(p) => {
                    let re = p.get("re").map(q).transpose()?.unwrap_or_default();
                    let im = p.get("im").map(q).transpose()?.unwrap_or_default();
                    Ok((re, im))
                }
            }
        };
        // shorthand for a rational: 3, "-3/2"
        let short = match v {
            Value::Number(n) => Some(n.to_string()),
            Value::String(s) => Some(s.clone()),
            _ => None,
        };
        if let Some(t) = short {
            let r: Rational = t.parse().map_err(|e: crate::rational::ParseRationalError| AtlasError::Parse(e.to_string()))?;
            return Ok(ExtScalar::from_rational(r));
        }
        if !v.is_object() {
            return Err(AtlasError::Parse(format!("expected scalar object, got {v}")));
        }
        let (a_re, a_im) = part("a")?;
        let (b_re, b_im) = part("b")?;
        Ok(ExtScalar { a_re, a_im, b_re, b_im })
    }
}

fn num(s: &str) -> Value {
    // arbitrary_precision keeps big integers exact
    Value::Number(s.parse().expect("integer string"))
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        let mut push = |r: &Rational, unit: &str| {
            if r.is_zero() {
                return;
            }
            let body = if unit.is_empty() {
                r.to_string()
            } else if r.is_one() {
                unit.to_string()
            } else if *r == Rational::from_int(-1) {
                format!("-{unit}")
            } else {
                format!("{r}{unit}")
            };
            terms.push(body);
        };
        push(&self.a_re, "");
        push(&self.a_im, "i");
        push(&self.b_re, "√2");
        push(&self.b_im, "i√2");
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for ExtScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for ExtScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

fn add_impl(x: &ExtScalar, y: &ExtScalar) -> ExtScalar {
    ExtScalar {
        a_re: &x.a_re + &y.a_re,
        a_im: &x.a_im + &y.a_im,
        b_re: &x.b_re + &y.b_re,
        b_im: &x.b_im + &y.b_im,
    }
}

fn sub_impl(x: &ExtScalar, y: &ExtScalar) -> ExtScalar {
    ExtScalar {
        a_re: &x.a_re - &y.a_re,
        a_im: &x.a_im - &y.a_im,
        b_re: &x.b_re - &y.b_re,
        b_im: &x.b_im - &y.b_im,
    }
}

fn mul_impl(x: &ExtScalar, y: &ExtScalar) -> ExtScalar {
    if x.is_zero() || y.is_zero() {
        return ExtScalar::zero();
    }
    let x_rat = x.b_re.is_zero() && x.b_im.is_zero();
    let y_rat = y.b_re.is_zero() && y.b_im.is_zero();
    if y_rat {
        return x.mul_gaussian(&y.a_re, &y.a_im);
    }
    if x_rat {
        return y.mul_gaussian(&x.a_re, &x.a_im);
    }
    // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
    let (ac_re, ac_im) = gmul(&x.a_re, &x.a_im, &y.a_re, &y.a_im);
    let (bd_re, bd_im) = gmul(&x.b_re, &x.b_im, &y.b_re, &y.b_im);
    let (ad_re, ad_im) = gmul(&x.a_re, &x.a_im, &y.b_re, &y.b_im);
    let (bc_re, bc_im) = gmul(&x.b_re, &x.b_im, &y.a_re, &y.a_im);
    let two = Rational::from_int(2);
    ExtScalar {
        a_re: ac_re + &two * &bd_re,
        a_im: ac_im + &two * &bd_im,
        b_re: ad_re + bc_re,
        b_im: ad_im + bc_im,
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar {
            a_re: -&self.a_re,
            a_im: -&self.a_im,
            b_re: -&self.b_re,
            b_im: -&self.b_im,
        }
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&ExtScalar> for &ExtScalar {
            type Output = ExtScalar;
            fn $m(self, rhs: &ExtScalar) -> ExtScalar {
                $f(self, rhs)
            }
        }
        impl $tr<ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $m(self, rhs: ExtScalar) -> ExtScalar {
                $f(&self, &rhs)
            }
        }
        impl $tr<&ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $m(self, rhs: &ExtScalar) -> ExtScalar {
                $f(&self, rhs)
            }
        }
        impl $tr<ExtScalar> for &ExtScalar {
            type Output = ExtScalar;
            fn $m(self, rhs: ExtScalar) -> ExtScalar {
                $f(self, &rhs)
            }
        }
    };
}

binop!(Add, add, add_impl);
binop!(Sub, sub, sub_impl);
binop!(Mul, mul, mul_impl);
binop!(Div, div, |a: &ExtScalar, b: &ExtScalar| a
    .checked_div(b)
    .expect("scalar division by zero"));

impl AddAssign<&ExtScalar> for ExtScalar {
    fn add_assign(&mut self, rhs: &ExtScalar) {
        if rhs.is_zero() {
            return;
        }
        self.a_re += &rhs.a_re;
        self.a_im += &rhs.a_im;
        self.b_re += &rhs.b_re;
        self.b_im += &rhs.b_im;
    }
}

impl AddAssign<ExtScalar> for ExtScalar {
    fn add_assign(&mut self, rhs: ExtScalar) {
        *self += &rhs;
    }
}

impl SubAssign<&ExtScalar> for ExtScalar {
    fn sub_assign(&mut self, rhs: &ExtScalar) {
        if rhs.is_zero() {
            return;
        }
        self.a_re -= &rhs.a_re;
        self.a_im -= &rhs.a_im;
        self.b_re -= &rhs.b_re;
        self.b_im -= &rhs.b_im;
    }
}

impl SubAssign<ExtScalar> for ExtScalar {
    fn sub_assign(&mut self, rhs: ExtScalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&ExtScalar> for ExtScalar {
    fn mul_assign(&mut self, rhs: &ExtScalar) {
        *self = mul_impl(self, rhs);
    }
}

impl std::iter::Sum for ExtScalar {
    fn sum<I: Iterator<Item = ExtScalar>>(iter: I) -> Self {
        let mut acc = ExtScalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

/// Shorthand for a rational scalar `n/d`.
pub fn q(n: i64, d: i64) -> ExtScalar {
    ExtScalar::from_frac(n, d)
}
