//! Exact scalars in the field Q(i, √2).
//!
//! A [`Scalar`] is `a + b·√2` where `a` and `b` are Gaussian rationals. Every
//! coefficient that shows up in the operator tables (½, i/4, 1/√2, ...) lives
//! here, so algebraic identities can be checked against literal zero.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational.
pub type Rational = BigRational;

/// Build a rational `p/q`. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Render a rational as `p/q` (or `p` when the denominator is one).
pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

/// Parse `p/q` or `p`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    Rational::from_str(s.trim()).ok()
}

/// Gaussian rational `re + i·im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gauss {
    pub re: Rational,
    pub im: Rational,
}

impl Gauss {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gauss { re, im }
    }

    pub fn zero() -> Self {
        Gauss::new(Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss::new(self.re.clone(), -self.im.clone())
    }

    fn mul(&self, o: &Gauss) -> Gauss {
        Gauss::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    fn add(&self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re + &o.re, &self.im + &o.im)
    }

    fn sub(&self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re - &o.re, &self.im - &o.im)
    }

    fn scale(&self, k: &Rational) -> Gauss {
        Gauss::new(&self.re * k, &self.im * k)
    }

    fn inv(&self) -> Option<Gauss> {
        let n = &self.re * &self.re + &self.im * &self.im;
        if n.is_zero() {
            return None;
        }
        Some(Gauss::new(&self.re / &n, -&self.im / &n))
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// Element `a + b·√2` of Q(i, √2).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: Gauss,
    b: Gauss,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default_zero()
    }

    fn default_zero() -> Self {
        Scalar { a: Gauss::zero(), b: Gauss::zero() }
    }

    pub fn one() -> Self {
        Scalar::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        Scalar::gauss(Rational::zero(), Rational::one())
    }

    pub fn sqrt2() -> Self {
        Scalar { a: Gauss::zero(), b: Gauss::new(Rational::one(), Rational::zero()) }
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        Scalar { a: Gauss::zero(), b: Gauss::new(rat(1, 2), Rational::zero()) }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        Scalar::from_rational(rat(p, q))
    }

    pub fn from_rational(q: Rational) -> Self {
        Scalar { a: Gauss::new(q, Rational::zero()), b: Gauss::zero() }
    }

    pub fn gauss(re: Rational, im: Rational) -> Self {
        Scalar { a: Gauss::new(re, im), b: Gauss::zero() }
    }

    /// `(re + i·im) + (re2 + i·im2)·√2`.
    pub fn from_parts(rational: Gauss, sqrt2: Gauss) -> Self {
        Scalar { a: rational, b: sqrt2 }
    }

    /// Imaginary unit times a rational `p/q`.
    pub fn imag_frac(p: i64, q: i64) -> Self {
        Scalar::gauss(Rational::zero(), rat(p, q))
    }

    pub fn rational_part(&self) -> &Gauss {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &Gauss {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.im.is_zero() && self.a.re.is_one()
    }

    /// True when the value is a plain rational (no i, no √2).
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.b.is_zero() && self.a.im.is_zero()).then_some(&self.a.re)
    }

    /// Complex conjugation (fixes √2).
    pub fn conj(&self) -> Self {
        Scalar { a: self.a.conj(), b: self.b.conj() }
    }

    /// Field inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        // (a + b√2)^{-1} = (a - b√2) / (a² - 2b²)
        let n = self.a.mul(&self.a).sub(&self.b.mul(&self.b).scale(&rat(2, 1)));
        let ni = n.inv()?;
        Some(Scalar { a: self.a.mul(&ni), b: Gauss::zero().sub(&self.b.mul(&ni)) })
    }

    pub fn to_complex(&self) -> Complex64 {
        self.a.to_complex() + self.b.to_complex() * std::f64::consts::SQRT_2
    }

    /// Absolute value as a float, for residual reporting.
    pub fn abs_f64(&self) -> f64 {
        self.to_complex().norm()
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        Scalar { a: self.a.scale(k), b: self.b.scale(k) }
    }

    /// Parts as strings: `[re, im]` or `[re, im, re√2, im√2]`.
    pub fn to_strings(&self) -> Vec<String> {
        let mut v = vec![rational_string(&self.a.re), rational_string(&self.a.im)];
        if !self.b.is_zero() {
            v.push(rational_string(&self.b.re));
            v.push(rational_string(&self.b.im));
        }
        v
    }

    pub fn from_strings(parts: &[String]) -> Option<Self> {
        let p: Option<Vec<Rational>> = parts.iter().map(|s| parse_rational(s)).collect();
        let mut p = p?;
        match p.len() {
            2 => {
                let im = p.pop()?;
                let re = p.pop()?;
                Some(Scalar::gauss(re, im))
            }
            4 => {
                let im2 = p.pop()?;
                let re2 = p.pop()?;
                let im = p.pop()?;
                let re = p.pop()?;
                Some(Scalar::from_parts(Gauss::new(re, im), Gauss::new(re2, im2)))
            }
            _ => None,
        }
    }
}

fn fmt_gauss(g: &Gauss) -> String {
    match (g.re.is_zero(), g.im.is_zero()) {
        (true, true) => "0".into(),
        (false, true) => g.re.to_string(),
        (true, false) => format!("{}i", g.im),
        (false, false) => {
            let sign = if g.im.is_negative() { "-" } else { "+" };
            format!("({}{}{}i)", g.re, sign, g.im.abs())
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&fmt_gauss(&self.a));
        }
        if self.a.is_zero() {
            return write!(f, "{}√2", fmt_gauss(&self.b));
        }
        write!(f, "({} + {}√2)", fmt_gauss(&self.a), fmt_gauss(&self.b))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let parts = self.to_strings();
        let mut seq = s.serialize_seq(Some(parts.len()))?;
        for p in &parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Scalar;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of 2 or 4 rational strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut a: A) -> Result<Scalar, A::Error> {
                let mut parts = Vec::new();
                while let Some(s) = a.next_element::<String>()? {
                    parts.push(s);
                }
                Scalar::from_strings(&parts).ok_or_else(|| de::Error::custom("bad scalar"))
            }
        }
        d.deserialize_seq(V)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar { a: self.a.add(&o.a), b: self.b.add(&o.b) }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar { a: self.a.sub(&o.a), b: self.b.sub(&o.b) }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        let two = rat(2, 1);
        Scalar {
            a: self.a.mul(&o.a).add(&self.b.mul(&o.b).scale(&two)),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.a)),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: Gauss::zero().sub(&self.a), b: Gauss::zero().sub(&self.b) }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::from_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let s = Scalar::sqrt2();
        assert_eq!(&s * &s, Scalar::from_int(2));
        assert_eq!(&Scalar::inv_sqrt2() * &Scalar::sqrt2(), Scalar::one());
    }

    #[test]
    fn i_squared() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = &Scalar::gauss(rat(1, 3), rat(-2, 1)) + &(&Scalar::sqrt2() * &Scalar::i());
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Scalar::one());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn reduced_fractions() {
        let x = Scalar::frac(6, -4);
        assert_eq!(x.to_strings(), vec!["-3/2".to_string(), "0".to_string()]);
    }

    #[test]
    fn json_round_trip() {
        let x = &Scalar::frac(1, 2) + &(&Scalar::inv_sqrt2() * &Scalar::i());
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"["1/2","0","0","1/2"]"#);
        let back: Scalar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::frac(1, 2).to_string(), "1/2");
        assert_eq!(Scalar::imag_frac(-1, 4).to_string(), "-1/4i");
        assert_eq!(Scalar::inv_sqrt2().to_string(), "1/2√2");
    }

    #[test]
    fn complex_value() {
        let z = (&Scalar::sqrt2() + &Scalar::i()).to_complex();
        assert!((z.re - std::f64::consts::SQRT_2).abs() < 1e-15 && (z.im - 1.0).abs() < 1e-15);
    }
}
