//! Normally ordered elements of a Weyl algebra with exact coefficients.
//!
//! Positions sit to the left and derivatives to the right. A radial signature
//! additionally carries `r = |x|` over the first three positions. Its
//! monomials are `x^α · r^ε / ρ^m · ∂^β` with `ρ = x₁²+x₂²+x₃²` and `ε ∈ {0,1}`.

mod format;
mod map;
mod radial;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{rat, Scalar};

pub use format::TermRecord;
pub use map::{AdjointKind, AdjointMap, GeneratorMap};

/// Exponent vector.
pub type Exps = SmallVec<[u8; 4]>;

pub const DEFAULT_DEGREE_CAP: u32 = 16;

/// Generator names and the radial flag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    name: String,
    positions: Vec<String>,
    derivatives: Vec<String>,
    radial: bool,
    degree_cap: u32,
}

pub type Sig = Arc<Signature>;

impl Signature {
    /// Canonical pairs `[derivatives[k], positions[k]] = 1`.
    pub fn new(name: &str, positions: &[&str], derivatives: &[&str]) -> Sig {
        assert_eq!(positions.len(), derivatives.len(), "positions and derivatives pair index-wise");
        Arc::new(Signature {
            name: name.to_string(),
            positions: positions.iter().map(|s| s.to_string()).collect(),
            derivatives: derivatives.iter().map(|s| s.to_string()).collect(),
            radial: false,
            degree_cap: DEFAULT_DEGREE_CAP,
        })
    }

    /// Three positions plus `r` and `r⁻¹`.
    pub fn radial(name: &str, positions: &[&str; 3], derivatives: &[&str; 3]) -> Sig {
        let mut s = Signature::new(name, positions, derivatives);
        Arc::make_mut(&mut s).radial = true;
        s
    }

    pub fn with_degree_cap(self: &Sig, cap: u32) -> Sig {
        let mut s = Arc::clone(self);
        Arc::make_mut(&mut s).degree_cap = cap;
        s
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn positions(&self) -> &[String] {
        &self.positions
    }

    pub fn derivatives(&self) -> &[String] {
        &self.derivatives
    }

    /// Number of canonical pairs.
    pub fn modes(&self) -> usize {
        self.positions.len()
    }

    pub fn is_radial(&self) -> bool {
        self.radial
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }
}

fn same_sig(a: &Sig, b: &Sig) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// `x^pos · r^radial · ρ^{-inv} · ∂^der`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub pos: Exps,
    pub radial: u8,
    pub inv: u8,
    pub der: Exps,
}

impl Monomial {
    pub fn unit(n: usize) -> Self {
        Monomial { pos: zeros(n), radial: 0, inv: 0, der: zeros(n) }
    }

    /// Numerator degree `|α| + ε + |β|`.
    pub fn degree(&self) -> u32 {
        sum(&self.pos) + self.radial as u32 + sum(&self.der)
    }

    /// True when no derivative acts.
    pub fn is_function(&self) -> bool {
        self.der.iter().all(|&e| e == 0)
    }
}

fn zeros(n: usize) -> Exps {
    SmallVec::from_elem(0, n)
}

fn sum(e: &Exps) -> u32 {
    e.iter().map(|&v| v as u32).sum()
}

pub(crate) type Terms = BTreeMap<Monomial, Scalar>;

pub(crate) fn add_term(t: &mut Terms, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// An exact, normally ordered operator.
#[derive(Clone, Debug)]
pub struct WeylElement {
    sig: Sig,
    terms: Terms,
}

impl PartialEq for WeylElement {
    fn eq(&self, o: &Self) -> bool {
        same_sig(&self.sig, &o.sig) && self.terms == o.terms
    }
}

impl Eq for WeylElement {}

impl WeylElement {
    pub fn zero(sig: &Sig) -> Self {
        WeylElement { sig: Arc::clone(sig), terms: Terms::new() }
    }

    pub fn constant(sig: &Sig, c: Scalar) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, Monomial::unit(sig.modes()), c);
        WeylElement { sig: Arc::clone(sig), terms }
    }

    pub fn one(sig: &Sig) -> Self {
        WeylElement::constant(sig, Scalar::one())
    }

    /// Position generator `k`.
    pub fn position(sig: &Sig, k: usize) -> Self {
        assert!(k < sig.modes(), "position index {k} out of range");
        let mut m = Monomial::unit(sig.modes());
        m.pos[k] = 1;
        WeylElement::monomial(sig, m, Scalar::one())
    }

    /// Derivative generator `k`.
    pub fn derivative(sig: &Sig, k: usize) -> Self {
        assert!(k < sig.modes(), "derivative index {k} out of range");
        let mut m = Monomial::unit(sig.modes());
        m.der[k] = 1;
        WeylElement::monomial(sig, m, Scalar::one())
    }

    /// `p_k = -i ∂_k`.
    pub fn momentum(sig: &Sig, k: usize) -> Self {
        WeylElement::derivative(sig, k).scale(&-Scalar::i())
    }

    /// The radial generator `r`.
    pub fn r(sig: &Sig) -> Result<Self> {
        if !sig.is_radial() {
            return Err(Error::NotRadial(sig.name.clone()));
        }
        let mut m = Monomial::unit(sig.modes());
        m.radial = 1;
        Ok(WeylElement::monomial(sig, m, Scalar::one()))
    }

    /// `r⁻¹ = r / ρ`.
    pub fn r_inv(sig: &Sig) -> Result<Self> {
        if !sig.is_radial() {
            return Err(Error::NotRadial(sig.name.clone()));
        }
        let mut m = Monomial::unit(sig.modes());
        m.radial = 1;
        m.inv = 1;
        Ok(WeylElement::monomial(sig, m, Scalar::one()))
    }

    /// A single term; normalized if the signature is radial.
    pub fn monomial(sig: &Sig, m: Monomial, c: Scalar) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, m, c);
        WeylElement::from_raw(sig, terms)
    }

    /// Build from arbitrary terms, applying the radial reduction when needed.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(sig: &Sig, it: I) -> Result<Self> {
        let n = sig.modes();
        let mut terms = Terms::new();
        for (m, c) in it {
            if m.pos.len() != n || m.der.len() != n {
                return Err(Error::Invalid(format!("monomial arity differs from signature `{}`", sig.name)));
            }
            if !sig.is_radial() && (m.radial != 0 || m.inv != 0) {
                return Err(Error::NotRadial(sig.name.clone()));
            }
            if m.radial > 1 {
                return Err(Error::Invalid("radial exponent must be 0 or 1 on input".into()));
            }
            add_term(&mut terms, m, c);
        }
        Ok(WeylElement::from_raw(sig, terms))
    }

    fn from_raw(sig: &Sig, terms: Terms) -> Self {
        let terms = if sig.is_radial() { radial::normalize(terms) } else { terms };
        WeylElement { sig: Arc::clone(sig), terms }
    }

    pub fn signature(&self) -> &Sig {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::unit(self.sig.modes()))
    }

    /// Largest numerator degree, 0 for the zero element.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest power of `ρ` in a denominator.
    pub fn max_denominator_power(&self) -> u8 {
        self.terms.keys().map(|m| m.inv).max().unwrap_or(0)
    }

    /// Largest coefficient modulus.
    pub fn max_abs_coefficient(&self) -> f64 {
        self.terms.values().map(Scalar::abs_f64).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return WeylElement::zero(&self.sig);
        }
        WeylElement {
            sig: Arc::clone(&self.sig),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn check_sig(&self, o: &Self) -> Result<()> {
        if same_sig(&self.sig, &o.sig) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch { left: self.sig.name.clone(), right: o.sig.name.clone() })
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_sig(o)?;
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        // Adding canonical radial elements can expose a common ρ factor.
        Ok(WeylElement::from_raw(&self.sig, terms))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&-o)
    }

    /// Normally ordered product `self · o`.
    pub fn multiply(&self, o: &Self) -> Result<Self> {
        self.check_sig(o)?;
        let radial = self.sig.is_radial();
        let mut out = Terms::new();
        let mut pushed: HashMap<Exps, Terms> = HashMap::new();
        for (m, c) in &self.terms {
            let right = pushed
                .entry(m.der.clone())
                .or_insert_with(|| push_derivatives(&o.terms, &m.der, radial));
            for (m2, c2) in right.iter() {
                let cc = c * c2;
                for (f, k) in function_product(m, m2, radial) {
                    let mon = Monomial { pos: f.0, radial: f.1, inv: f.2, der: m2.der.clone() };
                    match k {
                        1 => add_term(&mut out, mon, cc.clone()),
                        k => add_term(&mut out, mon, &cc * &Scalar::from_int(k)),
                    }
                }
            }
        }
        let e = WeylElement::from_raw(&self.sig, out);
        e.check_degree()?;
        Ok(e)
    }

    fn check_degree(&self) -> Result<()> {
        let d = self.degree();
        if d > self.sig.degree_cap {
            return Err(Error::DegreeOverflow { degree: d, cap: self.sig.degree_cap });
        }
        Ok(())
    }

    /// `[self, o] = self·o − o·self`.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.multiply(o)?.try_sub(&o.multiply(self)?)
    }

    /// `{self, o} = self·o + o·self`.
    pub fn anticommutator(&self, o: &Self) -> Result<Self> {
        self.multiply(o)?.try_add(&o.multiply(self)?)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = WeylElement::one(&self.sig);
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Re-apply the canonical reduction. Idempotent.
    pub fn radial_reduce(&self) -> Result<Self> {
        if !self.sig.is_radial() {
            return Err(Error::NotRadial(self.sig.name.clone()));
        }
        Ok(WeylElement::from_raw(&self.sig, self.terms.clone()))
    }

    /// Action on a function: the derivative-free part of `self · f`.
    pub fn apply(&self, f: &Self) -> Result<Self> {
        if f.terms.keys().any(|m| !m.is_function()) {
            return Err(Error::Invalid("apply expects a derivative-free element".into()));
        }
        let p = self.multiply(f)?;
        let terms = p.terms.into_iter().filter(|(m, _)| m.is_function()).collect();
        Ok(WeylElement { sig: p.sig, terms })
    }

    /// Evaluate a derivative-free, non-radial element at a point.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if self.sig.is_radial() {
            return Err(Error::RadialUnsupported(self.sig.name.clone()));
        }
        if point.len() != self.sig.modes() {
            return Err(Error::IndexOutOfRange { index: point.len(), size: self.sig.modes() });
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            if !m.is_function() {
                return Err(Error::Invalid("evaluate expects a derivative-free element".into()));
            }
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.pos.iter()) {
                for _ in 0..e {
                    v = &v * x;
                }
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    /// Coefficient-wise complex conjugation.
    pub fn conj_coefficients(&self) -> Self {
        WeylElement {
            sig: Arc::clone(&self.sig),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    /// Keep terms not involving the dropped modes, re-indexed onto `target`.
    /// `keep[i]` is the source mode placed at target mode `i`.
    pub fn project(&self, target: &Sig, keep: &[usize]) -> Result<Self> {
        if keep.len() != target.modes() {
            return Err(Error::Invalid("keep list must match target modes".into()));
        }
        if self.sig.is_radial() || target.is_radial() {
            return Err(Error::RadialUnsupported(self.sig.name.clone()));
        }
        let n = self.sig.modes();
        if let Some(&bad) = keep.iter().find(|&&k| k >= n) {
            return Err(Error::IndexOutOfRange { index: bad, size: n });
        }
        let mut terms = Terms::new();
        'terms: for (m, c) in &self.terms {
            for k in 0..n {
                if !keep.contains(&k) && (m.pos[k] != 0 || m.der[k] != 0) {
                    continue 'terms;
                }
            }
            let pos = keep.iter().map(|&k| m.pos[k]).collect();
            let der = keep.iter().map(|&k| m.der[k]).collect();
            add_term(&mut terms, Monomial { pos, radial: 0, inv: 0, der }, c.clone());
        }
        Ok(WeylElement { sig: Arc::clone(target), terms })
    }

    /// Coordinates keyed by monomial, for exact linear algebra.
    pub(crate) fn raw_terms(&self) -> &Terms {
        &self.terms
    }
}

/// `∂^β · (terms)` as raw (unnormalized) terms.
fn push_derivatives(terms: &Terms, beta: &Exps, radial: bool) -> Terms {
    let mut cur = terms.clone();
    for (k, &e) in beta.iter().enumerate() {
        for _ in 0..e {
            cur = lmul_derivative(&cur, k, radial);
        }
    }
    cur
}

/// `∂_k · F ∂^β = F ∂_k ∂^β + (∂_k F) ∂^β`.
fn lmul_derivative(terms: &Terms, k: usize, radial: bool) -> Terms {
    let mut out = Terms::new();
    for (m, c) in terms {
        let mut shifted = m.clone();
        shifted.der[k] += 1;
        add_term(&mut out, shifted, c.clone());
        if m.pos[k] > 0 {
            let mut d = m.clone();
            d.pos[k] -= 1;
            add_term(&mut out, d, c * &Scalar::from_int(m.pos[k] as i64));
        }
        // ∂_k (r^ε ρ^{-m}) = (ε − 2m) x_k r^ε ρ^{-m-1}
        if radial && k < 3 {
            let w = m.radial as i64 - 2 * m.inv as i64;
            if w != 0 {
                let mut d = m.clone();
                d.pos[k] += 1;
                d.inv += 1;
                add_term(&mut out, d, c * &Scalar::from_int(w));
            }
        }
    }
    out
}

type FnPart = (Exps, u8, u8);

/// Product of the function parts of `a` and `b`, with `r² = ρ` applied.
fn function_product(a: &Monomial, b: &Monomial, radial: bool) -> SmallVec<[(FnPart, i64); 3]> {
    let pos: Exps = a.pos.iter().zip(b.pos.iter()).map(|(x, y)| x + y).collect();
    let mut out = SmallVec::new();
    if !radial {
        out.push(((pos, 0, 0), 1));
        return out;
    }
    let eps = a.radial + b.radial;
    let inv = a.inv + b.inv;
    if eps < 2 {
        out.push(((pos, eps, inv), 1));
    } else if inv > 0 {
        out.push(((pos, 0, inv - 1), 1));
    } else {
        for i in 0..3 {
            let mut p = pos.clone();
            p[i] += 2;
            out.push(((p, 0, 0), 1));
        }
    }
    out
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

// Operator sugar. These panic on signature mismatch or degree overflow; use
// `multiply`/`try_add` for fallible arithmetic.

impl<'a> Add<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn add(self, o: &WeylElement) -> WeylElement {
        self.try_add(o).expect("weyl add")
    }
}

impl<'a> Sub<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn sub(self, o: &WeylElement) -> WeylElement {
        self.try_sub(o).expect("weyl sub")
    }
}

impl<'a> Mul<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn mul(self, o: &WeylElement) -> WeylElement {
        self.multiply(o).expect("weyl multiply")
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement {
            sig: Arc::clone(&self.sig),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_weyl {
    ($tr:ident, $m:ident) => {
        impl $tr<WeylElement> for WeylElement {
            type Output = WeylElement;
            fn $m(self, o: WeylElement) -> WeylElement {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a WeylElement> for WeylElement {
            type Output = WeylElement;
            fn $m(self, o: &WeylElement) -> WeylElement {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<WeylElement> for &'a WeylElement {
            type Output = WeylElement;
            fn $m(self, o: WeylElement) -> WeylElement {
                self.$m(&o)
            }
        }
    };
}
forward_weyl!(Add, add);
forward_weyl!(Sub, sub);
forward_weyl!(Mul, mul);

impl Neg for WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        -&self
    }
}

impl Mul<&Scalar> for &WeylElement {
    type Output = WeylElement;
    fn mul(self, c: &Scalar) -> WeylElement {
        self.scale(c)
    }
}

impl Mul<&Scalar> for WeylElement {
    type Output = WeylElement;
    fn mul(self, c: &Scalar) -> WeylElement {
        self.scale(c)
    }
}

impl Mul<Scalar> for WeylElement {
    type Output = WeylElement;
    fn mul(self, c: Scalar) -> WeylElement {
        self.scale(&c)
    }
}

impl Mul<Scalar> for &WeylElement {
    type Output = WeylElement;
    fn mul(self, c: Scalar) -> WeylElement {
        self.scale(&c)
    }
}

/// Seeded element with up to `terms` monomials, exponents at most `max_exp`,
/// and Gaussian-integer coefficients in `[−3, 3]`.
pub fn random_element(sig: &Sig, rng: &mut impl rand::Rng, terms: usize, max_exp: u8) -> WeylElement {
    let n = sig.modes();
    let mut e = WeylElement::zero(sig);
    for _ in 0..terms {
        let mut m = Monomial::unit(n);
        for k in 0..n {
            m.pos[k] = rng.gen_range(0..=max_exp);
            m.der[k] = rng.gen_range(0..=max_exp);
        }
        let c = Scalar::gauss(rat(rng.gen_range(-3..=3), 1), rat(rng.gen_range(-3..=3), 1));
        e = &e + &WeylElement::monomial(sig, m, c);
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn holo1() -> (Sig, WeylElement, WeylElement) {
        let s = Signature::new("h1", &["z"], &["d"]);
        let z = WeylElement::position(&s, 0);
        let d = WeylElement::derivative(&s, 0);
        (s, z, d)
    }

    #[test]
    fn derivative_past_position() {
        let (s, z, d) = holo1();
        assert_eq!(&d * &z, &(&z * &d) + &WeylElement::one(&s));
        assert_eq!(&z * &z, z.pow(2).unwrap());
        let d2z = &d.pow(2).unwrap() * &z;
        let expect = &(&z * &d.pow(2).unwrap()) + &d.scale(&Scalar::from_int(2));
        assert_eq!(d2z, expect);
    }

    #[test]
    fn basic_commutators() {
        let (s, z, d) = holo1();
        assert_eq!(d.commutator(&z).unwrap(), WeylElement::one(&s));
        let e = &z * &d;
        assert_eq!(e.commutator(&z).unwrap(), z);
        assert_eq!(e.commutator(&d).unwrap(), -&d);
    }

    #[test]
    fn signature_mismatch_is_error() {
        let (_, z, _) = holo1();
        let t = Signature::new("other", &["w"], &["dw"]);
        let w = WeylElement::position(&t, 0);
        assert!(matches!(z.multiply(&w), Err(Error::SignatureMismatch { .. })));
    }

    #[test]
    fn degree_cap_enforced() {
        let (s, z, _) = holo1();
        let s4 = s.with_degree_cap(4);
        let z4 = WeylElement::position(&s4, 0);
        assert!(z4.pow(4).is_ok());
        assert!(matches!(z4.pow(5), Err(Error::DegreeOverflow { degree: 5, cap: 4 })));
        assert!(z.pow(16).is_ok());
    }

    fn radial_sig() -> Sig {
        Signature::radial("rad", &["x1", "x2", "x3"], &["d1", "d2", "d3"])
    }

    #[test]
    fn r_squared_is_rho() {
        let s = radial_sig();
        let r = WeylElement::r(&s).unwrap();
        let x: Vec<_> = (0..3).map(|k| WeylElement::position(&s, k)).collect();
        let rho = &(&(&x[0] * &x[0]) + &(&x[1] * &x[1])) + &(&x[2] * &x[2]);
        assert_eq!(&r * &r, rho);
        assert_eq!(&r * &WeylElement::r_inv(&s).unwrap(), WeylElement::one(&s));
    }

    #[test]
    fn derivative_of_r() {
        let s = radial_sig();
        let r = WeylElement::r(&s).unwrap();
        let d1 = WeylElement::derivative(&s, 0);
        let x1 = WeylElement::position(&s, 0);
        let c = d1.commutator(&r).unwrap();
        assert_eq!(c, &x1 * &WeylElement::r_inv(&s).unwrap());
        let mut m = Monomial::unit(3);
        m.pos[0] = 1;
        m.radial = 1;
        m.inv = 1;
        assert_eq!(c.coefficient(&m), Scalar::one());
    }

    #[test]
    fn radial_reduce_idempotent() {
        let s = radial_sig();
        let r = WeylElement::r(&s).unwrap();
        let d1 = WeylElement::derivative(&s, 0);
        let e = &(&d1 * &r) * &d1;
        assert_eq!(e.radial_reduce().unwrap(), e);
        assert!(WeylElement::position(&holo1().0, 0).radial_reduce().is_err());
    }

    #[test]
    fn apply_and_evaluate() {
        let (s, z, d) = holo1();
        let f = &z * &z;
        let e = &z * &d;
        assert_eq!(e.apply(&f).unwrap(), f.scale(&Scalar::from_int(2)));
        assert_eq!(f.evaluate(&[Scalar::from_int(3)]).unwrap(), Scalar::from_int(9));
        assert!(d.evaluate(&[Scalar::one()]).is_err());
        let _ = s;
    }

    #[test]
    fn projection_drops_modes() {
        let s = Signature::new("two", &["x", "y"], &["dx", "dy"]);
        let t = Signature::new("one", &["x"], &["dx"]);
        let x = WeylElement::position(&s, 0);
        let y = WeylElement::position(&s, 1);
        let e = &(&x * &x) + &y;
        assert_eq!(e.project(&t, &[0]).unwrap(), WeylElement::position(&t, 0).pow(2).unwrap());
    }
}
