//! Kustaanheimo–Stiefel and Levi-Civita maps with exact Poisson brackets.
//!
//! Coordinate functions are evaluated as first-order jets over the eight
//! canonical variables `(u, w)`, so every partial derivative is exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::check::Identity;
use crate::error::{Error, Result};
use crate::scalar::{rat, Rational};

/// How the transverse KS coordinates are normalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum KsMode {
    /// `x₁ = u₁u₃ + u₂u₄`, `x₂ = u₂u₃ − u₁u₄`.
    PaperLiteral,
    /// Transverse components doubled so that `|x| = |z|²`.
    #[default]
    HopfNormalized,
}

impl KsMode {
    pub fn as_str(self) -> &'static str {
        match self {
            KsMode::PaperLiteral => "paper-literal",
            KsMode::HopfNormalized => "hopf-normalized",
        }
    }

    fn transverse(self) -> Rational {
        match self {
            KsMode::PaperLiteral => rat(1, 1),
            KsMode::HopfNormalized => rat(2, 1),
        }
    }
}

impl fmt::Display for KsMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for KsMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-literal" => Ok(KsMode::PaperLiteral),
            "hopf-normalized" => Ok(KsMode::HopfNormalized),
            _ => Err(Error::Invalid(format!("unknown KS mode `{s}`"))),
        }
    }
}

/// A point of `T*R⁴` off the zero section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasePoint4 {
    pub u: [Rational; 4],
    pub w: [Rational; 4],
}

impl PhasePoint4 {
    pub fn new(u: [Rational; 4], w: [Rational; 4]) -> Result<Self> {
        if u.iter().all(Zero::is_zero) {
            return Err(Error::Invalid("u = 0 is excluded".into()));
        }
        Ok(PhasePoint4 { u, w })
    }

    pub fn from_ints(u: [i64; 4], w: [i64; 4]) -> Result<Self> {
        Self::new(u.map(|v| rat(v, 1)), w.map(|v| rat(v, 1)))
    }

    /// `|z|² = Σ u_k²`.
    pub fn norm_sq(&self) -> Rational {
        self.u.iter().map(|v| v * v).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasePoint3 {
    pub x: [Rational; 3],
    pub p: [Rational; 3],
}

impl PhasePoint3 {
    /// Momenta divided by the bracket constant `c`.
    pub fn canonical(&self, c: &Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Invalid("bracket constant is zero".into()));
        }
        Ok(PhasePoint3 { x: self.x.clone(), p: self.p.clone().map(|v| v / c) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasePoint2 {
    pub xi: Rational,
    pub eta: Rational,
    pub p_xi: Rational,
    pub p_eta: Rational,
}

/// Value and gradient in `(u₁..u₄, w₁..w₄)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Jet {
    v: Rational,
    d: [Rational; 8],
}

impl Jet {
    fn constant(v: Rational) -> Self {
        Jet { v, d: std::array::from_fn(|_| Rational::zero()) }
    }

    fn var(v: &Rational, k: usize) -> Self {
        let mut j = Jet::constant(v.clone());
        j.d[k] = rat(1, 1);
        j
    }

    fn scaled(&self, c: &Rational) -> Self {
        Jet { v: &self.v * c, d: std::array::from_fn(|k| &self.d[k] * c) }
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, o: &Jet) -> Jet {
        Jet { v: &self.v + &o.v, d: std::array::from_fn(|k| &self.d[k] + &o.d[k]) }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, o: &Jet) -> Jet {
        Jet { v: &self.v - &o.v, d: std::array::from_fn(|k| &self.d[k] - &o.d[k]) }
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, o: &Jet) -> Jet {
        Jet { v: &self.v * &o.v, d: std::array::from_fn(|k| &self.d[k] * &o.v + &self.v * &o.d[k]) }
    }
}

impl Div for &Jet {
    type Output = Jet;
    fn div(self, o: &Jet) -> Jet {
        let q = &self.v / &o.v;
        Jet { d: std::array::from_fn(|k| (&self.d[k] - &q * &o.d[k]) / &o.v), v: q }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scaled(&rat(-1, 1))
    }
}

/// Functions on `T*R⁴` whose brackets can be taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coordinate {
    U(usize),
    W(usize),
    X(usize),
    P(usize),
    K,
    Xi,
    Eta,
    PXi,
    PEta,
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coordinate::U(k) => write!(f, "u{}", k + 1),
            Coordinate::W(k) => write!(f, "w{}", k + 1),
            Coordinate::X(k) => write!(f, "x{}", k + 1),
            Coordinate::P(k) => write!(f, "p{}", k + 1),
            Coordinate::K => f.write_str("K"),
            Coordinate::Xi => f.write_str("xi"),
            Coordinate::Eta => f.write_str("eta"),
            Coordinate::PXi => f.write_str("p_xi"),
            Coordinate::PEta => f.write_str("p_eta"),
        }
    }
}

struct Vars {
    u: [Jet; 4],
    w: [Jet; 4],
}

impl Vars {
    fn new(pt: &PhasePoint4) -> Self {
        Vars { u: std::array::from_fn(|k| Jet::var(&pt.u[k], k)), w: std::array::from_fn(|k| Jet::var(&pt.w[k], k + 4)) }
    }

    fn dot(&self, terms: &[(i64, usize, usize)], a: &[Jet; 4], b: &[Jet; 4]) -> Jet {
        let mut acc = Jet::constant(Rational::zero());
        for &(s, i, j) in terms {
            acc = &acc + &(&a[i] * &b[j]).scaled(&rat(s, 1));
        }
        acc
    }

    fn norm_sq(&self, idx: &[usize]) -> Jet {
        let terms: Vec<_> = idx.iter().map(|&k| (1, k, k)).collect();
        self.dot(&terms, &self.u, &self.u)
    }

    fn eval(&self, c: Coordinate, mode: KsMode) -> Result<Jet> {
        let (u, w) = (&self.u, &self.w);
        let t = mode.transverse();
        Ok(match c {
            Coordinate::U(k) => u.get(k).cloned().ok_or(Error::IndexOutOfRange { index: k, size: 4 })?,
            Coordinate::W(k) => w.get(k).cloned().ok_or(Error::IndexOutOfRange { index: k, size: 4 })?,
            Coordinate::X(0) => self.dot(&[(1, 0, 2), (1, 1, 3)], u, u).scaled(&t),
            Coordinate::X(1) => self.dot(&[(1, 1, 2), (-1, 0, 3)], u, u).scaled(&t),
            Coordinate::X(2) => self.dot(&[(-1, 0, 0), (-1, 1, 1), (1, 2, 2), (1, 3, 3)], u, u),
            Coordinate::P(k) => {
                let num = match k {
                    0 => -&self.dot(&[(1, 0, 2), (1, 2, 0), (1, 1, 3), (1, 3, 1)], u, w),
                    1 => -&self.dot(&[(1, 1, 2), (1, 2, 1), (-1, 3, 0), (-1, 0, 3)], u, w),
                    2 => self.dot(&[(1, 0, 0), (1, 1, 1), (-1, 2, 2), (-1, 3, 3)], u, w),
                    _ => return Err(Error::IndexOutOfRange { index: k, size: 3 }),
                };
                self.checked_div(&num, &self.norm_sq(&[0, 1, 2, 3]))?
            }
            Coordinate::X(k) => return Err(Error::IndexOutOfRange { index: k, size: 3 }),
            Coordinate::K => self.dot(&[(1, 0, 1), (-1, 1, 0), (1, 2, 3), (-1, 3, 2)], u, w),
            Coordinate::Xi => self.dot(&[(1, 0, 0), (-1, 2, 2)], u, u),
            Coordinate::Eta => self.dot(&[(2, 0, 2)], u, u),
            Coordinate::PXi => self.checked_div(&self.dot(&[(1, 0, 0), (-1, 2, 2)], u, w), &self.norm_sq(&[0, 2]))?,
            Coordinate::PEta => {
                self.checked_div(&-&self.dot(&[(1, 0, 2), (1, 2, 0)], u, w), &self.norm_sq(&[0, 2]))?
            }
        })
    }

    fn checked_div(&self, a: &Jet, b: &Jet) -> Result<Jet> {
        if b.v.is_zero() {
            return Err(Error::Invalid("coordinate undefined where the norm vanishes".into()));
        }
        Ok(a / b)
    }
}

/// Evaluate one coordinate function.
pub fn coordinate(c: Coordinate, pt: &PhasePoint4, mode: KsMode) -> Result<Rational> {
    Ok(Vars::new(pt).eval(c, mode)?.v)
}

/// `{f, g} = Σ_k ∂f/∂u_k ∂g/∂w_k − ∂f/∂w_k ∂g/∂u_k`.
pub fn poisson_bracket(f: Coordinate, g: Coordinate, pt: &PhasePoint4, mode: KsMode) -> Result<Rational> {
    let vars = Vars::new(pt);
    let (a, b) = (vars.eval(f, mode)?, vars.eval(g, mode)?);
    Ok((0..4).map(|k| &a.d[k] * &b.d[k + 4] - &a.d[k + 4] * &b.d[k]).sum())
}

pub fn ks_map(pt: &PhasePoint4, mode: KsMode) -> Result<PhasePoint3> {
    let vars = Vars::new(pt);
    let get = |c| vars.eval(c, mode).map(|j| j.v);
    Ok(PhasePoint3 {
        x: [get(Coordinate::X(0))?, get(Coordinate::X(1))?, get(Coordinate::X(2))?],
        p: [get(Coordinate::P(0))?, get(Coordinate::P(1))?, get(Coordinate::P(2))?],
    })
}

/// `K = u₁w₂ − u₂w₁ + u₃w₄ − u₄w₃`.
pub fn ks_constraint(pt: &PhasePoint4) -> Rational {
    let (u, w) = (&pt.u, &pt.w);
    &u[0] * &w[1] - &u[1] * &w[0] + &u[2] * &w[3] - &u[3] * &w[2]
}

/// Oscillator-side point `Z = u₁ + iu₃` with momenta `(w₁, w₃)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcPoint {
    pub u1: Rational,
    pub u3: Rational,
    pub w1: Rational,
    pub w3: Rational,
}

impl LcPoint {
    pub fn from_ints(u1: i64, u3: i64, w1: i64, w3: i64) -> Self {
        LcPoint { u1: rat(u1, 1), u3: rat(u3, 1), w1: rat(w1, 1), w3: rat(w3, 1) }
    }

    /// Embedding with `u₂ = u₄ = w₂ = w₄ = 0`.
    pub fn embed(&self) -> Result<PhasePoint4> {
        let z = Rational::zero();
        PhasePoint4::new(
            [self.u1.clone(), z.clone(), self.u3.clone(), z.clone()],
            [self.w1.clone(), z.clone(), self.w3.clone(), z],
        )
    }
}

pub fn lc_map(z: &LcPoint) -> Result<PhasePoint2> {
    let vars = Vars::new(&z.embed()?);
    let get = |c| vars.eval(c, KsMode::HopfNormalized).map(|j| j.v);
    Ok(PhasePoint2 {
        xi: get(Coordinate::Xi)?,
        eta: get(Coordinate::Eta)?,
        p_xi: get(Coordinate::PXi)?,
        p_eta: get(Coordinate::PEta)?,
    })
}

fn sample_int(rng: &mut impl Rng, nonzero: bool) -> i64 {
    loop {
        let v = rng.gen_range(-5..=5);
        if !nonzero || v != 0 {
            return v;
        }
    }
}

/// Integer point with entries in `[−5, 5]` and `u ≠ 0`.
pub fn random_point(rng: &mut impl Rng) -> PhasePoint4 {
    loop {
        let u = std::array::from_fn(|_| sample_int(rng, false));
        let w = std::array::from_fn(|_| sample_int(rng, false));
        if let Ok(p) = PhasePoint4::from_ints(u, w) {
            return p;
        }
    }
}

/// A random point moved onto `K = 0` by solving for the first `w` with a nonzero coefficient.
pub fn constrained_point(rng: &mut impl Rng) -> PhasePoint4 {
    let mut pt = random_point(rng);
    let coeff = [-&pt.u[1], pt.u[0].clone(), -&pt.u[3], pt.u[2].clone()];
    let k = coeff.iter().position(|c| !c.is_zero()).expect("u is nonzero");
    pt.w[k] = Rational::zero();
    let rest = ks_constraint(&pt);
    pt.w[k] = -rest / &coeff[k];
    pt
}

fn rational_residual(q: &Rational) -> f64 {
    q.abs().to_f64().unwrap_or(f64::INFINITY)
}

fn exact_identity(id: impl Into<String>, defect: &Rational) -> Identity {
    let mut r = Identity::flag(id, defect.is_zero());
    r.residual = rational_residual(defect);
    r
}

/// `|x|² = |z|⁴` on seeded samples; the worst defect is returned as residual.
pub fn hopf_norm_check(samples: usize, seed: u64, mode: KsMode) -> Result<Identity> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Rational::zero();
    for _ in 0..samples {
        let pt = random_point(&mut rng);
        let x = ks_map(&pt, mode)?.x;
        let n = pt.norm_sq();
        let d = x.iter().map(|v| v * v).sum::<Rational>() - &n * &n;
        if d.abs() > worst.abs() {
            worst = d;
        }
    }
    Ok(exact_identity(format!("transforms: |x|^2 = |z|^4 ({mode}, {samples} samples)"), &worst))
}

#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalReport {
    pub mode: KsMode,
    pub samples: usize,
    /// `{x_i, p_i}` at the first sample.
    pub diagonal: [Rational; 3],
    /// Common value of the diagonal over every sample, if there is one.
    pub constant: Option<Rational>,
    pub checks: Vec<Identity>,
}

/// Brackets of the pulled-back KS coordinates on `K = 0`.
pub fn ks_canonical_check(samples: usize, seed: u64, mode: KsMode) -> Result<CanonicalReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<PhasePoint4> = (0..samples).map(|_| constrained_point(&mut rng)).collect();
    let mut first: Option<[Rational; 3]> = None;
    let mut uniform = true;
    let (mut xx, mut pp, mut off, mut kx, mut kzero) = (true, true, true, true, true);
    for pt in &pts {
        kzero &= ks_constraint(pt).is_zero();
        let mut diag: [Rational; 3] = std::array::from_fn(|_| Rational::zero());
        for i in 0..3 {
            kx &= poisson_bracket(Coordinate::K, Coordinate::X(i), pt, mode)?.is_zero();
            for j in 0..3 {
                let b = poisson_bracket(Coordinate::X(i), Coordinate::P(j), pt, mode)?;
                if i == j {
                    diag[i] = b;
                } else {
                    off &= b.is_zero();
                }
                if i < j {
                    xx &= poisson_bracket(Coordinate::X(i), Coordinate::X(j), pt, mode)?.is_zero();
                    pp &= poisson_bracket(Coordinate::P(i), Coordinate::P(j), pt, mode)?.is_zero();
                }
            }
        }
        match &first {
            None => first = Some(diag),
            Some(f) => uniform &= *f == diag,
        }
    }
    let diagonal = first.unwrap_or_else(|| std::array::from_fn(|_| Rational::zero()));
    let constant = (uniform && diagonal.iter().all(|d| *d == diagonal[0])).then(|| diagonal[0].clone());
    let checks = vec![
        Identity::flag("transforms: samples satisfy K = 0", kzero),
        Identity::flag("transforms: {x_i, x_j} = 0 on K = 0", xx),
        Identity::flag("transforms: {p_i, p_j} = 0 on K = 0", pp),
        Identity::flag("transforms: {x_i, p_j} = 0 for i != j", off),
        Identity::flag(format!("transforms: {{x_i, p_i}} = c with one c ({mode})"), constant.is_some()),
        Identity::flag("transforms: {K, x_i} = 0", kx),
    ];
    Ok(CanonicalReport { mode, samples, diagonal, constant, checks })
}

/// Integer LC point with all four entries nonzero.
pub fn random_lc_point(rng: &mut impl Rng) -> LcPoint {
    LcPoint::from_ints(sample_int(rng, true), sample_int(rng, true), sample_int(rng, true), sample_int(rng, true))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LcReport {
    pub samples: usize,
    /// `({ξ, p_ξ}, {η, p_η})` when both are sample-independent.
    pub constants: Option<(Rational, Rational)>,
    pub checks: Vec<Identity>,
}

/// 2-to-1 fibers, `ξ + iη = Z²` and the LC brackets.
pub fn lc_checks(samples: usize, seed: u64) -> Result<LcReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut square, mut fiber, mut only, mut cross) = (true, true, true, true);
    let mut diag: Option<(Rational, Rational)> = None;
    let mut uniform = true;
    let m = KsMode::HopfNormalized;
    for _ in 0..samples {
        let z = random_lc_point(&mut rng);
        let img = lc_map(&z)?;
        square &= img.xi == &z.u1 * &z.u1 - &z.u3 * &z.u3 && img.eta == rat(2, 1) * &z.u1 * &z.u3;
        let mut same = 0;
        for signs in 0..16u8 {
            let s = |bit: u8, v: &Rational| if signs & (1 << bit) != 0 { -v } else { v.clone() };
            let flipped = LcPoint { u1: s(0, &z.u1), u3: s(1, &z.u3), w1: s(2, &z.w1), w3: s(3, &z.w3) };
            let hit = lc_map(&flipped)? == img;
            same += hit as usize;
            if signs == 15 {
                fiber &= hit;
            }
        }
        only &= same == 2;
        let pt = z.embed()?;
        let b = |f, g| poisson_bracket(f, g, &pt, m);
        cross &= b(Coordinate::Xi, Coordinate::PEta)?.is_zero()
            && b(Coordinate::Eta, Coordinate::PXi)?.is_zero()
            && b(Coordinate::Xi, Coordinate::Eta)?.is_zero()
            && b(Coordinate::PXi, Coordinate::PEta)?.is_zero();
        let d = (b(Coordinate::Xi, Coordinate::PXi)?, b(Coordinate::Eta, Coordinate::PEta)?);
        match &diag {
            None => diag = Some(d),
            Some(f) => uniform &= *f == d,
        }
    }
    let constants = diag.filter(|_| uniform);
    let stated = constants.as_ref().is_some_and(|(a, b)| *a == rat(2, 1) && *b == rat(2, 1));
    let checks = vec![
        Identity::flag("transforms: xi + i eta = Z^2", square),
        Identity::flag("transforms: LC image invariant under (u, w) -> (-u, -w)", fiber),
        Identity::flag("transforms: no other sign pattern shares the LC image", only),
        Identity::flag("transforms: LC mixed brackets vanish", cross),
        Identity::flag("transforms: LC diagonal brackets are sample-independent", constants.is_some()),
        Identity::flag("transforms: {xi, p_xi} = {eta, p_eta} = 2", stated),
    ];
    Ok(LcReport { samples, constants, checks })
}

/// `KS component = factor × LC component`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub ks: Coordinate,
    pub lc: Coordinate,
    pub factor: Rational,
}

/// Fit `(x₁, x₃, p₁, p₃)` against `(η, ξ, p_η, p_ξ)` on the plane `u₂ = u₄ = w₂ = w₄ = 0`.
pub fn ks_restrict_to_lc(samples: usize, seed: u64, mode: KsMode) -> Result<(Vec<Identification>, Identity)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<PhasePoint4> = (0..samples).map(|_| random_lc_point(&mut rng).embed()).collect::<Result<_>>()?;
    let ks = [Coordinate::X(0), Coordinate::X(2), Coordinate::P(0), Coordinate::P(2)];
    let lc = [Coordinate::Eta, Coordinate::Xi, Coordinate::PEta, Coordinate::PXi];
    let mut fits = Vec::new();
    let mut consistent = true;
    for (&k, &l) in ks.iter().zip(&lc) {
        let mut factor: Option<Rational> = None;
        for pt in &pts {
            let (a, b) = (coordinate(k, pt, mode)?, coordinate(l, pt, mode)?);
            if b.is_zero() {
                consistent &= a.is_zero();
                continue;
            }
            let f = a / b;
            match &factor {
                None => factor = Some(f),
                Some(g) => consistent &= *g == f,
            }
        }
        match factor {
            Some(factor) => fits.push(Identification { ks: k, lc: l, factor }),
            None => consistent = false,
        }
    }
    let id = Identity::flag(format!("transforms: KS restricts to LC with fixed factors ({mode})"), consistent);
    Ok((fits, id))
}

/// Every transform check, in a fixed order.
pub fn run_checks(samples: usize, seed: u64, mode: KsMode) -> Result<Vec<Identity>> {
    let mut out = vec![hopf_norm_check(samples, seed, mode)?];
    out.extend(ks_canonical_check(samples, seed, mode)?.checks);
    out.extend(lc_checks(samples, seed)?.checks);
    out.push(ks_restrict_to_lc(samples, seed, mode)?.1);
    Ok(out)
}
