//! Landau problem in the symmetric gauge and Dirac's quadratic so(2,3)
//! generators in phase, holomorphic, oscillator and spinorial form.
//!
//! Internal units are ħ = m = ω = 1, with phase-space variables measured in
//! magnetic lengths. [`LandauFrame`] converts to Gaussian units.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::check::Identity;
use crate::error::{Error, Result};
use crate::fock::{self, FockBasis, FockDictionary, FockOperator, Level};
use crate::lie::{self, ClosureReport, GeneratorTable, IndexSet, LieElement, Rule};
use crate::matrix::ExactMatrix;
use crate::scalar::Scalar;
use crate::weyl::{AdjointKind, AdjointMap, GeneratorMap, Sig, Signature, WeylElement};

pub const HBAR_CGS: f64 = 1.054_571_817e-27;
pub const LIGHT_SPEED_CGS: f64 = 2.997_924_58e10;
pub const ELECTRON_CHARGE_ESU: f64 = 4.803_204_71e-10;
pub const ELECTRON_MASS_G: f64 = 9.109_383_701_5e-28;

/// Physical scales of one Landau problem.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LandauFrame {
    /// Cyclotron frequency `eB/(mc)` in s⁻¹.
    pub omega: f64,
    /// Square of the magnetic length `ħc/(eB)` in cm², when a field is given.
    pub magnetic_length_sq: Option<f64>,
}

impl LandauFrame {
    /// Field in gauss, mass in grams, charge in esu.
    pub fn gaussian(field: f64, mass: f64, charge: f64) -> Result<Self> {
        if !(field > 0.0 && mass > 0.0 && charge > 0.0) {
            return Err(Error::Invalid("field, mass and charge must be positive".into()));
        }
        Ok(LandauFrame {
            omega: charge * field / (mass * LIGHT_SPEED_CGS),
            magnetic_length_sq: Some(HBAR_CGS * LIGHT_SPEED_CGS / (charge * field)),
        })
    }

    pub fn electron(field: f64) -> Result<Self> {
        LandauFrame::gaussian(field, ELECTRON_MASS_G, ELECTRON_CHARGE_ESU)
    }

    pub fn from_omega(omega: f64) -> Result<Self> {
        if !(omega > 0.0) {
            return Err(Error::Invalid("omega must be positive".into()));
        }
        Ok(LandauFrame { omega, magnetic_length_sq: None })
    }

    pub fn magnetic_length(&self) -> Option<f64> {
        self.magnetic_length_sq.map(f64::sqrt)
    }

    /// Energy in erg of a level given in units of ħω.
    pub fn energy(&self, level: f64) -> f64 {
        HBAR_CGS * self.omega * level
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Presentation {
    Phase,
    Holomorphic,
    Oscillator,
    Spinorial,
}

impl Presentation {
    pub const ALL: [Presentation; 4] =
        [Presentation::Phase, Presentation::Holomorphic, Presentation::Oscillator, Presentation::Spinorial];

    pub fn as_str(self) -> &'static str {
        match self {
            Presentation::Phase => "phase",
            Presentation::Holomorphic => "holomorphic",
            Presentation::Oscillator => "oscillator",
            Presentation::Spinorial => "spinorial",
        }
    }

    pub fn signature(self) -> Sig {
        match self {
            Presentation::Phase => phase_signature(),
            Presentation::Holomorphic => holomorphic_signature(),
            Presentation::Oscillator | Presentation::Spinorial => oscillator_signature(),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Presentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Presentation::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown presentation {s:?}")))
    }
}

/// `(ξ, η | ∂_ξ, ∂_η)`; momenta are `p = −i∂`.
pub fn phase_signature() -> Sig {
    Signature::new("phase", &["xi", "eta"], &["d_xi", "d_eta"])
}

pub fn holomorphic_signature() -> Sig {
    Signature::new("holomorphic", &["z", "zb"], &["d", "db"])
}

/// Creation operators as positions, annihilation operators as derivatives.
pub fn oscillator_signature() -> Sig {
    Signature::new("oscillator", &["a+", "b+"], &["a-", "b-"])
}

fn q(p: i64, d: i64) -> Scalar {
    Scalar::frac(p, d)
}

fn qi(p: i64, d: i64) -> Scalar {
    Scalar::imag_frac(p, d)
}

fn anti(a: &WeylElement, b: &WeylElement) -> WeylElement {
    &(a * b) + &(b * a)
}

fn sq(a: &WeylElement) -> WeylElement {
    a * a
}

struct PhaseVars {
    xi: WeylElement,
    eta: WeylElement,
    pxi: WeylElement,
    peta: WeylElement,
    one: WeylElement,
}

fn phase_vars() -> PhaseVars {
    let s = phase_signature();
    PhaseVars {
        xi: WeylElement::position(&s, 0),
        eta: WeylElement::position(&s, 1),
        pxi: WeylElement::momentum(&s, 0),
        peta: WeylElement::momentum(&s, 1),
        one: WeylElement::one(&s),
    }
}

struct HoloVars {
    z: WeylElement,
    zb: WeylElement,
    d: WeylElement,
    db: WeylElement,
    one: WeylElement,
}

fn holo_vars() -> HoloVars {
    let s = holomorphic_signature();
    HoloVars {
        z: WeylElement::position(&s, 0),
        zb: WeylElement::position(&s, 1),
        d: WeylElement::derivative(&s, 0),
        db: WeylElement::derivative(&s, 1),
        one: WeylElement::one(&s),
    }
}

/// Ladder operators of the two modes in one presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct Oscillators {
    pub a_plus: WeylElement,
    pub a_minus: WeylElement,
    pub b_plus: WeylElement,
    pub b_minus: WeylElement,
}

impl Oscillators {
    fn check(self) -> Result<Self> {
        let sig = self.a_plus.signature().clone();
        let one = WeylElement::one(&sig);
        let zero = WeylElement::zero(&sig);
        let want = [
            (&self.a_minus, &self.a_plus, &one),
            (&self.b_minus, &self.b_plus, &one),
            (&self.a_minus, &self.b_plus, &zero),
            (&self.a_minus, &self.b_minus, &zero),
            (&self.a_plus, &self.b_plus, &zero),
            (&self.a_plus, &self.b_minus, &zero),
        ];
        for (k, (x, y, w)) in want.into_iter().enumerate() {
            if x.commutator(y)? != *w {
                return Err(Error::NonCanonicalMap(format!("ladder relation {k} fails in {}", sig.name())));
            }
        }
        Ok(self)
    }

    pub fn map(&self, f: &GeneratorMap) -> Result<Self> {
        Oscillators {
            a_plus: f.apply(&self.a_plus)?,
            a_minus: f.apply(&self.a_minus)?,
            b_plus: f.apply(&self.b_plus)?,
            b_minus: f.apply(&self.b_minus)?,
        }
        .check()
    }
}

/// `a⁻ = (z+∂̄)/√2`, `b⁻ = (z̄+∂)/√2`, `a⁺ = (z̄−∂)/√2`, `b⁺ = (z−∂̄)/√2`, checked canonical.
pub fn build_oscillators(p: Presentation) -> Result<Oscillators> {
    let sig = p.signature();
    if matches!(p, Presentation::Oscillator | Presentation::Spinorial) {
        return Oscillators {
            a_plus: WeylElement::position(&sig, 0),
            b_plus: WeylElement::position(&sig, 1),
            a_minus: WeylElement::derivative(&sig, 0),
            b_minus: WeylElement::derivative(&sig, 1),
        }
        .check();
    }
    let h = holo_vars();
    let r = Scalar::inv_sqrt2();
    let holo = Oscillators {
        a_minus: (&h.z + &h.db) * &r,
        b_minus: (&h.zb + &h.d) * &r,
        a_plus: (&h.zb - &h.d) * &r,
        b_plus: (&h.z - &h.db) * &r,
    }
    .check()?;
    match p {
        Presentation::Holomorphic => Ok(holo),
        _ => holo.map(&holo_to_phase()?),
    }
}

/// Kinetic momenta, guiding centre, energy and angular momentum.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseOperators {
    pub px: WeylElement,
    pub py: WeylElement,
    pub x: WeylElement,
    pub y: WeylElement,
    /// `H/ħω`.
    pub hamiltonian: WeylElement,
    /// `L_z/ħ`.
    pub angular_momentum: WeylElement,
}

/// Symmetric gauge: `P = ((p_ξ+η), (p_η−ξ))/√2`, `X = (ξ+p_η)/√2`, `Y = (η−p_ξ)/√2`.
pub fn build_phase_operators() -> PhaseOperators {
    let v = phase_vars();
    let r = Scalar::inv_sqrt2();
    let px = (&v.pxi + &v.eta) * &r;
    let py = (&v.peta - &v.xi) * &r;
    let hamiltonian = (&sq(&px) + &sq(&py)) * q(1, 2);
    PhaseOperators {
        x: (&v.xi + &v.peta) * &r,
        y: (&v.eta - &v.pxi) * &r,
        angular_momentum: &(&v.xi * &v.peta) - &(&v.eta * &v.pxi),
        px,
        py,
        hamiltonian,
    }
}

/// Landau gauge `H = ¼((p_ξ+2η)² + p_η²)`.
pub fn landau_gauge_hamiltonian() -> WeylElement {
    let v = phase_vars();
    let shifted = &v.pxi + &(&v.eta * Scalar::from_int(2));
    (&sq(&shifted) + &sq(&v.peta)) * q(1, 4)
}

/// Conjugation by `e^{iξη}`: `∂_ξ ↦ ∂_ξ + iη`, `∂_η ↦ ∂_η + iξ`.
pub fn gauge_map() -> Result<GeneratorMap> {
    let s = phase_signature();
    let v = phase_vars();
    GeneratorMap::new(
        &s,
        &s,
        vec![v.xi.clone(), v.eta.clone()],
        vec![
            &WeylElement::derivative(&s, 0) + &(&v.eta * Scalar::i()),
            &WeylElement::derivative(&s, 1) + &(&v.xi * Scalar::i()),
        ],
    )
}

pub fn holo_to_phase() -> Result<GeneratorMap> {
    let v = phase_vars();
    let s = phase_signature();
    let r = Scalar::inv_sqrt2();
    let (dx, dy) = (WeylElement::derivative(&s, 0), WeylElement::derivative(&s, 1));
    let ieta = &v.eta * Scalar::i();
    let idy = &dy * Scalar::i();
    GeneratorMap::new(
        &holomorphic_signature(),
        &s,
        vec![(&v.xi + &ieta) * &r, (&v.xi - &ieta) * &r],
        vec![(&dx - &idy) * &r, (&dx + &idy) * &r],
    )
}

pub fn phase_to_holo() -> Result<GeneratorMap> {
    let h = holo_vars();
    let r = Scalar::inv_sqrt2();
    let mir = &r * &(-Scalar::i());
    let ir = &r * &Scalar::i();
    GeneratorMap::new(
        &phase_signature(),
        &holomorphic_signature(),
        vec![(&h.z + &h.zb) * &r, (&h.z - &h.zb) * &mir],
        vec![(&h.d + &h.db) * &r, (&h.d - &h.db) * &ir],
    )
}

/// Inverse of the ladder definitions: `a⁺ ↦ (z̄−∂)/√2` and so on.
pub fn osc_to_holo() -> Result<GeneratorMap> {
    let h = holo_vars();
    let r = Scalar::inv_sqrt2();
    GeneratorMap::new(
        &oscillator_signature(),
        &holomorphic_signature(),
        vec![(&h.zb - &h.d) * &r, (&h.z - &h.db) * &r],
        vec![(&h.z + &h.db) * &r, (&h.zb + &h.d) * &r],
    )
}

pub fn holo_to_osc() -> Result<GeneratorMap> {
    let s = oscillator_signature();
    let (ap, bp) = (WeylElement::position(&s, 0), WeylElement::position(&s, 1));
    let (am, bm) = (WeylElement::derivative(&s, 0), WeylElement::derivative(&s, 1));
    let r = Scalar::inv_sqrt2();
    GeneratorMap::new(
        &holomorphic_signature(),
        &s,
        vec![(&am + &bp) * &r, (&bm + &ap) * &r],
        vec![(&bm - &ap) * &r, (&am - &bp) * &r],
    )
}

pub fn phase_to_osc() -> Result<GeneratorMap> {
    phase_to_holo()?.then(&holo_to_osc()?)
}

pub fn osc_to_phase() -> Result<GeneratorMap> {
    osc_to_holo()?.then(&holo_to_phase()?)
}

/// The ten `m_ab` of one presentation.
#[derive(Clone, Debug)]
pub struct DiracGenerators {
    pub presentation: Presentation,
    pub table: GeneratorTable<WeylElement>,
}

impl DiracGenerators {
    pub fn get(&self, a: i8, b: i8) -> WeylElement {
        self.table.get(a, b).expect("complete so(2,3) table")
    }
}

type Rows = Vec<((i8, i8), WeylElement)>;

fn phase_rows(literal: bool) -> Rows {
    let v = phase_vars();
    let (x, y, px, py) = (&v.xi, &v.eta, &v.pxi, &v.peta);
    let m01_sum = &(x * py) + &(y * px);
    vec![
        ((1, 2), (&(x * py) - &(y * px)) * q(1, 2)),
        ((2, 3), (&(&(&sq(px) - &sq(py)) + &sq(x)) - &sq(y)) * q(1, 4)),
        ((3, 1), (&(x * y) + &(px * py)) * q(-1, 2)),
        ((1, -1), (&(x * y) - &(px * py)) * q(1, 2)),
        ((2, -1), (&(&(&sq(x) - &sq(y)) + &sq(py)) - &sq(px)) * q(1, 4)),
        ((3, -1), &((&(x * px) + &(y * py)) * q(1, 2)) - &(&v.one * qi(1, 2))),
        ((0, 1), if literal { m01_sum * qi(1, 2) } else { m01_sum * q(1, 2) }),
        ((0, 2), (&(x * px) - &(y * py)) * q(1, 2)),
        ((0, 3), (&(&(&sq(px) + &sq(py)) - &sq(x)) - &sq(y)) * q(1, 4)),
        ((-1, 0), (&(&(&sq(px) + &sq(py)) + &sq(x)) + &sq(y)) * q(1, 4)),
    ]
}

fn holo_rows(literal: bool) -> Rows {
    let h = holo_vars();
    let (z, zb, d, db) = (&h.z, &h.zb, &h.d, &h.db);
    let euler = &(z * d) + &(zb * db);
    let m3m1 = if literal { &euler - &h.one } else { &euler + &h.one };
    let m03 = (&(z * zb) + &(d * db)) * if literal { q(1, 2) } else { q(-1, 2) };
    vec![
        ((1, 2), (&(z * d) - &(zb * db)) * q(1, 2)),
        ((2, 3), (&(&(&sq(z) + &sq(zb)) - &sq(d)) - &sq(db)) * q(1, 4)),
        ((3, 1), (&(&(&sq(z) - &sq(zb)) + &sq(d)) - &sq(db)) * qi(1, 4)),
        ((1, -1), (&(&(&sq(z) - &sq(zb)) - &sq(d)) + &sq(db)) * qi(-1, 4)),
        ((2, -1), (&(&(&sq(z) + &sq(zb)) + &sq(d)) + &sq(db)) * q(1, 4)),
        ((3, -1), m3m1 * qi(-1, 2)),
        ((0, 1), (&(z * db) - &(zb * d)) * q(-1, 2)),
        ((0, 2), (&(zb * d) + &(z * db)) * qi(-1, 2)),
        ((0, 3), m03),
        ((-1, 0), (&(z * zb) - &(d * db)) * q(1, 2)),
    ]
}

fn osc_rows() -> Rows {
    let s = oscillator_signature();
    let (ap, bp) = (WeylElement::position(&s, 0), WeylElement::position(&s, 1));
    let (am, bm) = (WeylElement::derivative(&s, 0), WeylElement::derivative(&s, 1));
    vec![
        ((1, 2), (&anti(&bm, &bp) - &anti(&am, &ap)) * q(1, 4)),
        ((2, 3), (&anti(&am, &bp) + &anti(&ap, &bm)) * q(1, 4)),
        ((3, 1), (&anti(&am, &bp) - &anti(&ap, &bm)) * qi(1, 4)),
        ((1, -1), (&(&(&sq(&ap) - &sq(&am)) + &sq(&bm)) - &sq(&bp)) * qi(1, 4)),
        ((2, -1), (&(&(&sq(&am) + &sq(&ap)) + &sq(&bm)) + &sq(&bp)) * q(1, 4)),
        ((3, -1), (&anti(&am, &bm) - &anti(&ap, &bp)) * qi(-1, 4)),
        ((0, 1), (&(&(&sq(&am) + &sq(&ap)) - &sq(&bm)) - &sq(&bp)) * q(-1, 4)),
        ((0, 2), (&(&(&sq(&am) - &sq(&ap)) + &sq(&bm)) - &sq(&bp)) * qi(-1, 4)),
        ((0, 3), (&anti(&ap, &bp) + &anti(&am, &bm)) * q(-1, 4)),
        ((-1, 0), (&anti(&am, &ap) + &anti(&bm, &bp)) * q(1, 4)),
    ]
}

/// Two-component Weyl spinor `χ = (b⁻, a⁻)` and its conjugate `χ* = (b⁺, a⁺)`.
pub fn weyl_spinor(p: Presentation) -> Result<([WeylElement; 2], [WeylElement; 2])> {
    let o = build_oscillators(p)?;
    Ok(([o.b_minus, o.a_minus], [o.b_plus, o.a_plus]))
}

/// `Σ_ij M_ij l_i r_j`.
pub fn bilinear(left: &[WeylElement], m: &ExactMatrix, right: &[WeylElement]) -> Result<WeylElement> {
    let mut acc = left[0].zero_like();
    for (i, l) in left.iter().enumerate() {
        for (j, r) in right.iter().enumerate() {
            let c = m.get(i, j);
            if !c.is_zero() {
                acc = acc.try_add(&l.multiply(r)?.scale(c))?;
            }
        }
    }
    Ok(acc)
}

/// Pauli matrices `σ₁, σ₂, σ₃`.
pub fn pauli() -> [ExactMatrix; 3] {
    [
        ExactMatrix::from_gaussian_ints(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]),
        ExactMatrix::from_gaussian_ints(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
        ExactMatrix::from_gaussian_ints(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]),
    ]
}

/// `ε = iσ₂`.
pub fn epsilon() -> ExactMatrix {
    ExactMatrix::from_gaussian_ints(&[&[(0, 0), (1, 0)], &[(-1, 0), (0, 0)]])
}

fn spinor_rows() -> Result<Rows> {
    let (chi, chis) = weyl_spinor(Presentation::Spinorial)?;
    let s = pauli();
    let eps = epsilon();
    let mut rows = Vec::new();
    for (i, j, k) in [(1usize, 2usize, 3usize), (2, 3, 1), (3, 1, 2)] {
        let m = bilinear(&chis, &s[k - 1].transpose(), &chi)?.scale(&q(1, 2));
        rows.push(((i as i8, j as i8), m));
    }
    for i in 1..=3usize {
        let a = bilinear(&chis, &(&s[i - 1].transpose() * &eps.transpose()), &chis)?;
        let b = bilinear(&chi, &(&eps * &s[i - 1].transpose()), &chi)?;
        rows.push(((-1, i as i8), a.try_sub(&b)?.scale(&qi(1, 4))));
        rows.push(((0, i as i8), a.try_add(&b)?.scale(&q(1, 4))));
    }
    let n = bilinear(&chis, &ExactMatrix::identity(2), &chi)?;
    rows.push(((-1, 0), n.try_add(&WeylElement::one(chi[0].signature()))?.scale(&q(1, 2))));
    Ok(rows)
}

fn table_from(rows: Rows) -> Result<GeneratorTable<WeylElement>> {
    let mut t = GeneratorTable::new(IndexSet::so23());
    for ((a, b), e) in rows {
        t.insert(a, b, e)?;
    }
    Ok(t)
}

/// The ten generators, with the misprinted rows of the printed tables corrected.
pub fn dirac_generators(p: Presentation) -> Result<DiracGenerators> {
    let rows = match p {
        Presentation::Phase => phase_rows(false),
        Presentation::Holomorphic => holo_rows(false),
        Presentation::Oscillator => osc_rows(),
        Presentation::Spinorial => spinor_rows()?,
    };
    Ok(DiracGenerators { presentation: p, table: table_from(rows)? })
}

/// The table exactly as printed, including its misprints.
pub fn printed_generators(p: Presentation) -> Result<DiracGenerators> {
    let rows = match p {
        Presentation::Phase => phase_rows(true),
        Presentation::Holomorphic => holo_rows(true),
        _ => return dirac_generators(p),
    };
    Ok(DiracGenerators { presentation: p, table: table_from(rows)? })
}

/// A printed row that differs from the implemented one.
#[derive(Clone, Debug)]
pub struct PrintedRow {
    pub pair: (i8, i8),
    pub printed: WeylElement,
    pub implemented: WeylElement,
}

pub fn printed_deviations(p: Presentation) -> Result<Vec<PrintedRow>> {
    let lit = printed_generators(p)?;
    let fixed = dirac_generators(p)?;
    Ok(IndexSet::so23()
        .pairs()
        .into_iter()
        .filter_map(|(a, b)| {
            let (x, y) = (lit.get(a, b), fixed.get(a, b));
            (x != y).then_some(PrintedRow { pair: (a, b), printed: x, implemented: y })
        })
        .collect())
}

/// All 45 brackets against `rule`.
pub fn verify_so23(g: &DiracGenerators, rule: Rule) -> Result<ClosureReport> {
    lie::verify_closure(&g.table, rule)
}

fn pair_label((a, b): (i8, i8)) -> String {
    format!("m[{a},{b}]")
}

/// 30 equalities: holomorphic→phase, oscillator→holomorphic, oscillator→phase.
pub fn cross_presentation_check() -> Result<Vec<Identity>> {
    let phase = dirac_generators(Presentation::Phase)?;
    let holo = dirac_generators(Presentation::Holomorphic)?;
    let osc = dirac_generators(Presentation::Oscillator)?;
    let legs = [
        ("holomorphic-to-phase", holo_to_phase()?, &holo, &phase),
        ("oscillator-to-holomorphic", osc_to_holo()?, &osc, &holo),
        ("oscillator-to-phase", osc_to_phase()?, &osc, &phase),
    ];
    let mut out = Vec::new();
    for (name, map, from, to) in legs {
        for (pair, g) in from.table.generators() {
            let diff = map.apply(&g)?.try_sub(&to.get(pair.0, pair.1))?;
            out.push(Identity::exact(format!("{name}/{}", pair_label(pair)), &diff));
        }
    }
    Ok(out)
}

/// Energy, angular momentum and ladder identities, evaluated symbolically in phase variables.
pub fn hamiltonian_identities() -> Result<Vec<Identity>> {
    let ops = build_phase_operators();
    let o = build_oscillators(Presentation::Phase)?;
    let m = dirac_generators(Presentation::Phase)?;
    let h = &ops.hamiltonian;
    let lz = &ops.angular_momentum;
    let mut out = vec![
        Identity::exact("H = m[-1,0] - m[1,2]", &h.try_sub(&m.get(-1, 0).try_sub(&m.get(1, 2))?)?),
        Identity::exact("Lz = 2 m[1,2]", &lz.try_sub(&m.get(1, 2).scale(&Scalar::from_int(2)))?),
        Identity::exact("[H, b+] = 0", &h.commutator(&o.b_plus)?),
        Identity::exact("[H, b-] = 0", &h.commutator(&o.b_minus)?),
        Identity::exact("[H, a+] = a+", &h.commutator(&o.a_plus)?.try_sub(&o.a_plus)?),
        Identity::exact("[H, a-] = -a-", &h.commutator(&o.a_minus)?.try_add(&o.a_minus)?),
        Identity::exact("[Lz, b+] = b+", &lz.commutator(&o.b_plus)?.try_sub(&o.b_plus)?),
        Identity::exact("[Lz, b-] = -b-", &lz.commutator(&o.b_minus)?.try_add(&o.b_minus)?),
        Identity::exact("[H, Lz] = 0", &h.commutator(lz)?),
        Identity::exact("H = a+ a- + 1/2", &h.try_sub(&(&(&o.a_plus * &o.a_minus) + &(&WeylElement::one(h.signature()) * q(1, 2))))?),
        Identity::exact("[Px, Py] = i", &ops.px.commutator(&ops.py)?.try_sub(&WeylElement::constant(h.signature(), Scalar::i()))?),
        Identity::exact("[X, Y] = -i", &ops.x.commutator(&ops.y)?.try_add(&WeylElement::constant(h.signature(), Scalar::i()))?),
    ];
    for (p, pn) in [(&ops.px, "Px"), (&ops.py, "Py")] {
        for (x, xn) in [(&ops.x, "X"), (&ops.y, "Y")] {
            out.push(Identity::exact(format!("[{pn}, {xn}] = 0"), &p.commutator(x)?));
        }
    }
    for (a, b) in [(1, 2), (2, 3), (3, 1)] {
        out.push(Identity::exact(format!("[m[-1,0], {}] = 0", pair_label((a, b))), &m.get(-1, 0).commutator(&m.get(a, b))?));
    }
    Ok(out)
}

/// Dictionary `a± ↦ mode 0`, `b± ↦ mode 1` on `(cutoff+1)²` states.
pub fn oscillator_dictionary(cutoff: usize) -> Result<FockDictionary> {
    FockDictionary::creation_annihilation(FockBasis::new(2, cutoff))
}

fn realize_phase(e: &WeylElement, to_osc: &GeneratorMap, dict: &FockDictionary) -> Result<FockOperator> {
    fock::realize(&to_osc.apply(e)?, dict)
}

/// The identities of [`hamiltonian_identities`] and all 45 brackets, as matrices on the Fock interior.
pub fn fock_identities(cutoff: usize, tol: f64) -> Result<Vec<Identity>> {
    let dict = oscillator_dictionary(cutoff)?;
    let basis = dict.basis();
    let interior = basis.interior(2);
    let to_osc = phase_to_osc()?;
    let r = |e: &WeylElement| realize_phase(e, &to_osc, &dict);
    let ops = build_phase_operators();
    let o = build_oscillators(Presentation::Phase)?;
    let m = dirac_generators(Presentation::Phase)?;
    let (h, lz) = (r(&ops.hamiltonian)?, r(&ops.angular_momentum)?);
    let (ap, am, bp, bm) = (r(&o.a_plus)?, r(&o.a_minus)?, r(&o.b_plus)?, r(&o.b_minus)?);
    let zero = FockOperator::zero(basis);
    let dev = |a: &FockOperator, b: &FockOperator| a.max_deviation_on(b, &interior);
    let neg = |a: &FockOperator| a.scale(num_complex::Complex64::new(-1.0, 0.0));
    let mut out = vec![
        Identity::numeric("fock: H = m[-1,0] - m[1,2]", dev(&h, &r(&m.get(-1, 0))?.sub(&r(&m.get(1, 2))?)?)?, tol),
        Identity::numeric("fock: Lz = 2 m[1,2]", dev(&lz, &r(&m.get(1, 2))?.scale(2.0.into()))?, tol),
        Identity::numeric("fock: [H, b+] = 0", dev(&h.commutator(&bp)?, &zero)?, tol),
        Identity::numeric("fock: [H, b-] = 0", dev(&h.commutator(&bm)?, &zero)?, tol),
        Identity::numeric("fock: [H, a+] = a+", dev(&h.commutator(&ap)?, &ap)?, tol),
        Identity::numeric("fock: [H, a-] = -a-", dev(&h.commutator(&am)?, &neg(&am))?, tol),
        Identity::numeric("fock: [Lz, b+] = b+", dev(&lz.commutator(&bp)?, &bp)?, tol),
        Identity::numeric("fock: [Lz, b-] = -b-", dev(&lz.commutator(&bm)?, &neg(&bm))?, tol),
        Identity::numeric("fock: [H, Lz] = 0", dev(&h.commutator(&lz)?, &zero)?, tol),
        Identity::numeric("fock: H hermitian", h.hermiticity_defect_on(&interior), tol),
    ];
    for (a, b) in [(1, 2), (2, 3), (3, 1)] {
        let c = r(&m.get(-1, 0))?.commutator(&r(&m.get(a, b))?)?;
        out.push(Identity::numeric(format!("fock: [m[-1,0], {}] = 0", pair_label((a, b))), dev(&c, &zero)?, tol));
    }
    let realized = m.table.generators().into_iter().map(|(p, g)| Ok((p, r(&g)?))).collect::<Result<Vec<_>>>()?;
    let sign = verify_so23(&m, Rule::DiracCo)?.fitted_sign.unwrap_or(1) as f64;
    for i in 0..realized.len() {
        for j in i + 1..realized.len() {
            let (pi, gi) = &realized[i];
            let (pj, gj) = &realized[j];
            let want = r(&m.table.expected(Rule::DiracCo, *pi, *pj)?)?.scale(sign.into());
            out.push(Identity::numeric(
                format!("fock: [{}, {}]", pair_label(*pi), pair_label(*pj)),
                dev(&gi.commutator(gj)?, &want)?,
                tol,
            ));
        }
    }
    Ok(out)
}

/// Spectrum of `H/ħω` on two truncated modes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LandauSpectrum {
    pub cutoff: usize,
    pub levels: Vec<Level>,
    /// Levels `n < cutoff − 2`, untouched by truncation effects on the interior.
    pub interior_levels: usize,
}

pub fn landau_spectrum(cutoff: usize) -> Result<LandauSpectrum> {
    if cutoff < 2 {
        return Err(Error::Invalid("cutoff must be at least 2".into()));
    }
    let dict = oscillator_dictionary(cutoff)?;
    let h = realize_phase(&build_phase_operators().hamiltonian, &phase_to_osc()?, &dict)?;
    let levels = fock::spectrum(&h, true)?;
    Ok(LandauSpectrum { cutoff, interior_levels: (cutoff - 2).min(levels.len()), levels })
}

impl LandauSpectrum {
    /// Largest `|E_n − (n+½)|` over interior levels, and whether each has degeneracy `cutoff+1`.
    pub fn interior_check(&self) -> (f64, bool) {
        let mut dev: f64 = 0.0;
        let mut degenerate = self.levels.len() >= self.interior_levels;
        for (n, l) in self.levels.iter().take(self.interior_levels).enumerate() {
            dev = dev.max((l.value - (n as f64 + 0.5)).abs()).max(l.imag.abs());
            degenerate &= l.multiplicity == self.cutoff + 1;
        }
        (dev, degenerate)
    }
}

/// `{m_-10, m_-13, m_03}` closes on itself.
pub fn radial_triple() -> Result<Identity> {
    let m = dirac_generators(Presentation::Phase)?;
    let basis = [m.get(-1, 0), m.get(-1, 3), m.get(0, 3)];
    let closes = lie::structure_constants(&basis)?.is_some();
    Ok(Identity::flag("radial triple {m[-1,0], m[-1,3], m[0,3]} closes", closes))
}

/// Symmetric-gauge `H` conjugated into the Landau gauge.
pub fn landau_gauge_check() -> Result<Identity> {
    let mapped = gauge_map()?.apply(&build_phase_operators().hamiltonian)?;
    Ok(Identity::exact("gauge map sends symmetric H to Landau-gauge H", &mapped.try_sub(&landau_gauge_hamiltonian())?))
}

/// Adjoint type of each oscillator-form generator under `a⁻ ↔ a⁺`.
pub fn adjoint_kinds() -> Result<Vec<((i8, i8), AdjointKind)>> {
    let m = dirac_generators(Presentation::Oscillator)?;
    let adj = AdjointMap::ladder(m.table.get(1, 2).expect("m12").signature())?;
    m.table.generators().into_iter().map(|(p, g)| Ok((p, adj.kind(&g)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_relations() {
        let o = build_phase_operators();
        let s = phase_signature();
        assert_eq!(o.px.commutator(&o.py).unwrap(), WeylElement::constant(&s, Scalar::i()));
        assert_eq!(o.x.commutator(&o.y).unwrap(), WeylElement::constant(&s, -Scalar::i()));
        assert!(o.px.commutator(&o.x).unwrap().is_zero());
    }

    #[test]
    fn oscillators_in_every_presentation() {
        for p in [Presentation::Phase, Presentation::Holomorphic, Presentation::Oscillator] {
            let o = build_oscillators(p).unwrap();
            assert!(o.a_plus.commutator(&o.b_minus).unwrap().is_zero());
        }
        let h = holo_vars();
        let am = build_oscillators(Presentation::Holomorphic).unwrap().a_minus;
        assert_eq!(am, (&h.z + &h.db) * Scalar::inv_sqrt2());
    }

    #[test]
    fn footnote_inverse_on_a_minus() {
        let s = oscillator_signature();
        let h = holo_vars();
        let img = osc_to_holo().unwrap().apply(&WeylElement::derivative(&s, 0)).unwrap();
        assert_eq!(img, (&h.z + &h.db) * Scalar::inv_sqrt2());
    }

    #[test]
    fn maps_are_mutually_inverse() {
        let round = phase_to_holo().unwrap().then(&holo_to_phase().unwrap()).unwrap();
        let m = dirac_generators(Presentation::Phase).unwrap();
        for (_, g) in m.table.generators() {
            assert_eq!(round.apply(&g).unwrap(), g);
        }
        let round = holo_to_osc().unwrap().then(&osc_to_holo().unwrap()).unwrap();
        let m = dirac_generators(Presentation::Holomorphic).unwrap();
        for (_, g) in m.table.generators() {
            assert_eq!(round.apply(&g).unwrap(), g);
        }
    }

    #[test]
    fn literal_rows() {
        let v = phase_vars();
        let m = dirac_generators(Presentation::Phase).unwrap();
        assert_eq!(m.get(1, 2), (&(&v.xi * &v.peta) - &(&v.eta * &v.pxi)) * q(1, 2));
        let m3 = &((&(&v.xi * &v.pxi) + &(&v.eta * &v.peta)) * q(1, 2)) - &(&v.one * qi(1, 2));
        assert_eq!(m.get(3, -1), m3);
        let s = oscillator_signature();
        let (ap, am) = (WeylElement::position(&s, 0), WeylElement::derivative(&s, 0));
        let (bp, bm) = (WeylElement::position(&s, 1), WeylElement::derivative(&s, 1));
        let osc = dirac_generators(Presentation::Oscillator).unwrap();
        assert_eq!(osc.get(-1, 0), (&anti(&am, &ap) + &anti(&bm, &bp)) * q(1, 4));
    }

    #[test]
    fn closure_in_every_presentation() {
        for p in Presentation::ALL {
            let r = verify_so23(&dirac_generators(p).unwrap(), Rule::DiracCo).unwrap();
            assert_eq!(r.pairs.len(), 45);
            assert!(r.closes(), "{p}: {:?}", r.failures());
        }
    }

    #[test]
    fn printed_misprints_break_closure() {
        for p in [Presentation::Phase, Presentation::Holomorphic] {
            assert!(!printed_deviations(p).unwrap().is_empty());
            assert!(!verify_so23(&printed_generators(p).unwrap(), Rule::DiracCo).unwrap().closes());
        }
        assert!(printed_deviations(Presentation::Oscillator).unwrap().is_empty());
    }

    #[test]
    fn presentations_agree() {
        let r = cross_presentation_check().unwrap();
        assert_eq!(r.len(), 30);
        assert!(r.iter().all(|i| i.holds), "{:?}", r.iter().filter(|i| !i.holds).collect::<Vec<_>>());
    }

    #[test]
    fn spinorial_equals_oscillator() {
        let a = dirac_generators(Presentation::Spinorial).unwrap();
        let b = dirac_generators(Presentation::Oscillator).unwrap();
        for (p, g) in a.table.generators() {
            assert_eq!(g, b.get(p.0, p.1), "{p:?}");
        }
    }

    #[test]
    fn energy_identities() {
        let r = hamiltonian_identities().unwrap();
        assert!(r.iter().all(|i| i.holds), "{:?}", r.iter().filter(|i| !i.holds).collect::<Vec<_>>());
    }

    #[test]
    fn numeric_identities_small_cutoff() {
        let r = fock_identities(6, 1e-10).unwrap();
        assert!(r.iter().all(|i| i.holds), "{:?}", r.iter().filter(|i| !i.holds).collect::<Vec<_>>());
    }

    #[test]
    fn spectrum_levels() {
        let s = landau_spectrum(6).unwrap();
        assert!((s.levels[0].value - 0.5).abs() < 1e-10);
        assert!((s.levels[1].value - 1.5).abs() < 1e-10);
        let (dev, deg) = s.interior_check();
        assert!(dev < 1e-8 && deg);
    }

    #[test]
    fn subalgebras_and_gauge() {
        assert!(radial_triple().unwrap().holds);
        assert!(landau_gauge_check().unwrap().holds);
    }

    #[test]
    fn spinor_number_relation() {
        let (chi, chis) = weyl_spinor(Presentation::Holomorphic).unwrap();
        let h = holo_vars();
        assert_eq!(chi[0], (&h.zb + &h.d) * Scalar::inv_sqrt2());
        for a in 0..2 {
            for b in 0..2 {
                let c = chi[a].commutator(&chis[b]).unwrap();
                assert_eq!(c.is_zero(), a != b);
            }
        }
    }

    #[test]
    fn frame_units() {
        let f = LandauFrame::electron(1.0e4).unwrap();
        assert!((f.omega - 1.7588e11).abs() / 1.7588e11 < 1e-3);
        assert!(LandauFrame::gaussian(-1.0, 1.0, 1.0).is_err());
        assert!(f.magnetic_length().unwrap() > 0.0);
    }

    #[test]
    fn adjoint_types_recorded() {
        let k = adjoint_kinds().unwrap();
        assert_eq!(k.len(), 10);
        let m10 = k.iter().find(|(p, _)| *p == (-1, 0)).unwrap().1;
        assert_eq!(m10, AdjointKind::SelfAdjoint);
    }
}
