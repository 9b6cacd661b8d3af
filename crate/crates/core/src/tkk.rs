//! Conformal algebras from the Jordan triple system: first-order differential
//! operators, the TKK relations, the conformal brackets, the 3-grading,
//! inversion and the ambient null-cone matrices.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::check::Identity;
use crate::error::{Error, Result};
use crate::jordan::{Field, TripleConstants};
use crate::lie::{self, ClosureReport, GeneratorTable, IndexSet, LieElement, Rule};
use crate::matrix::ExactMatrix;
use crate::scalar::{Rational, Scalar};
use crate::weyl::{Sig, Signature, WeylElement};

/// Conformal generators with lower indices; `M(μ, ν)` has `μ < ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    P(usize),
    M(usize, usize),
    D,
    K(usize),
}

impl Label {
    pub fn grade(self) -> i8 {
        match self {
            Label::P(_) => -1,
            Label::M(..) | Label::D => 0,
            Label::K(_) => 1,
        }
    }

    pub fn name(self) -> String {
        match self {
            Label::P(m) => format!("P{m}"),
            Label::M(m, n) => format!("M{m}{n}"),
            Label::D => "D".into(),
            Label::K(m) => format!("K{m}"),
        }
    }
}

pub fn conformal_signature(dim: usize) -> Sig {
    let pos: Vec<String> = (0..dim).map(|k| format!("x{k}")).collect();
    let der: Vec<String> = (0..dim).map(|k| format!("d{k}")).collect();
    let p: Vec<&str> = pos.iter().map(String::as_str).collect();
    let d: Vec<&str> = der.iter().map(String::as_str).collect();
    Signature::new(&format!("conformal{dim}"), &p, &d)
}

/// The differential-operator realization for one Jordan algebra.
#[derive(Clone, Debug)]
pub struct ConformalAlgebra {
    pub field: Field,
    pub dim: usize,
    sig: Sig,
    sigma: TripleConstants,
    /// `P_ν = i∂_ν`.
    pub p: Vec<WeylElement>,
    /// `M^μ_ν = i(x^μ∂_ν − x_ν∂^μ)`.
    pub m_up: Vec<Vec<WeylElement>>,
    /// `D = −i x·∂`.
    pub d: WeylElement,
    /// `K^μ = iΣ^{μβ}_{να} x^ν x^α ∂_β`.
    pub k_up: Vec<WeylElement>,
    /// `S^μ_ν = −iΣ^{μβ}_{να} x^α ∂_β` as tabulated.
    pub s_table: Vec<Vec<WeylElement>>,
}

fn sc(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn rat_scalar(q: &Rational) -> Scalar {
    Scalar::from_rational(q.clone())
}

impl ConformalAlgebra {
    pub fn build(field: Field) -> Result<Self> {
        let dim = field.dim();
        let sig = conformal_signature(dim);
        let sigma = TripleConstants::computed(field)?;
        let x = |k| WeylElement::position(&sig, k);
        let dd = |k| WeylElement::derivative(&sig, k);
        let g = |k| sc(field.metric(k));
        let i = Scalar::i();
        let p: Vec<_> = (0..dim).map(|n| dd(n) * &i).collect();
        let m_up = (0..dim)
            .map(|mu| (0..dim).map(|nu| (&(&x(mu) * &dd(nu)) - &(&(&x(nu) * &dd(mu)) * &(&g(nu) * &g(mu)))) * &i).collect())
            .collect();
        let euler = (0..dim).fold(WeylElement::zero(&sig), |acc, k| &acc + &(&x(k) * &dd(k)));
        let d = &euler * &(-Scalar::i());
        let mut k_up = Vec::with_capacity(dim);
        let mut s_table = Vec::with_capacity(dim);
        for mu in 0..dim {
            let mut k = WeylElement::zero(&sig);
            let mut row = Vec::with_capacity(dim);
            for nu in 0..dim {
                let mut s = WeylElement::zero(&sig);
                for al in 0..dim {
                    for be in 0..dim {
                        let c = sigma.get(mu, be, nu, al);
                        if c.is_zero() {
                            continue;
                        }
                        let c = rat_scalar(c);
                        s = &s + &(&(&x(al) * &dd(be)) * &(&c * &-Scalar::i()));
                        k = &k + &(&(&(&x(nu) * &x(al)) * &dd(be)) * &(&c * &i));
                    }
                }
                row.push(s);
            }
            k_up.push(k);
            s_table.push(row);
        }
        Ok(ConformalAlgebra { field, dim, sig, sigma, p, m_up, d, k_up, s_table })
    }

    pub fn signature(&self) -> &Sig {
        &self.sig
    }

    fn g(&self, k: usize) -> Scalar {
        sc(self.field.metric(k))
    }

    fn eta(&self, a: usize, b: usize) -> i64 {
        if a == b {
            self.field.metric(a)
        } else {
            0
        }
    }

    pub fn m_low(&self, mu: usize, nu: usize) -> WeylElement {
        &self.m_up[mu][nu] * &self.g(mu)
    }

    pub fn k_low(&self, mu: usize) -> WeylElement {
        &self.k_up[mu] * &self.g(mu)
    }

    pub fn generator(&self, l: Label) -> WeylElement {
        match l {
            Label::P(m) => self.p[m].clone(),
            Label::M(m, n) => self.m_low(m, n),
            Label::D => self.d.clone(),
            Label::K(m) => self.k_low(m),
        }
    }

    pub fn labels(&self) -> Vec<Label> {
        let n = self.dim;
        let mut v: Vec<Label> = (0..n).map(Label::P).collect();
        for a in 0..n {
            for b in a + 1..n {
                v.push(Label::M(a, b));
            }
        }
        v.push(Label::D);
        v.extend((0..n).map(Label::K));
        v
    }

    pub fn basis(&self) -> Vec<(Label, WeylElement)> {
        self.labels().into_iter().map(|l| (l, self.generator(l))).collect()
    }

    /// `S^μ_ν = iΣ^{μβ}_{να} x^α ∂_β`, the sign for which `S = M − δD`.
    pub fn s_corrected(&self, mu: usize, nu: usize) -> WeylElement {
        -&self.s_table[mu][nu]
    }

    /// Right side of a conformal bracket as `(coefficient, generator)` terms.
    pub fn expected_bracket(&self, a: Label, b: Label) -> Vec<(Scalar, Label)> {
        use Label::*;
        let i = Scalar::i();
        let mut out = Vec::new();
        let m = |out: &mut Vec<(Scalar, Label)>, c: Scalar, x: usize, y: usize| {
            if x < y {
                out.push((c, M(x, y)));
            } else if x > y {
                out.push((-c, M(y, x)));
            }
        };
        match (a, b) {
            (K(mu), P(nu)) => {
                if self.eta(mu, nu) != 0 {
                    out.push((&i * &sc(2 * self.eta(mu, nu)), D));
                }
                m(&mut out, &i * &sc(-2), mu, nu);
            }
            (D, P(mu)) => out.push((i, P(mu))),
            (D, K(mu)) => out.push((-i, K(mu))),
            (K(l), M(mu, nu)) | (P(l), M(mu, nu)) => {
                let wrap = |k| if matches!(a, K(_)) { K(k) } else { P(k) };
                if self.eta(l, mu) != 0 {
                    out.push((&i * &sc(self.eta(l, mu)), wrap(nu)));
                }
                if self.eta(l, nu) != 0 {
                    out.push((&i * &sc(-self.eta(l, nu)), wrap(mu)));
                }
            }
            (M(mu, nu), M(rho, sg)) => {
                for (e, x, y) in [
                    (self.eta(nu, rho), mu, sg),
                    (self.eta(mu, sg), nu, rho),
                    (-self.eta(mu, rho), nu, sg),
                    (-self.eta(nu, sg), mu, rho),
                ] {
                    if e != 0 {
                        m(&mut out, &i * &sc(e), x, y);
                    }
                }
            }
            (P(_), K(_)) | (P(_), D) | (K(_), D) | (M(..), K(_)) | (M(..), P(_)) => {
                out = self.expected_bracket(b, a).into_iter().map(|(c, l)| (-c, l)).collect();
            }
            _ => {}
        }
        out
    }

    fn combine(&self, terms: &[(Scalar, Label)]) -> WeylElement {
        terms.iter().fold(WeylElement::zero(&self.sig), |acc, (c, l)| &acc + &(&self.generator(*l) * c))
    }
}

/// Literal and derived forms of the generators.
pub fn definition_checks(alg: &ConformalAlgebra) -> Result<(Vec<Identity>, Identity)> {
    let n = alg.dim;
    let sig = alg.signature();
    let x = |k| WeylElement::position(sig, k);
    let dd = |k| WeylElement::derivative(sig, k);
    let i = Scalar::i();
    let g = |k| alg.g(k);
    let tag = alg.field.as_str();
    let mut out = Vec::new();
    let mut euler = WeylElement::zero(sig);
    let mut xsq = WeylElement::zero(sig);
    for k in 0..n {
        euler = &euler + &(&x(k) * &dd(k));
        xsq = &xsq + &(&(&x(k) * &x(k)) * &g(k));
    }
    out.push(Identity::exact(format!("tkk/{tag}: iD = x·∂"), &(&(&alg.d * &i) - &euler)));
    let mut p_ok = WeylElement::zero(sig);
    let mut m_ok = WeylElement::zero(sig);
    let mut k_ok = WeylElement::zero(sig);
    let mut s_ok = WeylElement::zero(sig);
    let mut s_lit = WeylElement::zero(sig);
    let mut lit_holds = true;
    for mu in 0..n {
        p_ok = &p_ok + &(&(&alg.p[mu] * &-Scalar::i()) - &dd(mu));
        let k_formula = &(&(&x(mu) * &euler) * &sc(-2)) + &(&(&xsq * &dd(mu)) * &g(mu));
        k_ok = &k_ok + &(&(&alg.k_up[mu] * &i) - &k_formula);
        for nu in 0..n {
            let m_formula = &(&(&x(mu) * &dd(nu)) * &sc(-1)) + &(&(&x(nu) * &dd(mu)) * &(&g(nu) * &g(mu)));
            m_ok = &m_ok + &(&(&alg.m_up[mu][nu] * &i) - &m_formula);
            let target = if mu == nu { &alg.m_up[mu][nu] - &alg.d } else { alg.m_up[mu][nu].clone() };
            let lit = &alg.s_table[mu][nu] - &target;
            lit_holds &= lit.is_zero();
            s_lit = &s_lit + &lit;
            s_ok = &s_ok + &(&alg.s_corrected(mu, nu) - &target);
        }
    }
    out.push(Identity::exact(format!("tkk/{tag}: -iP = ∂"), &p_ok));
    out.push(Identity::exact(format!("tkk/{tag}: iM = -x∂ + x∂"), &m_ok));
    out.push(Identity::exact(format!("tkk/{tag}: iK = -2x(x·∂) + x²∂ from Σ"), &k_ok));
    out.push(Identity::exact(format!("tkk/{tag}: iΣx∂ = M - δD"), &s_ok));
    let mut literal = Identity::exact(format!("tkk/{tag}: tabulated S = -iΣx∂ equals M - δD"), &s_lit);
    literal.holds = lit_holds;
    Ok((out, literal))
}

fn triple_vec(t: &TripleConstants, a: usize, b: usize, c: usize) -> Vec<Rational> {
    (0..t.dim()).map(|r| t.get(b, r, a, c).clone()).collect()
}

/// Vector-field TKK generators `U_a = ∂_a`, `S_a^b = −(a b x)·∂`, `U^b = (x b x)·∂`.
pub struct TkkFields {
    pub u_low: Vec<WeylElement>,
    pub s: Vec<Vec<WeylElement>>,
    pub u_up: Vec<WeylElement>,
}

pub fn tkk_fields(alg: &ConformalAlgebra) -> TkkFields {
    let n = alg.dim;
    let sig = alg.signature();
    let x = |k| WeylElement::position(sig, k);
    let dd = |k| WeylElement::derivative(sig, k);
    let t = &alg.sigma;
    let u_low = (0..n).map(dd).collect();
    let s = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let mut e = WeylElement::zero(sig);
                    for c in 0..n {
                        for (r, cf) in triple_vec(t, a, b, c).iter().enumerate() {
                            if !cf.is_zero() {
                                e = &e - &(&(&x(c) * &dd(r)) * &rat_scalar(cf));
                            }
                        }
                    }
                    e
                })
                .collect()
        })
        .collect();
    let u_up = (0..n)
        .map(|b| {
            let mut e = WeylElement::zero(sig);
            for al in 0..n {
                for ga in 0..n {
                    for (r, cf) in triple_vec(t, al, b, ga).iter().enumerate() {
                        if !cf.is_zero() {
                            e = &e + &(&(&(&x(al) * &x(ga)) * &dd(r)) * &rat_scalar(cf));
                        }
                    }
                }
            }
            e
        })
        .collect();
    TkkFields { u_low, s, u_up }
}

fn lin(coefs: &[Rational], gens: &[WeylElement]) -> WeylElement {
    coefs.iter().zip(gens).fold(gens[0].zero_like(), |acc, (c, g)| &acc + &(g * &rat_scalar(c)))
}

/// The six TKK relations over all index combinations, plus the identifications
/// `U = −iP`, `U^b = −iK^b`, `S_a^b = i(M − δD)^b_a`.
pub fn verify_tkk_relations(alg: &ConformalAlgebra) -> Result<Vec<Identity>> {
    let n = alg.dim;
    let f = tkk_fields(alg);
    let t = &alg.sigma;
    let tag = alg.field.as_str();
    let mut acc: BTreeMap<&str, (usize, f64)> = BTreeMap::new();
    let mut add = |k: &'static str, e: WeylElement| {
        let slot = acc.entry(k).or_insert((0, 0.0));
        slot.0 += 1;
        slot.1 = slot.1.max(if e.is_zero() { 0.0 } else { e.max_abs_coefficient().max(f64::MIN_POSITIVE) });
    };
    for a in 0..n {
        for b in 0..n {
            add("[U_a, U_b] = 0", f.u_low[a].commutator(&f.u_low[b])?);
            add("[U^a, U^b] = 0", f.u_up[a].commutator(&f.u_up[b])?);
            add("[U_a, U^b] = -2 S_a^b", &f.u_low[a].commutator(&f.u_up[b])? + &(&f.s[a][b] * &sc(2)));
            for c in 0..n {
                add("[S_a^b, U_c] = U_(abc)", &f.s[a][b].commutator(&f.u_low[c])? - &lin(&triple_vec(t, a, b, c), &f.u_low));
                add("[S_a^b, U^c] = -U^(bac)", &f.s[a][b].commutator(&f.u_up[c])? + &lin(&triple_vec(t, b, a, c), &f.u_up));
                for d in 0..n {
                    let lhs = f.s[a][b].commutator(&f.s[c][d])?;
                    let first: Vec<WeylElement> = (0..n).map(|r| f.s[r][d].clone()).collect();
                    let second: Vec<WeylElement> = (0..n).map(|r| f.s[c][r].clone()).collect();
                    let rhs = &lin(&triple_vec(t, a, b, c), &first) - &lin(&triple_vec(t, b, a, d), &second);
                    add("[S_a^b, S_c^d] = S_(abc)^d - S_c^(bad)", &lhs - &rhs);
                }
            }
            let s_from_m = if a == b { &alg.m_up[b][a] - &alg.d } else { alg.m_up[b][a].clone() };
            add("S_a^b = i(M - δD)^b_a", &f.s[a][b] - &(&s_from_m * &Scalar::i()));
        }
        add("U_a = -i P_a", &f.u_low[a] - &(&alg.p[a] * &-Scalar::i()));
        add("U^b = -i K^b", &f.u_up[a] - &(&alg.k_up[a] * &-Scalar::i()));
    }
    Ok(acc
        .into_iter()
        .map(|(k, (count, residual))| Identity { id: format!("tkk/{tag}: {k} ({count} cases)"), holds: residual == 0.0, residual })
        .collect())
}

/// Every pair of basis generators against the conformal brackets.
pub fn verify_conformal_relations(alg: &ConformalAlgebra) -> Result<(usize, Vec<Identity>)> {
    let basis = alg.basis();
    let mut out = Vec::new();
    let mut pairs = 0;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (la, ga) = &basis[i];
            let (lb, gb) = &basis[j];
            let want = alg.combine(&alg.expected_bracket(*la, *lb));
            let defect = &ga.commutator(gb)? - &want;
            pairs += 1;
            if !defect.is_zero() {
                out.push(Identity::exact(format!("conformal{}: [{}, {}]", alg.dim, la.name(), lb.name()), &defect));
            }
        }
    }
    let ok = Identity::flag(format!("conformal{}: all {pairs} brackets match", alg.dim), out.is_empty());
    out.insert(0, ok);
    Ok((pairs, out))
}

/// `[iD, g] = k g` for every generator, and grade additivity over all pairs.
pub fn grading_check(alg: &ConformalAlgebra) -> Result<Vec<Identity>> {
    let basis = alg.basis();
    let id = &alg.d * &Scalar::i();
    let mut eig = WeylElement::zero(alg.signature());
    for (l, g) in &basis {
        eig = &eig + &(&id.commutator(g)? - &(g * &sc(l.grade() as i64)));
    }
    let elems: Vec<WeylElement> = basis.iter().map(|(_, g)| g.clone()).collect();
    let mut additive = true;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let br = elems[i].commutator(&elems[j])?;
            if br.is_zero() {
                continue;
            }
            let want = basis[i].0.grade() + basis[j].0.grade();
            match lie::decompose(&br, &elems) {
                Some(c) => additive &= c.iter().zip(&basis).all(|(c, (l, _))| c.is_zero() || l.grade() == want),
                None => additive = false,
            }
        }
    }
    Ok(vec![
        Identity::exact(format!("conformal{}: [iD, g] = grade·g", alg.dim), &eig),
        Identity::flag(format!("conformal{}: grades add under brackets", alg.dim), additive),
    ])
}

/// Span is `dim` generators and closes under brackets.
pub fn closure_check(alg: &ConformalAlgebra) -> Result<Identity> {
    let elems: Vec<WeylElement> = alg.basis().into_iter().map(|(_, g)| g).collect();
    let rank = lie::span_rank(&elems);
    let closes = lie::structure_constants(&elems)?.is_some();
    Ok(Identity::flag(format!("conformal{}: rank {rank} and closed", alg.dim), closes && rank == elems.len()))
}

/// Complex-case generators free of the `σ₂` direction, with mode 2 dropped, equal the real-case set.
pub fn sigma2_deletion(complex: &ConformalAlgebra, real: &ConformalAlgebra) -> Result<Identity> {
    let rename = |k: usize| match k {
        0 => Some(0),
        1 => Some(1),
        3 => Some(2),
        _ => None,
    };
    let mut ok = true;
    let mut compared = 0;
    for (l, g) in complex.basis() {
        let mapped = match l {
            Label::P(m) => rename(m).map(Label::P),
            Label::K(m) => rename(m).map(Label::K),
            Label::D => Some(Label::D),
            Label::M(a, b) => rename(a).zip(rename(b)).map(|(a, b)| Label::M(a, b)),
        };
        let Some(target) = mapped else { continue };
        compared += 1;
        ok &= g.project(real.signature(), &[0, 1, 3])? == real.generator(target);
    }
    Ok(Identity::flag(format!("σ2 deletion maps {compared} complex generators onto the real set"), ok && compared == real.labels().len()))
}

/// `I(x)^μ = x_μ / x²`.
pub fn inversion(x: &[Rational], field: Field) -> Result<Vec<Rational>> {
    let sq = x.iter().enumerate().fold(Rational::zero(), |a, (k, v)| a + v * v * Rational::from_integer(field.metric(k).into()));
    if sq.is_zero() {
        return Err(Error::Invalid("inversion undefined on the light cone".into()));
    }
    Ok(x.iter().enumerate().map(|(k, v)| v * Rational::from_integer(field.metric(k).into()) / &sq).collect())
}

/// Result of comparing `K^μ f` with `I P_μ I f` at sample points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InversionReport {
    pub samples: usize,
    /// `c` with `K^μ f = c·(I P_μ I f)` at every sample, if one exists.
    pub fitted_constant: Option<Scalar>,
    pub involution: bool,
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=3).into())
}

/// Sample-based check at exact rational points off the cone.
pub fn inversion_check(alg: &ConformalAlgebra, samples: usize, seed: u64) -> Result<InversionReport> {
    let n = alg.dim;
    let sig = alg.signature();
    let field = alg.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = |k| WeylElement::position(sig, k);
    let mut funcs = vec![&x(0) * &x(1), &(&x(0) * &x(0)) * &x(0), &(&x(1) * &x(n - 1)) + &x(0)];
    for _ in 0..2 {
        let mut f = WeylElement::zero(sig);
        for _ in 0..4 {
            let mut t = WeylElement::constant(sig, Scalar::from_int(rng.gen_range(-3i64..=3)));
            for _ in 0..rng.gen_range(0..=3) {
                t = &t * &x(rng.gen_range(0..n));
            }
            f = &f + &t;
        }
        funcs.push(f);
    }
    let mut fitted: Option<Scalar> = None;
    let mut consistent = true;
    let mut involution = true;
    let mut taken = 0;
    while taken < samples {
        let pt: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
        let Ok(y) = inversion(&pt, field) else { continue };
        taken += 1;
        involution &= inversion(&y, field)? == pt;
        let ys: Vec<Scalar> = y.iter().map(rat_scalar).collect();
        let xs: Vec<Scalar> = pt.iter().map(rat_scalar).collect();
        let lower = |v: &[Scalar], k: usize| &v[k] * &alg.g(k);
        let ysq = (0..n).fold(Scalar::zero(), |a, k| &a + &(&ys[k] * &lower(&ys, k)));
        let y4 = &ysq * &ysq;
        for f in &funcs {
            let grad: Vec<Scalar> =
                (0..n).map(|k| WeylElement::derivative(sig, k).apply(f)?.evaluate(&xs)).collect::<Result<_>>()?;
            for mu in 0..n {
                // ∂(y_ν/y²)/∂y^μ = g_νμ/y² − 2 y_ν y_μ/y⁴
                let mut ipi = Scalar::zero();
                for nu in 0..n {
                    let mut jac = &(&lower(&ys, nu) * &lower(&ys, mu)) * &sc(-2);
                    jac = &jac / &y4;
                    if nu == mu {
                        jac = &jac + &(&alg.g(mu) / &ysq);
                    }
                    ipi = &ipi + &(&grad[nu] * &jac);
                }
                ipi = &ipi * &Scalar::i();
                let k = alg.k_up[mu].apply(f)?.evaluate(&xs)?;
                if ipi.is_zero() {
                    consistent &= k.is_zero();
                    continue;
                }
                let c = &k / &ipi;
                match &fitted {
                    None => fitted = Some(c),
                    Some(prev) => consistent &= *prev == c,
                }
            }
        }
    }
    Ok(InversionReport { samples: taken, fitted_constant: if consistent { fitted } else { None }, involution })
}

/// Labels and metric of the ambient space for spacetime dimension 3 or 4.
pub fn ambient_indices(dim: usize) -> Result<IndexSet> {
    match dim {
        4 => Ok(IndexSet::so24()),
        3 => Ok(IndexSet::so23()),
        _ => Err(Error::Invalid(format!("ambient space for dimension {dim} is not provided"))),
    }
}

/// `L_AB = i ω_AB` with `(ω_AB)^C_D = δ^C_A η_BD − δ^C_B η_AD`.
pub fn ambient_generators(idx: &IndexSet) -> Result<GeneratorTable<ExactMatrix>> {
    let n = idx.labels().len();
    let mut t = GeneratorTable::new(idx.clone());
    for (a, b) in idx.pairs() {
        let mut m = ExactMatrix::zeros(n, n);
        for (ci, &c) in idx.labels().iter().enumerate() {
            for (di, &d) in idx.labels().iter().enumerate() {
                let v = i64::from(c == a) * idx.eta(b, d) as i64 - i64::from(c == b) * idx.eta(a, d) as i64;
                if v != 0 {
                    m.set(ci, di, Scalar::imag_frac(v, 1));
                }
            }
        }
        t.insert(a, b, m)?;
    }
    Ok(t)
}

fn metric_matrix(idx: &IndexSet) -> ExactMatrix {
    let n = idx.labels().len();
    let mut m = ExactMatrix::zeros(n, n);
    for (k, &l) in idx.labels().iter().enumerate() {
        m.set(k, k, Scalar::from_int(idx.eta(l, l) as i64));
    }
    m
}

/// Null vector `(1, 0, …, 0, 1)` of the ambient metric.
pub fn sample_null(idx: &IndexSet) -> Vec<Scalar> {
    let n = idx.labels().len();
    (0..n).map(|k| if k == 0 || k == n - 1 { Scalar::one() } else { Scalar::zero() }).collect()
}

#[derive(Clone, Debug)]
pub struct AmbientReport {
    pub dim: usize,
    pub closure: ClosureReport,
    pub eta_antisymmetric: bool,
    pub cone_tangent: bool,
}

pub fn ambient_representation(dim: usize) -> Result<AmbientReport> {
    let idx = ambient_indices(dim)?;
    let table = ambient_generators(&idx)?;
    let closure = lie::verify_closure(&table, Rule::ConformalPlus)?;
    let eta = metric_matrix(&idx);
    let x = sample_null(&idx);
    let mut anti = true;
    let mut tangent = true;
    for (_, t) in table.generators() {
        let form = &(&t.transpose() * &eta) + &(&eta * &t);
        anti &= form.is_zero();
        let mut q = Scalar::zero();
        for i in 0..x.len() {
            for j in 0..x.len() {
                q = &q + &(&(&x[i] * form.get(i, j)) * &x[j]);
            }
        }
        tangent &= q.is_zero();
    }
    Ok(AmbientReport { dim, closure, eta_antisymmetric: anti, cone_tangent: tangent })
}

/// Delete one ambient index from the six-index set, rename the survivors onto
/// `{−1, 0, 1, 2, 3}` and compare matrices entry by entry with the five-index set.
pub fn ambient_deletion(drop: i8, rename: impl Fn(i8) -> i8 + Copy) -> Result<Identity> {
    let big = ambient_generators(&IndexSet::so24())?;
    let small = ambient_generators(&IndexSet::so23())?;
    let keep: Vec<usize> = IndexSet::so24().labels().iter().enumerate().filter(|(_, &l)| l != drop).map(|(k, _)| k).collect();
    let reduced = big.without(&[drop])?.renamed(rename)?;
    let order_kept = reduced.indices().labels() == small.indices().labels();
    let mut ok = order_kept;
    if order_kept {
        for ((a, b), m) in reduced.generators() {
            let mut sub = ExactMatrix::zeros(keep.len(), keep.len());
            for (i, &r) in keep.iter().enumerate() {
                for (j, &c) in keep.iter().enumerate() {
                    sub.set(i, j, m.get(r, c).clone());
                }
            }
            ok &= small.get(a, b).is_some_and(|s| s == sub);
        }
    }
    Ok(Identity::flag(format!("ambient: deleting index {drop} gives the five-index generators"), ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(f: Field) -> ConformalAlgebra {
        ConformalAlgebra::build(f).unwrap()
    }

    #[test]
    fn generator_counts() {
        assert_eq!(alg(Field::Complex).labels().len(), 15);
        assert_eq!(alg(Field::Real).labels().len(), 10);
    }

    #[test]
    fn definitions() {
        for f in [Field::Real, Field::Complex] {
            let (ok, literal) = definition_checks(&alg(f)).unwrap();
            assert!(ok.iter().all(|i| i.holds), "{ok:?}");
            assert!(!literal.holds);
        }
    }

    #[test]
    fn k0_body() {
        let a = alg(Field::Complex);
        let sig = a.signature();
        let x = |k| WeylElement::position(sig, k);
        let d0 = WeylElement::derivative(sig, 0);
        let euler = (0..4).fold(WeylElement::zero(sig), |acc, k| &acc + &(&x(k) * &WeylElement::derivative(sig, k)));
        let xsq = &(&x(0) * &x(0)) - &(&(&(&x(1) * &x(1)) + &(&x(2) * &x(2))) + &(&x(3) * &x(3)));
        let want = &(&(&x(0) * &euler) * &sc(-2)) + &(&xsq * &d0);
        assert_eq!(&a.k_up[0] * &Scalar::i(), want);
    }

    #[test]
    fn tkk_relations_hold() {
        for f in [Field::Real, Field::Complex] {
            let r = verify_tkk_relations(&alg(f)).unwrap();
            assert!(r.iter().all(|i| i.holds), "{:?}", r.iter().filter(|i| !i.holds).collect::<Vec<_>>());
        }
    }

    #[test]
    fn conformal_brackets() {
        for (f, want) in [(Field::Complex, 105), (Field::Real, 45)] {
            let (pairs, r) = verify_conformal_relations(&alg(f)).unwrap();
            assert_eq!(pairs, want);
            assert!(r.iter().all(|i| i.holds), "{:?}", r.iter().filter(|i| !i.holds).collect::<Vec<_>>());
        }
    }

    #[test]
    fn specific_brackets() {
        let a = alg(Field::Complex);
        let i = Scalar::i();
        assert_eq!(a.d.commutator(&a.p[0]).unwrap(), &a.p[0] * &i);
        assert_eq!(a.k_low(0).commutator(&a.p[0]).unwrap(), &a.d * &(&i * &sc(2)));
        assert!(a.p[1].commutator(&a.p[2]).unwrap().is_zero());
    }

    #[test]
    fn grading_and_closure() {
        for f in [Field::Real, Field::Complex] {
            let a = alg(f);
            assert!(grading_check(&a).unwrap().iter().all(|i| i.holds));
            assert!(closure_check(&a).unwrap().holds);
        }
    }

    #[test]
    fn deletion_of_sigma2() {
        assert!(sigma2_deletion(&alg(Field::Complex), &alg(Field::Real)).unwrap().holds);
    }

    #[test]
    fn inversion_points() {
        let x: Vec<Rational> = [2, 1, 0, 0].iter().map(|&v| Rational::from_integer(v.into())).collect();
        let y = inversion(&x, Field::Complex).unwrap();
        assert_eq!(y[0], Rational::new(2.into(), 3.into()));
        assert_eq!(y[1], Rational::new((-1).into(), 3.into()));
        assert_eq!(inversion(&y, Field::Complex).unwrap(), x);
        let cone: Vec<Rational> = [1, 1, 0, 0].iter().map(|&v| Rational::from_integer(v.into())).collect();
        assert!(inversion(&cone, Field::Complex).is_err());
    }

    #[test]
    fn inversion_conjugates_translations() {
        let r = inversion_check(&alg(Field::Complex), 16, 42).unwrap();
        assert_eq!(r.samples, 16);
        assert!(r.involution);
        assert_eq!(r.fitted_constant, Some(Scalar::from_int(-1)));
    }

    #[test]
    fn ambient() {
        for d in [3, 4] {
            let r = ambient_representation(d).unwrap();
            assert!(r.closure.closes() && r.eta_antisymmetric && r.cone_tangent);
        }
        let first = ambient_representation(4).unwrap().closure;
        assert_eq!(first.pairs.len(), 105);
        assert!(ambient_deletion(2, |l| match l {
            3 => 2,
            5 => 3,
            l => l,
        })
        .unwrap()
        .holds);
        assert!(ambient_deletion(3, |l| if l == 5 { 3 } else { l }).unwrap().holds);
    }
}
