//! Dirac matrices, the su(2,2) generators `σ^{AB}`, the four-mode ladder
//! representation and its Majorana reduction to two modes.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::check::Identity;
use crate::error::{Error, Result};
use crate::fock::{self, FockBasis, FockDictionary};
use crate::landau::{self, bilinear, epsilon, pauli, Presentation};
use crate::lie::{self, ClosureReport, GeneratorTable, IndexSet, LieElement, Rule};
use crate::matrix::ExactMatrix;
use crate::scalar::{rat, Scalar};
use crate::weyl::{Sig, Signature, WeylElement};

/// Dirac representation.
#[derive(Clone, Debug)]
pub struct GammaBasis {
    pub gamma: [ExactMatrix; 4],
    pub gamma5: ExactMatrix,
    pub beta: ExactMatrix,
    pub charge_conjugation: ExactMatrix,
}

/// `γ⁰ = diag(1, −1)`, `γⁱ = ((0, σᵢ), (−σᵢ, 0))`, `γ⁵ = γ⁰γ¹γ²γ³`, `C = iγ⁰γ²`.
pub fn build_gamma() -> Result<GammaBasis> {
    let id = ExactMatrix::identity(2);
    let z = ExactMatrix::zeros(2, 2);
    let s = pauli();
    let g0 = ExactMatrix::blocks(&id, &z, &z, &-&id);
    let gi = |k: usize| ExactMatrix::blocks(&z, &s[k], &-&s[k], &z);
    let gamma = [g0, gi(0), gi(1), gi(2)];
    let gamma5 = &(&(&gamma[0] * &gamma[1]) * &gamma[2]) * &gamma[3];
    let charge_conjugation = (&gamma[0] * &gamma[2]).scale(&Scalar::i());
    let g = GammaBasis { beta: gamma[0].clone(), gamma, gamma5, charge_conjugation };
    for (k, ok) in clifford_relations(&g).iter().enumerate() {
        if !ok {
            return Err(Error::Invalid(format!("Clifford relation {k} fails")));
        }
    }
    Ok(g)
}

fn minkowski(mu: usize) -> i64 {
    if mu == 0 {
        1
    } else {
        -1
    }
}

/// `{γ^μ, γ^ν} = 2η^{μν}` for all ten pairs, then `(γ⁵)² = −1` and `{γ⁵, γ^μ} = 0`.
pub fn clifford_relations(g: &GammaBasis) -> Vec<bool> {
    let id = ExactMatrix::identity(4);
    let mut out = Vec::new();
    for mu in 0..4 {
        for nu in mu..4 {
            let want = if mu == nu { id.scale(&Scalar::from_int(2 * minkowski(mu))) } else { ExactMatrix::zeros(4, 4) };
            out.push(g.gamma[mu].anticommutator(&g.gamma[nu]) == want);
        }
    }
    out.push(&g.gamma5 * &g.gamma5 == -&id);
    out.push(g.gamma.iter().all(|m| m.anticommutator(&g.gamma5).is_zero()));
    out
}

fn gamma_of(g: &GammaBasis, l: i8) -> &ExactMatrix {
    match l {
        0..=3 => &g.gamma[l as usize],
        _ => &g.gamma5,
    }
}

/// `σ^{μν} = (i/4)[γ^μ, γ^ν]` (with `γ⁵` for index 5) and `σ^{−1A} = −½γ^A`.
pub fn build_sigma(g: &GammaBasis) -> Result<GeneratorTable<ExactMatrix>> {
    let idx = IndexSet::so24();
    let mut t = GeneratorTable::new(idx.clone());
    for (a, b) in idx.pairs() {
        let m = if a == -1 {
            gamma_of(g, b).scale(&Scalar::frac(-1, 2))
        } else {
            gamma_of(g, a).commutator(gamma_of(g, b)).scale(&Scalar::imag_frac(1, 4))
        };
        t.insert(a, b, m)?;
    }
    Ok(t)
}

/// `β σ β⁻¹ = σ†` for all fifteen.
pub fn pseudo_hermitian(g: &GammaBasis, sigma: &GeneratorTable<ExactMatrix>) -> bool {
    let Some(binv) = g.beta.inverse() else { return false };
    sigma.generators().iter().all(|(_, s)| &(&g.beta * s) * &binv == s.dagger())
}

/// `(z¹, z², z̄¹, z̄² | ∂₁, ∂₂, ∂̄₁, ∂̄₂)`.
pub fn four_mode_signature() -> Sig {
    Signature::new("four-mode", &["z1", "z2", "zb1", "zb2"], &["d1", "d2", "db1", "db2"])
}

/// An operator-valued spinor and its conjugate.
#[derive(Clone, Debug)]
pub struct SpinorBilinear {
    pub psi: Vec<WeylElement>,
    pub psibar: Vec<WeylElement>,
}

impl SpinorBilinear {
    fn new(psi: Vec<WeylElement>, psibar: Vec<WeylElement>) -> Result<Self> {
        let s = SpinorBilinear { psi, psibar };
        if !s.canonical()? {
            return Err(Error::NonCanonicalMap("[ψ, ψ̄] is not the identity".into()));
        }
        Ok(s)
    }

    /// `[ψ^α, ψ̄_β] = δ^α_β`.
    pub fn canonical(&self) -> Result<bool> {
        let sig = self.psi[0].signature();
        for (a, p) in self.psi.iter().enumerate() {
            for (b, q) in self.psibar.iter().enumerate() {
                let want = if a == b { WeylElement::one(sig) } else { WeylElement::zero(sig) };
                if p.commutator(q)? != want {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `ψ̄ M ψ`.
    pub fn current(&self, m: &ExactMatrix) -> Result<WeylElement> {
        bilinear(&self.psibar, m, &self.psi)
    }

    pub fn currents(&self, sigma: &GeneratorTable<ExactMatrix>) -> Result<GeneratorTable<WeylElement>> {
        sigma.map(|m| self.current(m))
    }
}

/// `ψ = (z̄¹, z̄², ∂₁, ∂₂)`, `ψ̄ = (−∂̄₁, −∂̄₂, z¹, z²)`.
pub fn ladder_spinor() -> Result<SpinorBilinear> {
    let s = four_mode_signature();
    let x = |k| WeylElement::position(&s, k);
    let d = |k| WeylElement::derivative(&s, k);
    SpinorBilinear::new(vec![x(2), x(3), d(0), d(1)], vec![-&d(2), -&d(3), x(0), x(1)])
}

pub fn ladder_representation(g: &GammaBasis) -> Result<GeneratorTable<WeylElement>> {
    ladder_spinor()?.currents(&build_sigma(g)?)
}

fn random_matrix(rng: &mut impl Rng) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            m.set(i, j, Scalar::gauss(rat(rng.gen_range(-2..=2), 1), rat(rng.gen_range(-2..=2), 1)));
        }
    }
    m
}

/// `[ψ̄Aψ, ψ̄Bψ] = ψ̄[A,B]ψ` on seeded random complex matrices.
pub fn homomorphism_check(pairs: usize, seed: u64) -> Result<Identity> {
    let spinor = ladder_spinor()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = WeylElement::zero(spinor.psi[0].signature());
    let mut ok = true;
    for _ in 0..pairs {
        let (a, b) = (random_matrix(&mut rng), random_matrix(&mut rng));
        let lhs = spinor.current(&a)?.commutator(&spinor.current(&b)?)?;
        let defect = lhs.try_sub(&spinor.current(&a.commutator(&b))?)?;
        if !defect.is_zero() {
            ok = false;
            worst = defect;
        }
    }
    let mut r = Identity::exact(format!("spinor: bilinear map is a homomorphism on {pairs} random pairs"), &worst);
    r.holds = ok;
    Ok(r)
}

/// `C₁ = ψ̄ψ`.
pub fn linear_casimir() -> Result<WeylElement> {
    ladder_spinor()?.current(&ExactMatrix::identity(4))
}

/// `z^α∂_α − z̄^α∂̄_α`.
pub fn helicity_euler() -> WeylElement {
    let s = four_mode_signature();
    let mut e = WeylElement::zero(&s);
    for k in 0..4 {
        let t = &WeylElement::position(&s, k) * &WeylElement::derivative(&s, k);
        e = if k < 2 { &e + &t } else { &e - &t };
    }
    e
}

/// `λ = −(C₁ + 2)/2` on the monomial `z^α z̄^β`, if it is an eigenfunction.
pub fn helicity_on(exponents: [u8; 4]) -> Result<Option<Scalar>> {
    let s = four_mode_signature();
    let mut f = WeylElement::one(&s);
    for (k, &e) in exponents.iter().enumerate() {
        for _ in 0..e {
            f = &f * &WeylElement::position(&s, k);
        }
    }
    let lam = helicity_euler().scale(&Scalar::frac(-1, 2));
    let img = lam.apply(&f)?;
    if img.is_zero() {
        return Ok(Some(Scalar::zero()));
    }
    let Some((m, c)) = img.terms().next() else { return Ok(None) };
    let base = f.coefficient(m);
    if base.is_zero() || img != f.scale(&(c / &base)) {
        return Ok(None);
    }
    Ok(Some(c / &base))
}

pub fn casimir_checks(j: &GeneratorTable<WeylElement>) -> Result<Vec<Identity>> {
    let c1 = linear_casimir()?;
    let two = WeylElement::constant(c1.signature(), Scalar::from_int(2));
    let mut center = WeylElement::zero(c1.signature());
    let mut all_zero = true;
    for (_, g) in j.generators() {
        let c = c1.commutator(&g)?;
        all_zero &= c.is_zero();
        if !c.is_zero() {
            center = c;
        }
    }
    let mut central = Identity::exact("spinor: [C1, J] = 0 for all 15", &center);
    central.holds = all_zero;
    let half = Scalar::frac(1, 2);
    let lambda = [
        ("spinor: λ(1) = 0", [0, 0, 0, 0], Scalar::zero()),
        ("spinor: λ(z1) = -1/2", [1, 0, 0, 0], -&half),
        ("spinor: λ(zb1) = 1/2", [0, 0, 1, 0], half.clone()),
        ("spinor: λ(z1 zb2) = 0", [1, 0, 0, 1], Scalar::zero()),
    ];
    let mut out = vec![Identity::exact("spinor: C1 + 2 = z∂ - zb∂b", &c1.try_add(&two)?.try_sub(&helicity_euler())?), central];
    for (id, e, want) in lambda {
        out.push(Identity::flag(id, helicity_on(e)? == Some(want)));
    }
    Ok(out)
}

/// Brackets of `J^{AB}` as matrices on the four-mode Fock interior.
pub fn fock_check(j: &GeneratorTable<WeylElement>, cutoff: usize, tol: f64, sign: i8) -> Result<Identity> {
    let dict = FockDictionary::creation_annihilation(FockBasis::new(4, cutoff))?;
    let interior = dict.basis().interior(2);
    let gens = j.generators();
    let realized = gens.iter().map(|(_, g)| fock::realize(g, &dict)).collect::<Result<Vec<_>>>()?;
    let mut worst: f64 = 0.0;
    let s = Complex64::new(sign as f64, 0.0);
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            let want = fock::realize(&j.expected(Rule::ConformalPlus, gens[a].0, gens[b].0)?, &dict)?.scale(s);
            let got = realized[a].commutator(&realized[b])?;
            worst = worst.max(got.max_deviation_on(&want, &interior)?);
        }
    }
    Ok(Identity::numeric(format!("spinor: J brackets on the four-mode Fock interior (cutoff {cutoff})"), worst, tol))
}

/// `ψ = (χ, εᵀχ*ᵀ)`, `ψ̄ = (χ*, −χᵀε)` from the two-mode Weyl spinor.
pub fn majorana_spinor() -> Result<SpinorBilinear> {
    let (chi, chis) = landau::weyl_spinor(Presentation::Oscillator)?;
    let eps = epsilon();
    let et = eps.transpose();
    let lin = |m: &ExactMatrix, v: &[WeylElement], row: usize, left: bool| -> Result<WeylElement> {
        let mut acc = v[0].zero_like();
        for (k, e) in v.iter().enumerate() {
            let c = if left { m.get(k, row) } else { m.get(row, k) };
            acc = acc.try_add(&e.scale(c))?;
        }
        Ok(acc)
    };
    let psi = vec![chi[0].clone(), chi[1].clone(), lin(&et, &chis, 0, false)?, lin(&et, &chis, 1, false)?];
    let psibar = vec![chis[0].clone(), chis[1].clone(), -&lin(&eps, &chi, 0, true)?, -&lin(&eps, &chi, 1, true)?];
    SpinorBilinear::new(psi, psibar)
}

/// One surviving current and the oscillator generator it is proportional to.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Correspondence {
    pub current: (i8, i8),
    pub generator: (i8, i8),
    pub constant: Scalar,
}

#[derive(Clone, Debug)]
pub struct MajoranaReport {
    pub canonical: bool,
    pub vanishing: Vec<(i8, i8)>,
    pub span_rank: usize,
    pub closes: bool,
    pub correspondence: Vec<Correspondence>,
    /// The rescaled currents `J/c` satisfy the so(2,3) brackets of the matched generators.
    pub isomorphism: Option<ClosureReport>,
}

pub fn majorana_reduce(g: &GammaBasis) -> Result<MajoranaReport> {
    let spinor = majorana_spinor()?;
    let j = spinor.currents(&build_sigma(g)?)?;
    let m = landau::dirac_generators(Presentation::Oscillator)?;
    let m_pairs = IndexSet::so23().pairs();
    let m_basis: Vec<WeylElement> = m_pairs.iter().map(|&(a, b)| m.get(a, b)).collect();
    let mut vanishing = Vec::new();
    let mut survivors = Vec::new();
    for (p, e) in j.generators() {
        if e.is_zero() {
            vanishing.push(p);
        } else {
            survivors.push((p, e));
        }
    }
    let elems: Vec<WeylElement> = survivors.iter().map(|(_, e)| e.clone()).collect();
    let span_rank = lie::span_rank(&elems);
    let closes = lie::structure_constants(&elems)?.is_some();
    let mut correspondence = Vec::new();
    let mut image = GeneratorTable::new(IndexSet::so23());
    let mut complete = true;
    for (p, e) in &survivors {
        let fit = lie::decompose(e, &m_basis).and_then(|c| {
            let nz: Vec<usize> = (0..c.len()).filter(|&k| !c[k].is_zero()).collect();
            (nz.len() == 1).then(|| (m_pairs[nz[0]], c[nz[0]].clone()))
        });
        match fit {
            Some((pair, c)) => {
                image.insert(pair.0, pair.1, e.scale(&c.inv().expect("nonzero")))?;
                correspondence.push(Correspondence { current: *p, generator: pair, constant: c });
            }
            None => complete = false,
        }
    }
    let isomorphism = if complete && image.is_complete() { Some(lie::verify_closure(&image, Rule::DiracCo)?) } else { None };
    Ok(MajoranaReport { canonical: spinor.canonical()?, vanishing, span_rank, closes, correspondence, isomorphism })
}
