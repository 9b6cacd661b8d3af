//! Generator tables indexed by antisymmetric pairs, expected-bracket rules,
//! closure verification with a fitted global sign, and structure constants.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Coords};
use crate::matrix::ExactMatrix;
use crate::scalar::Scalar;
use crate::weyl::{Monomial, WeylElement};

/// Anything with a bracket and exact coordinates.
pub trait LieElement: Clone + Send + Sync + PartialEq {
    type Key: Ord + Clone + Send + Sync;

    fn bracket(&self, o: &Self) -> Result<Self>;
    fn zero_like(&self) -> Self;
    fn plus(&self, o: &Self) -> Result<Self>;
    fn times(&self, c: &Scalar) -> Self;
    fn is_null(&self) -> bool;
    /// Largest coefficient modulus.
    fn residual(&self) -> f64;
    fn coords(&self) -> Coords<Self::Key>;

    fn minus(&self, o: &Self) -> Result<Self> {
        self.plus(&o.times(&Scalar::from_int(-1)))
    }
}

impl LieElement for WeylElement {
    type Key = Monomial;

    fn bracket(&self, o: &Self) -> Result<Self> {
        self.commutator(o)
    }
    fn zero_like(&self) -> Self {
        WeylElement::zero(self.signature())
    }
    fn plus(&self, o: &Self) -> Result<Self> {
        self.try_add(o)
    }
    fn times(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn is_null(&self) -> bool {
        self.is_zero()
    }
    fn residual(&self) -> f64 {
        self.max_abs_coefficient()
    }
    fn coords(&self) -> Coords<Monomial> {
        self.raw_terms().clone()
    }
}

impl LieElement for ExactMatrix {
    type Key = (usize, usize);

    fn bracket(&self, o: &Self) -> Result<Self> {
        if (self.rows(), self.cols()) != (o.rows(), o.cols()) {
            return Err(Error::Invalid("matrix shape mismatch".into()));
        }
        Ok(self.commutator(o))
    }
    fn zero_like(&self) -> Self {
        ExactMatrix::zeros(self.rows(), self.cols())
    }
    fn plus(&self, o: &Self) -> Result<Self> {
        Ok(self + o)
    }
    fn times(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn is_null(&self) -> bool {
        self.is_zero()
    }
    fn residual(&self) -> f64 {
        self.max_abs()
    }
    fn coords(&self) -> Coords<(usize, usize)> {
        let mut c = Coords::new();
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                if !self.get(i, j).is_zero() {
                    c.insert((i, j), self.get(i, j).clone());
                }
            }
        }
        c
    }
}

/// Ordered labels with a diagonal metric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSet {
    labels: Vec<i8>,
    metric: Vec<i8>,
}

impl IndexSet {
    pub fn new(labels: &[i8], metric: &[i8]) -> Self {
        assert_eq!(labels.len(), metric.len());
        assert!(metric.iter().all(|&m| m == 1 || m == -1), "metric entries must be ±1");
        IndexSet { labels: labels.to_vec(), metric: metric.to_vec() }
    }

    /// `{−1,0,1,2,3}` with `η = diag(+,+,−,−,−)`.
    pub fn so23() -> Self {
        IndexSet::new(&[-1, 0, 1, 2, 3], &[1, 1, -1, -1, -1])
    }

    /// `{−1,0,1,2,3,5}` with `η = diag(+,+,−,−,−,−)`.
    pub fn so24() -> Self {
        IndexSet::new(&[-1, 0, 1, 2, 3, 5], &[1, 1, -1, -1, -1, -1])
    }

    pub fn labels(&self) -> &[i8] {
        &self.labels
    }

    pub fn position(&self, l: i8) -> Option<usize> {
        self.labels.iter().position(|&x| x == l)
    }

    pub fn eta(&self, a: i8, b: i8) -> i8 {
        if a != b {
            return 0;
        }
        self.position(a).map_or(0, |p| self.metric[p])
    }

    /// Pairs `(a, b)` with `a` before `b`.
    pub fn pairs(&self) -> Vec<(i8, i8)> {
        let mut v = Vec::new();
        for i in 0..self.labels.len() {
            for j in i + 1..self.labels.len() {
                v.push((self.labels[i], self.labels[j]));
            }
        }
        v
    }

    /// Drop labels, keeping order and metric.
    pub fn without(&self, drop: &[i8]) -> Self {
        let (l, m): (Vec<i8>, Vec<i8>) =
            self.labels.iter().zip(&self.metric).filter(|(l, _)| !drop.contains(l)).map(|(a, b)| (*a, *b)).unzip();
        IndexSet { labels: l, metric: m }
    }

    /// Rename labels pointwise; the metric travels with each label.
    pub fn renamed(&self, f: impl Fn(i8) -> i8) -> Self {
        IndexSet { labels: self.labels.iter().map(|&l| f(l)).collect(), metric: self.metric.clone() }
    }
}

/// Right-hand side convention for `[g_AB, g_CD]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    /// `[m_ab, m_bc] = −i η_bb m_ac`, and zero for disjoint pairs.
    #[serde(rename = "style-co")]
    DiracCo,
    /// `[L_AB, L_CD] = −i(η_AC L_BD + η_BD L_AC − η_AD L_BC − η_BC L_AD)`.
    #[serde(rename = "style-conf+")]
    ConformalPlus,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::DiracCo => "style-co",
            Rule::ConformalPlus => "style-conf+",
        }
    }

    /// Overall factor relative to the conformal form.
    fn kappa(self) -> i64 {
        match self {
            Rule::DiracCo => -1,
            Rule::ConformalPlus => 1,
        }
    }
}

/// Generators keyed by ordered index pairs; `g_ba = −g_ab`.
#[derive(Clone, Debug)]
pub struct GeneratorTable<T> {
    indices: IndexSet,
    entries: BTreeMap<(usize, usize), T>,
}

impl<T: LieElement> GeneratorTable<T> {
    pub fn new(indices: IndexSet) -> Self {
        GeneratorTable { indices, entries: BTreeMap::new() }
    }

    pub fn indices(&self) -> &IndexSet {
        &self.indices
    }

    fn key(&self, a: i8, b: i8) -> Result<((usize, usize), bool)> {
        let pa = self.indices.position(a).ok_or_else(|| Error::Invalid(format!("unknown index {a}")))?;
        let pb = self.indices.position(b).ok_or_else(|| Error::Invalid(format!("unknown index {b}")))?;
        if pa == pb {
            return Err(Error::Invalid(format!("diagonal generator ({a},{a})")));
        }
        Ok(if pa < pb { ((pa, pb), false) } else { ((pb, pa), true) })
    }

    /// Insert `g_ab`; reversed pairs are stored negated.
    pub fn insert(&mut self, a: i8, b: i8, v: T) -> Result<()> {
        let (k, flip) = self.key(a, b)?;
        let v = if flip { v.times(&Scalar::from_int(-1)) } else { v };
        self.entries.insert(k, v);
        Ok(())
    }

    pub fn get(&self, a: i8, b: i8) -> Option<T> {
        let (k, flip) = self.key(a, b).ok()?;
        let v = self.entries.get(&k)?;
        Some(if flip { v.times(&Scalar::from_int(-1)) } else { v.clone() })
    }

    pub fn is_complete(&self) -> bool {
        self.indices.pairs().iter().all(|&(a, b)| self.get(a, b).is_some())
    }

    /// Generators in canonical pair order.
    pub fn generators(&self) -> Vec<((i8, i8), T)> {
        self.indices.pairs().into_iter().filter_map(|(a, b)| self.get(a, b).map(|g| ((a, b), g))).collect()
    }

    pub fn map<U: LieElement>(&self, f: impl Fn(&T) -> Result<U>) -> Result<GeneratorTable<U>> {
        let mut out = GeneratorTable::new(self.indices.clone());
        for ((a, b), g) in self.generators() {
            out.insert(a, b, f(&g)?)?;
        }
        Ok(out)
    }

    /// Keep only generators whose indices avoid `drop`.
    pub fn without(&self, drop: &[i8]) -> Result<Self> {
        let mut out = GeneratorTable::new(self.indices.without(drop));
        for ((a, b), g) in self.generators() {
            if !drop.contains(&a) && !drop.contains(&b) {
                out.insert(a, b, g)?;
            }
        }
        Ok(out)
    }

    pub fn renamed(&self, f: impl Fn(i8) -> i8 + Copy) -> Result<Self> {
        let mut out = GeneratorTable::new(self.indices.renamed(f));
        for ((a, b), g) in self.generators() {
            out.insert(f(a), f(b), g)?;
        }
        Ok(out)
    }

    /// Right-hand side predicted by `rule` for `[g_AB, g_CD]`.
    pub fn expected(&self, rule: Rule, (a, b): (i8, i8), (c, d): (i8, i8)) -> Result<T> {
        let eta = |x, y| self.indices.eta(x, y) as i64;
        let zero = self.get(a, b).ok_or_else(|| Error::Invalid("missing generator".into()))?.zero_like();
        let mut acc = zero;
        let factor = &Scalar::imag_frac(-rule.kappa(), 1);
        for (k, (p, q)) in [(eta(a, c), (b, d)), (eta(b, d), (a, c)), (-eta(a, d), (b, c)), (-eta(b, c), (a, d))] {
            if k == 0 || p == q {
                continue;
            }
            let g = self.get(p, q).ok_or_else(|| Error::Invalid(format!("missing generator ({p},{q})")))?;
            acc = acc.plus(&g.times(&(factor * &Scalar::from_int(k))))?;
        }
        Ok(acc)
    }
}

/// Outcome of one bracket.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairCheck {
    pub left: (i8, i8),
    pub right: (i8, i8),
    /// `Some(±1)` if the bracket equals ± the rule, `Some(0)` if both vanish.
    pub sign: Option<i8>,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub rule: Rule,
    pub fitted_sign: Option<i8>,
    pub pairs: Vec<PairCheck>,
}

impl ClosureReport {
    /// Every pair closes with one global sign.
    pub fn closes(&self) -> bool {
        self.fitted_sign.is_some() && self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<&PairCheck> {
        self.pairs
            .iter()
            .filter(|p| match (p.sign, self.fitted_sign) {
                (Some(0), _) => false,
                (Some(s), Some(f)) => s != f,
                _ => true,
            })
            .collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.pairs.iter().map(|p| p.residual).fold(0.0, f64::max)
    }
}

/// Check every bracket of the table against `rule` with one fitted sign.
pub fn verify_closure<T: LieElement>(table: &GeneratorTable<T>, rule: Rule) -> Result<ClosureReport> {
    let gens = table.generators();
    let mut jobs = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            jobs.push((i, j));
        }
    }
    let checks: Vec<Result<PairCheck>> = jobs
        .par_iter()
        .map(|&(i, j)| {
            let (l, gl) = &gens[i];
            let (r, gr) = &gens[j];
            let lhs = gl.bracket(gr)?;
            let rhs = table.expected(rule, *l, *r)?;
            let plus = lhs.minus(&rhs)?;
            let minus = lhs.plus(&rhs)?;
            let sign = if rhs.is_null() && lhs.is_null() {
                Some(0)
            } else if plus.is_null() {
                Some(1)
            } else if minus.is_null() {
                Some(-1)
            } else {
                None
            };
            let residual = if sign.is_some() { 0.0 } else { plus.residual().min(minus.residual()) };
            Ok(PairCheck { left: *l, right: *r, sign, residual })
        })
        .collect();
    let pairs = checks.into_iter().collect::<Result<Vec<_>>>()?;
    let mut votes = [0usize; 2];
    for p in &pairs {
        match p.sign {
            Some(1) => votes[0] += 1,
            Some(-1) => votes[1] += 1,
            _ => {}
        }
    }
    let fitted_sign = match votes {
        [0, 0] => Some(1),
        [p, m] if p >= m => Some(1),
        _ => Some(-1),
    };
    Ok(ClosureReport { rule, fitted_sign, pairs })
}

/// Coefficients of `target` in the span of `basis` (assumed independent).
pub fn decompose<T: LieElement>(target: &T, basis: &[T]) -> Option<Vec<Scalar>> {
    let b: Vec<Coords<T::Key>> = basis.iter().map(LieElement::coords).collect();
    linalg::solve(&b, &target.coords())
}

pub fn span_rank<T: LieElement>(elements: &[T]) -> usize {
    let b: Vec<Coords<T::Key>> = elements.iter().map(LieElement::coords).collect();
    linalg::rank(&b)
}

/// `f[i][j][k]` with `[g_i, g_j] = Σ_k f_ij^k g_k`; `None` if a bracket leaves the span.
pub type StructureConstants = Vec<Vec<Vec<Scalar>>>;

pub fn structure_constants<T: LieElement>(basis: &[T]) -> Result<Option<StructureConstants>> {
    let coords: Vec<Coords<T::Key>> = basis.iter().map(LieElement::coords).collect();
    let n = basis.len();
    let rows: Vec<Result<Option<Vec<Vec<Scalar>>>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let br = basis[i].bracket(&basis[j])?;
                match linalg::solve(&coords, &br.coords()) {
                    Some(c) => row.push(c),
                    None => return Ok(None),
                }
            }
            Ok(Some(row))
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    for r in rows {
        match r? {
            Some(row) => out.push(row),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Fundamental so(1,2) matrices `i(δ^C_A η_BD − δ^C_B η_AD)`.
    fn so12() -> GeneratorTable<ExactMatrix> {
        let idx = IndexSet::new(&[-1, 0, 1], &[1, 1, -1]);
        let mut t = GeneratorTable::new(idx.clone());
        for (a, b) in idx.pairs() {
            let mut m = ExactMatrix::zeros(3, 3);
            for (ci, &c) in idx.labels().iter().enumerate() {
                for (di, &d) in idx.labels().iter().enumerate() {
                    let v = (if c == a { idx.eta(b, d) } else { 0 }) - (if c == b { idx.eta(a, d) } else { 0 });
                    if v != 0 {
                        m.set(ci, di, Scalar::imag_frac(v as i64, 1));
                    }
                }
            }
            t.insert(a, b, m).unwrap();
        }
        t
    }

    #[test]
    fn antisymmetric_lookup() {
        let t = so12();
        assert_eq!(t.get(0, -1).unwrap(), t.get(-1, 0).unwrap().times(&Scalar::from_int(-1)));
        assert!(t.get(0, 0).is_none());
        assert!(t.is_complete());
    }

    #[test]
    fn rules_differ_by_sign() {
        let t = so12();
        let a = verify_closure(&t, Rule::ConformalPlus).unwrap();
        let b = verify_closure(&t, Rule::DiracCo).unwrap();
        assert!(a.closes() && b.closes());
        assert_eq!(a.fitted_sign, Some(-b.fitted_sign.unwrap()));
    }

    #[test]
    fn structure_constants_antisymmetric() {
        let gens: Vec<ExactMatrix> = so12().generators().into_iter().map(|(_, g)| g).collect();
        let f = structure_constants(&gens).unwrap().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(f[i][j][k], -&f[j][i][k]);
                }
            }
        }
        assert_eq!(span_rank(&gens), 3);
    }
}
