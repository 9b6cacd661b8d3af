//! Truncated multi-mode Fock space: ladder matrices, realizations of Weyl
//! elements, interior comparisons and spectra.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::weyl::WeylElement;

/// Tolerance used when clustering eigenvalues.
pub const CLUSTER_TOL: f64 = 1e-8;

/// Number basis for `modes` modes with `0..=cutoff` quanta each, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FockBasis {
    modes: usize,
    cutoff: usize,
}

impl FockBasis {
    pub fn new(modes: usize, cutoff: usize) -> Self {
        FockBasis { modes, cutoff }
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dimension(&self) -> usize {
        (self.cutoff + 1).pow(self.modes as u32)
    }

    /// Occupation numbers of state `idx`; mode 0 is the most significant digit.
    pub fn occupation(&self, mut idx: usize) -> Vec<usize> {
        let b = self.cutoff + 1;
        let mut occ = vec![0; self.modes];
        for k in (0..self.modes).rev() {
            occ[k] = idx % b;
            idx /= b;
        }
        occ
    }

    pub fn index(&self, occ: &[usize]) -> usize {
        occ.iter().fold(0, |acc, &n| acc * (self.cutoff + 1) + n)
    }

    /// States with total quanta at most `cutoff − margin`.
    pub fn interior(&self, margin: usize) -> Vec<usize> {
        let top = self.cutoff.saturating_sub(margin);
        (0..self.dimension()).filter(|&i| self.occupation(i).iter().sum::<usize>() <= top).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

/// Sparse complex matrix on a [`FockBasis`], stored by rows.
#[derive(Clone, Debug, PartialEq)]
pub struct FockOperator {
    basis: FockBasis,
    rows: Vec<BTreeMap<usize, Complex64>>,
}

impl FockOperator {
    pub fn zero(basis: FockBasis) -> Self {
        FockOperator { basis, rows: vec![BTreeMap::new(); basis.dimension()] }
    }

    pub fn identity(basis: FockBasis) -> Self {
        let mut m = FockOperator::zero(basis);
        for i in 0..basis.dimension() {
            m.rows[i].insert(i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn basis(&self) -> FockBasis {
        self.basis
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.rows[i].get(&j).copied().unwrap_or_default()
    }

    fn push(&mut self, i: usize, j: usize, v: Complex64) {
        if v == Complex64::default() {
            return;
        }
        *self.rows[i].entry(j).or_default() += v;
    }

    fn same_basis(&self, o: &Self) -> Result<()> {
        if self.basis == o.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_basis(o)?;
        let mut m = self.clone();
        for (i, row) in o.rows.iter().enumerate() {
            for (&j, &v) in row {
                m.push(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        FockOperator {
            basis: self.basis,
            rows: self.rows.iter().map(|r| r.iter().map(|(&j, &v)| (j, v * c)).collect()).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn matmul(&self, o: &Self) -> Result<Self> {
        self.same_basis(o)?;
        let mut m = FockOperator::zero(self.basis);
        for (i, row) in self.rows.iter().enumerate() {
            for (&k, &a) in row {
                for (&j, &b) in &o.rows[k] {
                    m.push(i, j, a * b);
                }
            }
        }
        Ok(m)
    }

    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.matmul(o)?.sub(&o.matmul(self)?)
    }

    pub fn adjoint(&self) -> Self {
        let mut m = FockOperator::zero(self.basis);
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, &v) in row {
                m.push(j, i, v.conj());
            }
        }
        m
    }

    pub fn is_finite(&self) -> bool {
        self.rows.iter().all(|r| r.values().all(|v| v.re.is_finite() && v.im.is_finite()))
    }

    /// Largest `|⟨i|A−B|j⟩|` over all rows `i` and input states `j ∈ inputs`.
    pub fn max_deviation_on(&self, o: &Self, inputs: &[usize]) -> Result<f64> {
        self.same_basis(o)?;
        let keep: std::collections::HashSet<usize> = inputs.iter().copied().collect();
        let d = self.sub(o)?;
        Ok(d.rows
            .iter()
            .flat_map(|r| r.iter().filter(|(j, _)| keep.contains(j)).map(|(_, v)| v.norm()))
            .fold(0.0, f64::max))
    }

    /// Largest `|⟨i|A|j⟩ − conj⟨j|A|i⟩|` for `i, j` both in `states`.
    pub fn hermiticity_defect_on(&self, states: &[usize]) -> f64 {
        let mut worst: f64 = 0.0;
        for &i in states {
            for &j in states {
                worst = worst.max((self.entry(i, j) - self.entry(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let n = self.basis.dimension();
        let mut m = DMatrix::zeros(n, n);
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, &v) in row {
                m[(i, j)] = v;
            }
        }
        m
    }
}

/// `a⁺` or `a⁻` on `mode`, with `⟨n+1|a⁺|n⟩ = √(n+1)` and the top level annihilated.
pub fn ladder(basis: FockBasis, mode: usize, dir: Direction) -> Result<FockOperator> {
    if mode >= basis.modes {
        return Err(Error::IndexOutOfRange { index: mode, size: basis.modes });
    }
    let mut m = FockOperator::zero(basis);
    for j in 0..basis.dimension() {
        let mut occ = basis.occupation(j);
        let n = occ[mode];
        match dir {
            Direction::Raise if n < basis.cutoff => {
                occ[mode] = n + 1;
                m.push(basis.index(&occ), j, Complex64::new(((n + 1) as f64).sqrt(), 0.0));
            }
            Direction::Lower if n > 0 => {
                occ[mode] = n - 1;
                m.push(basis.index(&occ), j, Complex64::new((n as f64).sqrt(), 0.0));
            }
            _ => {}
        }
    }
    Ok(m)
}

/// Matrices for every position and derivative generator of a signature.
#[derive(Clone, Debug)]
pub struct FockDictionary {
    basis: FockBasis,
    positions: Vec<FockOperator>,
    derivatives: Vec<FockOperator>,
}

impl FockDictionary {
    pub fn new(basis: FockBasis, positions: Vec<FockOperator>, derivatives: Vec<FockOperator>) -> Result<Self> {
        if positions.iter().chain(&derivatives).any(|m| m.basis != basis) {
            return Err(Error::BasisMismatch);
        }
        Ok(FockDictionary { basis, positions, derivatives })
    }

    /// Position `k` ↦ `a_k⁺`, derivative `k` ↦ `a_k⁻`.
    pub fn creation_annihilation(basis: FockBasis) -> Result<Self> {
        let pos = (0..basis.modes).map(|k| ladder(basis, k, Direction::Raise)).collect::<Result<Vec<_>>>()?;
        let der = (0..basis.modes).map(|k| ladder(basis, k, Direction::Lower)).collect::<Result<Vec<_>>>()?;
        FockDictionary::new(basis, pos, der)
    }

    pub fn basis(&self) -> FockBasis {
        self.basis
    }
}

/// Sum over terms of coefficient × ordered matrix product.
pub fn realize(e: &WeylElement, dict: &FockDictionary) -> Result<FockOperator> {
    let sig = e.signature();
    if sig.is_radial() {
        return Err(Error::RadialUnsupported(sig.name().to_string()));
    }
    let n = sig.modes();
    if dict.positions.len() < n {
        return Err(Error::MissingGenerator(sig.positions()[dict.positions.len()].clone()));
    }
    if dict.derivatives.len() < n {
        return Err(Error::MissingGenerator(sig.derivatives()[dict.derivatives.len()].clone()));
    }
    let mut powers: BTreeMap<(bool, usize, u8), FockOperator> = BTreeMap::new();
    let mut acc = FockOperator::zero(dict.basis);
    for (m, c) in e.terms() {
        let mut t = FockOperator::identity(dict.basis).scale(c.to_complex());
        for (k, &a) in m.pos.iter().enumerate() {
            if a > 0 {
                t = t.matmul(power(&mut powers, &dict.positions[k], false, k, a)?)?;
            }
        }
        for (k, &b) in m.der.iter().enumerate() {
            if b > 0 {
                t = t.matmul(power(&mut powers, &dict.derivatives[k], true, k, b)?)?;
            }
        }
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

fn power<'a>(
    cache: &'a mut BTreeMap<(bool, usize, u8), FockOperator>,
    base: &FockOperator,
    der: bool,
    k: usize,
    n: u8,
) -> Result<&'a FockOperator> {
    if !cache.contains_key(&(der, k, n)) {
        let mut p = base.clone();
        for _ in 1..n {
            p = p.matmul(base)?;
        }
        cache.insert((der, k, n), p);
    }
    Ok(&cache[&(der, k, n)])
}

/// One eigenvalue cluster.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Level {
    pub value: f64,
    pub imag: f64,
    pub multiplicity: usize,
}

/// Eigenvalues sorted ascending (by real part), clustered within [`CLUSTER_TOL`].
pub fn spectrum(op: &FockOperator, hermitian: bool) -> Result<Vec<Level>> {
    if !op.is_finite() {
        return Err(Error::NonFinite);
    }
    let dense = op.to_dense();
    let mut vals: Vec<(f64, f64)> = if hermitian {
        SymmetricEigen::new(dense).eigenvalues.iter().map(|&v| (v, 0.0)).collect()
    } else {
        let schur = nalgebra::linalg::Schur::new(dense);
        let (_, t) = schur.unpack();
        (0..t.nrows()).map(|i| (t[(i, i)].re, t[(i, i)].im)).collect()
    };
    vals.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    Ok(cluster(&vals))
}

fn cluster(vals: &[(f64, f64)]) -> Vec<Level> {
    let mut out: Vec<Level> = Vec::new();
    for &(re, im) in vals {
        match out.last_mut() {
            Some(l) if (l.value - re).abs() <= CLUSTER_TOL && (l.imag - im).abs() <= CLUSTER_TOL => l.multiplicity += 1,
            _ => out.push(Level { value: re, imag: im, multiplicity: 1 }),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Signature;

    #[test]
    fn ladder_elements() {
        let b = FockBasis::new(1, 4);
        let ap = ladder(b, 0, Direction::Raise).unwrap();
        assert_eq!(ap.entry(1, 0), Complex64::new(1.0, 0.0));
        assert!((ap.entry(2, 1).re - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(ap.entry(0, 4), Complex64::default());
        assert!(ladder(b, 1, Direction::Raise).is_err());
    }

    #[test]
    fn number_operator_spectrum() {
        let b = FockBasis::new(1, 5);
        let ap = ladder(b, 0, Direction::Raise).unwrap();
        let am = ladder(b, 0, Direction::Lower).unwrap();
        let n = ap.matmul(&am).unwrap();
        let levels = spectrum(&n, true).unwrap();
        let values: Vec<f64> = levels.iter().map(|l| l.value).collect();
        for (k, v) in values.iter().enumerate() {
            assert!((v - k as f64).abs() < 1e-10);
        }
    }

    #[test]
    fn identity_spectrum_is_degenerate() {
        let b = FockBasis::new(2, 2);
        let levels = spectrum(&FockOperator::identity(b), true).unwrap();
        assert_eq!(levels.len(), 1);
        assert_eq!(levels[0].multiplicity, 9);
    }

    #[test]
    fn realize_constant_and_commutator() {
        let s = Signature::new("osc", &["a+"], &["a-"]);
        let b = FockBasis::new(1, 6);
        let d = FockDictionary::creation_annihilation(b).unwrap();
        let one = realize(&WeylElement::one(&s), &d).unwrap();
        assert_eq!(one, FockOperator::identity(b));
        let ap = realize(&WeylElement::position(&s, 0), &d).unwrap();
        let am = realize(&WeylElement::derivative(&s, 0), &d).unwrap();
        let c = am.commutator(&ap).unwrap();
        let dev = c.max_deviation_on(&one, &b.interior(2)).unwrap();
        assert!(dev < 1e-12);
    }

    #[test]
    fn occupation_round_trip() {
        let b = FockBasis::new(3, 4);
        for i in 0..b.dimension() {
            assert_eq!(b.index(&b.occupation(i)), i);
        }
        assert_eq!(b.dimension(), 125);
    }

    #[test]
    fn general_eigensolver_matches() {
        let b = FockBasis::new(1, 3);
        let ap = ladder(b, 0, Direction::Raise).unwrap();
        let am = ladder(b, 0, Direction::Lower).unwrap();
        let n = ap.matmul(&am).unwrap();
        let h = spectrum(&n, true).unwrap();
        let g = spectrum(&n, false).unwrap();
        assert_eq!(h.len(), g.len());
        for (x, y) in h.iter().zip(&g) {
            assert!((x.value - y.value).abs() < 1e-9);
        }
    }
}
