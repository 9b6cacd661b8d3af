//! Dense matrices over Q(i, √2).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Square matrix from rows of scalars.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Gaussian-integer entries given as `(re, im)` pairs.
    pub fn from_gaussian_ints(rows: &[&[(i64, i64)]]) -> Self {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|&(a, b)| &Scalar::from_int(a) + &(&Scalar::i() * &Scalar::from_int(b)))
                        .collect()
                })
                .collect(),
        )
    }

    /// Block matrix `[[a, b], [c, d]]` of equal square blocks.
    pub fn blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.rows;
        let mut m = ExactMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, a.get(i, j).clone());
                m.set(i, j + n, b.get(i, j).clone());
                m.set(i + n, j, c.get(i, j).clone());
                m.set(i + n, j + n, d.get(i, j).clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut m = ExactMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut m = self.transpose();
        m.data.iter_mut().for_each(|v| *v = v.conj());
        m
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn commutator(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }

    pub fn anticommutator(&self, o: &Self) -> Self {
        &(self * o) + &(o * self)
    }

    /// Gauss-Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = ExactMatrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let p = a.get(col, col).inv()?;
            for j in 0..n {
                a.set(col, j, a.get(col, j) * &p);
                inv.set(col, j, inv.get(col, j) * &p);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    a.set(r, j, a.get(r, j) - &(&f * a.get(col, j)));
                    inv.set(r, j, inv.get(r, j) - &(&f * inv.get(col, j)));
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Entries as `[re, im]` string pairs (√2 parts appended when present).
    pub fn to_string_rows(&self) -> Vec<Vec<Vec<String>>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_strings()).collect()).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Scalar::abs_f64).fold(0.0, f64::max)
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, o: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut m = ExactMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) + &(a * b);
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, o: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, o: &ExactMatrix) -> ExactMatrix {
        self + &(-o)
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| -v).collect() }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = ExactMatrix::from_gaussian_ints(&[&[(1, 0), (2, 1)], &[(0, -1), (3, 0)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, ExactMatrix::identity(2));
        assert!(ExactMatrix::zeros(2, 2).inverse().is_none());
    }

    #[test]
    fn dagger_conjugates() {
        let m = ExactMatrix::from_gaussian_ints(&[&[(0, 1), (2, 0)], &[(0, 0), (1, 1)]]);
        let d = m.dagger();
        assert_eq!(d.get(0, 0), &(-Scalar::i()));
        assert_eq!(d.get(1, 0), &Scalar::from_int(2));
    }
}
