//! Exact Gaussian elimination over Q(i, √2) for sparse coordinate vectors.

use std::collections::{BTreeMap, BTreeSet};

use crate::scalar::Scalar;

pub type Coords<K> = BTreeMap<K, Scalar>;

struct Dense {
    rows: usize,
    cols: usize,
    a: Vec<Scalar>,
}

impl Dense {
    fn from_columns<K: Ord + Clone>(cols: &[&Coords<K>]) -> Dense {
        let keys: BTreeSet<K> = cols.iter().flat_map(|c| c.keys().cloned()).collect();
        let index: BTreeMap<K, usize> = keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
        let rows = index.len();
        let mut a = vec![Scalar::zero(); rows * cols.len()];
        for (j, c) in cols.iter().enumerate() {
            for (k, v) in c.iter() {
                a[index[k] * cols.len() + j] = v.clone();
            }
        }
        Dense { rows, cols: cols.len(), a }
    }

    fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.a[i * self.cols + j]
    }

    /// Row-reduce the first `pivot_cols` columns; returns pivot columns.
    fn reduce(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols {
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else { continue };
            if p != row {
                for j in 0..self.cols {
                    self.a.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.at(row, col).inv().expect("nonzero pivot");
            for j in 0..self.cols {
                let v = self.at(row, j) * &inv;
                self.a[row * self.cols + j] = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let f = self.at(r, col).clone();
                for j in 0..self.cols {
                    if self.at(row, j).is_zero() {
                        continue;
                    }
                    let v = self.at(r, j) - &(&f * self.at(row, j));
                    self.a[r * self.cols + j] = v;
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }
}

/// Rank of a family of vectors.
pub fn rank<K: Ord + Clone>(vectors: &[Coords<K>]) -> usize {
    let refs: Vec<&Coords<K>> = vectors.iter().collect();
    let mut d = Dense::from_columns(&refs);
    d.reduce(vectors.len()).len()
}

/// Coefficients `c` with `Σ c_j basis_j = target`, if the target lies in the span.
/// The basis is assumed linearly independent.
pub fn solve<K: Ord + Clone>(basis: &[Coords<K>], target: &Coords<K>) -> Option<Vec<Scalar>> {
    let mut refs: Vec<&Coords<K>> = basis.iter().collect();
    refs.push(target);
    let n = basis.len();
    let mut d = Dense::from_columns(&refs);
    let pivots = d.reduce(n);
    // Residual rows must vanish in the augmented column.
    for r in pivots.len()..d.rows {
        if !d.at(r, n).is_zero() {
            return None;
        }
    }
    if pivots.len() < n {
        // Dependent basis: a solution may exist but is not unique.
        return None;
    }
    Some((0..n).map(|i| d.at(i, n).clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(u8, i64)]) -> Coords<u8> {
        entries.iter().map(|&(k, x)| (k, Scalar::from_int(x))).collect()
    }

    #[test]
    fn solves_in_span() {
        let b = vec![v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])];
        let t = v(&[(0, 2), (1, 5), (2, 3)]);
        assert_eq!(solve(&b, &t), Some(vec![Scalar::from_int(2), Scalar::from_int(3)]));
        assert_eq!(solve(&b, &v(&[(0, 1)])), None);
    }

    #[test]
    fn rank_counts_independent() {
        let b = vec![v(&[(0, 1)]), v(&[(0, 2)]), v(&[(1, 1)])];
        assert_eq!(rank(&b), 2);
        assert_eq!(rank::<u8>(&[]), 0);
    }
}
