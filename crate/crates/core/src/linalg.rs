//! Dense symmetric matrix kernels: rank, eigenvalue nullity and
//! positive-semidefiniteness, in both numeric regimes.
//!
//! Exact matrices are decided with fraction-free (Bareiss) elimination after
//! clearing denominators row by row, so every intermediate value is an
//! integer minor of the scaled matrix. Floating matrices go through a
//! symmetric eigensolver and compare against the matrix tolerance.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Rational, Scalar, DEFAULT_TOLERANCE};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix must be square with positive order, got {rows} rows with lengths {cols:?}")]
    NotSquare { rows: usize, cols: Vec<usize> },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
}

/// Square symmetric matrix stored densely in row-major order.
///
/// The tolerance is only consulted in the floating regime.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<S> {
    order: usize,
    entries: Vec<S>,
    tolerance: f64,
}

impl<S: Scalar> SymMatrix<S> {
    /// Builds a matrix from rows, checking symmetry (exactly, or within the
    /// tolerance for floats).
    pub fn from_rows(rows: Vec<Vec<S>>, tolerance: f64) -> Result<Self, LinalgError> {
        let order = rows.len();
        if order == 0 || rows.iter().any(|r| r.len() != order) {
            return Err(LinalgError::NotSquare {
                rows: order,
                cols: rows.iter().map(Vec::len).collect(),
            });
        }
        for i in 0..order {
            for j in (i + 1)..order {
                if !rows[i][j].near(&rows[j][i], tolerance) {
                    return Err(LinalgError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
            tolerance,
        })
    }

    /// Builds a matrix by evaluating `f(i, j)` for `i <= j` and mirroring.
    pub fn from_fn(order: usize, tolerance: f64, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = vec![S::zero(); order * order];
        for i in 0..order {
            for j in i..order {
                let v = f(i, j);
                entries[j * order + i] = v.clone();
                entries[i * order + j] = v;
            }
        }
        SymMatrix {
            order,
            entries,
            tolerance,
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, DEFAULT_TOLERANCE, |i, j| {
            if i == j {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    pub fn all_ones(order: usize) -> Self {
        Self::from_fn(order, DEFAULT_TOLERANCE, |_, _| S::one())
    }

    pub fn diagonal(values: &[S]) -> Self {
        Self::from_fn(values.len(), DEFAULT_TOLERANCE, |i, j| {
            if i == j {
                values[i].clone()
            } else {
                S::zero()
            }
        })
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// Overwrites the symmetric pair `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.entries[i * self.order + j] = value.clone();
        self.entries[j * self.order + i] = value;
    }

    /// `self - lambda * I`.
    pub fn shifted(&self, lambda: &S) -> Self {
        let mut out = self.clone();
        for i in 0..self.order {
            let v = out.entries[i * self.order + i].clone() - lambda.clone();
            out.entries[i * self.order + i] = v;
        }
        out
    }

    /// Applies `f` entrywise; the result stays symmetric.
    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> SymMatrix<T> {
        SymMatrix {
            order: self.order,
            entries: self.entries.iter().map(&mut f).collect(),
            tolerance: self.tolerance,
        }
    }

    /// Simultaneous row/column permutation: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order);
        Self::from_fn(self.order, self.tolerance, |i, j| {
            self.get(perm[i], perm[j]).clone()
        })
    }

    /// Matrix product; symmetric inputs that commute give a symmetric result,
    /// otherwise only the upper triangle is kept.
    pub fn mul_upper(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let n = self.order;
        Self::from_fn(n, self.tolerance, |i, j| {
            (0..n).fold(S::zero(), |acc, k| {
                acc + self.get(i, k).clone() * other.get(k, j).clone()
            })
        })
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.order)
    }

    pub fn trace(&self) -> S {
        (0..self.order).fold(S::zero(), |acc, i| acc + self.get(i, i).clone())
    }
}

/// Linear-algebraic rank. Exact regime uses fraction-free elimination,
/// floating regime counts eigenvalues whose magnitude exceeds the tolerance.
pub fn rank<S: Scalar>(m: &SymMatrix<S>) -> usize {
    S::sym_rank(m)
}

/// `dim ker(m - lambda I)`: the multiplicity of `lambda` as an eigenvalue,
/// or zero when it is not one.
pub fn nullity_at<S: Scalar>(m: &SymMatrix<S>, lambda: &S) -> usize {
    S::sym_nullity_at(m, lambda)
}

pub fn is_psd<S: Scalar>(m: &SymMatrix<S>) -> bool {
    S::sym_is_psd(m)
}

/// Rank of a rational matrix by Bareiss elimination on the integer matrix
/// obtained by scaling each row with the lcm of its denominators.
pub(crate) fn exact_rank(m: &SymMatrix<Rational>) -> usize {
    let rows: Vec<Vec<BigInt>> = m.rows().map(integer_row).collect();
    bareiss_rank(rows)
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect()
}

/// Fraction-free Gaussian elimination with row pivoting. Each division by the
/// previous pivot is exact (Sylvester's identity).
pub fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot_row) = (rank..n_rows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for c in col..n_cols {
                let v = &pivot[col] * &row[c] - &factor * &pivot[c];
                row[c] = v / &prev;
            }
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Exact PSD decision by symmetric (LDL^T) elimination with diagonal
/// pivoting. A negative diagonal entry, or a zero diagonal entry with a
/// nonzero off-diagonal in its row, certifies indefiniteness.
pub(crate) fn exact_is_psd(m: &SymMatrix<Rational>) -> bool {
    let n = m.order();
    let mut a: Vec<Vec<Rational>> = m.rows().map(<[Rational]>::to_vec).collect();
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        if active.iter().any(|&i| a[i][i].is_negative()) {
            return false;
        }
        let pivot = active.iter().copied().find(|&i| a[i][i].is_positive());
        let Some(p) = pivot else {
            // All remaining diagonal entries vanish; a PSD matrix must then
            // vanish on the whole remaining block.
            return active
                .iter()
                .all(|&i| active.iter().all(|&j| a[i][j].is_zero()));
        };
        active.retain(|&i| i != p);
        let d = a[p][p].clone();
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for &j in &active {
                if a[p][j].is_zero() {
                    continue;
                }
                let v = &a[i][j] - &f * &a[p][j];
                a[i][j] = v;
            }
        }
    }
    true
}

/// Ascending eigenvalues of a floating symmetric matrix.
pub(crate) fn float_eigenvalues(m: &SymMatrix<f64>) -> Vec<f64> {
    let n = m.order();
    let dm = DMatrix::from_fn(n, n, |i, j| *m.get(i, j));
    let mut values: Vec<f64> = dm.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(|a, b| a.total_cmp(b));
    values
}
