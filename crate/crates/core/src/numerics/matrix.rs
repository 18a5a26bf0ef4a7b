//! Dense symmetric matrices with entries in an arbitrary scalar type.
//!
//! Symmetry is enforced structurally: the builders fill entry (i, j) and
//! (j, i) from a single generator call, so `get(i, j) == get(j, i)` holds
//! exactly for floating-point and exact entries alike.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::numerics::scalar::Scalar;

/// Dense symmetric `n × n` matrix, row-major full storage, 0-indexed access.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Clone> SymMatrix<T> {
    /// Builds the matrix from a generator called once per unordered index
    /// pair `(i, j)` with `i <= j`; the value is mirrored to `(j, i)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(n >= 1, "symmetric matrix needs dimension >= 1");
        let mut data: Vec<Option<T>> = vec![None; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[j * n + i] = Some(v.clone());
                data[i * n + j] = Some(v);
            }
        }
        SymMatrix {
            n,
            data: data.into_iter().map(Option::unwrap).collect(),
        }
    }

    /// Dimension `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 0-indexed.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    /// All rows, for elimination routines that need a mutable working copy.
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Entry-wise conversion to another scalar type.
    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> SymMatrix<U> {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone + PartialEq> SymMatrix<T> {
    /// Validates squareness and exact symmetry of explicit rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotSymmetric("empty matrix".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSymmetric(format!(
                    "row {} has length {}, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric(format!(
                        "entries ({i},{j}) and ({j},{i}) differ"
                    )));
                }
            }
        }
        Ok(SymMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }
}

impl<T: Scalar> SymMatrix<T> {
    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        SymMatrix::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Sum of the diagonal.
    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }
}

impl<T: Float> SymMatrix<T> {
    /// Frobenius norm.
    pub fn fro_norm(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, &v| acc + v * v)
            .sqrt()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, &v| acc.max(v.abs()))
    }
}
