//! Symmetric eigendecomposition by cyclic Jacobi rotations.
//!
//! Each sweep visits every off-diagonal pair (p, q) and applies a plane
//! rotation annihilating that entry; the accumulated rotations form the
//! orthonormal eigenvector matrix. Convergence is declared when the
//! off-diagonal Frobenius norm drops below `rel_tol · ‖M‖_F`.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::numerics::matrix::SymMatrix;

/// Sweep cap before the solver reports failure.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Default relative off-diagonal threshold for `f64` input.
pub const JACOBI_REL_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy)]
pub struct JacobiParams<T> {
    /// Convergence threshold relative to the Frobenius norm of the input.
    pub rel_tol: T,
    pub max_sweeps: usize,
}

impl<T: Float> Default for JacobiParams<T> {
    fn default() -> Self {
        // 1e-13 for f64 per the fixed tolerance policy; wider scalars with a
        // coarser epsilon (f32) get an attainable threshold instead.
        let eps_floor = T::epsilon() * T::from(100.0).unwrap();
        let spec = T::from(JACOBI_REL_TOL).unwrap();
        JacobiParams {
            rel_tol: spec.max(eps_floor),
            max_sweeps: JACOBI_MAX_SWEEPS,
        }
    }
}

/// Eigendecomposition of a symmetric matrix: `values[k]` ascending, paired
/// with the orthonormal column `vectors[k]`.
#[derive(Debug, Clone)]
pub struct Eigen<T> {
    pub values: Vec<T>,
    pub vectors: Vec<Vec<T>>,
}

impl<T: Float> Eigen<T> {
    pub fn min(&self) -> T {
        self.values[0]
    }

    pub fn max(&self) -> T {
        self.values[self.values.len() - 1]
    }
}

fn off_diagonal_norm<T: Float>(a: &[Vec<T>]) -> T {
    let n = a.len();
    let mut sum = T::zero();
    for i in 0..n {
        for j in (i + 1)..n {
            sum = sum + a[i][j] * a[i][j];
        }
    }
    (sum + sum).sqrt()
}

/// Cyclic Jacobi with explicit parameters.
pub fn jacobi_eigen<T: Float>(m: &SymMatrix<T>, params: JacobiParams<T>) -> Result<Eigen<T>> {
    let n = m.n();
    let mut a = m.to_rows();
    let mut v = vec![vec![T::zero(); n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = T::one();
    }

    let scale = m.fro_norm();
    let threshold = if scale.is_zero() {
        T::zero()
    } else {
        params.rel_tol * scale
    };

    let mut converged = n == 1 || off_diagonal_norm(&a) <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < params.max_sweeps {
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq.is_zero() {
                    continue;
                }
                // rotation angle from the classic two-sided formula
                let diff = a[q][q] - a[p][p];
                let theta = diff / (apq + apq);
                let tan = {
                    let t = (theta.abs() + (theta * theta + T::one()).sqrt()).recip();
                    if theta < T::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let cos = (tan * tan + T::one()).sqrt().recip();
                let sin = tan * cos;
                let tau = sin / (T::one() + cos);

                let h = tan * apq;
                a[p][p] = a[p][p] - h;
                a[q][q] = a[q][q] + h;
                a[p][q] = T::zero();
                a[q][p] = T::zero();

                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let ajp = a[j][p];
                    let ajq = a[j][q];
                    let new_p = ajp - sin * (ajq + ajp * tau);
                    let new_q = ajq + sin * (ajp - ajq * tau);
                    a[j][p] = new_p;
                    a[p][j] = new_p;
                    a[j][q] = new_q;
                    a[q][j] = new_q;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = vp - sin * (vq + vp * tau);
                    row[q] = vq + sin * (vp - vq * tau);
                }
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) <= threshold;
    }

    if !converged {
        return Err(Error::EigenNonConvergence {
            sweeps,
            off: off_diagonal_norm(&a).to_f64().unwrap_or(f64::NAN),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[i][i]
            .partial_cmp(&a[j][j])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = order.iter().map(|&k| a[k][k]).collect();
    let vectors = order
        .iter()
        .map(|&k| (0..n).map(|i| v[i][k]).collect())
        .collect();
    Ok(Eigen { values, vectors })
}

/// Eigendecomposition with the crate's fixed `f64` tolerance policy.
pub fn sym_eigen(m: &SymMatrix<f64>) -> Result<Eigen<f64>> {
    jacobi_eigen(m, JacobiParams::default())
}

/// Default positive-semidefiniteness tolerance: scales with the dimension
/// and the entry magnitude so threshold cases classify as psd.
pub fn default_psd_tol(m: &SymMatrix<f64>) -> f64 {
    1e-9 * m.n() as f64 * m.max_abs().max(1.0)
}

/// True iff the smallest eigenvalue is at least `-tol` (the nonnegative-
/// eigenvalue convention used throughout this crate).
pub fn psd_check(m: &SymMatrix<f64>, tol: f64) -> Result<bool> {
    Ok(sym_eigen(m)?.min() >= -tol)
}
