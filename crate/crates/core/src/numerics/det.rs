//! Determinants by pivoted Gaussian elimination, generic over the entry
//! type. The same routine serves the floating-point path (partial pivoting
//! by magnitude) and the exact rational path.

use crate::numerics::matrix::SymMatrix;
use crate::numerics::scalar::PivotScalar;

/// Determinant via elimination with partial pivoting. A singular matrix
/// returns exactly zero.
pub fn lu_det<T: PivotScalar>(m: &SymMatrix<T>) -> T {
    let n = m.n();
    let mut rows = m.to_rows();
    let mut det = T::one();

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&a, &b| {
                rows[a][col]
                    .abs()
                    .partial_cmp(&rows[b][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("non-empty pivot candidates");
        if rows[pivot_row][col].is_zero() {
            return T::zero();
        }
        if pivot_row != col {
            rows.swap(pivot_row, col);
            det = -det;
        }
        let pivot = rows[col][col].clone();
        det = det * pivot.clone();
        for i in (col + 1)..n {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone() / pivot.clone();
            for j in (col + 1)..n {
                let delta = factor.clone() * rows[col][j].clone();
                rows[i][j] = rows[i][j].clone() - delta;
            }
            rows[i][col] = T::zero();
        }
    }
    det
}
