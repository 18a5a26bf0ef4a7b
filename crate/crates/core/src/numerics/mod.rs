//! Shared numerical kernels: symmetric eigendecomposition, determinants,
//! psd testing, bracketed root finding, exact rational arithmetic, and
//! dense polynomials — everything downstream of the fixed tolerance policy.
//!
//! Floating point is used only for eigenproblems and root finding; every
//! polynomial identity in this crate is checked in exact rational
//! arithmetic.

pub mod det;
pub mod eigen;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod scalar;

pub use det::lu_det;
pub use eigen::{
    default_psd_tol, jacobi_eigen, psd_check, sym_eigen, Eigen, JacobiParams, JACOBI_MAX_SWEEPS,
    JACOBI_REL_TOL,
};
pub use matrix::SymMatrix;
pub use poly::Poly;
pub use rational::{parse_rational, rational, try_rational, Rational};
pub use roots::{bisect_predicate, find_root, DEFAULT_ROOT_TOL};
pub use scalar::{FromIndex, PivotScalar, Scalar};
