//! Quadratic embedding constants of finite connected graphs.
//!
//! The quadratic embedding constant of a connected graph is the supremum of
//! `fᵀDf` over real vectors with zero sum and unit norm, where `D` is the
//! shortest-path distance matrix. This crate computes it numerically for
//! arbitrary finite graphs and, for path graphs, cross-validates three
//! independent routes against the closed form `−1/(1 + cos(π/n))`:
//!
//! * a hyperplane-restricted eigenproblem on the distance matrix,
//! * a bisection on the minimal `t` making `A_{n−1}(t/2, t/2)` positive
//!   semidefinite,
//! * the closed form itself.
//!
//! The supporting theory is implemented in full: the polynomial family
//! `S_n(a,b;t)` with its recurrence, closed forms, root factorizations and
//! sign structure ([`polynomials`]); the matrix family
//! `A_n(s,t) = [min{i,j} + s + t·δ_ij]` with its determinant identity and
//! finite/infinite positive-semidefiniteness criteria ([`matrices`]); and
//! graph ingestion with BFS distance matrices ([`graphs`]).
//!
//! Numeric kernels are generic over the scalar type via `num-traits`, so
//! the same polynomial and determinant code runs on `f64` and on exact
//! arbitrary-precision rationals; the concrete aliases live at the crate
//! root. All identities that can be checked exactly are checked exactly
//! (see [`verify`]).

// dense matrix kernels read better with explicit index loops
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod graphs;
pub mod matrices;
pub mod numerics;
pub mod polynomials;
pub mod qec;
pub mod textfmt;
pub mod verify;

pub use error::{Error, Result};
pub use numerics::{Poly, SymMatrix};

/// Arbitrary-precision rational scalar (reduced, positive denominator).
pub type Rational = numerics::rational::Rational;

/// Exact dense polynomial in `t` with rational coefficients.
pub type RationalPoly = Poly<Rational>;

/// Dense polynomial with `f64` coefficients.
pub type FloatPoly = Poly<f64>;

/// Symmetric matrix with exact rational entries.
pub type RationalMatrix = SymMatrix<Rational>;

/// Symmetric matrix with `f64` entries.
pub type FloatMatrix = SymMatrix<f64>;
