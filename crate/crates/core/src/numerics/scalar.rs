//! Trait aliases bounding the scalar types the numeric kernels accept.
//!
//! Everything generic in this crate is written against these two aliases so
//! that the same code runs on `f64`/`f32` and on exact [`Rational`]
//! (`num_rational::BigRational`) entries.
//!
//! [`Rational`]: crate::Rational

use std::ops::Neg;

use num_traits::{FromPrimitive, Num, Signed};

/// Field operations required of matrix and polynomial entries.
pub trait Scalar: Clone + Num + Neg<Output = Self> {}

impl<T: Clone + Num + Neg<Output = T>> Scalar for T {}

/// Entries that additionally support magnitude comparison, enough for
/// pivoted elimination.
pub trait PivotScalar: Scalar + Signed + PartialOrd {}

impl<T: Scalar + Signed + PartialOrd> PivotScalar for T {}

/// Entries constructible from machine integers (matrix builders need
/// `min{i,j}` as a scalar).
pub trait FromIndex: Scalar + FromPrimitive {}

impl<T: Scalar + FromPrimitive> FromIndex for T {}
