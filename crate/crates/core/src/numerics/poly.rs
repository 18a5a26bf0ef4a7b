//! Dense univariate polynomials over a generic scalar.
//!
//! Coefficient index k holds the coefficient of `t^k`. The zero polynomial
//! is the empty coefficient vector; otherwise the trailing coefficient is
//! nonzero, so structural equality is mathematical equality.

use std::ops::{Add, Mul, Neg, Sub};

use crate::numerics::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Builds from raw coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    /// Entry-wise conversion of the coefficients.
    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(&mut f).collect())
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::{rational, Rational};

    fn p(coeffs: &[(i64, i64)]) -> Poly<Rational> {
        Poly::from_coeffs(coeffs.iter().map(|&(n, d)| rational(n, d)).collect())
    }

    #[test]
    fn product_of_linear_factors() {
        // (t + 1)(3t + 1) = 3t² + 4t + 1
        let lhs = &p(&[(1, 1), (1, 1)]) * &p(&[(1, 1), (3, 1)]);
        assert_eq!(lhs, p(&[(1, 1), (4, 1), (3, 1)]));
    }

    #[test]
    fn eval_exact() {
        // 3t² + 4t + 1 at t = −1/4 is 3/16
        let q = p(&[(1, 1), (4, 1), (3, 1)]);
        assert_eq!(q.eval(&rational(-1, 4)), rational(3, 16));
    }

    #[test]
    fn zero_and_degree() {
        assert!(Poly::<f64>::zero().is_zero());
        assert_eq!(Poly::<f64>::zero().degree(), None);
        assert_eq!(Poly::from_coeffs(vec![1.0, 0.0, 0.0]).degree(), Some(0));
        assert_eq!(Poly::monomial(1.0, 4).degree(), Some(4));
        let q = p(&[(1, 2)]);
        assert_eq!(&q - &q, Poly::zero());
    }

    #[test]
    fn horner_matches_power_sum() {
        let q = p(&[(1, 3), (-2, 1), (0, 1), (7, 5)]);
        let x = rational(-3, 7);
        let direct: Rational = (0..q.coeffs().len())
            .map(|k| {
                let mut pow = Rational::from_integer(1.into());
                for _ in 0..k {
                    pow *= x.clone();
                }
                q.coeff(k) * pow
            })
            .sum();
        assert_eq!(q.eval(&x), direct);
    }
}
