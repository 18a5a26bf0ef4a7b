//! The polynomial family `S_n(a,b;t)` defined by `S_0 = 1`, `S_1 = at + b`
//! and the three-term recurrence
//!
//! ```text
//! S_n = (1 + 2t)·S_{n−1} − t²·S_{n−2}.
//! ```
//!
//! Everything that can be stated over the rationals is computed exactly:
//! coefficient vectors from the recurrence and from the binomial-sum form,
//! the `W_n = S_n(2,1;·)` specialization, the `t^{2n}` cross-product
//! identity, and the sign pattern of consecutive `W_n` between thresholds.
//! Floating point enters only for the closed-form evaluation (which needs
//! `√(1+4t)`, possibly complex) and the trigonometric root formulas.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::binomial;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numerics::poly::Poly;
use crate::numerics::rational::{from_f64, rational, sign_of, to_f64, Rational};
use crate::numerics::scalar::Scalar;
use crate::RationalPoly;

/// Parameters selecting the family member `S_n(a,b;·)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SParams {
    pub a: Rational,
    pub b: Rational,
    pub n: usize,
}

impl SParams {
    pub fn new(a: Rational, b: Rational, n: usize) -> Self {
        SParams { a, b, n }
    }

    /// Member with small-integer parameters.
    pub fn from_ints(a: i64, b: i64, n: usize) -> Self {
        SParams::new(rational(a, 1), rational(b, 1), n)
    }
}

/// Coefficient vector of `S_n(a,b;t)` over any scalar, by the recurrence.
pub fn s_poly_in<T: Scalar>(a: &T, b: &T, n: usize) -> Poly<T> {
    if n == 0 {
        return Poly::one();
    }
    let s1 = Poly::from_coeffs(vec![b.clone(), a.clone()]);
    if n == 1 {
        return s1;
    }
    let two = T::one() + T::one();
    let one_plus_2t = Poly::from_coeffs(vec![T::one(), two]);
    let t_squared = Poly::monomial(T::one(), 2);
    let mut prev = Poly::one();
    let mut cur = s1;
    for _ in 2..=n {
        let next = &(&one_plus_2t * &cur) - &(&t_squared * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact coefficient vector of `S_n(a,b;t)`.
pub fn s_poly(p: &SParams) -> RationalPoly {
    s_poly_in(&p.a, &p.b, p.n)
}

fn big_c(top: usize, k: usize) -> BigInt {
    binomial(BigInt::from(top), BigInt::from(k))
}

fn int_poly(coeffs: Vec<BigInt>) -> RationalPoly {
    Poly::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
}

/// Exact coefficient vector from the binomial-sum form
/// `(at+b)·Σ_{k<n} C(2n−k−1,k) t^k − Σ_{k≤n−2} C(2n−k−3,k) t^{k+2}`,
/// an independent route to the same polynomial (valid for n ≥ 1).
pub fn s_poly_binomial(p: &SParams) -> RationalPoly {
    if p.n == 0 {
        return Poly::one();
    }
    let n = p.n;
    let first = int_poly((0..n).map(|k| big_c(2 * n - k - 1, k)).collect());
    let linear = Poly::from_coeffs(vec![p.b.clone(), p.a.clone()]);
    let mut shifted = vec![BigInt::zero(); 2];
    shifted.extend((0..n.saturating_sub(1)).map(|k| big_c(2 * n - k - 3, k)));
    &(&linear * &first) - &int_poly(shifted)
}

/// `W_n(t) = S_n(2,1;t)`, directly from its binomial coefficients
/// `C(2n−k+1, k)` (coefficient triangle A172431 in the OEIS).
pub fn w_poly(n: usize) -> RationalPoly {
    int_poly((0..=n).map(|k| big_c(2 * n - k + 1, k)).collect())
}

/// Switch radius around `t = −1/4` for the closed-form evaluation.
const QUARTER_BRANCH_RADIUS: f64 = 1e-13;

/// Closed-form evaluation of `S_n(a,b;t)` in floating point.
///
/// Away from `t = −1/4` this uses the two-branch `√(1+4t)` expression,
/// evaluated in complex arithmetic so that `1 + 4t < 0` needs no separate
/// trigonometric rewrite (the conjugate pair leaves a real value; the real
/// part is returned). Within `1e-13` of `−1/4` it switches to the exact
/// limit `(4nb − na − n + 1)/4^n`.
pub fn s_eval_closed(p: &SParams, t: f64) -> f64 {
    let a = to_f64(&p.a);
    let b = to_f64(&p.b);
    let n = p.n;
    if (t + 0.25).abs() <= QUARTER_BRANCH_RADIUS {
        let nf = n as f64;
        return (4.0 * nf * b - nf * a - nf + 1.0) / 4.0_f64.powi(n as i32);
    }
    let sq = Complex64::new(1.0 + 4.0 * t, 0.0).sqrt();
    let front = Complex64::new(2.0 * b - 1.0 + 2.0 * (a - 1.0) * t, 0.0);
    let base = Complex64::new(1.0 + 2.0 * t, 0.0);
    let plus = (front + sq) * (base + sq).powu(n as u32);
    let minus = (front - sq) * (base - sq).powu(n as u32);
    ((plus - minus) / (sq * 2.0_f64.powi(n as i32 + 1))).re
}

/// Closed-form evaluation of `W_n(t)` from the pure power difference
/// `[(1+2t+√(1+4t))^{n+1} − (1+2t−√(1+4t))^{n+1}] / (2^{n+1}·√(1+4t))`.
pub fn w_eval_closed(n: usize, t: f64) -> f64 {
    if (t + 0.25).abs() <= QUARTER_BRANCH_RADIUS {
        return (n as f64 + 1.0) / 4.0_f64.powi(n as i32);
    }
    let sq = Complex64::new(1.0 + 4.0 * t, 0.0).sqrt();
    let base = Complex64::new(1.0 + 2.0 * t, 0.0);
    let diff = (base + sq).powu(n as u32 + 1) - (base - sq).powu(n as u32 + 1);
    (diff / (sq * 2.0_f64.powi(n as i32 + 1))).re
}

/// Value of `S_n(a,b;t)` by running the recurrence at the point, together
/// with its t-derivative, a running bound on the accumulated rounding
/// error, and the largest intermediate magnitude.
///
/// The derivative is what makes boundary tolerances scale correctly: near
/// the thresholds the values decay geometrically, so any fixed absolute
/// tolerance is useless, while `ε·(|t|·|S′| + |S|)` tracks the first-order
/// uncertainty of the evaluation under an ε-perturbation of `t`.
#[derive(Debug, Clone, Copy)]
pub struct ValueEval {
    pub value: f64,
    /// d/dt of the value, by the differentiated recurrence (a, b fixed).
    pub dvalue: f64,
    /// Certified majorant of the accumulated rounding error (pessimistic).
    pub err_bound: f64,
    pub max_abs: f64,
}

pub fn s_eval_recurrence(a: f64, b: f64, t: f64, n: usize) -> ValueEval {
    let eps = f64::EPSILON;
    if n == 0 {
        return ValueEval {
            value: 1.0,
            dvalue: 0.0,
            err_bound: 0.0,
            max_abs: 1.0,
        };
    }
    let mut v_prev = 1.0_f64;
    let mut d_prev = 0.0_f64;
    let mut e_prev = 0.0_f64;
    let mut v_cur = a * t + b;
    let mut d_cur = a;
    let mut e_cur = eps * ((a * t).abs() + v_cur.abs());
    let mut max_abs = v_cur.abs().max(1.0);
    let c1 = 1.0 + 2.0 * t;
    let c2 = t * t;
    for _ in 2..=n {
        let term1 = c1 * v_cur;
        let term2 = c2 * v_prev;
        let v_next = term1 - term2;
        let d_next = 2.0 * v_cur + c1 * d_cur - 2.0 * t * v_prev - c2 * d_prev;
        let e_next =
            c1.abs() * e_cur + c2 * e_prev + 2.0 * eps * (term1.abs() + term2.abs() + v_next.abs());
        v_prev = v_cur;
        d_prev = d_cur;
        e_prev = e_cur;
        v_cur = v_next;
        d_cur = d_next;
        e_cur = e_next;
        max_abs = max_abs.max(v_cur.abs());
    }
    ValueEval {
        value: v_cur,
        dvalue: d_cur,
        err_bound: e_cur,
        max_abs,
    }
}

/// The four parameter pairs whose roots have closed trigonometric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialCase {
    /// (a, b) = (2, 1): roots at angles kπ/(n+1).
    TwoOne,
    /// (a, b) = (1, 1/2): angles (2k−1)π/(2n).
    OneOneHalf,
    /// (a, b) = (1, 1): angles 2kπ/(2n+1).
    OneOne,
    /// (a, b) = (3, 1): angles (2k−1)π/(2n+1).
    ThreeOne,
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 4] = [
        SpecialCase::TwoOne,
        SpecialCase::OneOneHalf,
        SpecialCase::OneOne,
        SpecialCase::ThreeOne,
    ];

    pub fn params(self, n: usize) -> SParams {
        let (a, b) = match self {
            SpecialCase::TwoOne => (rational(2, 1), rational(1, 1)),
            SpecialCase::OneOneHalf => (rational(1, 1), rational(1, 2)),
            SpecialCase::OneOne => (rational(1, 1), rational(1, 1)),
            SpecialCase::ThreeOne => (rational(3, 1), rational(1, 1)),
        };
        SParams::new(a, b, n)
    }

    /// Leading coefficient of the degree-n member (`an − n + 1`).
    pub fn leading(self, n: usize) -> i64 {
        let n = n as i64;
        match self {
            SpecialCase::TwoOne => n + 1,
            SpecialCase::OneOneHalf | SpecialCase::OneOne => 1,
            SpecialCase::ThreeOne => 2 * n + 1,
        }
    }

    fn angle(self, k: usize, n: usize) -> f64 {
        use std::f64::consts::PI;
        let k = k as f64;
        let n = n as f64;
        match self {
            SpecialCase::TwoOne => k * PI / (n + 1.0),
            SpecialCase::OneOneHalf => (2.0 * k - 1.0) * PI / (2.0 * n),
            SpecialCase::OneOne => 2.0 * k * PI / (2.0 * n + 1.0),
            SpecialCase::ThreeOne => (2.0 * k - 1.0) * PI / (2.0 * n + 1.0),
        }
    }
}

/// The n roots of the special-case member, `−1/(2 + 2cos θ_k)` over the
/// case's angle family, sorted ascending.
pub fn s_roots_special(case: SpecialCase, n: usize) -> Vec<f64> {
    assert!(n >= 1, "root formulas need n >= 1");
    let mut roots: Vec<f64> = (1..=n)
        .map(|k| -1.0 / (2.0 + 2.0 * case.angle(k, n).cos()))
        .collect();
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

/// Positive-definiteness threshold `t_n`: `−∞` for n = 1, else
/// `−1/(2 + 2cos(π/n))`, which lies in `[−1/2, −1/4)` and increases with n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Threshold {
    pub n: usize,
    pub value: f64,
}

pub fn t_threshold(n: usize) -> Threshold {
    assert!(n >= 1, "threshold defined for n >= 1");
    let value = if n == 1 {
        f64::NEG_INFINITY
    } else {
        -1.0 / (2.0 + 2.0 * (std::f64::consts::PI / n as f64).cos())
    };
    Threshold { n, value }
}

/// Exact identity `S_n(2,1)·S_n(a,b) − S_{n−1}(2,1)·S_{n+1}(a,b) = t^{2n}`,
/// checked bit-for-bit in rational arithmetic.
pub fn check_t2n_identity(a: &Rational, b: &Rational, n: usize) -> bool {
    assert!(n >= 1, "identity stated for n >= 1");
    let w_n = w_poly(n);
    let w_prev = w_poly(n - 1);
    let s_n = s_poly_in(a, b, n);
    let s_next = s_poly_in(a, b, n + 1);
    let lhs = &(&w_n * &s_n) - &(&w_prev * &s_next);
    lhs == Poly::monomial(Rational::from_integer(1.into()), 2 * n)
}

/// Distance from `t` to the threshold set `{t_k : k ≥ 2}` (whose closure
/// adds the accumulation point −1/4).
pub fn nearest_threshold_distance(t: f64) -> f64 {
    if t >= -0.25 {
        return t + 0.25;
    }
    if t <= -0.5 {
        return -0.5 - t;
    }
    // invert t = −1/(2+2cos(π/k)) for the nearby integer indices
    let c = (-(1.0 + 2.0 * t) / (2.0 * t)).clamp(-1.0, 1.0);
    let k_est = std::f64::consts::PI / c.acos();
    let mut best = f64::INFINITY;
    let base = k_est.floor() as i64;
    for k in (base - 1)..=(base + 2) {
        if k >= 2 {
            best = best.min((t - t_threshold(k as usize).value).abs());
        }
    }
    best
}

/// Sign of a nonzero exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    fn of(r: &Rational, t: f64) -> Result<Sign> {
        match sign_of(r) {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            _ => Err(Error::SignAtRoot { t }),
        }
    }
}

/// Signs of `(S_{n−1}(2,1;t), S_n(2,1;t))`, evaluated exactly at the
/// rational value of `t`. Between consecutive thresholds `t_n < t < t_{n+1}`
/// this is `(+, −)`, and above `t_{n+1}` it is `(+, +)`; values of `t`
/// within 1e-12 of the threshold set are rejected as ambiguous.
pub fn sign_pattern(n: usize, t: f64) -> Result<(Sign, Sign)> {
    assert!(n >= 1, "sign pattern defined for n >= 1");
    assert!(t.is_finite(), "t must be finite");
    let dist = nearest_threshold_distance(t);
    if dist.abs() <= 1e-12 {
        return Err(Error::NearThreshold { t, dist });
    }
    let tr = from_f64(t).expect("finite t converts exactly");
    let prev = w_poly(n - 1).eval(&tr);
    let cur = w_poly(n).eval(&tr);
    Ok((Sign::of(&prev, t)?, Sign::of(&cur, t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::roots::{find_root, DEFAULT_ROOT_TOL};

    fn ipoly(coeffs: &[i64]) -> RationalPoly {
        Poly::from_coeffs(coeffs.iter().map(|&c| rational(c, 1)).collect())
    }

    #[test]
    fn recurrence_base_and_first_step() {
        assert_eq!(s_poly(&SParams::from_ints(7, -3, 0)), Poly::one());
        // (1+2t)(2t+1) − t² = 3t² + 4t + 1
        assert_eq!(s_poly(&SParams::from_ints(2, 1, 2)), ipoly(&[1, 4, 3]));
        // (1+2t)(t+1) − t² = t² + 3t + 1, leading coefficient 1·2 − 2 + 1 = 1
        let s = s_poly(&SParams::from_ints(1, 1, 2));
        assert_eq!(s, ipoly(&[1, 3, 1]));
        assert_eq!(s.coeff(2), rational(1, 1));
    }

    #[test]
    fn w_poly_binomial_coefficients() {
        assert_eq!(w_poly(0), Poly::one());
        assert_eq!(w_poly(1), ipoly(&[1, 2]));
        assert_eq!(w_poly(2), ipoly(&[1, 4, 3]));
        for n in 0..=12 {
            assert_eq!(w_poly(n), s_poly(&SParams::from_ints(2, 1, n)), "n = {n}");
        }
    }

    #[test]
    fn binomial_sum_matches_recurrence() {
        let params = [(2, 1), (1, 1), (3, 1), (-2, 5), (0, 0)];
        for (a, b) in params {
            for n in 1..=14 {
                let p = SParams::from_ints(a, b, n);
                assert_eq!(s_poly_binomial(&p), s_poly(&p), "a={a} b={b} n={n}");
            }
        }
    }

    #[test]
    fn closed_form_at_quarter_pole() {
        // W₃(−1/4) = 4/4³ = 1/16
        let v = s_eval_closed(&SParams::from_ints(2, 1, 3), -0.25);
        assert!((v - 1.0 / 16.0).abs() < 1e-15);
        // S₂(1, 1; −1/4) = (4·2 − 2 − 2 + 1)/16 = 5/16
        let v = s_eval_closed(&SParams::from_ints(1, 1, 2), -0.25);
        assert!((v - 5.0 / 16.0).abs() < 1e-15);
        // S₁(1, 1/2; 0) = 1/2
        let p = SParams::new(rational(1, 1), rational(1, 2), 1);
        assert!((s_eval_closed(&p, 0.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn closed_form_matches_exact_eval_across_branch() {
        let params = [(2i64, 1i64), (1, 1), (3, 1), (-1, 2)];
        let ts = [
            -0.9,
            -0.5,
            -0.3,
            -0.2500001,
            -0.25 + 1e-14,
            -0.24,
            -0.1,
            0.0,
            0.7,
            3.0,
        ];
        for (a, b) in params {
            for n in [0usize, 1, 2, 5, 9, 17] {
                let p = SParams::from_ints(a, b, n);
                let exact_poly = s_poly(&p);
                for &t in &ts {
                    let exact = to_f64(&exact_poly.eval(&from_f64(t).unwrap()));
                    let closed = s_eval_closed(&p, t);
                    let scale = exact.abs().max(1e-30);
                    assert!(
                        (closed - exact).abs() <= 1e-9 * scale.max(1.0),
                        "a={a} b={b} n={n} t={t}: closed {closed} vs exact {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn value_recurrence_tracks_exact() {
        let p = SParams::from_ints(1, 1, 12);
        let exact_poly = s_poly(&p);
        for &t in &[-0.45, -0.3, 0.0, 1.5] {
            let exact = to_f64(&exact_poly.eval(&from_f64(t).unwrap()));
            let ev = s_eval_recurrence(1.0, 1.0, t, 12);
            assert!((ev.value - exact).abs() <= ev.err_bound.max(1e-14 * exact.abs()));
        }
    }

    #[test]
    fn special_roots_known_cases() {
        let r = s_roots_special(SpecialCase::TwoOne, 2);
        assert!((r[0] + 1.0).abs() < 1e-15 && (r[1] + 1.0 / 3.0).abs() < 1e-15);
        let r = s_roots_special(SpecialCase::OneOneHalf, 1);
        assert!((r[0] + 0.5).abs() < 1e-15);
        let r = s_roots_special(SpecialCase::ThreeOne, 1);
        assert!((r[0] + 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn thresholds_small_n() {
        assert_eq!(t_threshold(1).value, f64::NEG_INFINITY);
        assert!((t_threshold(2).value + 0.5).abs() < 1e-15);
        assert!((t_threshold(3).value + 1.0 / 3.0).abs() < 1e-15);
        let t4 = t_threshold(4).value;
        assert!((t4 + 1.0 / (2.0 + 2.0_f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn threshold_is_max_root_of_w_by_bisection() {
        // Independent oracle: bracket the largest sign change of W₃ and
        // bisect; W₃ = 4t³ + 10t² + 6t + 1 is negative at −0.30, positive at
        // −0.25 and beyond.
        let w3 = w_poly(3);
        let f = |t: f64| to_f64(&w3.eval(&from_f64(t).unwrap()));
        assert!(f(-0.30) < 0.0 && f(-0.25) > 0.0);
        let root = find_root(f, -0.30, -0.25, DEFAULT_ROOT_TOL).unwrap();
        assert!((root - t_threshold(4).value).abs() < 1e-11);
    }

    #[test]
    fn t2n_identity_examples() {
        assert!(check_t2n_identity(&rational(1, 1), &rational(1, 1), 1));
        assert!(check_t2n_identity(&rational(3, 1), &rational(1, 1), 2));
        assert!(check_t2n_identity(&rational(0, 1), &rational(0, 1), 1));
        assert!(check_t2n_identity(&rational(-5, 7), &rational(2, 3), 6));
    }

    #[test]
    fn sign_pattern_examples() {
        use Sign::*;
        // t = −0.4 lies in (t₂, t₃) = (−1/2, −1/3)
        assert_eq!(sign_pattern(2, -0.4).unwrap(), (Positive, Negative));
        assert_eq!(sign_pattern(2, 0.0).unwrap(), (Positive, Positive));
        assert_eq!(sign_pattern(1, -0.6).unwrap(), (Positive, Negative));
        assert!(matches!(
            sign_pattern(2, -0.5 + 1e-13),
            Err(Error::NearThreshold { .. })
        ));
        assert!(matches!(
            sign_pattern(2, -0.25),
            Err(Error::NearThreshold { .. })
        ));
        // W₂(−1) = 3 − 4 + 1 = 0: exactly at a root that is not a threshold
        assert!(matches!(
            sign_pattern(3, -1.0),
            Err(Error::SignAtRoot { .. })
        ));
    }

    #[test]
    fn leading_coefficient_formula() {
        for n in 0..=20usize {
            for (a, b) in [(2i64, 1i64), (1, 1), (0, 3), (-4, 7)] {
                let p = s_poly(&SParams::from_ints(a, b, n));
                assert!(p.degree().map_or(0, |d| d) <= n);
                let expect = rational(a * n as i64 - n as i64 + 1, 1);
                assert_eq!(p.coeff(n), expect, "a={a} b={b} n={n}");
            }
        }
    }
}
