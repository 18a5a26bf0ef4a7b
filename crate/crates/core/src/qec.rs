//! Quadratic embedding constants.
//!
//! `QEC(G)` is the supremum of `fᵀDf` over vectors with `Σf = 0` and
//! `Σf² = 1`, `D` the distance matrix. For a finite graph the constraint
//! sphere is compact, so the supremum is attained and equals the largest
//! eigenvalue of `D` restricted to the zero-sum hyperplane — no iterative
//! optimization is involved.
//!
//! For path graphs three independent routes are provided and
//! cross-checked: the restricted eigenproblem, a bisection on the minimal
//! `t` with `A_{n−1}(t/2, t/2)` positive semidefinite, and the closed form
//! `−1/(1 + cos(π/n))`. The second eigenvalue of the distance matrix obeys
//! the even/odd dichotomy (equal to the constant for even `n`, strictly
//! below it for odd `n`, where it is `−1/(1 − cos θ*)` with `θ*` the
//! maximal solution of `tan(θ/2)·tan(nθ/2) = −1/n` in `(0, π)`).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::graphs::{distance_matrix, path_graph, Graph};
use crate::matrices::{is_psd_a, PsdMethod};
use crate::numerics::eigen::sym_eigen;
use crate::numerics::matrix::SymMatrix;
use crate::numerics::roots::{bisect_predicate, find_root};
use crate::textfmt::format_significant;

/// Default bracket tolerance for the psd bisection route.
pub const DEFAULT_BISECT_TOL: f64 = 1e-12;

/// Compensated (Kahan) accumulator; the extremal-sum checks need absolute
/// deviations near 1e-10 on tens of thousands of terms.
#[derive(Default, Clone, Copy)]
struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(self) -> f64 {
        self.sum
    }
}

/// Deterministic orthonormal basis of the zero-sum hyperplane: Helmert
/// columns. Column k (1-indexed) has k leading entries `1/√(k(k+1))`
/// followed by `−k/√(k(k+1))`.
pub fn helmert_basis(n: usize) -> Vec<Vec<f64>> {
    assert!(n >= 2, "hyperplane basis needs n >= 2");
    (1..n)
        .map(|k| {
            let kf = k as f64;
            let scale = 1.0 / (kf * (kf + 1.0)).sqrt();
            (0..n)
                .map(|i| {
                    if i < k {
                        scale
                    } else if i == k {
                        -kf * scale
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

/// `QEC(G)` and the attaining unit vector (zero-sum, first significant
/// entry made positive so reruns are reproducible).
pub fn qec_numeric(g: &Graph) -> Result<(f64, Vec<f64>)> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { n });
    }
    let d = distance_matrix(g)?.to_sym_f64();
    let q = helmert_basis(n);
    let m = n - 1;

    // columns of D·Q
    let dq: Vec<Vec<f64>> = q
        .iter()
        .map(|col| {
            (0..n)
                .map(|i| (0..n).map(|k| d.get(i, k) * col[k]).sum())
                .collect()
        })
        .collect();
    // QᵀDQ, symmetric by construction of the quadratic form
    let b = SymMatrix::from_fn(m, |r, c| (0..n).map(|i| q[r][i] * dq[c][i]).sum::<f64>());
    let eig = sym_eigen(&b)?;
    let value = eig.max();
    let top = &eig.vectors[m - 1];

    let mut f: Vec<f64> = (0..n)
        .map(|i| (0..m).map(|j| q[j][i] * top[j]).sum())
        .collect();
    let max_abs = f.iter().fold(0.0_f64, |a, &x| a.max(x.abs()));
    if let Some(&first) = f.iter().find(|x| x.abs() > 1e-12 * max_abs.max(1.0)) {
        if first < 0.0 {
            for x in &mut f {
                *x = -*x;
            }
        }
    }
    Ok((value, f))
}

/// Closed form `QEC(P_n) = −1/(1 + cos(π/n))`.
pub fn qec_path_closed(n: usize) -> f64 {
    assert!(n >= 2, "path constant defined for n >= 2");
    -1.0 / (1.0 + (PI / n as f64).cos())
}

/// `QEC(P_n)` as the minimal `t` with `A_{n−1}(t/2, t/2)` positive
/// semidefinite, found by bisection over `[−2, 0]`.
pub fn qec_path_bisection(n: usize, tol: f64) -> Result<f64> {
    assert!(n >= 2, "path constant defined for n >= 2");
    assert!(tol > 0.0, "tolerance must be positive");
    bisect_predicate(
        |t| {
            is_psd_a(n - 1, 0.5 * t, 0.5 * t, PsdMethod::Criterion)
                .expect("criterion method cannot fail")
        },
        -2.0,
        0.0,
        tol,
    )
}

fn theta_residual(n: usize, theta: f64) -> f64 {
    let half = 0.5 * theta;
    let nhalf = 0.5 * n as f64 * theta;
    n as f64 * half.sin() * nhalf.sin() + half.cos() * nhalf.cos()
}

/// All roots in `(0, π)` of `tan(θ/2)·tan(nθ/2) = −1/n`, descending.
///
/// The equation is multiplied out to the pole-free form
/// `n·sin(θ/2)sin(nθ/2) + cos(θ/2)cos(nθ/2) = 0` and the subintervals
/// delimited by the poles `θ = (2k+1)π/n` of `tan(nθ/2)` are walked from π
/// downward, bracketing on sign changes.
pub fn theta_star_roots(n: usize) -> Result<Vec<f64>> {
    assert!(n >= 3 && n % 2 == 1, "theta* is defined for odd n >= 3");
    let nf = n as f64;
    let mut boundaries: Vec<f64> = vec![PI];
    let mut k = (n - 1) / 2;
    while k >= 1 {
        boundaries.push((2.0 * (k as f64) - 1.0) * PI / nf);
        k -= 1;
    }
    boundaries.push(0.0);

    const SUBSAMPLES: usize = 8;
    let mut roots = Vec::new();
    for win in boundaries.windows(2) {
        let (hi, lo) = (win[0], win[1]);
        let grid: Vec<f64> = (0..=SUBSAMPLES)
            .map(|j| hi - (hi - lo) * j as f64 / SUBSAMPLES as f64)
            .collect();
        for pair in grid.windows(2) {
            let (a, b) = (pair[1], pair[0]); // a < b
            let (fa, fb) = (theta_residual(n, a), theta_residual(n, b));
            if fa == 0.0 {
                roots.push(a);
            } else if fa.signum() != fb.signum() {
                roots.push(find_root(|x| theta_residual(n, x), a, b, 1e-14)?);
            }
        }
    }
    if roots.is_empty() {
        return Err(Error::NoBracketFound);
    }
    Ok(roots)
}

/// The maximal solution `θ*`.
pub fn theta_star(n: usize) -> Result<f64> {
    Ok(theta_star_roots(n)?[0])
}

/// `(λ₁, λ₂)` of the distance matrix of `P_n`, cross-checked against the
/// parity closed form for `λ₂` (within 1e-8) before returning.
pub fn lambda_path(n: usize) -> Result<(f64, f64)> {
    assert!(n >= 2, "eigenvalues of P_n need n >= 2");
    let d = distance_matrix(&path_graph(n))?.to_sym_f64();
    let eig = sym_eigen(&d)?;
    let lambda1 = eig.values[n - 1];
    let lambda2 = eig.values[n - 2];
    let closed = if n.is_multiple_of(2) {
        -1.0 / (1.0 + (PI / n as f64).cos())
    } else {
        -1.0 / (1.0 - theta_star(n)?.cos())
    };
    let delta = (lambda2 - closed).abs();
    if delta > 1e-8 {
        return Err(Error::CrossCheckFailed {
            what: format!("lambda2(P_{n}) against the parity closed form"),
            delta,
        });
    }
    Ok((lambda1, lambda2))
}

/// The explicit extremal vector on `P_n`:
/// `x_i = (−1)^i · sin((2i−1)π/(2n))`, 1-indexed components.
#[derive(Debug, Clone)]
pub struct PathExtremalVector {
    pub n: usize,
    pub components: Vec<f64>,
}

impl PathExtremalVector {
    /// Unit-norm copy: the raw vector scaled by `√(2/n)`.
    pub fn normalized(&self) -> Vec<f64> {
        let scale = (2.0 / self.n as f64).sqrt();
        self.components.iter().map(|x| x * scale).collect()
    }
}

pub fn path_extremal_vector(n: usize) -> PathExtremalVector {
    assert!(n >= 2, "extremal vector defined for n >= 2");
    let components = (1..=n)
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            sign * ((2 * i - 1) as f64 * PI / (2.0 * n as f64)).sin()
        })
        .collect();
    PathExtremalVector { n, components }
}

/// The three sums of the extremal vector evaluated directly, with their
/// deviations from the exact targets `0`, `n/2`, and
/// `−n/(2(1 + cos(π/n)))`.
#[derive(Debug, Clone, Copy)]
pub struct ExtremalSums {
    pub sum: f64,
    pub sum_sq: f64,
    pub weighted: f64,
    pub max_deviation: f64,
}

pub fn verify_extremal_sums(n: usize) -> ExtremalSums {
    let x = path_extremal_vector(n).components;
    let mut sum = KahanSum::default();
    let mut sum_sq = KahanSum::default();
    let mut weighted = KahanSum::default();
    for i in 0..n {
        sum.add(x[i]);
        sum_sq.add(x[i] * x[i]);
        for j in 0..n {
            weighted.add(i.abs_diff(j) as f64 * x[i] * x[j]);
        }
    }
    let sum = sum.value();
    let sum_sq = sum_sq.value();
    let weighted = weighted.value();
    let target = -(n as f64) / (2.0 * (1.0 + (PI / n as f64).cos()));
    let max_deviation = sum
        .abs()
        .max((sum_sq - n as f64 / 2.0).abs())
        .max((weighted - target).abs());
    ExtremalSums {
        sum,
        sum_sq,
        weighted,
        max_deviation,
    }
}

/// Closed-form `QEC(P_n)` for `n = 2..=n_max`: a strictly increasing
/// sequence bounded above by −1/2.
pub fn qec_limit_check(n_max: usize) -> Vec<f64> {
    assert!(n_max >= 2);
    (2..=n_max).map(qec_path_closed).collect()
}

/// Everything computed for one graph, with the cross-method deltas.
#[derive(Debug, Clone)]
pub struct QecReport {
    pub graph_id: String,
    pub n: usize,
    pub qec_numeric: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    /// Unit vector attaining the supremum (zero-sum).
    pub extremal_vector: Vec<f64>,
    /// Path graphs only.
    pub qec_closed: Option<f64>,
    pub qec_bisection: Option<f64>,
    /// Odd-n path graphs only.
    pub theta_star: Option<f64>,
    /// Largest pairwise difference between the available methods.
    pub max_delta: f64,
}

impl QecReport {
    pub const CSV_HEADER: &'static str =
        "n,qec_numeric,qec_closed,qec_bisection,lambda1,lambda2,theta_star,max_delta";

    fn csv_field(v: Option<f64>) -> String {
        v.map(|x| format_significant(x, 12)).unwrap_or_default()
    }

    /// Machine-readable row matching [`Self::CSV_HEADER`]; empty fields
    /// where a method does not apply.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            format_significant(self.qec_numeric, 12),
            Self::csv_field(self.qec_closed),
            Self::csv_field(self.qec_bisection),
            format_significant(self.lambda1, 12),
            format_significant(self.lambda2, 12),
            Self::csv_field(self.theta_star),
            format_significant(self.max_delta, 12),
        )
    }

    /// One line per field.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph: {}\n", self.graph_id));
        out.push_str(&format!("n: {}\n", self.n));
        out.push_str(&format!(
            "qec_numeric: {}\n",
            format_significant(self.qec_numeric, 12)
        ));
        if let Some(v) = self.qec_closed {
            out.push_str(&format!("qec_closed: {}\n", format_significant(v, 12)));
        }
        if let Some(v) = self.qec_bisection {
            out.push_str(&format!("qec_bisection: {}\n", format_significant(v, 12)));
        }
        out.push_str(&format!(
            "lambda1: {}\n",
            format_significant(self.lambda1, 12)
        ));
        out.push_str(&format!(
            "lambda2: {}\n",
            format_significant(self.lambda2, 12)
        ));
        if let Some(v) = self.theta_star {
            out.push_str(&format!("theta_star: {}\n", format_significant(v, 12)));
        }
        out.push_str(&format!(
            "max_delta: {}\n",
            format_significant(self.max_delta, 12)
        ));
        let vec_text: Vec<String> = self
            .extremal_vector
            .iter()
            .map(|&x| format_significant(x, 12))
            .collect();
        out.push_str(&format!("extremal_vector: {}\n", vec_text.join(" ")));
        out
    }
}

/// Full report for one graph; path graphs (under any labeling) get the
/// closed-form and bisection columns as well.
pub fn qec_report(graph_id: &str, g: &Graph) -> Result<QecReport> {
    let (value, extremal_vector) = qec_numeric(g)?;
    let n = g.vertex_count();
    let d = distance_matrix(g)?.to_sym_f64();
    let eig = sym_eigen(&d)?;
    let (lambda1, lambda2) = (eig.values[n - 1], eig.values[n - 2]);

    let (qec_closed, qec_bisection, theta) = if g.is_path() {
        let closed = qec_path_closed(n);
        let bis = qec_path_bisection(n, DEFAULT_BISECT_TOL)?;
        let theta = if n % 2 == 1 {
            Some(theta_star(n)?)
        } else {
            None
        };
        (Some(closed), Some(bis), theta)
    } else {
        (None, None, None)
    };

    let mut max_delta = 0.0_f64;
    if let (Some(c), Some(b)) = (qec_closed, qec_bisection) {
        max_delta = (value - c).abs().max((b - c).abs()).max((value - b).abs());
    }

    Ok(QecReport {
        graph_id: graph_id.to_string(),
        n,
        qec_numeric: value,
        lambda1,
        lambda2,
        extremal_vector,
        qec_closed,
        qec_bisection,
        theta_star: theta,
        max_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, star_graph};

    #[test]
    fn helmert_columns_are_orthonormal_and_zero_sum() {
        for n in 2..=10 {
            let q = helmert_basis(n);
            assert_eq!(q.len(), n - 1);
            for (a, col_a) in q.iter().enumerate() {
                assert!(col_a.iter().sum::<f64>().abs() < 1e-14);
                for (b, col_b) in q.iter().enumerate() {
                    let dot: f64 = col_a.iter().zip(col_b).map(|(x, y)| x * y).sum();
                    let want = if a == b { 1.0 } else { 0.0 };
                    assert!((dot - want).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn qec_p2_is_minus_one() {
        let (v, f) = qec_numeric(&path_graph(2)).unwrap();
        assert!((v + 1.0).abs() < 1e-12);
        let r = 0.5_f64.sqrt();
        assert!((f[0] - r).abs() < 1e-12 && (f[1] + r).abs() < 1e-12);
    }

    #[test]
    fn qec_complete_graphs() {
        // D = J − I acts as −I on the zero-sum hyperplane.
        for n in [3, 5, 8] {
            let (v, _) = qec_numeric(&complete_graph(n)).unwrap();
            assert!((v + 1.0).abs() < 1e-10, "K_{n}: {v}");
        }
    }

    #[test]
    fn qec_p3_three_ways() {
        let (v, _) = qec_numeric(&path_graph(3)).unwrap();
        assert!((v + 2.0 / 3.0).abs() < 1e-10);
        assert!((qec_path_closed(3) + 2.0 / 3.0).abs() < 1e-15);
        let b = qec_path_bisection(3, DEFAULT_BISECT_TOL).unwrap();
        assert!((b + 2.0 / 3.0).abs() < 1e-11);
    }

    #[test]
    fn qec_small_closed_forms() {
        assert!((qec_path_closed(2) + 1.0).abs() < 1e-15);
        let expect4 = -(2.0 - 2.0_f64.sqrt());
        assert!((qec_path_closed(4) - expect4).abs() < 1e-15);
        let b = qec_path_bisection(2, DEFAULT_BISECT_TOL).unwrap();
        assert!((b + 1.0).abs() < 1e-11);
        let b = qec_path_bisection(4, DEFAULT_BISECT_TOL).unwrap();
        assert!((b - expect4).abs() < 1e-11);
    }

    #[test]
    fn rejects_single_vertex() {
        assert!(matches!(
            qec_numeric(&path_graph(1)),
            Err(Error::TooFewVertices { n: 1 })
        ));
    }

    #[test]
    fn lambda_path_small() {
        let (l1, l2) = lambda_path(3).unwrap();
        let s3 = 3.0_f64.sqrt();
        assert!((l1 - (1.0 + s3)).abs() < 1e-10);
        assert!((l2 - (1.0 - s3)).abs() < 1e-10);
        let (_, l2) = lambda_path(4).unwrap();
        assert!((l2 + (2.0 - 2.0_f64.sqrt())).abs() < 1e-10);
        let (l1, l2) = lambda_path(2).unwrap();
        assert!((l1 - 1.0).abs() < 1e-12 && (l2 + 1.0).abs() < 1e-12);
    }

    #[test]
    fn theta_star_n3() {
        let th = theta_star(3).unwrap();
        assert!((th - 1.9455307595).abs() < 1e-9);
        // defining residual
        let residual = (th / 2.0).tan() * (3.0 * th / 2.0).tan() + 1.0 / 3.0;
        assert!(residual.abs() < 1e-9, "residual {residual}");
        // matches λ₂(P₃) = 1 − √3 through −1/(1 − cos θ*)
        let l2 = -1.0 / (1.0 - th.cos());
        assert!((l2 - (1.0 - 3.0_f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn theta_star_n5_matches_eigen() {
        let th = theta_star(5).unwrap();
        let (_, l2) = lambda_path(5).unwrap();
        assert!((-1.0 / (1.0 - th.cos()) - l2).abs() < 1e-8);
    }

    #[test]
    fn extremal_vector_small() {
        let x = path_extremal_vector(2).components;
        let r = 0.5_f64.sqrt();
        assert!((x[0] + r).abs() < 1e-15 && (x[1] - r).abs() < 1e-15);
        let x = path_extremal_vector(3).components;
        for (got, want) in x.iter().zip([-0.5, 1.0, -0.5]) {
            assert!((got - want).abs() < 1e-15);
        }
        let x = path_extremal_vector(4).components;
        let expect: Vec<f64> = (1..=4)
            .map(|i| (if i % 2 == 0 { 1.0 } else { -1.0 }) * ((2 * i - 1) as f64 * PI / 8.0).sin())
            .collect();
        assert_eq!(x, expect);
    }

    #[test]
    fn extremal_sums_hand_values() {
        let s = verify_extremal_sums(2);
        assert!(s.sum.abs() < 1e-14);
        assert!((s.sum_sq - 1.0).abs() < 1e-14);
        assert!((s.weighted + 1.0).abs() < 1e-14);
        // n = 3: Σ|i−j|·xᵢxⱼ = 2(−1/2 − 1/2 + 1/2) = −1
        let s = verify_extremal_sums(3);
        assert!((s.weighted + 1.0).abs() < 1e-13);
        let s = verify_extremal_sums(64);
        assert!(s.max_deviation <= 1e-10, "deviation {}", s.max_deviation);
    }

    #[test]
    fn limit_sequence_shape() {
        let seq = qec_limit_check(64);
        assert!((seq[0] + 1.0).abs() < 1e-15);
        assert!((seq[1] + 2.0 / 3.0).abs() < 1e-15);
        assert!((seq[2] + (2.0 - 2.0_f64.sqrt())).abs() < 1e-15);
        assert!(seq.windows(2).all(|w| w[0] < w[1]));
        assert!(seq.iter().all(|&v| v < -0.5));
    }

    #[test]
    fn report_for_path_and_star() {
        let r = qec_report("path:4", &path_graph(4)).unwrap();
        assert!(r.qec_closed.is_some() && r.qec_bisection.is_some());
        assert!(r.theta_star.is_none()); // even n
        assert!(r.max_delta < 1e-8);
        let row = r.csv_row();
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 8);
        assert!(!fields[2].is_empty() && !fields[3].is_empty());
        assert!(fields[6].is_empty()); // no theta_star for even n

        let r = qec_report("star:5", &star_graph(5)).unwrap();
        assert!(r.qec_closed.is_none());
        let row = r.csv_row();
        let fields: Vec<&str> = row.split(',').collect();
        assert!(fields[2].is_empty() && fields[3].is_empty());
        assert!(r.lambda2 <= r.qec_numeric + 1e-8 && r.qec_numeric < r.lambda1);
        // the attaining vector is feasible and attains the value
        let f = &r.extremal_vector;
        assert!(f.iter().sum::<f64>().abs() < 1e-10);
        assert!((f.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-10);
        let d = distance_matrix(&star_graph(5)).unwrap().to_sym_f64();
        let quad: f64 = (0..5)
            .flat_map(|i| (0..5).map(move |j| (i, j)))
            .map(|(i, j)| d.get(i, j) * f[i] * f[j])
            .sum();
        assert!((quad - r.qec_numeric).abs() < 1e-8);
    }

    #[test]
    fn odd_path_report_has_theta() {
        let r = qec_report("path:5", &path_graph(5)).unwrap();
        assert!(r.theta_star.is_some());
        assert!(r.lambda2 < r.qec_numeric - 1e-4); // strict gap for odd n
    }
}
