//! Bracketed root finding by bisection.

use crate::error::{Error, Result};

/// Default absolute bracket-width tolerance.
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

/// Bisection on `[lo, hi]`. Requires a sign change (or a zero endpoint);
/// returns the bracket midpoint once the width is at most `tol`.
pub fn find_root(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    assert!(lo <= hi, "bracket endpoints out of order");
    assert!(tol > 0.0, "tolerance must be positive");
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::InvalidBracket { lo, hi, flo, fhi });
    }

    let (mut lo, mut hi) = (lo, hi);
    let mut flo = flo;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket is at floating-point resolution
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Bisection on a monotone boolean predicate: returns the smallest `x` in
/// `[lo, hi]` with `pred(x)` true, to bracket width `tol`. `pred(lo)` must
/// be false and `pred(hi)` true.
pub fn bisect_predicate(pred: impl Fn(f64) -> bool, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if pred(lo) || !pred(hi) {
        return Err(Error::InvalidBracket {
            lo,
            hi,
            flo: if pred(lo) { 1.0 } else { -1.0 },
            fhi: if pred(hi) { 1.0 } else { -1.0 },
        });
    }
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
