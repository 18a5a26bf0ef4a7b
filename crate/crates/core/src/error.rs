use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal {off:.3e})")]
    EigenNonConvergence { sweeps: usize, off: f64 },

    #[error(
        "invalid bracket [{lo}, {hi}]: f(lo) = {flo:.3e} and f(hi) = {fhi:.3e} have the same sign"
    )]
    InvalidBracket {
        lo: f64,
        hi: f64,
        flo: f64,
        fhi: f64,
    },

    #[error("zero denominator in rational value")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    RationalParse(String),

    #[error("edge list line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },

    #[error("graph is disconnected: no walk from vertex {u} to vertex {v}")]
    Disconnected { u: usize, v: usize },

    #[error(
        "operation requires a finite matrix dimension; use the infinite-case criterion instead"
    )]
    InfiniteDimension,

    #[error("graph has {n} vertices; the constraint set is empty for n < 2")]
    TooFewVertices { n: usize },

    #[error("unknown graph spec {0:?}; expected path:N, cycle:N or complete:N")]
    BadGraphSpec(String),

    #[error("cycle graph needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),

    #[error(
        "psd verdicts disagree away from the boundary at n = {n}, s = {s}, t = {t}: \
         criterion {criterion}, eigen {eigen}"
    )]
    MethodDisagreement {
        n: usize,
        s: f64,
        t: f64,
        criterion: bool,
        eigen: bool,
    },

    #[error(
        "t = {t} is within {dist:.3e} of a positive-definiteness threshold; sign is ambiguous"
    )]
    NearThreshold { t: f64, dist: f64 },

    #[error("polynomial value is exactly zero at t = {t}; sign undefined")]
    SignAtRoot { t: f64 },

    #[error("no sign change found while scanning for a root")]
    NoBracketFound,

    #[error("cross-check failed: {what} (deviation {delta:.3e})")]
    CrossCheckFailed { what: String, delta: f64 },

    #[error("invalid region grid: {0}")]
    BadGrid(String),

    #[error("matrix rows do not form a square symmetric matrix: {0}")]
    NotSymmetric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
