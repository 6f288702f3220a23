//! Eigenvalue localization for the normalized Laplacian: the classical
//! `ρ₁ ≥ n/(n−1) ≥ ρₙ₋₁` bounds, per-index intervals in terms of n and R₋₁,
//! and their degree-only relaxation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootbounds::{self, MomentSummary, RootBoundsError};

#[derive(Debug, Error)]
pub enum EigBoundsError {
    #[error("requires n >= 3, got {0}")]
    TooFewVertices(usize),
    #[error("eigenvalue index {i} out of range 1..={max}")]
    IndexOutOfRange { i: usize, max: usize },
    #[error("inconsistent (n, R) pair: spread {0:.6e} < 0")]
    InconsistentRandic(f64),
    #[error("degree bounds out of range: n={n}, d_max={d_max}, d_min={d_min}")]
    BadDegrees { n: usize, d_max: usize, d_min: usize },
    #[error(transparent)]
    RootBounds(#[from] RootBoundsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Classical,
    Theorem,
    CorollaryDegree,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Classical => "classical",
            Method::Theorem => "theorem",
            Method::CorollaryDegree => "corollary_degree",
        }
    }
}

/// Enclosure `[lower, upper]` of ρ_index. `upper` is `f64::INFINITY` for the
/// one-sided classical bound at index 1; serialized output maps it to null.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInterval {
    pub index: usize,
    pub lower: f64,
    pub upper: f64,
    pub method: Method,
}

/// Spread of the nonzero spectrum in terms of the Randić index:
/// `Δ = 2(n−1)R₋₁ − n`. Negative values within 1e-9 are clamped to 0;
/// anything lower signals an inconsistent pair.
pub fn delta_from_randic(n: usize, r: f64) -> Result<f64, EigBoundsError> {
    if n < 3 {
        return Err(EigBoundsError::TooFewVertices(n));
    }
    let delta = 2.0 * (n as f64 - 1.0) * r - n as f64;
    if delta < -1e-9 {
        return Err(EigBoundsError::InconsistentRandic(delta));
    }
    Ok(delta.max(0.0))
}

fn check_index(n: usize, i: usize) -> Result<(), EigBoundsError> {
    if i < 1 || i > n - 1 {
        return Err(EigBoundsError::IndexOutOfRange { i, max: n - 1 });
    }
    Ok(())
}

/// Per-index interval for ρ_i in terms of n and R₋₁, evaluated through the
/// zero-localization engine applied to the nonzero characteristic factor,
/// which lies in the coefficient class `(−n, n(n−1)/2 − R₋₁)` of degree n−1.
pub fn theorem_bounds(n: usize, r: f64, i: usize) -> Result<BoundInterval, EigBoundsError> {
    check_index(n, i)?;
    delta_from_randic(n, r)?;
    let nf = n as f64;
    let summary =
        rootbounds::moments_from_coefficients(n - 1, -nf, nf * (nf - 1.0) / 2.0 - r)?;
    let (lower, upper) = rootbounds::lupas_interval(&summary, i)?;
    Ok(BoundInterval { index: i, lower, upper, method: Method::Theorem })
}

/// The same intervals with R₋₁ eliminated via its degree bounds: each endpoint
/// is relaxed using whichever of `Δ_lo = n(n−1−d₁)/d₁`, `Δ_hi = n(n−1−dₙ)/dₙ`
/// keeps the enclosure valid.
pub fn corollary_degree_bounds(
    n: usize,
    d_max: usize,
    d_min: usize,
    i: usize,
) -> Result<BoundInterval, EigBoundsError> {
    if n < 3 {
        return Err(EigBoundsError::TooFewVertices(n));
    }
    if d_min < 1 || d_min > d_max || d_max > n - 1 {
        return Err(EigBoundsError::BadDegrees { n, d_max, d_min });
    }
    check_index(n, i)?;
    let nf = n as f64;
    let mean = nf / (nf - 1.0);
    let delta_lo = nf * (nf - 1.0 - d_max as f64) / d_max as f64;
    let delta_hi = nf * (nf - 1.0 - d_min as f64) / d_min as f64;
    let at_lo = MomentSummary::from_mean_spread(n - 1, mean, delta_lo)?;
    let at_hi = MomentSummary::from_mean_spread(n - 1, mean, delta_hi)?;
    let (lo_a, hi_a) = rootbounds::lupas_interval(&at_lo, i)?;
    let (lo_b, hi_b) = rootbounds::lupas_interval(&at_hi, i)?;
    // True Δ lies between Δ_lo and Δ_hi and endpoints are monotone in Δ.
    Ok(BoundInterval {
        index: i,
        lower: lo_a.min(lo_b),
        upper: hi_a.max(hi_b),
        method: Method::CorollaryDegree,
    })
}

/// Classical bounds: `ρ₁ ≥ n/(n−1)` and `ρₙ₋₁ ≤ n/(n−1)`, with equality
/// exactly for Kₙ.
pub fn classical_bounds(n: usize) -> (f64, f64) {
    assert!(n >= 2);
    let b = n as f64 / (n as f64 - 1.0);
    (b, b)
}

/// The classical bounds as one-sided intervals for indices 1 and n−1.
pub fn classical_intervals(n: usize) -> Vec<BoundInterval> {
    let (rho1_lower, rho_last_upper) = classical_bounds(n);
    vec![
        BoundInterval {
            index: 1,
            lower: rho1_lower,
            upper: f64::INFINITY,
            method: Method::Classical,
        },
        BoundInterval {
            index: n - 1,
            lower: 0.0,
            upper: rho_last_upper,
            method: Method::Classical,
        },
    ]
}

/// Margins by which the R₋₁ intervals sharpen the classical bounds:
/// `theorem lower(1) − n/(n−1)` and `n/(n−1) − theorem upper(n−1)`. Both are
/// nonnegative for any connected graph.
pub fn dominance_check(n: usize, r: f64) -> Result<(f64, f64), EigBoundsError> {
    let mean = n as f64 / (n as f64 - 1.0);
    let first = theorem_bounds(n, r, 1)?;
    let last = theorem_bounds(n, r, n - 1)?;
    Ok((first.lower - mean, mean - last.upper))
}
