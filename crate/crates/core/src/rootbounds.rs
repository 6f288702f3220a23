//! Zero localization for real polynomials with fixed first two coefficients,
//! after Lupas. Works purely on the moment data (count, sum, sum of squares)
//! of the zero multiset, so it is reusable beyond graph spectra.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RootBoundsError {
    #[error("need at least 2 values, got {0}")]
    TooFewValues(usize),
    #[error("spread {spread:.6e} is negative beyond tolerance {tol:.6e}")]
    NegativeSpread { spread: f64, tol: f64 },
    #[error("no real zero multiset matches (n={n}, a1={a1}, a2={a2}): spread {spread:.6e}")]
    Infeasible { n: usize, a1: f64, a2: f64, spread: f64 },
    #[error("zero index {i} out of range 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },
}

/// First two power sums of a real zero multiset, with the derived mean and
/// spread `Δ = n·S2 − S1²`. Coefficient correspondence (Newton identities):
/// `a1 = −S1`, `a2 = (S1² − S2)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSummary {
    count: usize,
    s1: f64,
    s2: f64,
    mean: f64,
    spread: f64,
}

impl MomentSummary {
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn s1(&self) -> f64 {
        self.s1
    }

    pub fn s2(&self) -> f64 {
        self.s2
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn spread(&self) -> f64 {
        self.spread
    }

    pub fn a1(&self) -> f64 {
        -self.s1
    }

    pub fn a2(&self) -> f64 {
        (self.s1 * self.s1 - self.s2) / 2.0
    }

    /// Builds a summary directly from a mean and a spread. Small negative
    /// spreads (round-off on near-equal zeros) are clamped to 0.
    pub fn from_mean_spread(count: usize, mean: f64, spread: f64) -> Result<MomentSummary, RootBoundsError> {
        if count < 2 {
            return Err(RootBoundsError::TooFewValues(count));
        }
        let n = count as f64;
        let s1 = mean * n;
        let tol = 1e-12 * (s1 * s1).max(1.0);
        if spread < -tol {
            return Err(RootBoundsError::NegativeSpread { spread, tol });
        }
        // Magnitudes below round-off scale are indistinguishable from an
        // all-equal zero multiset; snap them so √Δ cannot amplify noise.
        let spread = if spread.abs() <= tol { 0.0 } else { spread };
        let s2 = (spread + s1 * s1) / n;
        Ok(MomentSummary { count, s1, s2, mean, spread })
    }
}

pub fn moments_from_values(xs: &[f64]) -> Result<MomentSummary, RootBoundsError> {
    if xs.len() < 2 {
        return Err(RootBoundsError::TooFewValues(xs.len()));
    }
    let n = xs.len() as f64;
    let s1: f64 = xs.iter().sum();
    let s2: f64 = xs.iter().map(|x| x * x).sum();
    let spread = n * s2 - s1 * s1;
    let tol = 1e-12 * (s1 * s1).max(1.0);
    if spread < -tol {
        return Err(RootBoundsError::NegativeSpread { spread, tol });
    }
    Ok(MomentSummary {
        count: xs.len(),
        s1,
        s2,
        mean: s1 / n,
        spread: spread.max(0.0),
    })
}

/// Recovers moments from the fixed coefficients `a1`, `a2` of a monic degree-n
/// polynomial. Errors when no real zero multiset has these power sums.
pub fn moments_from_coefficients(n: usize, a1: f64, a2: f64) -> Result<MomentSummary, RootBoundsError> {
    if n < 2 {
        return Err(RootBoundsError::TooFewValues(n));
    }
    let nf = n as f64;
    let s1 = -a1;
    let s2 = a1 * a1 - 2.0 * a2;
    let spread = nf * s2 - s1 * s1;
    let tol = 1e-12 * (s1 * s1).max(1.0);
    if spread < -tol {
        return Err(RootBoundsError::Infeasible { n, a1, a2, spread });
    }
    // Coefficient-derived spreads cancel to round-off noise when the zeros
    // are all equal; snap those to exactly 0.
    let spread = if spread.abs() <= tol { 0.0 } else { spread };
    Ok(MomentSummary { count: n, s1, s2, mean: s1 / nf, spread })
}

/// Closed enclosure of the i-th largest zero (1-indexed) of any real-rooted
/// monic polynomial with the given moment data:
///
/// ```text
/// x̄ + (1/n)√(Δ/(n−1))          ≤ x_1 ≤ x̄ + (1/n)√((n−1)Δ)
/// x̄ − (1/n)√(Δ(i−1)/(n−i+1))   ≤ x_i ≤ x̄ + (1/n)√(Δ(n−i)/i)      (2 ≤ i ≤ n−1)
/// x̄ − (1/n)√((n−1)Δ)           ≤ x_n ≤ x̄ − (1/n)√(Δ/(n−1))
/// ```
pub fn lupas_interval(m: &MomentSummary, i: usize) -> Result<(f64, f64), RootBoundsError> {
    let n = m.count;
    if i < 1 || i > n {
        return Err(RootBoundsError::IndexOutOfRange { i, n });
    }
    let nf = n as f64;
    let d = m.spread;
    let xbar = m.mean;
    let interval = if i == 1 {
        (
            xbar + (d / (nf - 1.0)).sqrt() / nf,
            xbar + ((nf - 1.0) * d).sqrt() / nf,
        )
    } else if i == n {
        (
            xbar - ((nf - 1.0) * d).sqrt() / nf,
            xbar - (d / (nf - 1.0)).sqrt() / nf,
        )
    } else {
        let fi = i as f64;
        (
            xbar - (d * (fi - 1.0) / (nf - fi + 1.0)).sqrt() / nf,
            xbar + (d * (nf - fi) / fi).sqrt() / nf,
        )
    };
    Ok(interval)
}
