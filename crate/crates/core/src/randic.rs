//! The general Randić index R₋₁ and its bounds: from the degree sequence,
//! from the extreme normalized Laplacian eigenvalues, and the global lower
//! bound n/(2(n−1)).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum RandicError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("requires n >= {min}, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("extreme eigenvalues violate rho1 >= n/(n-1) >= rho_last >= 0: rho1={rho1}, rho_last={rho_last}, n={n}")]
    BadExtremes { n: usize, rho1: f64, rho_last: f64 },
}

/// `R₋₁ = Σ_{{i,j} ∈ E} 1/(dᵢ dⱼ)`.
pub fn randic_minus_one(g: &Graph) -> Result<f64, RandicError> {
    if g.n() < 2 {
        return Err(RandicError::TooFewVertices { n: g.n(), min: 2 });
    }
    if !g.is_connected() {
        return Err(RandicError::Disconnected);
    }
    if g.m() == 0 {
        return Err(RandicError::NoEdges);
    }
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| 1.0 / (g.degree(u) * g.degree(v)) as f64)
        .sum())
}

/// Degree-sequence bracket `n/(2d₁) ≤ R₋₁ ≤ n/(2dₙ)`, tight exactly for
/// regular graphs.
pub fn randic_bounds_degrees(g: &Graph) -> Result<(f64, f64), RandicError> {
    if g.n() < 2 {
        return Err(RandicError::TooFewVertices { n: g.n(), min: 2 });
    }
    if !g.is_connected() {
        return Err(RandicError::Disconnected);
    }
    let n = g.n() as f64;
    Ok((n / (2.0 * g.max_degree() as f64), n / (2.0 * g.min_degree() as f64)))
}

/// Global lower bound `R₋₁ ≥ n/(2(n−1))`, attained by Kₙ.
pub fn randic_lower_global(n: usize) -> f64 {
    assert!(n >= 2);
    n as f64 / (2.0 * (n as f64 - 1.0))
}

/// The two lower bounds and two upper bounds on R₋₁ obtained from the extreme
/// eigenvalues, plus their combination.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremeEigRandicBounds {
    /// `(n−1)/(2(n−2))·(ρ₁ − n/(n−1))² + n/(2(n−1))`
    pub lower_from_rho1: f64,
    /// same with `(n/(n−1) − ρₙ₋₁)²`
    pub lower_from_rho_last: f64,
    /// `½(n−1)(n−2)·(ρ₁ − n/(n−1))² + n/(2(n−1))`
    pub upper_from_rho1: f64,
    /// same with `(n/(n−1) − ρₙ₋₁)²`
    pub upper_from_rho_last: f64,
    /// max of the two lower bounds
    pub lower: f64,
    /// min of the two upper bounds
    pub upper: f64,
}

/// Bounds on R₋₁ in terms of ρ₁ and ρₙ₋₁ for a connected graph on n ≥ 3
/// vertices. Guarantees `lower ≤ R₋₁ ≤ upper`.
pub fn randic_bounds_from_extreme_eigs(
    n: usize,
    rho1: f64,
    rho_last: f64,
) -> Result<ExtremeEigRandicBounds, RandicError> {
    if n < 3 {
        return Err(RandicError::TooFewVertices { n, min: 3 });
    }
    let nf = n as f64;
    let mean = nf / (nf - 1.0);
    let slack = 1e-9;
    if !(rho1 >= mean - slack && rho_last <= mean + slack && rho_last >= -slack) {
        return Err(RandicError::BadExtremes { n, rho1, rho_last });
    }
    let base = nf / (2.0 * (nf - 1.0));
    let lo_coef = (nf - 1.0) / (2.0 * (nf - 2.0));
    let hi_coef = 0.5 * (nf - 1.0) * (nf - 2.0);
    let dev1 = rho1 - mean;
    let dev_last = mean - rho_last;
    let b = ExtremeEigRandicBounds {
        lower_from_rho1: lo_coef * dev1 * dev1 + base,
        lower_from_rho_last: lo_coef * dev_last * dev_last + base,
        upper_from_rho1: hi_coef * dev1 * dev1 + base,
        upper_from_rho_last: hi_coef * dev_last * dev_last + base,
        lower: 0.0,
        upper: 0.0,
    };
    Ok(ExtremeEigRandicBounds {
        lower: b.lower_from_rho1.max(b.lower_from_rho_last),
        upper: b.upper_from_rho1.min(b.upper_from_rho_last),
        ..b
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_family, gen_random_connected, Family};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12
    }

    #[test]
    fn randic_of_named_graphs() {
        let k4 = gen_family(Family::Complete(4)).unwrap();
        assert!(close(randic_minus_one(&k4).unwrap(), 2.0 / 3.0));

        for n in 2..=8 {
            let star = gen_family(Family::Star(n)).unwrap();
            assert!(close(randic_minus_one(&star).unwrap(), 1.0), "K_1,{}", n - 1);
        }

        let p3 = gen_family(Family::Path(3)).unwrap();
        assert!(close(randic_minus_one(&p3).unwrap(), 1.0));
    }

    #[test]
    fn randic_rejects_degenerate_inputs() {
        let k1 = gen_family(Family::Complete(1)).unwrap();
        assert!(randic_minus_one(&k1).is_err());
        let disconnected = crate::graph::Graph::from_edge_list("0 1\n2 3").unwrap();
        assert!(matches!(
            randic_minus_one(&disconnected),
            Err(RandicError::Disconnected)
        ));
    }

    #[test]
    fn degree_bounds_examples() {
        let c4 = gen_family(Family::Cycle(4)).unwrap();
        let (lo, hi) = randic_bounds_degrees(&c4).unwrap();
        assert!(close(lo, 1.0) && close(hi, 1.0));
        assert!(close(randic_minus_one(&c4).unwrap(), 1.0));

        let star = gen_family(Family::Star(4)).unwrap();
        let (lo, hi) = randic_bounds_degrees(&star).unwrap();
        assert!(close(lo, 2.0 / 3.0) && close(hi, 2.0));

        let p3 = gen_family(Family::Path(3)).unwrap();
        let (lo, hi) = randic_bounds_degrees(&p3).unwrap();
        assert!(close(lo, 3.0 / 4.0) && close(hi, 3.0 / 2.0));
    }

    #[test]
    fn regular_graphs_attain_degree_bounds() {
        for n in [3usize, 4, 5, 6] {
            let c = gen_family(Family::Cycle(n.max(3))).unwrap();
            let r = randic_minus_one(&c).unwrap();
            assert!(close(r, c.n() as f64 / 4.0));
            let k = gen_family(Family::Complete(n)).unwrap();
            let r = randic_minus_one(&k).unwrap();
            assert!(close(r, n as f64 / (2.0 * (n as f64 - 1.0))));
        }
    }

    #[test]
    fn global_lower_values() {
        assert!(close(randic_lower_global(4), 2.0 / 3.0));
        assert!(close(randic_lower_global(3), 3.0 / 4.0));
        assert!(close(randic_lower_global(2), 1.0));
    }

    #[test]
    fn extreme_eig_bounds_p3() {
        // n=3 collapses both coefficient pairs to 1 and 1.
        let b = randic_bounds_from_extreme_eigs(3, 2.0, 1.0).unwrap();
        assert!(close(b.lower, 1.0));
        assert!(close(b.upper, 1.0));
    }

    #[test]
    fn extreme_eig_bounds_c4() {
        let b = randic_bounds_from_extreme_eigs(4, 2.0, 1.0).unwrap();
        // rho1 = 2 attains the theorem's upper bound, so both the rho1 lower
        // bound and the rho_last upper bound are exactly R = 1.
        assert!(close(b.lower_from_rho1, 1.0));
        assert!(close(b.upper_from_rho1, 2.0));
        assert!(close(b.lower_from_rho_last, 3.0 / 4.0 * (1.0 / 9.0) + 2.0 / 3.0));
        assert!(close(b.upper_from_rho_last, 1.0));
        assert!(close(b.lower, 1.0) && close(b.upper, 1.0));
    }

    #[test]
    fn extreme_eig_bounds_k4() {
        let b = randic_bounds_from_extreme_eigs(4, 4.0 / 3.0, 4.0 / 3.0).unwrap();
        assert!(close(b.lower, 2.0 / 3.0));
        assert!(close(b.upper, 2.0 / 3.0));
    }

    #[test]
    fn extreme_eig_rejects_bad_input() {
        assert!(randic_bounds_from_extreme_eigs(2, 2.0, 0.5).is_err());
        assert!(randic_bounds_from_extreme_eigs(4, 1.0, 0.5).is_err());
        assert!(randic_bounds_from_extreme_eigs(4, 2.0, -0.5).is_err());
    }

    #[test]
    fn extreme_lower_dominates_global() {
        for seed in 0..50 {
            let g = gen_random_connected(7, 0.5, seed).unwrap();
            let s = crate::spectral::normalized_laplacian_spectrum(&g).unwrap();
            let b = randic_bounds_from_extreme_eigs(7, s.rho(1), s.rho(6)).unwrap();
            assert!(b.lower >= randic_lower_global(7) - 1e-12);
            let r = randic_minus_one(&g).unwrap();
            assert!(b.lower - 1e-9 <= r && r <= b.upper + 1e-9);
        }
    }
}
