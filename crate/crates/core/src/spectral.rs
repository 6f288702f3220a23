//! Normalized Laplacian construction and a dense symmetric eigensolver
//! (cyclic Jacobi) with a certified residual contract.

use thiserror::Error;

use crate::graph::Graph;

/// Residual contract for the eigensolver: each eigenpair must satisfy
/// `‖Mv − λv‖₂ ≤ RESIDUAL_FACTOR · n · max|entry|`.
pub const RESIDUAL_FACTOR: f64 = 1e-10;

/// The smallest normalized Laplacian eigenvalue of a connected graph must be
/// within this distance of zero before it is clamped to exactly 0.
pub const KERNEL_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {0} has degree zero")]
    ZeroDegree(usize),
    #[error("matrix contains a non-finite entry")]
    NonFinite,
    #[error("Jacobi sweep limit reached without convergence")]
    NoConvergence,
    #[error("eigenpair residual {residual:.3e} exceeds contract {bound:.3e}")]
    ResidualContract { residual: f64, bound: f64 },
    #[error("smallest eigenvalue {0:.3e} not within {KERNEL_TOL:.0e} of zero")]
    KernelMissing(f64),
    #[error("eigenvalue {0:.6} outside [0, 2] beyond tolerance")]
    OutOfRange(f64),
}

/// Dense real symmetric matrix, symmetrized via `(M + Mᵀ)/2` at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> SymMatrix {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = f(i, j);
            }
        }
        let mut m = SymMatrix { n, data };
        m.symmetrize();
        m
    }

    fn symmetrize(&mut self) {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                let avg = 0.5 * (self.data[i * n + j] + self.data[j * n + i]);
                self.data[i * n + j] = avg;
                self.data[j * n + i] = avg;
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }
}

/// Descending-sorted real eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-indexed access matching the ρ_i convention: `rho(1)` is the largest.
    pub fn rho(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.values
    }
}

/// `L* = I − D^(−1/2) A D^(−1/2)`: 1 on the diagonal, `−1/√(dᵢdⱼ)` on edges.
pub fn normalized_laplacian(g: &Graph) -> Result<SymMatrix, SpectralError> {
    if let Some(v) = g.degrees().iter().position(|&d| d == 0) {
        return Err(SpectralError::ZeroDegree(v));
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let n = g.n();
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        data[i * n + i] = 1.0;
    }
    for &(u, v) in g.edges() {
        let w = -1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt();
        data[u * n + v] = w;
        data[v * n + u] = w;
    }
    Ok(SymMatrix { n, data })
}

/// Full eigenvalue set of a symmetric matrix via cyclic Jacobi rotations,
/// iterated until the off-diagonal norm falls below `1e-12` relative to the
/// largest entry. Every eigenpair is checked against the residual contract.
pub fn eigenvalues_symmetric(m: &SymMatrix) -> Result<Spectrum, SpectralError> {
    if m.data.iter().any(|x| !x.is_finite()) {
        return Err(SpectralError::NonFinite);
    }
    let n = m.n;
    if n == 0 {
        return Ok(Spectrum { values: Vec::new() });
    }
    let scale = m.max_abs();
    let mut a = m.data.clone();
    let mut vecs = vec![0.0; n * n];
    for i in 0..n {
        vecs[i * n + i] = 1.0;
    }

    let off_tol = 1e-12 * scale.max(f64::MIN_POSITIVE);
    let mut converged = false;
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() <= off_tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // Column rotation A <- A·J, then row rotation A <- Jᵀ·A.
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = vecs[k * n + p];
                    let vkq = vecs[k * n + q];
                    vecs[k * n + p] = c * vkp - s * vkq;
                    vecs[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        return Err(SpectralError::NoConvergence);
    }

    let eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let bound = RESIDUAL_FACTOR * n as f64 * scale;
    for j in 0..n {
        let mut sq = 0.0;
        for i in 0..n {
            let mut mv = 0.0;
            for k in 0..n {
                mv += m.data[i * n + k] * vecs[k * n + j];
            }
            let r = mv - eigs[j] * vecs[i * n + j];
            sq += r * r;
        }
        let residual = sq.sqrt();
        if residual > bound {
            return Err(SpectralError::ResidualContract { residual, bound });
        }
    }

    let mut values = eigs;
    values.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(Spectrum { values })
}

/// Spectrum of the normalized Laplacian of a connected graph, with the
/// smallest eigenvalue clamped to exactly 0 after checking it is within
/// [`KERNEL_TOL`] of zero, and the standard [0, 2] range enforced.
pub fn normalized_laplacian_spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    let l = normalized_laplacian(g)?;
    let mut s = eigenvalues_symmetric(&l)?;
    let n = s.len();
    let smallest = s.values[n - 1];
    if smallest.abs() > KERNEL_TOL {
        return Err(SpectralError::KernelMissing(smallest));
    }
    s.values[n - 1] = 0.0;
    for &v in &s.values {
        if !(-KERNEL_TOL..=2.0 + KERNEL_TOL).contains(&v) {
            return Err(SpectralError::OutOfRange(v));
        }
    }
    Ok(s)
}

/// Residuals of the trace identities `Σρᵢ = n` and `Σρᵢ² = n + 2R₋₁`
/// over the nonzero part of the spectrum.
pub fn moment_check(s: &Spectrum, r_minus_one: f64) -> (f64, f64) {
    let n = s.len() as f64;
    let sum: f64 = s.values.iter().sum();
    let sum_sq: f64 = s.values.iter().map(|x| x * x).sum();
    ((sum - n).abs(), (sum_sq - (n + 2.0 * r_minus_one)).abs())
}
