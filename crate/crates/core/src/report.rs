//! Per-graph evaluation of every bound family, with pass flags and signed
//! violation margins, serializable to JSON, CSV, and plain text.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eigbounds::{self, EigBoundsError, Method};
use crate::graph::Graph;
use crate::randic::{self, ExtremeEigRandicBounds, RandicError};
use crate::spectral::{self, SpectralError};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Randic(#[from] RandicError),
    #[error(transparent)]
    EigBounds(#[from] EigBoundsError),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GraphInfo {
    pub n: usize,
    pub m: usize,
    pub degree_sequence: Vec<usize>,
    pub source: String,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct Identities {
    pub sum_residual: f64,
    pub sum_sq_residual: f64,
}

/// One evaluated enclosure of an eigenvalue. `upper: None` marks the
/// one-sided classical bound at index 1.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BoundRow {
    pub index: usize,
    pub method: Method,
    pub lower: f64,
    pub upper: Option<f64>,
    pub value: f64,
    pub pass: bool,
    pub margin_lower: f64,
    pub margin_upper: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RandicBoundsReport {
    pub value: f64,
    pub degree_lower: f64,
    pub degree_upper: f64,
    pub global_lower: f64,
    /// Bounds from the extreme eigenvalues; absent for n = 2.
    pub extreme: Option<ExtremeEigRandicBounds>,
}

/// Worst signed violation per inequality family: positive means the family is
/// violated by that amount, negative is the slack to the nearest equality.
/// `None` marks a family not applicable at this vertex count.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct Violations {
    pub identities: f64,
    pub classical: f64,
    pub randic_degree: f64,
    pub randic_global: f64,
    pub theorem: Option<f64>,
    pub corollary_degree: Option<f64>,
    pub randic_extreme_lower: Option<f64>,
    pub randic_extreme_upper: Option<f64>,
    pub nesting: Option<f64>,
    pub dominance: Option<f64>,
}

pub const FAMILY_NAMES: [&str; 10] = [
    "identities",
    "classical",
    "randic_degree",
    "randic_global",
    "theorem",
    "corollary_degree",
    "randic_extreme_lower",
    "randic_extreme_upper",
    "nesting",
    "dominance",
];

impl Violations {
    /// Violations in [`FAMILY_NAMES`] order; not-applicable families yield
    /// `None`.
    pub fn as_array(&self) -> [Option<f64>; 10] {
        [
            Some(self.identities),
            Some(self.classical),
            Some(self.randic_degree),
            Some(self.randic_global),
            self.theorem,
            self.corollary_degree,
            self.randic_extreme_lower,
            self.randic_extreme_upper,
            self.nesting,
            self.dominance,
        ]
    }

    pub fn worst(&self) -> f64 {
        self.as_array()
            .iter()
            .flatten()
            .fold(f64::NEG_INFINITY, |acc, &v| acc.max(v))
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct Flags {
    pub identities: bool,
    pub classical: bool,
    pub randic_degree: bool,
    pub randic_global: bool,
    pub theorem: bool,
    pub corollary_degree: bool,
    pub randic_extreme_lower: bool,
    pub randic_extreme_upper: bool,
    pub nesting: bool,
    pub dominance: bool,
}

impl Flags {
    pub fn all_pass(&self) -> bool {
        self.identities
            && self.classical
            && self.randic_degree
            && self.randic_global
            && self.theorem
            && self.corollary_degree
            && self.randic_extreme_lower
            && self.randic_extreme_upper
            && self.nesting
            && self.dominance
    }

    fn from_violations(v: &Violations, tol: f64) -> Flags {
        let ok = |x: Option<f64>| x.is_none_or(|x| x <= tol);
        Flags {
            identities: v.identities <= tol,
            classical: v.classical <= tol,
            randic_degree: v.randic_degree <= tol,
            randic_global: v.randic_global <= tol,
            theorem: ok(v.theorem),
            corollary_degree: ok(v.corollary_degree),
            randic_extreme_lower: ok(v.randic_extreme_lower),
            randic_extreme_upper: ok(v.randic_extreme_upper),
            nesting: ok(v.nesting),
            dominance: ok(v.dominance),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub graph: GraphInfo,
    pub spectrum: Vec<f64>,
    pub randic: f64,
    pub identities: Identities,
    pub bounds: Vec<BoundRow>,
    pub randic_bounds: RandicBoundsReport,
    pub violations: Violations,
    pub flags: Flags,
    pub tolerance: f64,
}

fn row(method: Method, index: usize, lower: f64, upper: f64, value: f64, tol: f64) -> BoundRow {
    let unbounded = upper.is_infinite();
    let pass = value >= lower - tol && (unbounded || value <= upper + tol);
    BoundRow {
        index,
        method,
        lower,
        upper: if unbounded { None } else { Some(upper) },
        value,
        pass,
        margin_lower: value - lower,
        margin_upper: if unbounded { None } else { Some(upper - value) },
    }
}

/// Evaluates the full bound suite for a connected graph on n ≥ 2 vertices.
pub fn build_report(g: &Graph, tolerance: f64, source: &str) -> Result<Report, ReportError> {
    let spectrum = spectral::normalized_laplacian_spectrum(g)?;
    let r = randic::randic_minus_one(g)?;
    let (sum_residual, sum_sq_residual) = spectral::moment_check(&spectrum, r);
    let n = g.n();
    let nf = n as f64;
    let mean = nf / (nf - 1.0);
    let rho1 = spectrum.rho(1);
    let rho_last = spectrum.rho(n - 1);

    let mut bounds = Vec::new();
    for iv in eigbounds::classical_intervals(n) {
        bounds.push(row(iv.method, iv.index, iv.lower, iv.upper, spectrum.rho(iv.index), tolerance));
    }

    let (deg_lo, deg_hi) = randic::randic_bounds_degrees(g)?;
    let global_lower = randic::randic_lower_global(n);

    let mut theorem_viol: Option<f64> = None;
    let mut corollary_viol: Option<f64> = None;
    let mut nesting_viol: Option<f64> = None;
    let mut dominance_viol: Option<f64> = None;
    let mut extreme: Option<ExtremeEigRandicBounds> = None;
    let mut extreme_lower_viol: Option<f64> = None;
    let mut extreme_upper_viol: Option<f64> = None;

    if n >= 3 {
        let d_max = g.max_degree();
        let d_min = g.min_degree();
        let mut th_worst = f64::NEG_INFINITY;
        let mut cor_worst = f64::NEG_INFINITY;
        let mut nest_worst = f64::NEG_INFINITY;
        for i in 1..n {
            let value = spectrum.rho(i);
            let th = eigbounds::theorem_bounds(n, r, i)?;
            let cor = eigbounds::corollary_degree_bounds(n, d_max, d_min, i)?;
            th_worst = th_worst.max(th.lower - value).max(value - th.upper);
            cor_worst = cor_worst.max(cor.lower - value).max(value - cor.upper);
            nest_worst = nest_worst.max(cor.lower - th.lower).max(th.upper - cor.upper);
            bounds.push(row(th.method, i, th.lower, th.upper, value, tolerance));
            bounds.push(row(cor.method, i, cor.lower, cor.upper, value, tolerance));
        }
        theorem_viol = Some(th_worst);
        corollary_viol = Some(cor_worst);
        nesting_viol = Some(nest_worst);

        let (m1, m2) = eigbounds::dominance_check(n, r)?;
        dominance_viol = Some((-m1).max(-m2));

        let ex = randic::randic_bounds_from_extreme_eigs(n, rho1, rho_last)?;
        extreme_lower_viol = Some(ex.lower - r);
        extreme_upper_viol = Some(r - ex.upper);
        extreme = Some(ex);
    }

    let violations = Violations {
        identities: sum_residual.max(sum_sq_residual),
        classical: (mean - rho1).max(rho_last - mean).max(-rho_last),
        randic_degree: (deg_lo - r).max(r - deg_hi),
        randic_global: global_lower - r,
        theorem: theorem_viol,
        corollary_degree: corollary_viol,
        randic_extreme_lower: extreme_lower_viol,
        randic_extreme_upper: extreme_upper_viol,
        nesting: nesting_viol,
        dominance: dominance_viol,
    };
    let flags = Flags::from_violations(&violations, tolerance);

    Ok(Report {
        graph: GraphInfo {
            n,
            m: g.m(),
            degree_sequence: g.degree_sequence(),
            source: source.to_string(),
        },
        spectrum: spectrum.into_vec(),
        randic: r,
        identities: Identities { sum_residual, sum_sq_residual },
        bounds,
        randic_bounds: RandicBoundsReport {
            value: r,
            degree_lower: deg_lo,
            degree_upper: deg_hi,
            global_lower,
            extreme,
        },
        violations,
        flags,
        tolerance,
    })
}

/// Full-precision float formatting used by all CSV output, so repeated runs
/// are byte-identical.
pub fn fmt_f64(x: f64) -> String {
    format!("{:.17e}", x)
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "unbounded".to_string(), fmt_f64)
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.flags.all_pass()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Header for [`Report::to_csv`]: one row per (graph, index, method)
    /// bound plus a trailing summary row with method `summary`.
    pub const CSV_HEADER: &'static str =
        "graph,n,index,method,lower,upper,value,pass,margin_lower,margin_upper";

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", Report::CSV_HEADER).unwrap();
        for b in &self.bounds {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                self.graph.source,
                self.graph.n,
                b.index,
                b.method.as_str(),
                fmt_f64(b.lower),
                fmt_opt(b.upper),
                fmt_f64(b.value),
                b.pass,
                fmt_f64(b.margin_lower),
                fmt_opt(b.margin_upper),
            )
            .unwrap();
        }
        writeln!(
            out,
            "{},{},,summary,{},{},{},{},{},",
            self.graph.source,
            self.graph.n,
            fmt_f64(self.randic_bounds.degree_lower),
            fmt_f64(self.randic_bounds.degree_upper),
            fmt_f64(self.randic),
            self.all_pass(),
            fmt_f64(self.violations.worst()),
        )
        .unwrap();
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "graph: n={} m={} degrees={:?} ({})",
            self.graph.n, self.graph.m, self.graph.degree_sequence, self.graph.source
        )
        .unwrap();
        let spec: Vec<String> = self.spectrum.iter().map(|v| format!("{:.12}", v)).collect();
        writeln!(out, "spectrum: [{}]", spec.join(", ")).unwrap();
        writeln!(out, "R_-1: {:.12}", self.randic).unwrap();
        writeln!(
            out,
            "trace identity residuals: {:.3e}, {:.3e}",
            self.identities.sum_residual, self.identities.sum_sq_residual
        )
        .unwrap();
        writeln!(out, "{:<6} {:>5} {:>22} {:>22} {:>22} {:>6}", "method", "i", "lower", "value", "upper", "pass").unwrap();
        for b in &self.bounds {
            writeln!(
                out,
                "{:<6} {:>5} {:>22.15} {:>22.15} {:>22} {:>6}",
                match b.method {
                    Method::Classical => "cls",
                    Method::Theorem => "thm",
                    Method::CorollaryDegree => "cor",
                },
                b.index,
                b.lower,
                b.value,
                b.upper.map_or_else(|| "unbounded".into(), |u| format!("{:.15}", u)),
                b.pass,
            )
            .unwrap();
        }
        writeln!(
            out,
            "R_-1 degree bounds: [{:.12}, {:.12}]   global lower: {:.12}",
            self.randic_bounds.degree_lower,
            self.randic_bounds.degree_upper,
            self.randic_bounds.global_lower,
        )
        .unwrap();
        if let Some(ex) = &self.randic_bounds.extreme {
            writeln!(
                out,
                "R_-1 extreme-eigenvalue bounds: [{:.12}, {:.12}]",
                ex.lower, ex.upper
            )
            .unwrap();
        }
        writeln!(out, "all pass: {}", self.all_pass()).unwrap();
        out
    }
}
