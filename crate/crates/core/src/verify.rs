//! Verification campaigns: run the full bound suite over every labeled
//! connected graph at small n, or over seeded random connected graphs, and
//! emit a per-graph CSV plus an aggregate summary. Output is deterministic
//! and independent of worker scheduling.

use std::fmt;
use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{self, MAX_ENUM_N};
use crate::report::{self, Report, ReportError, FAMILY_NAMES};

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error("invalid campaign config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mode {
    Exhaustive { n: usize },
    Random { n: usize, trials: u64, edge_prob: f64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CampaignConfig {
    pub mode: Mode,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyStat {
    pub name: &'static str,
    /// Graphs for which this family was applicable.
    pub checked: u64,
    pub max_violation: f64,
    /// Graphs where some inequality in the family is within tolerance of
    /// equality.
    pub equalities: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignSummary {
    pub mode: String,
    pub graphs: u64,
    pub violations: u64,
    pub families: Vec<FamilyStat>,
}

impl fmt::Display for CampaignSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "campaign: {}", self.mode)?;
        writeln!(f, "graphs checked: {}", self.graphs)?;
        writeln!(f, "violations: {}", self.violations)?;
        writeln!(f, "{:<24} {:>9} {:>15} {:>11}", "family", "checked", "max_violation", "equalities")?;
        for fam in &self.families {
            writeln!(
                f,
                "{:<24} {:>9} {:>15.3e} {:>11}",
                fam.name, fam.checked, fam.max_violation, fam.equalities
            )?;
        }
        Ok(())
    }
}

pub struct CampaignOutcome {
    pub summary: CampaignSummary,
    pub csv: String,
}

pub const CAMPAIGN_CSV_HEADER: &str = "key,n,m,randic,rho_1,rho_last,residual_sum,residual_sum_sq,\
viol_identities,viol_classical,viol_randic_degree,viol_randic_global,viol_theorem,\
viol_corollary_degree,viol_randic_extreme_lower,viol_randic_extreme_upper,viol_nesting,\
viol_dominance,all_pass";

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn csv_row(key: &str, rep: &Report) -> String {
    let n = rep.graph.n;
    let spectrum = &rep.spectrum;
    let mut out = format!(
        "{},{},{},{},{},{},{},{}",
        key,
        n,
        rep.graph.m,
        report::fmt_f64(rep.randic),
        report::fmt_f64(spectrum[0]),
        report::fmt_f64(spectrum[n - 2]),
        report::fmt_f64(rep.identities.sum_residual),
        report::fmt_f64(rep.identities.sum_sq_residual),
    );
    for v in rep.violations.as_array() {
        match v {
            Some(v) => write!(out, ",{}", report::fmt_f64(v)).unwrap(),
            None => out.push(','),
        }
    }
    write!(out, ",{}", rep.all_pass()).unwrap();
    out
}

fn validate(cfg: &CampaignConfig) -> Result<(), CampaignError> {
    if cfg.tolerance <= 0.0 || cfg.tolerance.is_nan() {
        return Err(CampaignError::InvalidConfig("tolerance must be positive".into()));
    }
    match cfg.mode {
        Mode::Exhaustive { n } => {
            if !(2..=MAX_ENUM_N).contains(&n) {
                return Err(CampaignError::InvalidConfig(format!(
                    "exhaustive mode requires 2 <= n <= {}, got {}",
                    MAX_ENUM_N, n
                )));
            }
        }
        Mode::Random { n, trials, edge_prob, .. } => {
            if n < 2 {
                return Err(CampaignError::InvalidConfig("random mode requires n >= 2".into()));
            }
            if trials == 0 {
                return Err(CampaignError::InvalidConfig("trials must be >= 1".into()));
            }
            if edge_prob <= 0.0 || edge_prob > 1.0 || edge_prob.is_nan() {
                return Err(CampaignError::InvalidConfig(
                    "edge probability must lie in (0, 1]".into(),
                ));
            }
        }
    }
    Ok(())
}

type KeyedReport = Result<(String, Report), ReportError>;

/// Runs a campaign. Graphs are evaluated in parallel; rows are gathered in
/// the deterministic enumeration/trial order, so the CSV is byte-stable.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignOutcome, CampaignError> {
    validate(cfg)?;
    let tol = cfg.tolerance;

    let (mode_desc, per_graph): (String, Vec<KeyedReport>) =
        match cfg.mode {
            Mode::Exhaustive { n } => {
                let end = 1u64 << graph::pair_count(n);
                let rows = (0..end)
                    .into_par_iter()
                    .filter_map(|mask| {
                        let g = graph::graph_from_edge_mask(n, mask);
                        if !g.is_connected() {
                            return None;
                        }
                        Some(
                            report::build_report(&g, tol, &mask.to_string())
                                .map(|rep| (mask.to_string(), rep)),
                        )
                    })
                    .collect();
                (format!("exhaustive n={}", n), rows)
            }
            Mode::Random { n, trials, edge_prob, seed } => {
                let rows = (0..trials)
                    .into_par_iter()
                    .map(|t| {
                        let trial_seed = splitmix64(seed ^ splitmix64(t));
                        let g = graph::gen_random_connected(n, edge_prob, trial_seed)
                            .expect("validated parameters");
                        report::build_report(&g, tol, &t.to_string())
                            .map(|rep| (t.to_string(), rep))
                    })
                    .collect();
                (
                    format!("random n={} trials={} p={} seed={}", n, trials, edge_prob, seed),
                    rows,
                )
            }
        };

    let mut csv = String::from(CAMPAIGN_CSV_HEADER);
    csv.push('\n');
    let mut families: Vec<FamilyStat> = FAMILY_NAMES
        .iter()
        .map(|&name| FamilyStat { name, checked: 0, max_violation: f64::NEG_INFINITY, equalities: 0 })
        .collect();
    let mut graphs = 0u64;
    let mut violations = 0u64;

    for item in per_graph {
        let (key, rep) = item?;
        graphs += 1;
        if !rep.all_pass() {
            violations += 1;
        }
        for (stat, v) in families.iter_mut().zip(rep.violations.as_array()) {
            if let Some(v) = v {
                stat.checked += 1;
                stat.max_violation = stat.max_violation.max(v);
                if v >= -tol {
                    stat.equalities += 1;
                }
            }
        }
        csv.push_str(&csv_row(&key, &rep));
        csv.push('\n');
    }

    Ok(CampaignOutcome {
        summary: CampaignSummary { mode: mode_desc, graphs, violations, families },
        csv,
    })
}
