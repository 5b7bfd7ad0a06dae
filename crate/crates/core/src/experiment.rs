//! Randomized test of the degree threshold: graphs filled with random edges
//! until the average degree reaches `δk − 1` must contain a large
//! `(k+1)`-connected subgraph.

use std::io::Write;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::ParameterAlternative;
use crate::connectivity::is_k1_connected;
use crate::error::{Error, Result};
use crate::extract::{check_density_implication, size_threshold, DensityOutcome};
use crate::graph::{SimpleGraph, Vertex};
use crate::numeric::format_decimal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub trials: usize,
    pub k: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub alt: u8,
    pub seed: u64,
    /// Fill the `elapsed_ms` column. Off by default so that equal seeds give
    /// byte-identical output.
    pub timing: bool,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Parameter("trials must be at least 1".into()));
        }
        if self.k == 0 {
            return Err(Error::Parameter("k must be positive".into()));
        }
        if self.n_min > self.n_max {
            return Err(Error::Parameter(format!("empty vertex range [{}, {}]", self.n_min, self.n_max)));
        }
        ParameterAlternative::get(self.alt)?;
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TrialOutcome {
    Found,
    /// The threshold was reached but no subgraph was found: a failure.
    Separable,
    /// Even the complete graph on `n` vertices is below the threshold.
    NotApplicableSaturated,
    BudgetExceeded,
    /// A returned subgraph did not re-verify.
    InvalidResult,
}

impl TrialOutcome {
    pub fn is_failure(self) -> bool {
        !matches!(self, TrialOutcome::Found | TrialOutcome::NotApplicableSaturated)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentRow {
    pub trial: usize,
    pub n: usize,
    pub e: usize,
    pub avg_degree: String,
    pub outcome: TrialOutcome,
    pub h_size: Option<usize>,
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentSummary {
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentSummary {
    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.outcome.is_failure()).count()
    }

    pub fn count(&self, outcome: TrialOutcome) -> usize {
        self.rows.iter().filter(|r| r.outcome == outcome).count()
    }
}

/// Fewest edges `m` with `2m/n` at or above the upper end of the threshold.
fn edges_needed(n: usize, threshold_hi: &BigRational) -> BigInt {
    let need = threshold_hi * BigRational::from_integer(n.into()) / BigRational::from_integer(2.into());
    need.ceil().to_integer().max(BigInt::from(0))
}

pub fn run_trial(cfg: &ExperimentConfig, alt: &ParameterAlternative, trial: usize) -> Result<ExperimentRow> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(trial as u64));
    let n = rng.gen_range(cfg.n_min..=cfg.n_max);
    let max_edges = n * n.saturating_sub(1) / 2;
    let threshold = alt.degree_threshold(cfg.k);
    let needed = edges_needed(n, threshold.hi());

    let elapsed = |start: Instant| cfg.timing.then(|| start.elapsed().as_millis() as u64);
    let degree_text = |e: usize| {
        if n == 0 {
            "0".to_string()
        } else {
            format_decimal(&BigRational::new((2 * e).into(), n.into()), 6)
        }
    };

    let m = match needed.to_usize() {
        Some(m) if m <= max_edges => m,
        _ => {
            return Ok(ExperimentRow {
                trial,
                n,
                e: max_edges,
                avg_degree: degree_text(max_edges),
                outcome: TrialOutcome::NotApplicableSaturated,
                h_size: None,
                elapsed_ms: elapsed(start),
            })
        }
    };

    let mut pairs: Vec<(Vertex, Vertex)> = Vec::with_capacity(max_edges);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs.shuffle(&mut rng);
    let g = SimpleGraph::from_edges(n, &pairs[..m])?;

    let (outcome, h_size) = match check_density_implication(&g, cfg.k, alt) {
        Err(Error::BudgetExceeded { .. }) => (TrialOutcome::BudgetExceeded, None),
        Err(e) => return Err(e),
        Ok(report) => match (report.outcome, report.h) {
            (DensityOutcome::Found, Some(h)) => {
                let sub = g.induced_subgraph(h.iter().copied())?;
                let large = h.len() > size_threshold(cfg.k, &alt.sigma)?;
                if large && is_k1_connected(&sub.graph, cfg.k) {
                    (TrialOutcome::Found, Some(h.len()))
                } else {
                    (TrialOutcome::InvalidResult, Some(h.len()))
                }
            }
            (DensityOutcome::Skipped, _) => {
                return Err(Error::Malformed(format!("trial {trial} stopped below the threshold")));
            }
            _ => (TrialOutcome::Separable, None),
        },
    };
    Ok(ExperimentRow {
        trial,
        n,
        e: g.edge_count(),
        avg_degree: degree_text(g.edge_count()),
        outcome,
        h_size,
        elapsed_ms: elapsed(start),
    })
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentSummary> {
    cfg.validate()?;
    let alt = ParameterAlternative::get(cfg.alt)?;
    let mut rows = Vec::with_capacity(cfg.trials);
    for trial in 0..cfg.trials {
        let row = run_trial(cfg, &alt, trial)?;
        log::debug!("trial {trial}: n={} e={} {:?}", row.n, row.e, row.outcome);
        rows.push(row);
    }
    Ok(ExperimentSummary { rows })
}

pub fn write_rows<W: Write>(rows: &[ExperimentRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(trials: usize, n: (usize, usize), k: usize, alt: u8) -> ExperimentConfig {
        ExperimentConfig { trials, k, n_min: n.0, n_max: n.1, alt, seed: 42, timing: false }
    }

    #[test]
    fn single_trial_finds() {
        let s = run_experiment(&cfg(1, (20, 20), 2, 3)).unwrap();
        let row = &s.rows[0];
        assert_eq!(row.outcome, TrialOutcome::Found);
        assert!(row.h_size.unwrap() >= 3);
        assert_eq!(row.e, 53);
        assert_eq!(s.failures(), 0);
    }

    #[test]
    fn saturation() {
        let s = run_experiment(&cfg(1, (5, 5), 2, 3)).unwrap();
        assert_eq!(s.rows[0].outcome, TrialOutcome::NotApplicableSaturated);
        assert_eq!(s.rows[0].e, 10);
        assert_eq!(s.failures(), 0);
    }

    #[test]
    fn config_errors() {
        assert!(run_experiment(&cfg(0, (15, 50), 2, 3)).is_err());
        assert!(run_experiment(&cfg(1, (20, 10), 2, 3)).is_err());
        assert!(run_experiment(&cfg(1, (15, 50), 2, 7)).is_err());
    }

    #[test]
    fn output_is_reproducible() {
        let c = cfg(5, (15, 30), 2, 1);
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_rows(&run_experiment(&c).unwrap().rows, &mut a).unwrap();
        write_rows(&run_experiment(&c).unwrap().rows, &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with("trial,n,e,avg_degree,outcome,h_size,elapsed_ms\n"));
    }
}
