use num_rational::BigRational;
use serde::Serialize;

use crate::bounds::ParameterAlternative;
use crate::error::Result;
use crate::graph::{average_degree, SimpleGraph, Vertex};
use crate::numeric::Interval;
use crate::verdict::Verdict;

use super::{extract, ExtractionResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DensityOutcome {
    Found,
    Separable,
    /// The graph is below the degree threshold and the extractor was not run.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub avg_degree: BigRational,
    /// `δk − 1`.
    pub threshold: Interval,
    pub outcome: DensityOutcome,
    pub h: Option<Vec<Vertex>>,
    pub verdict: Verdict,
}

impl DensityReport {
    pub fn h_size(&self) -> Option<usize> {
        self.h.as_ref().map(Vec::len)
    }
}

/// A graph with average degree at least `δk − 1` must contain a
/// `(k+1)`-connected subgraph on more than `(1+σ)k` vertices. The claim is
/// tested only when the degree clears every point of the threshold
/// enclosure; otherwise the report is NOT_APPLICABLE.
pub fn check_density_implication(g: &SimpleGraph, k: usize, alt: &ParameterAlternative) -> Result<DensityReport> {
    let threshold = alt.degree_threshold(k);
    let avg_degree = if g.n() == 0 { BigRational::from_integer(0.into()) } else { average_degree(g)? };
    if &avg_degree < threshold.hi() {
        return Ok(DensityReport {
            avg_degree,
            threshold,
            outcome: DensityOutcome::Skipped,
            h: None,
            verdict: Verdict::NotApplicable,
        });
    }
    let (outcome, h) = match extract(g, k, &alt.sigma)? {
        ExtractionResult::Found { vertices, .. } => (DensityOutcome::Found, Some(vertices)),
        ExtractionResult::Separable { .. } => (DensityOutcome::Separable, None),
    };
    let verdict = Verdict::from_bool(outcome == DensityOutcome::Found);
    Ok(DensityReport { avg_degree, threshold, outcome, h, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::build_extremal;
    use crate::graph::rational;

    #[test]
    fn examples() {
        let alt3 = ParameterAlternative::alt3().unwrap();
        let r = check_density_implication(&SimpleGraph::complete(7), 2, &alt3).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.h_size(), Some(7));
        assert_eq!(r.avg_degree, rational(6, 1));

        let alt1 = ParameterAlternative::alt1().unwrap();
        let e = build_extremal(2, 2, 2).unwrap();
        let r = check_density_implication(&e.graph, 2, &alt1).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert_eq!(r.avg_degree, rational(22, 5));
        assert!(!extract(&e.graph, 2, &Interval::one()).unwrap().is_found());

        for alt in ParameterAlternative::all() {
            let r = check_density_implication(&SimpleGraph::empty(6), 3, &alt).unwrap();
            assert_eq!(r.verdict, Verdict::NotApplicable);
        }
    }
}
