use crate::error::Result;
use crate::extract::extract;
use crate::graph::{SimpleGraph, TwoGraphView};
use crate::numeric::Interval;

use super::report::BoundReport;
use super::{short, ParameterAlternative};

const ID: &str = "main_th_consequence";

/// Checks `ē ≤ δg + 2/3` for a ²graph already known to be σ-separable
/// (`separable`) or not. Preconditions that fail give NOT_APPLICABLE.
pub fn main_th_consequence_for(view: &TwoGraphView, separable: bool, alt: &ParameterAlternative) -> BoundReport {
    let g = Interval::exact(view.excess());
    let e_bar = Interval::exact(view.e_bar());
    let params = format!("alt={}; k={}; g={}; e_bar={}", alt.id, view.k(), short(&g), short(&e_bar));
    if !separable {
        return BoundReport::not_applicable(ID, format!("{params}; not sigma-separable"));
    }
    if !alt.gamma.certainly_le(&g) {
        return BoundReport::not_applicable(ID, format!("{params}; g below gamma={}", short(&alt.gamma)));
    }
    let rhs = &(&alt.delta * &g) + &Interval::ratio(2, 3);
    BoundReport::new(ID, params, e_bar, rhs, alt.tolerance())
}

/// Runs the extractor with the alternative's `σ` and checks the edge bound
/// when no large `(k+1)`-connected subgraph exists.
pub fn main_th_consequence_check(g: &SimpleGraph, k: usize, alt: &ParameterAlternative) -> Result<BoundReport> {
    let separable = !extract(g, k, &alt.sigma)?.is_found();
    let view = TwoGraphView::new(g.clone(), k)?;
    Ok(main_th_consequence_for(&view, separable, alt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::build_extremal;
    use crate::fixtures;
    use crate::verdict::Verdict;

    #[test]
    fn examples() {
        let alt1 = ParameterAlternative::alt1().unwrap();
        let r = main_th_consequence_check(&fixtures::diamond(), 2, &alt1).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.lhs, Interval::ratio(7, 2));
        assert!((r.rhs.to_f64() - 4.299_660).abs() < 1e-5);

        let alt3 = ParameterAlternative::alt3().unwrap();
        let r = main_th_consequence_check(&build_extremal(2, 2, 2).unwrap().graph, 2, &alt3).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);

        let r = main_th_consequence_check(&SimpleGraph::cycle(8), 2, &alt3).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.lhs, Interval::int(6));
        assert_eq!(r.rhs, Interval::ratio(3109 * 3, 1000) + Interval::ratio(2, 3));
    }
}
