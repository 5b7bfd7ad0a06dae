use std::io::Write;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::numeric::Interval;
use crate::verdict::Verdict;

/// One evaluated proof obligation. `margin = rhs − lhs`; the verdict is
/// PASS when the lower end of the margin enclosure is at least
/// `−tolerance`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub id: String,
    pub params: String,
    pub lhs: Interval,
    pub rhs: Interval,
    pub margin: Interval,
    pub tolerance: BigRational,
    pub verdict: Verdict,
}

impl BoundReport {
    pub fn new(id: impl Into<String>, params: impl Into<String>, lhs: Interval, rhs: Interval, tolerance: BigRational) -> Self {
        let margin = &rhs - &lhs;
        let verdict = Verdict::from_bool(margin.lo() >= &-tolerance.clone());
        BoundReport { id: id.into(), params: params.into(), lhs, rhs, margin, tolerance, verdict }
    }

    /// Like [`BoundReport::new`] but requires `lhs < rhs` outright.
    pub fn strict(id: impl Into<String>, params: impl Into<String>, lhs: Interval, rhs: Interval) -> Self {
        let mut r = Self::new(id, params, lhs, rhs, BigRational::zero());
        r.verdict = Verdict::from_bool(r.margin.lo().is_positive());
        r
    }

    pub fn not_applicable(id: impl Into<String>, params: impl Into<String>) -> Self {
        BoundReport {
            id: id.into(),
            params: params.into(),
            lhs: Interval::zero(),
            rhs: Interval::zero(),
            margin: Interval::zero(),
            tolerance: BigRational::zero(),
            verdict: Verdict::NotApplicable,
        }
    }

    pub fn row(&self) -> BoundRow {
        let na = self.verdict == Verdict::NotApplicable;
        let num = |x: &Interval| if na { String::new() } else { format!("{:.12}", x.to_f64()) };
        BoundRow {
            obligation_id: self.id.clone(),
            params: self.params.clone(),
            lhs: num(&self.lhs),
            rhs: num(&self.rhs),
            margin: if na { String::new() } else { format!("{:.6e}", self.margin.lo_f64()) },
            verdict: self.verdict,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub obligation_id: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    /// Lower end of the margin enclosure.
    pub margin: String,
    pub verdict: Verdict,
}

pub fn write_csv<W: Write>(reports: &[BoundReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        w.serialize(r.row())?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonReport<'a> {
    obligation_id: &'a str,
    params: &'a str,
    lhs: f64,
    rhs: f64,
    margin: f64,
    margin_lower: String,
    tolerance: String,
    verdict: Verdict,
}

pub fn write_json<W: Write>(reports: &[BoundReport], out: W) -> Result<()> {
    let rows: Vec<JsonReport> = reports
        .iter()
        .map(|r| JsonReport {
            obligation_id: &r.id,
            params: &r.params,
            lhs: r.lhs.to_f64(),
            rhs: r.rhs.to_f64(),
            margin: r.margin.lo_f64(),
            margin_lower: r.margin.lo().to_string(),
            tolerance: r.tolerance.to_string(),
            verdict: r.verdict,
        })
        .collect();
    serde_json::to_writer_pretty(out, &rows)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_and_rows() {
        let r = BoundReport::new("x", "p", Interval::int(2), Interval::int(3), BigRational::zero());
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.margin, Interval::int(1));
        let r = BoundReport::new("x", "p", Interval::int(3), Interval::int(3), BigRational::zero());
        assert_eq!(r.verdict, Verdict::Pass);
        let r = BoundReport::strict("x", "p", Interval::int(3), Interval::int(3));
        assert_eq!(r.verdict, Verdict::Fail);
        let mut buf = Vec::new();
        write_csv(&[BoundReport::new("id", "g=1", Interval::int(1), Interval::ratio(3, 2), BigRational::zero())], &mut buf)
            .unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "obligation_id,params,lhs,rhs,margin,verdict\nid,g=1,1.000000000000,1.500000000000,5.000000e-1,PASS\n"
        );
    }
}
