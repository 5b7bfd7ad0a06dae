//! Certificates for `q(x) ≥ 0` on an interval when `q` has degree ≤ 2.

use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::Interval;
use crate::verdict::Verdict;

use super::scalar::Poly;

pub const GRID_STEPS: u32 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateMethod {
    /// Both endpoints are non-negative and `q` is concave, so the set where
    /// `q ≥ 0` is an interval containing both.
    Endpoints,
    /// `q` may be convex; every point of a dense grid was checked.
    Grid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyCertificate {
    pub verdict: Verdict,
    pub method: CertificateMethod,
    /// Enclosure of the smallest value found.
    pub min_margin: Interval,
    /// Point where it was found.
    pub argmin: Interval,
}

/// Certifies `q ≥ −tolerance` on `[lo, hi]`, judged at the lower end of
/// every enclosure.
pub fn certify_poly_on_interval(
    q: &Poly,
    lo: &Interval,
    hi: &Interval,
    tolerance: &BigRational,
) -> Result<PolyCertificate> {
    if q.degree() > 2 {
        return Err(Error::Domain(format!("degree {} exceeds 2", q.degree())));
    }
    if hi.certainly_lt(lo) {
        return Err(Error::Domain(format!("empty interval [{lo}, {hi}]")));
    }
    let ok = |v: &Interval| v.lo() >= &-tolerance.clone();
    let at_lo = q.eval(lo);
    let at_hi = q.eval(hi);
    let (mut min_margin, mut argmin) =
        if at_lo.lo() <= at_hi.lo() { (at_lo.clone(), lo.clone()) } else { (at_hi.clone(), hi.clone()) };

    let concave = !q.coeff(2).hi().is_positive();
    if concave {
        let verdict = Verdict::from_bool(ok(&at_lo) && ok(&at_hi));
        return Ok(PolyCertificate { verdict, method: CertificateMethod::Endpoints, min_margin, argmin });
    }
    let step = &(hi - lo) / &Interval::int(GRID_STEPS as i64);
    for j in 1..GRID_STEPS {
        let x = lo + &(&step * &Interval::int(j as i64));
        let v = q.eval(&x);
        if v.lo() < min_margin.lo() {
            min_margin = v;
            argmin = x;
        }
    }
    let verdict = Verdict::from_bool(ok(&min_margin));
    Ok(PolyCertificate { verdict, method: CertificateMethod::Grid, min_margin, argmin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn poly(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&v| Interval::int(v)).collect())
    }

    #[test]
    fn linear_fails_at_lower_end() {
        let c = certify_poly_on_interval(&poly(&[-1, 1]), &Interval::int(0), &Interval::int(2), &BigRational::zero())
            .unwrap();
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.min_margin, Interval::int(-1));
        assert_eq!(c.argmin, Interval::int(0));
    }

    #[test]
    fn convex_dip_is_caught_by_grid() {
        // (x − 1)² − 1/100 on [0, 2]: endpoints positive, negative near 1
        let mut q = poly(&[1, -2, 1]);
        q = q - Poly::new(vec![Interval::ratio(1, 100)]);
        let c = certify_poly_on_interval(&q, &Interval::int(0), &Interval::int(2), &BigRational::zero()).unwrap();
        assert_eq!(c.method, CertificateMethod::Grid);
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.argmin, Interval::int(1));
    }

    #[test]
    fn concave_uses_endpoints() {
        // (x − 1)(3 − x)
        let c = certify_poly_on_interval(&poly(&[-3, 4, -1]), &Interval::int(1), &Interval::int(3), &BigRational::zero())
            .unwrap();
        assert_eq!(c.method, CertificateMethod::Endpoints);
        assert_eq!(c.verdict, Verdict::Pass);
        assert_eq!(c.min_margin, Interval::zero());
    }

    #[test]
    fn rejects_bad_input() {
        let z = BigRational::zero();
        assert!(certify_poly_on_interval(&poly(&[0, 1]), &Interval::int(2), &Interval::int(1), &z).is_err());
        assert!(certify_poly_on_interval(&poly(&[0, 0, 0, 1]), &Interval::int(0), &Interval::int(1), &z).is_err());
    }
}
