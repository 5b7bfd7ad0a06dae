//! The inequality instances behind each density theorem, encoded either as
//! a polynomial in one variable that must be non-negative on an interval or
//! as a single comparison of two numbers.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::numeric::Interval;

use super::certify::certify_poly_on_interval;
use super::functions::{general_case_bound_with_m, medium_part_bound, warmup_bound};
use super::report::BoundReport;
use super::scalar::{Poly, Scalar};
use super::{enclosure_tolerance, short, ParameterAlternative};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Spacing of the grid that double-checks the sign of the derivative in
    /// the last base case of alternative 3.
    pub grid_step: BigRational,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { grid_step: BigRational::new(1.into(), 100.into()) }
    }
}

/// Values of `σ` at which the warm-up bound is certified, with labels.
pub fn warmup_sigmas() -> Vec<(&'static str, Interval)> {
    vec![
        ("inv_sqrt2", Interval::ratio(1, 2).sqrt().expect("positive")),
        ("1", Interval::one()),
        ("2", Interval::int(2)),
    ]
}

struct Table {
    prefix: String,
    tolerance: BigRational,
    reports: Vec<BoundReport>,
}

fn c(x: &Interval) -> Poly {
    Poly::constant(x.clone())
}

fn q(n: i64, d: i64) -> Interval {
    Interval::ratio(n, d)
}

fn sqrt_q(n: i64, d: i64) -> Interval {
    Interval::ratio(n, d).sqrt().expect("non-negative")
}

impl Table {
    fn new(prefix: impl Into<String>, tolerance: BigRational) -> Self {
        Table { prefix: prefix.into(), tolerance, reports: Vec::new() }
    }

    fn id(&self, name: &str) -> String {
        format!("{}.{}", self.prefix, name)
    }

    /// `lhs(x) ≤ rhs(x)` for all `x` in `[lo, hi]`.
    #[allow(clippy::too_many_arguments)]
    fn poly(&mut self, name: &str, params: &str, var: &str, lo: &Interval, hi: &Interval, lhs: Poly, rhs: Poly) -> Result<()> {
        let diff = rhs.clone() - lhs.clone();
        let cert = certify_poly_on_interval(&diff, lo, hi, &self.tolerance)?;
        let x = &cert.argmin;
        let sep = if params.is_empty() { "" } else { "; " };
        self.reports.push(BoundReport {
            id: self.id(name),
            params: format!("{params}{sep}{var} in [{}, {}]; worst {var}={}", short(lo), short(hi), short(x)),
            lhs: lhs.eval(x),
            rhs: rhs.eval(x),
            margin: cert.min_margin,
            tolerance: self.tolerance.clone(),
            verdict: cert.verdict,
        });
        Ok(())
    }

    fn point(&mut self, name: &str, params: &str, lhs: Interval, rhs: Interval) {
        let r = BoundReport::new(self.id(name), params, lhs, rhs, self.tolerance.clone());
        self.reports.push(r);
    }

    fn strict(&mut self, name: &str, params: &str, lhs: Interval, rhs: Interval) {
        let r = BoundReport::strict(self.id(name), params, lhs, rhs);
        self.reports.push(r);
    }
}

/// Warm-up theorem obligations for one `σ ≥ 1/√2`, with
/// `δ = 2 + σ + 1/(2σ)`.
fn warmup_table(label: &str, sigma: &Interval) -> Result<Vec<BoundReport>> {
    let mut t = Table::new(format!("warmup.sigma_{label}"), enclosure_tolerance());
    let half_inv = (Interval::int(2) * sigma).recip()?;
    let delta = Interval::int(2) + sigma + &half_inv;
    let params = format!("sigma={}; delta={}", short(sigma), short(&delta));
    let x = Poly::var();
    let s = c(sigma);
    let start = sigma + &half_inv;
    let two_sigma = Interval::int(2) * sigma;

    t.poly("base", &params, "g", &start, &two_sigma, warmup_bound(&x, &s), x.mul_const(&delta))?;

    let half = x.mul_const(&q(1, 2));
    let split = x.mul_const(&Interval::int(2))
        + c(&Interval::one())
        + s.square()
        + (half.clone() - s.clone()).square()
        + half.square();
    let end = &two_sigma + &sigma.recip()?;
    t.poly("two_sigma", &params, "g", &two_sigma, &end, split, x.mul_const(&delta))?;

    let attach = (c(&Interval::int(2)) + x.clone()) * x.clone();
    t.poly("small_b", &params, "b", &Interval::zero(), &start, attach, x.mul_const(&delta))?;
    Ok(t.reports)
}

pub fn verify_warmup() -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for (label, sigma) in warmup_sigmas() {
        out.extend(warmup_table(label, &sigma)?);
    }
    Ok(out)
}

fn alt1(alt: &ParameterAlternative) -> Result<Vec<BoundReport>> {
    let mut t = Table::new("alt1", alt.tolerance());
    let (sigma, gamma, delta) = (&alt.sigma, &alt.gamma, &alt.delta);
    let x = Poly::var();
    let one = Interval::one();
    let two_thirds = q(2, 3);
    let excess = delta - &Interval::int(2);

    t.poly(
        "base",
        "r(G)=1",
        "g",
        gamma,
        sigma,
        (x.clone() + c(&one)).square(),
        x.mul_const(delta) + c(&two_thirds),
    )?;

    // −g² + (δ−2)g − 1/3 against (g − 1/(3σ))(σ − g), sampled
    let expanded = -x.square() + x.mul_const(&excess) - c(&q(1, 3));
    let factored = (x.clone() - c(gamma)) * (c(sigma) - x.clone());
    let samples = 1000;
    let step = &(sigma - gamma) / &Interval::int(samples - 1);
    let mut worst = BigRational::zero();
    for j in 0..samples {
        let g = gamma + &(&step * &Interval::int(j));
        let d = expanded.eval(&g) - factored.eval(&g);
        let size = d.lo().abs().max(d.hi().abs());
        if size > worst {
            worst = size;
        }
    }
    t.point(
        "base_factorization",
        "max |(-g^2+(delta-2)g-1/3) - (g-1/(3sigma))(sigma-g)| over 1000 points",
        Interval::exact(worst),
        Interval::zero(),
    );

    let root = sqrt_q(2, 3);
    t.poly(
        "induction_ii",
        "r(B)=sqrt(3/2)b; r(A)>=1",
        "b",
        &Interval::zero(),
        gamma,
        x.mul_const(&(Interval::int(2) * &root)),
        x.mul_const(&excess),
    )?;
    t.point("induction_ii_rb_range", "sqrt(3/2)*gamma <= 1", sqrt_q(3, 2) * gamma, one.clone());
    t.point("induction_max_side", "gamma <= sigma/2", gamma.clone(), sigma * &q(1, 2));
    Ok(t.reports)
}

fn alt2(alt: &ParameterAlternative) -> Result<Vec<BoundReport>> {
    let mut t = Table::new("alt2", alt.tolerance());
    let (sigma, gamma, delta) = (&alt.sigma, &alt.gamma, &alt.delta);
    let x = Poly::var();
    let one = Interval::one();
    let zero = Interval::zero();
    let excess = delta - &Interval::int(2);
    let mid = Interval::int(2) * sqrt_q(2, 5);
    let top = Interval::int(2) * gamma;

    let base_i = general_case_bound_with_m(&x, &x.mul_const(&q(1, 2)), &one, &zero, 1)?;
    t.poly("base_i", "sigma'=g/2; m=1; r=1; r(G)=2", "g", gamma, &mid, base_i, x.mul_const(delta) + c(&q(1, 3)))?;

    let base_ii = general_case_bound_with_m(&x, &c(sigma), &one, &zero, 2)?;
    t.poly("base_ii", "m=2; r=1; r(G)=3", "g", &mid, &top, base_ii, x.mul_const(delta) + c(&q(2, 9)))?;

    let root = sqrt_q(2, 3);
    t.poly(
        "induction_ii",
        "r(B)=sqrt(3/2)b; r(A)>=2",
        "b",
        &zero,
        &root,
        x.mul_const(&(&root * &q(5, 4))),
        x.mul_const(&excess),
    )?;
    t.point("induction_ii_rb_range", "sqrt(3/2)*sqrt(2/3) <= 1", sqrt_q(3, 2) * &root, one.clone());
    t.poly(
        "induction_iii",
        "r(B)=1; r(A)>=2",
        "b",
        &root,
        gamma,
        c(&q(1, 9)) + x.square(),
        x.mul_const(&excess),
    )?;
    Ok(t.reports)
}

/// Twice the derivative in `a` of the combined bound in the last base case,
/// halved: `−(g−a)/(1+s) + a/4 + a/16 + (a/4 − 0.2)/1.2`.
pub(crate) fn alt3_derivative(a: &Interval, g: &Interval, s: &Interval) -> Interval {
    let first = -((g - a) / (Interval::one() + s));
    let rest = a * &q(1, 4) + a * &q(1, 16) + (a * &q(1, 4) - q(1, 5)) / q(6, 5);
    first + rest
}

fn alt3(alt: &ParameterAlternative, opts: &VerifyOptions) -> Result<Vec<BoundReport>> {
    let mut t = Table::new("alt3", alt.tolerance());
    let delta = &alt.delta;
    let sigma = &alt.sigma;
    let x = Poly::var();
    let one = Interval::one();
    let zero = Interval::zero();
    let r = q(3, 10);
    let rhs = |weight: Interval| x.mul_const(delta) + c(&(q(2, 3) / weight));

    let base_i = general_case_bound_with_m(&x, &x.mul_const(&q(1, 4)), &one, &zero, 2)?;
    t.poly("base_i", "sigma'=g/4; m=2; r=1; r(G)=3", "g", &q(6, 5), &q(8, 5), base_i, rhs(Interval::int(3)))?;

    let base_ii = general_case_bound_with_m(&x, &c(sigma), &r, &zero, 4)?;
    t.poly("base_ii", "m=4; r=0.3; r(G)=4.3", "g", &q(8, 5), &q(51, 25), base_ii, rhs(q(43, 10)))?;

    let half = x.mul_const(&q(1, 2));
    for (name, s, lo, hi, weight) in [
        ("base_iii_s0.4", q(2, 5), q(51, 25), q(52, 25), q(47, 10)),
        ("base_iii_s0.7", q(7, 10), q(52, 25), q(12, 5), Interval::int(5)),
    ] {
        let a_part = general_case_bound_with_m(&half, &c(sigma), &r, &zero, 3)?;
        let b_part = medium_part_bound(&half, &s, &zero)?;
        let params = format!("a=b=g/2; m=3; r=0.3; s={}; r(G)={}", short(&s), short(&weight));
        t.poly(name, &params, "g", &lo, &hi, a_part + b_part, rhs(weight))?;
    }

    t.strict(
        "base_iii_derivative",
        "a=1.2; g=2.04; s=0.7",
        alt3_derivative(&q(6, 5), &q(51, 25), &q(7, 10)),
        zero.clone(),
    );

    let mut worst: Option<(Interval, String)> = None;
    let step = Interval::exact(opts.grid_step.clone());
    let a_max = q(6, 5);
    let g_max = q(12, 5);
    for s in [q(2, 5), q(7, 10)] {
        let mut g = q(51, 25);
        loop {
            let mut a = &g * &q(1, 2);
            loop {
                let d = alt3_derivative(&a, &g, &s);
                if worst.as_ref().is_none_or(|(w, _)| d.hi() > w.hi()) {
                    worst = Some((d, format!("a={}; g={}; s={}", short(&a), short(&g), short(&s))));
                }
                if a == a_max {
                    break;
                }
                a = (&a + &step).min(&a_max);
            }
            if g == g_max {
                break;
            }
            g = (&g + &step).min(&g_max);
        }
    }
    let (value, at) = worst.expect("grid is non-empty");
    t.strict(
        "base_iii_derivative_grid",
        &format!("step={}; worst at {at}", opts.grid_step),
        value,
        zero.clone(),
    );

    t.poly(
        "induction_ii",
        "r(B)=b; r(A)>=3",
        "b",
        &zero,
        &one,
        x.mul_const(&(q(2, 27) + one.clone())),
        x.mul_const(&(delta - &Interval::int(2))),
    )?;

    for (name, b) in [("induction_iii_b1", one.clone()), ("induction_iii_b1.2", q(6, 5))] {
        let lhs = medium_part_bound(&b, &one, &zero)? + q(4, 45);
        t.point(name, &format!("b={}; medium part r=1; r(A)>=3", short(&b)), lhs, delta * &b);
    }
    Ok(t.reports)
}

pub fn verify_alternative(alt: &ParameterAlternative, opts: &VerifyOptions) -> Result<Vec<BoundReport>> {
    match alt.id {
        1 => alt1(alt),
        2 => alt2(alt),
        _ => alt3(alt, opts),
    }
}

/// Warm-up obligations followed by those of every alternative.
pub fn verify_all(opts: &VerifyOptions) -> Result<Vec<BoundReport>> {
    let mut out = verify_warmup()?;
    for alt in ParameterAlternative::all() {
        out.extend(verify_alternative(&alt, opts)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Verdict;

    fn margin(reports: &[BoundReport], id: &str) -> f64 {
        reports.iter().find(|r| r.id == id).unwrap().margin.lo_f64()
    }

    #[test]
    fn alt3_table() {
        let reports = verify_alternative(&ParameterAlternative::alt3().unwrap(), &VerifyOptions::default()).unwrap();
        assert_eq!(reports.len(), 9);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
            assert!(r.margin.is_exact());
        }
        assert!((margin(&reports, "alt3.base_i") - 0.013022).abs() < 1e-6);
        let d = &reports.iter().find(|r| r.id == "alt3.base_iii_derivative").unwrap().lhs;
        assert!((d.to_f64() + 0.035784).abs() < 1e-6);
    }

    #[test]
    fn every_table_passes() {
        let reports = verify_all(&VerifyOptions::default()).unwrap();
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        }
        assert_eq!(reports.len(), 9 + 5 + 5 + 9);
    }

    #[test]
    fn derivative_example() {
        let d = alt3_derivative(&q(6, 5), &q(51, 25), &q(7, 10));
        assert!(d.hi() < &BigRational::zero());
    }
}
