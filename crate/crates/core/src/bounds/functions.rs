//! Edge-count upper bounds for σ-separable ²graphs, in normalized units.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::AnticliqueProfile;
use crate::numeric::Interval;

use super::scalar::Scalar;

/// Largest `m` tried before giving up on `⌈log₂(g/σ)⌉`.
const MAX_HALVINGS: u32 = 4096;

fn two() -> Interval {
    Interval::int(2)
}

fn check_weight(r: &Interval) -> Result<()> {
    if !r.lo().is_positive() || !r.certainly_le(&Interval::one()) {
        return Err(Error::Domain(format!("weight r = {r} must lie in (0, 1]")));
    }
    Ok(())
}

/// `2g + 1 + σ² + (g − σ)²`.
pub fn warmup_bound<S: Scalar>(g: &S, sigma: &S) -> S {
    g.mul_const(&two())
        + S::constant(Interval::one())
        + sigma.square()
        + (g.clone() - sigma.clone()).square()
}

/// `2g + 1 + σ² + (g − σ)² − Σ (b_i² + (v̄(G_i) − b_i)²)`.
pub fn small_case_bound(
    g: &Interval,
    sigma: &Interval,
    profile: &AnticliqueProfile,
    b: &[Interval],
) -> Result<Interval> {
    if !sigma.certainly_lt(g) {
        return Err(Error::Domain(format!("small case needs g > sigma, got g = {g}, sigma = {sigma}")));
    }
    if b.len() != profile.sizes().len() {
        return Err(Error::Domain(format!(
            "{} split values for {} anticliques",
            b.len(),
            profile.sizes().len()
        )));
    }
    let mut loss = Interval::zero();
    let mut split_squares = Interval::zero();
    for (bi, size) in b.iter().zip(profile.sizes()) {
        let size = Interval::exact(size.clone());
        if bi.lo().is_negative() || !bi.certainly_le(&size) {
            return Err(Error::Domain(format!("b_i = {bi} outside [0, {size}]")));
        }
        let bi_sq = bi.square();
        loss = loss + &bi_sq + (&size - bi).square();
        split_squares = split_squares + bi_sq;
    }
    if !split_squares.certainly_le(&(g - sigma).square()) {
        return Err(Error::Domain("sum of b_i^2 exceeds (g - sigma)^2".into()));
    }
    Ok(warmup_bound(g, sigma) - loss)
}

/// `m = max(1, ⌈log₂(g/σ)⌉)`, the least `m ≥ 1` with `g ≤ 2^m σ`.
pub fn halvings(g: &Interval, sigma: &Interval) -> Result<u32> {
    if !sigma.lo().is_positive() {
        return Err(Error::Domain(format!("sigma = {sigma} must be positive")));
    }
    for m in 1..=MAX_HALVINGS {
        let cap = sigma.scale_pow2(m as i32);
        if g.certainly_le(&cap) {
            return Ok(m);
        }
        if !cap.certainly_lt(g) {
            return Err(Error::Undecidable(format!("ceil(log2(g/sigma)) for g = {g}, sigma = {sigma}")));
        }
    }
    Err(Error::Domain(format!("g/sigma exceeds 2^{MAX_HALVINGS}")))
}

/// The general-case bound with the number of halvings `m` fixed:
/// `2g + 1 + σ² + Σ_{j<m} (2^{−j}g)² + (1/r)(2^{−(m−1)}g − σ)² − Σv̄²/(m + r)`.
pub fn general_case_bound_with_m<S: Scalar>(
    g: &S,
    sigma: &S,
    r: &Interval,
    anticlique_squares: &Interval,
    m: u32,
) -> Result<S> {
    check_weight(r)?;
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let mut total = g.mul_const(&two()) + S::constant(Interval::one()) + sigma.square();
    for j in 1..m {
        total = total + g.mul_const(&Interval::one().scale_pow2(-(j as i32))).square();
    }
    let last = g.mul_const(&Interval::one().scale_pow2(-((m - 1) as i32))) - sigma.clone();
    total = total + last.square().mul_const(&r.recip()?);
    let discount = anticlique_squares / &(Interval::int(m as i64) + r);
    Ok(total - S::constant(discount))
}

pub fn general_case_bound(
    g: &Interval,
    sigma: &Interval,
    r: &Interval,
    profile: &AnticliqueProfile,
) -> Result<Interval> {
    if !sigma.certainly_le(g) {
        return Err(Error::Domain(format!("general case needs g >= sigma, got g = {g}, sigma = {sigma}")));
    }
    let m = halvings(g, sigma)?;
    general_case_bound_with_m(g, sigma, r, &squares_of(profile), m)
}

/// `2b + (r + b² − Σ v̄(B_i)²)/(r + 1)`.
pub fn medium_part_bound<S: Scalar>(b: &S, r: &Interval, anticlique_squares: &Interval) -> Result<S> {
    check_weight(r)?;
    let inner = S::constant(r.clone()) + b.square() - S::constant(anticlique_squares.clone());
    Ok(b.mul_const(&two()) + inner.mul_const(&(r + &Interval::one()).recip()?))
}

pub fn medium_part_bound_profile(b: &Interval, r: &Interval, profile: &AnticliqueProfile) -> Result<Interval> {
    if b.lo().is_negative() {
        return Err(Error::Domain(format!("b = {b} must be non-negative")));
    }
    medium_part_bound(b, r, &squares_of(profile))
}

/// `Σ v̄(G_i)²` for a profile.
pub fn squares_of(profile: &AnticliqueProfile) -> Interval {
    Interval::exact(profile.sum_of_squares())
}
