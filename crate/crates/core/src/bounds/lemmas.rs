//! The two auxiliary inequalities: the weighted-square gap and the
//! two-component optimization problem.

use num_traits::Num;

use crate::error::{Error, Result};

/// `x²/r + y²/s − (x+y)²/(r+s)`, which is non-negative and vanishes exactly
/// when `x/r = y/s`.
pub fn lemma3_gap<T>(x: T, y: T, r: T, s: T) -> Result<T>
where
    T: Num + Clone + PartialOrd,
{
    let zero = T::zero();
    if r <= zero || s <= zero {
        return Err(Error::Domain("lemma weights r and s must be positive".into()));
    }
    let sum = x.clone() + y.clone();
    Ok(x.clone() * x / r.clone() + y.clone() * y / s.clone() - sum.clone() * sum / (r + s))
}

/// An instance of `max x² − ‖x⃗‖² + (z−x)² − ‖z⃗−x⃗‖²` subject to
/// `x ∈ [τ, z/2]`, `‖x⃗‖ ≤ x`, `‖z⃗ − x⃗‖ ≤ z − x`.
#[derive(Clone, Debug, PartialEq)]
pub struct OptimizationInstance {
    pub z: f64,
    pub zs: Vec<f64>,
    pub tau: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Maximizer {
    pub x: f64,
    pub xs: Vec<f64>,
    pub value: f64,
}

pub const MAX_BRUTE_FORCE_DIMENSION: usize = 3;
pub const FINEST_RESOLUTION: f64 = 1.0 / 256.0;

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum::<f64>().sqrt()
}

impl OptimizationInstance {
    pub fn new(z: f64, zs: Vec<f64>, tau: f64) -> Result<Self> {
        let inst = OptimizationInstance { z, zs, tau };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.z.is_finite() && self.tau.is_finite() && self.zs.iter().all(|c| c.is_finite());
        if !finite || self.z <= 0.0 {
            return Err(Error::Domain(format!("z = {} must be positive", self.z)));
        }
        if self.zs.iter().any(|&c| c < 0.0) {
            return Err(Error::Domain("components of z⃗ must be non-negative".into()));
        }
        if norm(&self.zs) > self.z {
            return Err(Error::Domain(format!("‖z⃗‖ = {} exceeds z = {}", norm(&self.zs), self.z)));
        }
        if !(0.0..=self.z / 2.0).contains(&self.tau) {
            return Err(Error::Domain(format!("tau = {} outside [0, z/2]", self.tau)));
        }
        Ok(())
    }

    pub fn objective(&self, x: f64, xs: &[f64]) -> f64 {
        let n = norm(xs);
        let d = distance(&self.zs, xs);
        x * x - n * n + (self.z - x) * (self.z - x) - d * d
    }

    pub fn is_feasible(&self, x: f64, xs: &[f64], slack: f64) -> bool {
        x >= self.tau - slack
            && x <= self.z / 2.0 + slack
            && norm(xs) <= x + slack
            && distance(&self.zs, xs) <= self.z - x + slack
    }
}

/// The maximizer `x = τ`, `x⃗ = min(1/2, τ/‖z⃗‖) z⃗` (or `0⃗` when `z⃗ = 0⃗`).
pub fn lemma4_closed_form(inst: &OptimizationInstance) -> Maximizer {
    let x = inst.tau;
    let len = norm(&inst.zs);
    let xs: Vec<f64> = if len == 0.0 {
        vec![0.0; inst.zs.len()]
    } else {
        let t = (x / len).min(0.5);
        inst.zs.iter().map(|c| t * c).collect()
    };
    let value = inst.objective(x, &xs);
    Maximizer { x, xs, value }
}

/// Maximum of the objective over `x⃗` on the grid `(h ℤ)^l`. For fixed `x⃗`
/// the objective is convex in `x` with its minimum at `z/2`, so the best
/// feasible `x` is the smallest one, `max(τ, ‖x⃗‖)`.
pub fn lemma4_bruteforce(inst: &OptimizationInstance, resolution: f64) -> Result<Option<f64>> {
    inst.validate()?;
    let l = inst.zs.len();
    if l > MAX_BRUTE_FORCE_DIMENSION {
        return Err(Error::TooLarge {
            what: "optimization brute force dimension",
            got: l,
            limit: MAX_BRUTE_FORCE_DIMENSION,
        });
    }
    if resolution.is_nan() || resolution < FINEST_RESOLUTION || !resolution.is_finite() {
        return Err(Error::Parameter(format!(
            "grid resolution {resolution} is finer than {FINEST_RESOLUTION} or invalid"
        )));
    }
    let half = inst.z / 2.0;
    let steps = (half / resolution).floor() as i64;
    let axis: Vec<f64> = (-steps..=steps).map(|i| i as f64 * resolution).collect();

    let mut best: Option<f64> = None;
    let mut xs = vec![0.0; l];
    let mut idx = vec![0usize; l];
    loop {
        for (slot, &i) in xs.iter_mut().zip(&idx) {
            *slot = axis[i];
        }
        let lo = inst.tau.max(norm(&xs));
        let hi = half.min(inst.z - distance(&inst.zs, &xs));
        if lo <= hi {
            let value = inst.objective(lo, &xs);
            best = Some(best.map_or(value, |b: f64| b.max(value)));
        }
        let mut d = 0;
        loop {
            if d == l {
                return Ok(best);
            }
            idx[d] += 1;
            if idx[d] < axis.len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}
