//! Bound formulas, the parameter alternatives and certification of every
//! inequality the density theorems rely on.

mod certify;
mod consequence;
mod functions;
mod lemmas;
mod obligations;
mod report;
mod scalar;

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::Interval;

pub use certify::{certify_poly_on_interval, CertificateMethod, PolyCertificate, GRID_STEPS};
pub use consequence::{main_th_consequence_check, main_th_consequence_for};
pub use functions::{
    general_case_bound, general_case_bound_with_m, halvings, medium_part_bound, medium_part_bound_profile,
    small_case_bound, squares_of, warmup_bound,
};
pub use lemmas::{
    lemma3_gap, lemma4_bruteforce, lemma4_closed_form, Maximizer, OptimizationInstance, FINEST_RESOLUTION,
    MAX_BRUTE_FORCE_DIMENSION,
};
pub use obligations::{verify_all, verify_alternative, verify_warmup, warmup_sigmas, VerifyOptions};
pub use report::{write_csv, write_json, BoundReport, BoundRow};
pub use scalar::{Poly, Scalar};

/// Tolerance for obligations involving irrational enclosures.
pub fn enclosure_tolerance() -> BigRational {
    BigRational::new(1.into(), 1_000_000_000.into())
}

/// One admissible tuple `(σ, γ, ρ, δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterAlternative {
    pub id: u8,
    pub sigma: Interval,
    pub gamma: Interval,
    pub rho: Interval,
    pub delta: Interval,
}

fn sqrt(n: i64) -> Interval {
    Interval::int(n).sqrt().expect("non-negative")
}

impl ParameterAlternative {
    pub fn get(id: u8) -> Result<Self> {
        match id {
            1 => Self::alt1(),
            2 => Self::alt2(),
            3 => Self::alt3(),
            _ => Err(Error::Parameter(format!("unknown alternative {id}; expected 1, 2 or 3"))),
        }
    }

    pub fn all() -> Vec<Self> {
        (1..=3).map(|id| Self::get(id).expect("built-in alternative")).collect()
    }

    /// Smallest admissible `σ = (√2+1)/√3`.
    pub fn alt1_min_sigma() -> Interval {
        (sqrt(2) + Interval::one()) / sqrt(3)
    }

    pub fn alt1() -> Result<Self> {
        Self::alt1_with_sigma(Self::alt1_min_sigma())
    }

    pub fn alt1_with_sigma(sigma: Interval) -> Result<Self> {
        if sigma.certainly_lt(&Self::alt1_min_sigma()) {
            return Err(Error::Parameter(format!("alternative 1 needs sigma >= (sqrt2+1)/sqrt3, got {sigma}")));
        }
        let gamma = (Interval::int(3) * &sigma).recip()?;
        let delta = Interval::int(2) + &sigma + &gamma;
        Self::checked(1, sigma, gamma, Interval::one(), delta)
    }

    pub fn alt2() -> Result<Self> {
        let root10 = sqrt(10);
        let sigma = &root10 / &Interval::int(6);
        let gamma = &root10 / &Interval::int(3);
        let delta = Interval::int(2) + Interval::int(11) / (Interval::int(3) * root10);
        Self::checked(2, sigma, gamma, Interval::int(2), delta)
    }

    pub fn alt3() -> Result<Self> {
        Self::checked(3, Interval::ratio(1, 5), Interval::ratio(6, 5), Interval::int(3), Interval::ratio(3109, 1000))
    }

    fn checked(id: u8, sigma: Interval, gamma: Interval, rho: Interval, delta: Interval) -> Result<Self> {
        if !(Interval::one() + &gamma).certainly_le(&delta) {
            return Err(Error::Parameter(format!("alternative {id}: delta < 1 + gamma")));
        }
        Ok(ParameterAlternative { id, sigma, gamma, rho, delta })
    }

    /// All four constants are exact rationals.
    pub fn is_exact(&self) -> bool {
        [&self.sigma, &self.gamma, &self.rho, &self.delta].iter().all(|c| c.is_exact())
    }

    pub fn tolerance(&self) -> BigRational {
        if self.is_exact() {
            BigRational::zero()
        } else {
            enclosure_tolerance()
        }
    }

    /// Average-degree threshold `δk − 1`.
    pub fn degree_threshold(&self, k: usize) -> Interval {
        &(&self.delta * &Interval::int(k as i64)) - &Interval::one()
    }
}

impl fmt::Display for ParameterAlternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alternative {}: sigma={} gamma={} rho={} delta={}",
            self.id,
            short(&self.sigma),
            short(&self.gamma),
            short(&self.rho),
            short(&self.delta)
        )
    }
}

/// Compact decimal rendering: exact values up to 6 places, enclosures by
/// their midpoint to 9 places.
pub(crate) fn short(x: &Interval) -> String {
    let places = if x.is_exact() { 6 } else { 9 };
    let s = format!("{:.*}", places, x.to_f64());
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        let a1 = ParameterAlternative::get(1).unwrap();
        assert!((a1.sigma.to_f64() - 1.393_846_850_1).abs() < 1e-9);
        assert!((a1.delta.to_f64() - 2.0 - 2.0 * (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!(!a1.is_exact());
        let a2 = ParameterAlternative::get(2).unwrap();
        assert!((a2.sigma.to_f64() - (2.5f64).sqrt() / 3.0).abs() < 1e-15);
        assert!((a2.delta.to_f64() - (2.0 + 11.0 / 3.0 * (0.1f64).sqrt())).abs() < 1e-15);
        let a3 = ParameterAlternative::get(3).unwrap();
        assert!(a3.is_exact());
        assert_eq!(a3.degree_threshold(2), Interval::ratio(5218, 1000));
        for a in ParameterAlternative::all() {
            assert!((Interval::one() + &a.gamma).certainly_le(&a.delta));
            assert!(a.sigma.width() <= BigRational::new(1.into(), BigRational::from_integer(10.into()).numer().pow(29)));
        }
        assert!(ParameterAlternative::get(4).is_err());
        assert!(ParameterAlternative::alt1_with_sigma(Interval::int(1)).is_err());
        assert!(ParameterAlternative::alt1_with_sigma(Interval::int(2)).is_ok());
    }

    #[test]
    fn short_rendering() {
        assert_eq!(short(&Interval::ratio(6, 5)), "1.2");
        assert_eq!(short(&Interval::int(3)), "3");
        assert_eq!(short(&sqrt(2)), "1.414213562");
    }
}
