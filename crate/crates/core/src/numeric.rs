//! Closed rational intervals used as certified enclosures of real constants.
//!
//! Exact rationals are degenerate intervals; irrational constants such as
//! `√2` are enclosed between rationals 10⁻³⁰ apart. Arithmetic is the usual
//! outward interval arithmetic, performed exactly on the endpoints.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Decimal digits carried by square-root enclosures.
pub const ENCLOSURE_DIGITS: u32 = 30;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn exact(q: BigRational) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn int(n: i64) -> Self {
        Self::exact(BigRational::from_integer(n.into()))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::exact(BigRational::new(numer.into(), denom.into()))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// Enclosure of `√q` for a non-negative rational `q`.
    pub fn sqrt_rational(q: &BigRational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::Domain(format!("square root of negative {q}")));
        }
        let scale = BigInt::from(10u32).pow(ENCLOSURE_DIGITS);
        let numer = q.numer() * q.denom() * &scale * &scale;
        let root = numer.sqrt();
        let denom = q.denom() * &scale;
        let lo = BigRational::new(root.clone(), denom.clone());
        if &root * &root == numer {
            return Ok(Self::exact(lo));
        }
        let hi = BigRational::new(root + 1, denom);
        Ok(Interval { lo, hi })
    }

    pub fn sqrt(&self) -> Result<Self> {
        let lo = Self::sqrt_rational(&self.lo)?;
        let hi = Self::sqrt_rational(&self.hi)?;
        Ok(Interval { lo: lo.lo, hi: hi.hi })
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn to_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        mid.to_f64().unwrap_or(f64::NAN)
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn square(&self) -> Self {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            Interval { lo: BigRational::zero(), hi: a.max(b) }
        } else if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::Domain("reciprocal of an interval containing 0".into()));
        }
        Ok(Interval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn checked_div(&self, other: &Interval) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    /// Multiplies by `2^exp`.
    pub fn scale_pow2(&self, exp: i32) -> Self {
        let factor = if exp >= 0 {
            BigRational::from_integer(BigInt::one() << exp as u32)
        } else {
            BigRational::new(BigInt::one(), BigInt::one() << (-exp) as u32)
        };
        Interval { lo: &self.lo * &factor, hi: &self.hi * &factor }
    }

    pub fn min(&self, other: &Interval) -> Self {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().min(other.hi.clone()),
        }
    }

    pub fn max(&self, other: &Interval) -> Self {
        Interval {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// Smallest interval holding both.
    pub fn hull(&self, other: &Interval) -> Self {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// Every point of `self` is `≤` every point of `other`.
    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    /// `⌊x⌋` when it is the same for every point of the interval.
    pub fn floor(&self) -> Option<BigInt> {
        let a = self.lo.floor().to_integer();
        let b = self.hi.floor().to_integer();
        (a == b).then_some(a)
    }
}

impl From<BigRational> for Interval {
    fn from(q: BigRational) -> Self {
        Interval::exact(q)
    }
}

/// Parses decimals (`3.109`), fractions (`11/3`) and integers exactly.
impl FromStr for Interval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Interval::exact)
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    let bad = || Error::Parameter(format!("not a rational number: {text:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    let q = BigRational::new(numer, denom);
    Ok(if negative { -q } else { q })
}

/// Fixed-point decimal rendering, rounded toward −∞.
/// Serializes an exact rational as its `p/q` string.
pub fn serialize_rational<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

pub fn format_decimal(q: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = (q * BigRational::from_integer(scale.clone())).floor().to_integer();
    let negative = scaled.is_negative();
    let (int, frac) = scaled.abs().div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0>width$}", width = places as usize)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", format_decimal(&self.lo, 12), format_decimal(&self.hi, 12))
        }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        if self.is_exact() && rhs.is_exact() {
            return Interval::exact(&self.lo * &rhs.lo);
        }
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().expect("four products").clone();
        let hi = products.iter().max().expect("four products").clone();
        Interval { lo, hi }
    }
}

/// Panics when the divisor contains zero; use [`Interval::checked_div`] for
/// untrusted divisors.
impl Div for &Interval {
    type Output = Interval;
    fn div(self, rhs: &Interval) -> Interval {
        self.checked_div(rhs).expect("divisor interval contains zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval { (&self).$m(&rhs) }
        }
        impl $tr<&Interval> for Interval {
            type Output = Interval;
            fn $m(self, rhs: &Interval) -> Interval { (&self).$m(rhs) }
        }
        impl $tr<Interval> for &Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_enclosures() {
        let two = Interval::int(2).sqrt().unwrap();
        assert!(!two.is_exact());
        assert!(two.width() <= BigRational::new(1.into(), BigInt::from(10u32).pow(30)));
        let sq = two.square();
        assert!(sq.contains(&BigRational::from_integer(2.into())));
        assert!((two.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);

        let four = Interval::ratio(9, 4).sqrt().unwrap();
        assert_eq!(four, Interval::ratio(3, 2));
        assert!(Interval::int(-1).sqrt().is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("3.109").unwrap(), BigRational::new(3109.into(), 1000.into()));
        assert_eq!(parse_rational("-0.2").unwrap(), BigRational::new((-1).into(), 5.into()));
        assert_eq!(parse_rational("11/3").unwrap(), BigRational::new(11.into(), 3.into()));
        assert_eq!(parse_rational("7").unwrap(), BigRational::from_integer(7.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }

    fn iv(lo: i64, hi: i64) -> Interval {
        Interval::new(BigRational::from_integer(lo.into()), BigRational::from_integer(hi.into())).unwrap()
    }

    #[test]
    fn arithmetic_is_outward() {
        let a = iv(-1, 2);
        let b = Interval::int(3);
        assert_eq!(&a * &b, iv(-3, 6));
        assert_eq!(&a * &a, iv(-2, 4));
        assert_eq!(a.square(), iv(0, 4));
        assert!(a.recip().is_err());
        assert_eq!(&b - &a, iv(1, 4));
        assert_eq!(-&a, iv(-2, 1));
        assert_eq!(Interval::ratio(12, 5).floor(), Some(BigInt::from(2)));
        assert_eq!(a.floor(), None);
        assert!(iv(0, 1).certainly_le(&iv(1, 2)));
        assert!(!iv(0, 1).certainly_lt(&iv(1, 2)));
    }

    #[test]
    fn decimal_format() {
        assert_eq!(format_decimal(&BigRational::new(1.into(), 3.into()), 4), "0.3333");
        assert_eq!(format_decimal(&BigRational::new((-1).into(), 3.into()), 4), "-0.3334");
        assert_eq!(format_decimal(&BigRational::from_integer(5.into()), 0), "5");
    }
}
