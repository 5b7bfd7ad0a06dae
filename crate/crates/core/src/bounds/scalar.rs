//! Values the bound formulas can be evaluated over: interval enclosures of
//! reals, and polynomials in one variable with interval coefficients. The
//! latter turns a formula into the polynomial that an obligation certifies.

use std::ops::{Add, Mul, Neg, Sub};

use crate::numeric::Interval;

pub trait Scalar:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn constant(c: Interval) -> Self;
    fn mul_const(&self, c: &Interval) -> Self;

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl Scalar for Interval {
    fn constant(c: Interval) -> Self {
        c
    }

    fn mul_const(&self, c: &Interval) -> Self {
        self * c
    }

    fn square(&self) -> Self {
        Interval::square(self)
    }
}

/// `Σ coeffs[i] · x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Interval>,
}

impl Poly {
    pub fn new(coeffs: Vec<Interval>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// The variable `x`.
    pub fn var() -> Self {
        Poly::new(vec![Interval::zero(), Interval::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(|c| *c == Interval::zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Interval::zero());
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Interval] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Interval {
        self.coeffs.get(i).cloned().unwrap_or_else(Interval::zero)
    }

    pub fn eval(&self, x: &Interval) -> Interval {
        self.coeffs.iter().rev().fold(Interval::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        let mut out = vec![Interval::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Scalar for Poly {
    fn constant(c: Interval) -> Self {
        Poly::new(vec![c])
    }

    fn mul_const(&self, c: &Interval) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}
