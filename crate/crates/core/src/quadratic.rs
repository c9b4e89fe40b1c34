//! Exact arithmetic in `Q(sqrt(D))` for the characteristic roots.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{self, format_rational};
use crate::sequences::fl_iterative;

/// `u + v * sqrt(D)`. The discriminant is kept as given, never reduced to its
/// square-free part, and both operands of any operation must share it.
/// With `D = 0` the radical part is stored as 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    pub rational_part: BigRational,
    pub radical_part: BigRational,
    pub discriminant: BigRational,
}

impl QuadraticNumber {
    pub fn new(rational_part: BigRational, radical_part: BigRational, discriminant: BigRational) -> Self {
        let radical_part = if discriminant.is_zero() { BigRational::zero() } else { radical_part };
        Self { rational_part, radical_part, discriminant }
    }

    pub fn rational(value: BigRational, discriminant: BigRational) -> Self {
        Self::new(value, BigRational::zero(), discriminant)
    }

    pub fn one(discriminant: BigRational) -> Self {
        Self::rational(BigRational::one(), discriminant)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.rational_part * k, &self.radical_part * k, self.discriminant.clone())
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.discriminant.clone());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(
            self.discriminant, other.discriminant,
            "quadratic numbers over different discriminants"
        );
    }
}

impl std::fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} + ({})*sqrt({})",
            format_rational(&self.rational_part),
            format_rational(&self.radical_part),
            format_rational(&self.discriminant)
        )
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: Self) -> QuadraticNumber {
        self.same_field(rhs);
        QuadraticNumber::new(
            &self.rational_part + &rhs.rational_part,
            &self.radical_part + &rhs.radical_part,
            self.discriminant.clone(),
        )
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: Self) -> QuadraticNumber {
        self + &(-rhs)
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber::new(-&self.rational_part, -&self.radical_part, self.discriminant.clone())
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: Self) -> QuadraticNumber {
        self.same_field(rhs);
        let (u1, v1) = (&self.rational_part, &self.radical_part);
        let (u2, v2) = (&rhs.rational_part, &rhs.radical_part);
        QuadraticNumber::new(
            u1 * u2 + v1 * v2 * &self.discriminant,
            u1 * v2 + u2 * v1,
            self.discriminant.clone(),
        )
    }
}

/// The roots `(p +- sqrt(p^2 + 4q)) / 2` of `X^2 - pX - q`, as `(lambda, mu)`.
/// Equal when the discriminant vanishes.
pub fn characteristic_roots(p: &BigRational, q: &BigRational) -> (QuadraticNumber, QuadraticNumber) {
    let discriminant = p * p + exact::int(4) * q;
    let half = exact::frac(1, 2);
    let centre = p * &half;
    let lambda = QuadraticNumber::new(centre.clone(), half.clone(), discriminant.clone());
    let mu = QuadraticNumber::new(centre, -half, discriminant);
    (lambda, mu)
}

/// Result of checking `F_n (lambda - mu) = lambda^n - mu^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibonacciIdentity {
    Holds,
    Fails,
    /// The discriminant is zero and the quotient form is `0/0`.
    RepeatedRoot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinetCheck {
    pub fibonacci: FibonacciIdentity,
    pub lucas_holds: bool,
}

impl BinetCheck {
    /// True when every identity that applies holds. A repeated root does not
    /// count as a failure.
    pub fn passed(&self) -> bool {
        self.lucas_holds && self.fibonacci != FibonacciIdentity::Fails
    }
}

/// Compares root powers against the recurrence-defined `F_n` and `L_n`.
pub fn binet_check(p: &BigRational, q: &BigRational, n: u64) -> BinetCheck {
    let (lambda, mu) = characteristic_roots(p, q);
    let fl = fl_iterative(p, q, n);
    let lambda_n = lambda.pow(n);
    let mu_n = mu.pow(n);

    let lucas_holds = &lambda_n + &mu_n == QuadraticNumber::rational(fl.l, lambda.discriminant.clone());
    let fibonacci = if lambda.discriminant.is_zero() {
        FibonacciIdentity::RepeatedRoot
    } else if &lambda_n - &mu_n == (&lambda - &mu).scale(&fl.f) {
        FibonacciIdentity::Holds
    } else {
        FibonacciIdentity::Fails
    };
    BinetCheck { fibonacci, lucas_holds }
}
