//! Horadam parameters and exact evaluation of `W_n`, `F_n` and `L_n`.
//!
//! All sequences obey `x_n = p x_{n-1} + q x_{n-2}`. `F` is seeded with
//! `(0, 1)`, `L` with `(2, p)` and `W` with `(a, b)`.
//!
//! Rational `p`, `q` are handled by clearing denominators once: with
//! `d = lcm(den p, den q)`, `P = p d` and `Q = q d^2` are integers and the
//! integer sequences `f'`, `l'` driven by `(P, Q)` satisfy
//! `F_n = f'_n / d^(n-1)` and `L_n = l'_n / d^n`. Every loop below runs on
//! integers and divides once at the end.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::Result;
use crate::exact::{self, BitBudget};

/// Which closed form for the partial sums applies, decided by `(p, q)` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    /// `1 - p - q != 0`.
    Generic,
    /// `p + q = 1` and `(p, q) != (2, -1)`.
    SimpleDegenerate,
    /// `(p, q) = (2, -1)`.
    DoubleDegenerate,
}

impl Degeneracy {
    pub fn as_str(&self) -> &'static str {
        match self {
            Degeneracy::Generic => "GENERIC",
            Degeneracy::SimpleDegenerate => "SIMPLE_DEGENERATE",
            Degeneracy::DoubleDegenerate => "DOUBLE_DEGENERATE",
        }
    }
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The quadruple `(a, b; p, q)`: `W_0 = a`, `W_1 = b`, `W_n = p W_{n-1} + q W_{n-2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HoradamParams {
    pub a: BigRational,
    pub b: BigRational,
    pub p: BigRational,
    pub q: BigRational,
}

impl HoradamParams {
    pub fn new(a: BigRational, b: BigRational, p: BigRational, q: BigRational) -> Self {
        Self { a, b, p, q }
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(a: i64, b: i64, p: i64, q: i64) -> Self {
        Self::new(exact::int(a), exact::int(b), exact::int(p), exact::int(q))
    }

    pub fn classify(&self) -> Degeneracy {
        classify_pq(&self.p, &self.q)
    }

    /// Every prime in the denominator of any `F_n`, `L_n` or `q^n` divides this.
    pub(crate) fn denominator_base(&self) -> BigInt {
        self.p.denom() * self.q.denom()
    }
}

impl fmt::Display for HoradamParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} b={} p={} q={}",
            exact::format_rational(&self.a),
            exact::format_rational(&self.b),
            exact::format_rational(&self.p),
            exact::format_rational(&self.q)
        )
    }
}

pub fn classify(params: &HoradamParams) -> Degeneracy {
    params.classify()
}

pub(crate) fn classify_pq(p: &BigRational, q: &BigRational) -> Degeneracy {
    if !(p + q).is_one() {
        Degeneracy::Generic
    } else if *p == exact::int(2) {
        // p + q = 1 already forces q = -1 here
        Degeneracy::DoubleDegenerate
    } else {
        Degeneracy::SimpleDegenerate
    }
}

/// `(F_n, L_n)` at a common index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FLPair {
    pub index: u64,
    pub f: BigRational,
    pub l: BigRational,
}

/// The recurrence with denominators cleared, see the module docs.
struct Scaled {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    discriminant: BigInt,
}

impl Scaled {
    fn new(p: &BigRational, q: &BigRational) -> Self {
        let d = if p.denom() == q.denom() {
            p.denom().clone()
        } else {
            p.denom() / exact::gcd(p.denom(), q.denom()) * q.denom()
        };
        let sp = p.numer() * (&d / p.denom());
        let sq = q.numer() * (&d * &d / q.denom());
        let discriminant = &sp * &sp + BigInt::from(4) * &sq;
        Scaled { p: sp, q: sq, d, discriminant }
    }

    fn d_pow(&self, k: u64) -> BigInt {
        if self.d.is_one() {
            BigInt::one()
        } else {
            Pow::pow(&self.d, k)
        }
    }

    fn over_d_pow(&self, x: BigInt, k: u64) -> BigRational {
        if self.d.is_one() {
            BigRational::from_integer(x)
        } else {
            exact::ratio_smooth(x, self.d_pow(k), &self.d)
        }
    }

    fn to_pair(&self, index: u64, f: BigInt, l: BigInt) -> FLPair {
        let f = if index == 0 { BigRational::zero() } else { self.over_d_pow(f, index - 1) };
        let l = self.over_d_pow(l, index);
        FLPair { index, f, l }
    }
}

/// `W_n` by stepping the recurrence from `W_0 = a`, `W_1 = b`.
pub fn w_iterative(params: &HoradamParams, n: u64) -> BigRational {
    w_iterative_within(params, n, &BitBudget::UNLIMITED).expect("unlimited budget")
}

pub fn w_iterative_within(params: &HoradamParams, n: u64, budget: &BitBudget) -> Result<BigRational> {
    match n {
        0 => return Ok(params.a.clone()),
        1 => return Ok(params.b.clone()),
        _ => {}
    }
    let s = Scaled::new(&params.p, &params.q);
    // w'_n = W_n * e * d^n with e clearing the denominators of a and b
    let e = params.a.denom() / exact::gcd(params.a.denom(), params.b.denom()) * params.b.denom();
    let mut prev = params.a.numer() * (&e / params.a.denom());
    let mut cur = params.b.numer() * (&e / params.b.denom()) * &s.d;
    for _ in 2..=n {
        let next = &s.p * &cur + &s.q * &prev;
        budget.check_int(&next)?;
        prev = std::mem::replace(&mut cur, next);
    }
    let base = &e * &s.d;
    Ok(exact::ratio_smooth(cur, e * s.d_pow(n), &base))
}

/// `(F_n, L_n)` by `n - 1` recurrence steps.
pub fn fl_iterative(p: &BigRational, q: &BigRational, n: u64) -> FLPair {
    fl_iterative_within(p, q, n, &BitBudget::UNLIMITED).expect("unlimited budget")
}

pub fn fl_iterative_within(p: &BigRational, q: &BigRational, n: u64, budget: &BitBudget) -> Result<FLPair> {
    let s = Scaled::new(p, q);
    let (mut f0, mut f1) = (BigInt::zero(), BigInt::one());
    let (mut l0, mut l1) = (BigInt::from(2), s.p.clone());
    if n == 0 {
        return Ok(s.to_pair(0, f0, l0));
    }
    for _ in 2..=n {
        let f2 = &s.p * &f1 + &s.q * &f0;
        let l2 = &s.p * &l1 + &s.q * &l0;
        budget.check_int(&f2)?;
        budget.check_int(&l2)?;
        f0 = std::mem::replace(&mut f1, f2);
        l0 = std::mem::replace(&mut l1, l2);
    }
    Ok(s.to_pair(n, f1, l1))
}

/// `(F_n, L_n)` in `O(log n)` multiplications.
///
/// Walks the bits of `n` from the top, keeping `(F_k, L_k, (-q)^k)`:
///
/// ```text
/// F_2k   = F_k L_k
/// L_2k   = L_k^2 - 2 (-q)^k
/// F_k+1  = (p F_k + L_k) / 2
/// L_k+1  = (D F_k + p L_k) / 2        D = p^2 + 4q
/// ```
///
/// On the scaled integer sequences both halvings are exact, since
/// `p F_k + L_k = 2 F_k+1` and `D F_k + p L_k = 2 L_k+1`.
pub fn fl_doubling(p: &BigRational, q: &BigRational, n: u64) -> FLPair {
    fl_doubling_within(p, q, n, &BitBudget::UNLIMITED).expect("unlimited budget")
}

pub fn fl_doubling_within(p: &BigRational, q: &BigRational, n: u64, budget: &BitBudget) -> Result<FLPair> {
    let s = Scaled::new(p, q);
    let neg_q = -&s.q;
    let mut f = BigInt::zero();
    let mut l = BigInt::from(2);
    let mut neg_q_pow = BigInt::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let f2 = &f * &l;
        let l2 = &l * &l - (&neg_q_pow << 1u32);
        neg_q_pow = &neg_q_pow * &neg_q_pow;
        if (n >> bit) & 1 == 1 {
            f = (&s.p * &f2 + &l2) / 2;
            l = (&s.discriminant * &f2 + &s.p * &l2) / 2;
            neg_q_pow *= &neg_q;
        } else {
            f = f2;
            l = l2;
        }
        budget.check_int(&f)?;
        budget.check_int(&l)?;
    }
    Ok(s.to_pair(n, f, l))
}

/// `W_n = (b - a p / 2) F_n + (a / 2) L_n`.
///
/// `fl` must have been produced for the same `(p, q)` as `params`.
pub fn w_from_fl(params: &HoradamParams, fl: &FLPair) -> BigRational {
    let half = exact::frac(1, 2);
    let f_coeff = &params.b - &params.a * &params.p * &half;
    let l_coeff = &params.a * &half;
    exact::combine(&[(&f_coeff, &fl.f), (&l_coeff, &fl.l)], &params.denominator_base())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn classification_examples() {
        assert_eq!(HoradamParams::from_ints(0, 1, 1, 1).classify(), Degeneracy::Generic);
        assert_eq!(HoradamParams::from_ints(1, 2, 2, -1).classify(), Degeneracy::DoubleDegenerate);
        assert_eq!(HoradamParams::from_ints(1, 1, 3, -2).classify(), Degeneracy::SimpleDegenerate);
        let p = frac(1, 3);
        let q = frac(2, 3);
        assert_eq!(classify_pq(&p, &q), Degeneracy::SimpleDegenerate);
        assert_eq!(classify_pq(&int(2), &int(-2)), Degeneracy::Generic);
    }

    #[test]
    fn w_iterative_examples() {
        assert_eq!(w_iterative(&HoradamParams::from_ints(0, 1, 1, 1), 6), int(8));
        assert_eq!(w_iterative(&HoradamParams::from_ints(2, 1, 1, 1), 4), int(7));
        let params = HoradamParams::new(frac(-3, 7), frac(5, 2), frac(1, 9), int(4));
        assert_eq!(w_iterative(&params, 0), frac(-3, 7));
        assert_eq!(w_iterative(&params, 1), frac(5, 2));
    }

    #[test]
    fn w_iterative_rational_step() {
        // W_2 = p b + q a = 2/3 + 1/2
        let params = HoradamParams::new(frac(1, 2), frac(1, 3), int(2), int(1));
        assert_eq!(w_iterative(&params, 2), frac(7, 6));
    }

    #[test]
    fn fl_examples() {
        let fl = fl_iterative(&int(1), &int(1), 4);
        assert_eq!((fl.f, fl.l), (int(3), int(7)));
        let fl = fl_iterative(&int(3), &int(-2), 3);
        assert_eq!((fl.f, fl.l), (int(7), int(9)));
        let fl = fl_iterative(&frac(5, 3), &frac(-1, 2), 0);
        assert_eq!((fl.index, fl.f, fl.l), (0, int(0), int(2)));
        let fl = fl_iterative(&frac(5, 3), &frac(-1, 2), 1);
        assert_eq!((fl.f, fl.l), (int(1), frac(5, 3)));
    }

    #[test]
    fn doubling_examples() {
        let fl = fl_doubling(&int(1), &int(1), 4);
        assert_eq!((fl.f, fl.l), (int(3), int(7)));
        let fl = fl_doubling(&int(2), &int(1), 8);
        assert_eq!((fl.f, fl.l), (int(408), int(1154)));
        let fl = fl_doubling(&frac(-7, 4), &frac(2, 5), 1);
        assert_eq!((fl.index, fl.f, fl.l), (1, int(1), frac(-7, 4)));
        let fl = fl_doubling(&frac(-7, 4), &frac(2, 5), 0);
        assert_eq!((fl.f, fl.l), (int(0), int(2)));
    }

    #[test]
    fn w_from_fl_examples() {
        let fib = HoradamParams::from_ints(0, 1, 1, 1);
        let fl = fl_iterative(&int(1), &int(1), 4);
        assert_eq!(w_from_fl(&fib, &fl), int(3));
        let lucas = HoradamParams::from_ints(2, 1, 1, 1);
        assert_eq!(w_from_fl(&lucas, &fl), int(7));
    }

    #[test]
    fn budget_stops_runaway_growth() {
        let budget = BitBudget::new(Some(64));
        assert!(fl_doubling_within(&int(1), &int(1), 90, &budget).is_ok());
        assert!(fl_doubling_within(&int(1), &int(1), 1000, &budget).is_err());
        assert!(fl_iterative_within(&int(1), &int(1), 1000, &budget).is_err());
        let fib = HoradamParams::from_ints(0, 1, 1, 1);
        assert!(w_iterative_within(&fib, 1000, &budget).is_err());
    }
}
