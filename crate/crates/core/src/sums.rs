//! Sum-free closed forms for `S_n = W_0 + ... + W_n` and for range sums.
//!
//! When `1 - p - q != 0`, `S_n` is a fixed combination of `1`, `F_n` and
//! `L_n`. The other two parameter classes put a root of `1 - pz - qz^2` at
//! `z = 1`, where that combination has a zero denominator; there the sum is
//! read off a partial-fraction split over powers of `1 - z` instead.
//!
//! `S_{-1} = 0` (empty sum) so that `S_{n+m} - S_{n-1}` is defined for `n >= 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, BitBudget};
use crate::sequences::{fl_doubling_within, Degeneracy, HoradamParams};

/// Coefficients of the closed form for `S_n`, one variant per degeneracy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SumDecomposition {
    /// `S_n = constant + f_coeff * F_n + l_coeff * L_n`
    Generic { constant: BigRational, f_coeff: BigRational, l_coeff: BigRational },
    /// `S_n = constant + linear * (n + 1) + geometric * (-q)^n`
    SimpleDegenerate { constant: BigRational, linear: BigRational, geometric: BigRational },
    /// `S_n = quadratic * n^2 + linear * n + constant`
    DoubleDegenerate { quadratic: BigRational, linear: BigRational, constant: BigRational },
}

impl SumDecomposition {
    pub fn class(&self) -> Degeneracy {
        match self {
            SumDecomposition::Generic { .. } => Degeneracy::Generic,
            SumDecomposition::SimpleDegenerate { .. } => Degeneracy::SimpleDegenerate,
            SumDecomposition::DoubleDegenerate { .. } => Degeneracy::DoubleDegenerate,
        }
    }

    /// `S_n` from these coefficients. `params` supplies `(p, q)`.
    pub fn evaluate(&self, params: &HoradamParams, n: i64) -> Result<BigRational> {
        self.evaluate_within(params, n, &BitBudget::UNLIMITED)
    }

    pub fn evaluate_within(&self, params: &HoradamParams, n: i64, budget: &BitBudget) -> Result<BigRational> {
        check_index(n, -1)?;
        if n == -1 {
            return Ok(BigRational::zero());
        }
        let one = BigRational::one();
        let base = params.denominator_base();
        let value = match self {
            SumDecomposition::Generic { constant, f_coeff, l_coeff } => {
                let fl = fl_doubling_within(&params.p, &params.q, n as u64, budget)?;
                exact::combine(&[(&one, constant), (f_coeff, &fl.f), (l_coeff, &fl.l)], &base)
            }
            SumDecomposition::SimpleDegenerate { constant, linear, geometric } => {
                let neg_q = -&params.q;
                let power = exact::pow(&neg_q, n as u64);
                budget.check(&power)?;
                let count = BigRational::from_integer(BigInt::from(n) + 1);
                exact::combine(&[(&one, constant), (linear, &count), (geometric, &power)], &base)
            }
            SumDecomposition::DoubleDegenerate { quadratic, linear, constant } => {
                let n = BigRational::from_integer(BigInt::from(n));
                let n2 = &n * &n;
                exact::combine(&[(quadratic, &n2), (linear, &n), (&one, constant)], &base)
            }
        };
        budget.check(&value)?;
        Ok(value)
    }

    /// `W_n + ... + W_{n+m}`.
    ///
    /// In the generic class the constant cancels and the sum is
    /// `f_coeff (F_{n+m} - F_{n-1}) + l_coeff (L_{n+m} - L_{n-1})`; the other
    /// classes subtract two partial sums.
    pub fn range_within(&self, params: &HoradamParams, n: i64, m: i64, budget: &BitBudget) -> Result<BigRational> {
        check_index(n, 1)?;
        check_index(m, 0)?;
        match self {
            SumDecomposition::Generic { f_coeff, l_coeff, .. } => {
                let hi = fl_doubling_within(&params.p, &params.q, (n + m) as u64, budget)?;
                let lo = fl_doubling_within(&params.p, &params.q, (n - 1) as u64, budget)?;
                let (neg_f, neg_l) = (-f_coeff, -l_coeff);
                let value = exact::combine(&[
                    (f_coeff, &hi.f),
                    (&neg_f, &lo.f),
                    (l_coeff, &hi.l),
                    (&neg_l, &lo.l),
                ], &params.denominator_base());
                budget.check(&value)?;
                Ok(value)
            }
            _ => {
                let hi = self.evaluate_within(params, n + m, budget)?;
                let lo = self.evaluate_within(params, n - 1, budget)?;
                let (one, minus_one) = (BigRational::one(), -BigRational::one());
                Ok(exact::combine(&[(&one, &hi), (&minus_one, &lo)], &params.denominator_base()))
            }
        }
    }

    pub fn range(&self, params: &HoradamParams, n: i64, m: i64) -> Result<BigRational> {
        self.range_within(params, n, m, &BitBudget::UNLIMITED)
    }
}

fn check_index(index: i64, min: i64) -> Result<()> {
    if index < min {
        Err(Error::IndexOutOfDomain { index, min })
    } else {
        Ok(())
    }
}

/// `S_n` by literally adding the recurrence terms one at a time.
pub fn sum_oracle(params: &HoradamParams, n: i64) -> Result<BigRational> {
    check_index(n, -1)?;
    let mut total = BigRational::zero();
    let (mut prev, mut cur) = (params.a.clone(), params.b.clone());
    for _ in 0..=n {
        total += &prev;
        let next = &params.p * &cur + &params.q * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(total)
}

/// `[S_0, ..., S_n]` by running totals of the recurrence terms, the same
/// computation as [`sum_oracle`] with every prefix kept.
pub fn sum_oracle_prefixes(params: &HoradamParams, n: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut total = BigRational::zero();
    let (mut prev, mut cur) = (params.a.clone(), params.b.clone());
    for _ in 0..=n {
        total += &prev;
        out.push(total.clone());
        let next = &params.p * &cur + &params.q * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    out
}

/// Exact closed-form coefficients for the class of `params`.
pub fn decompose_sum(params: &HoradamParams) -> SumDecomposition {
    let HoradamParams { a, b, p, q } = params;
    let one = BigRational::one();
    let two = exact::int(2);
    match params.classify() {
        Degeneracy::Generic => {
            let denom = &one - p - q;
            SumDecomposition::Generic {
                constant: (a - p * a + b) / &denom,
                f_coeff: -(&two * q * a - p * q * a + &two * q * b + p * b) / (&two * &denom),
                l_coeff: -(q * a + b) / (&two * &denom),
            }
        }
        Degeneracy::SimpleDegenerate => {
            // a + (b - pa) z = alpha (1 + qz) + beta (1 - z)(1 + qz) + gamma (1 - z)^2
            // z = 1 isolates alpha; z^0 and z^2 then give beta and gamma = q beta.
            let one_plus_q = &one + q;
            let alpha = (a + b - p * a) / &one_plus_q;
            let beta = (a - &alpha) / &one_plus_q;
            let gamma = q * &beta;
            SumDecomposition::SimpleDegenerate { constant: beta, linear: alpha, geometric: gamma }
        }
        Degeneracy::DoubleDegenerate => {
            // a C(n+2, 2) + (b - 2a) C(n+1, 2)
            SumDecomposition::DoubleDegenerate {
                quadratic: (b - a) / &two,
                linear: (a + b) / &two,
                constant: a.clone(),
            }
        }
    }
}

/// `S_n` from the closed form. `n = -1` gives 0.
pub fn partial_sum(params: &HoradamParams, n: i64) -> Result<BigRational> {
    partial_sum_within(params, n, &BitBudget::UNLIMITED)
}

pub fn partial_sum_within(params: &HoradamParams, n: i64, budget: &BitBudget) -> Result<BigRational> {
    decompose_sum(params).evaluate_within(params, n, budget)
}

/// `W_n + ... + W_{n+m}` for `n >= 1`, `m >= 0`.
pub fn range_sum(params: &HoradamParams, n: i64, m: i64) -> Result<BigRational> {
    range_sum_within(params, n, m, &BitBudget::UNLIMITED)
}

pub fn range_sum_within(params: &HoradamParams, n: i64, m: i64, budget: &BitBudget) -> Result<BigRational> {
    decompose_sum(params).range_within(params, n, m, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn oracle_examples() {
        let fib = HoradamParams::from_ints(0, 1, 1, 1);
        assert_eq!(sum_oracle(&fib, 4).unwrap(), int(7));
        assert_eq!(sum_oracle(&fib, -1).unwrap(), int(0));
        assert_eq!(sum_oracle(&HoradamParams::from_ints(1, 2, 2, -1), 3).unwrap(), int(10));
        assert_eq!(sum_oracle_prefixes(&fib, 5), [0, 1, 2, 4, 7, 12].map(int).to_vec());
        assert_eq!(sum_oracle(&fib, -2), Err(Error::IndexOutOfDomain { index: -2, min: -1 }));
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(
            decompose_sum(&HoradamParams::from_ints(0, 1, 1, 1)),
            SumDecomposition::Generic { constant: int(-1), f_coeff: frac(3, 2), l_coeff: frac(1, 2) }
        );
        assert_eq!(
            decompose_sum(&HoradamParams::from_ints(1, 2, 2, -1)),
            SumDecomposition::DoubleDegenerate { quadratic: frac(1, 2), linear: frac(3, 2), constant: int(1) }
        );
        assert_eq!(
            decompose_sum(&HoradamParams::from_ints(1, 1, 3, -2)),
            SumDecomposition::SimpleDegenerate { constant: int(0), linear: int(1), geometric: int(0) }
        );
        for params in [
            HoradamParams::from_ints(0, 0, 5, 7),
            HoradamParams::from_ints(0, 0, 3, -2),
            HoradamParams::from_ints(0, 0, 2, -1),
        ] {
            let zero = match decompose_sum(&params) {
                SumDecomposition::Generic { constant, f_coeff, l_coeff } => [constant, f_coeff, l_coeff],
                SumDecomposition::SimpleDegenerate { constant, linear, geometric } => [constant, linear, geometric],
                SumDecomposition::DoubleDegenerate { quadratic, linear, constant } => [quadratic, linear, constant],
            };
            assert!(zero.iter().all(Zero::is_zero), "{params}");
        }
    }

    #[test]
    fn partial_sum_examples() {
        let fib = HoradamParams::from_ints(0, 1, 1, 1);
        assert_eq!(partial_sum(&fib, 4).unwrap(), int(7));
        assert_eq!(partial_sum(&fib, -1).unwrap(), int(0));
        let params = HoradamParams::new(frac(-5, 3), int(2), frac(1, 7), int(9));
        assert_eq!(partial_sum(&params, 0).unwrap(), frac(-5, 3));
        let ones = HoradamParams::from_ints(1, 1, 3, -2);
        assert_eq!(partial_sum(&ones, 3).unwrap(), sum_oracle(&ones, 3).unwrap());
        assert_eq!(partial_sum(&ones, 3).unwrap(), int(4));
        assert!(matches!(partial_sum(&fib, -5), Err(Error::IndexOutOfDomain { .. })));
    }

    #[test]
    fn double_degenerate_is_triangular() {
        let params = HoradamParams::from_ints(1, 2, 2, -1);
        for n in 0..=10i64 {
            assert_eq!(partial_sum(&params, n).unwrap(), int((n + 1) * (n + 2) / 2));
            assert_eq!(partial_sum(&params, n).unwrap(), sum_oracle(&params, n).unwrap());
        }
    }

    #[test]
    fn simple_degenerate_with_zero_q() {
        // p = 1, q = 0: W = a, b, b, b, ...
        let params = HoradamParams::from_ints(3, 5, 1, 0);
        for n in 0..10 {
            assert_eq!(partial_sum(&params, n).unwrap(), sum_oracle(&params, n).unwrap());
        }
    }

    #[test]
    fn range_examples() {
        let fib = HoradamParams::from_ints(0, 1, 1, 1);
        assert_eq!(range_sum(&fib, 2, 2).unwrap(), int(6));
        let params = HoradamParams::new(frac(4, 9), frac(-11, 2), frac(2, 3), int(5));
        assert_eq!(range_sum(&params, 1, 0).unwrap(), frac(-11, 2));
        assert_eq!(range_sum(&HoradamParams::from_ints(2, 1, 1, 1), 1, 3).unwrap(), int(15));
        assert_eq!(range_sum(&fib, 0, 3), Err(Error::IndexOutOfDomain { index: 0, min: 1 }));
        assert_eq!(range_sum(&fib, 1, -1), Err(Error::IndexOutOfDomain { index: -1, min: 0 }));
    }

    #[test]
    fn degenerate_ranges() {
        for params in [HoradamParams::from_ints(1, 2, 2, -1), HoradamParams::from_ints(2, -1, 3, -2)] {
            for n in 1..6 {
                for m in 0..6 {
                    let expected = sum_oracle(&params, n + m).unwrap() - sum_oracle(&params, n - 1).unwrap();
                    assert_eq!(range_sum(&params, n, m).unwrap(), expected);
                }
            }
        }
    }
}
