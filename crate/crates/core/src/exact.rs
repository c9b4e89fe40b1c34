//! Exact rational helpers.
//!
//! `num-rational` normalises every result with a binary gcd whose cost grows
//! with the bit length of the larger operand even when the other one is 1.
//! Values such as `F_n` at `n = 10^6` have hundreds of thousands of bits, so
//! anything touching them goes through the helpers here, which reduce with a
//! Euclidean gcd (a single remainder step when one side is small).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Euclidean gcd, always non-negative.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut x = a.abs();
    let mut y = b.abs();
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    x
}

/// Builds `num / den` in lowest terms with a positive denominator.
///
/// Panics if `den` is zero.
pub fn ratio(num: BigInt, den: BigInt) -> BigRational {
    assert!(!den.is_zero(), "zero denominator");
    let (mut num, mut den) = if den.is_negative() { (-num, -den) } else { (num, den) };
    if num.is_zero() {
        return BigRational::zero();
    }
    if !den.is_one() {
        let g = gcd(&num, &den);
        if !g.is_one() {
            num = num.div_floor(&g);
            den = den.div_floor(&g);
        }
    }
    BigRational::new_raw(num, den)
}

/// Builds `num / den` in lowest terms, where every prime factor of `den`
/// divides the small integer `base`.
///
/// Common factors are stripped by repeated gcds against `base`, each costing
/// one remainder by a small divisor, so a huge denominator such as `d^n`
/// never goes through a full Euclidean gcd.
pub fn ratio_smooth(num: BigInt, den: BigInt, base: &BigInt) -> BigRational {
    assert!(!den.is_zero(), "zero denominator");
    let (mut num, mut den) = if den.is_negative() { (-num, -den) } else { (num, den) };
    if num.is_zero() {
        return BigRational::zero();
    }
    let base = base.abs();
    while !den.is_one() {
        let h = gcd(&gcd(&(&num % &base), &base), &(&den % &base));
        if h.is_one() {
            break;
        }
        // strip the largest h^(2^k) dividing both
        let mut chunk = h;
        loop {
            let square = &chunk * &chunk;
            if (&num % &square).is_zero() && (&den % &square).is_zero() {
                chunk = square;
            } else {
                break;
            }
        }
        num /= &chunk;
        den /= &chunk;
    }
    BigRational::new_raw(num, den)
}

/// Exact `sum(coef_i * value_i)`, reduced once at the end.
///
/// Every prime factor of every value's denominator must divide `base`;
/// coefficient denominators are folded into it here.
pub fn combine(terms: &[(&BigRational, &BigRational)], base: &BigInt) -> BigRational {
    let products: Vec<(BigInt, BigInt)> = terms
        .iter()
        .filter(|(c, v)| !c.is_zero() && !v.is_zero())
        .map(|(c, v)| (c.numer() * v.numer(), c.denom() * v.denom()))
        .collect();
    let mut dens: Vec<&BigInt> = Vec::new();
    for (_, den) in &products {
        if !den.is_one() && !dens.contains(&den) {
            dens.push(den);
        }
    }
    let common: BigInt = dens.iter().copied().product();
    let num = products.iter().fold(BigInt::zero(), |acc, (n, d)| {
        if d.is_one() {
            acc + n * &common
        } else {
            acc + n * (&common / d)
        }
    });
    let base = terms.iter().fold(base.abs(), |acc, (c, _)| acc * c.denom());
    ratio_smooth(num, common, &base)
}

/// Bit length of the larger of numerator and denominator.
pub fn bit_len(x: &BigRational) -> u64 {
    x.numer().bits().max(x.denom().bits())
}

/// Optional ceiling on the bit length of intermediate integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BitBudget {
    limit: Option<u64>,
}

impl BitBudget {
    pub const UNLIMITED: BitBudget = BitBudget { limit: None };

    pub fn new(limit: Option<u64>) -> Self {
        Self { limit }
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    pub fn check_int(&self, x: &BigInt) -> Result<()> {
        match self.limit {
            Some(limit) if x.bits() > limit => Err(Error::BitLimitExceeded { bits: x.bits(), limit }),
            _ => Ok(()),
        }
    }

    pub fn check(&self, x: &BigRational) -> Result<()> {
        match self.limit {
            Some(limit) if bit_len(x) > limit => Err(Error::BitLimitExceeded { bits: bit_len(x), limit }),
            _ => Ok(()),
        }
    }
}

/// Error from [`parse_rational`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
    reason: &'static str,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational '{}': {}", self.input, self.reason)
    }
}

impl std::error::Error for ParseRationalError {}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses `[+-]digits[/digits]` with a nonzero denominator.
///
/// Decimal points and exponents are rejected so no value is ever read as a
/// float.
pub fn parse_rational(input: &str) -> std::result::Result<BigRational, ParseRationalError> {
    let err = |reason| ParseRationalError { input: input.to_owned(), reason };
    let (negative, body) = match input.as_bytes().first() {
        Some(b'-') => (true, &input[1..]),
        Some(b'+') => (false, &input[1..]),
        _ => (false, input),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !is_digits(num) {
        return Err(err("expected an optionally signed decimal integer numerator"));
    }
    let mut numer = BigInt::from_str(num).map_err(|_| err("malformed numerator"))?;
    if negative {
        numer = -numer;
    }
    let denom = match den {
        None => BigInt::one(),
        Some(d) if is_digits(d) => BigInt::from_str(d).map_err(|_| err("malformed denominator"))?,
        Some(_) => return Err(err("denominator must be an unsigned decimal integer")),
    };
    if denom.is_zero() {
        return Err(err("denominator is zero"));
    }
    Ok(ratio(numer, denom))
}

/// `"num/den"`, or just `"num"` when the denominator is 1.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`.
pub fn frac(num: i64, den: i64) -> BigRational {
    ratio(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for a non-negative exponent. Numerator and denominator are
/// raised separately, so no reduction is needed.
pub fn pow(base: &BigRational, exp: u64) -> BigRational {
    use num_traits::Pow;
    BigRational::new_raw(Pow::pow(base.numer(), exp), Pow::pow(base.denom(), exp))
}
