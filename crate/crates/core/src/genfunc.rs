//! Rational generating functions `N(z) / D(z)` and the partial-fraction
//! splits of the partial-sum generating function `S(z)`.

use std::fmt;
use std::ops::Add;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, BitBudget};
use crate::poly::Polynomial;
use crate::sequences::{Degeneracy, HoradamParams};

/// A formal rational function. Never reduced to lowest terms; equality is by
/// cross-multiplication.
#[derive(Debug, Clone)]
pub struct RationalGF {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalGF {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self { numerator, denominator })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self { numerator: p, denominator: Polynomial::one() }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self { numerator: self.numerator.scale(k), denominator: self.denominator.clone() }
    }

    /// Multiplies the denominator by `factor`.
    pub fn divide_by(&self, factor: &Polynomial) -> Result<Self> {
        Self::new(self.numerator.clone(), &self.denominator * factor)
    }

    /// First `count` coefficients of the power series at `z = 0`.
    pub fn coefficients(&self, count: usize) -> Result<Vec<BigRational>> {
        self.coefficients_within(count, &BitBudget::UNLIMITED)
    }

    /// Runs `d_0 c_n = N_n - sum_{k>=1} d_k c_{n-k}`.
    pub fn coefficients_within(&self, count: usize, budget: &BitBudget) -> Result<Vec<BigRational>> {
        let d0 = self.denominator.coeff(0);
        if d0.is_zero() {
            return Err(Error::NoExpansion);
        }
        let inv_d0 = d0.recip();
        let den = self.denominator.coefficients();
        let mut out: Vec<BigRational> = Vec::with_capacity(count);
        for n in 0..count {
            let mut acc = self.numerator.coeff(n);
            for (k, dk) in den.iter().enumerate().skip(1).take(n) {
                if !dk.is_zero() {
                    acc -= dk * &out[n - k];
                }
            }
            let c = acc * &inv_d0;
            budget.check(&c)?;
            out.push(c);
        }
        Ok(out)
    }
}

impl PartialEq for RationalGF {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalGF {}

impl Add for &RationalGF {
    type Output = RationalGF;
    fn add(self, rhs: Self) -> RationalGF {
        RationalGF {
            numerator: &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator),
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

fn poly(coeffs: Vec<BigRational>) -> Polynomial {
    Polynomial::new(coeffs)
}

/// `1 - p z - q z^2`
pub fn characteristic_denominator(p: &BigRational, q: &BigRational) -> Polynomial {
    poly(vec![BigRational::one(), -p, -q])
}

fn one_minus_z() -> Polynomial {
    poly(vec![BigRational::one(), -BigRational::one()])
}

/// `W(z) = (a + (b - p a) z) / (1 - p z - q z^2)`
pub fn gf_w(params: &HoradamParams) -> RationalGF {
    let num = poly(vec![params.a.clone(), &params.b - &params.p * &params.a]);
    RationalGF { numerator: num, denominator: characteristic_denominator(&params.p, &params.q) }
}

/// `F(z) = z / (1 - p z - q z^2)`
pub fn gf_f(p: &BigRational, q: &BigRational) -> RationalGF {
    RationalGF { numerator: Polynomial::z(), denominator: characteristic_denominator(p, q) }
}

/// `L(z) = (2 - p z) / (1 - p z - q z^2)`
pub fn gf_l(p: &BigRational, q: &BigRational) -> RationalGF {
    RationalGF { numerator: poly(vec![exact::int(2), -p]), denominator: characteristic_denominator(p, q) }
}

/// `S(z) = W(z) / (1 - z)`
pub fn gf_s(params: &HoradamParams) -> RationalGF {
    let w = gf_w(params);
    RationalGF { numerator: w.numerator, denominator: &w.denominator * &one_minus_z() }
}

/// First `count` series coefficients of `gf`.
pub fn coefficients(gf: &RationalGF, count: usize) -> Result<Vec<BigRational>> {
    gf.coefficients(count)
}

/// `weight * term`, one summand of a partial-fraction split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTerm {
    pub weight: BigRational,
    pub term: RationalGF,
}

impl WeightedTerm {
    fn new(weight: BigRational, term: RationalGF) -> Self {
        Self { weight, term }
    }
}

/// Sums the weighted terms over the product of their denominators.
pub fn recombine(terms: &[WeightedTerm]) -> RationalGF {
    terms.iter().fold(RationalGF::from_polynomial(Polynomial::zero()), |acc, t| {
        &acc + &t.term.scale(&t.weight)
    })
}

/// The three-term split of `S(z)` over `1/(1-z)`, `F(z)` and `L(z)`:
///
/// ```text
/// S(z) = (a - p a + b)/(1 - p - q)              * 1/(1 - z)
///      - (2qa - pqa + 2qb + pb)/(2(1 - p - q))  * F(z)
///      - (qa + b)/(2(1 - p - q))                * L(z)
/// ```
pub fn decompose_s(params: &HoradamParams) -> Result<Vec<WeightedTerm>> {
    if params.classify() != Degeneracy::Generic {
        return Err(Error::SingularSplit);
    }
    let HoradamParams { a, b, p, q } = params;
    let two = exact::int(2);
    let denom = BigRational::one() - p - q;

    let w_const = (a - p * a + b) / &denom;
    let w_f = -(&two * q * a - p * q * a + &two * q * b + p * b) / (&two * &denom);
    let w_l = -(q * a + b) / (&two * &denom);

    let geometric = RationalGF { numerator: Polynomial::one(), denominator: one_minus_z() };
    Ok(vec![
        WeightedTerm::new(w_const, geometric),
        WeightedTerm::new(w_f, gf_f(p, q)),
        WeightedTerm::new(w_l, gf_l(p, q)),
    ])
}

/// Partial fractions of `S(z)` when `1 - p - q = 0`.
///
/// `p + q = 1` factors the denominator as `(1-z)^2 (1+qz)` and the basis is
/// `1/(1-z)^2, 1/(1-z), 1/(1+qz)`. At `(p, q) = (2, -1)` it is `(1-z)^3` and
/// the basis is `1/(1-z)^3, z/(1-z)^3`. Weights come from matching
/// coefficients of the numerator against the basis cofactors.
pub fn decompose_s_degenerate(params: &HoradamParams) -> Result<Vec<WeightedTerm>> {
    let one = BigRational::one();
    let omz = one_minus_z();
    let (basis, cofactors): (Vec<RationalGF>, Vec<Polynomial>) = match params.classify() {
        Degeneracy::Generic => return Err(Error::UseGenericSplit),
        Degeneracy::SimpleDegenerate => {
            let tail = poly(vec![one.clone(), params.q.clone()]);
            (
                vec![
                    RationalGF { numerator: Polynomial::one(), denominator: omz.pow(2) },
                    RationalGF { numerator: Polynomial::one(), denominator: omz.clone() },
                    RationalGF { numerator: Polynomial::one(), denominator: tail.clone() },
                ],
                vec![tail.clone(), &omz * &tail, omz.pow(2)],
            )
        }
        Degeneracy::DoubleDegenerate => (
            vec![
                RationalGF { numerator: Polynomial::one(), denominator: omz.pow(3) },
                RationalGF { numerator: Polynomial::z(), denominator: omz.pow(3) },
            ],
            vec![Polynomial::one(), Polynomial::z()],
        ),
    };

    let numerator = gf_s(params).numerator;
    let size = basis.len();
    let matrix: Vec<Vec<BigRational>> = (0..size)
        .map(|row| cofactors.iter().map(|c| c.coeff(row)).collect())
        .collect();
    let rhs: Vec<BigRational> = (0..size).map(|row| numerator.coeff(row)).collect();
    let weights = solve_linear_system(matrix, rhs)?;

    Ok(weights
        .into_iter()
        .zip(basis)
        .map(|(w, t)| WeightedTerm::new(w, t))
        .collect())
}

/// Gauss-Jordan elimination over the rationals for a square system.
pub fn solve_linear_system(
    mut matrix: Vec<Vec<BigRational>>,
    mut rhs: Vec<BigRational>,
) -> Result<Vec<BigRational>> {
    let n = rhs.len();
    assert!(matrix.len() == n && matrix.iter().all(|row| row.len() == n), "system must be square");
    for col in 0..n {
        let pivot = (col..n).find(|&r| !matrix[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        matrix.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = matrix[col][col].recip();
        for x in matrix[col].iter_mut() {
            *x *= &inv;
        }
        rhs[col] *= &inv;
        for row in 0..n {
            if row == col || matrix[row][col].is_zero() {
                continue;
            }
            let factor = matrix[row][col].clone();
            for k in col..n {
                let delta = &factor * &matrix[col][k];
                matrix[row][k] -= delta;
            }
            let delta = &factor * &rhs[col];
            rhs[row] -= delta;
        }
    }
    Ok(rhs)
}
