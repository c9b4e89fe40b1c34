//! Exact evaluation of Horadam sequences `W_n(a, b; p, q)` and sum-free
//! closed forms for their partial sums.
//!
//! Every value is an exact rational. The sequences `F_n` and `L_n`
//! (the generalised Fibonacci and Lucas numbers for `(p, q)`) form the basis
//! for all closed forms; they are available both by plain iteration and by
//! an `O(log n)` doubling scheme.

pub mod error;
pub mod exact;
pub mod genfunc;
pub mod poly;
pub mod quadratic;
pub mod sequences;
pub mod sums;

pub use error::{Error, Result};
pub use exact::{format_rational, parse_rational, BitBudget};
pub use genfunc::{
    coefficients, decompose_s, decompose_s_degenerate, gf_f, gf_l, gf_s, gf_w, recombine, RationalGF,
    WeightedTerm,
};
pub use poly::Polynomial;
pub use quadratic::{binet_check, characteristic_roots, BinetCheck, FibonacciIdentity, QuadraticNumber};
pub use sequences::{
    classify, fl_doubling, fl_doubling_within, fl_iterative, fl_iterative_within, w_from_fl, w_iterative,
    w_iterative_within, Degeneracy, FLPair, HoradamParams,
};
pub use sums::{
    decompose_sum, partial_sum, partial_sum_within, range_sum, range_sum_within, sum_oracle, sum_oracle_prefixes,
    SumDecomposition,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
