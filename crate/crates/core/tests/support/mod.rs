#![allow(dead_code)]

use horadam::{BigInt, BigRational, HoradamParams};
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=7).prop_map(|(n, d)| frac(n, d))
}

pub fn params() -> impl Strategy<Value = HoradamParams> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, p, q)| HoradamParams::new(a, b, p, q))
}

pub fn generic_params() -> impl Strategy<Value = HoradamParams> {
    params().prop_filter("1 - p - q must be nonzero", |h| !(&h.p + &h.q).is_one())
}

pub fn simple_degenerate_params() -> impl Strategy<Value = HoradamParams> {
    (rational(), rational(), rational())
        .prop_filter("p = 2 is the doubly degenerate case", |(_, _, p)| *p != int(2))
        .prop_map(|(a, b, p)| {
            let q = int(1) - &p;
            HoradamParams::new(a, b, p, q)
        })
}

pub fn double_degenerate_params() -> impl Strategy<Value = HoradamParams> {
    (rational(), rational()).prop_map(|(a, b)| HoradamParams::new(a, b, int(2), int(-1)))
}

/// Plain rational iteration of x_n = p x_{n-1} + q x_{n-2}, all terms up to n.
pub fn naive_sequence(x0: &BigRational, x1: &BigRational, p: &BigRational, q: &BigRational, n: usize) -> Vec<BigRational> {
    let mut out = vec![x0.clone(), x1.clone()];
    while out.len() <= n {
        let k = out.len();
        let next = p * &out[k - 1] + q * &out[k - 2];
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// Residue of a rational modulo a prime, or None if the denominator vanishes.
pub fn residue(x: &BigRational, modulus: u64) -> Option<u64> {
    let m = BigInt::from(modulus);
    let reduce = |v: &BigInt| -> u64 {
        let r = ((v % &m) + &m) % &m;
        r.try_into().unwrap()
    };
    let num = reduce(x.numer());
    let den = reduce(x.denom());
    if den.is_zero() {
        return None;
    }
    Some(mul_mod(num, pow_mod(den, modulus - 2, modulus), modulus))
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// (F_n, L_n) mod a prime by stepping the recurrence in modular arithmetic.
pub fn fl_mod(p: &BigRational, q: &BigRational, n: u64, m: u64) -> (u64, u64) {
    let p = residue(p, m).unwrap();
    let q = residue(q, m).unwrap();
    let (mut f0, mut f1) = (0u64, 1u64);
    let (mut l0, mut l1) = (2 % m, p);
    if n == 0 {
        return (f0, l0);
    }
    for _ in 1..n {
        let f2 = (mul_mod(p, f1, m) + mul_mod(q, f0, m)) % m;
        let l2 = (mul_mod(p, l1, m) + mul_mod(q, l0, m)) % m;
        (f0, f1, l0, l1) = (f1, f2, l1, l2);
    }
    (f1, l1)
}

pub const MERSENNE_61: u64 = (1 << 61) - 1;
