//! Seeded randomized self-check of every closed form against brute force.
//!
//! Each trial draws one parameter set per degeneracy class plus a free
//! `(p, q)` pair from a ChaCha stream seeded by `--seed`, so a given
//! `(seed, trials, max_n)` always checks the same cases in the same order.

use horadam::{
    decompose_s, decompose_s_degenerate, decompose_sum, gf_s, recombine, sum_oracle_prefixes, BigInt,
    BigRational, Degeneracy, HoradamParams, SumDecomposition,
};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: u64,
    pub max_n: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
    /// First failure in trial order, with the full parameter set.
    pub counterexample: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

pub const CHECKS: [&str; 7] = [
    "oracle_generic",
    "oracle_simple_degenerate",
    "oracle_double_degenerate",
    "doubling_agreement",
    "recombination",
    "weights_match_sum_coefficients",
    "telescoping",
];

/// Largest `n` and `m` used by the telescoping check.
const TELESCOPE_SPAN: u64 = 12;

struct Tally {
    checks: Vec<CheckOutcome>,
    counterexample: Option<String>,
}

impl Tally {
    fn record(&mut self, check: usize, ok: bool, describe: impl FnOnce() -> String) {
        let outcome = &mut self.checks[check];
        outcome.cases += 1;
        if !ok {
            outcome.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(format!("{}: {}", outcome.name, describe()));
            }
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=6);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn generic_params(rng: &mut ChaCha8Rng) -> HoradamParams {
    let (a, b) = (random_rational(rng), random_rational(rng));
    loop {
        let (p, q) = (random_rational(rng), random_rational(rng));
        if !(&p + &q).is_one() {
            return HoradamParams::new(a, b, p, q);
        }
    }
}

fn simple_degenerate_params(rng: &mut ChaCha8Rng) -> HoradamParams {
    let (a, b) = (random_rational(rng), random_rational(rng));
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        let p = random_rational(rng);
        if p != two {
            let q = BigRational::one() - &p;
            return HoradamParams::new(a, b, p, q);
        }
    }
}

fn double_degenerate_params(rng: &mut ChaCha8Rng) -> HoradamParams {
    let (a, b) = (random_rational(rng), random_rational(rng));
    let (p, q) = (BigInt::from(2), BigInt::from(-1));
    HoradamParams::new(a, b, BigRational::from_integer(p), BigRational::from_integer(q))
}

/// Runs every check with the library's own closed-form coefficients.
pub fn run(config: &VerifyConfig) -> VerifyReport {
    run_with(config, decompose_sum)
}

/// Runs every check, taking closed-form coefficients from `decompose`.
pub fn run_with(config: &VerifyConfig, decompose: impl Fn(&HoradamParams) -> SumDecomposition) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut tally = Tally {
        checks: CHECKS.iter().map(|&name| CheckOutcome { name, cases: 0, failures: 0 }).collect(),
        counterexample: None,
    };
    let max_n = config.max_n as usize;

    for _ in 0..config.trials {
        let cases = [
            (0, generic_params(&mut rng)),
            (1, simple_degenerate_params(&mut rng)),
            (2, double_degenerate_params(&mut rng)),
        ];
        for (check, params) in &cases {
            let decomposition = decompose(params);
            let oracle = sum_oracle_prefixes(params, max_n);
            let mismatch = oracle.iter().enumerate().find_map(|(n, expected)| {
                match decomposition.evaluate(params, n as i64) {
                    Ok(v) if &v == expected => None,
                    other => Some((n, other, expected)),
                }
            });
            tally.record(*check, mismatch.is_none(), || {
                let (n, got, expected) = mismatch.clone().unwrap();
                let got = got.map(|v| horadam::format_rational(&v)).unwrap_or_else(|e| e.to_string());
                format!("{params} n={n} closed_form={got} oracle={}", horadam::format_rational(expected))
            });

            let split = match params.classify() {
                Degeneracy::Generic => decompose_s(params),
                _ => decompose_s_degenerate(params),
            };
            let split_ok = split.as_ref().is_ok_and(|terms| recombine(terms) == gf_s(params));
            tally.record(4, split_ok, || format!("{params} weighted split does not recombine to S(z)"));

            let weights_ok = split.as_ref().is_ok_and(|terms| weights_match(&decomposition, terms));
            tally.record(5, weights_ok, || format!("{params} split weights differ from {decomposition:?}"));
        }

        let (_, generic) = &cases[0];
        let decomposition = decompose(generic);
        let span = TELESCOPE_SPAN.min(config.max_n / 2).max(1) as i64;
        let oracle = sum_oracle_prefixes(generic, (2 * span) as usize);
        let mut telescope_failure = None;
        'outer: for n in 1..=span {
            for m in 0..=span {
                let expected = &oracle[(n + m) as usize] - &oracle[(n - 1) as usize];
                if decomposition.range(generic, n, m).ok().as_ref() != Some(&expected) {
                    telescope_failure = Some((n, m));
                    break 'outer;
                }
            }
        }
        tally.record(6, telescope_failure.is_none(), || {
            let (n, m) = telescope_failure.unwrap();
            format!("{generic} n={n} m={m}")
        });

        let (p, q) = (random_rational(&mut rng), random_rational(&mut rng));
        let mismatch = doubling_mismatch(&p, &q, config.max_n);
        tally.record(3, mismatch.is_none(), || {
            format!("p={} q={} n={}", horadam::format_rational(&p), horadam::format_rational(&q), mismatch.unwrap())
        });
    }

    VerifyReport { checks: tally.checks, counterexample: tally.counterexample }
}

/// First `n <= max_n` where doubling disagrees with a plain rational iteration.
fn doubling_mismatch(p: &BigRational, q: &BigRational, max_n: u64) -> Option<u64> {
    let mut f = (BigRational::from_integer(0.into()), BigRational::one());
    let mut l = (BigRational::from_integer(2.into()), p.clone());
    for n in 0..=max_n {
        let fast = horadam::fl_doubling(p, q, n);
        if fast.f != f.0 || fast.l != l.0 {
            return Some(n);
        }
        f = (f.1.clone(), p * &f.1 + q * &f.0);
        l = (l.1.clone(), p * &l.1 + q * &l.0);
    }
    None
}

fn weights_match(decomposition: &SumDecomposition, terms: &[horadam::WeightedTerm]) -> bool {
    let w: Vec<&BigRational> = terms.iter().map(|t| &t.weight).collect();
    match decomposition {
        SumDecomposition::Generic { constant, f_coeff, l_coeff } => w == [constant, f_coeff, l_coeff],
        SumDecomposition::SimpleDegenerate { constant, linear, geometric } => w == [linear, constant, geometric],
        SumDecomposition::DoubleDegenerate { quadratic, linear, constant } => {
            // weights (a, b - 2a) on 1/(1-z)^3 and z/(1-z)^3
            let two = BigRational::from_integer(2.into());
            let three = BigRational::from_integer(3.into());
            w.len() == 2
                && constant == w[0]
                && *quadratic == (w[0] + w[1]) / &two
                && *linear == (&three * w[0] + w[1]) / &two
        }
    }
}
