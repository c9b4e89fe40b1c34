//! Subcommand implementations. Each returns an [`OutputRecord`] or a
//! [`CliError`] carrying the process exit code.

use std::fmt;

use horadam::{
    fl_doubling_within, gf_f, gf_l, gf_s, gf_w, range_sum_within, partial_sum_within, w_from_fl,
    w_iterative_within, BitBudget, Error, HoradamParams, SumDecomposition,
};

use crate::args::{parse_index_range, Cli, Command, Method, Which};
use crate::record::{OutputRecord, ResultEntry};
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BIT_LIMIT: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BitLimitExceeded { .. } => EXIT_BIT_LIMIT,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

/// The record plus the exit code it should end with (only `verify` can
/// produce a non-zero code here).
pub struct Outcome {
    pub record: OutputRecord,
    pub code: i32,
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let budget = BitBudget::new(cli.max_bits);
    let record = match &cli.command {
        Command::Eval { params, n, method } => eval(&params.to_params(), n, *method, &budget)?,
        Command::Sum { params, n } => sum(&params.to_params(), *n, &budget)?,
        Command::Range { params, n, m } => range(&params.to_params(), *n, *m, &budget)?,
        Command::Gf { params, which, terms } => gf(&params.to_params(), *which, *terms, &budget)?,
        Command::Verify { seed, trials, max_n } => {
            return Ok(verify(&VerifyConfig { seed: *seed, trials: *trials, max_n: *max_n }));
        }
    };
    Ok(Outcome { record, code: EXIT_OK })
}

pub fn eval(params: &HoradamParams, n: &str, method: Method, budget: &BitBudget) -> Result<OutputRecord, CliError> {
    let (lo, hi) = parse_index_range(n).map_err(|e| CliError::usage(format!("invalid value for -n: {e}")))?;
    let mut record = OutputRecord::new("eval").with_params(params);
    record.method = Some(
        match method {
            Method::Iter => "iter",
            Method::Doubling => "doubling",
        }
        .to_owned(),
    );
    for k in lo..=hi {
        let value = match method {
            Method::Iter => w_iterative_within(params, k, budget)?,
            Method::Doubling => {
                let fl = fl_doubling_within(&params.p, &params.q, k, budget)?;
                let w = w_from_fl(params, &fl);
                budget.check(&w)?;
                w
            }
        };
        record.results.push(ResultEntry::new(k, &value, format!("W_{k}")));
    }
    Ok(record)
}

pub fn sum(params: &HoradamParams, n: i64, budget: &BitBudget) -> Result<OutputRecord, CliError> {
    let value = partial_sum_within(params, n, budget)?;
    let mut record = OutputRecord::new("sum").with_params(params);
    record.results.push(ResultEntry::new(n, &value, format!("S_{n}")));
    Ok(record)
}

pub fn range(params: &HoradamParams, n: i64, m: i64, budget: &BitBudget) -> Result<OutputRecord, CliError> {
    let value = range_sum_within(params, n, m, budget)?;
    let mut record = OutputRecord::new("range").with_params(params);
    let last = n.saturating_add(m);
    record.results.push(ResultEntry::new(format!("{n}..={last}"), &value, format!("W_{n} + ... + W_{last}")));
    Ok(record)
}

pub fn gf(params: &HoradamParams, which: Which, terms: u64, budget: &BitBudget) -> Result<OutputRecord, CliError> {
    let (name, gf) = match which {
        Which::W => ("W", gf_w(params)),
        Which::F => ("F", gf_f(&params.p, &params.q)),
        Which::L => ("L", gf_l(&params.p, &params.q)),
        Which::S => ("S", gf_s(params)),
    };
    let count = usize::try_from(terms).map_err(|_| CliError::usage("--terms is too large"))?;
    let coeffs = gf.coefficients_within(count, budget)?;
    let mut record = OutputRecord::new("gf").with_params(params);
    record.which = Some(name.to_owned());
    let list = |p: &horadam::Polynomial| p.coefficients().iter().map(horadam::format_rational).collect();
    record.numerator = Some(list(gf.numerator()));
    record.denominator = Some(list(gf.denominator()));
    for (k, c) in coeffs.iter().enumerate() {
        record.results.push(ResultEntry::new(k, c, format!("[z^{k}] {name}(z)")));
    }
    Ok(record)
}

pub fn verify(config: &VerifyConfig) -> Outcome {
    verify_with(config, horadam::decompose_sum)
}

/// `verify` with the closed-form coefficients supplied by `decompose`.
pub fn verify_with(config: &VerifyConfig, decompose: impl Fn(&HoradamParams) -> SumDecomposition) -> Outcome {
    let report = verify::run_with(config, decompose);
    let mut record = OutputRecord::new("verify");
    for check in &report.checks {
        let status = if check.passed() { "PASS" } else { "FAIL" };
        record.results.push(ResultEntry {
            n: check.name.to_owned(),
            value: status.to_owned(),
            label: format!("{} ({} cases, {} failed)", check.name, check.cases, check.failures),
        });
    }
    let passed = report.passed();
    record.status = Some(if passed { "PASS" } else { "FAIL" }.to_owned());
    record.counterexample = report.counterexample;
    Outcome { record, code: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED } }
}
