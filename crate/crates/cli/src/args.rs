use clap::{Args, Parser, Subcommand, ValueEnum};
use horadam::{parse_rational, BigRational, HoradamParams};

#[derive(Debug, Parser)]
#[command(name = "horadam", version, about = "Exact Horadam sequences, partial sums and generating functions")]
pub struct Cli {
    /// Output style
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Abort with exit code 3 if an intermediate integer needs more bits than this
    #[arg(long, global = true, value_name = "N")]
    pub max_bits: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Step the recurrence
    Iter,
    /// F/L basis with O(log n) doubling
    Doubling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "W", alias = "w")]
    W,
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "S", alias = "s")]
    S,
}

fn rational_arg(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// `(a, b; p, q)`, each `[+-]int[/int]`.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// W_0
    #[arg(short = 'a', default_value = "0", value_parser = rational_arg, allow_hyphen_values = true)]
    pub a: BigRational,
    /// W_1
    #[arg(short = 'b', default_value = "0", value_parser = rational_arg, allow_hyphen_values = true)]
    pub b: BigRational,
    /// Coefficient of W_{n-1}
    #[arg(short = 'p', default_value = "0", value_parser = rational_arg, allow_hyphen_values = true)]
    pub p: BigRational,
    /// Coefficient of W_{n-2}
    #[arg(short = 'q', default_value = "0", value_parser = rational_arg, allow_hyphen_values = true)]
    pub q: BigRational,
}

impl ParamArgs {
    pub fn to_params(&self) -> HoradamParams {
        HoradamParams::new(self.a.clone(), self.b.clone(), self.p.clone(), self.q.clone())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate W_n for one index or an index range
    Eval {
        #[command(flatten)]
        params: ParamArgs,
        /// Index `N`, or a range `A..B` (exclusive) / `A..=B` (inclusive)
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: String,
        #[arg(long, value_enum, default_value_t = Method::Iter)]
        method: Method,
    },
    /// Partial sum S_n = W_0 + ... + W_n (S_-1 = 0)
    Sum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: i64,
    },
    /// Range sum W_n + ... + W_{n+m}
    Range {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: i64,
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: i64,
    },
    /// Generating function and its first series coefficients
    Gf {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
    },
    /// Run the randomized self-check of every closed form
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long = "max-n", default_value_t = 200, value_parser = clap::value_parser!(u64).range(2..))]
        max_n: u64,
    },
}

/// Inclusive index bounds parsed from `N`, `A..B` or `A..=B`.
pub fn parse_index_range(s: &str) -> Result<(u64, u64), String> {
    let parse = |t: &str| -> Result<i64, String> {
        t.trim().parse::<i64>().map_err(|_| format!("invalid index '{t}'"))
    };
    let check = |v: i64| -> Result<u64, String> {
        u64::try_from(v).map_err(|_| format!("index {v} is negative"))
    };
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (check(parse(a)?)?, check(parse(b)?)?)
    } else if let Some((a, b)) = s.split_once("..") {
        let hi = check(parse(b)?)?;
        if hi == 0 {
            return Err(format!("empty index range '{s}'"));
        }
        (check(parse(a)?)?, hi - 1)
    } else {
        let v = check(parse(s)?)?;
        (v, v)
    };
    if lo > hi {
        return Err(format!("empty index range '{s}'"));
    }
    Ok((lo, hi))
}
