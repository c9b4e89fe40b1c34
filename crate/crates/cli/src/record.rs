//! The machine-readable result of one invocation and its three renderings.

use std::fmt::Write as _;

use horadam::{format_rational, BigRational, HoradamParams};
use serde::Serialize;

use crate::args::Format;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamsEcho {
    pub a: String,
    pub b: String,
    pub p: String,
    pub q: String,
}

impl From<&HoradamParams> for ParamsEcho {
    fn from(h: &HoradamParams) -> Self {
        Self {
            a: format_rational(&h.a),
            b: format_rational(&h.b),
            p: format_rational(&h.p),
            q: format_rational(&h.q),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultEntry {
    pub n: String,
    pub value: String,
    /// Left-hand side in text output, e.g. `W_10`.
    #[serde(skip)]
    pub label: String,
}

impl ResultEntry {
    pub fn new(n: impl ToString, value: &BigRational, label: String) -> Self {
        Self { n: n.to_string(), value: format_rational(value), label }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degeneracy_class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub which: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerator: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub denominator: Option<Vec<String>>,
    pub results: Vec<ResultEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_owned(),
            params: None,
            degeneracy_class: None,
            method: None,
            which: None,
            numerator: None,
            denominator: None,
            results: Vec::new(),
            status: None,
            counterexample: None,
        }
    }

    pub fn with_params(mut self, params: &HoradamParams) -> Self {
        self.params = Some(params.into());
        self.degeneracy_class = Some(params.classify().to_string());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("record serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(p) = &self.params {
            let _ = writeln!(out, "params: a={} b={} p={} q={}", p.a, p.b, p.p, p.q);
        }
        if let Some(class) = &self.degeneracy_class {
            let _ = writeln!(out, "degeneracy_class: {class}");
        }
        if let Some(method) = &self.method {
            let _ = writeln!(out, "method: {method}");
        }
        if let Some(which) = &self.which {
            let _ = writeln!(out, "which: {which}");
        }
        if let Some(num) = &self.numerator {
            let _ = writeln!(out, "numerator: [{}]", num.join(", "));
        }
        if let Some(den) = &self.denominator {
            let _ = writeln!(out, "denominator: [{}]", den.join(", "));
        }
        for r in &self.results {
            let _ = writeln!(out, "{} = {}", r.label, r.value);
        }
        if let Some(status) = &self.status {
            let _ = writeln!(out, "status: {status}");
        }
        if let Some(cx) = &self.counterexample {
            let _ = writeln!(out, "counterexample: {cx}");
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for r in &self.results {
            let _ = writeln!(out, "{},{}", r.n, r.value);
        }
        out
    }
}
