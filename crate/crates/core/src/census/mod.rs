//! Suites of exact checks and the reports they produce.
//!
//! A suite file has one check per line,
//!
//! ```text
//! id | group-expression | k | expected | method
//! ```
//!
//! where `k` is `K` for the ratio of orders dividing `K` or `*K` for exactly
//! `K`, `expected` is a rational `n/d` or a comparison such as `> 1/2`, and
//! `method` is `formula`, `enumeration` or `both`. Blank lines and `#`
//! comments are ignored.

pub mod properties;

use std::collections::HashSet;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{parse_expr, Evaluator, GroupExpr, Mode};
use crate::spectrum::{format_ratio, parse_ratio, OrderSpectrum, Rational};

/// `rho_k` or `rho*_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioSpec {
    pub k: u64,
    pub exact: bool,
}

impl RatioSpec {
    pub fn of(&self, s: &OrderSpectrum) -> Rational {
        if self.exact {
            s.rho_star(self.k)
        } else {
            s.rho(self.k)
        }
    }
}

impl fmt::Display for RatioSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "*{}", self.k)
        } else {
            write!(f, "{}", self.k)
        }
    }
}

impl FromStr for RatioSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (exact, digits) = match s.strip_prefix('*') {
            Some(rest) => (true, rest.trim()),
            None => (false, s),
        };
        let k: u64 = digits.parse().map_err(|_| Error::InvalidParameter(format!("bad k {s:?}")))?;
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        Ok(RatioSpec { k, exact })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Eq,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Comparison {
    const SYMBOLS: [(&'static str, Comparison); 5] = [
        (">=", Comparison::Ge),
        ("<=", Comparison::Le),
        (">", Comparison::Gt),
        ("<", Comparison::Lt),
        ("=", Comparison::Eq),
    ];

    fn symbol(self) -> &'static str {
        Self::SYMBOLS.iter().find(|(_, c)| *c == self).map(|(s, _)| *s).expect("listed")
    }

    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Comparison::Eq => lhs == rhs,
            Comparison::Lt => lhs < rhs,
            Comparison::Le => lhs <= rhs,
            Comparison::Gt => lhs > rhs,
            Comparison::Ge => lhs >= rhs,
        }
    }
}

/// An exact value or a comparison against one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub comparison: Comparison,
    pub value: Rational,
}

impl Expected {
    pub fn exact(value: Rational) -> Self {
        Expected { comparison: Comparison::Eq, value }
    }

    pub fn accepts(&self, r: &Rational) -> bool {
        self.comparison.holds(r, &self.value)
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.comparison {
            Comparison::Eq => write!(f, "{}", format_ratio(&self.value)),
            c => write!(f, "{} {}", c.symbol(), format_ratio(&self.value)),
        }
    }
}

impl FromStr for Expected {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        for (sym, comparison) in Comparison::SYMBOLS {
            if let Some(rest) = s.strip_prefix(sym) {
                return Ok(Expected { comparison, value: parse_ratio(rest)? });
            }
        }
        Ok(Expected::exact(parse_ratio(s)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Formula,
    Enumeration,
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Enumeration => "enumeration",
            Method::Both => "both",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "formula" => Ok(Method::Formula),
            "enumeration" => Ok(Method::Enumeration),
            "both" => Ok(Method::Both),
            other => Err(Error::InvalidParameter(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: String,
    pub group: GroupExpr,
    pub ratio: RatioSpec,
    pub expected: Expected,
    pub method: Method,
}

impl CheckSpec {
    fn parse_line(line: &str, lineno: usize) -> Result<Self> {
        let bad = |reason: String| Error::Suite { line: lineno, reason };
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [id, group, k, expected, method] = fields[..] else {
            return Err(bad(format!("expected 5 `|`-separated fields, found {}", fields.len())));
        };
        if id.is_empty() {
            return Err(bad("empty id".into()));
        }
        Ok(CheckSpec {
            id: id.to_string(),
            group: parse_expr(group).map_err(|e| bad(e.to_string()))?,
            ratio: k.parse().map_err(|e: Error| bad(e.to_string()))?,
            expected: expected.parse().map_err(|e: Error| bad(e.to_string()))?,
            method: method.parse().map_err(|e: Error| bad(e.to_string()))?,
        })
    }
}

impl fmt::Display for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {} | {} | {}", self.id, self.group, self.ratio, self.expected, self.method)
    }
}

pub fn parse_suite(text: &str) -> Result<Vec<CheckSpec>> {
    let mut seen = HashSet::new();
    let mut checks = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let check = CheckSpec::parse_line(line, i + 1)?;
        if !seen.insert(check.id.clone()) {
            return Err(Error::Suite { line: i + 1, reason: format!("duplicate id {:?}", check.id) });
        }
        checks.push(check);
    }
    Ok(checks)
}

pub fn read_suite(path: &Path) -> Result<Vec<CheckSpec>> {
    parse_suite(&std::fs::read_to_string(path)?)
}

/// One line of a report. `rho` and `pass` are absent for skipped checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub group: String,
    pub order: Option<String>,
    pub k: String,
    pub rho: Option<String>,
    pub expected: String,
    pub method: String,
    pub pass: Option<bool>,
    pub millis: u64,
}

impl CheckResult {
    pub fn skipped(&self) -> bool {
        self.pass.is_none()
    }

    pub fn failed(&self) -> bool {
        self.pass == Some(false)
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub evaluator: Evaluator,
    /// Run independent checks concurrently. Results keep suite order.
    pub parallel: bool,
}

/// Runs one check. Over-cap groups come back skipped rather than failed;
/// other errors propagate.
pub fn run_check(check: &CheckSpec, ev: &Evaluator) -> Result<CheckResult> {
    let start = Instant::now();
    let mut result = CheckResult {
        id: check.id.clone(),
        group: check.group.to_string(),
        order: ev.order(&check.group).map(|n| n.to_string()),
        k: check.ratio.to_string(),
        rho: None,
        expected: check.expected.to_string(),
        method: check.method.to_string(),
        pass: None,
        millis: 0,
    };
    let routes: &[Mode] = match check.method {
        Method::Formula => &[Mode::Spectrum],
        Method::Enumeration => &[Mode::Concrete],
        Method::Both => &[Mode::Spectrum, Mode::Concrete],
    };
    let mut values = Vec::new();
    for &mode in routes {
        match ev.evaluate(&check.group, mode) {
            Ok(s) => {
                result.order = Some(s.group_order().to_string());
                values.push(check.ratio.of(&s));
            }
            Err(Error::CapExceeded(_)) => {
                result.millis = start.elapsed().as_millis() as u64;
                return Ok(result);
            }
            Err(e) => return Err(e),
        }
    }
    let first = values[0].clone();
    let agree = values.iter().all(|v| *v == first);
    result.pass = Some(agree && check.expected.accepts(&first));
    result.rho = Some(format_ratio(&first));
    result.millis = start.elapsed().as_millis() as u64;
    Ok(result)
}

pub fn run_suite(suite: &[CheckSpec], config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    if config.parallel {
        suite.par_iter().map(|c| run_check(c, &config.evaluator)).collect()
    } else {
        suite.iter().map(|c| run_check(c, &config.evaluator)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    Json,
    Csv,
    #[default]
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(Error::InvalidParameter(format!("unknown format {other:?} (json|csv|text)"))),
        }
    }
}

const CSV_HEADER: [&str; 9] = ["id", "group", "order", "k", "rho", "expected", "method", "pass", "millis"];

pub fn emit_report<W: Write>(results: &[CheckResult], format: ReportFormat, mut out: W) -> Result<()> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, results)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in results {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        ReportFormat::Text => {
            for r in results {
                let status = match r.pass {
                    Some(true) => "PASS",
                    Some(false) => "FAIL",
                    None => "SKIP",
                };
                let rho = r.rho.as_deref().unwrap_or("-");
                let label = if r.k.starts_with('*') { "rho*" } else { "rho" };
                let k = r.k.trim_start_matches('*');
                writeln!(
                    out,
                    "{status} {}: {label}_{k}({}) = {rho}, expected {} [{}, {} ms]",
                    r.id, r.group, r.expected, r.method, r.millis
                )?;
            }
            let count = |f: fn(&CheckResult) -> bool| results.iter().filter(|r| f(r)).count();
            writeln!(
                out,
                "{} passed, {} failed, {} skipped",
                count(|r| r.pass == Some(true)),
                count(CheckResult::failed),
                count(CheckResult::skipped)
            )?;
        }
    }
    Ok(())
}

/// Reads back a JSON report.
pub fn read_json_report<R: std::io::Read>(reader: R) -> Result<Vec<CheckResult>> {
    Ok(serde_json::from_reader(reader)?)
}

/// Reads back a CSV report.
pub fn read_csv_report<R: std::io::Read>(reader: R) -> Result<Vec<CheckResult>> {
    let mut r = csv::Reader::from_reader(reader);
    Ok(r.deserialize().collect::<std::result::Result<_, _>>()?)
}

/// Suite files shipped with the crate.
pub fn shipped_suite_dir() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("suites")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::ratio;

    fn run(text: &str) -> Vec<CheckResult> {
        run_suite(&parse_suite(text).unwrap(), &SuiteConfig::default()).unwrap()
    }

    #[test]
    fn parses_lines() {
        let suite = parse_suite("# header\n\nr6 | A(5) | 6 | 3/5 | both\nstar | S(5) | *5 | 1/5 | formula # note\nbig | PSL(2,13) | 7 | > 2/5 | formula\n").unwrap();
        assert_eq!(suite.len(), 3);
        assert_eq!(suite[1].ratio, RatioSpec { k: 5, exact: true });
        assert_eq!(suite[2].expected.comparison, Comparison::Gt);
        assert_eq!(suite[2].to_string(), "big | PSL(2,13) | 7 | > 2/5 | formula");
        assert_eq!(parse_suite(&suite[0].to_string()).unwrap()[0], suite[0]);
    }

    #[test]
    fn rejects_bad_lines() {
        for bad in [
            "a | A(5) | 6 | 3/5",
            "a | A(5) | x | 3/5 | both",
            "a | A(5) | 6 | 3/0 | both",
            "a | B(5) | 6 | 3/5 | both",
            "a | A(5) | 6 | 3/5 | guess",
            "a | A(5) | 0 | 3/5 | both",
            "a | A(5) | 6 | 3/5 | both\na | A(5) | 6 | 3/5 | both",
        ] {
            assert!(matches!(parse_suite(bad), Err(Error::Suite { .. })), "{bad:?}");
        }
    }

    #[test]
    fn runs_and_compares_exactly() {
        let results = run("ok | A(5) | 6 | 3/5 | both\nno | A(5) | 6 | 3/4 | formula\ngt | S(5) | 12 | >= 4/5 | enumeration\n");
        assert_eq!(results[0].pass, Some(true));
        assert_eq!(results[0].rho.as_deref(), Some("3/5"));
        assert_eq!(results[0].order.as_deref(), Some("60"));
        assert_eq!(results[1].pass, Some(false));
        assert_eq!(results[2].pass, Some(true));
    }

    #[test]
    fn over_cap_is_skipped() {
        let config = SuiteConfig { evaluator: Evaluator { cap: 100, ..Evaluator::default() }, parallel: false };
        let suite = parse_suite("big | load(\"m11\") | 4 | 1156/7920 | enumeration\nsmall | A(4) | 3 | 3/4 | both").unwrap();
        let results = run_suite(&suite, &config).unwrap();
        assert!(results[0].skipped());
        assert_eq!(results[0].order.as_deref(), Some("7920"));
        assert_eq!(results[1].pass, Some(true));
    }

    #[test]
    fn missing_fixture_is_an_error() {
        let suite = parse_suite("x | load(\"no_such_group\") | 2 | 1/2 | enumeration").unwrap();
        assert!(run_suite(&suite, &SuiteConfig::default()).is_err());
    }

    #[test]
    fn reports_round_trip() {
        let results = run("a | A(5) | 10 | 2/3 | formula\nb | C(6)^2 | *6 | 24/36 | both\n");
        let mut json = Vec::new();
        emit_report(&results, ReportFormat::Json, &mut json).unwrap();
        assert_eq!(read_json_report(json.as_slice()).unwrap(), results);
        let mut csv = Vec::new();
        emit_report(&results, ReportFormat::Csv, &mut csv).unwrap();
        assert_eq!(read_csv_report(csv.as_slice()).unwrap(), results);
        let mut text = Vec::new();
        emit_report(&results, ReportFormat::Text, &mut text).unwrap();
        assert!(String::from_utf8(text).unwrap().ends_with("2 passed, 0 failed, 0 skipped\n"));
    }

    #[test]
    fn empty_reports() {
        let mut json = Vec::new();
        emit_report(&[], ReportFormat::Json, &mut json).unwrap();
        assert_eq!(String::from_utf8(json).unwrap().trim(), "[]");
        let mut csv = Vec::new();
        emit_report(&[], ReportFormat::Csv, &mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap(), "id,group,order,k,rho,expected,method,pass,millis\n");
    }

    #[test]
    fn expected_forms() {
        let e: Expected = "<= 1/2".parse().unwrap();
        assert!(e.accepts(&ratio(1u32.into(), 2u32.into())));
        assert_eq!(e.to_string(), "<= 1/2");
        let x: Expected = " 3 ".parse().unwrap();
        assert_eq!(x.to_string(), "3/1");
    }
}
