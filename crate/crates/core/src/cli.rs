//! The `gspec` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 for usage
//! errors (bad flags, expressions, parameters), 3 when a group exceeds the
//! enumeration cap.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::census::{emit_report, read_suite, run_suite, ReportFormat, SuiteConfig};
use crate::error::{Error, Result};
use crate::expr::{parse_expr, Evaluator, GroupExpr, Mode};
use crate::families::{Family, FamilySpec};
use crate::gensfile::Fixtures;
use crate::group::{coset_spectrum, index2_subgroups, normalizer, sylow_subgroup, DEFAULT_CAP};
use crate::perm::{parse_perm, Permutation};
use crate::spectrum::{approx, format_ratio, Rational};

pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "gspec", version, about = "Exact element-order statistics of finite groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Largest group enumerated element by element.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Directory holding manifest.csv and generator files.
    #[arg(long, global = true)]
    pub fixtures: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ratio of elements of order dividing K (or exactly K with --star).
    Rho {
        #[arg(short = 'e', long = "expr")]
        expr: String,
        #[arg(short = 'k')]
        k: u64,
        #[arg(long)]
        star: bool,
        #[arg(long, default_value = "spectrum")]
        mode: Mode,
    },
    /// Full order spectrum.
    Spectrum {
        #[arg(short = 'e', long = "expr")]
        expr: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Closed-form ratio for a family member.
    FamilyRho {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        q: u64,
        #[arg(short = 'k')]
        k: u64,
    },
    /// Ratio of elements of order dividing K in the coset `rep * group`.
    CosetRho {
        #[arg(long)]
        group: String,
        /// Cycle notation on the group's points, or `frobenius` for the
        /// field automorphism of a projective line group.
        #[arg(long)]
        rep: String,
        #[arg(short = 'k')]
        k: u64,
    },
    /// Subgroups of a concrete group.
    Subgroups {
        #[arg(long, required = true)]
        index2: bool,
        #[arg(short = 'e', long = "expr")]
        expr: String,
    },
    /// A Sylow subgroup, its normaliser, and optionally the
    /// self-normalising bound at K.
    Sylow {
        #[arg(short = 'e', long = "expr")]
        expr: String,
        #[arg(short = 'p')]
        p: u64,
        #[arg(long = "check-bound")]
        check_bound: Option<u64>,
    },
    /// Runs a suite file and prints a report.
    Verify {
        #[arg(long)]
        suite: PathBuf,
        #[arg(long, default_value = "text")]
        format: ReportFormat,
    },
}

/// Parses `args` (including the program name) and runs the command, writing
/// to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match execute(&cli, out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded(_) => EXIT_CAP,
        Error::Syntax(_)
        | Error::InvalidParameter(_)
        | Error::Precondition(_)
        | Error::Permutation { .. }
        | Error::Suite { .. }
        | Error::PrimeDoesNotDivide { .. }
        | Error::DegreeMismatch { .. } => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn evaluator(g: &GlobalArgs) -> Result<Evaluator> {
    let fixtures = match &g.fixtures {
        Some(dir) => Fixtures::open(dir)?,
        None => Fixtures::shipped(),
    };
    Ok(Evaluator::new(g.cap, fixtures))
}

fn show(r: &Rational) -> String {
    format!("{} ~ {:.6}", format_ratio(r), approx(r))
}

/// Runs a parsed command. `Ok(false)` means a verification failed.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let pool = match cli.global.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("--threads: {e}")))?,
        None => rayon::ThreadPoolBuilder::new()
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?,
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(cli, &mut buf));
    out.write_all(&buf)?;
    result
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> Result<bool> {
    let ev = evaluator(&cli.global)?;
    match &cli.command {
        Command::Rho { expr, k, star, mode } => {
            let e = parse_expr(expr)?;
            let s = ev.evaluate(&e, *mode)?;
            let (name, r) = if *star { ("rho*", s.rho_star(*k)) } else { ("rho", s.rho(*k)) };
            writeln!(out, "{name}_{k}({e}) = {}", show(&r))?;
        }
        Command::Spectrum { expr, output } => {
            let e = parse_expr(expr)?;
            let text = ev.spectrum(&e)?.to_text();
            match output {
                Some(path) => fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::FamilyRho { family, q, k } => {
            let spec = FamilySpec::new(*family, *q)?;
            writeln!(out, "rho_{k}({spec}) = {}", show(&spec.rho(*k)?))?;
        }
        Command::CosetRho { group, rep, k } => {
            let e = parse_expr(group)?;
            let n = ev.concrete(&e)?;
            let x = coset_rep(&e, rep, n.degree())?;
            let h = coset_spectrum(&n, &x)?;
            writeln!(out, "rho_{k}(x {e}) = {}", show(&h.rho(*k)))?;
        }
        Command::Subgroups { expr, .. } => {
            let e = parse_expr(expr)?;
            let g = ev.concrete(&e)?;
            let subs = index2_subgroups(&g)?;
            writeln!(out, "{} subgroups of index 2 in {e}", subs.len())?;
            for (i, h) in subs.iter().enumerate() {
                let s = h.spectrum();
                let counts: Vec<String> = s.iter().map(|(d, c)| format!("{d}:{c}")).collect();
                writeln!(out, "#{} order {} exponent {} orders {}", i + 1, h.order(), s.exponent(), counts.join(" "))?;
            }
        }
        Command::Sylow { expr, p, check_bound } => {
            let e = parse_expr(expr)?;
            let g = ev.concrete(&e)?;
            let s = sylow_subgroup(&g, *p)?;
            let n = normalizer(&g, &s)?;
            writeln!(
                out,
                "Sylow {p}-subgroup of order {}, normaliser of order {}, self-normalising: {}",
                s.order(),
                n.order(),
                n.order() == s.order()
            )?;
            if let Some(k) = check_bound {
                let k = *k;
                if crate::arith::prime_power(k).map(|(q, _)| q) != Some(*p) {
                    return Err(Error::InvalidParameter(format!("--check-bound {k} is not a power of {p}")));
                }
                let lhs = g.spectrum().rho(k);
                let inv = |m: u64| Rational::new(1.into(), m.into());
                let rhs = s.spectrum().rho(k) * inv(n.order() / s.order()) - inv(n.order()) + inv(g.order());
                let holds = lhs <= rhs;
                writeln!(out, "rho_{k}(G) = {}", show(&lhs))?;
                writeln!(out, "bound     = {}", show(&rhs))?;
                writeln!(out, "{}", if holds { "bound holds" } else { "bound VIOLATED" })?;
                return Ok(holds);
            }
        }
        Command::Verify { suite, format } => {
            let checks = read_suite(suite)?;
            let config = SuiteConfig { evaluator: ev, parallel: true };
            let results = run_suite(&checks, &config)?;
            emit_report(&results, *format, &mut *out)?;
            return Ok(!results.iter().any(|r| r.failed()));
        }
    }
    Ok(true)
}

fn coset_rep(e: &GroupExpr, rep: &str, degree: usize) -> Result<Permutation> {
    if !rep.trim().eq_ignore_ascii_case("frobenius") {
        return parse_perm(rep, degree);
    }
    let GroupExpr::Family(spec) = e else {
        return Err(Error::InvalidParameter("`frobenius` needs a projective line group".into()));
    };
    let field_shape = spec.field_shape().filter(|&(_, m)| m > 1);
    if !spec.family().over_field() || spec.family() == Family::Sz || field_shape.is_none() {
        return Err(Error::InvalidParameter(format!("{spec} has no field automorphism")));
    }
    let (_, gens) = FamilySpec::new(Family::PGammaL2, spec.param())?.constructor()?;
    Ok(gens.last().expect("frobenius generator").clone())
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    run(std::env::args_os(), &mut out, &mut err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (ExitCode, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["gspec"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rho_and_family_rho() {
        let (code, out, _) = call(&["rho", "-e", "A(5)", "-k", "6"]);
        assert_eq!(code, ExitCode::SUCCESS);
        assert!(out.starts_with("rho_6(A(5)) = 3/5"), "{out}");
        let (_, out, _) = call(&["rho", "-e", "A(5)", "-k", "5", "--star", "--mode", "concrete"]);
        assert!(out.starts_with("rho*_5(A(5)) = 2/5"), "{out}");
        let (_, out, _) = call(&["family-rho", "--family", "PSL2", "--q", "13", "-k", "7"]);
        assert!(out.starts_with("rho_7(PSL(2,13)) = 67/156"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["rho", "-e", "PSL(3,4)", "-k", "2"]).0, ExitCode::from(EXIT_USAGE));
        assert_eq!(call(&["rho", "-k", "2"]).0, ExitCode::from(EXIT_USAGE));
        assert_eq!(call(&["--cap", "10", "rho", "-e", "A(5)", "-k", "2", "--mode", "concrete"]).0, ExitCode::from(EXIT_CAP));
        assert_eq!(call(&["family-rho", "--family", "PSL2", "--q", "6", "-k", "2"]).0, ExitCode::from(EXIT_USAGE));
    }

    #[test]
    fn frobenius_coset() {
        let (code, out, err) = call(&["coset-rho", "--group", "PSL(2,27)", "--rep", "frobenius", "-k", "3"]);
        assert_eq!(code, ExitCode::SUCCESS, "{err}");
        assert!(out.starts_with("rho_3(x PSL(2,27)) = 1/12"), "{out}");
        let (code, _, _) = call(&["coset-rho", "--group", "PSL(2,7)", "--rep", "frobenius", "-k", "3"]);
        assert_eq!(code, ExitCode::from(EXIT_USAGE));
    }

    #[test]
    fn sylow_bound() {
        let (code, out, _) = call(&["sylow", "-e", "A(5)", "-p", "2", "--check-bound", "2"]);
        assert_eq!(code, ExitCode::SUCCESS);
        assert!(out.contains("Sylow 2-subgroup of order 4, normaliser of order 12"), "{out}");
        assert!(out.contains("bound holds"), "{out}");
    }
}
