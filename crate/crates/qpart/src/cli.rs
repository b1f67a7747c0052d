use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use qpart_core::audit::{AuditConfig, ENUM_BOUND};
use qpart_core::combinat::{enumerate_f_set, enumerate_h_set, Counter, Family};
use qpart_core::qdsl::{self, DslError};
use rayon::prelude::*;

use crate::format::{write_counts, write_partitions, write_reports, write_series, OutputFormat};
use crate::report::run_timed;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_EVAL: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Environment variable that may raise the enumeration bound.
pub const MAX_ENUM_VAR: &str = "QPART_MAX_ENUM";

#[derive(Debug, Parser)]
#[command(name = "qpart", version, about = "Exact q-series expansion, colored partition counts and identity audits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a q-series expression to a given order.
    Expand {
        expr: String,
        #[arg(short = 'N', long, default_value_t = 20)]
        order: usize,
        #[command(flatten)]
        out: FormatArg,
    },
    /// Count a family by brute-force enumeration.
    Count {
        /// F, F0..F3, H, H0..H3, pbar, pbar_odd, mex_plain or mex_bar.
        family: String,
        #[arg(long)]
        n: Weights,
        #[command(flatten)]
        out: FormatArg,
    },
    /// List the partitions of F(n) or H(n).
    Enumerate {
        /// F or H.
        family: String,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: FormatArg,
    },
    /// Run identity checks.
    Verify {
        /// Comma-separated check ids; all checks when absent.
        #[arg(long, value_delimiter = ',')]
        ids: Option<Vec<String>>,
        /// Series order; each check's default when absent.
        #[arg(short = 'N', long)]
        order: Option<usize>,
        #[command(flatten)]
        out: FormatArg,
    },
}

#[derive(Debug, Args)]
pub struct FormatArg {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

/// A single weight `n` or an inclusive range `a..b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights(pub RangeInclusive<u32>);

impl FromStr for Weights {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("`{t}` is not a non-negative integer"));
        match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(format!("empty range {a}..{b}"));
                }
                Ok(Weights(a..=b))
            }
            None => num(s).map(|n| Weights(n..=n)),
        }
    }
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl fmt::Display) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(format!("write failed: {e}"))
    }
}

/// The enumeration bound: the default, or a larger value from the
/// environment.
pub fn enum_bound(env: Option<&str>) -> Result<usize, Failure> {
    match env {
        None => Ok(ENUM_BOUND),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .map(|b| b.max(ENUM_BOUND))
            .map_err(|_| Failure::usage(format!("{MAX_ENUM_VAR} must be a non-negative integer, got `{v}`"))),
    }
}

fn check_bound(n: u32, bound: usize) -> Result<(), Failure> {
    if n as usize > bound {
        return Err(Failure::usage(format!(
            "n = {n} exceeds the enumeration bound {bound}; set {MAX_ENUM_VAR} to raise it"
        )));
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, max_enum: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, max_enum, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "qpart: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, max_enum: Option<&str>, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Expand { expr, order, out: fmt } => {
            let s = qdsl::expand(&expr, order).map_err(|e| match e {
                DslError::Parse(_) => Failure::usage(e),
                DslError::Eval(_) => Failure { code: EXIT_EVAL, message: e.to_string() },
            })?;
            write_series(out, &s, fmt.format)?;
        }
        Command::Count { family, n, out: fmt } => {
            let counter: Counter = family.parse().map_err(Failure::usage)?;
            let bound = enum_bound(max_enum)?;
            check_bound(*n.0.end(), bound)?;
            let rows: Vec<(u32, String)> = n.0.into_par_iter().map(|k| (k, counter.count(k).to_string())).collect();
            write_counts(out, counter.key(), &rows, fmt.format)?;
        }
        Command::Enumerate { family, n, out: fmt } => {
            let list = match family.parse::<Family>() {
                Ok(Family::F) => enumerate_f_set,
                Ok(Family::H) => enumerate_h_set,
                _ => return Err(Failure::usage(format!("enumerate lists F or H, not `{family}`"))),
            };
            check_bound(n, enum_bound(max_enum)?)?;
            let parts: Vec<String> = list(n).iter().map(ToString::to_string).collect();
            write_partitions(out, n, &parts, fmt.format)?;
        }
        Command::Verify { ids, order, out: fmt } => {
            let cfg = AuditConfig { enum_bound: enum_bound(max_enum)? };
            let ids: Option<Vec<&str>> = ids.as_ref().map(|v| v.iter().map(String::as_str).collect());
            let reports = run_timed(order, ids.as_deref(), &cfg);
            write_reports(out, &reports, fmt.format)?;
            if !reports.iter().all(|r| r.passed()) {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert_eq!("4".parse(), Ok(Weights(4..=4)));
        assert_eq!("0..5".parse(), Ok(Weights(0..=5)));
        assert!("5..0".parse::<Weights>().is_err());
        assert!("-1".parse::<Weights>().is_err());
    }

    #[test]
    fn bound_only_rises() {
        assert_eq!(enum_bound(None).unwrap(), 20);
        assert_eq!(enum_bound(Some("5")).unwrap(), 20);
        assert_eq!(enum_bound(Some("24")).unwrap(), 24);
        assert_eq!(enum_bound(Some("lots")).unwrap_err().code, EXIT_USAGE);
    }
}
