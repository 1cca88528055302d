//! The `ukp` command line front end.
//!
//! Instance files are line oriented:
//!
//! ```text
//! # three items, capacity 10
//! capacity: 10
//! item: 4 1
//! item: 7 3
//! item: 5 3
//! ```
//!
//! Exactly one `capacity:` line and one or more `item: <weight> <value>`
//! lines; `#` starts a comment. Exit codes are 0 on success, 1 for
//! validation or self-test failures, 2 for I/O, parse and usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cayley::{cayley_count, subinterval_table, term_breakdown, Target};
use crate::error::{OracleError, ReductionError, ValidationError};
use crate::oracle::{brute_force_vector_count, dp_knapsack_max, DEFAULT_BUDGET};
use crate::sample::{random_instance, SizeCaps};
use crate::solver::{augment_slack, solve_max_value, validate, UkpInstance};

/// Items and capacity exactly as written in an instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawInstance {
    pub items: Vec<(i64, i64)>,
    pub capacity: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("line {line}: `{token}` is not an integer")]
    InvalidInteger { line: usize, token: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: capacity given more than once")]
    DuplicateCapacity { line: usize },
    #[error("no `capacity:` line")]
    MissingCapacity,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Output(_) => 2,
            CliError::Validation(_) | CliError::Reduction(_) | CliError::Oracle(_) => 1,
        }
    }
}

fn parse_int(token: &str, line: usize) -> Result<i64, ParseError> {
    token.parse().map_err(|_| ParseError::InvalidInteger {
        line,
        token: token.to_string(),
    })
}

/// Parses the line-oriented instance format. Item order is preserved.
pub fn parse_instance(text: &str) -> Result<RawInstance, ParseError> {
    let mut items = Vec::new();
    let mut capacity = None;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, rest)) = content.split_once(':') else {
            return Err(ParseError::MalformedLine {
                line,
                reason: "expected `key: values`".into(),
            });
        };
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "capacity" => {
                let [token] = tokens[..] else {
                    return Err(ParseError::MalformedLine {
                        line,
                        reason: format!("capacity takes one integer, got {}", tokens.len()),
                    });
                };
                if capacity.is_some() {
                    return Err(ParseError::DuplicateCapacity { line });
                }
                capacity = Some(parse_int(token, line)?);
            }
            "item" => {
                let [weight, value] = tokens[..] else {
                    return Err(ParseError::MalformedLine {
                        line,
                        reason: format!("item takes weight and value, got {} tokens", tokens.len()),
                    });
                };
                items.push((parse_int(weight, line)?, parse_int(value, line)?));
            }
            other => {
                return Err(ParseError::UnknownKey {
                    line,
                    key: other.to_string(),
                })
            }
        }
    }
    Ok(RawInstance {
        items,
        capacity: capacity.ok_or(ParseError::MissingCapacity)?,
    })
}

#[derive(Debug, Parser)]
#[command(
    name = "ukp",
    version,
    about = "Exact unbounded knapsack by double partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find the maximal total value.
    Solve { file: PathBuf },
    /// Count the item multisets filling the capacity exactly with the given value.
    Count {
        file: PathBuf,
        #[arg(long)]
        total_value: u64,
    },
    /// Print each signed partition term of the count.
    Breakdown {
        file: PathBuf,
        #[arg(long)]
        total_value: u64,
    },
    /// Check counts and optima against brute force on random instances.
    Selftest {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        max_items: u64,
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u32).range(1..))]
        max_component: u32,
        #[arg(long, default_value_t = 30)]
        max_capacity: u64,
    },
}

fn load(path: &Path, err: &mut dyn Write) -> Result<UkpInstance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let raw = parse_instance(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    let instance = validate(&raw.items, raw.capacity)?;
    for item in instance.removed_duplicates() {
        writeln!(err, "warning: duplicate item {item} removed")?;
    }
    Ok(instance)
}

fn format_items(instance: &UkpInstance) -> String {
    let mut s = String::new();
    for (i, item) in instance.items().iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}:{}", item.weight(), item.value());
    }
    s
}

/// First disagreement between the partition route and the oracles, if any.
fn check_instance(instance: &UkpInstance) -> Result<Option<String>, CliError> {
    let matrix = augment_slack(instance);
    let w = instance.capacity();
    let top = subinterval_table(&matrix, w).top();
    for v in 0..=top + 3 {
        let s = Target::new(w, v);
        let cayley = cayley_count(&matrix, s)?;
        let oracle = brute_force_vector_count(&matrix, s, DEFAULT_BUDGET)?;
        if cayley != oracle {
            return Ok(Some(format!(
                "total_value={v} cayley_count={cayley} brute_force_count={oracle}"
            )));
        }
    }
    let solved = solve_max_value(instance)?.max_value;
    let dp = dp_knapsack_max(instance, DEFAULT_BUDGET)?.max_value;
    if solved != dp {
        return Ok(Some(format!("solve_max_value={solved} dp_max_value={dp}")));
    }
    Ok(None)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Solve { file } => {
            let result = solve_max_value(&load(&file, err)?)?;
            writeln!(out, "max_value={}", result.max_value)?;
            match result.subinterval_found {
                Some(j) => writeln!(out, "found_in_subinterval={j}")?,
                None => writeln!(out, "found_in_subinterval=none")?,
            }
        }
        Command::Count { file, total_value } => {
            let instance = load(&file, err)?;
            let matrix = augment_slack(&instance);
            let count = cayley_count(&matrix, Target::new(instance.capacity(), total_value))?;
            writeln!(out, "count={count}")?;
        }
        Command::Breakdown { file, total_value } => {
            let instance = load(&file, err)?;
            let matrix = augment_slack(&instance);
            let terms = term_breakdown(&matrix, Target::new(instance.capacity(), total_value))?;
            let mut total = crate::partition::SignedCount::from(0);
            for (j, term) in terms {
                writeln!(out, "term[{j}]={term}")?;
                total += term;
            }
            writeln!(out, "count={total}")?;
        }
        Command::Selftest {
            trials,
            seed,
            max_items,
            max_component,
            max_capacity,
        } => {
            let caps = SizeCaps {
                max_items: max_items as usize,
                max_component,
                max_capacity,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for trial in 1..=trials {
                let instance = random_instance(&mut rng, caps);
                if let Some(mismatch) = check_instance(&instance)? {
                    writeln!(
                        out,
                        "selftest=fail trial={trial} seed={seed} capacity={} items={} {mismatch}",
                        instance.capacity(),
                        format_items(&instance)
                    )?;
                    return Ok(1);
                }
            }
            writeln!(out, "selftest=pass trials={trials}")?;
        }
    }
    Ok(0)
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
