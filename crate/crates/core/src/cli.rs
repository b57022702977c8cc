//! Command-line front end.
//!
//! Every verb accepts `--format text|json`, `--config FILE` and `--seed N`.
//! A config file is a JSON object whose keys are flag names (`outer`,
//! `family`, `n`, …); flags given on the command line take precedence.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::characters::{CharFamily, CharSpec};
use crate::fock::{matrix_element, pairing};
use crate::partitions::{gt_chains, Partition};
use crate::series::{newton_failure, Alphabet};
use crate::verify::{run_suite, Grid, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "unichar", version, about = "Universal symplectic and orthogonal characters")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Default)]
struct Common {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// JSON file with default values for any flag.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Seed for the random-evaluation pre-check (verdicts do not depend on it).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Compute a universal (or skew) character.
    Compute {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        outer: Option<String>,
        /// Inner partition; its declared length sets the skew dimension.
        #[arg(long, allow_hyphen_values = true)]
        inner: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        /// Grid as inline JSON or a path to a JSON file.
        #[arg(long)]
        grid: Option<String>,
        /// Include wall-clock time per check.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: Common,
    },
    /// List the symplectic Gelfand-Tsetlin chains of a partition.
    Gt {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Print only the number of chains.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Operator-side pairings and matrix elements.
    Fock {
        /// Compute `<mu|lambda>` instead of a matrix element.
        #[arg(long)]
        pairing: bool,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Bra partition of a matrix element; its declared length is kept.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Ket partition of a matrix element.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Check the Newton-type relation between the two kinds of `h`.
    Newton {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long = "N")]
        degree: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Deserialize, Default, Debug)]
#[serde(deny_unknown_fields)]
struct Config {
    format: Option<Format>,
    seed: Option<u64>,
    family: Option<String>,
    n: Option<usize>,
    m: Option<usize>,
    outer: Option<Value>,
    inner: Option<Value>,
    suite: Option<String>,
    grid: Option<Value>,
    timings: Option<bool>,
    lambda: Option<Value>,
    count: Option<bool>,
    pairing: Option<bool>,
    mu: Option<Value>,
    beta: Option<Value>,
    alpha: Option<Value>,
    #[serde(rename = "N")]
    degree: Option<usize>,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

/// Runs one command; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let common = match &cli.verb {
        Verb::Compute { common, .. }
        | Verb::Verify { common, .. }
        | Verb::Gt { common, .. }
        | Verb::Fock { common, .. }
        | Verb::Newton { common, .. } => common,
    };
    let result = load_config(common).and_then(|cfg| {
        let format = common.format.or(cfg.format).unwrap_or(Format::Text);
        let seed = common.seed.or(cfg.seed).unwrap_or(0);
        dispatch(&cli.verb, &cfg, seed).map(|o| (o, format))
    });
    match result {
        Ok((o, format)) => {
            let body = match format {
                Format::Text => o.text,
                Format::Json => {
                    let mut v = o.json;
                    v.as_object_mut().expect("object").insert("schema".into(), json!(1));
                    serde_json::to_string_pretty(&v).expect("json")
                }
            };
            let _ = writeln!(out, "{body}");
            if o.ok {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn load_config(common: &Common) -> Result<Config, Usage> {
    let Some(path) = &common.config else { return Ok(Config::default()) };
    let raw = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

/// A config value for a partition: a JSON array or a string like `"2,1"`.
fn partition_value(v: &Value) -> Result<String, Usage> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Array(a) => {
            let parts: Vec<String> = a.iter().map(|x| x.as_i64().map(|k| k.to_string())).collect::<Option<_>>().ok_or_else(
                || Usage(format!("partition must be a list of integers, got {v}")),
            )?;
            Ok(parts.join(","))
        }
        _ => Err(Usage(format!("partition must be a string or a list, got {v}"))),
    }
}

fn pick_partition(flag: &Option<String>, cfg: &Option<Value>, name: &str) -> Result<Option<Partition>, Usage> {
    let raw = match (flag, cfg) {
        (Some(s), _) => Some(s.clone()),
        (None, Some(v)) => Some(partition_value(v)?),
        (None, None) => None,
    };
    raw.map(|s| s.parse::<Partition>().map_err(|e| Usage(format!("--{name}: {e}")))).transpose()
}

fn require<T>(v: Option<T>, name: &str) -> Result<T, Usage> {
    v.ok_or_else(|| Usage(format!("missing required flag --{name}")))
}

fn family(flag: &Option<String>, cfg: &Config) -> Result<CharFamily, Usage> {
    let s = flag.clone().or_else(|| cfg.family.clone()).unwrap_or_else(|| "sp".into());
    s.parse::<CharFamily>().map_err(Usage)
}

fn dispatch(verb: &Verb, cfg: &Config, seed: u64) -> Result<Output, Usage> {
    match verb {
        Verb::Compute { family: f, n, m, outer, inner, .. } => {
            let family = family(f, cfg)?;
            let n = n.or(cfg.n).unwrap_or(0);
            let m = m.or(cfg.m).unwrap_or(0);
            let outer = require(pick_partition(outer, &cfg.outer, "outer")?, "outer")?;
            let inner = pick_partition(inner, &cfg.inner, "inner")?.unwrap_or_else(Partition::empty);
            let spec = CharSpec::skew(family, n, m, outer, inner);
            let value = spec.compute()?;
            Ok(Output {
                text: value.to_string(),
                json: json!({
                    "family": family.to_string(),
                    "n": n,
                    "m": m,
                    "outer": spec.outer,
                    "inner": spec.inner,
                    "value": value.to_json(),
                    "text": value.to_string(),
                }),
                ok: true,
            })
        }
        Verb::Verify { suite, grid, timings, .. } => {
            let suite = suite.clone().or_else(|| cfg.suite.clone()).unwrap_or_else(|| "all".into());
            if !SUITES.contains(&suite.as_str()) {
                return Err(Usage(format!("unknown suite `{suite}` (expected one of {})", SUITES.join(", "))));
            }
            let mut grid = match (grid, &cfg.grid) {
                (Some(g), _) => parse_grid(g)?,
                (None, Some(v)) => serde_json::from_value(v.clone()).map_err(|e| Usage(format!("grid: {e}")))?,
                (None, None) => Grid::default(),
            };
            grid.rng_seed = seed;
            let timings = *timings || cfg.timings.unwrap_or(false);
            let reports = run_suite(&suite, &grid).expect("suite name checked");
            let ok = reports.iter().all(|r| r.passed());
            let mut text: Vec<String> = reports.iter().map(|r| r.render(timings)).collect();
            let failed = reports.iter().filter(|r| !r.passed()).count();
            text.push(format!("{} of {} checks passed", reports.len() - failed, reports.len()));
            let json_reports: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("json");
                    let obj = v.as_object_mut().expect("object");
                    obj.insert("passed".into(), json!(r.passed()));
                    obj.insert("instances_run".into(), json!(r.instances_run.to_string()));
                    if !timings {
                        obj.remove("seconds");
                    }
                    v
                })
                .collect();
            Ok(Output {
                text: text.join("\n"),
                json: json!({"suite": suite, "grid": grid, "passed": ok, "reports": json_reports}),
                ok,
            })
        }
        Verb::Gt { lambda, n, count, .. } => {
            let lam = require(pick_partition(lambda, &cfg.lambda, "lambda")?, "lambda")?;
            let n = require(n.or(cfg.n), "n")?;
            let chains: Vec<_> = gt_chains(&lam, n)?.collect();
            let count = *count || cfg.count.unwrap_or(false);
            if count {
                return Ok(Output {
                    text: chains.len().to_string(),
                    json: json!({"lambda": lam, "n": n, "count": chains.len().to_string()}),
                    ok: true,
                });
            }
            let text: Vec<String> = chains.iter().map(|c| format!("{c}  weight {}", c.weight_monomial())).collect();
            let json_chains: Vec<Value> = chains
                .iter()
                .map(|c| json!({"chain": c.chain, "weight": c.weight_monomial().to_string()}))
                .collect();
            Ok(Output {
                text: text.join("\n"),
                json: json!({"lambda": lam, "n": n, "count": chains.len().to_string(), "chains": json_chains}),
                ok: true,
            })
        }
        Verb::Fock { pairing: is_pairing, family: f, mu, lambda, beta, alpha, n, m, .. } => {
            let family = family(f, cfg)?;
            if *is_pairing || cfg.pairing.unwrap_or(false) {
                let mu = require(pick_partition(mu, &cfg.mu, "mu")?, "mu")?;
                let lam = require(pick_partition(lambda, &cfg.lambda, "lambda")?, "lambda")?;
                let v = pairing(family, &mu, &lam);
                return Ok(Output {
                    text: v.to_string(),
                    json: json!({"family": family.to_string(), "mu": mu, "lambda": lam, "value": v.to_string()}),
                    ok: true,
                });
            }
            let beta = pick_partition(beta, &cfg.beta, "beta")?.unwrap_or_else(Partition::empty);
            let alpha_part = require(pick_partition(alpha, &cfg.alpha, "alpha")?, "alpha")?;
            let n = n.or(cfg.n).unwrap_or(0);
            let m = m.or(cfg.m).unwrap_or(0);
            let v = matrix_element(family, &beta, &alpha_part, &Alphabet::standard(n, m));
            Ok(Output {
                text: v.to_string(),
                json: json!({
                    "family": family.to_string(),
                    "beta": beta,
                    "alpha": alpha_part,
                    "n": n,
                    "m": m,
                    "value": v.to_json(),
                    "text": v.to_string(),
                }),
                ok: true,
            })
        }
        Verb::Newton { n, m, degree, .. } => {
            let n = require(n.or(cfg.n), "n")?;
            let m = require(m.or(cfg.m), "m")?;
            let degree = require(degree.or(cfg.degree), "N")?;
            match newton_failure(n, m, degree) {
                None => Ok(Output {
                    text: "pass".into(),
                    json: json!({"n": n, "m": m, "N": degree, "passed": true}),
                    ok: true,
                }),
                Some((k, lhs, rhs)) => Ok(Output {
                    text: format!("fail at degree {k}: lhs = {lhs} ; rhs = {rhs}"),
                    json: json!({"n": n, "m": m, "N": degree, "passed": false, "degree": k}),
                    ok: false,
                }),
            }
        }
    }
}

fn parse_grid(s: &str) -> Result<Grid, Usage> {
    let raw = if s.trim_start().starts_with('{') {
        s.to_string()
    } else {
        std::fs::read_to_string(s).map_err(|e| Usage(format!("--grid {s}: {e}")))?
    };
    serde_json::from_str(&raw).map_err(|e| Usage(format!("--grid: {e}")))
}
