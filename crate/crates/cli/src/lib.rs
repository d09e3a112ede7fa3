//! Command-line front end over the strata engine: every pipeline behind one
//! batch verb, TSV by default, JSON on request, with a persistent count
//! cache. Kept as a library so tests can drive the exact entry point the
//! binary uses.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use strata_core::arith::cache::CountCache;
use strata_core::arith::{
    self, count_brute, count_fast, count_strata_w1n22, interpolate, zeta_complement, CountRecord,
    Method, Partition, DEFAULT_BUDGET,
};
use strata_core::catalog::{hc_table, SpaceId};
use strata_core::consistency::{
    check_conjecture, theorem_a_report, trace_check, ConjectureStatement, ConsistencyReport,
    Verdict,
};
use strata_core::hodge::{Flavor, HodgeTable};
use strata_core::motivic::e_wlambda_p1;
use strata_core::spectral::{e1_page, serre_e2, Page};

/// Environment variable holding the default cache path when `--cache` is
/// not given.
pub const CACHE_ENV: &str = "STRATA_CACHE";
const CACHE_DEFAULT: &str = "strata_counts.jsonl";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Parser)]
#[command(name = "strata", version, about = "Exact cohomology and point counts of divisor strata of the line")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "tsv")]
    format: Format,
    /// Count cache path (JSON lines). Defaults to $STRATA_CACHE, then
    /// strata_counts.jsonl in the working directory.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Enumeration budget for brute-force counting.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers of a cataloged space.
    Betti {
        #[arg(long)]
        space: String,
    },
    /// First page of the symmetric-power spectral sequence.
    E1 {
        #[arg(long)]
        space: String,
        #[arg(long)]
        n: i64,
    },
    /// Second page of the fibration spectral sequence.
    Serre {
        #[arg(long)]
        base: String,
        #[arg(long)]
        fiber: String,
        /// "trivial" or "split:<file>" with JSON sign-isotypic tables.
        #[arg(long, default_value = "trivial")]
        action: String,
    },
    /// Count stratum points over a prime field.
    Count {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        method: String,
    },
    /// Interpolate the count polynomial from prime counts.
    Interp {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        primes: String,
    },
    /// Zeta series of the line minus closed points.
    Zeta {
        #[arg(long)]
        space: String,
        #[arg(long)]
        order: usize,
    },
    /// E-polynomial class of a stratum.
    Epoly {
        #[arg(long)]
        lambda: String,
    },
    /// Consistency checks; inconsistent reports exit with code 3.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Re-derive the two-double-point tables spectrally.
    TheoremA {
        #[arg(long)]
        n: u32,
    },
    /// Trace formula versus interpolated counts.
    Trace {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        claim: String,
    },
    /// Stable-cohomology statements at finite parameters.
    Conjecture {
        #[arg(long)]
        name: String,
        /// Single value, comma list, or inclusive range like 2..6.
        #[arg(long)]
        n: String,
    },
}

enum CliError {
    Usage(String),
    Computational(String),
}

impl CliError {
    fn usage(e: impl ToString) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Computational(e.to_string())
    }
}

/// Run the command line against an output sink, returning the process exit
/// code: 0 success, 1 computational error, 2 usage error, 3 inconsistent.
pub fn run(args: impl IntoIterator<Item = String>, out: &mut dyn Write) -> i32 {
    let argv = std::iter::once("strata".to_string()).chain(args);
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            2
        }
        Err(CliError::Computational(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            1
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Betti { space } => {
            let space: SpaceId = space.parse().map_err(CliError::usage)?;
            let ordinary = hc_table(space)?.poincare_dual(space.dimension())?;
            let betti = ordinary.betti();
            match cli.format {
                Format::Tsv => {
                    for (degree, dim) in betti.iter().enumerate() {
                        writeln!(out, "{degree}\t{dim}")?;
                    }
                }
                Format::Json => emit_json(
                    out,
                    &serde_json::json!({
                        "space": space.to_string(),
                        "dimension": space.dimension(),
                        "betti": betti,
                    }),
                )?,
            }
            Ok(0)
        }
        Command::E1 { space, n } => {
            let space: SpaceId = space.parse().map_err(CliError::usage)?;
            let page = e1_page(&hc_table(space)?, *n)?;
            emit_page(out, cli.format, &page, &[("space", space.to_string()), ("n", n.to_string())])?;
            Ok(0)
        }
        Command::Serre { base, fiber, action } => {
            let base_id: SpaceId = base.parse().map_err(CliError::usage)?;
            let fiber_id: SpaceId = fiber.parse().map_err(CliError::usage)?;
            let base_triv = hc_table(base_id)?.poincare_dual(base_id.dimension())?;
            let fiber_triv = hc_table(fiber_id)?.poincare_dual(fiber_id.dimension())?;
            let (base_sign, fiber_sign) = load_action(action)?;
            let page = serre_e2(&base_triv, &base_sign, &fiber_triv, &fiber_sign)?;
            emit_page(
                out,
                cli.format,
                &page,
                &[
                    ("base", base_id.to_string()),
                    ("fiber", fiber_id.to_string()),
                    ("action", action.clone()),
                ],
            )?;
            Ok(0)
        }
        Command::Count { lambda, q, method } => {
            let lambda: Partition = lambda.parse().map_err(CliError::usage)?;
            let method: Method = parse_method(method)?;
            let mut cache = CountCache::open(cache_path(&cli))?;
            let record = match cache.lookup(&lambda, *q, method) {
                Some(hit) => hit.clone(),
                None => {
                    let record = compute_count(&lambda, *q, method, cli.budget)?;
                    cache.insert(record.clone())?;
                    record
                }
            };
            match cli.format {
                Format::Tsv => writeln!(out, "{}", record.count)?,
                Format::Json => emit_json(out, &record)?,
            }
            Ok(0)
        }
        Command::Interp { lambda, primes } => {
            let lambda: Partition = lambda.parse().map_err(CliError::usage)?;
            let primes = parse_u64_list(primes).map_err(CliError::usage)?;
            let poly = interpolate(&lambda, &primes)?;
            match cli.format {
                Format::Tsv => writeln!(out, "{poly}")?,
                Format::Json => emit_json(
                    out,
                    &serde_json::json!({
                        "lambda": lambda,
                        "primes": primes,
                        "polynomial": poly,
                        "display": poly.to_string(),
                    }),
                )?,
            }
            Ok(0)
        }
        Command::Zeta { space, order } => {
            let space_id: SpaceId = space.parse().map_err(CliError::usage)?;
            let removed: &[(u32, u32)] = match space_id {
                SpaceId::P1 => &[],
                SpaceId::A1 => &[(1, 1)],
                SpaceId::Gm => &[(1, 2)],
                SpaceId::P1MinusDeg2Point => &[(2, 1)],
                other => {
                    return Err(CliError::Usage(format!(
                        "zeta supports complements of closed points of the line, not {other}"
                    )));
                }
            };
            let series = zeta_complement(removed, *order);
            match cli.format {
                Format::Tsv => {
                    for n in 0..=*order {
                        writeln!(out, "{n}\t{}", series.coeff(n))?;
                    }
                }
                Format::Json => emit_json(
                    out,
                    &serde_json::json!({
                        "space": space_id.to_string(),
                        "order": order,
                        "series": series,
                    }),
                )?,
            }
            Ok(0)
        }
        Command::Epoly { lambda } => {
            let lambda: Partition = lambda.parse().map_err(CliError::usage)?;
            let class = e_wlambda_p1(&lambda)?;
            match cli.format {
                Format::Tsv => writeln!(out, "{class}")?,
                Format::Json => emit_json(
                    out,
                    &serde_json::json!({
                        "lambda": lambda,
                        "terms": class,
                        "display": class.to_string(),
                    }),
                )?,
            }
            Ok(0)
        }
        Command::Check { what } => {
            let report = match what {
                CheckCommand::TheoremA { n } => theorem_a_report(*n),
                CheckCommand::Trace { lambda, claim } => {
                    let lambda: Partition = lambda.parse().map_err(CliError::usage)?;
                    let claim_id: SpaceId = claim.parse().map_err(CliError::usage)?;
                    let table = hc_table(claim_id)?.poincare_dual(claim_id.dimension())?;
                    let counts = interpolate(&lambda, &arith::default_primes(&lambda))?;
                    trace_check(&table, claim_id.dimension(), &counts)
                }
                CheckCommand::Conjecture { name, n } => {
                    let statement: ConjectureStatement = name.parse().map_err(CliError::usage)?;
                    let range = parse_range(n).map_err(CliError::usage)?;
                    check_conjecture(statement, &range, None)
                }
            };
            emit_report(out, cli.format, &report)?;
            Ok(if report.verdict == Verdict::Inconsistent { 3 } else { 0 })
        }
    }
}

fn cache_path(cli: &Cli) -> PathBuf {
    cli.cache.clone().unwrap_or_else(|| {
        std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(CACHE_DEFAULT))
    })
}

fn parse_method(s: &str) -> Result<Method, CliError> {
    match s {
        "brute" => Ok(Method::Brute),
        "fast" => Ok(Method::Fast),
        "strata" => Ok(Method::Strata),
        other => Err(CliError::Usage(format!(
            "unknown method {other:?}; expected brute, fast, or strata"
        ))),
    }
}

fn compute_count(
    lambda: &Partition,
    q: u64,
    method: Method,
    budget: u64,
) -> Result<CountRecord, CliError> {
    match method {
        Method::Brute => Ok(count_brute(lambda, q, budget)?),
        Method::Fast => Ok(count_fast(lambda, q)?),
        Method::Strata => {
            let parts = lambda.parts();
            let ones = parts.iter().take_while(|&&p| p == 1).count();
            if parts[ones..] != [2, 2] {
                return Err(CliError::Computational(format!(
                    "the stratified counter covers only the two-double-point strata, not {lambda}"
                )));
            }
            Ok(count_strata_w1n22(ones as u32, q)?)
        }
    }
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("bad list entry {p:?}: {e}")))
        .collect()
}

fn parse_range(s: &str) -> Result<Vec<u32>, String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
        let hi: u32 = hi.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok((lo..=hi).collect())
    } else {
        s.split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| format!("bad value {p:?}: {e}")))
            .collect()
    }
}

#[derive(serde::Deserialize)]
struct SplitAction {
    base_sign: HodgeTable,
    fiber_sign: HodgeTable,
}

fn load_action(action: &str) -> Result<(HodgeTable, HodgeTable), CliError> {
    if action == "trivial" {
        return Ok((
            HodgeTable::empty(Flavor::Ordinary),
            HodgeTable::empty(Flavor::Ordinary),
        ));
    }
    let Some(path) = action.strip_prefix("split:") else {
        return Err(CliError::Usage(format!(
            "bad action {action:?}; expected trivial or split:<file>"
        )));
    };
    let contents = std::fs::read_to_string(path)?;
    let split: SplitAction = serde_json::from_str(&contents)?;
    Ok((split.base_sign, split.fiber_sign))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let rendered = serde_json::to_string(value)?;
    writeln!(out, "{rendered}")?;
    Ok(())
}

fn emit_page(
    out: &mut dyn Write,
    format: Format,
    page: &Page,
    context: &[(&str, String)],
) -> Result<(), CliError> {
    match format {
        Format::Tsv => {
            let max_p = page.positions().map(|(p, _)| p).max().unwrap_or(0);
            let max_q = page.positions().map(|(_, q)| q).max().unwrap_or(0);
            write!(out, "q\\p")?;
            for p in 0..=max_p {
                write!(out, "\t{p}")?;
            }
            writeln!(out)?;
            for q in (0..=max_q).rev() {
                write!(out, "{q}")?;
                for p in 0..=max_p {
                    write!(out, "\t{}", page.dim_at(p, q))?;
                }
                writeln!(out)?;
            }
        }
        Format::Json => {
            let mut object = serde_json::Map::new();
            for (key, value) in context {
                object.insert(key.to_string(), serde_json::Value::String(value.clone()));
            }
            object.insert("page".to_string(), serde_json::to_value(page)?);
            emit_json(out, &serde_json::Value::Object(object))?;
        }
    }
    Ok(())
}

fn emit_report(
    out: &mut dyn Write,
    format: Format,
    report: &ConsistencyReport,
) -> Result<(), CliError> {
    match format {
        Format::Tsv => {
            writeln!(out, "verdict\t{}", report.verdict)?;
            writeln!(out, "claimed\t{}", report.claimed)?;
            writeln!(out, "observed\t{}", report.observed)?;
            for row in &report.ledger {
                writeln!(
                    out,
                    "ledger\t{}\t{}\t{}\t{}",
                    row.label,
                    row.claimed,
                    row.observed,
                    if row.ok { "ok" } else { "MISMATCH" }
                )?;
            }
            for note in &report.notes {
                writeln!(out, "note\t{note}")?;
            }
        }
        Format::Json => emit_json(out, report)?,
    }
    Ok(())
}
