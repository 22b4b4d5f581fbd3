//! Command-line front end: parses ideal expressions, dispatches to the
//! `multseq` library and prints plain text or JSON.
//!
//! Exit codes: 0 on success, 1 on domain errors (improper ideal, resource
//! caps), 2 on usage and parse errors.

pub mod parse;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use multseq::hilbert::{self, HilbertConfig};
use multseq::newton::{self, NewtonPolyhedron};
use multseq::{MonomialIdeal, RingSpec};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

pub use parse::{parse_ideal, render_ideal, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "multseq",
    version,
    about = "Multiplicity sequences and Newton-polyhedron invariants of monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiplicity sequence c_0..c_d (nonzero entries in plain output)
    Ms(Common),
    /// j-multiplicity through the bivariate Hilbert polynomial
    Jmult(Common),
    /// j-multiplicity through the Newton polyhedron
    Monjmult(Common),
    /// Analytic spread through the compact faces of the Newton polyhedron
    Spread(Common),
    /// Ideal generated by the vertices of the Newton polyhedron
    Reduction(Common),
    /// Integral closure
    Closure(Common),
    /// Vertices and facet inequalities of the Newton polyhedron
    Facets(Common),
    /// Table of lengths of the bigraded pieces
    LambdaTable(TableArgs),
}

#[derive(Debug, Args)]
struct Common {
    /// Comma-separated variable names, e.g. `a,b,c,d`
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,
    /// Ideal expression, e.g. "ab2,bc3,cd4,da5" or "x^2*y, y^3"
    #[arg(
        long,
        required_unless_present = "ideal_file",
        conflicts_with = "ideal_file"
    )]
    ideal: Option<String>,
    /// File with one ideal expression per line; emits one JSON record per line
    #[arg(long)]
    ideal_file: Option<PathBuf>,
    /// Raise the ideal to this power before dispatch
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    power: Option<u32>,
    /// Emit JSON
    #[arg(long)]
    json: bool,
    /// Largest grid side for the Hilbert-polynomial fit
    #[arg(long, default_value_t = HilbertConfig::default().grid_cap)]
    grid_cap: usize,
    /// Largest generator set allowed for intermediate powers
    #[arg(long, default_value_t = HilbertConfig::default().gen_cap)]
    gen_cap: usize,
    /// Worker threads for the length table (output is identical for any value)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 6)]
    max_i: u32,
    #[arg(long, default_value_t = 6)]
    max_j: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Ms,
    Jmult,
    Monjmult,
    Spread,
    Reduction,
    Closure,
    Facets,
    LambdaTable { max_i: u32, max_j: u32 },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Library(inner) => Failure::Domain(inner.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<multseq::Error> for Failure {
    fn from(e: multseq::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let (op, common) = match cli.command {
        Command::Ms(c) => (Op::Ms, c),
        Command::Jmult(c) => (Op::Jmult, c),
        Command::Monjmult(c) => (Op::Monjmult, c),
        Command::Spread(c) => (Op::Spread, c),
        Command::Reduction(c) => (Op::Reduction, c),
        Command::Closure(c) => (Op::Closure, c),
        Command::Facets(c) => (Op::Facets, c),
        Command::LambdaTable(t) => (
            Op::LambdaTable {
                max_i: t.max_i,
                max_j: t.max_j,
            },
            t.common,
        ),
    };

    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(common.threads.unwrap_or(1) as usize)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return 1;
        }
    };
    pool.install(|| dispatch(op, &common, out, err))
}

fn dispatch(
    op: Op,
    common: &Common,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> i32 {
    let ring = match RingSpec::new(common.vars.iter().map(|v| v.trim().to_string())) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let config = HilbertConfig {
        grid_cap: common.grid_cap,
        gen_cap: common.gen_cap,
        ..HilbertConfig::default()
    };

    if let Some(path) = &common.ideal_file {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                return 2;
            }
        };
        let mut worst = 0;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let record = match evaluate(op, line, &ring, common.power, &config) {
                Ok((ideal, result)) => record(&ring, &ideal, result),
                Err(f) => {
                    let _ = writeln!(err, "error: line {}: {}", lineno + 1, f.message());
                    worst = worst.max(f.code());
                    json!({
                        "vars": ring.var_names(),
                        "input": line,
                        "error": f.message(),
                    })
                }
            };
            let _ = writeln!(out, "{record}");
        }
        return worst;
    }

    let src = common.ideal.as_deref().unwrap_or_default();
    match evaluate(op, src, &ring, common.power, &config) {
        Ok((ideal, result)) => {
            let _ = if common.json {
                writeln!(out, "{}", record(&ring, &ideal, result))
            } else {
                write!(out, "{}", result.plain)
            };
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

struct Outcome {
    plain: String,
    json: Value,
}

fn record(ring: &RingSpec, ideal: &MonomialIdeal, result: Outcome) -> Value {
    json!({
        "vars": ring.var_names(),
        "ideal": ideal_json(ideal),
        "result": result.json,
    })
}

fn ideal_json(ideal: &MonomialIdeal) -> Value {
    Value::Array(ideal.gens().iter().map(|g| json!(g.as_slice())).collect())
}

fn evaluate(
    op: Op,
    src: &str,
    ring: &RingSpec,
    power: Option<u32>,
    config: &HilbertConfig,
) -> Result<(MonomialIdeal, Outcome), Failure> {
    let mut ideal = parse_ideal(src, ring)?;
    if let Some(k) = power {
        ideal = ideal.power(k)?;
    }
    let outcome = match op {
        Op::Ms => {
            let seq = hilbert::multiplicity_sequence_with(&ideal, config)?.sequence;
            let mut plain = String::new();
            let mut nonzero = Map::new();
            for (i, c) in seq.nonzero() {
                plain.push_str(&format!("c[{i}] = {c}\n"));
                nonzero.insert(i.to_string(), json!(c));
            }
            Outcome {
                plain,
                json: json!({ "c": seq.as_slice(), "nonzero": nonzero }),
            }
        }
        Op::Jmult => {
            let j = hilbert::multiplicity_sequence_with(&ideal, config)?
                .sequence
                .j_multiplicity();
            scalar("j_multiplicity", j)
        }
        Op::Monjmult => scalar("j_multiplicity", newton::mon_j_mult(&ideal)?),
        Op::Spread => scalar(
            "analytic_spread",
            newton::mon_analytic_spread(&ideal)? as u64,
        ),
        Op::Reduction => generators(&newton::mon_reduction(&ideal)?),
        Op::Closure => generators(&newton::integral_closure(&ideal)?),
        Op::Facets => facets(&NewtonPolyhedron::of(&ideal)?),
        Op::LambdaTable { max_i, max_j } => {
            let table = hilbert::lambda_table_with(&ideal, max_i, max_j, config)?;
            let plain = table
                .rows()
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                    cells.join(" ") + "\n"
                })
                .collect();
            Outcome {
                plain,
                json: json!({ "max_i": max_i, "max_j": max_j, "values": table.rows() }),
            }
        }
    };
    Ok((ideal, outcome))
}

fn scalar(key: &str, v: u64) -> Outcome {
    Outcome {
        plain: format!("{v}\n"),
        json: json!({ key: v }),
    }
}

fn generators(ideal: &MonomialIdeal) -> Outcome {
    Outcome {
        plain: format!("{}\n", render_ideal(ideal)),
        json: json!({ "generators": ideal_json(ideal), "text": render_ideal(ideal) }),
    }
}

fn facets(np: &NewtonPolyhedron) -> Outcome {
    let names = np.ring().var_names();
    let mut plain = String::from("vertices:\n");
    for v in np.vertices() {
        let coords: Vec<String> = v.as_slice().iter().map(u32::to_string).collect();
        plain.push_str(&format!("  ({})\n", coords.join(", ")));
    }
    plain.push_str("facets:\n");
    let mut list = Vec::new();
    for f in np.facets() {
        let lhs: Vec<String> = f
            .normal()
            .iter()
            .zip(names)
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, n)| {
                if *a == BigInt::from(1) {
                    n.clone()
                } else {
                    format!("{a}*{n}")
                }
            })
            .collect();
        let tag = if f.is_bounded() { "  (bounded)" } else { "" };
        plain.push_str(&format!("  {} >= {}{tag}\n", lhs.join(" + "), f.offset()));
        list.push(json!({
            "normal": f.normal().iter().map(big_to_json).collect::<Vec<_>>(),
            "offset": big_to_json(f.offset()),
            "bounded": f.is_bounded(),
        }));
    }
    let vertices: Vec<Value> = np.vertices().iter().map(|v| json!(v.as_slice())).collect();
    Outcome {
        plain,
        json: json!({ "vertices": vertices, "facets": list }),
    }
}

/// Integers that fit in an `i64` become JSON numbers, larger ones strings.
fn big_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}
