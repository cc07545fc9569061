//! Command-line front end. Every subcommand writes one JSON document with
//! sorted keys to stdout and a one-line summary to stderr.
//!
//! Exit codes: `0` pass or report-only, `1` a verification failed, `2` bad input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::chain::{conjugate_by_twist, enumerate_generators, ChainNotation, RelationName};
use crate::checks::{
    acceptance_suite, dmin_check, graph_check, rank_check, verify_relation, SuiteScope, Verdict,
};
use crate::error::{Error, Result};
use crate::sigma::sigma_notation;
use crate::sigma::binomial;
use crate::surface::{SurfaceModel, Twist};
use crate::symplectic::basis_labels;
use crate::tau::tau_notation;

#[derive(Parser, Debug)]
#[command(name = "torelli", about = "Exact Torelli-group calculus at the level of tau and sigma")]
struct Cli {
    /// Spaces of JSON indentation; 0 prints compact JSON.
    #[arg(long, global = true, default_value_t = 2)]
    json_indent: usize,
    /// Largest allowed dimension of the wedge-cube of the homology lattice.
    #[arg(long, global = true, default_value_t = 2024)]
    max_dim: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct ModelArgs {
    #[arg(long, default_value_t = 3)]
    genus: usize,
    #[arg(long, default_value_t = 2)]
    boundaries: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    Tau,
    Sigma,
    Dmin,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology classes of the named curves.
    Table(ModelArgs),
    /// All chain-map generators of the model.
    Enumerate {
        #[command(flatten)]
        model: ModelArgs,
        /// One JSON object per line instead of a single document.
        #[arg(long)]
        jsonl: bool,
    },
    /// Apply one conjugation rule: T^sign * chain.
    Rewrite {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        twist: String,
        #[arg(long, allow_hyphen_values = true)]
        sign: i64,
        #[arg(long)]
        chain: String,
    },
    /// Johnson homomorphism of a chain map.
    Tau {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        chain: String,
    },
    /// Birman-Craggs-Johnson homomorphism of a chain map.
    Sigma {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        chain: String,
    },
    /// Check a relation (J1, J1full, J2, J3, lantern) under tau and sigma.
    Verify {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        relation: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Abelianization ranks of the generator images.
    Rank(ModelArgs),
    /// Span dimension of the tau or sigma images, or the orbit-closure d_min.
    Span {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Connectivity of the disjointness graph on m-subsets of handles.
    Graph {
        #[arg(long, default_value_t = 3)]
        genus: usize,
        #[arg(long)]
        m: usize,
    },
    /// The acceptance suite restricted to one genus.
    AllChecks {
        #[arg(long, default_value_t = 3)]
        genus: usize,
    },
}

/// The document written for every run. The elapsed time goes to stderr only,
/// so identical inputs give byte-identical JSON.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: Value,
    pub verdict: Verdict,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        if self.verdict == Verdict::Fail {
            1
        } else {
            0
        }
    }
}

/// Run with process stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                2
            };
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(Output::Document(mut report)) => {
            report.elapsed_ms = start.elapsed().as_millis();
            if let Err(e) = write_json(out, &report, cli.json_indent) {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            let _ = writeln!(
                err,
                "torelli {}: {} in {} ms",
                report.command,
                report.verdict.label(),
                report.elapsed_ms
            );
            report.exit_code()
        }
        Ok(Output::Lines(lines)) => {
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn write_json(out: &mut dyn Write, report: &RunReport, indent: usize) -> std::io::Result<()> {
    let value = serde_json::to_value(report)?;
    if indent == 0 {
        serde_json::to_writer(&mut *out, &value)?;
    } else {
        let pad = vec![b' '; indent];
        let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
        let mut ser = serde_json::Serializer::with_formatter(&mut *out, fmt);
        value.serialize(&mut ser)?;
    }
    writeln!(out)
}

enum Output {
    Document(RunReport),
    Lines(Vec<String>),
}

fn model(args: ModelArgs, max_dim: u64) -> Result<SurfaceModel> {
    let rank = if args.boundaries == 2 { 2 * args.genus + 2 } else { 2 * args.genus };
    let dim = binomial(rank, 3);
    if dim > max_dim {
        return Err(Error::InvalidInput(format!("wedge-cube dimension {dim} exceeds --max-dim {max_dim}")));
    }
    SurfaceModel::build(args.genus, args.boundaries)
}

fn model_inputs(args: ModelArgs) -> BTreeMap<String, Value> {
    BTreeMap::from([("genus".into(), json!(args.genus)), ("boundaries".into(), json!(args.boundaries))])
}

fn report(command: &str, inputs: BTreeMap<String, Value>, outputs: Value, verdict: Verdict) -> Output {
    Output::Document(RunReport { command: command.into(), inputs, outputs, verdict, elapsed_ms: 0 })
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::InvalidInput(e.to_string()))
}

fn execute(cli: &Cli) -> Result<Output> {
    let max = cli.max_dim;
    Ok(match &cli.command {
        Command::Table(a) => {
            let m = model(*a, max)?;
            let curves: BTreeMap<String, Value> =
                m.curve_table().iter().map(|(k, v)| (k.to_string(), json!(v.coords()))).collect();
            let outputs = json!({
                "basis": basis_labels(m.rank()),
                "curves": curves,
                "rank": m.rank(),
            });
            report("table", model_inputs(*a), outputs, Verdict::ReportOnly)
        }
        Command::Enumerate { model: a, jsonl } => {
            let m = model(*a, max)?;
            let rows = enumerate_generators(&m)?
                .iter()
                .map(|n| {
                    let v = n.expand(&m)?;
                    Ok(json!({
                        "notation": n.to_string(),
                        "beta": n.is_beta(),
                        "genus_of_map": n.genus_of_map(),
                        "boundary_class": v.boundary_class.coords(),
                    }))
                })
                .collect::<Result<Vec<Value>>>()?;
            if *jsonl {
                return Ok(Output::Lines(rows.iter().map(Value::to_string).collect()));
            }
            let outputs = json!({ "count": rows.len(), "generators": rows });
            report("enumerate", model_inputs(*a), outputs, Verdict::ReportOnly)
        }
        Command::Rewrite { model: a, twist, sign, chain } => {
            let m = model(*a, max)?;
            let t: Twist = twist.parse()?;
            let n: ChainNotation = chain.parse()?;
            let (rule, word) = conjugate_by_twist(t, *sign, &n, &m)?;
            let mut inputs = model_inputs(*a);
            inputs.insert("twist".into(), json!(twist));
            inputs.insert("sign".into(), json!(sign));
            inputs.insert("chain".into(), json!(chain));
            let outputs = json!({
                "input": n.to_string(),
                "twist": t.to_string(),
                "sign": sign,
                "rule": rule,
                "word": word.labels(),
            });
            report("rewrite", inputs, outputs, Verdict::ReportOnly)
        }
        Command::Tau { model: a, chain } | Command::Sigma { model: a, chain } => {
            let m = model(*a, max)?;
            let n: ChainNotation = chain.parse()?;
            let mut inputs = model_inputs(*a);
            inputs.insert("chain".into(), json!(chain));
            if matches!(cli.command, Command::Tau { .. }) {
                let t = tau_notation(&n, &m)?;
                report("tau", inputs, json!({ "notation": n.to_string(), "triples": t.labeled_triples() }), Verdict::ReportOnly)
            } else {
                let s = sigma_notation(&n, &m)?;
                report("sigma", inputs, json!({ "notation": n.to_string(), "monomials": s.labeled_monomials() }), Verdict::ReportOnly)
            }
        }
        Command::Verify { model: a, relation, k } => {
            let m = model(*a, max)?;
            let name: RelationName = relation.parse()?;
            let r = verify_relation(name, *k, &m)?;
            let mut inputs = model_inputs(*a);
            inputs.insert("relation".into(), json!(relation));
            inputs.insert("k".into(), json!(k));
            let verdict = Verdict::from_bool(r.holds());
            report("verify", inputs, to_value(&r)?, verdict)
        }
        Command::Rank(a) => {
            let m = model(*a, max)?;
            let r = rank_check(&m)?;
            let outputs = json!({
                "expected": r.sigma_expected,
                "computed": r.sigma_rank,
                "tau_expected": r.tau_expected,
                "tau_computed": r.tau_rank,
                "generators": r.generators,
            });
            report("rank", model_inputs(*a), outputs, Verdict::from_bool(r.holds()))
        }
        Command::Span { model: a, what } => {
            let m = model(*a, max)?;
            let mut inputs = model_inputs(*a);
            let (dimension, expected, extra) = match what {
                What::Tau | What::Sigma => {
                    let r = rank_check(&m)?;
                    if matches!(what, What::Tau) {
                        (r.tau_rank, r.tau_expected, Value::Null)
                    } else {
                        (r.sigma_rank, r.sigma_expected, Value::Null)
                    }
                }
                What::Dmin => {
                    if a.boundaries != 2 {
                        return Err(Error::InvalidInput("dmin uses the two-boundary model".into()));
                    }
                    let d = dmin_check(a.genus)?;
                    (d.d_min, 2, to_value(&d)?)
                }
            };
            inputs.insert("what".into(), json!(format!("{what:?}").to_lowercase()));
            let outputs = json!({
                "dimension": dimension,
                "expected": expected,
                "match": dimension == expected,
                "details": extra,
            });
            report("span", inputs, outputs, Verdict::from_bool(dimension == expected))
        }
        Command::Graph { genus, m } => {
            let g = graph_check(*genus, *m)?;
            let inputs = BTreeMap::from([("genus".into(), json!(genus)), ("m".into(), json!(m))]);
            report("graph", inputs, to_value(&g)?, g.verdict())
        }
        Command::AllChecks { genus } => {
            if *genus < 3 {
                return Err(Error::InvalidInput("all-checks needs genus >= 3".into()));
            }
            model(ModelArgs { genus: *genus, boundaries: 2 }, max)?;
            let results = acceptance_suite(&SuiteScope::at_genus(*genus));
            let verdict = Verdict::all(results.iter().map(|c| c.verdict));
            let inputs = BTreeMap::from([("genus".into(), json!(genus))]);
            report("all-checks", inputs, json!({ "criteria": to_value(&results)? }), verdict)
        }
    })
}
