//! Subcommand implementations. Each returns the text to print and whether
//! the command succeeded, so they are testable without spawning a process.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use corona_core::closed_form::conformance::{adjudicate_all, Check};
use corona_core::{
    serialize_edge_list, Coefficients, Graph, KirchhoffReport, ResistanceCase, ResistanceOracle,
};
use serde::Serialize;
use serde_json::json;

use crate::format::{residual, round_residual, round_value, value};
use crate::spec::{load_spec, CoronaSpec, SpecKind};
use crate::suite::{run_suite, ClosedForm, SuiteConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Method {
    Closed,
    Oracle,
    #[default]
    Both,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            success: true,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Sidecar path for the partition of a built corona.
pub fn partition_path(output: &Path) -> PathBuf {
    let mut s = output.as_os_str().to_owned();
    s.push(".partition.json");
    PathBuf::from(s)
}

pub fn build(spec_path: &Path, output: &Path, format: Format) -> Result<Outcome> {
    let spec = load_spec(spec_path)?;
    let corona = spec
        .build()
        .with_context(|| format!("building {}", spec_path.display()))?;
    fs::write(output, serialize_edge_list(&corona.graph))
        .with_context(|| format!("writing {}", output.display()))?;
    let sidecar = partition_path(output);
    let partition = json!({
        "schema": "corona-partition/1",
        "kind": corona.kind,
        "partition": corona.partition,
    });
    fs::write(&sidecar, to_json(&partition)?)
        .with_context(|| format!("writing {}", sidecar.display()))?;
    let (n, m) = (corona.graph.n(), corona.graph.m());
    let stdout = match format {
        Format::Json => to_json(&json!({
            "graph": output, "partition": sidecar, "vertices": n, "edges": m,
        }))?,
        Format::Csv => format!(
            "graph,partition,vertices,edges\n{},{},{n},{m}\n",
            output.display(),
            sidecar.display()
        ),
        Format::Text => format!(
            "wrote {} ({n} vertices, {m} edges) and {}\n",
            output.display(),
            sidecar.display()
        ),
    };
    Ok(Outcome::ok(stdout))
}

/// Closed form for a spec; `r_graph` is the R-vertex corona with empty crowns.
fn closed_form(spec: &CoronaSpec, coefficients: Coefficients) -> Result<ClosedForm> {
    let cf = match spec.kind {
        SpecKind::RGraph => {
            let empty = vec![Graph::empty(0); spec.base.n()];
            ClosedForm::build("r_vertex", &spec.base, &empty, coefficients)
        }
        SpecKind::RVertex => ClosedForm::build("r_vertex", &spec.base, &spec.crowns, coefficients),
        SpecKind::REdge => ClosedForm::build("r_edge", &spec.base, &spec.crowns, coefficients),
    };
    Ok(cf?)
}

#[derive(Debug, Clone, Serialize)]
struct PairRow {
    u: usize,
    v: usize,
    case: Option<ResistanceCase>,
    closed: Option<f64>,
    oracle: Option<f64>,
    residual: Option<f64>,
}

pub enum Pairs {
    One(usize, usize),
    All,
}

pub fn resist(spec_path: &Path, method: Method, pairs: Pairs, format: Format) -> Result<Outcome> {
    let spec = load_spec(spec_path)?;
    let corona = spec.build()?;
    let order = corona.graph.n();
    let cf = match method {
        Method::Oracle => None,
        _ => Some(closed_form(&spec, Coefficients::DERIVED)?),
    };
    let oracle = match method {
        Method::Closed => None,
        _ => Some(ResistanceOracle::new(&corona.graph)?),
    };
    let list: Vec<(usize, usize)> = match pairs {
        Pairs::One(u, v) => {
            for w in [u, v] {
                if w >= order {
                    bail!("vertex {w} out of range for a corona with {order} vertices");
                }
            }
            vec![(u, v)]
        }
        Pairs::All => (0..order)
            .flat_map(|u| ((u + 1)..order).map(move |v| (u, v)))
            .collect(),
    };
    let mut rows = Vec::with_capacity(list.len());
    for (u, v) in list {
        let (closed, case) = match &cf {
            Some(cf) => {
                let (r, c) = cf.resistance_with_case(u, v)?;
                (Some(r), Some(c))
            }
            None => (None, None),
        };
        let oracle = match &oracle {
            Some(o) => Some(o.resistance(u, v)?),
            None => None,
        };
        let residual = closed.zip(oracle).map(|(a, b)| (a - b).abs());
        rows.push(PairRow {
            u,
            v,
            case,
            closed,
            oracle,
            residual,
        });
    }

    let opt = |x: Option<f64>, f: fn(f64) -> String| x.map(f).unwrap_or_default();
    let stdout = match format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "u": r.u, "v": r.v, "case": r.case,
                        "closed": r.closed.map(round_value),
                        "oracle": r.oracle.map(round_value),
                        "residual": r.residual.map(round_residual),
                    })
                })
                .collect();
            to_json(&json!({ "kind": spec.kind, "vertices": order, "pairs": rows }))?
        }
        Format::Csv => {
            let mut s = String::from("u,v,case,closed,oracle,residual\n");
            for r in &rows {
                let case = r.case.map(|c| c.to_string()).unwrap_or_default();
                writeln!(
                    s,
                    "{},{},{case},{},{},{}",
                    r.u,
                    r.v,
                    opt(r.closed, value),
                    opt(r.oracle, value),
                    opt(r.residual, residual)
                )?;
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                write!(s, "r({}, {})", r.u, r.v)?;
                if let Some(c) = r.closed {
                    write!(s, "  closed = {}", value(c))?;
                }
                if let Some(o) = r.oracle {
                    write!(s, "  oracle = {}", value(o))?;
                }
                if let Some(d) = r.residual {
                    write!(s, "  residual = {}", residual(d))?;
                }
                if let Some(c) = r.case {
                    write!(s, "  [{c}]")?;
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

pub fn kf(spec_path: &Path, method: Method, format: Format) -> Result<Outcome> {
    let spec = load_spec(spec_path)?;
    let corona = spec.build()?;
    let closed: Option<KirchhoffReport> = match method {
        Method::Oracle => None,
        _ => Some(closed_form(&spec, Coefficients::DERIVED)?.kirchhoff()?),
    };
    let oracle = match method {
        Method::Closed => None,
        _ => Some(ResistanceOracle::new(&corona.graph)?.kirchhoff_index()),
    };
    let rel = closed
        .as_ref()
        .zip(oracle)
        .map(|(c, o)| (c.value - o).abs() / o.abs().max(1.0));

    let stdout = match format {
        Format::Json => {
            let terms = closed.as_ref().map(|c| {
                let list = |ts: &[corona_core::closed_form::Term]| {
                    ts.iter()
                        .map(|t| json!({ "name": t.name, "value": round_value(t.value) }))
                        .collect::<Vec<_>>()
                };
                json!({
                    "prefactor": round_value(c.expansion.prefactor),
                    "trace_terms": list(&c.expansion.trace_terms),
                    "ones_terms": list(&c.expansion.ones_terms),
                    "expansion_value": round_value(c.expansion.value()),
                    "expansion_deviation": round_residual(c.expansion_deviation),
                })
            });
            to_json(&json!({
                "kind": spec.kind,
                "closed": closed.as_ref().map(|c| round_value(c.value)),
                "oracle": oracle.map(round_value),
                "relative_residual": rel.map(round_residual),
                "expansion": terms,
            }))?
        }
        Format::Csv => {
            let mut s = String::from("section,name,value\n");
            if let Some(c) = &closed {
                writeln!(s, "kirchhoff,closed,{}", value(c.value))?;
                writeln!(s, "expansion,prefactor,{}", value(c.expansion.prefactor))?;
                for t in &c.expansion.trace_terms {
                    writeln!(s, "trace,{},{}", t.name, value(t.value))?;
                }
                for t in &c.expansion.ones_terms {
                    writeln!(s, "ones,{},{}", t.name, value(t.value))?;
                }
            }
            if let Some(o) = oracle {
                writeln!(s, "kirchhoff,oracle,{}", value(o))?;
            }
            if let Some(r) = rel {
                writeln!(s, "kirchhoff,relative_residual,{}", residual(r))?;
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            if let Some(c) = &closed {
                writeln!(s, "Kf (closed form) = {}", value(c.value))?;
                writeln!(
                    s,
                    "  prefactor n + m + Σt = {}",
                    value(c.expansion.prefactor)
                )?;
                writeln!(s, "  trace terms (sum {}):", value(c.expansion.trace()))?;
                for t in &c.expansion.trace_terms {
                    writeln!(s, "    {:<22} {}", t.name, value(t.value))?;
                }
                writeln!(s, "  1ᵀN1 terms (sum {}):", value(c.expansion.ones()))?;
                for t in &c.expansion.ones_terms {
                    writeln!(s, "    {:<22} {}", t.name, value(t.value))?;
                }
                writeln!(
                    s,
                    "  expansion deviation = {}",
                    residual(c.expansion_deviation)
                )?;
            }
            if let Some(o) = oracle {
                writeln!(s, "Kf (oracle)      = {}", value(o))?;
            }
            if let Some(r) = rel {
                writeln!(s, "relative residual = {}", residual(r))?;
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

/// Parse `name=value` coefficient overrides.
pub fn apply_mutations(mutations: &[String]) -> Result<Coefficients> {
    let mut c = Coefficients::DERIVED;
    for m in mutations {
        let (name, v) = m
            .split_once('=')
            .with_context(|| format!("--mutate expects name=value, got `{m}`"))?;
        let v = v.trim();
        let parsed = match v.split_once('/') {
            Some((a, b)) => a.trim().parse::<f64>()? / b.trim().parse::<f64>()?,
            None => v.parse::<f64>()?,
        };
        c = c.with(name.trim(), parsed)?;
    }
    Ok(c)
}

pub fn suite(config: &SuiteConfig, format: Format, output: Option<&Path>) -> Result<Outcome> {
    let report = run_suite(config);
    let json = to_json(&report)?;
    if let Some(path) = output {
        fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    let stdout = match format {
        Format::Json => json,
        Format::Csv => {
            let mut s = String::from("check,tolerance,evaluations,failures,errors,worst,pass\n");
            for c in &report.checks {
                writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    c.name,
                    residual(c.tolerance),
                    c.evaluations,
                    c.failures,
                    c.errors,
                    c.worst.map(residual).unwrap_or_default(),
                    c.pass
                )?;
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "suite seed={} cases={} nmax={} tmax={}{}",
                config.seed,
                config.cases,
                config.nmax,
                config.tmax,
                config
                    .mmax
                    .map(|m| format!(" mmax={m}"))
                    .unwrap_or_default()
            )?;
            if !report.mutated.is_empty() {
                writeln!(s, "mutated coefficients: {}", report.mutated.join(", "))?;
            }
            for c in &report.checks {
                writeln!(
                    s,
                    "  {:<4} {:<24} worst {:>10}  tol {}  ({} evaluations, {} failures, {} errors)",
                    if c.pass { "ok" } else { "FAIL" },
                    c.name,
                    c.worst.map(residual).unwrap_or_else(|| "-".into()),
                    residual(c.tolerance),
                    c.evaluations,
                    c.failures,
                    c.errors
                )?;
            }
            writeln!(
                s,
                "verdict: {}",
                if report.passed() { "pass" } else { "fail" }
            )?;
            s
        }
    };
    Ok(Outcome {
        stdout,
        success: report.passed(),
    })
}

pub fn conformance(format: Format) -> Result<Outcome> {
    let outcomes = adjudicate_all()?;
    let success = outcomes.iter().all(|o| o.rejected != o.shipped);
    let stdout = match format {
        Format::Json => {
            to_json(&json!({ "schema": "corona-conformance/1", "variants": outcomes }))?
        }
        Format::Csv | Format::Text => {
            let mut s = String::new();
            if format == Format::Csv {
                s.push_str("variant,shipped,rejected,instances,base_n,base_m,crown_sizes,value,reference\n");
            }
            for o in &outcomes {
                let (base, sizes, val, reference) = match &o.counterexample {
                    Some((inst, e)) => (
                        format!("{},{}", inst.base.n(), inst.base.m()),
                        format!("{:?}", inst.crown_sizes()).replace(',', ""),
                        Some(e.value),
                        Some(e.reference),
                    ),
                    None => (",".into(), String::new(), None, None),
                };
                let show = |x: Option<f64>| match (x, o.check) {
                    (Some(x), Check::OneInverse) => residual(x),
                    (Some(x), Check::Kirchhoff) => value(x),
                    (None, _) => String::new(),
                };
                if format == Format::Csv {
                    writeln!(
                        s,
                        "{},{},{},{},{base},{sizes},{},{}",
                        o.label,
                        o.shipped,
                        o.rejected,
                        o.instances_checked,
                        show(val),
                        show(reference)
                    )?;
                } else {
                    let verdict = if o.rejected { "rejected" } else { "consistent" };
                    writeln!(s, "{:<22} {:<10} {}", o.label, verdict, o.description)?;
                    if let Some((inst, _)) = &o.counterexample {
                        let what = match o.check {
                            Check::Kirchhoff => "Kf",
                            Check::OneInverse => "LXL−L residual",
                        };
                        let vs = match o.check {
                            Check::Kirchhoff => "oracle",
                            Check::OneInverse => "threshold",
                        };
                        writeln!(
                            s,
                            "{:<33} counterexample: base n={} m={} edges={:?}, crown sizes {:?}: {what} {} vs {vs} {}",
                            "",
                            inst.base.n(),
                            inst.base.m(),
                            inst.base.edges(),
                            inst.crown_sizes(),
                            show(val),
                            show(reference)
                        )?;
                    } else {
                        writeln!(
                            s,
                            "{:<33} agrees with the oracle on all {} instances",
                            "", o.instances_checked
                        )?;
                    }
                }
            }
            s
        }
    };
    Ok(Outcome { stdout, success })
}
