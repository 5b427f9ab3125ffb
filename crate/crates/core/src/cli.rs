//! Command-line front end. The binary parses arguments and calls [`execute`];
//! everything else lives here so it can be exercised in-process.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::audit::{run_suite, AuditReport, Suite, SuiteOptions};
use crate::bitset::VertexSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::forcing::{closure, propagation_time, zero_forcing_number_capped, ForcingChronicle};
use crate::functigraph::{
    build_functigraph, enumerate_functions, parse_function_for, vertex_label, FunctionFilter,
    VertexFunction,
};
use crate::graph::{FamilySpec, Graph, GraphData};
use crate::path_cover::path_cover_number;

#[derive(Debug, Parser)]
#[command(
    name = "zf",
    version,
    about = "Zero forcing numbers, functigraphs and bound audits"
)]
pub struct Cli {
    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for sweeps and audits.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    /// Largest order for exact searches (overrides ZF_MAX_ORDER).
    #[arg(long, global = true, value_name = "N")]
    pub max_order: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zero forcing number and a minimum forcing set.
    Compute(ComputeArgs),
    /// Check whether a set of vertices forces the graph.
    Verify(VerifyArgs),
    /// Build C(G, f).
    #[command(alias = "build")]
    Functigraph(FunctigraphArgs),
    /// Z(C(G, f)) for every function in a class.
    Sweep(SweepArgs),
    /// Run an audit suite.
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Family spec (P:n, C:n, K:n, petersen, bouquet:k, star:n) or edge-list file.
    pub graph: String,
    #[arg(long)]
    pub path_cover: bool,
    #[arg(long)]
    pub prop_time: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: String,
    /// Comma-separated 1-based vertices.
    pub set: String,
}

#[derive(Debug, Args)]
pub struct FunctigraphArgs {
    pub graph: String,
    /// id, const:j, list:a,b,.., perm:a,b,.., mod:k, swap, bouquetmap
    pub function: String,
    #[arg(long)]
    pub dot: bool,
    #[arg(long)]
    pub z: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SweepFilter {
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub perm: bool,
    #[arg(long, value_name = "S")]
    pub range: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    pub graph: String,
    #[command(flatten)]
    pub filter: SweepFilter,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// graph, complete, cycle, path, product, deletion, gaps, conjecture, functigraph, all
    pub suite: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Also write the report as JSON to this path.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// Inputs in canonical form. Vertex lists and function images are 1-based.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Inputs {
    pub graph: GraphData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function: Option<VertexFunction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
}

/// The JSON shape of every command except `audit`'s report file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub command: String,
    pub options: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inputs: Option<Inputs>,
    pub results: Value,
    pub timing_ms: f64,
}

impl Envelope {
    /// Recomputes `results` from the echoed command, options and inputs.
    pub fn rerun(&self, caps: &Caps) -> Result<Value> {
        let opt = |name: &str| {
            self.options
                .get(name)
                .and_then(Value::as_bool)
                .unwrap_or(false)
        };
        if self.command == "audit" {
            let suite: Suite = self.options["suite"].as_str().unwrap_or_default().parse()?;
            let opts = SuiteOptions {
                seed: self.options["seed"].as_u64().unwrap_or(1),
                samples: self.options["sample"].as_u64().map(|v| v as usize),
                n: self.options["n"].as_u64().map(|v| v as usize),
                caps: *caps,
            };
            return Ok(serde_json::to_value(run_suite(suite, &opts)?).expect("report serializes"));
        }
        let inputs = self
            .inputs
            .as_ref()
            .ok_or_else(|| Error::Parse("envelope has no inputs".into()))?;
        let mut g = inputs.graph.to_graph()?;
        if let Some(name) = &inputs.name {
            g = g.with_name(name.clone());
        }
        let function = || {
            inputs
                .function
                .clone()
                .ok_or_else(|| Error::Parse("envelope has no function".into()))
        };
        match self.command.as_str() {
            "compute" => compute_results(&g, opt("path_cover"), opt("prop_time"), caps),
            "verify" => {
                let set = inputs
                    .set
                    .as_ref()
                    .ok_or_else(|| Error::Parse("envelope has no set".into()))?;
                verify_results(&g, one_based_set(&g, set)?)
            }
            "functigraph" => functigraph_results(&g, &function()?, opt("z"), opt("dot"), caps),
            "sweep" => {
                let filter: FunctionFilter = serde_json::from_value(self.options["filter"].clone())
                    .map_err(|e| Error::Parse(e.to_string()))?;
                sweep_results(&g, filter, caps)
            }
            other => Err(Error::Parse(format!("unknown command {other:?}"))),
        }
    }
}

/// What a command printed and the exit code it asks for.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Resolves a graph argument: an existing file is read as an edge list,
/// anything else must be a family spec.
pub fn load_graph(source: &str) -> Result<Graph> {
    let path = Path::new(source);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
        let name = path.file_name().map(|n| n.to_string_lossy().into_owned());
        let g = Graph::parse_edge_list(&text)?;
        return Ok(match (g.name().is_some(), name) {
            (false, Some(name)) => g.with_name(name),
            _ => g,
        });
    }
    let spec: FamilySpec = source.parse()?;
    Graph::family(spec)
}

fn parse_set(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex {t:?} in set")))
        })
        .collect()
}

fn one_based_set(g: &Graph, set: &[usize]) -> Result<VertexSet> {
    let mut s = VertexSet::EMPTY;
    for &v in set {
        if v == 0 || v > g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        s.insert(v - 1);
    }
    Ok(s)
}

fn plus_one(s: VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

fn chronicle_json(c: &ForcingChronicle) -> Value {
    json!({
        "rounds": c.rounds(),
        "events": c.events.iter().map(|e| json!({
            "round": e.round,
            "forcer": e.forcer + 1,
            "forced": e.forced + 1,
        })).collect::<Vec<_>>(),
        "chains": c.chains.iter()
            .map(|ch| ch.iter().map(|v| v + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn compute_results(g: &Graph, path_cover: bool, prop_time: bool, caps: &Caps) -> Result<Value> {
    let r = zero_forcing_number_capped(g, None, caps)?;
    let mut out = json!({
        "z": r.z,
        "witness": plus_one(r.witness),
        "chronicle": chronicle_json(&r.chronicle),
        "search_stats": r.search_stats,
    });
    if path_cover {
        let p = path_cover_number(g, caps)?;
        out["path_cover"] = json!({
            "p": p.p,
            "cover": p.cover.iter()
                .map(|path| path.iter().map(|v| v + 1).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        });
    }
    if prop_time {
        out["propagation_time"] = json!(propagation_time(g, r.witness)?);
    }
    Ok(out)
}

fn verify_results(g: &Graph, s: VertexSet) -> Result<Value> {
    let (state, chronicle) = closure(g, s)?;
    let forcing = state.black == g.vertices();
    let mut log = vec![json!({ "round": 0, "black": plus_one(s) })];
    let mut black = s;
    for round in 1..=chronicle.rounds() {
        let events: Vec<_> = chronicle
            .events
            .iter()
            .filter(|e| e.round == round)
            .collect();
        for e in &events {
            black.insert(e.forced);
        }
        log.push(json!({
            "round": round,
            "forces": events.iter().map(|e| [e.forcer + 1, e.forced + 1]).collect::<Vec<_>>(),
            "black": plus_one(black),
        }));
    }
    Ok(json!({
        "zero_forcing": forcing,
        "rounds": chronicle.rounds(),
        "forces": chronicle.events.len(),
        "final_black": plus_one(state.black),
        "white": plus_one(g.vertices() - state.black),
        "log": log,
        "chains": chronicle_json(&chronicle)["chains"],
    }))
}

fn dot_id(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT for `C(G, f)`: each copy on its own rank, connectors dashed and
/// excluded from layout constraints.
pub fn functigraph_dot(base: &Graph, f: &VertexFunction) -> Result<String> {
    let fg = build_functigraph(base, f)?;
    let n = base.order();
    let label = |v| vertex_label(n, v);
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", dot_id(&fg.whole.label()));
    for (copy, range) in [("copy1", 0..n), ("copy2", n..2 * n)] {
        let names: Vec<String> = range.map(label).collect();
        let _ = writeln!(
            out,
            "  subgraph {copy} {{ rank=same; {}; }}",
            names.join("; ")
        );
    }
    for (a, b) in fg.whole.edges() {
        if (a < n) == (b < n) {
            let _ = writeln!(out, "  {} -- {};", label(a), label(b));
        }
    }
    for (a, b) in fg.whole.edges() {
        if (a < n) != (b < n) {
            let _ = writeln!(
                out,
                "  {} -- {} [style=dashed, constraint=false];",
                label(a),
                label(b)
            );
        }
    }
    out.push_str("}\n");
    Ok(out)
}

fn functigraph_results(
    g: &Graph,
    f: &VertexFunction,
    z: bool,
    dot: bool,
    caps: &Caps,
) -> Result<Value> {
    let fg = build_functigraph(g, f)?;
    let mut out = json!({
        "name": fg.whole.label(),
        "order": fg.whole.order(),
        "size": fg.whole.size(),
        "range_size": f.range_size(),
        "graph": GraphData::from(&fg.whole),
    });
    if z {
        let r = zero_forcing_number_capped(&fg.whole, None, caps)?;
        out["z"] = json!(r.z);
        out["witness"] = json!(r.witness.iter().map(|v| fg.label(v)).collect::<Vec<_>>());
    }
    if dot {
        out["dot"] = json!(functigraph_dot(g, f)?);
    }
    Ok(out)
}

fn sweep_results(g: &Graph, filter: FunctionFilter, caps: &Caps) -> Result<Value> {
    let functions: Vec<VertexFunction> = enumerate_functions(g.order(), filter, caps)?.collect();
    let rows = functions
        .par_iter()
        .map(|f| {
            let fg = build_functigraph(g, f)?;
            let z = zero_forcing_number_capped(&fg.whole, None, caps)?.z;
            Ok(json!({ "function": f, "s": f.range_size(), "z": z }))
        })
        .collect::<Result<Vec<_>>>()?;
    let zs: Vec<u64> = rows.iter().map(|r| r["z"].as_u64().unwrap_or(0)).collect();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for z in &zs {
        *counts.entry(z.to_string()).or_default() += 1;
    }
    Ok(json!({
        "rows": rows,
        "summary": {
            "count": zs.len(),
            "min_z": zs.iter().min(),
            "max_z": zs.iter().max(),
            "z_counts": counts,
        },
    }))
}

fn set_text(values: &[Value]) -> String {
    let items: Vec<String> = values
        .iter()
        .map(|v| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect();
    format!("{{{}}}", items.join(", "))
}

fn array<'a>(v: &'a Value, key: &str) -> &'a [Value] {
    v[key].as_array().map(Vec::as_slice).unwrap_or(&[])
}

fn compute_text(g: &Graph, r: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph: {} (n={}, m={})",
        g.label(),
        g.order(),
        g.size()
    );
    let _ = writeln!(out, "Z = {}", r["z"]);
    let _ = writeln!(out, "witness: {}", set_text(array(r, "witness")));
    let _ = writeln!(out, "rounds: {}", r["chronicle"]["rounds"]);
    if let Some(p) = r.get("path_cover") {
        let _ = writeln!(out, "P = {}", p["p"]);
        for path in array(p, "cover") {
            let _ = writeln!(
                out,
                "  path {}",
                set_text(path.as_array().map(Vec::as_slice).unwrap_or(&[]))
            );
        }
    }
    if let Some(t) = r.get("propagation_time") {
        let _ = writeln!(out, "propagation time: {t}");
    }
    out
}

fn verify_text(r: &Value) -> String {
    let mut out = String::new();
    let ok = r["zero_forcing"].as_bool().unwrap_or(false);
    let _ = writeln!(out, "zero forcing: {}", if ok { "yes" } else { "no" });
    for entry in array(r, "log") {
        let round = &entry["round"];
        let black = set_text(array(entry, "black"));
        match entry.get("forces") {
            None => {
                let _ = writeln!(out, "round {round}: black {black}");
            }
            Some(forces) => {
                let forces: Vec<String> = forces
                    .as_array()
                    .into_iter()
                    .flatten()
                    .map(|f| format!("{} -> {}", f[0], f[1]))
                    .collect();
                let _ = writeln!(out, "round {round}: {}", forces.join(", "));
            }
        }
    }
    if ok {
        let _ = writeln!(
            out,
            "forced in {} rounds ({} forces)",
            r["rounds"], r["forces"]
        );
    } else {
        let _ = writeln!(
            out,
            "stalls at round {}; white {}",
            r["rounds"],
            set_text(array(r, "white"))
        );
    }
    out
}

fn functigraph_text(r: &Value) -> String {
    if let Some(dot) = r.get("dot").and_then(Value::as_str) {
        return dot.to_string();
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}", r["name"].as_str().unwrap_or_default());
    let _ = writeln!(
        out,
        "order {}, size {}, range size {}",
        r["order"], r["size"], r["range_size"]
    );
    if let Some(z) = r.get("z") {
        let _ = writeln!(out, "Z = {z}");
        let _ = writeln!(out, "witness: {}", set_text(array(r, "witness")));
    }
    out
}

fn sweep_text(r: &Value) -> String {
    let mut out = String::new();
    for row in array(r, "rows") {
        let images: Vec<String> = array(row, "function")
            .iter()
            .map(Value::to_string)
            .collect();
        let _ = writeln!(
            out,
            "list:{:<20} s={} Z={}",
            images.join(","),
            row["s"],
            row["z"]
        );
    }
    let s = &r["summary"];
    let _ = writeln!(
        out,
        "functions: {}  min Z: {}  max Z: {}",
        s["count"], s["min_z"], s["max_z"]
    );
    if let Some(counts) = s["z_counts"].as_object() {
        for (z, c) in counts {
            let _ = writeln!(out, "  Z={z}: {c}");
        }
    }
    out
}

fn envelope(
    command: &str,
    options: Value,
    inputs: Option<Inputs>,
    results: Value,
    start: Instant,
) -> Envelope {
    Envelope {
        command: command.to_string(),
        options,
        inputs,
        results,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn emit(json_mode: bool, env: &Envelope, text: String) -> String {
    if json_mode {
        let mut s = serde_json::to_string_pretty(env).expect("envelope serializes");
        s.push('\n');
        s
    } else {
        text
    }
}

fn filter_of(f: &SweepFilter) -> FunctionFilter {
    match (f.all, f.perm, f.range) {
        (_, true, _) => FunctionFilter::Permutations,
        (_, _, Some(s)) => FunctionFilter::RangeSize(s),
        _ => FunctionFilter::All,
    }
}

fn execute_inner(cli: &Cli, caps: &Caps) -> Result<Output> {
    let start = Instant::now();
    let ok = |stdout| {
        Ok(Output {
            stdout,
            stderr: String::new(),
            code: 0,
        })
    };
    match &cli.command {
        Command::Compute(a) => {
            let g = load_graph(&a.graph)?;
            let r = compute_results(&g, a.path_cover, a.prop_time, caps)?;
            let text = compute_text(&g, &r);
            let opts =
                json!({ "graph": a.graph, "path_cover": a.path_cover, "prop_time": a.prop_time });
            let inputs = Inputs {
                graph: (&g).into(),
                name: g.name().map(str::to_string),
                function: None,
                set: None,
            };
            ok(emit(
                cli.json,
                &envelope("compute", opts, Some(inputs), r, start),
                text,
            ))
        }
        Command::Verify(a) => {
            let g = load_graph(&a.graph)?;
            let set = parse_set(&a.set)?;
            let r = verify_results(&g, one_based_set(&g, &set)?)?;
            let text = verify_text(&r);
            let inputs = Inputs {
                graph: (&g).into(),
                name: g.name().map(str::to_string),
                function: None,
                set: Some(set),
            };
            let opts = json!({ "graph": a.graph });
            ok(emit(
                cli.json,
                &envelope("verify", opts, Some(inputs), r, start),
                text,
            ))
        }
        Command::Functigraph(a) => {
            let g = load_graph(&a.graph)?;
            let f = parse_function_for(&a.function, &g)?;
            let r = functigraph_results(&g, &f, a.z, a.dot, caps)?;
            let text = functigraph_text(&r);
            let inputs = Inputs {
                graph: (&g).into(),
                name: g.name().map(str::to_string),
                function: Some(f),
                set: None,
            };
            let opts =
                json!({ "graph": a.graph, "function_spec": a.function, "z": a.z, "dot": a.dot });
            ok(emit(
                cli.json,
                &envelope("functigraph", opts, Some(inputs), r, start),
                text,
            ))
        }
        Command::Sweep(a) => {
            let g = load_graph(&a.graph)?;
            let filter = filter_of(&a.filter);
            let r = sweep_results(&g, filter, caps)?;
            let text = sweep_text(&r);
            let inputs = Inputs {
                graph: (&g).into(),
                name: g.name().map(str::to_string),
                function: None,
                set: None,
            };
            let opts = json!({ "graph": a.graph, "filter": filter });
            ok(emit(
                cli.json,
                &envelope("sweep", opts, Some(inputs), r, start),
                text,
            ))
        }
        Command::Audit(a) => {
            let suite: Suite = a.suite.parse()?;
            let opts = SuiteOptions {
                seed: a.seed,
                samples: a.sample,
                n: a.n,
                caps: *caps,
            };
            let report = run_suite(suite, &opts)?;
            if let Some(path) = &a.out {
                write_report(&report, path)?;
            }
            let code = if report.has_failures() { 1 } else { 0 };
            let text = report.to_table();
            let options = json!({ "suite": a.suite, "n": a.n, "sample": a.sample, "seed": a.seed });
            let results = serde_json::to_value(&report).expect("report serializes");
            let env = envelope("audit", options, None, results, start);
            Ok(Output {
                stdout: emit(cli.json, &env, text),
                stderr: String::new(),
                code,
            })
        }
    }
}

/// Pretty JSON of a report, newline-terminated. Identical options give
/// identical bytes.
pub fn report_json(report: &AuditReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn write_report(report: &AuditReport, path: &Path) -> Result<()> {
    std::fs::write(path, report_json(report))
        .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

/// Runs a parsed command line on a thread pool sized by `--jobs`.
pub fn execute(cli: &Cli) -> Result<Output> {
    let mut caps = Caps::from_env()?;
    if let Some(order) = cli.max_order {
        caps = caps.with_max_order(order);
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        pool = pool.num_threads(jobs.max(1));
    }
    let pool = pool
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    pool.install(|| execute_inner(cli, &caps))
}

/// Parses `args` (program name first) and runs them. Argument errors map to
/// exit code 2, help and version to 0.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            } else {
                Output {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}
