use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde_json::json;

use super::checks::evaluate_many;
use super::library::{self, LibraryGraph};
use super::{AuditEntry, AuditReport, Check, Instance, ProductFamily};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::functigraph::{enumerate_functions, named_construction, FunctionFilter, VertexFunction};
use crate::graph::{FamilySpec, Graph};

/// One instance and the checks to run on it.
struct Work {
    key: String,
    instance: Instance,
    checks: Vec<Check>,
}

impl Work {
    fn new(key: impl Into<String>, instance: Instance, checks: Vec<Check>) -> Self {
        Work {
            key: key.into(),
            instance,
            checks,
        }
    }
}

/// Evaluates work items in parallel; output order follows input order.
fn run(work: Vec<Work>, caps: &Caps) -> Result<Vec<AuditEntry>> {
    let caps = *caps;
    let nested = work
        .into_par_iter()
        .map(|w| {
            let outcomes = evaluate_many(&w.checks, &w.instance, &caps)?;
            Ok(w.checks
                .iter()
                .zip(outcomes)
                .map(|(&check, outcome)| {
                    AuditEntry::new(check, w.key.clone(), w.instance.clone(), outcome)
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn report(suite: &str, work: Vec<Work>, caps: &Caps) -> Result<AuditReport> {
    let mut r = AuditReport::new(suite);
    r.extend(run(work, caps)?);
    Ok(r.finish())
}

fn family(spec: FamilySpec) -> Result<Graph> {
    Graph::family(spec)
}

fn fkey(g: &Graph, f: &VertexFunction) -> String {
    format!("C({}, {f})", g.label())
}

fn graph_checks(g: &Graph, caps: &Caps) -> Vec<Check> {
    let n = g.order();
    let class = g.classify();
    let mut checks = Vec::new();
    if n == 0 {
        return checks;
    }
    checks.push(Check::MinDegree);
    if n <= caps.path_cover_order {
        checks.push(Check::PathCoverBound);
        if class.tree {
            checks.push(Check::TreeEquality);
        }
        if class.unicyclic {
            checks.push(Check::UnicyclicEquality);
        }
    }
    if g.is_connected() && n >= 2 {
        checks.push(Check::PathCharacterization);
        checks.push(Check::CompleteCharacterization);
    }
    if g.strongly_regular_params().is_some() {
        checks.push(Check::StronglyRegularBound);
    }
    checks
}

fn graph_work(g: &Graph, caps: &Caps) -> Result<Work> {
    Caps::check("graph audit", g.order(), caps.exact_order)?;
    Ok(Work::new(
        g.label(),
        Instance::graph(g),
        graph_checks(g, caps),
    ))
}

fn cut_vertex_work(g: &Graph) -> Vec<Work> {
    g.cut_vertices()
        .iter()
        .map(|v| {
            Work::new(
                format!("{} at {v}", g.label()),
                Instance::Vertex {
                    graph: g.into(),
                    vertex: v,
                },
                vec![Check::CutVertexBound],
            )
        })
        .collect()
}

/// Degree, path cover, characterization and strong-regularity checks on
/// one graph, each applied only where its hypothesis holds.
pub fn audit_graph(g: &Graph, caps: &Caps) -> Result<AuditReport> {
    report("graph", vec![graph_work(g, caps)?], caps)
}

/// The cut-vertex lower bound at `v`.
pub fn audit_cut_vertex(g: &Graph, v: usize, caps: &Caps) -> Result<AuditEntry> {
    g.check_vertex(v)?;
    if !g.cut_vertices().contains(v) {
        return Err(Error::NotCutVertex(v));
    }
    let work = Work::new(
        format!("{} at {v}", g.label()),
        Instance::Vertex {
            graph: g.into(),
            vertex: v,
        },
        vec![Check::CutVertexBound],
    );
    Ok(run(vec![work], caps)?.remove(0))
}

fn functigraph_checks(f: &VertexFunction) -> Vec<Check> {
    let mut checks = vec![Check::FunctigraphBounds];
    if f.is_permutation() {
        checks.push(Check::PermutationBounds);
    }
    if f.is_identity() {
        checks.push(Check::IdentityUpper);
        checks.push(Check::IdentityConjecture);
    }
    checks
}

fn functigraph_work(g: &Graph, f: &VertexFunction, caps: &Caps) -> Result<Work> {
    if !g.is_connected() || g.order() < 3 {
        return Err(Error::Precondition(
            "functigraph audits need a connected base graph of order at least 3".into(),
        ));
    }
    if f.order() != g.order() {
        return Err(Error::OrderMismatch {
            function: f.order(),
            graph: g.order(),
        });
    }
    Caps::check("functigraph audit", 2 * g.order(), caps.exact_order)?;
    Ok(Work::new(
        fkey(g, f),
        Instance::functigraph(g, f),
        functigraph_checks(f),
    ))
}

/// General functigraph bounds on `C(g, f)`, plus the permutation and
/// identity refinements when they apply. The identity conjecture is
/// recorded as an observation.
pub fn audit_functigraph(g: &Graph, f: &VertexFunction, caps: &Caps) -> Result<AuditReport> {
    report("functigraph", vec![functigraph_work(g, f, caps)?], caps)
}

fn enumeration_work(n: usize, filter: FunctionFilter) -> Work {
    let label = match filter {
        FunctionFilter::All => "all".to_string(),
        FunctionFilter::Permutations => "permutations".to_string(),
        FunctionFilter::RangeSize(s) => format!("range={s}"),
    };
    Work::new(
        format!("n={n} {label}"),
        Instance::Enumeration { n, filter },
        vec![Check::EnumerationCount],
    )
}

fn complete_work(n: usize, caps: &Caps) -> Result<Vec<Work>> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "complete family audit needs n >= 3, got {n}"
        )));
    }
    let g = family(FamilySpec::Complete(n))?;
    let mut work = vec![enumeration_work(n, FunctionFilter::All)];
    for f in enumerate_functions(n, FunctionFilter::All, caps)? {
        work.push(Work::new(
            fkey(&g, &f),
            Instance::functigraph(&g, &f),
            vec![Check::FunctigraphBounds, Check::CompleteFormula],
        ));
    }
    Ok(work)
}

/// Every function on `n` points against the complete-graph closed form.
pub fn audit_complete_family(n: usize, caps: &Caps) -> Result<AuditReport> {
    Ok(report("complete", complete_work(n, caps)?, caps)?.param("n", n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    Sampled(usize),
}

/// How cycle and path family sweeps cover intermediate-range functions
/// and permutations. Identity, constants and the sharpness constructions
/// are always included.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyOptions {
    pub functions: Coverage,
    pub permutations: Coverage,
    pub seed: u64,
}

impl FamilyOptions {
    pub fn exhaustive() -> Self {
        FamilyOptions {
            functions: Coverage::Exhaustive,
            permutations: Coverage::Exhaustive,
            seed: 0,
        }
    }

    pub fn sampled(count: usize, seed: u64) -> Self {
        FamilyOptions {
            functions: Coverage::Sampled(count),
            permutations: Coverage::Sampled(count),
            seed,
        }
    }

    /// Exhaustive functions up to order 5 and permutations up to order 6,
    /// `samples` seeded draws beyond that.
    pub fn default_for(n: usize, samples: usize, seed: u64) -> Self {
        FamilyOptions {
            functions: if n <= 5 {
                Coverage::Exhaustive
            } else {
                Coverage::Sampled(samples)
            },
            permutations: if n <= 6 {
                Coverage::Exhaustive
            } else {
                Coverage::Sampled(samples)
            },
            seed,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cyclic {
    Cycle,
    Path,
}

struct FamilyChecks {
    identity: Check,
    constant: Check,
    range: Check,
    lower_sharp: Check,
    mod_sharp: Check,
    permutation: &'static [Check],
    stream: u64,
}

impl Cyclic {
    fn checks(self) -> FamilyChecks {
        match self {
            Cyclic::Cycle => FamilyChecks {
                identity: Check::CycleIdentity,
                constant: Check::CycleConstant,
                range: Check::CycleRangeBound,
                lower_sharp: Check::CycleLowerSharp,
                mod_sharp: Check::CycleModSharp,
                permutation: &[Check::CyclePermutation, Check::CyclePermutationExtremal],
                stream: 100,
            },
            Cyclic::Path => FamilyChecks {
                identity: Check::PathIdentity,
                constant: Check::PathConstant,
                range: Check::PathRangeBound,
                lower_sharp: Check::PathLowerSharp,
                mod_sharp: Check::PathModSharp,
                permutation: &[
                    Check::PathPermutation,
                    Check::PathPermutationMinimal,
                    Check::PathPermutationExtremal,
                ],
                stream: 300,
            },
        }
    }

    fn base(self, n: usize) -> Result<Graph> {
        family(match self {
            Cyclic::Cycle => FamilySpec::Cycle(n),
            Cyclic::Path => FamilySpec::Path(n),
        })
    }

    fn lower_sharp(self, n: usize) -> Result<VertexFunction> {
        match self {
            Cyclic::Cycle => VertexFunction::cycle_lower_sharp(n),
            Cyclic::Path => VertexFunction::path_lower_sharp(n),
        }
    }
}

fn modular_sharpness_work(kind: Cyclic, k: usize) -> Result<Work> {
    let name = match kind {
        Cyclic::Cycle => "cycle-mod",
        Cyclic::Path => "path-mod",
    };
    let c = named_construction(name, k)?;
    Ok(Work::new(
        fkey(&c.base, &c.func),
        Instance::functigraph(&c.base, &c.func),
        vec![kind.checks().mod_sharp],
    ))
}

fn cyclic_work(kind: Cyclic, n: usize, opts: &FamilyOptions, caps: &Caps) -> Result<Vec<Work>> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "family audits need n >= 3, got {n}"
        )));
    }
    Caps::check("functigraph audit", 2 * n, caps.exact_order)?;
    let checks = kind.checks();
    let g = kind.base(n)?;
    let item = |f: &VertexFunction, checks: Vec<Check>| {
        Work::new(fkey(&g, f), Instance::functigraph(&g, f), checks)
    };
    let sampled_item = |i: usize, f: &VertexFunction, checks: Vec<Check>| {
        Work::new(
            format!("sample#{i:03} {}", fkey(&g, f)),
            Instance::functigraph(&g, f),
            checks,
        )
    };

    let mut work = vec![item(&VertexFunction::identity(n)?, vec![checks.identity])];
    for target in 0..n {
        work.push(item(
            &VertexFunction::constant(n, target)?,
            vec![checks.constant],
        ));
    }
    work.push(item(&kind.lower_sharp(n)?, vec![checks.lower_sharp]));
    if let Some(k) = (3..=n).find(|k| k * k == n) {
        work.push(modular_sharpness_work(kind, k)?);
    }

    match opts.functions {
        Coverage::Exhaustive => {
            work.push(enumeration_work(n, FunctionFilter::All));
            for f in enumerate_functions(n, FunctionFilter::All, caps)? {
                let s = f.range_size();
                if 1 < s && s < n {
                    work.push(item(&f, vec![checks.range]));
                }
            }
        }
        Coverage::Sampled(count) => {
            let mut rng = library::rng(opts.seed, checks.stream + n as u64);
            for i in 0..count {
                let f = library::random_intermediate_function(n, &mut rng);
                work.push(sampled_item(i, &f, vec![checks.range]));
            }
        }
    }

    match opts.permutations {
        Coverage::Exhaustive => {
            work.push(enumeration_work(n, FunctionFilter::Permutations));
            for f in enumerate_functions(n, FunctionFilter::Permutations, caps)? {
                work.push(item(&f, checks.permutation.to_vec()));
            }
        }
        Coverage::Sampled(count) => {
            let mut rng = library::rng(opts.seed, checks.stream + 100 + n as u64);
            for i in 0..count {
                let f = library::random_permutation(n, &mut rng);
                work.push(sampled_item(i, &f, checks.permutation.to_vec()));
            }
        }
    }
    Ok(work)
}

fn options_param(opts: &FamilyOptions) -> serde_json::Value {
    let cov = |c: Coverage| match c {
        Coverage::Exhaustive => json!("exhaustive"),
        Coverage::Sampled(k) => json!({ "sampled": k }),
    };
    json!({ "functions": cov(opts.functions), "permutations": cov(opts.permutations), "seed": opts.seed })
}

/// Identity, constant, intermediate-range and permutation statements for
/// functigraphs on `C_n`, plus the sharpness constructions.
pub fn audit_cycle_family(n: usize, opts: &FamilyOptions, caps: &Caps) -> Result<AuditReport> {
    Ok(
        report("cycle", cyclic_work(Cyclic::Cycle, n, opts, caps)?, caps)?
            .param("n", n)
            .param("coverage", options_param(opts)),
    )
}

/// As [`audit_cycle_family`], for `P_n`.
pub fn audit_path_family(n: usize, opts: &FamilyOptions, caps: &Caps) -> Result<AuditReport> {
    Ok(
        report("path", cyclic_work(Cyclic::Path, n, opts, caps)?, caps)?
            .param("n", n)
            .param("coverage", options_param(opts)),
    )
}

fn product_work(kind: ProductFamily, s: usize, t: usize) -> Work {
    let key = match kind {
        ProductFamily::PathPath => format!("P:{s} x P:{t}"),
        ProductFamily::CyclePath => format!("C:{s} x P:{t}"),
    };
    Work::new(
        key,
        Instance::Product { family: kind, s, t },
        vec![Check::ProductClosedForm, Check::ProductUpperBound],
    )
}

/// Closed form and product upper bound for one grid or cylinder.
pub fn audit_product(
    kind: ProductFamily,
    s: usize,
    t: usize,
    caps: &Caps,
) -> Result<Vec<AuditEntry>> {
    run(vec![product_work(kind, s, t)], caps)
}

fn deletion_work(g: &Graph, samples: usize, seed: u64) -> Vec<Work> {
    let mut rng = library::rng(seed, 4);
    let mut vertices: Vec<usize> = (0..g.order()).collect();
    let mut edges = g.edge_list();
    partial_shuffle(&mut vertices, samples, &mut rng);
    partial_shuffle(&mut edges, samples, &mut rng);
    let mut work = Vec::new();
    for &v in vertices.iter().take(samples) {
        work.push(Work::new(
            format!("{} - v{v}", g.label()),
            Instance::Vertex {
                graph: g.into(),
                vertex: v,
            },
            vec![Check::VertexDeletion],
        ));
    }
    for &(a, b) in edges.iter().take(samples) {
        work.push(Work::new(
            format!("{} - e{a}-{b}", g.label()),
            Instance::Edge {
                graph: g.into(),
                edge: [a, b],
            },
            vec![Check::EdgeDeletion],
        ));
    }
    work
}

fn partial_shuffle<T>(items: &mut [T], k: usize, rng: &mut impl Rng) {
    let len = items.len();
    for i in 0..k.min(len) {
        let j = rng.gen_range(i..len);
        items.swap(i, j);
    }
}

/// Vertex and edge deletion bounds on `samples` seeded vertices and edges.
pub fn audit_deletion(g: &Graph, samples: usize, seed: u64, caps: &Caps) -> Result<AuditReport> {
    Caps::check("deletion audit", g.order(), caps.exact_order)?;
    Ok(report("deletion", deletion_work(g, samples, seed), caps)?.with_seed(seed))
}

fn gap_work(k: usize) -> Result<Vec<Work>> {
    if k < 2 {
        return Err(Error::Precondition(format!(
            "gap examples need k >= 2, got {k}"
        )));
    }
    let mut work = Vec::new();
    if k >= 3 {
        let c = named_construction("bouquet", k)?;
        work.push(Work::new(
            fkey(&c.base, &c.func),
            Instance::functigraph(&c.base, &c.func),
            vec![Check::BouquetBase, Check::BouquetFunctigraph],
        ));
    }
    let c = named_construction("path-swap", k)?;
    work.push(Work::new(
        fkey(&c.base, &c.func),
        Instance::functigraph(&c.base, &c.func),
        vec![Check::SwapBase, Check::SwapFunctigraph],
    ));
    Ok(work)
}

/// The bouquet example (for `k >= 3`) and the pair-swap example on
/// `P_{4k}` (for `k >= 2`).
pub fn audit_gap_examples(k: usize, caps: &Caps) -> Result<AuditReport> {
    Ok(report("gaps", gap_work(k)?, caps)?.param("k", k))
}

/// Named audit suites run by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Graph,
    Complete,
    Cycle,
    Path,
    Product,
    Deletion,
    Gaps,
    Conjecture,
    Functigraph,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Graph,
        Suite::Complete,
        Suite::Cycle,
        Suite::Path,
        Suite::Product,
        Suite::Deletion,
        Suite::Gaps,
        Suite::Conjecture,
        Suite::Functigraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Graph => "graph",
            Suite::Complete => "complete",
            Suite::Cycle => "cycle",
            Suite::Path => "path",
            Suite::Product => "product",
            Suite::Deletion => "deletion",
            Suite::Gaps => "gaps",
            Suite::Conjecture => "conjecture",
            Suite::Functigraph => "functigraph",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain(&[Suite::All])
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown audit suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Overrides the suite's sample count.
    pub samples: Option<usize>,
    /// Restricts the suite to one order (or the maximum library order).
    pub n: Option<usize>,
    pub caps: Caps,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 1,
            samples: None,
            n: None,
            caps: Caps::default(),
        }
    }
}

fn named_graphs(specs: &[&str]) -> Result<Vec<Graph>> {
    specs.iter().map(|s| family(s.parse()?)).collect()
}

fn graph_suite(opts: &SuiteOptions) -> Result<AuditReport> {
    let caps = &opts.caps;
    let max_n = opts.n.unwrap_or(9);
    let count = opts.samples.unwrap_or(100);
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 2..=8 {
        graphs.push(family(FamilySpec::Path(n))?);
        graphs.push(family(FamilySpec::Complete(n))?);
    }
    for n in 3..=8 {
        graphs.push(family(FamilySpec::Cycle(n))?);
    }
    graphs.extend(named_graphs(&[
        "petersen",
        "bouquet:2",
        "bouquet:3",
        "star:3",
        "star:5",
    ])?);

    let mut work = Vec::new();
    for g in &graphs {
        work.push(graph_work(g, caps)?);
        work.extend(cut_vertex_work(g));
    }
    let libraries = [
        library::connected_library(count, 3, max_n, opts.seed),
        library::tree_library(50, 2, max_n, opts.seed),
        library::unicyclic_library(30, 3, max_n, opts.seed),
    ];
    for LibraryGraph { graph, .. } in libraries.iter().flatten() {
        work.push(graph_work(graph, caps)?);
        work.extend(cut_vertex_work(graph));
    }
    Ok(report("graph", work, caps)?
        .with_seed(opts.seed)
        .param("library_size", count)
        .param("max_order", max_n))
}

fn deletion_suite(opts: &SuiteOptions) -> Result<AuditReport> {
    let count = opts.samples.unwrap_or(100);
    let max_n = opts.n.unwrap_or(9);
    let mut work = Vec::new();
    for g in named_graphs(&["K:5", "C:6", "petersen"])? {
        work.extend(deletion_work(&g, g.order().max(g.size()), opts.seed));
    }
    for (i, lg) in library::connected_library(count, 3, max_n, opts.seed)
        .iter()
        .enumerate()
    {
        work.extend(deletion_work(
            &lg.graph,
            3,
            opts.seed.wrapping_add(i as u64),
        ));
    }
    Ok(report("deletion", work, &opts.caps)?
        .with_seed(opts.seed)
        .param("library_size", count)
        .param("max_order", max_n))
}

fn orders(opts: &SuiteOptions, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    match opts.n {
        Some(n) => vec![n],
        None => default.collect(),
    }
}

fn complete_suite(opts: &SuiteOptions) -> Result<AuditReport> {
    let orders = orders(opts, 3..=5);
    let mut work = Vec::new();
    for &n in &orders {
        work.extend(complete_work(n, &opts.caps)?);
    }
    Ok(report("complete", work, &opts.caps)?.param("orders", orders))
}

fn cyclic_suite(kind: Cyclic, opts: &SuiteOptions) -> Result<AuditReport> {
    let orders = orders(opts, 3..=8);
    let samples = opts.samples.unwrap_or(200);
    let mut work = Vec::new();
    for &n in &orders {
        let family_opts = FamilyOptions::default_for(n, samples, opts.seed);
        work.extend(cyclic_work(kind, n, &family_opts, &opts.caps)?);
    }
    if opts.n.is_none() {
        work.push(modular_sharpness_work(kind, 3)?);
    }
    let name = match kind {
        Cyclic::Cycle => "cycle",
        Cyclic::Path => "path",
    };
    Ok(report(name, work, &opts.caps)?
        .with_seed(opts.seed)
        .param("orders", orders)
        .param("samples", samples))
}

/// `(family, s, t)` of the product table.
pub(crate) fn product_table() -> Vec<(ProductFamily, usize, usize)> {
    let mut table = Vec::new();
    for s in 2..=4 {
        for t in 2..=4 {
            table.push((ProductFamily::PathPath, s, t));
        }
    }
    for s in 3..=6 {
        for t in 2..=3 {
            if s * t <= 18 {
                table.push((ProductFamily::CyclePath, s, t));
            }
        }
    }
    table
}

fn product_suite(opts: &SuiteOptions) -> Result<AuditReport> {
    let work = product_table()
        .into_iter()
        .map(|(kind, s, t)| product_work(kind, s, t))
        .collect();
    report("product", work, &opts.caps)
}

fn gaps_suite(opts: &SuiteOptions) -> Result<AuditReport> {
    let ks = orders(opts, 2..=3);
    let mut work = Vec::new();
    for &k in &ks {
        work.extend(gap_work(k)?);
    }
    Ok(report("gaps", work, &opts.caps)?.param("k", ks))
}

fn conjecture_suite(opts: &SuiteOptions) -> Result<AuditReport> {
    let max_n = opts.n.unwrap_or(6);
    let count = opts.samples.unwrap_or(50);
    let mut graphs = Vec::new();
    for n in 3..=max_n {
        graphs.push(family(FamilySpec::Path(n))?);
        graphs.push(family(FamilySpec::Cycle(n))?);
        graphs.push(family(FamilySpec::Complete(n))?);
        graphs.push(family(FamilySpec::Star(n - 1))?);
    }
    if max_n >= 5 {
        graphs.push(family(FamilySpec::Bouquet(2))?);
    }
    graphs.extend(
        library::connected_library(count, 3, max_n, opts.seed)
            .into_iter()
            .map(|lg| lg.graph),
    );
    let work = graphs
        .iter()
        .map(|g| functigraph_work(g, &VertexFunction::identity(g.order())?, &opts.caps))
        .collect::<Result<Vec<_>>>()?;
    Ok(report("conjecture", work, &opts.caps)?
        .with_seed(opts.seed)
        .param("library_size", count)
        .param("max_order", max_n))
}

fn functigraph_suite(opts: &SuiteOptions) -> Result<AuditReport> {
    let max_n = opts.n.unwrap_or(6);
    let count = opts.samples.unwrap_or(500);
    let mut rng = library::rng(opts.seed, 5);
    let mut work = Vec::new();
    for i in 0..count {
        let n = rng.gen_range(3..=max_n);
        let p = rng.gen_range(0.0..=1.0);
        let g = library::random_connected(n, p, &mut rng).with_name(format!("pair#{i:03} n={n}"));
        let f = library::random_function(n, &mut rng);
        work.push(functigraph_work(&g, &f, &opts.caps)?);
    }
    for n in 3..=max_n {
        let g = family(FamilySpec::Complete(n))?;
        work.push(functigraph_work(
            &g,
            &VertexFunction::identity(n)?,
            &opts.caps,
        )?);
        work.push(functigraph_work(
            &g,
            &VertexFunction::constant(n, 0)?,
            &opts.caps,
        )?);
    }
    Ok(report("functigraph", work, &opts.caps)?
        .with_seed(opts.seed)
        .param("pairs", count)
        .param("max_order", max_n))
}

/// Runs a named suite. The report is sorted by check id and key, so its
/// JSON form depends only on the suite and options.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<AuditReport> {
    match suite {
        Suite::Graph => graph_suite(opts),
        Suite::Complete => complete_suite(opts),
        Suite::Cycle => cyclic_suite(Cyclic::Cycle, opts),
        Suite::Path => cyclic_suite(Cyclic::Path, opts),
        Suite::Product => product_suite(opts),
        Suite::Deletion => deletion_suite(opts),
        Suite::Gaps => gaps_suite(opts),
        Suite::Conjecture => conjecture_suite(opts),
        Suite::Functigraph => functigraph_suite(opts),
        Suite::All => {
            let mut all = AuditReport::new("all").with_seed(opts.seed);
            for s in Suite::EACH {
                let mut part = run_suite(s, opts)?;
                for e in &mut part.entries {
                    e.key = format!("{s}: {}", e.key);
                }
                all.absorb(part);
            }
            Ok(all.finish())
        }
    }
}
