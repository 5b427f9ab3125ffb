//! Mechanical auditing of zero forcing bounds and closed forms on concrete
//! graphs and functigraphs.
//!
//! Every check is a pure function of an [`Instance`] (see [`evaluate`]), so a
//! failing [`AuditEntry`] carries everything needed to reproduce it with
//! [`replay`].

mod checks;
mod iso;
pub mod library;
mod suites;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::functigraph::{FunctionFilter, VertexFunction};
use crate::graph::Graph;
use crate::graph::GraphData;

pub use checks::evaluate;
pub use suites::{
    audit_complete_family, audit_cut_vertex, audit_cycle_family, audit_deletion, audit_functigraph,
    audit_gap_examples, audit_graph, audit_path_family, audit_product, run_suite, Coverage,
    FamilyOptions, Suite, SuiteOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Reserved for the identity-functigraph conjecture, which is monitored
    /// but never asserted.
    Observation,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Observation => "observation",
        })
    }
}

macro_rules! checks {
    ($($variant:ident => $id:literal,)*) => {
        /// Identifier of one audited statement.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        pub enum Check {
            $(#[serde(rename = $id)] $variant,)*
        }

        impl Check {
            pub const ALL: &'static [Check] = &[$(Check::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(Check::$variant => $id,)*
                }
            }
        }
    };
}

checks! {
    MinDegree => "min-degree",
    PathCoverBound => "path-cover-bound",
    TreeEquality => "tree-equality",
    UnicyclicEquality => "unicyclic-equality",
    PathCharacterization => "path-characterization",
    CompleteCharacterization => "complete-characterization",
    StronglyRegularBound => "strongly-regular-bound",
    CutVertexBound => "cut-vertex-bound",
    VertexDeletion => "vertex-deletion",
    EdgeDeletion => "edge-deletion",
    FunctigraphBounds => "functigraph-bounds",
    PermutationBounds => "permutation-bounds",
    IdentityUpper => "identity-upper",
    IdentityConjecture => "identity-conjecture",
    CompleteFormula => "complete-formula",
    CycleIdentity => "cycle-identity",
    CycleConstant => "cycle-constant",
    CycleRangeBound => "cycle-range-bound",
    CyclePermutation => "cycle-permutation",
    CyclePermutationExtremal => "cycle-permutation-extremal",
    CycleLowerSharp => "cycle-lower-sharp",
    CycleModSharp => "cycle-mod-sharp",
    PathIdentity => "path-identity",
    PathConstant => "path-constant",
    PathRangeBound => "path-range-bound",
    PathPermutation => "path-permutation",
    PathPermutationMinimal => "path-permutation-minimal",
    PathPermutationExtremal => "path-permutation-extremal",
    PathLowerSharp => "path-lower-sharp",
    PathModSharp => "path-mod-sharp",
    BouquetBase => "bouquet-base",
    BouquetFunctigraph => "bouquet-functigraph",
    SwapBase => "swap-base",
    SwapFunctigraph => "swap-functigraph",
    ProductClosedForm => "product-closed-form",
    ProductUpperBound => "product-upper-bound",
    EnumerationCount => "enumeration-count",
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check id {s:?}")))
    }
}

/// `P_s □ P_t` or `C_s □ P_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductFamily {
    PathPath,
    CyclePath,
}

impl FromStr for ProductFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path-path" => Ok(ProductFamily::PathPath),
            "cycle-path" => Ok(ProductFamily::CyclePath),
            other => Err(Error::Parse(format!("unknown product family {other:?}"))),
        }
    }
}

/// Everything a check needs to be re-run. Graph indices are 0-based,
/// function images 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    Graph {
        graph: GraphData,
    },
    Vertex {
        graph: GraphData,
        vertex: usize,
    },
    Edge {
        graph: GraphData,
        edge: [usize; 2],
    },
    Functigraph {
        graph: GraphData,
        function: VertexFunction,
    },
    Product {
        family: ProductFamily,
        s: usize,
        t: usize,
    },
    Enumeration {
        n: usize,
        filter: FunctionFilter,
    },
}

impl Instance {
    pub fn graph(g: &Graph) -> Self {
        Instance::Graph { graph: g.into() }
    }

    pub fn functigraph(g: &Graph, f: &VertexFunction) -> Self {
        Instance::Functigraph {
            graph: g.into(),
            function: f.clone(),
        }
    }
}

pub type Details = serde_json::Map<String, serde_json::Value>;

/// Result of evaluating one check on one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub details: Details,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub check: Check,
    /// Human-readable instance key; unique per check within a report.
    pub key: String,
    pub status: Status,
    pub details: Details,
    /// A minimum zero forcing set of the main graph, 0-based.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Present on every entry that is not a pass.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<Instance>,
}

impl AuditEntry {
    pub fn new(check: Check, key: impl Into<String>, instance: Instance, outcome: Outcome) -> Self {
        let instance = (outcome.status != Status::Pass).then_some(instance);
        AuditEntry {
            check,
            key: key.into(),
            status: outcome.status,
            details: outcome.details,
            witness: outcome.witness,
            instance,
        }
    }
}

/// Re-evaluates an entry from its serialized instance.
pub fn replay(entry: &AuditEntry, caps: &Caps) -> Result<Outcome> {
    let instance = entry
        .instance
        .as_ref()
        .ok_or_else(|| Error::Precondition(format!("entry {} carries no instance", entry.key)))?;
    evaluate(entry.check, instance, caps)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub observation: usize,
}

impl Tally {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Observation => self.observation += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: Tally,
    pub per_check: BTreeMap<String, Tally>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub suite: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub params: Details,
    pub summary: Summary,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn new(suite: impl Into<String>) -> Self {
        AuditReport {
            suite: suite.into(),
            seed: None,
            params: Details::new(),
            summary: Summary::default(),
            entries: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn param(mut self, name: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(name.to_string(), value.into());
        self
    }

    pub fn extend(&mut self, entries: impl IntoIterator<Item = AuditEntry>) {
        self.entries.extend(entries);
    }

    pub fn absorb(&mut self, other: AuditReport) {
        self.entries.extend(other.entries);
    }

    /// Sorts entries by check id, then key, and recomputes the summary.
    pub fn finish(mut self) -> Self {
        self.entries
            .sort_by(|a, b| (a.check.as_str(), &a.key).cmp(&(b.check.as_str(), &b.key)));
        let mut summary = Summary::default();
        for e in &self.entries {
            summary.total.add(e.status);
            summary
                .per_check
                .entry(e.check.as_str().to_string())
                .or_default()
                .add(e.status);
        }
        self.summary = summary;
        self
    }

    pub fn has_failures(&self) -> bool {
        self.entries.iter().any(|e| e.status == Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn entries_for(&self, check: Check) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(move |e| e.check == check)
    }

    /// Plain-text table: per-check tallies, then failures and observations
    /// that did not hold.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed:  {seed}");
        }
        let _ = writeln!(
            out,
            "{:<28} {:>7} {:>6} {:>12}",
            "check", "pass", "fail", "observation"
        );
        for (check, t) in &self.summary.per_check {
            let _ = writeln!(
                out,
                "{check:<28} {:>7} {:>6} {:>12}",
                t.pass, t.fail, t.observation
            );
        }
        let t = self.summary.total;
        let _ = writeln!(
            out,
            "{:<28} {:>7} {:>6} {:>12}",
            "total", t.pass, t.fail, t.observation
        );
        for e in self.failures() {
            let _ = writeln!(
                out,
                "FAIL {} {}: {}",
                e.check,
                e.key,
                serde_json::Value::Object(e.details.clone())
            );
        }
        let counterexamples: Vec<&AuditEntry> = self
            .entries
            .iter()
            .filter(|e| {
                e.status == Status::Observation
                    && e.details.get("holds").and_then(|v| v.as_bool()) == Some(false)
            })
            .collect();
        if !counterexamples.is_empty() {
            let _ = writeln!(
                out,
                "!!! conjecture counterexamples (reported, not failures):"
            );
            for e in counterexamples {
                let _ = writeln!(
                    out,
                    "    {} {}",
                    e.key,
                    serde_json::Value::Object(e.details.clone())
                );
            }
        }
        out
    }
}
