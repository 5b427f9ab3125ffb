//! Simple undirected graphs on at most 128 vertices, the graph families
//! used throughout the crate, and the structural queries the auditor needs.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::{VertexSet, MAX_ORDER};
use crate::error::{Error, Result};

/// Undirected simple graph with vertices `0..n` and bitset adjacency.
///
/// Adjacency is always symmetric and loop-free; every constructor enforces
/// this, so the fields are private.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            name: None,
        })
    }

    /// Builds a graph from an edge list. Repeated pairs, in either
    /// orientation, collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        for v in [a, b] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.n,
                });
            }
        }
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name if present, otherwise `graph(n=.., m=..)`.
    pub fn label(&self) -> String {
        match &self.name {
            Some(name) => name.clone(),
            None => format!("graph(n={}, m={})", self.n, self.size()),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, nb)| nb.iter().filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).min() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            }),
            None => Ok(()),
        }
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj
            .iter()
            .map(|s| s.len())
            .min()
            .ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.adj
            .iter()
            .map(|s| s.len())
            .max()
            .ok_or(Error::EmptyGraph)
    }

    /// Graph built from the canonical instance of a family.
    pub fn family(spec: FamilySpec) -> Result<Self> {
        spec.validate()?;
        let g = match spec {
            FamilySpec::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?,
            FamilySpec::Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?,
            FamilySpec::Complete(n) => {
                Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))?
            }
            FamilySpec::Petersen => {
                let outer = (0..5).map(|i| (i, (i + 1) % 5));
                let spokes = (0..5).map(|i| (i, i + 5));
                let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
                Graph::from_edges(10, outer.chain(spokes).chain(inner))?
            }
            FamilySpec::Bouquet(k) => Graph::from_edges(
                2 * k + 1,
                (1..=k).flat_map(|t| [(0, 2 * t - 1), (0, 2 * t), (2 * t - 1, 2 * t)]),
            )?,
            FamilySpec::Star(leaves) => {
                Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))?
            }
        };
        Ok(g.with_name(spec.to_string()))
    }

    /// `self □ other`. Vertex `(i, j)` becomes `i * other.order() + j`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        if self.n == 0 || other.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let (n, m) = (self.n, other.n);
        let order = n * m;
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let mut g = Graph::empty(order)?;
        for i in 0..n {
            for j in 0..m {
                let v = i * m + j;
                for j2 in other.neighbors(j) {
                    g.adj[v].insert(i * m + j2);
                }
                for i2 in self.neighbors(i) {
                    g.adj[v].insert(i2 * m + j);
                }
            }
        }
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => format!("{a} □ {b}"),
            _ => format!("product(n={order})"),
        };
        Ok(g.with_name(name))
    }

    /// Vertices reachable from `start` without leaving `within`.
    fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = (next & within) - seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertices();
        let mut parts = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.reach(v, rest);
            rest = rest - c;
            parts.push(c);
        }
        parts
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> VertexSet {
        let base = self.connected_components().len();
        let all = self.vertices();
        (0..self.n)
            .filter(|&v| {
                let mut rest = all;
                rest.remove(v);
                self.components_within(rest).len() > base
            })
            .collect()
    }

    /// Subgraph induced by `s`; the returned table maps each new index to
    /// the original vertex.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let remap = s.to_vec();
        let mut position = vec![usize::MAX; self.n];
        for (new, &old) in remap.iter().enumerate() {
            position[old] = new;
        }
        let mut g = Graph::empty(remap.len())?;
        for (new, &old) in remap.iter().enumerate() {
            g.adj[new] = (self.adj[old] & s).iter().map(|w| position[w]).collect();
        }
        Ok((g, remap))
    }

    /// `self - v`, with the index table of the remaining vertices.
    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        let mut rest = self.vertices();
        rest.remove(v);
        self.induced_subgraph(rest)
    }

    /// `self - ab`; the vertex set is unchanged.
    pub fn remove_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if !self.has_edge(a, b) {
            return Err(Error::Precondition(format!("{a}-{b} is not an edge")));
        }
        let mut g = Graph::empty(self.n)?;
        g.adj.clone_from(&self.adj);
        g.adj[a].remove(b);
        g.adj[b].remove(a);
        Ok(g)
    }

    /// Parameters `(n, k, α, β)` when the graph is strongly regular.
    ///
    /// Complete and edgeless graphs have no non-adjacent (resp. adjacent)
    /// pairs and are reported as `None`, as is every graph with fewer than
    /// two vertices.
    pub fn strongly_regular_params(&self) -> Option<SrgParams> {
        if self.n < 2 {
            return None;
        }
        let k = self.degree(0);
        if self.adj.iter().any(|s| s.len() != k) {
            return None;
        }
        let mut adjacent: Option<usize> = None;
        let mut nonadjacent: Option<usize> = None;
        for a in 0..self.n {
            for b in a + 1..self.n {
                let common = (self.adj[a] & self.adj[b]).len();
                let slot = if self.has_edge(a, b) {
                    &mut adjacent
                } else {
                    &mut nonadjacent
                };
                match *slot {
                    None => *slot = Some(common),
                    Some(c) if c != common => return None,
                    Some(_) => {}
                }
            }
        }
        Some(SrgParams {
            n: self.n,
            k,
            alpha: adjacent?,
            beta: nonadjacent?,
        })
    }

    pub fn classify(&self) -> GraphClass {
        let (n, m) = (self.n, self.size());
        if n == 0 {
            return GraphClass::default();
        }
        let connected = self.is_connected();
        let max_deg = self.max_degree().unwrap_or(0);
        GraphClass {
            path: connected && m + 1 == n && max_deg <= 2,
            cycle: connected && n >= 3 && self.adj.iter().all(|s| s.len() == 2),
            complete: m == n * (n - 1) / 2,
            tree: connected && m + 1 == n,
            unicyclic: connected && m == n,
        }
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Parses the edge-list text format: a header line `n m`, then `m`
    /// lines `a b` with 0-based indices. Lines starting with `#` and blank
    /// lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `n m` header line".into()))?;
        let [n, m] = parse_pair(header, line_no)?;
        let mut edges = Vec::with_capacity(m);
        for (line_no, line) in lines {
            edges.push(parse_pair(line, line_no)?);
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} edges but {} were given",
                edges.len()
            )));
        }
        Graph::from_edges(n, edges.into_iter().map(|[a, b]| (a, b)))
    }

    /// Serializes to the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("# {name}\n"));
        }
        out.push_str(&format!("{} {}\n", self.n, self.size()));
        for (a, b) in self.edges() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}

fn parse_pair(line: &str, line_no: usize) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!(
            "line {line_no}: expected two integers, found {line:?}"
        )));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("line {line_no}: {s:?} is not a vertex index")))
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

/// Serialized form of a graph: order plus 0-based edge pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphData {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphData {
    fn from(g: &Graph) -> Self {
        GraphData {
            n: g.order(),
            edges: g.edges().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl GraphData {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().map(|&[a, b]| (a, b)))
    }
}

/// Strongly regular parameters `(n, k, α, β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub alpha: usize,
    pub beta: usize,
}

/// Structural tags used by the auditor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GraphClass {
    pub path: bool,
    pub cycle: bool,
    pub complete: bool,
    pub tree: bool,
    pub unicyclic: bool,
}

impl GraphClass {
    pub fn tags(&self) -> Vec<&'static str> {
        [
            (self.path, "path"),
            (self.cycle, "cycle"),
            (self.complete, "complete"),
            (self.tree, "tree"),
            (self.unicyclic, "unicyclic"),
        ]
        .into_iter()
        .filter_map(|(on, tag)| on.then_some(tag))
        .collect()
    }
}

/// Named graph families.
///
/// Text form: `P:<n>`, `C:<n>`, `K:<n>`, `petersen`, `bouquet:<k>`,
/// `star:<n>` (the star `K_{1,n}` with center 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Petersen,
    /// `k` triangles sharing vertex 0; petal `t` is `{0, 2t - 1, 2t}`.
    Bouquet(usize),
    /// `K_{1,n}`.
    Star(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let (what, value, min) = match *self {
            FamilySpec::Path(n) => ("path order", n, 1),
            FamilySpec::Cycle(n) => ("cycle order", n, 3),
            FamilySpec::Complete(n) => ("complete graph order", n, 1),
            FamilySpec::Petersen => return Ok(()),
            FamilySpec::Bouquet(k) => ("bouquet petal count", k, 1),
            FamilySpec::Star(n) => ("star leaf count", n, 1),
        };
        if value < min {
            return Err(Error::InvalidFamily(format!(
                "{what} must be at least {min}, got {value}"
            )));
        }
        if self.order() > MAX_ORDER {
            return Err(Error::OrderTooLarge(self.order()));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => n,
            FamilySpec::Petersen => 10,
            FamilySpec::Bouquet(k) => 2 * k + 1,
            FamilySpec::Star(n) => n + 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P:{n}"),
            FamilySpec::Cycle(n) => write!(f, "C:{n}"),
            FamilySpec::Complete(n) => write!(f, "K:{n}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Bouquet(k) => write!(f, "bouquet:{k}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("petersen") {
            return Ok(FamilySpec::Petersen);
        }
        let (kind, param) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("unrecognized family spec {s:?}")))?;
        let value: usize = param
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("family parameter {param:?} is not an integer")))?;
        let spec = match kind.trim() {
            "P" | "p" | "path" => FamilySpec::Path(value),
            "C" | "c" | "cycle" => FamilySpec::Cycle(value),
            "K" | "k" | "complete" => FamilySpec::Complete(value),
            "bouquet" => FamilySpec::Bouquet(value),
            "star" => FamilySpec::Star(value),
            other => return Err(Error::Parse(format!("unknown graph family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}
