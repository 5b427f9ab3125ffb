//! The color-change rule, closures, and exact zero forcing numbers.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The black vertices of a coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorState {
    pub black: VertexSet,
}

/// One application of the color-change rule: `forcer` turned `forced` black
/// during synchronous round `round` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForceEvent {
    pub round: usize,
    pub forcer: usize,
    pub forced: usize,
}

/// Every force of a closure computation, in schedule order, plus the forcing
/// chains they induce.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingChronicle {
    pub events: Vec<ForceEvent>,
    /// One chain per initial vertex, starting at that vertex.
    pub chains: Vec<Vec<usize>>,
}

impl ForcingChronicle {
    /// Number of synchronous rounds, 0 when nothing was forced.
    pub fn rounds(&self) -> usize {
        self.events.last().map_or(0, |e| e.round)
    }

    /// Re-applies the recorded events starting from `initial` and checks that
    /// each one is a legal force at the moment it fires. Returns the final
    /// black set, or the index of the first illegal event.
    pub fn replay(&self, g: &Graph, initial: VertexSet) -> std::result::Result<VertexSet, usize> {
        let mut black = initial;
        for (i, e) in self.events.iter().enumerate() {
            let legal = black.contains(e.forcer)
                && !black.contains(e.forced)
                && g.neighbors(e.forcer) - black == VertexSet::singleton(e.forced);
            if !legal {
                return Err(i);
            }
            black.insert(e.forced);
        }
        Ok(black)
    }
}

/// Runs the color-change rule to its fixpoint with the synchronous schedule.
///
/// Round `r` applies every force available in the state left by round
/// `r - 1`. Events within a round are ordered by forced vertex; when several
/// black vertices could force the same white vertex, the smallest one is
/// credited. The final black set does not depend on the schedule.
pub fn closure(g: &Graph, s: VertexSet) -> Result<(ColorState, ForcingChronicle)> {
    g.check_set(s)?;
    let mut black = s;
    let mut forced_by = vec![usize::MAX; g.order()];
    let mut events = Vec::new();
    let mut round = 0;
    loop {
        let mut fresh = VertexSet::EMPTY;
        for v in black {
            let white = g.neighbors(v) - black;
            if white.len() == 1 {
                let w = white.min().expect("one white neighbour");
                if !fresh.contains(w) {
                    fresh.insert(w);
                    forced_by[w] = v;
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        round += 1;
        events.extend(fresh.iter().map(|w| ForceEvent {
            round,
            forcer: forced_by[w],
            forced: w,
        }));
        black |= fresh;
    }

    let mut next = vec![usize::MAX; g.order()];
    for e in &events {
        next[e.forcer] = e.forced;
    }
    let chains = s
        .iter()
        .map(|start| {
            let mut chain = vec![start];
            let mut v = start;
            while next[v] != usize::MAX {
                v = next[v];
                chain.push(v);
            }
            chain
        })
        .collect();

    Ok((ColorState { black }, ForcingChronicle { events, chains }))
}

/// Final black set only, with a sequential schedule. Hot path of the search.
pub(crate) fn closure_set(g: &Graph, s: VertexSet) -> VertexSet {
    let mut black = s;
    let mut active = s;
    loop {
        let mut progressed = false;
        for v in active {
            let white = g.neighbors(v) - black;
            match white.len() {
                0 => active.remove(v),
                1 => {
                    black |= white;
                    active |= white;
                    active.remove(v);
                    progressed = true;
                }
                _ => {}
            }
        }
        if !progressed {
            return black;
        }
    }
}

pub fn is_zero_forcing(g: &Graph, s: VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(closure_set(g, s) == g.vertices())
}

/// Number of synchronous rounds `s` needs to blacken the whole graph.
pub fn propagation_time(g: &Graph, s: VertexSet) -> Result<usize> {
    let (state, chronicle) = closure(g, s)?;
    if state.black != g.vertices() {
        return Err(Error::NotZeroForcing);
    }
    Ok(chronicle.rounds())
}

/// Counters from the subset search.
///
/// `subsets_tested` counts every candidate examined. `prunes` counts the
/// candidates rejected without a closure computation because no member had
/// exactly one neighbour outside the candidate, so no force could start.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub subsets_tested: u64,
    pub prunes: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, rhs: Self) {
        self.subsets_tested += rhs.subsets_tested;
        self.prunes += rhs.prunes;
    }
}

/// An exact zero forcing number with a minimum witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZResult {
    pub z: usize,
    pub witness: VertexSet,
    pub chronicle: ForcingChronicle,
    pub search_stats: SearchStats,
}

/// Lexicographic stepping through the `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
        }
    }

    fn next_set(&mut self) -> Option<VertexSet> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if self.started {
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if self.idx[i] < self.n - k + i {
                    break;
                }
            }
            self.idx[i] += 1;
            for j in i + 1..k {
                self.idx[j] = self.idx[j - 1] + 1;
            }
        }
        self.started = true;
        Some(self.idx.iter().collect())
    }
}

/// Any member with exactly one neighbour outside `s`.
#[inline]
fn can_start(g: &Graph, s: VertexSet) -> bool {
    s.iter().any(|v| (g.neighbors(v) - s).len() == 1)
}

/// Lexicographically first zero forcing `k`-subset, if any.
fn first_forcing_subset(g: &Graph, k: usize, stats: &mut SearchStats) -> Option<VertexSet> {
    let all = g.vertices();
    let mut combos = Combinations::new(g.order(), k);
    while let Some(s) = combos.next_set() {
        stats.subsets_tested += 1;
        if s != all && !can_start(g, s) {
            stats.prunes += 1;
            continue;
        }
        if closure_set(g, s) == all {
            return Some(s);
        }
    }
    None
}

fn connected_minimum(g: &Graph, lower_hint: usize) -> (usize, VertexSet, SearchStats) {
    let n = g.order();
    let delta = g.min_degree().unwrap_or(0);
    let start = delta.max(lower_hint).max(1).min(n);
    let mut stats = SearchStats::default();
    for k in start..=n {
        if let Some(w) = first_forcing_subset(g, k, &mut stats) {
            return (k, w, stats);
        }
    }
    unreachable!("the full vertex set always forces")
}

/// Exact zero forcing number by k-ascending lexicographic subset search.
///
/// The search starts at `max(δ, lower_hint, 1)`; `lower_hint` must be a
/// sound lower bound (for example a path cover number). Disconnected graphs
/// are solved per component and the witnesses are unioned; the hint is only
/// used for connected graphs. The empty graph has `Z = 0`.
pub fn zero_forcing_number(g: &Graph, lower_hint: Option<usize>) -> Result<ZResult> {
    zero_forcing_number_capped(g, lower_hint, &Caps::default())
}

pub fn zero_forcing_number_capped(
    g: &Graph,
    lower_hint: Option<usize>,
    caps: &Caps,
) -> Result<ZResult> {
    Caps::check("exact zero forcing search", g.order(), caps.exact_order)?;
    let components = g.connected_components();
    let (z, witness, search_stats) = match components.len() {
        0 => (0, VertexSet::EMPTY, SearchStats::default()),
        1 => connected_minimum(g, lower_hint.unwrap_or(0)),
        _ => {
            let mut total = (0, VertexSet::EMPTY, SearchStats::default());
            for part in components {
                let (sub, remap) = g.induced_subgraph(part)?;
                let (z, w, stats) = connected_minimum(&sub, 0);
                total.0 += z;
                total.1 |= w.iter().map(|v| remap[v]).collect();
                total.2 += stats;
            }
            total
        }
    };
    let (_, chronicle) = closure(g, witness)?;
    Ok(ZResult {
        z,
        witness,
        chronicle,
        search_stats,
    })
}

/// Every minimum zero forcing set, in lexicographic order.
pub fn all_minimum_sets(g: &Graph, caps: &Caps) -> Result<Vec<VertexSet>> {
    Caps::check("minimum set listing", g.order(), caps.minimum_sets_order)?;
    let z = zero_forcing_number_capped(g, None, caps)?.z;
    let all = g.vertices();
    let mut combos = Combinations::new(g.order(), z);
    let mut found = Vec::new();
    while let Some(s) = combos.next_set() {
        if closure_set(g, s) == all {
            found.push(s);
        }
    }
    Ok(found)
}
