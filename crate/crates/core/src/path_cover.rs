//! Path cover number: the fewest vertex-disjoint induced paths covering a
//! graph.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::caps::{Caps, PATH_COVER_HARD_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCoverResult {
    pub p: usize,
    /// Each part as a vertex sequence along its path.
    pub cover: Vec<Vec<usize>>,
}

/// Orders `s` along a path if the subgraph it induces is a path.
///
/// The sequence starts at the smaller endpoint. Singletons are paths.
pub fn is_induced_path(g: &Graph, s: VertexSet) -> Result<Option<Vec<usize>>> {
    g.check_set(s)?;
    let first = s.min().ok_or(Error::EmptySet)?;
    let degree = |v: usize| (g.neighbors(v) & s).len();
    let mut edges2 = 0;
    for v in s {
        let d = degree(v);
        if d > 2 {
            return Ok(None);
        }
        edges2 += d;
    }
    if edges2 / 2 + 1 != s.len() {
        return Ok(None);
    }
    // m = |s| - 1 and max degree 2: a path exactly when connected.
    let start = s.iter().find(|&v| degree(v) <= 1).unwrap_or(first);
    let mut order = vec![start];
    let mut seen = VertexSet::singleton(start);
    let mut cur = start;
    while let Some(next) = ((g.neighbors(cur) & s) - seen).min() {
        order.push(next);
        seen.insert(next);
        cur = next;
    }
    if order.len() != s.len() {
        return Ok(None);
    }
    Ok(Some(order))
}

/// Calls `emit` with every induced path inside `allowed` that contains
/// `root`. A path may be reported more than once.
fn for_each_path_through(g: &Graph, allowed: VertexSet, root: usize, emit: &mut impl FnMut(u32)) {
    // Extension is legal when the new vertex touches the path only at the
    // end being extended.
    fn grow_head(
        g: &Graph,
        allowed: VertexSet,
        path: VertexSet,
        head: usize,
        emit: &mut impl FnMut(u32),
    ) {
        emit(path.bits() as u32);
        for w in (g.neighbors(head) & allowed) - path {
            if g.neighbors(w) & path == VertexSet::singleton(head) {
                let mut next = path;
                next.insert(w);
                grow_head(g, allowed, next, w, emit);
            }
        }
    }

    fn grow_tail(
        g: &Graph,
        allowed: VertexSet,
        path: VertexSet,
        root: usize,
        tail: usize,
        emit: &mut impl FnMut(u32),
    ) {
        grow_head(g, allowed, path, root, emit);
        for w in (g.neighbors(tail) & allowed) - path {
            if g.neighbors(w) & path == VertexSet::singleton(tail) {
                let mut next = path;
                next.insert(w);
                grow_tail(g, allowed, next, root, w, emit);
            }
        }
    }

    grow_tail(g, allowed, VertexSet::singleton(root), root, root, emit);
}

/// Exact path cover number by dynamic programming over vertex subsets.
///
/// `best(S) = 1 + min best(S \ T)` over induced paths `T ⊆ S` that contain
/// the smallest vertex of `S`.
pub fn path_cover_number(g: &Graph, caps: &Caps) -> Result<PathCoverResult> {
    let n = g.order();
    Caps::check(
        "path cover DP",
        n,
        caps.path_cover_order.min(PATH_COVER_HARD_LIMIT),
    )?;
    let states = 1usize << n;
    let mut best = vec![u8::MAX; states];
    let mut choice = vec![0u32; states];
    best[0] = 0;
    for mask in 1..states {
        let allowed = VertexSet::from_bits(mask as u128);
        let root = allowed.min().expect("nonzero mask");
        let (mut value, mut pick) = (u8::MAX, 0u32);
        for_each_path_through(g, allowed, root, &mut |part| {
            let rest = best[mask & !(part as usize)];
            if rest < value {
                value = rest;
                pick = part;
            }
        });
        best[mask] = value + 1;
        choice[mask] = pick;
    }

    let mut cover = Vec::new();
    let mut mask = states - 1;
    while mask != 0 {
        let part = VertexSet::from_bits(choice[mask] as u128);
        cover.push(is_induced_path(g, part)?.expect("DP parts are induced paths"));
        mask &= !(choice[mask] as usize);
    }
    Ok(PathCoverResult {
        p: best[states - 1] as usize,
        cover,
    })
}
