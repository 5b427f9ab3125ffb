//! Isomorphism test for the handful of tiny reference graphs the
//! permutation-extremal checks compare against. Plain backtracking with a
//! degree filter; only meant for orders around 10.

use crate::graph::Graph;

pub(crate) fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    extend(g, h, 0, &mut map, &mut used)
}

fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.order() {
        return true;
    }
    for cand in 0..h.order() {
        if used[cand] || g.degree(v) != h.degree(cand) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], cand));
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend(g, h, v + 1, map, used) {
            return true;
        }
        used[cand] = false;
    }
    map[v] = usize::MAX;
    false
}
