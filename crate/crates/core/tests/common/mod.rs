//! Brute-force oracles written independently of the library's search code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use zf_core::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for (a, b) in g.edge_list() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    adj
}

pub fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edge_list().into_iter().collect()
}

/// Color-change rule, one force at a time, lowest forcer first.
pub fn naive_closure(adj: &[Vec<bool>], start: &[bool]) -> Vec<bool> {
    let n = adj.len();
    let mut black = start.to_vec();
    loop {
        let mut fired = false;
        for v in 0..n {
            if !black[v] {
                continue;
            }
            let white: Vec<usize> = (0..n).filter(|&u| adj[v][u] && !black[u]).collect();
            if white.len() == 1 {
                black[white[0]] = true;
                fired = true;
            }
        }
        if !fired {
            return black;
        }
    }
}

pub fn mask_to_bools(mask: u64, n: usize) -> Vec<bool> {
    (0..n).map(|i| mask >> i & 1 == 1).collect()
}

pub fn forces(adj: &[Vec<bool>], mask: u64) -> bool {
    naive_closure(adj, &mask_to_bools(mask, adj.len()))
        .iter()
        .all(|&b| b)
}

/// Smallest k such that some k-subset forces, by scanning every mask.
pub fn brute_z(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20, "oracle is exponential");
    let adj = adjacency(g);
    for k in 0..=n as u32 {
        for mask in 0u64..1 << n {
            if mask.count_ones() == k && forces(&adj, mask) {
                return k as usize;
            }
        }
    }
    unreachable!("the full vertex set always forces")
}

/// All minimum forcing sets, as sorted vertex lists.
pub fn brute_minimum_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let z = brute_z(g) as u32;
    let adj = adjacency(g);
    let mut out: Vec<Vec<usize>> = (0u64..1 << n)
        .filter(|m| m.count_ones() == z && forces(&adj, *m))
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

fn induces_path(adj: &[Vec<bool>], verts: &[usize]) -> bool {
    let k = verts.len();
    let mut edges = 0;
    let mut deg = vec![0; k];
    for i in 0..k {
        for j in i + 1..k {
            if adj[verts[i]][verts[j]] {
                edges += 1;
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    if edges + 1 != k || deg.iter().any(|&d| d > 2) {
        return false;
    }
    // a forest with k-1 edges on k vertices is connected iff it is a tree
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..k {
            if !seen[j] && adj[verts[i]][verts[j]] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Fewest induced paths partitioning the vertices, by exhaustive set partition.
pub fn brute_p(g: &Graph) -> usize {
    fn go(adj: &[Vec<bool>], left: u64, best: &mut usize, used: usize) {
        if left == 0 {
            *best = (*best).min(used);
            return;
        }
        if used + 1 >= *best {
            return;
        }
        let first = left.trailing_zeros() as u64;
        let rest = left & !(1 << first);
        let mut sub = rest;
        loop {
            let part = sub | 1 << first;
            let verts: Vec<usize> = (0..adj.len()).filter(|i| part >> i & 1 == 1).collect();
            if induces_path(adj, &verts) {
                go(adj, left & !part, best, used + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let n = g.order();
    assert!(n <= 12, "oracle is exponential");
    let adj = adjacency(g);
    let mut best = n;
    go(&adj, (1u64 << n) - 1, &mut best, 0);
    best
}

/// Path graph test from first principles: connected, n-1 edges, max degree 2.
pub fn is_path_graph(g: &Graph) -> bool {
    let adj = adjacency(g);
    let verts: Vec<usize> = (0..g.order()).collect();
    g.order() >= 1 && induces_path(&adj, &verts)
}

pub fn is_complete_graph(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * n.saturating_sub(1) / 2
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Backtracking isomorphism test with degree filtering.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(
        a: &[Vec<bool>],
        b: &[Vec<bool>],
        map: &mut Vec<usize>,
        used: &mut [bool],
        da: &[usize],
        db: &[usize],
    ) -> bool {
        let v = map.len();
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used[w] || da[v] != db[w] || (0..v).any(|u| a[v][u] != b[w][map[u]]) {
                continue;
            }
            used[w] = true;
            map.push(w);
            if extend(a, b, map, used, da, db) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    let (da, db) = (dg.clone(), dh.clone());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut used = vec![false; h.order()];
    extend(
        &adjacency(g),
        &adjacency(h),
        &mut Vec::new(),
        &mut used,
        &da,
        &db,
    )
}

/// Every function on `0..n`, lexicographic, by a base-n counter.
pub fn all_functions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut f = vec![0; n];
    loop {
        out.push(f.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
        }
    }
}

pub fn range_size(f: &[usize]) -> usize {
    f.iter().collect::<BTreeSet<_>>().len()
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    all_functions(n)
        .into_iter()
        .filter(|f| range_size(f) == n)
        .collect()
}
