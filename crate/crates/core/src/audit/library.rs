//! Seeded random graphs and functions for sampled audits.
//!
//! Every generator draws from a `ChaCha8Rng`, so a `(seed, count, order
//! range)` triple always produces the same library.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::functigraph::VertexFunction;
use crate::graph::Graph;

pub type LibraryRng = ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> LibraryRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A generated graph with a stable key for report ordering.
#[derive(Clone, Debug)]
pub struct LibraryGraph {
    pub key: String,
    pub graph: Graph,
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let edges = match n {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => {
            let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_edges(n, &code)
        }
    };
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a simple tree")
}

fn prufer_edges(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges = tree.edge_list();
    for a in 0..n {
        for b in a + 1..n {
            if !tree.has_edge(a, b) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("indices are in range")
}

/// Random tree plus one extra edge, closing exactly one cycle. `n >= 3`.
pub fn random_unicyclic(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 3, "a unicyclic graph needs at least 3 vertices");
    let tree = random_tree(n, rng);
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !tree.has_edge(a, b))
        .collect();
    let extra = *non_edges
        .choose(rng)
        .expect("a tree on n >= 3 vertices is not complete");
    let mut edges = tree.edge_list();
    edges.push(extra);
    Graph::from_edges(n, edges).expect("indices are in range")
}

const DENSITIES: [f64; 6] = [0.0, 0.15, 0.3, 0.5, 0.75, 1.0];

/// `count` connected graphs with orders in `min_n..=max_n`, cycling
/// through edge densities from trees to complete graphs.
pub fn connected_library(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<LibraryGraph> {
    let mut rng = rng(seed, 1);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_n..=max_n);
            let p = DENSITIES[i % DENSITIES.len()];
            let graph = random_connected(n, p, &mut rng);
            let key = format!("connected#{i:03} n={n} m={}", graph.size());
            LibraryGraph {
                graph: graph.with_name(key.clone()),
                key,
            }
        })
        .collect()
}

pub fn tree_library(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<LibraryGraph> {
    let mut rng = rng(seed, 2);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_n..=max_n);
            let key = format!("tree#{i:03} n={n}");
            LibraryGraph {
                graph: random_tree(n, &mut rng).with_name(key.clone()),
                key,
            }
        })
        .collect()
}

pub fn unicyclic_library(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<LibraryGraph> {
    let mut rng = rng(seed, 3);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_n.max(3)..=max_n);
            let key = format!("unicyclic#{i:03} n={n}");
            LibraryGraph {
                graph: random_unicyclic(n, &mut rng).with_name(key.clone()),
                key,
            }
        })
        .collect()
}

pub fn random_function(n: usize, rng: &mut impl Rng) -> VertexFunction {
    VertexFunction::from_images((0..n).map(|_| rng.gen_range(0..n)).collect())
        .expect("images are in range")
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> VertexFunction {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    VertexFunction::from_images(images).expect("a shuffle is a permutation")
}

/// Uniform among functions with `1 < |range| < n`, by rejection. `n >= 3`.
pub fn random_intermediate_function(n: usize, rng: &mut impl Rng) -> VertexFunction {
    assert!(n >= 3, "no intermediate range sizes below order 3");
    loop {
        let f = random_function(n, rng);
        let s = f.range_size();
        if 1 < s && s < n {
            return f;
        }
    }
}
