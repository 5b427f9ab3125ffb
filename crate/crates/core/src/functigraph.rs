//! Vertex functions and functigraphs `C(G, f)`: two disjoint copies of `G`
//! plus an edge from each `u` in copy 1 to `f(u)` in copy 2.
//!
//! Copy 1 occupies indices `0..n` (`u_i ↦ i - 1`), copy 2 occupies `n..2n`
//! (`v_i ↦ n + i - 1`).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::MAX_ORDER;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph};

/// A total map from copy-1 indices to copy-2 indices, both `0..n`.
///
/// Serializes as the 1-based image list `[f(u_1), ..., f(u_n)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VertexFunction {
    images: Vec<usize>,
}

impl VertexFunction {
    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::FunctionSpec(
                "a function needs at least one point".into(),
            ));
        }
        if let Some(&bad) = images.iter().find(|&&j| j >= n) {
            return Err(Error::FunctionSpec(format!(
                "image index {bad} is out of range for order {n}"
            )));
        }
        Ok(VertexFunction { images })
    }

    /// From 1-based images, as written in function specs and JSON.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let zero_based = images
            .iter()
            .map(|&j| {
                if (1..=n).contains(&j) {
                    Ok(j - 1)
                } else {
                    Err(Error::FunctionSpec(format!(
                        "image {j} is out of range 1..={n}"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        VertexFunction::from_images(zero_based)
    }

    pub fn identity(n: usize) -> Result<Self> {
        VertexFunction::from_images((0..n).collect())
    }

    /// Every point maps to `target` (0-based).
    pub fn constant(n: usize, target: usize) -> Result<Self> {
        VertexFunction::from_images(vec![target; n])
    }

    /// `f(u_{ak+i}) = v_i`: index `t` maps to `t mod k`. Requires `n = k²`.
    pub fn modular(k: usize) -> Result<Self> {
        VertexFunction::from_images((0..k * k).map(|t| t % k).collect())
    }

    /// `f(u_{2i-1}) = v_{2i}`, `f(u_{2i}) = v_{2i-1}`. Requires even `n`.
    pub fn pair_swap(n: usize) -> Result<Self> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::FunctionSpec(format!(
                "swap needs an even order, got {n}"
            )));
        }
        VertexFunction::from_images((0..n).map(|t| t ^ 1).collect())
    }

    /// The bouquet map on `2k + 1` points: `0`, `1` and `2k` are fixed, and
    /// `2i ↔ 2i + 1` for `1 ≤ i ≤ k - 1`, exchanging vertices between
    /// neighbouring petals.
    pub fn bouquet_map(n: usize) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::FunctionSpec(format!(
                "bouquetmap needs an odd order 2k+1 >= 3, got {n}"
            )));
        }
        let k = (n - 1) / 2;
        let mut images: Vec<usize> = (0..n).collect();
        for i in 1..k {
            images[2 * i] = 2 * i + 1;
            images[2 * i + 1] = 2 * i;
        }
        VertexFunction::from_images(images)
    }

    /// `u_i ↦ v_1` for `i < n` and `u_n ↦ v_2`.
    pub fn cycle_lower_sharp(n: usize) -> Result<Self> {
        let mut images = vec![0; n];
        if n >= 2 {
            images[n - 1] = 1;
        }
        VertexFunction::from_images(images)
    }

    /// `u_i ↦ v_1` for `i < n` and `u_n ↦ v_n`.
    pub fn path_lower_sharp(n: usize) -> Result<Self> {
        let mut images = vec![0; n];
        if n >= 1 {
            images[n - 1] = n - 1;
        }
        VertexFunction::from_images(images)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|j| j + 1).collect()
    }

    pub fn range_size(&self) -> usize {
        self.images.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn is_permutation(&self) -> bool {
        self.range_size() == self.order()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_constant(&self) -> bool {
        self.range_size() == 1
    }
}

impl fmt::Debug for VertexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexFunction({self})")
    }
}

/// `list:` form with 1-based images.
impl fmt::Display for VertexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|j| j.to_string()).collect();
        write!(f, "list:{}", parts.join(","))
    }
}

impl From<VertexFunction> for Vec<usize> {
    fn from(f: VertexFunction) -> Vec<usize> {
        f.one_based()
    }
}

impl TryFrom<Vec<usize>> for VertexFunction {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        VertexFunction::from_one_based(&images)
    }
}

fn parse_image_list(body: &str) -> Result<Vec<usize>> {
    body.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::FunctionSpec(format!("{t:?} is not an image index")))
        })
        .collect()
}

/// Parses a function spec for a base graph of order `n`.
///
/// Grammar: `id` | `const:<j>` | `list:<i1,...,in>` | `perm:<i1,...,in>` |
/// `mod:<k>` | `swap` | `bouquetmap`. Image indices are 1-based.
pub fn parse_function_spec(spec: &str, n: usize) -> Result<VertexFunction> {
    let spec = spec.trim();
    let (head, body) = match spec.split_once(':') {
        Some((h, b)) => (h.trim(), Some(b.trim())),
        None => (spec, None),
    };
    let need_body =
        || body.ok_or_else(|| Error::FunctionSpec(format!("`{head}` needs a `:<argument>`")));
    let f = match head {
        "id" => VertexFunction::identity(n)?,
        "swap" => VertexFunction::pair_swap(n)?,
        "bouquetmap" => VertexFunction::bouquet_map(n)?,
        "const" => {
            let j: usize = need_body()?
                .parse()
                .map_err(|_| Error::FunctionSpec(format!("bad constant target in {spec:?}")))?;
            if !(1..=n).contains(&j) {
                return Err(Error::FunctionSpec(format!(
                    "constant target {j} is out of range 1..={n}"
                )));
            }
            VertexFunction::constant(n, j - 1)?
        }
        "list" | "perm" => {
            let images = parse_image_list(need_body()?)?;
            if images.len() != n {
                return Err(Error::OrderMismatch {
                    function: images.len(),
                    graph: n,
                });
            }
            let f = VertexFunction::from_one_based(&images)?;
            if head == "perm" && !f.is_permutation() {
                return Err(Error::FunctionSpec(format!(
                    "{spec:?} repeats an image, so it is not a permutation"
                )));
            }
            f
        }
        "mod" => {
            let k: usize = need_body()?
                .parse()
                .map_err(|_| Error::FunctionSpec(format!("bad modulus in {spec:?}")))?;
            if k == 0 || k * k != n {
                return Err(Error::FunctionSpec(format!(
                    "mod:{k} needs order k² = {}, got {n}",
                    k * k
                )));
            }
            VertexFunction::modular(k)?
        }
        other => {
            return Err(Error::FunctionSpec(format!(
                "unknown function kind {other:?}"
            )))
        }
    };
    if body.is_some() && matches!(head, "id" | "swap" | "bouquetmap") {
        return Err(Error::FunctionSpec(format!("`{head}` takes no argument")));
    }
    Ok(f)
}

/// Like [`parse_function_spec`], additionally refusing `bouquetmap` on any
/// base graph other than the canonical bouquet.
pub fn parse_function_for(spec: &str, base: &Graph) -> Result<VertexFunction> {
    let f = parse_function_spec(spec, base.order())?;
    if spec.trim() == "bouquetmap" {
        let k = (base.order() - 1) / 2;
        let bouquet = Graph::family(FamilySpec::Bouquet(k))?;
        if bouquet.edge_list() != base.edge_list() {
            return Err(Error::FunctionSpec(
                "bouquetmap is only defined on the canonical bouquet labeling".into(),
            ));
        }
    }
    Ok(f)
}

/// A functigraph together with the pieces it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctigraphInstance {
    pub base: Graph,
    pub func: VertexFunction,
    pub whole: Graph,
}

impl FunctigraphInstance {
    #[inline]
    pub fn base_order(&self) -> usize {
        self.base.order()
    }

    /// 1-based `u_i` / `v_i` name of a vertex of the whole graph.
    pub fn label(&self, v: usize) -> String {
        vertex_label(self.base.order(), v)
    }
}

/// `u_i` for copy-1 indices, `v_i` for copy-2 indices.
pub fn vertex_label(n: usize, v: usize) -> String {
    if v < n {
        format!("u{}", v + 1)
    } else {
        format!("v{}", v - n + 1)
    }
}

pub fn build_functigraph(g: &Graph, f: &VertexFunction) -> Result<FunctigraphInstance> {
    let n = g.order();
    if f.order() != n {
        return Err(Error::OrderMismatch {
            function: f.order(),
            graph: n,
        });
    }
    if 2 * n > MAX_ORDER {
        return Err(Error::OrderTooLarge(2 * n));
    }
    let copies = g.edges().flat_map(|(a, b)| [(a, b), (a + n, b + n)]);
    let connectors = (0..n).map(|i| (i, n + f.image(i)));
    let whole = Graph::from_edges(2 * n, copies.chain(connectors))?.with_name(format!(
        "C({}, {})",
        g.label(),
        f
    ));
    Ok(FunctigraphInstance {
        base: g.clone(),
        func: f.clone(),
        whole,
    })
}

/// Which functions [`enumerate_functions`] yields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionFilter {
    All,
    Permutations,
    RangeSize(usize),
}

/// Lexicographic stream of vertex functions on `n` points.
#[derive(Clone, Debug)]
pub struct FunctionEnumeration {
    n: usize,
    filter: FunctionFilter,
    current: Vec<usize>,
    exhausted: bool,
}

impl FunctionEnumeration {
    /// Closed-form number of items the stream yields.
    pub fn expected_count(&self) -> u64 {
        count_functions(self.n, self.filter)
    }

    fn advance(&mut self) {
        let ok = match self.filter {
            FunctionFilter::Permutations => next_permutation(&mut self.current),
            _ => next_tuple(&mut self.current, self.n),
        };
        self.exhausted = !ok;
    }
}

impl Iterator for FunctionEnumeration {
    type Item = VertexFunction;

    fn next(&mut self) -> Option<VertexFunction> {
        while !self.exhausted {
            let candidate = self.current.clone();
            self.advance();
            let keep = match self.filter {
                FunctionFilter::RangeSize(s) => {
                    candidate.iter().collect::<BTreeSet<_>>().len() == s
                }
                _ => true,
            };
            if keep {
                return Some(VertexFunction { images: candidate });
            }
        }
        None
    }
}

fn next_tuple(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of functions on `n` points selected by `filter`.
///
/// Range size `s` counts `C(n, s) · surj(n, s)`, with surjections counted by
/// inclusion-exclusion.
pub fn count_functions(n: usize, filter: FunctionFilter) -> u64 {
    let n64 = n as u64;
    match filter {
        FunctionFilter::All => n64.pow(n as u32),
        FunctionFilter::Permutations => (1..=n64).product(),
        FunctionFilter::RangeSize(s) => {
            if s == 0 || s > n {
                return 0;
            }
            let s64 = s as u64;
            let surjections: i128 = (0..=s64)
                .map(|j| {
                    let term = binomial(s64, j) as i128 * ((s64 - j) as i128).pow(n as u32);
                    if j % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            binomial(n64, s64) * surjections as u64
        }
    }
}

pub fn enumerate_functions(
    n: usize,
    filter: FunctionFilter,
    caps: &Caps,
) -> Result<FunctionEnumeration> {
    match filter {
        FunctionFilter::Permutations => {
            Caps::check("permutation enumeration", n, caps.permutations_order)?
        }
        _ => Caps::check("function enumeration", n, caps.all_functions_order)?,
    }
    if n == 0 {
        return Err(Error::FunctionSpec(
            "cannot enumerate functions on 0 points".into(),
        ));
    }
    let current = match filter {
        FunctionFilter::Permutations => (0..n).collect(),
        _ => vec![0; n],
    };
    Ok(FunctionEnumeration {
        n,
        filter,
        current,
        exhausted: false,
    })
}

/// The four named `(G, f)` pairs used as gap and sharpness examples.
///
/// * `bouquet`: bouquet of `k ≥ 3` triangles with the bouquet map;
/// * `path-swap`: `P_{4k}` (`k ≥ 2`) with the pair swap;
/// * `cycle-mod`: `C_{k²}` (`k ≥ 3`) with `mod:k`;
/// * `path-mod`: `P_{k²}` (`k ≥ 3`) with `mod:k`.
pub fn named_construction(name: &str, k: usize) -> Result<FunctigraphInstance> {
    let require = |min: usize| {
        if k < min {
            Err(Error::Precondition(format!(
                "`{name}` needs k >= {min}, got {k}"
            )))
        } else {
            Ok(())
        }
    };
    let (spec, f) = match name {
        "bouquet" => {
            require(3)?;
            (
                FamilySpec::Bouquet(k),
                VertexFunction::bouquet_map(2 * k + 1)?,
            )
        }
        "path-swap" => {
            require(2)?;
            (FamilySpec::Path(4 * k), VertexFunction::pair_swap(4 * k)?)
        }
        "cycle-mod" => {
            require(3)?;
            (FamilySpec::Cycle(k * k), VertexFunction::modular(k)?)
        }
        "path-mod" => {
            require(3)?;
            (FamilySpec::Path(k * k), VertexFunction::modular(k)?)
        }
        other => return Err(Error::UnknownConstruction(other.to_string())),
    };
    build_functigraph(&Graph::family(spec)?, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::zero_forcing_number;

    fn family(spec: &str) -> Graph {
        Graph::family(spec.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn build_examples() {
        let c = build_functigraph(&family("K:3"), &VertexFunction::identity(3).unwrap()).unwrap();
        assert_eq!((c.whole.order(), c.whole.size()), (6, 9));
        assert!(c.whole.degrees().iter().all(|&d| d == 3));

        let c =
            build_functigraph(&family("P:3"), &VertexFunction::constant(3, 0).unwrap()).unwrap();
        assert_eq!(c.whole.size(), 7);
        assert_eq!(c.whole.degree(3), 4);

        let err = build_functigraph(&family("P:3"), &VertexFunction::identity(4).unwrap());
        assert_eq!(
            err,
            Err(Error::OrderMismatch {
                function: 4,
                graph: 3
            })
        );
    }

    #[test]
    fn pentagram_functigraph_is_petersen_like() {
        // σ(u_i) = v_{(2i - 1 mod 5) + 1}, i.e. 0-based t ↦ 2t mod 5.
        let sigma = parse_function_spec("perm:2,4,1,3,5", 5).unwrap();
        assert_eq!(sigma.images(), &[1, 3, 0, 2, 4]);
        let c = build_functigraph(&family("C:5"), &sigma).unwrap();
        let p = family("petersen");
        let mut got = c.whole.degrees();
        let mut want = p.degrees();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(c.whole.girth(), p.girth());
        assert_eq!(zero_forcing_number(&c.whole, None).unwrap().z, 5);
    }

    #[test]
    fn spec_parsing() {
        let f = parse_function_spec("mod:3", 9).unwrap();
        assert_eq!(f.images(), &[0, 1, 2, 0, 1, 2, 0, 1, 2]);
        assert_eq!(f.range_size(), 3);

        let f = parse_function_spec("swap", 8).unwrap();
        assert_eq!(f.images(), &[1, 0, 3, 2, 5, 4, 7, 6]);
        assert!(f.is_permutation());

        let f = parse_function_spec("const:1", 4).unwrap();
        assert_eq!(f.images(), &[0, 0, 0, 0]);
        assert_eq!(f.range_size(), 1);

        let f = parse_function_spec("bouquetmap", 7).unwrap();
        assert_eq!(f.images(), &[0, 1, 3, 2, 5, 4, 6]);

        assert!(parse_function_spec("id", 5).unwrap().is_identity());
        assert_eq!(
            parse_function_spec("list:2,2,1", 3).unwrap().images(),
            &[1, 1, 0]
        );
    }

    #[test]
    fn spec_errors() {
        for (spec, n) in [
            ("foo", 3),
            ("const:0", 3),
            ("const:4", 3),
            ("const", 3),
            ("list:1,2", 3),
            ("list:1,2,4", 3),
            ("list:1,x,2", 3),
            ("perm:1,1,2", 3),
            ("mod:3", 8),
            ("mod:0", 0),
            ("swap", 7),
            ("bouquetmap", 6),
            ("id:3", 3),
        ] {
            assert!(parse_function_spec(spec, n).is_err(), "{spec} on {n}");
        }
    }

    #[test]
    fn bouquetmap_rejects_other_bases() {
        assert!(parse_function_for("bouquetmap", &family("bouquet:3")).is_ok());
        assert!(parse_function_for("bouquetmap", &family("C:7")).is_err());
        assert!(parse_function_for("id", &family("C:7")).is_ok());
    }

    #[test]
    fn range_sizes() {
        assert_eq!(VertexFunction::identity(5).unwrap().range_size(), 5);
        assert_eq!(VertexFunction::constant(5, 2).unwrap().range_size(), 1);
        assert_eq!(VertexFunction::modular(3).unwrap().range_size(), 3);
    }

    #[test]
    fn enumeration_counts() {
        let caps = Caps::default();
        let all: Vec<_> = enumerate_functions(3, FunctionFilter::All, &caps)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 27);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let perms: Vec<_> = enumerate_functions(3, FunctionFilter::Permutations, &caps)
            .unwrap()
            .collect();
        assert_eq!(perms.len(), 6);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert!(perms.iter().all(VertexFunction::is_permutation));

        // Brute count of range size 2 over all 27 functions.
        let brute = all.iter().filter(|f| f.range_size() == 2).count();
        assert_eq!(brute, 18);
        let e = enumerate_functions(3, FunctionFilter::RangeSize(2), &caps).unwrap();
        assert_eq!(e.expected_count(), 18);
        assert_eq!(e.count(), 18);

        for n in 1..=5 {
            let total: u64 = (1..=n)
                .map(|s| count_functions(n, FunctionFilter::RangeSize(s)))
                .sum();
            assert_eq!(total, count_functions(n, FunctionFilter::All));
            assert_eq!(
                count_functions(n, FunctionFilter::RangeSize(n)),
                count_functions(n, FunctionFilter::Permutations)
            );
        }
    }

    #[test]
    fn enumeration_caps() {
        let caps = Caps::default();
        assert!(matches!(
            enumerate_functions(7, FunctionFilter::All, &caps),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_functions(8, FunctionFilter::Permutations, &caps).is_ok());
        assert!(enumerate_functions(9, FunctionFilter::Permutations, &caps).is_err());
    }

    #[test]
    fn named_constructions() {
        let b = named_construction("bouquet", 3).unwrap();
        assert_eq!(b.base.order(), 7);
        assert_eq!(zero_forcing_number(&b.base, None).unwrap().z, 4);

        let c = named_construction("cycle-mod", 3).unwrap();
        assert_eq!(c.base.edge_list(), family("C:9").edge_list());
        assert_eq!(c.func, parse_function_spec("mod:3", 9).unwrap());

        let s = named_construction("path-swap", 2).unwrap();
        assert_eq!(s.base.edge_list(), family("P:8").edge_list());
        assert_eq!(s.func, parse_function_spec("swap", 8).unwrap());

        assert!(named_construction("bouquet", 2).is_err());
        assert!(named_construction("path-swap", 1).is_err());
        assert!(matches!(
            named_construction("nope", 3),
            Err(Error::UnknownConstruction(_))
        ));
    }

    #[test]
    fn labels() {
        assert_eq!(vertex_label(4, 0), "u1");
        assert_eq!(vertex_label(4, 4), "v1");
        assert_eq!(vertex_label(4, 7), "v4");
    }

    #[test]
    fn serializes_one_based() {
        let f = VertexFunction::constant(3, 0).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), "[1,1,1]");
        let back: VertexFunction = serde_json::from_str("[2,3,1]").unwrap();
        assert_eq!(back.images(), &[1, 2, 0]);
        assert!(serde_json::from_str::<VertexFunction>("[0,1]").is_err());
    }
}
