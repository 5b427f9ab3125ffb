use serde_json::{json, Value};

use super::iso::isomorphic;
use super::{Check, Details, Instance, Outcome, ProductFamily, Status};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::forcing::{zero_forcing_number_capped, ZResult};
use crate::functigraph::{
    build_functigraph, count_functions, enumerate_functions, FunctigraphInstance, VertexFunction,
};
use crate::graph::{FamilySpec, Graph};
use crate::path_cover::path_cover_number;

fn details(v: Value) -> Details {
    match v {
        Value::Object(map) => map,
        _ => unreachable!("details are built from object literals"),
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn precondition(ok: bool, check: Check, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{check} requires {what}")))
    }
}

fn family(spec: FamilySpec) -> Result<Graph> {
    Graph::family(spec)
}

/// Graphs and measured quantities of one instance, computed on demand.
struct Subject<'c> {
    caps: &'c Caps,
    base: Graph,
    fg: Option<FunctigraphInstance>,
    z_base: Option<ZResult>,
    z_whole: Option<ZResult>,
    p_base: Option<usize>,
}

impl<'c> Subject<'c> {
    fn new(base: Graph, func: Option<&VertexFunction>, caps: &'c Caps) -> Result<Self> {
        let fg = func.map(|f| build_functigraph(&base, f)).transpose()?;
        Ok(Subject {
            caps,
            base,
            fg,
            z_base: None,
            z_whole: None,
            p_base: None,
        })
    }

    fn z(&self, g: &Graph) -> Result<ZResult> {
        zero_forcing_number_capped(g, None, self.caps)
    }

    fn z_base(&mut self) -> Result<&ZResult> {
        if self.z_base.is_none() {
            self.z_base = Some(self.z(&self.base)?);
        }
        Ok(self.z_base.as_ref().expect("just computed"))
    }

    fn fg(&self) -> Result<&FunctigraphInstance> {
        self.fg
            .as_ref()
            .ok_or_else(|| Error::Precondition("check requires a functigraph instance".into()))
    }

    fn z_whole(&mut self) -> Result<&ZResult> {
        if self.z_whole.is_none() {
            let whole = &self.fg()?.whole;
            self.z_whole = Some(self.z(whole)?);
        }
        Ok(self.z_whole.as_ref().expect("just computed"))
    }

    fn p_base(&mut self) -> Result<usize> {
        if self.p_base.is_none() {
            self.p_base = Some(path_cover_number(&self.base, self.caps)?.p);
        }
        Ok(self.p_base.expect("just computed"))
    }

    fn func(&self) -> Result<&VertexFunction> {
        Ok(&self.fg()?.func)
    }

    fn n(&self) -> usize {
        self.base.order()
    }

    /// `(z, witness)` for the whole functigraph.
    fn whole(&mut self) -> Result<(usize, Vec<usize>)> {
        let r = self.z_whole()?;
        Ok((r.z, r.witness.to_vec()))
    }

    fn base_z(&mut self) -> Result<(usize, Vec<usize>)> {
        let r = self.z_base()?;
        Ok((r.z, r.witness.to_vec()))
    }

    fn require_functigraph_base(&self, check: Check) -> Result<()> {
        precondition(
            self.base.is_connected() && self.n() >= 3,
            check,
            "a connected base graph of order at least 3",
        )
    }

    fn require_cycle(&self, check: Check) -> Result<()> {
        precondition(self.base.classify().cycle, check, "a cycle base graph")
    }

    fn require_path(&self, check: Check) -> Result<()> {
        precondition(
            self.base.classify().path && self.n() >= 3,
            check,
            "a path base graph of order at least 3",
        )
    }

    fn require_function(&self, check: Check, expected: &VertexFunction) -> Result<()> {
        precondition(
            self.func()? == expected,
            check,
            &format!("the function {expected}"),
        )
    }

    fn is_square(&self) -> Option<usize> {
        let n = self.n();
        (1..=n).find(|k| k * k == n)
    }

    fn evaluate_functigraph(&mut self, check: Check) -> Result<Outcome> {
        let n = self.n();
        let delta = self.base.min_degree()?;
        let func = self.func()?.clone();
        let s = func.range_size();
        let (z, witness) = self.whole()?;
        let bounded = |lo: usize, hi: usize, extra: Value| {
            let mut d = details(json!({ "z": z, "lower": lo, "upper": hi, "range_size": s }));
            if let Value::Object(more) = extra {
                d.extend(more);
            }
            (verdict(lo <= z && z <= hi), d)
        };
        let exact = |expected: usize| {
            (
                verdict(z == expected),
                details(json!({ "z": z, "expected": expected, "range_size": s })),
            )
        };
        let (status, d) = match check {
            Check::FunctigraphBounds => {
                self.require_functigraph_base(check)?;
                let (lo, hi) = (1 + delta, 2 * n - 2);
                bounded(
                    lo,
                    hi,
                    json!({ "lower_tight": z == lo, "upper_tight": z == hi }),
                )
            }
            Check::PermutationBounds => {
                self.require_functigraph_base(check)?;
                precondition(func.is_permutation(), check, "a permutation")?;
                bounded(1 + delta, n, json!({}))
            }
            Check::IdentityUpper => {
                precondition(func.is_identity() && n >= 3, check, "the identity, n >= 3")?;
                let zb = self.z_base()?.z;
                bounded(0, (2 * zb).min(n), json!({ "z_base": zb }))
            }
            Check::IdentityConjecture => {
                precondition(func.is_identity() && n >= 3, check, "the identity, n >= 3")?;
                let zb = self.z_base()?.z;
                let margin = z as i64 - zb as i64 - 1;
                let d = details(json!({
                    "z": z,
                    "z_base": zb,
                    "margin": margin,
                    "holds": margin >= 0,
                }));
                (Status::Observation, d)
            }
            Check::CompleteFormula => {
                precondition(
                    self.base.classify().complete && n >= 3,
                    check,
                    "K_n, n >= 3",
                )?;
                let expected = match s {
                    s if s == n => n,
                    1 => 2 * n - 2,
                    s => 2 * n - s - 1,
                };
                exact(expected)
            }
            Check::CycleIdentity => {
                self.require_cycle(check)?;
                precondition(func.is_identity(), check, "the identity")?;
                exact(if n == 3 { 3 } else { 4 })
            }
            Check::CycleConstant => {
                self.require_cycle(check)?;
                precondition(func.is_constant(), check, "a constant function")?;
                exact(4)
            }
            Check::CycleRangeBound => {
                self.require_cycle(check)?;
                precondition(1 < s && s < n, check, "1 < |range| < n")?;
                bounded(3, s + 2, json!({}))
            }
            Check::CyclePermutation => {
                self.require_cycle(check)?;
                precondition(func.is_permutation(), check, "a permutation")?;
                let ok = (3..=n).contains(&z) && ((z == 3) == (n == 3));
                (verdict(ok), details(json!({ "z": z, "n": n })))
            }
            Check::CyclePermutationExtremal => {
                self.require_cycle(check)?;
                precondition(func.is_permutation(), check, "a permutation")?;
                // The Petersen graph is the only cubic graph of order 10 and
                // girth 5, and every C(C_5, σ) is cubic of order 10.
                let petersen_like = n == 5 && self.fg()?.whole.girth() == Some(5);
                let expected = n == 3 || n == 4 || petersen_like;
                (
                    verdict((z == n) == expected),
                    details(json!({ "z": z, "n": n, "petersen_like": petersen_like })),
                )
            }
            Check::CycleLowerSharp => {
                self.require_cycle(check)?;
                self.require_function(check, &VertexFunction::cycle_lower_sharp(n)?)?;
                exact(3)
            }
            Check::CycleModSharp => {
                self.require_cycle(check)?;
                let k = self.is_square().filter(|&k| k >= 3);
                let k = k.ok_or_else(|| {
                    Error::Precondition(format!("{check} requires C_(k^2) with k >= 3"))
                })?;
                self.require_function(check, &VertexFunction::modular(k)?)?;
                exact(k + 2)
            }
            Check::PathIdentity => {
                self.require_path(check)?;
                precondition(func.is_identity(), check, "the identity")?;
                exact(2)
            }
            Check::PathConstant => {
                self.require_path(check)?;
                precondition(func.is_constant(), check, "a constant function")?;
                exact(2)
            }
            Check::PathRangeBound => {
                self.require_path(check)?;
                precondition(1 < s && s < n, check, "1 < |range| < n")?;
                bounded(2, s + 1, json!({}))
            }
            Check::PathPermutation => {
                self.require_path(check)?;
                precondition(func.is_permutation(), check, "a permutation")?;
                bounded(2, n, json!({}))
            }
            Check::PathPermutationMinimal => {
                self.require_path(check)?;
                precondition(func.is_permutation(), check, "a permutation")?;
                let ladder = family(FamilySpec::Path(n))?
                    .cartesian_product(&family(FamilySpec::Path(2))?)?;
                let is_ladder = isomorphic(&self.fg()?.whole, &ladder);
                (
                    verdict((z == 2) == is_ladder),
                    details(json!({ "z": z, "ladder": is_ladder })),
                )
            }
            Check::PathPermutationExtremal => {
                self.require_path(check)?;
                precondition(func.is_permutation(), check, "a permutation")?;
                let whole = &self.fg()?.whole;
                let expected = match n {
                    3 => {
                        let ladder = family(FamilySpec::Path(3))?
                            .cartesian_product(&family(FamilySpec::Path(2))?)?;
                        !isomorphic(whole, &ladder)
                    }
                    4 => {
                        let sigma = VertexFunction::from_one_based(&[3, 4, 1, 2])?;
                        let reference = build_functigraph(&family(FamilySpec::Path(4))?, &sigma)?;
                        isomorphic(whole, &reference.whole)
                    }
                    _ => false,
                };
                (
                    verdict((z == n) == expected),
                    details(json!({ "z": z, "n": n, "extremal_class": expected })),
                )
            }
            Check::PathLowerSharp => {
                self.require_path(check)?;
                self.require_function(check, &VertexFunction::path_lower_sharp(n)?)?;
                exact(2)
            }
            Check::PathModSharp => {
                self.require_path(check)?;
                let k = self.is_square().filter(|&k| k >= 3);
                let k = k.ok_or_else(|| {
                    Error::Precondition(format!("{check} requires P_(k^2) with k >= 3"))
                })?;
                self.require_function(check, &VertexFunction::modular(k)?)?;
                exact(k + 1)
            }
            Check::BouquetFunctigraph | Check::BouquetBase => {
                let k = (n.max(1) - 1) / 2;
                let canonical = n % 2 == 1
                    && k >= 3
                    && family(FamilySpec::Bouquet(k))?.edge_list() == self.base.edge_list();
                precondition(canonical, check, "the canonical bouquet with k >= 3")?;
                self.require_function(check, &VertexFunction::bouquet_map(n)?)?;
                if check == Check::BouquetBase {
                    let (zb, wb) = self.base_z()?;
                    return Ok(Outcome {
                        status: verdict(zb == k + 1),
                        details: details(json!({ "z_base": zb, "expected": k + 1, "k": k })),
                        witness: Some(wb),
                    });
                }
                (
                    verdict(z <= 4),
                    details(json!({ "z": z, "upper": 4, "k": k })),
                )
            }
            Check::SwapBase | Check::SwapFunctigraph => {
                self.require_path(check)?;
                let k = n / 4;
                precondition(n.is_multiple_of(4) && k >= 2, check, "P_(4k) with k >= 2")?;
                self.require_function(check, &VertexFunction::pair_swap(n)?)?;
                if check == Check::SwapBase {
                    let (zb, wb) = self.base_z()?;
                    return Ok(Outcome {
                        status: verdict(zb == 1),
                        details: details(json!({ "z_base": zb, "expected": 1, "k": k })),
                        witness: Some(wb),
                    });
                }
                (
                    verdict(z > k),
                    details(json!({ "z": z, "lower": k + 1, "k": k })),
                )
            }
            other => {
                return Err(Error::Precondition(format!(
                    "{other} is not a functigraph check"
                )))
            }
        };
        Ok(Outcome {
            status,
            details: d,
            witness: Some(witness),
        })
    }

    fn evaluate_graph(&mut self, check: Check) -> Result<Outcome> {
        let n = self.n();
        let class = self.base.classify();
        let (z, witness) = self.base_z()?;
        let (status, d) = match check {
            Check::MinDegree => {
                let delta = self.base.min_degree()?;
                (
                    verdict(z >= delta),
                    details(json!({ "z": z, "delta": delta })),
                )
            }
            Check::PathCoverBound => {
                let p = self.p_base()?;
                (verdict(p <= z), details(json!({ "z": z, "p": p })))
            }
            Check::TreeEquality => {
                precondition(class.tree, check, "a tree")?;
                let p = self.p_base()?;
                (verdict(p == z), details(json!({ "z": z, "p": p })))
            }
            Check::UnicyclicEquality => {
                precondition(class.unicyclic, check, "a unicyclic graph")?;
                let p = self.p_base()?;
                (verdict(p == z), details(json!({ "z": z, "p": p })))
            }
            Check::PathCharacterization => {
                precondition(
                    self.base.is_connected() && n >= 2,
                    check,
                    "connected, n >= 2",
                )?;
                (
                    verdict((z == 1) == class.path),
                    details(json!({ "z": z, "is_path": class.path })),
                )
            }
            Check::CompleteCharacterization => {
                precondition(
                    self.base.is_connected() && n >= 2,
                    check,
                    "connected, n >= 2",
                )?;
                (
                    verdict((z == n - 1) == class.complete),
                    details(json!({ "z": z, "n": n, "is_complete": class.complete })),
                )
            }
            Check::StronglyRegularBound => {
                let srg = self.base.strongly_regular_params();
                let srg = srg.ok_or_else(|| {
                    Error::Precondition(format!("{check} requires a strongly regular graph"))
                })?;
                (
                    verdict(z >= n / 2),
                    details(json!({
                        "z": z,
                        "lower": n / 2,
                        "srg": [srg.n, srg.k, srg.alpha, srg.beta],
                    })),
                )
            }
            other => return Err(Error::Precondition(format!("{other} is not a graph check"))),
        };
        Ok(Outcome {
            status,
            details: d,
            witness: Some(witness),
        })
    }

    fn evaluate_vertex(&mut self, check: Check, v: usize) -> Result<Outcome> {
        self.base.check_vertex(v)?;
        let (z, witness) = self.base_z()?;
        let (status, d) = match check {
            Check::CutVertexBound => {
                if !self.base.cut_vertices().contains(v) {
                    return Err(Error::NotCutVertex(v));
                }
                let mut rest = self.base.vertices();
                rest.remove(v);
                let parts = self.base.components_within(rest);
                let mut sum = 0;
                let mut part_z = Vec::new();
                for part in &parts {
                    let mut block = *part;
                    block.insert(v);
                    let (sub, _) = self.base.induced_subgraph(block)?;
                    let zi = self.z(&sub)?.z;
                    part_z.push(zi);
                    sum += zi;
                }
                let bound = (sum + 1).saturating_sub(parts.len());
                (
                    verdict(bound <= z),
                    details(json!({ "z": z, "bound": bound, "k": parts.len(), "part_z": part_z })),
                )
            }
            Check::VertexDeletion => {
                let (rest, _) = self.base.remove_vertex(v)?;
                let zr = self.z(&rest)?.z;
                (
                    verdict(zr + 1 >= z && zr <= z + 1),
                    details(json!({ "z": z, "z_deleted": zr })),
                )
            }
            other => {
                return Err(Error::Precondition(format!(
                    "{other} is not a vertex check"
                )))
            }
        };
        Ok(Outcome {
            status,
            details: d,
            witness: Some(witness),
        })
    }

    fn evaluate_edge(&mut self, check: Check, [a, b]: [usize; 2]) -> Result<Outcome> {
        precondition(check == Check::EdgeDeletion, check, "an edge instance")?;
        let (z, witness) = self.base_z()?;
        let rest = self.base.remove_edge(a, b)?;
        let zr = self.z(&rest)?.z;
        Ok(Outcome {
            status: verdict(zr + 1 >= z && zr <= z + 1),
            details: details(json!({ "z": z, "z_deleted": zr })),
            witness: Some(witness),
        })
    }
}

fn product_factors(kind: ProductFamily, s: usize, t: usize) -> Result<(Graph, Graph)> {
    let left = match kind {
        ProductFamily::PathPath => FamilySpec::Path(s),
        ProductFamily::CyclePath => FamilySpec::Cycle(s),
    };
    Ok((family(left)?, family(FamilySpec::Path(t))?))
}

fn evaluate_product(
    check: Check,
    kind: ProductFamily,
    s: usize,
    t: usize,
    caps: &Caps,
) -> Result<Outcome> {
    let (min_s, min_t) = match kind {
        ProductFamily::PathPath => (2, 2),
        ProductFamily::CyclePath => (3, 2),
    };
    if s < min_s || t < min_t {
        return Err(Error::Precondition(format!(
            "{check} requires s >= {min_s} and t >= {min_t}"
        )));
    }
    Caps::check("product order", s * t, caps.product_order)?;
    let (g, h) = product_factors(kind, s, t)?;
    let gh = g.cartesian_product(&h)?;
    let r = zero_forcing_number_capped(&gh, None, caps)?;
    let z = r.z;
    let (status, d) = match check {
        Check::ProductClosedForm => {
            let expected = match kind {
                ProductFamily::PathPath => s.min(t),
                ProductFamily::CyclePath => s.min(2 * t),
            };
            (
                verdict(z == expected),
                details(json!({ "z": z, "expected": expected })),
            )
        }
        Check::ProductUpperBound => {
            let zg = zero_forcing_number_capped(&g, None, caps)?.z;
            let zh = zero_forcing_number_capped(&h, None, caps)?.z;
            let bound = (zg * h.order()).min(zh * g.order());
            (
                verdict(z <= bound),
                details(json!({ "z": z, "upper": bound, "z_left": zg, "z_right": zh })),
            )
        }
        other => {
            return Err(Error::Precondition(format!(
                "{other} is not a product check"
            )))
        }
    };
    Ok(Outcome {
        status,
        details: d,
        witness: Some(r.witness.to_vec()),
    })
}

/// Evaluates `check` on `instance` from scratch.
pub fn evaluate(check: Check, instance: &Instance, caps: &Caps) -> Result<Outcome> {
    evaluate_many(&[check], instance, caps).map(|mut v| v.pop().expect("one outcome"))
}

/// Evaluates several checks on one instance, sharing the expensive
/// zero forcing computations between them.
pub(crate) fn evaluate_many(
    checks: &[Check],
    instance: &Instance,
    caps: &Caps,
) -> Result<Vec<Outcome>> {
    match instance {
        Instance::Product { family, s, t } => checks
            .iter()
            .map(|&c| evaluate_product(c, *family, *s, *t, caps))
            .collect(),
        Instance::Enumeration { n, filter } => checks
            .iter()
            .map(|&c| {
                precondition(c == Check::EnumerationCount, c, "an enumeration instance")?;
                let expected = count_functions(*n, *filter);
                let counted = enumerate_functions(*n, *filter, caps)?.count() as u64;
                Ok(Outcome {
                    status: verdict(counted == expected),
                    details: details(json!({ "enumerated": counted, "expected": expected })),
                    witness: None,
                })
            })
            .collect(),
        Instance::Graph { graph } => {
            let mut subject = Subject::new(graph.to_graph()?, None, caps)?;
            checks.iter().map(|&c| subject.evaluate_graph(c)).collect()
        }
        Instance::Vertex { graph, vertex } => {
            let mut subject = Subject::new(graph.to_graph()?, None, caps)?;
            checks
                .iter()
                .map(|&c| subject.evaluate_vertex(c, *vertex))
                .collect()
        }
        Instance::Edge { graph, edge } => {
            let mut subject = Subject::new(graph.to_graph()?, None, caps)?;
            checks
                .iter()
                .map(|&c| subject.evaluate_edge(c, *edge))
                .collect()
        }
        Instance::Functigraph { graph, function } => {
            let mut subject = Subject::new(graph.to_graph()?, Some(function), caps)?;
            checks
                .iter()
                .map(|&c| subject.evaluate_functigraph(c))
                .collect()
        }
    }
}
