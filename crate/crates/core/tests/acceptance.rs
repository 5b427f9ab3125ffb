//! Acceptance run: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use zf_core::audit::library::{connected_library, tree_library, unicyclic_library};
use zf_core::audit::{run_suite, AuditReport, Check, Status, Suite, SuiteOptions};
use zf_core::cli::report_json;
use zf_core::{
    build_functigraph, named_construction, zero_forcing_number, FamilySpec, Graph, VertexFunction,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn z(g: &Graph) -> usize {
    zero_forcing_number(g, None).expect("exact search").z
}

fn fam(spec: FamilySpec) -> Graph {
    Graph::family(spec).unwrap()
}

fn functigraph(g: &Graph, images: Vec<usize>) -> Graph {
    build_functigraph(g, &VertexFunction::from_images(images).unwrap())
        .unwrap()
        .whole
}

fn suite(s: Suite) -> Result<AuditReport, String> {
    run_suite(s, &SuiteOptions::default()).map_err(|e| format!("{s} suite: {e}"))
}

fn no_failures(r: &AuditReport) -> Result<(), String> {
    match r.failures().next() {
        Some(e) => Err(format!("{} failed on {}: {:?}", e.check, e.key, e.details)),
        None => Ok(()),
    }
}

fn count_where(r: &AuditReport, check: Check, pred: impl Fn(&str) -> bool) -> usize {
    r.entries_for(check).filter(|e| pred(&e.key)).count()
}

fn basic_characterizations() -> Outcome {
    for n in 2..=8 {
        let p = fam(FamilySpec::Path(n));
        let k = fam(FamilySpec::Complete(n));
        ensure!(z(&p) == 1 && brute_z(&p) == 1, "Z(P_{n}) != 1");
        ensure!(
            z(&k) == n - 1 && brute_z(&k) == n - 1,
            "Z(K_{n}) != {}",
            n - 1
        );
    }
    let library = connected_library(50, 2, 9, 1);
    let (mut paths, mut completes) = (0, 0);
    for lg in &library {
        let g = &lg.graph;
        let zg = z(g);
        ensure!(zg == brute_z(g), "{}: engine {zg} vs brute force", lg.key);
        ensure!(
            (zg == 1) == is_path_graph(g),
            "{}: Z=1 mismatch with path test",
            lg.key
        );
        ensure!(
            (zg == g.order() - 1) == is_complete_graph(g),
            "{}: Z=n-1 mismatch with completeness",
            lg.key
        );
        paths += usize::from(zg == 1);
        completes += usize::from(zg == g.order() - 1);
    }
    Ok(format!(
        "{} library graphs, {paths} paths, {completes} complete",
        library.len()
    ))
}

fn petersen() -> Outcome {
    let p = fam(FamilySpec::Petersen);
    ensure!(z(&p) == 5, "Z(petersen) = {}", z(&p));
    ensure!(brute_z(&p) == 5, "brute force disagrees on petersen");
    let c5 = fam(FamilySpec::Cycle(5));
    let pentagram = functigraph(&c5, vec![1, 3, 0, 2, 4]);
    ensure!(
        z(&pentagram) == 5,
        "Z(C(C_5, pentagram)) = {}",
        z(&pentagram)
    );
    ensure!(
        brute_z(&pentagram) == 5,
        "brute force disagrees on the pentagram functigraph"
    );
    ensure!(
        isomorphic(&pentagram, &p),
        "pentagram functigraph is not the Petersen graph"
    );
    Ok("Z = 5 for both; functigraph isomorphic to Petersen".into())
}

fn complete_formula() -> Outcome {
    let mut total = 0;
    for n in 3..=5 {
        let k = fam(FamilySpec::Complete(n));
        for f in all_functions(n) {
            let s = range_size(&f);
            let expected = match s {
                s if s == n => n,
                1 => 2 * n - 2,
                s => 2 * n - s - 1,
            };
            let g = functigraph(&k, f.clone());
            let zg = z(&g);
            ensure!(
                zg == expected,
                "C(K_{n}, {f:?}): Z = {zg}, expected {expected}"
            );
            if n == 3 {
                ensure!(
                    brute_z(&g) == expected,
                    "brute force disagrees on C(K_3, {f:?})"
                );
            }
            total += 1;
        }
    }
    ensure!(total == 27 + 256 + 3125, "checked {total} instances");
    let report = suite(Suite::Complete)?;
    no_failures(&report)?;
    ensure!(
        report.entries_for(Check::CompleteFormula).count() == total,
        "audit covered {} instances",
        report.entries_for(Check::CompleteFormula).count()
    );
    Ok(format!("{total} functions, audit agrees"))
}

fn cycle_identities() -> Outcome {
    for n in 3..=8 {
        let c = fam(FamilySpec::Cycle(n));
        let id = functigraph(&c, (0..n).collect());
        let expected = if n == 3 { 3 } else { 4 };
        ensure!(z(&id) == expected, "Z(C(C_{n}, id)) = {}", z(&id));
        for t in 0..n {
            let g = functigraph(&c, vec![t; n]);
            ensure!(z(&g) == 4, "Z(C(C_{n}, const {t})) = {}", z(&g));
        }
    }
    let id5 = functigraph(&fam(FamilySpec::Cycle(5)), (0..5).collect());
    ensure!(brute_z(&id5) == 4, "brute force disagrees on C(C_5, id)");
    Ok("identity and all constants for n = 3..8".into())
}

fn cycle_function_bound() -> Outcome {
    let mut exhaustive = 0;
    for n in 3..=5 {
        let c = fam(FamilySpec::Cycle(n));
        for f in all_functions(n) {
            let s = range_size(&f);
            if 1 < s && s < n {
                let zg = z(&functigraph(&c, f.clone()));
                ensure!(
                    (3..=s + 2).contains(&zg),
                    "C(C_{n}, {f:?}): Z = {zg} outside [3, {}]",
                    s + 2
                );
                exhaustive += 1;
            }
        }
    }
    let report = suite(Suite::Cycle)?;
    no_failures(&report)?;
    for n in 6..=8 {
        let tag = format!("C(C:{n},");
        let sampled = count_where(&report, Check::CycleRangeBound, |k| {
            k.starts_with("sample#") && k.contains(&tag)
        });
        ensure!(sampled == 200, "n = {n}: {sampled} sampled functions");
    }
    let m = named_construction("cycle-mod", 3).unwrap();
    ensure!(z(&m.whole) == 5, "cycle-mod k=3 gives {}", z(&m.whole));
    for n in 3..=8 {
        let g = functigraph(
            &fam(FamilySpec::Cycle(n)),
            VertexFunction::cycle_lower_sharp(n)
                .unwrap()
                .images()
                .to_vec(),
        );
        ensure!(
            z(&g) == 3,
            "lower-bound construction on C_{n} gives {}",
            z(&g)
        );
    }
    Ok(format!(
        "{exhaustive} exhaustive + 600 sampled; mod k=3 -> 5; lower construction -> 3"
    ))
}

fn path_bounds() -> Outcome {
    for n in 3..=8 {
        let p = fam(FamilySpec::Path(n));
        ensure!(
            z(&functigraph(&p, (0..n).collect())) == 2,
            "Z(C(P_{n}, id)) != 2"
        );
        for t in 0..n {
            ensure!(
                z(&functigraph(&p, vec![t; n])) == 2,
                "Z(C(P_{n}, const {t})) != 2"
            );
        }
    }
    let mut exhaustive = 0;
    for n in 3..=5 {
        let p = fam(FamilySpec::Path(n));
        for f in all_functions(n) {
            let s = range_size(&f);
            if 1 < s && s < n {
                let zg = z(&functigraph(&p, f.clone()));
                ensure!(
                    (2..=s + 1).contains(&zg),
                    "C(P_{n}, {f:?}): Z = {zg} outside [2, {}]",
                    s + 1
                );
                exhaustive += 1;
            }
        }
    }
    let m = named_construction("path-mod", 3).unwrap();
    ensure!(z(&m.whole) == 4, "path-mod k=3 gives {}", z(&m.whole));
    for n in 3..=8 {
        let g = functigraph(
            &fam(FamilySpec::Path(n)),
            VertexFunction::path_lower_sharp(n)
                .unwrap()
                .images()
                .to_vec(),
        );
        ensure!(
            z(&g) == 2,
            "lower-bound construction on P_{n} gives {}",
            z(&g)
        );
    }
    let report = suite(Suite::Path)?;
    no_failures(&report)?;
    Ok(format!(
        "{exhaustive} exhaustive functions; path-mod k=3 -> 4"
    ))
}

fn permutation_sweeps() -> Outcome {
    let mut checked = 0;
    let p4_sigma = functigraph(&fam(FamilySpec::Path(4)), vec![2, 3, 0, 1]);
    let petersen = fam(FamilySpec::Petersen);
    let mut p4_extremal = Vec::new();
    for n in 3..=6 {
        let c = fam(FamilySpec::Cycle(n));
        let p = fam(FamilySpec::Path(n));
        let prism = p.cartesian_product(&fam(FamilySpec::Path(2))).unwrap();
        for sigma in all_permutations(n) {
            let gc = functigraph(&c, sigma.clone());
            let gp = functigraph(&p, sigma.clone());
            let (zc, zp) = (z(&gc), z(&gp));
            ensure!((3..=n).contains(&zc), "C(C_{n}, {sigma:?}): Z = {zc}");
            ensure!((2..=n).contains(&zp), "C(P_{n}, {sigma:?}): Z = {zp}");
            ensure!(
                (zc == 3) == (n == 3),
                "C(C_{n}, {sigma:?}): Z = 3 iff n = 3 violated"
            );
            let c_extremal = n <= 4 || (n == 5 && isomorphic(&gc, &petersen));
            ensure!(
                (zc == n) == c_extremal,
                "C(C_{n}, {sigma:?}): Z = n iff clause violated (Z = {zc})"
            );
            ensure!(
                (zp == 2) == isomorphic(&gp, &prism),
                "C(P_{n}, {sigma:?}): Z = 2 iff prism violated"
            );
            let p_extremal = match n {
                3 => !isomorphic(&gp, &prism),
                4 => isomorphic(&gp, &p4_sigma),
                _ => false,
            };
            ensure!(
                (zp == n) == p_extremal,
                "C(P_{n}, {sigma:?}): Z = n iff clause violated (Z = {zp})"
            );
            if n == 4 && zp == 4 {
                p4_extremal.push(sigma.iter().map(|i| i + 1).collect::<Vec<_>>());
            }
            checked += 2;
        }
    }
    ensure!(
        p4_extremal.contains(&vec![3, 4, 1, 2]),
        "sigma = (3,4,1,2) missing from the Z = 4 class"
    );
    Ok(format!(
        "{checked} permutation functigraphs; Z(C(P_4, s)) = 4 for {p4_extremal:?}"
    ))
}

fn products() -> Outcome {
    let mut rows = 0;
    let p = |n| fam(FamilySpec::Path(n));
    for s in 2..=4 {
        for t in 2..=4 {
            let g = p(s).cartesian_product(&p(t)).unwrap();
            let zg = z(&g);
            ensure!(zg == s.min(t), "Z(P_{s} x P_{t}) = {zg}");
            ensure!(
                zg <= (z(&p(s)) * t).min(z(&p(t)) * s),
                "product bound fails on P_{s} x P_{t}"
            );
            ensure!(brute_z(&g) == zg, "brute force disagrees on P_{s} x P_{t}");
            rows += 1;
        }
    }
    for s in 3..=6 {
        for t in 2..=3 {
            if s * t > 18 {
                continue;
            }
            let c = fam(FamilySpec::Cycle(s));
            let g = c.cartesian_product(&p(t)).unwrap();
            let zg = z(&g);
            ensure!(zg == s.min(2 * t), "Z(C_{s} x P_{t}) = {zg}");
            ensure!(
                zg <= (z(&c) * t).min(z(&p(t)) * s),
                "product bound fails on C_{s} x P_{t}"
            );
            if s * t <= 16 {
                ensure!(brute_z(&g) == zg, "brute force disagrees on C_{s} x P_{t}");
            }
            rows += 1;
        }
    }
    let report = suite(Suite::Product)?;
    no_failures(&report)?;
    ensure!(
        report.entries_for(Check::ProductClosedForm).count() == rows,
        "audit table size differs"
    );
    Ok(format!("{rows} products"))
}

fn structural_bounds() -> Outcome {
    let graph = suite(Suite::Graph)?;
    let deletion = suite(Suite::Deletion)?;
    no_failures(&graph)?;
    no_failures(&deletion)?;
    let library = connected_library(100, 3, 9, 1);
    let in_library = |k: &str| k.starts_with("connected#");
    ensure!(
        count_where(&graph, Check::MinDegree, in_library) == 100,
        "min-degree coverage"
    );
    ensure!(
        count_where(&graph, Check::PathCoverBound, in_library) == 100,
        "path-cover coverage"
    );
    let cut_vertices: usize = library.iter().map(|lg| lg.graph.cut_vertices().len()).sum();
    ensure!(
        count_where(&graph, Check::CutVertexBound, in_library) == cut_vertices,
        "cut-vertex coverage: {} of {cut_vertices}",
        count_where(&graph, Check::CutVertexBound, in_library)
    );
    let edges: usize = library.iter().map(|lg| lg.graph.size().min(3)).sum();
    ensure!(
        count_where(&deletion, Check::VertexDeletion, in_library) == 300,
        "vertex deletion coverage"
    );
    ensure!(
        count_where(&deletion, Check::EdgeDeletion, in_library) == edges,
        "edge deletion coverage"
    );
    ensure!(
        count_where(&graph, Check::TreeEquality, |k| k.starts_with("tree#")) == 50,
        "tree coverage"
    );
    ensure!(
        count_where(&graph, Check::UnicyclicEquality, |k| k
            .starts_with("unicyclic#"))
            == 30,
        "unicyclic coverage"
    );
    for lg in tree_library(50, 2, 9, 1)
        .iter()
        .chain(&unicyclic_library(30, 3, 9, 1))
    {
        ensure!(
            brute_p(&lg.graph) == brute_z(&lg.graph),
            "{}: P != Z by brute force",
            lg.key
        );
    }
    for lg in &library {
        let g = &lg.graph;
        let zg = brute_z(g);
        ensure!(
            g.min_degree().unwrap() <= zg && brute_p(g) <= zg,
            "{}: lower bounds",
            lg.key
        );
    }
    Ok(format!(
        "100 connected ({cut_vertices} cut vertices, {} deletions), 50 trees, 30 unicyclic",
        300 + edges
    ))
}

fn gap_constructions() -> Outcome {
    let b = named_construction("bouquet", 3).unwrap();
    let (zb, zc) = (z(&b.base), z(&b.whole));
    ensure!(zb == 4 && brute_z(&b.base) == 4, "Z(bouquet base) = {zb}");
    ensure!(
        zc <= 4 && brute_z(&b.whole) == zc,
        "Z(bouquet functigraph) = {zc}"
    );
    let s = named_construction("path-swap", 2).unwrap();
    let (zp, zs) = (z(&s.base), z(&s.whole));
    ensure!(zp == 1, "Z(P_8) = {zp}");
    ensure!(zs >= 3, "Z(C(P_8, swap)) = {zs}");
    ensure!(
        brute_z(&s.whole) == zs,
        "brute force disagrees on C(P_8, swap)"
    );
    no_failures(&suite(Suite::Gaps)?)?;
    Ok(format!(
        "bouquet k=3: Z(G) = {zb}, Z(C) = {zc}; swap k=2: Z(G) = {zp}, Z(C) = {zs}"
    ))
}

fn general_bounds() -> Outcome {
    let report = suite(Suite::Functigraph)?;
    no_failures(&report)?;
    let pairs = count_where(&report, Check::FunctigraphBounds, |k| k.contains("pair#"));
    ensure!(pairs == 500, "{pairs} random pairs audited");
    for n in 3..=6 {
        let k = fam(FamilySpec::Complete(n));
        let low = z(&functigraph(&k, (0..n).collect()));
        let high = z(&functigraph(&k, vec![0; n]));
        ensure!(
            low == n,
            "Z(C(K_{n}, id)) = {low}, lower bound 1 + delta = {n}"
        );
        ensure!(
            high == 2 * n - 2,
            "Z(C(K_{n}, const)) = {high}, upper bound {}",
            2 * n - 2
        );
    }
    Ok("500 pairs within [1 + delta, 2n - 2]; both ends attained on K_n".into())
}

fn conjecture_monitor() -> Outcome {
    let report = suite(Suite::Conjecture)?;
    no_failures(&report)?;
    let observations: Vec<_> = report.entries_for(Check::IdentityConjecture).collect();
    ensure!(
        observations.iter().all(|e| e.status == Status::Observation),
        "conjecture entries must be observations"
    );
    let library = count_where(&report, Check::IdentityConjecture, |k| {
        k.starts_with("C(connected#")
    });
    ensure!(library == 50, "{library} library graphs monitored");
    ensure!(
        report
            .entries_for(Check::IdentityUpper)
            .all(|e| e.status == Status::Pass),
        "upper bound"
    );
    let mut margins: BTreeMap<i64, usize> = BTreeMap::new();
    for e in &observations {
        *margins
            .entry(e.details["margin"].as_i64().unwrap())
            .or_default() += 1;
    }
    for lg in connected_library(50, 3, 6, 1) {
        let g = &lg.graph;
        let zc = brute_z(&functigraph(g, (0..g.order()).collect()));
        ensure!(
            zc <= (2 * brute_z(g)).min(g.order()),
            "{}: identity upper bound",
            lg.key
        );
    }
    let counterexamples: usize = margins.range(..0).map(|(_, c)| c).sum();
    Ok(format!(
        "{} observations, margins {margins:?}, counterexamples {counterexamples}",
        observations.len()
    ))
}

fn determinism() -> Outcome {
    let run = |s: Suite, jobs: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .unwrap();
        pool.install(|| run_suite(s, &SuiteOptions::default()).map(|r| report_json(&r)))
            .map_err(|e| e.to_string())
    };
    let mut bytes = 0;
    for s in Suite::EACH {
        let one = run(s, 1)?;
        let many = run(s, 4)?;
        ensure!(one == many, "{s}: reports differ between 1 and 4 workers");
        bytes += one.len();
    }
    Ok(format!(
        "{} suites byte-identical ({bytes} bytes)",
        Suite::EACH.len()
    ))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("basic characterizations", 10, basic_characterizations),
        ("petersen", 5, petersen),
        ("complete-graph formula", 300, complete_formula),
        ("cycle identities", 30, cycle_identities),
        ("cycle function bound", 300, cycle_function_bound),
        ("path identities and bounds", 180, path_bounds),
        ("permutation sweeps", 120, permutation_sweeps),
        ("cartesian product tables", 600, products),
        ("structural bounds", 600, structural_bounds),
        ("gap constructions", 60, gap_constructions),
        ("general functigraph bounds", 600, general_bounds),
        ("conjecture monitor", 600, conjecture_monitor),
        ("determinism", 600, determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{msg}; took {elapsed:.1?}, limit {limit}s"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS {name} [{elapsed:.2?}]: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} [{elapsed:.2?}]: {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
