//! Named verification suites. Each suite expands into independent cases
//! that run in parallel; results come back in case order.

use std::fmt::Debug;

use rayon::prelude::*;
use serde::Serialize;

use crate::bell::build_bell;
use crate::canon::{is_isomorphic, is_isomorphism, is_multigraph_isomorphic};
use crate::clique::{classify_clique, clique_census, contains_induced, enumerate_cliques, CliqueClass};
use crate::core_recon::{neighborhood_line_graph, reconstruct_core, select_singleton_candidate};
use crate::enumerate::{free_trees, graphs, triangle_free_graphs};
use crate::error::{Error, Result};
use crate::families::*;
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::matching::{
    build_matching_graph, near_perfect_adjacent, near_perfect_matching_graph, realize_cycle, realize_tree,
    verify_join, verify_phi_isomorphism,
};
use crate::partition::{is_double_edge_pattern, StablePartition};
use crate::tree_recon::{double_broom_edge_count, reconstruct_tree};

pub const SUITES: &[&str] =
    &["figures", "census", "forbidden", "matching", "realize", "tree-roundtrip", "core-roundtrip", "properties"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub actual: String,
    pub case: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub suite: String,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Check = std::result::Result<(), (String, String)>;

struct Case {
    name: String,
    run: Box<dyn Fn() -> Check + Send + Sync>,
}

fn case(name: impl Into<String>, run: impl Fn() -> Check + Send + Sync + 'static) -> Case {
    Case { name: name.into(), run: Box::new(run) }
}

fn eq<T: Debug + PartialEq>(expected: T, actual: T) -> Check {
    if expected == actual {
        Ok(())
    } else {
        Err((format!("{expected:?}"), format!("{actual:?}")))
    }
}

fn holds(cond: bool, what: &str) -> Check {
    if cond {
        Ok(())
    } else {
        Err((what.to_string(), "false".to_string()))
    }
}

fn ok<T>(r: Result<T>) -> std::result::Result<T, (String, String)> {
    r.map_err(|e| ("success".to_string(), e.to_string()))
}

fn iso(g: &Graph, h: &Graph) -> Check {
    if is_isomorphic(g, h) {
        Ok(())
    } else {
        Err((write_graph6(h), write_graph6(g)))
    }
}

fn label(g: &Graph, k: usize) -> String {
    format!("{} k={k}", write_graph6(g))
}

/// Runs `suite`. `max_n` overrides the suite's default order bound.
pub fn run_suite(suite: &str, max_n: Option<usize>) -> Result<SuiteReport> {
    let cases = match suite {
        "figures" => figures(),
        "census" => census(max_n.unwrap_or(5)),
        "forbidden" => forbidden(max_n.unwrap_or(5)),
        "matching" => matching(max_n.unwrap_or(7)),
        "realize" => realize(max_n.unwrap_or(7)),
        "tree-roundtrip" => tree_roundtrip(max_n.unwrap_or(9)),
        "core-roundtrip" => core_roundtrip(max_n.unwrap_or(6)),
        "properties" => properties(max_n.unwrap_or(5)),
        _ => return Err(Error::InvalidInput(format!("unknown suite {suite:?}; known: {}", SUITES.join(", ")))),
    };
    let failures = cases
        .par_iter()
        .filter_map(|c| (c.run)().err().map(|(expected, actual)| Failure { actual, case: c.name.clone(), expected }))
        .collect();
    Ok(SuiteReport { cases: cases.len(), failures, suite: suite.to_string() })
}

fn figures() -> Vec<Case> {
    vec![
        case("B_3(P_4) = C_4", || {
            let b = build_bell(&path(4), 3);
            iso(&b.to_simple(), &cycle(4))?;
            eq(2, b.doubled_edge_count())
        }),
        case("B_3(K_1,3) = K_4", || iso(&build_bell(&star(3), 3).to_simple(), &complete(4))),
        case("B_4(K_3 + K_1) = K_4", || {
            iso(&build_bell(&complete(3).disjoint_union(&empty(1)), 4).to_simple(), &complete(4))
        }),
        case("B_3(3K_1) = K_5 - e", || iso(&build_bell(&empty(3), 3).to_simple(), &complete_minus_edge(5))),
        case("multigraphs of K_1,3 and K_3 + K_1", || {
            let a = build_bell(&star(3), 3).to_multigraph();
            let b = build_bell(&complete(3).disjoint_union(&empty(1)), 4).to_multigraph();
            let c = build_bell(&empty(3), 2).to_multigraph();
            holds(!is_multigraph_isomorphic(&a, &b), "B~_3(K_1,3) differs from B~_4(K_3 + K_1)")?;
            holds(is_multigraph_isomorphic(&a, &c), "B~_3(K_1,3) matches B~_2(3K_1)")
        }),
        case("census of B_3(3K_1)", || {
            let c = ok(clique_census(&build_bell(&empty(3), 3)))?;
            eq((3, 3, 1, 0, 1, 1), (c.triangles.s, c.triangles.radial_t, c.triangles.cyclic_t, c.tetrahedra.s, c.tetrahedra.split, c.tetrahedra.fused))
        }),
        case("M_3(G_6) = C_8", || {
            let g = ok(ear_graph(6))?;
            iso(&ok(near_perfect_matching_graph(&g))?.graph, &cycle(8))
        }),
        case("realize cycle 8", || holds(ok(realize_cycle(8))?.verify(), "certificate verifies")),
    ]
}

/// Classification read off the partitions alone: an anchor is a base vertex
/// whose removal makes every partition of the clique equal.
fn oracle_class(b: &crate::bell::BellGraph, ids: &[usize]) -> String {
    let n = b.base().order();
    let parts = |i: usize| b.partition(i);
    let anchors = |ids: &[usize]| -> Vec<usize> {
        (0..n)
            .filter(|&v| ids.windows(2).all(|w| parts(w[0]).restrict(v).unwrap() == parts(w[1]).restrict(v).unwrap()))
            .collect()
    };
    if ids.len() < 2 || !anchors(ids).is_empty() {
        return "S".into();
    }
    let triangle = |t: [usize; 3]| -> String {
        if !anchors(&t).is_empty() {
            return "S".into();
        }
        let r: Vec<usize> = (0..3)
            .map(|i| {
                let (a, c) = (parts(t[(i + 1) % 3]), parts(t[(i + 2) % 3]));
                (0..n).find(|&v| a.restrict(v).unwrap() == c.restrict(v).unwrap()).unwrap()
            })
            .collect();
        if (0..3).all(|i| parts(t[i]).has_part(&[r[i]])) {
            return "cyclic".into();
        }
        let mut triple = r.clone();
        triple.sort_unstable();
        if t.iter().any(|&i| parts(i).has_part(&triple)) {
            return "radial".into();
        }
        "unknown".into()
    };
    match ids.len() {
        3 => triangle([ids[0], ids[1], ids[2]]),
        4 => {
            let faces: Vec<(usize, String)> = (0..4)
                .map(|s| {
                    let f: Vec<usize> = (0..4).filter(|&i| i != s).map(|i| ids[i]).collect();
                    (ids[s], triangle([f[0], f[1], f[2]]))
                })
                .collect();
            let t: Vec<&(usize, String)> = faces.iter().filter(|(_, c)| c != "S").collect();
            match t.len() {
                1 => format!("split {}", t[0].0),
                4 => match faces.iter().find(|(_, c)| c == "cyclic") {
                    Some((apex, _)) => format!("fused {apex}"),
                    None => "unknown".into(),
                },
                _ => "unknown".into(),
            }
        }
        _ => "unknown".into(),
    }
}

fn class_name(c: &CliqueClass) -> String {
    match c {
        CliqueClass::S { .. } => "S".into(),
        CliqueClass::CyclicT { .. } => "cyclic".into(),
        CliqueClass::RadialT { .. } => "radial".into(),
        CliqueClass::SplitTetra { apex, .. } => format!("split {apex}"),
        CliqueClass::FusedTetra { apex, .. } => format!("fused {apex}"),
    }
}

fn census(max_n: usize) -> Vec<Case> {
    let mut cases = vec![case("census of B_3(3K_1)", || {
        let c = ok(clique_census(&build_bell(&empty(3), 3)))?;
        eq((3, 3, 1, 1, 1), (c.triangles.s, c.triangles.radial_t, c.triangles.cyclic_t, c.tetrahedra.split, c.tetrahedra.fused))
    })];
    for n in 1..=max_n {
        for g in graphs(n) {
            for k in 1..=max_n {
                let name = label(&g, k);
                let g = g.clone();
                cases.push(case(name, move || {
                    let b = build_bell(&g, k);
                    for c in enumerate_cliques(&b.to_simple(), 2) {
                        let got = ok(classify_clique(&b, &c))?;
                        if let CliqueClass::S { anchor: Some(a), .. } = got {
                            let agree = c.windows(2).all(|w| b.partition(w[0]).restrict(a) == b.partition(w[1]).restrict(a));
                            holds(agree, "anchor fixes every restriction")?;
                        }
                        eq(oracle_class(&b, &c), class_name(&got))?;
                    }
                    Ok(())
                }));
            }
        }
    }
    cases
}

fn forbidden(max_n: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 0..=max_n {
        for g in graphs(n) {
            for k in 1..=n + 1 {
                let name = label(&g, k);
                let g = g.clone();
                cases.push(case(name, move || {
                    let b = build_bell(&g, k);
                    let s = b.to_simple();
                    holds(!is_isomorphic(&s, &complete_minus_edge(4)), "not K_4 - e")?;
                    holds(!contains_induced(&complete_minus_edge(6), &s), "no induced K_6 - e")?;
                    for c in enumerate_cliques(&s, 5) {
                        holds(ok(classify_clique(&b, &c))?.is_s(), "cliques of size 5 or more are S-cliques")?;
                    }
                    Ok(())
                }));
            }
        }
    }
    cases
}

fn matching(max_n: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        for g in triangle_free_graphs(n) {
            let hi = n.div_ceil(2);
            for k in [hi.saturating_sub(1), hi] {
                let g = g.clone();
                cases.push(case(format!("phi {}", label(&g, k)), move || eq(true, ok(verify_phi_isomorphism(&g, k))?)));
            }
        }
    }
    for k in 1..=6 {
        cases.push(case(format!("M_{k}(C_{})", 2 * k + 1), move || {
            iso(&build_matching_graph(&cycle(2 * k + 1), k).graph, &cycle(2 * k + 1))
        }));
    }
    for k in 2..=6 {
        cases.push(case(format!("M_{k}(G_{})", 2 * k), move || {
            iso(&ok(near_perfect_matching_graph(&ok(ear_graph(2 * k))?))?.graph, &cycle(2 * k + 2))
        }));
    }
    let agreement: Vec<(String, Graph)> = [5, 7, 9]
        .into_iter()
        .map(|m| (format!("C_{m}"), cycle(m)))
        .chain([4, 6, 8].into_iter().map(|m| (format!("G_{m}"), ear_graph(m).unwrap())))
        .collect();
    for (name, g) in agreement {
        cases.push(case(format!("adjacency conditions on {name}"), move || {
            let mg = ok(near_perfect_matching_graph(&g))?;
            for (i, a) in mg.matchings.iter().enumerate() {
                for (j, b) in mg.matchings.iter().enumerate().skip(i + 1) {
                    let adj = ok(near_perfect_adjacent(&g, a, b))?;
                    holds(adj.conditions_agree(), "three conditions agree")?;
                    eq(mg.graph.has_edge(i, j), adj.witness().is_some())?;
                }
            }
            Ok(())
        }));
    }
    for m in [5, 7] {
        cases.push(case(format!("join C_5 with C_{m}"), move || eq(true, ok(verify_join(&cycle(5), 0, &cycle(m), 0))?)));
    }
    cases
}

fn realize(max_n: usize) -> Vec<Case> {
    let mut cases: Vec<Case> = (1..=max_n)
        .flat_map(free_trees)
        .map(|t| case(format!("tree {}", write_graph6(&t)), move || holds(ok(realize_tree(&t))?.verify(), "certificate verifies")))
        .collect();
    for m in 3..=10 {
        cases.push(case(format!("cycle {m}"), move || holds(ok(realize_cycle(m))?.verify(), "certificate verifies")));
    }
    cases
}

fn tree_roundtrip(max_n: usize) -> Vec<Case> {
    let mut cases: Vec<Case> = (4..=max_n)
        .flat_map(free_trees)
        .map(|t| {
            case(format!("tree {}", write_graph6(&t)), move || {
                let b = build_bell(&t, 3).to_simple();
                eq(1usize << (t.order() - 2), b.order())?;
                iso(&ok(reconstruct_tree(&b, false))?.tree, &t)
            })
        })
        .collect();
    for s in 2..=8usize {
        for bb in 0..=s / 2 {
            let a = s - bb;
            cases.push(case(format!("broom edges a={a} b={bb}"), move || {
                let t = ok(double_broom(a, bb))?;
                eq(build_bell(&t, 3).to_simple().edge_count(), double_broom_edge_count(a, bb))
            }));
        }
    }
    cases
}

fn core_roundtrip(max_n: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        for g in graphs(n) {
            let g2 = g.clone();
            cases.push(case(format!("core {}", write_graph6(&g)), move || {
                let bm = build_bell(&g2, g2.order()).to_multigraph();
                iso(&ok(reconstruct_core(&bm, false))?.core, &g2.core())
            }));
            if n <= 5 {
                cases.push(case(format!("neighbourhood {}", write_graph6(&g)), move || {
                    let bm = build_bell(&g, g.order()).to_multigraph();
                    let q = ok(select_singleton_candidate(&bm))?;
                    iso(&ok(neighborhood_line_graph(&bm, q))?.0, &g.complement().line_graph())
                }));
            }
        }
    }
    let instances = [
        ("K_3", complete(3).disjoint_union(&empty(2))),
        ("K_1,3", star(3).disjoint_union(&empty(1))),
        ("K_3 and K_1,3", complete(3).disjoint_union(&star(3))),
    ];
    for (name, gbar) in instances {
        cases.push(case(format!("triangle root {name}"), move || {
            let g = gbar.complement();
            let r = ok(reconstruct_core(&build_bell(&g, g.order()).to_multigraph(), true))?;
            iso(&r.core, &g.core())
        }));
    }
    cases
}

fn properties(max_n: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        for g in graphs(n) {
            for k in 1..=n + 1 {
                let g = g.clone();
                cases.push(case(format!("witnesses {}", label(&g, k)), move || {
                    let b = build_bell(&g, k);
                    for e in b.edges() {
                        holds(e.witnesses.len() <= 2, "at most two witnesses")?;
                        let (p, q) = (b.partition(e.u), b.partition(e.v));
                        let pattern = is_double_edge_pattern(p, q).is_some() || is_double_edge_pattern(q, p).is_some();
                        eq(e.witnesses.len() == 2, pattern)?;
                    }
                    Ok(())
                }));
            }
            if let Some(&w) = g.universal_vertices().first() {
                let g = g.clone();
                cases.push(case(format!("universal vertex {}", write_graph6(&g)), move || {
                    let h = ok(g.remove_vertex(w))?;
                    for k in 1..=g.order() {
                        let (a, b) = (build_bell(&g, k + 1), build_bell(&h, k));
                        holds(is_multigraph_isomorphic(&a.to_multigraph(), &b.to_multigraph()), "B_{k+1}(G) = B_k(G - w)")?;
                    }
                    Ok(())
                }));
            }
        }
    }
    for m in 2..=8 {
        cases.push(case(format!("B_2 of {m}K_1"), move || hypercube_check(m)));
    }
    cases
}

/// `B_2(mK_1)` against `Q_{m-1}` plus antipodal edges, mapping each
/// partition to the set of vertices outside the part holding 0.
fn hypercube_check(m: usize) -> Check {
    let b = build_bell(&empty(m), 2);
    eq(1usize << (m - 1), b.order())?;
    let bm = b.to_multigraph();
    for v in 0..b.order() {
        let degree: u32 = (0..b.order()).map(|u| bm.multiplicity(u, v)).sum();
        eq(m as u32, degree)?;
    }
    let mut target = hypercube(m - 1);
    let full = (1usize << (m - 1)) - 1;
    for x in 0..=full {
        if x < full ^ x {
            target.add_edge(x, full ^ x);
        }
    }
    let map: Vec<usize> = b
        .vertices()
        .iter()
        .map(|p: &StablePartition| {
            let zero = p.part_of(0).unwrap();
            (1..m).filter(|&v| p.part_of(v) != Some(zero)).map(|v| 1 << (v - 1)).sum()
        })
        .collect();
    holds(is_isomorphism(&b.to_simple(), &target, &map), "explicit hypercube map")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for (s, n) in [("figures", None), ("tree-roundtrip", Some(6)), ("core-roundtrip", Some(4)), ("properties", Some(3))] {
            let r = run_suite(s, n).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.failures);
            assert!(r.cases > 0);
        }
        assert!(run_suite("nope", None).is_err());
    }
}
