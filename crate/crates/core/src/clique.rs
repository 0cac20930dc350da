//! Clique classification in Bell graphs and small forbidden-subgraph scans.
//!
//! A clique is an S-clique when one base vertex (the anchor) is responsible
//! for all of its edges. Every other clique is a T-clique, and these come in
//! only four shapes: cyclic and radial triangles, and split and fused
//! tetrahedra.

use serde::Serialize;

use crate::bell::{build_bell, BellGraph};
use crate::canon::is_isomorphic;
use crate::enumerate::graphs;
use crate::error::{Error, Result};
use crate::families::complete_minus_edge;
use crate::graph::{Graph, Vertex};
use crate::graph6::write_graph6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CliqueClass {
    /// `anchor` is `None` only for cliques with no edges. `doubled_edges`
    /// counts edges with two witnesses.
    S { anchor: Option<Vertex>, doubled_edges: usize },
    /// Each triangle vertex `P_i` has `{realizers[i]}` as a part; `realizers[i]`
    /// is responsible for the edge opposite `P_i`.
    CyclicT { realizers: [Vertex; 3] },
    /// The Bell vertex `hub` has the three realizers together as one part.
    RadialT { realizers: [Vertex; 3], hub: usize },
    /// Three S-faces and one T-face; `apex` is the Bell vertex off the T-face.
    SplitTetra { realizers: [Vertex; 3], apex: usize },
    /// Four T-faces; `apex` is the Bell vertex off the cyclic face.
    FusedTetra { realizers: [Vertex; 3], apex: usize },
}

impl CliqueClass {
    pub fn is_s(&self) -> bool {
        matches!(self, CliqueClass::S { .. })
    }
}

fn check_clique(b: &BellGraph, ids: &[usize]) -> Result<()> {
    for (i, &a) in ids.iter().enumerate() {
        if a >= b.order() {
            return Err(Error::IndexOutOfRange { index: a, order: b.order() });
        }
        if ids[i + 1..].iter().any(|&c| c == a || !b.are_adjacent(a, c)) {
            return Err(Error::NotAClique);
        }
    }
    Ok(())
}

/// Common witnesses of every edge of the clique (all base vertices when the
/// clique has no edges).
fn common_witnesses(b: &BellGraph, ids: &[usize]) -> Vec<Vertex> {
    let mut common: Option<Vec<Vertex>> = None;
    for (i, &a) in ids.iter().enumerate() {
        for &c in &ids[i + 1..] {
            let w = b.witnesses(a, c);
            common = Some(match common {
                None => w.to_vec(),
                Some(prev) => prev.into_iter().filter(|x| w.contains(x)).collect(),
            });
        }
    }
    common.unwrap_or_default()
}

fn doubled_edges(b: &BellGraph, ids: &[usize]) -> usize {
    let mut d = 0;
    for (i, &a) in ids.iter().enumerate() {
        d += ids[i + 1..].iter().filter(|&&c| b.witnesses(a, c).len() == 2).count();
    }
    d
}

pub fn classify_triangle(b: &BellGraph, ids: [usize; 3]) -> Result<CliqueClass> {
    check_clique(b, &ids)?;
    let common = common_witnesses(b, &ids);
    if let Some(&anchor) = common.first() {
        return Ok(CliqueClass::S { anchor: Some(anchor), doubled_edges: doubled_edges(b, &ids) });
    }
    let opposite = |i: usize| b.witnesses(ids[(i + 1) % 3], ids[(i + 2) % 3]);
    if (0..3).any(|i| opposite(i).len() != 1) {
        return Err(Error::Unclassifiable(format!("T-triangle {ids:?} has a doubled edge")));
    }
    let realizers = [opposite(0)[0], opposite(1)[0], opposite(2)[0]];
    if (0..3).all(|i| b.partition(ids[i]).has_part(&[realizers[i]])) {
        return Ok(CliqueClass::CyclicT { realizers });
    }
    let mut triple = realizers.to_vec();
    triple.sort_unstable();
    if let Some(&hub) = ids.iter().find(|&&i| b.partition(i).has_part(&triple)) {
        return Ok(CliqueClass::RadialT { realizers, hub });
    }
    Err(Error::Unclassifiable(format!("triangle {ids:?} is neither cyclic nor radial")))
}

pub fn classify_clique(b: &BellGraph, ids: &[usize]) -> Result<CliqueClass> {
    check_clique(b, ids)?;
    if ids.len() == 3 {
        return classify_triangle(b, [ids[0], ids[1], ids[2]]);
    }
    let common = common_witnesses(b, ids);
    if ids.len() < 2 || !common.is_empty() {
        return Ok(CliqueClass::S { anchor: common.first().copied(), doubled_edges: doubled_edges(b, ids) });
    }
    if ids.len() != 4 {
        return Err(Error::Unclassifiable(format!("clique of size {} without an anchor", ids.len())));
    }
    let faces: Vec<(usize, CliqueClass)> = (0..4)
        .map(|skip| {
            let f: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| ids[i]).collect();
            classify_triangle(b, [f[0], f[1], f[2]]).map(|c| (ids[skip], c))
        })
        .collect::<Result<_>>()?;
    let t_faces: Vec<&(usize, CliqueClass)> = faces.iter().filter(|(_, c)| !c.is_s()).collect();
    match t_faces.len() {
        1 => {
            let (apex, class) = t_faces[0];
            let realizers = match class {
                CliqueClass::CyclicT { realizers } | CliqueClass::RadialT { realizers, .. } => *realizers,
                _ => unreachable!(),
            };
            Ok(CliqueClass::SplitTetra { realizers, apex: *apex })
        }
        4 => faces
            .iter()
            .find_map(|(apex, c)| match c {
                CliqueClass::CyclicT { realizers } => Some(CliqueClass::FusedTetra { realizers: *realizers, apex: *apex }),
                _ => None,
            })
            .ok_or_else(|| Error::Unclassifiable(format!("tetrahedron {ids:?} has no cyclic face"))),
        t => Err(Error::Unclassifiable(format!("tetrahedron {ids:?} has {t} T-faces"))),
    }
}

/// Maximal cliques by Bron–Kerbosch with pivoting, each sorted, in sorted
/// order.
pub fn enumerate_maximal_cliques(g: &Graph) -> Vec<Vec<Vertex>> {
    fn bk(g: &Graph, r: &mut Vec<Vertex>, mut p: Vec<Vertex>, mut x: Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
            .expect("p or x nonempty");
        let candidates: Vec<Vertex> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            bk(g, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    if g.order() > 0 {
        bk(g, &mut Vec::new(), g.vertices().collect(), Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// Every clique with at least `min_size` vertices, each sorted, in
/// lexicographic order.
pub fn enumerate_cliques(g: &Graph, min_size: usize) -> Vec<Vec<Vertex>> {
    fn grow(g: &Graph, cur: &mut Vec<Vertex>, cand: &[Vertex], min: usize, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() >= min {
            out.push(cur.clone());
        }
        for (i, &v) in cand.iter().enumerate() {
            let next: Vec<Vertex> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            cur.push(v);
            grow(g, cur, &next, min, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let all: Vec<Vertex> = g.vertices().collect();
    grow(g, &mut Vec::new(), &all, min_size.max(1), &mut out);
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TriangleCounts {
    pub cyclic_t: usize,
    pub radial_t: usize,
    pub s: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TetrahedronCounts {
    pub fused: usize,
    pub s: usize,
    pub split: usize,
}

/// Clique counts by class over all cliques of size 3 and 4, plus the number
/// of S-cliques of size 5 or more.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CliqueCensus {
    pub larger_s_cliques: usize,
    pub tetrahedra: TetrahedronCounts,
    pub triangles: TriangleCounts,
}

pub fn clique_census(b: &BellGraph) -> Result<CliqueCensus> {
    let mut c = CliqueCensus::default();
    for ids in enumerate_cliques(&b.to_simple(), 3) {
        match (ids.len(), classify_clique(b, &ids)?) {
            (3, CliqueClass::S { .. }) => c.triangles.s += 1,
            (3, CliqueClass::CyclicT { .. }) => c.triangles.cyclic_t += 1,
            (3, CliqueClass::RadialT { .. }) => c.triangles.radial_t += 1,
            (4, CliqueClass::S { .. }) => c.tetrahedra.s += 1,
            (4, CliqueClass::SplitTetra { .. }) => c.tetrahedra.split += 1,
            (4, CliqueClass::FusedTetra { .. }) => c.tetrahedra.fused += 1,
            (_, CliqueClass::S { .. }) => c.larger_s_cliques += 1,
            (m, class) => return Err(Error::Unclassifiable(format!("size {m} clique classified {class:?}"))),
        }
    }
    Ok(c)
}

/// Does some vertex subset of `g` induce a copy of `h`?
pub fn contains_induced(h: &Graph, g: &Graph) -> bool {
    if h.order() > g.order() {
        return false;
    }
    // place high-degree vertices of h first, then keep each next vertex
    // attached to the placed ones where possible
    let mut order: Vec<Vertex> = Vec::with_capacity(h.order());
    let mut placed = vec![false; h.order()];
    while order.len() < h.order() {
        let next = (0..h.order())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (h.neighbors(v).iter().filter(|&&u| placed[u]).count(), h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; h.order()];
    let mut used = vec![false; g.order()];
    fn go(h: &Graph, g: &Graph, order: &[Vertex], i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for x in 0..g.order() {
            if used[x] || g.degree(x) < h.degree(v) {
                continue;
            }
            if order[..i].iter().any(|&u| h.has_edge(u, v) != g.has_edge(map[u], x)) {
                continue;
            }
            map[v] = x;
            used[x] = true;
            if go(h, g, order, i + 1, map, used) {
                return true;
            }
            used[x] = false;
        }
        false
    }
    go(h, g, &order, 0, &mut map, &mut used)
}

/// Result of scanning Bell graphs of all small graphs for forbidden structure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ForbiddenReport {
    pub bell_graphs_checked: usize,
    /// `(graph6, k)` for every Bell graph with exactly four vertices.
    pub four_vertex_cases: Vec<(String, usize)>,
    pub large_cliques_checked: usize,
}

fn scan(max_n: usize, deep: bool) -> Result<ForbiddenReport> {
    let k4e = complete_minus_edge(4);
    let k6e = complete_minus_edge(6);
    let mut report = ForbiddenReport::default();
    for n in 0..=max_n {
        for g in graphs(n) {
            for k in 1..=n + 1 {
                let b = build_bell(&g, k);
                let simple = b.to_simple();
                report.bell_graphs_checked += 1;
                let tag = || format!("{} with k = {k}", write_graph6(&g));
                if simple.order() == 4 {
                    report.four_vertex_cases.push((write_graph6(&g), k));
                    if is_isomorphic(&simple, &k4e) {
                        return Err(Error::CounterexampleFound(format!("B_k of {} is K4-e", tag())));
                    }
                }
                if !deep {
                    continue;
                }
                if contains_induced(&k6e, &simple) {
                    return Err(Error::CounterexampleFound(format!("B_k of {} contains induced K6-e", tag())));
                }
                for c in enumerate_cliques(&simple, 5) {
                    report.large_cliques_checked += 1;
                    if !classify_clique(&b, &c)?.is_s() {
                        return Err(Error::CounterexampleFound(format!("T-clique {c:?} of size {} in {}", c.len(), tag())));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Checks that no `B_k(G)` with `|G| <= max_n` and `1 <= k <= n + 1` is
/// isomorphic to the diamond `K_4 - e`.
pub fn verify_k4e_not_bell(max_n: usize) -> Result<ForbiddenReport> {
    scan(max_n, false)
}

/// The diamond scan, plus: no induced `K_6 - e`, and every clique of size at
/// least 5 is an S-clique.
pub fn verify_forbidden(max_n: usize) -> Result<ForbiddenReport> {
    scan(max_n, true)
}
