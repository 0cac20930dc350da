//! Matching reconfiguration graphs and Bell realizations of trees and cycles.
//!
//! `M_k(G)` has the matchings of `G` with at least `k` edges as vertices; two
//! are adjacent when they agree after deleting the edges at some vertex. For
//! triangle-free `G` of order `n`, pairing matched endpoints and isolating the
//! rest maps `M_k(G)` isomorphically onto `B_{n-k}` of the complement.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bell::build_bell;
use crate::canon::{is_isomorphic, is_isomorphism};
use crate::error::{Error, Result};
use crate::families::{cycle, ear_graph, ear_v, EAR_U, EAR_W};
use crate::graph::{Graph, Vertex};
use crate::partition::StablePartition;

/// A set of pairwise disjoint edges, each stored as `(u, v)` with `u < v`,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let n = g.order();
        let mut used = vec![false; n];
        let mut out = Vec::new();
        for (a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if !g.has_edge(a, b) {
                return Err(Error::InvalidInput(format!("{a}-{b} is not an edge")));
            }
            for x in [a, b] {
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::InvalidInput(format!("vertex {x} matched twice")));
                }
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        Ok(Matching { n, edges: out })
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.edges.iter().find_map(|&(a, b)| match () {
            _ if a == v => Some(b),
            _ if b == v => Some(a),
            _ => None,
        })
    }

    pub fn unmatched(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.partner(v).is_none()).collect()
    }

    /// Edges with no endpoint in `removed`: the matching seen in
    /// `G<M> - removed`.
    pub fn avoiding(&self, removed: &[Vertex]) -> Vec<(Vertex, Vertex)> {
        self.edges.iter().copied().filter(|(a, b)| !removed.contains(a) && !removed.contains(b)).collect()
    }

    pub fn contains(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }
}

/// All matchings with at least `min_size` edges, in sorted order.
pub fn enumerate_matchings(g: &Graph, min_size: usize) -> Vec<Matching> {
    let edges = g.edges();
    let mut out = Vec::new();
    fn go(
        g: &Graph,
        edges: &[(Vertex, Vertex)],
        i: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(Vertex, Vertex)>,
        min: usize,
        out: &mut Vec<Matching>,
    ) {
        if cur.len() + (edges.len() - i) < min {
            return;
        }
        if i == edges.len() {
            out.push(Matching { n: g.order(), edges: cur.clone() });
            return;
        }
        let (a, b) = edges[i];
        if !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            cur.push((a, b));
            go(g, edges, i + 1, used, cur, min, out);
            cur.pop();
            used[a] = false;
            used[b] = false;
        }
        go(g, edges, i + 1, used, cur, min, out);
    }
    go(g, &edges, 0, &mut vec![false; g.order()], &mut Vec::new(), min_size, &mut out);
    out.sort();
    out
}

/// `M_k(G)` with its vertex labels: vertex `i` is `matchings[i]`.
#[derive(Debug, Clone)]
pub struct MatchingGraph {
    pub matchings: Vec<Matching>,
    pub graph: Graph,
}

impl MatchingGraph {
    pub fn id_of(&self, m: &Matching) -> Option<usize> {
        self.matchings.binary_search(m).ok()
    }
}

pub fn build_matching_graph(g: &Graph, k: usize) -> MatchingGraph {
    let matchings = enumerate_matchings(g, k);
    let mut groups: BTreeMap<(Vertex, Vec<(Vertex, Vertex)>), Vec<usize>> = BTreeMap::new();
    for (i, m) in matchings.iter().enumerate() {
        for v in 0..g.order() {
            groups.entry((v, m.avoiding(&[v]))).or_default().push(i);
        }
    }
    let mut graph = Graph::new(matchings.len());
    for ids in groups.values() {
        for (a, &i) in ids.iter().enumerate() {
            for &j in &ids[a + 1..] {
                graph.add_edge(i, j);
            }
        }
    }
    MatchingGraph { matchings, graph }
}

/// The near-perfect matching graph `M_{(n-1)/2}(G)` of an odd-order graph.
pub fn near_perfect_matching_graph(g: &Graph) -> Result<MatchingGraph> {
    if g.order() % 2 == 0 {
        return Err(Error::NotNearPerfect);
    }
    Ok(build_matching_graph(g, g.order() / 2))
}

/// The smallest `w` satisfying each of three equivalent descriptions of
/// adjacency between near-perfect matchings `m1` (missing `v`) and `m2`
/// (missing `u`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NearPerfectAdjacency {
    /// `G<M1> - w = G<M2> - w`.
    pub restriction: Option<Vertex>,
    /// `M1 = (M2 \ {vw}) ∪ {uw}`.
    pub exchange: Option<Vertex>,
    /// `uw ∈ M1`, `vw ∈ M2`, and the matchings agree off `{u, v, w}`.
    pub local: Option<Vertex>,
}

impl NearPerfectAdjacency {
    pub fn witness(&self) -> Option<Vertex> {
        self.restriction
    }

    pub fn conditions_agree(&self) -> bool {
        self.restriction.is_some() == self.exchange.is_some() && self.exchange.is_some() == self.local.is_some()
    }
}

pub fn near_perfect_adjacent(g: &Graph, m1: &Matching, m2: &Matching) -> Result<NearPerfectAdjacency> {
    let n = g.order();
    if n % 2 == 0 || m1.size() != n / 2 || m2.size() != n / 2 || m1.n != n || m2.n != n {
        return Err(Error::NotNearPerfect);
    }
    if m1 == m2 {
        return Err(Error::InvalidInput("matchings are identical".into()));
    }
    let v = m1.unmatched()[0];
    let u = m2.unmatched()[0];
    let restriction = (0..n).find(|&w| m1.avoiding(&[w]) == m2.avoiding(&[w]));
    let exchange = (0..n).find(|&w| {
        if !m2.contains(v, w) || !g.has_edge(u, w) {
            return false;
        }
        let mut e: Vec<(Vertex, Vertex)> = m2.edges.iter().copied().filter(|&x| x != (v.min(w), v.max(w))).collect();
        e.push((u.min(w), u.max(w)));
        e.sort_unstable();
        e == m1.edges
    });
    let local = (0..n).find(|&w| {
        w != u && w != v && m1.contains(u, w) && m2.contains(v, w) && m1.avoiding(&[u, v, w]) == m2.avoiding(&[u, v, w])
    });
    Ok(NearPerfectAdjacency { restriction, exchange, local })
}

fn check_triangle_free(g: &Graph) -> Result<()> {
    if g.is_triangle_free() {
        Ok(())
    } else {
        Err(Error::TrianglePresent)
    }
}

/// Pairs matched endpoints and isolates unmatched vertices, giving a stable
/// `(n - k)`-partition of the complement of `g`.
pub fn phi(m: &Matching, g: &Graph, k: usize) -> Result<StablePartition> {
    check_triangle_free(g)?;
    if m.size() < k {
        return Err(Error::InvalidInput(format!("matching of size {} is below {k}", m.size())));
    }
    let mut parts: Vec<Vec<Vertex>> = m.edges.iter().map(|&(a, b)| vec![a, b]).collect();
    parts.extend(m.unmatched().into_iter().map(|v| vec![v]));
    StablePartition::new(&g.complement(), g.order() - k, parts)
}

/// Inverse of [`phi`]: the two-element parts as matching edges of `g`.
pub fn phi_inverse(p: &StablePartition, g: &Graph) -> Result<Matching> {
    if p.parts().iter().any(|part| part.len() > 2) {
        return Err(Error::InvalidInput(format!("partition {p} has a part of size > 2")));
    }
    Matching::new(g, p.parts().iter().filter(|part| part.len() == 2).map(|part| (part[0], part[1])))
}

/// Builds `M_k(g)` and `B_{n-k}(complement(g))` and checks that [`phi`] maps
/// vertices bijectively and edges exactly onto edges.
pub fn verify_phi_isomorphism(g: &Graph, k: usize) -> Result<bool> {
    check_triangle_free(g)?;
    let n = g.order();
    if k > n {
        return Ok(false);
    }
    let mg = build_matching_graph(g, k);
    let bell = build_bell(&g.complement(), n - k);
    if mg.matchings.len() != bell.order() {
        return Ok(false);
    }
    let mut map = Vec::with_capacity(mg.matchings.len());
    for m in &mg.matchings {
        match bell.id_of(&phi(m, g, k)?) {
            Some(id) => map.push(id),
            None => return Ok(false),
        }
    }
    Ok(is_isomorphism(&mg.graph, &bell.to_simple(), &map))
}

/// Outcome of counting perfect matchings up to two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfectMatchings {
    Zero,
    Unique(Matching),
    Several,
}

pub fn perfect_matchings(g: &Graph) -> PerfectMatchings {
    fn go(g: &Graph, used: &mut Vec<bool>, cur: &mut Vec<(Vertex, Vertex)>, found: &mut Vec<Vec<(Vertex, Vertex)>>) {
        if found.len() >= 2 {
            return;
        }
        let Some(v) = (0..g.order()).find(|&x| !used[x]) else {
            found.push(cur.clone());
            return;
        };
        used[v] = true;
        for &w in g.neighbors(v) {
            if !used[w] {
                used[w] = true;
                cur.push((v, w));
                go(g, used, cur, found);
                cur.pop();
                used[w] = false;
            }
        }
        used[v] = false;
    }
    let mut found = Vec::new();
    go(g, &mut vec![false; g.order()], &mut Vec::new(), &mut found);
    match found.len() {
        0 => PerfectMatchings::Zero,
        1 => PerfectMatchings::Unique(Matching::new(g, found.pop().unwrap()).expect("found edges form a matching")),
        _ => PerfectMatchings::Several,
    }
}

pub fn unique_perfect_matching(g: &Graph) -> Option<Matching> {
    match perfect_matchings(g) {
        PerfectMatchings::Unique(m) => Some(m),
        _ => None,
    }
}

/// Does `g - v` have exactly one perfect matching?
pub fn is_uniquely_unmatched(g: &Graph, v: Vertex) -> Result<bool> {
    Ok(unique_perfect_matching(&g.remove_vertex(v)?).is_some())
}

/// The unique near-perfect matching of `g` leaving `v` unmatched.
fn matching_missing(g: &Graph, v: Vertex) -> Result<Matching> {
    let rest: Vec<Vertex> = (0..g.order()).filter(|&x| x != v).collect();
    let m = unique_perfect_matching(&g.induced_subgraph(&rest)).ok_or(Error::NotUniquelyUnmatched(v))?;
    Matching::new(g, m.edges.iter().map(|&(a, b)| (rest[a], rest[b])))
}

/// `(h1 ⊔ h2) / (v1 ~ v2)`; the merged vertex keeps id `v1` and the other
/// vertices of `h2` follow those of `h1` in order.
pub fn join_uniquely_unmatched(h1: &Graph, v1: Vertex, h2: &Graph, v2: Vertex) -> Result<Graph> {
    if !is_uniquely_unmatched(h1, v1)? {
        return Err(Error::NotUniquelyUnmatched(v1));
    }
    if !is_uniquely_unmatched(h2, v2)? {
        return Err(Error::NotUniquelyUnmatched(v2));
    }
    h1.identify_vertices(v1, h2, v2)
}

/// Checks that the near-perfect matching graph of the join is isomorphic to
/// the two near-perfect matching graphs joined at `M_{v1}` and `M_{v2}`.
pub fn verify_join(h1: &Graph, v1: Vertex, h2: &Graph, v2: Vertex) -> Result<bool> {
    let joined = join_uniquely_unmatched(h1, v1, h2, v2)?;
    let m1 = near_perfect_matching_graph(h1)?;
    let m2 = near_perfect_matching_graph(h2)?;
    let i1 = m1.id_of(&matching_missing(h1, v1)?).expect("near-perfect matching is enumerated");
    let i2 = m2.id_of(&matching_missing(h2, v2)?).expect("near-perfect matching is enumerated");
    let lhs = near_perfect_matching_graph(&joined)?.graph;
    let rhs = m1.graph.identify_vertices(i1, &m2.graph, i2)?;
    Ok(is_isomorphic(&lhs, &rhs))
}

/// A Bell graph `B_k(base)` together with an explicit isomorphism onto
/// `target`: `iso[bell_vertex] = target_vertex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationCertificate {
    pub target: Graph,
    pub base: Graph,
    pub k: usize,
    pub iso: Vec<Vertex>,
}

impl RealizationCertificate {
    /// Rebuilds the Bell graph and checks the isomorphism edge by edge.
    pub fn verify(&self) -> bool {
        is_isomorphism(&build_bell(&self.base, self.k).to_simple(), &self.target, &self.iso)
    }
}

/// Labels each Bell vertex through the matching it encodes and checks the
/// labelling is an isomorphism onto `target`.
fn certify(
    target: Graph,
    base: Graph,
    k: usize,
    label: impl Fn(&Matching) -> Option<Vertex>,
) -> Result<RealizationCertificate> {
    let complement = base.complement();
    let bell = build_bell(&base, k);
    let iso = bell
        .vertices()
        .iter()
        .map(|p| {
            let m = phi_inverse(p, &complement)?;
            label(&m).ok_or_else(|| Error::CertificateMismatch(format!("no label for partition {p}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if !is_isomorphism(&bell.to_simple(), &target, &iso) {
        return Err(Error::CertificateMismatch("labelling is not an isomorphism".into()));
    }
    Ok(RealizationCertificate { target, base, k, iso })
}

/// Realizes a tree `t` of order `n` as `B_n` of the complement of its
/// subdivision. Each Bell vertex maps to the tree vertex its matching leaves
/// unmatched.
pub fn realize_tree(t: &Graph) -> Result<RealizationCertificate> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    let ts = t.subdivide_each_edge();
    for v in 0..n {
        if !is_uniquely_unmatched(&ts, v)? {
            return Err(Error::NotUniquelyUnmatched(v));
        }
    }
    certify(t.clone(), ts.complement(), n, |m| match m.unmatched()[..] {
        [v] if v < n => Some(v),
        _ => None,
    })
}

/// Realizes the cycle `C_m`, `m >= 3`.
pub fn realize_cycle(m: usize) -> Result<RealizationCertificate> {
    if m < 3 {
        return Err(Error::BadCycleLength(m));
    }
    if m == 3 {
        // the isolated vertex 3 joins the part of one triangle vertex
        let base = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]);
        let bell = build_bell(&base, 3);
        let iso = bell.vertices().iter().map(|p| p.parts().iter().find(|q| q.contains(&3)).unwrap()[0]).collect();
        let cert = RealizationCertificate { target: cycle(3), base, k: 3, iso };
        return if cert.verify() { Ok(cert) } else { Err(Error::CertificateMismatch("C_3".into())) };
    }
    if m == 4 {
        // K_2 on {0, 1} plus isolated 2, 3; record which of 2, 3 sit with 1
        let base = Graph::from_edges(4, [(0, 1)]);
        let bell = build_bell(&base, 2);
        let iso = bell
            .vertices()
            .iter()
            .map(|p| {
                let with_one = |x: Vertex| p.part_of(x) == p.part_of(1);
                match (with_one(2), with_one(3)) {
                    (false, false) => 0,
                    (false, true) => 1,
                    (true, true) => 2,
                    (true, false) => 3,
                }
            })
            .collect();
        let cert = RealizationCertificate { target: cycle(4), base, k: 2, iso };
        return if cert.verify() { Ok(cert) } else { Err(Error::CertificateMismatch("C_4".into())) };
    }
    if m % 2 == 1 {
        // matchings missing v and v + 2 are adjacent; stepping by 2 is a
        // single step after scaling by the inverse of 2 mod m
        let h = cycle(m);
        let half = (m + 1) / 2;
        return certify(cycle(m), h.complement(), (m + 1) / 2, |mm| match mm.unmatched()[..] {
            [v] => Some(v * half % m),
            _ => None,
        });
    }
    let n = m - 2;
    let h = ear_graph(n)?;
    let (u, w, v1, v2) = (EAR_U, EAR_W, ear_v(1), ear_v(2));
    // cycle order M_u, M_2, ..., M_{n-2}, M_w, M_u', M_{n-2}', ..., M_2', M_w',
    // each named by (unmatched vertex, partner of v_1)
    let mut order: Vec<(Vertex, Vertex)> = vec![(u, v2)];
    order.extend((2..=n - 2).step_by(2).map(|i| (ear_v(i), u)));
    order.push((w, u));
    order.push((u, w));
    order.extend((2..=n - 2).rev().step_by(2).map(|i| (ear_v(i), w)));
    order.push((w, v2));
    certify(cycle(m), h.complement(), m / 2, |mm| {
        let key = (*mm.unmatched().first()?, mm.partner(v1)?);
        order.iter().position(|&x| x == key)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    /// Vertices a, b, c, d, e = 0..5: the 4-cycle a-b-d-c plus d-e.
    fn kite() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 3), (3, 2), (2, 0), (3, 4)])
    }

    fn m(g: &Graph, edges: &[(Vertex, Vertex)]) -> Matching {
        Matching::new(g, edges.iter().copied()).unwrap()
    }

    #[test]
    fn matching_counts() {
        assert_eq!(enumerate_matchings(&cycle(5), 2).len(), 5);
        assert_eq!(enumerate_matchings(&path(3), 1).len(), 2);
        let g = kite();
        let ms = enumerate_matchings(&g, 2);
        let expected = vec![
            m(&g, &[(0, 1), (2, 3)]),
            m(&g, &[(0, 1), (3, 4)]),
            m(&g, &[(0, 2), (1, 3)]),
            m(&g, &[(0, 2), (3, 4)]),
        ];
        assert_eq!(ms, expected);
        assert_eq!(enumerate_matchings(&path(3), 0).len(), 3);
    }

    #[test]
    fn matching_validation() {
        let g = path(4);
        assert!(Matching::new(&g, [(0, 1), (1, 2)]).is_err());
        assert!(Matching::new(&g, [(0, 2)]).is_err());
        assert_eq!(m(&g, &[(2, 1)]).edges(), &[(1, 2)]);
    }

    #[test]
    fn kite_is_a_path() {
        let g = kite();
        let mg = build_matching_graph(&g, 2);
        assert!(is_isomorphic(&mg.graph, &path(4)));
        // {ab,cd} - {ab,de} - {ac,de} - {ac,bd}
        let ids: Vec<usize> = [
            m(&g, &[(0, 1), (2, 3)]),
            m(&g, &[(0, 1), (3, 4)]),
            m(&g, &[(0, 2), (3, 4)]),
            m(&g, &[(0, 2), (1, 3)]),
        ]
        .iter()
        .map(|x| mg.id_of(x).unwrap())
        .collect();
        for i in 0..3 {
            assert!(mg.graph.has_edge(ids[i], ids[i + 1]));
        }
        assert!(verify_phi_isomorphism(&g, 2).unwrap());
        assert_eq!(phi(&m(&g, &[(0, 1), (2, 3)]), &g, 2).unwrap().text(), "4|0,1|2,3");
    }

    #[test]
    fn odd_cycle_and_ear_graph() {
        assert!(is_isomorphic(&build_matching_graph(&cycle(7), 3).graph, &cycle(7)));
        assert!(is_isomorphic(&build_matching_graph(&ear_graph(6).unwrap(), 3).graph, &cycle(8)));
        assert!(verify_phi_isomorphism(&cycle(7), 3).unwrap());
        assert!(verify_phi_isomorphism(&ear_graph(6).unwrap(), 3).unwrap());
        assert_eq!(build_matching_graph(&ear_graph(6).unwrap(), 3).matchings.len(), 8);
    }

    #[test]
    fn phi_edge_cases() {
        let g = path(2);
        assert_eq!(phi(&m(&g, &[(0, 1)]), &g, 1).unwrap().text(), "0,1");
        let e = empty(3);
        assert_eq!(phi(&m(&e, &[]), &e, 0).unwrap().text(), "0|1|2");
        assert_eq!(phi(&m(&complete(3), &[]), &complete(3), 0), Err(Error::TrianglePresent));
        assert_eq!(verify_phi_isomorphism(&complete(3), 1), Err(Error::TrianglePresent));
    }

    #[test]
    fn adjacency_conditions_on_c5() {
        // v_1..v_5 are ids 0..4
        let g = cycle(5);
        let missing = |v: Vertex| matching_missing(&g, v).unwrap();
        let a = near_perfect_adjacent(&g, &missing(0), &missing(2)).unwrap();
        assert_eq!((a.restriction, a.exchange, a.local), (Some(1), Some(1), Some(1)));
        let b = near_perfect_adjacent(&g, &missing(0), &missing(1)).unwrap();
        assert_eq!((b.restriction, b.exchange, b.local), (None, None, None));
        assert!(near_perfect_adjacent(&g, &missing(0), &missing(0)).is_err());
        assert_eq!(near_perfect_adjacent(&path(4), &m(&path(4), &[(0, 1)]), &m(&path(4), &[(2, 3)])), Err(Error::NotNearPerfect));
    }

    #[test]
    fn perfect_matching_counts() {
        assert_eq!(unique_perfect_matching(&path(4)).unwrap().edges(), &[(0, 1), (2, 3)]);
        assert_eq!(perfect_matchings(&cycle(4)), PerfectMatchings::Several);
        assert_eq!(perfect_matchings(&path(3)), PerfectMatchings::Zero);
        assert_eq!(perfect_matchings(&Graph::new(0)), PerfectMatchings::Unique(m(&Graph::new(0), &[])));
    }

    #[test]
    fn joins() {
        assert!(is_isomorphic(&join_uniquely_unmatched(&path(3), 0, &path(3), 0).unwrap(), &path(5)));
        assert_eq!(join_uniquely_unmatched(&path(3), 1, &path(3), 0), Err(Error::NotUniquelyUnmatched(1)));
        let eight = join_uniquely_unmatched(&cycle(5), 0, &cycle(5), 0).unwrap();
        assert_eq!((eight.order(), eight.edge_count()), (9, 10));
        assert!(verify_join(&cycle(5), 0, &cycle(5), 0).unwrap());
        assert!(verify_join(&path(3), 2, &cycle(7), 4).unwrap());
    }

    #[test]
    fn tree_realizations() {
        let c = realize_tree(&path(2)).unwrap();
        assert_eq!((c.base.order(), c.k), (3, 2));
        assert!(is_isomorphic(&c.base, &path(3).complement()));
        let c = realize_tree(&star(3)).unwrap();
        assert_eq!((c.base.order(), c.k), (7, 4));
        let c = realize_tree(&path(5)).unwrap();
        assert!(is_isomorphic(&c.base, &path(9).complement()));
        assert_eq!(c.k, 5);
        assert!(c.verify());
        assert_eq!(realize_tree(&cycle(4)), Err(Error::NotATree));
    }

    #[test]
    fn cycle_realizations() {
        for m in 3..=9 {
            let c = realize_cycle(m).unwrap();
            assert!(c.verify(), "m = {m}");
        }
        let c7 = realize_cycle(7).unwrap();
        assert!(is_isomorphic(&c7.base, &cycle(7).complement()));
        assert_eq!(c7.k, 4);
        let c8 = realize_cycle(8).unwrap();
        assert!(is_isomorphic(&c8.base, &ear_graph(6).unwrap().complement()));
        assert_eq!(c8.k, 4);
        let c4 = realize_cycle(4).unwrap();
        assert_eq!((c4.base.edge_count(), c4.k), (1, 2));
        assert_eq!(realize_cycle(2), Err(Error::BadCycleLength(2)));
    }
}
