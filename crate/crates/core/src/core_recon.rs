//! Recovering the core of `G` (the graph minus its universal vertices) from
//! the Bell multigraph `B̃_n(G)` with opaque vertex ids.
//!
//! The all-singleton partition `Q` is found, up to automorphism, as a
//! totally doubled vertex of maximum degree. Its neighbourhood is the line
//! graph of the complement of `G`, whose components are inverted one at a
//! time. A triangle component comes from either `K_3` or `K_{1,3}`; only the
//! first leaves its three vertices with a common neighbour besides `Q`.

use serde::Serialize;

use crate::bell::build_bell;
use crate::canon::{is_isomorphic, is_multigraph_isomorphic};
use crate::error::{Error, Result};
use crate::families::{complete, star};
use crate::graph::{Graph, Multigraph, Vertex};

fn adjacency(bm: &Multigraph) -> Vec<Vec<(Vertex, u32)>> {
    let mut adj = vec![Vec::new(); bm.order()];
    for ((u, v), m) in bm.edges() {
        adj[u].push((v, m));
        adj[v].push((u, m));
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    adj
}

/// Vertices all of whose incident edges have multiplicity 2, including
/// isolated vertices.
pub fn totally_doubled(bm: &Multigraph) -> Vec<Vertex> {
    let adj = adjacency(bm);
    (0..bm.order()).filter(|&v| adj[v].iter().all(|&(_, m)| m == 2)).collect()
}

/// Lowest id among the totally doubled vertices with the most distinct
/// neighbours.
pub fn select_singleton_candidate(bm: &Multigraph) -> Result<Vertex> {
    let adj = adjacency(bm);
    totally_doubled(bm)
        .into_iter()
        .min_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v))
        .ok_or_else(|| Error::NotABellMultigraph("no totally doubled vertex".into()))
}

/// Simple graph induced on the neighbours of `q`; vertex `i` is the `i`-th
/// neighbour in increasing id order. Returns the graph and those ids.
pub fn neighborhood_line_graph(bm: &Multigraph, q: Vertex) -> Result<(Graph, Vec<Vertex>)> {
    if q >= bm.order() {
        return Err(Error::IndexOutOfRange { index: q, order: bm.order() });
    }
    let simple = bm.to_simple();
    let ids = simple.neighbors(q).to_vec();
    Ok((simple.induced_subgraph(&ids), ids))
}

/// Root of one connected component of a line graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootRecovery {
    /// Vertices of the component, as ids in the input line graph.
    pub members: Vec<Vertex>,
    pub component: Graph,
    pub root: Graph,
    /// A triangle, whose root may be `K_3` or `K_{1,3}`.
    pub ambiguous: bool,
}

/// Krausz cover: cliques covering every edge exactly once with each vertex in
/// at most two of them. Larger cliques are tried first.
fn krausz_cover(l: &Graph) -> Option<Vec<Vec<Vertex>>> {
    let n = l.order();
    let edges = l.edges();
    let mut covered = vec![false; n * n];
    let mut count = vec![0usize; n];
    let mut cliques = Vec::new();

    fn subsets_forming_cliques(l: &Graph, cand: &[Vertex], covered: &[bool]) -> Vec<Vec<Vertex>> {
        let n = l.order();
        let mut out = Vec::new();
        fn grow(l: &Graph, n: usize, cand: &[Vertex], covered: &[bool], cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
            out.push(cur.clone());
            for (i, &x) in cand.iter().enumerate() {
                let next: Vec<Vertex> = cand[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&y| l.has_edge(x, y) && !covered[x * n + y])
                    .collect();
                cur.push(x);
                grow(l, n, &next, covered, cur, out);
                cur.pop();
            }
        }
        grow(l, n, cand, covered, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        out
    }

    fn go(
        l: &Graph,
        edges: &[(Vertex, Vertex)],
        covered: &mut Vec<bool>,
        count: &mut Vec<usize>,
        cliques: &mut Vec<Vec<Vertex>>,
    ) -> bool {
        let n = l.order();
        let Some(&(u, v)) = edges.iter().find(|&&(a, b)| !covered[a * n + b]) else {
            return true;
        };
        if count[u] >= 2 || count[v] >= 2 {
            return false;
        }
        let cand: Vec<Vertex> = l
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w != v && l.has_edge(v, w) && !covered[u * n + w] && !covered[v * n + w] && count[w] < 2)
            .collect();
        for extra in subsets_forming_cliques(l, &cand, covered) {
            let mut clique = vec![u, v];
            clique.extend(extra);
            let set = |covered: &mut Vec<bool>, val: bool| {
                for (i, &a) in clique.iter().enumerate() {
                    for &b in &clique[i + 1..] {
                        covered[a * n + b] = val;
                        covered[b * n + a] = val;
                    }
                }
            };
            set(covered, true);
            for &x in &clique {
                count[x] += 1;
            }
            cliques.push(clique.clone());
            if go(l, edges, covered, count, cliques) {
                return true;
            }
            cliques.pop();
            for &x in &clique {
                count[x] -= 1;
            }
            set(covered, false);
        }
        false
    }

    go(l, &edges, &mut covered, &mut count, &mut cliques).then_some(cliques)
}

/// Root graph of a connected line graph from a Krausz cover: one root vertex
/// per clique, plus one fresh vertex for each membership short of two.
fn root_from_cover(l: &Graph, cliques: &[Vec<Vertex>]) -> Graph {
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); l.order()];
    for (c, clique) in cliques.iter().enumerate() {
        for &x in clique {
            ends[x].push(c);
        }
    }
    let mut next = cliques.len();
    let mut root_edges = Vec::new();
    for e in &mut ends {
        while e.len() < 2 {
            e.push(next);
            next += 1;
        }
        root_edges.push((e[0], e[1]));
    }
    Graph::from_edges(next, root_edges)
}

/// Inverts the line graph `l` component by component.
pub fn root_graph(l: &Graph) -> Result<Vec<RootRecovery>> {
    l.components()
        .into_iter()
        .map(|members| {
            let component = l.induced_subgraph(&members);
            let cover = krausz_cover(&component)
                .ok_or_else(|| Error::NotALineGraph(format!("no Krausz cover for component {members:?}")))?;
            let root = root_from_cover(&component, &cover);
            if !is_isomorphic(&root.line_graph(), &component) {
                return Err(Error::NotALineGraph(format!("root of component {members:?} does not match")));
            }
            let ambiguous = component.order() == 3 && component.edge_count() == 3;
            Ok(RootRecovery { members, component, root, ambiguous })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TriangleRoot {
    K3,
    K13,
}

/// `K3` when the three Bell vertices have a common neighbour other than `q`.
pub fn disambiguate_triangle(bm: &Multigraph, q: Vertex, triangle: [Vertex; 3]) -> TriangleRoot {
    let simple = bm.to_simple();
    let shared = simple
        .neighbors(triangle[0])
        .iter()
        .any(|&x| x != q && simple.has_edge(x, triangle[1]) && simple.has_edge(x, triangle[2]));
    if shared {
        TriangleRoot::K3
    } else {
        TriangleRoot::K13
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentTrace {
    pub ambiguous: bool,
    pub resolved: Option<TriangleRoot>,
    pub root_order: usize,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreTrace {
    pub components: Vec<ComponentTrace>,
    pub line_graph_order: usize,
    pub q_id: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreReconstruction {
    pub core: Graph,
    pub trace: CoreTrace,
}

/// Reconstructs the core of `G` from `B̃_n(G)`. With `verify`, the Bell
/// multigraph of the result (with budget equal to its order) is rebuilt and
/// compared with the input.
pub fn reconstruct_core(bm: &Multigraph, verify: bool) -> Result<CoreReconstruction> {
    let wrap = |e: Error| Error::NotABellMultigraph(e.to_string());
    if bm.order() == 0 {
        return Err(Error::NotABellMultigraph("empty multigraph".into()));
    }
    let q = select_singleton_candidate(bm)?;
    let (l, ids) = neighborhood_line_graph(bm, q)?;
    let mut complement = Graph::new(0);
    let mut components = Vec::new();
    for rec in root_graph(&l).map_err(wrap)? {
        let mut resolved = None;
        let root = if rec.ambiguous {
            let t = [ids[rec.members[0]], ids[rec.members[1]], ids[rec.members[2]]];
            let r = disambiguate_triangle(bm, q, t);
            resolved = Some(r);
            match r {
                TriangleRoot::K3 => complete(3),
                TriangleRoot::K13 => star(3),
            }
        } else {
            rec.root
        };
        components.push(ComponentTrace {
            ambiguous: rec.ambiguous,
            resolved,
            root_order: root.order(),
            size: rec.members.len(),
        });
        complement = complement.disjoint_union(&root);
    }
    let core = complement.complement();
    if verify {
        let rebuilt = build_bell(&core, core.order()).to_multigraph();
        if !is_multigraph_isomorphic(&rebuilt, bm) {
            return Err(Error::NotABellMultigraph("rebuilt multigraph differs from the input".into()));
        }
    }
    Ok(CoreReconstruction { core, trace: CoreTrace { components, line_graph_order: l.order(), q_id: q } })
}
