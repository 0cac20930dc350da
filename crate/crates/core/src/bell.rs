//! Bell k-coloring graphs and multigraphs, and ordinary k-coloring graphs.

use std::collections::{BTreeMap, HashMap};

use crate::graph::{Graph, Multigraph, Vertex};
use crate::partition::{enumerate_stable_partitions, legal_moves, StablePartition};

/// Edge between Bell vertices `u < v` with the base vertices responsible for
/// it (one or two).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellEdge {
    pub u: usize,
    pub v: usize,
    pub witnesses: Vec<Vertex>,
}

#[derive(Debug, Clone)]
pub struct BellGraph {
    base: Graph,
    k: usize,
    vertices: Vec<StablePartition>,
    edges: Vec<BellEdge>,
    index: HashMap<StablePartition, usize>,
    adj: Vec<Vec<usize>>,
}

/// Builds `B_k(g)` with witness sets by generating the legal moves out of
/// every partition.
pub fn build_bell(g: &Graph, k: usize) -> BellGraph {
    let vertices = enumerate_stable_partitions(g, k);
    let index: HashMap<StablePartition, usize> =
        vertices.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mut by_pair: BTreeMap<(usize, usize), Vec<Vertex>> = BTreeMap::new();
    for (i, p) in vertices.iter().enumerate() {
        for (w, q) in legal_moves(p, g) {
            let j = index[&q];
            if i < j {
                by_pair.entry((i, j)).or_default().push(w);
            }
        }
    }
    let mut adj = vec![Vec::new(); vertices.len()];
    let edges = by_pair
        .into_iter()
        .map(|((u, v), witnesses)| {
            adj[u].push(v);
            adj[v].push(u);
            BellEdge { u, v, witnesses }
        })
        .collect();
    for a in &mut adj {
        a.sort_unstable();
    }
    BellGraph { base: g.clone(), k, vertices, edges, index, adj }
}

impl BellGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn budget(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[StablePartition] {
        &self.vertices
    }

    pub fn partition(&self, id: usize) -> &StablePartition {
        &self.vertices[id]
    }

    pub fn id_of(&self, p: &StablePartition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Edges sorted by endpoint pair.
    pub fn edges(&self) -> &[BellEdge] {
        &self.edges
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adj[id]
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Witness set of the edge `{a, b}`, empty when nonadjacent.
    pub fn witnesses(&self, a: usize, b: usize) -> &[Vertex] {
        let key = (a.min(b), a.max(b));
        match self.edges.binary_search_by(|e| (e.u, e.v).cmp(&key)) {
            Ok(i) => &self.edges[i].witnesses,
            Err(_) => &[],
        }
    }

    pub fn to_simple(&self) -> Graph {
        Graph::from_edges(self.order(), self.edges.iter().map(|e| (e.u, e.v)))
    }

    pub fn to_multigraph(&self) -> Multigraph {
        let mut m = Multigraph::new(self.order());
        for e in &self.edges {
            m.set_multiplicity(e.u, e.v, e.witnesses.len() as u32).expect("edge endpoints in range");
        }
        m
    }

    pub fn doubled_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.witnesses.len() == 2).count()
    }
}

/// The k-coloring graph `C_k(g)`: proper colorings `V -> {0..k-1}`, adjacent
/// when they differ at exactly one vertex. Colorings are numbered in
/// lexicographic order.
pub fn build_coloring_graph(g: &Graph, k: usize) -> Graph {
    let n = g.order();
    let mut colorings: Vec<Vec<usize>> = Vec::new();
    let mut c = vec![0; n];
    fn go(g: &Graph, k: usize, v: Vertex, c: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == g.order() {
            out.push(c.clone());
            return;
        }
        for col in 0..k {
            if g.neighbors(v).iter().all(|&u| u > v || c[u] != col) {
                c[v] = col;
                go(g, k, v + 1, c, out);
            }
        }
    }
    go(g, k, 0, &mut c, &mut colorings);
    let index: HashMap<&[usize], usize> = colorings.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut out = Graph::new(colorings.len());
    for (i, c) in colorings.iter().enumerate() {
        for v in 0..n {
            let mut d = c.clone();
            for col in c[v] + 1..k {
                if g.neighbors(v).iter().all(|&u| c[u] != col) {
                    d[v] = col;
                    out.add_edge(i, index[d.as_slice()]);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    /// Degree of each Bell vertex in the simple projection.
    pub degrees: Vec<usize>,
    /// Degrees sorted in nonincreasing order.
    pub sequence: Vec<usize>,
    pub edge_count: usize,
    pub max_degree_vertices: Vec<usize>,
}

pub fn degree_stats(b: &BellGraph) -> DegreeStats {
    let degrees: Vec<usize> = (0..b.order()).map(|i| b.adj[i].len()).collect();
    let mut sequence = degrees.clone();
    sequence.sort_unstable_by(|a, b| b.cmp(a));
    let max = sequence.first().copied().unwrap_or(0);
    DegreeStats {
        max_degree_vertices: (0..b.order()).filter(|&i| degrees[i] == max).collect(),
        degrees,
        sequence,
        edge_count: b.edges.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{is_isomorphic, is_multigraph_isomorphic};
    use crate::families::*;

    #[test]
    fn path_p4_gives_c4() {
        let b = build_bell(&path(4), 3);
        assert!(is_isomorphic(&b.to_simple(), &cycle(4)));
        assert_eq!(b.doubled_edge_count(), 2);
    }

    #[test]
    fn empty_three_gives_k5_minus_e() {
        let b = build_bell(&empty(3), 3);
        assert!(is_isomorphic(&b.to_simple(), &complete_minus_edge(5)));
        assert_eq!(b.edges().len(), 9);
        assert_eq!(degree_stats(&b).sequence, vec![4, 4, 4, 3, 3]);
    }

    #[test]
    fn claw_gives_k4() {
        let b = build_bell(&star(3), 3);
        assert!(is_isomorphic(&b.to_simple(), &complete(4)));
        let k3_k1 = build_bell(&complete(3).disjoint_union(&empty(1)), 4);
        assert!(is_isomorphic(&k3_k1.to_simple(), &complete(4)));
        assert!(is_isomorphic(&b.to_simple(), &k3_k1.to_simple()));
        assert!(!is_multigraph_isomorphic(&b.to_multigraph(), &k3_k1.to_multigraph()));
        assert!(is_multigraph_isomorphic(&b.to_multigraph(), &build_bell(&empty(3), 2).to_multigraph()));
    }

    #[test]
    fn multiplicities() {
        let m = build_bell(&empty(2), 2).to_multigraph();
        assert_eq!(m.pair_count(), 1);
        assert_eq!(m.multiplicity(0, 1), 2);
        let b = build_bell(&complete(3).disjoint_union(&empty(1)), 4);
        let g = b.base().clone();
        let singletons = StablePartition::new(&g, 4, (0..4).map(|v| vec![v]).collect()).unwrap();
        let q = b.id_of(&singletons).unwrap();
        assert_eq!(b.neighbors(q).len(), 3);
        for &r in b.neighbors(q) {
            assert_eq!(b.witnesses(q, r).len(), 2);
        }
        assert_eq!(b.to_simple().edge_count(), b.edges().len());
    }

    #[test]
    fn witnesses_match_partition_core() {
        let g = cycle(5);
        let b = build_bell(&g, 4);
        for e in b.edges() {
            assert_eq!(e.witnesses, crate::partition::witnesses(b.partition(e.u), b.partition(e.v)));
        }
        let edges = b.edges().len();
        let mut pairs = 0;
        for i in 0..b.order() {
            for j in i + 1..b.order() {
                if !crate::partition::witnesses(b.partition(i), b.partition(j)).is_empty() {
                    pairs += 1;
                }
            }
        }
        assert_eq!(pairs, edges);
    }

    #[test]
    fn coloring_graphs() {
        assert!(is_isomorphic(&build_coloring_graph(&empty(2), 2), &cycle(4)));
        assert!(is_isomorphic(&build_coloring_graph(&empty(1), 3), &complete(3)));
        let g = path(3);
        let b = build_bell(&g.disjoint_union(&complete(3)), 3);
        assert!(is_isomorphic(&b.to_simple(), &build_coloring_graph(&g, 3)));
        let b4 = build_bell(&complete(2).disjoint_union(&empty(2)), 2);
        assert!(is_isomorphic(&b4.to_simple(), &cycle(4)));
    }

    #[test]
    fn star_is_regular() {
        let stats = degree_stats(&build_bell(&star(5), 3));
        assert_eq!(stats.degrees.len(), 16);
        assert!(stats.degrees.iter().all(|&d| d == 5));
        assert_eq!(degree_stats(&build_bell(&path(4), 3)).sequence, vec![2, 2, 2, 2]);
    }

    #[test]
    fn trivial_cases() {
        let b = build_bell(&complete(4), 4);
        assert_eq!((b.order(), b.edges().len()), (1, 0));
        assert_eq!(build_bell(&Graph::new(0), 1).order(), 1);
        assert_eq!(build_bell(&complete(3), 2).order(), 0);
    }
}
