//! Simple graphs and multigraphs on dense vertex ids `0..n`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Finite simple undirected graph.
///
/// Adjacency lists are kept sorted and deduplicated, so two graphs compare
/// equal exactly when they have the same order and edge set.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Panics on loops or out-of-range ids;
    /// use [`Graph::try_from_edges`] for untrusted input.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::try_from_edges(n, edges).expect("invalid edge list")
    }

    pub fn try_from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, order: n });
            }
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at {u}")));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order());
        Graph::from_edges(self.order(), self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Subgraph induced by `keep`; vertex `keep[i]` becomes `i`.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// `G - v`, with ids above `v` shifted down by one.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<_> = self.vertices().filter(|&x| x != v).collect();
        Ok(self.induced_subgraph(&keep))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.order() {
            Err(Error::IndexOutOfRange { index: v, order: self.order() })
        } else {
            Ok(())
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// `self ⊔ other`; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let mut g = Graph::new(off + other.order());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }

    /// Quotient of `self ⊔ other` identifying `u ∈ self` with `v ∈ other`.
    ///
    /// The merged vertex keeps id `u`; vertices of `other` other than `v` are
    /// appended after `self` in increasing order.
    pub fn identify_vertices(&self, u: Vertex, other: &Graph, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let off = self.order();
        let map = |x: Vertex| -> Vertex {
            match x.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => off + x,
                std::cmp::Ordering::Greater => off + x - 1,
            }
        };
        let mut g = Graph::new(self.order() + other.order() - 1);
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        for (a, b) in other.edges() {
            g.add_edge(map(a), map(b));
        }
        Ok(g)
    }

    /// Replaces each edge `{u, v}` by a path `u - x - v` through a new vertex.
    /// New vertices get ids `n..n+|E|` in edge order.
    pub fn subdivide_each_edge(&self) -> Graph {
        let edges = self.edges();
        let n = self.order();
        let mut g = Graph::new(n + edges.len());
        for (i, (u, v)) in edges.into_iter().enumerate() {
            g.add_edge(u, n + i);
            g.add_edge(n + i, v);
        }
        g
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut g = Graph::new(edges.len());
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edge_count() + 1 == self.order() && self.is_connected()
    }

    pub fn is_triangle_free(&self) -> bool {
        for (u, v) in self.edges() {
            if self.adj[u].iter().any(|w| self.has_edge(v, *w)) {
                return false;
            }
        }
        true
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<Vertex> {
        let n = self.order();
        self.vertices().filter(|&v| self.degree(v) + 1 == n).collect()
    }

    /// Induced subgraph on the non-universal vertices.
    pub fn core(&self) -> Graph {
        let n = self.order();
        let keep: Vec<_> = self.vertices().filter(|&v| self.degree(v) + 1 != n).collect();
        self.induced_subgraph(&keep)
    }

    /// Bipartition `(side_a, side_b)` by BFS 2-coloring, or `None` if not bipartite.
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        let a = self.vertices().filter(|&v| side[v] == 0).collect();
        let b = self.vertices().filter(|&v| side[v] == 1).collect();
        Some((a, b))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// Finite multigraph without loops; each present pair carries a positive multiplicity.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Multigraph {
    n: usize,
    mult: BTreeMap<(Vertex, Vertex), u32>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, mult: BTreeMap::new() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Sets the multiplicity of `{u, v}`; zero removes the pair.
    pub fn set_multiplicity(&mut self, u: Vertex, v: Vertex, m: u32) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::IndexOutOfRange { index: x, order: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at {u}")));
        }
        let key = (u.min(v), u.max(v));
        if m == 0 {
            self.mult.remove(&key);
        } else {
            self.mult.insert(key, m);
        }
        Ok(())
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> u32 {
        self.mult.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// `((u, v), multiplicity)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = ((Vertex, Vertex), u32)> + '_ {
        self.mult.iter().map(|(&k, &m)| (k, m))
    }

    pub fn pair_count(&self) -> usize {
        self.mult.len()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.mult.values().copied().max().unwrap_or(0)
    }

    /// Underlying simple graph.
    pub fn to_simple(&self) -> Graph {
        Graph::from_edges(self.n, self.mult.keys().copied())
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges={:?})", self.n, self.mult)
    }
}
