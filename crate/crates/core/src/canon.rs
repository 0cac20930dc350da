//! Isomorphism testing and canonical labeling by individualization-refinement.
//!
//! Graphs are handled as vertex-colored graphs with positive integer edge
//! labels (a simple graph has every label equal to 1, a multigraph uses its
//! multiplicities). Color refinement computes the coarsest equitable partition
//! that respects labels; the search individualizes one vertex of the first
//! smallest non-singleton cell at a time. The search is exhaustive up to two
//! sound prunings: branches whose refinement trace is lexicographically worse
//! than the best leaf found so far, and children in the same orbit under
//! automorphisms already discovered that fix the current prefix.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::graph::{Graph, Multigraph, Vertex};

/// Total-order comparable encoding of an isomorphism class: the edge list
/// (with labels) and vertex colors after applying the canonical labeling.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub vertex_colors: Vec<u32>,
    pub edges: Vec<(Vertex, Vertex, u32)>,
}

impl CanonicalForm {
    /// The canonically labelled simple graph (labels and colors dropped).
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.order, self.edges.iter().map(|&(u, v, _)| (u, v)))
    }
}

/// Vertex-colored graph with labeled edges.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    n: usize,
    colors: Vec<u32>,
    adj: Vec<Vec<(Vertex, u32)>>,
    matrix: Vec<u32>,
}

impl ColoredGraph {
    pub fn new(n: usize, colors: Vec<u32>, edges: impl IntoIterator<Item = (Vertex, Vertex, u32)>) -> Self {
        assert_eq!(colors.len(), n);
        let mut adj = vec![Vec::new(); n];
        let mut matrix = vec![0; n * n];
        for (u, v, l) in edges {
            assert!(u != v && l > 0);
            if matrix[u * n + v] == 0 {
                adj[u].push((v, l));
                adj[v].push((u, l));
            }
            matrix[u * n + v] = l;
            matrix[v * n + u] = l;
        }
        ColoredGraph { n, colors, adj, matrix }
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self::new(g.order(), vec![0; g.order()], g.edges().into_iter().map(|(u, v)| (u, v, 1)))
    }

    pub fn from_multigraph(m: &Multigraph) -> Self {
        Self::new(m.order(), vec![0; m.order()], m.edges().map(|((u, v), l)| (u, v, l)))
    }

    pub fn with_colors(mut self, colors: Vec<u32>) -> Self {
        assert_eq!(colors.len(), self.n);
        self.colors = colors;
        self
    }

    fn label(&self, u: Vertex, v: Vertex) -> u32 {
        self.matrix[u * self.n + v]
    }

    /// Cheap invariant used to reject obvious non-isomorphic pairs.
    fn fingerprint(&self) -> (usize, Vec<u32>, Vec<Vec<u32>>) {
        let mut colors = self.colors.clone();
        colors.sort_unstable();
        let mut rows: Vec<Vec<u32>> = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, nb)| {
                let mut r: Vec<u32> = nb.iter().map(|&(_, l)| l).collect();
                r.sort_unstable();
                r.insert(0, self.colors[v]);
                r
            })
            .collect();
        rows.sort();
        (self.n, colors, rows)
    }
}

/// Refines `colors` to the coarsest equitable partition below it. Colors are
/// renamed to dense ranks so that equal inputs on isomorphic graphs give
/// corresponding outputs. Returns a hash of the refinement history.
fn refine(g: &ColoredGraph, colors: &mut [u32]) -> u64 {
    let n = g.n;
    let mut hasher = DefaultHasher::new();
    let mut cells = normalize(colors);
    let mut sigs: Vec<(u32, Vec<(u32, u32)>, Vertex)> = Vec::with_capacity(n);
    loop {
        sigs.clear();
        for v in 0..n {
            let mut s: Vec<(u32, u32)> = g.adj[v].iter().map(|&(w, l)| (colors[w], l)).collect();
            s.sort_unstable();
            sigs.push((colors[v], s, v));
        }
        sigs.sort_unstable();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            (sigs[i].0, &sigs[i].1).hash(&mut hasher);
            colors[sigs[i].2] = rank;
        }
        let new_cells = if n == 0 { 0 } else { rank as usize + 1 };
        if new_cells == cells {
            break;
        }
        cells = new_cells;
    }
    hasher.finish()
}

/// Renames colors to dense ranks preserving order; returns the cell count.
fn normalize(colors: &mut [u32]) -> usize {
    let mut distinct = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).unwrap() as u32;
    }
    distinct.len()
}

fn individualize(colors: &[u32], v: Vertex) -> Vec<u32> {
    let cv = colors[v];
    colors
        .iter()
        .enumerate()
        .map(|(x, &c)| 2 * c + u32::from(c == cv && x != v))
        .collect()
}

/// First smallest non-singleton cell, or `None` when the coloring is discrete.
fn target_cell(colors: &[u32]) -> Option<Vec<Vertex>> {
    let k = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut size = vec![0usize; k];
    for &c in colors {
        size[c as usize] += 1;
    }
    let best = (0..k).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c))?;
    Some((0..colors.len()).filter(|&v| colors[v] as usize == best).collect())
}

struct Leaf {
    trace: Vec<u64>,
    form: Vec<u32>,
    /// vertex -> canonical label
    labeling: Vec<Vertex>,
}

struct CanonSearch<'a> {
    g: &'a ColoredGraph,
    best: Option<Leaf>,
    autos: Vec<Vec<Vertex>>,
}

impl<'a> CanonSearch<'a> {
    fn leaf_form(&self, labeling: &[Vertex]) -> Vec<u32> {
        let n = self.g.n;
        let mut inv = vec![0; n];
        for (v, &l) in labeling.iter().enumerate() {
            inv[l] = v;
        }
        let mut form = Vec::with_capacity(n + n * n.saturating_sub(1) / 2);
        form.extend(inv.iter().map(|&v| self.g.colors[v]));
        for j in 1..n {
            for i in 0..j {
                form.push(self.g.label(inv[i], inv[j]));
            }
        }
        form
    }

    fn dfs(&mut self, colors: Vec<u32>, trace: &mut Vec<u64>, prefix: &mut Vec<Vertex>) {
        if let Some(best) = &self.best {
            let k = trace.len().min(best.trace.len());
            if trace[..k] < best.trace[..k] {
                return;
            }
        }
        let Some(cell) = target_cell(&colors) else {
            let labeling: Vec<Vertex> = colors.iter().map(|&c| c as usize).collect();
            let form = self.leaf_form(&labeling);
            match &self.best {
                None => self.best = Some(Leaf { trace: trace.clone(), form, labeling }),
                Some(best) => match trace[..].cmp(&best.trace[..]).then_with(|| best.form.cmp(&form)) {
                    Ordering::Greater => {
                        self.best = Some(Leaf { trace: trace.clone(), form, labeling })
                    }
                    Ordering::Equal => {
                        // same form: labeling^-1 . best gives an automorphism
                        let mut inv = vec![0; labeling.len()];
                        for (v, &l) in best.labeling.iter().enumerate() {
                            inv[l] = v;
                        }
                        let auto: Vec<Vertex> = labeling.iter().map(|&l| inv[l]).collect();
                        if auto.iter().enumerate().any(|(i, &a)| i != a) {
                            self.autos.push(auto);
                        }
                    }
                    Ordering::Less => {}
                },
            }
            return;
        };
        let mut tried: Vec<Vertex> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.same_orbit(prefix, v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child = individualize(&colors, v);
            let h = refine(self.g, &mut child);
            trace.push(h);
            prefix.push(v);
            self.dfs(child, trace, prefix);
            prefix.pop();
            trace.pop();
        }
    }

    /// Is `v` in the orbit of some vertex in `tried` under the group generated
    /// by known automorphisms fixing `prefix` pointwise?
    fn same_orbit(&self, prefix: &[Vertex], v: Vertex, tried: &[Vertex]) -> bool {
        let n = self.g.n;
        let mut parent: Vec<Vertex> = (0..n).collect();
        fn find(p: &mut [Vertex], mut x: Vertex) -> Vertex {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().all(|&x| a[x] == x) {
                any = true;
                for x in 0..n {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }
}

/// Canonical labeling of a colored graph: returns the form and the map
/// vertex -> canonical label.
pub fn canonical_labeling(g: &ColoredGraph) -> (CanonicalForm, Vec<Vertex>) {
    let mut colors = g.colors.clone();
    let h = refine(g, &mut colors);
    let mut search = CanonSearch { g, best: None, autos: Vec::new() };
    search.dfs(colors, &mut vec![h], &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    let n = g.n;
    let mut inv = vec![0; n];
    for (v, &l) in best.labeling.iter().enumerate() {
        inv[l] = v;
    }
    let vertex_colors = inv.iter().map(|&v| g.colors[v]).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let l = g.label(inv[i], inv[j]);
            if l > 0 {
                edges.push((i, j, l));
            }
        }
    }
    (CanonicalForm { order: n, vertex_colors, edges }, best.labeling)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(&ColoredGraph::from_graph(g)).0
}

pub fn multigraph_canonical_form(m: &Multigraph) -> CanonicalForm {
    canonical_labeling(&ColoredGraph::from_multigraph(m)).0
}

/// Searches for an isomorphism `g -> h`, returned as `map[v_in_g] = v_in_h`.
///
/// The branch in `g` is fixed at every level while all candidates in `h` are
/// tried, so a mapping is found whenever one exists.
pub fn find_colored_isomorphism(g: &ColoredGraph, h: &ColoredGraph) -> Option<Vec<Vertex>> {
    if g.fingerprint() != h.fingerprint() {
        return None;
    }
    let mut cg = g.colors.clone();
    let mut ch = h.colors.clone();
    if refine(g, &mut cg) != refine(h, &mut ch) {
        return None;
    }
    iso_dfs(g, h, cg, ch)
}

fn cell_sizes(colors: &[u32]) -> Vec<usize> {
    let k = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut size = vec![0usize; k];
    for &c in colors {
        size[c as usize] += 1;
    }
    size
}

fn iso_dfs(g: &ColoredGraph, h: &ColoredGraph, cg: Vec<u32>, ch: Vec<u32>) -> Option<Vec<Vertex>> {
    if cell_sizes(&cg) != cell_sizes(&ch) {
        return None;
    }
    match target_cell(&cg) {
        None => {
            let n = g.n;
            let mut by_color = vec![0; n];
            for (v, &c) in ch.iter().enumerate() {
                by_color[c as usize] = v;
            }
            let map: Vec<Vertex> = cg.iter().map(|&c| by_color[c as usize]).collect();
            let ok = (0..n).all(|v| g.colors[v] == h.colors[map[v]])
                && (0..n).all(|u| g.adj[u].iter().all(|&(w, l)| h.label(map[u], map[w]) == l));
            ok.then_some(map)
        }
        Some(cell) => {
            let vg = cell[0];
            let color = cg[vg];
            let mut child_g = individualize(&cg, vg);
            let tg = refine(g, &mut child_g);
            for vh in (0..h.n).filter(|&x| ch[x] == color) {
                let mut child_h = individualize(&ch, vh);
                if refine(h, &mut child_h) != tg {
                    continue;
                }
                if let Some(m) = iso_dfs(g, h, child_g.clone(), child_h) {
                    return Some(m);
                }
            }
            None
        }
    }
}

pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<Vertex>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    find_colored_isomorphism(&ColoredGraph::from_graph(g), &ColoredGraph::from_graph(h))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

pub fn is_multigraph_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.order() == b.order()
        && a.pair_count() == b.pair_count()
        && find_colored_isomorphism(&ColoredGraph::from_multigraph(a), &ColoredGraph::from_multigraph(b))
            .is_some()
}

/// Checks that `map` is an isomorphism `g -> h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[Vertex]) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() || map.len() != g.order() {
        return false;
    }
    let mut seen = vec![false; h.order()];
    for &m in map {
        if m >= h.order() || std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    g.edges().into_iter().all(|(u, v)| h.has_edge(map[u], map[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn cycle_vs_path() {
        assert!(!is_isomorphic(&cycle(6), &path(6)));
        assert_ne!(canonical_form(&cycle(6)), canonical_form(&path(6)));
    }

    #[test]
    fn p4_self_complementary() {
        assert!(is_isomorphic(&path(4), &path(4).complement()));
        assert_eq!(canonical_form(&path(4)), canonical_form(&path(4).complement()));
        assert!(is_isomorphic(&cycle(5), &cycle(5).complement()));
    }

    #[test]
    fn line_graphs_of_triangle_and_claw() {
        assert!(is_isomorphic(&complete(3).line_graph(), &star(3).line_graph()));
        assert!(is_isomorphic(&path(4).line_graph(), &path(3)));
    }

    #[test]
    fn regular_non_isomorphic() {
        // C6 vs two triangles: same degree sequence, refinement cannot split
        let two_triangles = complete(3).disjoint_union(&complete(3));
        assert!(!is_isomorphic(&cycle(6), &two_triangles));
        assert_ne!(canonical_form(&cycle(6)), canonical_form(&two_triangles));
    }

    #[test]
    fn isomorphism_is_returned() {
        let g = cycle(7);
        let perm = [3, 0, 6, 1, 5, 2, 4];
        let h = g.permuted(&perm);
        let map = find_isomorphism(&g, &h).unwrap();
        assert!(is_isomorphism(&g, &h, &map));
    }

    #[test]
    fn multigraph_multiplicities_matter() {
        let mut a = Multigraph::new(2);
        a.set_multiplicity(0, 1, 2).unwrap();
        let mut b = Multigraph::new(2);
        b.set_multiplicity(0, 1, 1).unwrap();
        assert!(!is_multigraph_isomorphic(&a, &b));
        assert!(is_multigraph_isomorphic(&a, &a.clone()));
        assert_ne!(multigraph_canonical_form(&a), multigraph_canonical_form(&b));
    }

    #[test]
    fn petersen_symmetry() {
        let mut p = Graph::new(10);
        for i in 0..5 {
            p.add_edge(i, (i + 1) % 5);
            p.add_edge(i, i + 5);
            p.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        let perm = [9, 3, 7, 1, 0, 5, 2, 8, 6, 4];
        assert_eq!(canonical_form(&p), canonical_form(&p.permuted(&perm)));
        assert!(is_isomorphic(&p, &p.permuted(&perm)));
    }
}
