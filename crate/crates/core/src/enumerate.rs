//! Exhaustive generation of small graphs and free trees up to isomorphism.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{Graph, Vertex};

/// One representative per isomorphism class of graphs of order `n` satisfying
/// the hereditary predicate `keep`, canonically labelled and sorted by
/// canonical form.
///
/// Each class of order `n` contains a graph obtained from some class of order
/// `n - 1` by adding a vertex, so growing every representative by every
/// neighbourhood subset and deduplicating is exhaustive for hereditary
/// properties.
pub fn graphs_with(n: usize, keep: &dyn Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut layer: Vec<Graph> = vec![Graph::new(0)];
    for order in 1..=n {
        let mut next: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
        for g in &layer {
            let m = order - 1;
            for mask in 0..1usize << m {
                let mut h = Graph::new(order);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..m {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, m);
                    }
                }
                if keep(&h) {
                    next.insert(canonical_form(&h), ());
                }
            }
        }
        layer = next.into_keys().map(|f| f.to_graph()).collect();
    }
    layer
}

/// All graphs of order `n` up to isomorphism.
pub fn graphs(n: usize) -> Vec<Graph> {
    graphs_with(n, &|_| true)
}

/// All graphs of order `0..=max_n` up to isomorphism, by increasing order.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(graphs).collect()
}

pub fn triangle_free_graphs(n: usize) -> Vec<Graph> {
    graphs_with(n, &Graph::is_triangle_free)
}

/// Centres of a tree: the one or two vertices of minimum eccentricity.
fn tree_centers(t: &Graph) -> Vec<Vertex> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg = t.degrees();
    let mut leaves: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            for &u in t.neighbors(l) {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        leaves = next;
    }
    leaves.sort_unstable();
    leaves
}

fn rooted_code(t: &Graph, v: Vertex, parent: Option<Vertex>) -> String {
    let mut children: Vec<String> =
        t.neighbors(v).iter().filter(|&&u| Some(u) != parent).map(|&u| rooted_code(t, u, Some(v))).collect();
    children.sort();
    format!("({})", children.concat())
}

/// String invariant that is equal for two trees iff they are isomorphic.
pub fn tree_code(t: &Graph) -> String {
    tree_centers(t).into_iter().map(|c| rooted_code(t, c, None)).min().unwrap_or_default()
}

/// All free trees of order `n` up to isomorphism, sorted by [`tree_code`].
/// Trees of order `n` are grown from those of order `n - 1` by attaching a
/// leaf; every tree arises this way by deleting one of its leaves.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut layer: BTreeMap<String, Graph> = BTreeMap::new();
    layer.insert(tree_code(&Graph::new(1)), Graph::new(1));
    for order in 2..=n {
        let mut next = BTreeMap::new();
        for t in layer.values() {
            for v in 0..order - 1 {
                let mut s = Graph::new(order);
                for (a, b) in t.edges() {
                    s.add_edge(a, b);
                }
                s.add_edge(v, order - 1);
                next.entry(tree_code(&s)).or_insert(s);
            }
        }
        layer = next;
    }
    layer.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn triangle_free_counts() {
        // OEIS A006785
        let counts: Vec<usize> = (1..=7).map(|n| triangle_free_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 7, 14, 38, 107]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| free_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        for t in free_trees(7) {
            assert!(t.is_tree());
        }
    }

    #[test]
    fn trees_pairwise_non_isomorphic() {
        let ts = free_trees(8);
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                assert!(!is_isomorphic(&ts[i], &ts[j]));
            }
        }
    }
}
