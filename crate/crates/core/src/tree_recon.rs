//! Recovering a tree from the simple graph `B_3(T)`.
//!
//! `B_3(T)` has `2^(n-2)` vertices, which fixes `n`. For `n >= 6` the degree
//! sequence separates three cases. Stars give a regular graph. Double brooms
//! have two or more vertices of maximum degree `n - 1`, and their edge count
//! determines the broom. Every other tree has a unique vertex `Z` of degree
//! `n` (the bipartition), and two neighbours of `Z` lack a second common
//! neighbour exactly when the corresponding tree vertices are adjacent.

use serde::Serialize;

use crate::bell::build_bell;
use crate::canon::is_isomorphic;
use crate::enumerate::free_trees;
use crate::error::{Error, Result};
use crate::families::{double_broom, star};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum TreeClass {
    /// Order at most 5, settled by comparing against every tree.
    Small { n: usize },
    Star { n: usize },
    DoubleBroom { n: usize, a: usize, b: usize },
    Generic { n: usize, z_id: usize },
}

impl TreeClass {
    pub fn order(&self) -> usize {
        match *self {
            TreeClass::Small { n } | TreeClass::Star { n } => n,
            TreeClass::DoubleBroom { n, .. } | TreeClass::Generic { n, .. } => n,
        }
    }
}

fn not_bell(msg: impl Into<String>) -> Error {
    Error::NotABellTreeGraph(msg.into())
}

/// Tree order implied by `|V(B_3(T))| = 2^(n-2)`. A single vertex is read as
/// `n = 2`.
pub fn inferred_order(b: &Graph) -> Result<usize> {
    let v = b.order();
    if v == 0 || !v.is_power_of_two() {
        return Err(Error::NotPowerOfTwoOrder(v));
    }
    Ok(v.trailing_zeros() as usize + 2)
}

/// `|E(B_3(B(3, a, b)))|` for `a + b >= 2`. At `a + b = 1` the two parts of
/// `B_2(2K_1)` are joined by a single simple edge and the count is one less.
pub fn double_broom_edge_count(a: usize, b: usize) -> usize {
    let s = a + b;
    let base = if s == 0 { 0 } else { (2 * s + 1) << (s - 1) };
    base + (1 << a) + (1 << b) - 1
}

/// The `(a, b)` with `a >= b >= 0`, `a + b = n - 3` whose Bell graph has
/// `edge_count` edges.
pub fn solve_double_broom(edge_count: usize, n: usize) -> Result<(usize, usize)> {
    if n < 4 {
        return Err(Error::NoBroomSolution { edges: edge_count, n });
    }
    let s = n - 3;
    (0..=s / 2)
        .map(|b| (s - b, b))
        .find(|&(a, b)| double_broom_edge_count(a, b) == edge_count)
        .ok_or(Error::NoBroomSolution { edges: edge_count, n })
}

pub fn classify_tree_type(b: &Graph) -> Result<TreeClass> {
    let n = inferred_order(b)?;
    if n <= 5 {
        return Ok(TreeClass::Small { n });
    }
    let mut degrees = b.degrees();
    degrees.sort_unstable_by(|x, y| y.cmp(x));
    let (d1, d2, dmin) = (degrees[0], degrees[1], degrees[degrees.len() - 1]);
    if d1 == dmin {
        if d1 != n - 1 {
            return Err(not_bell(format!("regular of degree {d1}, expected {}", n - 1)));
        }
        return Ok(TreeClass::Star { n });
    }
    if d1 == d2 {
        let (a, bb) = solve_double_broom(b.edge_count(), n)?;
        return Ok(TreeClass::DoubleBroom { n, a, b: bb });
    }
    let z_id = (0..b.order()).find(|&v| b.degree(v) == d1).expect("maximum is attained");
    Ok(TreeClass::Generic { n, z_id })
}

/// The tree on `N(z)`: neighbours `Z_u`, `Z_v` are adjacent when their only
/// common neighbour is `z`. Vertex `i` of the result is the `i`-th neighbour
/// of `z` in increasing id order.
pub fn generic_adjacency(b: &Graph, z: Vertex) -> Result<Graph> {
    b.check_vertex(z)?;
    let nz = b.neighbors(z);
    let mut t = Graph::new(nz.len());
    for i in 0..nz.len() {
        for j in i + 1..nz.len() {
            let shared = b.neighbors(nz[i]).iter().any(|&x| x != z && b.has_edge(x, nz[j]));
            if !shared {
                t.add_edge(i, j);
            }
        }
    }
    if !t.is_tree() {
        return Err(Error::NotATreeResult(format!(
            "{} vertices and {} edges on the neighbourhood of {z}",
            t.order(),
            t.edge_count()
        )));
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeReconstruction {
    pub tree: Graph,
    pub class: TreeClass,
}

/// Finds a tree `T` with `B_3(T)` isomorphic to `b`. With `verify`, the
/// Bell graph of the answer is rebuilt and compared with `b`.
pub fn reconstruct_tree(b: &Graph, verify: bool) -> Result<TreeReconstruction> {
    let class = classify_tree_type(b)?;
    let tree = match class {
        TreeClass::Small { n } => {
            return free_trees(n)
                .into_iter()
                .find(|t| is_isomorphic(&build_bell(t, 3).to_simple(), b))
                .map(|tree| TreeReconstruction { tree, class })
                .ok_or_else(|| not_bell(format!("no tree of order {n} matches")));
        }
        TreeClass::Star { n } => star(n - 1),
        TreeClass::DoubleBroom { a, b: bb, .. } => double_broom(a, bb)?,
        TreeClass::Generic { n, z_id } => {
            if b.degree(z_id) != n {
                return Err(not_bell(format!("unique maximum degree {} is not {n}", b.degree(z_id))));
            }
            generic_adjacency(b, z_id)?
        }
    };
    if verify && !is_isomorphic(&build_bell(&tree, 3).to_simple(), b) {
        return Err(not_bell("rebuilt Bell graph differs from the input"));
    }
    Ok(TreeReconstruction { tree, class })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn b3(t: &Graph) -> Graph {
        build_bell(t, 3).to_simple()
    }

    /// Spider with three legs of length two around centre 0.
    fn spider() -> Graph {
        Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    }

    #[test]
    fn classes() {
        assert_eq!(classify_tree_type(&b3(&star(6))).unwrap(), TreeClass::Star { n: 7 });
        assert_eq!(classify_tree_type(&b3(&double_broom(2, 2).unwrap())).unwrap(), TreeClass::DoubleBroom { n: 7, a: 2, b: 2 });
        assert!(matches!(classify_tree_type(&b3(&path(7))).unwrap(), TreeClass::Generic { n: 7, .. }));
        assert_eq!(classify_tree_type(&cycle(6)), Err(Error::NotPowerOfTwoOrder(6)));
    }

    #[test]
    fn broom_formula() {
        assert_eq!(solve_double_broom(79, 7).unwrap(), (2, 2));
        assert_eq!(solve_double_broom(81, 7).unwrap(), (3, 1));
        assert_eq!(solve_double_broom(80, 7), Err(Error::NoBroomSolution { edges: 80, n: 7 }));
        assert_eq!(double_broom_edge_count(2, 2), 79);
        assert_eq!(b3(&double_broom(3, 1).unwrap()).edge_count(), 81);
        assert_eq!(b3(&double_broom(2, 2).unwrap()).edge_count(), 79);
        assert_eq!(b3(&double_broom(4, 0).unwrap()).edge_count(), double_broom_edge_count(4, 0));
    }

    #[test]
    fn generic_round_trips() {
        for t in [path(7), spider(), path(8)] {
            let r = reconstruct_tree(&b3(&t), true).unwrap();
            assert!(is_isomorphic(&r.tree, &t));
        }
        let b = b3(&path(7));
        let TreeClass::Generic { z_id, .. } = classify_tree_type(&b).unwrap() else { panic!() };
        assert!(is_isomorphic(&generic_adjacency(&b, z_id).unwrap(), &path(7)));
    }

    #[test]
    fn other_round_trips() {
        assert!(is_isomorphic(&reconstruct_tree(&b3(&star(5)), true).unwrap().tree, &star(5)));
        let broom = double_broom(3, 1).unwrap();
        assert!(is_isomorphic(&reconstruct_tree(&b3(&broom), true).unwrap().tree, &broom));
        let p4 = reconstruct_tree(&cycle(4), false).unwrap();
        assert!(is_isomorphic(&p4.tree, &path(4)));
        assert_eq!(p4.class, TreeClass::Small { n: 4 });
        assert_eq!(reconstruct_tree(&Graph::new(1), false).unwrap().tree.order(), 2);
    }

    #[test]
    fn rejects_non_bell_inputs() {
        assert!(reconstruct_tree(&path(4), false).is_err());
        assert!(matches!(reconstruct_tree(&complete(8), true), Err(Error::NotABellTreeGraph(_))));
        assert!(generic_adjacency(&complete(5), 0).is_err());
    }
}
