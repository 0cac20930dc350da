//! Standard graph families with fixed vertex numbering.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Path on `n` vertices, `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(0, n - 1);
    g
}

/// Star `K_{1,m}` with center 0.
pub fn star(m: usize) -> Graph {
    Graph::from_edges(m + 1, (1..=m).map(|i| (0, i)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

/// `K_n - e` for `n >= 2`, missing the edge `{0, 1}`.
pub fn complete_minus_edge(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&e| e != (0, 1)))
}

/// Hypercube `Q_d` on bit strings `0..2^d`.
pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    Graph::from_edges(n, (0..n).flat_map(|x| (0..d).map(move |i| (x, x ^ 1 << i))).filter(|&(x, y)| x < y))
}

/// Double broom `B(3, a, b)`: path `u - v - w` (ids 0, 1, 2) with `a` leaves on
/// `u` (ids `3..3+a`) and `b` leaves on `w` (the rest).
pub fn double_broom(a: usize, b: usize) -> Result<Graph> {
    if a < b {
        return Err(Error::BadFamilyParams(format!("double_broom needs a >= b, got ({a}, {b})")));
    }
    let mut g = Graph::new(3 + a + b);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    for i in 0..a {
        g.add_edge(0, 3 + i);
    }
    for i in 0..b {
        g.add_edge(2, 3 + a + i);
    }
    Ok(g)
}

/// Id of `u` in [`ear_graph`].
pub const EAR_U: usize = 0;
/// Id of `w` in [`ear_graph`].
pub const EAR_W: usize = 1;

/// Id of `v_i` (`1 <= i <= n-1`) in [`ear_graph`].
pub fn ear_v(i: usize) -> usize {
    1 + i
}

/// Ear graph `G_n` for even `n >= 4`: the path `v_1 ... v_{n-1}` plus two
/// vertices `u`, `w` each joined to `v_1` and `v_{n-1}`. Order `n + 1`.
pub fn ear_graph(n: usize) -> Result<Graph> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::BadFamilyParams(format!("ear_graph needs even n >= 4, got {n}")));
    }
    let mut g = Graph::new(n + 1);
    for i in 1..n - 1 {
        g.add_edge(ear_v(i), ear_v(i + 1));
    }
    for x in [EAR_U, EAR_W] {
        g.add_edge(x, ear_v(1));
        g.add_edge(x, ear_v(n - 1));
    }
    Ok(g)
}

/// Looks up a family by name. Recognised names: `path`, `cycle`, `star`,
/// `complete`, `empty`, `double_broom`, `ear`.
pub fn family(name: &str, params: &[usize]) -> Result<Graph> {
    let want = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::BadFamilyParams(format!("{name} takes {k} parameter(s)")))
        }
    };
    match name {
        "path" => want(1).map(|_| path(params[0])),
        "cycle" => {
            want(1)?;
            if params[0] < 3 {
                return Err(Error::BadFamilyParams("cycle needs n >= 3".into()));
            }
            Ok(cycle(params[0]))
        }
        "star" => want(1).map(|_| star(params[0])),
        "complete" => want(1).map(|_| complete(params[0])),
        "empty" => want(1).map(|_| empty(params[0])),
        "double_broom" => {
            want(2)?;
            double_broom(params[0], params[1])
        }
        "ear" => {
            want(1)?;
            ear_graph(params[0])
        }
        _ => Err(Error::BadFamilyParams(format!("unknown family {name}"))),
    }
}
