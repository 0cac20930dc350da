//! Slow, direct reference implementations used to cross-check the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use bell_core::partition::StablePartition;
use bell_core::{Graph, Multigraph};

/// Adjacency matrix with multiplicities.
pub type Matrix = Vec<Vec<u32>>;

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v) as u32).collect()).collect()
}

pub fn multi_matrix(m: &Multigraph) -> Matrix {
    let n = m.order();
    (0..n).map(|u| (0..n).map(|v| if u == v { 0 } else { m.multiplicity(u, v) }).collect()).collect()
}

/// Backtracking isomorphism search on weighted adjacency matrices, pruning
/// by weighted degree and consistency with every vertex already placed.
pub fn matrix_iso(a: &Matrix, b: &Matrix) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let deg = |m: &Matrix, v: usize| -> (usize, u32) { (m[v].iter().filter(|&&x| x > 0).count(), m[v].iter().sum()) };
    let mut da: Vec<_> = (0..n).map(|v| deg(a, v)).collect();
    let mut db: Vec<_> = (0..n).map(|v| deg(b, v)).collect();
    let (ka, kb) = (da.clone(), db.clone());
    da.sort();
    db.sort();
    if da != db {
        return None;
    }
    // place vertices so that each one after the first touches an earlier one
    let mut order = Vec::new();
    let mut seen = vec![false; n];
    while order.len() < n {
        let start = (0..n).filter(|&v| !seen[v]).max_by_key(|&v| ka[v]).unwrap();
        seen[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            let u = order[i];
            for v in 0..n {
                if !seen[v] && a[u][v] > 0 {
                    seen[v] = true;
                    order.push(v);
                }
            }
            i += 1;
        }
    }
    fn go(
        a: &Matrix,
        b: &Matrix,
        ka: &[(usize, u32)],
        kb: &[(usize, u32)],
        order: &[usize],
        i: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let u = order[i];
        for x in 0..b.len() {
            if used[x] || ka[u] != kb[x] {
                continue;
            }
            if order[..i].iter().all(|&w| a[u][w] == b[x][map[w]]) {
                map[u] = x;
                used[x] = true;
                if go(a, b, ka, kb, order, i + 1, map, used) {
                    return true;
                }
                used[x] = false;
            }
        }
        false
    }
    let mut map = vec![usize::MAX; n];
    go(a, b, &ka, &kb, &order, 0, &mut map, &mut vec![false; n]).then_some(map)
}

pub fn iso(g: &Graph, h: &Graph) -> bool {
    matrix_iso(&matrix(g), &matrix(h)).is_some()
}

pub fn multi_iso(g: &Multigraph, h: &Multigraph) -> bool {
    matrix_iso(&multi_matrix(g), &multi_matrix(h)).is_some()
}

/// Is `map` a bijection `V(g) -> V(h)` preserving adjacency both ways?
pub fn is_iso_map(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || map.len() != n || map.iter().collect::<BTreeSet<_>>().len() != n || map.iter().any(|&x| x >= n) {
        return false;
    }
    (0..n).all(|u| (0..n).all(|v| u == v || g.has_edge(u, v) == h.has_edge(map[u], map[v])))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut h = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

pub fn line_graph(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    let mut l = Graph::new(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                l.add_edge(i, j);
            }
        }
    }
    l
}

pub fn cycle_graph(m: usize) -> Graph {
    let mut g = Graph::new(m);
    for i in 0..m {
        g.add_edge(i, (i + 1) % m);
    }
    g
}

/// Connected and 2-regular on `m >= 3` vertices.
pub fn is_cycle(g: &Graph, m: usize) -> bool {
    if g.order() != m || (0..m).any(|v| g.neighbors(v).len() != 2) {
        return false;
    }
    let mut seen = vec![false; m];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Partition as raw sorted parts plus the number of empty slots.
pub type Raw = (Vec<Vec<usize>>, usize);

pub fn raw(p: &StablePartition) -> Raw {
    let mut parts: Vec<Vec<usize>> = p.parts().to_vec();
    parts.sort();
    let empties = p.budget() - parts.len();
    (parts, empties)
}

/// `P - v` as a multiset of parts, empty parts included.
pub fn restrict(p: &StablePartition, v: usize) -> Vec<Vec<usize>> {
    let mut parts: Vec<Vec<usize>> = p.parts().iter().map(|q| q.iter().copied().filter(|&x| x != v).collect()).collect();
    parts.resize(p.budget(), Vec::new());
    parts.sort();
    parts
}

pub fn witnesses(p: &StablePartition, q: &StablePartition, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| restrict(p, v) == restrict(q, v)).collect()
}

/// `P = {{a, b}, ∅} ∪ R` and `Q = {{a}, {b}} ∪ R`.
pub fn doubled_pattern(p: &StablePartition, q: &StablePartition) -> bool {
    let (pp, pe) = raw(p);
    let (qp, qe) = raw(q);
    if pe == 0 || qe + 1 != pe {
        return false;
    }
    pp.iter().filter(|part| part.len() == 2).any(|pair| {
        let mut rest_p: Vec<Vec<usize>> = pp.iter().filter(|x| *x != pair).cloned().collect();
        rest_p.push(vec![pair[0]]);
        rest_p.push(vec![pair[1]]);
        rest_p.sort();
        rest_p == qp
    })
}

/// Base vertices `v` with every `P_i - v` equal.
pub fn anchors(ps: &[&StablePartition], n: usize) -> Vec<usize> {
    (0..n).filter(|&v| ps.windows(2).all(|w| restrict(w[0], v) == restrict(w[1], v))).collect()
}

/// All cliques of `g` with at least `min` vertices, as increasing id lists.
pub fn cliques(g: &Graph, min: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, cur: &mut Vec<usize>, from: usize, min: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= min {
            out.push(cur.clone());
        }
        for v in from..g.order() {
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                go(g, cur, v + 1, min, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, &mut Vec::new(), 0, min, &mut out);
    out
}

/// Unordered matchings of `g` with at least `min` edges, as sorted edge
/// lists.
pub fn matchings(g: &Graph, min: usize) -> Vec<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    let mut out = Vec::new();
    for mask in 0u64..1 << edges.len() {
        let chosen: Vec<(usize, usize)> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let mut used = BTreeSet::new();
        if chosen.len() >= min && chosen.iter().all(|&(a, b)| used.insert(a) && used.insert(b)) {
            out.push(chosen);
        }
    }
    out
}

/// Two matchings agree after deleting every edge at some vertex.
pub fn matchings_adjacent(a: &[(usize, usize)], b: &[(usize, usize)], n: usize) -> bool {
    if a == b {
        return false;
    }
    (0..n).any(|v| {
        let strip = |m: &[(usize, usize)]| -> Vec<(usize, usize)> { m.iter().copied().filter(|&(x, y)| x != v && y != v).collect() };
        strip(a) == strip(b)
    })
}

/// Center-rooted parenthesis code, minimized over centers.
pub fn tree_code(t: &Graph) -> String {
    let n = t.order();
    if n == 0 {
        return String::new();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.neighbors(v).len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                if degree[w] == 0 {
                    continue;
                }
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
            degree[v] = 0;
        }
        layer = next;
    }
    fn code(t: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = t.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| code(t, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| code(t, c, usize::MAX)).min().unwrap()
}
