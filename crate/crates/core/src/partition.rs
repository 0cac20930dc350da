//! Stable k-partitions: multisets of `k` independent sets covering the vertex
//! set, with empty parts left implicit.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Canonical stable partition. Parts are nonempty and sorted internally; the
/// part list is sorted by size, then lexicographically. `k` is the budget,
/// so `k - parts.len()` parts are empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StablePartition {
    k: usize,
    n: usize,
    parts: Vec<Vec<Vertex>>,
}

/// The multiset `P - v`: the nonempty remainders in canonical order, with
/// the budget carried so that empty slots compare correctly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Restriction {
    pub k: usize,
    pub parts: Vec<Vec<Vertex>>,
}

impl Restriction {
    pub fn empty_slots(&self) -> usize {
        self.k - self.parts.len()
    }
}

fn canonicalize(parts: &mut Vec<Vec<Vertex>>) {
    parts.retain(|p| !p.is_empty());
    for p in parts.iter_mut() {
        p.sort_unstable();
    }
    parts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

impl StablePartition {
    /// Validates and canonicalizes `parts` as a stable `k`-partition of `g`.
    pub fn new(g: &Graph, k: usize, mut parts: Vec<Vec<Vertex>>) -> Result<Self> {
        canonicalize(&mut parts);
        let n = g.order();
        let mut seen = vec![false; n];
        for part in &parts {
            for &v in part {
                g.check_vertex(v)?;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidInput(format!("vertex {v} appears twice")));
                }
            }
            for (i, &u) in part.iter().enumerate() {
                if let Some(&w) = part[i + 1..].iter().find(|&&w| g.has_edge(u, w)) {
                    return Err(Error::InvalidInput(format!("part contains edge {u}-{w}")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidInput(format!("vertex {v} not covered")));
        }
        if parts.len() > k {
            return Err(Error::InvalidInput(format!("{} nonempty parts exceed budget {k}", parts.len())));
        }
        Ok(StablePartition { k, n, parts })
    }

    /// Builds from parts already known to be stable; only canonicalizes.
    fn from_parts_unchecked(n: usize, k: usize, mut parts: Vec<Vec<Vertex>>) -> Self {
        canonicalize(&mut parts);
        StablePartition { k, n, parts }
    }

    pub fn budget(&self) -> usize {
        self.k
    }

    pub fn base_order(&self) -> usize {
        self.n
    }

    /// Nonempty parts in canonical order.
    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn empty_slots(&self) -> usize {
        self.k - self.parts.len()
    }

    pub fn part_of(&self, v: Vertex) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&v).is_ok())
    }

    /// Does `part` (sorted) occur as a part?
    pub fn has_part(&self, part: &[Vertex]) -> bool {
        self.parts.iter().any(|p| p == part)
    }

    /// Part sets as a vertex -> part index map.
    fn assignment(&self) -> Vec<usize> {
        let mut a = vec![0; self.n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                a[v] = i;
            }
        }
        a
    }

    pub fn restrict(&self, v: Vertex) -> Result<Restriction> {
        if v >= self.n {
            return Err(Error::IndexOutOfRange { index: v, order: self.n });
        }
        let mut parts: Vec<Vec<Vertex>> =
            self.parts.iter().map(|p| p.iter().copied().filter(|&x| x != v).collect()).collect();
        canonicalize(&mut parts);
        Ok(Restriction { k: self.k, parts })
    }

    /// Restriction to the complement of `removed`.
    pub fn restrict_many(&self, removed: &[Vertex]) -> Restriction {
        let mut parts: Vec<Vec<Vertex>> =
            self.parts.iter().map(|p| p.iter().copied().filter(|x| !removed.contains(x)).collect()).collect();
        canonicalize(&mut parts);
        Restriction { k: self.k, parts }
    }

    /// Text form: ids joined by `,` within a part, parts joined by `|`.
    pub fn text(&self) -> String {
        self.to_string()
    }

    pub fn parse_text(g: &Graph, k: usize, text: &str) -> Result<Self> {
        let mut parts = Vec::new();
        if !text.is_empty() {
            for chunk in text.split('|') {
                let part = chunk
                    .split(',')
                    .map(|s| s.trim().parse::<Vertex>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::InvalidInput(format!("bad partition text {text:?}: {e}")))?;
                parts.push(part);
            }
        }
        Self::new(g, k, parts)
    }
}

impl fmt::Display for StablePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, v) in p.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Every stable `k`-partition of `g`, once each, in canonical order.
///
/// Vertices are assigned in increasing order; a vertex either joins an
/// existing part containing none of its neighbours or opens a new part, so
/// parts are labelled by their least element and no multiset repeats.
pub fn enumerate_stable_partitions(g: &Graph, k: usize) -> Vec<StablePartition> {
    let n = g.order();
    let mut out = Vec::new();
    let mut parts: Vec<Vec<Vertex>> = Vec::new();
    fn go(g: &Graph, k: usize, v: Vertex, parts: &mut Vec<Vec<Vertex>>, out: &mut Vec<StablePartition>) {
        if v == g.order() {
            out.push(StablePartition::from_parts_unchecked(v, k, parts.clone()));
            return;
        }
        for i in 0..parts.len() {
            if parts[i].iter().all(|&u| !g.has_edge(u, v)) {
                parts[i].push(v);
                go(g, k, v + 1, parts, out);
                parts[i].pop();
            }
        }
        if parts.len() < k {
            parts.push(vec![v]);
            go(g, k, v + 1, parts, out);
            parts.pop();
        }
    }
    if n == 0 || k > 0 {
        go(g, k, 0, &mut parts, &mut out);
    }
    out.sort();
    out
}

/// All `(v, P')` with `P' != P` stable and `P - v = P' - v`, sorted by
/// witness and then by partition.
pub fn legal_moves(p: &StablePartition, g: &Graph) -> Vec<(Vertex, StablePartition)> {
    let assign = p.assignment();
    let mut out = Vec::new();
    for v in 0..p.n {
        let from = assign[v];
        let mut targets: Vec<Option<usize>> = (0..p.parts.len())
            .filter(|&j| j != from && p.parts[j].iter().all(|&u| !g.has_edge(u, v)))
            .map(Some)
            .collect();
        if p.empty_slots() > 0 && p.parts[from].len() > 1 {
            targets.push(None);
        }
        let mut results: Vec<StablePartition> = targets
            .into_iter()
            .map(|t| {
                let mut parts = p.parts.clone();
                parts[from].retain(|&x| x != v);
                match t {
                    Some(j) => parts[j].push(v),
                    None => parts.push(vec![v]),
                }
                StablePartition::from_parts_unchecked(p.n, p.k, parts)
            })
            .collect();
        results.sort();
        out.extend(results.into_iter().map(|q| (v, q)));
    }
    out
}

/// `{v : P - v = Q - v}` in increasing order; empty when `P = Q`.
pub fn witnesses(p: &StablePartition, q: &StablePartition) -> Vec<Vertex> {
    if p == q || p.k != q.k || p.n != q.n {
        return Vec::new();
    }
    (0..p.n).filter(|&v| p.restrict(v).unwrap() == q.restrict(v).unwrap()).collect()
}

/// Decomposition `P = {{a,b}, ∅} ∪ R`, `Q = {{a},{b}} ∪ R` (in either role).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleEdge {
    pub a: Vertex,
    pub b: Vertex,
    /// Nonempty parts of `R`.
    pub remainder: Vec<Vec<Vertex>>,
}

pub fn is_double_edge_pattern(p: &StablePartition, q: &StablePartition) -> Option<DoubleEdge> {
    one_way_pattern(p, q).or_else(|| one_way_pattern(q, p))
}

fn one_way_pattern(paired: &StablePartition, split: &StablePartition) -> Option<DoubleEdge> {
    if paired.k != split.k || paired.n != split.n || paired.empty_slots() == 0 {
        return None;
    }
    paired.parts.iter().enumerate().filter(|(_, part)| part.len() == 2).find_map(|(i, part)| {
        let mut parts = paired.parts.clone();
        parts.remove(i);
        let remainder = {
            let mut r = parts.clone();
            canonicalize(&mut r);
            r
        };
        parts.push(vec![part[0]]);
        parts.push(vec![part[1]]);
        canonicalize(&mut parts);
        (parts == split.parts).then(|| DoubleEdge { a: part[0], b: part[1], remainder })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn sp(g: &Graph, k: usize, parts: &[&[Vertex]]) -> StablePartition {
        StablePartition::new(g, k, parts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    /// Partitions of an `n`-set into at most `k` blocks.
    fn stirling_sum(n: usize, k: usize) -> usize {
        let mut s = vec![vec![0usize; n + 1]; n + 1];
        s[0][0] = 1;
        for i in 1..=n {
            for j in 1..=i {
                s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
            }
        }
        (0..=k.min(n)).map(|j| s[n][j]).sum()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_stable_partitions(&path(4), 3).len(), 4);
        let k3k1 = complete(3).disjoint_union(&empty(1));
        assert_eq!(enumerate_stable_partitions(&k3k1, 3).len(), 3);
        assert_eq!(enumerate_stable_partitions(&empty(3), 3).len(), 5);
        assert_eq!(enumerate_stable_partitions(&complete(3), 2).len(), 0);
        for n in 0..7 {
            for k in 1..8 {
                assert_eq!(enumerate_stable_partitions(&empty(n), k).len(), stirling_sum(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let ps = enumerate_stable_partitions(&cycle(5), 4);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn canonical_order_and_text() {
        let g = path(4);
        let p = sp(&g, 3, &[&[3, 1], &[0, 2]]);
        assert_eq!(p.text(), "0,2|1,3");
        let r = sp(&g, 3, &[&[0, 2], &[1], &[3]]);
        assert_eq!(r.text(), "1|3|0,2");
        assert_eq!(StablePartition::parse_text(&g, 3, "3|1|2,0").unwrap(), r);
        assert!(StablePartition::parse_text(&g, 3, "0,1|2|3").is_err());
        assert!(StablePartition::parse_text(&g, 1, "0,2|1,3").is_err());
        assert!(StablePartition::parse_text(&g, 3, "0,2|1").is_err());
    }

    #[test]
    fn restriction() {
        // path vertices 1..4 are ids 0..3
        let g = path(4);
        let p = sp(&g, 3, &[&[0, 2], &[1], &[3]]);
        let r = p.restrict(0).unwrap();
        assert_eq!(r.parts, vec![vec![1], vec![2], vec![3]]);
        assert_eq!(r.k, 3);
        let singletons = sp(&empty(3), 3, &[&[0], &[1], &[2]]);
        assert_eq!(singletons.restrict(1).unwrap().empty_slots(), 1);
        assert!(p.restrict(4).is_err());
    }

    #[test]
    fn witnesses_on_p4() {
        let g = path(4);
        let r3 = sp(&g, 3, &[&[0], &[2], &[1, 3]]);
        let r4 = sp(&g, 3, &[&[0, 2], &[1, 3]]);
        let r1 = sp(&g, 3, &[&[0, 2], &[1], &[3]]);
        assert_eq!(witnesses(&r3, &r4), vec![0, 2]);
        assert_eq!(witnesses(&r4, &r1), vec![1, 3]);
        assert_eq!(witnesses(&r1, &r3), Vec::<Vertex>::new());
        let d = is_double_edge_pattern(&r4, &r1).unwrap();
        assert_eq!((d.a, d.b), (1, 3));
        assert_eq!(d.remainder, vec![vec![0, 2]]);
    }

    #[test]
    fn moves_on_p4() {
        let g = path(4);
        let r4 = sp(&g, 3, &[&[0, 2], &[1, 3]]);
        let r3 = sp(&g, 3, &[&[0], &[2], &[1, 3]]);
        let r1 = sp(&g, 3, &[&[0, 2], &[1], &[3]]);
        let moves = legal_moves(&r4, &g);
        assert_eq!(moves, vec![(0, r3.clone()), (1, r1.clone()), (2, r3), (3, r1)]);
    }

    #[test]
    fn claw_witness() {
        // star K_{1,3} with centre 0; leaves v1, v2, v3 are ids 1, 2, 3
        let g = star(3);
        let p1 = sp(&g, 3, &[&[0], &[1, 2, 3]]);
        let p2 = sp(&g, 3, &[&[0], &[1, 2], &[3]]);
        assert_eq!(witnesses(&p1, &p2), vec![3]);
        assert!(is_double_edge_pattern(&p1, &p2).is_none());
    }

    #[test]
    fn smallest_doubled_edge() {
        let g = empty(2);
        let p = sp(&g, 2, &[&[0, 1]]);
        let q = sp(&g, 2, &[&[0], &[1]]);
        assert_eq!(legal_moves(&p, &g), vec![(0, q.clone()), (1, q.clone())]);
        assert_eq!(witnesses(&p, &q), vec![0, 1]);
        let d = is_double_edge_pattern(&q, &p).unwrap();
        assert_eq!((d.a, d.b, d.remainder.len()), (0, 1, 0));
    }

    #[test]
    fn complete_graph_has_no_moves() {
        let g = complete(4);
        let ps = enumerate_stable_partitions(&g, 4);
        assert_eq!(ps.len(), 1);
        assert!(legal_moves(&ps[0], &g).is_empty());
    }

    #[test]
    fn budgets_never_collide() {
        let g = empty(2);
        let a = sp(&g, 2, &[&[0], &[1]]);
        let b = sp(&g, 3, &[&[0], &[1]]);
        assert_ne!(a, b);
        assert!(witnesses(&a, &b).is_empty());
    }

    /// Exhaustive cross-check of moves, witnesses and the doubled pattern on
    /// every graph of order 4 (all 64 labelled graphs).
    #[test]
    fn moves_witnesses_and_pattern_agree() {
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        for mask in 0..1u32 << pairs.len() {
            let g = Graph::from_edges(4, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e));
            for k in 1..=5 {
                let ps = enumerate_stable_partitions(&g, k);
                for p in &ps {
                    let moves = legal_moves(p, &g);
                    for q in &ps {
                        let w = witnesses(p, q);
                        assert!(w.len() <= 2);
                        assert_eq!(w.len() == 2, is_double_edge_pattern(p, q).is_some());
                        let by_moves: Vec<Vertex> = moves.iter().filter(|(_, r)| r == q).map(|&(v, _)| v).collect();
                        assert_eq!(by_moves, w);
                    }
                }
            }
        }
    }
}
