//! JSON documents exchanged by the command line tool. Field order matches
//! sorted key order so serialized output is byte-stable.

use serde::{Deserialize, Serialize};

use crate::bell::BellGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph, Vertex};
use crate::graph6::{parse_graph6, write_graph6};
use crate::matching::{Matching, MatchingGraph, RealizationCertificate};
use crate::partition::StablePartition;

/// A Bell graph with per-edge witness lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BellJson {
    pub base: String,
    pub edges: Vec<(usize, usize, Vec<Vertex>)>,
    pub k: usize,
    pub vertices: Vec<String>,
}

impl BellJson {
    pub fn from_bell(b: &BellGraph) -> Self {
        BellJson {
            base: write_graph6(b.base()),
            edges: b.edges().iter().map(|e| (e.u, e.v, e.witnesses.clone())).collect(),
            k: b.budget(),
            vertices: b.vertices().iter().map(StablePartition::text).collect(),
        }
    }

    fn check(&self) -> Result<()> {
        let n = self.vertices.len();
        for &(u, v, ref w) in &self.edges {
            if u >= n || v >= n || u == v || w.is_empty() {
                return Err(Error::InvalidInput(format!("bad edge [{u}, {v}, {w:?}] for {n} vertices")));
            }
        }
        Ok(())
    }

    pub fn to_simple(&self) -> Result<Graph> {
        self.check()?;
        Ok(Graph::from_edges(self.vertices.len(), self.edges.iter().map(|&(u, v, _)| (u, v))))
    }

    pub fn to_multigraph(&self) -> Result<Multigraph> {
        self.check()?;
        let mut m = Multigraph::new(self.vertices.len());
        for &(u, v, ref w) in &self.edges {
            m.set_multiplicity(u, v, w.len() as u32)?;
        }
        Ok(m)
    }

    /// Parses the base graph and every vertex label back into partitions.
    pub fn partitions(&self) -> Result<Vec<StablePartition>> {
        let g = parse_graph6(&self.base)?;
        self.vertices.iter().map(|t| StablePartition::parse_text(&g, self.k, t)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultigraphJson {
    pub edges: Vec<(usize, usize, u32)>,
    pub n_vertices: usize,
}

impl MultigraphJson {
    pub fn from_multigraph(m: &Multigraph) -> Self {
        MultigraphJson { edges: m.edges().map(|((u, v), k)| (u, v, k)).collect(), n_vertices: m.order() }
    }

    pub fn to_multigraph(&self) -> Result<Multigraph> {
        let mut m = Multigraph::new(self.n_vertices);
        for &(u, v, k) in &self.edges {
            if u >= self.n_vertices || v >= self.n_vertices {
                return Err(Error::IndexOutOfRange { index: u.max(v), order: self.n_vertices });
            }
            if u == v || k == 0 {
                return Err(Error::InvalidInput(format!("bad edge [{u}, {v}, {k}]")));
            }
            m.set_multiplicity(u, v, k)?;
        }
        Ok(m)
    }
}

/// `iso` lists pairs `[bell vertex, target vertex]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizeJson {
    pub base: String,
    pub iso: Vec<(usize, usize)>,
    pub k: usize,
    pub target: String,
    pub verified: bool,
}

impl RealizeJson {
    pub fn from_certificate(c: &RealizationCertificate) -> Self {
        RealizeJson {
            base: write_graph6(&c.base),
            iso: c.iso.iter().copied().enumerate().collect(),
            k: c.k,
            target: write_graph6(&c.target),
            verified: c.verify(),
        }
    }
}

/// A matching reconfiguration graph; vertex `i` is `matchings[i]`, each
/// given as its edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingGraphJson {
    pub base: String,
    pub edges: Vec<(usize, usize)>,
    pub graph6: String,
    pub k: usize,
    pub matchings: Vec<Vec<(Vertex, Vertex)>>,
}

impl MatchingGraphJson {
    pub fn new(base: &Graph, k: usize, mg: &MatchingGraph) -> Self {
        MatchingGraphJson {
            base: write_graph6(base),
            edges: mg.graph.edges(),
            graph6: write_graph6(&mg.graph),
            k,
            matchings: mg.matchings.iter().map(|m: &Matching| m.edges().to_vec()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bell::build_bell;
    use crate::canon::is_multigraph_isomorphic;
    use crate::families::*;

    #[test]
    fn bell_round_trip() {
        let b = build_bell(&path(4), 3);
        let j = BellJson::from_bell(&b);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.starts_with(r#"{"base":"#));
        let back: BellJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert_eq!(back.to_simple().unwrap(), b.to_simple());
        assert_eq!(back.to_multigraph().unwrap(), b.to_multigraph());
        assert_eq!(back.partitions().unwrap(), b.vertices());
    }

    #[test]
    fn multigraph_round_trip() {
        let m = build_bell(&star(3), 4).to_multigraph();
        let j = MultigraphJson::from_multigraph(&m);
        let back: MultigraphJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        assert!(is_multigraph_isomorphic(&back.to_multigraph().unwrap(), &m));
        let bad = MultigraphJson { edges: vec![(0, 5, 1)], n_vertices: 2 };
        assert!(bad.to_multigraph().is_err());
    }
}
