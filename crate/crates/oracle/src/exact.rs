//! Exhaustive minimum modification sets, by enumerating candidate sets in
//! order of increasing cardinality and testing with the brute interval test.

use graph_core::{Edge, Graph, Vertex};
use itertools::Itertools;
use thiserror::Error;

use crate::bitgraph::{BitGraph, MAX_BITS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    VertexDeletion,
    EdgeDeletion,
    Completion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Vertices(Vec<Vertex>),
    Edges(Vec<Edge>),
}

impl Witness {
    pub fn len(&self) -> usize {
        match self {
            Witness::Vertices(v) => v.len(),
            Witness::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub variant: Variant,
    pub optimum: usize,
    pub witness: Witness,
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("oracle supports at most {MAX_BITS} vertices, got {0}")]
    TooLarge(usize),
}

/// The characterization-based interval test (chordal and AT-free).
pub fn oracle_is_interval(g: &Graph) -> Result<bool, OracleError> {
    if g.n() > MAX_BITS {
        return Err(OracleError::TooLarge(g.n()));
    }
    let bg = BitGraph::from_graph(g);
    Ok(bg.is_interval_mask(bg.full_mask()))
}

/// Smallest modification set of the given variant, or `None` if no set of
/// size at most `cap` suffices. Enumerates by increasing cardinality, so
/// the returned witness is a true minimum when `Some`.
pub fn brute_minimum(g: &Graph, variant: Variant, cap: usize) -> Result<Option<OracleResult>, OracleError> {
    if g.n() > MAX_BITS {
        return Err(OracleError::TooLarge(g.n()));
    }
    let bg = BitGraph::from_graph(g);
    let full = bg.full_mask();

    match variant {
        Variant::VertexDeletion => {
            let verts: Vec<Vertex> = g.vertices().collect();
            for size in 0..=cap.min(g.n()) {
                for combo in verts.iter().copied().combinations(size) {
                    let mut mask = full;
                    for &v in &combo {
                        mask &= !(1 << v);
                    }
                    if bg.is_interval_mask(mask) {
                        return Ok(Some(OracleResult {
                            variant,
                            optimum: size,
                            witness: Witness::Vertices(combo),
                        }));
                    }
                }
            }
            Ok(None)
        }
        Variant::EdgeDeletion | Variant::Completion => {
            let pool: Vec<Edge> = match variant {
                Variant::EdgeDeletion => g.edges().collect(),
                _ => g.non_edges(),
            };
            for size in 0..=cap.min(pool.len()) {
                for combo in pool.iter().copied().combinations(size) {
                    let mut bg2 = bg.clone();
                    for &(u, v) in &combo {
                        match variant {
                            Variant::EdgeDeletion => bg2.remove_edge(u, v),
                            _ => bg2.add_edge(u, v),
                        }
                    }
                    if bg2.is_interval_mask(full) {
                        return Ok(Some(OracleResult {
                            variant,
                            optimum: size,
                            witness: Witness::Edges(combo),
                        }));
                    }
                }
            }
            Ok(None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::fixtures;

    fn opt(g: &Graph, variant: Variant) -> usize {
        brute_minimum(g, variant, g.n() * g.n()).unwrap().unwrap().optimum
    }

    #[test]
    fn interval_graph_needs_nothing() {
        let g = fixtures::path(5);
        for v in [Variant::VertexDeletion, Variant::EdgeDeletion, Variant::Completion] {
            let r = brute_minimum(&g, v, 0).unwrap().unwrap();
            assert_eq!(r.optimum, 0);
            assert!(r.witness.is_empty());
        }
    }

    #[test]
    fn minimal_witnesses_need_exactly_one_vertex() {
        for (name, g) in fixtures::forbidden_locally_interval() {
            assert_eq!(opt(&g, Variant::VertexDeletion), 1, "{name}");
        }
    }

    #[test]
    fn hole_costs() {
        // C_l: one vertex deletion, one edge deletion, l-3 fill edges
        for l in 4..=7 {
            let c = fixtures::cycle(l);
            assert_eq!(opt(&c, Variant::VertexDeletion), 1);
            assert_eq!(opt(&c, Variant::EdgeDeletion), 1);
            assert_eq!(opt(&c, Variant::Completion), l - 3);
        }
    }

    #[test]
    fn net_edge_costs() {
        let net = fixtures::net();
        assert_eq!(opt(&net, Variant::EdgeDeletion), 1);
        assert_eq!(opt(&net, Variant::Completion), 1);
    }

    #[test]
    fn cap_is_respected() {
        let c7 = fixtures::cycle(7);
        assert!(brute_minimum(&c7, Variant::Completion, 3).unwrap().is_none());
        assert!(brute_minimum(&c7, Variant::Completion, 4).unwrap().is_some());
    }

    #[test]
    fn witness_actually_works() {
        let g = fixtures::rising_sun();
        let r = brute_minimum(&g, Variant::EdgeDeletion, 5).unwrap().unwrap();
        let Witness::Edges(es) = &r.witness else {
            panic!()
        };
        let h = g.with_edges_removed(es);
        assert!(oracle_is_interval(&h).unwrap());
    }
}
