//! Bitset adjacency for graphs on at most 63 vertices, plus the
//! characterization-based interval test (chordal and AT-free) evaluated on
//! an arbitrary alive-vertex mask so that deletion variants need no copies.

use graph_core::Graph;

/// A graph on `n ≤ 63` vertices stored as one adjacency word per vertex.
#[derive(Debug, Clone)]
pub struct BitGraph {
    n: usize,
    adj: Vec<u64>,
}

pub const MAX_BITS: usize = 63;

impl BitGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_BITS);
        BitGraph {
            n,
            adj: vec![0; n],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut bg = BitGraph::new(g.n());
        for (u, v) in g.edges() {
            bg.add_edge(u, v);
        }
        bg
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// True iff the vertices of `mask` are pairwise adjacent.
    pub fn is_clique_mask(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if mask & !(1 << v) & !self.adj[v] != 0 {
                return false;
            }
        }
        true
    }

    /// Vertices of `mask` reachable from `start` inside `mask`.
    pub fn reachable(&self, start: usize, mask: u64) -> u64 {
        debug_assert!(mask >> start & 1 == 1);
        let mut reach = 1u64 << start;
        loop {
            let mut grown = reach;
            let mut rest = reach;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= self.adj[v] & mask;
            }
            if grown == reach {
                return reach;
            }
            reach = grown;
        }
    }

    pub fn is_connected_mask(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        self.reachable(start, mask) == mask
    }

    /// Chordality on the induced subgraph: repeatedly eliminate a simplicial
    /// vertex; the graph is chordal iff elimination empties it.
    pub fn is_chordal_mask(&self, mask: u64) -> bool {
        let mut alive = mask;
        'outer: while alive != 0 {
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.is_clique_mask(self.adj[v] & alive) {
                    alive &= !(1 << v);
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    /// True iff the induced subgraph contains an asteroidal triple: three
    /// pairwise nonadjacent vertices such that every two are joined by a
    /// path avoiding the closed neighborhood of the third.
    pub fn has_asteroidal_triple_mask(&self, mask: u64) -> bool {
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        let linked = |x: usize, y: usize, avoid: usize| -> bool {
            let region = mask & !(self.adj[avoid] | (1 << avoid));
            region >> x & 1 == 1 && self.reachable(x, region) >> y & 1 == 1
        };
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    continue;
                }
                for &c in verts.iter().skip(j + 1) {
                    if self.has_edge(a, c) || self.has_edge(b, c) {
                        continue;
                    }
                    if linked(a, b, c) && linked(a, c, b) && linked(b, c, a) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Interval test on the induced subgraph, by the characterization:
    /// interval iff chordal and asteroidal-triple-free.
    pub fn is_interval_mask(&self, mask: u64) -> bool {
        self.is_chordal_mask(mask) && !self.has_asteroidal_triple_mask(mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::fixtures;

    fn iv(g: &Graph) -> bool {
        let bg = BitGraph::from_graph(g);
        bg.is_interval_mask(bg.full_mask())
    }

    #[test]
    fn interval_basics() {
        assert!(iv(&fixtures::path(6)));
        assert!(iv(&fixtures::complete(5)));
        assert!(iv(&Graph::empty(4)));
        // caterpillar-ish: triangle with a pendant path
        let g = Graph::from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert!(iv(&g));
    }

    #[test]
    fn holes_are_not_interval() {
        for n in 4..=8 {
            let c = fixtures::cycle(n);
            let bg = BitGraph::from_graph(&c);
            assert!(!bg.is_chordal_mask(bg.full_mask()), "C{n} chordal?");
            assert!(!iv(&c));
        }
    }

    #[test]
    fn minimal_asteroidal_witnesses_are_not_interval() {
        for (name, g) in fixtures::forbidden_locally_interval() {
            assert!(!iv(&g), "{name} should not be interval");
        }
        for d in 2..=5 {
            assert!(!iv(&fixtures::dagger(d)));
            assert!(!iv(&fixtures::ddagger(d)));
        }
    }

    #[test]
    fn witnesses_are_minimal_under_vertex_deletion() {
        // every one-vertex-deleted subgraph of each minimal structure is interval
        for (name, g) in fixtures::forbidden_locally_interval() {
            let bg = BitGraph::from_graph(&g);
            for v in 0..g.n() {
                let mask = bg.full_mask() & !(1 << v);
                assert!(bg.is_interval_mask(mask), "{name} minus {v}");
            }
        }
    }

    #[test]
    fn chordal_but_not_interval() {
        let net = fixtures::net();
        let bg = BitGraph::from_graph(&net);
        assert!(bg.is_chordal_mask(bg.full_mask()));
        assert!(bg.has_asteroidal_triple_mask(bg.full_mask()));
    }
}
