use std::collections::VecDeque;

use crate::{Graph, Vertex};

/// Breadth-first search tree over (a reachable part of) a graph.
#[derive(Debug, Clone)]
pub struct BfsTree {
    /// Vertices in the order they were dequeued.
    pub order: Vec<Vertex>,
    /// Predecessor of each reached vertex (`None` for sources/unreached).
    pub prev: Vec<Option<Vertex>>,
    /// Hop distance from the nearest source (`None` if unreached).
    pub dist: Vec<Option<u32>>,
}

impl BfsTree {
    pub fn reached(&self, v: Vertex) -> bool {
        self.dist[v].is_some()
    }

    /// Path from a source to `v` (inclusive), following predecessors.
    pub fn path_to(&self, v: Vertex) -> Vec<Vertex> {
        debug_assert!(self.reached(v));
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.prev[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }
}

impl Graph {
    /// Multi-source BFS. Stops early at the first vertex accepted by
    /// `accept` (in BFS order) and returns it alongside the partial tree;
    /// explores everything reachable otherwise. Sources are tested too.
    pub fn bfs(
        &self,
        sources: &[Vertex],
        mut accept: impl FnMut(Vertex) -> bool,
    ) -> (BfsTree, Option<Vertex>) {
        debug_assert!(!sources.is_empty());
        let mut tree = BfsTree {
            order: Vec::new(),
            prev: vec![None; self.n()],
            dist: vec![None; self.n()],
        };
        let mut queue = VecDeque::new();
        for &s in sources {
            if tree.dist[s].is_none() {
                tree.dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            tree.order.push(u);
            if accept(u) {
                return (tree, Some(u));
            }
            for &w in self.neighbors(u) {
                if tree.dist[w].is_none() {
                    tree.dist[w] = Some(tree.dist[u].unwrap() + 1);
                    tree.prev[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        (tree, None)
    }

    /// BFS restricted to the vertices where `allowed` is true. All sources
    /// must be allowed.
    pub fn bfs_restricted(
        &self,
        sources: &[Vertex],
        allowed: &[bool],
        mut accept: impl FnMut(Vertex) -> bool,
    ) -> (BfsTree, Option<Vertex>) {
        debug_assert!(sources.iter().all(|&s| allowed[s]));
        let mut tree = BfsTree {
            order: Vec::new(),
            prev: vec![None; self.n()],
            dist: vec![None; self.n()],
        };
        let mut queue = VecDeque::new();
        for &s in sources {
            if tree.dist[s].is_none() {
                tree.dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            tree.order.push(u);
            if accept(u) {
                return (tree, Some(u));
            }
            for &w in self.neighbors(u) {
                if allowed[w] && tree.dist[w].is_none() {
                    tree.dist[w] = Some(tree.dist[u].unwrap() + 1);
                    tree.prev[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        (tree, None)
    }
}

#[cfg(test)]
mod tests {
    use crate::Graph;

    #[test]
    fn p4_far_endpoint() {
        let p4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (tree, hit) = p4.bfs(&[0], |v| v != 0 && p4.degree(v) == 1);
        assert_eq!(hit, Some(3));
        assert_eq!(tree.dist[3], Some(3));
        assert_eq!(tree.path_to(3), vec![0, 1, 2, 3]);
    }

    #[test]
    fn c4_two_sources_cover_in_one_hop() {
        let c4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (tree, hit) = c4.bfs(&[0, 2], |_| false);
        assert_eq!(hit, None);
        assert!(tree.dist.iter().all(|d| d.unwrap() <= 1));
    }

    #[test]
    fn net_terminal_to_opposite_terminal() {
        let net = crate::fixtures::net();
        // terminals are the degree-1 vertices
        let terms: Vec<_> = net.vertices().filter(|&v| net.degree(v) == 1).collect();
        let start = terms[0];
        let (tree, hit) = net.bfs(&[start], |v| v != start && net.degree(v) == 1);
        let hit = hit.unwrap();
        assert_eq!(tree.dist[hit], Some(3));
    }

    #[test]
    fn restricted_bfs_blocks_path() {
        let p4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let allowed = vec![true, false, true, true];
        let (tree, _) = p4.bfs_restricted(&[0], &allowed, |_| false);
        assert!(!tree.reached(3));
    }
}
