use thiserror::Error;

/// Vertex identifier; always in `0..n` for the host graph.
pub type Vertex = usize;

/// Normalized unordered vertex pair (`u < v`).
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(Vertex, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
}

/// A simple undirected graph with sorted neighbor lists.
///
/// Invariants (upheld by every constructor):
/// - no self-loops, no parallel edges, symmetric adjacency;
/// - every neighbor list is sorted ascending;
/// - `m` is half the sum of neighbor-list lengths.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}; ", self.n(), self.m())?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, ")")
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed silently; self-loops and out-of-range
    /// endpoints are hard errors.
    pub fn from_edge_list(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// All edges in normalized `(u, v)` with `u < v`, lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// All non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in u + 1..self.n() {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff every pair in `set` is adjacent.
    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True iff `N[v]` induces a clique.
    pub fn is_simplicial(&self, v: Vertex) -> bool {
        self.is_clique(&self.adj[v])
    }

    /// All simplicial vertices, ascending.
    pub fn simplicial_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.is_simplicial(v)).collect()
    }

    /// True iff `v` is adjacent to every other vertex.
    pub fn is_universal(&self, v: Vertex) -> bool {
        self.degree(v) == self.n() - 1
    }

    /// Subgraph induced by `sub` (need not be sorted; must be duplicate-free).
    /// Returns the new graph plus the map new-id → old-id (sorted ascending).
    pub fn induced_subgraph(&self, sub: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut ids: Vec<Vertex> = sub.to_vec();
        ids.sort_unstable();
        debug_assert!(ids.windows(2).all(|w| w[0] != w[1]));
        let mut back = vec![usize::MAX; self.n()];
        for (new, &old) in ids.iter().enumerate() {
            back[old] = new;
        }
        let mut adj = vec![Vec::new(); ids.len()];
        let mut m = 0;
        for (new, &old) in ids.iter().enumerate() {
            for &w in &self.adj[old] {
                if back[w] != usize::MAX {
                    adj[new].push(back[w]);
                }
            }
            m += adj[new].len();
        }
        (Graph { adj, m: m / 2 }, ids)
    }

    /// Complement graph (no self-loops).
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in 0..n {
                if v != u && !self.has_edge(u, v) {
                    adj[u].push(v);
                }
            }
        }
        let m = adj.iter().map(|l| l.len()).sum::<usize>() / 2;
        Graph { adj, m }
    }

    /// New graph with the listed edges added (pairs may be unnormalized;
    /// already-present edges are ignored).
    pub fn with_edges_added(&self, extra: &[(Vertex, Vertex)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in extra {
            debug_assert!(u != v && u < g.n() && v < g.n());
            if !g.has_edge(u, v) {
                let pu = g.adj[u].binary_search(&v).unwrap_err();
                g.adj[u].insert(pu, v);
                let pv = g.adj[v].binary_search(&u).unwrap_err();
                g.adj[v].insert(pv, u);
                g.m += 1;
            }
        }
        g
    }

    /// New graph with the listed edges removed (absent edges are ignored).
    pub fn with_edges_removed(&self, gone: &[(Vertex, Vertex)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in gone {
            if g.has_edge(u, v) {
                let pu = g.adj[u].binary_search(&v).unwrap();
                g.adj[u].remove(pu);
                let pv = g.adj[v].binary_search(&u).unwrap();
                g.adj[v].remove(pv);
                g.m -= 1;
            }
        }
        g
    }

    /// New graph with the listed vertices removed; also returns the
    /// new-id → old-id map.
    pub fn with_vertices_removed(&self, gone: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut keep = vec![true; self.n()];
        for &v in gone {
            keep[v] = false;
        }
        let survivors: Vec<Vertex> = self.vertices().filter(|&v| keep[v]).collect();
        self.induced_subgraph(&survivors)
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Sorted indices `i` such that `U[i] ∈ N[v]`, for an externally ordered
    /// vertex list `U`. Runs in `O(d(v) + |output|)` given the position map.
    pub fn ordered_indices(&self, v: Vertex, positions: &[usize], u_len: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.adj[v]
            .iter()
            .chain(std::iter::once(&v))
            .filter_map(|&w| {
                let p = positions[w];
                (p < u_len).then_some(p)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Builds a position map for `ordered_indices`: `positions[w]` is the
    /// index of `w` in `u`, or `usize::MAX` if absent.
    pub fn position_map(&self, u: &[Vertex]) -> Vec<usize> {
        let mut positions = vec![usize::MAX; self.n()];
        for (i, &w) in u.iter().enumerate() {
            positions[w] = i;
        }
        positions
    }
}
