//! Modular decomposition: maximal strong modules, quotient graphs, and
//! module substitution. The heavy lifting is delegated to the
//! `modular-decomposition` crate; this module fixes deterministic ordering
//! (modules sorted by minimum vertex) and the quotient-kind trichotomy.

use graph_core::{Graph, Vertex};
use modular_decomposition::{modular_decomposition, MDTree, ModuleIndex, ModuleKind};
use petgraph::graph::{NodeIndex, UnGraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModularError {
    #[error("set is not a module")]
    NotAModule,
    #[error("invalid module partition: {0}")]
    InvalidPartition(&'static str),
}

/// The quotient graph trichotomy for a partition into maximal strong
/// modules: the quotient is edgeless (G disconnected), a clique
/// (complement disconnected), or prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientKind {
    Edgeless,
    Clique,
    Prime,
}

/// A partition of the vertices into modules, tagged with its quotient kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePartition {
    /// Disjoint modules covering V(G), each sorted, ordered by minimum
    /// vertex.
    pub modules: Vec<Vec<Vertex>>,
    pub kind: QuotientKind,
}

/// A quotient graph together with the modules its vertices stand for.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    pub quotient: Graph,
    /// The module behind each quotient vertex.
    pub module_of: Vec<Vec<Vertex>>,
    /// Cardinality of each module (the weight `#v` of a quotient vertex).
    pub size_of: Vec<usize>,
}

/// True iff every vertex outside `s` is adjacent to all of `s` or none.
pub fn is_module(g: &Graph, s: &[Vertex]) -> bool {
    assert!(!s.is_empty());
    let mut inside = vec![false; g.n()];
    for &v in s {
        inside[v] = true;
    }
    for x in g.vertices() {
        if inside[x] {
            continue;
        }
        let hits = g.neighbors(x).iter().filter(|&&u| inside[u]).count();
        if hits != 0 && hits != s.len() {
            return false;
        }
    }
    true
}

/// The partition of V(G) into maximal strong modules, with the quotient
/// kind per the trichotomy. Requires `|G| ≥ 2`.
pub fn maximal_strong_modules(g: &Graph) -> ModulePartition {
    assert!(g.n() >= 2);
    let mut pg = UnGraph::<(), ()>::default();
    for _ in 0..g.n() {
        pg.add_node(());
    }
    for (u, v) in g.edges() {
        pg.add_edge(NodeIndex::new(u), NodeIndex::new(v), ());
    }
    let md = modular_decomposition(&pg).expect("nonempty graph");
    let kind = match md.module_kind(md.root()) {
        Some(ModuleKind::Parallel) => QuotientKind::Edgeless,
        Some(ModuleKind::Series) => QuotientKind::Clique,
        Some(ModuleKind::Prime) => QuotientKind::Prime,
        _ => unreachable!("root of a graph with ≥ 2 vertices is an inner node"),
    };
    let mut modules: Vec<Vec<Vertex>> = md
        .children(md.root())
        .map(|c| {
            let mut leaves = leaves_under(&md, c);
            leaves.sort_unstable();
            leaves
        })
        .collect();
    modules.sort_by_key(|m| m[0]);
    ModulePartition { modules, kind }
}

fn leaves_under(md: &MDTree<NodeIndex>, root: ModuleIndex) -> Vec<Vertex> {
    let mut out = Vec::new();
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        match md.module_kind(x) {
            Some(ModuleKind::Node(v)) => out.push(v.index()),
            _ => stack.extend(md.children(x)),
        }
    }
    out
}

/// Builds the quotient graph of a module partition: one vertex per module,
/// adjacent iff the modules are completely adjacent in G.
pub fn quotient(g: &Graph, p: &ModulePartition) -> Result<QuotientGraph, ModularError> {
    let mut seen = vec![false; g.n()];
    for m in &p.modules {
        if !is_module(g, m) {
            return Err(ModularError::InvalidPartition("member is not a module"));
        }
        for &v in m {
            if seen[v] {
                return Err(ModularError::InvalidPartition("members overlap"));
            }
            seen[v] = true;
        }
    }
    if !seen.iter().all(|&b| b) {
        return Err(ModularError::InvalidPartition("members do not cover V"));
    }
    let k = p.modules.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            // modules are completely adjacent or completely nonadjacent,
            // so one representative pair decides
            if g.has_edge(p.modules[i][0], p.modules[j][0]) {
                edges.push((i, j));
            }
        }
    }
    Ok(QuotientGraph {
        quotient: Graph::from_edge_list(k, edges).expect("valid quotient"),
        module_of: p.modules.clone(),
        size_of: p.modules.iter().map(|m| m.len()).collect(),
    })
}

/// Replaces the module `m` of `g` by the graph `h`: the rest of `g` is kept,
/// and every vertex of `h` is joined to every vertex of N_G(m).
///
/// Labeling of the result: the vertices of `g` outside `m`, in increasing
/// order, become `0..g.n()-m.len()`; the vertices of `h` follow, shifted.
pub fn substitute(g: &Graph, m: &[Vertex], h: &Graph) -> Result<Graph, ModularError> {
    if !is_module(g, m) {
        return Err(ModularError::NotAModule);
    }
    let mut inside = vec![false; g.n()];
    for &v in m {
        inside[v] = true;
    }
    let rest: Vec<Vertex> = g.vertices().filter(|&v| !inside[v]).collect();
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in rest.iter().enumerate() {
        new_id[v] = i;
    }
    let base = rest.len();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if !inside[u] && !inside[v] {
            edges.push((new_id[u], new_id[v]));
        }
    }
    for (u, v) in h.edges() {
        edges.push((base + u, base + v));
    }
    // the outside neighborhood of a module is witnessed by any member
    for &x in g.neighbors(m[0]) {
        if !inside[x] {
            for w in 0..h.n() {
                edges.push((new_id[x], base + w));
            }
        }
    }
    Graph::from_edge_list(base + h.n(), edges).map_err(|_| ModularError::NotAModule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::fixtures;

    #[test]
    fn c4_strong_modules() {
        let c4 = fixtures::cycle(4);
        let p = maximal_strong_modules(&c4);
        assert_eq!(p.modules, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(p.kind, QuotientKind::Clique);
        let q = quotient(&c4, &p).unwrap();
        assert_eq!(q.quotient, fixtures::complete(2));
        assert_eq!(q.size_of, vec![2, 2]);
    }

    #[test]
    fn k3_strong_modules_are_singletons() {
        let k3 = fixtures::complete(3);
        let p = maximal_strong_modules(&k3);
        assert_eq!(p.modules, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(p.kind, QuotientKind::Clique);
    }

    #[test]
    fn p4_is_prime() {
        let p4 = fixtures::path(4);
        let p = maximal_strong_modules(&p4);
        assert_eq!(p.modules.len(), 4);
        assert_eq!(p.kind, QuotientKind::Prime);
        let q = quotient(&p4, &p).unwrap();
        assert_eq!(q.quotient, p4);
    }

    #[test]
    fn disconnected_gives_edgeless_quotient() {
        let g = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        let p = maximal_strong_modules(&g);
        assert_eq!(p.kind, QuotientKind::Edgeless);
        assert_eq!(p.modules, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn is_module_examples() {
        let c4 = fixtures::cycle(4);
        assert!(is_module(&c4, &[0, 2]));
        assert!(is_module(&c4, &[0, 1, 2, 3]));
        let p4 = fixtures::path(4);
        assert!(!is_module(&p4, &[1, 2]));
    }

    #[test]
    fn substitute_c4_pair_by_vertex_gives_p3() {
        let c4 = fixtures::cycle(4);
        let h = Graph::empty(1);
        let g = substitute(&c4, &[0, 2], &h).unwrap();
        // remaining 1, 3 become 0, 1; the new vertex is 2, adjacent to both
        assert_eq!(g, Graph::from_edge_list(3, [(0, 2), (1, 2)]).unwrap());
    }

    #[test]
    fn substitute_identity_preserves_structure() {
        let net = fixtures::net();
        let p = maximal_strong_modules(&net);
        for m in &p.modules {
            let (induced, _) = net.induced_subgraph(m);
            let back = substitute(&net, m, &induced).unwrap();
            assert_eq!(back.n(), net.n());
            assert_eq!(back.m(), net.m());
        }
    }

    #[test]
    fn quotient_rejects_bad_partition() {
        let p4 = fixtures::path(4);
        let bad = ModulePartition {
            modules: vec![vec![0, 1], vec![2, 3]],
            kind: QuotientKind::Prime,
        };
        assert!(quotient(&p4, &bad).is_err());
    }
}
