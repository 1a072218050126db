//! Maximal clique enumeration (Bron–Kerbosch with pivoting), used as the
//! reference for clique paths of interval graphs.

use graph_core::{Graph, Vertex};

/// All maximal cliques, each sorted, the list sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p: Vec<Vertex> = g.vertices().collect();
    bk(g, &mut r, p, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bk(g: &Graph, r: &mut Vec<Vertex>, p: Vec<Vertex>, x: Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
        .unwrap();
    let candidates: Vec<Vertex> = p
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np: Vec<Vertex> = p.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        let nx: Vec<Vertex> = x.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        r.push(v);
        bk(g, r, np, nx, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::fixtures;

    #[test]
    fn path_cliques_are_edges() {
        let p4 = fixtures::path(4);
        assert_eq!(
            maximal_cliques(&p4),
            vec![vec![0, 1], vec![1, 2], vec![2, 3]]
        );
    }

    #[test]
    fn complete_graph_is_one_clique() {
        assert_eq!(maximal_cliques(&fixtures::complete(5)), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn net_has_four_cliques() {
        // the triangle plus three pendant edges
        let net = fixtures::net();
        let cliques = maximal_cliques(&net);
        assert_eq!(cliques.len(), 4);
        assert!(cliques.iter().any(|c| c.len() == 3));
        assert_eq!(cliques.iter().filter(|c| c.len() == 2).count(), 3);
    }

    #[test]
    fn isolated_vertices_are_cliques() {
        let g = Graph::empty(3);
        assert_eq!(maximal_cliques(&g), vec![vec![0], vec![1], vec![2]]);
    }
}
