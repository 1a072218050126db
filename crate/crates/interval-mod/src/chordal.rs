//! Chordality: maximum-cardinality search, perfect elimination orderings
//! with certified failure (a hole), maximal cliques of chordal graphs, and
//! clique trees.

use graph_core::{Graph, Vertex};

use crate::cliques::CliqueDecomposition;

/// An elimination order: eliminating `order[0], order[1], …` in turn is
/// perfect iff the graph is chordal.
pub fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
    for v in 0..n {
        buckets[0].push(v);
    }
    let mut top = 0usize;
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !visited[v] && weight[v] == top => break v,
                Some(_) => continue,
                None => top = top.checked_sub(1).expect("a vertex remains"),
            }
        };
        visited[v] = true;
        visit_order.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
                buckets[weight[u]].push(u);
                top = top.max(weight[u]);
            }
        }
    }
    visit_order.reverse();
    visit_order
}

/// Verifies a perfect elimination ordering. On failure returns a witness
/// `(v, x, y)`: `x` and `y` are nonadjacent neighbors of `v` that both
/// come after `v` in the order.
pub fn check_peo(g: &Graph, order: &[Vertex]) -> Result<(), (Vertex, Vertex, Vertex)> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        // parent = earliest-eliminated later neighbor
        let later: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        let Some(&p) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        for &w in &later {
            if w != p && !g.has_edge(p, w) {
                return Err((v, p, w));
            }
        }
    }
    Ok(())
}

/// Either a perfect elimination ordering or a hole (in cycle order).
pub fn chordality(g: &Graph) -> Result<Vec<Vertex>, Vec<Vertex>> {
    let order = mcs_order(g);
    match check_peo(g, &order) {
        Ok(()) => Ok(order),
        Err((v, x, y)) => Err(extract_hole(g, Some((v, x, y)))),
    }
}

/// Finds a hole, preferring the hinted witness `(v, x, y)` (nonadjacent
/// `x, y ∈ N(v)`). Panics if the graph is chordal.
pub fn extract_hole(g: &Graph, hint: Option<(Vertex, Vertex, Vertex)>) -> Vec<Vertex> {
    if let Some((v, x, y)) = hint {
        if let Some(h) = hole_through(g, v, x, y) {
            return h;
        }
    }
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in nb.iter().skip(i + 1) {
                if !g.has_edge(x, y) {
                    if let Some(h) = hole_through(g, v, x, y) {
                        return h;
                    }
                }
            }
        }
    }
    panic!("extract_hole called on a chordal graph");
}

/// A hole `v, x, …, y` obtained from a shortest x–y path avoiding
/// `N[v] \ {x, y}`, if one exists.
fn hole_through(g: &Graph, v: Vertex, x: Vertex, y: Vertex) -> Option<Vec<Vertex>> {
    debug_assert!(!g.has_edge(x, y));
    let mut allowed = vec![true; g.n()];
    allowed[v] = false;
    for &u in g.neighbors(v) {
        allowed[u] = false;
    }
    allowed[x] = true;
    allowed[y] = true;
    let (tree, hit) = g.bfs_restricted(&[x], &allowed, |u| u == y);
    hit?;
    let mut hole = vec![v];
    hole.extend(tree.path_to(y));
    debug_assert!(hole.len() >= 4);
    hole
        .windows(2)
        .all(|w| g.has_edge(w[0], w[1]))
        .then_some(hole)
}

/// The maximal cliques of a chordal graph, from a perfect elimination
/// ordering. Each clique sorted; cliques in order of their earliest
/// eliminated member.
pub fn maximal_cliques_chordal(g: &Graph, peo: &[Vertex]) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    // C(v) = {v} ∪ {later neighbors of v}
    let clique_of = |v: Vertex| -> Vec<Vertex> {
        let mut c: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        c.push(v);
        c
    };
    // C(v) is non-maximal iff C(v) ⊆ C(u) for some earlier neighbor u
    let mut maximal = vec![true; n];
    let mut marked = vec![false; n];
    for &u in peo {
        let cu = clique_of(u);
        for &w in &cu {
            marked[w] = true;
        }
        for &v in g.neighbors(u) {
            if pos[v] > pos[u] && maximal[v] {
                let cv = clique_of(v);
                if cv.iter().all(|&w| marked[w]) {
                    maximal[v] = false;
                }
            }
        }
        for &w in &cu {
            marked[w] = false;
        }
    }
    peo.iter()
        .filter(|&&v| maximal[v])
        .map(|&v| {
            let mut c = clique_of(v);
            c.sort_unstable();
            c
        })
        .collect()
}

/// A clique tree of a chordal graph: maximum-weight spanning forest of the
/// clique intersection graph, completed to a tree.
pub fn clique_tree(g: &Graph) -> Result<CliqueDecomposition, Vec<Vertex>> {
    let peo = chordality(g)?;
    let bags = maximal_cliques_chordal(g, &peo);
    let q = bags.len();
    // candidate edges between bags sharing a vertex
    let mut in_bags: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, bag) in bags.iter().enumerate() {
        for &v in bag {
            in_bags[v].push(i);
        }
    }
    let mut cand: Vec<(usize, usize, usize)> = Vec::new(); // (weight, i, j)
    for v in g.vertices() {
        let list = &in_bags[v];
        for (a, &i) in list.iter().enumerate() {
            for &j in list.iter().skip(a + 1) {
                let w = bags[i].iter().filter(|&&x| bags[j].contains(&x)).count();
                cand.push((w, i.min(j), i.max(j)));
            }
        }
    }
    cand.sort_unstable();
    cand.dedup_by_key(|&mut (_, i, j)| (i, j));
    cand.sort_by(|a, b| b.0.cmp(&a.0));
    let mut dsu: Vec<usize> = (0..q).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            dsu[x] = find(dsu, dsu[x]);
        }
        dsu[x]
    }
    let mut links = Vec::new();
    for (_, i, j) in cand {
        let (ri, rj) = (find(&mut dsu, i), find(&mut dsu, j));
        if ri != rj {
            dsu[ri] = rj;
            links.push((i, j));
        }
    }
    // complete the forest (disconnected graphs) to a tree
    for i in 1..q {
        let (r0, ri) = (find(&mut dsu, 0), find(&mut dsu, i));
        if r0 != ri {
            dsu[ri] = r0;
            links.push((0, i));
        }
    }
    Ok(CliqueDecomposition::from_tree(g.n(), bags, links))
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::fixtures;

    #[test]
    fn k4_any_order_is_peo() {
        let k4 = fixtures::complete(4);
        assert!(chordality(&k4).is_ok());
    }

    #[test]
    fn c5_yields_itself_as_hole() {
        let c5 = fixtures::cycle(5);
        let hole = chordality(&c5).unwrap_err();
        assert_eq!(hole.len(), 5);
    }

    #[test]
    fn net_is_chordal() {
        let peo = chordality(&fixtures::net()).unwrap();
        assert!(check_peo(&fixtures::net(), &peo).is_ok());
    }

    #[test]
    fn hole_in_larger_graph_is_chordless() {
        // C6 with a pendant tail and a chorded triangle attached
        let g = Graph::from_edge_list(
            9,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (0, 6),
                (6, 7),
                (7, 8),
                (8, 6),
            ],
        )
        .unwrap();
        let hole = chordality(&g).unwrap_err();
        assert!(hole.len() >= 4);
        for (i, &u) in hole.iter().enumerate() {
            for (j, &v) in hole.iter().enumerate().skip(i + 1) {
                let consecutive = j == i + 1 || (i == 0 && j == hole.len() - 1);
                assert_eq!(g.has_edge(u, v), consecutive, "chord {u}-{v}");
            }
        }
    }

    #[test]
    fn net_clique_tree() {
        let net = fixtures::net();
        let k = clique_tree(&net).unwrap();
        assert_eq!(k.bags.len(), 4);
        k.validate(&net).unwrap();
        let mut sizes: Vec<usize> = k.bags.iter().map(|b| b.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2, 3]);
        assert_eq!(k.simplicial_vertices(net.n()).len(), 3);
    }

    #[test]
    fn p4_clique_tree_has_three_bags() {
        let p4 = fixtures::path(4);
        let k = clique_tree(&p4).unwrap();
        assert_eq!(k.bags.len(), 3);
        k.validate(&p4).unwrap();
        assert_eq!(k.simplicial_vertices(4), vec![0, 3]);
    }

    #[test]
    fn single_bag_for_complete_graph() {
        let k3 = fixtures::complete(3);
        let k = clique_tree(&k3).unwrap();
        assert_eq!(k.bags, vec![vec![0, 1, 2]]);
        k.validate(&k3).unwrap();
    }
}
