//! Module enumeration straight from the definition, for cross-checking the
//! fast modular decomposition. Practical for `n ≤ 12` or so.

use graph_core::{Graph, Vertex};

fn is_module_mask(adj: &[u64], n: usize, m: u64) -> bool {
    for v in 0..n {
        if m >> v & 1 == 1 {
            continue;
        }
        let hit = adj[v] & m;
        if hit != 0 && hit != m {
            return false;
        }
    }
    true
}

fn adjacency_words(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// All nonempty modules, as sorted vertex lists, sorted lexicographically.
pub fn enumerate_modules(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    assert!(n <= 20, "module enumeration is exponential in n");
    let adj = adjacency_words(g);
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for m in 1u64..1 << n {
        if is_module_mask(&adj, n, m) {
            out.push((0..n).filter(|&v| m >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

/// Strong modules: modules overlapping no other module (two sets overlap
/// when they intersect but neither contains the other).
pub fn enumerate_strong_modules(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    assert!(n <= 20, "module enumeration is exponential in n");
    let adj = adjacency_words(g);
    let mods: Vec<u64> = (1u64..1 << n)
        .filter(|&m| is_module_mask(&adj, n, m))
        .collect();
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for &m in &mods {
        let overlapped = mods.iter().any(|&o| {
            let i = m & o;
            i != 0 && i != m && i != o
        });
        if !overlapped {
            out.push((0..n).filter(|&v| m >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::fixtures;

    #[test]
    fn c4_modules() {
        let c4 = fixtures::cycle(4);
        let mods = enumerate_modules(&c4);
        // singletons, the two "antipodal" pairs, and V
        assert_eq!(
            mods,
            vec![
                vec![0],
                vec![0, 1, 2, 3],
                vec![0, 2],
                vec![1],
                vec![1, 3],
                vec![2],
                vec![3],
            ]
        );
        // all of those are strong: the two pairs intersect only in nothing
        assert_eq!(enumerate_strong_modules(&c4), mods);
    }

    #[test]
    fn p4_has_only_trivial_modules() {
        let p4 = fixtures::path(4);
        let mods = enumerate_modules(&p4);
        assert_eq!(mods.len(), 5); // 4 singletons + V
    }

    #[test]
    fn clique_modules_are_all_subsets_but_few_are_strong() {
        let k3 = fixtures::complete(3);
        assert_eq!(enumerate_modules(&k3).len(), 7);
        let strong = enumerate_strong_modules(&k3);
        assert_eq!(strong, vec![vec![0], vec![0, 1, 2], vec![1], vec![2]]);
    }
}
