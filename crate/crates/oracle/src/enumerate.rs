//! Canonical forms and exhaustive generation of small graphs up to
//! isomorphism, by vertex augmentation with canonical deduplication.

use std::collections::HashSet;

use graph_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest vertex count for the packed upper-triangle representation.
const MAX_CANON_N: usize = 11; // 11*10/2 = 55 bits

fn pair_bit(n: usize, i: usize, j: usize) -> u32 {
    debug_assert!(i < j && j < n);
    (i * n - i * (i + 1) / 2 + (j - i - 1)) as u32
}

fn pack(n: usize, rows: &[u64], perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if rows[perm[i]] >> perm[j] & 1 == 1 {
                code |= 1 << pair_bit(n, i, j);
            }
        }
    }
    code
}

fn unpack(n: usize, code: u64) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_bit(n, i, j) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

fn rows_of(g: &Graph) -> Vec<u64> {
    let mut rows = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

fn graph_of(n: usize, rows: &[u64]) -> Graph {
    let edges = (0..n).flat_map(|u| {
        (u + 1..n).filter_map(move |v| (rows[u] >> v & 1 == 1).then_some((u, v)))
    });
    Graph::from_edge_list(n, edges).unwrap()
}

/// Iteratively refined vertex invariants (degree, then neighbor multisets).
fn refine(n: usize, rows: &[u64]) -> Vec<u64> {
    let mut inv: Vec<u64> = (0..n).map(|v| rows[v].count_ones() as u64).collect();
    for _ in 0..n {
        let classes: HashSet<u64> = inv.iter().copied().collect();
        let before = classes.len();
        let mut next = vec![0u64; n];
        for v in 0..n {
            let mut nb: Vec<u64> = (0..n)
                .filter(|&u| rows[v] >> u & 1 == 1)
                .map(|u| inv[u])
                .collect();
            nb.sort_unstable();
            let mut h = inv[v].wrapping_mul(0x9e3779b97f4a7c15);
            for x in nb {
                h = h.rotate_left(5).wrapping_mul(0x100000001b3) ^ x;
            }
            next[v] = h;
        }
        inv = next;
        let after: HashSet<u64> = inv.iter().copied().collect();
        if after.len() == before {
            break;
        }
    }
    inv
}

fn canon_rows(n: usize, rows: &[u64]) -> u64 {
    assert!(n <= MAX_CANON_N);
    if n <= 1 {
        return 0;
    }
    let inv = refine(n, rows);
    // cells ordered by invariant value; permutations respect cell order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| inv[v]);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match cells.last() {
            Some(c) if inv[c[0]] == inv[v] => cells.last_mut().unwrap().push(v),
            _ => cells.push(vec![v]),
        }
    }

    let mut best = 0u64;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    fn go(
        cells: &[Vec<usize>],
        ci: usize,
        used: &mut u64,
        perm: &mut Vec<usize>,
        n: usize,
        rows: &[u64],
        best: &mut u64,
    ) {
        if ci == cells.len() {
            let code = pack(n, rows, perm);
            if code > *best {
                *best = code;
            }
            return;
        }
        let cell = &cells[ci];
        for &v in cell {
            if *used >> v & 1 == 1 {
                continue;
            }
            *used |= 1 << v;
            perm.push(v);
            if cell.iter().all(|&u| *used >> u & 1 == 1) {
                go(cells, ci + 1, used, perm, n, rows, best);
            } else {
                go(cells, ci, used, perm, n, rows, best);
            }
            perm.pop();
            *used &= !(1 << v);
        }
    }
    let mut used = 0u64;
    go(&cells, 0, &mut used, &mut perm, n, rows, &mut best);
    best
}

/// A label-independent code: equal for two graphs iff they are isomorphic.
/// Supports `n ≤ 11`.
pub fn canonical_form(g: &Graph) -> u64 {
    canon_rows(g.n(), &rows_of(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

/// All graphs on exactly `n` labeled-irrelevant vertices, one representative
/// per isomorphism class, generated by vertex augmentation.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_CANON_N).contains(&n));
    let mut level: HashSet<u64> = HashSet::new();
    level.insert(0); // the single graph on one vertex
    for k in 2..=n {
        let mut next: HashSet<u64> = HashSet::new();
        for &code in &level {
            let mut rows = unpack(k - 1, code);
            rows.push(0);
            for nb in 0u64..1 << (k - 1) {
                rows[k - 1] = nb;
                for v in 0..k - 1 {
                    rows[v] = rows[v] & !(1 << (k - 1)) | ((nb >> v & 1) << (k - 1));
                }
                next.insert(canon_rows(k, &rows));
            }
        }
        level = next;
    }
    let mut codes: Vec<u64> = level.into_iter().collect();
    codes.sort_unstable();
    codes.iter().map(|&c| graph_of(n, &unpack(n, c))).collect()
}

/// Connected graphs on `n` vertices, up to isomorphism.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    all_graphs_up_to_iso(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

/// A random connected graph on `n` vertices with edge probability `p`,
/// deterministic in `seed`. Resamples until connected.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}
