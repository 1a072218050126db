//! Named small graphs used as test fixtures across the workspace.
//!
//! The asteroidal-witness fixtures follow the labeling
//! (s : c1, c2 : l, b_1..b_d, r): `s` is the shallow terminal, `c1`/`c2`
//! the center(s), and l = b_0, b_1, …, b_d, b_{d+1} = r the base path.

use crate::Graph;

/// Path on `n ≥ 1` vertices, 0–1–…–(n−1).
pub fn path(n: usize) -> Graph {
    Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// Single-center asteroidal witness with base length `d ≥ 2`:
/// vertices s=0, c=1, l=2, b_1..b_d = 3..3+d−1, r = d+2+1.
/// Edges: s–c; c–b_i for all i; base path l–b_1–…–b_d–r.
/// `dagger(2)` is the net; `d ≥ 3` gives the large single-center witnesses.
pub fn dagger(d: usize) -> Graph {
    assert!(d >= 2);
    let s = 0;
    let c = 1;
    let b = |i: usize| 2 + i; // b_0 = l = 2, b_{d+1} = r
    let r = b(d + 1);
    let mut edges = vec![(s, c)];
    for i in 1..=d {
        edges.push((c, b(i)));
    }
    for i in 0..=d {
        edges.push((b(i), b(i + 1)));
    }
    Graph::from_edge_list(r + 1, edges).unwrap()
}

/// Two-center asteroidal witness with base length `d ≥ 1`:
/// vertices s=0, c1=1, c2=2, l=3, b_1..b_d = 4.., r = d+4.
/// Edges: s–c1, s–c2, c1–c2; c1–b_i for i=0..d; c2–b_i for i=1..d+1;
/// base path l–b_1–…–b_d–r. `ddagger(1)` is the sun, `ddagger(2)` the
/// rising sun; `d ≥ 3` gives the large two-center witnesses.
pub fn ddagger(d: usize) -> Graph {
    assert!(d >= 1);
    let s = 0;
    let c1 = 1;
    let c2 = 2;
    let b = |i: usize| 3 + i; // b_0 = l, b_{d+1} = r
    let r = b(d + 1);
    let mut edges = vec![(s, c1), (s, c2), (c1, c2)];
    for i in 0..=d {
        edges.push((c1, b(i)));
        edges.push((c2, b(i + 1)));
    }
    for i in 0..=d {
        edges.push((b(i), b(i + 1)));
    }
    Graph::from_edge_list(r + 1, edges).unwrap()
}

/// The net: triangle with a pendant on each triangle vertex (6 vertices).
pub fn net() -> Graph {
    dagger(2)
}

/// The (3-)sun: triangle c1 c2 c3 plus terminals t_i adjacent to two
/// consecutive triangle vertices (6 vertices, 9 edges).
pub fn sun() -> Graph {
    ddagger(1)
}

/// The rising sun (7 vertices, 12 edges).
pub fn rising_sun() -> Graph {
    ddagger(2)
}

/// The long claw: claw with every edge subdivided once (7 vertices).
/// Center 0, mid vertices 1..=3, tips 4..=6 (tip i+3 beyond mid i).
pub fn long_claw() -> Graph {
    Graph::from_edge_list(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
}

/// The whipping top (7 vertices, 10 edges): hub u adjacent to
/// t2, v2, v3, t3 and to a second center c; c adjacent to v2, v3 and to the
/// pendant terminal t1; path edges t2–v2 and v3–t3 (v2, v3 nonadjacent).
/// Labels: u=0, t1=1, t2=2, v2=3, c=4, v3=5, t3=6.
pub fn whipping_top() -> Graph {
    Graph::from_edge_list(
        7,
        [
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (4, 1),
            (4, 3),
            (4, 5),
            (2, 3),
            (5, 6),
        ],
    )
    .unwrap()
}

/// The seven minimal structures that define locally interval graphs,
/// keyed by name: net, sun, rising sun, long claw, whipping top, C4, C5.
pub fn forbidden_locally_interval() -> Vec<(&'static str, Graph)> {
    vec![
        ("net", net()),
        ("sun", sun()),
        ("rising-sun", rising_sun()),
        ("long-claw", long_claw()),
        ("whipping-top", whipping_top()),
        ("hole-4", cycle(4)),
        ("hole-5", cycle(5)),
    ]
}
