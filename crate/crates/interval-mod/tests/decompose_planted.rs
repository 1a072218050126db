//! Randomized tests for the decomposition pipeline: random prime graphs
//! must always yield either a verified forbidden subgraph or a valid
//! clique decomposition whose bags are exactly the maximal cliques
//! (cross-checked against the brute-force enumerator), and graphs
//! certified free of forbidden structures must always decompose.

use brute_oracle as oracle;
use graph_core::{Graph, Vertex};
use interval_mod::certificate::{classify_forbidden, verify_certificate, CertificateKind};
use interval_mod::decompose::{
    anchor_hole, classify_and_build_aux, decompose, shortest_hole, transfer_simplicials,
    Decomposition, DecomposeError,
};
use interval_mod::fli::HoleIndex;
use interval_mod::modular::{maximal_strong_modules, QuotientKind};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn has_fli_member(g: &Graph) -> bool {
    use CertificateKind::*;
    let vs: Vec<Vertex> = g.vertices().collect();
    // members of size up to 7 cover the whole family except long holes
    for size in 4..=7.min(vs.len()) {
        for combo in vs.iter().copied().combinations(size) {
            if let Some(c) = classify_forbidden(g, &combo) {
                if matches!(c.kind, Hole4 | Hole5 | Net | Sun | RisingSun | LongClaw | WhippingTop)
                {
                    return true;
                }
            }
        }
    }
    false
}

fn is_prime(g: &Graph) -> bool {
    if g.n() < 4 {
        return false;
    }
    let p = maximal_strong_modules(g);
    p.kind == QuotientKind::Prime && p.modules.iter().all(|m| m.len() == 1)
}

fn sorted_bags(bags: &[Vec<Vertex>]) -> Vec<Vec<Vertex>> {
    let mut out: Vec<Vec<Vertex>> = bags
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    out.sort();
    out
}

fn check_decomposition(g: &Graph, dec: &interval_mod::cliques::CliqueDecomposition) {
    dec.validate(g).unwrap_or_else(|e| panic!("{e} on {g:?}"));
    let mut expected = sorted_bags(&oracle::maximal_cliques(g));
    expected.sort();
    expected.dedup();
    assert_eq!(
        sorted_bags(&dec.bags),
        expected,
        "bags differ from the maximal cliques on {g:?}"
    );
}

/// A long cycle with extra vertices glued onto short arcs, plus a few
/// simplicial hangers: stays close to the circular structures the
/// pipeline targets while still producing plenty of broken instances.
fn random_ringish(rng: &mut ChaCha8Rng) -> Graph {
    let l = rng.gen_range(6..=9);
    let arcs = rng.gen_range(0..=3);
    let hangers = rng.gen_range(0..=2);
    let mut edges: Vec<(Vertex, Vertex)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    let mut next = l;
    for _ in 0..arcs {
        let start = rng.gen_range(0..l);
        let span = rng.gen_range(1..=3);
        for k in 0..span {
            edges.push((next, (start + k) % l));
        }
        next += 1;
    }
    for _ in 0..hangers {
        // attach to a random existing vertex and one of its neighbors
        let a = rng.gen_range(0..next);
        edges.push((next, a));
        if rng.gen_bool(0.5) {
            let nb: Vec<Vertex> = edges
                .iter()
                .filter_map(|&(x, y)| {
                    if x == a {
                        Some(y)
                    } else if y == a {
                        Some(x)
                    } else {
                        None
                    }
                })
                .collect();
            if let Some(&b) = nb.first() {
                edges.push((next, b));
            }
        }
        next += 1;
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edge_list(next, edges).unwrap()
}

#[test]
fn prime_locally_interval_graphs_decompose() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xDEC0);
    let mut decomposed = 0usize;
    for _ in 0..4000 {
        let g = random_ringish(&mut rng);
        if !is_prime(&g) || has_fli_member(&g) {
            continue;
        }
        match decompose(&g) {
            Ok(Decomposition::Ring(ring)) => {
                check_decomposition(&g, &ring.dec);
                // SP must be exactly the vertices outside the main cycle
                for &v in &ring.sp {
                    assert!(
                        (0..ring.dec.main_len).all(|i| !ring.dec.bags[i].contains(&v)),
                        "SP vertex {v} on the main cycle of {g:?}"
                    );
                }
                decomposed += 1;
            }
            Ok(Decomposition::Caterpillar(dec)) => {
                check_decomposition(&g, &dec);
                decomposed += 1;
            }
            Err(e) => panic!("decomposition refused on prime clean graph {g:?}: {e}"),
        }
    }
    assert!(decomposed > 400, "too few clean trials ({decomposed})");
}

#[test]
fn prime_graphs_never_fall_through() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFA17);
    let mut certified = 0usize;
    for trial in 0..4000 {
        let n = rng.gen_range(6..=11);
        let p = rng.gen_range(0.2..0.55);
        let g = oracle::random_connected_graph(n, p, 0x9000 + trial);
        if !is_prime(&g) {
            continue;
        }
        match decompose(&g) {
            Ok(Decomposition::Ring(ring)) => check_decomposition(&g, &ring.dec),
            Ok(Decomposition::Caterpillar(dec)) => check_decomposition(&g, &dec),
            Err(DecomposeError::Forbidden(cert)) => {
                assert!(verify_certificate(&g, &cert), "bad certificate on {g:?}");
                certified += 1;
            }
            Err(e) => panic!("fell through ({e}) on {g:?}"),
        }
    }
    assert!(certified > 1000, "too few certified trials ({certified})");
}

#[test]
fn anchoring_and_simplicial_transfer_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA2C4);
    let mut transferred = 0usize;
    for _ in 0..4000 {
        let g = random_ringish(&mut rng);
        if !is_prime(&g) {
            continue;
        }
        let Err(hole) = interval_mod::chordal::chordality(&g) else {
            continue;
        };
        if hole.len() < 6 {
            continue;
        }
        let Ok(anchored) = anchor_hole(&g, &hole) else {
            continue;
        };
        assert!(anchored.len() >= 6);
        HoleIndex::new(&g, anchored.clone()).expect("anchored sequence is not a hole");
        let Ok(aux) = classify_and_build_aux(&g, &anchored) else {
            continue;
        };
        assert!(aux.graph.n() <= 2 * g.n() + 1);
        let si = transfer_simplicials(&aux);
        let mut direct = g.simplicial_vertices();
        direct.sort_unstable();
        assert_eq!(si, direct, "simplicial transfer differs on {g:?}");
        transferred += 1;
    }
    assert!(transferred > 400, "too few transfer trials ({transferred})");
}

#[test]
fn shortest_hole_matches_brute_minimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5402);
    let mut checked = 0usize;
    for _ in 0..4000 {
        let g = random_ringish(&mut rng);
        if !is_prime(&g) || has_fli_member(&g) {
            continue;
        }
        let Ok(Decomposition::Ring(ring)) = decompose(&g) else {
            continue;
        };
        let hole = shortest_hole(&g, &ring.dec).unwrap();
        HoleIndex::new(&g, hole.clone()).expect("reported hole is not chordless");
        // brute shortest hole length: a vertex set induces a hole exactly
        // when its induced subgraph is connected and 2-regular
        let induces_hole = |combo: &[Vertex]| {
            let (sub, _) = g.induced_subgraph(combo);
            sub.is_connected() && sub.vertices().all(|v| sub.degree(v) == 2)
        };
        let brute = (4..=g.n())
            .find(|&len| g.vertices().combinations(len).any(|c| induces_hole(&c)))
            .expect("graph with a ring decomposition has a hole");
        assert_eq!(hole.len(), brute, "shortest hole length differs on {g:?}");
        checked += 1;
    }
    assert!(checked > 200, "too few shortest-hole trials ({checked})");
}
