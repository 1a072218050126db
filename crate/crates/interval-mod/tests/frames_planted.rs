//! Randomized tests for the minimal-frame search: every returned frame
//! must carry the caw adjacency pattern, witness an actual forbidden
//! subgraph through its shortest base, and admit a separator that cuts
//! the base inside the container; every small-caw exit must verify.

use brute_oracle as oracle;
use graph_core::{fixtures, Graph, Vertex};
use interval_mod::certificate::verify_certificate;
use interval_mod::decompose::{decompose, Decomposition};
use interval_mod::frames::{
    find_minimal_frame, min_vertex_separator, shortest_base, Frame, FrameContext, FrameError,
    FrameKind, FrameOutcome,
};
use interval_mod::modular::{maximal_strong_modules, QuotientKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn is_prime(g: &Graph) -> bool {
    if g.n() < 4 {
        return false;
    }
    let p = maximal_strong_modules(g);
    p.kind == QuotientKind::Prime && p.modules.iter().all(|m| m.len() == 1)
}

/// The fixed adjacency pattern every frame must satisfy.
fn check_frame_shape(g: &Graph, f: &Frame) {
    assert!(g.has_edge(f.s, f.c1) && g.has_edge(f.s, f.c2), "s off centers");
    assert!(g.has_edge(f.c1, f.lb), "c1 misses lb");
    assert!(g.has_edge(f.c2, f.rb), "c2 misses rb");
    assert!(g.has_edge(f.l, f.lb), "l misses lb");
    assert!(g.has_edge(f.r, f.rb), "r misses rb");
    assert!(!g.has_edge(f.lb, f.rb), "base ends adjacent");
    for t in [f.l, f.lb, f.rb, f.r] {
        assert!(!g.has_edge(f.s, t), "s adjacent to the base");
    }
    match f.kind {
        FrameKind::Dagger => assert_eq!(f.c1, f.c2),
        FrameKind::DoubleDagger => {
            assert_ne!(f.c1, f.c2);
            assert!(g.has_edge(f.c1, f.c2), "centers not adjacent");
        }
    }
}

/// The frame plus its shortest base must induce a forbidden subgraph.
fn check_witness(g: &Graph, f: &Frame, ctx: &FrameContext) {
    let base = shortest_base(g, f, ctx).expect("frame without a base");
    assert_eq!(*base.first().unwrap(), f.lb);
    assert_eq!(*base.last().unwrap(), f.rb);
    for pair in base.windows(2) {
        assert!(g.has_edge(pair[0], pair[1]), "base is not a path");
    }
    let mut w: Vec<Vertex> = vec![f.s, f.c1, f.c2, f.l, f.r];
    w.extend(&base);
    w.sort_unstable();
    w.dedup();
    let cert = interval_mod::certificate::classify_forbidden(g, &w)
        .unwrap_or_else(|| panic!("frame witness is not forbidden on {g:?}: {w:?}"));
    assert!(verify_certificate(g, &cert));
}

/// The thinnest separator must cut lb from rb in the container.
fn check_separator(g: &Graph, f: &Frame, ctx: &FrameContext) {
    let sizes = vec![1usize; g.n()];
    let (ell, sep) = min_vertex_separator(ctx, &sizes);
    assert!((ctx.container.0..ctx.container.1).contains(&ell));
    assert!(!sep.is_empty(), "empty separator inside a container");
    let keep: Vec<Vertex> = ctx
        .inner
        .iter()
        .copied()
        .chain([f.lb, f.rb])
        .filter(|v| !sep.contains(v))
        .collect();
    let (sub, map) = g.induced_subgraph(&keep);
    let lbi = map.iter().position(|&v| v == f.lb).unwrap();
    let rbi = map.iter().position(|&v| v == f.rb).unwrap();
    let allowed = vec![true; sub.n()];
    let (_, hit) = sub.bfs_restricted(&[lbi], &allowed, |x| x == rbi);
    assert!(hit.is_none(), "separator fails to cut the base on {g:?}");
}

fn exercise(g: &Graph) -> &'static str {
    let Ok(dec) = decompose(g) else {
        return "no-dec";
    };
    match find_minimal_frame(g, &dec) {
        Ok(FrameOutcome::Frame(f, ctx)) => {
            check_frame_shape(g, &f);
            check_witness(g, &f, &ctx);
            check_separator(g, &f, &ctx);
            "frame"
        }
        Ok(FrameOutcome::Caw(cert)) => {
            assert!(verify_certificate(g, &cert), "bad caw certificate on {g:?}");
            "caw"
        }
        Err(FrameError::Precondition(_)) => "precondition",
        Err(FrameError::NotFound) => "notfound",
        Err(FrameError::TooWide) => unreachable!("search never reports TooWide"),
    }
}

#[test]
fn planted_daggers_with_decorations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xF4A3);
    let mut frames = 0usize;
    let mut caws = 0usize;
    for _ in 0..600 {
        let d = rng.gen_range(3..=8);
        let base = if rng.gen_bool(0.5) {
            fixtures::dagger(d)
        } else {
            fixtures::ddagger(d)
        };
        // decorate with a few extra simplicial hangers on base vertices
        let n0 = base.n();
        let extra = rng.gen_range(0..=2);
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for u in base.vertices() {
            for &v in base.neighbors(u) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        for i in 0..extra {
            let a = rng.gen_range(0..n0);
            edges.push((n0 + i, a));
        }
        let g = Graph::from_edge_list(n0 + extra, edges).unwrap();
        if !is_prime(&g) {
            continue;
        }
        match exercise(&g) {
            "frame" => frames += 1,
            "caw" => caws += 1,
            other => panic!("planted caw fell through ({other}) on {g:?}"),
        }
    }
    assert!(frames > 100, "too few frames ({frames})");
    assert!(caws > 10, "too few caw exits ({caws})");
}

#[test]
fn random_prime_graphs_never_panic_and_frames_verify() {
    let mut frames = 0usize;
    let mut caws = 0usize;
    for trial in 0..3000 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xF00D + trial);
        let n = rng.gen_range(6..=11);
        let p = rng.gen_range(0.2..0.5);
        let g = oracle::random_connected_graph(n, p, 0xBEEF + trial);
        if !is_prime(&g) {
            continue;
        }
        match exercise(&g) {
            "frame" => frames += 1,
            "caw" => caws += 1,
            _ => {}
        }
    }
    // random dense-ish graphs mostly die earlier in the pipeline; the
    // point here is that whatever reaches the frame search checks out
    assert!(frames + caws > 0, "frame search never exercised");
}

#[test]
fn chordal_prime_fixtures_all_produce_frames_or_caws() {
    // every large caw must resolve: small d exits as a certificate or a
    // frame with a three-module base, larger d always frames
    for d in 3..=12 {
        for g in [fixtures::dagger(d), fixtures::ddagger(d)] {
            let outcome = exercise(&g);
            assert!(
                outcome == "frame" || outcome == "caw",
                "pure caw fell through ({outcome}) on d={d}"
            );
            if d >= 4 {
                assert_eq!(outcome, "frame", "large caw d={d} must frame");
            }
        }
    }
}

#[test]
fn small_caw_fixtures_exit_with_certificates() {
    for g in [
        fixtures::net(),
        fixtures::sun(),
        fixtures::rising_sun(),
        fixtures::long_claw(),
        fixtures::whipping_top(),
    ] {
        let Ok(dec) = decompose(&g) else {
            // chordality or hole handling may already certify upstream
            continue;
        };
        match find_minimal_frame(&g, &dec) {
            Ok(FrameOutcome::Caw(cert)) => {
                assert!(verify_certificate(&g, &cert))
            }
            other => panic!("small caw fixture produced {other:?} on {g:?}"),
        }
    }
}

#[test]
fn ring_decompositions_support_frames() {
    // a long hole with a pendant caw grafted on: the spine is circular,
    // so the frame search must rotate the window away from the wrap
    let mut rng = ChaCha8Rng::seed_from_u64(0x51DE);
    let mut frames = 0usize;
    let mut caws = 0usize;
    for _ in 0..2000 {
        // a hole with a vertex u glued onto an arc, and a pendant
        // simplicial vertex hanging off u: the only caws run around u
        let l = rng.gen_range(8..=12);
        let span = rng.gen_range(2..=4);
        let start = rng.gen_range(0..l);
        let mut edges: Vec<(Vertex, Vertex)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
        let u = l;
        for k in 0..span {
            edges.push((u, (start + k) % l));
        }
        edges.push((l + 1, u));
        let g = Graph::from_edge_list(l + 2, edges).unwrap();
        if !is_prime(&g) {
            continue;
        }
        let Ok(Decomposition::Ring(_)) = decompose(&g) else {
            continue;
        };
        match exercise(&g) {
            "frame" => frames += 1,
            "caw" => caws += 1,
            other => panic!("ring frame search fell through ({other}) on {g:?}"),
        }
    }
    assert!(frames > 100, "too few ring frames ({frames})");
    assert!(caws > 100, "too few ring caw exits ({caws})");
}
