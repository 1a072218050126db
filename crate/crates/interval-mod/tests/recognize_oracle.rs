//! Recognition cross-checked against the characterization-based oracle:
//! exhaustively on all small graphs, then on random mid-size graphs.

use brute_oracle as oracle;
use graph_core::Graph;
use interval_mod::certificate::verify_certificate;
use interval_mod::interval::{model_from_path, recognize_interval};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(g: &Graph) {
    let expected = oracle::oracle_is_interval(g).unwrap();
    match recognize_interval(g) {
        Ok(k) => {
            assert!(expected, "false positive on {g:?}");
            k.validate(g).unwrap_or_else(|e| panic!("{e} on {g:?}"));
            assert!(model_from_path(&k).represents(g), "bad model for {g:?}");
        }
        Err(cert) => {
            assert!(!expected, "false negative on {g:?}");
            assert!(verify_certificate(g, &cert), "bad certificate for {g:?}");
        }
    }
}

#[test]
fn all_graphs_up_to_7() {
    for n in 1..=7 {
        for g in oracle::all_graphs_up_to_iso(n) {
            check(&g);
        }
    }
}

#[test]
fn random_graphs_up_to_12() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for trial in 0..10_000 {
        let n = rng.gen_range(4..=12);
        let p = rng.gen_range(0.15..0.7);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, edges).unwrap();
        let _ = trial;
        check(&g);
    }
}
