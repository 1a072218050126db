//! Cross-checks of the modular decomposition wrapper against the
//! brute-force module enumeration oracle on all small graphs.

use brute_oracle as oracle;
use graph_core::Graph;
use interval_mod::modular::{is_module, maximal_strong_modules, quotient, QuotientKind};

fn all_small_graphs(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .flat_map(oracle::all_graphs_up_to_iso)
        .collect()
}

/// Maximal proper strong modules straight from the definition.
fn oracle_msm(g: &Graph) -> Vec<Vec<usize>> {
    let strong = oracle::enumerate_strong_modules(g);
    let proper: Vec<&Vec<usize>> = strong.iter().filter(|m| m.len() < g.n()).collect();
    let mut out: Vec<Vec<usize>> = proper
        .iter()
        .filter(|m| {
            !proper
                .iter()
                .any(|o| o.len() > m.len() && m.iter().all(|v| o.contains(v)))
        })
        .map(|m| (*m).clone())
        .collect();
    out.sort_by_key(|m| m[0]);
    out
}

#[test]
fn matches_definition_on_all_graphs_up_to_6() {
    for g in all_small_graphs(6) {
        let p = maximal_strong_modules(&g);
        let mut covered = vec![false; g.n()];
        for m in &p.modules {
            assert!(is_module(&g, m), "non-module in {g:?}");
            for &v in m {
                assert!(!covered[v], "overlap in {g:?}");
                covered[v] = true;
            }
        }
        assert!(covered.iter().all(|&b| b), "not covering in {g:?}");
        assert_eq!(p.modules, oracle_msm(&g), "wrong partition for {g:?}");
    }
}

#[test]
fn trichotomy_and_prime_quotients() {
    for g in all_small_graphs(6) {
        let p = maximal_strong_modules(&g);
        let expected = if !g.is_connected() {
            QuotientKind::Edgeless
        } else if !g.complement().is_connected() {
            QuotientKind::Clique
        } else {
            QuotientKind::Prime
        };
        assert_eq!(p.kind, expected, "kind mismatch for {g:?}");
        let q = quotient(&g, &p).unwrap();
        assert_eq!(q.size_of.iter().sum::<usize>(), g.n());
        match p.kind {
            QuotientKind::Edgeless => assert_eq!(q.quotient.m(), 0),
            QuotientKind::Clique => assert!(q.quotient.is_clique(
                &q.quotient.vertices().collect::<Vec<_>>()
            )),
            QuotientKind::Prime => {
                // only trivial modules in the quotient
                let mods = oracle::enumerate_modules(&q.quotient);
                assert_eq!(mods.len(), q.quotient.n() + 1, "non-prime quotient of {g:?}");
            }
        }
    }
}

#[test]
fn interval_iff_quotient_structure() {
    // for graphs without universal vertices: G is interval iff the quotient
    // is interval and not a clique, every module behind a simplicial
    // quotient vertex induces an interval graph, and every module behind a
    // non-simplicial quotient vertex is a clique
    for g in all_small_graphs(7) {
        if g.n() < 2 || g.vertices().any(|v| g.is_universal(v)) {
            continue;
        }
        let p = maximal_strong_modules(&g);
        let q = quotient(&g, &p).unwrap();
        let qv: Vec<usize> = q.quotient.vertices().collect();
        let mut rhs = oracle::oracle_is_interval(&q.quotient).unwrap()
            && !q.quotient.is_clique(&qv);
        if rhs {
            for (i, m) in q.module_of.iter().enumerate() {
                let (sub, _) = g.induced_subgraph(m);
                if q.quotient.is_simplicial(i) {
                    rhs &= oracle::oracle_is_interval(&sub).unwrap();
                } else {
                    rhs &= g.is_clique(m);
                }
            }
        }
        let lhs = oracle::oracle_is_interval(&g).unwrap();
        assert_eq!(lhs, rhs, "corollary fails for {g:?}");
    }
}
