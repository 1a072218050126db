//! Interval recognition with certificates, and interval/circular-arc
//! models read off clique decompositions.

use graph_core::{Graph, Vertex};
use pq_tree::PQTree;

use crate::certificate::{classify_forbidden, Certificate};
use crate::chordal::{chordality, maximal_cliques_chordal};
use crate::cliques::{CliqueDecomposition, Shape};
use crate::rational::Rational;

/// An interval model: one closed interval per vertex, intersecting iff
/// the vertices are adjacent.
#[derive(Debug, Clone)]
pub struct IntervalModel {
    pub intervals: Vec<(Rational, Rational)>,
}

impl IntervalModel {
    pub fn represents(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.intervals.len() != n {
            return false;
        }
        if self.intervals.iter().any(|&(l, r)| l >= r) {
            return false;
        }
        for u in 0..n {
            for v in u + 1..n {
                let (lu, ru) = self.intervals[u];
                let (lv, rv) = self.intervals[v];
                let meet = lu <= rv && lv <= ru;
                if meet != g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Serialization: one line `v lp rp` per vertex, rationals as `p/q`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, (l, r)) in self.intervals.iter().enumerate() {
            out.push_str(&format!("{v} {l} {r}\n"));
        }
        out
    }
}

/// A circular-arc model on a circle `[0, circle)`; arcs with `lp > rp`
/// pass through point 0.
#[derive(Debug, Clone)]
pub struct ArcModel {
    pub circle: Rational,
    pub arcs: Vec<(Rational, Rational)>,
}

impl ArcModel {
    fn contains(&self, arc: (Rational, Rational), x: Rational) -> bool {
        let (l, r) = arc;
        if l <= r {
            l <= x && x <= r
        } else {
            x >= l || x <= r
        }
    }

    fn intersects(&self, a: (Rational, Rational), b: (Rational, Rational)) -> bool {
        self.contains(a, b.0) || self.contains(b, a.0)
    }

    pub fn represents(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.arcs.len() != n {
            return false;
        }
        for u in 0..n {
            for v in u + 1..n {
                if self.intersects(self.arcs[u], self.arcs[v]) != g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff no set of at most three arcs covers the whole circle —
    /// equivalently, the model is normal and Helly.
    pub fn no_three_arcs_cover(&self) -> bool {
        let q = self.arcs.len();
        let mut idx: Vec<Vec<usize>> = Vec::new();
        for a in 0..q {
            idx.push(vec![a]);
            for b in a + 1..q {
                idx.push(vec![a, b]);
                for c in b + 1..q {
                    idx.push(vec![a, b, c]);
                }
            }
        }
        !idx.iter().any(|set| self.covers(set))
    }

    fn covers(&self, set: &[usize]) -> bool {
        // collect endpoints as cut points; the set covers the circle iff
        // it covers every endpoint and every midpoint of consecutive ones
        let mut points: Vec<Rational> = set
            .iter()
            .flat_map(|&i| [self.arcs[i].0, self.arcs[i].1])
            .collect();
        points.sort();
        points.dedup();
        let covered = |x: Rational| set.iter().any(|&i| self.contains(self.arcs[i], x));
        for (k, &p) in points.iter().enumerate() {
            if !covered(p) {
                return false;
            }
            let next = points[(k + 1) % points.len()];
            let mid = if k + 1 < points.len() {
                Rational::new(
                    p.num() * next.den() + next.num() * p.den(),
                    2 * p.den() * next.den(),
                )
            } else {
                // midpoint of the wrap gap [last, circle + first]
                Rational::new(
                    p.num() * next.den()
                        + (next.num() + self.circle.num() * next.den()) * p.den(),
                    2 * p.den() * next.den(),
                )
            };
            let mid = normalize_mod(mid, self.circle);
            if !covered(mid) {
                return false;
            }
        }
        true
    }
}

fn normalize_mod(x: Rational, circle: Rational) -> Rational {
    let mut x = x;
    while x >= circle {
        x = Rational::new(
            x.num() * circle.den() - circle.num() * x.den(),
            x.den() * circle.den(),
        );
    }
    x
}

/// Orders the given maximal cliques so that for every vertex, the cliques
/// containing it are consecutive. `extra` adds further consecutivity
/// constraints (sets of clique indices). Returns the clique order, or
/// `None` if no consecutive arrangement exists.
pub fn consecutive_clique_order(
    cliques: &[Vec<Vertex>],
    n: usize,
    extra: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let q = cliques.len();
    if q <= 1 {
        return Some((0..q).collect());
    }
    let leaves: Vec<usize> = (0..q).collect();
    let mut tree = PQTree::from_leaves(&leaves).ok()?;
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            occ[v].push(i);
        }
    }
    for v in 0..n {
        if occ[v].len() >= 2 {
            tree = tree.reduction(&occ[v]).ok()?;
        }
    }
    for constraint in extra {
        if constraint.len() >= 2 {
            tree = tree.reduction(constraint).ok()?;
        }
    }
    Some(tree.frontier())
}

/// Interval recognition: a clique path decomposition, or a certificate —
/// a hole or caw induced in `G`.
pub fn recognize_interval(g: &Graph) -> Result<CliqueDecomposition, Certificate> {
    match recognize_step(g) {
        RecognizeOutcome::Path(k) => Ok(k),
        RecognizeOutcome::Hole(h) => {
            Err(classify_forbidden(g, &h).expect("a chordless cycle classifies as a hole"))
        }
        RecognizeOutcome::NotConsecutive => {
            let minimal = minimal_noninterval(g);
            Err(classify_forbidden(g, &minimal)
                .expect("a minimal non-interval chordal subgraph is a caw"))
        }
    }
}

enum RecognizeOutcome {
    Path(CliqueDecomposition),
    Hole(Vec<Vertex>),
    NotConsecutive,
}

fn recognize_step(g: &Graph) -> RecognizeOutcome {
    let peo = match chordality(g) {
        Ok(peo) => peo,
        Err(hole) => return RecognizeOutcome::Hole(hole),
    };
    let cliques = maximal_cliques_chordal(g, &peo);
    match consecutive_clique_order(&cliques, g.n(), &[]) {
        Some(order) => {
            let bags: Vec<Vec<Vertex>> = order.into_iter().map(|i| cliques[i].clone()).collect();
            let k = CliqueDecomposition::from_path(g.n(), bags);
            debug_assert_eq!(k.validate(g), Ok(()));
            RecognizeOutcome::Path(k)
        }
        None => RecognizeOutcome::NotConsecutive,
    }
}

/// Plain interval test (no certificate construction).
pub fn is_interval(g: &Graph) -> bool {
    matches!(recognize_step(g), RecognizeOutcome::Path(_))
}

/// Shrinks a non-interval graph to an inclusion-minimal non-interval
/// induced subgraph by one greedy deletion pass.
pub fn minimal_noninterval(g: &Graph) -> Vec<Vertex> {
    debug_assert!(!is_interval(g));
    let mut kept: Vec<Vertex> = g.vertices().collect();
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        let (sub, _) = g.induced_subgraph(&trial);
        if !is_interval(&sub) {
            kept = trial;
        } else {
            i += 1;
        }
    }
    kept
}

/// The interval model `I_v = [lint(v) − 1/3, rint(v) + 1/3]` of a clique
/// path decomposition.
pub fn model_from_path(k: &CliqueDecomposition) -> IntervalModel {
    assert_eq!(k.shape, Shape::Path, "model_from_path needs a path");
    let n = k.lint.len();
    let intervals = (0..n)
        .map(|v| {
            (
                Rational::minus_third(k.lint_of(v) as i64),
                Rational::plus_third(k.rint_of(v) as i64),
            )
        })
        .collect();
    IntervalModel { intervals }
}

/// The circular-arc model of a hole decomposition on a circle of length
/// `|K|`: arcs `[lint − 1/3, rint + 1/3]`, with the left endpoint moved to
/// `|K| − 1/3` when `lint = 0`.
pub fn arc_model_from_hole(k: &CliqueDecomposition) -> ArcModel {
    assert_eq!(k.shape, Shape::Hole, "arc_model_from_hole needs a hole");
    let len = k.main_len as i64;
    let n = k.lint.len();
    let arcs = (0..n)
        .map(|v| {
            let l = k.lint_of(v) as i64;
            let r = k.rint_of(v) as i64;
            let lp = if l > 0 {
                Rational::minus_third(l)
            } else {
                Rational::minus_third(len)
            };
            (lp, Rational::plus_third(r))
        })
        .collect();
    ArcModel {
        circle: Rational::int(len),
        arcs,
    }
}
