//! The three interval modification solvers — vertex deletion, edge
//! deletion, and completion — as bounded-width branching over the quotient
//! structure, plus hole filling and a ratio-8 approximation for vertex
//! deletion.
//!
//! Each solver is a decision procedure at budget `k`: branches are tried
//! in a fixed order and the first surviving branch wins, so Yes answers
//! carry a modification set of size at most `k` (not necessarily minimum;
//! a caller wanting the minimum scans budgets upward, see
//! [`solve_minimum`]). Every node either reduces the budget, recurses
//! into a strictly smaller subinstance, or finishes the instance with a
//! minimum hole cover.

use std::collections::BTreeSet;

use graph_core::{norm_edge, Edge, Graph, Vertex};

use crate::certificate::{Certificate, CertificateKind};
use crate::chordal::chordality;
use crate::cliques::CliqueDecomposition;
use crate::decompose::{decompose, shortest_hole, Decomposition, DecomposeError};
use crate::frames::{
    find_minimal_frame, min_edge_cut, min_vertex_separator, shortest_base, FrameOutcome,
};
use crate::interval::{is_interval, minimal_noninterval, model_from_path, recognize_interval, IntervalModel};
use crate::modular::{maximal_strong_modules, quotient, QuotientGraph, QuotientKind};

/// Which modification problem a solver run addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverVariant {
    VertexDeletion,
    EdgeDeletion,
    Completion,
}

/// A single modification operation, in host-graph labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    DelVertex(Vertex),
    DelEdge(Vertex, Vertex),
    AddEdge(Vertex, Vertex),
}

/// A modification set: a homogeneous list of operations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModSet {
    pub ops: Vec<Op>,
}

impl ModSet {
    pub fn vertex_deletions(vs: Vec<Vertex>) -> Self {
        ModSet {
            ops: vs.into_iter().map(Op::DelVertex).collect(),
        }
    }

    pub fn edge_deletions(es: Vec<Edge>) -> Self {
        ModSet {
            ops: es.into_iter().map(|(u, v)| Op::DelEdge(u, v)).collect(),
        }
    }

    pub fn edge_additions(es: Vec<Edge>) -> Self {
        ModSet {
            ops: es.into_iter().map(|(u, v)| Op::AddEdge(u, v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Applies the operations to `g`. Returns the modified graph and the
    /// new-id → old-id vertex map (the identity when no vertex is
    /// deleted).
    pub fn apply(&self, g: &Graph) -> (Graph, Vec<Vertex>) {
        let mut dels: Vec<Vertex> = Vec::new();
        let mut removed: Vec<Edge> = Vec::new();
        let mut added: Vec<Edge> = Vec::new();
        for &op in &self.ops {
            match op {
                Op::DelVertex(v) => dels.push(v),
                Op::DelEdge(u, v) => removed.push((u, v)),
                Op::AddEdge(u, v) => added.push((u, v)),
            }
        }
        let h = g.with_edges_removed(&removed).with_edges_added(&added);
        if dels.is_empty() {
            (h, g.vertices().collect())
        } else {
            h.with_vertices_removed(&dels)
        }
    }
}

/// Search statistics of a solver run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverStats {
    /// Number of search-tree nodes visited.
    pub nodes: usize,
    /// Maximum recursion depth reached.
    pub max_depth: usize,
}

/// The answer of a decision run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    Yes(ModSet),
    No,
}

/// Outcome of a solver run: the answer, an interval model of the
/// modified graph on Yes (vertex labels are the survivors in increasing
/// order when vertices were deleted), and search statistics.
#[derive(Debug, Clone)]
pub struct SolverOutcome {
    pub variant: SolverVariant,
    pub answer: Answer,
    pub witness: Option<IntervalModel>,
    pub stats: SolverStats,
}

impl SolverOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self.answer, Answer::Yes(_))
    }

    pub fn modifications(&self) -> Option<&ModSet> {
        match &self.answer {
            Answer::Yes(ms) => Some(ms),
            Answer::No => None,
        }
    }
}

#[derive(Default)]
struct Ctx {
    nodes: usize,
    max_depth: usize,
}

impl Ctx {
    fn visit(&mut self, depth: usize) {
        self.nodes += 1;
        self.max_depth = self.max_depth.max(depth);
    }
}

// ---------------------------------------------------------------------------
// public entry points
// ---------------------------------------------------------------------------

/// Decides whether deleting at most `k` vertices makes `g` interval.
pub fn vertex_deletion(g: &Graph, k: usize) -> SolverOutcome {
    let mut ctx = Ctx::default();
    let sol = solve_vd(g, k, 0, &mut ctx);
    finish(SolverVariant::VertexDeletion, g, sol.map(ModSet::vertex_deletions), ctx)
}

/// Decides whether deleting at most `k` edges makes `g` interval.
pub fn edge_deletion(g: &Graph, k: usize) -> SolverOutcome {
    let mut ctx = Ctx::default();
    let sol = solve_ed(g, k, 0, &mut ctx);
    finish(SolverVariant::EdgeDeletion, g, sol.map(ModSet::edge_deletions), ctx)
}

/// Decides whether adding at most `k` edges makes `g` interval.
pub fn completion(g: &Graph, k: usize) -> SolverOutcome {
    let mut ctx = Ctx::default();
    let sol = solve_comp(g, k, 0, &mut ctx);
    finish(SolverVariant::Completion, g, sol.map(ModSet::edge_additions), ctx)
}

/// Runs the decision solver for budgets `0..=cap` and returns the outcome
/// at the first feasible budget; statistics aggregate over the scan. The
/// answer is No when even `cap` does not suffice.
pub fn solve_minimum(g: &Graph, variant: SolverVariant, cap: usize) -> SolverOutcome {
    let mut total = SolverStats::default();
    for k in 0..=cap {
        let mut out = match variant {
            SolverVariant::VertexDeletion => vertex_deletion(g, k),
            SolverVariant::EdgeDeletion => edge_deletion(g, k),
            SolverVariant::Completion => completion(g, k),
        };
        total.nodes += out.stats.nodes;
        total.max_depth = total.max_depth.max(out.stats.max_depth);
        if out.is_yes() || k == cap {
            out.stats = total;
            return out;
        }
    }
    unreachable!("the budget scan always returns at cap")
}

fn finish(variant: SolverVariant, g: &Graph, answer: Option<ModSet>, ctx: Ctx) -> SolverOutcome {
    let stats = SolverStats {
        nodes: ctx.nodes,
        max_depth: ctx.max_depth,
    };
    match answer {
        Some(ms) => {
            let (h, _) = ms.apply(g);
            let path = recognize_interval(&h)
                .unwrap_or_else(|c| panic!("solver produced a non-interval result ({})", c.kind.name()));
            let witness = model_from_path(&path);
            debug_assert!(witness.represents(&h));
            SolverOutcome {
                variant,
                answer: Answer::Yes(ms),
                witness: Some(witness),
                stats,
            }
        }
        None => SolverOutcome {
            variant,
            answer: Answer::No,
            witness: None,
            stats,
        },
    }
}

// ---------------------------------------------------------------------------
// shared structural helpers
// ---------------------------------------------------------------------------

fn nonadjacent_pair(g: &Graph, set: &[Vertex]) -> Option<(Vertex, Vertex)> {
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            if !g.has_edge(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Two broken modules of a clique quotient cross in a 4-hole: nonadjacent
/// pairs from each, alternating around the cycle.
fn cross_four_hole(g: &Graph, m1: &[Vertex], m2: &[Vertex]) -> [Vertex; 4] {
    let (x1, x2) = nonadjacent_pair(g, m1).expect("module is not a clique");
    let (y1, y2) = nonadjacent_pair(g, m2).expect("module is not a clique");
    debug_assert!(
        g.has_edge(x1, y1) && g.has_edge(y1, x2) && g.has_edge(x2, y2) && g.has_edge(y2, x1),
        "modules of a clique quotient are completely adjacent"
    );
    [x1, y1, x2, y2]
}

/// A 4-hole around a broken module sitting at a non-simplicial quotient
/// vertex: a nonadjacent pair inside the module, and representatives of a
/// nonadjacent pair of quotient neighbors.
fn module_four_hole(g: &Graph, qg: &Graph, q: &QuotientGraph, qv: Vertex) -> [Vertex; 4] {
    let (x, y) = nonadjacent_pair(g, &q.module_of[qv]).expect("module is not a clique");
    let (a, b) = nonadjacent_pair(qg, qg.neighbors(qv)).expect("vertex is not simplicial");
    [x, q.module_of[a][0], y, q.module_of[b][0]]
}

fn sp_is_empty(dec: &Decomposition) -> bool {
    match dec {
        Decomposition::Ring(r) => r.sp.is_empty(),
        Decomposition::Caterpillar(cd) => cd.bags.len() == cd.main_len,
    }
}

/// All host edges between the module pairs behind the given quotient
/// pairs, sorted and deduplicated.
fn expand_qpairs(q: &QuotientGraph, pairs: &[(Vertex, Vertex)]) -> Vec<Edge> {
    let mut out: Vec<Edge> = Vec::new();
    for &(a, b) in pairs {
        for &u in &q.module_of[a] {
            for &v in &q.module_of[b] {
                out.push(norm_edge(u, v));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// The quotient edges induced on a vertex set, normalized and sorted.
fn induced_qedges(qg: &Graph, verts: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            if qg.has_edge(a, b) {
                out.push(norm_edge(a, b));
            }
        }
    }
    out.sort_unstable();
    out
}

/// The minimum-weight intersection of adjacent bags around the main cycle
/// of an olive ring without pendant bags: a minimum hole cover. Returns
/// the total host-vertex weight and the host vertices to delete.
fn min_hole_cover(dec: &CliqueDecomposition, q: &QuotientGraph) -> (usize, Vec<Vertex>) {
    let len = dec.main_len;
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    for ell in 0..len {
        let next = &dec.bags[(ell + 1) % len];
        let inter: Vec<Vertex> = dec.bags[ell]
            .iter()
            .copied()
            .filter(|v| next.contains(v))
            .collect();
        let w: usize = inter.iter().map(|&v| q.size_of[v]).sum();
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
            best = Some((w, inter));
        }
    }
    let (w, qverts) = best.expect("a ring has at least four bags");
    let mut gone: Vec<Vertex> = qverts
        .into_iter()
        .flat_map(|qv| q.module_of[qv].iter().copied())
        .collect();
    gone.sort_unstable();
    (w, gone)
}

// ---------------------------------------------------------------------------
// vertex deletion
// ---------------------------------------------------------------------------

fn min_vd(g: &Graph, cap: usize, depth: usize, ctx: &mut Ctx) -> Option<Vec<Vertex>> {
    (0..=cap).find_map(|k| solve_vd(g, k, depth, ctx))
}

fn branch_vd(
    g: &Graph,
    k: usize,
    depth: usize,
    ctx: &mut Ctx,
    sets: Vec<Vec<Vertex>>,
    width: usize,
) -> Option<Vec<Vertex>> {
    debug_assert!(
        sets.len() <= width,
        "vertex deletion branched {}-wide",
        sets.len()
    );
    for set in sets {
        debug_assert!(!set.is_empty(), "empty branch set");
        if set.len() > k {
            continue;
        }
        let (h, map) = g.with_vertices_removed(&set);
        if let Some(rest) = solve_vd(&h, k - set.len(), depth + 1, ctx) {
            let mut out = set;
            out.extend(rest.into_iter().map(|v| map[v]));
            return Some(out);
        }
    }
    None
}

fn solve_vd(g: &Graph, k: usize, depth: usize, ctx: &mut Ctx) -> Option<Vec<Vertex>> {
    ctx.visit(depth);
    if is_interval(g) {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }

    // universal vertices never help a deletion set; strip them
    let uni: Vec<Vertex> = g.vertices().filter(|&v| g.is_universal(v)).collect();
    if !uni.is_empty() {
        let (h, map) = g.with_vertices_removed(&uni);
        return solve_vd(&h, k, depth + 1, ctx)
            .map(|sol| sol.into_iter().map(|v| map[v]).collect());
    }

    // components are independent; solve each to optimality under the
    // shared budget
    let comps = g.components();
    if comps.len() > 1 {
        let mut rem = k;
        let mut out = Vec::new();
        for comp in comps {
            let (sub, map) = g.induced_subgraph(&comp);
            let sol = min_vd(&sub, rem, depth + 1, ctx)?;
            rem -= sol.len();
            out.extend(sol.into_iter().map(|v| map[v]));
        }
        return Some(out);
    }

    let part = maximal_strong_modules(g);
    if part.kind == QuotientKind::Clique {
        let non_clique: Vec<&Vec<Vertex>> =
            part.modules.iter().filter(|m| !g.is_clique(m)).collect();
        match non_clique.len() {
            0 => unreachable!("a join of cliques is a clique"),
            1 => {
                let (sub, map) = g.induced_subgraph(non_clique[0]);
                return solve_vd(&sub, k, depth + 1, ctx)
                    .map(|sol| sol.into_iter().map(|v| map[v]).collect());
            }
            _ => {
                let hole = cross_four_hole(g, non_clique[0], non_clique[1]);
                let sets = hole.iter().map(|&v| vec![v]).collect();
                return branch_vd(g, k, depth, ctx, sets, 8);
            }
        }
    }
    debug_assert_eq!(part.kind, QuotientKind::Prime);
    let q = quotient(g, &part).expect("maximal strong modules form a partition");
    let qg = &q.quotient;

    // decomposition, or a forbidden structure: delete one of its modules
    let dec = match decompose(qg) {
        Ok(dec) => dec,
        Err(DecomposeError::Forbidden(cert)) => {
            let sets = cert
                .vertices
                .iter()
                .map(|&qv| q.module_of[qv].clone())
                .collect();
            return branch_vd(g, k, depth, ctx, sets, 8);
        }
        Err(e) => unreachable!("decomposition fell through on a prime quotient: {e}"),
    };

    // a broken module at a non-simplicial position yields a 4-hole
    for qv in qg.vertices() {
        if qg.is_simplicial(qv) || g.is_clique(&q.module_of[qv]) {
            continue;
        }
        let hole = module_four_hole(g, qg, &q, qv);
        let sets = hole.iter().map(|&v| vec![v]).collect();
        return branch_vd(g, k, depth, ctx, sets, 8);
    }

    // simplicial modules are solved internally, to optimality
    let mut acc: Vec<Vertex> = Vec::new();
    let mut rem = k;
    for qv in qg.vertices() {
        if !qg.is_simplicial(qv) || q.size_of[qv] == 1 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&q.module_of[qv]);
        if is_interval(&sub) {
            continue;
        }
        let sol = min_vd(&sub, rem, depth + 1, ctx)?;
        rem -= sol.len();
        acc.extend(sol.into_iter().map(|v| map[v]));
    }
    if !acc.is_empty() {
        let (h, map) = g.with_vertices_removed(&acc);
        let rest = solve_vd(&h, rem, depth + 1, ctx)?;
        acc.extend(rest.into_iter().map(|v| map[v]));
        return Some(acc);
    }

    if sp_is_empty(&dec) {
        // no pendant modules: the quotient is a hole-shaped arrangement
        // and a minimum hole cover finishes the instance
        let Decomposition::Ring(ring) = &dec else {
            unreachable!("a caterpillar without pendant bags is interval");
        };
        let (weight, cover) = min_hole_cover(&ring.dec, &q);
        if weight > k {
            return None;
        }
        let (h, map) = g.with_vertices_removed(&cover);
        let rest = solve_vd(&h, k - weight, depth + 1, ctx)?;
        let mut out = cover;
        out.extend(rest.into_iter().map(|v| map[v]));
        return Some(out);
    }

    match find_minimal_frame(qg, &dec) {
        Ok(FrameOutcome::Caw(cert)) => {
            let sets = cert
                .vertices
                .iter()
                .map(|&qv| q.module_of[qv].clone())
                .collect();
            branch_vd(g, k, depth, ctx, sets, 8)
        }
        Ok(FrameOutcome::Frame(f, fctx)) => {
            // one branch per frame module, plus the thinnest separator of
            // the container as a whole
            let mut sets: Vec<Vec<Vertex>> = f
                .vertices()
                .iter()
                .map(|&qv| q.module_of[qv].clone())
                .collect();
            let (_, sep) = min_vertex_separator(&fctx, &q.size_of);
            let mut sep_set: Vec<Vertex> = sep
                .iter()
                .flat_map(|&qv| q.module_of[qv].iter().copied())
                .collect();
            sep_set.sort_unstable();
            sets.push(sep_set);
            branch_vd(g, k, depth, ctx, sets, 8)
        }
        Err(_) => {
            // the frame search could not pin the structure down; fall
            // back to a minimal forbidden subgraph of the quotient: some
            // module on it must go entirely
            let w = minimal_noninterval(qg);
            let width = w.len();
            let sets = w.into_iter().map(|qv| q.module_of[qv].clone()).collect();
            branch_vd(g, k, depth, ctx, sets, width)
        }
    }
}

// ---------------------------------------------------------------------------
// edge deletion
// ---------------------------------------------------------------------------

/// Branch-width cap for edge deletion at budget `k`: the named frame and
/// base edges dominate, 4 + 2(4k+8) + 1 at the widest disposal node.
fn ed_width(k: usize) -> usize {
    (4 * k + 17).max(8 * k + 21)
}

fn min_ed(g: &Graph, cap: usize, depth: usize, ctx: &mut Ctx) -> Option<Vec<Edge>> {
    (0..=cap).find_map(|k| solve_ed(g, k, depth, ctx))
}

fn branch_ed(
    g: &Graph,
    k: usize,
    depth: usize,
    ctx: &mut Ctx,
    sets: Vec<Vec<Edge>>,
    width: usize,
) -> Option<Vec<Edge>> {
    debug_assert!(
        sets.len() <= width,
        "edge deletion branched {}-wide at k = {k}",
        sets.len()
    );
    for set in sets {
        debug_assert!(!set.is_empty(), "empty branch set");
        if set.len() > k {
            continue;
        }
        let h = g.with_edges_removed(&set);
        if let Some(rest) = solve_ed(&h, k - set.len(), depth + 1, ctx) {
            let mut out = set;
            out.extend(rest);
            return Some(out);
        }
    }
    None
}

fn map_edges(sol: Vec<Edge>, map: &[Vertex]) -> Vec<Edge> {
    sol.into_iter().map(|(u, v)| norm_edge(map[u], map[v])).collect()
}

fn solve_ed(g: &Graph, k: usize, depth: usize, ctx: &mut Ctx) -> Option<Vec<Edge>> {
    ctx.visit(depth);
    if is_interval(g) {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }

    // edges at universal vertices never help a deletion set
    let uni: Vec<Vertex> = g.vertices().filter(|&v| g.is_universal(v)).collect();
    if !uni.is_empty() {
        let (h, map) = g.with_vertices_removed(&uni);
        return solve_ed(&h, k, depth + 1, ctx).map(|sol| map_edges(sol, &map));
    }

    let comps = g.components();
    if comps.len() > 1 {
        let mut rem = k;
        let mut out = Vec::new();
        for comp in comps {
            let (sub, map) = g.induced_subgraph(&comp);
            let sol = min_ed(&sub, rem, depth + 1, ctx)?;
            rem -= sol.len();
            out.extend(map_edges(sol, &map));
        }
        return Some(out);
    }

    let part = maximal_strong_modules(g);
    if part.kind == QuotientKind::Clique {
        let non_clique: Vec<&Vec<Vertex>> =
            part.modules.iter().filter(|m| !g.is_clique(m)).collect();
        match non_clique.len() {
            0 => unreachable!("a join of cliques is a clique"),
            1 => {
                let (sub, map) = g.induced_subgraph(non_clique[0]);
                return solve_ed(&sub, k, depth + 1, ctx).map(|sol| map_edges(sol, &map));
            }
            _ => {
                let [a, b, c, d] = cross_four_hole(g, non_clique[0], non_clique[1]);
                let sets = [(a, b), (b, c), (c, d), (d, a)]
                    .iter()
                    .map(|&(u, v)| vec![norm_edge(u, v)])
                    .collect();
                return branch_ed(g, k, depth, ctx, sets, ed_width(k));
            }
        }
    }
    debug_assert_eq!(part.kind, QuotientKind::Prime);
    let q = quotient(g, &part).expect("maximal strong modules form a partition");
    let qg = &q.quotient;

    let dec = match decompose(qg) {
        Ok(dec) => dec,
        Err(DecomposeError::Forbidden(cert)) => {
            let sets = induced_qedges(qg, &cert.vertices)
                .iter()
                .map(|&p| expand_qpairs(&q, &[p]))
                .collect();
            return branch_ed(g, k, depth, ctx, sets, ed_width(k));
        }
        Err(e) => unreachable!("decomposition fell through on a prime quotient: {e}"),
    };

    for qv in qg.vertices() {
        if qg.is_simplicial(qv) || g.is_clique(&q.module_of[qv]) {
            continue;
        }
        let [a, b, c, d] = module_four_hole(g, qg, &q, qv);
        let sets = [(a, b), (b, c), (c, d), (d, a)]
            .iter()
            .map(|&(u, v)| vec![norm_edge(u, v)])
            .collect();
        return branch_ed(g, k, depth, ctx, sets, ed_width(k));
    }

    let mut acc: Vec<Edge> = Vec::new();
    let mut rem = k;
    for qv in qg.vertices() {
        if !qg.is_simplicial(qv) || q.size_of[qv] == 1 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&q.module_of[qv]);
        if is_interval(&sub) {
            continue;
        }
        let sol = min_ed(&sub, rem, depth + 1, ctx)?;
        rem -= sol.len();
        acc.extend(map_edges(sol, &map));
    }
    if !acc.is_empty() {
        let h = g.with_edges_removed(&acc);
        let rest = solve_ed(&h, rem, depth + 1, ctx)?;
        acc.extend(rest);
        return Some(acc);
    }

    if sp_is_empty(&dec) {
        let Decomposition::Ring(ring) = &dec else {
            unreachable!("a caterpillar without pendant bags is interval");
        };
        let hole = shortest_hole(qg, &ring.dec).expect("a ring certifies a hole");
        if hole.len() < 3 * k + 6 {
            // short holes are branched edge by edge
            let sets = (0..hole.len())
                .map(|i| {
                    expand_qpairs(&q, &[norm_edge(hole[i], hole[(i + 1) % hole.len()])])
                })
                .collect();
            return branch_ed(g, k, depth, ctx, sets, ed_width(k));
        }
        // all long holes: a minimum boundary edge cut finishes the instance
        let (weight, cut) = min_edge_hole_cover(qg, &ring.dec, &q, k)?;
        let h = g.with_edges_removed(&cut);
        let rest = solve_ed(&h, k - weight, depth + 1, ctx)?;
        let mut out = cut;
        out.extend(rest);
        return Some(out);
    }

    match find_minimal_frame(qg, &dec) {
        Ok(FrameOutcome::Caw(cert)) => {
            let sets = induced_qedges(qg, &cert.vertices)
                .iter()
                .map(|&p| expand_qpairs(&q, &[p]))
                .collect();
            branch_ed(g, k, depth, ctx, sets, ed_width(k))
        }
        Ok(FrameOutcome::Frame(f, fctx)) => {
            let base = shortest_base(qg, &f, &fctx).expect("a frame witnesses a base");
            let mut path = vec![f.l];
            path.extend(&base);
            path.push(f.r);
            let base_edges: Vec<(Vertex, Vertex)> =
                path.windows(2).map(|w| norm_edge(w[0], w[1])).collect();
            let mut qset: BTreeSet<(Vertex, Vertex)> =
                induced_qedges(qg, &f.vertices()).into_iter().collect();
            if base_edges.len() <= 8 * k + 16 {
                // short bases are branched exhaustively together with the
                // frame edges
                qset.extend(&base_edges);
            } else {
                // long bases: only the frame attachments and both base
                // ends need branching; the rest is covered by a minimum
                // boundary cut of the container
                qset.clear();
                for &(u, v) in &[(f.s, f.c1), (f.s, f.c2), (f.lb, f.c1), (f.rb, f.c2)] {
                    qset.insert(norm_edge(u, v));
                }
                qset.extend(&base_edges[..4 * k + 8]);
                qset.extend(&base_edges[base_edges.len() - (4 * k + 8)..]);
            }
            let mut sets: Vec<Vec<Edge>> =
                qset.iter().map(|&p| expand_qpairs(&q, &[p])).collect();
            if base_edges.len() > 8 * k + 16 {
                if let Ok(cut) = min_edge_cut(qg, &fctx, &q.size_of, k) {
                    sets.push(expand_qpairs(&q, &cut.edges));
                }
            }
            branch_ed(g, k, depth, ctx, sets, ed_width(k))
        }
        Err(_) => {
            // fall back to a minimal forbidden subgraph of the quotient:
            // some edge bundle on it must go
            let w = minimal_noninterval(qg);
            let pairs = induced_qedges(qg, &w);
            let width = pairs.len();
            let sets = pairs.iter().map(|&p| expand_qpairs(&q, &[p])).collect();
            branch_ed(g, k, depth, ctx, sets, width)
        }
    }
}

/// The lightest boundary edge cut `E_{ℓ,X,Y}` over the bags of a pendant-
/// free ring: partitions of light bags are enumerated exhaustively, heavy
/// bags contribute their two one-sided cuts. Returns `None` when no cut
/// fits the budget.
fn min_edge_hole_cover(
    qg: &Graph,
    dec: &CliqueDecomposition,
    q: &QuotientGraph,
    k: usize,
) -> Option<(usize, Vec<Edge>)> {
    let len = dec.main_len;
    let in_bag = |ell: usize, v: Vertex| dec.bags[ell].contains(&v);
    // circular occurrence run of each quotient vertex: first and last bag
    // in clockwise order
    let mut run = vec![(usize::MAX, usize::MAX); qg.n()];
    for v in qg.vertices() {
        for j in 0..len {
            let prev = (j + len - 1) % len;
            let next = (j + 1) % len;
            if in_bag(j, v) && !in_bag(prev, v) {
                run[v].0 = j;
            }
            if in_bag(j, v) && !in_bag(next, v) {
                run[v].1 = j;
            }
        }
        debug_assert_ne!(run[v].0, usize::MAX, "ring vertex in every bag");
    }
    let mut best: Option<(usize, Vec<(Vertex, Vertex)>)> = None;
    for ell in 0..len {
        let bag = &dec.bags[ell];
        let wbag: usize = bag.iter().map(|&v| q.size_of[v]).sum();
        let all = (1u64 << bag.len()) - 1;
        let masks: Vec<u64> = if wbag <= k + 1 && bag.len() <= 16 {
            (0..=all).collect()
        } else {
            vec![0, all]
        };
        for mask in masks {
            let (mut x, mut y) = (Vec::new(), Vec::new());
            for (i, &v) in bag.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x.push(v);
                } else {
                    y.push(v);
                }
            }
            let mut cut: Vec<(Vertex, Vertex)> = Vec::new();
            for &a in &x {
                for &b in &y {
                    cut.push(norm_edge(a, b));
                }
            }
            // X is clipped after bag ℓ, Y before it: each side loses its
            // overlaps with arcs lying wholly beyond the clip
            for (&v, clockwise) in x.iter().map(|v| (v, true)).chain(y.iter().map(|v| (v, false))) {
                let mut overhang = Vec::new();
                let mut j = if clockwise { (ell + 1) % len } else { (ell + len - 1) % len };
                while j != ell && in_bag(j, v) {
                    overhang.push(j);
                    j = if clockwise { (j + 1) % len } else { (j + len - 1) % len };
                }
                for &u in qg.neighbors(v) {
                    if in_bag(ell, u) {
                        continue;
                    }
                    let anchor = if clockwise { run[u].0 } else { run[u].1 };
                    if overhang.contains(&anchor) {
                        cut.push(norm_edge(v, u));
                    }
                }
            }
            cut.sort_unstable();
            cut.dedup();
            let w: usize = cut.iter().map(|&(a, b)| q.size_of[a] * q.size_of[b]).sum();
            if w <= k && best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, cut));
            }
        }
    }
    best.map(|(w, qedges)| (w, expand_qpairs(q, &qedges)))
}

// ---------------------------------------------------------------------------
// completion
// ---------------------------------------------------------------------------

fn min_comp(g: &Graph, cap: usize, depth: usize, ctx: &mut Ctx) -> Option<Vec<Edge>> {
    (0..=cap).find_map(|k| solve_comp(g, k, depth, ctx))
}

fn branch_comp(
    g: &Graph,
    k: usize,
    depth: usize,
    ctx: &mut Ctx,
    sets: Vec<Vec<Edge>>,
    width: usize,
) -> Option<Vec<Edge>> {
    debug_assert!(sets.len() <= width, "completion branched {}-wide", sets.len());
    for set in sets {
        debug_assert!(!set.is_empty(), "empty branch set");
        if set.len() > k {
            continue;
        }
        let h = g.with_edges_added(&set);
        if let Some(rest) = solve_comp(&h, k - set.len(), depth + 1, ctx) {
            let mut out = set;
            out.extend(rest);
            return Some(out);
        }
    }
    None
}

fn solve_comp(g: &Graph, k: usize, depth: usize, ctx: &mut Ctx) -> Option<Vec<Edge>> {
    ctx.visit(depth);
    if is_interval(g) {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }

    // fill holes first: each fill is a polygon triangulation of the hole
    if let Err(hole) = chordality(g) {
        if hole.len() > k + 3 {
            return None;
        }
        let fills = fill_hole_enumerate(g, &hole);
        debug_assert!(fills.len() <= 4usize.pow((hole.len() - 3) as u32));
        for fill in fills {
            let h = g.with_edges_added(&fill);
            if let Some(rest) = solve_comp(&h, k - (hole.len() - 3), depth + 1, ctx) {
                let mut out = fill;
                out.extend(rest);
                return Some(out);
            }
        }
        return None;
    }

    // a universal vertex stays universal in any minimum supergraph
    let uni: Vec<Vertex> = g.vertices().filter(|&v| g.is_universal(v)).collect();
    if !uni.is_empty() {
        let (h, map) = g.with_vertices_removed(&uni);
        return solve_comp(&h, k, depth + 1, ctx).map(|sol| map_edges(sol, &map));
    }

    let comps = g.components();
    if comps.len() > 1 {
        let mut rem = k;
        let mut out = Vec::new();
        for comp in comps {
            let (sub, map) = g.induced_subgraph(&comp);
            let sol = min_comp(&sub, rem, depth + 1, ctx)?;
            rem -= sol.len();
            out.extend(map_edges(sol, &map));
        }
        return Some(out);
    }

    let part = maximal_strong_modules(g);
    if part.kind == QuotientKind::Clique {
        let non_clique: Vec<&Vec<Vertex>> =
            part.modules.iter().filter(|m| !g.is_clique(m)).collect();
        debug_assert!(
            non_clique.len() <= 1,
            "two broken modules of a clique quotient cross in a hole"
        );
        let m = non_clique.first().expect("a join of cliques is a clique");
        let (sub, map) = g.induced_subgraph(m);
        return solve_comp(&sub, k, depth + 1, ctx).map(|sol| map_edges(sol, &map));
    }
    debug_assert_eq!(part.kind, QuotientKind::Prime);
    let q = quotient(g, &part).expect("maximal strong modules form a partition");
    let qg = &q.quotient;

    // simplicial modules are completed internally, to optimality
    let mut acc: Vec<Edge> = Vec::new();
    let mut rem = k;
    for qv in qg.vertices() {
        if !qg.is_simplicial(qv) || q.size_of[qv] == 1 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&q.module_of[qv]);
        if is_interval(&sub) {
            continue;
        }
        let sol = min_comp(&sub, rem, depth + 1, ctx)?;
        rem -= sol.len();
        acc.extend(map_edges(sol, &map));
    }
    if !acc.is_empty() {
        let h = g.with_edges_added(&acc);
        let rest = solve_comp(&h, rem, depth + 1, ctx)?;
        acc.extend(rest);
        return Some(acc);
    }
    debug_assert!(
        qg.vertices().all(|qv| qg.is_simplicial(qv) || g.is_clique(&q.module_of[qv])),
        "a broken module at a non-simplicial position contradicts chordality"
    );

    let dec = match decompose(qg) {
        Ok(dec) => dec,
        Err(DecomposeError::Forbidden(cert)) => {
            return branch_comp_cert(g, k, depth, ctx, &q, qg, &cert);
        }
        Err(e) => unreachable!("decomposition fell through on a prime quotient: {e}"),
    };

    match find_minimal_frame(qg, &dec) {
        Ok(FrameOutcome::Caw(cert)) => branch_comp_cert(g, k, depth, ctx, &q, qg, &cert),
        Ok(FrameOutcome::Frame(f, fctx)) => {
            // the five frame completions, or all edges from the shallow
            // terminal to the thinnest separator of the container
            let mut qsets: Vec<Vec<(Vertex, Vertex)>> = [
                (f.l, f.c2),
                (f.c1, f.r),
                (f.lb, f.rb),
                (f.s, f.lb),
                (f.s, f.rb),
            ]
            .iter()
            .map(|&(u, v)| vec![norm_edge(u, v)])
            .collect();
            let (_, sep) = min_vertex_separator(&fctx, &q.size_of);
            qsets.push(sep.iter().map(|&qv| norm_edge(f.s, qv)).collect());
            let sets = qsets.iter().map(|qs| expand_qpairs(&q, qs)).collect();
            branch_comp(g, k, depth, ctx, sets, 6)
        }
        Err(_) => {
            // fall back to a minimal forbidden subgraph of the quotient:
            // any interval supergraph adds an edge inside it
            let w = minimal_noninterval(qg);
            let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
            for (i, &a) in w.iter().enumerate() {
                for &b in &w[i + 1..] {
                    if !qg.has_edge(a, b) {
                        pairs.push(norm_edge(a, b));
                    }
                }
            }
            let width = pairs.len();
            let sets = pairs.iter().map(|&p| expand_qpairs(&q, &[p])).collect();
            branch_comp(g, k, depth, ctx, sets, width)
        }
    }
}

/// Branch sets for a forbidden structure in completion: a fixed set of at
/// most six candidate edges per small family (every minimal interval
/// supergraph of the structure uses one of them), and the frame
/// completions plus shallow-terminal edges for the short-base large caws.
fn branch_comp_cert(
    g: &Graph,
    k: usize,
    depth: usize,
    ctx: &mut Ctx,
    q: &QuotientGraph,
    qg: &Graph,
    cert: &Certificate,
) -> Option<Vec<Edge>> {
    use CertificateKind::*;
    let qpairs: Vec<(Vertex, Vertex)> = if let Some(r) = &cert.roles {
        match cert.kind {
            Net => vec![
                (r.s, r.base[0]),
                (r.s, r.base[1]),
                (r.l, r.c1),
                (r.l, r.base[1]),
                (r.r, r.c1),
                (r.r, r.base[0]),
            ],
            Sun => vec![(r.s, r.base[0]), (r.l, r.c2), (r.r, r.c1)],
            RisingSun => vec![
                (r.s, r.base[0]),
                (r.s, r.base[1]),
                (r.l, r.c2),
                (r.c1, r.r),
            ],
            LargeCawDagger | LargeCawDoubleDagger => {
                let d = r.base.len();
                assert!(d <= 4, "unexpected large-caw base length {d} in completion");
                let mut v = vec![
                    (r.l, r.c2),
                    (r.c1, r.r),
                    (r.base[0], r.base[d - 1]),
                ];
                v.extend(r.base.iter().map(|&b| (r.s, b)));
                v
            }
            other => unreachable!("certificate {} with roles in completion", other.name()),
        }
    } else {
        match cert.kind {
            LongClaw => long_claw_pairs(qg, &cert.vertices),
            WhippingTop => whipping_top_pairs(qg, &cert.vertices),
            other => unreachable!("certificate {} without roles in completion", other.name()),
        }
    };
    let width = qpairs.len().max(6);
    debug_assert!(width <= 7);
    let sets = qpairs
        .iter()
        .map(|&(u, v)| expand_qpairs(q, &[norm_edge(u, v)]))
        .collect();
    branch_comp(g, k, depth, ctx, sets, width)
}

/// Candidate completion edges of a long claw: an edge between two mid
/// vertices, or from the center to a tip.
fn long_claw_pairs(g: &Graph, verts: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let (sub, map) = g.induced_subgraph(verts);
    let center = sub.vertices().find(|&v| sub.degree(v) == 3).expect("long claw center");
    let mids: Vec<Vertex> = sub.neighbors(center).to_vec();
    let mut out = Vec::new();
    for (i, &a) in mids.iter().enumerate() {
        for &b in &mids[i + 1..] {
            out.push((map[a], map[b]));
        }
    }
    for &m in &mids {
        let tip = sub
            .neighbors(m)
            .iter()
            .copied()
            .find(|&t| t != center)
            .expect("every mid vertex has a tip");
        out.push((map[center], map[tip]));
    }
    out
}

/// Candidate completion edges of a whipping top: the broken base pair,
/// the second center to either base terminal, or the hub to the pendant
/// terminal.
fn whipping_top_pairs(g: &Graph, verts: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let (sub, map) = g.induced_subgraph(verts);
    let t1 = sub.vertices().find(|&v| sub.degree(v) == 1).expect("pendant terminal");
    let c = sub.neighbors(t1)[0];
    let hub = sub.vertices().find(|&v| sub.degree(v) == 5).expect("hub");
    let vs: Vec<Vertex> = sub.vertices().filter(|&v| sub.degree(v) == 3).collect();
    debug_assert_eq!(vs.len(), 2);
    let ts: Vec<Vertex> = sub.vertices().filter(|&v| sub.degree(v) == 2).collect();
    debug_assert_eq!(ts.len(), 2);
    let mut out = vec![(map[vs[0]], map[vs[1]])];
    for &t in &ts {
        out.push((map[t], map[c]));
    }
    out.push((map[t1], map[hub]));
    out
}

/// All minimal edge sets filling the hole: the diagonal sets of the
/// triangulations of the polygon it spans, each of exactly |H|−3 edges.
pub fn fill_hole_enumerate(g: &Graph, hole: &[Vertex]) -> Vec<Vec<Edge>> {
    let h = hole.len();
    assert!(h >= 4, "a hole has at least four vertices");
    debug_assert!(
        (0..h).all(|i| g.has_edge(hole[i], hole[(i + 1) % h])),
        "hole is not a cycle"
    );
    let mut out = tri_sets(hole, 0, h - 1);
    for set in &mut out {
        set.sort_unstable();
        debug_assert_eq!(set.len(), h - 3);
    }
    out
}

/// Diagonal sets of all triangulations of the polygon `hole[lo..=hi]`,
/// assuming the boundary edge (lo, hi).
fn tri_sets(hole: &[Vertex], lo: usize, hi: usize) -> Vec<Vec<Edge>> {
    if hi - lo < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for t in lo + 1..hi {
        let left = tri_sets(hole, lo, t);
        let right = tri_sets(hole, t, hi);
        for l in &left {
            for r in &right {
                let mut set = Vec::new();
                if t > lo + 1 {
                    set.push(norm_edge(hole[lo], hole[t]));
                }
                if t < hi - 1 {
                    set.push(norm_edge(hole[t], hole[hi]));
                }
                set.extend(l);
                set.extend(r);
                out.push(set);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// approximation
// ---------------------------------------------------------------------------

/// Ratio-8 approximation for vertex deletion: the exact branching
/// skeleton with every branch point replaced by deleting one
/// representative per branch set (or the whole structure where the exact
/// solver branches on single vertices), and exact hole-cover finishing.
pub fn approx_vertex_deletion(g: &Graph) -> Vec<Vertex> {
    approx_rec(g)
}

fn approx_del(g: &Graph, gone: Vec<Vertex>) -> Vec<Vertex> {
    debug_assert!(!gone.is_empty());
    let (h, map) = g.with_vertices_removed(&gone);
    let mut out = gone;
    out.extend(approx_rec(&h).into_iter().map(|v| map[v]));
    out.sort_unstable();
    out
}

fn approx_rec(g: &Graph) -> Vec<Vertex> {
    if is_interval(g) {
        return Vec::new();
    }

    let uni: Vec<Vertex> = g.vertices().filter(|&v| g.is_universal(v)).collect();
    if !uni.is_empty() {
        let (h, map) = g.with_vertices_removed(&uni);
        return approx_rec(&h).into_iter().map(|v| map[v]).collect();
    }

    let comps = g.components();
    if comps.len() > 1 {
        let mut out = Vec::new();
        for comp in comps {
            let (sub, map) = g.induced_subgraph(&comp);
            out.extend(approx_rec(&sub).into_iter().map(|v| map[v]));
        }
        return out;
    }

    let part = maximal_strong_modules(g);
    if part.kind == QuotientKind::Clique {
        let non_clique: Vec<&Vec<Vertex>> =
            part.modules.iter().filter(|m| !g.is_clique(m)).collect();
        match non_clique.len() {
            0 => unreachable!("a join of cliques is a clique"),
            1 => {
                // the rest of the join is a clique: solving the module
                // solves the graph
                let (sub, map) = g.induced_subgraph(non_clique[0]);
                return approx_rec(&sub).into_iter().map(|v| map[v]).collect();
            }
            _ => {
                let hole = cross_four_hole(g, non_clique[0], non_clique[1]);
                return approx_del(g, hole.to_vec());
            }
        }
    }
    let q = quotient(g, &part).expect("maximal strong modules form a partition");
    let qg = &q.quotient;

    let dec = match decompose(qg) {
        Ok(dec) => dec,
        Err(DecomposeError::Forbidden(cert)) => {
            let picks: Vec<Vertex> =
                cert.vertices.iter().map(|&qv| q.module_of[qv][0]).collect();
            return approx_del(g, picks);
        }
        Err(e) => unreachable!("decomposition fell through on a prime quotient: {e}"),
    };

    for qv in qg.vertices() {
        if qg.is_simplicial(qv) || g.is_clique(&q.module_of[qv]) {
            continue;
        }
        return approx_del(g, module_four_hole(g, qg, &q, qv).to_vec());
    }

    let mut acc: Vec<Vertex> = Vec::new();
    for qv in qg.vertices() {
        if !qg.is_simplicial(qv) || q.size_of[qv] == 1 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&q.module_of[qv]);
        if is_interval(&sub) {
            continue;
        }
        acc.extend(approx_rec(&sub).into_iter().map(|v| map[v]));
    }
    if !acc.is_empty() {
        return approx_del(g, acc);
    }

    if sp_is_empty(&dec) {
        let Decomposition::Ring(ring) = &dec else {
            unreachable!("a caterpillar without pendant bags is interval");
        };
        let (_, cover) = min_hole_cover(&ring.dec, &q);
        return approx_del(g, cover);
    }

    match find_minimal_frame(qg, &dec) {
        Ok(FrameOutcome::Caw(cert)) => {
            let picks: Vec<Vertex> =
                cert.vertices.iter().map(|&qv| q.module_of[qv][0]).collect();
            approx_del(g, picks)
        }
        Ok(FrameOutcome::Frame(f, fctx)) => {
            let mut picks: Vec<Vertex> =
                f.vertices().iter().map(|&qv| q.module_of[qv][0]).collect();
            let (_, sep) = min_vertex_separator(&fctx, &q.size_of);
            picks.push(q.module_of[sep[0]][0]);
            picks.sort_unstable();
            picks.dedup();
            approx_del(g, picks)
        }
        Err(_) => {
            // fall back to deleting a representative of every module on a
            // minimal forbidden subgraph of the quotient
            let picks: Vec<Vertex> = minimal_noninterval(qg)
                .into_iter()
                .map(|qv| q.module_of[qv][0])
                .collect();
            approx_del(g, picks)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::fixtures;

    fn yes_len(out: &SolverOutcome) -> usize {
        out.modifications().expect("expected Yes").len()
    }

    #[test]
    fn c4_vertex_deletion() {
        let c4 = fixtures::cycle(4);
        assert!(!vertex_deletion(&c4, 0).is_yes());
        let out = vertex_deletion(&c4, 1);
        assert_eq!(yes_len(&out), 1);
        assert!(out.witness.is_some());
    }

    #[test]
    fn small_caws_cost_one_everywhere() {
        for (name, g) in fixtures::forbidden_locally_interval() {
            assert!(!vertex_deletion(&g, 0).is_yes(), "{name}");
            assert_eq!(yes_len(&vertex_deletion(&g, 1)), 1, "{name}");
            assert!(edge_deletion(&g, 1).is_yes(), "{name} edge deletion");
        }
    }

    #[test]
    fn net_completion_costs_one() {
        let net = fixtures::net();
        assert!(!completion(&net, 0).is_yes());
        assert_eq!(yes_len(&completion(&net, 1)), 1);
    }

    #[test]
    fn hole_completion_costs_length_minus_three() {
        let c6 = fixtures::cycle(6);
        assert!(!completion(&c6, 2).is_yes());
        let out = completion(&c6, 3);
        assert_eq!(yes_len(&out), 3);
        // C4 needs one chord
        let out4 = completion(&fixtures::cycle(4), 1);
        assert_eq!(yes_len(&out4), 1);
    }

    #[test]
    fn large_caws_cost_one() {
        for d in 3..=6 {
            for g in [fixtures::dagger(d), fixtures::ddagger(d)] {
                assert_eq!(yes_len(&vertex_deletion(&g, 2)), 1, "vd d={d}");
                assert_eq!(yes_len(&edge_deletion(&g, 2)), 1, "ed d={d}");
                assert_eq!(yes_len(&completion(&g, 2)), 1, "comp d={d}");
            }
        }
    }

    #[test]
    fn fill_counts_match_triangulation_numbers() {
        // Catalan(h−2) triangulations, each with h−3 diagonals
        let expected = [(4usize, 2usize), (5, 5), (6, 14), (7, 42), (8, 132), (9, 429)];
        for (h, count) in expected {
            let c = fixtures::cycle(h);
            let hole: Vec<Vertex> = (0..h).collect();
            let fills = fill_hole_enumerate(&c, &hole);
            assert_eq!(fills.len(), count, "h={h}");
            assert!(fills.iter().all(|f| f.len() == h - 3));
            assert!(fills.len() <= 4usize.pow((h - 3) as u32));
            // each fill chordalizes the cycle
            for f in &fills {
                let g = c.with_edges_added(f);
                assert!(chordality(&g).is_ok(), "fill {f:?} leaves a hole");
            }
            // fills are pairwise distinct
            let mut sorted = fills.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), count);
        }
    }

    #[test]
    fn witness_models_represent_the_modified_graph() {
        for (name, g) in fixtures::forbidden_locally_interval() {
            for out in [
                vertex_deletion(&g, 2),
                edge_deletion(&g, 2),
                completion(&g, 3),
            ] {
                let ms = out.modifications().unwrap_or_else(|| panic!("{name}"));
                let (h, _) = ms.apply(&g);
                assert!(out.witness.as_ref().unwrap().represents(&h), "{name}");
            }
        }
    }

    #[test]
    fn solve_minimum_scans_upward() {
        let c6 = fixtures::cycle(6);
        let out = solve_minimum(&c6, SolverVariant::Completion, 5);
        assert_eq!(yes_len(&out), 3);
        let none = solve_minimum(&c6, SolverVariant::Completion, 2);
        assert!(!none.is_yes());
    }

    #[test]
    fn interval_graphs_need_nothing() {
        for g in [fixtures::path(7), fixtures::complete(5), Graph::empty(4)] {
            for out in [
                vertex_deletion(&g, 0),
                edge_deletion(&g, 0),
                completion(&g, 0),
            ] {
                assert_eq!(yes_len(&out), 0);
            }
            assert!(approx_vertex_deletion(&g).is_empty());
        }
    }

    #[test]
    fn approx_deletes_whole_certificates() {
        let c4 = fixtures::cycle(4);
        let del = approx_vertex_deletion(&c4);
        assert!(!del.is_empty() && del.len() <= 4);
        let (h, _) = c4.with_vertices_removed(&del);
        assert!(is_interval(&h));
    }

    #[test]
    fn approx_handles_large_caws() {
        for d in 3..=8 {
            for g in [fixtures::dagger(d), fixtures::ddagger(d)] {
                let del = approx_vertex_deletion(&g);
                let (h, _) = g.with_vertices_removed(&del);
                assert!(is_interval(&h), "d={d}");
                assert!(del.len() <= 8, "d={d}: deleted {}", del.len());
            }
        }
    }

    #[test]
    fn disconnected_budgets_are_shared() {
        // two C4s need two deletions
        let mut edges: Vec<(usize, usize)> = fixtures::cycle(4).edges().collect();
        edges.extend(fixtures::cycle(4).edges().map(|(u, v)| (u + 4, v + 4)));
        let g = Graph::from_edge_list(8, edges).unwrap();
        assert!(!vertex_deletion(&g, 1).is_yes());
        assert_eq!(yes_len(&vertex_deletion(&g, 2)), 2);
        assert!(!completion(&g, 1).is_yes());
        assert!(completion(&g, 2).is_yes());
    }

    #[test]
    fn stats_are_populated() {
        let out = vertex_deletion(&fixtures::dagger(4), 1);
        assert!(out.stats.nodes >= 2);
        assert!(out.stats.max_depth >= 1);
    }

    #[test]
    fn modset_apply_roundtrip() {
        let g = fixtures::cycle(5);
        let ms = ModSet {
            ops: vec![Op::DelVertex(2)],
        };
        let (h, map) = ms.apply(&g);
        assert_eq!(h.n(), 4);
        assert_eq!(map, vec![0, 1, 3, 4]);
        let add = ModSet {
            ops: vec![Op::AddEdge(0, 2), Op::AddEdge(0, 3)],
        };
        let (h2, map2) = add.apply(&g);
        assert_eq!(h2.m(), 7);
        assert_eq!(map2, vec![0, 1, 2, 3, 4]);
    }
}
