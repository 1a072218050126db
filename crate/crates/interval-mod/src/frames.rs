//! Minimal frames of large chordal asteroidal witnesses in a prime
//! graph with an olive-ring or caterpillar decomposition.
//!
//! A large caw (s: c1,c2: l,B,r) is determined up to its base by its
//! *frame* (s: c1,c2: l,lb; rb,r) — the terminals plus their neighbors.
//! The procedure here starts from a pendant simplicial module with an
//! inclusion-minimal window on the spine and either runs into a small
//! forbidden subgraph or produces a frame whose *container* (the spine
//! stretch between the base ends) is minimal. The container's bags carry
//! the *inner modules* through which every witnessing base must run, so
//! the solvers can break all caws with this frame at once by cutting the
//! thinnest separator or edge boundary inside it.
//!
//! Preconditions throughout: the graph is prime, free of 4- and 5-holes,
//! and the decomposition was produced by `decompose`.

use graph_core::{Graph, Vertex};
use thiserror::Error;

use crate::certificate::{classify_forbidden, Certificate, CertificateKind};
use crate::cliques::Shape;
use crate::decompose::Decomposition;
use crate::fli::{emit, find_fli_in, FliError};

#[derive(Debug, Error)]
pub enum FrameError {
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("every eligible container bag exceeds the budget")]
    TooWide,
    #[error("no structure found where one was implied")]
    NotFound,
}

impl From<FliError> for FrameError {
    fn from(e: FliError) -> Self {
        match e {
            FliError::Precondition(p) => FrameError::Precondition(p),
            FliError::NotFound => FrameError::NotFound,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameKind {
    Dagger,
    DoubleDagger,
}

/// The terminals of a large caw together with their neighbors on the
/// base: (s: c1,c2: l,lb; rb,r). For a dagger frame `c1 == c2`.
#[derive(Debug, Clone, Copy)]
pub struct Frame {
    pub s: Vertex,
    pub c1: Vertex,
    pub c2: Vertex,
    pub l: Vertex,
    pub lb: Vertex,
    pub rb: Vertex,
    pub r: Vertex,
    pub kind: FrameKind,
}

impl Frame {
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs = vec![self.s, self.c1, self.c2, self.l, self.lb, self.rb, self.r];
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// The spine stretch a frame occupies, in linearized coordinates: the
/// container runs from the last bag of `lb` to the first bag of `rb`,
/// and `inner` collects the modules every witnessing base runs through.
#[derive(Debug, Clone)]
pub struct FrameContext {
    /// linearized spine bags (for rings, rotated so the frame avoids the
    /// wrap point)
    pub bags: Vec<Vec<Vertex>>,
    /// first spine bag per vertex in linear coordinates; pendant
    /// simplicial modules carry their window instead, and a ring module
    /// spanning the wrap point carries `None`
    pub lint: Vec<Option<usize>>,
    /// last spine bag per vertex, same conventions
    pub rint: Vec<Option<usize>>,
    /// container bag range [rint(lb), lint(rb)], inclusive
    pub container: (usize, usize),
    /// the inner modules IN(F)
    pub inner: Vec<Vertex>,
    /// the starting terminal's neighborhood N_Q(s)
    pub ns: Vec<bool>,
}

/// Outcome of the minimal-frame search: a verified forbidden subgraph
/// (small member, or a large caw with a three-module base exposed by the
/// minimality checks), or a minimal frame with its container.
#[derive(Debug)]
pub enum FrameOutcome {
    Caw(Certificate),
    Frame(Frame, FrameContext),
}

// ---------------------------------------------------------------------------
// spine linearization
// ---------------------------------------------------------------------------

struct SpineView {
    bags: Vec<Vec<Vertex>>,
    lint: Vec<Option<usize>>,
    rint: Vec<Option<usize>>,
    on_spine: Vec<bool>,
}

impl SpineView {
    fn bag(&self, i: isize) -> Option<&Vec<Vertex>> {
        usize::try_from(i).ok().and_then(|i| self.bags.get(i))
    }
}

/// The window of a pendant simplicial module: the tightest spine stretch
/// its neighborhood pins down.
fn window(view: &SpineView, g: &Graph, s: Vertex) -> Result<(usize, usize), FrameError> {
    let mut lo: Option<usize> = None;
    let mut hi: Option<usize> = None;
    for &v in g.neighbors(s) {
        if !view.on_spine[v] {
            return Err(FrameError::Precondition(
                "pendant module with a pendant neighbor",
            ));
        }
        let (a, b) = (
            view.lint[v].ok_or(FrameError::Precondition("neighbor spans the wrap point"))?,
            view.rint[v].ok_or(FrameError::Precondition("neighbor spans the wrap point"))?,
        );
        lo = Some(lo.map_or(a, |x: usize| x.max(a)));
        hi = Some(hi.map_or(b, |x: usize| x.min(b)));
    }
    match (lo, hi) {
        (Some(a), Some(b)) if a <= b => Ok((a, b)),
        _ => Err(FrameError::Precondition("pendant module without a window")),
    }
}

/// Linearizes the spine of the decomposition: a caterpillar is taken as
/// is; a ring is rotated so that the window of the starting module sits
/// in the middle, far from the wrap point. Returns the view and the
/// pendant simplicial modules SP.
fn linearize(g: &Graph, dec: &Decomposition, rot: usize) -> (SpineView, Vec<Vertex>) {
    let (kdec, sp): (&crate::cliques::CliqueDecomposition, Vec<Vertex>) = match dec {
        Decomposition::Ring(ring) => (&ring.dec, ring.sp.clone()),
        Decomposition::Caterpillar(k) => {
            let mut on_spine = vec![false; g.n()];
            for bag in k.bags.iter().take(k.main_len) {
                for &v in bag {
                    on_spine[v] = true;
                }
            }
            let sp = g.vertices().filter(|&v| !on_spine[v]).collect();
            (k, sp)
        }
    };
    let q = kdec.main_len;
    let circular = matches!(kdec.shape, Shape::Hole | Shape::OliveRing);
    let rot = if circular { rot % q.max(1) } else { 0 };
    let bags: Vec<Vec<Vertex>> = (0..q)
        .map(|j| kdec.bags[(rot + j) % q].clone())
        .collect();
    let mut lint = vec![None; g.n()];
    let mut rint = vec![None; g.n()];
    let mut on_spine = vec![false; g.n()];
    for (j, bag) in bags.iter().enumerate() {
        for &v in bag {
            on_spine[v] = true;
            if lint[v].is_none() {
                lint[v] = Some(j);
            }
            rint[v] = Some(j);
        }
    }
    // a module whose occurrence is split in linear coordinates spans the
    // wrap point; mark it unusable rather than pretend it has a run
    for v in g.vertices() {
        if let (Some(a), Some(b)) = (lint[v], rint[v]) {
            let count = bags.iter().filter(|bag| bag.contains(&v)).count();
            if count != b - a + 1 {
                lint[v] = None;
                rint[v] = None;
            }
        }
    }
    (
        SpineView {
            bags,
            lint,
            rint,
            on_spine,
        },
        sp,
    )
}

// ---------------------------------------------------------------------------
// find_minimal_frame
// ---------------------------------------------------------------------------

/// Finds a small forbidden subgraph or a minimal frame in a prime graph
/// with the given decomposition. Errors when no pendant simplicial
/// module exists (then the graph has no caw at all).
pub fn find_minimal_frame(g: &Graph, dec: &Decomposition) -> Result<FrameOutcome, FrameError> {
    // a first pass without rotation, only to compute windows and pick s
    let (view0, sp) = linearize(g, dec, 0);
    if sp.is_empty() {
        return Err(FrameError::Precondition(
            "no pendant simplicial modules: the graph has no caw",
        ));
    }
    let q = view0.bags.len();
    let circular = matches!(
        dec,
        Decomposition::Ring(ring) if matches!(ring.dec.shape, Shape::Hole | Shape::OliveRing)
    );
    // candidate starting modules, tightest window first; the first one
    // with an inclusion-minimal window that completes wins
    let mut order: Vec<(usize, Vertex, usize)> = Vec::new(); // (len, s, start)
    for &s in &sp {
        // for rings, measure the window on a rotation anchored at s so
        // its own run cannot wrap
        let anchor = anchor_rotation(&view0, g, s, circular, q);
        let (view_s, _) = linearize(g, dec, anchor);
        if let Ok((a, b)) = window(&view_s, g, s) {
            // translate back to unrotated coordinates for comparability
            order.push(((b - a) + 1, s, (a + anchor) % q.max(1)));
        }
    }
    if order.is_empty() {
        return Err(FrameError::Precondition(
            "no pendant module pins down a spine window",
        ));
    }
    order.sort_unstable();
    let mut last_err = FrameError::NotFound;
    for &(len, s, start) in &order {
        // skip candidates whose window strictly contains an earlier one
        let minimal = !order.iter().any(|&(len2, s2, start2)| {
            s2 != s
                && len2 < len
                && (start2 + q.max(1) - start) % q.max(1) + len2 <= len
        });
        if !minimal {
            continue;
        }
        // rotate the ring so the window sits in the middle
        let rot = if circular {
            (start + len / 2 + q / 2) % q
        } else {
            0
        };
        let (view, _) = linearize(g, dec, rot);
        match frame_from(g, &view, s, &sp) {
            Ok(out) => return Ok(out),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

/// A rotation that keeps the window of `s` away from the wrap point:
/// rotate to start at the left end of some bag containing N(s).
fn anchor_rotation(view: &SpineView, g: &Graph, s: Vertex, circular: bool, q: usize) -> usize {
    if !circular || q == 0 {
        return 0;
    }
    let nb = g.neighbors(s);
    let home = (0..q).find(|&i| nb.iter().all(|v| view.bags[i].contains(v)));
    match home {
        Some(a) => (a + q - q / 2) % q,
        None => 0,
    }
}

fn pick_max_rint(view: &SpineView, cands: &[Vertex]) -> Result<Vertex, FrameError> {
    cands
        .iter()
        .copied()
        .map(|v| {
            view.rint[v]
                .map(|r| (r, std::cmp::Reverse(v)))
                .ok_or(FrameError::Precondition("module spans the wrap point"))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .zip(cands.iter().copied())
        .max_by_key(|&(key, _)| key)
        .map(|(_, v)| v)
        .ok_or(FrameError::NotFound)
}

fn pick_min_lint(view: &SpineView, cands: &[Vertex]) -> Result<Vertex, FrameError> {
    cands
        .iter()
        .copied()
        .map(|v| {
            view.lint[v]
                .map(|l| (l, v))
                .ok_or(FrameError::Precondition("module spans the wrap point"))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .min()
        .map(|(_, v)| v)
        .ok_or(FrameError::NotFound)
}

/// Runs the frame-finding procedure from the starting module `s`.
fn frame_from(
    g: &Graph,
    view: &SpineView,
    s: Vertex,
    sp: &[Vertex],
) -> Result<FrameOutcome, FrameError> {
    let (ls, rs) = window(view, g, s)?;
    let ns: Vec<bool> = {
        let mut m = vec![false; g.n()];
        for &v in g.neighbors(s) {
            m[v] = true;
        }
        m
    };
    // step 1: center(s) attaining the window ends
    let nb: Vec<Vertex> = g.neighbors(s).to_vec();
    let c1 = *nb
        .iter()
        .filter(|&&v| view.rint[v] == Some(rs))
        .min_by_key(|&&v| (view.lint[v], v))
        .ok_or(FrameError::NotFound)?;
    let mut c2 = *nb
        .iter()
        .filter(|&&v| view.lint[v] == Some(ls))
        .max_by_key(|&&v| (view.rint[v], std::cmp::Reverse(v)))
        .ok_or(FrameError::NotFound)?;
    let mut c1 = c1;
    if view.lint[c1] == view.lint[c2] {
        c2 = c1;
    }
    // step 2: base ends just outside the window
    let lb_pool: Vec<Vertex> = view
        .bag(view.lint[c2].unwrap() as isize - 1)
        .map(|bag| bag.iter().copied().filter(|&v| !ns[v]).collect())
        .unwrap_or_default();
    let rb_pool: Vec<Vertex> = view
        .bag(view.rint[c1].unwrap() as isize + 1)
        .map(|bag| bag.iter().copied().filter(|&v| !ns[v]).collect())
        .unwrap_or_default();
    if lb_pool.is_empty() || rb_pool.is_empty() {
        // a degenerate window at the spine end: the implied caw must be
        // small and nearby, or this starting module leads nowhere
        let mut seeds = lb_pool;
        seeds.extend(rb_pool);
        let pool = regional_pool(view, g, s, &seeds, (ls, rs));
        return find_fli_in(g, &pool)
            .map(FrameOutcome::Caw)
            .ok_or(FrameError::NotFound);
    }
    let lb = pick_max_rint(view, &lb_pool)?;
    let rb = pick_min_lint(view, &rb_pool)?;
    let (lb_l, lb_r) = (view.lint[lb].unwrap(), view.rint[lb].unwrap());
    let (rb_l, rb_r) = (view.lint[rb].unwrap(), view.rint[rb].unwrap());
    // step 3: a base end engulfing the window betrays a small caw
    if lb_r >= rs || rb_l <= ls {
        return step3_exit(g, view, s, c1, c2, lb, rb, (ls, rs), &ns).map(FrameOutcome::Caw);
    }
    // step 4: base terminals ending exactly at the base ends
    let l = g
        .vertices()
        .filter(|&v| view.on_spine[v] && view.rint[v] == Some(lb_l))
        .min()
        .ok_or(FrameError::NotFound)?;
    let r = g
        .vertices()
        .filter(|&v| view.on_spine[v] && view.lint[v] == Some(rb_r))
        .min()
        .ok_or(FrameError::NotFound)?;
    // step 5: a terminal falling short of a center merges the centers
    if view.rint[l].unwrap() < view.lint[c1].unwrap() {
        c2 = c1;
    }
    if view.lint[r].unwrap() > view.rint[c2].unwrap() {
        c1 = c2;
    }
    // step 6: overlapping base ends close the caw into a small member
    if lb_r >= rb_l {
        let set = dedup(vec![s, c1, c2, lb, rb, l, r]);
        let pool = set.clone();
        return Ok(FrameOutcome::Caw(emit(g, &set, &pool)?));
    }
    // step 7: a frame
    let kind = if c1 == c2 {
        FrameKind::Dagger
    } else {
        FrameKind::DoubleDagger
    };
    let frame = Frame {
        s,
        c1,
        c2,
        l,
        lb,
        rb,
        r,
        kind,
    };
    let container = (lb_r, rb_l);
    let mut inner: Vec<Vertex> = if rb_l - lb_r >= 2 {
        (lb_r + 1..rb_l)
            .flat_map(|i| view.bags[i].iter().copied())
            .filter(|&v| !ns[v])
            .collect()
    } else {
        // a three-module base: the single middle module sits in the
        // boundary between the two container bags
        view.bags[lb_r]
            .iter()
            .copied()
            .filter(|&v| !ns[v] && view.bags[rb_l].contains(&v))
            .collect()
    };
    inner.sort_unstable();
    inner.dedup();
    inner.retain(|v| !frame.vertices().contains(v));
    if inner.is_empty() {
        return Err(FrameError::Precondition("frame without inner modules"));
    }
    let ctx = FrameContext {
        bags: view.bags.clone(),
        lint: spliced_ints(view, g, sp, true),
        rint: spliced_ints(view, g, sp, false),
        container,
        inner,
        ns,
    };
    // minimality checks: a sibling pendant module adjacent to both
    // centers, or a base-end neighbor seen by only one center, exposes a
    // caw directly
    if let Some(cert) = check_c1(g, view, &frame, sp, &ctx) {
        return Ok(FrameOutcome::Caw(cert));
    }
    if let Some(cert) = check_c5(g, &frame) {
        return Ok(FrameOutcome::Caw(cert));
    }
    // frames over a three-module base carry their witness directly and
    // are exempt from the cover conditions
    if rb_l - lb_r >= 2 {
        check_center_cover(g, &frame, &ctx)?;
    }
    Ok(FrameOutcome::Frame(frame, ctx))
}

fn dedup(mut vs: Vec<Vertex>) -> Vec<Vertex> {
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// A priority-ordered pool of vertices around the window of `s` for the
/// subset fallback: the seeds first, then vertices exclusive to the
/// spine ends (the tips of any small caw reaching a spine end), then the
/// bags flanking the window. Order matters because the pool is capped.
fn regional_pool(
    view: &SpineView,
    g: &Graph,
    s: Vertex,
    seeds: &[Vertex],
    (ls, rs): (usize, usize),
) -> Vec<Vertex> {
    let q = view.bags.len();
    let mut pool: Vec<Vertex> = Vec::new();
    let push = |pool: &mut Vec<Vertex>, v: Vertex| {
        if !pool.contains(&v) {
            pool.push(v);
        }
    };
    push(&mut pool, s);
    for &v in g.neighbors(s) {
        push(&mut pool, v);
    }
    for &v in seeds {
        push(&mut pool, v);
    }
    // vertices whose run ends at a spine end and nowhere else
    if q >= 2 {
        for &v in &view.bags[0] {
            if !view.bags[1].contains(&v) {
                push(&mut pool, v);
            }
        }
        for &v in &view.bags[q - 1] {
            if !view.bags[q - 2].contains(&v) {
                push(&mut pool, v);
            }
        }
    }
    for i in ls.saturating_sub(1)..=(rs + 1).min(q - 1) {
        for &v in &view.bags[i] {
            push(&mut pool, v);
        }
    }
    // pendant modules hanging off the region: caw terminals need not lie
    // on the spine
    let members = pool.clone();
    for v in members {
        for &u in g.neighbors(v) {
            if !view.on_spine[u] {
                push(&mut pool, u);
            }
        }
    }
    pool.truncate(18);
    pool
}

/// Spine runs for spine modules plus windows for pendant modules, merged
/// into one table for the cut operations.
fn spliced_ints(view: &SpineView, g: &Graph, sp: &[Vertex], left: bool) -> Vec<Option<usize>> {
    let mut out = if left {
        view.lint.clone()
    } else {
        view.rint.clone()
    };
    for &s in sp {
        if let Ok((a, b)) = window(view, g, s) {
            out[s] = Some(if left { a } else { b });
        }
    }
    out
}

/// Step-3 exits: the chosen base end reaches to or past the window end,
/// which pins a small caw around it.
#[allow(clippy::too_many_arguments)]
fn step3_exit(
    g: &Graph,
    view: &SpineView,
    s: Vertex,
    c1: Vertex,
    c2: Vertex,
    lb: Vertex,
    rb: Vertex,
    (ls, rs): (usize, usize),
    ns: &[bool],
) -> Result<Certificate, FrameError> {
    let lb_r = view.rint[lb].unwrap();
    let rb_l = view.lint[rb].unwrap();
    let mut pool = vec![s, c1, c2, lb, rb];
    let shared = |i: isize, j: isize| -> Vec<Vertex> {
        match (view.bag(i), view.bag(j)) {
            (Some(a), Some(b)) => a
                .iter()
                .copied()
                .filter(|v| b.contains(v) && !ns[*v])
                .collect(),
            _ => Vec::new(),
        }
    };
    let only = |i: isize, j: isize| -> Vec<Vertex> {
        match view.bag(i) {
            Some(a) => a
                .iter()
                .copied()
                .filter(|v| view.bag(j).map_or(true, |b| !b.contains(v)))
                .collect(),
            None => Vec::new(),
        }
    };
    let mut primary: Vec<Vertex> = Vec::new();
    if lb_r > rs {
        // lb strictly engulfs the window: probes on both of its ends
        let lb_l = view.lint[lb].unwrap() as isize;
        let x = shared(lb_l - 1, lb_l);
        let xp = only(lb_l - 1, lb_l);
        let y = shared(lb_r as isize + 1, lb_r as isize);
        let yp = only(lb_r as isize + 1, lb_r as isize);
        for set in [&x, &xp, &y, &yp] {
            pool.extend(set.iter().copied());
        }
        if let (Some(&x), Some(&y)) = (x.first(), y.first()) {
            primary = dedup(vec![s, c1, c2, lb, x, y]); // sun shape
            if let (Some(&xp), Some(&yp)) = (xp.first(), yp.first()) {
                primary = dedup(vec![s, c1, lb, x, xp, y, yp]); // long claw
            }
        }
    } else if view.rint[rb].unwrap() < ls {
        // mirrored: rb strictly engulfs the window
        let rb_r = view.rint[rb].unwrap() as isize;
        let x = shared(rb_r + 1, rb_r);
        let xp = only(rb_r + 1, rb_r);
        let y = shared(rb_l as isize - 1, rb_l as isize);
        let yp = only(rb_l as isize - 1, rb_l as isize);
        for set in [&x, &xp, &y, &yp] {
            pool.extend(set.iter().copied());
        }
        if let (Some(&x), Some(&y)) = (x.first(), y.first()) {
            primary = dedup(vec![s, c1, c2, rb, x, y]);
            if let (Some(&xp), Some(&yp)) = (xp.first(), yp.first()) {
                primary = dedup(vec![s, c2, rb, x, xp, y, yp]);
            }
        }
    } else if lb_r == rs {
        // lb ends exactly at the window end: net or rising sun
        let x = only(ls as isize - 1, ls as isize);
        let y = shared(rs as isize + 1, rs as isize);
        let yp = only(rs as isize + 1, rs as isize);
        for set in [&x, &y, &yp] {
            pool.extend(set.iter().copied());
        }
        if let (Some(&x), Some(&y), Some(&yp)) = (x.first(), y.first(), yp.first()) {
            primary = dedup(vec![s, c1, c2, x, lb, y, yp]);
        }
    } else {
        // rb_l == ls, mirrored
        let x = only(rs as isize + 1, rs as isize);
        let y = shared(ls as isize - 1, ls as isize);
        let yp = only(ls as isize - 1, ls as isize);
        for set in [&x, &y, &yp] {
            pool.extend(set.iter().copied());
        }
        if let (Some(&x), Some(&y), Some(&yp)) = (x.first(), y.first(), yp.first()) {
            primary = dedup(vec![s, c1, c2, x, rb, y, yp]);
        }
    }
    let pool = regional_pool(view, g, s, &pool, (ls, rs));
    if !primary.is_empty() {
        if let Ok(cert) = emit(g, &primary, &pool) {
            return Ok(cert);
        }
    }
    find_fli_in(g, &pool).ok_or(FrameError::NotFound)
}

/// A sibling pendant module adjacent to both centers contradicts frame
/// minimality; a module distinguishing it from `s` closes a caw with a
/// three-module base.
fn check_c1(
    g: &Graph,
    view: &SpineView,
    f: &Frame,
    sp: &[Vertex],
    _ctx: &FrameContext,
) -> Option<Certificate> {
    for &s2 in sp {
        if s2 == f.s || !g.has_edge(s2, f.c1) || !g.has_edge(s2, f.c2) {
            continue;
        }
        // some module sees exactly one of s, s2 (the graph is prime)
        let x = g.vertices().find(|&x| {
            x != f.s && x != s2 && g.has_edge(x, f.s) != g.has_edge(x, s2)
        });
        let mut pool = vec![f.s, s2, f.c1, f.c2, f.l, f.lb, f.rb, f.r];
        if let Some(x) = x {
            pool.push(x);
            for &terminal in &[f.s, s2] {
                let set = dedup(vec![terminal, f.c1, f.c2, f.l, f.lb, x, f.rb, f.r]);
                if let Some(c) = classify_forbidden(g, &set) {
                    if verified_kind(&c) {
                        return Some(c);
                    }
                }
            }
        }
        pool.extend(view.bags[_ctx.container.0].iter().copied());
        pool.extend(view.bags[_ctx.container.1].iter().copied());
        let pool = dedup(pool);
        if let Some(c) = find_fli_in(g, &pool) {
            return Some(c);
        }
    }
    None
}

fn verified_kind(c: &Certificate) -> bool {
    use CertificateKind::*;
    matches!(
        c.kind,
        Hole4
            | Hole5
            | HoleLong
            | Net
            | Sun
            | RisingSun
            | LongClaw
            | WhippingTop
            | LargeCawDagger
            | LargeCawDoubleDagger
    )
}

/// A neighbor of a base end seen by the far center but not the near one
/// closes a sun with the frame.
fn check_c5(g: &Graph, f: &Frame) -> Option<Certificate> {
    if f.c1 == f.c2 {
        return None;
    }
    let bad_left = g.vertices().find(|&x| {
        x != f.c1
            && x != f.c2
            && (x == f.lb || g.has_edge(x, f.lb))
            && (x == f.c2 || g.has_edge(x, f.c2))
            && x != f.c1
            && !g.has_edge(x, f.c1)
    });
    if let Some(x) = bad_left {
        let set = dedup(vec![f.s, f.l, f.lb, f.c1, f.c2, x]);
        let pool = set.clone();
        if let Ok(cert) = emit(g, &set, &pool) {
            return Some(cert);
        }
    }
    let bad_right = g.vertices().find(|&x| {
        x != f.c1
            && x != f.c2
            && (x == f.rb || g.has_edge(x, f.rb))
            && (x == f.c1 || g.has_edge(x, f.c1))
            && !g.has_edge(x, f.c2)
    });
    if let Some(x) = bad_right {
        let set = dedup(vec![f.s, f.r, f.rb, f.c1, f.c2, x]);
        let pool = set.clone();
        if let Ok(cert) = emit(g, &set, &pool) {
            return Some(cert);
        }
    }
    None
}

/// The disposal lemmas require the center intersection to be covered by
/// every neighbor of `s`, and to cover every inner module's neighborhood;
/// both are checked outright so a violation cannot slip into a branch.
fn check_center_cover(g: &Graph, f: &Frame, ctx: &FrameContext) -> Result<(), FrameError> {
    let center: Vec<Vertex> = g
        .vertices()
        .filter(|&x| {
            (x == f.c1 || g.has_edge(x, f.c1)) && (x == f.c2 || g.has_edge(x, f.c2))
        })
        .collect();
    for v in g.vertices().filter(|&v| ctx.ns[v]) {
        for &x in &center {
            if x != v && x != f.s && !g.has_edge(x, v) {
                return Err(FrameError::Precondition(
                    "a neighbor of the terminal misses the center intersection",
                ));
            }
        }
    }
    for &v in &ctx.inner {
        if !center.contains(&v) {
            return Err(FrameError::Precondition(
                "an inner module escapes the center intersection",
            ));
        }
        for &u in g.neighbors(v) {
            if !center.contains(&u) {
                return Err(FrameError::Precondition(
                    "an inner module's neighbor escapes the center intersection",
                ));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// cut operations
// ---------------------------------------------------------------------------

/// The thinnest vertex separator inside the container: the boundary
/// `K_ℓ ∩ K_{ℓ+1} \ N(s)` of minimum total module size, ties to the
/// smallest index.
pub fn min_vertex_separator(ctx: &FrameContext, sizes: &[usize]) -> (usize, Vec<Vertex>) {
    let mut best: Option<(usize, usize, Vec<Vertex>)> = None;
    for ell in ctx.container.0..ctx.container.1 {
        let sep: Vec<Vertex> = ctx.bags[ell]
            .iter()
            .copied()
            .filter(|&v| !ctx.ns[v] && ctx.bags[ell + 1].contains(&v))
            .collect();
        let w: usize = sep.iter().map(|&v| sizes[v]).sum();
        if best.as_ref().map_or(true, |(bw, _, _)| w < *bw) {
            best = Some((w, ell, sep));
        }
    }
    let (_, ell, sep) = best.expect("container spans at least one boundary");
    (ell, sep)
}

/// The shortest base witnessing the frame: a greedy farthest-reach walk
/// from `lb` through the inner modules until `rb` comes into view.
pub fn shortest_base(g: &Graph, f: &Frame, ctx: &FrameContext) -> Result<Vec<Vertex>, FrameError> {
    let mut base = vec![f.lb];
    let mut cur = f.lb;
    for _ in 0..=ctx.bags.len() {
        if g.has_edge(cur, f.rb) {
            base.push(f.rb);
            return Ok(base);
        }
        let reach = ctx.rint[cur].ok_or(FrameError::NotFound)?;
        let next = ctx.bags[reach]
            .iter()
            .copied()
            .filter(|&v| !ctx.ns[v] && v != cur && (v == f.rb || ctx.inner.contains(&v)))
            .max_by_key(|&v| (ctx.rint[v], std::cmp::Reverse(v)))
            .ok_or(FrameError::NotFound)?;
        if ctx.rint[next] <= ctx.rint[cur] && !g.has_edge(next, f.rb) {
            return Err(FrameError::NotFound);
        }
        base.push(next);
        cur = next;
    }
    Err(FrameError::NotFound)
}

/// A boundary edge cut inside the container.
#[derive(Debug, Clone)]
pub struct EdgeCut {
    pub ell: usize,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub weight: usize,
}

/// The lightest edge set `E_{ℓ,X,Y}` over container bags of weight at
/// most k+1 and all nontrivial partitions of the bag minus N(s); ties to
/// the smallest index, then the first partition in subset order.
pub fn min_edge_cut(
    g: &Graph,
    ctx: &FrameContext,
    sizes: &[usize],
    k: usize,
) -> Result<EdgeCut, FrameError> {
    let mut best: Option<EdgeCut> = None;
    let mut any_eligible = false;
    for ell in ctx.container.0..=ctx.container.1 {
        let core: Vec<Vertex> = ctx.bags[ell]
            .iter()
            .copied()
            .filter(|&v| !ctx.ns[v])
            .collect();
        let w: usize = core.iter().map(|&v| sizes[v]).sum();
        if w > k + 1 || core.len() < 2 {
            continue;
        }
        any_eligible = true;
        // fix core[0] on the X side to halve the enumeration
        for mask in 0u32..(1 << (core.len() - 1)) - 1 {
            let mut x = vec![core[0]];
            let mut y = Vec::new();
            for (i, &v) in core.iter().enumerate().skip(1) {
                if mask >> (i - 1) & 1 == 1 {
                    x.push(v);
                } else {
                    y.push(v);
                }
            }
            let cut = boundary_cut(g, ctx, ell, &x, &y, sizes)?;
            if best
                .as_ref()
                .map_or(true, |b| cut.weight < b.weight)
            {
                best = Some(cut);
            }
        }
    }
    match best {
        Some(cut) => Ok(cut),
        None if !any_eligible => Err(FrameError::TooWide),
        None => Err(FrameError::NotFound),
    }
}

fn boundary_cut(
    g: &Graph,
    ctx: &FrameContext,
    ell: usize,
    x: &[Vertex],
    y: &[Vertex],
    sizes: &[usize],
) -> Result<EdgeCut, FrameError> {
    let in_bag = |v: Vertex| ctx.bags[ell].contains(&v);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for &a in x {
        for &b in y {
            edges.push((a.min(b), a.max(b)));
        }
    }
    for (&side, right) in x.iter().map(|v| (v, true)).chain(y.iter().map(|v| (v, false)))
    {
        for &u in g.neighbors(side) {
            if in_bag(u) {
                continue;
            }
            let (ul, ur) = (
                ctx.lint[u].ok_or(FrameError::Precondition("neighbor spans the wrap point"))?,
                ctx.rint[u].ok_or(FrameError::Precondition("neighbor spans the wrap point"))?,
            );
            let cut = if right { ul > ell } else { ur < ell };
            if cut {
                edges.push((side.min(u), side.max(u)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let weight = edges.iter().map(|&(a, b)| sizes[a] * sizes[b]).sum();
    Ok(EdgeCut {
        ell,
        x: x.to_vec(),
        y: y.to_vec(),
        edges,
        weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::decompose::decompose;
    use graph_core::fixtures;

    fn unit_sizes(g: &Graph) -> Vec<usize> {
        vec![1; g.n()]
    }

    fn frame_of(g: &Graph) -> (Frame, FrameContext) {
        let dec = decompose(g).unwrap();
        match find_minimal_frame(g, &dec).unwrap() {
            FrameOutcome::Frame(f, ctx) => (f, ctx),
            FrameOutcome::Caw(c) => panic!("unexpected caw {c:?}"),
        }
    }

    #[test]
    fn dagger_4_produces_its_own_frame() {
        let g = fixtures::dagger(4);
        let (f, ctx) = frame_of(&g);
        assert_eq!((f.s, f.c1, f.c2), (0, 1, 1));
        assert_eq!(f.kind, FrameKind::Dagger);
        assert_eq!((f.l, f.lb, f.rb, f.r), (2, 3, 6, 7));
        assert_eq!(ctx.inner, vec![4, 5]);
    }

    #[test]
    fn dagger_3_has_a_three_module_base() {
        let g = fixtures::dagger(3);
        let (f, ctx) = frame_of(&g);
        assert_eq!((f.lb, f.rb), (3, 5));
        assert_eq!(ctx.inner, vec![4]);
        let base = shortest_base(&g, &f, &ctx).unwrap();
        assert_eq!(base, vec![3, 4, 5]);
        let (_, sep) = min_vertex_separator(&ctx, &unit_sizes(&g));
        assert_eq!(sep, vec![4]);
    }

    #[test]
    fn ddagger_4_produces_a_two_center_frame() {
        let g = fixtures::ddagger(4);
        let (f, ctx) = frame_of(&g);
        assert_eq!(f.kind, FrameKind::DoubleDagger);
        assert_eq!((f.s, f.c1, f.c2), (0, 1, 2));
        assert_eq!((f.l, f.lb, f.rb, f.r), (3, 4, 7, 8));
        assert_eq!(ctx.inner, vec![5, 6]);
        let base = shortest_base(&g, &f, &ctx).unwrap();
        assert_eq!(base, vec![4, 5, 6, 7]);
    }

    #[test]
    fn overlapping_base_ends_exit_as_a_net() {
        // spine [{x1,lb,x2},{c,lb,x2},{c,lb,rb},{c,rb,x3},{x4,rb,x3}]
        // with s pendant on c: lb and rb meet inside the window
        let edges = vec![
            (0, 1), // s-c
            (1, 2),
            (1, 3),
            (1, 5),
            (1, 6), // c ~ lb,rb,x2,x3
            (2, 3),
            (2, 4),
            (2, 5), // lb ~ rb,x1,x2
            (3, 6),
            (3, 7), // rb ~ x3,x4
            (4, 5), // x1-x2
            (6, 7), // x3-x4
        ];
        let g = Graph::from_edge_list(8, edges).unwrap();
        let dec = decompose(&g).unwrap();
        let FrameOutcome::Caw(cert) = find_minimal_frame(&g, &dec).unwrap() else {
            panic!("expected a small caw");
        };
        assert_eq!(cert.kind, CertificateKind::Net);
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn net_exits_with_itself() {
        let g = fixtures::net();
        let dec = decompose(&g).unwrap();
        let FrameOutcome::Caw(cert) = find_minimal_frame(&g, &dec).unwrap() else {
            panic!("expected a small caw");
        };
        assert_eq!(cert.kind, CertificateKind::Net);
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn interval_graph_is_rejected() {
        let g = fixtures::path(6);
        let dec = decompose(&g).unwrap();
        assert!(matches!(
            find_minimal_frame(&g, &dec),
            Err(FrameError::Precondition(_))
        ));
    }

    #[test]
    fn separator_disconnects_the_base_ends() {
        let g = fixtures::dagger(5);
        let (f, ctx) = frame_of(&g);
        let (_, sep) = min_vertex_separator(&ctx, &unit_sizes(&g));
        // removing the separator leaves no lb-rb path through the inner
        // modules
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
        let (_, found) = sub.bfs_restricted(&[lbi], &allowed, |x| x == rbi);
        assert!(found.is_none(), "separator fails to cut the base");
    }

    #[test]
    fn edge_cut_on_dagger_6_is_a_single_base_edge() {
        let g = fixtures::dagger(6);
        let (_, ctx) = frame_of(&g);
        let cut = min_edge_cut(&g, &ctx, &unit_sizes(&g), 2).unwrap();
        assert_eq!(cut.weight, 1, "expected a weight-1 cut, got {cut:?}");
        assert_eq!(cut.edges.len(), 1);
    }

    #[test]
    fn edge_cut_too_wide_when_bags_exceed_budget() {
        let g = fixtures::dagger(4);
        let (_, ctx) = frame_of(&g);
        // inflate module sizes so every container bag is too heavy
        let sizes = vec![10; g.n()];
        assert!(matches!(
            min_edge_cut(&g, &ctx, &sizes, 1),
            Err(FrameError::TooWide)
        ));
    }
}
