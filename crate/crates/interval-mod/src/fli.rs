//! Extraction of small forbidden subgraphs (4-hole, 5-hole, net, sun,
//! rising sun, long claw, whipping top) from local structure around a hole
//! or a large chordal asteroidal witness.
//!
//! Every certificate produced here is re-checked by classification before
//! it is returned; if a constructed vertex set fails to classify (which can
//! happen on degenerate inputs), a bounded search over the implicated
//! region is used instead, so no code path panics on valid input.

use graph_core::{Graph, Vertex};
use itertools::Itertools;
use thiserror::Error;

use crate::certificate::{classify_forbidden, CawRoles, Certificate, CertificateKind};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FliError {
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("no forbidden subgraph found in the implicated region")]
    NotFound,
}

/// A hole (chordless cycle) of the host graph, with positional lookups.
#[derive(Debug, Clone)]
pub struct HoleIndex {
    hole: Vec<Vertex>,
    pos: Vec<Option<usize>>,
}

impl HoleIndex {
    /// Validates that `hole` lists a chordless cycle of `g` in cycle order.
    pub fn new(g: &Graph, hole: Vec<Vertex>) -> Result<Self, FliError> {
        let k = hole.len();
        if k < 4 {
            return Err(FliError::Precondition("hole has fewer than 4 vertices"));
        }
        let mut pos = vec![None; g.n()];
        for (i, &v) in hole.iter().enumerate() {
            if v >= g.n() || pos[v].is_some() {
                return Err(FliError::Precondition("hole vertices not distinct"));
            }
            pos[v] = Some(i);
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(hole[i], hole[j]) != consecutive {
                    return Err(FliError::Precondition("vertex list is not a hole"));
                }
            }
        }
        Ok(HoleIndex { hole, pos })
    }

    pub fn len(&self) -> usize {
        self.hole.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.hole
    }

    /// The hole vertex at circular index `i` (any integer).
    pub fn at(&self, i: i64) -> Vertex {
        let n = self.hole.len() as i64;
        self.hole[i.rem_euclid(n) as usize]
    }

    pub fn pos_of(&self, v: Vertex) -> Option<usize> {
        self.pos.get(v).copied().flatten()
    }

    /// Hole vertices at circular indices `lo..=hi`.
    pub fn arc(&self, lo: i64, hi: i64) -> Vec<Vertex> {
        (lo..=hi).map(|i| self.at(i)).collect()
    }

    /// Sorted circular-index positions of N[v] ∩ V(H).
    fn closed_footprint(&self, g: &Graph, v: Vertex) -> Vec<usize> {
        let mut ind: Vec<usize> = (0..self.hole.len())
            .filter(|&i| self.hole[i] == v || g.has_edge(v, self.hole[i]))
            .collect();
        ind.sort_unstable();
        ind
    }
}

/// Outcome of `hole_neighborhood`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HoodOutcome {
    /// N[v] ∩ V(H) is empty.
    Empty,
    /// N[v] ∩ V(H) induces the sub-path h_tail .. h_head (canonical
    /// indices: −|H| < tail ≤ 0 ≤ head < |H| when h_0 is in N[v], else
    /// 0 < tail ≤ head < |H|).
    Path { tail: i64, head: i64 },
    /// The footprint is not a sub-path (or v sees the whole hole); a small
    /// forbidden subgraph witnesses it.
    Forbidden(Certificate),
}

fn is_fli(kind: CertificateKind) -> bool {
    matches!(
        kind,
        CertificateKind::Hole4
            | CertificateKind::Hole5
            | CertificateKind::Net
            | CertificateKind::Sun
            | CertificateKind::RisingSun
            | CertificateKind::LongClaw
            | CertificateKind::WhippingTop
    )
}

fn certify(g: &Graph, verts: &[Vertex]) -> Option<Certificate> {
    let mut vs = verts.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() != verts.len() {
        return None;
    }
    classify_forbidden(g, &vs).filter(|c| is_fli(c.kind))
}

/// Bounded search: the smallest member of the forbidden family induced by
/// a subset of `pool`, if any. Intended for pools of ≤ ~20 vertices.
pub(crate) fn find_fli_in(g: &Graph, pool: &[Vertex]) -> Option<Certificate> {
    let mut vs = pool.to_vec();
    vs.sort_unstable();
    vs.dedup();
    for size in 4..=7usize.min(vs.len()) {
        for combo in vs.iter().copied().combinations(size) {
            if let Some(c) = classify_forbidden(g, &combo) {
                if is_fli(c.kind) {
                    return Some(c);
                }
            }
        }
    }
    None
}

/// Returns `primary` as a certificate when it classifies; otherwise falls
/// back to searching `primary ∪ pool`.
pub(crate) fn emit(g: &Graph, primary: &[Vertex], pool: &[Vertex]) -> Result<Certificate, FliError> {
    if let Some(c) = certify(g, primary) {
        return Ok(c);
    }
    let mut wide = primary.to_vec();
    wide.extend_from_slice(pool);
    find_fli_in(g, &wide).ok_or(FliError::NotFound)
}

// ---------------------------------------------------------------------------
// hole_neighborhood
// ---------------------------------------------------------------------------

/// Either the canonical path ends of N[v] ∩ V(H), or a forbidden subgraph
/// witnessing that the footprint is not a sub-path of the hole.
pub fn hole_neighborhood(g: &Graph, h: &HoleIndex, v: Vertex) -> Result<HoodOutcome, FliError> {
    let n = h.len();
    if n < 6 {
        return Err(FliError::Precondition("hole shorter than 6"));
    }
    let ind = h.closed_footprint(g, v);
    if ind.is_empty() {
        return Ok(HoodOutcome::Empty);
    }
    if ind.len() == n {
        return common_neighbor_branch(g, h, v).map(HoodOutcome::Forbidden);
    }
    // circular runs of the footprint
    let wraps = ind[0] == 0 && *ind.last().unwrap() == n - 1;
    let gaps: Vec<usize> = (0..ind.len() - 1)
        .filter(|&i| ind[i + 1] > ind[i] + 1)
        .collect();
    let circular_runs = gaps.len() + usize::from(!wraps);
    if circular_runs <= 1 {
        // single sub-path; canonicalize
        let (tail, head) = if gaps.is_empty() {
            (ind[0] as i64, *ind.last().unwrap() as i64)
        } else {
            // wraps through position 0
            (ind[gaps[0] + 1] as i64 - n as i64, ind[gaps[0]] as i64)
        };
        return Ok(HoodOutcome::Path { tail, head });
    }
    // footprint splits: subroutine of the non-consecutive lemma
    let p1 = ind[gaps[0]] as i64;
    let p2 = ind[gaps[0] + 1] as i64;
    let (p3, p4) = if gaps.len() >= 2 {
        (ind[gaps[1]] as i64, ind[gaps[1] + 1] as i64)
    } else {
        (*ind.last().unwrap() as i64, ind[0] as i64 + n as i64)
    };
    split_footprint(g, h, v, p1, p2, p3, p4).map(HoodOutcome::Forbidden)
}

/// Subroutine A of the non-consecutive lemma: `v` sees positions p1 and p2
/// (consecutive in footprint order, with a gap between them) and p3, p4
/// likewise; p2..p3 is a footprint run.
fn split_footprint(
    g: &Graph,
    h: &HoleIndex,
    v: Vertex,
    p1: i64,
    p2: i64,
    p3: i64,
    p4: i64,
) -> Result<Certificate, FliError> {
    let mut pool = vec![v];
    for c in [p1, p2, p3, p4] {
        pool.extend(h.arc(c - 2, c + 2));
    }
    if p2 <= p1 + 3 {
        let mut cyc = vec![v];
        cyc.extend(h.arc(p1, p2));
        return emit(g, &cyc, &pool);
    }
    if p4 <= p3 + 3 {
        let mut cyc = vec![v];
        cyc.extend(h.arc(p3, p4));
        return emit(g, &cyc, &pool);
    }
    if p3 == p2 {
        let set = [
            h.at(p1),
            v,
            h.at(p2 - 2),
            h.at(p2 - 1),
            h.at(p2),
            h.at(p2 + 1),
            h.at(p2 + 2),
        ];
        return emit(g, &set, &pool);
    }
    if p3 == p2 + 1 {
        let set = [h.at(p1), v, h.at(p2 - 1), h.at(p2), h.at(p3), h.at(p3 + 1)];
        return emit(g, &set, &pool);
    }
    let set = [
        h.at(p1 + 1),
        h.at(p1),
        v,
        h.at(p2 - 1),
        h.at(p2),
        h.at(p3),
        h.at(p3 + 1),
    ];
    emit(g, &set, &pool)
}

/// A short hole closing the ≤2-vertex gap of an almost-full footprint
/// (|N[v] ∩ V(H)| ≥ |H| − 2).
fn short_hole_with(
    g: &Graph,
    h: &HoleIndex,
    v: Vertex,
    tail: i64,
    head: i64,
) -> Result<Certificate, FliError> {
    let n = h.len() as i64;
    let mut cyc = vec![v];
    cyc.extend(h.arc(head, tail + if tail <= head { n } else { 0 }));
    let pool = cyc.clone();
    emit(g, &cyc, &pool)
}

/// The common-neighbor branch: `v` is adjacent to all of V(H). Finds the
/// nearest witness that the common neighborhood cannot be completed and
/// extracts a forbidden subgraph around it.
fn common_neighbor_branch(g: &Graph, h: &HoleIndex, v: Vertex) -> Result<Certificate, FliError> {
    let n = h.len();
    let on_hole = |u: Vertex| h.pos_of(u).is_some();
    let cset: Vec<Vertex> = (0..g.n())
        .filter(|&u| !on_hole(u) && h.closed_footprint(g, u).len() == n)
        .collect();
    debug_assert!(cset.contains(&v) || on_hole(v));
    let mut allowed = vec![true; g.n()];
    for &c in &cset {
        allowed[c] = false;
    }
    let (tree, found) = g.bfs_restricted(h.vertices(), &allowed, |u| {
        !on_hole(u) && cset.iter().any(|&c| !g.has_edge(u, c))
    });
    let Some(u) = found else {
        return Err(FliError::NotFound);
    };
    let path = tree.path_to(u); // h_* , u_1, ..., u_q = u
    let x = cset
        .iter()
        .copied()
        .find(|&c| !g.has_edge(u, c))
        .ok_or(FliError::NotFound)?;
    let u1 = path[1];
    let (tail, head) = match hole_neighborhood(g, h, u1)? {
        HoodOutcome::Forbidden(c) => return Ok(c),
        HoodOutcome::Path { tail, head } => (tail, head),
        HoodOutcome::Empty => return Err(FliError::NotFound),
    };
    let k = head - tail + 1;
    if k >= n as i64 - 2 {
        return short_hole_with(g, h, u1, tail, head);
    }
    let mut pool = vec![x, u1];
    pool.extend(h.arc(tail - 2, head + 2));
    if path.len() == 2 {
        // u itself is the hole neighbor u1
        return match k {
            1 => emit(
                g,
                &[
                    x,
                    h.at(tail - 2),
                    h.at(tail - 1),
                    h.at(tail),
                    h.at(tail + 1),
                    h.at(tail + 2),
                    u1,
                ],
                &pool,
            ),
            2 => emit(
                g,
                &[x, h.at(tail - 1), h.at(tail), h.at(head), h.at(head + 1), u1],
                &pool,
            ),
            _ => emit(g, &[x, h.at(tail), u1, h.at(head)], &pool),
        };
    }
    let u2 = path[2];
    pool.push(u2);
    match k {
        1 => emit(
            g,
            &[
                u2,
                u1,
                h.at(tail - 2),
                h.at(tail - 1),
                h.at(tail),
                h.at(tail + 1),
                h.at(tail + 2),
            ],
            &pool,
        ),
        2 => emit(
            g,
            &[u2, u1, h.at(tail - 1), h.at(tail), h.at(head), h.at(head + 1)],
            &pool,
        ),
        _ => emit(
            g,
            &[x, h.at(tail - 1), h.at(tail), u1, h.at(head), h.at(head + 1), u2],
            &pool,
        ),
    }
}

// ---------------------------------------------------------------------------
// shallow_nonsimplicial (large caw with non-simplicial shallow terminal)
// ---------------------------------------------------------------------------

/// Working view of a caw: `bp` is the extended base l, b_1, .., b_d, r.
#[derive(Debug, Clone)]
struct Caw {
    s: Vertex,
    c1: Vertex,
    c2: Vertex,
    bp: Vec<Vertex>,
}

impl Caw {
    fn from_roles(r: &CawRoles) -> Self {
        let mut bp = vec![r.l];
        bp.extend_from_slice(&r.base);
        bp.push(r.r);
        Caw {
            s: r.s,
            c1: r.c1,
            c2: r.c2,
            bp,
        }
    }

    fn d(&self) -> usize {
        self.bp.len() - 2
    }

    fn b(&self, i: usize) -> Vertex {
        self.bp[i]
    }

    fn l(&self) -> Vertex {
        self.bp[0]
    }

    fn r(&self) -> Vertex {
        *self.bp.last().unwrap()
    }

    fn single(&self) -> bool {
        self.c1 == self.c2
    }

    fn mirrored(&self) -> Caw {
        let mut bp = self.bp.clone();
        bp.reverse();
        Caw {
            s: self.s,
            c1: self.c2,
            c2: self.c1,
            bp,
        }
    }

    /// Implicated vertices for fallback searches: terminals, centers, and
    /// a window at each end of the base.
    fn pool(&self) -> Vec<Vertex> {
        let d = self.d();
        let mut p = vec![self.s, self.c1, self.c2];
        for i in [0, 1, 2.min(d + 1), d.saturating_sub(1), d, d + 1] {
            p.push(self.bp[i]);
        }
        p
    }
}

/// First run of consecutive extended-base positions adjacent to `x`.
fn first_run(g: &Graph, w: &Caw, x: Vertex) -> Option<(usize, usize)> {
    let i = w.bp.iter().position(|&b| g.has_edge(x, b))?;
    let mut j = i;
    while j + 1 < w.bp.len() && g.has_edge(x, w.bp[j + 1]) {
        j += 1;
    }
    Some((i, j))
}

/// Subroutine A: `x` is adjacent to the shallow terminal of `w` but not to
/// its center c2 (callers orient the caw so this holds).
fn sub_a(g: &Graph, w: &Caw, x: Vertex) -> Result<Certificate, FliError> {
    let oriented;
    let w = if g.has_edge(x, w.c2) && !g.has_edge(x, w.c1) {
        oriented = w.mirrored();
        &oriented
    } else {
        w
    };
    let d = w.d();
    let mut pool = w.pool();
    pool.push(x);
    if g.has_edge(x, w.b(1)) {
        return emit(g, &[x, w.s, w.c2, w.b(1)], &pool);
    }
    if g.has_edge(x, w.b(d)) {
        return emit(g, &[x, w.s, w.c2, w.b(d)], &pool);
    }
    if g.has_edge(x, w.l()) {
        return emit(g, &[x, w.s, w.c2, w.b(1), w.l()], &pool);
    }
    if g.has_edge(x, w.r()) {
        return if w.single() {
            emit(g, &[x, w.s, w.c2, w.b(d), w.r()], &pool)
        } else {
            emit(g, &[x, w.s, w.c2, w.r()], &pool)
        };
    }
    if !w.single() && g.has_edge(x, w.c1) {
        let set = [w.r(), w.c2, w.s, x, w.c1, w.l(), w.b(1)];
        return emit(g, &set, &pool);
    }
    if w.single() {
        let set = [x, w.s, w.c1, w.b(1), w.l(), w.b(d), w.r()];
        emit(g, &set, &pool)
    } else {
        let set = [x, w.s, w.l(), w.c1, w.r(), w.c2];
        emit(g, &set, &pool)
    }
}

/// Subroutine B: `x` is adjacent to the shallow terminal of `w`, and its
/// first run `p..=q` on the extended base touches at most two interior
/// base vertices (or an end of the base).
fn sub_b(g: &Graph, w: &Caw, x: Vertex, p: usize, q: usize) -> Result<Certificate, FliError> {
    if !g.has_edge(x, w.c2) {
        return sub_a(g, w, x);
    }
    if !g.has_edge(x, w.c1) {
        return sub_a(g, &w.mirrored(), x);
    }
    let d = w.d();
    let mut pool = w.pool();
    pool.push(x);
    for i in p.saturating_sub(2)..=(q + 2).min(d + 1) {
        pool.push(w.bp[i]);
    }
    if p == 0 && q == d + 1 {
        return find_fli_in(g, &pool).ok_or(FliError::NotFound);
    }
    if p == 0 {
        return match q {
            0 => emit(g, &[x, w.l(), w.b(1), w.c2], &pool),
            1 => emit(g, &[w.s, x, w.c2, w.l(), w.b(1), w.b(2)], &pool),
            2 => emit(g, &[w.s, x, w.c2, w.l(), w.b(1), w.b(2), w.b(3)], &pool),
            _ => find_fli_in(g, &pool).ok_or(FliError::NotFound),
        };
    }
    if q == d + 1 {
        return sub_b(g, &w.mirrored(), x, 0, d + 1 - p);
    }
    if p == 1 {
        if q + 2 <= d + 1 && g.has_edge(x, w.b(q + 2)) {
            return emit(g, &[x, w.b(q), w.b(q + 1), w.b(q + 2)], &pool);
        }
        return match q {
            1 => emit(g, &[w.l(), w.b(1), x, w.s, w.c2, w.b(3), w.b(2)], &pool),
            2 => emit(g, &[w.s, x, w.l(), w.b(1), w.b(2), w.b(3)], &pool),
            _ => find_fli_in(g, &pool).ok_or(FliError::NotFound),
        };
    }
    if q == d {
        return sub_b(g, &w.mirrored(), x, 1, d + 1 - p);
    }
    // interior run: 2 ≤ p ≤ q ≤ d−1
    if g.has_edge(x, w.b(q + 2)) {
        return emit(g, &[x, w.b(q), w.b(q + 1), w.b(q + 2)], &pool);
    }
    if q == p {
        let set = [w.b(p - 2), w.b(p - 1), w.b(p), w.s, x, w.b(p + 1), w.b(p + 2)];
        return emit(g, &set, &pool);
    }
    if q == p + 1 {
        let set = [w.s, x, w.b(p - 1), w.b(p), w.b(q), w.b(q + 1)];
        return emit(g, &set, &pool);
    }
    find_fli_in(g, &pool).ok_or(FliError::NotFound)
}

/// Given a large caw whose shallow terminal `s` is non-simplicial, finds a
/// small forbidden subgraph. Implements the greedy base-shrinking pass over
/// N(s), the clique check on the gathered common neighbors, and the BFS
/// dispatch into the two subroutines.
pub fn shallow_nonsimplicial(g: &Graph, roles: &CawRoles) -> Result<Certificate, FliError> {
    let mut w = Caw::from_roles(roles);
    if w.d() < 2 {
        return Err(FliError::Precondition("caw base too short"));
    }
    let nb = g.neighbors(w.s).to_vec();
    if !nb
        .iter()
        .enumerate()
        .any(|(i, &a)| nb.iter().skip(i + 1).any(|&b| !g.has_edge(a, b)))
    {
        return Err(FliError::Precondition("shallow terminal is simplicial"));
    }
    let mut cset: Vec<Vertex> = vec![w.c1];
    if w.c2 != w.c1 {
        cset.push(w.c2);
    }
    // step 1: sweep the neighbors of s, shrinking the base
    for &x in &nb {
        if cset.contains(&x) {
            continue;
        }
        let Some((i, j)) = first_run(g, &w, x) else {
            continue;
        };
        if !g.has_edge(x, w.c2) {
            return sub_a(g, &w, x);
        }
        if !g.has_edge(x, w.c1) {
            return sub_a(g, &w.mirrored(), x);
        }
        let d = w.d();
        if j - i <= 1 || j == 2 || i == d - 1 {
            return sub_b(g, &w, x, i, j);
        }
        let p = if i >= 1 {
            w.c2 = x;
            i
        } else {
            1
        };
        let q = if j <= d {
            w.c1 = x;
            j
        } else {
            d
        };
        cset.push(x);
        w.bp = w.bp[p - 1..=q + 1].to_vec();
    }
    // step 2: the gathered set must be a clique
    for (i, &a) in cset.iter().enumerate() {
        for &b in cset.iter().skip(i + 1) {
            if !g.has_edge(a, b) {
                return emit(g, &[w.s, a, w.b(1), b], &{
                    let mut p = w.pool();
                    p.extend([a, b]);
                    p
                });
            }
        }
    }
    // step 3: BFS from s avoiding the clique, for the first vertex that
    // either touches the extended base or misses a clique member
    let mut allowed = vec![true; g.n()];
    for &c in &cset {
        allowed[c] = false;
    }
    let in_bp = |v: Vertex| w.bp.contains(&v);
    let (tree, found) = g.bfs_restricted(&[w.s], &allowed, |v| {
        v != w.s
            && (w.bp.iter().any(|&b| g.has_edge(v, b))
                || in_bp(v)
                || cset.iter().any(|&c| !g.has_edge(v, c)))
    });
    let Some(x) = found else {
        return Err(FliError::NotFound);
    };
    let path = tree.path_to(x);
    let v = path[path.len() - 2];
    let d = w.d();
    let wv = Caw {
        s: v,
        ..w.clone()
    };
    // step 4: x touches the extended base
    if let Some((i, j)) = first_run(g, &w, x) {
        if j - i <= 1 || j == 2 || i == d - 1 {
            return sub_b(g, &wv, x, i, j);
        }
        if i == 0 && j == d + 1 {
            let mut pool = w.pool();
            pool.extend([x, v]);
            return if w.single() {
                emit(g, &[w.s, w.c1, w.l(), w.b(1), x, w.b(d), w.r()], &pool)
            } else {
                emit(g, &[w.s, w.c1, w.l(), x, w.r(), w.c2], &pool)
            };
        }
        if path.len() < 3 {
            let mut pool = w.pool();
            pool.extend([x, v]);
            return find_fli_in(g, &pool).ok_or(FliError::NotFound);
        }
        let u = path[path.len() - 3];
        return if i == 0 {
            let w1 = Caw {
                s: v,
                c1: x,
                c2: w.c2,
                bp: w.bp[..=j + 1].to_vec(),
            };
            sub_a(g, &w1.mirrored(), u)
        } else if j == d + 1 {
            let w2 = Caw {
                s: v,
                c1: w.c1,
                c2: x,
                bp: w.bp[i - 1..].to_vec(),
            };
            sub_a(g, &w2, u)
        } else {
            let w3 = Caw {
                s: v,
                c1: x,
                c2: x,
                bp: w.bp[i - 1..=j + 1].to_vec(),
            };
            sub_a(g, &w3, u)
        };
    }
    // step 5: x misses the base but also misses some clique member y
    if !g.has_edge(x, w.c2) {
        return sub_a(g, &wv, x);
    }
    if !g.has_edge(x, w.c1) {
        return sub_a(g, &wv.mirrored(), x);
    }
    let y = cset
        .iter()
        .copied()
        .find(|&y| !g.has_edge(x, y))
        .ok_or(FliError::NotFound)?;
    let yrun = first_run(g, &w, y);
    if yrun == Some((0, d + 1)) {
        let mut pool = w.pool();
        pool.extend([x, y, v]);
        return if w.single() {
            emit(g, &[x, w.c1, w.l(), w.b(1), y, w.b(d), w.r()], &pool)
        } else {
            emit(g, &[x, w.c1, w.l(), y, w.r(), w.c2], &pool)
        };
    }
    let y_left = g.has_edge(y, w.l());
    let y_right = g.has_edge(y, w.r());
    if y_left {
        let w5 = Caw {
            s: v,
            c1: y,
            c2: w.c2,
            bp: w.bp.clone(),
        };
        sub_a(g, &w5.mirrored(), x)
    } else if y_right {
        let w5 = Caw {
            s: v,
            c1: w.c1,
            c2: y,
            bp: w.bp.clone(),
        };
        sub_a(g, &w5, x)
    } else {
        let w5 = Caw {
            s: v,
            c1: y,
            c2: y,
            bp: w.bp.clone(),
        };
        sub_a(g, &w5, x)
    }
}

// ---------------------------------------------------------------------------
// nonadjacent_nonsimplicial (c-star)
// ---------------------------------------------------------------------------

/// Given a hole and a non-simplicial vertex with no neighbor on the hole,
/// finds a small forbidden subgraph.
pub fn nonadjacent_nonsimplicial(
    g: &Graph,
    h: &HoleIndex,
    v: Vertex,
) -> Result<Certificate, FliError> {
    let n = h.len() as i64;
    if h.len() < 6 {
        return Err(FliError::Precondition("hole shorter than 6"));
    }
    if !h.closed_footprint(g, v).is_empty() {
        return Err(FliError::Precondition("vertex touches the hole"));
    }
    let nb = g.neighbors(v).to_vec();
    if !nb
        .iter()
        .enumerate()
        .any(|(i, &a)| nb.iter().skip(i + 1).any(|&b| !g.has_edge(a, b)))
    {
        return Err(FliError::Precondition("vertex is simplicial"));
    }
    // walk a shortest path toward the hole; the last two vertices before
    // the hole take over the roles of v and its hole-adjacent neighbor
    let on_hole = |u: Vertex| h.pos_of(u).is_some();
    let allowed = vec![true; g.n()];
    let (tree, found) = g.bfs_restricted(&[v], &allowed, on_hole);
    let Some(hit) = found else {
        return Err(FliError::Precondition("vertex cannot reach the hole"));
    };
    let path = tree.path_to(hit); // v, ..., u, hit
    debug_assert!(path.len() >= 3);
    let u = path[path.len() - 2];
    let vp = path[path.len() - 3];
    let (tail, head) = match hole_neighborhood(g, h, u)? {
        HoodOutcome::Forbidden(c) => return Ok(c),
        HoodOutcome::Path { tail, head } => (tail, head),
        HoodOutcome::Empty => return Err(FliError::NotFound),
    };
    let k = head - tail + 1;
    if k >= n - 2 {
        return short_hole_with(g, h, u, tail, head);
    }
    let mut pool = vec![vp, u];
    pool.extend(h.arc(tail - 2, head + 2));
    match k {
        1 => emit(
            g,
            &[
                vp,
                u,
                h.at(tail - 2),
                h.at(tail - 1),
                h.at(tail),
                h.at(tail + 1),
                h.at(tail + 2),
            ],
            &pool,
        ),
        2 => emit(
            g,
            &[vp, u, h.at(tail - 1), h.at(tail), h.at(head), h.at(head + 1)],
            &pool,
        ),
        _ => shallow_nonsimplicial(
            g,
            &CawRoles {
                s: vp,
                c1: u,
                c2: u,
                l: h.at(tail - 1),
                r: h.at(head + 1),
                base: h.arc(tail, head),
            },
        ),
    }
}

// ---------------------------------------------------------------------------
// nonconsecutive_set
// ---------------------------------------------------------------------------

/// Given a connected set U whose combined hole footprint splits into two or
/// more arcs, finds a small forbidden subgraph.
pub fn nonconsecutive_set(g: &Graph, h: &HoleIndex, uset: &[Vertex]) -> Result<Certificate, FliError> {
    let n = h.len() as i64;
    if h.len() < 6 {
        return Err(FliError::Precondition("hole shorter than 6"));
    }
    if uset.is_empty() {
        return Err(FliError::Precondition("empty set"));
    }
    // per-vertex spans; any individually split footprint resolves at once
    let mut spans: Vec<Option<(i64, i64)>> = Vec::with_capacity(uset.len());
    for &u in uset {
        match hole_neighborhood(g, h, u)? {
            HoodOutcome::Forbidden(c) => return Ok(c),
            HoodOutcome::Path { tail, head } => spans.push(Some((tail, head))),
            HoodOutcome::Empty => spans.push(None),
        }
    }
    // arcs of the combined footprint; each member's consecutive span lies
    // inside exactly one of them
    let mut in_union = vec![false; h.len()];
    for s in spans.iter().flatten() {
        for i in s.0..=s.1 {
            in_union[i.rem_euclid(n) as usize] = true;
        }
    }
    let mut arc_id = vec![usize::MAX; h.len()];
    let mut arcs = 0usize;
    for start in 0..h.len() {
        if in_union[start] && arc_id[start] == usize::MAX {
            // walk back to the arc start, then forward over the whole arc
            let mut lo = start as i64;
            while in_union[(lo - 1).rem_euclid(n) as usize] && (start as i64 - lo) < n {
                lo -= 1;
            }
            let mut i = lo;
            while in_union[i.rem_euclid(n) as usize] && i - lo < n {
                arc_id[i.rem_euclid(n) as usize] = arcs;
                i += 1;
            }
            arcs += 1;
        }
    }
    if arcs <= 1 {
        return Err(FliError::Precondition("combined footprint is consecutive"));
    }
    let arc_of = |s: (i64, i64)| arc_id[s.0.rem_euclid(n) as usize];
    let i0 = spans.iter().position(|s| s.is_some()).unwrap();
    let a0 = arc_of(spans[i0].unwrap());
    let Some(j0) = spans
        .iter()
        .position(|s| s.map_or(false, |s| arc_of(s) != a0))
    else {
        return Err(FliError::Precondition("combined footprint is consecutive"));
    };
    // induced path between the two seeds inside G[U]
    let mut allowed = vec![false; g.n()];
    for &u in uset {
        allowed[u] = true;
    }
    let (tree, found) = g.bfs_restricted(&[uset[i0]], &allowed, |v| v == uset[j0]);
    if found.is_none() {
        return Err(FliError::Precondition("set is not connected"));
    }
    let path = tree.path_to(uset[j0]);
    let span_of = |v: Vertex| -> Option<(i64, i64)> {
        let idx = uset.iter().position(|&u| u == v)?;
        spans[idx]
    };
    // a hole-nonadjacent inner vertex delegates to the c-star lemma
    for (idx, &v) in path.iter().enumerate() {
        if idx > 0 && idx + 1 < path.len() && span_of(v).is_none() {
            return nonadjacent_nonsimplicial(g, h, v);
        }
    }
    // otherwise every path vertex has an arc, the ends differ, and some
    // adjacent pair switches arcs — such spans are disjoint
    for win in path.windows(2) {
        let (a, b) = (win[0], win[1]);
        let (Some(sa), Some(sb)) = (span_of(a), span_of(b)) else {
            continue;
        };
        if arc_of(sa) != arc_of(sb) {
            return disjoint_pair(g, h, a, b, sa, sb);
        }
    }
    // the arcs chain-overlap along the path; fall back to a bounded search
    let mut pool: Vec<Vertex> = path.clone();
    for &(t, hd) in [spans[i0].unwrap(), spans[j0].unwrap()].iter() {
        pool.extend(h.arc(t - 2, hd.min(t + 2)));
    }
    find_fli_in(g, &pool).ok_or(FliError::NotFound)
}

/// Two adjacent vertices with disjoint nonempty hole arcs.
fn disjoint_pair(
    g: &Graph,
    h: &HoleIndex,
    a: Vertex,
    b: Vertex,
    sa: (i64, i64),
    sb: (i64, i64),
) -> Result<Certificate, FliError> {
    let n = h.len() as i64;
    let ka = sa.1 - sa.0 + 1;
    let kb = sb.1 - sb.0 + 1;
    if ka >= n - 2 {
        return short_hole_with(g, h, a, sa.0, sa.1);
    }
    if kb >= n - 2 {
        return short_hole_with(g, h, b, sb.0, sb.1);
    }
    // reroute the hole through the wider of the two and query the other
    let (a, b, sa, sb, ka) = if ka >= kb { (a, b, sa, sb, ka) } else { (b, a, sb, sa, kb) };
    if ka >= 2 {
        // H' = a, h_head(a), h_head+1, ..., h_tail(a)
        let mut hole2 = vec![a];
        hole2.extend(h.arc(sa.1, sa.0 + if sa.0 <= sa.1 { n } else { 0 }));
        if hole2.len() <= 5 {
            return emit(g, &hole2, &hole2.clone());
        }
        let h2 = match HoleIndex::new(g, hole2.clone()) {
            Ok(h2) => h2,
            Err(_) => {
                let mut pool = hole2;
                pool.push(b);
                return find_fli_in(g, &pool).ok_or(FliError::NotFound);
            }
        };
        return match hole_neighborhood(g, &h2, b)? {
            HoodOutcome::Forbidden(c) => Ok(c),
            _ => {
                let mut pool = h2.vertices().to_vec();
                pool.push(b);
                find_fli_in(g, &pool).ok_or(FliError::NotFound)
            }
        };
    }
    // both footprints are single vertices h_ta and h_tb
    let (ta, tb) = (sa.0, sb.0);
    // the two a–b cycles through the gaps; either may already be short
    let fwd = (tb - ta).rem_euclid(n);
    let bwd = (ta - tb).rem_euclid(n);
    if fwd <= 2 {
        let mut cyc = vec![b, a];
        cyc.extend(h.arc(ta, ta + fwd));
        return emit(g, &cyc, &cyc.clone());
    }
    if bwd <= 2 {
        let mut cyc = vec![a, b];
        cyc.extend(h.arc(tb, tb + bwd));
        return emit(g, &cyc, &cyc.clone());
    }
    // both gaps are wide: long claw centered at a's hole anchor
    let set = [h.at(ta), h.at(ta - 1), h.at(ta - 2), h.at(ta + 1), h.at(ta + 2), a, b];
    let mut pool = set.to_vec();
    pool.extend(h.arc(tb - 2, tb + 2));
    emit(g, &set, &pool)
}

// ---------------------------------------------------------------------------
// non_helly
// ---------------------------------------------------------------------------

/// Given a clique of two or three vertices whose closed neighborhoods cover
/// the hole, finds a small forbidden subgraph.
pub fn non_helly(g: &Graph, h: &HoleIndex, uset: &[Vertex]) -> Result<Certificate, FliError> {
    let n = h.len() as i64;
    if h.len() < 6 {
        return Err(FliError::Precondition("hole shorter than 6"));
    }
    if !(2..=3).contains(&uset.len()) {
        return Err(FliError::Precondition("need two or three vertices"));
    }
    for (i, &a) in uset.iter().enumerate() {
        for &b in uset.iter().skip(i + 1) {
            if !g.has_edge(a, b) {
                return Err(FliError::Precondition("set is not a clique"));
            }
        }
    }
    let covered = |i: usize| {
        uset.iter()
            .any(|&u| u == h.vertices()[i] || g.has_edge(u, h.vertices()[i]))
    };
    if !(0..h.len()).all(covered) {
        return Err(FliError::Precondition("set does not cover the hole"));
    }
    let mut spans: Vec<Option<(i64, i64)>> = Vec::with_capacity(uset.len());
    for &u in uset {
        match hole_neighborhood(g, h, u)? {
            HoodOutcome::Forbidden(c) => return Ok(c),
            HoodOutcome::Path { tail, head } => spans.push(Some((tail, head))),
            HoodOutcome::Empty => spans.push(None),
        }
    }
    // u1: the member with the smallest proper footprint
    let mut best: Option<(usize, i64)> = None;
    for (i, s) in spans.iter().enumerate() {
        if let Some((t, hd)) = s {
            let k = hd - t + 1;
            if best.map_or(true, |(_, bk)| k < bk) {
                best = Some((i, k));
            }
        }
    }
    let Some((i1, k1)) = best else {
        return Err(FliError::NotFound);
    };
    let u1 = uset[i1];
    let (t1, h1) = spans[i1].unwrap();
    if k1 >= n - 2 {
        return short_hole_with(g, h, u1, t1, h1);
    }
    let adj = |u: Vertex, i: i64| g.has_edge(u, h.at(i));
    // flanking members just past each end of u1's footprint
    let u2 = uset
        .iter()
        .copied()
        .find(|&u| u != u1 && adj(u, h1 + 1))
        .ok_or(FliError::NotFound)?;
    let u3 = uset
        .iter()
        .copied()
        .find(|&u| u != u1 && adj(u, t1 - 1))
        .ok_or(FliError::NotFound)?;
    if !adj(u2, h1) {
        return emit(g, &[u1, u2, h.at(h1 + 1), h.at(h1)], &[u1, u2, u3, h.at(h1 - 1), h.at(h1 + 2)]);
    }
    if !adj(u3, t1) {
        return emit(g, &[u1, u3, h.at(t1 - 1), h.at(t1)], &[u1, u2, u3, h.at(t1 + 1), h.at(t1 - 2)]);
    }
    // the complement arc of u1's footprint, closed through u1
    let close_and_query = |hole2: Vec<Vertex>, q: Vertex| -> Result<Certificate, FliError> {
        if hole2.len() <= 5 {
            if let Some(c) = certify(g, &hole2) {
                return Ok(c);
            }
        } else if let Ok(h2) = HoleIndex::new(g, hole2.clone()) {
            if let HoodOutcome::Forbidden(c) = hole_neighborhood(g, &h2, q)? {
                return Ok(c);
            }
        }
        let mut pool = hole2;
        pool.truncate(14);
        pool.extend([u1, u2, u3, q]);
        find_fli_in(g, &pool).ok_or(FliError::NotFound)
    };
    if u2 == u3 || uset.len() == 2 {
        let mut hole2 = vec![u1];
        hole2.extend(h.arc(h1, t1 + if t1 <= h1 { n } else { 0 }));
        return close_and_query(hole2, u2);
    }
    // three distinct members: shortcut along u2's footprint and query u3
    let Some((_, h2end)) = spans[uset.iter().position(|&u| u == u2).unwrap()] else {
        let mut pool = vec![u1, u2, u3];
        pool.extend(h.arc(t1 - 2, h1 + 2));
        return find_fli_in(g, &pool).ok_or(FliError::NotFound);
    };
    let mut hole3 = vec![u1, u2];
    hole3.extend(h.arc(h2end, t1 + if t1 <= h2end { n } else { 0 }));
    match HoleIndex::new(g, hole3.clone()) {
        Ok(_) => close_and_query(hole3, u3),
        Err(_) => {
            let mut pool = vec![u1, u2, u3];
            pool.extend(h.arc(t1 - 2, t1 + 2));
            pool.extend(h.arc(h1 - 2, h1 + 2));
            pool.extend(h.arc(h2end - 2, h2end + 2));
            find_fli_in(g, &pool).ok_or(FliError::NotFound)
        }
    }
}
