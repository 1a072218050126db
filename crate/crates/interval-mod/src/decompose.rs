//! Decomposition of prime locally interval graphs into an olive ring (a
//! circular clique arrangement with pendant bags) or, for chordal inputs,
//! a caterpillar — or a small forbidden subgraph certifying that no such
//! decomposition exists.
//!
//! The construction routes through an auxiliary graph Ω: the closed
//! neighborhood T of an anchor hole vertex is split into a left and a
//! right copy according to the direction in which each T-vertex leaves the
//! hole, an apex vertex pins the left end, and interval recognition of Ω
//! yields the circular structure of the original graph.

use std::collections::HashMap;

use graph_core::{Graph, Vertex};
use thiserror::Error;

use crate::certificate::{classify_forbidden, Certificate, CertificateKind};
use crate::chordal::chordality;
use crate::cliques::{CliqueDecomposition, Shape};
use crate::fli::{
    emit, find_fli_in, hole_neighborhood, non_helly, nonadjacent_nonsimplicial,
    nonconsecutive_set, shallow_nonsimplicial, FliError, HoleIndex, HoodOutcome,
};
use crate::interval::recognize_interval;
use crate::modular::{maximal_strong_modules, QuotientKind};

#[derive(Debug, Error)]
pub enum DecomposeError {
    /// A small forbidden subgraph of the host graph.
    #[error("found forbidden subgraph ({})", .0.kind.name())]
    Forbidden(Certificate),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("no forbidden subgraph found in the implicated region")]
    NotFound,
}

impl From<FliError> for DecomposeError {
    fn from(e: FliError) -> Self {
        match e {
            FliError::Precondition(s) => DecomposeError::Precondition(s),
            FliError::NotFound => DecomposeError::NotFound,
        }
    }
}

fn forbidden(c: Result<Certificate, FliError>) -> DecomposeError {
    match c {
        Ok(c) => DecomposeError::Forbidden(c),
        Err(e) => e.into(),
    }
}

/// Role of an auxiliary-graph vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuxRole {
    /// Image of a vertex outside T.
    Outside(Vertex),
    /// Left copy of a T-vertex.
    Left(Vertex),
    /// Right copy of a T-vertex.
    Right(Vertex),
    /// The apex vertex pinning the left end.
    Anchor,
}

impl AuxRole {
    pub fn origin(self) -> Option<Vertex> {
        match self {
            AuxRole::Outside(v) | AuxRole::Left(v) | AuxRole::Right(v) => Some(v),
            AuxRole::Anchor => None,
        }
    }
}

/// The auxiliary graph Ω of a graph with an anchored hole.
#[derive(Debug, Clone)]
pub struct AuxGraph {
    pub graph: Graph,
    pub roles: Vec<AuxRole>,
    /// Index of the apex vertex.
    pub w: Vertex,
    /// The anchored hole, in host-graph labels, h_0 first.
    pub hole: Vec<Vertex>,
    /// T-vertices with a counterclockwise crossing edge (host labels).
    pub tcc: Vec<Vertex>,
    /// T-vertices with a clockwise crossing edge (host labels).
    pub tc: Vec<Vertex>,
    /// Hole footprint span per host vertex (canonical indices).
    pub span: Vec<Option<(i64, i64)>>,
    left_of: Vec<Option<usize>>,
    right_of: Vec<Option<usize>>,
    plain_of: Vec<Option<usize>>,
}

impl AuxGraph {
    pub fn origin(&self, x: usize) -> Option<Vertex> {
        self.roles[x].origin()
    }

    pub fn left_of(&self, v: Vertex) -> Option<usize> {
        self.left_of[v]
    }

    pub fn right_of(&self, v: Vertex) -> Option<usize> {
        self.right_of[v]
    }

    pub fn plain_of(&self, v: Vertex) -> Option<usize> {
        self.plain_of[v]
    }

    /// The auxiliary graph with all copies of the given host vertices
    /// removed (the host graph shrinks accordingly).
    pub fn minus(&self, removed: &[Vertex]) -> AuxGraph {
        let gone: Vec<bool> = {
            let mut m = vec![false; self.left_of.len()];
            for &v in removed {
                m[v] = true;
            }
            m
        };
        let keep: Vec<usize> = (0..self.graph.n())
            .filter(|&x| self.origin(x).map_or(true, |v| !gone[v]))
            .collect();
        let (graph, map) = self.graph.induced_subgraph(&keep);
        let roles: Vec<AuxRole> = map.iter().map(|&old| self.roles[old]).collect();
        let n_host = self.left_of.len();
        let mut left_of = vec![None; n_host];
        let mut right_of = vec![None; n_host];
        let mut plain_of = vec![None; n_host];
        let mut w = 0;
        for (new, &role) in roles.iter().enumerate() {
            match role {
                AuxRole::Outside(v) => plain_of[v] = Some(new),
                AuxRole::Left(v) => left_of[v] = Some(new),
                AuxRole::Right(v) => right_of[v] = Some(new),
                AuxRole::Anchor => w = new,
            }
        }
        AuxGraph {
            graph,
            roles,
            w,
            hole: self.hole.clone(),
            tcc: self.tcc.iter().copied().filter(|&v| !gone[v]).collect(),
            tc: self.tc.iter().copied().filter(|&v| !gone[v]).collect(),
            span: self.span.clone(),
            left_of,
            right_of,
            plain_of,
        }
    }
}

// ---------------------------------------------------------------------------
// anchor_hole
// ---------------------------------------------------------------------------

/// Re-anchors a hole at a vertex of maximal reach: the returned hole (h_0
/// first) has the property that the closed neighborhood of h_0 absorbs
/// everything spanning across it, which the Ω construction relies on.
pub fn anchor_hole(g: &Graph, hole: &[Vertex]) -> Result<Vec<Vertex>, DecomposeError> {
    if hole.len() < 6 {
        return Err(DecomposeError::Precondition("hole shorter than 6"));
    }
    let h = HoleIndex::new(g, hole.to_vec())?;
    let n = h.len() as i64;
    let on_hole = |v: Vertex| h.pos_of(v).is_some();
    let mut span: Vec<Option<(i64, i64)>> = vec![None; g.n()];
    // widest span across h_0, and the set sharing it
    let (mut a, mut b) = (-1i64, 1i64);
    let mut cset: Vec<Vertex> = vec![hole[0]];
    for v in g.vertices() {
        if on_hole(v) {
            continue;
        }
        match hole_neighborhood(g, &h, v)? {
            HoodOutcome::Empty => {}
            HoodOutcome::Forbidden(c) => return Err(DecomposeError::Forbidden(c)),
            HoodOutcome::Path { tail, head } => {
                span[v] = Some((tail, head));
                if (tail < a && head >= b) || (tail == a && head > b) {
                    a = tail;
                    b = head;
                    cset = vec![v];
                } else if tail == a && head == b {
                    cset.push(v);
                }
            }
        }
    }
    // the sharing set must be a clique
    for (i, &v1) in cset.iter().enumerate() {
        for &v2 in cset.iter().skip(i + 1) {
            if !g.has_edge(v1, v2) {
                let set = [v1, h.at(a), v2, h.at(b)];
                let mut pool = set.to_vec();
                pool.extend(h.arc(a - 1, b + 1));
                return Err(forbidden(emit(g, &set, &pool)));
            }
        }
    }
    let anchor = cset
        .iter()
        .copied()
        .max_by_key(|&v| g.degree(v))
        .expect("nonempty sharing set");
    // nothing may span the complement arc of [a, b]
    for v in g.vertices() {
        if span[v] == Some((b, n + a)) {
            if !g.has_edge(v, anchor) {
                let set = [v, h.at(a), anchor, h.at(b)];
                let mut pool = set.to_vec();
                pool.extend(h.arc(a - 1, b + 1));
                return Err(forbidden(emit(g, &set, &pool)));
            }
            return Err(forbidden(non_helly(g, &h, &[v, anchor])));
        }
    }
    if a + n - b <= 3 {
        let mut cyc = vec![anchor];
        cyc.extend(h.arc(b, a + n));
        let pool = cyc.clone();
        return Err(forbidden(emit(g, &cyc, &pool)));
    }
    // the anchor must dominate its sharing set
    for &v in &cset {
        if v == anchor || on_hole(v) {
            continue;
        }
        let dominated = std::iter::once(v)
            .chain(g.neighbors(v).iter().copied())
            .all(|x| x == anchor || g.has_edge(x, anchor));
        if !dominated {
            let x = std::iter::once(v)
                .chain(g.neighbors(v).iter().copied())
                .find(|&x| x != anchor && !g.has_edge(x, anchor))
                .unwrap();
            let y = std::iter::once(anchor)
                .chain(g.neighbors(anchor).iter().copied())
                .find(|&y| y != v && !g.has_edge(y, v) && y != x)
                .ok_or(DecomposeError::NotFound)?;
            let set = [h.at(a - 1), h.at(a), anchor, v, x, y];
            let mut pool = set.to_vec();
            pool.extend(h.arc(a - 2, b + 1));
            return Err(forbidden(emit(g, &set, &pool)));
        }
    }
    // rotate: the anchor becomes h_0
    let mut rotated = vec![anchor];
    rotated.extend(h.arc(b, a + n));
    Ok(rotated)
}

// ---------------------------------------------------------------------------
// direction classification and guard lemmas
// ---------------------------------------------------------------------------

/// A T-vertex with footprint exactly {h_0}, joined to the outside by `u`.
fn flat_span_witness(
    g: &Graph,
    h: &HoleIndex,
    v: Vertex,
    u: Vertex,
) -> Result<Certificate, DecomposeError> {
    if g.has_edge(u, h.at(1)) {
        let set = [v, u, h.at(1), h.at(0)];
        return emit(g, &set, &h.arc(-2, 2)).map_err(Into::into);
    }
    if g.has_edge(u, h.at(-1)) {
        let set = [v, u, h.at(-1), h.at(0)];
        return emit(g, &set, &h.arc(-2, 2)).map_err(Into::into);
    }
    match hole_neighborhood(g, h, u)? {
        HoodOutcome::Forbidden(c) => Ok(c),
        HoodOutcome::Path { .. } => Ok(nonconsecutive_set(g, h, &[v, u])?),
        HoodOutcome::Empty => {
            let set = [v, u, h.at(-2), h.at(-1), h.at(0), h.at(1), h.at(2)];
            let mut pool = set.to_vec();
            pool.extend(h.arc(-3, 3));
            emit(g, &set, &pool).map_err(Into::into)
        }
    }
}

/// A T-vertex spanning past the anchor on both sides, joined to an outside
/// vertex `u` adjacent to neither h_{−1} nor h_1.
fn ambiguous_witness(
    g: &Graph,
    h: &HoleIndex,
    v: Vertex,
    vspan: (i64, i64),
    u: Vertex,
) -> Result<Certificate, DecomposeError> {
    let n = h.len() as i64;
    let (tv, hv) = vspan;
    match hole_neighborhood(g, h, u)? {
        HoodOutcome::Forbidden(c) => Ok(c),
        HoodOutcome::Path { tail, head } => {
            if (head - (tv - 1)).rem_euclid(n) == 0 {
                let set = [v, h.at(tv), h.at(tv - 1), u];
                return emit(g, &set, &h.arc(tv - 2, hv + 1)).map_err(Into::into);
            }
            if (tail - (hv + 1)).rem_euclid(n) == 0 {
                let set = [v, h.at(hv), h.at(hv + 1), u];
                return emit(g, &set, &h.arc(tv - 1, hv + 2)).map_err(Into::into);
            }
            let _ = (tail, head);
            Ok(nonconsecutive_set(g, h, &[v, u])?)
        }
        HoodOutcome::Empty => {
            if hv - tv + 1 > n - 3 {
                let mut cyc = vec![v];
                cyc.extend(h.arc(hv, tv + n));
                let pool = cyc.clone();
                return emit(g, &cyc, &pool).map_err(Into::into);
            }
            // v centers a chordal asteroidal witness with shallow terminal u
            let roles = crate::certificate::CawRoles {
                s: u,
                c1: v,
                c2: v,
                l: h.at(tv - 1),
                r: h.at(hv + 1),
                base: h.arc(tv, hv),
            };
            match shallow_nonsimplicial(g, &roles) {
                Ok(c) => Ok(c),
                Err(_) => {
                    let mut pool = vec![v, u];
                    pool.extend(h.arc(tv - 2, hv + 2));
                    find_fli_in(g, &pool).ok_or(DecomposeError::NotFound)
                }
            }
        }
    }
}

/// An outside vertex with crossing edges in both directions.
fn one_side_single(
    g: &Graph,
    h: &HoleIndex,
    u: Vertex,
    v1: Vertex,
    v2: Vertex,
    span: &[Option<(i64, i64)>],
) -> Result<Certificate, DecomposeError> {
    let mut pool = vec![u, v1, v2];
    pool.extend(h.arc(-2, 2));
    if !g.has_edge(v1, v2) {
        let set = [v1, u, v2, h.at(0)];
        return emit(g, &set, &pool).map_err(Into::into);
    }
    if span[u].is_none() {
        // sun on the triangle v1 v2 h_0
        let set = [u, v1, v2, h.at(-1), h.at(0), h.at(1)];
        return emit(g, &set, &pool).map_err(Into::into);
    }
    if let Ok(c) = non_helly(g, h, &[u, v1, v2]) {
        return Ok(c);
    }
    if let Ok(c) = nonconsecutive_set(g, h, &[u, v1, v2]) {
        return Ok(c);
    }
    if let Some((tu, hu)) = span[u] {
        pool.extend(h.arc(tu - 2, (hu + 2).min(tu + h.len() as i64 - 1)));
    }
    if let Some((t1, _)) = span[v1] {
        pool.extend(h.arc(t1 - 2, t1 + 2));
    }
    if let Some((_, h2)) = span[v2] {
        pool.extend(h.arc(h2 - 2, h2 + 2));
    }
    find_fli_in(g, &pool).ok_or(DecomposeError::NotFound)
}

/// Two adjacent outside vertices with crossing edges in opposite
/// directions.
#[allow(clippy::too_many_arguments)]
fn one_side_pair(
    g: &Graph,
    h: &HoleIndex,
    u1: Vertex,
    v1: Vertex,
    u2: Vertex,
    v2: Vertex,
    span: &[Option<(i64, i64)>],
) -> Result<Certificate, DecomposeError> {
    if v1 == v2 {
        if let Ok(c) = nonconsecutive_set(g, h, &[u1, u2]) {
            return Ok(c);
        }
        if let Ok(c) = non_helly(g, h, &[u1, u2, v1]) {
            return Ok(c);
        }
        let mut pool = vec![u1, u2, v1];
        pool.extend(h.arc(-2, 2));
        return find_fli_in(g, &pool).ok_or(DecomposeError::NotFound);
    }
    if g.has_edge(u1, v2) {
        return one_side_single(g, h, u1, v1, v2, span);
    }
    if g.has_edge(u2, v1) {
        return one_side_single(g, h, u2, v1, v2, span);
    }
    let mut pool = vec![u1, u2, v1, v2];
    pool.extend(h.arc(-2, 2));
    if g.has_edge(v1, v2) {
        let set = [u1, v1, v2, u2];
        emit(g, &set, &pool).map_err(Into::into)
    } else {
        let set = [u1, v1, h.at(0), v2, u2];
        emit(g, &set, &pool).map_err(Into::into)
    }
}

/// Two nonadjacent T-vertices leaving the hole in the same direction
/// (`opp` = +1 for the counterclockwise side, −1 for the clockwise side),
/// with outside partners `y1`, `y2`.
fn same_side_nonclique(
    g: &Graph,
    h: &HoleIndex,
    mut x1: Vertex,
    mut y1: Vertex,
    mut x2: Vertex,
    mut y2: Vertex,
    opp: i64,
) -> Result<Certificate, DecomposeError> {
    let near = -opp;
    let mut pool = vec![x1, y1, x2, y2];
    pool.extend(h.arc(-2, 2));
    pool.extend([h.at(3 * opp), h.at(2 * near)]);
    let a1 = g.has_edge(x1, h.at(opp));
    let a2 = g.has_edge(x2, h.at(opp));
    if a1 && a2 {
        let set = [x1, h.at(near), x2, h.at(opp)];
        return emit(g, &set, &pool).map_err(Into::into);
    }
    if a1 || a2 {
        if a2 {
            std::mem::swap(&mut x1, &mut x2);
            std::mem::swap(&mut y1, &mut y2);
        }
        // net on the triangle h_0, h_opp, x1
        let set = [h.at(0), h.at(opp), h.at(2 * opp), x1, y1, x2];
        return emit(g, &set, &pool).map_err(Into::into);
    }
    if y1 == y2 {
        let set = [h.at(0), x1, y1, x2];
        return emit(g, &set, &pool).map_err(Into::into);
    }
    if g.has_edge(y1, y2) {
        let set = [h.at(0), x1, y1, y2, x2];
        return emit(g, &set, &pool).map_err(Into::into);
    }
    let set = [h.at(0), h.at(opp), h.at(2 * opp), x1, y1, x2, y2];
    emit(g, &set, &pool).map_err(Into::into)
}

// ---------------------------------------------------------------------------
// classify_and_build_aux
// ---------------------------------------------------------------------------

/// Classifies every crossing edge of T = N[h_0] as clockwise or
/// counterclockwise and builds the auxiliary graph Ω, or finds a small
/// forbidden subgraph when the classification is impossible.
pub fn classify_and_build_aux(g: &Graph, anchored: &[Vertex]) -> Result<AuxGraph, DecomposeError> {
    if anchored.len() < 6 {
        return Err(DecomposeError::Precondition("hole shorter than 6"));
    }
    let h = HoleIndex::new(g, anchored.to_vec())?;
    let h0 = anchored[0];
    let n = g.n();
    let mut in_t = vec![false; n];
    in_t[h0] = true;
    for &u in g.neighbors(h0) {
        in_t[u] = true;
    }
    // footprint spans for every vertex; split footprints certify at once
    let mut span: Vec<Option<(i64, i64)>> = vec![None; n];
    for v in g.vertices() {
        match hole_neighborhood(g, &h, v)? {
            HoodOutcome::Empty => {}
            HoodOutcome::Forbidden(c) => return Err(DecomposeError::Forbidden(c)),
            HoodOutcome::Path { tail, head } => span[v] = Some((tail, head)),
        }
    }
    // a non-simplicial vertex nonadjacent to the hole betrays a small
    // forbidden subgraph along its escape path
    for v in g.vertices() {
        if span[v].is_none() && !g.is_simplicial(v) {
            return Err(DecomposeError::Forbidden(nonadjacent_nonsimplicial(
                g, &h, v,
            )?));
        }
    }
    // per-edge directions
    let mut ecc: HashMap<(Vertex, Vertex), ()> = HashMap::new(); // (outside, t)
    let mut ec: HashMap<(Vertex, Vertex), ()> = HashMap::new();
    let mut ecc_partner: Vec<Option<Vertex>> = vec![None; n]; // per T-vertex
    let mut ec_partner: Vec<Option<Vertex>> = vec![None; n];
    let mut out_ecc: Vec<Option<Vertex>> = vec![None; n]; // per outside vertex
    let mut out_ec: Vec<Option<Vertex>> = vec![None; n];
    for v in g.vertices().filter(|&v| in_t[v]) {
        let (tv, hv) = span[v].ok_or(DecomposeError::Precondition(
            "T-vertex without hole footprint",
        ))?;
        for &u in g.neighbors(v) {
            if in_t[u] {
                continue;
            }
            let counterclockwise = match (tv < 0, hv > 0) {
                (false, false) => {
                    return Err(DecomposeError::Forbidden(flat_span_witness(g, &h, v, u)?))
                }
                (true, false) => true,
                (false, true) => false,
                (true, true) => {
                    let um = g.has_edge(u, h.at(-1));
                    let up = g.has_edge(u, h.at(1));
                    match (um, up) {
                        (true, true) => {
                            // u's own footprint splits around h_0
                            return match hole_neighborhood(g, &h, u)? {
                                HoodOutcome::Forbidden(c) => Err(DecomposeError::Forbidden(c)),
                                _ => Err(DecomposeError::NotFound),
                            };
                        }
                        (true, false) => true,
                        (false, true) => false,
                        (false, false) => {
                            return Err(DecomposeError::Forbidden(ambiguous_witness(
                                g,
                                &h,
                                v,
                                (tv, hv),
                                u,
                            )?))
                        }
                    }
                }
            };
            if counterclockwise {
                ecc.insert((u, v), ());
                ecc_partner[v] = Some(u);
                if let Some(v2) = out_ec[u] {
                    return Err(DecomposeError::Forbidden(one_side_single(
                        g, &h, u, v, v2, &span,
                    )?));
                }
                out_ecc[u] = Some(v);
            } else {
                ec.insert((u, v), ());
                ec_partner[v] = Some(u);
                if let Some(v1) = out_ecc[u] {
                    return Err(DecomposeError::Forbidden(one_side_single(
                        g, &h, u, v1, v, &span,
                    )?));
                }
                out_ec[u] = Some(v);
            }
        }
    }
    // adjacent outside vertices must not pull in opposite directions
    for (u1, u2) in g.edges() {
        if in_t[u1] || in_t[u2] {
            continue;
        }
        if let (Some(v1), Some(v2)) = (out_ecc[u1], out_ec[u2]) {
            return Err(DecomposeError::Forbidden(one_side_pair(
                g, &h, u1, v1, u2, v2, &span,
            )?));
        }
        if let (Some(v1), Some(v2)) = (out_ecc[u2], out_ec[u1]) {
            return Err(DecomposeError::Forbidden(one_side_pair(
                g, &h, u2, v1, u1, v2, &span,
            )?));
        }
    }
    // each direction class must be a clique
    let tcc: Vec<Vertex> = g.vertices().filter(|&v| ecc_partner[v].is_some()).collect();
    let tc: Vec<Vertex> = g.vertices().filter(|&v| ec_partner[v].is_some()).collect();
    for (side, opp) in [(&tcc, -1i64), (&tc, 1i64)] {
        for (i, &x1) in side.iter().enumerate() {
            for &x2 in side.iter().skip(i + 1) {
                if !g.has_edge(x1, x2) {
                    let (y1, y2) = if opp == -1 {
                        (ecc_partner[x1].unwrap(), ecc_partner[x2].unwrap())
                    } else {
                        (ec_partner[x1].unwrap(), ec_partner[x2].unwrap())
                    };
                    return Err(DecomposeError::Forbidden(same_side_nonclique(
                        g, &h, x1, y1, x2, y2, opp,
                    )?));
                }
            }
        }
    }
    // assemble Ω
    let mut left_of = vec![None; n];
    let mut right_of = vec![None; n];
    let mut plain_of = vec![None; n];
    let mut roles = Vec::new();
    for v in g.vertices() {
        if in_t[v] {
            left_of[v] = Some(roles.len());
            roles.push(AuxRole::Left(v));
            right_of[v] = Some(roles.len());
            roles.push(AuxRole::Right(v));
        } else {
            plain_of[v] = Some(roles.len());
            roles.push(AuxRole::Outside(v));
        }
    }
    let w = roles.len();
    roles.push(AuxRole::Anchor);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (a, b) in g.edges() {
        match (in_t[a], in_t[b]) {
            (false, false) => edges.push((plain_of[a].unwrap(), plain_of[b].unwrap())),
            (true, true) => {
                edges.push((left_of[a].unwrap(), left_of[b].unwrap()));
                edges.push((right_of[a].unwrap(), right_of[b].unwrap()));
            }
            _ => {
                // counterclockwise crossing edges ride the right copy,
                // clockwise ones the left copy
                let (v, u) = if in_t[a] { (a, b) } else { (b, a) };
                if ecc.contains_key(&(u, v)) {
                    edges.push((plain_of[u].unwrap(), right_of[v].unwrap()));
                } else {
                    debug_assert!(ec.contains_key(&(u, v)));
                    edges.push((plain_of[u].unwrap(), left_of[v].unwrap()));
                }
            }
        }
    }
    for &v in &tcc {
        edges.push((w, left_of[v].unwrap()));
    }
    let graph = Graph::from_edge_list(roles.len(), edges)
        .map_err(|_| DecomposeError::Precondition("aux construction produced bad edges"))?;
    assert!(graph.n() <= 2 * g.n() + 1, "aux vertex bound violated");
    assert!(graph.m() <= 2 * g.m(), "aux edge bound violated");
    Ok(AuxGraph {
        graph,
        roles,
        w,
        hole: anchored.to_vec(),
        tcc,
        tc,
        span,
        left_of,
        right_of,
        plain_of,
    })
}

// ---------------------------------------------------------------------------
// transfer_simplicials
// ---------------------------------------------------------------------------

/// The simplicial vertices of the host graph, read off the auxiliary
/// graph: a vertex outside the apex and the right copy set is simplicial
/// in Ω exactly when its origin is simplicial in the host.
pub fn transfer_simplicials(aux: &AuxGraph) -> Vec<Vertex> {
    let mut si: Vec<Vertex> = aux
        .roles
        .iter()
        .enumerate()
        .filter(|(_, role)| matches!(role, AuxRole::Outside(_) | AuxRole::Left(_)))
        .filter(|&(x, _)| aux.graph.is_simplicial(x))
        .filter_map(|(_, role)| role.origin())
        .collect();
    si.sort_unstable();
    si.dedup();
    si
}

// ---------------------------------------------------------------------------
// certificate translation from Ω structures
// ---------------------------------------------------------------------------

/// Shrinks an Ω-cycle (or Ω-path whose ends are a broken pair) to a hole
/// of the host graph by repeatedly cutting along host-side shortcuts.
fn reduce_to_host_hole(
    g: &Graph,
    aux: &AuxGraph,
    start: Vec<usize>,
    mut circular: bool,
) -> Result<Vec<Vertex>, DecomposeError> {
    let mut seq = start;
    'reduce: loop {
        let len = seq.len();
        for i in 0..len {
            for j in i + 2..len {
                if i == 0 && j == len - 1 {
                    continue; // circularly consecutive, or the closing pair
                }
                let (Some(pa), Some(pb)) = (aux.origin(seq[i]), aux.origin(seq[j])) else {
                    continue;
                };
                if pa == pb || g.has_edge(pa, pb) {
                    seq = seq[i..=j].to_vec();
                    circular = false;
                    continue 'reduce;
                }
            }
        }
        break;
    }
    let mut cyc: Vec<Vertex> = seq
        .iter()
        .map(|&x| aux.origin(x).ok_or(DecomposeError::NotFound))
        .collect::<Result<_, _>>()?;
    if !circular && cyc.len() >= 2 && cyc[0] == *cyc.last().unwrap() {
        cyc.pop();
    }
    Ok(cyc)
}

/// Extracts a small forbidden subgraph from a host-graph hole derived from
/// the auxiliary graph, by probing every vertex against it: a split
/// neighborhood certifies directly, and a vertex avoiding the hole that is
/// nonetheless non-simplicial yields a witness through its escape path.
fn host_hole_to_cert(
    g: &Graph,
    aux: &AuxGraph,
    hole: Vec<Vertex>,
) -> Result<Certificate, DecomposeError> {
    if hole.len() <= 5 {
        let pool = hole.clone();
        return emit(g, &hole, &pool).map_err(Into::into);
    }
    let Ok(hidx) = HoleIndex::new(g, hole.clone()) else {
        let mut pool = hole;
        pool.truncate(18);
        return find_fli_in(g, &pool).ok_or(DecomposeError::NotFound);
    };
    for z in g.vertices() {
        if hidx.pos_of(z).is_some() {
            continue;
        }
        match hole_neighborhood(g, &hidx, z) {
            Ok(HoodOutcome::Forbidden(c)) => return Ok(c),
            Ok(HoodOutcome::Empty) => {
                if !g.is_simplicial(z) {
                    if let Ok(c) = nonadjacent_nonsimplicial(g, &hidx, z) {
                        return Ok(c);
                    }
                }
            }
            _ => {}
        }
    }
    // last resort: brute-force the union of the derived and anchor holes
    let mut pool = hole;
    pool.extend_from_slice(&aux.hole);
    pool.sort_unstable();
    pool.dedup();
    pool.truncate(18);
    find_fli_in(g, &pool).ok_or(DecomposeError::NotFound)
}

fn omega_cycle_to_cert(
    g: &Graph,
    aux: &AuxGraph,
    cyc: Vec<usize>,
) -> Result<Certificate, DecomposeError> {
    let hole = reduce_to_host_hole(g, aux, cyc, true)?;
    host_hole_to_cert(g, aux, hole)
}

// ---------------------------------------------------------------------------
// check_aux_chordal
// ---------------------------------------------------------------------------

/// Verifies that the auxiliary graph is chordal; a hole of Ω is translated
/// into a small forbidden subgraph of the host graph.
pub fn check_aux_chordal(g: &Graph, aux: &AuxGraph) -> Result<(), DecomposeError> {
    match chordality(&aux.graph) {
        Ok(_) => Ok(()),
        Err(omega_hole) => Err(DecomposeError::Forbidden(omega_cycle_to_cert(
            g, aux, omega_hole,
        )?)),
    }
}

// ---------------------------------------------------------------------------
// check_aux_interval
// ---------------------------------------------------------------------------

/// Runs interval recognition on the (simplicial-free) auxiliary graph.
/// Success returns its clique path; an interval obstruction of Ω is
/// translated into a small forbidden subgraph of the host graph.
pub fn check_aux_interval(
    g: &Graph,
    aux: &AuxGraph,
) -> Result<CliqueDecomposition, DecomposeError> {
    match recognize_interval(&aux.graph) {
        Ok(path) => Ok(path),
        Err(cert) => Err(DecomposeError::Forbidden(translate_omega_cert(
            g, aux, &cert,
        )?)),
    }
}

fn translate_omega_cert(
    g: &Graph,
    aux: &AuxGraph,
    cert: &Certificate,
) -> Result<Certificate, DecomposeError> {
    use CertificateKind::*;
    let xs = &cert.vertices;
    if matches!(cert.kind, Hole4 | Hole5 | HoleLong) {
        return omega_cycle_to_cert(g, aux, xs.clone());
    }
    // a caw of Ω; look for a broken pair inside it first
    for (i, &a) in xs.iter().enumerate() {
        for &b in xs.iter().skip(i + 1) {
            if aux.graph.has_edge(a, b) {
                continue;
            }
            let (Some(pa), Some(pb)) = (aux.origin(a), aux.origin(b)) else {
                continue;
            };
            if pa == pb || g.has_edge(pa, pb) {
                let allowed = vec![true; aux.graph.n()];
                let (tree, found) = aux.graph.bfs_restricted(&[a], &allowed, |x| x == b);
                if found.is_none() {
                    return Err(DecomposeError::NotFound);
                }
                let path = tree.path_to(b);
                let hole = reduce_to_host_hole(g, aux, path, false)?;
                return host_hole_to_cert(g, aux, hole);
            }
        }
    }
    if xs.contains(&aux.w) {
        return apex_caw_to_cert(g, aux, xs);
    }
    // no broken pair, no apex: the image is an isomorphic caw of the host
    let image: Vec<Vertex> = xs.iter().filter_map(|&x| aux.origin(x)).collect();
    host_caw_to_cert(g, image)
}

/// A caw image in the host graph: small members certify directly, large
/// ones go through the shallow-terminal procedure.
fn host_caw_to_cert(g: &Graph, image: Vec<Vertex>) -> Result<Certificate, DecomposeError> {
    use CertificateKind::*;
    match classify_forbidden(g, &image) {
        Some(c) if matches!(c.kind, Hole4 | Hole5 | Net | Sun | RisingSun | LongClaw | WhippingTop) => {
            Ok(c)
        }
        Some(c) if matches!(c.kind, LargeCawDagger | LargeCawDoubleDagger) => {
            let roles = c.roles.clone().ok_or(DecomposeError::NotFound)?;
            Ok(shallow_nonsimplicial(g, &roles)?)
        }
        _ => {
            let mut pool = image;
            pool.truncate(18);
            find_fli_in(g, &pool).ok_or(DecomposeError::NotFound)
        }
    }
}

/// An Ω-caw through the apex vertex: replace the apex by an outside vertex
/// pulling counterclockwise on all of its left-copy neighbors, or fall
/// back to the two-partner subroutine.
fn apex_caw_to_cert(
    g: &Graph,
    aux: &AuxGraph,
    xs: &[usize],
) -> Result<Certificate, DecomposeError> {
    let h = HoleIndex::new(g, aux.hole.clone())?;
    let wnbrs: Vec<Vertex> = xs
        .iter()
        .copied()
        .filter(|&x| x != aux.w && aux.graph.has_edge(aux.w, x))
        .filter_map(|x| aux.origin(x))
        .collect();
    if wnbrs.is_empty() {
        return Err(DecomposeError::NotFound);
    }
    // a single outside vertex covering all apex neighbors counterclockwise
    let candidate = g.vertices().find(|&u| {
        aux.plain_of(u).is_some()
            && wnbrs.iter().all(|&v| {
                aux.right_of(v)
                    .map_or(false, |vr| aux.graph.has_edge(aux.plain_of(u).unwrap(), vr))
            })
    });
    if let Some(u) = candidate {
        let mut image: Vec<Vertex> = xs
            .iter()
            .copied()
            .filter(|&x| x != aux.w)
            .filter_map(|x| aux.origin(x))
            .collect();
        image.push(u);
        return host_caw_to_cert(g, image);
    }
    // two apex neighbors with distinct, non-crossing partners
    if wnbrs.len() != 2 {
        return Err(DecomposeError::NotFound);
    }
    let (x1, x2) = (wnbrs[0], wnbrs[1]);
    // partners pull their apex neighbor counterclockwise but miss the other
    let pulls_ccw = |y: Vertex, x: Vertex| {
        match (aux.plain_of(y), aux.right_of(x)) {
            (Some(yp), Some(xr)) => aux.graph.has_edge(yp, xr),
            _ => false,
        }
    };
    let pair = g
        .vertices()
        .filter(|&y1| pulls_ccw(y1, x1) && !g.has_edge(y1, x2))
        .find_map(|y1| {
            g.vertices()
                .find(|&y2| {
                    pulls_ccw(y2, x2)
                        && !g.has_edge(y2, x1)
                        && !g.has_edge(y1, y2)
                        && y1 != y2
                })
                .map(|y2| (y1, y2))
        });
    let Some((y1, y2)) = pair else {
        let mut pool = vec![x1, x2];
        pool.extend(h.arc(-2, 2));
        return find_fli_in(g, &pool).ok_or(DecomposeError::NotFound);
    };
    let head_of = |v: Vertex| aux.span[v].map(|s| s.1).unwrap_or(0);
    let (x1, y1, x2, y2) = if head_of(x1) >= head_of(x2) {
        (x1, y1, x2, y2)
    } else {
        (x2, y2, x1, y1)
    };
    let (h1, h2) = (head_of(x1), head_of(x2));
    let mut pool = vec![x1, x2, y1, y2];
    pool.extend(h.arc(-2, 2));
    if g.has_edge(y1, h.at(h1 + 1)) {
        let set = [y1, x1, h.at(h1), h.at(h1 + 1)];
        return emit(g, &set, &pool).map_err(Into::into);
    }
    if g.has_edge(y2, h.at(h2 + 1)) {
        let set = [y2, x2, h.at(h2), h.at(h2 + 1)];
        return emit(g, &set, &pool).map_err(Into::into);
    }
    if h1 == h2 {
        let set = [y1, x1, y2, x2, h.at(h1), h.at(h1 + 1)];
        return emit(g, &set, &pool).map_err(Into::into);
    }
    if !g.has_edge(y2, h.at(-1)) {
        let set = [y1, h.at(-1), y2, x2, h.at(0), h.at(1)];
        return emit(g, &set, &pool).map_err(Into::into);
    }
    let set = [y1, h.at(-1), x1, y2, x2, h.at(0), h.at(1)];
    emit(g, &set, &pool).map_err(Into::into)
}

// ---------------------------------------------------------------------------
// hole_decomposition
// ---------------------------------------------------------------------------

/// Folds the clique path of the (simplicial-free) auxiliary graph into a
/// circular clique decomposition of the host graph: the apex's closed
/// neighborhood is an end bag, the bags after it up to the first
/// occurrence of the anchor's right copy map through the origin function
/// and close into a cycle.
pub fn hole_decomposition(
    g: &Graph,
    aux: &AuxGraph,
    path: &CliqueDecomposition,
) -> Result<CliqueDecomposition, DecomposeError> {
    if path.shape != Shape::Path {
        return Err(DecomposeError::Precondition("expected a clique path"));
    }
    let q = path.bags.len();
    let wb: Vec<usize> = (0..q)
        .filter(|&i| path.bags[i].contains(&aux.w))
        .collect();
    // the apex's closed neighborhood is a maximal clique, so it occupies a
    // single bag, and that bag must sit at an end; orient it to the left
    if wb.len() != 1 {
        return Err(DecomposeError::Precondition("apex occurs in several bags"));
    }
    let bags: Vec<&Vec<usize>> = if wb[0] == 0 {
        path.bags.iter().collect()
    } else if wb[0] == q - 1 {
        path.bags.iter().rev().collect()
    } else {
        return Err(DecomposeError::Precondition("apex bag is not an end bag"));
    };
    let h0r = aux
        .right_of(aux.hole[0])
        .ok_or(DecomposeError::Precondition("anchor has no right copy"))?;
    // right-copy bags at the far end reproduce the apex-side bags; cut
    // after the last bag free of the anchor's right copy
    let ell = (0..q)
        .rev()
        .find(|&i| !bags[i].contains(&h0r))
        .ok_or(DecomposeError::Precondition("anchor copy fills the path"))?;
    if ell < 4 {
        return Err(DecomposeError::Precondition("too few bags for a ring"));
    }
    let mut main: Vec<Vec<Vertex>> = Vec::with_capacity(ell);
    for bag in bags.iter().take(ell + 1).skip(1) {
        let mut image: Vec<Vertex> = bag
            .iter()
            .filter_map(|&x| aux.origin(x))
            .collect();
        image.sort_unstable();
        image.dedup();
        main.push(image);
    }
    Ok(CliqueDecomposition::from_hole(g.n(), main))
}

// ---------------------------------------------------------------------------
// shortest_hole
// ---------------------------------------------------------------------------

/// A shortest hole of the host graph, read off a circular clique
/// decomposition by a greedy farthest-reach walk from each vertex of an
/// arbitrary starting bag.
pub fn shortest_hole(g: &Graph, k: &CliqueDecomposition) -> Result<Vec<Vertex>, DecomposeError> {
    if !matches!(k.shape, Shape::Hole | Shape::OliveRing) {
        return Err(DecomposeError::Precondition("expected a circular shape"));
    }
    let q = k.main_len as i64;
    if q < 4 {
        return Err(DecomposeError::Precondition("too few bags for a hole"));
    }
    let reach = |v: Vertex, from: i64| -> i64 { (k.rint_of(v) as i64 - from).rem_euclid(q) };
    // farthest-reaching vertex per bag
    let best: Vec<Option<Vertex>> = (0..q as usize)
        .map(|b| {
            k.bags[b]
                .iter()
                .copied()
                .max_by_key(|&v| reach(v, b as i64))
        })
        .collect();
    let mut shortest: Option<Vec<Vertex>> = None;
    for &u in &k.bags[0] {
        let (l, r) = (k.lint_of(u) as i64, k.rint_of(u) as i64);
        // unwrapped left endpoint of u's bag interval
        let s0 = if l > r { l - q } else { l };
        let mut chain = vec![u];
        let mut cover = r;
        let mut ok = false;
        for _ in 0..2 * q + 2 {
            // closed once the walk wraps back onto u's interval
            if cover - s0 >= q {
                ok = true;
                break;
            }
            let b = cover.rem_euclid(q) as usize;
            let Some(v) = best[b] else { break };
            let ext = reach(v, cover);
            if ext == 0 || chain.contains(&v) {
                break;
            }
            chain.push(v);
            cover += ext;
        }
        if !ok || chain.len() < 4 {
            continue;
        }
        let mut candidates = vec![chain.clone()];
        if chain.len() > 4 && g.has_edge(chain[1], *chain.last().unwrap()) {
            candidates.push(chain[1..].to_vec());
        }
        for cand in candidates {
            if HoleIndex::new(g, cand.clone()).is_ok()
                && shortest.as_ref().map_or(true, |s| cand.len() < s.len())
            {
                shortest = Some(cand);
            }
        }
    }
    shortest.ok_or(DecomposeError::NotFound)
}

// ---------------------------------------------------------------------------
// extend_olive_ring
// ---------------------------------------------------------------------------

/// An olive ring: a circular clique decomposition with pendant bags, plus
/// the set of vertices that occur in pendant bags only.
#[derive(Debug, Clone)]
pub struct OliveRing {
    pub dec: CliqueDecomposition,
    pub sp: Vec<Vertex>,
}

/// Reinserts the simplicial vertices into a circular clique decomposition
/// of the simplicial-free graph: each one either joins an existing bag,
/// splits a spine separator, or hangs off the spine as a pendant bag.
pub fn extend_olive_ring(
    g: &Graph,
    k: &CliqueDecomposition,
    si: &[Vertex],
) -> Result<OliveRing, DecomposeError> {
    let (bags, pendants) = insert_simplicials(g, k.bags.clone(), true, si)?;
    Ok(assemble(g, bags, pendants, Shape::OliveRing))
}

fn assemble(
    g: &Graph,
    main: Vec<Vec<Vertex>>,
    pendants: Vec<(usize, Vec<Vertex>)>,
    shape: Shape,
) -> OliveRing {
    let main_len = main.len();
    let mut bags = main;
    let mut links = Vec::new();
    for (attach, bag) in pendants {
        links.push((attach, bags.len()));
        bags.push(bag);
    }
    let mut dec = CliqueDecomposition {
        bags,
        links,
        shape,
        main_len,
        lint: Vec::new(),
        rint: Vec::new(),
    };
    dec.recompute_ints(g.n());
    let mut on_spine = vec![false; g.n()];
    for bag in dec.bags.iter().take(main_len) {
        for &v in bag {
            on_spine[v] = true;
        }
    }
    let mut in_any = vec![false; g.n()];
    for bag in &dec.bags {
        for &v in bag {
            in_any[v] = true;
        }
    }
    let sp = (0..g.n()).filter(|&v| in_any[v] && !on_spine[v]).collect();
    OliveRing { dec, sp }
}

/// Inserts simplicial vertices into a spine (circular or linear) in order
/// of nonincreasing degree, so that each one's neighborhood is fully
/// placed when it arrives. Returns the updated spine and the pendant bags
/// as (attachment index, bag) pairs — attachment indices refer to the
/// final spine; pendants attached to other pendants point past the spine.
fn insert_simplicials(
    g: &Graph,
    mut spine: Vec<Vec<Vertex>>,
    circular: bool,
    si: &[Vertex],
) -> Result<(Vec<Vec<Vertex>>, Vec<(usize, Vec<Vertex>)>), DecomposeError> {
    let mut order: Vec<Vertex> = si.to_vec();
    order.sort_by_key(|&s| (std::cmp::Reverse(g.degree(s)), s));
    let mut pendants: Vec<(usize, Vec<Vertex>)> = Vec::new();
    // location of every placed vertex: spine bags it occurs in, or the
    // pendant bag index it lives in
    for &s in &order {
        let q = spine.len();
        let nb: Vec<Vertex> = g.neighbors(s).to_vec();
        if nb.is_empty() {
            return Err(DecomposeError::Precondition("isolated simplicial vertex"));
        }
        // a neighbor living in a pendant bag forces s next to it
        let pendant_home = nb.iter().find_map(|&v| {
            pendants
                .iter()
                .position(|(_, bag)| bag.contains(&v))
                .filter(|_| !spine.iter().any(|bag| bag.contains(&v)))
        });
        if let Some(pi) = pendant_home {
            let mut bag = nb.clone();
            bag.push(s);
            bag.sort_unstable();
            // attach past the spine: index q + pi refers to the pendant
            pendants.push((q + pi, bag));
            continue;
        }
        // spine bags containing all placed neighbors
        let candidates: Vec<usize> = (0..q)
            .filter(|&i| nb.iter().all(|v| spine[i].contains(v)))
            .collect();
        if candidates.is_empty() {
            return Err(DecomposeError::Precondition(
                "simplicial neighborhood in no bag",
            ));
        }
        let mut nset = nb.clone();
        nset.sort_unstable();
        // (1) a bag equal to the neighborhood absorbs s
        if let Some(&i) = candidates.iter().find(|&&i| {
            let mut b = spine[i].clone();
            b.sort_unstable();
            b == nset
        }) {
            spine[i].push(s);
            spine[i].sort_unstable();
            continue;
        }
        // (2) a separator equal to the neighborhood splits
        let split = candidates.iter().copied().find(|&i| {
            let j = if i + 1 < q {
                i + 1
            } else if circular {
                0
            } else {
                return false;
            };
            if !candidates.contains(&j) {
                return false;
            }
            let sep: Vec<Vertex> = spine[i]
                .iter()
                .copied()
                .filter(|v| spine[j].contains(v))
                .collect();
            sep.len() == nset.len()
        });
        if let Some(i) = split {
            let mut bag = nset.clone();
            bag.push(s);
            bag.sort_unstable();
            spine.insert(i + 1, bag);
            // pendant attachments past i shift with the spine
            for p in pendants.iter_mut() {
                if p.0 > i {
                    p.0 += 1;
                }
            }
            continue;
        }
        // (3) a neighborhood inside an end bag only extends the spine:
        // N[s] is a maximal clique and every neighbor's run starts (or
        // ends) there, so the path property is preserved
        if !circular {
            let mut bag = nset.clone();
            bag.push(s);
            bag.sort_unstable();
            if candidates == [0] {
                spine.insert(0, bag);
                for p in pendants.iter_mut() {
                    p.0 += 1;
                }
                continue;
            }
            if candidates == [q - 1] {
                spine.push(bag);
                // references to pendant bags point past the spine end
                for p in pendants.iter_mut() {
                    if p.0 >= q {
                        p.0 += 1;
                    }
                }
                continue;
            }
        }
        // (4) pendant bag at the first candidate
        let mut bag = nset;
        bag.push(s);
        bag.sort_unstable();
        pendants.push((candidates[0], bag));
    }
    Ok((spine, pendants))
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

/// The decomposition of a prime graph.
#[derive(Debug, Clone)]
pub enum Decomposition {
    /// Non-chordal locally interval: a circular clique arrangement with
    /// pendant bags.
    Ring(OliveRing),
    /// Chordal locally interval: a clique path with pendant bags.
    Caterpillar(CliqueDecomposition),
}

/// Decomposes a prime graph into an olive ring or caterpillar, or finds a
/// small forbidden subgraph. Non-prime inputs are rejected.
pub fn decompose(g: &Graph) -> Result<Decomposition, DecomposeError> {
    if g.n() == 0 {
        return Err(DecomposeError::Precondition("empty graph"));
    }
    if g.n() >= 2 {
        let p = maximal_strong_modules(g);
        if p.kind != QuotientKind::Prime || p.modules.iter().any(|m| m.len() > 1) {
            return Err(DecomposeError::Precondition("graph is not prime"));
        }
    }
    match chordality(g) {
        Ok(_) => decompose_chordal(g),
        Err(hole) => {
            if hole.len() <= 5 {
                let pool = hole.clone();
                return Err(forbidden(emit(g, &hole, &pool)));
            }
            let anchored = anchor_hole(g, &hole)?;
            let aux = classify_and_build_aux(g, &anchored)?;
            check_aux_chordal(g, &aux)?;
            let si = transfer_simplicials(&aux);
            let aux2 = aux.minus(&si);
            let path = check_aux_interval(g, &aux2)?;
            let khole = hole_decomposition(g, &aux2, &path)?;
            let ring = extend_olive_ring(g, &khole, &si)?;
            Ok(Decomposition::Ring(ring))
        }
    }
}

fn decompose_chordal(g: &Graph) -> Result<Decomposition, DecomposeError> {
    if let Ok(path) = recognize_interval(g) {
        return Ok(Decomposition::Caterpillar(path));
    }
    let si = g.simplicial_vertices();
    let rest: Vec<Vertex> = g.vertices().filter(|v| !si.contains(v)).collect();
    if rest.is_empty() {
        // a clique (prime only when tiny): single-bag caterpillar
        let bag: Vec<Vertex> = g.vertices().collect();
        let mut dec = CliqueDecomposition::from_path(g.n(), vec![bag]);
        dec.shape = Shape::Caterpillar;
        return Ok(Decomposition::Caterpillar(dec));
    }
    let (sub, map) = g.induced_subgraph(&rest);
    match recognize_interval(&sub) {
        Ok(path) => {
            let spine: Vec<Vec<Vertex>> = path
                .bags
                .iter()
                .map(|bag| {
                    let mut b: Vec<Vertex> = bag.iter().map(|&x| map[x]).collect();
                    b.sort_unstable();
                    b
                })
                .collect();
            let (spine, pendants) = insert_simplicials(g, spine, false, &si)?;
            let mut ring = assemble(g, spine, pendants, Shape::Caterpillar);
            ring.dec.recompute_ints(g.n());
            Ok(Decomposition::Caterpillar(ring.dec))
        }
        Err(cert) => {
            let image: Vec<Vertex> = cert.vertices.iter().map(|&x| map[x]).collect();
            Err(DecomposeError::Forbidden(host_caw_to_cert(g, image)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use graph_core::fixtures;

    #[test]
    fn cycle_decomposes_into_ring_of_edges() {
        let c6 = fixtures::cycle(6);
        let Decomposition::Ring(ring) = decompose(&c6).unwrap() else {
            panic!("expected a ring");
        };
        assert_eq!(ring.dec.main_len, 6);
        assert!(ring.sp.is_empty());
        ring.dec.validate(&c6).unwrap();
    }

    #[test]
    fn pendant_on_cycle_joins_the_ring() {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((6, 0));
        let g = graph_core::Graph::from_edge_list(7, edges).unwrap();
        let Decomposition::Ring(ring) = decompose(&g).unwrap() else {
            panic!("expected a ring");
        };
        ring.dec.validate(&g).unwrap();
        assert!(ring.dec.bags.iter().any(|b| b.contains(&6)));
    }

    #[test]
    fn net_decomposes_into_caterpillar() {
        let net = fixtures::net();
        let Decomposition::Caterpillar(dec) = decompose(&net).unwrap() else {
            panic!("expected a caterpillar");
        };
        dec.validate(&net).unwrap();
        // three tip bags around the central triangle: two extend the
        // spine, the third must hang off it
        assert_eq!(dec.bags.len(), 4);
        assert_eq!(dec.main_len, 3);
    }

    #[test]
    fn short_hole_is_certified() {
        let c5 = fixtures::cycle(5);
        let Err(DecomposeError::Forbidden(cert)) = decompose(&c5) else {
            panic!("expected a certificate");
        };
        assert!(verify_certificate(&c5, &cert));
    }

    #[test]
    fn non_prime_is_rejected() {
        let c4 = fixtures::cycle(4);
        assert!(matches!(
            decompose(&c4),
            Err(DecomposeError::Precondition(_))
        ));
    }

    #[test]
    fn whipping_top_gets_a_caterpillar() {
        // chordal with an interval core: the decomposition exists even
        // though the graph itself is a forbidden structure
        let wt = fixtures::whipping_top();
        let Decomposition::Caterpillar(dec) = decompose(&wt).unwrap() else {
            panic!("expected a caterpillar");
        };
        dec.validate(&wt).unwrap();
    }

    #[test]
    fn large_caw_shallow_terminal_hangs_off_the_spine() {
        let g = fixtures::dagger(4);
        let Decomposition::Caterpillar(dec) = decompose(&g).unwrap() else {
            panic!("expected a caterpillar");
        };
        dec.validate(&g).unwrap();
        // the shallow terminal appears only past the main path
        let occurrences: Vec<usize> = (0..dec.bags.len())
            .filter(|&i| dec.bags[i].contains(&0))
            .collect();
        assert_eq!(occurrences.len(), 1);
        assert!(occurrences[0] >= dec.main_len);
    }

    #[test]
    fn shortest_hole_on_cycle_ring() {
        let c7 = fixtures::cycle(7);
        let Decomposition::Ring(ring) = decompose(&c7).unwrap() else {
            panic!("expected a ring");
        };
        let hole = shortest_hole(&c7, &ring.dec).unwrap();
        assert_eq!(hole.len(), 7);
    }
}
