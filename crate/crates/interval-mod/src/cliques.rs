//! Clique decompositions: maximal cliques arranged as a path, a
//! caterpillar (path plus leaf bags), a hole (cycle), an olive ring
//! (cycle plus leaf bags), or an unrestricted tree.

use graph_core::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Path,
    Caterpillar,
    Hole,
    OliveRing,
    Tree,
}

/// A clique decomposition of a host graph.
///
/// `bags[0..main_len]` form the spine, in order; for `Hole` and
/// `OliveRing` the spine is circular (bag `main_len − 1` links back to bag
/// 0). Remaining bags are leaves, attached by `links`. `links` lists all
/// bag adjacencies except the implicit consecutive/circular spine edges.
///
/// `lint[v]`/`rint[v]` give the first/last spine bag containing `v`
/// (`None` when `v` occurs in leaf bags only). On circular shapes the
/// occurrence run may wrap, in which case `lint > rint`.
#[derive(Debug, Clone)]
pub struct CliqueDecomposition {
    pub bags: Vec<Vec<Vertex>>,
    pub links: Vec<(usize, usize)>,
    pub shape: Shape,
    pub main_len: usize,
    pub lint: Vec<Option<usize>>,
    pub rint: Vec<Option<usize>>,
}

impl CliqueDecomposition {
    /// A path decomposition from spine bags in order.
    pub fn from_path(n: usize, bags: Vec<Vec<Vertex>>) -> Self {
        let main_len = bags.len();
        let mut k = CliqueDecomposition {
            bags,
            links: Vec::new(),
            shape: Shape::Path,
            main_len,
            lint: vec![None; n],
            rint: vec![None; n],
        };
        k.recompute_ints(n);
        k
    }

    /// A hole decomposition from circular spine bags in order.
    pub fn from_hole(n: usize, bags: Vec<Vec<Vertex>>) -> Self {
        let main_len = bags.len();
        let mut k = CliqueDecomposition {
            bags,
            links: Vec::new(),
            shape: Shape::Hole,
            main_len,
            lint: vec![None; n],
            rint: vec![None; n],
        };
        k.recompute_ints(n);
        k
    }

    /// An unrestricted clique tree.
    pub fn from_tree(n: usize, bags: Vec<Vec<Vertex>>, links: Vec<(usize, usize)>) -> Self {
        CliqueDecomposition {
            bags,
            links,
            shape: Shape::Tree,
            main_len: 0,
            lint: vec![None; n],
            rint: vec![None; n],
        }
    }

    /// Recomputes `lint`/`rint` from spine bag contents. On circular
    /// shapes, a run through bag 0 is detected and represented wrapped.
    pub fn recompute_ints(&mut self, n: usize) {
        self.lint = vec![None; n];
        self.rint = vec![None; n];
        let circular = matches!(self.shape, Shape::Hole | Shape::OliveRing);
        let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..self.main_len {
            for &v in &self.bags[i] {
                occ[v].push(i);
            }
        }
        for v in 0..n {
            if occ[v].is_empty() {
                continue;
            }
            let first = occ[v][0];
            let last = *occ[v].last().unwrap();
            let contiguous = occ[v].len() == last - first + 1;
            if contiguous {
                self.lint[v] = Some(first);
                self.rint[v] = Some(last);
            } else if circular {
                // the run wraps: find the gap and start after it
                let w = occ[v].windows(2).find(|w| w[1] > w[0] + 1).unwrap();
                self.lint[v] = Some(w[1]);
                self.rint[v] = Some(w[0]);
            } else {
                // leave as None; validate() will flag the broken run
                self.lint[v] = None;
                self.rint[v] = None;
            }
        }
    }

    pub fn lint_of(&self, v: Vertex) -> usize {
        self.lint[v].expect("vertex on spine")
    }

    pub fn rint_of(&self, v: Vertex) -> usize {
        self.rint[v].expect("vertex on spine")
    }

    /// All bag adjacencies, spine edges included.
    pub fn all_links(&self) -> Vec<(usize, usize)> {
        let mut links = self.links.clone();
        for i in 1..self.main_len {
            links.push((i - 1, i));
        }
        if matches!(self.shape, Shape::Hole | Shape::OliveRing) && self.main_len > 2 {
            links.push((self.main_len - 1, 0));
        }
        links
    }

    /// Vertices occurring in exactly one bag.
    pub fn simplicial_vertices(&self, n: usize) -> Vec<Vertex> {
        let mut count = vec![0usize; n];
        for bag in &self.bags {
            for &v in bag {
                count[v] += 1;
            }
        }
        (0..n).filter(|&v| count[v] == 1).collect()
    }

    /// Checks the decomposition invariants against the host graph:
    /// bags are distinct maximal cliques, every edge is inside some bag,
    /// and the bags containing each vertex induce a connected part of the
    /// link structure.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let q = self.bags.len();
        if self.main_len > q {
            return Err("main_len exceeds bag count".into());
        }
        let mut seen_bags: Vec<Vec<Vertex>> = Vec::new();
        for bag in &self.bags {
            let mut b = bag.clone();
            b.sort_unstable();
            if seen_bags.contains(&b) {
                return Err(format!("repeated bag {b:?}"));
            }
            if !g.is_clique(bag) {
                return Err(format!("bag {bag:?} is not a clique"));
            }
            let is_max = !g.vertices().any(|x| {
                !bag.contains(&x) && bag.iter().all(|&u| g.has_edge(x, u))
            });
            if !is_max {
                return Err(format!("bag {bag:?} is not maximal"));
            }
            seen_bags.push(b);
        }
        for (u, v) in g.edges() {
            if !self
                .bags
                .iter()
                .any(|b| b.contains(&u) && b.contains(&v))
            {
                return Err(format!("edge ({u},{v}) in no bag"));
            }
        }
        // occurrence connectivity over the link structure
        let links = self.all_links();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); q];
        for &(a, b) in &links {
            adj[a].push(b);
            adj[b].push(a);
        }
        for v in g.vertices() {
            let inside: Vec<usize> = (0..q).filter(|&i| self.bags[i].contains(&v)).collect();
            if inside.is_empty() {
                return Err(format!("vertex {v} in no bag"));
            }
            let mut reached = vec![false; q];
            let mut stack = vec![inside[0]];
            reached[inside[0]] = true;
            while let Some(i) = stack.pop() {
                for &j in &adj[i] {
                    if !reached[j] && self.bags[j].contains(&v) {
                        reached[j] = true;
                        stack.push(j);
                    }
                }
            }
            if inside.iter().any(|&i| !reached[i]) {
                return Err(format!("occurrence of vertex {v} is disconnected"));
            }
        }
        let total: usize = self.bags.iter().map(|b| b.len()).sum();
        if q > g.n().max(1) || total > g.n() + g.m() {
            return Err("size bounds violated".into());
        }
        Ok(())
    }
}
