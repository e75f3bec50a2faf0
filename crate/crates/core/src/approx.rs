//! Constant-factor approximation on 2-connected digraphs via special
//! vertices and weak bipaths.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::bounds::{bound1_tree, bound2_tree};
use crate::digraph::{Arc, RootedDigraph, Vertex};
use crate::error::Error;
use crate::outbranching::{extend_to_spanning, Outbranching};
use crate::reduce::{exhaust_rule1, kernelize, large_indegree_witness};
use crate::Result;

/// A maximal path of non-special vertices joined by 2-circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakBipath {
    pub vertices: Vec<Vertex>,
    /// Special in-neighbours of the first and last vertex.
    pub anchors: (Vertex, Vertex),
}

/// Split the non-special vertices of a 2-connected normalized digraph into
/// weak bipaths.
pub fn weak_bipaths(d: &RootedDigraph) -> Result<Vec<WeakBipath>> {
    let r = d.root();
    let n = d.capacity();
    let mut special = vec![false; n];
    special[r] = true;
    for v in d.classify().special {
        special[v] = true;
    }
    let plain = |v: Vertex| d.contains(v) && !special[v];
    // non-special vertices have exactly two in-neighbours, both doubly linked
    for v in d.vertices().filter(|&v| plain(v)) {
        if d.indegree(v) != 2 {
            return Err(Error::Internal("non-special vertex without indegree 2"));
        }
    }
    let link = |v: Vertex| -> Vec<Vertex> { d.in_neighbours(v).iter().copied().filter(|&u| plain(u)).collect() };
    let mut done = vec![false; n];
    let mut out = Vec::new();
    for s in d.vertices().filter(|&v| plain(v)) {
        if done[s] || link(s).len() == 2 {
            continue;
        }
        let mut path = vec![s];
        done[s] = true;
        let mut cur = s;
        while let Some(w) = link(cur).into_iter().find(|&w| !done[w]) {
            done[w] = true;
            path.push(w);
            cur = w;
        }
        let anchor = |v: Vertex, skip: Option<Vertex>| {
            d.in_neighbours(v).iter().copied().find(|&u| special[u] && Some(u) != skip)
        };
        let first = path[0];
        let last = *path.last().unwrap();
        let a = anchor(first, None).ok_or(Error::Internal("weak bipath end without anchor"))?;
        let b = if first == last { anchor(last, Some(a)) } else { anchor(last, None) }
            .ok_or(Error::Internal("weak bipath end without anchor"))?;
        out.push(WeakBipath { vertices: path, anchors: (a, b) });
    }
    if d.vertices().any(|v| plain(v) && !done[v]) {
        return Err(Error::Internal("non-special vertices form a cycle"));
    }
    Ok(out)
}

#[derive(Clone, Copy)]
struct HArc {
    to: Vertex,
    /// (weak bipath, entry end, exit offset) when the arc runs through one.
    comp: Option<(usize, usize, usize)>,
}

/// Outbranching with at least h - l leaves, h being the number of weak
/// bipaths and l the number of special vertices.
pub fn majbound_tree(d: &RootedDigraph) -> Result<Outbranching> {
    if !d.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if !d.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    if d.vertex_count() <= 2 {
        return d.bfs_tree();
    }
    let r = d.root();
    let n = d.capacity();
    let comps = weak_bipaths(d)?;
    let mut comp_of = vec![usize::MAX; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in &c.vertices {
            comp_of[v] = i;
        }
    }
    let is_special = |v: Vertex| d.contains(v) && comp_of[v] == usize::MAX;
    // arcs of the auxiliary digraph on special vertices and the root
    let mut h: Vec<Vec<HArc>> = vec![Vec::new(); n];
    for (u, v) in d.arcs() {
        if is_special(u) && is_special(v) {
            h[u].push(HArc { to: v, comp: None });
        }
    }
    for (i, c) in comps.iter().enumerate() {
        let len = c.vertices.len();
        let entries: [(Vertex, bool); 2] = [(c.anchors.0, true), (c.anchors.1, false)];
        for (k, &(a, from_front)) in entries.iter().enumerate() {
            for j in 0..len {
                let w = if from_front { c.vertices[j] } else { c.vertices[len - 1 - j] };
                for &b in d.out_neighbours(w) {
                    if is_special(b) && b != a {
                        let entry = if len == 1 { k } else { usize::from(!from_front) };
                        h[a].push(HArc { to: b, comp: Some((i, entry, j)) });
                    }
                }
            }
        }
    }
    // 0-1 breadth-first search counting weak bipaths used
    let mut dist = vec![usize::MAX; n];
    let mut via: Vec<Option<(Vertex, HArc)>> = vec![None; n];
    let mut dq = VecDeque::new();
    dist[r] = 0;
    dq.push_back(r);
    while let Some(a) = dq.pop_front() {
        for e in &h[a] {
            let w = usize::from(e.comp.is_some());
            if dist[a] + w < dist[e.to] {
                dist[e.to] = dist[a] + w;
                via[e.to] = Some((a, *e));
                if w == 0 {
                    dq.push_front(e.to);
                } else {
                    dq.push_back(e.to);
                }
            }
        }
    }
    let mut union: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in d.vertices().filter(|&v| is_special(v) && v != r) {
        let (a, e) = via[v].ok_or(Error::Internal("special vertex unreachable in auxiliary digraph"))?;
        match e.comp {
            None => union[a].push(v),
            Some((i, entry, j)) => {
                let c = &comps[i].vertices;
                let len = c.len();
                let walk: Vec<Vertex> = if entry == 0 || len == 1 {
                    c[..=j].to_vec()
                } else {
                    c[len - 1 - j..].iter().rev().copied().collect()
                };
                let mut prev = a;
                for &w in walk.iter().chain(core::iter::once(&v)) {
                    union[prev].push(w);
                    prev = w;
                }
            }
        }
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[r] = true;
    let mut q = VecDeque::from([r]);
    while let Some(a) = q.pop_front() {
        union[a].sort_unstable();
        union[a].dedup();
        for &b in &union[a] {
            if !seen[b] {
                seen[b] = true;
                parent[b] = Some(a);
                q.push_back(b);
            }
        }
    }
    extend_to_spanning(d, parent)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Candidate {
    Bound1,
    Bound2,
    Majbound,
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Candidate::Bound1 => "bound1",
            Candidate::Bound2 => "bound2",
            Candidate::Majbound => "majbound",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxReport {
    /// Special vertices of the 2-connected reduction.
    pub special: usize,
    /// Weak bipaths of the 2-connected reduction.
    pub weak_bipaths: usize,
    /// Candidate trees on the 2-connected reduction.
    pub candidates: Vec<(Candidate, Outbranching)>,
    pub chosen: Candidate,
    /// Leaves of the returned tree on the input digraph.
    pub leaves: usize,
    /// max(l / 30, h - l)
    pub lower: Ratio<i64>,
    /// l + 2h, an upper bound on the optimum.
    pub upper: usize,
}

impl ApproxReport {
    pub fn candidate_leaves(&self, c: Candidate) -> usize {
        self.candidates.iter().find(|(k, _)| *k == c).map_or(0, |(_, t)| t.leaf_count())
    }
}

impl fmt::Display for ApproxReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "l={}", self.special)?;
        writeln!(f, "h={}", self.weak_bipaths)?;
        for (c, t) in &self.candidates {
            writeln!(f, "leaves_{c}={}", t.leaf_count())?;
        }
        writeln!(f, "chosen={}", self.chosen)?;
        writeln!(f, "leaves={}", self.leaves)?;
        writeln!(f, "lower={}", self.lower)?;
        write!(f, "upper={}", self.upper)
    }
}

/// Outbranching within a factor 92 of the optimum.
pub fn approximate(d: &RootedDigraph) -> Result<(Outbranching, ApproxReport)> {
    let kernel = exhaust_rule1(d)?;
    let red = &kernel.reduced;
    let special = red.classify().special.len();
    let comps = if red.vertex_count() > 2 { weak_bipaths(red)?.len() } else { 0 };
    let candidates = vec![
        (Candidate::Bound1, bound1_tree(red)?),
        (Candidate::Bound2, bound2_tree(red)?),
        (Candidate::Majbound, majbound_tree(red)?),
    ];
    let mut best = 0;
    for i in 1..candidates.len() {
        if candidates[i].1.leaf_count() > candidates[best].1.leaf_count() {
            best = i;
        }
    }
    let tree = kernel.lift(&candidates[best].1)?;
    let lower = Ratio::new(special as i64, 30).max(Ratio::from_integer(comps as i64 - special as i64));
    let report = ApproxReport {
        special,
        weak_bipaths: comps,
        chosen: candidates[best].0,
        leaves: tree.leaf_count(),
        candidates,
        lower,
        upper: special + 2 * comps,
    };
    Ok((tree, report))
}

/// Try every vertex as the root and keep the best outbranching found.
pub fn approximate_any_root(n: usize, arcs: &[Arc]) -> Result<(Outbranching, ApproxReport)> {
    let mut best: Option<(Outbranching, ApproxReport)> = None;
    for r in 0..n {
        let d = RootedDigraph::build(n, r, arcs.iter().copied())?;
        match approximate(&d) {
            Ok(res) => {
                if best.as_ref().is_none_or(|b| res.0.leaf_count() > b.0.leaf_count()) {
                    best = Some(res);
                }
            }
            Err(Error::Unreachable(_)) => {}
            Err(e) => return Err(e),
        }
    }
    best.ok_or(Error::InvalidParameter("no vertex reaches every other vertex"))
}

/// Outbranching with at least sqrt(m / 90) leaves for a digraph reducible
/// to m arcs, from the kernel's large-indegree witness and the two bounds.
pub fn sqrt_opt_tree(d: &RootedDigraph) -> Result<Outbranching> {
    let kernel = kernelize(d)?;
    let red = &kernel.reduced;
    let mut best = red.bfs_tree()?;
    if let Some(x) = red.non_root_vertices().max_by_key(|&v| (red.indegree(v), core::cmp::Reverse(v))) {
        let t = large_indegree_witness(red, x)?;
        if t.leaf_count() > best.leaf_count() {
            best = t;
        }
    }
    for t in [bound1_tree(red)?, bound2_tree(red)?] {
        if t.leaf_count() > best.leaf_count() {
            best = t;
        }
    }
    kernel.lift(&best)
}
