//! Constructive leaf bounds: vertex cover, bipartite domination, acyclic
//! digraphs, and the two bounds for 2-connected digraphs built on r-r
//! numberings.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::digraph::{Arc, RootedDigraph, Vertex};
use crate::error::Error;
use crate::outbranching::Outbranching;
use crate::stnum::{rr_numbering, split, RRNumbering};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    /// Parallel edges are merged; loops are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
            }
            if a == b {
                return Err(Error::LoopArc(a));
            }
            let e = (a.min(b), a.max(b));
            if !list.contains(&e) {
                list.push(e);
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        Ok(UndirectedGraph { adj, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_cover(&self, set: &[usize]) -> bool {
        self.edges.iter().all(|(a, b)| set.contains(a) || set.contains(b))
    }
}

/// Vertex cover of size at most (n + m) / 3, taking a vertex of maximum
/// remaining degree each round.
pub fn vertex_cover_third(g: &UndirectedGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = g.adj.iter().map(|a| a.len()).collect();
    let mut gone = vec![false; n];
    let mut cover = Vec::new();
    loop {
        let best = (0..n).filter(|&v| !gone[v]).max_by_key(|&v| (deg[v], core::cmp::Reverse(v)));
        match best {
            Some(v) if deg[v] > 0 => {
                gone[v] = true;
                cover.push(v);
                for &w in &g.adj[v] {
                    if !gone[w] {
                        deg[w] -= 1;
                    }
                }
            }
            _ => break,
        }
    }
    cover.sort_unstable();
    cover
}

/// Given a-vertices each adjacent to exactly two b-vertices, a subset of
/// the b-vertices dominating every a-vertex of size at most
/// (|A| + |B|) / 3. `edges` are (a, b) pairs.
pub fn dominate_bipartite(a: &[usize], b: &[usize], edges: &[(usize, usize)]) -> Result<Vec<usize>> {
    let index = |x: usize| b.iter().position(|&y| y == x);
    let mut conflict = Vec::with_capacity(a.len());
    for &av in a {
        let mut nb: Vec<usize> = edges
            .iter()
            .filter(|e| e.0 == av)
            .filter_map(|e| index(e.1))
            .collect();
        nb.sort_unstable();
        nb.dedup();
        if nb.len() != 2 {
            return Err(Error::DegreeNotTwo { vertex: av, degree: nb.len() });
        }
        conflict.push((nb[0], nb[1]));
    }
    let g = UndirectedGraph::new(b.len(), conflict)?;
    let mut out: Vec<usize> = vertex_cover_third(&g).into_iter().map(|i| b[i]).collect();
    out.sort_unstable();
    Ok(out)
}

/// Intermediate sets of the acyclic construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationScaffold {
    /// Input with indegrees cut to at most 2.
    pub trimmed: RootedDigraph,
    pub sink: Vertex,
    /// Non-root vertices of indegree 1.
    pub single_entry: Vec<Vertex>,
    /// In-neighbours of `single_entry`.
    pub single_entry_parents: Vec<Vertex>,
    /// Indegree-2 vertices already dominated by `single_entry_parents`.
    pub covered_pairs: Vec<Vertex>,
    /// The remaining indegree-2 vertices.
    pub open_pairs: Vec<Vertex>,
    /// Candidate dominators: everything but the sink and the parents above.
    pub candidates: Vec<Vertex>,
    pub pair_dominators: Vec<Vertex>,
    /// Strongly dominating set: parents plus pair dominators.
    pub dominating: Vec<Vertex>,
}

fn check_acyclic_input(d: &RootedDigraph) -> Result<()> {
    if !d.is_acyclic() {
        return Err(Error::Cyclic);
    }
    if let Some(v) = d.first_unreachable() {
        return Err(Error::Unreachable(v));
    }
    if !d.is_normalized() {
        return Err(Error::NotNormalized);
    }
    Ok(())
}

pub fn domination_scaffold(d: &RootedDigraph) -> Result<DominationScaffold> {
    check_acyclic_input(d)?;
    let arcs = d.arcs().filter(|&(u, v)| {
        let ins = d.in_neighbours(v);
        ins.len() <= 2 || ins[..2].contains(&u)
    });
    let trimmed = d.with_arcs(arcs)?;
    let t = &trimmed;
    let sink = t
        .non_root_vertices()
        .find(|&v| t.outdegree(v) == 0)
        .ok_or(Error::Internal("acyclic digraph without a sink"))?;
    let n = t.capacity();
    let single_entry: Vec<Vertex> = t.non_root_vertices().filter(|&v| t.indegree(v) == 1).collect();
    let mut is_parent = vec![false; n];
    for &z in &single_entry {
        is_parent[t.in_neighbours(z)[0]] = true;
    }
    let single_entry_parents: Vec<Vertex> = (0..n).filter(|&v| is_parent[v]).collect();
    let (covered_pairs, open_pairs): (Vec<Vertex>, Vec<Vertex>) = t
        .non_root_vertices()
        .filter(|&v| t.indegree(v) == 2)
        .partition(|&v| t.in_neighbours(v).iter().any(|&u| is_parent[u]));
    let candidates: Vec<Vertex> = t.vertices().filter(|&v| !is_parent[v] && v != sink).collect();
    let edges: Vec<(usize, usize)> = open_pairs
        .iter()
        .flat_map(|&a| t.in_neighbours(a).iter().map(move |&u| (a, u)))
        .collect();
    let pair_dominators = dominate_bipartite(&open_pairs, &candidates, &edges)?;
    let mut dominating: Vec<Vertex> = single_entry_parents.iter().chain(&pair_dominators).copied().collect();
    dominating.sort_unstable();
    dominating.dedup();
    Ok(DominationScaffold {
        trimmed,
        sink,
        single_entry,
        single_entry_parents,
        covered_pairs,
        open_pairs,
        candidates,
        pair_dominators,
        dominating,
    })
}

/// The leaf count guaranteed for an acyclic digraph with `l` vertices of
/// indegree at least 2 and root outdegree `dr`: (l + dr - 1) / 3 + 1.
pub fn acyclic_leaf_bound(l: usize, dr: usize) -> Ratio<i64> {
    Ratio::new(l as i64 + dr as i64 - 1, 3) + 1
}

/// Outbranching of an acyclic normalized digraph whose internal vertices all
/// lie in the scaffold's dominating set.
pub fn acyclic_many_leaves(d: &RootedDigraph) -> Result<Outbranching> {
    if d.vertex_count() == 1 {
        check_acyclic_input(d)?;
        return d.bfs_tree();
    }
    let s = domination_scaffold(d)?;
    let mut parent = vec![None; d.capacity()];
    for v in d.non_root_vertices() {
        let p = s
            .trimmed
            .in_neighbours(v)
            .iter()
            .copied()
            .find(|p| s.dominating.binary_search(p).is_ok())
            .ok_or(Error::Internal("vertex not dominated by the scaffold"))?;
        parent[v] = Some(p);
    }
    let t = Outbranching::from_parents(d.root(), parent);
    d.verify(&t)?;
    Ok(t)
}

fn check_two_connected(d: &RootedDigraph) -> Result<()> {
    if !d.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if !d.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    Ok(())
}

/// Outbranching with at least l3 / 6 leaves, l3 being the number of
/// vertices of indegree at least 3.
pub fn bound1_tree(d: &RootedDigraph) -> Result<Outbranching> {
    check_two_connected(d)?;
    if d.vertex_count() <= 2 {
        return d.bfs_tree();
    }
    let s = rr_numbering(d)?;
    let sp = split(d, &s)?;
    let f = sp.forward.count_indegree_at_least(2);
    let b = sp.backward.count_indegree_at_least(2);
    acyclic_many_leaves(if b > f { &sp.backward } else { &sp.forward })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Forward,
    Backward,
}

/// Intermediate objects of the transverse-arc construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransverseDecomposition {
    pub numbering: RRNumbering,
    /// Each vertex outside N+(r) keeps one forward and one backward in-arc.
    pub trimmed: RootedDigraph,
    pub forward_tree: Outbranching,
    pub backward_tree: Outbranching,
    /// Arcs of one tree joining vertices incomparable in the other.
    pub forward_transverse: Vec<Arc>,
    pub backward_transverse: Vec<Arc>,
    /// Tree whose transverse arcs are used.
    pub source: Side,
    /// Transverse arcs pointing left / right in the other tree's drawing.
    pub left: Vec<Arc>,
    pub right: Vec<Arc>,
    pub selected: Vec<Arc>,
    /// The other tree plus `selected`; acyclic.
    pub combined: RootedDigraph,
}

fn transverse(tree: &Outbranching, other: &Outbranching, r: Vertex) -> Vec<Arc> {
    let iv = other.intervals();
    tree.arcs().filter(|&(u, v)| u != r && !iv.comparable(u, v)).collect()
}

pub fn transverse_decomposition(d: &RootedDigraph) -> Result<TransverseDecomposition> {
    check_two_connected(d)?;
    if d.vertex_count() <= 2 {
        return Err(Error::InvalidParameter("needs at least three vertices"));
    }
    let r = d.root();
    let numbering = rr_numbering(d)?;
    let pos = |v: Vertex| numbering.position(v).expect("numbered");
    let mut fparent = vec![None; d.capacity()];
    let mut bparent = vec![None; d.capacity()];
    let mut keep = Vec::new();
    for v in d.non_root_vertices() {
        if d.has_arc(r, v) {
            fparent[v] = Some(r);
            bparent[v] = Some(r);
            keep.push((r, v));
            continue;
        }
        let ins = d.in_neighbours(v);
        let fwd = ins.iter().copied().filter(|&u| pos(u) < pos(v));
        let bwd = ins.iter().copied().filter(|&u| pos(u) > pos(v));
        let simple = ins.iter().copied().find(|&u| !d.has_arc(v, u));
        let (f, b) = match simple {
            Some(a) if pos(a) < pos(v) => (a, bwd.clone().next()),
            Some(a) => (fwd.clone().next().unwrap_or(a), Some(a)),
            None => (fwd.clone().next().unwrap_or(v), bwd.clone().next()),
        };
        let b = b.ok_or(Error::InvalidNumbering("missing backward in-neighbour"))?;
        if f == v || pos(f) > pos(v) {
            return Err(Error::InvalidNumbering("missing forward in-neighbour"));
        }
        fparent[v] = Some(f);
        bparent[v] = Some(b);
        keep.push((f, v));
        keep.push((b, v));
    }
    let trimmed = d.with_arcs(keep)?;
    let forward_tree = Outbranching::from_parents(r, fparent);
    let backward_tree = Outbranching::from_parents(r, bparent);
    let forward_transverse = transverse(&forward_tree, &backward_tree, r);
    let backward_transverse = transverse(&backward_tree, &forward_tree, r);
    let (source, arcs, base) = if forward_transverse.len() >= backward_transverse.len() {
        (Side::Forward, &forward_transverse, &backward_tree)
    } else {
        (Side::Backward, &backward_transverse, &forward_tree)
    };
    let iv = base.intervals();
    let (left, right): (Vec<Arc>, Vec<Arc>) = arcs.iter().partition(|&&(u, v)| iv.pre[v] < iv.pre[u]);
    let selected = if left.len() >= right.len() { left.clone() } else { right.clone() };
    let combined = d.with_arcs(base.arcs().chain(selected.iter().copied()))?;
    Ok(TransverseDecomposition {
        numbering,
        trimmed,
        forward_tree,
        backward_tree,
        forward_transverse,
        backward_transverse,
        source,
        left,
        right,
        selected,
        combined,
    })
}

/// Outbranching with at least nice / 24 leaves, nice being the number of
/// vertices entered by a simple arc.
pub fn bound2_tree(d: &RootedDigraph) -> Result<Outbranching> {
    check_two_connected(d)?;
    if d.vertex_count() <= 2 {
        return d.bfs_tree();
    }
    let t = transverse_decomposition(d)?;
    acyclic_many_leaves(&t.combined)
}
