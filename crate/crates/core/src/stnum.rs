//! r-r numberings of 2-connected rooted digraphs.
//!
//! Every vertex outside N+(r) gets an in-neighbour numbered before it and
//! one numbered after it.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{RootedDigraph, Vertex};
use crate::error::Error;
use crate::flow::disjoint_paths;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRNumbering {
    order: Vec<Vertex>,
    position: Vec<usize>,
}

impl RRNumbering {
    /// Numbering from an ordering of the non-root vertices.
    pub fn from_order(capacity: usize, order: Vec<Vertex>) -> Result<Self> {
        let mut position = vec![usize::MAX; capacity];
        for (i, &v) in order.iter().enumerate() {
            if v >= capacity {
                return Err(Error::VertexOutOfRange { vertex: v, n: capacity });
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidNumbering("vertex listed twice"));
            }
            position[v] = i;
        }
        Ok(RRNumbering { order, position })
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.position.get(v).copied().filter(|&p| p != usize::MAX)
    }

    fn before(&self, a: Vertex, b: Vertex) -> bool {
        self.position[a] < self.position[b]
    }
}

/// Delete in-arcs until every vertex outside N+(r) has indegree 2,
/// keeping the digraph 2-connected.
pub fn reduce_indegrees(d: &RootedDigraph) -> Result<RootedDigraph> {
    if !d.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if !d.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let mut g = d.clone();
    reduce_indegrees_in_place(&mut g)?;
    Ok(g)
}

fn reduce_indegrees_in_place(g: &mut RootedDigraph) -> Result<()> {
    let verts: Vec<Vertex> = g.non_root_vertices().collect();
    for x in verts {
        while g.indegree(x) >= 3 {
            let paths = disjoint_paths(g, x, 2);
            if paths.len() < 2 {
                return Err(Error::NotTwoConnected);
            }
            let protected: Vec<Vertex> = paths
                .iter()
                .map(|p| *p.iter().find(|&&w| g.has_arc(w, x)).expect("path ends at x"))
                .collect();
            let candidates: Vec<Vertex> =
                g.in_neighbours(x).iter().copied().filter(|y| !protected.contains(y)).collect();
            let mut done = false;
            for y in candidates {
                g.remove_arc(y, x);
                if g.is_two_connected() {
                    done = true;
                    break;
                }
                g.insert_arc(y, x);
            }
            if !done {
                return Err(Error::Internal("no in-arc can be removed safely"));
            }
        }
    }
    Ok(())
}

enum Op {
    Remove { v: Vertex, ins: Vec<Vertex> },
    Contract { v: Vertex, u: Vertex, w: Vertex, ins: Vec<Vertex> },
}

/// Build an r-r numbering of a normalized 2-connected digraph.
pub fn rr_numbering(d: &RootedDigraph) -> Result<RRNumbering> {
    if !d.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if !d.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let r = d.root();
    let mut g = d.clone();
    let mut ops = Vec::new();
    while g.vertex_count() > 1 {
        reduce_indegrees_in_place(&mut g)?;
        let v = g
            .non_root_vertices()
            .find(|&v| g.outdegree(v) <= 1)
            .ok_or(Error::Internal("no vertex of outdegree at most one"))?;
        let ins = g.in_neighbours(v).to_vec();
        if g.outdegree(v) == 0 {
            g.remove_vertex(v);
            ops.push(Op::Remove { v, ins });
        } else {
            let u = g.out_neighbours(v)[0];
            let w = g
                .in_neighbours(u)
                .iter()
                .copied()
                .find(|&w| w != v)
                .ok_or(Error::Internal("out-neighbour has no second in-neighbour"))?;
            g.remove_vertex(v);
            for &t in &ins {
                if t != u {
                    g.insert_arc(t, u);
                }
            }
            if !g.normalize_in_place().root_merges.is_empty() {
                return Err(Error::Internal("contraction left the root with one out-neighbour"));
            }
            ops.push(Op::Contract { v, u, w, ins });
        }
    }
    let mut order: Vec<Vertex> = Vec::with_capacity(d.vertex_count());
    let pos = |order: &Vec<Vertex>, x: Vertex| order.iter().position(|&y| y == x).expect("placed");
    for op in ops.into_iter().rev() {
        match op {
            Op::Remove { v, ins } => {
                if ins.contains(&r) {
                    order.insert(0, v);
                } else {
                    let first = ins.iter().map(|&t| pos(&order, t)).min().expect("in-neighbour");
                    order.insert(first + 1, v);
                }
            }
            Op::Contract { v, u, w, ins } => {
                let pu = pos(&order, u);
                let pw = pos(&order, w);
                if pw > pu {
                    if ins.contains(&r) {
                        order.insert(0, v);
                    } else {
                        let first = ins.iter().map(|&t| pos(&order, t)).min().expect("in-neighbour");
                        order.insert(first + 1, v);
                    }
                } else if ins.contains(&r) {
                    order.push(v);
                } else {
                    let last = ins.iter().map(|&t| pos(&order, t)).max().expect("in-neighbour");
                    order.insert(last, v);
                }
            }
        }
    }
    let numbering = RRNumbering::from_order(d.capacity(), order)?;
    validate_numbering(d, &numbering)?;
    Ok(numbering)
}

pub fn validate_numbering(d: &RootedDigraph, s: &RRNumbering) -> Result<()> {
    let r = d.root();
    if s.position.len() != d.capacity() {
        return Err(Error::InvalidNumbering("id space differs"));
    }
    if s.order.len() != d.vertex_count() - 1 {
        return Err(Error::InvalidNumbering("not every non-root vertex is numbered"));
    }
    for &v in &s.order {
        if !d.contains(v) || v == r {
            return Err(Error::InvalidNumbering("numbered vertex is the root or absent"));
        }
    }
    for x in d.non_root_vertices() {
        if d.has_arc(r, x) {
            continue;
        }
        let ins = d.in_neighbours(x);
        let lo = ins.iter().any(|&u| u != r && s.before(u, x));
        let hi = ins.iter().any(|&u| u != r && s.before(x, u));
        if !lo || !hi {
            return Err(Error::InvalidNumbering("vertex lacks an earlier or a later in-neighbour"));
        }
    }
    Ok(())
}

/// Spanning subdigraphs of forward and backward arcs; both keep the
/// root's arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberingSplit {
    pub forward: RootedDigraph,
    pub backward: RootedDigraph,
}

pub fn split(d: &RootedDigraph, s: &RRNumbering) -> Result<NumberingSplit> {
    validate_numbering(d, s)?;
    let r = d.root();
    let fwd = d.arcs().filter(|&(u, v)| u == r || s.before(u, v));
    let forward = d.with_arcs(fwd)?;
    let bwd = d.arcs().filter(|&(u, v)| u == r || s.before(v, u));
    let backward = d.with_arcs(bwd)?;
    Ok(NumberingSplit { forward, backward })
}
