//! Spanning out-trees stored as parent arrays over the digraph's id space.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::{Arc, RootedDigraph, Vertex};
use crate::error::Error;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outbranching {
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    leaves: Vec<Vertex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeDefect {
    RootMismatch { expected: Vertex, found: Vertex },
    CapacityMismatch { expected: usize, found: usize },
    RootHasParent,
    UnknownVertex(Vertex),
    MissingVertex(Vertex),
    MissingArc(Vertex, Vertex),
    Cycle(Vertex),
}

impl fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeDefect::RootMismatch { expected, found } => {
                write!(f, "tree rooted at {found}, digraph at {expected}")
            }
            TreeDefect::CapacityMismatch { expected, found } => {
                write!(f, "tree covers {found} ids, digraph has {expected}")
            }
            TreeDefect::RootHasParent => write!(f, "root has a parent"),
            TreeDefect::UnknownVertex(v) => write!(f, "vertex {v} is not in the digraph"),
            TreeDefect::MissingVertex(v) => write!(f, "vertex {v} is not spanned"),
            TreeDefect::MissingArc(u, v) => write!(f, "tree arc ({u}, {v}) is not in the digraph"),
            TreeDefect::Cycle(v) => write!(f, "parent chain of {v} does not reach the root"),
        }
    }
}

impl Outbranching {
    /// Leaves are computed here; no structural validation is done.
    pub fn from_parents(root: Vertex, parent: Vec<Option<Vertex>>) -> Self {
        let mut has_child = vec![false; parent.len()];
        for p in parent.iter().flatten() {
            if *p < has_child.len() {
                has_child[*p] = true;
            }
        }
        let leaves = (0..parent.len())
            .filter(|&v| v != root && parent[v].is_some() && !has_child[v])
            .collect();
        Outbranching { root, parent, leaves }
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<Vertex>] {
        &self.parent
    }

    pub fn leaf_set(&self) -> &[Vertex] {
        &self.leaves
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.leaves.binary_search(&v).is_ok()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v == self.root || self.parent.get(v).is_some_and(|p| p.is_some())
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.parent.iter().filter(|p| p.is_some()).count()
    }

    /// Tree arcs (parent, child) ordered by child.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.parent.iter().enumerate().filter_map(|(v, p)| p.map(|p| (p, v)))
    }

    /// Children lists sorted by id.
    pub fn children(&self) -> Vec<Vec<Vertex>> {
        let mut ch = vec![Vec::new(); self.parent.len()];
        for (p, v) in self.arcs() {
            ch[p].push(v);
        }
        ch
    }

    /// Preorder/postorder numbers with children visited in id order.
    pub fn intervals(&self) -> Intervals {
        let n = self.parent.len();
        let ch = self.children();
        let mut pre = vec![usize::MAX; n];
        let mut post = vec![usize::MAX; n];
        let (mut a, mut b) = (0, 0);
        let mut stack = vec![(self.root, 0usize)];
        pre[self.root] = a;
        a += 1;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < ch[u].len() {
                let v = ch[u][*i];
                *i += 1;
                pre[v] = a;
                a += 1;
                stack.push((v, 0));
            } else {
                post[u] = b;
                b += 1;
                stack.pop();
            }
        }
        Intervals { pre, post }
    }
}

#[derive(Clone, Debug)]
pub struct Intervals {
    pub pre: Vec<usize>,
    pub post: Vec<usize>,
}

impl Intervals {
    /// `a` is an ancestor of `b` (or equal).
    pub fn is_ancestor(&self, a: Vertex, b: Vertex) -> bool {
        self.pre[a] <= self.pre[b] && self.post[b] <= self.post[a]
    }

    pub fn comparable(&self, a: Vertex, b: Vertex) -> bool {
        self.is_ancestor(a, b) || self.is_ancestor(b, a)
    }
}

/// Grow a partial out-tree to a spanning one. New vertices hang from
/// internal vertices whenever possible so no leaf is lost.
pub(crate) fn extend_to_spanning(d: &RootedDigraph, mut parent: Vec<Option<Vertex>>) -> Result<Outbranching> {
    let r = d.root();
    let n = d.capacity();
    let mut in_tree: Vec<bool> = (0..n).map(|v| v == r || parent[v].is_some()).collect();
    let mut internal = vec![false; n];
    internal[r] = true;
    for p in parent.iter().flatten() {
        internal[*p] = true;
    }
    let mut missing: Vec<Vertex> = d.vertices().filter(|&v| !in_tree[v]).collect();
    while !missing.is_empty() {
        let mut progress = true;
        while progress {
            progress = false;
            for &v in &missing {
                if in_tree[v] {
                    continue;
                }
                if let Some(&p) = d.in_neighbours(v).iter().find(|&&p| in_tree[p] && internal[p]) {
                    parent[v] = Some(p);
                    in_tree[v] = true;
                    progress = true;
                }
            }
        }
        missing.retain(|&v| !in_tree[v]);
        let next = missing
            .iter()
            .find_map(|&v| d.in_neighbours(v).iter().find(|&&p| in_tree[p]).map(|&p| (v, p)));
        match next {
            Some((v, p)) => {
                parent[v] = Some(p);
                in_tree[v] = true;
                internal[p] = true;
                missing.retain(|&w| w != v);
            }
            None => {
                if let Some(&v) = missing.first() {
                    return Err(Error::Unreachable(v));
                }
            }
        }
    }
    Ok(Outbranching::from_parents(r, parent))
}
