//! Rooted digraphs over a fixed id space.
//!
//! Vertex ids never change: reductions remove vertices by clearing their
//! presence flag, so every derived digraph is expressed in the ids of the
//! digraph it came from.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::outbranching::{Outbranching, TreeDefect};
use crate::Result;

pub type Vertex = usize;
pub type Arc = (Vertex, Vertex);

#[derive(Clone, Debug)]
pub struct RootedDigraph {
    root: Vertex,
    present: Vec<bool>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
    vertex_count: usize,
    arc_count: usize,
    generation: u64,
}

// generation is bookkeeping only
impl PartialEq for RootedDigraph {
    fn eq(&self, other: &Self) -> bool {
        self.root == other.root && self.present == other.present && self.out_adj == other.out_adj
    }
}

impl Eq for RootedDigraph {}

/// Record of what normalization changed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalizationNote {
    pub deleted_arcs: Vec<Arc>,
    /// Vertices merged into the root, in merge order.
    pub root_merges: Vec<Vertex>,
}

impl NormalizationNote {
    pub fn is_empty(&self) -> bool {
        self.deleted_arcs.is_empty() && self.root_merges.is_empty()
    }

    /// Turn an outbranching of the normalized digraph into one of the
    /// digraph before normalization. Arc deletions need no work.
    pub fn lift(&self, tree: &Outbranching) -> Outbranching {
        if self.root_merges.is_empty() {
            return tree.clone();
        }
        let root = tree.root();
        let mut parent = tree.parents().to_vec();
        for &u in self.root_merges.iter().rev() {
            for p in parent.iter_mut() {
                if *p == Some(root) {
                    *p = Some(u);
                }
            }
            parent[u] = Some(root);
        }
        Outbranching::from_parents(root, parent)
    }
}

/// Special vertices (indegree at least 3 or entered by a simple arc) and
/// nice vertices (entered by a simple arc).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub special: Vec<Vertex>,
    pub nice: Vec<Vertex>,
    pub simple_arcs: Vec<Arc>,
}

impl RootedDigraph {
    /// Vertices are `0..n`; duplicate arcs are merged.
    pub fn build<I>(n: usize, root: Vertex, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Arc>,
    {
        if n == 0 {
            return Err(Error::Empty);
        }
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }
        let mut d = RootedDigraph {
            root,
            present: vec![true; n],
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            vertex_count: n,
            arc_count: 0,
            generation: 0,
        };
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
            d.insert_arc(u, v);
        }
        Ok(d)
    }

    /// Digraph on the same vertices as `self` with exactly the given arcs,
    /// each of which must join present vertices.
    pub fn with_arcs<I>(&self, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Arc>,
    {
        let mut d = self.clone();
        for v in 0..d.capacity() {
            d.out_adj[v].clear();
            d.in_adj[v].clear();
        }
        d.arc_count = 0;
        for (u, v) in arcs {
            for w in [u, v] {
                if !d.contains(w) {
                    return Err(Error::VertexOutOfRange { vertex: w, n: d.capacity() });
                }
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
            d.insert_arc(u, v);
        }
        Ok(d)
    }

    /// Size of the id space (not the number of present vertices).
    pub fn capacity(&self) -> usize {
        self.present.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn generation(&self) -> u64 {
        self.generation
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.present.len() && self.present[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.present.len()).filter(move |&v| self.present[v])
    }

    pub fn non_root_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let r = self.root;
        self.vertices().filter(move |&v| v != r)
    }

    /// Sorted out-neighbours.
    pub fn out_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    /// Sorted in-neighbours.
    pub fn in_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    pub fn outdegree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    pub fn indegree(&self, v: Vertex) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.out_adj.len() && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.vertices()
            .flat_map(move |u| self.out_adj[u].iter().map(move |&v| (u, v)))
    }

    pub fn count_indegree_at_least(&self, k: usize) -> usize {
        self.non_root_vertices().filter(|&v| self.indegree(v) >= k).count()
    }

    pub(crate) fn insert_arc(&mut self, u: Vertex, v: Vertex) -> bool {
        match self.out_adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.out_adj[u].insert(i, v);
                let j = self.in_adj[v].binary_search(&u).unwrap_err();
                self.in_adj[v].insert(j, u);
                self.arc_count += 1;
                self.generation += 1;
                true
            }
        }
    }

    pub(crate) fn remove_arc(&mut self, u: Vertex, v: Vertex) -> bool {
        match self.out_adj[u].binary_search(&v) {
            Err(_) => false,
            Ok(i) => {
                self.out_adj[u].remove(i);
                let j = self.in_adj[v].binary_search(&u).expect("adjacency out of sync");
                self.in_adj[v].remove(j);
                self.arc_count -= 1;
                self.generation += 1;
                true
            }
        }
    }

    pub(crate) fn remove_vertex(&mut self, v: Vertex) {
        debug_assert!(v != self.root && self.present[v]);
        for w in core::mem::take(&mut self.out_adj[v]) {
            let j = self.in_adj[w].binary_search(&v).unwrap();
            self.in_adj[w].remove(j);
            self.arc_count -= 1;
        }
        for w in core::mem::take(&mut self.in_adj[v]) {
            let j = self.out_adj[w].binary_search(&v).unwrap();
            self.out_adj[w].remove(j);
            self.arc_count -= 1;
        }
        self.present[v] = false;
        self.vertex_count -= 1;
        self.generation += 1;
    }

    pub fn is_normalized(&self) -> bool {
        let r = self.root;
        if self.indegree(r) > 0 {
            return false;
        }
        if self.vertex_count > 2 && self.outdegree(r) < 2 {
            return false;
        }
        self.out_adj[r].iter().all(|&y| self.in_adj[y].len() == 1)
    }

    /// Delete arcs into the root and arcs into its out-neighbours from other
    /// vertices; merge the root with its only out-neighbour while n > 2.
    pub fn normalize(&self) -> (RootedDigraph, NormalizationNote) {
        let mut d = self.clone();
        let note = d.normalize_in_place();
        (d, note)
    }

    pub(crate) fn normalize_in_place(&mut self) -> NormalizationNote {
        let r = self.root;
        let mut note = NormalizationNote::default();
        for x in self.in_adj[r].clone() {
            self.remove_arc(x, r);
            note.deleted_arcs.push((x, r));
        }
        loop {
            for y in self.out_adj[r].clone() {
                for x in self.in_adj[y].clone() {
                    if x != r {
                        self.remove_arc(x, y);
                        note.deleted_arcs.push((x, y));
                    }
                }
            }
            if self.vertex_count > 2 && self.out_adj[r].len() == 1 {
                let u = self.out_adj[r][0];
                let outs = self.out_adj[u].clone();
                self.remove_vertex(u);
                for w in outs {
                    self.insert_arc(r, w);
                }
                note.root_merges.push(u);
                continue;
            }
            break;
        }
        note
    }

    /// Vertices reachable from the root in the digraph minus `removed`.
    /// The root itself cannot be removed.
    pub fn reachable(&self, removed: &[Vertex]) -> Vec<bool> {
        let mut blocked = vec![false; self.capacity()];
        for &v in removed {
            if v < blocked.len() && v != self.root {
                blocked[v] = true;
            }
        }
        self.reachable_avoiding(&blocked)
    }

    pub(crate) fn reachable_avoiding(&self, blocked: &[bool]) -> Vec<bool> {
        self.bfs_parents_avoiding(blocked)
            .iter()
            .enumerate()
            .map(|(v, p)| p.is_some() || v == self.root)
            .collect()
    }

    /// Breadth-first search parents from the root, skipping blocked
    /// vertices. Neighbours are visited in id order.
    pub(crate) fn bfs_parents_avoiding(&self, blocked: &[bool]) -> Vec<Option<Vertex>> {
        let n = self.capacity();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[self.root] = true;
        queue.push_back(self.root);
        while let Some(u) = queue.pop_front() {
            for &v in &self.out_adj[u] {
                if !seen[v] && !blocked[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        parent
    }

    /// First present vertex not reachable from the root.
    pub fn first_unreachable(&self) -> Option<Vertex> {
        let seen = self.reachable(&[]);
        self.vertices().find(|&v| !seen[v])
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    /// Breadth-first outbranching, if the digraph is connected.
    pub fn bfs_tree(&self) -> Result<Outbranching> {
        if let Some(v) = self.first_unreachable() {
            return Err(Error::Unreachable(v));
        }
        let parent = self.bfs_parents_avoiding(&vec![false; self.capacity()]);
        Ok(Outbranching::from_parents(self.root, parent))
    }

    /// Immediate dominators from the root, for reachable vertices.
    pub fn immediate_dominators(&self) -> Vec<Option<Vertex>> {
        let n = self.capacity();
        let r = self.root;
        // reverse postorder by iterative DFS
        let mut order = Vec::with_capacity(self.vertex_count);
        let mut visited = vec![false; n];
        let mut stack: Vec<(Vertex, usize)> = vec![(r, 0)];
        visited[r] = true;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < self.out_adj[u].len() {
                let v = self.out_adj[u][*i];
                *i += 1;
                if !visited[v] {
                    visited[v] = true;
                    stack.push((v, 0));
                }
            } else {
                order.push(u);
                stack.pop();
            }
        }
        order.reverse();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut idom: Vec<Option<Vertex>> = vec![None; n];
        idom[r] = Some(r);
        let mut changed = true;
        while changed {
            changed = false;
            for &v in order.iter().skip(1) {
                let mut new: Option<Vertex> = None;
                for &p in &self.in_adj[v] {
                    if idom[p].is_none() {
                        continue;
                    }
                    new = Some(match new {
                        None => p,
                        Some(q) => {
                            let (mut a, mut b) = (p, q);
                            while a != b {
                                while rank[a] > rank[b] {
                                    a = idom[a].unwrap();
                                }
                                while rank[b] > rank[a] {
                                    b = idom[b].unwrap();
                                }
                            }
                            a
                        }
                    });
                }
                if new != idom[v] {
                    idom[v] = new;
                    changed = true;
                }
            }
        }
        idom[r] = None;
        idom
    }

    /// All cutvertices: non-root vertices dominating some other vertex.
    pub fn cutvertices(&self) -> Vec<Vertex> {
        let idom = self.immediate_dominators();
        let mut is_cut = vec![false; self.capacity()];
        for d in idom.iter().flatten() {
            if *d != self.root {
                is_cut[*d] = true;
            }
        }
        (0..self.capacity()).filter(|&v| is_cut[v]).collect()
    }

    pub fn find_cutvertex(&self) -> Option<Vertex> {
        self.cutvertices().first().copied()
    }

    pub fn is_two_connected(&self) -> bool {
        self.is_connected() && self.find_cutvertex().is_none()
    }

    pub fn is_simple_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) && !self.has_arc(v, u)
    }

    pub fn classify(&self) -> Classification {
        let mut special = Vec::new();
        let mut nice = Vec::new();
        let mut simple_arcs = Vec::new();
        for v in self.non_root_vertices() {
            let mut is_nice = false;
            for &u in &self.in_adj[v] {
                if !self.has_arc(v, u) {
                    simple_arcs.push((u, v));
                    is_nice = true;
                }
            }
            if is_nice {
                nice.push(v);
            }
            if is_nice || self.indegree(v) >= 3 {
                special.push(v);
            }
        }
        simple_arcs.sort_unstable();
        Classification { special, nice, simple_arcs }
    }

    /// Topological order of present vertices, or `None` if there is a cycle.
    pub fn topological_order(&self) -> Option<Vec<Vertex>> {
        let mut indeg: Vec<usize> = (0..self.capacity()).map(|v| self.in_adj[v].len()).collect();
        let mut ready: Vec<Vertex> = self.vertices().filter(|&v| indeg[v] == 0).collect();
        ready.reverse();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(u) = ready.pop() {
            order.push(u);
            for &v in &self.out_adj[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.push(v);
                }
            }
        }
        (order.len() == self.vertex_count).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn is_oriented(&self) -> bool {
        self.arcs().all(|(u, v)| !self.has_arc(v, u))
    }

    /// Check that `tree` is a spanning outbranching of this digraph rooted at
    /// its root, returning the leaf count.
    pub fn verify(&self, tree: &Outbranching) -> core::result::Result<usize, TreeDefect> {
        if tree.root() != self.root {
            return Err(TreeDefect::RootMismatch { expected: self.root, found: tree.root() });
        }
        let parent = tree.parents();
        if parent.len() != self.capacity() {
            return Err(TreeDefect::CapacityMismatch { expected: self.capacity(), found: parent.len() });
        }
        if parent[self.root].is_some() {
            return Err(TreeDefect::RootHasParent);
        }
        for v in 0..self.capacity() {
            match (self.present[v], parent[v]) {
                (false, Some(_)) => return Err(TreeDefect::UnknownVertex(v)),
                (true, None) if v != self.root => return Err(TreeDefect::MissingVertex(v)),
                (true, Some(p)) if !self.has_arc(p, v) => return Err(TreeDefect::MissingArc(p, v)),
                _ => {}
            }
        }
        // every parent chain must end at the root
        let mut state = vec![0u8; self.capacity()];
        state[self.root] = 2;
        for v in self.vertices() {
            let mut path = Vec::new();
            let mut w = v;
            while state[w] == 0 {
                state[w] = 1;
                path.push(w);
                w = parent[w].expect("checked above");
            }
            if state[w] == 1 {
                return Err(TreeDefect::Cycle(w));
            }
            for x in path {
                state[x] = 2;
            }
        }
        Ok(tree.leaf_count())
    }
}

impl fmt::Display for RootedDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root {} |", self.root)?;
        for (u, v) in self.arcs() {
            write!(f, " {u}->{v}")?;
        }
        Ok(())
    }
}
