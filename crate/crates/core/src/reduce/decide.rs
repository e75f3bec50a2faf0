use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{is_deletable_arc, kernelize, rule0, Kernel, Rule0Outcome};
use crate::bounds::{bound1_tree, bound2_tree};
use crate::digraph::{RootedDigraph, Vertex};
use crate::error::Error;
use crate::outbranching::{extend_to_spanning, Outbranching};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelDecision {
    /// Some vertex is unreachable from the root.
    False,
    /// An outbranching with at least k leaves, on the input digraph.
    True { witness: Outbranching, kernel: Kernel },
    /// Undecided; the reduced digraph is below the size threshold.
    Reduced(Kernel),
}

/// Vertex count from which a reduced digraph always has k leaves.
pub fn kernel_threshold(k: usize) -> u64 {
    let k = k as u64;
    (3 * k).saturating_sub(2).saturating_mul((30 * k).saturating_sub(2))
}

/// An outbranching in which every in-neighbour of `x` (other than the root)
/// is a leaf. Needs that no in-neighbour of `x` is cut off by the others.
pub fn large_indegree_witness(d: &RootedDigraph, x: Vertex) -> Result<Outbranching> {
    let r = d.root();
    let ins = d.in_neighbours(x).to_vec();
    let n = d.capacity();
    let mut union: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    if !ins.contains(&r) {
        for &u in &ins {
            let mut blocked = vec![false; n];
            for &w in &ins {
                if w != u {
                    blocked[w] = true;
                }
            }
            let parent = d.bfs_parents_avoiding(&blocked);
            if parent[u].is_none() {
                return Err(Error::DeletableArcPresent { y: u, x });
            }
            let mut v = u;
            while let Some(p) = parent[v] {
                union[p].push(v);
                v = p;
            }
        }
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[r] = true;
    let mut q = VecDeque::from([r]);
    while let Some(a) = q.pop_front() {
        union[a].sort_unstable();
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

pub(crate) fn best_bound_tree(d: &RootedDigraph) -> Result<Outbranching> {
    let a = bound1_tree(d)?;
    let b = bound2_tree(d)?;
    Ok(if b.leaf_count() > a.leaf_count() { b } else { a })
}

/// Decide whether an outbranching with at least `k` leaves exists, or
/// return the reduced instance.
pub fn decide(d: &RootedDigraph, k: usize) -> Result<KernelDecision> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1"));
    }
    if let Rule0Outcome::False { .. } = rule0(&d.normalize().0) {
        return Ok(KernelDecision::False);
    }
    let kernel = kernelize(d)?;
    let red = &kernel.reduced;
    let top = red
        .non_root_vertices()
        .max_by_key(|&v| (red.indegree(v), core::cmp::Reverse(v)));
    if let Some(x) = top {
        if red.indegree(x) >= k {
            debug_assert!(red.in_neighbours(x).iter().all(|&y| !is_deletable_arc(red, y, x)));
            let t = large_indegree_witness(red, x)?;
            if t.leaf_count() < k {
                return Err(Error::Internal("indegree witness has fewer than k leaves"));
            }
            let witness = kernel.lift(&t)?;
            return Ok(KernelDecision::True { witness, kernel });
        }
    }
    if red.vertex_count() as u64 >= kernel_threshold(k) {
        let t = best_bound_tree(red)?;
        if t.leaf_count() < k {
            return Err(Error::Internal("kernel above threshold but bound trees have fewer than k leaves"));
        }
        let witness = kernel.lift(&t)?;
        return Ok(KernelDecision::True { witness, kernel });
    }
    Ok(KernelDecision::Reduced(kernel))
}
