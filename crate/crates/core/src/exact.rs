//! Exact maximum leaf outbranching by enumerating leaf sets.
//!
//! A set L of non-root vertices can be the leaf set (or a subset of it) of
//! an outbranching iff every vertex is reachable from the root using only
//! arcs leaving vertices outside L.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{RootedDigraph, Vertex};
use crate::error::Error;
use crate::outbranching::Outbranching;
use crate::Result;

pub const DEFAULT_EXACT_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub maxleaf: usize,
    pub witness: Outbranching,
    /// Candidate leaf sets tested.
    pub explored: u64,
}

pub fn maxleaf_exact(d: &RootedDigraph) -> Result<ExactResult> {
    maxleaf_exact_with_limit(d, DEFAULT_EXACT_LIMIT)
}

pub fn maxleaf_exact_with_limit(d: &RootedDigraph, limit: usize) -> Result<ExactResult> {
    let n = d.vertex_count();
    if n > limit.min(64) {
        return Err(Error::TooLarge { n, limit: limit.min(64) });
    }
    if let Some(v) = d.first_unreachable() {
        return Err(Error::Unreachable(v));
    }
    let verts: Vec<Vertex> = d.vertices().collect();
    let mut idx = vec![usize::MAX; d.capacity()];
    for (i, &v) in verts.iter().enumerate() {
        idx[v] = i;
    }
    let out: Vec<u64> = verts
        .iter()
        .map(|&v| d.out_neighbours(v).iter().fold(0u64, |m, &w| m | 1 << idx[w]))
        .collect();
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let root_bit = 1u64 << idx[d.root()];
    let reach = |internal: u64| -> u64 {
        let mut seen = root_bit;
        let mut frontier = root_bit;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier & internal;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= out[i];
            }
            next &= !seen;
            seen |= next;
            frontier = next;
        }
        seen
    };
    // cutvertices are never leaves
    let mut forced = root_bit;
    for c in d.cutvertices() {
        forced |= 1 << idx[c];
    }
    let cands: Vec<usize> = (0..n).filter(|&i| forced >> i & 1 == 0).collect();
    let m = cands.len();
    let mut explored = 0u64;
    for k in (0..=m).rev() {
        let mut sel: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
        loop {
            explored += 1;
            let mut leaves = 0u64;
            let mut s = sel;
            while s != 0 {
                let i = s.trailing_zeros() as usize;
                s &= s - 1;
                leaves |= 1 << cands[i];
            }
            let internal = all & !leaves;
            if reach(internal) == all {
                let witness = build_witness(d, &idx, internal);
                let maxleaf = witness.leaf_count();
                debug_assert_eq!(maxleaf, k);
                return Ok(ExactResult { maxleaf, witness, explored });
            }
            if k == 0 || k == m {
                break;
            }
            // next combination with the same popcount
            let c = sel & sel.wrapping_neg();
            let r = sel + c;
            sel = (((r ^ sel) >> 2) / c) | r;
            if sel >> m != 0 {
                break;
            }
        }
    }
    Err(Error::Internal("connected digraph without an outbranching"))
}

fn build_witness(d: &RootedDigraph, idx: &[usize], internal: u64) -> Outbranching {
    let mut parent = vec![None; d.capacity()];
    let mut seen = vec![false; d.capacity()];
    let r = d.root();
    seen[r] = true;
    let mut queue = alloc::collections::VecDeque::from([r]);
    while let Some(u) = queue.pop_front() {
        if internal >> idx[u] & 1 == 0 {
            continue;
        }
        for &w in d.out_neighbours(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    Outbranching::from_parents(r, parent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_path() {
        let star = RootedDigraph::build(4, 0, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(maxleaf_exact(&star).unwrap().maxleaf, 3);
        let path = RootedDigraph::build(4, 0, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(maxleaf_exact(&path).unwrap().maxleaf, 1);
        let single = RootedDigraph::build(1, 0, []).unwrap();
        assert_eq!(maxleaf_exact(&single).unwrap().maxleaf, 0);
    }

    #[test]
    fn witness_verifies() {
        let d = RootedDigraph::build(5, 0, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (1, 4)]).unwrap();
        let res = maxleaf_exact(&d).unwrap();
        assert_eq!(d.verify(&res.witness), Ok(res.maxleaf));
        assert_eq!(res.maxleaf, 3);
    }

    #[test]
    fn limit_enforced() {
        let d = RootedDigraph::build(5, 0, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(maxleaf_exact_with_limit(&d, 4), Err(Error::TooLarge { n: 5, limit: 4 }));
    }
}
