//! Brute-force oracles and instance corpora shared by the test targets.
#![allow(dead_code)]

use maxleaf_core::gen::{gen_random, gen_random_two_connected};
use maxleaf_core::{Arc, RootedDigraph};

/// Vertices reachable from the root when only `expand` vertices may pass
/// the search on.
fn reach_count(d: &RootedDigraph, expand: &[bool]) -> usize {
    let mut seen = vec![false; d.capacity()];
    let mut stack = vec![d.root()];
    seen[d.root()] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        if !expand[u] {
            continue;
        }
        for &w in d.out_neighbours(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count
}

/// Maximum leaf count over all outbranchings, by trying every set of
/// internal vertices. `None` when some vertex is unreachable.
pub fn brute_maxleaf(d: &RootedDigraph) -> Option<usize> {
    let others: Vec<usize> = d.non_root_vertices().collect();
    assert!(others.len() <= 24, "oracle too slow for this size");
    let n = d.vertex_count();
    let mut best = None;
    for mask in 0u32..(1 << others.len()) {
        let mut expand = vec![false; d.capacity()];
        expand[d.root()] = true;
        let mut internal = 0;
        for (i, &v) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                expand[v] = true;
                internal += 1;
            }
        }
        let leaves = n - 1 - internal;
        if best.is_some_and(|b| b >= leaves) {
            continue;
        }
        if reach_count(d, &expand) == n {
            best = Some(leaves);
        }
    }
    // a spanning tree whose internal set is a strict subset of `internal`
    // only has more leaves, so the maximum is exact
    best
}

pub fn brute_reachable_all(d: &RootedDigraph) -> bool {
    let all = vec![true; d.capacity()];
    reach_count(d, &all) == d.vertex_count()
}

/// Cutvertices by deleting each vertex in turn.
pub fn brute_cutvertices(d: &RootedDigraph) -> Vec<usize> {
    d.non_root_vertices()
        .filter(|&x| {
            let mut expand = vec![true; d.capacity()];
            expand[x] = false;
            reach_count(d, &expand) < d.vertex_count()
        })
        .collect()
}

/// Deterministic xorshift stream for test parameters.
pub struct Stream(u64);

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1)
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below((hi - lo + 1) as u64) as usize
    }
}

const PROBS: [f64; 5] = [0.05, 0.1, 0.15, 0.25, 0.4];

/// Random connected normalized digraphs with 2..=max_n vertices.
pub fn random_corpus(count: usize, max_n: usize, seed: u64) -> Vec<RootedDigraph> {
    let mut s = Stream::new(seed);
    (0..count)
        .map(|i| {
            let n = s.range(2, max_n);
            let p = PROBS[s.below(PROBS.len() as u64) as usize];
            gen_random(n, p, seed * 100_000 + i as u64).unwrap()
        })
        .collect()
}

/// Random 2-connected digraphs with 3..=max_n vertices, mixing the planted
/// generator with 2-connected draws of the general one.
pub fn two_connected_corpus(count: usize, max_n: usize, seed: u64) -> Vec<RootedDigraph> {
    let mut s = Stream::new(seed);
    let mut out = Vec::new();
    let mut i = 0u64;
    while out.len() < count {
        i += 1;
        let n = s.range(3, max_n);
        let p = PROBS[s.below(PROBS.len() as u64) as usize];
        let d = if i.is_multiple_of(3) {
            gen_random(n, p + 0.15, seed * 100_000 + i).unwrap()
        } else {
            gen_random_two_connected(n, p, seed * 100_000 + i).unwrap()
        };
        if d.is_two_connected() && d.vertex_count() >= 3 {
            out.push(d);
        }
    }
    out
}

/// A small random 2-connected digraph with a chain of doubly linked
/// vertices hung between two of its vertices, normalized.
pub fn chain_instance(seed: u64) -> RootedDigraph {
    let mut s = Stream::new(seed);
    let base_n = s.range(3, 6);
    let base = gen_random_two_connected(base_n, 0.2, seed).unwrap();
    let m = s.range(3, 10 - base_n);
    let non_root: Vec<usize> = base.non_root_vertices().collect();
    let a = non_root[s.below(non_root.len() as u64) as usize];
    let mut b = non_root[s.below(non_root.len() as u64) as usize];
    if s.below(4) == 0 {
        b = a;
    }
    let n = base_n + m;
    let mut arcs: Vec<Arc> = base.arcs().collect();
    let mut prev = a;
    for c in base_n..n {
        arcs.push((prev, c));
        arcs.push((c, prev));
        prev = c;
    }
    if b != prev {
        arcs.push((prev, b));
        arcs.push((b, prev));
    }
    RootedDigraph::build(n, 0, arcs).unwrap().normalize().0
}

/// Random digraph without planted connectivity; often disconnected.
pub fn loose_instance(seed: u64) -> RootedDigraph {
    let mut s = Stream::new(seed);
    let n = s.range(2, 9);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 1..n {
            if u != v && s.below(100) < 22 {
                arcs.push((u, v));
            }
        }
    }
    RootedDigraph::build(n, 0, arcs).unwrap()
}
