//! Internally vertex-disjoint paths from the root by unit-capacity flow.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{RootedDigraph, Vertex};

struct Net {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl Net {
    fn new(n: usize) -> Self {
        Net { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); n] }
    }

    fn add(&mut self, a: usize, b: usize, c: i32) {
        self.adj[a].push(self.head.len());
        self.head.push(b);
        self.cap.push(c);
        self.adj[b].push(self.head.len());
        self.head.push(a);
        self.cap.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        let mut q = VecDeque::new();
        seen[s] = true;
        q.push_back(s);
        while let Some(a) = q.pop_front() {
            for &e in &self.adj[a] {
                let b = self.head[e];
                if self.cap[e] > 0 && !seen[b] {
                    seen[b] = true;
                    via[b] = e;
                    q.push_back(b);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut b = t;
        while b != s {
            let e = via[b];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            b = self.head[e ^ 1];
        }
        true
    }
}

/// Up to `limit` internally vertex-disjoint paths from the root to
/// `target`, each listed from the root.
pub fn disjoint_paths(d: &RootedDigraph, target: Vertex, limit: usize) -> Vec<Vec<Vertex>> {
    let r = d.root();
    let n = d.capacity();
    let big = limit as i32 + 1;
    // vertex v splits into 2v (in) and 2v+1 (out)
    let mut net = Net::new(2 * n);
    for v in d.vertices() {
        let c = if v == r || v == target { big } else { 1 };
        net.add(2 * v, 2 * v + 1, c);
    }
    let mut arc_edge = Vec::new();
    for (u, v) in d.arcs() {
        arc_edge.push((u, v, net.head.len()));
        net.add(2 * u + 1, 2 * v, 1);
    }
    let mut flow = 0;
    while flow < limit && net.augment(2 * r + 1, 2 * target) {
        flow += 1;
    }
    // used arcs, then peel paths off
    let mut used: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for (u, v, e) in arc_edge {
        if net.cap[e] == 0 {
            used[u].push(v);
        }
    }
    let mut paths = Vec::new();
    for _ in 0..flow {
        let mut path = vec![r];
        let mut u = r;
        while u != target {
            let v = used[u].pop().expect("flow decomposition");
            path.push(v);
            u = v;
        }
        paths.push(path);
    }
    paths
}
