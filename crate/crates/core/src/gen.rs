//! Instance generators. Deterministic for a given seed.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Arc, RootedDigraph};
use crate::error::Error;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Rows of 2-circuits closed by a wrap cycle, with skip arcs.
    TL,
    /// Layered acyclic digraph with few leaves.
    Boloney,
    Random,
    RandomTwoConnected,
    RandomOriented,
    Star,
    Dipath,
    BipathChain,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::TL,
        Family::Boloney,
        Family::Random,
        Family::RandomTwoConnected,
        Family::RandomOriented,
        Family::Star,
        Family::Dipath,
        Family::BipathChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::TL => "t_l",
            Family::Boloney => "boloney",
            Family::Random => "random",
            Family::RandomTwoConnected => "random2c",
            Family::RandomOriented => "oriented",
            Family::Star => "star",
            Family::Dipath => "dipath",
            Family::BipathChain => "bipath_chain",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or(Error::InvalidParameter("unknown family"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    /// l for t_l, k for boloney and star, chain length for bipath_chain,
    /// vertex count otherwise.
    pub size: usize,
    pub seed: u64,
    /// Extra-arc probability for the random families.
    pub arc_probability: f64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<RootedDigraph> {
        let (n, p, s) = (self.size, self.arc_probability, self.seed);
        match self.family {
            Family::TL => gen_t_l(n),
            Family::Boloney => gen_boloney(n),
            Family::Random => gen_random(n, p, s),
            Family::RandomTwoConnected => gen_random_two_connected(n, p, s),
            Family::RandomOriented => gen_random_oriented(n, p, s),
            Family::Star => gen_star(n),
            Family::Dipath => gen_dipath(n),
            Family::BipathChain => gen_bipath_chain(n),
        }
    }
}

/// l rows of 3(l-1) vertices joined by 2-circuits; the last column forms a
/// directed cycle and vertex 3t of row i points to the first vertex of row
/// i+t. The root points to every row start. 3l(l-1)+1 vertices.
pub fn gen_t_l(l: usize) -> Result<RootedDigraph> {
    if l < 2 {
        return Err(Error::InvalidParameter("t_l needs l >= 2"));
    }
    let len = 3 * (l - 1);
    let v = |i: usize, j: usize| 1 + (i % l) * len + (j - 1);
    let mut arcs = Vec::new();
    for i in 0..l {
        arcs.push((0, v(i, 1)));
        for j in 1..len {
            arcs.push((v(i, j), v(i, j + 1)));
            arcs.push((v(i, j + 1), v(i, j)));
        }
        arcs.push((v(i, len), v(i + 1, len)));
        for t in 1..l {
            arcs.push((v(i, 3 * t), v(i + t, 1)));
        }
    }
    RootedDigraph::build(1 + l * len, 0, arcs)
}

/// Root to three level-1 vertices; vertex c of each later level is fed by
/// vertices c and c+1 (mod 3) of the level above; a final sink is fed by two
/// vertices of the last level. 3k+2 vertices, k+2 maximum leaves.
pub fn gen_boloney(k: usize) -> Result<RootedDigraph> {
    if k < 1 {
        return Err(Error::InvalidParameter("boloney needs k >= 1"));
    }
    let v = |i: usize, c: usize| 1 + 3 * (i - 1) + c % 3;
    let z = 3 * k + 1;
    let mut arcs = Vec::new();
    for c in 0..3 {
        arcs.push((0, v(1, c)));
    }
    for i in 2..=k {
        for c in 0..3 {
            arcs.push((v(i - 1, c), v(i, c)));
            arcs.push((v(i - 1, c + 1), v(i, c)));
        }
    }
    arcs.push((v(k, 0), z));
    arcs.push((v(k, 1), z));
    RootedDigraph::build(3 * k + 2, 0, arcs)
}

pub fn gen_star(k: usize) -> Result<RootedDigraph> {
    if k < 1 {
        return Err(Error::InvalidParameter("star needs k >= 1"));
    }
    RootedDigraph::build(k + 1, 0, (1..=k).map(|v| (0, v)))
}

/// Directed path on n vertices starting at the root (not normalized).
pub fn gen_dipath(n: usize) -> Result<RootedDigraph> {
    RootedDigraph::build(n, 0, (1..n).map(|v| (v - 1, v)))
}

/// r -> a, b; a, b -> s, t; s <-> c_1 <-> ... <-> c_m <-> t.
pub fn gen_bipath_chain(m: usize) -> Result<RootedDigraph> {
    if m < 1 {
        return Err(Error::InvalidParameter("bipath chain needs m >= 1"));
    }
    let (a, b, s, t) = (1, 2, 3, 4);
    let c = |i: usize| 4 + i;
    let mut arcs = alloc::vec![(0, a), (0, b), (a, s), (a, t), (b, s), (b, t)];
    let mut prev = s;
    for i in 1..=m {
        arcs.push((prev, c(i)));
        arcs.push((c(i), prev));
        prev = c(i);
    }
    arcs.push((prev, t));
    arcs.push((t, prev));
    RootedDigraph::build(m + 5, 0, arcs)
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter("arc probability must lie in [0, 1]"));
    }
    Ok(())
}

/// Random planted arborescence plus arcs sampled with probability `p`,
/// normalized. Connected; may contain cutvertices.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<RootedDigraph> {
    check_p(p)?;
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (1..n).collect();
    order.shuffle(&mut rng);
    let mut arcs: Vec<Arc> = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        // the first two hang from the root so that no merge happens
        let parent = if i < 2 { 0 } else { *[0].iter().chain(&order[..i]).nth(rng.gen_range(0..=i)).unwrap() };
        arcs.push((parent, v));
    }
    for u in 0..n {
        for v in 1..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Ok(RootedDigraph::build(n, 0, arcs)?.normalize().0)
}

fn planted_two_connected(n: usize, p: f64, seed: u64, oriented: bool) -> Result<RootedDigraph> {
    check_p(p)?;
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (1..n).collect();
    order.shuffle(&mut rng);
    let heads = if n <= 3 { n - 1 } else { rng.gen_range(2..=3.min(n - 2)) };
    let mut arcs: Vec<Arc> = Vec::new();
    let mut is_head = alloc::vec![false; n];
    for (i, &v) in order.iter().enumerate() {
        if i < heads {
            arcs.push((0, v));
            is_head[v] = true;
        } else {
            // two distinct earlier vertices
            let earlier = &order[..i];
            let picks: Vec<usize> = earlier.choose_multiple(&mut rng, 2).copied().collect();
            for u in picks {
                arcs.push((u, v));
            }
        }
    }
    let mut pairs: Vec<Arc> = Vec::new();
    for u in 1..n {
        for v in 1..n {
            if u != v && !is_head[v] {
                pairs.push((u, v));
            }
        }
    }
    pairs.shuffle(&mut rng);
    for (u, v) in pairs {
        if rng.gen_bool(p) {
            if oriented && arcs.contains(&(v, u)) {
                continue;
            }
            arcs.push((u, v));
        }
    }
    let d = RootedDigraph::build(n, 0, arcs)?;
    debug_assert!(d.is_normalized() && d.is_two_connected());
    Ok(d)
}

/// Random normalized 2-connected digraph: every vertex outside N+(r) gets
/// two in-neighbours among earlier vertices, then extra arcs with
/// probability `p`.
pub fn gen_random_two_connected(n: usize, p: f64, seed: u64) -> Result<RootedDigraph> {
    planted_two_connected(n, p, seed, false)
}

/// As [`gen_random_two_connected`] but without 2-circuits.
pub fn gen_random_oriented(n: usize, p: f64, seed: u64) -> Result<RootedDigraph> {
    planted_two_connected(n, p, seed, true)
}
