//! Reduction rules, kernelization and lifting of solutions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::{Arc, NormalizationNote, RootedDigraph, Vertex};
use crate::error::Error;
use crate::outbranching::Outbranching;
use crate::Result;

mod decide;

pub use decide::{decide, kernel_threshold, large_indegree_witness, KernelDecision};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule0Outcome {
    Pass,
    /// Some vertex cannot be reached, so no outbranching exists.
    False { unreachable: Vertex },
}

pub fn rule0(d: &RootedDigraph) -> Rule0Outcome {
    match d.first_unreachable() {
        None => Rule0Outcome::Pass,
        Some(v) => Rule0Outcome::False { unreachable: v },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    /// Cutvertex removed, shortcuts from its in- to its out-neighbours.
    Rule1 {
        vertex: Vertex,
        in_neighbours: Vec<Vertex>,
        out_neighbours: Vec<Vertex>,
        shortcuts: Vec<Arc>,
        renormalization: NormalizationNote,
    },
    /// Bipath u,x,y,z,t; y is merged into x.
    Rule2 {
        path: [Vertex; 5],
        renormalization: NormalizationNote,
    },
    /// Arc (y, x) deleted.
    Rule3 {
        arc: Arc,
        renormalization: NormalizationNote,
    },
}

impl ReductionStep {
    pub fn renormalization(&self) -> &NormalizationNote {
        match self {
            ReductionStep::Rule1 { renormalization, .. }
            | ReductionStep::Rule2 { renormalization, .. }
            | ReductionStep::Rule3 { renormalization, .. } => renormalization,
        }
    }

    pub fn rule(&self) -> u8 {
        match self {
            ReductionStep::Rule1 { .. } => 1,
            ReductionStep::Rule2 { .. } => 2,
            ReductionStep::Rule3 { .. } => 3,
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[Vertex]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn write_note(f: &mut fmt::Formatter<'_>, note: &NormalizationNote) -> fmt::Result {
    if !note.deleted_arcs.is_empty() {
        f.write_str(" deleted=")?;
        for (i, (u, v)) in note.deleted_arcs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}>{v}")?;
        }
    }
    if !note.root_merges.is_empty() {
        f.write_str(" merged=")?;
        write_list(f, &note.root_merges)?;
    }
    Ok(())
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStep::Rule1 { vertex, in_neighbours, out_neighbours, shortcuts, renormalization } => {
                write!(f, "rule1 x={vertex} in=")?;
                write_list(f, in_neighbours)?;
                f.write_str(" out=")?;
                write_list(f, out_neighbours)?;
                write!(f, " shortcuts={}", shortcuts.len())?;
                write_note(f, renormalization)
            }
            ReductionStep::Rule2 { path, renormalization } => {
                f.write_str("rule2 path=")?;
                write_list(f, path)?;
                write_note(f, renormalization)
            }
            ReductionStep::Rule3 { arc, renormalization } => {
                write!(f, "rule3 arc={},{}", arc.0, arc.1)?;
                write_note(f, renormalization)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: NormalizationNote,
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// Re-apply the recorded steps to `original`.
    pub fn replay(&self, original: &RootedDigraph) -> Result<RootedDigraph> {
        let (mut d, note) = original.normalize();
        if note != self.initial {
            return Err(Error::Internal("initial normalization differs from trace"));
        }
        for step in &self.steps {
            match step {
                ReductionStep::Rule1 { vertex, .. } => {
                    rule1_raw(&mut d, *vertex);
                }
                ReductionStep::Rule2 { path, .. } => rule2_raw(&mut d, *path),
                ReductionStep::Rule3 { arc, .. } => {
                    d.remove_arc(arc.0, arc.1);
                }
            }
            if d.normalize_in_place() != *step.renormalization() {
                return Err(Error::Internal("renormalization differs from trace"));
            }
        }
        Ok(d)
    }

    /// Map an outbranching of the reduced digraph back to the original one.
    /// The leaf count never drops.
    pub fn lift(&self, tree: &Outbranching) -> Outbranching {
        let mut t = tree.clone();
        for step in self.steps.iter().rev() {
            t = step.renormalization().lift(&t);
            t = match step {
                ReductionStep::Rule1 { vertex, in_neighbours, out_neighbours, .. } => {
                    lift_rule1(&t, *vertex, in_neighbours, out_neighbours)
                }
                ReductionStep::Rule2 { path, .. } => lift_rule2(&t, *path),
                ReductionStep::Rule3 { .. } => t,
            };
        }
        self.initial.lift(&t)
    }
}

fn lift_rule1(t: &Outbranching, x: Vertex, ins: &[Vertex], outs: &[Vertex]) -> Outbranching {
    let mut parent = t.parents().to_vec();
    let has_child = {
        let mut h = vec![false; parent.len()];
        for p in parent.iter().flatten() {
            h[*p] = true;
        }
        h
    };
    let ys: Vec<Vertex> = ins.iter().copied().filter(|&y| t.contains(y) && has_child[y]).collect();
    let is_y = |v: Vertex| ys.binary_search(&v).is_ok();
    // the y with no other y above it
    let chosen = ys.iter().copied().find(|&y| {
        let mut w = parent[y];
        while let Some(p) = w {
            if is_y(p) {
                return false;
            }
            w = parent[p];
        }
        true
    });
    let Some(yi) = chosen else {
        // only when nothing hung below x; any in-neighbour will do
        let p = ins.iter().copied().find(|&y| t.contains(y)).expect("cutvertex has a tree in-neighbour");
        parent[x] = Some(p);
        return Outbranching::from_parents(t.root(), parent);
    };
    for &z in outs {
        if let Some(p) = parent[z] {
            if is_y(p) {
                parent[z] = Some(x);
            }
        }
    }
    parent[x] = Some(yi);
    Outbranching::from_parents(t.root(), parent)
}

fn lift_rule2(t: &Outbranching, [_, x, y, z, _]: [Vertex; 5]) -> Outbranching {
    let mut parent = t.parents().to_vec();
    if parent[x] == Some(z) {
        parent[y] = Some(z);
        parent[x] = Some(y);
    } else {
        parent[y] = Some(x);
        if parent[z] == Some(x) {
            parent[z] = Some(y);
        }
    }
    Outbranching::from_parents(t.root(), parent)
}

/// Delete the cutvertex and add shortcut arcs. Returns the new arcs.
fn rule1_raw(d: &mut RootedDigraph, x: Vertex) -> Vec<Arc> {
    let ins = d.in_neighbours(x).to_vec();
    let outs = d.out_neighbours(x).to_vec();
    d.remove_vertex(x);
    let mut added = Vec::new();
    for &v in &ins {
        for &z in &outs {
            if v != z && d.insert_arc(v, z) {
                added.push((v, z));
            }
        }
    }
    added
}

fn rule2_raw(d: &mut RootedDigraph, [_, x, y, z, _]: [Vertex; 5]) {
    d.remove_vertex(y);
    d.insert_arc(x, z);
    d.insert_arc(z, x);
}

pub fn is_cutvertex(d: &RootedDigraph, x: Vertex) -> bool {
    if x == d.root() || !d.contains(x) {
        return false;
    }
    let seen = d.reachable(&[x]);
    d.vertices().any(|v| v != x && !seen[v])
}

pub fn apply_rule1(d: &RootedDigraph, x: Vertex) -> Result<(RootedDigraph, ReductionStep)> {
    if !is_cutvertex(d, x) {
        return Err(Error::NotCutvertex(x));
    }
    let mut out = d.clone();
    let in_neighbours = d.in_neighbours(x).to_vec();
    let out_neighbours = d.out_neighbours(x).to_vec();
    let shortcuts = rule1_raw(&mut out, x);
    let renormalization = out.normalize_in_place();
    Ok((out, ReductionStep::Rule1 { vertex: x, in_neighbours, out_neighbours, shortcuts, renormalization }))
}

fn double_linked_to(d: &RootedDigraph, v: Vertex, a: Vertex, b: Vertex) -> bool {
    let mut want = [a, b];
    want.sort_unstable();
    d.contains(v) && d.in_neighbours(v) == want && d.out_neighbours(v) == want
}

pub fn is_bipath4(d: &RootedDigraph, path: [Vertex; 5]) -> bool {
    let [u, x, y, z, t] = path;
    let mut s = path;
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) || !d.contains(u) || !d.contains(t) {
        return false;
    }
    double_linked_to(d, x, u, y) && double_linked_to(d, y, x, z) && double_linked_to(d, z, y, t)
}

pub fn apply_rule2(d: &RootedDigraph, path: [Vertex; 5]) -> Result<(RootedDigraph, ReductionStep)> {
    if !is_bipath4(d, path) {
        return Err(Error::NotBipath(path));
    }
    let mut out = d.clone();
    rule2_raw(&mut out, path);
    let renormalization = out.normalize_in_place();
    Ok((out, ReductionStep::Rule2 { path, renormalization }))
}

/// (y, x) can be deleted: y is cut off by the other in-neighbours of x.
pub fn is_deletable_arc(d: &RootedDigraph, y: Vertex, x: Vertex) -> bool {
    if y == d.root() || !d.has_arc(y, x) {
        return false;
    }
    let others: Vec<Vertex> = d.in_neighbours(x).iter().copied().filter(|&w| w != y).collect();
    !d.reachable(&others)[y]
}

pub fn apply_rule3(d: &RootedDigraph, y: Vertex, x: Vertex) -> Result<(RootedDigraph, ReductionStep)> {
    if !is_deletable_arc(d, y, x) {
        return Err(Error::NotDeletable { y, x });
    }
    let mut out = d.clone();
    out.remove_arc(y, x);
    let renormalization = out.normalize_in_place();
    Ok((out, ReductionStep::Rule3 { arc: (y, x), renormalization }))
}

/// Every length-4 bipath, once each, oriented so that x < z.
pub fn all_bipaths4(d: &RootedDigraph) -> Vec<[Vertex; 5]> {
    let pure = |v: Vertex| {
        v != d.root() && d.indegree(v) == 2 && d.in_neighbours(v) == d.out_neighbours(v)
    };
    let mut out = Vec::new();
    for y in d.vertices() {
        if !pure(y) {
            continue;
        }
        let (a, c) = (d.in_neighbours(y)[0], d.in_neighbours(y)[1]);
        if !pure(a) || !pure(c) {
            continue;
        }
        let other = |v: Vertex| d.in_neighbours(v).iter().copied().find(|&w| w != y).unwrap();
        let path = [other(a), a, y, c, other(c)];
        if is_bipath4(d, path) {
            out.push(path);
        }
    }
    out
}

pub fn all_deletable_arcs(d: &RootedDigraph) -> Vec<Arc> {
    let mut out = Vec::new();
    for x in d.vertices() {
        for &y in d.in_neighbours(x) {
            if is_deletable_arc(d, y, x) {
                out.push((y, x));
            }
        }
    }
    out
}

fn find_deletable_arc(d: &RootedDigraph) -> Option<Arc> {
    for x in d.vertices() {
        if d.indegree(x) < 2 {
            continue;
        }
        for &y in d.in_neighbours(x) {
            if is_deletable_arc(d, y, x) {
                return Some((y, x));
            }
        }
    }
    None
}

/// True when none of Rules (1)-(3) applies.
pub fn is_reduced(d: &RootedDigraph) -> bool {
    d.find_cutvertex().is_none() && find_deletable_arc(d).is_none() && all_bipaths4(d).is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub reduced: RootedDigraph,
    pub trace: ReductionTrace,
}

impl Kernel {
    /// Lift an outbranching of the reduced digraph to the original one.
    pub fn lift(&self, tree: &Outbranching) -> Result<Outbranching> {
        self.reduced.verify(tree)?;
        Ok(self.trace.lift(tree))
    }
}

fn start(d: &RootedDigraph) -> Result<(RootedDigraph, NormalizationNote)> {
    let (n, note) = d.normalize();
    if let Rule0Outcome::False { unreachable } = rule0(&n) {
        return Err(Error::Unreachable(unreachable));
    }
    Ok((n, note))
}

fn exhaust_rule1_into(d: &mut RootedDigraph, steps: &mut Vec<ReductionStep>) -> Result<bool> {
    let mut any = false;
    while let Some(x) = d.find_cutvertex() {
        let (next, step) = apply_rule1(d, x)?;
        *d = next;
        steps.push(step);
        any = true;
    }
    Ok(any)
}

/// Normalize and apply Rule (1) until the digraph is 2-connected.
pub fn exhaust_rule1(d: &RootedDigraph) -> Result<Kernel> {
    let (mut cur, initial) = start(d)?;
    let mut steps = Vec::new();
    exhaust_rule1_into(&mut cur, &mut steps)?;
    Ok(Kernel { reduced: cur, trace: ReductionTrace { initial, steps } })
}

/// Normalize, then apply Rule (1) to exhaustion, Rule (3) to exhaustion and
/// one Rule (2) step, repeating until nothing applies.
pub fn kernelize(d: &RootedDigraph) -> Result<Kernel> {
    let (mut cur, initial) = start(d)?;
    let mut steps = Vec::new();
    loop {
        let mut changed = exhaust_rule1_into(&mut cur, &mut steps)?;
        while let Some((y, x)) = find_deletable_arc(&cur) {
            let (next, step) = apply_rule3(&cur, y, x)?;
            cur = next;
            steps.push(step);
            changed = true;
        }
        if let Some(path) = all_bipaths4(&cur).first() {
            let (next, step) = apply_rule2(&cur, *path)?;
            cur = next;
            steps.push(step);
            changed = true;
        }
        if !changed {
            break;
        }
    }
    Ok(Kernel { reduced: cur, trace: ReductionTrace { initial, steps } })
}
