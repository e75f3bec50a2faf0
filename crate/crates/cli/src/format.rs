//! Text formats.
//!
//! Graph: a header line `n m r`, then `m` lines `u v` with 0-based ids.
//! Tree: a header line `n r`, then one `child parent` line per non-root
//! vertex. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use maxleaf_core::reduce::ReductionTrace;
use maxleaf_core::{Outbranching, RootedDigraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, msg: msg.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t.split_whitespace().collect()))
        }
    })
}

fn numbers<const K: usize>(line: usize, fields: &[&str]) -> Result<[usize; K], ParseError> {
    if fields.len() != K {
        return Err(err(line, format!("expected {K} fields, found {}", fields.len())));
    }
    let mut out = [0; K];
    for (o, f) in out.iter_mut().zip(fields) {
        *o = f.parse().map_err(|_| err(line, format!("not a non-negative integer: {f:?}")))?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<RootedDigraph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header `n m r`"))?;
    let [n, m, r] = numbers::<3>(hl, &header)?;
    if n == 0 {
        return Err(err(hl, "n must be positive"));
    }
    if r >= n {
        return Err(err(hl, format!("root {r} out of range")));
    }
    let mut arcs = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, fields) in lines {
        if arcs.len() == m {
            return Err(err(ln, format!("more than {m} arc lines")));
        }
        let [u, v] = numbers::<2>(ln, &fields)?;
        if u >= n || v >= n {
            return Err(err(ln, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(err(ln, format!("loop arc at {u}")));
        }
        arcs.push((u, v));
        last = ln;
    }
    if arcs.len() != m {
        return Err(err(last, format!("expected {m} arcs, found {}", arcs.len())));
    }
    RootedDigraph::build(n, r, arcs).map_err(|e| err(hl, e.to_string()))
}

/// Present vertices renumbered 0.. in id order, for digraphs with removed
/// vertices. Returns the new-to-old map.
fn compaction(d: &RootedDigraph) -> (Vec<usize>, Vec<usize>) {
    let old: Vec<usize> = d.vertices().collect();
    let mut new = vec![usize::MAX; d.capacity()];
    for (i, &v) in old.iter().enumerate() {
        new[v] = i;
    }
    (old, new)
}

pub fn write_graph(d: &RootedDigraph) -> String {
    let mut s = String::new();
    let (old, new) = compaction(d);
    let compact = old.len() == d.capacity();
    if !compact {
        for (i, &v) in old.iter().enumerate() {
            if i != v {
                writeln!(s, "# label {i} {v}").unwrap();
            }
        }
    }
    writeln!(s, "{} {} {}", d.vertex_count(), d.arc_count(), new[d.root()]).unwrap();
    for (u, v) in d.arcs() {
        writeln!(s, "{} {}", new[u], new[v]).unwrap();
    }
    s
}

pub fn parse_tree(text: &str) -> Result<Outbranching, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header `n r`"))?;
    let [n, r] = numbers::<2>(hl, &header)?;
    if r >= n {
        return Err(err(hl, format!("root {r} out of range")));
    }
    let mut parent = vec![None; n];
    for (ln, fields) in lines {
        let [c, p] = numbers::<2>(ln, &fields)?;
        if c >= n || p >= n {
            return Err(err(ln, format!("vertex out of range 0..{n}")));
        }
        if c == r {
            return Err(err(ln, "root given a parent"));
        }
        if parent[c].replace(p).is_some() {
            return Err(err(ln, format!("vertex {c} has two parents")));
        }
    }
    Ok(Outbranching::from_parents(r, parent))
}

pub fn write_tree(t: &Outbranching) -> String {
    let mut s = String::new();
    writeln!(s, "{} {}", t.parents().len(), t.root()).unwrap();
    for (p, c) in t.arcs() {
        writeln!(s, "{c} {p}").unwrap();
    }
    s
}

pub fn write_dot(d: &RootedDigraph, tree: Option<&Outbranching>) -> String {
    let mut s = String::from("digraph G {\n");
    writeln!(s, "  {} [shape=doublecircle];", d.root()).unwrap();
    if let Some(t) = tree {
        for &v in t.leaf_set() {
            writeln!(s, "  {v} [style=filled];").unwrap();
        }
    }
    for (u, v) in d.arcs() {
        let bold = tree.is_some_and(|t| t.parent(v) == Some(u));
        if bold {
            writeln!(s, "  {u} -> {v} [penwidth=2];").unwrap();
        } else {
            writeln!(s, "  {u} -> {v};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

pub fn write_trace(trace: &ReductionTrace) -> String {
    let mut s = String::new();
    let init = &trace.initial;
    if !init.is_empty() {
        write!(s, "normalize deleted={}", init.deleted_arcs.len()).unwrap();
        if !init.root_merges.is_empty() {
            write!(s, " merged={:?}", init.root_merges).unwrap();
        }
        s.push('\n');
    }
    for step in &trace.steps {
        writeln!(s, "{step}").unwrap();
    }
    s
}
