//! One pass/fail line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::time::Instant;

use common::*;
use maxleaf_core::approx::{approximate, majbound_tree};
use maxleaf_core::bounds::{
    acyclic_many_leaves, bound1_tree, bound2_tree, vertex_cover_third, UndirectedGraph,
};
use maxleaf_core::exact::maxleaf_exact;
use maxleaf_core::gen::{gen_boloney, gen_random_oriented, gen_t_l};
use maxleaf_core::reduce::{
    all_bipaths4, all_deletable_arcs, apply_rule1, apply_rule2, apply_rule3, decide,
    is_reduced, kernel_threshold, kernelize, KernelDecision,
};
use maxleaf_core::stnum::{rr_numbering, split};
use maxleaf_core::RootedDigraph;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn c1_t_l() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut pass = true;
    for l in 2..=4 {
        let d = gen_t_l(l).unwrap();
        let ok = d.vertex_count() == 3 * l * (l - 1) + 1;
        pass &= ok;
        notes.push(format!("n(T_{l})={}", d.vertex_count()));
    }
    for (l, want) in [(2usize, 2usize), (3, 4)] {
        let d = gen_t_l(l).unwrap();
        let raw_reduced = is_reduced(&d);
        let k = kernelize(&d).unwrap();
        let fixpoint = k.trace.steps.is_empty();
        let ml = maxleaf_exact(&d).unwrap().maxleaf;
        let oracle = brute_maxleaf(&d).unwrap();
        pass &= fixpoint && ml == want && oracle == want;
        let fired: Vec<String> = k.trace.steps.iter().map(|s| format!("rule{}", s.rule())).collect();
        notes.push(format!(
            "T_{l}: rules-inapplicable-as-generated={raw_reduced} kernelize-fixpoint={fixpoint}{} maxleaf={ml} oracle={oracle} want={want}",
            if fired.is_empty() { String::new() } else { format!(" (after normalization: {})", fired.join(",")) }
        ));
    }
    let secs = start.elapsed().as_secs_f64();
    pass &= secs < 60.0;
    notes.push(format!("{secs:.1}s"));
    outcome(pass, notes.join("; "))
}

fn c2_boloney() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for k in 2..=4 {
        let d = gen_boloney(k).unwrap();
        let shape = d.is_two_connected() && d.outdegree(d.root()) == 3 && d.count_indegree_at_least(2) == 3 * k - 2;
        let ml = maxleaf_exact(&d).unwrap().maxleaf;
        let oracle = brute_maxleaf(&d).unwrap();
        let trees = [bound1_tree(&d).unwrap(), bound2_tree(&d).unwrap(), majbound_tree(&d).unwrap()];
        let trees_ok = trees.iter().all(|t| d.verify(t).is_ok_and(|c| c <= k + 2));
        pass &= shape && ml == k + 2 && oracle == k + 2 && trees_ok;
        notes.push(format!(
            "k={k}: shape={shape} maxleaf={ml} oracle={oracle} trees={:?}",
            trees.iter().map(|t| t.leaf_count()).collect::<Vec<_>>()
        ));
    }
    outcome(pass, notes.join("; "))
}

fn c3_rule_safety() -> Outcome {
    let mut corpus = random_corpus(450, 10, 3);
    corpus.extend((0..150).map(|i| chain_instance(3000 + i)));
    let mut counts = [0usize; 3];
    let mut failures = 0;
    for d in &corpus {
        let before = brute_maxleaf(d).unwrap();
        let mut check = |after: &RootedDigraph, rule: usize| {
            counts[rule - 1] += 1;
            if brute_maxleaf(after) != Some(before) {
                failures += 1;
            }
        };
        for x in d.cutvertices() {
            check(&apply_rule1(d, x).unwrap().0, 1);
        }
        for p in all_bipaths4(d) {
            check(&apply_rule2(d, p).unwrap().0, 2);
        }
        for (y, x) in all_deletable_arcs(d) {
            check(&apply_rule3(d, y, x).unwrap().0, 3);
        }
    }
    let pass = failures == 0 && corpus.len() >= 500 && counts.iter().all(|&c| c > 0);
    outcome(
        pass,
        format!(
            "{} instances, applications rule1={} rule2={} rule3={}, mismatches={failures}",
            corpus.len(),
            counts[0],
            counts[1],
            counts[2]
        ),
    )
}

fn c4_decide() -> Outcome {
    let mut corpus = random_corpus(180, 10, 4);
    corpus.extend((0..40).map(|i| loose_instance(4000 + i)));
    let mut tally = [0usize; 3];
    let mut failures = Vec::new();
    for (i, d) in corpus.iter().enumerate() {
        let opt = brute_maxleaf(d);
        for k in 1..=4 {
            match decide(d, k).unwrap() {
                KernelDecision::True { witness, .. } => {
                    tally[0] += 1;
                    let ok = d.verify(&witness).is_ok_and(|c| c >= k) && opt.is_some_and(|o| o >= k);
                    if !ok {
                        failures.push(format!("#{i} k={k} TRUE"));
                    }
                }
                KernelDecision::False => {
                    tally[1] += 1;
                    if opt.is_some() {
                        failures.push(format!("#{i} k={k} FALSE"));
                    }
                }
                KernelDecision::Reduced(kernel) => {
                    tally[2] += 1;
                    let small = (kernel.reduced.vertex_count() as u64) < kernel_threshold(k);
                    let agree = brute_maxleaf(&kernel.reduced).map(|o| o >= k) == opt.map(|o| o >= k);
                    if !small || !agree {
                        failures.push(format!("#{i} k={k} REDUCED"));
                    }
                }
            }
        }
    }
    outcome(
        failures.is_empty() && corpus.len() >= 200,
        format!(
            "{} instances x k=1..4: TRUE={} FALSE={} REDUCED={} failures={:?}",
            corpus.len(),
            tally[0],
            tally[1],
            tally[2],
            failures
        ),
    )
}

/// Independent numbering check: earlier and later in-neighbour for every
/// vertex outside N+(r).
fn numbering_ok(d: &RootedDigraph, order: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; d.capacity()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let r = d.root();
    order.len() == d.vertex_count() - 1
        && d.non_root_vertices().all(|x| {
            pos[x] != usize::MAX
                && (d.has_arc(r, x)
                    || (d.in_neighbours(x).iter().any(|&u| u != r && pos[u] < pos[x])
                        && d.in_neighbours(x).iter().any(|&u| u != r && pos[u] > pos[x])))
        })
}

fn c5_numbering() -> Outcome {
    let corpus = two_connected_corpus(220, 14, 5);
    let mut failures = 0;
    for d in &corpus {
        let ok = (|| {
            let s = rr_numbering(d).ok()?;
            if !numbering_ok(d, s.order()) {
                return None;
            }
            let sp = split(d, &s).ok()?;
            let r = d.root();
            let rest = d.arc_count() - d.outdegree(r);
            let fr = sp.forward.arc_count() - d.outdegree(r);
            let br = sp.backward.arc_count() - d.outdegree(r);
            let good = sp.forward.is_acyclic()
                && sp.backward.is_acyclic()
                && brute_reachable_all(&sp.forward)
                && brute_reachable_all(&sp.backward)
                && fr + br == rest
                && 2 * fr.max(br) >= rest;
            good.then_some(())
        })();
        if ok.is_none() {
            failures += 1;
        }
    }
    outcome(failures == 0 && corpus.len() >= 200, format!("{} instances, failures={failures}", corpus.len()))
}

fn c6_bounds() -> Outcome {
    let corpus = two_connected_corpus(220, 14, 5);
    let mut failures = Vec::new();
    for (i, d) in corpus.iter().enumerate() {
        let l3 = d.count_indegree_at_least(3);
        let nice = d.classify().nice.len();
        let t1 = bound1_tree(d).unwrap();
        let t2 = bound2_tree(d).unwrap();
        if !d.verify(&t1).is_ok_and(|c| 6 * c >= l3) {
            failures.push(format!("#{i} bound1 {} < {l3}/6", t1.leaf_count()));
        }
        if !d.verify(&t2).is_ok_and(|c| 24 * c >= nice) {
            failures.push(format!("#{i} bound2 {} < {nice}/24", t2.leaf_count()));
        }
        let sp = split(d, &rr_numbering(d).unwrap()).unwrap();
        for part in [&sp.forward, &sp.backward] {
            let l = part.count_indegree_at_least(2);
            let dr = part.outdegree(part.root());
            let t = acyclic_many_leaves(part).unwrap();
            // leaves >= (l + dr - 1) / 3 + 1
            if !part.verify(&t).is_ok_and(|c| 3 * c + 1 >= l + dr + 3) {
                failures.push(format!("#{i} acyclic {} for l={l} d={dr}", t.leaf_count()));
            }
        }
    }
    outcome(failures.is_empty(), format!("{} instances, failures={:?}", corpus.len(), failures))
}

fn c7_oriented() -> Outcome {
    let mut failures = Vec::new();
    let mut s = Stream::new(7);
    let count = 60;
    let mut min_slack = f64::MAX;
    for i in 0..count {
        let n = s.range(10, 80);
        let d = gen_random_oriented(n, 0.05 + 0.05 * s.below(4) as f64, 7000 + i).unwrap();
        let t = bound2_tree(&d).unwrap();
        let c = d.verify(&t).unwrap_or(0);
        min_slack = min_slack.min(c as f64 / ((n - 1) as f64 / 24.0));
        if 24 * c < n - 1 {
            failures.push(format!("#{i} n={n} leaves={c}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!("{count} oriented instances, min leaves/((n-1)/24)={min_slack:.2}, failures={failures:?}"),
    )
}

fn c8_approx() -> Outcome {
    let mut corpus = random_corpus(400, 14, 8);
    corpus.extend(two_connected_corpus(150, 16, 8));
    let mut failures = Vec::new();
    let mut worst = 1.0f64;
    for (i, d) in corpus.iter().enumerate() {
        let opt = maxleaf_exact(d).unwrap().maxleaf;
        let (t, rep) = approximate(d).unwrap();
        let leaves = d.verify(&t).unwrap_or(0);
        let lower_ok = rep.lower <= num_rational::Ratio::from_integer(leaves as i64);
        let ok = 92 * leaves >= opt && leaves <= opt && opt <= rep.upper && lower_ok && leaves == rep.leaves;
        if !ok {
            failures.push(format!("#{i} leaves={leaves} opt={opt} lower={} upper={}", rep.lower, rep.upper));
        }
        if leaves > 0 {
            worst = worst.max(opt as f64 / leaves as f64);
        }
    }
    outcome(
        failures.is_empty() && corpus.len() >= 500,
        format!("{} instances, worst ratio opt/approx={worst:.3}, failures={:?}", corpus.len(), failures),
    )
}

fn c9_lift() -> Outcome {
    let mut corpus = random_corpus(300, 12, 9);
    corpus.extend((0..100).map(|i| chain_instance(9000 + i)));
    let mut failures = Vec::new();
    for (i, d) in corpus.iter().enumerate() {
        let k = kernelize(d).unwrap();
        let red = maxleaf_exact(&k.reduced).unwrap();
        let lifted = k.lift(&red.witness).unwrap();
        let opt = maxleaf_exact(d).unwrap().maxleaf;
        let ok = d.verify(&lifted).is_ok_and(|c| c >= red.maxleaf && c == opt)
            && k.trace.replay(d).as_ref() == Ok(&k.reduced);
        if !ok {
            failures.push(format!("#{i}"));
        }
    }
    outcome(failures.is_empty(), format!("{} instances, failures={:?}", corpus.len(), failures))
}

fn c10_vertex_cover() -> Outcome {
    let mut s = Stream::new(10);
    let mut failures = 0;
    let count = 600;
    for _ in 0..count {
        let n = s.range(1, 10);
        let density = s.below(100);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if s.below(100) < density {
                    edges.push((a, b));
                }
            }
        }
        let g = UndirectedGraph::new(n, edges).unwrap();
        let c = vertex_cover_third(&g);
        if !g.is_cover(&c) || 3 * c.len() > n + g.edge_count() {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{count} graphs, failures={failures}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("C1 tight family T_l", c1_t_l),
        ("C2 boloney family", c2_boloney),
        ("C3 reduction rule safety", c3_rule_safety),
        ("C4 decide soundness", c4_decide),
        ("C5 r-r numbering validity", c5_numbering),
        ("C6 constructive bounds", c6_bounds),
        ("C7 oriented bound", c7_oriented),
        ("C8 approximation guarantee", c8_approx),
        ("C9 lifting", c9_lift),
        ("C10 vertex cover lemma", c10_vertex_cover),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let o = f();
        println!(
            "{} {name} [{:.1}s]: {}",
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
