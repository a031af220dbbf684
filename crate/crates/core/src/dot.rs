//! Graphviz output: Hasse diagrams of lattices and specialization orders of
//! lower spaces.

use std::fmt::Write as _;

use crate::error::TopologyError;
use crate::lattice::MultLattice;
use crate::topology::LowerSpace;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Covering edges only, drawn bottom-up; nodes of equal rank share a row.
pub fn lattice_dot(l: &MultLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for i in 0..l.len() {
        writeln!(out, "  n{i} [label={}];", quote(&l.name(i))).unwrap();
    }
    let max_rank = (0..l.len()).map(|i| l.rank(i)).max().unwrap_or(0);
    for r in 0..=max_rank {
        let row: Vec<String> = (0..l.len()).filter(|&i| l.rank(i) == r).map(|i| format!("n{i};")).collect();
        if row.len() > 1 {
            writeln!(out, "  {{ rank=same; {} }}", row.join(" ")).unwrap();
        }
    }
    for (lo, hi) in l.covers() {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Points of the space with an edge `p -> q` when `q` covers `p` in the
/// specialization order (`q` lies in the closure of `p`). Each node carries
/// the closure of its point; the closed sets are listed as comments.
pub fn space_dot(s: &LowerSpace) -> Result<String, TopologyError> {
    let l = s.lattice();
    let sigma = s.sigma();
    let mut out = String::from("digraph lower_space {\n  rankdir=BT;\n  node [shape=ellipse];\n");
    let closed = s.closed_sets()?;
    writeln!(out, "  // {} closed sets", closed.len()).unwrap();
    for c in closed {
        writeln!(out, "  // closed {}", l.format_set(*c)).unwrap();
    }
    for p in sigma.iter() {
        let cl = s.closure(crate::element_set::ElementSet::singleton(p))?;
        writeln!(out, "  n{p} [label={}, xlabel={}];", quote(&l.name(p)), quote(&format!("cl={}", l.format_set(cl))))
            .unwrap();
    }
    for p in sigma.iter() {
        for q in sigma.iter() {
            if p == q || !l.lt(p, q) {
                continue;
            }
            let between = sigma.iter().any(|r| r != p && r != q && l.lt(p, r) && l.lt(r, q));
            if !between {
                writeln!(out, "  n{p} -> n{q};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
