//! Graphviz output for Hasse diagrams.

use std::fmt::Write;

use crate::congruence::{CongruencePartition, FilterSet};
use crate::semilattice::FiniteSemilattice;

/// Covering pairs `(lower, upper)` of a finite order given as a predicate.
pub fn covers(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let lt = |a, b| a != b && leq(a, b);
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram of the semilattice order, edges pointing upwards.
pub fn hasse_dot(s: &FiniteSemilattice) -> String {
    let mut out = String::from("digraph order {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for a in s.elements() {
        writeln!(out, "  n{a} [label=\"{}\"];", escape(&s.label(a))).unwrap();
    }
    for (a, b) in covers(s.size(), |a, b| s.leq(a, b)) {
        writeln!(out, "  n{a} -> n{b} [arrowhead=none];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a congruence lattice, as returned by
/// [`congruence_lattice`](crate::congruence::congruence_lattice); nodes are
/// labelled by the classes of each congruence.
pub fn congruence_lattice_dot(s: &FiniteSemilattice, lattice: &[(FilterSet, CongruencePartition)]) -> String {
    let mut out = String::from("digraph congruences {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, (_, theta)) in lattice.iter().enumerate() {
        let blocks: Vec<String> = theta
            .blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|&a| s.label(a)).collect::<Vec<_>>().join(",")))
            .collect();
        writeln!(out, "  c{i} [label=\"{}\"];", escape(&blocks.join(" "))).unwrap();
    }
    for (a, b) in covers(lattice.len(), |i, j| lattice[i].1.refines(&lattice[j].1)) {
        writeln!(out, "  c{a} -> c{b} [arrowhead=none];").unwrap();
    }
    out.push_str("}\n");
    out
}
