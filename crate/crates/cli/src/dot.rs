//! Graphviz output: edges without arrowheads, arcs with.

use std::fmt::Write;

use pogcomp_core::graph::PartiallyOrientedGraph;

pub fn to_dot(h: &PartiallyOrientedGraph, name: Option<&str>) -> String {
    let mut s = String::new();
    let title = name.map(|n| format!("{n:?} ")).unwrap_or_default();
    let _ = writeln!(s, "digraph {title}{{");
    let _ = writeln!(s, "  node [shape=circle];");
    for v in 0..h.order() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in h.edges() {
        let _ = writeln!(s, "  {u} -> {v} [dir=none];");
    }
    for (u, v) in h.arcs() {
        let _ = writeln!(s, "  {u} -> {v};");
    }
    s.push_str("}\n");
    s
}
