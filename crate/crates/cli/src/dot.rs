//! Graphviz exports of the formula graph and the colorful graph.

use std::fmt::Write;

use psc_core::colorful_graph::{ColorfulGraph, Orientation};
use psc_core::formula_graph::{FormulaGraph, Pair};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

pub fn pen(color: usize) -> &'static str {
    PALETTE[color % PALETTE.len()]
}

fn node((i, j): Pair) -> String {
    format!("\"({},{})\"", i + 1, j + 1)
}

/// Undirected; vertices without edges are left out.
pub fn formula_dot(g: &FormulaGraph) -> String {
    let mut out = String::from("graph formula {\n");
    for (u, v) in g.edges() {
        if g.index(u) < g.index(v) {
            writeln!(out, "  {} -- {};", node(u), node(v)).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// One pen color per edge color; edges drawn as oriented by `o`.
pub fn colorful_dot(g: &ColorfulGraph, o: &Orientation) -> String {
    let mut out = String::from("digraph colorful {\n  node [shape=circle];\n");
    for v in 0..g.voters() {
        writeln!(out, "  {};", v + 1).unwrap();
    }
    for (c, edges) in g.colors().iter().enumerate() {
        for &(u, v) in edges {
            let (a, b) = if o.is_flipped(c) { (v, u) } else { (u, v) };
            writeln!(
                out,
                "  {} -> {} [color=\"{}\", label=\"{c}\"];",
                a + 1,
                b + 1,
                pen(c)
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}
