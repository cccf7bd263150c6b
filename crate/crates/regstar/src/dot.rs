//! Graphviz DOT rendering of egg-box diagrams, friendship graphs and Hasse diagrams.

use std::fmt::Write;

use crate::palg::ProjectionAlgebra;
use crate::semigroup::StarSemigroup;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn html(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// One table node per D-class: rows are R-classes, columns L-classes, cells H-classes.
pub fn eggbox(s: &StarSemigroup) -> String {
    let green = s.green_data();
    let mut out = String::from("graph eggbox {\n  node [shape=plaintext];\n");
    for d in 0..green.d_count() {
        let grid = green.eggbox(d);
        let mut label = String::from("<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\">");
        for row in &grid {
            label.push_str("<TR>");
            for cell in row {
                let names: Vec<String> = cell.iter().map(|&a| html(&s.label(a))).collect();
                let star = if cell.iter().any(|&a| s.is_projection(a)) { "*" } else { "" };
                write!(label, "<TD>{}{}</TD>", star, names.join(" ")).unwrap();
            }
            label.push_str("</TR>");
        }
        label.push_str("</TABLE>");
        writeln!(out, "  d{} [label=<{}>];", d, label).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Γ: projections as nodes, an edge for each pair of distinct friends.
pub fn friendship(palg: &ProjectionAlgebra) -> String {
    let mut out = String::from("graph friendship {\n");
    for p in 0..palg.size() {
        writeln!(out, "  n{} [label={}];", p, quote(&palg.label(p))).unwrap();
    }
    for (p, q) in palg.relations().friendship_edges() {
        writeln!(out, "  n{} -- n{};", p, q).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Covering relation of ≤, drawn bottom to top.
pub fn hasse(palg: &ProjectionAlgebra) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for p in 0..palg.size() {
        writeln!(out, "  n{} [label={}];", p, quote(&palg.label(p))).unwrap();
    }
    for (p, q) in palg.relations().hasse() {
        writeln!(out, "  n{} -> n{};", p, q).unwrap();
    }
    out.push_str("}\n");
    out
}
