//! Graphviz export of vertex links.

use std::fmt::Write;

use cxcore::square::{LinkGraph, SquareComplex};
use cxcore::LinkComplex;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected multigraph on edge ends; one DOT edge per square corner, so
/// loops and parallel edges survive.
pub fn link_graph_dot(x: &SquareComplex, link: &LinkGraph) -> String {
    let mut out = String::new();
    let name = format!("link {}", x.vertices()[link.base]);
    writeln!(out, "graph {} {{", quote(&name)).unwrap();
    for i in 0..link.vertices.len() {
        writeln!(out, "  n{i} [label={}];", quote(&link.vertex_label(x, i))).unwrap();
    }
    for (i, e) in link.edges.iter().enumerate() {
        writeln!(out, "  n{} -- n{} [label={}];", e.ends.0, e.ends.1, quote(&link.edge_label(x, i))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// 1-skeleton of a simplicial link, nodes labelled by occurrence.
pub fn link_complex_dot(base: &str, link: &LinkComplex) -> String {
    let lx = &link.complex;
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(&format!("link {base}"))).unwrap();
    for v in 0..lx.count(0) {
        writeln!(out, "  n{v} [label={}];", quote(link.vertex_label(v))).unwrap();
    }
    if lx.top_dimension().unwrap_or(0) >= 1 {
        for i in 0..lx.count(1) {
            let cell = cxcore::Cell::new(1, i);
            let v = lx.vertices_of(cell);
            writeln!(out, "  n{} -- n{} [label={}];", v[0], v[1], quote(lx.id(cell))).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
