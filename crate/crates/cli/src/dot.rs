//! Graphviz output for Tel-A-graphs.

use std::fmt::Write;

use operad_core::graphs::TelAGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(g: &TelAGraph, name: &str) -> String {
    let (kw, arrow) = if g.orientation.is_some() { ("digraph", "->") } else { ("graph", "--") };
    let mut out = String::new();
    writeln!(out, "{kw} {} {{", quote(name)).unwrap();
    for (v, l) in g.vertex_labels.iter().enumerate() {
        writeln!(out, "  v{v} [label={}];", quote(l)).unwrap();
    }
    for (e, ed) in g.edges.iter().enumerate() {
        let (a, b) = match &g.orientation {
            Some(o) => o.arrows[e],
            None => (ed.ends[0], ed.ends[1]),
        };
        writeln!(out, "  v{a} {arrow} v{b} [label={}];", quote(&ed.label)).unwrap();
    }
    out.push_str("}\n");
    out
}
