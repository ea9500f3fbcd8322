use std::fmt::Write as _;

use crate::induced::UndirectedGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text: vertices in label order, then edges in canonical order.
pub fn emit_dot(g: &UndirectedGraph) -> String {
    let labels = g.vertices().labels();
    let mut s = String::from("graph G {\n");
    for l in labels {
        let _ = writeln!(s, "  {};", quote(l));
    }
    for (x, y) in g.edges() {
        let _ = writeln!(s, "  {} -- {};", quote(&labels[x]), quote(&labels[y]));
    }
    s.push_str("}\n");
    s
}
