//! Graphviz DOT export. Node text is the vertex label; with weight
//! annotation each node also gets its weight as a red external label.

use std::fmt::Write as _;

use crate::graph::OrientedGraph;
use crate::labeled::LabeledGraph;

fn signed(w: i64) -> String {
    if w > 0 {
        format!("+{w}")
    } else {
        w.to_string()
    }
}

fn render(
    graph: &OrientedGraph,
    node_text: impl Fn(usize) -> String,
    xlabel: impl Fn(usize) -> Option<String>,
) -> String {
    let mut out = String::from("digraph ddmog {\n  node [shape=circle];\n");
    for v in graph.vertices() {
        let _ = write!(out, "  v{} [label=\"{}\"", v + 1, node_text(v));
        if let Some(x) = xlabel(v) {
            let _ = write!(out, ", xlabel=<<font color=\"red\">{x}</font>>");
        }
        out.push_str("];\n");
    }
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "  v{} -> v{};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

pub fn export_dot(lg: &LabeledGraph, annotate_weights: bool) -> String {
    let labels = lg.labeling.as_slice();
    let weights = annotate_weights.then(|| lg.weights());
    render(
        &lg.graph,
        |v| labels[v].to_string(),
        |v| weights.as_ref().map(|w| signed(w.as_slice()[v])),
    )
}

/// DOT for an unlabeled graph; nodes show their 1-based vertex number.
pub fn export_dot_unlabeled(graph: &OrientedGraph) -> String {
    render(graph, |v| (v + 1).to_string(), |_| None)
}
