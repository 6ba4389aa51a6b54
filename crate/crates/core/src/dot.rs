//! Graphviz output. Ports appear as tail and head labels.

use std::fmt::Write;

use crate::alphabet::Signature;
use crate::canonical::Gcg;
use crate::portgraph::{Edge, NamedGraph};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn render(
    sig: &Signature,
    names: &[String],
    labels: &[Option<String>],
    edges: &[Edge],
    pointer: Option<usize>,
) -> String {
    let ports = sig.ports();
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for (v, name) in names.iter().enumerate() {
        let text = match &labels[v] {
            Some(l) => format!("{name}\\n{l}"),
            None => name.clone(),
        };
        let extra = if pointer == Some(v) {
            ", peripheries=2"
        } else {
            ""
        };
        writeln!(out, "  n{v} [label={}{extra}];", quote(&text)).unwrap();
    }
    for e in edges {
        let mut attrs = format!(
            "taillabel={}, headlabel={}",
            quote(&ports.symbol(e.a.1).to_string()),
            quote(&ports.symbol(e.b.1).to_string())
        );
        if let Some(l) = e.label {
            write!(attrs, ", label={}", quote(sig.edge_state_name(l))).unwrap();
        }
        writeln!(out, "  n{} -- n{} [{attrs}];", e.a.0, e.b.0).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Vertices are named by their minimal words; the pointer is drawn doubled.
pub fn gcg_to_dot(g: &Gcg) -> String {
    let sig = g.signature();
    let names: Vec<String> = g
        .words()
        .iter()
        .map(|w| w.display(sig.ports()).to_string())
        .collect();
    let labels: Vec<Option<String>> = (0..g.len())
        .map(|v| g.label(v).map(|s| sig.vertex_state_name(s).to_string()))
        .collect();
    render(sig, &names, &labels, &g.edges(), Some(0))
}

pub fn named_to_dot(g: &NamedGraph, pointer: Option<usize>) -> String {
    let sig = g.signature();
    let names: Vec<String> = g
        .names()
        .iter()
        .map(|n| n.display(sig.ports()).to_string())
        .collect();
    let labels: Vec<Option<String>> = (0..g.len())
        .map(|v| g.label(v).map(|s| sig.vertex_state_name(s).to_string()))
        .collect();
    render(sig, &names, &labels, &g.edges(), pointer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathlang::grid;

    #[test]
    fn grid_dot() {
        let dot = gcg_to_dot(&grid(2, 1, false).unwrap());
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("n0 [label=\"ε\", peripheries=2];"));
        assert!(dot.contains("taillabel=\"a\", headlabel=\"b\""));
        assert_eq!(dot.matches(" -- ").count(), 1);
    }
}
