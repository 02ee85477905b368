//! Graphviz rendering. Black vertices (`Z . E_i < 0`) are filled, white
//! ones hollow; labels read `id:weight:multiplicity`.

use std::fmt::Write as _;

use crate::graph::{Cycle, DualGraph};
use crate::rdp::RdpConfiguration;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

pub fn emit_dot(g: &DualGraph, z: &Cycle, configs: &[RdpConfiguration]) -> String {
    let mut out = String::from("graph dual {\n  node [shape=circle];\n");
    let node = |out: &mut String, i: usize, indent: &str| {
        let pairing = g.pairing_with_vertex(z, i);
        let style = if pairing < 0 {
            "style=filled, fillcolor=black, fontcolor=white"
        } else {
            "style=solid"
        };
        let label = format!("{}:{}:{}", g.id(i).as_str(), g.sq(i), z[i]);
        let _ = writeln!(
            out,
            "{indent}{} [label={}, {style}];",
            quote(g.id(i).as_str()),
            quote(&label)
        );
    };
    let mut in_cluster = vec![false; g.len()];
    for (k, c) in configs.iter().enumerate() {
        let tag = c
            .class
            .map(|cl| cl.to_string())
            .unwrap_or_else(|| "unclassified".to_owned());
        let _ = writeln!(out, "  subgraph cluster_{k} {{");
        let _ = writeln!(out, "    label={};", quote(&tag));
        for &v in &c.core {
            node(&mut out, v, "    ");
            in_cluster[v] = true;
        }
        out.push_str("  }\n");
    }
    for (i, _) in in_cluster.iter().enumerate().filter(|(_, &c)| !c) {
        node(&mut out, i, "  ");
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(
            out,
            "  {} -- {};",
            quote(g.id(a).as_str()),
            quote(g.id(b).as_str())
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::fundamental_cycle;
    use crate::rdp::classified_configurations;

    fn render(g: &DualGraph) -> String {
        let z = fundamental_cycle(g).unwrap().into_final();
        let configs = classified_configurations(g, &z).unwrap();
        emit_dot(g, &z, &configs)
    }

    #[test]
    fn single_vertex() {
        let g = DualGraph::from_weights(&[-4], &[]).unwrap();
        let dot = render(&g);
        assert!(dot.contains("\"v0\" [label=\"v0:-4:1\", style=filled"));
        assert!(!dot.contains("cluster"));
    }

    #[test]
    fn d4() {
        let g = DualGraph::from_weights(&[-2; 4], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let dot = render(&g);
        assert!(dot.contains("label=\"Zero(D4)\""));
        assert!(dot.contains("\"v0\" [label=\"v0:-2:2\", style=filled"));
        for leaf in 1..4 {
            assert!(dot.contains(&format!("\"v{leaf}\" [label=\"v{leaf}:-2:1\", style=solid")));
        }
    }

    #[test]
    fn a3() {
        let g = DualGraph::from_weights(&[-2; 3], &[(0, 1), (1, 2)]).unwrap();
        let dot = render(&g);
        assert!(dot.contains("\"v0\" [label=\"v0:-2:1\", style=filled"));
        assert!(dot.contains("\"v1\" [label=\"v1:-2:1\", style=solid"));
        assert!(dot.contains("\"v2\" [label=\"v2:-2:1\", style=filled"));
        assert_eq!(dot, render(&g));
    }
}
