use std::fmt::Write as _;

use serde_json::{json, Value};

use fulkerson_core::MultiGraph;

use crate::files::Certificate;

/// Labels of the certificate sets containing each edge.
fn edge_labels(g: &MultiGraph, cert: Option<&Certificate>) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new(); g.edge_count()];
    if let Some(c) = cert {
        for (label, set) in c.labelled_sets() {
            for &e in set {
                if let Some(slot) = out.get_mut(e) {
                    slot.push(label.clone());
                }
            }
        }
    }
    out
}

/// Undirected DOT. With a certificate every edge is labelled by the sets
/// containing it.
pub fn to_dot(g: &MultiGraph, cert: Option<&Certificate>) -> String {
    let labels = edge_labels(g, cert);
    let mut s = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        writeln!(s, "  {v};").expect("writing to a string");
    }
    for (e, u, v) in g.edges() {
        write!(s, "  {u} -- {v} [id=\"e{e}\"").expect("writing to a string");
        if cert.is_some() {
            write!(s, ", label=\"{}\"", labels[e].join(",")).expect("writing to a string");
        }
        s.push_str("];\n");
    }
    s.push_str("}\n");
    s
}

/// Vertex count, edge list, adjacency lists and, with a certificate, its
/// labelled edge sets.
pub fn to_json(g: &MultiGraph, cert: Option<&Certificate>) -> String {
    let edges: Vec<Value> = g.edges().map(|(e, u, v)| json!({"id": e, "u": u, "v": v})).collect();
    let adjacency: Vec<Value> = (0..g.vertex_count())
        .map(|v| {
            Value::Array(
                g.incident(v)
                    .iter()
                    .map(|&e| json!({"edge": e, "to": g.other_end(e, v)}))
                    .collect(),
            )
        })
        .collect();
    let mut doc = json!({
        "vertices": g.vertex_count(),
        "edges": edges,
        "adjacency": adjacency,
    });
    if let Some(c) = cert {
        let sets: Vec<Value> = c
            .labelled_sets()
            .into_iter()
            .map(|(label, set)| json!({"label": label, "edges": set}))
            .collect();
        doc["certificate"] = json!({"kind": c.kind().to_string(), "sets": sets});
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use fulkerson_core::generators;

    #[test]
    fn dot_lists_every_edge() {
        let g = generators::theta();
        let d = to_dot(&g, None);
        assert_eq!(d.matches(" -- ").count(), 3);
        assert!(!d.contains("label"));
        let cert = Certificate::Covering {
            n: 2,
            m: 3,
            matchings: vec![vec![0], vec![0], vec![1], vec![1], vec![2], vec![2]],
        };
        let d = to_dot(&g, Some(&cert));
        assert!(d.contains("0 -- 1 [id=\"e0\", label=\"M1,M2\"]"));
    }

    #[test]
    fn json_has_adjacency() {
        let g = generators::k4();
        let v: Value = serde_json::from_str(&to_json(&g, None)).unwrap();
        assert_eq!(v["vertices"], 4);
        assert_eq!(v["edges"].as_array().unwrap().len(), 6);
        assert_eq!(v["adjacency"][0].as_array().unwrap().len(), 3);
        assert!(v.get("certificate").is_none());
    }
}
