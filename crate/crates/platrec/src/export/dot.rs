use std::collections::BTreeMap;
use std::fmt::Write;

use crate::graph::{Component, ComponentGraph};
use crate::ontology::{Ontology, RelationFamily};

use super::{ClusterBy, RenderOptions};

/// One visual style per relation family, so the three families stay
/// distinguishable in any rendering.
fn family_style(family: RelationFamily) -> &'static str {
    match family {
        RelationFamily::Control => "solid",
        RelationFamily::Sequential => "dashed",
        RelationFamily::Implementation => "dotted",
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Root super class of a class: the lexicographically smallest root
/// reachable through parent links.
fn root_of(ontology: &Ontology, class_id: &str) -> String {
    let mut current = vec![class_id.to_string()];
    let mut seen = std::collections::BTreeSet::new();
    let mut roots = std::collections::BTreeSet::new();
    while let Some(id) = current.pop() {
        if !seen.insert(id.clone()) {
            continue;
        }
        match ontology.class(&id) {
            Some(class) if class.parents.is_empty() => {
                roots.insert(class.id.clone());
            }
            Some(class) => current.extend(class.parents.iter().cloned()),
            None => {
                roots.insert(id);
            }
        }
    }
    roots.into_iter().next().unwrap_or_else(|| class_id.to_string())
}

fn cluster_key(graph: &ComponentGraph, component: &Component, cluster_by: ClusterBy) -> Option<String> {
    match cluster_by {
        ClusterBy::Context => component.context.clone(),
        ClusterBy::ClassSubtree => Some(root_of(&graph.ontology_content, &component.class_id)),
        ClusterBy::None => None,
    }
}

fn node_line(component: &Component) -> String {
    let escape = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
    format!(
        "  {} [label=\"{}\\n({})\"];\n",
        quote(&component.id),
        escape(&component.name),
        escape(&component.class_id)
    )
}

/// Renders a graph as Graphviz DOT. Nodes come out sorted by id, edges in
/// canonical connection order; context or class clusters become DOT
/// subgraphs. Undirected relation kinds render with `dir=none`.
pub fn export_dot(graph: &ComponentGraph, options: &RenderOptions) -> String {
    let graph = graph.canonical();
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(&graph.platform_name));
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=box];\n");
    if options.include_legend {
        out.push_str("  // edge styles: control=solid, sequential=dashed, implementation=dotted\n");
    }

    let mut clusters: BTreeMap<String, Vec<&Component>> = BTreeMap::new();
    let mut loose: Vec<&Component> = Vec::new();
    for component in &graph.components {
        match cluster_key(&graph, component, options.cluster_by) {
            Some(key) => clusters.entry(key).or_default().push(component),
            None => loose.push(component),
        }
    }

    for (i, (label, members)) in clusters.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{i} {{");
        let _ = writeln!(out, "    label={};", quote(label));
        for component in members {
            out.push_str("  ");
            out.push_str(&node_line(component));
        }
        out.push_str("  }\n");
    }
    for component in loose {
        out.push_str(&node_line(component));
    }

    for connection in &graph.connections {
        let (family, subkind, directed) = graph
            .connection_family(connection)
            .unwrap_or((RelationFamily::Control, "?", true));
        let mut attrs = vec![
            format!("label={}", quote(&format!("{family}/{subkind}"))),
            format!("style={}", family_style(family)),
        ];
        if !directed {
            attrs.push("dir=none".to_string());
        }
        let _ = writeln!(
            out,
            "  {} -> {} [{}];",
            quote(&connection.from),
            quote(&connection.to),
            attrs.join(", ")
        );
    }

    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Component, Connection};
    use crate::ontology::{ComponentAttributes, Ontology, OntologyClass, RelationKind};

    fn sample() -> ComponentGraph {
        let mut o = Ontology::new("t");
        o.classes = vec![
            OntologyClass::new("devices"),
            OntologyClass::with_parents("cache", ["devices"]),
        ];
        o.relation_kinds = vec![
            RelationKind::new("shared", RelationFamily::Implementation, "shared"),
            RelationKind::new("bus", RelationFamily::Control, "physical-mitm").undirected(),
        ];
        let mut g = ComponentGraph::over("board", &o);
        for (id, context) in [("l1", Some("secure")), ("l2", None)] {
            g.components.push(Component {
                id: id.into(),
                name: id.to_uppercase(),
                class_id: "cache".into(),
                attributes: ComponentAttributes::default(),
                context: context.map(str::to_string),
                origin_entity: id.into(),
            });
        }
        g.connections = vec![
            Connection {
                id: String::new(),
                from: "l1".into(),
                to: "l2".into(),
                relation_kind: "shared".into(),
                note: String::new(),
            },
            Connection {
                id: String::new(),
                from: "l2".into(),
                to: "l1".into(),
                relation_kind: "bus".into(),
                note: String::new(),
            },
        ];
        g.canonicalize();
        g
    }

    #[test]
    fn empty_graph_renders_header_only() {
        let g = ComponentGraph::over("empty", &Ontology::new("t"));
        let dot = export_dot(&g, &RenderOptions::default());
        assert_eq!(dot, "digraph \"empty\" {\n  rankdir=LR;\n  node [shape=box];\n}\n");
    }

    #[test]
    fn deterministic_output() {
        let g = sample();
        let options = RenderOptions::default();
        assert_eq!(export_dot(&g, &options), export_dot(&g, &options));
    }

    #[test]
    fn every_component_and_connection_appears_once() {
        let g = sample();
        let dot = export_dot(&g, &RenderOptions::default());
        for component in &g.components {
            let node_lines = dot
                .lines()
                .filter(|l| l.trim_start().starts_with(&format!("\"{}\" [label=", component.id)))
                .count();
            assert_eq!(node_lines, 1, "{}", component.id);
        }
        assert_eq!(dot.matches(" -> ").count(), g.connections.len());
    }

    #[test]
    fn context_clustering_groups_labeled_nodes() {
        let g = sample();
        let options = RenderOptions {
            cluster_by: ClusterBy::Context,
            ..RenderOptions::default()
        };
        let dot = export_dot(&g, &options);
        assert!(dot.contains("subgraph cluster_0"));
        assert!(dot.contains("label=\"secure\""));
    }

    #[test]
    fn undirected_kind_gets_dir_none() {
        let g = sample();
        let dot = export_dot(&g, &RenderOptions::default());
        assert!(dot.contains("dir=none"));
        assert!(dot.contains("style=dotted"));
    }
}
