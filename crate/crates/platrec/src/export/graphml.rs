use std::fmt::Write;

use crate::graph::ComponentGraph;
use crate::ontology::RelationFamily;

use super::RenderOptions;

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
        .replace('\'', "&apos;")
}

const NODE_KEYS: [(&str, &str); 6] = [
    ("d0", "name"),
    ("d1", "class_id"),
    ("d2", "implementation"),
    ("d3", "source_status"),
    ("d4", "trust_status"),
    ("d5", "context"),
];

const EDGE_KEYS: [(&str, &str); 4] = [
    ("e0", "relation_kind"),
    ("e1", "family"),
    ("e2", "subkind"),
    ("e3", "note"),
];

/// Renders a graph as GraphML. Node attributes carry the class and the
/// implementation/source/trust annotations plus the context label; edge
/// attributes carry the relation kind with its family and subkind.
/// Clustering options do not apply (GraphML has no subgraph grouping
/// here); output is byte-deterministic.
pub fn export_graphml(graph: &ComponentGraph, _options: &RenderOptions) -> String {
    let graph = graph.canonical();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
    for (id, name) in NODE_KEYS {
        let _ = writeln!(
            out,
            "  <key id=\"{id}\" for=\"node\" attr.name=\"{name}\" attr.type=\"string\"/>"
        );
    }
    for (id, name) in EDGE_KEYS {
        let _ = writeln!(
            out,
            "  <key id=\"{id}\" for=\"edge\" attr.name=\"{name}\" attr.type=\"string\"/>"
        );
    }
    let _ = writeln!(
        out,
        "  <graph id=\"{}\" edgedefault=\"directed\">",
        xml_escape(&graph.platform_name)
    );

    for component in &graph.components {
        let _ = writeln!(out, "    <node id=\"{}\">", xml_escape(&component.id));
        let values = [
            component.name.clone(),
            component.class_id.clone(),
            component.attributes.implementation.as_str().to_string(),
            component.attributes.source_status.as_str().to_string(),
            component.attributes.trust_status.as_str().to_string(),
            component.context.clone().unwrap_or_default(),
        ];
        for ((key, _), value) in NODE_KEYS.iter().zip(values.iter()) {
            let _ = writeln!(out, "      <data key=\"{key}\">{}</data>", xml_escape(value));
        }
        out.push_str("    </node>\n");
    }

    for connection in &graph.connections {
        let (family, subkind, _) = graph
            .connection_family(connection)
            .unwrap_or((RelationFamily::Control, "?", true));
        let _ = writeln!(
            out,
            "    <edge id=\"{}\" source=\"{}\" target=\"{}\">",
            xml_escape(&connection.id),
            xml_escape(&connection.from),
            xml_escape(&connection.to)
        );
        let values = [
            connection.relation_kind.clone(),
            family.to_string(),
            subkind.to_string(),
            connection.note.clone(),
        ];
        for ((key, _), value) in EDGE_KEYS.iter().zip(values.iter()) {
            let _ = writeln!(out, "      <data key=\"{key}\">{}</data>", xml_escape(value));
        }
        out.push_str("    </edge>\n");
    }

    out.push_str("  </graph>\n</graphml>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Component, Connection};
    use crate::ontology::{
        ComponentAttributes, Implementation, Ontology, OntologyClass, RelationKind, SourceStatus,
        TrustStatus,
    };

    fn sample() -> ComponentGraph {
        let mut o = Ontology::new("t");
        o.classes = vec![OntologyClass::new("cache")];
        o.relation_kinds = vec![RelationKind::new(
            "shared",
            RelationFamily::Implementation,
            "shared",
        )];
        let mut g = ComponentGraph::over("board & co", &o);
        g.components = vec![Component {
            id: "l2".into(),
            name: "L2 <cache>".into(),
            class_id: "cache".into(),
            attributes: ComponentAttributes {
                implementation: Implementation::Hardware,
                source_status: SourceStatus::Closed,
                trust_status: TrustStatus::Trusted,
            },
            context: Some("secure".into()),
            origin_entity: "l2".into(),
        }];
        g.connections = vec![Connection {
            id: String::new(),
            from: "l2".into(),
            to: "l2".into(),
            relation_kind: "shared".into(),
            note: "self loop".into(),
        }];
        g.canonicalize();
        g
    }

    #[test]
    fn empty_graph_is_schema_shaped() {
        let g = ComponentGraph::over("empty", &Ontology::new("t"));
        let xml = export_graphml(&g, &RenderOptions::default());
        assert!(xml.starts_with("<?xml version=\"1.0\""));
        assert!(xml.contains("<graph id=\"empty\" edgedefault=\"directed\">"));
        assert!(!xml.contains("<node"));
        assert!(xml.ends_with("</graphml>\n"));
    }

    #[test]
    fn attributes_and_escaping() {
        let g = sample();
        let xml = export_graphml(&g, &RenderOptions::default());
        assert!(xml.contains("L2 &lt;cache&gt;"));
        assert!(xml.contains("<data key=\"d2\">hardware</data>"));
        assert!(xml.contains("<data key=\"d5\">secure</data>"));
        assert!(xml.contains("<data key=\"e1\">implementation</data>"));
        assert!(xml.contains("board &amp; co"));
    }

    #[test]
    fn deterministic() {
        let g = sample();
        let options = RenderOptions::default();
        assert_eq!(export_graphml(&g, &options), export_graphml(&g, &options));
    }
}
