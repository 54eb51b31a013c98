//! The reconstructed component-and-connector view: typed components,
//! attributed connections, and provenance back to the ontology and the
//! extract-phase inputs.
//!
//! Graphs are self-contained artifacts: besides the ontology reference
//! (name, version, content hash) they embed the ontology content itself,
//! so viewpoint derivation and export work from a single file. The
//! integrity check verifies the embedded copy still matches the recorded
//! hash.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::ontology::{ComponentAttributes, Ontology, RelationFamily};

/// SHA-256 of a canonical serialization, hex-encoded.
pub fn content_hash(canonical_text: &str) -> String {
    hex::encode(Sha256::digest(canonical_text.as_bytes()))
}

/// Which ontology a graph was reconstructed against.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OntologyRef {
    pub name: String,
    pub version: String,
    pub content_hash: String,
}

impl OntologyRef {
    pub fn of(ontology: &Ontology) -> Self {
        let canonical = crate::plon::convert_ontology_to_json(ontology);
        OntologyRef {
            name: ontology.name.clone(),
            version: ontology.version.clone(),
            content_hash: content_hash(&canonical),
        }
    }
}

/// Hashes of the inputs a graph was reconstructed from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub source_view_hash: String,
    pub directives_hash: String,
}

/// One reconstructed platform component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: String,
    pub name: String,
    pub class_id: String,
    #[serde(default)]
    pub attributes: ComponentAttributes,
    /// Free-form execution-context label (e.g. `secure`, `normal`,
    /// `gpu-executed`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    /// The source entity this component came from.
    pub origin_entity: String,
}

/// A typed, attributed connection between two components. Direction
/// follows the relation kind's declaration; undirected kinds keep their
/// endpoints in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connection {
    pub id: String,
    pub from: String,
    pub to: String,
    pub relation_kind: String,
    #[serde(default)]
    pub note: String,
}

/// The reference component-and-connector view for a platform.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentGraph {
    /// Marks the JSON document kind for self-describing files.
    #[serde(default = "ComponentGraph::kind_tag")]
    pub kind: String,
    pub platform_name: String,
    pub ontology: OntologyRef,
    /// Embedded copy of the ontology the components and connections
    /// resolve against.
    #[serde(default)]
    pub ontology_content: Ontology,
    pub provenance: Provenance,
    pub components: Vec<Component>,
    pub connections: Vec<Connection>,
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("graph integrity: {0}")]
    Integrity(String),
}

impl ComponentGraph {
    pub fn kind_tag() -> String {
        "component-graph".to_string()
    }

    /// Builds an empty graph over an ontology, recording its reference.
    pub fn over(platform_name: impl Into<String>, ontology: &Ontology) -> Self {
        ComponentGraph {
            kind: Self::kind_tag(),
            platform_name: platform_name.into(),
            ontology: OntologyRef::of(ontology),
            ontology_content: ontology.canonical(),
            provenance: Provenance::default(),
            components: Vec::new(),
            connections: Vec::new(),
        }
    }

    pub fn component(&self, id: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.id == id)
    }

    pub fn connection(&self, id: &str) -> Option<&Connection> {
        self.connections.iter().find(|c| c.id == id)
    }

    /// Sorts components by id and connections by (from, relation, to,
    /// note), then reassigns connection ids `c000`, `c001`, … in that
    /// order. Canonicalizing twice is a no-op.
    pub fn canonicalize(&mut self) {
        self.kind = Self::kind_tag();
        self.ontology_content.canonicalize();
        self.components.sort_by(|a, b| a.id.cmp(&b.id));
        self.connections.sort_by(|a, b| {
            (&a.from, &a.relation_kind, &a.to, &a.note)
                .cmp(&(&b.from, &b.relation_kind, &b.to, &b.note))
        });
        for (i, connection) in self.connections.iter_mut().enumerate() {
            connection.id = format!("c{i:03}");
        }
    }

    pub fn canonical(&self) -> ComponentGraph {
        let mut out = self.clone();
        out.canonicalize();
        out
    }

    /// Canonical JSON document, byte-identical for equal graphs.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.canonical()).expect("graph serializes");
        text.push('\n');
        text
    }

    /// SHA-256 over the canonical JSON form.
    pub fn graph_hash(&self) -> String {
        content_hash(&self.to_json())
    }

    /// Checks referential integrity: connection endpoints and relation
    /// kinds resolve, component ids are unique, component classes exist in
    /// the embedded ontology, and the embedded ontology still matches the
    /// hash recorded in the header.
    pub fn check_integrity(&self) -> Result<(), GraphError> {
        let mut problems = Vec::new();

        let recorded = OntologyRef::of(&self.ontology_content);
        if recorded.content_hash != self.ontology.content_hash {
            problems.push(format!(
                "embedded ontology hash {} does not match recorded {}",
                recorded.content_hash, self.ontology.content_hash
            ));
        }

        let mut ids = std::collections::BTreeSet::new();
        for component in &self.components {
            if !ids.insert(component.id.as_str()) {
                problems.push(format!("duplicate component id `{}`", component.id));
            }
            if self.ontology_content.class(&component.class_id).is_none() {
                problems.push(format!(
                    "component `{}` has unresolved class `{}`",
                    component.id, component.class_id
                ));
            }
        }
        for connection in &self.connections {
            for endpoint in [&connection.from, &connection.to] {
                if !ids.contains(endpoint.as_str()) {
                    problems.push(format!(
                        "connection `{}` endpoint `{endpoint}` does not exist",
                        connection.id
                    ));
                }
            }
            if self
                .ontology_content
                .relation_kind(&connection.relation_kind)
                .is_none()
            {
                problems.push(format!(
                    "connection `{}` uses unresolved relation kind `{}`",
                    connection.id, connection.relation_kind
                ));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(GraphError::Integrity(problems.join("; ")))
        }
    }

    /// Family, subkind, and directedness of a connection's relation kind.
    pub fn connection_family(&self, connection: &Connection) -> Option<(RelationFamily, &str, bool)> {
        self.ontology_content
            .relation_kind(&connection.relation_kind)
            .map(|kind| (kind.family, kind.subkind.as_str(), kind.directed))
    }
}

/// Parses a component-graph JSON document.
pub fn load_graph(text: &str) -> Result<ComponentGraph, GraphError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let graph: ComponentGraph =
        serde_path_to_error::deserialize(de).map_err(|e| GraphError::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
    if graph.kind != ComponentGraph::kind_tag() {
        return Err(GraphError::Schema {
            path: "kind".to_string(),
            message: format!("expected `component-graph`, found `{}`", graph.kind),
        });
    }
    Ok(graph)
}
