use std::fmt;

use thiserror::Error;

use crate::ontology::{validate_ontology, Ontology, Violation, PLON_VERSION};

/// A schema or semantic problem in the JSON form, located by field path
/// (e.g. `individuals[2].class_id`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct JsonFormatError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for JsonFormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() || self.path == "." {
            write!(f, "{}", self.message)
        } else {
            write!(f, "at `{}`: {}", self.path, self.message)
        }
    }
}

/// Renders an ontology as its canonical JSON document (sorted declarations,
/// two-space indentation, trailing newline). Byte-identical for equal
/// ontologies.
pub fn convert_ontology_to_json(ontology: &Ontology) -> String {
    let canonical = ontology.canonical();
    let mut text = serde_json::to_string_pretty(&canonical).expect("ontology serializes");
    text.push('\n');
    text
}

/// Parses the JSON interchange form into a validated ontology.
pub fn convert_json_to_ontology(text: &str) -> Result<Ontology, JsonFormatError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let ontology: Ontology = serde_path_to_error::deserialize(de).map_err(|e| JsonFormatError {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })?;

    if ontology.version != PLON_VERSION {
        return Err(JsonFormatError {
            path: "version".to_string(),
            message: format!(
                "unsupported version `{}` (expected `{PLON_VERSION}`)",
                ontology.version
            ),
        });
    }

    let report = validate_ontology(&ontology);
    if let Some(violation) = report.violations.first() {
        return Err(JsonFormatError {
            path: violation_path(&ontology, violation),
            message: violation.to_string(),
        });
    }
    Ok(ontology)
}

/// Best-effort field path for a semantic violation found in a JSON
/// document.
fn violation_path(ontology: &Ontology, violation: &Violation) -> String {
    let class_index = |id: &str| ontology.classes.iter().position(|c| c.id == id);
    let individual_index = |id: &str| ontology.individuals.iter().position(|i| i.id == id);
    let relation_index = |id: &str| ontology.relation_kinds.iter().position(|r| r.id == id);

    match violation {
        Violation::DuplicateId { entity, id } => {
            let (section, index) = match entity.as_str() {
                "class" => ("classes", ontology.classes.iter().rposition(|c| &c.id == id)),
                "relation" => (
                    "relation_kinds",
                    ontology.relation_kinds.iter().rposition(|r| &r.id == id),
                ),
                _ => (
                    "individuals",
                    ontology.individuals.iter().rposition(|i| &i.id == id),
                ),
            };
            match index {
                Some(i) => format!("{section}[{i}].id"),
                None => section.to_string(),
            }
        }
        Violation::InvalidIdentifier { entity, id } => {
            let (section, index) = match entity.as_str() {
                "class" => ("classes", class_index(id)),
                "relation" => ("relation_kinds", relation_index(id)),
                _ => ("individuals", individual_index(id)),
            };
            match index {
                Some(i) => format!("{section}[{i}].id"),
                None => section.to_string(),
            }
        }
        Violation::DanglingParent { class_id, parent_id } => match class_index(class_id) {
            Some(i) => {
                let j = ontology.classes[i]
                    .parents
                    .iter()
                    .position(|p| p == parent_id)
                    .unwrap_or(0);
                format!("classes[{i}].parents[{j}]")
            }
            None => "classes".to_string(),
        },
        Violation::HierarchyCycle { .. } | Violation::NoRootClass | Violation::AmbiguousClassKey { .. } => {
            "classes".to_string()
        }
        Violation::UnknownSubkind { relation_id, .. } => match relation_index(relation_id) {
            Some(i) => format!("relation_kinds[{i}].subkind"),
            None => "relation_kinds".to_string(),
        },
        Violation::DanglingIndividualClass { individual_id, .. } => {
            match individual_index(individual_id) {
                Some(i) => format!("individuals[{i}].class_id"),
                None => "individuals".to_string(),
            }
        }
        Violation::EmptyAlias { individual_id } => match individual_index(individual_id) {
            Some(i) => format!("individuals[{i}].aliases"),
            None => "individuals".to_string(),
        },
        Violation::AmbiguousIndividualKey { .. } => "individuals".to_string(),
    }
}
