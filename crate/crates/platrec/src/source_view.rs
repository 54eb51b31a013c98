//! Source views: the analyst's raw inventory of platform entities,
//! collected in the extract phase with the evidence that backs each entry.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::normalize::normalize;

/// Where a piece of evidence lives: a document title plus a locator such as
/// a page, section, or URL fragment. Evidence cites locations only; it
/// never embeds document text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvidenceRef {
    pub document: String,
    #[serde(default)]
    pub locator: String,
}

impl EvidenceRef {
    pub fn new(document: impl Into<String>, locator: impl Into<String>) -> Self {
        EvidenceRef {
            document: document.into(),
            locator: locator.into(),
        }
    }
}

/// One platform entity the analyst found (or could not identify: `unknown`
/// entities stay in the view and flow through mapping unmapped, so the
/// inspection can pick them up again later).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceEntity {
    pub id: String,
    pub display_name: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind_hint: Option<String>,
    #[serde(default)]
    pub evidence: Vec<EvidenceRef>,
    #[serde(default)]
    pub unknown: bool,
}

impl SourceEntity {
    pub fn new(id: impl Into<String>, display_name: impl Into<String>) -> Self {
        SourceEntity {
            id: id.into(),
            display_name: display_name.into(),
            aliases: Vec::new(),
            kind_hint: None,
            evidence: Vec::new(),
            unknown: false,
        }
    }

    /// Terms this entity answers to, in lookup priority order: display
    /// name, id, then aliases.
    pub fn lookup_terms(&self) -> impl Iterator<Item = &str> {
        std::iter::once(self.display_name.as_str())
            .chain(std::iter::once(self.id.as_str()))
            .chain(self.aliases.iter().map(String::as_str))
    }
}

/// The extract-phase artifact: everything the analyst enumerated for one
/// platform.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceView {
    pub platform_name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    #[serde(default)]
    pub entities: Vec<SourceEntity>,
}

#[derive(Debug, Error)]
pub enum SourceViewError {
    #[error("at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("{0}")]
    Invalid(SourceViewReport),
}

/// Violations found while validating a source view.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceViewReport {
    pub violations: Vec<String>,
}

impl fmt::Display for SourceViewReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.violations.join("\n"))
    }
}

impl SourceView {
    pub fn new(platform_name: impl Into<String>) -> Self {
        SourceView {
            platform_name: platform_name.into(),
            ..SourceView::default()
        }
    }

    pub fn entity(&self, id: &str) -> Option<&SourceEntity> {
        self.entities.iter().find(|e| e.id == id)
    }

    /// Checks the view's invariants: unique entity ids, non-empty evidence
    /// documents, and at least one evidence reference on every known
    /// (non-unknown) entity.
    pub fn validate(&self) -> SourceViewReport {
        let mut violations = Vec::new();
        let mut seen = BTreeSet::new();
        for entity in &self.entities {
            if !seen.insert(entity.id.as_str()) {
                violations.push(format!("duplicate entity id `{}`", entity.id));
            }
            if !entity.unknown && entity.evidence.is_empty() {
                violations.push(format!(
                    "entity `{}` is not tagged unknown but carries no evidence",
                    entity.id
                ));
            }
            for (i, evidence) in entity.evidence.iter().enumerate() {
                if evidence.document.trim().is_empty() {
                    violations.push(format!(
                        "entity `{}` evidence[{i}] has an empty document",
                        entity.id
                    ));
                }
            }
        }
        SourceViewReport { violations }
    }

    /// Canonical ordering: entities sorted by id, aliases sorted.
    pub fn canonical(&self) -> SourceView {
        let mut out = self.clone();
        out.entities.sort_by(|a, b| a.id.cmp(&b.id));
        for entity in &mut out.entities {
            entity.aliases.sort_unstable();
            entity.aliases.dedup();
        }
        out
    }

    /// Canonical JSON form (used for hashing and on-disk storage).
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.canonical()).expect("view serializes");
        text.push('\n');
        text
    }
}

/// Parses and validates a source-view JSON document.
pub fn load_source_view(text: &str) -> Result<SourceView, SourceViewError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let view: SourceView =
        serde_path_to_error::deserialize(de).map_err(|e| SourceViewError::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
    let report = view.validate();
    if report.violations.is_empty() {
        Ok(view)
    } else {
        Err(SourceViewError::Invalid(report))
    }
}

/// Adds the normalized form of every display name and alias to each
/// entity's alias set, so lookup hits are insensitive to the analyst's
/// spelling. Ids, display names, and entity count never change;
/// normalizing twice is the same as normalizing once.
pub fn normalize_view(view: &SourceView) -> SourceView {
    let mut out = view.clone();
    for entity in &mut out.entities {
        let mut aliases: BTreeSet<String> = entity.aliases.iter().cloned().collect();
        for term in [entity.display_name.clone(), entity.id.clone()]
            .iter()
            .chain(entity.aliases.clone().iter())
        {
            let normalized = normalize(term);
            if !normalized.is_empty() {
                aliases.insert(normalized);
            }
        }
        entity.aliases = aliases.into_iter().collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_view_loads() {
        let view = load_source_view(r#"{"platform_name":"x","entities":[]}"#).unwrap();
        assert_eq!(view.platform_name, "x");
        assert!(view.entities.is_empty());
    }

    #[test]
    fn duplicate_ids_rejected() {
        let text = r#"{"platform_name":"x","entities":[
            {"id":"a","display_name":"A","evidence":[{"document":"d","locator":"1"}]},
            {"id":"a","display_name":"A again","evidence":[{"document":"d","locator":"2"}]}
        ]}"#;
        let err = load_source_view(text).unwrap_err();
        assert!(err.to_string().contains("duplicate entity id `a`"));
    }

    #[test]
    fn known_entity_needs_evidence() {
        let text = r#"{"platform_name":"x","entities":[{"id":"a","display_name":"A"}]}"#;
        assert!(load_source_view(text).is_err());
        let text = r#"{"platform_name":"x","entities":[{"id":"a","display_name":"A","unknown":true}]}"#;
        assert!(load_source_view(text).is_ok());
    }

    #[test]
    fn schema_error_names_path() {
        let text = r#"{"platform_name":"x","entities":[{"id":3,"display_name":"A"}]}"#;
        match load_source_view(text).unwrap_err() {
            SourceViewError::Schema { path, .. } => assert_eq!(path, "entities[0].id"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn normalize_adds_folded_aliases() {
        let mut view = SourceView::new("p");
        let mut entity = SourceEntity::new("tza-ram", "TZA  RAM");
        entity.unknown = true;
        view.entities.push(entity);
        let normalized = normalize_view(&view);
        assert!(normalized.entities[0].aliases.contains(&"tza-ram".to_string()));
        assert_eq!(normalized.entities[0].display_name, "TZA  RAM");
        assert_eq!(normalized.entities.len(), view.entities.len());
    }

    #[test]
    fn normalize_is_idempotent() {
        let mut view = SourceView::new("p");
        let mut entity = SourceEntity::new("a-b", "A _ B");
        entity.aliases = vec!["Some Alias".to_string()];
        entity.unknown = true;
        view.entities.push(entity);
        let once = normalize_view(&view);
        let twice = normalize_view(&once);
        assert_eq!(once, twice);
    }

    #[test]
    fn round_trip_is_lossless() {
        let mut view = SourceView::new("p");
        view.notes = Some("scratch notes".to_string());
        let mut entity = SourceEntity::new("uart", "PL011 UART");
        entity.kind_hint = Some("serial peripheral".to_string());
        entity.evidence.push(EvidenceRef::new("SoC manual", "ch. 13"));
        view.entities.push(entity);
        let json = view.to_json();
        let back = load_source_view(&json).unwrap();
        assert_eq!(back, view.canonical());
        assert_eq!(back.to_json(), json);
    }
}
