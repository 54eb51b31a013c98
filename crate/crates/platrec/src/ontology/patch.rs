use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::model::{Individual, Ontology, OntologyClass, RelationKind};
use super::validate::{require_valid, validate_ontology, ValidationReport};

/// One addition a patch wants to make, with the analyst's rationale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PatchAddition {
    Class {
        class: OntologyClass,
        rationale: String,
    },
    RelationKind {
        relation_kind: RelationKind,
        rationale: String,
    },
    Individual {
        individual: Individual,
        rationale: String,
    },
}

impl PatchAddition {
    pub fn id(&self) -> &str {
        match self {
            PatchAddition::Class { class, .. } => &class.id,
            PatchAddition::RelationKind { relation_kind, .. } => &relation_kind.id,
            PatchAddition::Individual { individual, .. } => &individual.id,
        }
    }

    pub fn rationale(&self) -> &str {
        match self {
            PatchAddition::Class { rationale, .. }
            | PatchAddition::RelationKind { rationale, .. }
            | PatchAddition::Individual { rationale, .. } => rationale,
        }
    }
}

/// An auditable set of additions to an ontology. Patches never remove or
/// rewrite existing declarations; they extend the ontology or are rejected
/// as a whole.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct OntologyPatch {
    pub additions: Vec<PatchAddition>,
}

impl OntologyPatch {
    pub fn is_empty(&self) -> bool {
        self.additions.is_empty()
    }

    pub fn add_class(&mut self, class: OntologyClass, rationale: impl Into<String>) {
        self.additions.push(PatchAddition::Class {
            class,
            rationale: rationale.into(),
        });
    }

    pub fn add_relation_kind(&mut self, relation_kind: RelationKind, rationale: impl Into<String>) {
        self.additions.push(PatchAddition::RelationKind {
            relation_kind,
            rationale: rationale.into(),
        });
    }

    pub fn add_individual(&mut self, individual: Individual, rationale: impl Into<String>) {
        self.additions.push(PatchAddition::Individual {
            individual,
            rationale: rationale.into(),
        });
    }
}

#[derive(Debug, Error)]
pub enum PatchError {
    #[error("patch applied to an invalid ontology:\n{0}")]
    InvalidBase(ValidationReport),
    #[error("patch rejected: addition `{addition_id}` breaks the ontology:\n{report}")]
    InvalidResult {
        addition_id: String,
        report: ValidationReport,
    },
}

/// Applies a patch, returning the extended ontology. The input is left
/// untouched; on any broken invariant the whole patch is rejected and the
/// error names the first addition that breaks it.
pub fn apply_patch(ontology: &Ontology, patch: &OntologyPatch) -> Result<Ontology, PatchError> {
    require_valid(ontology).map_err(PatchError::InvalidBase)?;

    let mut patched = ontology.clone();
    for addition in &patch.additions {
        match addition {
            PatchAddition::Class { class, .. } => patched.classes.push(class.clone()),
            PatchAddition::RelationKind { relation_kind, .. } => {
                patched.relation_kinds.push(relation_kind.clone())
            }
            PatchAddition::Individual { individual, .. } => {
                patched.individuals.push(individual.clone())
            }
        }
        // Validate after each addition so the error can name the culprit.
        let report = validate_ontology(&patched);
        if !report.is_valid() {
            return Err(PatchError::InvalidResult {
                addition_id: addition.id().to_string(),
                report,
            });
        }
    }
    Ok(patched)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::model::{Individual, OntologyClass};

    fn base() -> Ontology {
        let mut o = Ontology::new("base");
        o.classes.push(OntologyClass::new("firmware-device"));
        o
    }

    #[test]
    fn empty_patch_is_identity() {
        let o = base();
        let patched = apply_patch(&o, &OntologyPatch::default()).unwrap();
        assert_eq!(patched, o);
    }

    #[test]
    fn adds_individual() {
        let o = base();
        let mut patch = OntologyPatch::default();
        patch.add_individual(
            Individual::new("ftpm", "firmware-device").with_aliases(["fTPM"]),
            "firmware implementation of a TPM",
        );
        let patched = apply_patch(&o, &patch).unwrap();
        assert_eq!(patched.individuals.len(), o.individuals.len() + 1);
        assert_eq!(o.individuals.len(), 0); // original untouched
    }

    #[test]
    fn dangling_parent_rejected_atomically() {
        let o = base();
        let mut patch = OntologyPatch::default();
        patch.add_class(OntologyClass::new("ok-class"), "fine");
        patch.add_class(
            OntologyClass::with_parents("bad-class", ["ghost"]),
            "broken",
        );
        let err = apply_patch(&o, &patch).unwrap_err();
        match err {
            PatchError::InvalidResult { addition_id, .. } => assert_eq!(addition_id, "bad-class"),
            other => panic!("unexpected error {other:?}"),
        }
        // base unchanged by the failed application
        assert_eq!(o.classes.len(), 1);
    }

    #[test]
    fn duplicate_id_rejected() {
        let o = base();
        let mut patch = OntologyPatch::default();
        patch.add_class(OntologyClass::new("firmware-device"), "dup");
        assert!(apply_patch(&o, &patch).is_err());
    }
}
