//! In-memory ontology model: class hierarchy, declared relation kinds,
//! individuals, and component attribute vocabularies.
//!
//! The model is deliberately plain data. An [`Ontology`] can hold invalid
//! content; [`validate`](Ontology::validate) reports every broken invariant
//! as data rather than failing, and the operations that require validity
//! (statistics, metrics, mapping) reject invalid input up front.

mod lookup;
mod model;
mod patch;
mod stats;
mod validate;

pub use lookup::{lookup, LookupIndex, LookupResult};
pub use model::{
    ComponentAttributes, Implementation, Individual, Ontology, OntologyClass, RelationFamily,
    RelationKind, SourceStatus, TrustStatus, PLON_VERSION,
};
pub use patch::{apply_patch, OntologyPatch, PatchAddition, PatchError};
pub use stats::{hierarchy_stats, HierarchyStats};
pub use validate::{validate_ontology, ValidationReport, Violation};

pub(crate) use validate::{is_valid_ident, RESERVED_WORDS};
