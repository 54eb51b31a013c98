//! The `.plon` textual format and the canonical JSON interchange form.
//!
//! PLON is a small line-oriented declaration language:
//!
//! ```text
//! platont 1
//! # comment to end of line
//! class system-software
//! class operating-system extends system-software
//! relation load family sequential subkind load
//! individual xen of virtual-machine-monitor alias "XEN", "Xen hypervisor"
//! ```
//!
//! Parsing always yields a validated [`Ontology`]; serialization is
//! canonical (statements sorted by kind then id) so equal ontologies always
//! produce byte-identical documents.
//!
//! The PLON surface carries ids only: a class's human-readable `name`
//! defaults to its id and its `description` to empty. The JSON form is the
//! lossless one; use it when names or descriptions matter.

mod json;
mod lexer;
mod parser;
mod serializer;

pub use json::{convert_json_to_ontology, convert_ontology_to_json, JsonFormatError};
pub use parser::{parse_plon, ParseError, PlonError};
pub use serializer::serialize_plon;
