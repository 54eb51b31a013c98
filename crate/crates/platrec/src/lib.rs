//! platrec — ontology-based architecture reconstruction for computing
//! platforms.
//!
//! The toolkit models a platform ontology (classes, relation kinds,
//! individuals), scores ontologies with a weighted metrics suite, and
//! mechanizes the extract–abstract–present reconstruction loop: analyst
//! source views plus mapping directives go in, component-and-connector
//! graphs, concern-specific target views, and analytical reports come out.
//!
//! Start with the runnable examples:
//!
//! ```text
//! cargo run -p platrec --example ontology_basics
//! cargo run -p platrec --example parse_and_serialize
//! cargo run -p platrec --example evaluate_metrics
//! cargo run -p platrec --example reconstruct_arm_tee
//! cargo run -p platrec --example reconstruct_rpi
//! cargo run -p platrec --example derive_viewpoints
//! cargo run -p platrec --example export_graphs
//! cargo run -p platrec --example view_repository
//! ```
//!
//! The `platrec` binary wraps the same functionality for batch use; see
//! the crate README for the subcommand reference.

pub mod catalog;
pub mod cli;
pub mod export;
pub mod graph;
pub mod mapper;
pub mod metrics;
pub mod normalize;
pub mod ontology;
pub mod plon;
pub mod repo;
pub mod source_view;
pub mod view;

pub use graph::{Component, ComponentGraph, Connection, OntologyRef, Provenance};
pub use mapper::{
    build_connections, coverage_scan, map_entities, reconstruct, MappingDirectives, MappingReport,
};
pub use metrics::{
    compare_ontologies, compute_metrics, weighted_score, MetricsReport, MetricsVariant, WeightTable,
};
pub use ontology::{
    apply_patch, hierarchy_stats, lookup, validate_ontology, ComponentAttributes, Individual,
    LookupResult, Ontology, OntologyClass, OntologyPatch, RelationFamily, RelationKind,
};
pub use plon::{convert_json_to_ontology, convert_ontology_to_json, parse_plon, serialize_plon};
pub use repo::ViewRepository;
pub use source_view::{load_source_view, normalize_view, SourceEntity, SourceView};
pub use view::{
    cross_context_report, derive_view, CrossContextReport, TargetView, ViewpointSpec,
};
