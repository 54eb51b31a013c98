//! Bundled fixtures: the platform ontology, two shape ontologies that
//! realize published aggregate statistics, and two worked reconstruction
//! cases (an ARM TrustZone TEE and a Raspberry Pi Model A) with their
//! expected graphs and views pinned as golden files.
//!
//! The case rosters are documented reconstructions from public
//! architecture documentation; the expected-graph fixtures pin them
//! bit-for-bit. Every fixture is embedded in the binary and checked
//! against the manifest hash on load, so a corrupt install is detected
//! instead of silently producing different numbers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{content_hash, ComponentGraph};
use crate::mapper::MappingDirectives;
use crate::ontology::{validate_ontology, Ontology, RelationFamily};
use crate::source_view::SourceView;
use crate::view::{Closure, RelationFilter, SeedSelector, TargetView, ViewpointSpec};

/// Fixture payload categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureKind {
    Ontology,
    SourceView,
    Directives,
    ExpectedGraph,
    ExpectedView,
}

impl FixtureKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FixtureKind::Ontology => "ontology",
            FixtureKind::SourceView => "source-view",
            FixtureKind::Directives => "directives",
            FixtureKind::ExpectedGraph => "expected-graph",
            FixtureKind::ExpectedView => "expected-view",
        }
    }
}

/// One catalog entry: id, kind, file name, and the embedded payload text.
pub struct Fixture {
    pub id: &'static str,
    pub kind: FixtureKind,
    pub path: &'static str,
    pub text: &'static str,
}

/// Manifest line pinning a fixture's content hash.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub kind: FixtureKind,
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub version: String,
    pub fixtures: Vec<ManifestEntry>,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        id: "platont",
        kind: FixtureKind::Ontology,
        path: "platont.plon",
        text: include_str!("../fixtures/v1/platont.plon"),
    },
    Fixture {
        id: "platont-shape",
        kind: FixtureKind::Ontology,
        path: "platont-shape.plon",
        text: include_str!("../fixtures/v1/platont-shape.plon"),
    },
    Fixture {
        id: "preuveneers-shape",
        kind: FixtureKind::Ontology,
        path: "preuveneers-shape.plon",
        text: include_str!("../fixtures/v1/preuveneers-shape.plon"),
    },
    Fixture {
        id: "arm-tee.source-view",
        kind: FixtureKind::SourceView,
        path: "arm-tee.sourceview.json",
        text: include_str!("../fixtures/v1/arm-tee.sourceview.json"),
    },
    Fixture {
        id: "arm-tee.directives",
        kind: FixtureKind::Directives,
        path: "arm-tee.directives.json",
        text: include_str!("../fixtures/v1/arm-tee.directives.json"),
    },
    Fixture {
        id: "arm-tee.expected-graph",
        kind: FixtureKind::ExpectedGraph,
        path: "arm-tee.graph.json",
        text: include_str!("../fixtures/v1/arm-tee.graph.json"),
    },
    Fixture {
        id: "rpi.source-view",
        kind: FixtureKind::SourceView,
        path: "rpi.sourceview.json",
        text: include_str!("../fixtures/v1/rpi.sourceview.json"),
    },
    Fixture {
        id: "rpi.directives",
        kind: FixtureKind::Directives,
        path: "rpi.directives.json",
        text: include_str!("../fixtures/v1/rpi.directives.json"),
    },
    Fixture {
        id: "rpi.expected-graph",
        kind: FixtureKind::ExpectedGraph,
        path: "rpi.graph.json",
        text: include_str!("../fixtures/v1/rpi.graph.json"),
    },
    Fixture {
        id: "rpi.boot-view",
        kind: FixtureKind::ExpectedView,
        path: "rpi-boot.view.json",
        text: include_str!("../fixtures/v1/rpi-boot.view.json"),
    },
    Fixture {
        id: "rpi.memory-view",
        kind: FixtureKind::ExpectedView,
        path: "rpi-memory.view.json",
        text: include_str!("../fixtures/v1/rpi-memory.view.json"),
    },
];

const MANIFEST_TEXT: &str = include_str!("../fixtures/v1/manifest.json");

/// A parsed fixture payload.
pub enum FixturePayload {
    Ontology(Ontology),
    SourceView(SourceView),
    Directives(MappingDirectives),
    Graph(ComponentGraph),
    View(TargetView),
}

/// Everything needed to re-run one bundled reconstruction case.
pub struct CaseBundle {
    pub ontology: Ontology,
    pub source_view: SourceView,
    pub directives: MappingDirectives,
    pub expected_graph: ComponentGraph,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown fixture id `{id}`")]
    UnknownFixture { id: String },
    #[error("fixture `{id}` failed its integrity check (expected {expected}, found {found}); corrupt install?")]
    HashMismatch {
        id: String,
        expected: String,
        found: String,
    },
    #[error("fixture `{id}` does not parse: {message}")]
    Parse { id: String, message: String },
    #[error("fixture manifest is corrupt: {0}")]
    Manifest(String),
}

fn manifest() -> Result<Manifest, CatalogError> {
    serde_json::from_str(MANIFEST_TEXT).map_err(|e| CatalogError::Manifest(e.to_string()))
}

fn find(id: &str) -> Result<&'static Fixture, CatalogError> {
    FIXTURES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| CatalogError::UnknownFixture { id: id.to_string() })
}

fn verify(fixture: &Fixture) -> Result<(), CatalogError> {
    let manifest = manifest()?;
    let entry = manifest
        .fixtures
        .iter()
        .find(|e| e.id == fixture.id)
        .ok_or_else(|| CatalogError::Manifest(format!("no manifest entry for `{}`", fixture.id)))?;
    let found = content_hash(fixture.text);
    if found != entry.sha256 {
        return Err(CatalogError::HashMismatch {
            id: fixture.id.to_string(),
            expected: entry.sha256.clone(),
            found,
        });
    }
    Ok(())
}

/// Lists the catalog (id, kind, file name) in declaration order.
pub fn list_fixtures() -> Vec<(&'static str, FixtureKind, &'static str)> {
    FIXTURES.iter().map(|f| (f.id, f.kind, f.path)).collect()
}

/// Raw text of a fixture after its integrity check.
pub fn fixture_text(id: &str) -> Result<(&'static Fixture, &'static str), CatalogError> {
    let fixture = find(id)?;
    verify(fixture)?;
    Ok((fixture, fixture.text))
}

/// Loads and validates one fixture into its typed payload.
pub fn load_fixture(id: &str) -> Result<FixturePayload, CatalogError> {
    let (fixture, text) = fixture_text(id)?;
    let parse_err = |message: String| CatalogError::Parse {
        id: id.to_string(),
        message,
    };
    match fixture.kind {
        FixtureKind::Ontology => {
            let ontology = crate::plon::parse_plon(text).map_err(|e| parse_err(e.to_string()))?;
            Ok(FixturePayload::Ontology(ontology))
        }
        FixtureKind::SourceView => {
            let view =
                crate::source_view::load_source_view(text).map_err(|e| parse_err(e.to_string()))?;
            Ok(FixturePayload::SourceView(view))
        }
        FixtureKind::Directives => {
            let directives =
                crate::mapper::load_directives(text).map_err(|e| parse_err(e.to_string()))?;
            Ok(FixturePayload::Directives(directives))
        }
        FixtureKind::ExpectedGraph => {
            let graph = crate::graph::load_graph(text).map_err(|e| parse_err(e.to_string()))?;
            Ok(FixturePayload::Graph(graph))
        }
        FixtureKind::ExpectedView => {
            let view = crate::view::load_view(text).map_err(|e| parse_err(e.to_string()))?;
            Ok(FixturePayload::View(view))
        }
    }
}

/// Shorthand for the ontology fixtures.
pub fn load_ontology(id: &str) -> Result<Ontology, CatalogError> {
    match load_fixture(id)? {
        FixturePayload::Ontology(o) => {
            debug_assert!(validate_ontology(&o).is_valid());
            Ok(o)
        }
        _ => Err(CatalogError::Parse {
            id: id.to_string(),
            message: "not an ontology fixture".to_string(),
        }),
    }
}

/// Loads one reconstruction case (`arm-tee` or `rpi`): the platform
/// ontology, the case's source view and directives, and the pinned
/// expected graph.
pub fn load_bundle(case: &str) -> Result<CaseBundle, CatalogError> {
    let ontology = load_ontology("platont")?;
    let source_view = match load_fixture(&format!("{case}.source-view"))? {
        FixturePayload::SourceView(v) => v,
        _ => unreachable!("kind checked by load_fixture"),
    };
    let directives = match load_fixture(&format!("{case}.directives"))? {
        FixturePayload::Directives(d) => d,
        _ => unreachable!("kind checked by load_fixture"),
    };
    let expected_graph = match load_fixture(&format!("{case}.expected-graph"))? {
        FixturePayload::Graph(g) => g,
        _ => unreachable!("kind checked by load_fixture"),
    };
    Ok(CaseBundle {
        ontology,
        source_view,
        directives,
        expected_graph,
    })
}

/// Fixture ids belonging to a bundle prefix (`arm-tee`, `rpi`), or the
/// exact id when it names a single fixture.
pub fn bundle_ids(name: &str) -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = FIXTURES
        .iter()
        .filter(|f| f.id == name || f.id.starts_with(&format!("{name}.")))
        .map(|f| f.id)
        .collect();
    ids.sort_unstable();
    ids
}

/// The boot viewpoint used by the Raspberry Pi case: boot-chain concepts
/// only, connected by sequential relations.
pub fn rpi_boot_viewspec() -> ViewpointSpec {
    ViewpointSpec {
        name: "rpi-boot-view".to_string(),
        concern: "free bootloader development".to_string(),
        seeds: vec![SeedSelector::ClassSubtree {
            class: "boot-components".to_string(),
        }],
        relation_filter: RelationFilter {
            families: vec![RelationFamily::Sequential],
            subkinds: vec![],
        },
        closure: Closure::SeedsOnly,
    }
}

/// The memory viewpoint used by the Raspberry Pi case: memory devices and
/// the implementation relations between them.
pub fn rpi_memory_viewspec() -> ViewpointSpec {
    ViewpointSpec {
        name: "rpi-memory-view".to_string(),
        concern: "memory forensic tool development".to_string(),
        seeds: vec![SeedSelector::ClassSubtree {
            class: "memory-device".to_string(),
        }],
        relation_filter: RelationFilter {
            families: vec![RelationFamily::Implementation],
            subkinds: vec![],
        },
        closure: Closure::SeedsOnly,
    }
}

/// Timestamp used when regenerating the pinned view fixtures.
pub const GOLDEN_DERIVED_AT: &str = "2026-01-01T00:00:00Z";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_loads_and_verifies() {
        for fixture in FIXTURES {
            load_fixture(fixture.id).unwrap_or_else(|e| panic!("{}: {e}", fixture.id));
        }
    }

    #[test]
    fn manifest_covers_every_fixture() {
        let manifest = manifest().unwrap();
        assert_eq!(manifest.fixtures.len(), FIXTURES.len());
        for fixture in FIXTURES {
            assert!(
                manifest.fixtures.iter().any(|e| e.id == fixture.id),
                "{} missing from manifest",
                fixture.id
            );
        }
    }

    #[test]
    fn platont_has_seven_roots() {
        let ontology = load_ontology("platont").unwrap();
        assert_eq!(ontology.roots().len(), 7);
    }

    #[test]
    fn unknown_id_rejected() {
        assert!(matches!(
            load_fixture("no-such-fixture"),
            Err(CatalogError::UnknownFixture { .. })
        ));
    }

    #[test]
    fn bundle_ids_are_prefix_scoped() {
        let ids = bundle_ids("arm-tee");
        assert_eq!(
            ids,
            vec!["arm-tee.directives", "arm-tee.expected-graph", "arm-tee.source-view"]
        );
        assert_eq!(bundle_ids("platont"), vec!["platont"]);
    }
}
