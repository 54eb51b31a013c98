//! Concern-specific target views over a component graph, and the
//! cross-security-context edge analysis.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Component, ComponentGraph, Connection, OntologyRef};
use crate::normalize::normalize;
use crate::ontology::{Ontology, RelationFamily};

/// Picks seed components for a view.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "by", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SeedSelector {
    /// Components whose class lies in the subtree rooted at `class`
    /// (inclusive).
    ClassSubtree { class: String },
    /// Components whose normalized name or id matches a glob pattern
    /// (`*` and `?`).
    NamePattern { pattern: String },
    /// Components with the given attribute value; `attribute` is one of
    /// `implementation`, `source_status`, `trust_status`.
    Attribute { attribute: String, value: String },
    /// Components carrying this context label.
    Context { context: String },
}

/// Filters which connections a view follows and keeps. Empty lists accept
/// every family/subkind.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFilter {
    #[serde(default)]
    pub families: Vec<RelationFamily>,
    #[serde(default)]
    pub subkinds: Vec<String>,
}

impl RelationFilter {
    pub fn is_empty(&self) -> bool {
        self.families.is_empty() && self.subkinds.is_empty()
    }

    fn passes(&self, family: RelationFamily, subkind: &str) -> bool {
        (self.families.is_empty() || self.families.contains(&family))
            && (self.subkinds.is_empty() || self.subkinds.iter().any(|s| s == subkind))
    }
}

/// How far a view expands beyond its seeds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Closure {
    /// Only the seeds themselves.
    SeedsOnly,
    /// Components within `k` hops of a seed, ignoring edge direction.
    Neighbors { k: usize },
    /// Everything reachable from the seeds following connection direction.
    Reachable,
    /// Everything connected to the seeds in either direction; physical
    /// resources like buses are undirected, so directed reachability can
    /// miss them.
    UndirectedReach,
}

/// A named, concern-driven specification of a target view.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ViewpointSpec {
    pub name: String,
    #[serde(default)]
    pub concern: String,
    #[serde(default)]
    pub seeds: Vec<SeedSelector>,
    #[serde(default)]
    pub relation_filter: RelationFilter,
    pub closure: Closure,
}

/// Which graph a view was derived from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRef {
    pub platform_name: String,
    pub graph_hash: String,
    pub ontology: OntologyRef,
}

/// A derived view: the spec, provenance back to the parent graph, and the
/// induced subgraph materialized so the view is self-contained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetView {
    #[serde(default = "TargetView::kind_tag")]
    pub kind: String,
    pub name: String,
    pub spec: ViewpointSpec,
    pub graph: GraphRef,
    /// Embedded ontology copy, carried over from the parent graph.
    #[serde(default)]
    pub ontology_content: Ontology,
    pub derived_at: String,
    pub components: Vec<Component>,
    pub connections: Vec<Connection>,
}

impl TargetView {
    pub fn kind_tag() -> String {
        "target-view".to_string()
    }

    pub fn component_ids(&self) -> Vec<&str> {
        self.components.iter().map(|c| c.id.as_str()).collect()
    }

    pub fn connection_ids(&self) -> Vec<&str> {
        self.connections.iter().map(|c| c.id.as_str()).collect()
    }

    /// The view's subgraph as a standalone graph (same ontology), so views
    /// can be exported and re-derived like any graph.
    pub fn to_graph(&self) -> ComponentGraph {
        ComponentGraph {
            kind: ComponentGraph::kind_tag(),
            platform_name: self.graph.platform_name.clone(),
            ontology: self.graph.ontology.clone(),
            ontology_content: self.ontology_content.clone(),
            provenance: Default::default(),
            components: self.components.clone(),
            connections: self.connections.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("view serializes");
        text.push('\n');
        text
    }
}

/// Parses a target-view JSON document.
pub fn load_view(text: &str) -> Result<TargetView, ViewError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let view: TargetView = serde_path_to_error::deserialize(de).map_err(|e| ViewError::Schema {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })?;
    if view.kind != TargetView::kind_tag() {
        return Err(ViewError::Schema {
            path: "kind".to_string(),
            message: format!("expected `target-view`, found `{}`", view.kind),
        });
    }
    Ok(view)
}

/// Parses a viewpoint-spec JSON document.
pub fn load_viewpoint_spec(text: &str) -> Result<ViewpointSpec, ViewError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| ViewError::Schema {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })
}

#[derive(Debug, Error)]
pub enum ViewError {
    #[error("at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("viewpoint spec `{name}` has no seed selector and no relation filter")]
    EmptySpec { name: String },
    #[error("viewpoint spec references unknown class `{class}`")]
    UnknownClass { class: String },
    #[error("viewpoint spec references unknown attribute `{attribute}`")]
    UnknownAttribute { attribute: String },
    #[error("unknown relation kind or subkind `{relation}`")]
    UnknownRelationKind { relation: String },
    #[error("context `{context}` labels no component in the graph")]
    ContextMissing { context: String },
}

/// Minimal glob matching: `*` any run, `?` any single character.
fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    let mut dp = vec![vec![false; t.len() + 1]; p.len() + 1];
    dp[0][0] = true;
    for i in 1..=p.len() {
        if p[i - 1] == '*' {
            dp[i][0] = dp[i - 1][0];
        }
    }
    for i in 1..=p.len() {
        for j in 1..=t.len() {
            dp[i][j] = match p[i - 1] {
                '*' => dp[i - 1][j] || dp[i][j - 1],
                '?' => dp[i - 1][j - 1],
                c => dp[i - 1][j - 1] && c == t[j - 1],
            };
        }
    }
    dp[p.len()][t.len()]
}

fn seed_matches(
    selector: &SeedSelector,
    component: &Component,
    ontology: &Ontology,
) -> Result<bool, ViewError> {
    Ok(match selector {
        SeedSelector::ClassSubtree { class } => {
            if ontology.class(class).is_none() {
                return Err(ViewError::UnknownClass { class: class.clone() });
            }
            ontology.subtree(class).contains(&component.class_id)
        }
        SeedSelector::NamePattern { pattern } => {
            let pattern = normalize(pattern);
            glob_match(&pattern, &normalize(&component.name))
                || glob_match(&pattern, &component.id)
        }
        SeedSelector::Attribute { attribute, value } => {
            let actual = match attribute.as_str() {
                "implementation" => component.attributes.implementation.as_str(),
                "source_status" => component.attributes.source_status.as_str(),
                "trust_status" => component.attributes.trust_status.as_str(),
                other => {
                    return Err(ViewError::UnknownAttribute {
                        attribute: other.to_string(),
                    })
                }
            };
            actual == value
        }
        SeedSelector::Context { context } => component.context.as_deref() == Some(context),
    })
}

/// Derives the target view a spec describes: select seeds, expand per the
/// closure over filter-passing connections, and keep exactly the
/// connections whose endpoints both made it in and whose relation passes
/// the filter. Deterministic for equal inputs.
pub fn derive_view(
    graph: &ComponentGraph,
    spec: &ViewpointSpec,
    derived_at: &str,
) -> Result<TargetView, ViewError> {
    if spec.seeds.is_empty() && spec.relation_filter.is_empty() {
        return Err(ViewError::EmptySpec {
            name: spec.name.clone(),
        });
    }
    for subkind in &spec.relation_filter.subkinds {
        let known = RelationFamily::ALL
            .iter()
            .any(|f| f.base_subkinds().contains(&subkind.as_str()));
        if !known {
            return Err(ViewError::UnknownRelationKind {
                relation: subkind.clone(),
            });
        }
    }

    let graph = graph.canonical();
    let ontology = &graph.ontology_content;

    // Resolve each connection's family/subkind once.
    let mut edges = Vec::new();
    for connection in &graph.connections {
        let Some((family, subkind, _)) = graph.connection_family(connection) else {
            return Err(ViewError::UnknownRelationKind {
                relation: connection.relation_kind.clone(),
            });
        };
        let passes = spec.relation_filter.passes(family, subkind);
        edges.push((connection, passes));
    }

    // Seed selection: union over selectors.
    let mut selected: BTreeSet<String> = BTreeSet::new();
    for component in &graph.components {
        for selector in &spec.seeds {
            if seed_matches(selector, component, ontology)? {
                selected.insert(component.id.clone());
                break;
            }
        }
    }

    // Closure expansion over filter-passing connections.
    match &spec.closure {
        Closure::SeedsOnly => {}
        Closure::Neighbors { k } => {
            let mut frontier: VecDeque<(String, usize)> =
                selected.iter().map(|id| (id.clone(), 0)).collect();
            while let Some((id, depth)) = frontier.pop_front() {
                if depth == *k {
                    continue;
                }
                for (connection, passes) in &edges {
                    if !passes {
                        continue;
                    }
                    let other = if connection.from == id {
                        Some(&connection.to)
                    } else if connection.to == id {
                        Some(&connection.from)
                    } else {
                        None
                    };
                    if let Some(other) = other {
                        if selected.insert(other.clone()) {
                            frontier.push_back((other.clone(), depth + 1));
                        }
                    }
                }
            }
        }
        Closure::Reachable | Closure::UndirectedReach => {
            let undirected = matches!(spec.closure, Closure::UndirectedReach);
            let mut frontier: VecDeque<String> = selected.iter().cloned().collect();
            while let Some(id) = frontier.pop_front() {
                for (connection, passes) in &edges {
                    if !passes {
                        continue;
                    }
                    let mut nexts = Vec::new();
                    if connection.from == id {
                        nexts.push(&connection.to);
                    }
                    if undirected && connection.to == id {
                        nexts.push(&connection.from);
                    }
                    for next in nexts {
                        if selected.insert(next.clone()) {
                            frontier.push_back(next.clone());
                        }
                    }
                }
            }
        }
    }

    let components: Vec<Component> = graph
        .components
        .iter()
        .filter(|c| selected.contains(&c.id))
        .cloned()
        .collect();
    let connections: Vec<Connection> = edges
        .iter()
        .filter(|(c, passes)| *passes && selected.contains(&c.from) && selected.contains(&c.to))
        .map(|(c, _)| (*c).clone())
        .collect();

    Ok(TargetView {
        kind: TargetView::kind_tag(),
        name: spec.name.clone(),
        spec: spec.clone(),
        graph: GraphRef {
            platform_name: graph.platform_name.clone(),
            graph_hash: graph.graph_hash(),
            ontology: graph.ontology.clone(),
        },
        ontology_content: graph.ontology_content.clone(),
        derived_at: derived_at.to_string(),
        components,
        connections,
    })
}

/// One connection crossing two different execution contexts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossEdge {
    pub connection_id: String,
    pub from: String,
    pub from_context: String,
    pub to: String,
    pub to_context: String,
    pub relation_kind: String,
    pub family: RelationFamily,
    pub subkind: String,
    #[serde(default)]
    pub note: String,
}

/// Classification of every connection by the execution contexts of its
/// endpoints. Cross edges (both endpoints labeled, labels differ) split
/// into exactly two buckets around the privileged context; everything else
/// is counted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossContextReport {
    #[serde(default = "CrossContextReport::kind_tag")]
    pub kind: String,
    pub platform_name: String,
    pub graph_hash: String,
    pub ontology: OntologyRef,
    pub privileged_context: String,
    pub privileged_to_normal: Vec<CrossEdge>,
    pub normal_to_privileged: Vec<CrossEdge>,
    pub intra_context_count: usize,
    pub unlabeled_count: usize,
}

impl CrossContextReport {
    pub fn kind_tag() -> String {
        "cross-context-report".to_string()
    }

    pub fn cross_edge_count(&self) -> usize {
        self.privileged_to_normal.len() + self.normal_to_privileged.len()
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

/// Buckets every cross-context connection by direction relative to the
/// privileged context: edges leaving it are privileged→normal, edges whose
/// source is any other context are normal→privileged. Connections inside
/// one context or touching an unlabeled component are counted separately.
pub fn cross_context_report(
    graph: &ComponentGraph,
    privileged_context: &str,
) -> Result<CrossContextReport, ViewError> {
    let graph = graph.canonical();
    let labeled = graph
        .components
        .iter()
        .any(|c| c.context.as_deref() == Some(privileged_context));
    if !labeled {
        return Err(ViewError::ContextMissing {
            context: privileged_context.to_string(),
        });
    }

    let context_of = |id: &str| -> Option<String> {
        graph.component(id).and_then(|c| c.context.clone())
    };

    let mut privileged_to_normal = Vec::new();
    let mut normal_to_privileged = Vec::new();
    let mut intra_context_count = 0;
    let mut unlabeled_count = 0;

    for connection in &graph.connections {
        let from_context = context_of(&connection.from);
        let to_context = context_of(&connection.to);
        match (from_context, to_context) {
            (Some(from_ctx), Some(to_ctx)) if from_ctx != to_ctx => {
                let (family, subkind) = graph
                    .connection_family(connection)
                    .map(|(f, s, _)| (f, s.to_string()))
                    .ok_or_else(|| ViewError::UnknownRelationKind {
                        relation: connection.relation_kind.clone(),
                    })?;
                let edge = CrossEdge {
                    connection_id: connection.id.clone(),
                    from: connection.from.clone(),
                    from_context: from_ctx.clone(),
                    to: connection.to.clone(),
                    to_context: to_ctx,
                    relation_kind: connection.relation_kind.clone(),
                    family,
                    subkind,
                    note: connection.note.clone(),
                };
                if from_ctx == privileged_context {
                    privileged_to_normal.push(edge);
                } else {
                    normal_to_privileged.push(edge);
                }
            }
            (Some(_), Some(_)) => intra_context_count += 1,
            _ => unlabeled_count += 1,
        }
    }

    Ok(CrossContextReport {
        kind: CrossContextReport::kind_tag(),
        platform_name: graph.platform_name.clone(),
        graph_hash: graph.graph_hash(),
        ontology: graph.ontology.clone(),
        privileged_context: privileged_context.to_string(),
        privileged_to_normal,
        normal_to_privileged,
        intra_context_count,
        unlabeled_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::{ComponentAttributes, OntologyClass, RelationKind};

    fn ontology() -> Ontology {
        let mut o = Ontology::new("t");
        o.classes = vec![
            OntologyClass::new("devices"),
            OntologyClass::with_parents("memory-device", ["devices"]),
            OntologyClass::with_parents("cache", ["devices"]),
            OntologyClass::new("system-software"),
        ];
        o.relation_kinds = vec![
            RelationKind::new("load", RelationFamily::Sequential, "load"),
            RelationKind::new("shared", RelationFamily::Implementation, "shared"),
            RelationKind::new("modification", RelationFamily::Control, "modification"),
        ];
        o
    }

    fn component(id: &str, class: &str, context: Option<&str>) -> Component {
        Component {
            id: id.to_string(),
            name: id.to_string(),
            class_id: class.to_string(),
            attributes: ComponentAttributes::default(),
            context: context.map(str::to_string),
            origin_entity: id.to_string(),
        }
    }

    fn connection(from: &str, kind: &str, to: &str) -> Connection {
        Connection {
            id: String::new(),
            from: from.to_string(),
            to: to.to_string(),
            relation_kind: kind.to_string(),
            note: String::new(),
        }
    }

    fn graph() -> ComponentGraph {
        let mut g = ComponentGraph::over("p", &ontology());
        g.components = vec![
            component("ram", "memory-device", None),
            component("secure-ram", "memory-device", Some("secure")),
            component("normal-ram", "memory-device", Some("normal")),
            component("os", "system-software", Some("normal")),
            component("monitor", "system-software", Some("secure")),
            component("l2", "cache", None),
        ];
        g.connections = vec![
            connection("os", "load", "normal-ram"),
            connection("monitor", "modification", "normal-ram"),
            connection("os", "modification", "monitor"),
            connection("monitor", "load", "secure-ram"),
            connection("secure-ram", "shared", "ram"),
            connection("l2", "shared", "ram"),
        ];
        g.canonicalize();
        g
    }

    fn spec(seeds: Vec<SeedSelector>, filter: RelationFilter, closure: Closure) -> ViewpointSpec {
        ViewpointSpec {
            name: "test-view".to_string(),
            concern: String::new(),
            seeds,
            relation_filter: filter,
            closure,
        }
    }

    #[test]
    fn no_matching_seeds_gives_empty_view() {
        let g = graph();
        let s = spec(
            vec![SeedSelector::Context { context: "missing".into() }],
            RelationFilter::default(),
            Closure::SeedsOnly,
        );
        let view = derive_view(&g, &s, "t0").unwrap();
        assert!(view.components.is_empty());
        assert!(view.connections.is_empty());
    }

    #[test]
    fn class_subtree_seeds() {
        let g = graph();
        let s = spec(
            vec![SeedSelector::ClassSubtree { class: "devices".into() }],
            RelationFilter::default(),
            Closure::SeedsOnly,
        );
        let view = derive_view(&g, &s, "t0").unwrap();
        let ids = view.component_ids();
        assert_eq!(ids, vec!["l2", "normal-ram", "ram", "secure-ram"]);
        // only the device-to-device connections survive
        assert_eq!(view.connections.len(), 2);
    }

    #[test]
    fn relation_filter_prunes_connections() {
        let g = graph();
        let s = spec(
            vec![SeedSelector::ClassSubtree { class: "devices".into() }],
            RelationFilter { families: vec![RelationFamily::Implementation], subkinds: vec![] },
            Closure::SeedsOnly,
        );
        let view = derive_view(&g, &s, "t0").unwrap();
        assert!(view
            .connections
            .iter()
            .all(|c| c.relation_kind == "shared"));
    }

    #[test]
    fn reachable_follows_direction() {
        let g = graph();
        let s = spec(
            vec![SeedSelector::NamePattern { pattern: "os".into() }],
            RelationFilter::default(),
            Closure::Reachable,
        );
        let view = derive_view(&g, &s, "t0").unwrap();
        let ids = view.component_ids();
        // os -> normal-ram, os -> monitor -> {normal-ram, secure-ram} -> ram
        assert!(ids.contains(&"secure-ram"));
        assert!(ids.contains(&"ram"));
        assert!(!ids.contains(&"l2"));
    }

    #[test]
    fn neighbors_one_hop() {
        let g = graph();
        let s = spec(
            vec![SeedSelector::NamePattern { pattern: "ram".into() }],
            RelationFilter::default(),
            Closure::Neighbors { k: 1 },
        );
        let view = derive_view(&g, &s, "t0").unwrap();
        let ids = view.component_ids();
        assert!(ids.contains(&"secure-ram"));
        assert!(ids.contains(&"l2"));
        assert!(!ids.contains(&"os"));
    }

    #[test]
    fn derive_is_idempotent() {
        let g = graph();
        let s = spec(
            vec![SeedSelector::ClassSubtree { class: "devices".into() }],
            RelationFilter::default(),
            Closure::SeedsOnly,
        );
        let once = derive_view(&g, &s, "t0").unwrap();
        let again = derive_view(&once.to_graph(), &s, "t0").unwrap();
        assert_eq!(once.component_ids(), again.component_ids());
        assert_eq!(once.connections.len(), again.connections.len());
    }

    #[test]
    fn monotone_filter_keeps_seeds() {
        let g = graph();
        let narrow = spec(
            vec![SeedSelector::ClassSubtree { class: "devices".into() }],
            RelationFilter { families: vec![RelationFamily::Control], subkinds: vec![] },
            Closure::SeedsOnly,
        );
        let wide = spec(
            vec![SeedSelector::ClassSubtree { class: "devices".into() }],
            RelationFilter {
                families: vec![RelationFamily::Control, RelationFamily::Implementation],
                subkinds: vec![],
            },
            Closure::SeedsOnly,
        );
        let narrow_view = derive_view(&g, &narrow, "t0").unwrap();
        let wide_view = derive_view(&g, &wide, "t0").unwrap();
        for id in narrow_view.component_ids() {
            assert!(wide_view.component_ids().contains(&id));
        }
    }

    #[test]
    fn empty_spec_rejected() {
        let g = graph();
        let s = spec(vec![], RelationFilter::default(), Closure::SeedsOnly);
        assert!(matches!(derive_view(&g, &s, "t0"), Err(ViewError::EmptySpec { .. })));
    }

    #[test]
    fn unknown_class_rejected() {
        let g = graph();
        let s = spec(
            vec![SeedSelector::ClassSubtree { class: "ghost".into() }],
            RelationFilter::default(),
            Closure::SeedsOnly,
        );
        assert!(matches!(derive_view(&g, &s, "t0"), Err(ViewError::UnknownClass { .. })));
    }

    #[test]
    fn cross_context_buckets() {
        let g = graph();
        let report = cross_context_report(&g, "secure").unwrap();
        assert_eq!(report.privileged_to_normal.len(), 1);
        assert_eq!(report.normal_to_privileged.len(), 1);
        assert_eq!(report.privileged_to_normal[0].from, "monitor");
        assert_eq!(report.normal_to_privileged[0].from, "os");
        assert_eq!(
            report.cross_edge_count(),
            report.privileged_to_normal.len() + report.normal_to_privileged.len()
        );
        // os->normal-ram intra; monitor->secure-ram intra; 2 unlabeled-side edges
        assert_eq!(report.intra_context_count, 2);
        assert_eq!(report.unlabeled_count, 2);
    }

    #[test]
    fn missing_privileged_context_errors() {
        let g = graph();
        assert!(matches!(
            cross_context_report(&g, "hypervisor"),
            Err(ViewError::ContextMissing { .. })
        ));
    }

    #[test]
    fn view_json_round_trip() {
        let g = graph();
        let s = spec(
            vec![SeedSelector::Context { context: "secure".into() }],
            RelationFilter::default(),
            Closure::SeedsOnly,
        );
        let view = derive_view(&g, &s, "2026-01-01T00:00:00Z").unwrap();
        let back = load_view(&view.to_json()).unwrap();
        assert_eq!(back, view);
    }

    #[test]
    fn glob_matching() {
        assert!(glob_match("boot-*", "boot-stage-1"));
        assert!(glob_match("*ram*", "secure-ram"));
        assert!(glob_match("r?m", "ram"));
        assert!(!glob_match("boot-*", "stage-boot"));
        assert!(glob_match("*", ""));
    }
}
