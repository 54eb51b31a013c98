use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::normalize::normalize;

/// The single ontology format version this toolkit reads and writes.
pub const PLON_VERSION: &str = "1";

/// A concept node in the ontology's class hierarchy.
///
/// `parents` empty means the class is a root. Multiple parents are allowed;
/// the hierarchy as a whole must stay acyclic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OntologyClass {
    pub id: String,
    pub name: String,
    #[serde(default)]
    pub parents: Vec<String>,
    #[serde(default)]
    pub description: String,
}

impl OntologyClass {
    pub fn new(id: impl Into<String>) -> Self {
        let id = id.into();
        OntologyClass {
            name: id.clone(),
            id,
            parents: Vec::new(),
            description: String::new(),
        }
    }

    pub fn with_parents<I, S>(id: impl Into<String>, parents: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut class = Self::new(id);
        class.parents = parents.into_iter().map(Into::into).collect();
        class
    }
}

/// The three relation families components can be connected with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationFamily {
    /// One component has some control over another: configuration,
    /// debugging, modification, execution redirection, or physical
    /// man-in-the-middle positioning.
    Control,
    /// One component touches another's data before or after it: load,
    /// initialization, or interpreting instructions on its behalf.
    Sequential,
    /// Relations arising from how the platform is built: resources shared
    /// or partitioned, code stored, loaded, and executed.
    Implementation,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 3] = [
        RelationFamily::Control,
        RelationFamily::Sequential,
        RelationFamily::Implementation,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            RelationFamily::Control => "control",
            RelationFamily::Sequential => "sequential",
            RelationFamily::Implementation => "implementation",
        }
    }

    /// The subkind vocabulary each family ships with. Extensible only by
    /// patching the vocabulary constant is not supported; new subkinds come
    /// in through ontology patches that declare relation kinds reusing the
    /// base vocabulary.
    pub fn base_subkinds(&self) -> &'static [&'static str] {
        match self {
            RelationFamily::Control => &[
                "configuration",
                "debugging",
                "modification",
                "execution-redirection",
                "physical-mitm",
            ],
            RelationFamily::Sequential => &["load", "initialization", "interpreting"],
            RelationFamily::Implementation => {
                &["shared", "partitioned", "stored", "loaded", "executed"]
            }
        }
    }

    pub fn parse(s: &str) -> Option<RelationFamily> {
        match s {
            "control" => Some(RelationFamily::Control),
            "sequential" => Some(RelationFamily::Sequential),
            "implementation" => Some(RelationFamily::Implementation),
            _ => None,
        }
    }
}

impl std::fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A declared kind of relation between components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationKind {
    pub id: String,
    pub family: RelationFamily,
    pub subkind: String,
    #[serde(default = "default_directed")]
    pub directed: bool,
}

fn default_directed() -> bool {
    true
}

impl RelationKind {
    pub fn new(id: impl Into<String>, family: RelationFamily, subkind: impl Into<String>) -> Self {
        RelationKind {
            id: id.into(),
            family,
            subkind: subkind.into(),
            directed: true,
        }
    }

    pub fn undirected(mut self) -> Self {
        self.directed = false;
        self
    }
}

/// A concrete named instance of an ontology class (e.g. XEN under
/// virtual-machine-monitor).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Individual {
    pub id: String,
    pub class_id: String,
    #[serde(default)]
    pub aliases: Vec<String>,
}

impl Individual {
    pub fn new(id: impl Into<String>, class_id: impl Into<String>) -> Self {
        Individual {
            id: id.into(),
            class_id: class_id.into(),
            aliases: Vec::new(),
        }
    }

    pub fn with_aliases<I, S>(mut self, aliases: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.aliases = aliases.into_iter().map(Into::into).collect();
        self
    }
}

/// How a component is realized on the platform.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum Implementation {
    Hardware,
    Software,
    Firmware,
    #[default]
    Unknown,
}

/// Whether a component's sources are published.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum SourceStatus {
    Closed,
    Open,
    Hybrid,
    #[default]
    Unknown,
}

/// Whether the platform treats a component as trusted.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum TrustStatus {
    Trusted,
    Untrusted,
    #[default]
    Unknown,
}

/// The per-component annotation triple. Every field defaults to `unknown`;
/// these are annotations on reconstructed components, not ontology slots,
/// so they do not count toward attribute richness.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentAttributes {
    #[serde(default)]
    pub implementation: Implementation,
    #[serde(default)]
    pub source_status: SourceStatus,
    #[serde(default)]
    pub trust_status: TrustStatus,
}

impl Implementation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Implementation::Hardware => "hardware",
            Implementation::Software => "software",
            Implementation::Firmware => "firmware",
            Implementation::Unknown => "unknown",
        }
    }
}

impl SourceStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SourceStatus::Closed => "closed",
            SourceStatus::Open => "open",
            SourceStatus::Hybrid => "hybrid",
            SourceStatus::Unknown => "unknown",
        }
    }
}

impl TrustStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            TrustStatus::Trusted => "trusted",
            TrustStatus::Untrusted => "untrusted",
            TrustStatus::Unknown => "unknown",
        }
    }
}

/// The whole ontology: classes, declared relation kinds, and individuals.
///
/// Immutable value after construction. Operations never mutate an ontology
/// in place; patching returns a new value.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ontology {
    pub name: String,
    #[serde(default = "default_version")]
    pub version: String,
    #[serde(default)]
    pub classes: Vec<OntologyClass>,
    #[serde(default)]
    pub relation_kinds: Vec<RelationKind>,
    #[serde(default)]
    pub individuals: Vec<Individual>,
}

fn default_version() -> String {
    PLON_VERSION.to_string()
}

impl Ontology {
    pub fn new(name: impl Into<String>) -> Self {
        Ontology {
            name: name.into(),
            version: PLON_VERSION.to_string(),
            ..Ontology::default()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty() && self.relation_kinds.is_empty() && self.individuals.is_empty()
    }

    pub fn class(&self, id: &str) -> Option<&OntologyClass> {
        self.classes.iter().find(|c| c.id == id)
    }

    pub fn relation_kind(&self, id: &str) -> Option<&RelationKind> {
        self.relation_kinds.iter().find(|r| r.id == id)
    }

    pub fn individual(&self, id: &str) -> Option<&Individual> {
        self.individuals.iter().find(|i| i.id == id)
    }

    /// Root classes: classes with no parents, sorted by id.
    pub fn roots(&self) -> Vec<&OntologyClass> {
        let mut roots: Vec<_> = self.classes.iter().filter(|c| c.parents.is_empty()).collect();
        roots.sort_by(|a, b| a.id.cmp(&b.id));
        roots
    }

    /// Ids of the direct children of `class_id`, sorted.
    pub fn children_of(&self, class_id: &str) -> Vec<&str> {
        let mut out: Vec<&str> = self
            .classes
            .iter()
            .filter(|c| c.parents.iter().any(|p| p == class_id))
            .map(|c| c.id.as_str())
            .collect();
        out.sort_unstable();
        out
    }

    /// Every class id in the subtree rooted at `class_id`, including the
    /// root itself. Empty when the class does not exist.
    pub fn subtree(&self, class_id: &str) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        if self.class(class_id).is_none() {
            return out;
        }
        let mut stack = vec![class_id.to_string()];
        while let Some(id) = stack.pop() {
            if out.insert(id.clone()) {
                for child in self.children_of(&id) {
                    stack.push(child.to_string());
                }
            }
        }
        out
    }

    /// Leaf classes (no children), sorted by id. Internal classes are the
    /// hierarchy's grouping concepts; leaves are the concrete component
    /// concepts the coverage scan cares about.
    pub fn leaf_classes(&self) -> Vec<&OntologyClass> {
        let parents: BTreeSet<&str> = self
            .classes
            .iter()
            .flat_map(|c| c.parents.iter().map(String::as_str))
            .collect();
        let mut leaves: Vec<_> = self
            .classes
            .iter()
            .filter(|c| !parents.contains(c.id.as_str()))
            .collect();
        leaves.sort_by(|a, b| a.id.cmp(&b.id));
        leaves
    }

    /// Puts classes, relation kinds, individuals, parent lists, and alias
    /// lists into the canonical order used by serialization and hashing.
    pub fn canonicalize(&mut self) {
        self.classes.sort_by(|a, b| a.id.cmp(&b.id));
        self.relation_kinds.sort_by(|a, b| a.id.cmp(&b.id));
        self.individuals.sort_by(|a, b| a.id.cmp(&b.id));
        for class in &mut self.classes {
            class.parents.sort_unstable();
        }
        for individual in &mut self.individuals {
            individual.aliases.sort_unstable();
        }
    }

    /// Canonical form of this ontology (sorted declarations).
    pub fn canonical(&self) -> Ontology {
        let mut out = self.clone();
        out.canonicalize();
        out
    }

    /// Finds the single relation kind with the given family and subkind.
    /// When several are declared, the lexicographically smallest id wins.
    pub fn relation_kind_for(&self, family: RelationFamily, subkind: &str) -> Option<&RelationKind> {
        self.relation_kinds
            .iter()
            .filter(|r| r.family == family && r.subkind == subkind)
            .min_by(|a, b| a.id.cmp(&b.id))
    }

    /// Normalized lookup keys a class answers to: its id and its name.
    pub(crate) fn class_keys(class: &OntologyClass) -> BTreeSet<String> {
        let mut keys = BTreeSet::new();
        keys.insert(normalize(&class.id));
        keys.insert(normalize(&class.name));
        keys.remove("");
        keys
    }

    /// Normalized lookup keys an individual answers to: its id and aliases.
    pub(crate) fn individual_keys(individual: &Individual) -> BTreeSet<String> {
        let mut keys = BTreeSet::new();
        keys.insert(normalize(&individual.id));
        for alias in &individual.aliases {
            keys.insert(normalize(alias));
        }
        keys.remove("");
        keys
    }
}
