use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::model::{Ontology, RelationFamily};

/// Words the PLON grammar reserves; they cannot be used as ids.
pub(crate) const RESERVED_WORDS: &[&str] = &[
    "platont",
    "class",
    "extends",
    "relation",
    "family",
    "subkind",
    "undirected",
    "individual",
    "of",
    "alias",
    "control",
    "sequential",
    "implementation",
];

/// True when `id` matches the identifier grammar: a letter followed by
/// letters, digits, `-`, or `_`, and is not a reserved word.
pub(crate) fn is_valid_ident(id: &str) -> bool {
    let mut chars = id.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    if !first.is_alphabetic() {
        return false;
    }
    if !chars.all(|c| c.is_alphanumeric() || c == '-' || c == '_') {
        return false;
    }
    !RESERVED_WORDS.contains(&id)
}

/// One broken invariant, carrying the offending id(s).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Class, relation kind, or individual id declared more than once
    /// within its own kind.
    DuplicateId { entity: String, id: String },
    /// Id that does not fit the identifier grammar (or is a reserved word).
    InvalidIdentifier { entity: String, id: String },
    /// Class names a parent that is not declared.
    DanglingParent { class_id: String, parent_id: String },
    /// The parent graph contains a cycle through these classes.
    HierarchyCycle { class_ids: Vec<String> },
    /// A non-empty ontology must keep at least one root class.
    NoRootClass,
    /// Relation subkind outside its family's vocabulary.
    UnknownSubkind {
        relation_id: String,
        family: RelationFamily,
        subkind: String,
    },
    /// Individual placed under an undeclared class.
    DanglingIndividualClass { individual_id: String, class_id: String },
    /// Alias strings must be non-empty.
    EmptyAlias { individual_id: String },
    /// Two individuals answer to the same normalized form.
    AmbiguousIndividualKey { key: String, individual_ids: Vec<String> },
    /// Two classes answer to the same normalized form.
    AmbiguousClassKey { key: String, class_ids: Vec<String> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateId { entity, id } => {
                write!(f, "duplicate {entity} id `{id}`")
            }
            Violation::InvalidIdentifier { entity, id } => {
                write!(f, "invalid {entity} identifier `{id}`")
            }
            Violation::DanglingParent { class_id, parent_id } => {
                write!(f, "class `{class_id}` extends undeclared class `{parent_id}`")
            }
            Violation::HierarchyCycle { class_ids } => {
                write!(f, "class hierarchy cycle through {{{}}}", class_ids.join(", "))
            }
            Violation::NoRootClass => write!(f, "non-empty ontology has no root class"),
            Violation::UnknownSubkind { relation_id, family, subkind } => {
                write!(f, "relation `{relation_id}`: subkind `{subkind}` is not in the {family} vocabulary")
            }
            Violation::DanglingIndividualClass { individual_id, class_id } => {
                write!(f, "individual `{individual_id}` of undeclared class `{class_id}`")
            }
            Violation::EmptyAlias { individual_id } => {
                write!(f, "individual `{individual_id}` has an empty alias")
            }
            Violation::AmbiguousIndividualKey { key, individual_ids } => {
                write!(f, "individuals {{{}}} all answer to `{key}`", individual_ids.join(", "))
            }
            Violation::AmbiguousClassKey { key, class_ids } => {
                write!(f, "classes {{{}}} all answer to `{key}`", class_ids.join(", "))
            }
        }
    }
}

/// The outcome of validating an ontology. Empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every invariant of the ontology model and reports each breach.
///
/// Sound and complete with respect to the model's stated invariants: the
/// report is empty exactly when every invariant holds.
pub fn validate_ontology(ontology: &Ontology) -> ValidationReport {
    let mut violations = Vec::new();

    check_unique_ids(ontology, &mut violations);
    check_identifiers(ontology, &mut violations);
    check_parents(ontology, &mut violations);
    check_cycles(ontology, &mut violations);
    check_roots(ontology, &mut violations);
    check_relation_kinds(ontology, &mut violations);
    check_individuals(ontology, &mut violations);
    check_lookup_keys(ontology, &mut violations);

    ValidationReport { violations }
}

fn check_unique_ids(ontology: &Ontology, out: &mut Vec<Violation>) {
    for (entity, ids) in [
        ("class", ontology.classes.iter().map(|c| c.id.as_str()).collect::<Vec<_>>()),
        ("relation", ontology.relation_kinds.iter().map(|r| r.id.as_str()).collect()),
        ("individual", ontology.individuals.iter().map(|i| i.id.as_str()).collect()),
    ] {
        let mut seen = BTreeSet::new();
        let mut reported = BTreeSet::new();
        for id in ids {
            if !seen.insert(id) && reported.insert(id) {
                out.push(Violation::DuplicateId {
                    entity: entity.to_string(),
                    id: id.to_string(),
                });
            }
        }
    }
}

fn check_identifiers(ontology: &Ontology, out: &mut Vec<Violation>) {
    let class_ids = ontology.classes.iter().map(|c| ("class", c.id.as_str()));
    let relation_ids = ontology.relation_kinds.iter().map(|r| ("relation", r.id.as_str()));
    let individual_ids = ontology.individuals.iter().map(|i| ("individual", i.id.as_str()));
    for (entity, id) in class_ids.chain(relation_ids).chain(individual_ids) {
        if !is_valid_ident(id) {
            out.push(Violation::InvalidIdentifier {
                entity: entity.to_string(),
                id: id.to_string(),
            });
        }
    }
}

fn check_parents(ontology: &Ontology, out: &mut Vec<Violation>) {
    let declared: BTreeSet<&str> = ontology.classes.iter().map(|c| c.id.as_str()).collect();
    for class in &ontology.classes {
        for parent in &class.parents {
            if !declared.contains(parent.as_str()) {
                out.push(Violation::DanglingParent {
                    class_id: class.id.clone(),
                    parent_id: parent.clone(),
                });
            }
        }
    }
}

/// Depth-first search over parent edges; every strongly-cyclic group is
/// reported once with its members sorted.
fn check_cycles(ontology: &Ontology, out: &mut Vec<Violation>) {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        White,
        Gray,
        Black,
    }

    let ids: Vec<&str> = ontology.classes.iter().map(|c| c.id.as_str()).collect();
    let index: BTreeMap<&str, usize> = ids.iter().enumerate().map(|(i, id)| (*id, i)).collect();
    let mut marks = vec![Mark::White; ids.len()];
    let mut cycles: BTreeSet<Vec<String>> = BTreeSet::new();

    fn visit(
        node: usize,
        ontology: &Ontology,
        index: &BTreeMap<&str, usize>,
        marks: &mut [Mark],
        stack: &mut Vec<usize>,
        cycles: &mut BTreeSet<Vec<String>>,
    ) {
        marks[node] = Mark::Gray;
        stack.push(node);
        for parent in &ontology.classes[node].parents {
            let Some(&next) = index.get(parent.as_str()) else {
                continue;
            };
            match marks[next] {
                Mark::White => visit(next, ontology, index, marks, stack, cycles),
                Mark::Gray => {
                    let start = stack.iter().position(|&n| n == next).unwrap_or(0);
                    let mut members: Vec<String> = stack[start..]
                        .iter()
                        .map(|&n| ontology.classes[n].id.clone())
                        .collect();
                    members.sort_unstable();
                    members.dedup();
                    cycles.insert(members);
                }
                Mark::Black => {}
            }
        }
        stack.pop();
        marks[node] = Mark::Black;
    }

    for node in 0..ids.len() {
        if marks[node] == Mark::White {
            let mut stack = Vec::new();
            visit(node, ontology, &index, &mut marks, &mut stack, &mut cycles);
        }
    }

    for class_ids in cycles {
        out.push(Violation::HierarchyCycle { class_ids });
    }
}

fn check_roots(ontology: &Ontology, out: &mut Vec<Violation>) {
    if !ontology.classes.is_empty() && ontology.classes.iter().all(|c| !c.parents.is_empty()) {
        out.push(Violation::NoRootClass);
    }
}

fn check_relation_kinds(ontology: &Ontology, out: &mut Vec<Violation>) {
    for kind in &ontology.relation_kinds {
        if !kind.family.base_subkinds().contains(&kind.subkind.as_str()) {
            out.push(Violation::UnknownSubkind {
                relation_id: kind.id.clone(),
                family: kind.family,
                subkind: kind.subkind.clone(),
            });
        }
    }
}

fn check_individuals(ontology: &Ontology, out: &mut Vec<Violation>) {
    let declared: BTreeSet<&str> = ontology.classes.iter().map(|c| c.id.as_str()).collect();
    for individual in &ontology.individuals {
        if !declared.contains(individual.class_id.as_str()) {
            out.push(Violation::DanglingIndividualClass {
                individual_id: individual.id.clone(),
                class_id: individual.class_id.clone(),
            });
        }
        if individual.aliases.iter().any(|a| a.trim().is_empty()) {
            out.push(Violation::EmptyAlias {
                individual_id: individual.id.clone(),
            });
        }
    }
}

/// Normalized (id ∪ aliases) forms must be unique across all individuals,
/// and normalized (id ∪ name) forms unique across all classes, so lookup
/// stays deterministic. An individual key shadowing a class key is allowed
/// (lookup resolves the tie in the individual's favor with a warning).
fn check_lookup_keys(ontology: &Ontology, out: &mut Vec<Violation>) {
    let mut individual_keys: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for individual in &ontology.individuals {
        for key in Ontology::individual_keys(individual) {
            individual_keys
                .entry(key)
                .or_default()
                .insert(individual.id.clone());
        }
    }
    for (key, ids) in individual_keys {
        if ids.len() > 1 {
            out.push(Violation::AmbiguousIndividualKey {
                key,
                individual_ids: ids.into_iter().collect(),
            });
        }
    }

    let mut class_keys: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for class in &ontology.classes {
        for key in Ontology::class_keys(class) {
            class_keys.entry(key).or_default().insert(class.id.clone());
        }
    }
    for (key, ids) in class_keys {
        if ids.len() > 1 {
            out.push(Violation::AmbiguousClassKey {
                key,
                class_ids: ids.into_iter().collect(),
            });
        }
    }
}

/// Convenience: validate and wrap an invalid ontology in an error.
pub(crate) fn require_valid(ontology: &Ontology) -> Result<(), ValidationReport> {
    let report = validate_ontology(ontology);
    if report.is_valid() {
        Ok(())
    } else {
        Err(report)
    }
}
