use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::normalize::normalize;

use super::model::Ontology;

/// Outcome of resolving a term against the ontology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum LookupResult {
    /// The term names an individual (by id or alias); carries the
    /// individual's class. `shadowed_class` is set when the same term also
    /// names a class — the individual wins, the tie is worth a warning.
    IndividualHit {
        individual_id: String,
        class_id: String,
        shadowed_class: Option<String>,
    },
    /// The term names a class directly.
    ClassHit { class_id: String },
    Miss,
}

impl LookupResult {
    /// The class this result maps to, if any.
    pub fn class_id(&self) -> Option<&str> {
        match self {
            LookupResult::IndividualHit { class_id, .. } | LookupResult::ClassHit { class_id } => {
                Some(class_id)
            }
            LookupResult::Miss => None,
        }
    }
}

/// Precomputed normalized-term index. Build once, query many times; the
/// mapper resolves every source entity through one of these.
#[derive(Debug, Clone)]
pub struct LookupIndex {
    /// normalized term -> (individual id, class id)
    individuals: BTreeMap<String, (String, String)>,
    /// normalized term -> class id
    classes: BTreeMap<String, String>,
}

impl LookupIndex {
    pub fn build(ontology: &Ontology) -> Self {
        let mut individuals = BTreeMap::new();
        for individual in &ontology.individuals {
            for key in Ontology::individual_keys(individual) {
                individuals
                    .entry(key)
                    .or_insert_with(|| (individual.id.clone(), individual.class_id.clone()));
            }
        }
        let mut classes = BTreeMap::new();
        for class in &ontology.classes {
            for key in Ontology::class_keys(class) {
                classes.entry(key).or_insert_with(|| class.id.clone());
            }
        }
        LookupIndex { individuals, classes }
    }

    pub fn lookup(&self, term: &str) -> LookupResult {
        let key = normalize(term);
        if key.is_empty() {
            return LookupResult::Miss;
        }
        if let Some((individual_id, class_id)) = self.individuals.get(&key) {
            return LookupResult::IndividualHit {
                individual_id: individual_id.clone(),
                class_id: class_id.clone(),
                shadowed_class: self.classes.get(&key).cloned(),
            };
        }
        if let Some(class_id) = self.classes.get(&key) {
            return LookupResult::ClassHit {
                class_id: class_id.clone(),
            };
        }
        LookupResult::Miss
    }
}

/// Resolves one term. Matching is insensitive to case and to runs of
/// spaces, hyphens, and underscores. When a term names both an individual
/// alias and a class, the individual wins (it is the more specific hit).
pub fn lookup(ontology: &Ontology, term: &str) -> LookupResult {
    LookupIndex::build(ontology).lookup(term)
}
