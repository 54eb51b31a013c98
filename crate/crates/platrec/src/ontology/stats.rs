use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::model::Ontology;
use super::validate::{require_valid, ValidationReport};

/// Structural statistics over the class hierarchy.
///
/// Depth counts from the roots: a root class sits at depth 1, and a class
/// with multiple parents takes the shortest path to any root.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyStats {
    /// Number of (child, parent) pairs.
    pub subclass_link_count: usize,
    /// Classes with at least one child.
    pub parent_class_count: usize,
    /// Classes with no children.
    pub leaf_count: usize,
    /// Shortest-path depth per class id, roots at 1.
    pub depth: BTreeMap<String, usize>,
}

impl HierarchyStats {
    pub fn depth_sum(&self) -> usize {
        self.depth.values().sum()
    }

    pub fn max_depth(&self) -> usize {
        self.depth.values().copied().max().unwrap_or(0)
    }
}

/// Computes hierarchy statistics for a valid ontology.
pub fn hierarchy_stats(ontology: &Ontology) -> Result<HierarchyStats, ValidationReport> {
    require_valid(ontology)?;

    let subclass_link_count = ontology.classes.iter().map(|c| c.parents.len()).sum();

    let parent_ids: BTreeSet<&str> = ontology
        .classes
        .iter()
        .flat_map(|c| c.parents.iter().map(String::as_str))
        .collect();
    let parent_class_count = parent_ids.len();
    let leaf_count = ontology.classes.len() - parent_class_count;

    // Multi-source BFS from the roots along child edges gives the shortest
    // path to any root directly.
    let mut children: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for class in &ontology.classes {
        children.entry(class.id.as_str()).or_default();
        for parent in &class.parents {
            children.entry(parent.as_str()).or_default().push(class.id.as_str());
        }
    }

    let mut depth: BTreeMap<String, usize> = BTreeMap::new();
    let mut queue: VecDeque<(&str, usize)> = ontology
        .classes
        .iter()
        .filter(|c| c.parents.is_empty())
        .map(|c| (c.id.as_str(), 1))
        .collect();
    while let Some((id, d)) = queue.pop_front() {
        if depth.contains_key(id) {
            continue;
        }
        depth.insert(id.to_string(), d);
        for child in &children[id] {
            if !depth.contains_key(*child) {
                queue.push_back((child, d + 1));
            }
        }
    }

    Ok(HierarchyStats {
        subclass_link_count,
        parent_class_count,
        leaf_count,
        depth,
    })
}
