//! Ontology quality metrics and the weighted total score.
//!
//! Eleven metrics describe an ontology's schema and knowledge base; eight
//! of them carry weights and add up to the total score. Tree balance and
//! class instance coverage have no agreed definition in the evaluation
//! framework this mirrors, so they are computed under documented local
//! definitions, flagged as nonconformant, and excluded from the score.
//! Average population is reported but never weighted.
//!
//! Internal values keep full precision; truncation to two decimals happens
//! only at display time (see [`display_value`]).

use serde::{Deserialize, Serialize};

use crate::ontology::{hierarchy_stats, validate_ontology, Ontology, ValidationReport};

/// Which inheritance-richness denominator to use.
///
/// The `Paper` variant divides subclass links by the number of parent
/// classes; `OntoqaStandard` divides by the total class count.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricsVariant {
    #[default]
    Paper,
    OntoqaStandard,
}

impl MetricsVariant {
    pub fn parse(s: &str) -> Option<MetricsVariant> {
        match s {
            "paper" => Some(MetricsVariant::Paper),
            "ontoqa-standard" => Some(MetricsVariant::OntoqaStandard),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            MetricsVariant::Paper => "paper",
            MetricsVariant::OntoqaStandard => "ontoqa-standard",
        }
    }
}

/// The eleven metric values plus the weighted total.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub class_count: usize,
    pub relationship_count: usize,
    /// Non-inheritance relationships as a percentage of all relationships.
    pub relationship_richness: f64,
    /// Subclass links per parent class (paper variant) or per class
    /// (standard variant).
    pub inheritance_richness: f64,
    /// Mean shortest-path depth, roots at depth 1.
    pub average_class_height: f64,
    /// Declared slots per class; the model declares none, so 0.
    pub attribute_richness: f64,
    /// Max leaf depth over min leaf depth. Nonconformant local definition;
    /// excluded from the score.
    pub tree_balance: f64,
    pub individual_count: usize,
    /// Percentage of classes that have at least one individual.
    pub class_richness: f64,
    /// Individuals per non-empty class. Nonconformant local definition;
    /// excluded from the score.
    pub class_instance_coverage: f64,
    /// Individuals per class. Reported, never weighted.
    pub average_population: f64,
    pub total_score: f64,
}

/// Static description of one metric row: id, human label, weight (None
/// when the metric is excluded from the score), and whether the local
/// definition is nonconformant.
pub struct MetricRow {
    pub id: &'static str,
    pub label: &'static str,
    pub weight: Option<f64>,
    pub nonconformant: bool,
}

/// The eleven metrics in presentation order.
pub const METRIC_ROWS: [MetricRow; 11] = [
    MetricRow { id: "class_count", label: "Class count", weight: Some(0.10), nonconformant: false },
    MetricRow { id: "relationship_count", label: "Relationship count", weight: Some(0.07), nonconformant: false },
    MetricRow { id: "relationship_richness", label: "Relationship richness", weight: Some(0.08), nonconformant: false },
    MetricRow { id: "inheritance_richness", label: "Inheritance richness", weight: Some(0.08), nonconformant: false },
    MetricRow { id: "average_class_height", label: "Average class height", weight: Some(0.06), nonconformant: false },
    MetricRow { id: "attribute_richness", label: "Attribute richness", weight: Some(0.03), nonconformant: false },
    MetricRow { id: "tree_balance", label: "Tree balance", weight: None, nonconformant: true },
    MetricRow { id: "individual_count", label: "Individual count", weight: Some(0.08), nonconformant: false },
    MetricRow { id: "class_richness", label: "Class richness", weight: Some(0.03), nonconformant: false },
    MetricRow { id: "class_instance_coverage", label: "Class instance coverage", weight: None, nonconformant: true },
    MetricRow { id: "average_population", label: "Average population", weight: None, nonconformant: false },
];

impl MetricsReport {
    /// Value of a metric by id. Panics on unknown ids; callers iterate
    /// [`METRIC_ROWS`].
    pub fn value(&self, id: &str) -> f64 {
        match id {
            "class_count" => self.class_count as f64,
            "relationship_count" => self.relationship_count as f64,
            "relationship_richness" => self.relationship_richness,
            "inheritance_richness" => self.inheritance_richness,
            "average_class_height" => self.average_class_height,
            "attribute_richness" => self.attribute_richness,
            "tree_balance" => self.tree_balance,
            "individual_count" => self.individual_count as f64,
            "class_richness" => self.class_richness,
            "class_instance_coverage" => self.class_instance_coverage,
            "average_population" => self.average_population,
            "total_score" => self.total_score,
            other => panic!("unknown metric id `{other}`"),
        }
    }
}

/// Weights for the eight scored metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightTable {
    pub class_count: f64,
    pub relationship_count: f64,
    pub relationship_richness: f64,
    pub inheritance_richness: f64,
    pub average_class_height: f64,
    pub attribute_richness: f64,
    pub individual_count: f64,
    pub class_richness: f64,
}

impl Default for WeightTable {
    fn default() -> Self {
        WeightTable {
            class_count: 0.10,
            relationship_count: 0.07,
            relationship_richness: 0.08,
            inheritance_richness: 0.08,
            average_class_height: 0.06,
            attribute_richness: 0.03,
            individual_count: 0.08,
            class_richness: 0.03,
        }
    }
}

/// Weighted sum over exactly the eight scored metrics.
pub fn weighted_score(report: &MetricsReport, weights: &WeightTable) -> f64 {
    weights.class_count * report.class_count as f64
        + weights.relationship_count * report.relationship_count as f64
        + weights.relationship_richness * report.relationship_richness
        + weights.inheritance_richness * report.inheritance_richness
        + weights.average_class_height * report.average_class_height
        + weights.attribute_richness * report.attribute_richness
        + weights.individual_count * report.individual_count as f64
        + weights.class_richness * report.class_richness
}

/// Computes all metrics for a valid ontology.
pub fn compute_metrics(
    ontology: &Ontology,
    variant: MetricsVariant,
) -> Result<MetricsReport, ValidationReport> {
    let report = validate_ontology(ontology);
    if !report.is_valid() {
        return Err(report);
    }
    let stats = hierarchy_stats(ontology)?;

    let class_count = ontology.classes.len();
    let relationship_count = ontology.relation_kinds.len();
    let subclass_links = stats.subclass_link_count;
    let individual_count = ontology.individuals.len();

    let ratio = |num: f64, den: f64| if den == 0.0 { 0.0 } else { num / den };

    let relationship_richness = ratio(
        100.0 * relationship_count as f64,
        (subclass_links + relationship_count) as f64,
    );
    let inheritance_richness = match variant {
        MetricsVariant::Paper => ratio(subclass_links as f64, stats.parent_class_count as f64),
        MetricsVariant::OntoqaStandard => ratio(subclass_links as f64, class_count as f64),
    };
    let average_class_height = ratio(stats.depth_sum() as f64, class_count as f64);

    // Non-empty classes: classes with at least one direct individual.
    let non_empty = {
        let mut ids: Vec<&str> = ontology.individuals.iter().map(|i| i.class_id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    };
    let class_richness = ratio(100.0 * non_empty as f64, class_count as f64);
    let class_instance_coverage = ratio(individual_count as f64, non_empty as f64);
    let average_population = ratio(individual_count as f64, class_count as f64);

    // Leaf depths for the local tree-balance definition.
    let tree_balance = {
        let leaf_depths: Vec<usize> = ontology
            .leaf_classes()
            .iter()
            .filter_map(|c| stats.depth.get(&c.id).copied())
            .collect();
        match (leaf_depths.iter().max(), leaf_depths.iter().min()) {
            (Some(&max), Some(&min)) if min > 0 => max as f64 / min as f64,
            _ => 0.0,
        }
    };

    let mut metrics = MetricsReport {
        class_count,
        relationship_count,
        relationship_richness,
        inheritance_richness,
        average_class_height,
        attribute_richness: 0.0,
        tree_balance,
        individual_count,
        class_richness,
        class_instance_coverage,
        average_population,
        total_score: 0.0,
    };
    metrics.total_score = weighted_score(&metrics, &WeightTable::default());
    Ok(metrics)
}

/// Side-by-side metric values for two ontologies.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub left_name: String,
    pub right_name: String,
    pub left: MetricsReport,
    pub right: MetricsReport,
    /// (metric id, left, right, left − right) per metric row.
    pub deltas: Vec<MetricDelta>,
    pub score_delta: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetricDelta {
    pub metric: String,
    pub left: f64,
    pub right: f64,
    pub delta: f64,
}

/// Computes metrics for both ontologies and their per-metric deltas
/// (left − right). Antisymmetric: swapping the arguments negates every
/// delta.
pub fn compare_ontologies(
    left: &Ontology,
    right: &Ontology,
    variant: MetricsVariant,
    weights: &WeightTable,
) -> Result<ComparisonReport, ValidationReport> {
    let left_metrics = compute_metrics(left, variant)?;
    let right_metrics = compute_metrics(right, variant)?;
    let left_score = weighted_score(&left_metrics, weights);
    let right_score = weighted_score(&right_metrics, weights);

    let deltas = METRIC_ROWS
        .iter()
        .map(|row| {
            let l = left_metrics.value(row.id);
            let r = right_metrics.value(row.id);
            MetricDelta {
                metric: row.id.to_string(),
                left: l,
                right: r,
                delta: l - r,
            }
        })
        .collect();

    Ok(ComparisonReport {
        left_name: display_name(left),
        right_name: display_name(right),
        left: left_metrics,
        right: right_metrics,
        deltas,
        score_delta: left_score - right_score,
    })
}

fn display_name(ontology: &Ontology) -> String {
    if ontology.name.is_empty() {
        "(unnamed)".to_string()
    } else {
        ontology.name.clone()
    }
}

/// Truncates toward zero at two decimals: 28.448 → 28.44, -20.305 → -20.30.
pub fn truncate2(value: f64) -> f64 {
    (value * 100.0).trunc() / 100.0
}

/// Presentation form of a metric value: truncate toward zero at two
/// decimals, print integers without a fraction (84 → "84", 28.448 →
/// "28.44").
pub fn display_value(value: f64) -> String {
    let cents = (value * 100.0).trunc() as i64;
    let whole = cents / 100;
    let frac = (cents % 100).abs();
    if frac == 0 {
        if cents < 0 && whole == 0 {
            "0".to_string()
        } else {
            whole.to_string()
        }
    } else if cents < 0 && whole == 0 {
        format!("-0.{frac:02}")
    } else {
        format!("{whole}.{frac:02}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::{Individual, OntologyClass};

    /// The published metric vector for the platform ontology row.
    fn platont_vector() -> MetricsReport {
        let mut m = MetricsReport {
            class_count: 84,
            relationship_count: 33,
            relationship_richness: 28.44,
            inheritance_richness: 4.15,
            average_class_height: 2.45,
            attribute_richness: 0.0,
            tree_balance: 1.94,
            individual_count: 107,
            class_richness: 71.42,
            class_instance_coverage: 1.63,
            average_population: 1.27,
            total_score: 0.0,
        };
        m.total_score = weighted_score(&m, &WeightTable::default());
        m
    }

    fn preuveneers_vector() -> MetricsReport {
        let mut m = MetricsReport {
            class_count: 17,
            relationship_count: 3,
            relationship_richness: 18.75,
            inheritance_richness: 3.25,
            average_class_height: 3.17,
            attribute_richness: 0.0,
            tree_balance: 1.3,
            individual_count: 0,
            class_richness: 0.0,
            class_instance_coverage: 0.0,
            average_population: 0.0,
            total_score: 0.0,
        };
        m.total_score = weighted_score(&m, &WeightTable::default());
        m
    }

    #[test]
    fn published_score_vectors() {
        let score = weighted_score(&platont_vector(), &WeightTable::default());
        assert!((score - 24.1668).abs() < 1e-9, "{score}");
        assert_eq!(display_value(score), "24.16");

        let score = weighted_score(&preuveneers_vector(), &WeightTable::default());
        assert!((score - 3.8602).abs() < 1e-9, "{score}");
        assert_eq!(display_value(score), "3.86");
    }

    #[test]
    fn zero_report_scores_zero() {
        assert_eq!(weighted_score(&MetricsReport::default(), &WeightTable::default()), 0.0);
    }

    #[test]
    fn score_is_linear() {
        let m = platont_vector();
        let scaled = MetricsReport {
            class_count: m.class_count * 3,
            relationship_count: m.relationship_count * 3,
            relationship_richness: m.relationship_richness * 3.0,
            inheritance_richness: m.inheritance_richness * 3.0,
            average_class_height: m.average_class_height * 3.0,
            attribute_richness: m.attribute_richness * 3.0,
            individual_count: m.individual_count * 3,
            class_richness: m.class_richness * 3.0,
            ..m.clone()
        };
        let w = WeightTable::default();
        let base = weighted_score(&m, &w);
        let tripled = weighted_score(&scaled, &w);
        assert!((tripled - 3.0 * base).abs() < 1e-9);
    }

    #[test]
    fn single_root_class() {
        let mut o = Ontology::new("tiny");
        o.classes.push(OntologyClass::new("root"));
        let m = compute_metrics(&o, MetricsVariant::Paper).unwrap();
        assert_eq!(m.class_count, 1);
        assert_eq!(m.relationship_count, 0);
        assert_eq!(m.relationship_richness, 0.0);
        assert_eq!(m.inheritance_richness, 0.0);
        assert_eq!(m.average_class_height, 1.0);
        assert_eq!(m.individual_count, 0);
        assert_eq!(m.class_richness, 0.0);
        assert_eq!(m.average_population, 0.0);
        assert_eq!(m.tree_balance, 1.0);
    }

    #[test]
    fn relationship_richness_formula() {
        // 33 relation kinds against 83 subclass links
        let reference = 100.0 * 33.0 / 116.0;
        assert_eq!(display_value(reference), "28.44");
        assert!((truncate2(reference) - 28.44).abs() < 1e-9);
    }

    #[test]
    fn variants_differ_on_denominator() {
        let mut o = Ontology::new("v");
        o.classes = vec![
            OntologyClass::new("a"),
            OntologyClass::with_parents("b", ["a"]),
            OntologyClass::with_parents("c", ["a"]),
        ];
        let paper = compute_metrics(&o, MetricsVariant::Paper).unwrap();
        let standard = compute_metrics(&o, MetricsVariant::OntoqaStandard).unwrap();
        assert_eq!(paper.inheritance_richness, 2.0); // 2 links / 1 parent
        assert!((standard.inheritance_richness - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn adding_individual_to_empty_class_raises_richness() {
        let mut o = Ontology::new("m");
        o.classes = vec![OntologyClass::new("a"), OntologyClass::new("b")];
        o.individuals = vec![Individual::new("x", "a")];
        let before = compute_metrics(&o, MetricsVariant::Paper).unwrap();
        o.individuals.push(Individual::new("y", "b"));
        let after = compute_metrics(&o, MetricsVariant::Paper).unwrap();
        assert!(after.class_richness > before.class_richness);
        assert!(after.average_population > before.average_population);
        assert_eq!(after.class_count, before.class_count);
    }

    #[test]
    fn compare_is_antisymmetric() {
        let mut a = Ontology::new("a");
        a.classes = vec![OntologyClass::new("r"), OntologyClass::with_parents("c", ["r"])];
        let mut b = Ontology::new("b");
        b.classes = vec![OntologyClass::new("r")];
        b.individuals = vec![Individual::new("i", "r")];

        let w = WeightTable::default();
        let ab = compare_ontologies(&a, &b, MetricsVariant::Paper, &w).unwrap();
        let ba = compare_ontologies(&b, &a, MetricsVariant::Paper, &w).unwrap();
        assert!((ab.score_delta + ba.score_delta).abs() < 1e-12);
        for (x, y) in ab.deltas.iter().zip(ba.deltas.iter()) {
            assert_eq!(x.metric, y.metric);
            assert!((x.delta + y.delta).abs() < 1e-12);
        }
        let aa = compare_ontologies(&a, &a, MetricsVariant::Paper, &w).unwrap();
        assert!(aa.deltas.iter().all(|d| d.delta == 0.0));
    }

    #[test]
    fn display_truncation() {
        assert_eq!(display_value(28.448275), "28.44");
        assert_eq!(display_value(24.1668), "24.16");
        assert_eq!(display_value(3.8602), "3.86");
        assert_eq!(display_value(84.0), "84");
        assert_eq!(display_value(0.0), "0");
        assert_eq!(display_value(-20.305), "-20.30");
        assert_eq!(display_value(-0.305), "-0.30");
        assert_eq!(display_value(2.452380), "2.45");
        assert_eq!(display_value(71.428571), "71.42");
        assert_eq!(display_value(1.2738), "1.27");
        assert_eq!(display_value(3.1764705), "3.17");
    }
}
