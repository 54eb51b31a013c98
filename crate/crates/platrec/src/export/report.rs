use std::fmt::Write;

use crate::mapper::MappingReport;
use crate::metrics::{display_value, ComparisonReport, MetricsReport, METRIC_ROWS};
use crate::view::CrossContextReport;

/// Anything the text renderer knows how to report on.
pub enum ReportInput<'a> {
    Metrics { title: &'a str, report: &'a MetricsReport },
    Comparison(&'a ComparisonReport),
    Mapping(&'a MappingReport),
    CrossContext(&'a CrossContextReport),
}

/// Renders any report as plain UTF-8 text with a stable section order:
/// summary, per-item detail, provenance.
pub fn render_report(input: &ReportInput<'_>) -> String {
    match input {
        ReportInput::Metrics { title, report } => render_metrics(title, report),
        ReportInput::Comparison(report) => render_comparison(report),
        ReportInput::Mapping(report) => render_mapping(report),
        ReportInput::CrossContext(report) => render_cross_context(report),
    }
}

fn table_row(out: &mut String, columns: &[&str], widths: &[usize]) {
    let mut parts = Vec::new();
    for (value, width) in columns.iter().zip(widths.iter()) {
        parts.push(format!("{value:<width$}"));
    }
    let line = parts.join(" | ");
    out.push_str(line.trim_end());
    out.push('\n');
}

/// Metric table for one ontology, mirroring the evaluation table layout:
/// metric, weight, value; starred rows use local nonconformant definitions
/// and never enter the score.
pub fn render_metrics(title: &str, report: &MetricsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Ontology metrics: {title}");
    out.push('\n');
    let widths = [26, 6, 10];
    table_row(&mut out, &["Metric", "Weight", "Value"], &widths);
    table_row(&mut out, &["------", "------", "-----"], &widths);
    for row in &METRIC_ROWS {
        let label = if row.nonconformant {
            format!("{} *", row.label)
        } else {
            row.label.to_string()
        };
        let weight = row.weight.map(|w| format!("{w:.2}")).unwrap_or_default();
        let value = display_value(report.value(row.id));
        table_row(&mut out, &[&label, &weight, &value], &widths);
    }
    table_row(
        &mut out,
        &["Total score", "", &display_value(report.total_score)],
        &widths,
    );
    out.push('\n');
    out.push_str("* nonconformant local definition; excluded from the total score\n");
    out
}

/// Side-by-side comparison table. The last line carries both total scores.
pub fn render_comparison(report: &ComparisonReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Ontology comparison: {} vs {}",
        report.left_name, report.right_name
    );
    out.push('\n');
    let widths = [26, 10, 10, 10];
    table_row(
        &mut out,
        &["Metric", &report.left_name, &report.right_name, "Delta"],
        &widths,
    );
    table_row(&mut out, &["------", "----", "-----", "-----"], &widths);
    for delta in &report.deltas {
        let row = METRIC_ROWS
            .iter()
            .find(|r| r.id == delta.metric)
            .map(|r| r.label)
            .unwrap_or(delta.metric.as_str());
        table_row(
            &mut out,
            &[
                row,
                &display_value(delta.left),
                &display_value(delta.right),
                &display_value(delta.delta),
            ],
            &widths,
        );
    }
    let _ = writeln!(out, "Score delta: {}", display_value(report.score_delta));
    table_row(
        &mut out,
        &[
            "Total score",
            &display_value(report.left.total_score),
            &display_value(report.right.total_score),
        ],
        &widths[..3],
    );
    out
}

/// Mapping run report: coverage summary, per-entity outcomes, patch
/// drafts, provenance.
pub fn render_mapping(report: &MappingReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Mapping report: {}", report.platform_name);
    out.push('\n');
    let component_count: usize = report.mapped.iter().map(|m| m.components.len()).sum();
    let _ = writeln!(
        out,
        "Summary: {} entities mapped to {} components, {} unmapped, {} ontology classes overlooked",
        report.mapped.len(),
        component_count,
        report.unmapped.len(),
        report.overlooked_classes.len()
    );
    out.push('\n');

    out.push_str("Mapped entities:\n");
    if report.mapped.is_empty() {
        out.push_str("  (none)\n");
    }
    for entry in &report.mapped {
        let mechanism = match entry.mechanism {
            crate::mapper::MappingMechanism::ByIndividual => "individual lookup",
            crate::mapper::MappingMechanism::ByDirective => "directive",
        };
        let _ = writeln!(
            out,
            "  {} -> {} [{}]",
            entry.entity,
            entry.components.join(", "),
            mechanism
        );
    }
    out.push('\n');

    out.push_str("Unmapped entities:\n");
    if report.unmapped.is_empty() {
        out.push_str("  (none)\n");
    }
    for entity in &report.unmapped {
        let _ = writeln!(out, "  {entity}");
    }
    out.push('\n');

    out.push_str("Probably overlooked classes:\n");
    if report.overlooked_classes.is_empty() {
        out.push_str("  (none)\n");
    }
    for class in &report.overlooked_classes {
        let _ = writeln!(out, "  {class}");
    }
    out.push('\n');

    out.push_str("Patch suggestions (drafts, never auto-applied):\n");
    if report.patch_suggestions.is_empty() {
        out.push_str("  (none)\n");
    }
    for addition in &report.patch_suggestions.additions {
        let _ = writeln!(out, "  add {} — {}", addition.id(), addition.rationale());
    }
    out.push('\n');

    out.push_str("Provenance:\n");
    let _ = writeln!(
        out,
        "  ontology: {} v{} ({})",
        report.ontology.name, report.ontology.version, report.ontology.content_hash
    );
    let _ = writeln!(out, "  source view hash: {}", report.provenance.source_view_hash);
    let _ = writeln!(out, "  directives hash: {}", report.provenance.directives_hash);
    out
}

/// Cross-context analysis report: both direction buckets with edge
/// details, then the intra/unlabeled counts and provenance.
pub fn render_cross_context(report: &CrossContextReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Cross-context report: {} (privileged context: {})",
        report.platform_name, report.privileged_context
    );
    out.push('\n');
    let _ = writeln!(
        out,
        "Summary: {} cross edges = {} privileged->normal + {} normal->privileged; {} intra-context, {} touching unlabeled components",
        report.cross_edge_count(),
        report.privileged_to_normal.len(),
        report.normal_to_privileged.len(),
        report.intra_context_count,
        report.unlabeled_count
    );
    out.push('\n');

    for (title, bucket) in [
        ("Privileged -> normal edges:", &report.privileged_to_normal),
        ("Normal -> privileged edges:", &report.normal_to_privileged),
    ] {
        out.push_str(title);
        out.push('\n');
        if bucket.is_empty() {
            out.push_str("  (none)\n");
        }
        for edge in bucket {
            let _ = writeln!(
                out,
                "  {} ({}) -[{}/{}]-> {} ({}){}",
                edge.from,
                edge.from_context,
                edge.family,
                edge.subkind,
                edge.to,
                edge.to_context,
                if edge.note.is_empty() {
                    String::new()
                } else {
                    format!(" — {}", edge.note)
                }
            );
        }
        out.push('\n');
    }

    out.push_str("Provenance:\n");
    let _ = writeln!(out, "  graph hash: {}", report.graph_hash);
    let _ = writeln!(
        out,
        "  ontology: {} v{} ({})",
        report.ontology.name, report.ontology.version, report.ontology.content_hash
    );
    out
}
