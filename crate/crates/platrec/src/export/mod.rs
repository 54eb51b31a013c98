//! Deterministic renderings of graphs, views, and reports: DOT for quick
//! visualization, GraphML for tool interchange, and plain-text analytical
//! reports. Every renderer is a pure function of its input; equal inputs
//! produce byte-identical output.

mod dot;
mod graphml;
mod report;

use serde::{Deserialize, Serialize};

pub use dot::export_dot;
pub use graphml::export_graphml;
pub use report::{
    render_comparison, render_cross_context, render_mapping, render_metrics, render_report,
    ReportInput,
};

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Dot,
    Graphml,
    Report,
}

impl ExportFormat {
    pub fn parse(s: &str) -> Option<ExportFormat> {
        match s {
            "dot" => Some(ExportFormat::Dot),
            "graphml" => Some(ExportFormat::Graphml),
            "report" => Some(ExportFormat::Report),
            _ => None,
        }
    }
}

/// How to group nodes in graph outputs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClusterBy {
    /// Group by execution-context label; unlabeled nodes stay ungrouped.
    Context,
    /// Group by the root super class of each component's class.
    ClassSubtree,
    #[default]
    None,
}

impl ClusterBy {
    pub fn parse(s: &str) -> Option<ClusterBy> {
        match s {
            "context" => Some(ClusterBy::Context),
            "class-subtree" => Some(ClusterBy::ClassSubtree),
            "none" => Some(ClusterBy::None),
            _ => None,
        }
    }
}

/// Rendering options shared by the graph exporters.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RenderOptions {
    pub format: ExportFormat,
    pub cluster_by: ClusterBy,
    pub include_legend: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            format: ExportFormat::Dot,
            cluster_by: ClusterBy::None,
            include_legend: false,
        }
    }
}
