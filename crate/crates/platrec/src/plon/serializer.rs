use std::fmt::Write;

use crate::ontology::{Ontology, PLON_VERSION};

/// Serializes an ontology to canonical PLON text.
///
/// Statements come out sorted by kind (classes, relations, individuals)
/// and id; parent and alias lists are sorted too. The emitted document
/// uses LF line endings and ends with a newline. Equal ontologies always
/// serialize to identical bytes.
pub fn serialize_plon(ontology: &Ontology) -> String {
    let canonical = ontology.canonical();
    let mut out = String::new();
    let _ = writeln!(out, "platont {PLON_VERSION}");

    for class in &canonical.classes {
        let _ = write!(out, "class {}", class.id);
        if !class.parents.is_empty() {
            let _ = write!(out, " extends {}", class.parents.join(", "));
        }
        out.push('\n');
    }

    for kind in &canonical.relation_kinds {
        let _ = write!(
            out,
            "relation {} family {} subkind {}",
            kind.id, kind.family, kind.subkind
        );
        if !kind.directed {
            out.push_str(" undirected");
        }
        out.push('\n');
    }

    for individual in &canonical.individuals {
        let _ = write!(out, "individual {} of {}", individual.id, individual.class_id);
        if !individual.aliases.is_empty() {
            let quoted: Vec<String> = individual.aliases.iter().map(|a| quote(a)).collect();
            let _ = write!(out, " alias {}", quoted.join(", "));
        }
        out.push('\n');
    }

    out
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            other => out.push(other),
        }
    }
    out.push('"');
    out
}
