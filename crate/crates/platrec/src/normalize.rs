//! Term normalization shared by ontology lookup, source views, and the mapper.
//!
//! A single normal form keeps matching deterministic across the different
//! spellings found in vendor documentation ("TZA  RAM", "tza-ram",
//! "Tza_Ram" all normalize to `tza-ram`).

/// Normalizes a term: Unicode case-fold (lowercase), trim, and collapse
/// every run of whitespace, hyphens, and underscores into a single hyphen.
pub fn normalize(term: &str) -> String {
    let mut out = String::with_capacity(term.len());
    let mut pending_sep = false;
    for ch in term.trim().chars() {
        if ch.is_whitespace() || ch == '-' || ch == '_' {
            pending_sep = !out.is_empty();
            continue;
        }
        if pending_sep {
            out.push('-');
            pending_sep = false;
        }
        for lower in ch.to_lowercase() {
            out.push(lower);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::normalize;

    #[test]
    fn case_folds_and_trims() {
        assert_eq!(normalize("XEN"), "xen");
        assert_eq!(normalize("xen "), "xen");
        assert_eq!(normalize("  Mach\t"), "mach");
    }

    #[test]
    fn collapses_separator_runs() {
        assert_eq!(normalize("TZA  RAM"), "tza-ram");
        assert_eq!(normalize("tza - _ ram"), "tza-ram");
        assert_eq!(normalize("a__b--c d"), "a-b-c-d");
    }

    #[test]
    fn trailing_separators_dropped() {
        assert_eq!(normalize("-a-"), "a");
        assert_eq!(normalize("___"), "");
        assert_eq!(normalize(""), "");
    }

    #[test]
    fn idempotent() {
        for term in ["TZA  RAM", "BCM2835-subblock-X", "Große Straße", "a_b c-d"] {
            let once = normalize(term);
            assert_eq!(normalize(&once), once);
        }
    }
}
