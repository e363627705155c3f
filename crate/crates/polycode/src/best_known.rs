//! Bundled snapshot of best-known minimum distances.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use polycode_core::CodeParams;
use serde::{Deserialize, Serialize};

const DATA: &str = include_str!("../data/best_known.json");

#[derive(Clone, Debug, Deserialize)]
struct Entry {
    q: u32,
    n: usize,
    k: usize,
    d: usize,
    #[allow(dead_code)]
    source: String,
}

#[derive(Deserialize)]
struct Table {
    entries: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Better,
    Equal,
    Worse,
    Unknown,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Better => "better",
            Comparison::Equal => "equal",
            Comparison::Worse => "worse",
            Comparison::Unknown => "unknown",
        })
    }
}

fn table() -> &'static HashMap<(u32, usize, usize), usize> {
    static TABLE: OnceLock<HashMap<(u32, usize, usize), usize>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let t: Table = serde_json::from_str(DATA).expect("bundled table is valid JSON");
        t.entries.into_iter().map(|e| ((e.q, e.n, e.k), e.d)).collect()
    })
}

/// Best known `d` for `(q, n, k)`. Dimensions `n`, `1` and `n - 1` are
/// settled by the Singleton bound; everything else comes from the bundled
/// table.
pub fn best_known_distance(q: u32, n: usize, k: usize) -> Option<usize> {
    match k {
        0 => None,
        k if k == n => Some(1),
        1 => Some(n),
        k if k + 1 == n => Some(2),
        _ => table().get(&(q, n, k)).copied(),
    }
}

pub fn best_known_compare(params: &CodeParams) -> Comparison {
    match best_known_distance(params.q, params.n, params.k) {
        None => Comparison::Unknown,
        Some(d) if params.d > d => Comparison::Better,
        Some(d) if params.d == d => Comparison::Equal,
        Some(_) => Comparison::Worse,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, k: usize, d: usize, q: u32) -> CodeParams {
        CodeParams { n, k, d, q }
    }

    #[test]
    fn lookups() {
        assert_eq!(best_known_compare(&p(27, 21, 4, 4)), Comparison::Equal);
        assert_eq!(best_known_compare(&p(27, 21, 3, 4)), Comparison::Worse);
        assert_eq!(best_known_compare(&p(12, 12, 1, 3)), Comparison::Equal);
        assert_eq!(best_known_compare(&p(12, 1, 12, 3)), Comparison::Equal);
        assert_eq!(best_known_compare(&p(12, 11, 2, 7)), Comparison::Equal);
        assert_eq!(best_known_compare(&p(40, 20, 9, 3)), Comparison::Unknown);
    }

    #[test]
    fn bundled_entries_respect_bounds() {
        for (&(q, n, k), &d) in table() {
            let c = p(n, k, d, q);
            assert!(c.satisfies_singleton() && c.satisfies_griesmer(), "{c}");
        }
    }
}
