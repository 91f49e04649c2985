//! Comma-separated integer lists, the textual form shared by permutations,
//! words, partitions, parabolic subsets and Hessenberg functions.

use crate::error::{Error, Result};

/// Parses `"3,4,1,2"`; the empty (or all-blank) string is the empty list.
/// Surrounding brackets are tolerated.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected a nonnegative integer, found {tok:?}")))
        })
        .collect()
}

pub fn join(items: &[usize]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
