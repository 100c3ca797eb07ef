//! OEIS b-file reading and writing: one `index value` pair per line.

use std::fmt;

/// The first 100 published terms of A178797, as a b-file.
pub const A178797_FIRST_100: &str = include_str!("../data/a178797_first100.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses b-file text. Blank lines and `#` comments are skipped.
pub fn parse(text: &str) -> Result<Vec<(i64, u64)>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| ParseError {
            line: i + 1,
            message,
        };
        let mut fields = line.split_whitespace();
        let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected two integers, got {line:?}")));
        };
        let n = n.parse().map_err(|_| err(format!("bad index {n:?}")))?;
        let v = v.parse().map_err(|_| err(format!("bad value {v:?}")))?;
        out.push((n, v));
    }
    Ok(out)
}

pub fn reference_terms() -> Vec<(i64, u64)> {
    parse(A178797_FIRST_100).expect("bundled b-file is well formed")
}

/// `n value\n` per term, no header.
pub fn render(terms: &[(i64, u64)]) -> String {
    terms.iter().map(|(n, v)| format!("{n} {v}\n")).collect()
}

/// First index where `computed` disagrees with `reference` on a shared index.
pub fn first_mismatch(
    computed: &[(i64, u64)],
    reference: &[(i64, u64)],
) -> Option<(i64, u64, u64)> {
    let reference: std::collections::HashMap<i64, u64> = reference.iter().copied().collect();
    computed
        .iter()
        .filter_map(|&(n, v)| reference.get(&n).map(|&r| (n, v, r)))
        .find(|&(_, v, r)| v != r)
}
