//! Text formats, builtin constructions, and report emission.
//!
//! Hypergraph files:
//!
//! ```text
//! hg <n> <r> <m>
//! <v_1> ... <v_r>     (m lines, vertices 0-based)
//! ```
//!
//! Pattern files:
//!
//! ```text
//! pat <l> <r> <m>
//! <m_1> ... <m_l>     (m multiplicity vectors)
//! ```
//!
//! Blank lines and everything after `#` are ignored. Parse errors carry the
//! 1-based line number of the offending line.

mod builtin;
mod report;

pub use builtin::{builtin_graph, builtin_pattern, BUILTIN_GRAPHS, BUILTIN_PATTERNS};
pub use report::{parse_alpha_grid, sweep_csv, to_json, SpectralRecord, SCHEMA_VERSION};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::pattern::Pattern;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Nonempty lines with comments stripped, as `(line number, fields)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>> {
    fields
        .iter()
        .map(|f| f.parse::<usize>().map_err(|_| parse_err(line, format!("expected a nonnegative integer, got `{f}`"))))
        .collect()
}

/// Numbered rows of a table file.
type Rows = Vec<(usize, Vec<usize>)>;

/// Reads the `<magic> a b m` header and the `m` rows after it.
fn parse_table(text: &str, magic: &str) -> Result<(usize, usize, Rows)> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, format!("missing `{magic}` header")))?;
    if header[0] != magic || header.len() != 4 {
        return Err(parse_err(hline, format!("expected `{magic} <a> <b> <m>`")));
    }
    let h = numbers(hline, &header[1..])?;
    let rows: Rows = lines.map(|(ln, f)| numbers(ln, &f).map(|v| (ln, v))).collect::<Result<_>>()?;
    if rows.len() != h[2] {
        let at = rows.get(h[2]).map_or(hline, |r| r.0);
        return Err(parse_err(at, format!("header announces {} rows, found {}", h[2], rows.len())));
    }
    Ok((h[0], h[1], rows))
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let (n, r, rows) = parse_table(text, "hg")?;
    if r < 1 {
        return Err(parse_err(1, "uniformity must be positive"));
    }
    for (ln, e) in &rows {
        if e.len() != r {
            return Err(parse_err(*ln, format!("edge has {} vertices, expected {r}", e.len())));
        }
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(parse_err(*ln, format!("vertex {v} out of range for n = {n}")));
        }
    }
    Hypergraph::new(n, r, rows.iter().map(|(_, e)| e.clone())).map_err(|e| {
        let line = match &e {
            Error::DuplicateEdge(d) | Error::RepeatedVertex(d) => rows
                .iter()
                .rev()
                .find(|(_, row)| {
                    let mut s = row.clone();
                    s.sort_unstable();
                    s == *d || row == d
                })
                .map(|(ln, _)| *ln)
                .unwrap_or(1),
            _ => 1,
        };
        parse_err(line, e.to_string())
    })
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("hg {} {} {}\n", h.order(), h.uniformity(), h.size());
    for e in h.edges() {
        out.push_str(&join(e));
        out.push('\n');
    }
    out
}

pub fn parse_pattern(text: &str) -> Result<Pattern> {
    let (l, r, rows) = parse_table(text, "pat")?;
    for (ln, m) in &rows {
        if m.len() != l {
            return Err(parse_err(*ln, format!("profile has {} entries, expected {l}", m.len())));
        }
        if m.iter().sum::<usize>() != r {
            return Err(parse_err(*ln, format!("profile sums to {}, expected {r}", m.iter().sum::<usize>())));
        }
    }
    Pattern::new(l, r, rows.into_iter().map(|(_, m)| m)).map_err(|e| parse_err(1, e.to_string()))
}

pub fn write_pattern(p: &Pattern) -> String {
    let mut out = format!("pat {} {} {}\n", p.colors(), p.uniformity(), p.edges().len());
    for m in p.edges() {
        out.push_str(&join(m));
        out.push('\n');
    }
    out
}

/// Serde adapter storing a hypergraph as its text file contents.
pub(crate) mod hg_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::hypergraph::Hypergraph;

    pub fn serialize<S: Serializer>(h: &Hypergraph, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&super::write_hypergraph(h))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Hypergraph, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_hypergraph(&text).map_err(serde::de::Error::custom)
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
