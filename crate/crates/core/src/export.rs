//! Text formats for Hasse diagrams: DOT digraphs and `a < b` edge lists.

use std::collections::HashMap;
use std::fmt::{Display, Write as _};
use std::hash::Hash;

use crate::{Error, FinitePoset, Result};

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// DOT digraph of the cover relation, drawn bottom to top. Nodes appear in
/// index order, edges sorted by `(lower, upper)`.
pub fn to_dot<L: Clone + Eq + Hash + Display>(poset: &FinitePoset<L>, name: &str) -> String {
    let labels: Vec<String> = poset
        .labels()
        .iter()
        .map(|l| quote(&l.to_string()))
        .collect();
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for label in &labels {
        writeln!(out, "  {label};").unwrap();
    }
    for (a, b) in poset.cover_pairs() {
        writeln!(out, "  {} -> {};", labels[a], labels[b]).unwrap();
    }
    out.push_str("}\n");
    out
}

/// One `a < b` line per cover; elements without covers get a bare line.
pub fn to_edge_list<L: Clone + Eq + Hash + Display>(poset: &FinitePoset<L>) -> String {
    let mut out = String::new();
    for a in 0..poset.len() {
        if poset.upper_covers(a).is_empty() && poset.lower_covers(a).is_empty() {
            writeln!(out, "{}", poset.label(a)).unwrap();
        }
    }
    for (a, b) in poset.cover_pairs() {
        writeln!(out, "{} < {}", poset.label(a), poset.label(b)).unwrap();
    }
    out
}

#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    pairs: Vec<(usize, usize)>,
}

impl Builder {
    fn node(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), self.labels.len() - 1);
        self.labels.len() - 1
    }

    fn finish(self) -> Result<FinitePoset<String>> {
        FinitePoset::from_covers(self.labels, &self.pairs)
    }
}

/// Inverse of [`to_edge_list`]. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<FinitePoset<String>> {
    let mut builder = Builder::default();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line.split_once('<') {
            Some((a, b)) => {
                let (a, b) = (a.trim(), b.trim());
                if a.is_empty() || b.is_empty() {
                    return Err(Error::Parse {
                        position: line_no + 1,
                        message: format!("incomplete edge {line:?}"),
                    });
                }
                let (i, j) = (builder.node(a), builder.node(b));
                builder.pairs.push((i, j));
            }
            None => {
                builder.node(line);
            }
        }
    }
    builder.finish()
}

/// Reads the quoted strings of one DOT statement.
fn quoted_tokens(line: &str, line_no: usize) -> Result<Vec<String>> {
    let mut tokens = Vec::new();
    let mut chars = line.chars();
    while let Some(c) = chars.next() {
        if c != '"' {
            continue;
        }
        let mut token = String::new();
        loop {
            match chars.next() {
                Some('\\') => token.extend(chars.next()),
                Some('"') => break,
                Some(other) => token.push(other),
                None => {
                    return Err(Error::Parse {
                        position: line_no + 1,
                        message: "unterminated string".into(),
                    })
                }
            }
        }
        tokens.push(token);
    }
    Ok(tokens)
}

/// Reads the subset of DOT written by [`to_dot`]: quoted node statements and
/// `"a" -> "b"` edges, one per line.
pub fn parse_dot(text: &str) -> Result<FinitePoset<String>> {
    let mut builder = Builder::default();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with("digraph") || !line.starts_with('"') {
            continue;
        }
        let tokens = quoted_tokens(line, line_no)?;
        match (tokens.as_slice(), line.contains("->")) {
            ([a], false) => {
                builder.node(a);
            }
            ([a, b], true) => {
                let (i, j) = (builder.node(a), builder.node(b));
                builder.pairs.push((i, j));
            }
            _ => {
                return Err(Error::Parse {
                    position: line_no + 1,
                    message: format!("unexpected statement {line:?}"),
                })
            }
        }
    }
    builder.finish()
}
