//! The line-based group file format.
//!
//! ```text
//! # comments start with '#'
//! cayley <n>
//! <n rows of n space-separated indices>
//! ```
//!
//! or
//!
//! ```text
//! perm <degree>
//! <one generator per line, as its image list>
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{Group, Limits, PermGenSet};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line, format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}

/// Parses a group from the text format. Line numbers in errors are 1-based.
pub fn parse_group(text: &str, limits: Limits) -> Result<Group> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "empty group file"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or_default();
    let size: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| parse_err(header_line, "header must be `cayley <n>` or `perm <degree>`"))?;
    if words.next().is_some() {
        return Err(parse_err(header_line, "trailing tokens after header"));
    }

    match kind {
        "cayley" => {
            if size == 0 {
                return Err(parse_err(header_line, "order must be positive"));
            }
            if size > limits.max_order {
                return Err(Error::OrderLimitExceeded {
                    limit: limits.max_order,
                });
            }
            let mut rows = Vec::with_capacity(size);
            for (line, text) in lines.by_ref() {
                let row = numbers(line, text)?;
                if row.len() != size {
                    return Err(parse_err(
                        line,
                        format!("row has {} entries, expected {size}", row.len()),
                    ));
                }
                rows.push(row);
                if rows.len() == size {
                    break;
                }
            }
            if rows.len() != size {
                return Err(parse_err(
                    text.lines().count(),
                    format!("expected {size} rows, found {}", rows.len()),
                ));
            }
            if let Some((line, _)) = lines.next() {
                return Err(parse_err(line, "unexpected content after the table"));
            }
            Group::from_cayley_table(&rows)
        }
        "perm" => {
            let mut gens = Vec::new();
            for (line, text) in lines {
                let g = numbers(line, text)?;
                if g.len() != size {
                    return Err(parse_err(
                        line,
                        format!("generator has {} images, expected {size}", g.len()),
                    ));
                }
                gens.push(g);
            }
            Group::from_permutation_generators(&PermGenSet::new(size, gens), limits)
        }
        other => Err(parse_err(header_line, format!("unknown group kind `{other}`"))),
    }
}

/// Loads a group file; the label is the file stem.
pub fn load_group(path: &Path, limits: Limits) -> Result<Group> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let group = parse_group(&text, limits)?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok(group.with_label(stem))
}

/// Serializes a group in the `cayley` format.
pub fn to_cayley_text(group: &Group) -> String {
    let mut out = String::new();
    if let Some(label) = group.label() {
        let _ = writeln!(out, "# {label}");
    }
    let _ = writeln!(out, "cayley {}", group.order());
    for row in group.rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
