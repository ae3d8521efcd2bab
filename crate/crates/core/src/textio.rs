//! The family/code text format.
//!
//! Line 1 is the header: `n=<n>` for families, `n=<n> k=<k> d=<d>` for
//! codes. Every following significant line is one set: comma-separated
//! ascending 1-based elements, or `-` for the empty set. Lines starting
//! with `#` are comments; blank lines are skipped. Files are UTF-8 and
//! newline-terminated with no trailing whitespace. A code file parses as a
//! family file (the extra header fields are ignored), so every checker
//! accepts both.

use std::collections::HashSet;
use std::path::Path;

use crate::codes::ConstantWeightCode;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::subset::SubsetWord;

/// Renders a family: header, recipe comments, then members in canonical
/// colex order.
pub fn family_to_string(family: &SetFamily, comments: &[String]) -> String {
    let mut out = format!("n={}\n", family.universe());
    push_comments(&mut out, comments);
    for w in family {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

/// Renders a code with the full `n= k= d=` header.
pub fn code_to_string(code: &ConstantWeightCode, comments: &[String]) -> String {
    let mut out = format!(
        "n={} k={} d={}\n",
        code.universe(),
        code.weight(),
        code.min_distance()
    );
    push_comments(&mut out, comments);
    for w in code.words() {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

fn push_comments(out: &mut String, comments: &[String]) {
    for c in comments {
        debug_assert!(c.starts_with('#'), "comment lines must start with #");
        out.push_str(c);
        out.push('\n');
    }
}

struct Header {
    line: usize,
    n: u32,
    k: Option<u32>,
    d: Option<u32>,
}

/// Splits the text into the header and the set lines (1-based line numbers
/// attached), skipping comments and blanks.
fn significant_lines(text: &str) -> Result<(Header, Vec<(usize, &str)>)> {
    let mut header: Option<Header> = None;
    let mut sets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_end();
        if trimmed.len() != raw.len() {
            return Err(Error::Parse {
                line,
                message: "trailing whitespace".into(),
            });
        }
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if header.is_none() {
            header = Some(parse_header(line, trimmed)?);
        } else {
            sets.push((line, trimmed));
        }
    }
    let header = header.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing header line (expected n=<n>)".into(),
    })?;
    Ok((header, sets))
}

fn parse_header(line: usize, text: &str) -> Result<Header> {
    let mut n = None;
    let mut k = None;
    let mut d = None;
    for token in text.split_whitespace() {
        let (key, value) = token.split_once('=').ok_or_else(|| Error::Parse {
            line,
            message: format!("bad header token {token:?} (expected key=value)"),
        })?;
        let value: u32 = value.parse().map_err(|_| Error::Parse {
            line,
            message: format!("bad integer {value:?} in header"),
        })?;
        let slot = match key {
            "n" => &mut n,
            "k" => &mut k,
            "d" => &mut d,
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown header key {key:?}"),
                })
            }
        };
        if slot.replace(value).is_some() {
            return Err(Error::Parse {
                line,
                message: format!("duplicate header key {key:?}"),
            });
        }
    }
    let n = n.ok_or_else(|| Error::Parse {
        line,
        message: "header missing n=<n>".into(),
    })?;
    Ok(Header { line, n, k, d })
}

fn parse_set_line(line: usize, text: &str, n: u32) -> Result<SubsetWord> {
    if text == "-" {
        return SubsetWord::empty(n).map_err(|e| at_line(line, e));
    }
    let mut elements = Vec::new();
    for piece in text.split(',') {
        let value: u32 = piece.parse().map_err(|_| Error::Parse {
            line,
            message: format!("bad element {piece:?}"),
        })?;
        if let Some(&prev) = elements.last() {
            if value <= prev {
                return Err(Error::Parse {
                    line,
                    message: format!("elements not strictly ascending at {value}"),
                });
            }
        }
        elements.push(value);
    }
    SubsetWord::new(n, &elements).map_err(|e| at_line(line, e))
}

/// Wraps a structural error with the line it came from.
fn at_line(line: usize, e: Error) -> Error {
    Error::Parse {
        line,
        message: e.to_string(),
    }
}

/// Parses family syntax; accepts code headers and ignores their k/d fields.
pub fn parse_family(text: &str) -> Result<SetFamily> {
    let (header, lines) = significant_lines(text)?;
    let mut seen: HashSet<u64> = HashSet::new();
    let mut members = Vec::with_capacity(lines.len());
    for (line, set_text) in lines {
        let word = parse_set_line(line, set_text, header.n)?;
        if !seen.insert(word.mask()) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate set {word}"),
            });
        }
        members.push(word);
    }
    SetFamily::new(header.n, members)
}

/// Parses code syntax: requires `k=` and `d=` in the header, then verifies
/// weights and pairwise distance on construction.
pub fn parse_code(text: &str) -> Result<ConstantWeightCode> {
    let (header, lines) = significant_lines(text)?;
    let missing = |what: &str| Error::Parse {
        line: header.line,
        message: format!("code header missing {what}"),
    };
    let k = header.k.ok_or_else(|| missing("k=<k>"))?;
    let d = header.d.ok_or_else(|| missing("d=<d>"))?;
    let mut words = Vec::with_capacity(lines.len());
    for (line, set_text) in lines {
        let word = parse_set_line(line, set_text, header.n)?;
        if word.weight() != k {
            return Err(Error::Parse {
                line,
                message: format!("set {word} has weight {}, expected {k}", word.weight()),
            });
        }
        words.push(word);
    }
    ConstantWeightCode::new(header.n, k, d, words)
}

pub fn read_family(path: &Path) -> Result<SetFamily> {
    parse_family(&std::fs::read_to_string(path)?)
}

pub fn read_code(path: &Path) -> Result<ConstantWeightCode> {
    parse_code(&std::fs::read_to_string(path)?)
}
