//! Line-oriented algebra files.
//!
//! ```text
//! # k[x, y]/(x^2) over k[y]
//! vars: x:1, y:1
//! normalization: y
//! relations: x^2
//! field: Q
//! ```
//!
//! `relations` is a `;`-separated list and may be empty. `field` is `Q`
//! (the default) or `Fp:<p>`. Everything after `#` is a comment.

use std::fmt;

use mcmrep_core::graded::{BaseField, GradedAlgebra};
use mcmrep_core::parse::{parse_polynomial, SparsePoly};
use mcmrep_core::PrimeField;

/// Syntax error with a 1-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for FileError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> FileError {
    FileError {
        line,
        column,
        message: message.into(),
    }
}

// Splits `s` at `sep`, returning pieces with their byte offset.
fn split_with_offsets(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c == sep {
            out.push((start, &s[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((start, &s[start..]));
    out
}

fn trimmed(offset: usize, piece: &str) -> (usize, &str) {
    let lead = piece.len() - piece.trim_start().len();
    (offset + lead, piece.trim())
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Entry<'a> {
    line: usize,
    value_col: usize,
    value: &'a str,
}

/// Parses an algebra file.
pub fn parse_algebra(text: &str) -> Result<GradedAlgebra, FileError> {
    let mut vars: Option<Entry> = None;
    let mut norm: Option<Entry> = None;
    let mut rels: Option<Entry> = None;
    let mut field: Option<Entry> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let key_col = content.len() - content.trim_start().len();
        let colon = content
            .find(':')
            .ok_or_else(|| err(line, key_col + 1, "expected 'key: value'"))?;
        let key = content[..colon].trim();
        let value = &content[colon + 1..];
        let entry = Entry {
            line,
            value_col: colon + 2,
            value,
        };
        let slot = match key {
            "vars" => &mut vars,
            "normalization" => &mut norm,
            "relations" => &mut rels,
            "field" => &mut field,
            other => return Err(err(line, key_col + 1, format!("unknown key '{other}'"))),
        };
        if slot.is_some() {
            return Err(err(line, key_col + 1, format!("duplicate key '{key}'")));
        }
        *slot = Some(entry);
    }

    let vars = vars.ok_or_else(|| err(last_line + 1, 1, "missing 'vars' line"))?;
    let norm = norm.ok_or_else(|| err(last_line + 1, 1, "missing 'normalization' line"))?;

    let mut declared: Vec<(String, i64)> = Vec::new();
    for (off, piece) in split_with_offsets(vars.value, ',') {
        let (off, piece) = trimmed(off, piece);
        let col = vars.value_col + off;
        let (name, deg) = piece
            .split_once(':')
            .ok_or_else(|| err(vars.line, col, format!("expected 'name:degree', found '{piece}'")))?;
        let name = name.trim();
        if !is_identifier(name) {
            return Err(err(vars.line, col, format!("invalid variable name '{name}'")));
        }
        let deg_col = col + piece.find(':').unwrap() + 1;
        let degree: i64 = deg
            .trim()
            .parse()
            .map_err(|_| err(vars.line, deg_col, format!("invalid degree '{}'", deg.trim())))?;
        declared.push((name.to_string(), degree));
    }
    let names: Vec<String> = declared.iter().map(|(n, _)| n.clone()).collect();

    let mut normalization = Vec::new();
    for (off, piece) in split_with_offsets(norm.value, ',') {
        let (off, piece) = trimmed(off, piece);
        if !names.iter().any(|n| n == piece) {
            return Err(err(
                norm.line,
                norm.value_col + off,
                format!("'{piece}' is not a declared variable"),
            ));
        }
        normalization.push(piece.to_string());
    }

    let mut relations: Vec<SparsePoly> = Vec::new();
    if let Some(r) = &rels {
        if !r.value.trim().is_empty() {
            for (off, piece) in split_with_offsets(r.value, ';') {
                if piece.trim().is_empty() {
                    continue;
                }
                let p = parse_polynomial(piece, &names)
                    .map_err(|e| err(r.line, r.value_col + off + e.offset, e.message))?;
                relations.push(p);
            }
        }
    }

    let base = match &field {
        None => BaseField::Rational,
        Some(f) => {
            let (off, v) = trimmed(0, f.value);
            let col = f.value_col + off;
            if v == "Q" {
                BaseField::Rational
            } else if let Some(p) = v.strip_prefix("Fp:") {
                let p: u64 = p
                    .trim()
                    .parse()
                    .map_err(|_| err(f.line, col + 3, format!("invalid modulus '{}'", p.trim())))?;
                BaseField::Prime(
                    PrimeField::new(p).map_err(|e| err(f.line, col + 3, e.to_string()))?,
                )
            } else {
                return Err(err(f.line, col, format!("field must be 'Q' or 'Fp:<p>', found '{v}'")));
            }
        }
    };

    let var_refs: Vec<(&str, i64)> = declared.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    let norm_refs: Vec<&str> = normalization.iter().map(String::as_str).collect();
    Ok(GradedAlgebra::new(&var_refs, relations, &norm_refs).with_field(base))
}

/// Writes an algebra in the format read by [`parse_algebra`].
pub fn emit_algebra(alg: &GradedAlgebra) -> String {
    let vars: Vec<String> = alg
        .names()
        .iter()
        .zip(alg.degrees())
        .map(|(n, d)| format!("{n}:{d}"))
        .collect();
    let rels: Vec<String> = alg.relations().iter().map(|r| r.render(alg.names())).collect();
    format!(
        "vars: {}\nnormalization: {}\nrelations: {}\nfield: {}\n",
        vars.join(", "),
        alg.normalization_names().join(", "),
        rels.join("; "),
        alg.field()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const X2: &str = "vars: x:1, y:1\nnormalization: y\nrelations: x^2\n";

    #[test]
    fn parses_preset() {
        let a = parse_algebra(X2).unwrap();
        assert_eq!(a, mcmrep_core::example_algebra_x2());
        assert_eq!(a.field(), BaseField::Rational);
    }

    #[test]
    fn round_trips() {
        let text = "# comment\nvars: x:1, z:2, y:1\nnormalization: y\nrelations: x^2 - y^2; z^2 - x*y^3; 1/2*x*z\nfield: Fp:7\n";
        let a = parse_algebra(text).unwrap();
        let emitted = emit_algebra(&a);
        assert_eq!(parse_algebra(&emitted).unwrap(), a);
        assert_eq!(emit_algebra(&parse_algebra(&emitted).unwrap()), emitted);
    }

    #[test]
    fn positions() {
        let e = parse_algebra("vars: x:1, y:1\nnormalization: y\nrelations: x^2 + w\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 18));
        let e = parse_algebra("vars: x:1, y:one\nnormalization: y\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 14));
        let e = parse_algebra("vars: x:1\nnormalization: q\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 16));
        let e = parse_algebra("vars: x:1\ncolour: red\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        let e = parse_algebra("vars: y:1\nnormalization: y\nfield: Fp:8\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 11));
        let e = parse_algebra("vars: y:1\n").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
