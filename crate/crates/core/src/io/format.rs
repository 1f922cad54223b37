//! The `qrw 1` text format.
//!
//! ```text
//! qrw 1
//! size 3
//! one 2
//! imp
//! 2 2 2
//! 1 2 2
//! 0 1 2
//! mul
//! 0 0 0
//! 0 0 1
//! 0 1 2
//! order
//! 1 1 1
//! 0 1 1
//! 0 0 1
//! ```
//!
//! `names` and `neg` are single-line directives, `imp`, `mul` and `order`
//! are followed by `size` rows. Order row `i`, column `j` is `1` when
//! `i ≼ j`. Lines whose first non-blank character is `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{Element, FiniteStructure, QuasiOrder, StructureError};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("line {line}: unsupported format version `{found}`, expected `qrw {FORMAT_VERSION}`")]
    Version { line: usize, found: String },
    #[error("line {line}: unknown directive `{name}`")]
    UnknownDirective { line: usize, name: String },
    #[error("line {line}: duplicate directive `{name}`")]
    DuplicateDirective { line: usize, name: String },
    #[error("line {line}: {block} block: {message}")]
    Block {
        block: &'static str,
        line: usize,
        message: String,
    },
    #[error("missing `{0}` directive")]
    Missing(&'static str),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl ParseError {
    /// True for errors located at a character position.
    pub fn is_lexical(&self) -> bool {
        matches!(self, ParseError::Syntax { .. })
    }
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = Vec::new();
        let mut start: Option<(usize, usize)> = None;
        for (col, (byte, ch)) in raw.char_indices().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some((byte, col + 1)),
                (true, Some((b, c))) => {
                    tokens.push(Token {
                        text: &raw[b..byte],
                        col: c,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some((b, c)) = start {
            tokens.push(Token {
                text: &raw[b..],
                col: c,
            });
        }
        lines.push(Line {
            number: i + 1,
            tokens,
        });
    }
    lines
}

fn number(line: &Line<'_>, tok: &Token<'_>) -> Result<usize, ParseError> {
    if !tok.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Syntax {
            line: line.number,
            col: tok.col,
            message: format!("expected a decimal index, found `{}`", tok.text),
        });
    }
    tok.text.parse().map_err(|_| ParseError::Syntax {
        line: line.number,
        col: tok.col,
        message: format!("index `{}` is too large", tok.text),
    })
}

fn no_trailing(line: &Line<'_>, expected: usize) -> Result<(), ParseError> {
    match line.tokens.get(expected) {
        Some(tok) => Err(ParseError::Syntax {
            line: line.number,
            col: tok.col,
            message: format!("unexpected `{}` after `{}`", tok.text, line.tokens[0].text),
        }),
        None => Ok(()),
    }
}

const DIRECTIVES: [&str; 7] = ["size", "one", "names", "imp", "mul", "neg", "order"];

#[derive(Default)]
struct Parts {
    size: Option<usize>,
    one: Option<usize>,
    names: Option<Vec<String>>,
    imp: Option<Vec<Vec<Element>>>,
    mul: Option<Vec<Vec<Element>>>,
    neg: Option<Vec<Element>>,
    order: Option<Vec<Vec<Element>>>,
}

/// Parses a structure from UTF-8 bytes.
pub fn parse_bytes(bytes: &[u8]) -> Result<FiniteStructure, ParseError> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse(text),
        Err(e) => {
            let valid = &bytes[..e.valid_up_to()];
            let line = valid.iter().filter(|&&b| b == b'\n').count() + 1;
            let line_start = valid.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1);
            let col = std::str::from_utf8(&valid[line_start..])
                .map_or(1, |s| s.chars().count() + 1);
            Err(ParseError::Syntax {
                line,
                col,
                message: "invalid UTF-8".into(),
            })
        }
    }
}

pub fn parse(text: &str) -> Result<FiniteStructure, ParseError> {
    let lines = tokenize(text);
    let mut iter = lines.iter().peekable();

    let header = iter.next().ok_or(ParseError::Missing("qrw"))?;
    if header.tokens[0].text != "qrw" {
        return Err(ParseError::Syntax {
            line: header.number,
            col: header.tokens[0].col,
            message: format!("expected header `qrw {FORMAT_VERSION}`, found `{}`", header.tokens[0].text),
        });
    }
    match header.tokens.get(1) {
        Some(v) if v.text == FORMAT_VERSION => no_trailing(header, 2)?,
        Some(v) => {
            return Err(ParseError::Version {
                line: header.number,
                found: v.text.to_string(),
            })
        }
        None => {
            return Err(ParseError::Version {
                line: header.number,
                found: String::new(),
            })
        }
    }

    let mut parts = Parts::default();
    let mut seen: Vec<&str> = Vec::new();
    while let Some(line) = iter.next() {
        let head = &line.tokens[0];
        let name = head.text;
        if !DIRECTIVES.contains(&name) {
            if name.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseError::Syntax {
                    line: line.number,
                    col: head.col,
                    message: format!("expected a directive, found table row starting `{name}`"),
                });
            }
            return Err(ParseError::UnknownDirective {
                line: line.number,
                name: name.to_string(),
            });
        }
        if seen.contains(&name) {
            return Err(ParseError::DuplicateDirective {
                line: line.number,
                name: name.to_string(),
            });
        }
        seen.push(name);

        let block = |name: &'static str, message: String| ParseError::Block {
            block: name,
            line: line.number,
            message,
        };
        let size_for = |name: &'static str| {
            parts
                .size
                .ok_or_else(|| block(name, "appears before `size`".into()))
        };

        match name {
            "size" => {
                let tok = line.tokens.get(1).ok_or_else(|| ParseError::Syntax {
                    line: line.number,
                    col: head.col + name.len(),
                    message: "`size` needs a value".into(),
                })?;
                no_trailing(line, 2)?;
                let n = number(line, tok)?;
                if n == 0 {
                    return Err(block("size", "carrier must have at least one element".into()));
                }
                parts.size = Some(n);
            }
            "one" => {
                let tok = line.tokens.get(1).ok_or_else(|| ParseError::Syntax {
                    line: line.number,
                    col: head.col + name.len(),
                    message: "`one` needs a value".into(),
                })?;
                no_trailing(line, 2)?;
                parts.one = Some(number(line, tok)?);
            }
            "names" => {
                let n = size_for("names")?;
                let names: Vec<String> = line.tokens[1..].iter().map(|t| t.text.to_string()).collect();
                if names.len() != n {
                    return Err(block("names", format!("expected {n} names, found {}", names.len())));
                }
                parts.names = Some(names);
            }
            "neg" => {
                let n = size_for("neg")?;
                let values = line.tokens[1..]
                    .iter()
                    .map(|t| number(line, t))
                    .collect::<Result<Vec<_>, _>>()?;
                if values.len() != n {
                    return Err(block("neg", format!("expected {n} entries, found {}", values.len())));
                }
                if let Some((i, v)) = values.iter().enumerate().find(|(_, &v)| v >= n) {
                    return Err(block("neg", format!("entry {i} holds {v}, outside the carrier 0..{n}")));
                }
                parts.neg = Some(values);
            }
            "imp" | "mul" | "order" => {
                let table: &'static str = match name {
                    "imp" => "imp",
                    "mul" => "mul",
                    _ => "order",
                };
                let n = size_for(table)?;
                no_trailing(line, 1)?;
                let mut rows = Vec::with_capacity(n);
                while rows.len() < n {
                    let Some(row) = iter.next_if(|l| !DIRECTIVES.contains(&l.tokens[0].text)) else {
                        return Err(block(
                            table,
                            format!("expected {n} rows, found {}", rows.len()),
                        ));
                    };
                    let cells = row
                        .tokens
                        .iter()
                        .map(|t| number(row, t))
                        .collect::<Result<Vec<_>, _>>()?;
                    let row_block = |message: String| ParseError::Block {
                        block: table,
                        line: row.number,
                        message,
                    };
                    if cells.len() != n {
                        return Err(row_block(format!(
                            "row {} has {} entries, expected {n}",
                            rows.len(),
                            cells.len()
                        )));
                    }
                    let bound = if table == "order" { 2 } else { n };
                    if let Some((col, &v)) = cells.iter().enumerate().find(|(_, &v)| v >= bound) {
                        let range = if table == "order" {
                            "order entries must be 0 or 1".to_string()
                        } else {
                            format!("outside the carrier 0..{n}")
                        };
                        return Err(row_block(format!(
                            "cell ({}, {col}) holds {v}, {range}",
                            rows.len()
                        )));
                    }
                    rows.push(cells);
                }
                match table {
                    "imp" => parts.imp = Some(rows),
                    "mul" => parts.mul = Some(rows),
                    _ => parts.order = Some(rows),
                }
            }
            _ => unreachable!("directive list is exhaustive"),
        }
    }

    let n = parts.size.ok_or(ParseError::Missing("size"))?;
    let one = parts.one.ok_or(ParseError::Missing("one"))?;
    if one >= n {
        return Err(ParseError::Structure(StructureError::UnitOutOfRange { one, n }));
    }
    let imp = parts.imp.ok_or(ParseError::Missing("imp"))?;
    let order = parts
        .order
        .map(|rows| QuasiOrder::from_fn(n, |i, j| rows[i][j] == 1));
    Ok(FiniteStructure::builder(imp, one)
        .maybe_mul(parts.mul)
        .maybe_neg(parts.neg)
        .maybe_order(order)
        .maybe_names(parts.names)
        .build()?)
}

fn write_rows<'a>(out: &mut String, rows: impl Iterator<Item = &'a [Element]>) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

/// Canonical layout: fixed directive order, single spaces, trailing
/// newline. The order block is always written; `neg` only when it differs
/// from the negation the loader would derive.
pub fn render(s: &FiniteStructure) -> String {
    let n = s.size();
    let mut out = String::new();
    let _ = writeln!(out, "qrw {FORMAT_VERSION}");
    let _ = writeln!(out, "size {n}");
    let _ = writeln!(out, "one {}", s.one());
    if let Some(names) = s.names() {
        let _ = writeln!(out, "names {}", names.join(" "));
    }
    out.push_str("imp\n");
    write_rows(&mut out, s.imp_rows());
    if let Some(rows) = s.mul_rows() {
        out.push_str("mul\n");
        write_rows(&mut out, rows);
    }
    if let Some(neg) = s.neg_table() {
        if s.derived_neg().as_deref() != Some(neg) {
            let cells: Vec<String> = neg.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "neg {}", cells.join(" "));
        }
    }
    out.push_str("order\n");
    for i in s.elements() {
        let cells: Vec<&str> = s.elements().map(|j| if s.le(i, j) { "1" } else { "0" }).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// `render(parse(text))`.
pub fn canonicalize(text: &str) -> Result<String, ParseError> {
    parse(text).map(|s| render(&s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::gen_lukasiewicz;

    const L3: &str = "qrw 1\nsize 3\none 2\nimp\n2 2 2\n1 2 2\n0 1 2\nmul\n0 0 0\n0 0 1\n0 1 2\norder\n1 1 1\n0 1 1\n0 0 1\n";

    #[test]
    fn l3_file_matches_generator() {
        let l3 = gen_lukasiewicz(3).unwrap();
        assert_eq!(parse(L3).unwrap(), l3);
        assert_eq!(render(&l3), L3);
    }

    #[test]
    fn whitespace_and_comments_are_free() {
        let messy = "# a chain\n\n  qrw   1\nsize\t3\none 2\n# tables\nimp\n 2  2 2\n1 2 2\n0 1    2\nmul\n0 0 0\n0 0 1\n0 1 2\norder\n1 1 1\n0 1 1\n0 0 1";
        assert_eq!(canonicalize(messy).unwrap(), L3);
    }

    #[test]
    fn missing_order_is_derived() {
        let s = parse("qrw 1\nsize 2\none 1\nimp\n1 1\n0 1\n").unwrap();
        assert_eq!(s.order(), &s.derived_order());
        assert!(!s.has_mul());
    }

    #[test]
    fn short_block_names_the_block() {
        let err = parse("qrw 1\nsize 3\none 2\nimp\n2 2 2\n1 2 2\norder\n1 1 1\n0 1 1\n0 0 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Block { block: "imp", .. }), "{err}");
        assert!(err.to_string().contains("imp block"));
        let err = parse("qrw 1\nsize 3\none 2\nimp\n2 2 2\n1 2 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Block { block: "imp", .. }));
    }

    #[test]
    fn lexical_errors_carry_position() {
        let err = parse("qrw 1\nsize 2\none 1\nimp\n1 x\n0 1\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                line: 5,
                col: 3,
                message: "expected a decimal index, found `x`".into()
            }
        );
        assert!(err.is_lexical());
        let err = parse_bytes(b"qrw 1\nsize \xff\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, col: 6, .. }));
    }

    #[test]
    fn header_and_directive_rules() {
        assert!(matches!(
            parse("qrw 2\nsize 1\none 0\nimp\n0\n"),
            Err(ParseError::Version { found, .. }) if found == "2"
        ));
        assert!(matches!(
            parse("qrw 1\nsize 1\nsize 1\none 0\nimp\n0\n"),
            Err(ParseError::DuplicateDirective { line: 3, .. })
        ));
        assert!(matches!(
            parse("qrw 1\nsize 1\none 0\njoin\nimp\n0\n"),
            Err(ParseError::UnknownDirective { line: 4, .. })
        ));
        assert!(matches!(
            parse("qrw 1\none 0\nimp\n0\nsize 1\n"),
            Err(ParseError::Block { block: "imp", .. })
        ));
        assert_eq!(parse("qrw 1\nsize 1\none 0\n"), Err(ParseError::Missing("imp")));
        assert!(matches!(
            parse("qrw 1\nsize 2\none 1\nimp\n1 2\n0 1\n"),
            Err(ParseError::Block { block: "imp", line: 5, .. })
        ));
        assert!(matches!(
            parse("qrw 1\nsize 2\none 1\nimp\n1 1\n0 1\norder\n1 2\n0 1\n"),
            Err(ParseError::Block { block: "order", .. })
        ));
    }

    #[test]
    fn one_element_file() {
        let s = parse("qrw 1\nsize 1\none 0\nimp\n0\n").unwrap();
        assert_eq!(render(&s), "qrw 1\nsize 1\none 0\nimp\n0\norder\n1\n");
    }

    #[test]
    fn names_and_explicit_negation_survive() {
        let text = "qrw 1\nsize 3\none 2\nnames 0 h 1\nimp\n2 2 2\n1 2 2\n0 1 2\nneg 1 1 0\norder\n1 1 1\n0 1 1\n0 0 1\n";
        let s = parse(text).unwrap();
        assert_eq!(s.neg_table(), Some(&[1, 1, 0][..]));
        assert_eq!(s.label(1), "h");
        assert_eq!(render(&s), text);
        assert_eq!(parse(&render(&s)).unwrap(), s);
    }
}
