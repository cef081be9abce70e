//! Text formats for linear systems and segment systems.
//!
//! Both formats are line-oriented ASCII. `#` starts a comment that runs
//! to the end of the line; blank lines are skipped. The first
//! non-comment line must be the header naming the format and version.
//!
//! `linsys 1` files list one `line` record per line of the system:
//!
//! ```text
//! linsys 1
//! line a b
//! line b c
//! line c a
//! ```
//!
//! `segsys 1` files fix the common point count with an `r` record and
//! then give one `seg` record per segment as base point plus primitive
//! direction:
//!
//! ```text
//! segsys 1
//! r 3
//! seg 0 0 1 0
//! seg 0 0 0 1
//! ```
//!
//! Serialization is canonical: records are sorted (lines by token
//! sequence, segments by direction then base), fields are joined by
//! single spaces, and every line ends with `\n`. Parsing a canonical
//! file and serializing the result reproduces the input byte for byte.

use crate::incidence::LinearSystem;
use crate::segment::{BuildError, Seg, SegmentError, SegmentSystem};

use thiserror::Error;

/// First grammar violation found while parsing either format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected header `{expected}`, found `{found}`")]
    BadHeader {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("line {line}: `line` record has no point tokens")]
    EmptyLineRecord { line: usize },
    #[error("line {line}: point `{token}` repeats within one record")]
    DuplicatePointInLine { line: usize, token: String },
    #[error("a segment record appears before any `r <count>` record")]
    MissingR,
    #[error("line {line}: direction ({}, {}) is not primitive", dir.0, dir.1)]
    NonPrimitiveDirection { line: usize, dir: (i64, i64) },
    #[error("line {line}: segment lies on the lattice line of the record at line {first}")]
    CollinearDuplicate { line: usize, first: usize },
    #[error("line {line}: segments need at least two points, r = {r}")]
    BadPointCount { line: usize, r: i64 },
    #[error("the file defines no segments")]
    EmptySystem,
    #[error("line {line}: {found}")]
    Malformed { line: usize, found: String },
}

/// Comment-stripped, non-blank lines with their 1-based numbers.
fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        (!stripped.is_empty()).then_some((i + 1, stripped))
    })
}

fn expect_header<'a, I>(lines: &mut I, expected: &'static str) -> Result<(), ParseError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    match lines.next() {
        Some((_, found)) if found == expected => Ok(()),
        Some((line, found)) => Err(ParseError::BadHeader {
            line,
            expected,
            found: found.to_string(),
        }),
        None => Err(ParseError::BadHeader {
            line: 1,
            expected,
            found: String::new(),
        }),
    }
}

/// Parses the `linsys 1` format. Only grammar-level violations are
/// reported here; structural invariants (shared pairs, duplicate
/// lines) are left to [`LinearSystem::validate`].
pub fn parse_linsys(text: &str) -> Result<LinearSystem, ParseError> {
    let mut records = meaningful_lines(text);
    expect_header(&mut records, "linsys 1")?;
    let mut lines: Vec<Vec<String>> = Vec::new();
    for (line, record) in records {
        let mut fields = record.split_ascii_whitespace();
        match fields.next() {
            Some("line") => {}
            Some(other) => {
                return Err(ParseError::Malformed {
                    line,
                    found: format!("unknown record `{other}`"),
                })
            }
            None => unreachable!("blank records are filtered out"),
        }
        let tokens: Vec<String> = fields.map(str::to_string).collect();
        if tokens.is_empty() {
            return Err(ParseError::EmptyLineRecord { line });
        }
        for (i, token) in tokens.iter().enumerate() {
            if tokens[..i].contains(token) {
                return Err(ParseError::DuplicatePointInLine {
                    line,
                    token: token.clone(),
                });
            }
        }
        lines.push(tokens);
    }
    Ok(LinearSystem::from_lines(lines))
}

/// Parses the `segsys 1` format and builds the system, so every
/// segment-level normalization error surfaces with the line number of
/// the record that caused it.
pub fn parse_segsys(text: &str) -> Result<SegmentSystem, ParseError> {
    let mut records = meaningful_lines(text);
    expect_header(&mut records, "segsys 1")?;
    let mut r: Option<(usize, i64)> = None;
    let mut segs: Vec<Seg> = Vec::new();
    let mut seg_lines: Vec<usize> = Vec::new();
    for (line, record) in records {
        let fields: Vec<&str> = record.split_ascii_whitespace().collect();
        match fields[0] {
            "r" => {
                if r.is_some() {
                    return Err(ParseError::Malformed {
                        line,
                        found: "repeated `r` record".into(),
                    });
                }
                let [_, value] = fields[..] else {
                    return Err(ParseError::Malformed {
                        line,
                        found: "expected `r <count>`".into(),
                    });
                };
                let value: i64 = value.parse().map_err(|_| ParseError::Malformed {
                    line,
                    found: format!("`{value}` is not an integer"),
                })?;
                if value < 2 {
                    return Err(ParseError::BadPointCount { line, r: value });
                }
                r = Some((line, value));
            }
            "seg" => {
                let Some((_, r)) = r else {
                    return Err(ParseError::MissingR);
                };
                let [_, x, y, dx, dy] = fields[..] else {
                    return Err(ParseError::Malformed {
                        line,
                        found: "expected `seg <x> <y> <dx> <dy>`".into(),
                    });
                };
                let parse = |field: &str| -> Result<i64, ParseError> {
                    field.parse().map_err(|_| ParseError::Malformed {
                        line,
                        found: format!("`{field}` is not an integer"),
                    })
                };
                let base = (parse(x)?, parse(y)?);
                let dir = (parse(dx)?, parse(dy)?);
                let seg = Seg::new(base, dir, r as usize).map_err(|e| match e {
                    SegmentError::NonPrimitiveDirection { dir } => {
                        ParseError::NonPrimitiveDirection { line, dir }
                    }
                    SegmentError::LengthBelowTwo { len } => ParseError::BadPointCount {
                        line,
                        r: len as i64,
                    },
                })?;
                segs.push(seg);
                seg_lines.push(line);
            }
            other => {
                return Err(ParseError::Malformed {
                    line,
                    found: format!("unknown record `{other}`"),
                })
            }
        }
    }
    SegmentSystem::build(segs).map_err(|e| match e {
        BuildError::CollinearDuplicate { first, second } => ParseError::CollinearDuplicate {
            line: seg_lines[second],
            first: seg_lines[first],
        },
        BuildError::Empty => ParseError::EmptySystem,
        BuildError::MixedLengths { .. } => {
            unreachable!("every segment was built with the same r")
        }
    })
}

/// Canonical `linsys 1` text: records sorted lexicographically by
/// token sequence, single spaces, trailing newline on every line.
pub fn serialize_linsys(ls: &LinearSystem) -> String {
    let mut records: Vec<&Vec<String>> = ls.lines().iter().collect();
    records.sort();
    let mut out = String::from("linsys 1\n");
    for record in records {
        out.push_str("line ");
        out.push_str(&record.join(" "));
        out.push('\n');
    }
    out
}

/// Canonical `segsys 1` text: segments sorted by direction, then base.
pub fn serialize_segsys(ss: &SegmentSystem) -> String {
    let mut segs: Vec<&Seg> = ss.segments().iter().collect();
    segs.sort();
    let mut out = format!("segsys 1\nr {}\n", ss.r());
    for seg in segs {
        let (bx, by) = seg.base();
        let (dx, dy) = seg.dir();
        out.push_str(&format!("seg {bx} {by} {dx} {dy}\n"));
    }
    out
}
