//! Text formats for binary-operation and group tables.
//!
//! Both formats are line-oriented. Lines that are blank or start with `#`
//! are ignored. A binary operation reads
//!
//! ```text
//! points: a b
//! a: b a
//! b: b a
//! ```
//!
//! where row `t: v1 .. vn` means `f(t, xj) = vj` with `xj` the j-th label of
//! the points line. A group is the same shape with an `elements:` header and
//! the row meaning `r · cj = vj`; the parsed table must pass the group
//! validator. Serialization is the exact inverse with rows in header order,
//! single spaces and a trailing newline, so round-trips are bit-exact.

use thiserror::Error;

use crate::error::Error as AlgebraError;
use crate::group::{validate_group, FiniteGroup};
use crate::point::PointSet;
use crate::table::BinaryOpTable;

/// Header keyword of the binary-operation format.
const BINOP_HEADER: &str = "points:";

/// Header keyword of the group format.
const GROUP_HEADER: &str = "elements:";

/// Errors raised while reading or writing the text formats. Line numbers are
/// 1-based and count every physical line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected header `{expected}`")]
    MissingHeader { line: usize, expected: &'static str },

    #[error("line {line}: label {label:?} declared more than once")]
    DuplicateLabel { line: usize, label: String },

    #[error("line {line}: label {token:?} cannot be used in this format")]
    InvalidLabel { line: usize, token: String },

    #[error("line {line}: unknown label {token:?}")]
    UnknownLabel { line: usize, token: String },

    #[error("missing row for label {label:?}")]
    MissingRow { label: String },

    #[error("line {line}: unexpected extra row {label:?}")]
    ExtraRow { line: usize, label: String },

    #[error("line {line}: expected a row of the form `label: v1 .. vn`")]
    ArityMismatch { line: usize },

    #[error(transparent)]
    Invalid(#[from] AlgebraError),
}

/// A parsed file: either a binary operation or a group table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentPayload {
    Binop(BinaryOpTable),
    Group(FiniteGroup),
}

/// A parsed file together with an optional display name (the parser leaves
/// it empty; callers typically fill in the file stem).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: Option<String>,
    pub payload: DocumentPayload,
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self.payload {
            DocumentPayload::Binop(_) => "binop",
            DocumentPayload::Group(_) => "group",
        }
    }
}

/// A label the format can tokenize: nonempty, no whitespace, not starting
/// with the comment character.
pub fn label_is_valid(label: &str) -> bool {
    !label.is_empty() && !label.starts_with('#') && !label.chars().any(char::is_whitespace)
}

/// Significant lines with their 1-based numbers: comments and blanks dropped.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let trimmed = l.trim_start();
            !trimmed.is_empty() && !trimmed.starts_with('#')
        })
}

/// Parses a header + rows block, returning the labels and the rows as index
/// tables, in header order.
fn parse_block(text: &str, header: &'static str) -> Result<(Vec<String>, Vec<Vec<usize>>), ParseError> {
    let mut lines = significant_lines(text);
    let (header_line, first) = lines.next().ok_or(ParseError::MissingHeader {
        line: 1,
        expected: header,
    })?;
    let mut tokens = first.split_whitespace();
    if tokens.next() != Some(header) {
        return Err(ParseError::MissingHeader {
            line: header_line,
            expected: header,
        });
    }
    let mut labels: Vec<String> = Vec::new();
    for token in tokens {
        if !label_is_valid(token) {
            return Err(ParseError::InvalidLabel {
                line: header_line,
                token: token.to_string(),
            });
        }
        if labels.iter().any(|l| l == token) {
            return Err(ParseError::DuplicateLabel {
                line: header_line,
                label: token.to_string(),
            });
        }
        labels.push(token.to_string());
    }
    if labels.is_empty() {
        return Err(ParseError::Invalid(AlgebraError::EmptyDomain));
    }

    let n = labels.len();
    let index_of = |token: &str| labels.iter().position(|l| l == token);
    let mut rows: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line, content) in lines {
        let mut tokens = content.split_whitespace();
        let head = tokens.next().expect("significant lines are nonempty");
        let label = head
            .strip_suffix(':')
            .ok_or(ParseError::ArityMismatch { line })?;
        let Some(row_index) = index_of(label) else {
            return Err(ParseError::UnknownLabel {
                line,
                token: label.to_string(),
            });
        };
        if rows.iter().all(|r| r.is_some()) || rows[row_index].is_some() {
            return Err(ParseError::ExtraRow {
                line,
                label: label.to_string(),
            });
        }
        let mut values = Vec::with_capacity(n);
        for token in tokens {
            let Some(value) = index_of(token) else {
                return Err(ParseError::UnknownLabel {
                    line,
                    token: token.to_string(),
                });
            };
            values.push(value);
        }
        if values.len() != n {
            return Err(ParseError::ArityMismatch { line });
        }
        rows[row_index] = Some(values);
    }
    let mut table = Vec::with_capacity(n);
    for (i, row) in rows.into_iter().enumerate() {
        match row {
            Some(values) => table.push(values),
            None => {
                return Err(ParseError::MissingRow {
                    label: labels[i].clone(),
                })
            }
        }
    }
    Ok((labels, table))
}

/// Parses the binary-operation format.
pub fn parse_binop(text: &str) -> Result<BinaryOpTable, ParseError> {
    let (labels, table) = parse_block(text, BINOP_HEADER)?;
    let points = PointSet::from_labels(labels)?;
    Ok(BinaryOpTable::new(points, table)?)
}

/// Parses the group format, running the full group validator.
pub fn parse_group(text: &str) -> Result<FiniteGroup, ParseError> {
    let (labels, table) = parse_block(text, GROUP_HEADER)?;
    Ok(validate_group(labels, table)?)
}

/// Parses either format, deciding by the header keyword.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let header = significant_lines(text)
        .next()
        .and_then(|(_, l)| l.split_whitespace().next());
    let payload = match header {
        Some(GROUP_HEADER) => DocumentPayload::Group(parse_group(text)?),
        _ => DocumentPayload::Binop(parse_binop(text)?),
    };
    Ok(Document {
        name: None,
        payload,
    })
}

fn serialize_block(header: &str, labels: &[String], rows: &[Vec<usize>]) -> Result<String, ParseError> {
    for label in labels {
        if !label_is_valid(label) {
            return Err(ParseError::InvalidLabel {
                line: 1,
                token: label.clone(),
            });
        }
    }
    let mut out = String::new();
    out.push_str(header);
    for label in labels {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for (label, row) in labels.iter().zip(rows) {
        out.push_str(label);
        out.push(':');
        for &value in row {
            out.push(' ');
            out.push_str(&labels[value]);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Canonical text form of a binary operation; inverse of [`parse_binop`].
pub fn serialize_binop(op: &BinaryOpTable) -> Result<String, ParseError> {
    serialize_block(BINOP_HEADER, op.points().labels(), op.rows())
}

/// Canonical text form of a group table; inverse of [`parse_group`].
pub fn serialize_group(group: &FiniteGroup) -> Result<String, ParseError> {
    serialize_block(GROUP_HEADER, group.labels(), group.table())
}
