//! The `seifert-data v1` text format.
//!
//! Line-oriented: `#` starts a comment running to end of line, tokens are
//! whitespace-separated. The header line is followed by `g <int>` and
//! `m <int>`, then the blocks `M` (2g rows of 2g integers) and `V` (m rows of
//! 2g integers), both omitted when g = 0, and `A` (m rows of m integers).
//!
//! ```text
//! seifert-data v1
//! g 1
//! m 1
//! M
//! -1 1
//! 0 -1
//! V
//! 1 0
//! A
//! 0
//! ```
//!
//! Parse errors carry the 1-based line and column of the offending token;
//! structurally well-formed documents may still fail Seifert validation,
//! which is reported separately.

use std::fmt;

use crate::arith::{Int, Matrix};
use crate::seifert::{SeifertData, ValidationError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug)]
pub enum DocumentError {
    Parse(ParseError),
    Validation(ValidationError),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Parse(e) => e.fmt(f),
            DocumentError::Validation(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for DocumentError {}

/// A content line: 1-based line number plus its tokens with column positions.
struct Line<'a> {
    number: usize,
    tokens: Vec<(usize, &'a str)>,
}

fn tokenize(input: &str) -> Vec<Line<'_>> {
    let mut lines = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = Vec::new();
        let mut col = 0;
        for chunk in content.split_inclusive(char::is_whitespace) {
            let trimmed = chunk.trim_end_matches(char::is_whitespace);
            if !trimmed.is_empty() {
                tokens.push((col + 1, trimmed));
            }
            col += chunk.chars().count();
        }
        if !tokens.is_empty() {
            lines.push(Line { number: idx + 1, tokens });
        }
    }
    lines
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn next(&mut self) -> Option<&Line<'a>> {
        let line = self.lines.get(self.pos)?;
        self.pos += 1;
        self.last_line = line.number;
        Some(line)
    }

    fn eof_error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.last_line + 1, col: 1, message: message.into() }
    }
}

fn parse_usize(line: &Line<'_>, index: usize, what: &str) -> Result<usize, ParseError> {
    let (col, tok) = line.tokens[index];
    tok.parse::<usize>().map_err(|_| ParseError {
        line: line.number,
        col,
        message: format!("expected a nonnegative integer for {what}, got `{tok}`"),
    })
}

fn read_scalar(cursor: &mut Cursor<'_>, key: &str) -> Result<usize, ParseError> {
    match cursor.next() {
        Some(line) => {
            if line.tokens[0].1 != key {
                return Err(ParseError {
                    line: line.number,
                    col: line.tokens[0].0,
                    message: format!("expected `{key} <int>`, got `{}`", line.tokens[0].1),
                });
            }
            if line.tokens.len() != 2 {
                return Err(ParseError {
                    line: line.number,
                    col: line.tokens[0].0,
                    message: format!("expected `{key} <int>` on one line"),
                });
            }
            parse_usize(line, 1, key)
        }
        None => Err(cursor.eof_error(format!("expected `{key} <int>`"))),
    }
}

fn read_block(
    cursor: &mut Cursor<'_>,
    name: &str,
    rows: usize,
    cols: usize,
) -> Result<Matrix<Int>, ParseError> {
    match cursor.next() {
        Some(line) => {
            if !(line.tokens.len() == 1 && line.tokens[0].1 == name) {
                return Err(ParseError {
                    line: line.number,
                    col: line.tokens[0].0,
                    message: format!("expected block header `{name}`"),
                });
            }
        }
        None => return Err(cursor.eof_error(format!("expected block header `{name}`"))),
    }
    let mut data: Vec<Vec<Int>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let line = match cursor.next() {
            Some(line) => line,
            None => {
                return Err(cursor.eof_error(format!(
                    "block `{name}`: expected row {} of {rows}",
                    r + 1
                )))
            }
        };
        if line.tokens.len() != cols {
            return Err(ParseError {
                line: line.number,
                col: line.tokens[0].0,
                message: format!(
                    "block `{name}` row {}: expected {cols} integers, got {}",
                    r + 1,
                    line.tokens.len()
                ),
            });
        }
        let mut row = Vec::with_capacity(cols);
        for &(col, tok) in &line.tokens {
            let value: Int = tok.parse().map_err(|_| ParseError {
                line: line.number,
                col,
                message: format!("expected an integer, got `{tok}`"),
            })?;
            row.push(value);
        }
        data.push(row);
    }
    if rows == 0 || cols == 0 {
        Ok(Matrix::zero(rows, cols))
    } else {
        Ok(Matrix::from_rows(data))
    }
}

/// Parse a document into a validated `SeifertData`.
pub fn parse(input: &str) -> Result<SeifertData, DocumentError> {
    let (g, m, seifert, linking, bands) = parse_blocks(input).map_err(DocumentError::Parse)?;
    SeifertData::new(g, m, seifert, linking, bands).map_err(DocumentError::Validation)
}

fn parse_blocks(input: &str) -> Result<(usize, usize, Matrix<Int>, Matrix<Int>, Matrix<Int>), ParseError> {
    let mut cursor = Cursor { lines: tokenize(input), pos: 0, last_line: 0 };

    // header
    match cursor.next() {
        Some(line) => {
            let ok = line.tokens.len() == 2
                && line.tokens[0].1 == "seifert-data"
                && line.tokens[1].1 == "v1";
            if !ok {
                return Err(ParseError {
                    line: line.number,
                    col: line.tokens[0].0,
                    message: "expected header `seifert-data v1`".into(),
                });
            }
        }
        None => return Err(cursor.eof_error("empty document; expected `seifert-data v1`")),
    }

    let g = read_scalar(&mut cursor, "g")?;
    let m = read_scalar(&mut cursor, "m")?;

    let (seifert, linking) = if g > 0 {
        let seifert = read_block(&mut cursor, "M", 2 * g, 2 * g)?;
        let linking = read_block(&mut cursor, "V", m, 2 * g)?;
        (seifert, linking)
    } else {
        (Matrix::zero(0, 0), Matrix::zero(m, 0))
    };
    let bands = read_block(&mut cursor, "A", m, m)?;

    if let Some(line) = cursor.next() {
        return Err(ParseError {
            line: line.number,
            col: line.tokens[0].0,
            message: "unexpected content after the `A` block".into(),
        });
    }

    Ok((g, m, seifert, linking, bands))
}

/// Render validated data in the canonical form accepted by [`parse`].
pub fn render(data: &SeifertData) -> String {
    let mut out = String::from("seifert-data v1\n");
    out.push_str(&format!("g {}\n", data.genus()));
    out.push_str(&format!("m {}\n", data.components()));
    let push_block = |out: &mut String, name: &str, m: &Matrix<Int>| {
        out.push_str(name);
        out.push('\n');
        for i in 0..m.rows() {
            let row: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    };
    if data.genus() > 0 {
        push_block(&mut out, "M", data.seifert_matrix());
        push_block(&mut out, "V", data.linking_matrix());
    }
    push_block(&mut out, "A", data.band_matrix());
    out
}
