//! Text formats: approval matrices and non-betweenness instances.
//!
//! Both formats are whitespace separated, `#` starts a comment that runs to
//! the end of the line, and blank lines are ignored. Ids in files are 1-based.

use std::fmt;

use psc_core::nb::{Axis, NbInstance};
use psc_core::profile::ApprovalProfile;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(
                f,
                "line {}, column {}: {}",
                self.line, self.column, self.message
            )
        }
    }
}

impl std::error::Error for ParseError {}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn number(&self, what: &str) -> Result<usize, ParseError> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected {what}, found '{}'", self.text)))
    }
}

/// Non-empty lines with comments stripped, each split into tokens.
fn lines(text: &str) -> Vec<(usize, Vec<Token<'_>>)> {
    let mut out = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (byte, ch) in content.char_indices().chain([(content.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(byte),
                (true, Some(s)) => {
                    let column = content[..s].chars().count() + 1;
                    tokens.push(Token {
                        text: &content[s..byte],
                        line: index + 1,
                        column,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push((index + 1, tokens));
        }
    }
    out
}

fn at_end(text: &str, message: impl Into<String>) -> ParseError {
    ParseError {
        line: text.lines().count().max(1),
        column: 1,
        message: message.into(),
    }
}

/// `m n`, then `m` rows (candidates) of `n` entries (voters).
pub fn parse_approval_matrix(text: &str) -> Result<ApprovalProfile, ParseError> {
    let lines = lines(text);
    let mut rows = lines.iter();
    let (_, header) = rows
        .next()
        .ok_or_else(|| at_end(text, "empty input, expected 'm n'"))?;
    if header.len() != 2 {
        let t = header.get(2).unwrap_or(&header[0]);
        return Err(t.error("header must be 'm n' (candidates, voters)"));
    }
    let m = header[0].number("candidate count")?;
    let n = header[1].number("voter count")?;
    if m == 0 || n == 0 {
        return Err(header[0].error("profile needs at least one candidate and one voter"));
    }
    let mut entries = Vec::with_capacity(m * n);
    for row in 0..m {
        let (line, tokens) = rows
            .next()
            .ok_or_else(|| at_end(text, format!("expected {m} rows, found {row}")))?;
        if tokens.len() != n {
            let t = tokens.get(n).unwrap_or(&tokens[tokens.len() - 1]);
            return Err(ParseError {
                line: *line,
                column: t.column,
                message: format!("row {} has {} entries, expected {n}", row + 1, tokens.len()),
            });
        }
        for t in tokens {
            match t.text {
                "0" => entries.push(0),
                "1" => entries.push(1),
                other => return Err(t.error(format!("expected 0 or 1, found '{other}'"))),
            }
        }
    }
    if let Some((_, tokens)) = rows.next() {
        return Err(tokens[0].error(format!("unexpected data after {m} rows")));
    }
    ApprovalProfile::new(m, n, &entries).map_err(|e| at_end(text, e.to_string()))
}

/// `n`, then one triple `i j k` per line.
pub fn parse_nb_instance(text: &str) -> Result<NbInstance, ParseError> {
    let lines = lines(text);
    let mut rows = lines.iter();
    let (_, header) = rows
        .next()
        .ok_or_else(|| at_end(text, "empty input, expected 'n'"))?;
    if header.len() != 1 {
        return Err(header[1].error("header must be the ground size 'n'"));
    }
    let n = header[0].number("ground size")?;
    let mut inst = NbInstance::new(n, []).map_err(|e| header[0].error(e.to_string()))?;
    for (_, tokens) in rows {
        if tokens.len() != 3 {
            return Err(tokens[0].error("expected a triple 'i j k'"));
        }
        let mut ids = [0usize; 3];
        for (slot, t) in ids.iter_mut().zip(tokens) {
            let id = t.number("voter id")?;
            if id == 0 || id > n {
                return Err(t.error(format!("voter id {id} outside 1..={n}")));
            }
            *slot = id - 1;
        }
        if ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2] {
            return Err(tokens[0].error("triple repeats a voter"));
        }
        inst.insert((ids[0], ids[1], ids[2]))
            .map_err(|e| tokens[0].error(e.to_string()))?;
    }
    Ok(inst)
}

/// A comma separated list of 1-based voter ids.
pub fn parse_axis(text: &str, voters: usize) -> Result<Axis, ParseError> {
    let invalid = |message: String| ParseError {
        line: 0,
        column: 0,
        message,
    };
    let mut order = Vec::new();
    for part in text.split(',') {
        let id: usize = part
            .trim()
            .parse()
            .map_err(|_| invalid(format!("axis entry '{}' is not a voter id", part.trim())))?;
        if id == 0 || id > voters {
            return Err(invalid(format!("axis entry {id} outside 1..={voters}")));
        }
        order.push(id - 1);
    }
    if order.len() != voters {
        return Err(invalid(format!(
            "axis lists {} voters, profile has {voters}",
            order.len()
        )));
    }
    Axis::new(order).map_err(|_| invalid("axis repeats a voter".to_string()))
}

pub fn format_approval_matrix(p: &ApprovalProfile) -> String {
    let mut out = format!("{} {}\n", p.candidates(), p.voters());
    for row in p.rows() {
        let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
