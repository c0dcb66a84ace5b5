//! Cycle-notation parsing, the group file format, and canonical JSON reports.
//!
//! Group files look like
//!
//! ```text
//! degree: 4
//! generators: (1 2 3 4), (1 2)
//! ```
//!
//! Points are 1-based, whitespace is insignificant, generators are separated by
//! commas and `#` starts a comment. Points inside a cycle may be separated by
//! spaces or commas.

use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::primes::PrimeSet;

pub const REPORT_SCHEMA: &str = "hallstone-report/1";

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Scanner {
            chars: text.chars().peekable(),
            line,
            column: 1,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        })
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_space(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    /// One permutation: a non-empty run of parenthesised cycles.
    fn permutation(&mut self, degree: usize) -> Result<Permutation> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        let mut any = false;
        loop {
            self.skip_space();
            if self.peek() != Some('(') {
                break;
            }
            any = true;
            self.bump();
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                self.skip_space();
                match self.peek() {
                    Some(')') => {
                        self.bump();
                        break;
                    }
                    Some(',') if !cycle.is_empty() => {
                        self.bump();
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let (line, column) = (self.line, self.column);
                        let mut value: usize = 0;
                        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
                            value = value.saturating_mul(10).saturating_add(d as usize);
                            self.bump();
                        }
                        let fail = |message: String| Err(Error::Parse { line, column, message });
                        if value == 0 || value > degree {
                            return fail(format!("point {value} out of range 1..={degree}"));
                        }
                        if std::mem::replace(&mut seen[value - 1], true) {
                            return fail(format!("point {value} appears twice"));
                        }
                        cycle.push(value);
                    }
                    Some(c) => return self.error(format!("unexpected {c:?} in cycle")),
                    None => return self.error("unclosed cycle"),
                }
            }
            for (i, &point) in cycle.iter().enumerate() {
                images[point - 1] = (cycle[(i + 1) % cycle.len()] - 1) as u32;
            }
        }
        if !any {
            return match self.peek() {
                Some(c) => self.error(format!("expected '(' but found {c:?}")),
                None => self.error("expected '('"),
            };
        }
        Permutation::from_images(images)
    }
}

/// Parses one permutation in cycle notation, e.g. `(1 2 3)(4 5)` or `()`.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation> {
    let mut scanner = Scanner::new(text, 1);
    let perm = scanner.permutation(degree)?;
    scanner.skip_space();
    match scanner.peek() {
        None => Ok(perm),
        Some(c) => scanner.error(format!("unexpected {c:?} after permutation")),
    }
}

/// Parses a comma-separated list of permutations; empty text gives no generators.
pub fn parse_generator_list(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    parse_list(&mut Scanner::new(text, 1), degree)
}

fn parse_list(scanner: &mut Scanner<'_>, degree: usize) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    scanner.skip_space();
    if scanner.peek().is_none() {
        return Ok(out);
    }
    loop {
        out.push(scanner.permutation(degree)?);
        scanner.skip_space();
        match scanner.peek() {
            None => return Ok(out),
            Some(',') => {
                scanner.bump();
            }
            Some(c) => return scanner.error(format!("expected ',' between generators, found {c:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

/// Parses the group file format from text.
pub fn parse_group_text(text: &str) -> Result<GroupFile> {
    let mut degree: Option<usize> = None;
    let mut lines = text.lines().enumerate().peekable();
    while let Some((index, raw)) = lines.next() {
        let line_no = index + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let fail = |column: usize, message: String| Error::Parse {
            line: line_no,
            column,
            message,
        };
        let Some((key, value)) = content.split_once(':') else {
            return Err(fail(1, "expected 'key: value'".into()));
        };
        let value_column = key.len() + 2;
        match key.trim() {
            "degree" => {
                let parsed = value.trim().parse::<usize>().ok().filter(|&d| d >= 1);
                degree = Some(parsed.ok_or_else(|| {
                    fail(value_column, format!("invalid degree {:?}", value.trim()))
                })?);
            }
            "generators" => {
                let Some(degree) = degree else {
                    return Err(fail(1, "'generators' before 'degree'".into()));
                };
                // The list runs to the end of the file.
                let mut rest = String::from(value);
                for (_, more) in lines.by_ref() {
                    rest.push('\n');
                    rest.push_str(more);
                }
                let mut scanner = Scanner::new(&rest, line_no);
                scanner.column = value_column;
                let generators = parse_list(&mut scanner, degree)?;
                return Ok(GroupFile { degree, generators });
            }
            other => return Err(fail(1, format!("unknown key {other:?}"))),
        }
    }
    match degree {
        Some(degree) => Ok(GroupFile {
            degree,
            generators: Vec::new(),
        }),
        None => Err(Error::Parse {
            line: 1,
            column: 1,
            message: "missing 'degree'".into(),
        }),
    }
}

pub fn parse_group_file(path: impl AsRef<Path>) -> Result<GroupFile> {
    parse_group_text(&std::fs::read_to_string(path)?)
}

pub fn format_group_file(degree: usize, generators: &[Permutation]) -> String {
    let list: Vec<String> = generators.iter().map(ToString::to_string).collect();
    if list.is_empty() {
        format!("degree: {degree}\ngenerators:\n")
    } else {
        format!("degree: {degree}\ngenerators: {}\n", list.join(", "))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupIdent {
    pub name: String,
    pub degree: usize,
    pub order: u64,
    pub generators: Vec<String>,
}

impl GroupIdent {
    pub fn new(name: &str, group: &Group) -> Self {
        GroupIdent {
            name: name.to_string(),
            degree: group.degree(),
            order: group.order() as u64,
            generators: group.generators().iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub group: Option<GroupIdent>,
    pub pi: Option<PrimeSet>,
    pub results: serde_json::Value,
}

impl ReportDocument {
    pub fn new(group: Option<GroupIdent>, pi: Option<PrimeSet>, results: impl Serialize) -> Result<Self> {
        Ok(ReportDocument {
            schema: REPORT_SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            group,
            pi,
            results: serde_json::to_value(results)?,
        })
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_canonical_json(&self) -> Result<String> {
        // Routing through `Value` sorts every object's keys.
        let value = serde_json::to_value(self)?;
        let mut text = serde_json::to_string_pretty(&value)?;
        text.push('\n');
        Ok(text)
    }
}

pub fn write_report(doc: &ReportDocument, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, doc.to_canonical_json()?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar_example() {
        let file = parse_group_text("degree: 4\ngenerators: (1 2 3 4), (1 2)").unwrap();
        assert_eq!(file.degree, 4);
        assert_eq!(file.generators.len(), 2);
        assert_eq!(file.generators[0].to_string(), "(1 2 3 4)");
        assert!(parse_group_text("degree: 3\ngenerators:").unwrap().generators.is_empty());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_group_text("degree: 3\ngenerators: (1 2), (1 4)").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 23, .. }), "{err}");
        let err = parse_group_text("degree: 3\ngenerators: (1 2 1)").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 18, .. }), "{err}");
        let err = parse_group_text("degree: 3\ngenerators: (1 2").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn identity_and_commas() {
        assert!(parse_permutation("()", 3).unwrap().is_identity());
        assert_eq!(parse_permutation("(1,2,3)", 3).unwrap().to_string(), "(1 2 3)");
    }
}
