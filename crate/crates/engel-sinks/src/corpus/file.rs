//! The group-file format: permutation generators in disjoint-cycle
//! notation, or a raw Cayley table.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! degree: 3
//! (1 2)
//! (1 2 3)
//! ```
//!
//! or
//!
//! ```text
//! cayley: 2
//! 0 1
//! 1 0
//! ```
//!
//! Cycle points are 1-based. A point may appear at most once per
//! generator line; overlapping cycles within one generator are rejected.

use std::path::Path;

use crate::error::CorpusError;
use crate::group::{BuildOptions, GroupTable};
use crate::perm::{Perm, PermGenSet};

pub fn load_group(path: &Path, opts: &BuildOptions) -> Result<GroupTable, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Io(e.to_string()))?;
    parse_group_text(&text, opts)
}

/// Parses the documented group-file format from a string.
pub fn parse_group_text(text: &str, opts: &BuildOptions) -> Result<GroupTable, CorpusError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(CorpusError::Parse {
        line: 1,
        message: "empty input: expected a `degree:` or `cayley:` header".into(),
    })?;

    if let Some(rest) = header.strip_prefix("degree:") {
        let degree: usize = rest.trim().parse().map_err(|_| CorpusError::Parse {
            line: header_line,
            message: format!("bad degree {:?}", rest.trim()),
        })?;
        if degree == 0 {
            return Err(CorpusError::Parse {
                line: header_line,
                message: "degree must be at least 1".into(),
            });
        }
        let mut generators = Vec::new();
        for (line_no, line) in lines {
            generators.push(parse_cycles(line, line_no, degree)?);
        }
        let gens = PermGenSet::new(degree, generators).map_err(CorpusError::Group)?;
        Ok(GroupTable::from_generators(&gens, opts)?)
    } else if let Some(rest) = header.strip_prefix("cayley:") {
        let order: usize = rest.trim().parse().map_err(|_| CorpusError::Parse {
            line: header_line,
            message: format!("bad order {:?}", rest.trim()),
        })?;
        let mut rows = Vec::with_capacity(order);
        for (line_no, line) in lines {
            let row: Result<Vec<usize>, _> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| CorpusError::Parse {
                        line: line_no,
                        message: format!("bad table entry {tok:?}"),
                    })
                })
                .collect();
            rows.push(row?);
        }
        if rows.len() != order {
            return Err(CorpusError::Parse {
                line: header_line,
                message: format!("expected {order} rows, found {}", rows.len()),
            });
        }
        Ok(GroupTable::from_cayley_table(&rows, opts)?)
    } else {
        Err(CorpusError::Parse {
            line: header_line,
            message: format!("unrecognized header {header:?}"),
        })
    }
}

/// One generator line: whitespace-separated 1-based points grouped by
/// parentheses, e.g. `(1 2)(3 4 5)`.
fn parse_cycles(line: &str, line_no: usize, degree: usize) -> Result<Perm, CorpusError> {
    let fail = |message: String| CorpusError::Parse {
        line: line_no,
        message,
    };
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut touched = vec![false; degree];
    let mut chars = line.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        if c != '(' {
            return Err(fail(format!("expected '(' but found {c:?}")));
        }
        let mut cycle: Vec<usize> = Vec::new();
        let mut token = String::new();
        loop {
            match chars.next() {
                Some(')') => {
                    if !token.is_empty() {
                        cycle.push(parse_point(&token, line_no, degree)?);
                    }
                    break;
                }
                Some(ch) if ch.is_whitespace() || ch == ',' => {
                    if !token.is_empty() {
                        cycle.push(parse_point(&token, line_no, degree)?);
                        token.clear();
                    }
                }
                Some(ch) if ch.is_ascii_digit() => token.push(ch),
                Some(ch) => return Err(fail(format!("unexpected character {ch:?} in cycle"))),
                None => return Err(fail("unclosed cycle: missing ')'".into())),
            }
        }
        for (i, &pt) in cycle.iter().enumerate() {
            if touched[pt] {
                return Err(fail(format!(
                    "point {} appears twice in one generator",
                    pt + 1
                )));
            }
            touched[pt] = true;
            images[pt] = cycle[(i + 1) % cycle.len()] as u32;
        }
    }
    Perm::from_images(images).map_err(CorpusError::Group)
}

fn parse_point(token: &str, line_no: usize, degree: usize) -> Result<usize, CorpusError> {
    let value: usize = token.parse().map_err(|_| CorpusError::Parse {
        line: line_no,
        message: format!("bad point {token:?}"),
    })?;
    if value == 0 || value > degree {
        return Err(CorpusError::Parse {
            line: line_no,
            message: format!("point {value} outside 1..={degree}"),
        });
    }
    Ok(value - 1)
}
