//! Text formats for inclusion matrices and subgroup pairs.
//!
//! Matrix files start with a `rows cols` header followed by `rows` lines of
//! nonnegative integers. Group specs look like
//!
//! ```text
//! degree 3
//! (1 2)
//! ---
//! (1 2 3)
//! (1 2)
//! level 3
//! ```
//!
//! with the subgroup's generators first and the group's after the `---`.
//! An empty block or a lone `()` denotes the trivial group. `#` starts a
//! comment in both formats.

use num_bigint::BigUint;
use thiserror::Error;

use crate::matrix::{MatrixError, NonNegMatrix};
use crate::sym::{GroupError, ParsePermError, PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Permutation {
        line: usize,
        #[source]
        source: ParsePermError,
    },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_matrix(text: &str) -> Result<NonNegMatrix, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| syntax(hline, format!("bad dimension {t:?}"))))
        .collect::<Result<_, _>>()?;
    let [rows, cols] = dims[..] else {
        return Err(syntax(hline, "header must be `rows cols`"));
    };
    let mut entries = Vec::with_capacity(rows * cols);
    let mut found = 0;
    for (line, text) in lines {
        found += 1;
        if found > rows {
            continue;
        }
        let row: Vec<BigUint> = text
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| syntax(line, format!("bad entry {t:?}"))))
            .collect::<Result<_, _>>()?;
        if row.len() != cols {
            return Err(syntax(line, format!("expected {cols} entries, found {}", row.len())));
        }
        entries.extend(row);
    }
    if found != rows {
        return Err(ParseError::RowCount {
            expected: rows,
            found,
        });
    }
    Ok(NonNegMatrix::new(rows, cols, entries)?)
}

/// Generators of a subgroup pair `H ≤ G`, plus an optional tower level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub subgroup: Vec<Permutation>,
    pub group: Vec<Permutation>,
    pub level: Option<usize>,
}

impl GroupSpec {
    /// Generates both groups, refusing anything above `limit` elements.
    pub fn build(&self, limit: usize) -> Result<(PermGroup, PermGroup), GroupError> {
        let g = PermGroup::generate_bounded(self.degree, self.group.clone(), limit)?;
        let h = PermGroup::generate_bounded(self.degree, self.subgroup.clone(), limit)?;
        g.embed(&h)?;
        Ok((g, h))
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut lines = content_lines(text);
    let (dline, first) = lines.next().ok_or(ParseError::Empty)?;
    let degree = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["degree", k] => k
            .parse::<usize>()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| syntax(dline, format!("bad degree {k:?}")))?,
        _ => return Err(syntax(dline, "first line must be `degree k`")),
    };
    let mut blocks: [Vec<Permutation>; 2] = [Vec::new(), Vec::new()];
    let mut block = 0;
    let mut level = None;
    let mut last = dline;
    for (line, text) in lines {
        last = line;
        if text == "---" {
            if block == 1 {
                return Err(syntax(line, "more than one `---` separator"));
            }
            block = 1;
        } else if let Some(rest) = text.strip_prefix("level") {
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| syntax(line, format!("bad level {:?}", rest.trim())))?;
            level = Some(n);
        } else {
            let p = Permutation::parse_cycles(text, degree)
                .map_err(|source| ParseError::Permutation { line, source })?;
            if !p.is_identity() {
                blocks[block].push(p);
            }
        }
    }
    if block == 0 {
        return Err(syntax(last, "missing `---` between the subgroup and group generators"));
    }
    let [subgroup, group] = blocks;
    Ok(GroupSpec {
        degree,
        subgroup,
        group,
        level,
    })
}
