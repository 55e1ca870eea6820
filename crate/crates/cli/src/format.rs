//! Line-oriented input files.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>          (exactly m of these, 0-based vertices)
//! wv <v> <weight>    (optional, default 1)
//! we <edge> <weight> (optional, default 1; edge = position among the e lines)
//! ```
//!
//! Cell files:
//!
//! ```text
//! t c4c8 | benzenoid
//! c <i> <j>
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use pcube::chem::Cell;
use pcube::{Error as CoreError, Graph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Splits into `(line number, fields)`, skipping blanks and `#` comments.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then(|| (i + 1, body.split_whitespace().collect()))
    })
}

fn field<T: FromStr>(line: usize, fields: &[&str], k: usize, what: &str) -> Result<T, ParseError> {
    fields[k].parse().or_else(|_| {
        fail(
            line,
            format!("{what} `{}` is not a valid integer", fields[k]),
        )
    })
}

fn arity(line: usize, fields: &[&str], n: usize) -> Result<(), ParseError> {
    if fields.len() != n {
        return fail(
            line,
            format!(
                "`{}` takes {} values, found {}",
                fields[0],
                n - 1,
                fields.len() - 1
            ),
        );
    }
    Ok(())
}

/// A parsed graph file. Weights are `None` when the file sets none of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub vertex_weights: Option<Vec<u64>>,
    pub edge_weights: Option<Vec<u64>>,
}

impl GraphFile {
    pub fn unweighted(graph: Graph) -> Self {
        Self {
            graph,
            vertex_weights: None,
            edge_weights: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges = Vec::new();
        let mut edge_lines = Vec::new();
        let mut vw: Vec<(usize, usize, u64)> = Vec::new();
        let mut ew: Vec<(usize, usize, u64)> = Vec::new();
        let mut last_line = 0;

        for (line, f) in records(text) {
            last_line = line;
            match (f[0], header) {
                ("p", None) => {
                    arity(line, &f, 3)?;
                    header = Some((
                        line,
                        field(line, &f, 1, "vertex count")?,
                        field(line, &f, 2, "edge count")?,
                    ));
                }
                ("p", Some((first, ..))) => {
                    return fail(line, format!("second header, first was on line {first}"))
                }
                (_, None) => return fail(line, "expected header `p <n> <m>` first"),
                ("e", Some(_)) => {
                    arity(line, &f, 3)?;
                    edges.push((field(line, &f, 1, "vertex")?, field(line, &f, 2, "vertex")?));
                    edge_lines.push(line);
                }
                ("wv", Some(_)) => {
                    arity(line, &f, 3)?;
                    vw.push((
                        line,
                        field(line, &f, 1, "vertex")?,
                        field(line, &f, 2, "weight")?,
                    ));
                }
                ("we", Some(_)) => {
                    arity(line, &f, 3)?;
                    ew.push((
                        line,
                        field(line, &f, 1, "edge index")?,
                        field(line, &f, 2, "weight")?,
                    ));
                }
                (other, Some(_)) => return fail(line, format!("unknown record `{other}`")),
            }
        }

        let Some((header_line, n, m)) = header else {
            return fail(last_line.max(1), "missing header `p <n> <m>`");
        };
        if edges.len() != m {
            return fail(
                last_line,
                format!(
                    "header on line {header_line} declares {m} edges, found {}",
                    edges.len()
                ),
            );
        }
        let graph = Graph::new(n, &edges).or_else(|e| {
            let line = match e {
                CoreError::SelfLoop { edge, .. }
                | CoreError::DuplicateEdge { edge, .. }
                | CoreError::VertexOutOfRange { edge, .. } => edge_lines[edge],
                _ => header_line,
            };
            fail(line, e.to_string())
        })?;

        let vertex_weights = spread(vw, n, "vertex")?;
        let edge_weights = spread(ew, m, "edge index")?;
        Ok(Self {
            graph,
            vertex_weights,
            edge_weights,
        })
    }

    /// Serializes back to the file format. Weight lines are written only
    /// for weights that differ from 1.
    pub fn write(&self) -> String {
        let g = &self.graph;
        let mut out = String::new();
        writeln!(out, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
        for &(u, v) in g.edges() {
            writeln!(out, "e {u} {v}").unwrap();
        }
        for (key, weights) in [("wv", &self.vertex_weights), ("we", &self.edge_weights)] {
            for (i, &w) in weights.iter().flatten().enumerate() {
                if w != 1 {
                    writeln!(out, "{key} {i} {w}").unwrap();
                }
            }
        }
        out
    }
}

fn spread(
    entries: Vec<(usize, usize, u64)>,
    len: usize,
    what: &str,
) -> Result<Option<Vec<u64>>, ParseError> {
    if entries.is_empty() {
        return Ok(None);
    }
    let mut out = vec![1; len];
    let mut seen = vec![0usize; len];
    for (line, idx, w) in entries {
        if idx >= len {
            return fail(line, format!("{what} {idx} is outside 0..{len}"));
        }
        if seen[idx] != 0 {
            return fail(
                line,
                format!("{what} {idx} already weighted on line {}", seen[idx]),
            );
        }
        seen[idx] = line;
        out[idx] = w;
    }
    Ok(Some(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lattice {
    C4C8,
    Benzenoid,
}

impl Lattice {
    pub fn name(self) -> &'static str {
        match self {
            Lattice::C4C8 => "c4c8",
            Lattice::Benzenoid => "benzenoid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellFile {
    pub lattice: Lattice,
    pub cells: BTreeSet<Cell>,
}

impl CellFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lattice = None;
        let mut cells = BTreeSet::new();
        let mut last_line = 0;
        for (line, f) in records(text) {
            last_line = line;
            match (f[0], lattice) {
                ("t", None) => {
                    arity(line, &f, 2)?;
                    lattice = Some(match f[1] {
                        "c4c8" => Lattice::C4C8,
                        "benzenoid" => Lattice::Benzenoid,
                        other => return fail(line, format!("unknown lattice `{other}`")),
                    });
                }
                ("t", Some(_)) => return fail(line, "second lattice header"),
                (_, None) => return fail(line, "expected header `t c4c8` or `t benzenoid` first"),
                ("c", Some(_)) => {
                    arity(line, &f, 3)?;
                    let c = (
                        field(line, &f, 1, "coordinate")?,
                        field(line, &f, 2, "coordinate")?,
                    );
                    if !cells.insert(c) {
                        return fail(line, format!("cell ({}, {}) listed twice", c.0, c.1));
                    }
                }
                (other, Some(_)) => return fail(line, format!("unknown record `{other}`")),
            }
        }
        let Some(lattice) = lattice else {
            return fail(last_line.max(1), "missing header `t c4c8` or `t benzenoid`");
        };
        if cells.is_empty() {
            return fail(last_line, "no cells listed");
        }
        Ok(Self { lattice, cells })
    }
}

/// Either kind of input, told apart by the first record.
#[derive(Debug, Clone)]
pub enum InputFile {
    Graph(GraphFile),
    Cells(CellFile),
}

impl InputFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        match records(text).next() {
            Some((_, f)) if f[0] == "t" => CellFile::parse(text).map(InputFile::Cells),
            _ => GraphFile::parse(text).map(InputFile::Graph),
        }
    }
}
