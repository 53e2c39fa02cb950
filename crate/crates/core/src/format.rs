//! Text formats for path families and graphs.
//!
//! Path files hold one path per line as `P<id>: (x1,y1) (x2,y2) ...` with the
//! full vertex chain. Ids are the target-graph labels and must form a
//! permutation of `0..n`. Graph files start with `n <count>` followed by one
//! `u v` edge per line. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::epgt::Representation;
use crate::graph::SimpleGraph;
use crate::lattice::{GridPoint, LatticePath};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("path ids must be a permutation of 0..{0}")]
    BadIds(usize),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_point(token: &str, line: usize) -> Result<GridPoint, FormatError> {
    let inner = token
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| parse_err(line, format!("expected (x,y), got `{token}`")))?;
    let (x, y) = inner
        .split_once(',')
        .ok_or_else(|| parse_err(line, format!("expected (x,y), got `{token}`")))?;
    let coord = |s: &str| {
        s.trim()
            .parse::<i32>()
            .map_err(|_| parse_err(line, format!("bad coordinate `{s}`")))
    };
    Ok(GridPoint::new(coord(x)?, coord(y)?))
}

/// Parses one `P<id>: ...` line into its id and path.
pub fn parse_path_line(text: &str, line: usize) -> Result<(usize, LatticePath), FormatError> {
    let (head, rest) = text
        .split_once(':')
        .ok_or_else(|| parse_err(line, "missing `:` after path id"))?;
    let id = head
        .trim()
        .strip_prefix('P')
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(|| parse_err(line, format!("bad path id `{}`", head.trim())))?;
    let points = rest
        .split_whitespace()
        .map(|t| parse_point(t, line))
        .collect::<Result<Vec<_>, _>>()?;
    let path = LatticePath::new(points).map_err(|e| parse_err(line, e.to_string()))?;
    Ok((id, path))
}

pub fn parse_paths(text: &str) -> Result<Representation, FormatError> {
    let mut ids = Vec::new();
    let mut paths = Vec::new();
    for (line, l) in content_lines(text) {
        let (id, path) = parse_path_line(l, line)?;
        ids.push(id);
        paths.push(path);
    }
    let n = paths.len();
    Representation::labeled(paths, ids).map_err(|_| FormatError::BadIds(n))
}

/// Writes one line per path. Unlabelled paths use their index as id.
pub fn write_paths(rep: &Representation) -> String {
    let mut out = String::new();
    for (i, p) in rep.paths.iter().enumerate() {
        let id = rep.labels().map_or(i, |l| l[i]);
        let _ = write!(out, "P{id}:");
        for v in p.vertices() {
            let _ = write!(out, " ({},{})", v.x, v.y);
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph, FormatError> {
    let mut lines = content_lines(text);
    let (first_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n <count>` header"))?;
    let n = header
        .strip_prefix('n')
        .and_then(|s| s.trim().parse::<usize>().ok())
        .ok_or_else(|| parse_err(first_line, format!("expected `n <count>`, got `{header}`")))?;
    let mut g = SimpleGraph::new(n);
    for (line, l) in lines {
        let nums: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = nums.as_slice() else {
            return Err(parse_err(line, format!("expected `u v`, got `{l}`")));
        };
        let vertex = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(line, format!("bad vertex `{s}`")))
        };
        g.add_edge(vertex(u)?, vertex(v)?)
            .map_err(|e| parse_err(line, e.to_string()))?;
    }
    Ok(g)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
