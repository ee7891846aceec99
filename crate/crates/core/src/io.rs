//! Plain-text exchange formats for graphs and site sets.
//!
//! Edge lists: a header line `n m kind` with kind `u` (undirected) or `d`
//! (directed), then exactly m lines `u v`. Sites: a count line, then one
//! `x y r` line per site. Coordinates are written with 17 significant
//! digits so write-read round trips reproduce every f64 bit for bit.

use thiserror::Error;

use crate::geometry::{GeometryError, Site, SiteSet};
use crate::graph::{DirectedGraph, GraphError, UndirectedGraph, Vertex};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    BadEdge {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("line {line}: {source}")]
    BadSite {
        line: usize,
        #[source]
        source: GeometryError,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// A parsed edge list, either flavor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Undirected(UndirectedGraph),
    Directed(DirectedGraph),
}

/// Parses an edge-list document.
pub fn read_edge_list(text: &str) -> Result<ParsedGraph, FormatError> {
    let mut lines = NumberedLines::new(text);
    let (line_no, header) = lines
        .next_content()
        .ok_or_else(|| syntax(1, "missing header line `n m kind`"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(syntax(line_no, "header must be `n m kind`"));
    }
    let n: usize = parse_field(line_no, fields[0], "vertex count")?;
    let m: usize = parse_field(line_no, fields[1], "edge count")?;
    let directed = match fields[2] {
        "u" => false,
        "d" => true,
        other => return Err(syntax(line_no, format!("kind must be `u` or `d`, got `{other}`"))),
    };

    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for _ in 0..m {
        let (line_no, content) = lines
            .next_content()
            .ok_or_else(|| syntax(lines.consumed() + 1, format!("expected {m} edge lines")))?;
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(syntax(line_no, "edge line must be `u v`"));
        }
        let u: Vertex = parse_field(line_no, fields[0], "endpoint")?;
        let v: Vertex = parse_field(line_no, fields[1], "endpoint")?;
        // Validate here so the error names the offending line.
        let bad = |source: GraphError| FormatError::BadEdge { line: line_no, source };
        for w in [u, v] {
            if (w as usize) >= n {
                return Err(bad(GraphError::VertexOutOfRange { vertex: w, n }));
            }
        }
        if u == v {
            return Err(bad(GraphError::SelfLoop(u)));
        }
        let key = if directed {
            ((u as u64) << 32) | v as u64
        } else {
            ((u.min(v) as u64) << 32) | u.max(v) as u64
        };
        if !seen.insert(key) {
            return Err(bad(GraphError::DuplicateEdge(u, v)));
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next_content() {
        return Err(syntax(line_no, "trailing content after the last edge"));
    }

    Ok(if directed {
        ParsedGraph::Directed(DirectedGraph::build(n, &edges).expect("edges were validated"))
    } else {
        ParsedGraph::Undirected(UndirectedGraph::build(n, &edges).expect("edges were validated"))
    })
}

pub fn write_undirected(g: &UndirectedGraph) -> String {
    let mut out = format!("{} {} u\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_directed(d: &DirectedGraph) -> String {
    let mut out = format!("{} {} d\n", d.n(), d.m());
    for (u, v) in d.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a sites document.
pub fn read_sites(text: &str) -> Result<SiteSet, FormatError> {
    let mut lines = NumberedLines::new(text);
    let (line_no, header) = lines
        .next_content()
        .ok_or_else(|| syntax(1, "missing site count line"))?;
    let n: usize = parse_field(line_no, header.trim(), "site count")?;
    let mut sites = Vec::with_capacity(n);
    let mut site_lines = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, content) = lines
            .next_content()
            .ok_or_else(|| syntax(lines.consumed() + 1, format!("expected {n} site lines")))?;
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(syntax(line_no, "site line must be `x y r`"));
        }
        let x: f64 = parse_field(line_no, fields[0], "coordinate")?;
        let y: f64 = parse_field(line_no, fields[1], "coordinate")?;
        let r: f64 = parse_field(line_no, fields[2], "radius")?;
        sites.push(Site { x, y, r });
        site_lines.push(line_no);
    }
    if let Some((line_no, _)) = lines.next_content() {
        return Err(syntax(line_no, "trailing content after the last site"));
    }
    SiteSet::new(sites).map_err(|e| {
        let line = match &e {
            GeometryError::BadRadius { index, .. } => site_lines[*index],
            GeometryError::BadCoordinates { index } => site_lines[*index],
            GeometryError::NonUnitRadius { index, .. } => site_lines[*index],
        };
        FormatError::BadSite { line, source: e }
    })
}

pub fn write_sites(sites: &SiteSet) -> String {
    let mut out = format!("{}\n", sites.len());
    for s in sites.sites() {
        out.push_str(&format!("{:.16e} {:.16e} {:.16e}\n", s.x, s.y, s.r));
    }
    out
}

/// Iterator over (1-based line number, line) pairs, skipping blank lines.
struct NumberedLines<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
    consumed: usize,
}

impl<'a> NumberedLines<'a> {
    fn new(text: &'a str) -> Self {
        NumberedLines { lines: text.lines().enumerate(), consumed: 0 }
    }

    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.lines.by_ref() {
            self.consumed = i + 1;
            if !line.trim().is_empty() {
                return Some((i + 1, line));
            }
        }
        None
    }

    fn consumed(&self) -> usize {
        self.consumed
    }
}

fn parse_field<T: std::str::FromStr>(
    line: usize,
    field: &str,
    what: &str,
) -> Result<T, FormatError> {
    field
        .parse()
        .map_err(|_| syntax(line, format!("cannot parse {what} `{field}`")))
}
