//! The line-oriented text format, versioned by a leading `ohg 1` line.
//!
//! ```text
//! ohg 1
//! # name: triangle
//! v u
//! e e1
//! i u e1 1 +
//! ```
//!
//! `#` lines are comments; `# name:` and `# note:` are recognized as
//! document metadata. Parsing then serializing reproduces the value
//! including element order.

use crate::error::{BuildError, FormatError};
use crate::hypergraph::{EdgeId, Incidence, OrientedHypergraph, Sign, VertexId};

pub const FORMAT_VERSION: u32 = 1;

/// A hypergraph document: the value plus optional metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphDocument {
    pub version: u32,
    pub name: Option<String>,
    pub notes: Vec<String>,
    pub hypergraph: OrientedHypergraph,
}

impl HypergraphDocument {
    pub fn new(hypergraph: OrientedHypergraph) -> Self {
        HypergraphDocument {
            version: FORMAT_VERSION,
            name: None,
            notes: Vec::new(),
            hypergraph,
        }
    }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses a document. Duplicate declarations are reported with their
/// location; the remaining validity rules are delegated to `build` and
/// surface as semantic errors.
pub fn parse(text: &str, strict: bool) -> Result<HypergraphDocument, FormatError> {
    let mut version: Option<u32> = None;
    let mut name: Option<String> = None;
    let mut notes: Vec<String> = Vec::new();
    let mut vertices: Vec<VertexId> = Vec::new();
    let mut edges: Vec<EdgeId> = Vec::new();
    let mut incidences: Vec<Incidence> = Vec::new();
    let mut id_lines: Vec<(String, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end();
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim_start();
            if let Some(n) = comment.strip_prefix("name:") {
                name = Some(n.trim().to_owned());
            } else if let Some(n) = comment.strip_prefix("note:") {
                notes.push(n.trim().to_owned());
            }
            continue;
        }
        let col_of = |token: &str| line.find(token).map_or(1, |p| p + 1);
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if version.is_none() {
            if tokens.len() != 2 || tokens[0] != "ohg" {
                return Err(syntax(line_no, 1, "expected the version line `ohg 1`"));
            }
            let v: u32 = tokens[1]
                .parse()
                .map_err(|_| syntax(line_no, col_of(tokens[1]), "bad version number"))?;
            if v != FORMAT_VERSION {
                return Err(syntax(
                    line_no,
                    col_of(tokens[1]),
                    format!("unsupported format version {v}"),
                ));
            }
            version = Some(v);
            continue;
        }
        match tokens[0] {
            "v" => {
                if tokens.len() != 2 {
                    return Err(syntax(line_no, 1, "expected `v <id>`"));
                }
                if vertices.iter().any(|x| x.as_str() == tokens[1])
                    || edges.iter().any(|x| x.as_str() == tokens[1])
                {
                    return Err(syntax(
                        line_no,
                        col_of(tokens[1]),
                        format!("duplicate id `{}`", tokens[1]),
                    ));
                }
                vertices.push(VertexId::new(tokens[1]));
                id_lines.push((tokens[1].to_owned(), line_no));
            }
            "e" => {
                if tokens.len() != 2 {
                    return Err(syntax(line_no, 1, "expected `e <id>`"));
                }
                if vertices.iter().any(|x| x.as_str() == tokens[1])
                    || edges.iter().any(|x| x.as_str() == tokens[1])
                {
                    return Err(syntax(
                        line_no,
                        col_of(tokens[1]),
                        format!("duplicate id `{}`", tokens[1]),
                    ));
                }
                edges.push(EdgeId::new(tokens[1]));
                id_lines.push((tokens[1].to_owned(), line_no));
            }
            "i" => {
                if tokens.len() != 5 {
                    return Err(syntax(line_no, 1, "expected `i <vertex> <edge> <slot> <+|->`"));
                }
                let slot: u32 = tokens[3]
                    .parse()
                    .map_err(|_| syntax(line_no, col_of(tokens[3]), "bad slot number"))?;
                if slot == 0 {
                    return Err(syntax(line_no, col_of(tokens[3]), "slots start at 1"));
                }
                let sign = match tokens[4] {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => {
                        return Err(syntax(
                            line_no,
                            col_of(other),
                            format!("bad sign `{other}`, expected + or -"),
                        ))
                    }
                };
                incidences.push(Incidence::new(tokens[1], tokens[2], slot, sign));
                id_lines.push((format!("{} {}", tokens[1], tokens[2]), line_no));
            }
            other => {
                return Err(syntax(
                    line_no,
                    col_of(other),
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }
    if version.is_none() {
        return Err(syntax(1, 1, "empty document; expected `ohg 1`"));
    }
    let hypergraph = OrientedHypergraph::build(vertices, edges, incidences, strict)
        .map_err(|source| FormatError::Semantic {
            line: locate(&id_lines, &source),
            source,
        })?;
    Ok(HypergraphDocument {
        version: FORMAT_VERSION,
        name,
        notes,
        hypergraph,
    })
}

fn locate(id_lines: &[(String, usize)], err: &BuildError) -> Option<usize> {
    let needle: Option<String> = match err {
        BuildError::UnknownId(id) | BuildError::DuplicateId(id) | BuildError::MalformedId(id) => {
            Some(id.clone())
        }
        BuildError::SlotGap { vertex, edge, .. } | BuildError::MixedSigns { vertex, edge } => {
            Some(format!("{vertex} {edge}"))
        }
    };
    needle.and_then(|n| {
        id_lines
            .iter()
            .find(|(id, _)| *id == n || id.split_whitespace().any(|t| t == n))
            .map(|(_, line)| *line)
    })
}

/// Convenience wrapper returning just the hypergraph.
pub fn parse_hypergraph(text: &str, strict: bool) -> Result<OrientedHypergraph, FormatError> {
    parse(text, strict).map(|d| d.hypergraph)
}

pub fn serialize(doc: &HypergraphDocument) -> String {
    let mut out = format!("ohg {}\n", doc.version);
    if let Some(name) = &doc.name {
        out.push_str(&format!("# name: {name}\n"));
    }
    for note in &doc.notes {
        out.push_str(&format!("# note: {note}\n"));
    }
    let g = &doc.hypergraph;
    for v in g.vertices() {
        out.push_str(&format!("v {v}\n"));
    }
    for e in g.edges() {
        out.push_str(&format!("e {e}\n"));
    }
    for i in g.incidences() {
        out.push_str(&format!("i {} {} {} {}\n", i.vertex, i.edge, i.slot, i.sign));
    }
    out
}

pub fn serialize_hypergraph(g: &OrientedHypergraph) -> String {
    serialize(&HypergraphDocument::new(g.clone()))
}
