//! The line-oriented text format.
//!
//! ```text
//! format: 1
//! ground: a1, a2, a3
//! source: circuits
//! {a1,a2}
//! {a3}
//! ```
//!
//! `source: graph` takes a `vertices:` header and lines `a1 = v1 v2`;
//! `source: matrix` takes lines `a1 = 1 0 -1/2`. `#` starts a comment and
//! a line holding only `---` separates documents.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::parse_rational;

use super::document::{is_label, ColumnLine, DocumentSource, EdgeLine, MatroidDocument};

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    /// 1-based character column of a byte offset into the line.
    fn column(&self, offset: usize) -> usize {
        self.text[..offset].chars().count() + 1
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.number,
            column: self.column(offset),
            message: message.into(),
        }
    }

    /// Offset of `part`, which must be a slice of this line.
    fn offset_of(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize
    }

    /// Whitespace-separated tokens with their byte offsets.
    fn tokens<'b>(&self, part: &'b str) -> Vec<(usize, &'b str)> {
        let base = self.offset_of(part);
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in part.char_indices() {
            match (ch.is_whitespace(), start) {
                (true, Some(s)) => {
                    out.push((base + s, &part[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((base + s, &part[s..]));
        }
        out
    }

    /// Comma-separated labels inside `part`.
    fn labels(&self, part: &str) -> Result<Vec<String>> {
        if part.trim().is_empty() {
            return Ok(Vec::new());
        }
        let base = self.offset_of(part);
        let mut out = Vec::new();
        let mut start = 0;
        for piece in part.split(',') {
            let trimmed = piece.trim();
            let at = base + start + (piece.len() - piece.trim_start().len());
            if !is_label(trimmed) {
                let msg = if trimmed.is_empty() {
                    "empty label".to_string()
                } else {
                    format!("`{trimmed}` is not a valid label")
                };
                return Err(self.error(at, msg));
            }
            out.push(trimmed.to_string());
            start += piece.len() + 1;
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Independents,
    Circuits,
    Graph,
    Matrix,
}

#[derive(Default)]
struct Builder {
    format: Option<String>,
    ground: Option<Vec<String>>,
    kind: Option<Kind>,
    vertices: Option<Vec<String>>,
    sets: Vec<Vec<String>>,
    edges: Vec<EdgeLine>,
    columns: Vec<ColumnLine>,
    last_line: usize,
}

const HEADERS: [&str; 4] = ["format", "ground", "source", "vertices"];

impl Builder {
    fn line(&mut self, line: &Line) -> Result<()> {
        self.last_line = line.number;
        let body = line.text.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            return Ok(());
        }
        if let Some((key, value)) = body.split_once(':') {
            if !key.contains('{') && !key.contains('=') {
                return self.header(line, key, value);
            }
        }
        let kind = self.kind.ok_or_else(|| {
            line.error(
                line.offset_of(body.trim_start()),
                "payload before `source:`",
            )
        })?;
        match kind {
            Kind::Independents | Kind::Circuits => self.set_line(line, body),
            Kind::Graph | Kind::Matrix => self.assignment(line, body, kind),
        }
    }

    fn header(&mut self, line: &Line, key: &str, value: &str) -> Result<()> {
        let name = key.trim();
        let at = line.offset_of(key.trim_start());
        if !HEADERS.contains(&name) {
            return Err(line.error(at, format!("unknown header `{name}`")));
        }
        if !self.sets.is_empty() || !self.edges.is_empty() || !self.columns.is_empty() {
            return Err(line.error(at, format!("header `{name}` after payload")));
        }
        let value_at = line.offset_of(value.trim_start());
        let duplicate = || line.error(at, format!("duplicate header `{name}`"));
        match name {
            "format" => {
                let v = value.trim();
                if v.is_empty() {
                    return Err(line.error(value_at, "missing format version"));
                }
                if self.format.replace(v.to_string()).is_some() {
                    return Err(duplicate());
                }
            }
            "ground" => {
                if self.ground.replace(line.labels(value)?).is_some() {
                    return Err(duplicate());
                }
            }
            "vertices" => {
                if self.vertices.replace(line.labels(value)?).is_some() {
                    return Err(duplicate());
                }
            }
            _ => {
                let kind = match value.trim() {
                    "independents" => Kind::Independents,
                    "circuits" => Kind::Circuits,
                    "graph" => Kind::Graph,
                    "matrix" => Kind::Matrix,
                    other => return Err(line.error(value_at, format!("unknown source `{other}`"))),
                };
                if self.kind.replace(kind).is_some() {
                    return Err(duplicate());
                }
            }
        }
        Ok(())
    }

    fn set_line(&mut self, line: &Line, body: &str) -> Result<()> {
        let t = body.trim();
        let open = line.offset_of(t);
        if !t.starts_with('{') {
            return Err(line.error(open, "expected `{`"));
        }
        let close = t
            .find('}')
            .ok_or_else(|| line.error(open + t.len(), "expected `}`"))?;
        if close + 1 != t.len() {
            return Err(line.error(open + close + 1, "unexpected text after `}`"));
        }
        self.sets.push(line.labels(&t[1..close])?);
        Ok(())
    }

    fn assignment(&mut self, line: &Line, body: &str, kind: Kind) -> Result<()> {
        let (lhs, rhs) = body.split_once('=').ok_or_else(|| {
            line.error(line.offset_of(body.trim_start()), "expected `LABEL = ...`")
        })?;
        let label = lhs.trim();
        let at = line.offset_of(lhs.trim_start());
        if !is_label(label) {
            return Err(line.error(at, format!("`{label}` is not a valid label")));
        }
        let tokens = line.tokens(rhs);
        if kind == Kind::Graph {
            if tokens.len() != 2 {
                let at = tokens.get(2).map_or(line.text.len(), |t| t.0);
                return Err(line.error(at, "an edge needs exactly two end vertices"));
            }
            self.edges.push(EdgeLine {
                label: label.to_string(),
                ends: [tokens[0].1.to_string(), tokens[1].1.to_string()],
            });
        } else {
            for &(at, tok) in &tokens {
                if parse_rational(tok).is_err() {
                    return Err(line.error(at, format!("`{tok}` is not a rational number")));
                }
            }
            self.columns.push(ColumnLine {
                label: label.to_string(),
                entries: tokens.iter().map(|t| t.1.to_string()).collect(),
            });
        }
        Ok(())
    }

    fn is_blank(&self) -> bool {
        self.format.is_none()
            && self.ground.is_none()
            && self.kind.is_none()
            && self.vertices.is_none()
    }

    fn finish(self) -> Result<MatroidDocument> {
        let missing = |what: &str| Error::Syntax {
            line: self.last_line,
            column: 1,
            message: format!("missing `{what}:` header"),
        };
        let format_version = self.format.clone().ok_or_else(|| missing("format"))?;
        let ground = self.ground.clone().ok_or_else(|| missing("ground"))?;
        let kind = self.kind.ok_or_else(|| missing("source"))?;
        if kind != Kind::Graph && self.vertices.is_some() {
            return Err(Error::Syntax {
                line: self.last_line,
                column: 1,
                message: "`vertices:` only applies to graph sources".into(),
            });
        }
        let source = match kind {
            Kind::Independents => DocumentSource::Independents { sets: self.sets },
            Kind::Circuits => DocumentSource::Circuits { sets: self.sets },
            Kind::Graph => DocumentSource::Graph {
                vertices: self.vertices.clone().ok_or_else(|| missing("vertices"))?,
                edges: self.edges,
            },
            Kind::Matrix => DocumentSource::Matrix {
                columns: self.columns,
            },
        };
        Ok(MatroidDocument {
            format_version,
            ground,
            source,
        })
    }
}

pub(crate) fn parse_stream(input: &str) -> Result<Vec<MatroidDocument>> {
    let mut docs = Vec::new();
    let mut current = Builder::default();
    for (i, text) in input.lines().enumerate() {
        if text.trim() == "---" {
            let done = std::mem::take(&mut current);
            if !done.is_blank() {
                docs.push(done.finish()?);
            }
            continue;
        }
        current.line(&Line {
            number: i + 1,
            text,
        })?;
    }
    if !current.is_blank() {
        docs.push(current.finish()?);
    }
    if docs.is_empty() {
        return Err(Error::Document("no documents found".into()));
    }
    Ok(docs)
}

pub(crate) fn emit(doc: &MatroidDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "format: {}", doc.format_version);
    let _ = writeln!(s, "ground: {}", doc.ground.join(", "));
    let _ = writeln!(s, "source: {}", doc.source.kind());
    match &doc.source {
        DocumentSource::Independents { sets } | DocumentSource::Circuits { sets } => {
            for set in sets {
                let _ = writeln!(s, "{{{}}}", set.join(","));
            }
        }
        DocumentSource::Graph { vertices, edges } => {
            let _ = writeln!(s, "vertices: {}", vertices.join(", "));
            for e in edges {
                let _ = writeln!(s, "{} = {} {}", e.label, e.ends[0], e.ends[1]);
            }
        }
        DocumentSource::Matrix { columns } => {
            for c in columns {
                let _ = writeln!(s, "{} = {}", c.label, c.entries.join(" "));
            }
        }
    }
    // Zero-row matrices leave a trailing space after `=`.
    s.lines()
        .map(str::trim_end)
        .fold(String::new(), |mut acc, l| {
            acc.push_str(l);
            acc.push('\n');
            acc
        })
}
