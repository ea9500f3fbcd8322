use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::matroid::{GraphEdge, Matroid, MatroidSource};
use crate::set::{GroundSet, SetFamily};

use super::text;

/// The only format version understood so far.
pub const FORMAT_VERSION: &str = "1";

/// A matroid description as written in a file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidDocument {
    #[serde(rename = "format")]
    pub format_version: String,
    pub ground: Vec<String>,
    pub source: DocumentSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum DocumentSource {
    Independents {
        sets: Vec<Vec<String>>,
    },
    Circuits {
        sets: Vec<Vec<String>>,
    },
    Graph {
        vertices: Vec<String>,
        edges: Vec<EdgeLine>,
    },
    Matrix {
        columns: Vec<ColumnLine>,
    },
}

impl DocumentSource {
    pub fn kind(&self) -> &'static str {
        match self {
            DocumentSource::Independents { .. } => "independents",
            DocumentSource::Circuits { .. } => "circuits",
            DocumentSource::Graph { .. } => "graph",
            DocumentSource::Matrix { .. } => "matrix",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeLine {
    pub label: String,
    pub ends: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColumnLine {
    pub label: String,
    pub entries: Vec<String>,
}

/// Characters that cannot appear in labels because the text format uses them.
pub(crate) fn is_label(s: &str) -> bool {
    !s.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ',' | '{' | '}' | '=' | '#' | ':' | '"'))
}

fn check_labels<'a>(labels: impl IntoIterator<Item = &'a String>) -> Result<()> {
    for l in labels {
        if !is_label(l) {
            return Err(Error::Document(format!("`{l}` is not a valid label")));
        }
    }
    Ok(())
}

/// Matches one payload line per ground label, in ground order.
fn per_label<'a, T>(
    ground: &[String],
    items: &'a [T],
    label: impl Fn(&T) -> &str,
    what: &str,
) -> Result<Vec<&'a T>> {
    for (i, it) in items.iter().enumerate() {
        let l = label(it);
        if !ground.iter().any(|g| g == l) {
            return Err(Error::UnknownLabel(l.to_string()));
        }
        if items[..i].iter().any(|o| label(o) == l) {
            return Err(Error::Document(format!("{what} `{l}` given twice")));
        }
    }
    ground
        .iter()
        .map(|g| {
            items
                .iter()
                .find(|it| label(it) == g)
                .ok_or_else(|| Error::Document(format!("no {what} for `{g}`")))
        })
        .collect()
}

impl MatroidDocument {
    /// One document, text or JSON.
    pub fn parse(input: &str) -> Result<Self> {
        let mut docs = Self::parse_all(input)?;
        match docs.len() {
            1 => Ok(docs.pop().expect("one")),
            n => Err(Error::Document(format!("expected one document, found {n}"))),
        }
    }

    /// A stream of documents: text separated by `---` lines, a JSON object
    /// or a JSON array of objects.
    pub fn parse_all(input: &str) -> Result<Vec<Self>> {
        let docs = match input.trim_start().chars().next() {
            Some('{') => vec![from_json(input)?],
            Some('[') => from_json(input)?,
            _ => text::parse_stream(input)?,
        };
        for d in &docs {
            d.validate()?;
        }
        Ok(docs)
    }

    pub fn validate(&self) -> Result<()> {
        self.to_source().map(|_| ())
    }

    /// Checks the version and every label reference, then converts.
    pub fn to_source(&self) -> Result<MatroidSource> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::UnknownVersion(self.format_version.clone()));
        }
        check_labels(&self.ground)?;
        let ground = GroundSet::new(self.ground.iter().cloned())?;
        let family = |sets: &[Vec<String>]| -> Result<SetFamily> {
            let subsets = sets
                .iter()
                .map(|s| ground.subset(s))
                .collect::<Result<Vec<_>>>()?;
            SetFamily::new(&ground, subsets.iter())
        };
        Ok(match &self.source {
            DocumentSource::Independents { sets } => {
                MatroidSource::IndependenceFamily(family(sets)?)
            }
            DocumentSource::Circuits { sets } => MatroidSource::CircuitFamily(family(sets)?),
            DocumentSource::Graph { vertices, edges } => {
                check_labels(vertices)?;
                let ordered = per_label(&self.ground, edges, |e| &e.label, "edge")?;
                MatroidSource::GraphEdges {
                    vertices: vertices.clone(),
                    edges: ordered
                        .into_iter()
                        .map(|e| GraphEdge::new(&e.label, &e.ends[0], &e.ends[1]))
                        .collect(),
                }
            }
            DocumentSource::Matrix { columns } => {
                let ordered = per_label(&self.ground, columns, |c| &c.label, "column")?;
                let entries: Vec<&[String]> = ordered.iter().map(|c| &c.entries[..]).collect();
                MatroidSource::MatrixColumns {
                    labels: self.ground.clone(),
                    matrix: RationalMatrix::parse_columns(&entries)?,
                }
            }
        })
    }

    pub fn build(&self) -> Result<Matroid> {
        self.to_source()?.build()
    }

    /// A circuit document describing `m`.
    pub fn from_matroid(m: &Matroid) -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            ground: m.ground().labels().to_vec(),
            source: DocumentSource::Circuits {
                sets: m
                    .circuits()
                    .iter()
                    .map(|c| c.labels().into_iter().map(String::from).collect())
                    .collect(),
            },
        }
    }

    pub fn emit_text(&self) -> String {
        text::emit(self)
    }

    pub fn emit_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

fn from_json<T: serde::de::DeserializeOwned>(input: &str) -> Result<T> {
    serde_json::from_str(input).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Text documents joined by `---` lines.
pub fn emit_text_stream(docs: &[MatroidDocument]) -> String {
    docs.iter()
        .map(MatroidDocument::emit_text)
        .collect::<Vec<_>>()
        .join("---\n")
}

/// Parses one document and converts it to a construction source.
pub fn parse_matroid(input: &str) -> Result<MatroidSource> {
    MatroidDocument::parse(input)?.to_source()
}
