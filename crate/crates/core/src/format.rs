//! JSON file format for presentations.
//!
//! Canonical form: keys sorted, vertex lists and edge/component arrays sorted
//! by id, two-space indentation, LF line endings, trailing newline. Struct
//! fields below are declared in key order so serde emits sorted keys.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentation::{Presentation, PruneReport, ValidationError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub gamma: Vec<ComponentRecord>,
    pub theta: ThetaRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaRecord {
    pub edges: Vec<ThetaEdgeRecord>,
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaEdgeRecord {
    pub ends: [String; 2],
    pub id: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRecord {
    pub edges: Vec<GammaEdgeRecord>,
    pub name: String,
    pub vertices: Vec<String>,
}

/// `aligned` means the dart `ends[0] -> ends[1]` maps to the forward dart of `image`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaEdgeRecord {
    pub aligned: bool,
    pub ends: [String; 2],
    pub id: String,
    pub image: String,
}

impl PresentationFile {
    pub fn sort(&mut self) {
        self.theta.vertices.sort();
        self.theta.edges.sort_by(|a, b| a.id.cmp(&b.id));
        self.gamma.sort_by(|a, b| a.name.cmp(&b.name));
        for c in &mut self.gamma {
            c.vertices.sort();
            c.edges.sort_by(|a, b| a.id.cmp(&b.id));
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    /// Prune components to their cycle core instead of rejecting degree-1 vertices.
    pub prune: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions { prune: true }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("input is not UTF-8: {0}")]
    Utf8(#[from] std::str::Utf8Error),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid presentation: {0}")]
    Validation(#[from] ValidationError),
}

#[derive(Debug)]
pub struct Parsed {
    pub presentation: Presentation,
    /// Components that lost vertices to pruning.
    pub pruned: Vec<PruneReport>,
}

pub fn parse_file(text: &[u8]) -> Result<PresentationFile, ParseError> {
    let text = std::str::from_utf8(text)?;
    serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse(text: &[u8], options: ParseOptions) -> Result<Parsed, ParseError> {
    let file = parse_file(text)?;
    let (presentation, pruned) = Presentation::from_file(&file, options.prune)?;
    Ok(Parsed { presentation, pruned })
}

pub fn to_canonical_json(file: &PresentationFile) -> String {
    let mut file = file.clone();
    file.sort();
    let mut out = serde_json::to_string_pretty(&file).expect("records serialize");
    out.push('\n');
    out
}

pub fn serialize(p: &Presentation) -> String {
    to_canonical_json(&p.to_file())
}
