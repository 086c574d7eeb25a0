//! The JSON higraph file format.

use pathdga::{Hypergraph, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HigraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub source: Vec<String>,
    pub target: Vec<String>,
}

impl HigraphFile {
    pub fn parse(text: &str) -> Result<HigraphFile, String> {
        serde_json::from_str(text)
            .map_err(|e| format!("PARSE: line {} column {}: {e}", e.line(), e.column()))
    }

    pub fn from_graph(h: &Hypergraph) -> HigraphFile {
        let names = |s: pathdga::VSet| {
            let mut v: Vec<String> = s
                .vertices()
                .into_iter()
                .map(|id| h.name(id).to_string())
                .collect();
            v.sort();
            v
        };
        let mut edges: Vec<EdgeEntry> = h
            .edges()
            .iter()
            .map(|e| EdgeEntry {
                source: names(e.source),
                target: names(e.target),
            })
            .collect();
        edges.sort();
        let mut vertices = h.names().to_vec();
        vertices.sort();
        HigraphFile { vertices, edges }
    }

    pub fn to_graph(&self) -> pathdga::Result<Hypergraph> {
        let edges: Vec<(Vec<String>, Vec<String>)> = self
            .edges
            .iter()
            .map(|e| (e.source.clone(), e.target.clone()))
            .collect();
        Hypergraph::new(&self.vertices, &edges)
    }

    /// Pretty JSON with two-space indentation and a final newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
