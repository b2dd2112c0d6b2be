//! On-disk JSON forms.
//!
//! Graphs: `{"n": int, "edges": [[u,v], ...]}` with `u < v`, sorted.
//! Embeddings: `{"graph": {...}, "layout": [v1, ...], "pages": {"1":
//! [[u,v], ...], ...}}` with stringified page numbers as keys, plus an
//! optional display-only `color_names` map. Extension sidecars record the
//! renumbering and the replication parameters.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embedding::{BookEmbedding, PageColoring};
use crate::extend::Extension;
use crate::graph::{Edge, Graph};
use crate::layout::CyclicLayout;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("{0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] crate::graph::GraphError),
    #[error("invalid layout: {0}")]
    Layout(#[from] crate::layout::LayoutError),
    #[error("invalid coloring: {0}")]
    Coloring(#[from] crate::embedding::ColoringError),
    #[error("invalid embedding: {0}")]
    Embedding(#[from] crate::embedding::EmbeddingError),
    #[error("page key {0:?} is not a positive integer")]
    BadPageKey(String),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            n: g.n(),
            edges: g.edges().iter().map(|e| e.endpoints()).collect(),
        }
    }
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<Graph, JsonError> {
        Ok(Graph::new(self.n, self.edges.iter().copied())?)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingDoc {
    pub graph: GraphDoc,
    pub layout: Vec<usize>,
    pub pages: BTreeMap<String, Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub color_names: Option<BTreeMap<String, String>>,
}

impl EmbeddingDoc {
    pub fn from_embedding(e: &BookEmbedding) -> Self {
        let mut pages: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
        for p in 1..=e.coloring().k() {
            pages.insert(
                p.to_string(),
                e.coloring().page_edges(p).iter().map(|e| e.endpoints()).collect(),
            );
        }
        EmbeddingDoc {
            graph: GraphDoc::from(e.graph()),
            layout: e.layout().order().to_vec(),
            pages,
            color_names: None,
        }
    }

    pub fn with_color_names(mut self, names: &[(usize, &str)]) -> Self {
        self.color_names = Some(
            names
                .iter()
                .map(|&(p, name)| (p.to_string(), name.to_string()))
                .collect(),
        );
        self
    }

    pub fn to_embedding(&self) -> Result<BookEmbedding, JsonError> {
        let graph = self.graph.to_graph()?;
        let layout = CyclicLayout::new(self.layout.clone())?;
        let mut k = 0usize;
        let mut assignment = BTreeMap::new();
        for (key, edges) in &self.pages {
            let page: usize = key
                .parse()
                .ok()
                .filter(|&p| p >= 1)
                .ok_or_else(|| JsonError::BadPageKey(key.clone()))?;
            k = k.max(page);
            for &(a, b) in edges {
                assignment.insert(Edge::new(a, b), page);
            }
        }
        let coloring = PageColoring::new(k, assignment)?;
        Ok(BookEmbedding::new(graph, layout, coloring)?)
    }
}

/// Companion file written next to an extended embedding.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SidecarDoc {
    /// Old vertex identifier (stringified) to new identifier.
    pub renumbering: BTreeMap<String, usize>,
    pub seed: usize,
    pub r: usize,
    pub phase: usize,
}

impl From<&Extension> for SidecarDoc {
    fn from(ext: &Extension) -> Self {
        SidecarDoc {
            renumbering: ext
                .renumbering
                .iter()
                .map(|(&old, &new)| (old.to_string(), new))
                .collect(),
            seed: ext.plan.seed,
            r: ext.plan.r,
            phase: ext.plan.phase.number(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::cycle;

    #[test]
    fn graph_doc_schema_is_stable() {
        let g = cycle(4).unwrap();
        let doc = GraphDoc::from(&g);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(text, r#"{"n":4,"edges":[[1,2],[1,4],[2,3],[3,4]]}"#);
        assert_eq!(doc.to_graph().unwrap(), g);
    }

    #[test]
    fn embedding_round_trips() {
        for name in fixtures::FIXTURE_NAMES {
            let f = fixtures::by_name(name).unwrap();
            let doc = EmbeddingDoc::from_embedding(&f.embedding).with_color_names(f.color_names);
            let text = serde_json::to_string_pretty(&doc).unwrap();
            let parsed: EmbeddingDoc = serde_json::from_str(&text).unwrap();
            assert_eq!(parsed.to_embedding().unwrap(), f.embedding, "{name}");
        }
    }

    #[test]
    fn bad_page_keys_are_rejected()
    {
        let f = fixtures::lemma1_c3c3();
        let mut doc = EmbeddingDoc::from_embedding(&f.embedding);
        let edges = doc.pages.remove("5").unwrap();
        doc.pages.insert("zero".into(), edges);
        assert!(matches!(doc.to_embedding(), Err(JsonError::BadPageKey(_))));
    }
}
