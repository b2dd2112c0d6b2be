//! Checkpoint files for resumable searches.
//!
//! A checkpoint records the DFS prefix — the semantic choices along the
//! current path, with the last entry being the next choice to try rather
//! than an applied one — plus cumulative statistics and a hash of the
//! semantic search inputs. Recording choices (not solver internals) keeps
//! resumption tolerant of implementation changes: the resumed run
//! regenerates each level's candidate list and fast-forwards to the
//! recorded position.

use mbe_core::json::GraphDoc;
use mbe_core::Graph;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::SearchStats;

/// One recorded decision on the DFS path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Choice {
    /// An internal vertex order chosen for the block being placed.
    Block(Vec<usize>),
    /// A page assigned to the edge at this level.
    Page(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    /// Choices along the paused path; all but the last are applied, the
    /// last is the next choice to attempt.
    pub prefix: Vec<Choice>,
    pub stats: SearchStats,
    pub config_hash: String,
}

impl Checkpoint {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("checkpoint serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Hash of the semantic inputs of an extensible-embedding search. Budgets
/// and worker counts are deliberately excluded so a truncated run can be
/// resumed with a larger budget.
pub fn config_hash(h_graph: &Graph, s: usize, k: usize) -> String {
    let doc = serde_json::json!({
        "search": "en-bloc-extensible",
        "h": GraphDoc::from(h_graph),
        "s": s,
        "k": k,
    });
    let mut hasher = Sha256::new();
    hasher.update(serde_json::to_string(&doc).expect("hash input serializes"));
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbe_core::cycle;

    #[test]
    fn hash_depends_on_inputs_only() {
        let c3 = cycle(3).unwrap();
        let c5 = cycle(5).unwrap();
        assert_eq!(config_hash(&c3, 3, 5), config_hash(&c3, 3, 5));
        assert_ne!(config_hash(&c3, 3, 5), config_hash(&c3, 5, 5));
        assert_ne!(config_hash(&c3, 3, 5), config_hash(&c5, 3, 5));
    }

    #[test]
    fn checkpoint_round_trips() {
        let cp = Checkpoint {
            prefix: vec![Choice::Block(vec![1, 3, 2]), Choice::Page(2), Choice::Page(1)],
            stats: SearchStats {
                nodes: 42,
                ..Default::default()
            },
            config_hash: "abc".into(),
        };
        let text = cp.to_json();
        assert_eq!(Checkpoint::from_json(&text).unwrap(), cp);
        // The wire format keys are part of the contract.
        assert!(text.contains("\"prefix\""));
        assert!(text.contains("\"stats\""));
        assert!(text.contains("\"config_hash\""));
        assert!(text.contains("\"block\""));
        assert!(text.contains("\"page\""));
    }
}
