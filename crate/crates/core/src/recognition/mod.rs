//! Class recognition and the structural certificates the solvers consume.

mod bco;
mod chordal;
mod cut_tree;
mod split;

pub use bco::{compute_bco, lex_bfs, validate_bco, BcOrdering};
pub use chordal::{compute_peo, is_peo, mcs_elimination_order};
pub use cut_tree::{biconnected_blocks, build_cut_tree, is_block_graph, CutTree};
pub use split::{split_partition, SplitPartition};

use std::fmt;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    ProperInterval,
    Block,
    Split,
    Chordal,
    None,
}

impl ClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::ProperInterval => "proper_interval",
            ClassTag::Block => "block",
            ClassTag::Split => "split",
            ClassTag::Chordal => "chordal",
            ClassTag::None => "none",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Runs every recognizer. Tags come out in the fixed order proper_interval,
/// block, split, chordal; `[None]` when nothing matched.
pub fn classify(g: &Graph) -> Vec<ClassTag> {
    let mut tags = Vec::new();
    if compute_bco(g).is_some() {
        tags.push(ClassTag::ProperInterval);
    }
    if is_block_graph(g) {
        tags.push(ClassTag::Block);
    }
    if split_partition(g).is_some() {
        tags.push(ClassTag::Split);
    }
    if compute_peo(g).is_some() {
        tags.push(ClassTag::Chordal);
    }
    if tags.is_empty() {
        tags.push(ClassTag::None);
    }
    tags
}

#[cfg(test)]
mod tests {
    use super::*;
    use ClassTag::*;

    #[test]
    fn complete_graph_is_in_every_class() {
        assert_eq!(
            classify(&Graph::complete(5)),
            vec![ProperInterval, Block, Split, Chordal]
        );
    }

    #[test]
    fn short_and_long_paths() {
        // P4 splits as K = {1, 2}, S = {0, 3}; P5 contains 2K2
        assert_eq!(
            classify(&Graph::path(4)),
            vec![ProperInterval, Block, Split, Chordal]
        );
        assert_eq!(
            classify(&Graph::path(5)),
            vec![ProperInterval, Block, Chordal]
        );
    }

    #[test]
    fn four_cycle_is_in_no_class() {
        assert_eq!(classify(&Graph::cycle(4)), vec![None]);
    }
}
