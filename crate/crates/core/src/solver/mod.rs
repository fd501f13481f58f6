//! Class-specific solvers and automatic dispatch.

pub mod block;
pub mod pig;
pub mod split;

pub use block::{solve_block, solve_block_graph, BlockDp, BlockScores, BlockType, NodeLabels};
pub use pig::{reconstruct_witness, solve_pig, solve_proper_interval, SuffixChoice, SuffixTable};
pub use split::{compute_stats, solve_split, solve_split_graph, SplitStats};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EopSolution, Graph};
use crate::oracle::{brute_force_eop, SearchBudget};
use crate::recognition::{compute_bco, is_block_graph, split_partition};

/// Solver requested by the caller.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClassChoice {
    #[default]
    Auto,
    Pig,
    Block,
    Split,
    Brute,
}

impl FromStr for ClassChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(ClassChoice::Auto),
            "pig" => Ok(ClassChoice::Pig),
            "block" => Ok(ClassChoice::Block),
            "split" => Ok(ClassChoice::Split),
            "brute" => Ok(ClassChoice::Brute),
            _ => Err(format!("unknown class '{s}'")),
        }
    }
}

/// Solver that actually produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolvedBy {
    ProperInterval,
    Block,
    Split,
    Brute,
}

impl SolvedBy {
    pub fn as_str(self) -> &'static str {
        match self {
            SolvedBy::ProperInterval => "proper_interval",
            SolvedBy::Block => "block",
            SolvedBy::Split => "split",
            SolvedBy::Brute => "brute",
        }
    }
}

impl fmt::Display for SolvedBy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Runs the requested solver. `Auto` tries proper interval, block and split
/// recognition in that order and falls back to the oracle within `budget`.
pub fn solve(
    g: &Graph,
    choice: ClassChoice,
    budget: SearchBudget,
) -> Result<(SolvedBy, EopSolution)> {
    match choice {
        ClassChoice::Pig => Ok((SolvedBy::ProperInterval, solve_proper_interval(g)?)),
        ClassChoice::Block => Ok((SolvedBy::Block, solve_block_graph(g)?)),
        ClassChoice::Split => Ok((SolvedBy::Split, solve_split_graph(g)?)),
        ClassChoice::Brute => Ok((SolvedBy::Brute, brute_force_eop(g, budget)?)),
        ClassChoice::Auto => {
            if let Some(o) = compute_bco(g) {
                return Ok((SolvedBy::ProperInterval, solve_pig(g, &o)?));
            }
            if is_block_graph(g) {
                return Ok((SolvedBy::Block, solve_block_graph(g)?));
            }
            if let Some(p) = split_partition(g) {
                return Ok((SolvedBy::Split, solve_split(g, &p)?));
            }
            if g.edge_count() <= budget.max_edges {
                return Ok((SolvedBy::Brute, brute_force_eop(g, budget)?));
            }
            Err(Error::NotInClass("supported"))
        }
    }
}
