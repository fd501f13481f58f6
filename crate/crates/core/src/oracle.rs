//! Exhaustive edge open packing search for small graphs.
//!
//! Depth-first include/exclude over edges in id order, trying inclusion
//! first. Sets are therefore met in lexicographic order, and because the
//! incumbent is only replaced by a strictly larger set, the first optimum
//! found is the lexicographically least one.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EopSolution, Graph};

/// Hard ceiling imposed by the 128-bit conflict masks.
pub const MAX_ORACLE_EDGES: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_edges: usize,
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_edges: 24,
            max_nodes: 200_000_000,
        }
    }
}

impl SearchBudget {
    pub fn with_max_edges(max_edges: usize) -> Self {
        SearchBudget {
            max_edges,
            ..Self::default()
        }
    }
}

/// Pairwise conflict masks: bit `j` of `masks[i]` is set when edges `i` and
/// `j` have a common edge.
fn conflict_masks(g: &Graph) -> Vec<u128> {
    let m = g.edge_count();
    let mut masks = vec![0u128; m];
    for i in 0..m {
        for j in i + 1..m {
            if g.common_edge(EdgeId(i), EdgeId(j)).is_some() {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
        }
    }
    masks
}

struct Search<'a> {
    conflicts: &'a [u128],
    m: usize,
    nodes: u64,
    max_nodes: u64,
    best: u32,
    best_set: u128,
}

impl Search<'_> {
    /// Returns `false` once the node budget is exhausted.
    fn run(&mut self, next: usize, chosen: u128, allowed: u128, count: u32) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        if count > self.best {
            self.best = count;
            self.best_set = chosen;
        }
        if next >= self.m {
            return true;
        }
        let remaining = allowed & (!0u128 << next);
        if count + remaining.count_ones() <= self.best {
            return true;
        }
        let e = remaining.trailing_zeros() as usize;
        let bit = 1u128 << e;
        self.run(
            e + 1,
            chosen | bit,
            allowed & !self.conflicts[e] & !bit,
            count + 1,
        ) && self.run(e + 1, chosen, allowed & !bit, count)
    }
}

/// Exact `ρₑᵒ(g)` with the lexicographically least optimal witness.
pub fn brute_force_eop(g: &Graph, budget: SearchBudget) -> Result<EopSolution> {
    let m = g.edge_count();
    if m > budget.max_edges || m > MAX_ORACLE_EDGES {
        return Err(Error::BudgetExceeded {
            reason: format!(
                "{m} edges exceeds the limit of {}",
                budget.max_edges.min(MAX_ORACLE_EDGES)
            ),
            best: EopSolution::empty(),
        });
    }
    let conflicts = conflict_masks(g);
    let all = if m == 128 { !0 } else { (1u128 << m) - 1 };
    let mut search = Search {
        conflicts: &conflicts,
        m,
        nodes: 0,
        max_nodes: budget.max_nodes,
        best: 0,
        best_set: 0,
    };
    let finished = search.run(0, 0, all, 0);
    let ids = (0..m)
        .filter(|&i| search.best_set >> i & 1 == 1)
        .map(EdgeId)
        .collect();
    let solution = EopSolution::from_edges(ids);
    if finished {
        Ok(solution)
    } else {
        Err(Error::BudgetExceeded {
            reason: format!("explored more than {} search nodes", budget.max_nodes),
            best: solution,
        })
    }
}
