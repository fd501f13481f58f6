//! Edge open packing on proper interval graphs.
//!
//! Works on suffixes `G[v_t, …, v_n]` of a bi-compatible elimination
//! ordering. With `k = l(v_t)` the closed neighborhood of `v_t` in the suffix
//! is the clique `v_t..=v_k`, and an optimal packing either
//!
//! * leaves `v_t` unsaturated: value of the suffix from `t + 1`;
//! * takes one edge `v_t v_j` (`t < j ≤ k`) and nothing at `v_j`'s later
//!   neighbors beyond `k`: `1 +` value of the suffix after `l(v_j)`;
//! * takes `v_t v_j` and `v_j v_p` (`k < p ≤ l(v_j)`): `2 +` value of the
//!   suffix after `l(v_p)`.
//!
//! Each suffix value is memoized, so the table has `n + 1` entries.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, EopSolution, Graph};
use crate::recognition::{compute_bco, validate_bco, BcOrdering};

/// Decision recorded for one suffix start.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuffixChoice {
    /// Empty suffix.
    End,
    /// `v_t` has no neighbor in the suffix.
    Isolated,
    /// `v_t` stays unsaturated.
    Skip,
    /// Edge `v_t v_j`.
    Single { j: usize },
    /// Edges `v_t v_j` and `v_j v_p`.
    Pair { j: usize, p: usize },
}

/// `rho[t]` is the packing number of the suffix starting at position `t`
/// (0-based, `rho[n] = 0`).
#[derive(Clone, Debug)]
pub struct SuffixTable {
    rho: Vec<usize>,
    choice: Vec<SuffixChoice>,
}

impl SuffixTable {
    pub fn compute(o: &BcOrdering) -> Self {
        let n = o.len();
        let l = o.last_neighbors();
        let mut rho = vec![0; n + 1];
        let mut choice = vec![SuffixChoice::End; n + 1];
        for t in (0..n).rev() {
            let k = l[t];
            if k == t {
                rho[t] = rho[t + 1];
                choice[t] = SuffixChoice::Isolated;
                continue;
            }
            // first maximum over increasing j (then p) wins
            let mut single: Option<(usize, usize)> = None;
            let mut pair: Option<(usize, usize, usize)> = None;
            for j in t + 1..=k {
                let v = 1 + rho[l[j] + 1];
                if single.is_none_or(|(best, _)| v > best) {
                    single = Some((v, j));
                }
                for p in k + 1..=l[j] {
                    let v = 2 + rho[l[p] + 1];
                    if pair.is_none_or(|(best, _, _)| v > best) {
                        pair = Some((v, j, p));
                    }
                }
            }
            let skip = rho[t + 1];
            let (single_value, j) = single.expect("k > t gives at least one j");
            let (value, c) = match pair {
                Some((v, j, p)) if v >= single_value && v >= skip => {
                    (v, SuffixChoice::Pair { j, p })
                }
                _ if single_value >= skip => (single_value, SuffixChoice::Single { j }),
                _ => (skip, SuffixChoice::Skip),
            };
            rho[t] = value;
            choice[t] = c;
        }
        SuffixTable { rho, choice }
    }

    /// Packing number of `G[v_t, …, v_n]`; `t` ranges over `0..=n`.
    pub fn value(&self, t: usize) -> usize {
        self.rho[t]
    }

    pub fn choice(&self, t: usize) -> SuffixChoice {
        self.choice[t]
    }

    pub fn len(&self) -> usize {
        self.rho.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_empty()
    }
}

/// Follows the recorded choices from position 0.
pub fn reconstruct_witness(tbl: &SuffixTable, g: &Graph, o: &BcOrdering) -> Result<EdgeSet> {
    let n = o.len();
    if tbl.len() != n + 1 {
        return Err(Error::Internal(
            "suffix table does not match ordering".into(),
        ));
    }
    let edge = |a: usize, b: usize| -> Result<EdgeId> {
        g.edge_between(o.order()[a], o.order()[b])
            .ok_or_else(|| Error::Internal(format!("positions {a} and {b} are not adjacent")))
    };
    let mut ids = Vec::new();
    let mut t = 0;
    while t < n {
        t = match tbl.choice(t) {
            SuffixChoice::End => return Err(Error::Internal(format!("table ends early at {t}"))),
            SuffixChoice::Isolated | SuffixChoice::Skip => t + 1,
            SuffixChoice::Single { j } => {
                ids.push(edge(t, j)?);
                o.last_neighbor(j) + 1
            }
            SuffixChoice::Pair { j, p } => {
                ids.push(edge(t, j)?);
                ids.push(edge(j, p)?);
                o.last_neighbor(p) + 1
            }
        };
    }
    let witness = EdgeSet::new(g, ids)?;
    if witness.len() != tbl.value(0) {
        return Err(Error::Internal(format!(
            "witness has {} edges, table value is {}",
            witness.len(),
            tbl.value(0)
        )));
    }
    Ok(witness)
}

/// Solves a proper interval graph given a certified ordering.
pub fn solve_pig(g: &Graph, o: &BcOrdering) -> Result<EopSolution> {
    if !validate_bco(g, o) {
        return Err(Error::InvalidCertificate(
            "ordering is not a bi-compatible elimination ordering".into(),
        ));
    }
    let tbl = SuffixTable::compute(o);
    let witness = reconstruct_witness(&tbl, g, o)?;
    Ok(EopSolution {
        value: tbl.value(0),
        witness,
    })
}

/// Recognizes and solves; fails with [`Error::NotInClass`] otherwise.
pub fn solve_proper_interval(g: &Graph) -> Result<EopSolution> {
    let o = compute_bco(g).ok_or(Error::NotInClass("proper interval"))?;
    solve_pig(g, &o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(g: &Graph) -> BcOrdering {
        BcOrdering::from_order(g, g.vertices().collect()).unwrap()
    }

    #[test]
    fn path_on_four_vertices() {
        let g = Graph::path(4);
        let o = identity(&g);
        let tbl = SuffixTable::compute(&o);
        assert_eq!(tbl.value(4), 0);
        assert_eq!(tbl.value(1), 2);
        assert_eq!(tbl.value(0), 2);
        // the pair branch and skipping v_1 both reach 2; pairs win ties
        assert_eq!(tbl.choice(0), SuffixChoice::Pair { j: 1, p: 2 });
        let s = solve_pig(&g, &o).unwrap();
        assert_eq!(s.witness.pairs(&g), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn triangle() {
        let g = Graph::complete(3);
        let o = identity(&g);
        let tbl = SuffixTable::compute(&o);
        assert_eq!(tbl.choice(0), SuffixChoice::Single { j: 1 });
        let s = solve_pig(&g, &o).unwrap();
        assert_eq!(s.value, 1);
        assert_eq!(s.witness.pairs(&g), vec![(0, 1)]);
    }

    #[test]
    fn complete_graph_has_no_pair_branch() {
        let g = Graph::complete(4);
        let tbl = SuffixTable::compute(&identity(&g));
        assert_eq!(tbl.value(0), 1);
        assert_eq!(tbl.value(1), 1);
    }

    #[test]
    fn edgeless() {
        let g = Graph::empty(5);
        let s = solve_pig(&g, &identity(&g)).unwrap();
        assert_eq!(s.value, 0);
        assert!(s.witness.is_empty());
    }

    #[test]
    fn two_disjoint_edges() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let s = solve_proper_interval(&g).unwrap();
        assert_eq!(s.value, 2);
        assert_eq!(s.witness.len(), 2);
    }

    #[test]
    fn rejects_invalid_ordering() {
        let g = Graph::path(4);
        let o = BcOrdering::from_order(&g, vec![0, 2, 1, 3]).unwrap();
        assert!(matches!(
            solve_pig(&g, &o),
            Err(Error::InvalidCertificate(_))
        ));
        assert!(matches!(
            solve_proper_interval(&Graph::star(3)),
            Err(Error::NotInClass(_))
        ));
    }
}
