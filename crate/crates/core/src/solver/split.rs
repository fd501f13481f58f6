//! Edge open packing on split graphs.
//!
//! With a maximum clique `K` and independent set `S`, an optimal packing is
//! a single induced star centered in `K`. Either it uses one clique edge
//! `xy` plus the `S`-neighbors of `x` missed by `y`
//! (`l_x - l_xy + 1` edges) or it uses all `S`-neighbors of `x` (`l_x`).

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EopSolution, Graph};
use crate::recognition::{split_partition, SplitPartition};

/// Neighborhood counts toward `S`. Pair counts are stored sparsely: only
/// pairs sharing at least one `S`-neighbor have an entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitStats {
    clique: Vec<usize>,
    /// Clique index of each vertex.
    index: Vec<Option<usize>>,
    l: Vec<usize>,
    /// Row `i` holds `(j, count)` for `j > i`, sorted by `j`.
    pairs: Vec<Vec<(usize, usize)>>,
}

impl SplitStats {
    pub fn clique(&self) -> &[usize] {
        &self.clique
    }

    /// `|S ∩ N(x)|`, or `None` when `x` is not in the clique.
    pub fn l(&self, x: usize) -> Option<usize> {
        self.index.get(x).copied().flatten().map(|i| self.l[i])
    }

    /// `|S ∩ N(x) ∩ N(y)|` for distinct clique vertices.
    pub fn lpair(&self, x: usize, y: usize) -> Option<usize> {
        let (i, j) = (self.index.get(x).copied()??, self.index.get(y).copied()??);
        if i == j {
            return None;
        }
        Some(self.pair_count(i, j))
    }

    fn pair_count(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let row = &self.pairs[i];
        row.binary_search_by_key(&j, |&(k, _)| k)
            .map(|at| row[at].1)
            .unwrap_or(0)
    }

    /// Number of explicitly stored pairs.
    pub fn stored_pairs(&self) -> usize {
        self.pairs.iter().map(Vec::len).sum()
    }
}

pub fn compute_stats(g: &Graph, p: &SplitPartition) -> Result<SplitStats> {
    p.validate(g)?;
    let k = p.clique.len();
    let mut index = vec![None; g.vertex_count()];
    for (i, &x) in p.clique.iter().enumerate() {
        index[x] = Some(i);
    }
    let clique_neighbors = |s: usize| g.neighbors(s).filter_map(|w| index[w]);

    let mut l = vec![0; k];
    for &s in &p.independent {
        for i in clique_neighbors(s) {
            l[i] += 1;
        }
    }

    // per row, count through a dense scratch array and keep what was touched
    let mut counts = vec![0usize; k];
    let mut touched = Vec::new();
    let mut pairs = Vec::with_capacity(k);
    for (i, &x) in p.clique.iter().enumerate() {
        for s in g.neighbors(x).filter(|&s| index[s].is_none()) {
            for j in clique_neighbors(s).filter(|&j| j > i) {
                if counts[j] == 0 {
                    touched.push(j);
                }
                counts[j] += 1;
            }
        }
        touched.sort_unstable();
        pairs.push(touched.iter().map(|&j| (j, counts[j])).collect());
        for &j in &touched {
            counts[j] = 0;
        }
        touched.clear();
    }
    Ok(SplitStats {
        clique: p.clique.clone(),
        index,
        l,
        pairs,
    })
}

/// Which formula attained the optimum, with clique indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Star {
    WithCliqueEdge { center: usize, other: usize },
    IndependentOnly { center: usize },
    Empty,
}

fn best_star(stats: &SplitStats) -> (usize, Star) {
    let k = stats.clique.len();
    let mut best = (0, Star::Empty);

    if k >= 2 {
        // smallest pair count at each clique vertex; pairs without an entry count 0
        let mut min_pair = vec![usize::MAX; k];
        let mut stored = vec![0usize; k];
        for (i, row) in stats.pairs.iter().enumerate() {
            for &(j, c) in row {
                min_pair[i] = min_pair[i].min(c);
                min_pair[j] = min_pair[j].min(c);
                stored[i] += 1;
                stored[j] += 1;
            }
        }
        let mut winner: Option<(usize, usize)> = None;
        for i in 0..k {
            let m = if stored[i] < k - 1 { 0 } else { min_pair[i] };
            let value = stats.l[i] - m + 1;
            if winner.is_none_or(|(v, _)| value > v) {
                winner = Some((value, i));
            }
        }
        let (value, center) = winner.expect("k >= 2");
        let m = stats.l[center] + 1 - value;
        let other = (0..k)
            .find(|&j| j != center && stats.pair_count(center, j) == m)
            .expect("minimum is attained");
        best = (value, Star::WithCliqueEdge { center, other });
    }

    if let Some((center, &value)) = stats.l.iter().enumerate().rev().max_by_key(|&(_, &v)| v) {
        if value > best.0 {
            best = (value, Star::IndependentOnly { center });
        }
    }
    best
}

/// Solves a split graph with a validated maximum-clique partition.
pub fn solve_split(g: &Graph, p: &SplitPartition) -> Result<EopSolution> {
    let stats = compute_stats(g, p)?;
    let (value, star) = best_star(&stats);
    let in_clique = |v: usize| stats.index[v].is_some();
    let edge = |a: usize, b: usize| {
        g.edge_between(a, b)
            .ok_or_else(|| Error::Internal(format!("{a} and {b} are not adjacent")))
    };
    let mut ids: Vec<EdgeId> = Vec::with_capacity(value);
    match star {
        Star::Empty => {}
        Star::WithCliqueEdge { center, other } => {
            let (x, y) = (stats.clique[center], stats.clique[other]);
            ids.push(edge(x, y)?);
            for &(s, e) in g.incident(x) {
                if !in_clique(s) && !g.has_edge(s, y) {
                    ids.push(e);
                }
            }
        }
        Star::IndependentOnly { center } => {
            let x = stats.clique[center];
            ids.extend(
                g.incident(x)
                    .iter()
                    .filter(|&&(s, _)| !in_clique(s))
                    .map(|&(_, e)| e),
            );
        }
    }
    if ids.len() != value {
        return Err(Error::Internal(format!(
            "split witness has {} edges, formula gives {value}",
            ids.len()
        )));
    }
    Ok(EopSolution::from_edges(ids))
}

/// Recognizes and solves; fails with [`Error::NotInClass`] otherwise.
pub fn solve_split_graph(g: &Graph) -> Result<EopSolution> {
    let p = split_partition(g).ok_or(Error::NotInClass("split"))?;
    solve_split(g, &p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partition(clique: &[usize], independent: &[usize]) -> SplitPartition {
        SplitPartition {
            clique: clique.to_vec(),
            independent: independent.to_vec(),
        }
    }

    #[test]
    fn star_counts_and_solution() {
        let g = Graph::star(3);
        let p = partition(&[0, 1], &[2, 3]);
        let st = compute_stats(&g, &p).unwrap();
        assert_eq!(
            (st.l(0), st.l(1), st.lpair(0, 1)),
            (Some(2), Some(0), Some(0))
        );
        assert_eq!(st.l(2), None);
        let s = solve_split(&g, &p).unwrap();
        assert_eq!(s.value, 3);
        assert_eq!(s.witness.pairs(&g), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn complete_graphs() {
        let g = Graph::complete(4);
        let p = partition(&[0, 1, 2, 3], &[]);
        let st = compute_stats(&g, &p).unwrap();
        assert!((0..4).all(|x| st.l(x) == Some(0)));
        assert_eq!(st.stored_pairs(), 0);
        for n in 2..=7 {
            assert_eq!(solve_split_graph(&Graph::complete(n)).unwrap().value, 1);
        }
    }

    #[test]
    fn triangle_with_two_pendants() {
        // K = {x, y, z} = {0, 1, 2}; s1 = 3 ~ x; s2 = 4 ~ x, y
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 4)]).unwrap();
        let p = partition(&[0, 1, 2], &[3, 4]);
        let st = compute_stats(&g, &p).unwrap();
        assert_eq!((st.l(0), st.l(1), st.l(2)), (Some(2), Some(1), Some(0)));
        assert_eq!(st.lpair(0, 1), Some(1));
        assert_eq!(st.lpair(1, 0), Some(1));
        assert_eq!(st.lpair(0, 2), Some(0));
        assert_eq!(st.lpair(1, 2), Some(0));
        assert_eq!(st.lpair(0, 0), None);
        let s = solve_split(&g, &p).unwrap();
        assert_eq!(s.value, 3);
        assert_eq!(s.witness.pairs(&g), vec![(0, 2), (0, 3), (0, 4)]);
    }

    #[test]
    fn independent_star_can_win() {
        // x = 0 shares two S-neighbors with each of 1 and 2
        let pairs = [
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (0, 4),
            (1, 4),
            (0, 5),
            (2, 5),
            (0, 6),
            (2, 6),
        ];
        let g = Graph::new(7, pairs).unwrap();
        let s = solve_split_graph(&g).unwrap();
        assert_eq!(s.value, 4);
        assert_eq!(s.witness.pairs(&g), vec![(0, 3), (0, 4), (0, 5), (0, 6)]);
    }

    #[test]
    fn edgeless_and_empty() {
        assert_eq!(solve_split_graph(&Graph::empty(4)).unwrap().value, 0);
        assert_eq!(solve_split_graph(&Graph::empty(0)).unwrap().value, 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            solve_split_graph(&Graph::cycle(4)),
            Err(Error::NotInClass("split"))
        ));
        let g = Graph::star(3);
        assert!(matches!(
            solve_split(&g, &partition(&[0], &[1, 2, 3])),
            Err(Error::InvalidCertificate(_))
        ));
    }
}
