use crate::error::{Error, Result};
use crate::graph::Graph;

/// A clique `K` of maximum size and an independent set `S` partitioning the
/// vertices. Both lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

/// Degree-sequence split recognition followed by at most one promotion from
/// `S` into `K`, so that `|K| = ω(G)`.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.vertex_count();
    let mut by_degree: Vec<usize> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();

    // largest m (1-based) with d_m >= m - 1
    let m = degrees
        .iter()
        .enumerate()
        .take_while(|&(i, &d)| d >= i)
        .count();
    let top: usize = degrees[..m].iter().sum();
    let rest: usize = degrees[m..].iter().sum();
    if top != m * m.saturating_sub(1) + rest {
        return None;
    }

    let mut in_clique = vec![false; n];
    for &v in &by_degree[..m] {
        in_clique[v] = true;
    }
    let mut clique: Vec<usize> = by_degree[..m].to_vec();
    let promote = by_degree[m..]
        .iter()
        .copied()
        .filter(|&s| clique_neighbors(g, s, &in_clique) == clique.len())
        .min();
    if let Some(s) = promote {
        in_clique[s] = true;
        clique.push(s);
    }
    clique.sort_unstable();
    let independent: Vec<usize> = (0..n).filter(|&v| !in_clique[v]).collect();
    let p = SplitPartition {
        clique,
        independent,
    };
    if let Err(e) = p.validate(g) {
        panic!("split recognition produced an invalid partition: {e}");
    }
    Some(p)
}

fn clique_neighbors(g: &Graph, v: usize, in_clique: &[bool]) -> usize {
    g.neighbors(v).filter(|&w| in_clique[w]).count()
}

impl SplitPartition {
    /// Checks the partition, clique, independence and maximality conditions.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        let mut in_clique = vec![None; n];
        for (list, flag) in [(&self.clique, true), (&self.independent, false)] {
            for &v in list.iter() {
                g.check_vertex(v)?;
                if in_clique[v].replace(flag).is_some() {
                    return Err(Error::InvalidCertificate(format!(
                        "vertex {v} listed twice in the split partition"
                    )));
                }
            }
        }
        if in_clique.iter().any(Option::is_none) {
            return Err(Error::InvalidCertificate(
                "split partition does not cover every vertex".into(),
            ));
        }
        let in_clique: Vec<bool> = in_clique.into_iter().map(|f| f == Some(true)).collect();
        for &x in &self.clique {
            if clique_neighbors(g, x, &in_clique) + 1 != self.clique.len() {
                return Err(Error::InvalidCertificate(format!(
                    "vertex {x} is not adjacent to the whole clique side"
                )));
            }
        }
        for &s in &self.independent {
            let k = clique_neighbors(g, s, &in_clique);
            if k != g.degree(s) {
                return Err(Error::InvalidCertificate(format!(
                    "vertex {s} has a neighbor on the independent side"
                )));
            }
            if k == self.clique.len() {
                return Err(Error::InvalidCertificate(format!(
                    "vertex {s} extends the clique, which is not maximum"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_partition() {
        let p = split_partition(&Graph::star(3)).unwrap();
        assert_eq!(p.clique, vec![0, 1]);
        assert_eq!(p.independent, vec![2, 3]);
    }

    #[test]
    fn four_cycle_is_not_split() {
        assert!(split_partition(&Graph::cycle(4)).is_none());
        assert!(split_partition(&Graph::path(5)).is_none());
    }

    #[test]
    fn complete_graph() {
        let p = split_partition(&Graph::complete(4)).unwrap();
        assert_eq!(p.clique, vec![0, 1, 2, 3]);
        assert!(p.independent.is_empty());
    }

    #[test]
    fn path_on_four_vertices_is_split() {
        let p = split_partition(&Graph::path(4)).unwrap();
        assert_eq!(p.clique, vec![1, 2]);
        assert_eq!(p.independent, vec![0, 3]);
    }

    #[test]
    fn clique_side_is_maximum() {
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let p = split_partition(&g).unwrap();
        assert_eq!(p.clique, vec![0, 1, 2]);
        let edgeless = split_partition(&Graph::empty(3)).unwrap();
        assert_eq!(edgeless.clique.len(), 1);
    }

    #[test]
    fn validate_rejects_bad_partitions() {
        let g = Graph::complete(3);
        let p = SplitPartition {
            clique: vec![0, 1],
            independent: vec![2],
        };
        assert!(p.validate(&g).is_err());
    }
}
