//! Biconnected decomposition and rooted block/cut-vertex trees.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

const UNSET: usize = usize::MAX;

/// Biconnected pieces of `g` as sorted vertex lists, plus the edge count of
/// each piece. Isolated vertices form single-vertex pieces. Pieces are sorted.
pub fn biconnected_blocks(g: &Graph) -> Vec<(Vec<usize>, usize)> {
    let n = g.vertex_count();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut parent = vec![UNSET; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            blocks.push((vec![root], 0));
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, 0));
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if top.1 < g.degree(v) {
                let w = g.incident(v)[top.1].0;
                top.1 += 1;
                if disc[w] == UNSET {
                    parent[w] = v;
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    stack.push((w, 0));
                } else if w != parent[v] && disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    edge_stack.push((v, w));
                }
                continue;
            }
            stack.pop();
            let p = parent[v];
            if p == UNSET {
                continue;
            }
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                let mut verts = Vec::new();
                let mut edges = 0;
                while let Some((a, b)) = edge_stack.pop() {
                    verts.push(a);
                    verts.push(b);
                    edges += 1;
                    if (a, b) == (p, v) {
                        break;
                    }
                }
                verts.sort_unstable();
                verts.dedup();
                blocks.push((verts, edges));
            }
        }
    }
    blocks.sort();
    blocks
}

/// Whether every biconnected piece of `g` is a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    biconnected_blocks(g)
        .iter()
        .all(|(verts, edges)| *edges == verts.len() * (verts.len() - 1) / 2)
}

/// The block/cut-vertex tree of a connected block graph, rooted at a cut
/// vertex (or at a sentinel when there is none).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutTree {
    /// Sorted vertex lists; block ids index this list.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted.
    pub cut_vertices: Vec<usize>,
    pub is_cut: Vec<bool>,
    /// `None` stands for the sentinel root of a graph without cut vertices.
    pub root: Option<usize>,
    /// `CC(v)` per vertex; empty for non-cut vertices.
    pub child_blocks: Vec<Vec<usize>>,
    /// `CB(B)` per block.
    pub child_cuts: Vec<Vec<usize>>,
    /// Parent cut vertex of each block.
    pub block_parent: Vec<Option<usize>>,
    /// Parent block of each cut vertex (the root has none).
    pub cut_parent: Vec<Option<usize>>,
    /// Depth of each cut vertex in the tree, counting cut vertices only.
    pub cut_depth: Vec<usize>,
}

/// Builds the rooted tree, or `Ok(None)` when some block is not a clique.
///
/// The root is `root_hint` when that is a cut vertex, else the lowest cut vertex.
pub fn build_cut_tree(g: &Graph, root_hint: Option<usize>) -> Result<Option<CutTree>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(r) = root_hint {
        g.check_vertex(r)?;
    }
    let n = g.vertex_count();
    let pieces = biconnected_blocks(g);
    if pieces
        .iter()
        .any(|(verts, edges)| *edges != verts.len() * (verts.len() - 1) / 2)
    {
        return Ok(None);
    }
    let blocks: Vec<Vec<usize>> = pieces.into_iter().map(|(v, _)| v).collect();
    let mut blocks_of = vec![Vec::new(); n];
    for (b, verts) in blocks.iter().enumerate() {
        for &v in verts {
            blocks_of[v].push(b);
        }
    }
    let is_cut: Vec<bool> = blocks_of.iter().map(|bs| bs.len() >= 2).collect();
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let root = match root_hint {
        Some(r) if is_cut[r] => Some(r),
        _ => cut_vertices.first().copied(),
    };

    let mut child_blocks = vec![Vec::new(); n];
    let mut child_cuts = vec![Vec::new(); blocks.len()];
    let mut block_parent = vec![None; blocks.len()];
    let mut cut_parent = vec![None; n];
    let mut cut_depth = vec![0; n];

    if let Some(r) = root {
        let mut seen_block = vec![false; blocks.len()];
        let mut queue = VecDeque::from([r]);
        while let Some(v) = queue.pop_front() {
            for &b in &blocks_of[v] {
                if seen_block[b] {
                    continue;
                }
                seen_block[b] = true;
                block_parent[b] = Some(v);
                child_blocks[v].push(b);
                for &w in &blocks[b] {
                    if w != v && is_cut[w] {
                        child_cuts[b].push(w);
                        cut_parent[w] = Some(b);
                        cut_depth[w] = cut_depth[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
    }

    Ok(Some(CutTree {
        blocks,
        cut_vertices,
        is_cut,
        root,
        child_blocks,
        child_cuts,
        block_parent,
        cut_parent,
        cut_depth,
    }))
}

impl CutTree {
    /// Cut vertices by non-increasing depth, ties by vertex id.
    pub fn bottom_up(&self) -> Vec<usize> {
        let mut order = self.cut_vertices.clone();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.cut_depth[v]), v));
        order
    }

    /// Number of (block, cut vertex) incidences, i.e. tree edges.
    pub fn incidence_count(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| b.iter().filter(|&&v| self.is_cut[v]).count())
            .sum()
    }

    /// Vertices of the branch hanging at cut vertex `v` (`G_v`), `v` first.
    pub fn branch_vertices(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        for &b in &self.child_blocks[v] {
            out.extend(self.below_block(v, b));
        }
        out
    }

    /// Vertices of `G_v^B`: block `b` without its parent `v`, plus everything
    /// hanging below it.
    pub fn below_block(&self, v: usize, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(v, b)];
        while let Some((parent, block)) = stack.pop() {
            for &w in &self.blocks[block] {
                if w == parent {
                    continue;
                }
                out.push(w);
                if self.is_cut[w] {
                    for &child in &self.child_blocks[w] {
                        stack.push((w, child));
                    }
                }
            }
        }
        out
    }

    /// Checks that the tree describes `g`: every block is a clique of `g` and
    /// the blocks cover all vertices.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.is_cut.len() != g.vertex_count() {
            return Err(Error::InvalidCertificate(
                "cut tree built for a different vertex count".into(),
            ));
        }
        let mut covered = vec![false; g.vertex_count()];
        for block in &self.blocks {
            for (i, &u) in block.iter().enumerate() {
                g.check_vertex(u)?;
                covered[u] = true;
                if block[i + 1..].iter().any(|&w| !g.has_edge(u, w)) {
                    return Err(Error::NotInClass("block"));
                }
            }
        }
        if covered.iter().any(|c| !c) {
            return Err(Error::InvalidCertificate(
                "blocks do not cover every vertex".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn bowtie_tree() {
        let t = build_cut_tree(&bowtie(), None).unwrap().unwrap();
        assert_eq!(t.blocks, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(t.cut_vertices, vec![0]);
        assert_eq!(t.root, Some(0));
        assert_eq!(t.child_blocks[0], vec![0, 1]);
        assert!(t.child_cuts.iter().all(Vec::is_empty));
    }

    #[test]
    fn star_tree() {
        let t = build_cut_tree(&Graph::star(3), Some(2)).unwrap().unwrap();
        assert_eq!(t.blocks.len(), 3);
        assert!(t.blocks.iter().all(|b| b.len() == 2));
        assert_eq!(t.cut_vertices, vec![0]);
        assert_eq!(t.root, Some(0));
    }

    #[test]
    fn four_cycle_is_rejected() {
        assert_eq!(build_cut_tree(&Graph::cycle(4), None).unwrap(), None);
        assert!(!is_block_graph(&Graph::cycle(4)));
    }

    #[test]
    fn disconnected_is_an_input_error() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(build_cut_tree(&g, None), Err(Error::Disconnected)));
        assert!(is_block_graph(&g));
    }

    #[test]
    fn clique_has_sentinel_root() {
        let t = build_cut_tree(&Graph::complete(5), None).unwrap().unwrap();
        assert_eq!(t.root, None);
        assert_eq!(t.blocks.len(), 1);
        let single = build_cut_tree(&Graph::empty(1), None).unwrap().unwrap();
        assert_eq!(single.blocks, vec![vec![0]]);
    }

    #[test]
    fn path_branches() {
        // a-b-c-d-e rooted at c
        let t = build_cut_tree(&Graph::path(5), Some(2)).unwrap().unwrap();
        assert_eq!(t.root, Some(2));
        assert_eq!(t.cut_vertices, vec![1, 2, 3]);
        assert_eq!(t.bottom_up().last(), Some(&2));
        let b = t.child_blocks[2]
            .iter()
            .copied()
            .find(|&b| t.blocks[b].contains(&1))
            .unwrap();
        let mut below = t.below_block(2, b);
        below.sort();
        assert_eq!(below, vec![0, 1]);
        assert_eq!(
            t.incidence_count(),
            t.blocks.len() + t.cut_vertices.len() - 1
        );
    }
}
