//! Edge open packing on block graphs by dynamic programming over the rooted
//! block/cut-vertex tree.
//!
//! For each cut vertex `v` with branch `G_v` five labels are kept:
//!
//! * `rho_o`: best packing of `G_v`;
//! * `rho_c`: best packing in which `v` is the center of a star;
//! * `rho_l`: best packing in which `v` is a leaf of a star;
//! * `rho_p`: best packing leaving `v` unsaturated;
//! * `rho_pp`: best packing leaving all of `N[v]` unsaturated.
//!
//! Non-cut vertices have a single-vertex branch and all labels zero. The
//! branch below one child block (`G_v^B`) is itself a block graph and is
//! solved recursively, memoized by its vertex set.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EopSolution, Graph};
use crate::recognition::{build_cut_tree, CutTree};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NodeLabels {
    pub rho_o: usize,
    pub rho_c: usize,
    pub rho_l: usize,
    pub rho_p: usize,
    pub rho_pp: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockType {
    /// Taking an edge of the block toward its parent pays off (`A_B ≥ Ā_B`).
    Type1,
    Type2,
}

/// Scores of a child block `B` of cut vertex `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockScores {
    /// `v` is a star center with a leaf in `B`.
    pub a: usize,
    /// `v` is a star center without a leaf in `B`.
    pub abar: usize,
    /// `v` is a leaf of a star centered in `B`, restricted to this block's branch.
    pub m: usize,
    /// The other child blocks when `v` is a leaf of a star centered in `B`.
    pub mbar: usize,
    pub block_type: BlockType,
    /// Leaf attaining `a`.
    pub a_arg: usize,
    /// Center attaining `m`.
    pub m_arg: usize,
}

/// Memoized `G_v^B` solutions keyed by their sorted vertex set in the
/// outermost graph; witnesses use that graph's edge ids.
#[derive(Debug, Default)]
pub struct SubtreeCache {
    map: HashMap<Vec<usize>, EopSolution>,
}

impl SubtreeCache {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

struct Context<'r> {
    root: &'r Graph,
    cache: SubtreeCache,
    /// Distance from the outer root; subproblems root at their highest cut
    /// vertex so their branches coincide with cached ones.
    priority: Vec<usize>,
}

impl<'r> Context<'r> {
    fn new(root: &'r Graph, from: Option<usize>) -> Self {
        let n = root.vertex_count();
        let mut priority = vec![0; n];
        if let Some(r) = from {
            let mut seen = vec![false; n];
            seen[r] = true;
            let mut queue = VecDeque::from([r]);
            while let Some(v) = queue.pop_front() {
                for w in root.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        priority[w] = priority[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        Context {
            root,
            cache: SubtreeCache::default(),
            priority,
        }
    }

    /// Packing of the outer graph induced on `set` (sorted), in outer edge ids.
    fn solve_set(&mut self, set: Vec<usize>) -> Result<EopSolution> {
        if let Some(s) = self.cache.map.get(&set) {
            return Ok(s.clone());
        }
        let sub = self.root.induced_subgraph(&set)?;
        let local = &sub.graph;
        let solution = if local.edge_count() == 0 {
            EopSolution::empty()
        } else {
            let first = build_cut_tree(local, None)?.ok_or_else(|| {
                Error::Internal("branch of a block graph is not a block graph".into())
            })?;
            let hint = first
                .cut_vertices
                .iter()
                .copied()
                .min_by_key(|&x| (self.priority[sub.new_to_old[x]], sub.new_to_old[x]));
            let tree = if hint.is_some() && hint != first.root {
                build_cut_tree(local, hint)?
                    .ok_or_else(|| Error::Internal("re-rooting failed".into()))?
            } else {
                first
            };
            let dp = BlockDp::run_in(local, &tree, &sub.new_to_old, &sub.old_to_new, self)?;
            let local_solution = dp.solution()?;
            EopSolution::from_edges(
                local_solution
                    .witness
                    .ids()
                    .iter()
                    .map(|e| sub.edge_to_old[e.0])
                    .collect(),
            )
        };
        self.cache.map.insert(set, solution.clone());
        Ok(solution)
    }
}

/// Filled DP tables for one rooted cut tree.
pub struct BlockDp<'a> {
    graph: &'a Graph,
    tree: &'a CutTree,
    labels: Vec<NodeLabels>,
    scores: Vec<Option<BlockScores>>,
    /// `G_v^B` solutions in this graph's edge ids, per child block.
    branches: Vec<Option<EopSolution>>,
    cache_size: usize,
}

impl<'a> BlockDp<'a> {
    /// Runs the DP on a connected block graph with its rooted cut tree.
    pub fn run(g: &'a Graph, t: &'a CutTree) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        t.validate(g)?;
        let identity: Vec<usize> = g.vertices().collect();
        let inverse: Vec<Option<usize>> = g.vertices().map(Some).collect();
        let mut ctx = Context::new(g, t.root);
        let mut dp = Self::run_in(g, t, &identity, &inverse, &mut ctx)?;
        dp.cache_size = ctx.cache.len();
        Ok(dp)
    }

    fn run_in(
        g: &'a Graph,
        t: &'a CutTree,
        to_outer: &[usize],
        from_outer: &[Option<usize>],
        ctx: &mut Context<'_>,
    ) -> Result<Self> {
        let mut dp = BlockDp {
            graph: g,
            tree: t,
            labels: vec![NodeLabels::default(); g.vertex_count()],
            scores: vec![None; t.blocks.len()],
            branches: vec![None; t.blocks.len()],
            cache_size: 0,
        };
        for v in t.bottom_up() {
            for &b in &t.child_blocks[v] {
                let mut set: Vec<usize> =
                    t.below_block(v, b).iter().map(|&x| to_outer[x]).collect();
                set.sort_unstable();
                let outer = ctx.solve_set(set)?;
                let ids = outer
                    .witness
                    .ids()
                    .iter()
                    .map(|&e| {
                        let (a, b) = ctx.root.endpoints(e);
                        match (from_outer[a], from_outer[b]) {
                            (Some(x), Some(y)) => g.edge_between(x, y),
                            _ => None,
                        }
                        .ok_or_else(|| {
                            Error::Internal("cached branch edge outside subgraph".into())
                        })
                    })
                    .collect::<Result<Vec<EdgeId>>>()?;
                dp.branches[b] = Some(EopSolution::from_edges(ids));
            }

            let rho_pp = dp.rho_pp_at(v);
            let rho_p = dp.rho_p_at(v)?;
            for &b in &t.child_blocks[v] {
                dp.scores[b] = Some(dp.block_scores(v, b));
            }
            let rho_c = dp.rho_c_at(v)?;
            let rho_l = dp.rho_l_at(v)?;
            let rho_o = rho_c.max(rho_l).max(rho_p);
            if !(rho_pp <= rho_p && rho_p <= rho_o) {
                return Err(Error::Internal(format!(
                    "label order violated at {v}: rho_pp {rho_pp}, rho_p {rho_p}, rho_o {rho_o}"
                )));
            }
            dp.labels[v] = NodeLabels {
                rho_o,
                rho_c,
                rho_l,
                rho_p,
                rho_pp,
            };
        }
        Ok(dp)
    }

    pub fn labels(&self, v: usize) -> NodeLabels {
        self.labels[v]
    }

    pub fn scores(&self, block: usize) -> Option<BlockScores> {
        self.scores[block]
    }

    /// Number of distinct `G_v^B` subproblems solved.
    pub fn cache_size(&self) -> usize {
        self.cache_size
    }

    /// Cached `G_v^B` solution for child block `block`.
    pub fn solve_gvb(&self, block: usize) -> Option<&EopSolution> {
        self.branches[block].as_ref()
    }

    fn rho_p_of(&self, w: usize) -> usize {
        self.labels[w].rho_p
    }

    /// `Σ_{B ∈ CC(v)} Σ_{u ∈ CB(B)} rho_p(u)`.
    pub fn rho_pp_at(&self, v: usize) -> usize {
        self.tree.child_blocks[v]
            .iter()
            .flat_map(|&b| &self.tree.child_cuts[b])
            .map(|&u| self.rho_p_of(u))
            .sum()
    }

    /// `Σ_{B ∈ CC(v)} ρ(G_v^B)`.
    pub fn rho_p_at(&self, v: usize) -> Result<usize> {
        self.tree.child_blocks[v]
            .iter()
            .map(|&b| {
                self.branches[b]
                    .as_ref()
                    .map(|s| s.value)
                    .ok_or_else(|| Error::Internal(format!("branch below block {b} not solved")))
            })
            .sum()
    }

    fn block_scores(&self, v: usize, b: usize) -> BlockScores {
        let t = self.tree;
        let abar: usize = t.child_cuts[b].iter().map(|&w| self.rho_p_of(w)).sum();
        let mut a = (0, usize::MAX);
        let mut m = (0, usize::MAX);
        for &u in &t.blocks[b] {
            if u == v {
                continue;
            }
            let l = self.labels[u];
            let others = abar - l.rho_p;
            let a_u = 1 + l.rho_pp + others;
            let m_u = l.rho_c.max(l.rho_pp) + 1 + others;
            if a.1 == usize::MAX || a_u > a.0 {
                a = (a_u, u);
            }
            if m.1 == usize::MAX || m_u > m.0 {
                m = (m_u, u);
            }
        }
        let mbar = t.child_blocks[v]
            .iter()
            .filter(|&&other| other != b)
            .flat_map(|&other| &t.child_cuts[other])
            .map(|&w| self.rho_p_of(w))
            .sum();
        BlockScores {
            a: a.0,
            abar,
            m: m.0,
            mbar,
            block_type: if a.0 >= abar {
                BlockType::Type1
            } else {
                BlockType::Type2
            },
            a_arg: a.1,
            m_arg: m.1,
        }
    }

    fn child_scores(&self, v: usize) -> Result<Vec<(usize, BlockScores)>> {
        let blocks = &self.tree.child_blocks[v];
        if blocks.is_empty() {
            return Err(Error::Internal(format!("{v} has no child blocks")));
        }
        blocks
            .iter()
            .map(|&b| {
                self.scores[b]
                    .map(|s| (b, s))
                    .ok_or_else(|| Error::Internal(format!("block {b} not scored")))
            })
            .collect()
    }

    /// The block forced to hold the center's edge when every child is Type 2.
    fn forced_block(scores: &[(usize, BlockScores)]) -> usize {
        let mut best: Option<(i64, usize)> = None;
        for &(b, s) in scores {
            let gain = s.a as i64 - s.abar as i64;
            if best.is_none_or(|(g, _)| gain > g) {
                best = Some((gain, b));
            }
        }
        best.expect("nonempty").1
    }

    pub fn rho_c_at(&self, v: usize) -> Result<usize> {
        let scores = self.child_scores(v)?;
        let any_type1 = scores.iter().any(|(_, s)| s.block_type == BlockType::Type1);
        if any_type1 {
            Ok(scores
                .iter()
                .map(|(_, s)| match s.block_type {
                    BlockType::Type1 => s.a,
                    BlockType::Type2 => s.abar,
                })
                .sum())
        } else {
            let forced = Self::forced_block(&scores);
            Ok(scores
                .iter()
                .map(|&(b, s)| if b == forced { s.a } else { s.abar })
                .sum())
        }
    }

    pub fn rho_l_at(&self, v: usize) -> Result<usize> {
        let scores = self.child_scores(v)?;
        Ok(scores.iter().map(|(_, s)| s.m + s.mbar).max().unwrap_or(0))
    }

    /// The optimum of the whole graph with a witness.
    pub fn solution(&self) -> Result<EopSolution> {
        let Some(root) = self.tree.root else {
            let witness: Vec<EdgeId> = self.graph.edge_ids().take(1).collect();
            return Ok(EopSolution::from_edges(witness));
        };
        let witness = self.reconstruct_witness(Task::Best(root))?;
        let value = self.labels[root].rho_o;
        if witness.len() != value {
            return Err(Error::Internal(format!(
                "witness has {} edges, DP value is {value}",
                witness.len()
            )));
        }
        Ok(EopSolution::from_edges(witness))
    }

    /// Walks the recorded argmax choices top-down from `start`.
    fn reconstruct_witness(&self, start: Task) -> Result<Vec<EdgeId>> {
        let t = self.tree;
        let edge = |a: usize, b: usize| {
            self.graph
                .edge_between(a, b)
                .ok_or_else(|| Error::Internal(format!("{a} and {b} are not adjacent")))
        };
        let mut out = Vec::new();
        let mut stack = vec![start];
        while let Some(task) = stack.pop() {
            let v = task.vertex();
            if !t.is_cut[v] {
                continue;
            }
            let l = self.labels[v];
            match task {
                Task::Best(_) => {
                    stack.push(if l.rho_o == l.rho_c {
                        Task::Center(v)
                    } else if l.rho_o == l.rho_l {
                        Task::Leaf(v)
                    } else {
                        Task::Unsaturated(v)
                    });
                }
                Task::Center(_) => {
                    let scores = self.child_scores(v)?;
                    let any_type1 = scores.iter().any(|(_, s)| s.block_type == BlockType::Type1);
                    let forced = Self::forced_block(&scores);
                    for &(b, s) in &scores {
                        let takes_edge = if any_type1 {
                            s.block_type == BlockType::Type1
                        } else {
                            b == forced
                        };
                        if takes_edge {
                            out.push(edge(v, s.a_arg)?);
                            stack.push(Task::Clear(s.a_arg));
                            self.unsaturate_children(b, Some(s.a_arg), &mut stack);
                        } else {
                            self.unsaturate_children(b, None, &mut stack);
                        }
                    }
                }
                Task::Leaf(_) => {
                    let scores = self.child_scores(v)?;
                    let mut chosen: Option<(usize, BlockScores)> = None;
                    for &(b, s) in &scores {
                        if chosen.is_none_or(|(_, c)| s.m + s.mbar > c.m + c.mbar) {
                            chosen = Some((b, s));
                        }
                    }
                    let (b, s) = chosen.expect("nonempty");
                    let u = s.m_arg;
                    out.push(edge(v, u)?);
                    let lu = self.labels[u];
                    stack.push(if lu.rho_c >= lu.rho_pp {
                        Task::Center(u)
                    } else {
                        Task::Clear(u)
                    });
                    self.unsaturate_children(b, Some(u), &mut stack);
                    for &(other, _) in &scores {
                        if other != b {
                            self.unsaturate_children(other, None, &mut stack);
                        }
                    }
                }
                Task::Unsaturated(_) => {
                    for &b in &t.child_blocks[v] {
                        let branch = self.branches[b]
                            .as_ref()
                            .ok_or_else(|| Error::Internal(format!("branch {b} not solved")))?;
                        out.extend_from_slice(branch.witness.ids());
                    }
                }
                Task::Clear(_) => {
                    for &b in &t.child_blocks[v] {
                        self.unsaturate_children(b, None, &mut stack);
                    }
                }
            }
        }
        Ok(out)
    }

    fn unsaturate_children(&self, block: usize, skip: Option<usize>, stack: &mut Vec<Task>) {
        for &w in &self.tree.child_cuts[block] {
            if Some(w) != skip {
                stack.push(Task::Unsaturated(w));
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Task {
    Best(usize),
    Center(usize),
    Leaf(usize),
    Unsaturated(usize),
    Clear(usize),
}

impl Task {
    fn vertex(self) -> usize {
        match self {
            Task::Best(v)
            | Task::Center(v)
            | Task::Leaf(v)
            | Task::Unsaturated(v)
            | Task::Clear(v) => v,
        }
    }
}

/// Solves a connected block graph with the given rooted cut tree.
pub fn solve_block(g: &Graph, t: &CutTree) -> Result<EopSolution> {
    BlockDp::run(g, t)?.solution()
}

/// Recognizes and solves a block graph, one component at a time.
pub fn solve_block_graph(g: &Graph) -> Result<EopSolution> {
    let labels = g.connected_components();
    let mut ids = Vec::new();
    for comp in labels.members() {
        let sub = g.induced_subgraph(&comp)?;
        let tree = build_cut_tree(&sub.graph, None)?.ok_or(Error::NotInClass("block"))?;
        let s = solve_block(&sub.graph, &tree)?;
        ids.extend(s.witness.ids().iter().map(|e| sub.edge_to_old[e.0]));
    }
    Ok(EopSolution::from_edges(ids))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        // v = 0; triangles {0, 1, 2} and {0, 3, 4}
        Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    fn tree_of(g: &Graph, root: Option<usize>) -> CutTree {
        build_cut_tree(g, root).unwrap().unwrap()
    }

    #[test]
    fn bowtie_labels_and_witness() {
        let g = bowtie();
        let t = tree_of(&g, None);
        let dp = BlockDp::run(&g, &t).unwrap();
        let l = dp.labels(0);
        assert_eq!((l.rho_c, l.rho_l, l.rho_p, l.rho_pp), (2, 1, 2, 0));
        assert_eq!(dp.solve_gvb(0).unwrap().value, 1);
        let s = dp.solution().unwrap();
        assert_eq!(s.value, 2);
        assert_eq!(s.witness.pairs(&g), vec![(0, 1), (0, 3)]);
    }

    #[test]
    fn stars() {
        for leaves in 1..=6 {
            let g = Graph::star(leaves);
            let s = solve_block_graph(&g).unwrap();
            assert_eq!(s.value, leaves);
        }
        let g = Graph::star(3);
        let t = tree_of(&g, None);
        let dp = BlockDp::run(&g, &t).unwrap();
        let l = dp.labels(0);
        assert_eq!((l.rho_c, l.rho_l, l.rho_p), (3, 1, 0));
        assert_eq!(dp.solution().unwrap().witness.len(), 3);
    }

    #[test]
    fn single_clique() {
        let g = Graph::complete(5);
        let s = solve_block(&g, &tree_of(&g, None)).unwrap();
        assert_eq!(s.value, 1);
        assert_eq!(s.witness.ids(), &[EdgeId(0)]);
    }

    #[test]
    fn five_vertex_path_rooted_in_the_middle() {
        let g = Graph::path(5);
        let t = tree_of(&g, Some(2));
        let dp = BlockDp::run(&g, &t).unwrap();
        assert_eq!(dp.rho_pp_at(2), 0);
        let l = dp.labels(2);
        assert_eq!(l.rho_l, 2);
        let lb = dp.labels(1);
        assert_eq!(lb.rho_c, 1);
        let b = t.child_blocks[2]
            .iter()
            .copied()
            .find(|&b| t.blocks[b].contains(&1))
            .unwrap();
        assert_eq!(dp.solve_gvb(b).unwrap().value, 1);
        assert_eq!(dp.solution().unwrap().value, 2);
    }

    #[test]
    fn all_type_two_children() {
        // v = 0 joined to w1 = 1 and w2 = 6; each w carries two pendant triangles
        let mut pairs = vec![(0, 1), (0, 6)];
        for (w, a) in [(1, 2), (6, 7)] {
            for (x, y) in [(a, a + 1), (a + 2, a + 3)] {
                pairs.extend([(w, x), (w, y), (x, y)]);
            }
        }
        let g = Graph::new(11, pairs).unwrap();
        let t = tree_of(&g, Some(0));
        let dp = BlockDp::run(&g, &t).unwrap();
        for &b in &t.child_blocks[0] {
            let s = dp.scores(b).unwrap();
            assert_eq!((s.a, s.abar, s.block_type), (1, 2, BlockType::Type2));
        }
        assert_eq!(dp.rho_c_at(0).unwrap(), 3);
        let l = dp.labels(0);
        assert_eq!((l.rho_p, l.rho_pp, l.rho_l), (4, 4, 5));
        // v as a leaf of the star at w1 beats every center option
        let s = dp.solution().unwrap();
        assert_eq!(s.value, 5);
        assert_eq!(
            s.value,
            crate::oracle::brute_force_eop(&g, Default::default())
                .unwrap()
                .value
        );
        assert_eq!(
            s.witness.pairs(&g),
            vec![(0, 1), (1, 2), (1, 4), (7, 8), (9, 10)]
        );
    }

    #[test]
    fn errors() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let t = tree_of(&Graph::path(4), None);
        assert!(matches!(BlockDp::run(&g, &t), Err(Error::Disconnected)));
        assert!(matches!(
            solve_block_graph(&Graph::cycle(4)),
            Err(Error::NotInClass("block"))
        ));
        assert_eq!(solve_block_graph(&g).unwrap().value, 2);
    }
}
