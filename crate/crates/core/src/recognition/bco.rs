//! Bi-compatible elimination orderings of proper interval graphs.
//!
//! Candidates come from three lexicographic BFS sweeps (the last two breaking
//! ties toward the vertex visited latest in the previous sweep). Every
//! candidate is certified with [`validate_bco`] before it is returned.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An ordering with the umbrella property. Positions are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BcOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
    last_neighbor: Vec<usize>,
}

impl BcOrdering {
    /// Wraps a permutation of `g`'s vertices. Does not check the umbrella
    /// property; see [`validate_bco`].
    pub fn from_order(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let n = g.vertex_count();
        if order.len() != n {
            return Err(Error::InvalidCertificate(format!(
                "ordering has {} entries for {n} vertices",
                order.len()
            )));
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            g.check_vertex(v)?;
            if position[v] != usize::MAX {
                return Err(Error::InvalidCertificate(format!(
                    "vertex {v} appears twice in the ordering"
                )));
            }
            position[v] = i;
        }
        let last_neighbor = last_neighbors(g, &order, &position);
        Ok(BcOrdering {
            order,
            position,
            last_neighbor,
        })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// `l(v_i)`: the largest position adjacent to position `i`, or `i` itself.
    pub fn last_neighbor(&self, i: usize) -> usize {
        self.last_neighbor[i]
    }

    pub fn last_neighbors(&self) -> &[usize] {
        &self.last_neighbor
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Restriction to positions `start..`, as an ordering of the induced
    /// subgraph whose vertex `i` is `self.order()[start + i]`.
    pub fn suffix(&self, g: &Graph, start: usize) -> Result<(Graph, BcOrdering)> {
        let sub = g.induced_subgraph(&self.order[start..])?;
        let order = (0..sub.graph.vertex_count()).collect();
        let o = BcOrdering::from_order(&sub.graph, order)?;
        Ok((sub.graph, o))
    }
}

fn last_neighbors(g: &Graph, order: &[usize], position: &[usize]) -> Vec<usize> {
    order
        .iter()
        .enumerate()
        .map(|(i, &v)| g.neighbors(v).map(|w| position[w]).fold(i, usize::max))
        .collect()
}

/// Whether every edge `v_i v_j` (`i < j`) has `{v_i, …, v_j}` inducing a clique.
///
/// Equivalent linear check: each vertex's later neighbors fill the positions
/// `i+1..=l(v_i)` and `l` is non-decreasing.
pub fn validate_bco(g: &Graph, o: &BcOrdering) -> bool {
    let n = g.vertex_count();
    if o.order.len() != n || o.position.len() != n {
        return false;
    }
    let mut prev_last = 0;
    for (i, &v) in o.order.iter().enumerate() {
        if v >= n || o.position[v] != i {
            return false;
        }
        let mut later = 0;
        let mut last = i;
        for w in g.neighbors(v) {
            let p = o.position[w];
            if p > i {
                later += 1;
                last = last.max(p);
            }
        }
        if last != o.last_neighbor[i] || later != last - i || last < prev_last {
            return false;
        }
        prev_last = last;
    }
    true
}

/// A certified BCO, or `None` when `g` is not a proper interval graph.
/// Components occupy contiguous ranges of the ordering.
pub fn compute_bco(g: &Graph) -> Option<BcOrdering> {
    let n = g.vertex_count();
    let first = lex_bfs(g, &(0..n).collect::<Vec<_>>());
    let second = lex_bfs_plus(g, &first);
    let third = lex_bfs_plus(g, &second);
    let o = BcOrdering::from_order(g, third).ok()?;
    validate_bco(g, &o).then_some(o)
}

fn lex_bfs_plus(g: &Graph, previous: &[usize]) -> Vec<usize> {
    let preference: Vec<usize> = previous.iter().rev().copied().collect();
    lex_bfs(g, &preference)
}

const NIL: usize = usize::MAX;

#[derive(Clone, Copy)]
struct Cell {
    head: usize,
    tail: usize,
    prev: usize,
    next: usize,
    stamp: usize,
    split: usize,
}

/// Lexicographic BFS by partition refinement. Among vertices with equal
/// labels, the one earliest in `preference` is visited first.
pub fn lex_bfs(g: &Graph, preference: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut rank = vec![0; n];
    for (i, &v) in preference.iter().enumerate() {
        rank[v] = i;
    }
    // cells stay sorted by rank as long as neighbors are moved in rank order
    let adjacency: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut list: Vec<usize> = g.neighbors(v).collect();
            list.sort_unstable_by_key(|&w| rank[w]);
            list
        })
        .collect();

    let mut vprev = vec![NIL; n];
    let mut vnext = vec![NIL; n];
    let mut cell_of = vec![0; n];
    let mut cells = vec![Cell {
        head: preference[0],
        tail: preference[n - 1],
        prev: NIL,
        next: NIL,
        stamp: 0,
        split: NIL,
    }];
    for w in preference.windows(2) {
        vnext[w[0]] = w[1];
        vprev[w[1]] = w[0];
    }
    let mut first = 0;
    let mut visited = vec![false; n];
    let mut out = Vec::with_capacity(n);

    fn detach(v: usize, c: usize, cells: &mut [Cell], vprev: &mut [usize], vnext: &mut [usize]) {
        let (p, q) = (vprev[v], vnext[v]);
        if p == NIL {
            cells[c].head = q;
        } else {
            vnext[p] = q;
        }
        if q == NIL {
            cells[c].tail = p;
        } else {
            vprev[q] = p;
        }
        vprev[v] = NIL;
        vnext[v] = NIL;
    }

    fn unlink_cell(c: usize, cells: &mut [Cell], first: &mut usize) {
        let (p, q) = (cells[c].prev, cells[c].next);
        if p == NIL {
            *first = q;
        } else {
            cells[p].next = q;
        }
        if q != NIL {
            cells[q].prev = p;
        }
    }

    for step in 1..=n {
        let c = first;
        let v = cells[c].head;
        detach(v, c, &mut cells, &mut vprev, &mut vnext);
        if cells[c].head == NIL {
            unlink_cell(c, &mut cells, &mut first);
        }
        visited[v] = true;
        out.push(v);

        for &w in &adjacency[v] {
            if visited[w] {
                continue;
            }
            let c = cell_of[w];
            if cells[c].stamp != step {
                let fresh = cells.len();
                cells.push(Cell {
                    head: NIL,
                    tail: NIL,
                    prev: cells[c].prev,
                    next: c,
                    stamp: 0,
                    split: NIL,
                });
                match cells[c].prev {
                    NIL => first = fresh,
                    p => cells[p].next = fresh,
                }
                cells[c].prev = fresh;
                cells[c].stamp = step;
                cells[c].split = fresh;
            }
            let target = cells[c].split;
            detach(w, c, &mut cells, &mut vprev, &mut vnext);
            if cells[c].head == NIL {
                unlink_cell(c, &mut cells, &mut first);
            }
            match cells[target].tail {
                NIL => cells[target].head = w,
                t => {
                    vnext[t] = w;
                    vprev[w] = t;
                }
            }
            cells[target].tail = w;
            cell_of[w] = target;
        }
    }
    out
}
