//! Immutable simple undirected graphs and the edge open packing checker.
//!
//! Vertices are dense indices `0..n`. Edges get stable ids in input order
//! (after dropping duplicates), so solvers can index tables by [`EdgeId`].

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    /// `(u, v)` with `u < v`, indexed by edge id.
    edges: Vec<(usize, usize)>,
    /// Per vertex, `(neighbor, edge id)` sorted by neighbor.
    adjacency: Vec<Vec<(usize, EdgeId)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate pairs are dropped, keeping the
    /// first occurrence's position for the edge id.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut raw = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            raw.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_normalized(n, raw))
    }

    /// `pairs` must already be in range, loop-free and ordered `u < v`.
    fn from_normalized(n: usize, pairs: Vec<(usize, usize)>) -> Self {
        let mut adjacency: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(pairs.len());
        // keep the earliest occurrence of each pair
        let mut order: Vec<usize> = (0..pairs.len()).collect();
        order.sort_unstable_by_key(|&i| (pairs[i], i));
        let mut keep = vec![false; pairs.len()];
        for (pos, &i) in order.iter().enumerate() {
            if pos == 0 || pairs[order[pos - 1]] != pairs[i] {
                keep[i] = true;
            }
        }
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if !keep[i] {
                continue;
            }
            let id = EdgeId(edges.len());
            edges.push((u, v));
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { edges, adjacency }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let pairs = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_normalized(n, pairs)
    }

    pub fn path(n: usize) -> Self {
        Self::from_normalized(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        let mut pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            pairs.push((0, n - 1));
        }
        Self::from_normalized(n, pairs)
    }

    /// `K_{1,t}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_normalized(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adjacency.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    /// Edges as `(u, v)` with `u < v`, in id order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn contains_edge_id(&self, e: EdgeId) -> bool {
        e.0 < self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge id)` pairs sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// δ(G); `None` for the graph without vertices.
    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).max()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        let list = &self.adjacency[a];
        list.binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edge_between(u, v).is_some()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.edge_between(u, v).ok_or(Error::NotAnEdge(u, v))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    /// `G[S]`. Vertices of the result follow the order of `subset`; edges keep
    /// the relative order of their ids in `self`.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<InducedSubgraph> {
        let mut old_to_new = vec![None; self.vertex_count()];
        let mut new_to_old = Vec::with_capacity(subset.len());
        for &v in subset {
            self.check_vertex(v)?;
            if old_to_new[v].is_none() {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let mut pairs = Vec::new();
        let mut edge_to_old = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if let (Some(a), Some(b)) = (old_to_new[u], old_to_new[v]) {
                pairs.push((a.min(b), a.max(b)));
                edge_to_old.push(EdgeId(i));
            }
        }
        let graph = Self::from_normalized(new_to_old.len(), pairs);
        Ok(InducedSubgraph {
            graph,
            old_to_new,
            new_to_old,
            edge_to_old,
        })
    }

    pub fn connected_components(&self) -> ComponentLabeling {
        let n = self.vertex_count();
        let mut component_id = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if component_id[s] != usize::MAX {
                continue;
            }
            component_id[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if component_id[w] == usize::MAX {
                        component_id[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        ComponentLabeling {
            component_id,
            component_count: count,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().component_count <= 1
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidCertificate(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidCertificate("not a permutation".into()));
            }
        }
        Graph::new(n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let pairs = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_normalized(shift + other.vertex_count(), pairs)
    }

    pub fn without_edge(&self, e: EdgeId) -> Graph {
        let pairs = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e.0)
            .map(|(_, &p)| p)
            .collect();
        Self::from_normalized(self.vertex_count(), pairs)
    }

    /// A third edge joining an endpoint of `a` to an endpoint of `b`, if any.
    pub fn common_edge(&self, a: EdgeId, b: EdgeId) -> Option<EdgeId> {
        if a == b {
            return None;
        }
        let (a0, a1) = self.endpoints(a);
        let (b0, b1) = self.endpoints(b);
        for x in [a0, a1] {
            for y in [b0, b1] {
                if x == y {
                    continue;
                }
                if let Some(e) = self.edge_between(x, y) {
                    if e != a && e != b {
                        return Some(e);
                    }
                }
            }
        }
        None
    }
}

pub struct InducedSubgraph {
    pub graph: Graph,
    /// Indexed by original vertex.
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
    /// Original id of each edge of `graph`.
    pub edge_to_old: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub component_id: Vec<usize>,
    pub component_count: usize,
}

impl ComponentLabeling {
    /// Vertex lists per component, each sorted.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (v, &c) in self.component_id.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// A duplicate-free, sorted set of edge ids of one graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    ids: Vec<EdgeId>,
}

impl EdgeSet {
    pub fn new<I>(g: &Graph, ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let mut ids: Vec<EdgeId> = ids.into_iter().collect();
        if let Some(bad) = ids.iter().find(|e| !g.contains_edge_id(**e)) {
            return Err(Error::UnknownEdge(bad.0));
        }
        ids.sort_unstable();
        ids.dedup();
        Ok(EdgeSet { ids })
    }

    pub fn from_pairs<I>(g: &Graph, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let ids = pairs
            .into_iter()
            .map(|(u, v)| g.edge_id(u, v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, ids)
    }

    pub(crate) fn from_unsorted(mut ids: Vec<EdgeId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        EdgeSet { ids }
    }

    pub fn ids(&self) -> &[EdgeId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.ids.binary_search(&e).is_ok()
    }

    /// Endpoint pairs `(u, v)`, `u < v`, sorted.
    pub fn pairs(&self, g: &Graph) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.ids.iter().map(|&e| g.endpoints(e)).collect();
        out.sort_unstable();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EopSolution {
    pub value: usize,
    pub witness: EdgeSet,
}

impl EopSolution {
    pub fn empty() -> Self {
        EopSolution {
            value: 0,
            witness: EdgeSet::default(),
        }
    }

    pub(crate) fn from_edges(ids: Vec<EdgeId>) -> Self {
        let witness = EdgeSet::from_unsorted(ids);
        EopSolution {
            value: witness.len(),
            witness,
        }
    }
}

/// Two packing edges together with the edge joining them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub first: EdgeId,
    pub second: EdgeId,
    pub common: EdgeId,
}

/// `Ok(None)` when `d` is an edge open packing, otherwise the first offending
/// triple in id order.
pub fn find_violation(g: &Graph, d: &[EdgeId]) -> Result<Option<Violation>> {
    if let Some(bad) = d.iter().find(|e| !g.contains_edge_id(**e)) {
        return Err(Error::UnknownEdge(bad.0));
    }
    let mut ids = d.to_vec();
    ids.sort_unstable();
    ids.dedup();
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if let Some(common) = g.common_edge(a, b) {
                return Ok(Some(Violation {
                    first: a,
                    second: b,
                    common,
                }));
            }
        }
    }
    Ok(None)
}

pub fn is_eop_set(g: &Graph, d: &[EdgeId]) -> Result<bool> {
    Ok(find_violation(g, d)?.is_none())
}

/// `⌊|E| / δ⌋`, or `None` when some vertex is isolated (or there are no vertices).
pub fn eop_upper_bound(g: &Graph) -> Option<usize> {
    match g.min_degree() {
        Some(delta) if delta > 0 => Some(g.edge_count() / delta),
        _ => None,
    }
}

/// Whether the subgraph induced by the endpoints of `d` is a disjoint union
/// of induced stars whose edges are exactly `d`.
pub fn induces_star_forest(g: &Graph, d: &EdgeSet) -> bool {
    let mut verts: Vec<usize> = d
        .ids()
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.endpoints(e);
            [u, v]
        })
        .collect();
    verts.sort_unstable();
    verts.dedup();
    let Ok(sub) = g.induced_subgraph(&verts) else {
        return false;
    };
    let h = &sub.graph;
    if h.edge_count() != d.len() {
        return false;
    }
    let labels = h.connected_components();
    for comp in labels.members() {
        let edges: usize = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        if edges + 1 != comp.len() {
            return false;
        }
        // a tree in which one vertex touches every edge
        if comp.len() > 2 && !comp.iter().any(|&v| h.degree(v) == edges) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(g: &Graph, pairs: &[(usize, usize)]) -> Vec<EdgeId> {
        pairs
            .iter()
            .map(|&(u, v)| g.edge_id(u, v).unwrap())
            .collect()
    }

    #[test]
    fn build_path_and_triangle() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.min_degree(), Some(2));
        assert_eq!(tri.max_degree(), Some(2));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn duplicates_are_dropped_and_ids_follow_input_order() {
        let g = Graph::new(3, [(1, 2), (0, 1), (2, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (0, 1)]);
        assert_eq!(g.edge_between(2, 1), Some(EdgeId(0)));
        let deg_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(deg_sum, 2 * g.edge_count());
    }

    #[test]
    fn induced_subgraphs() {
        let p4 = Graph::path(4);
        let sub = p4.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(sub.graph, Graph::path(3));
        assert_eq!(sub.old_to_new[0], None);
        let tri = Graph::complete(3);
        assert_eq!(tri.induced_subgraph(&[0, 2]).unwrap().graph.edge_count(), 1);
        assert_eq!(tri.induced_subgraph(&[]).unwrap().graph.vertex_count(), 0);
        assert!(tri.induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(Graph::path(4).connected_components().component_count, 1);
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.connected_components().component_count, 2);
        assert_eq!(Graph::empty(3).connected_components().component_count, 3);
    }

    #[test]
    fn triangle_pair_is_not_a_packing() {
        let g = Graph::complete(3);
        let d = ids(&g, &[(0, 1), (1, 2)]);
        let v = find_violation(&g, &d).unwrap().unwrap();
        assert_eq!(g.endpoints(v.common), (0, 2));
    }

    #[test]
    fn path_pair_is_a_packing() {
        let g = Graph::path(3);
        assert!(is_eop_set(&g, &ids(&g, &[(0, 1), (1, 2)])).unwrap());
        assert!(is_eop_set(&g, &[]).unwrap());
        assert!(is_eop_set(&Graph::complete(4), &[EdgeId(3)]).unwrap());
        assert!(matches!(
            is_eop_set(&g, &[EdgeId(9)]),
            Err(Error::UnknownEdge(9))
        ));
    }

    #[test]
    fn upper_bound() {
        assert_eq!(eop_upper_bound(&Graph::complete(3)), Some(1));
        assert_eq!(eop_upper_bound(&Graph::complete(4)), Some(2));
        assert_eq!(eop_upper_bound(&Graph::new(3, [(0, 1)]).unwrap()), None);
    }

    #[test]
    fn star_forest_shape() {
        let g = Graph::star(3);
        let all = EdgeSet::new(&g, g.edge_ids()).unwrap();
        assert!(induces_star_forest(&g, &all));
        let tri = Graph::complete(3);
        let two = EdgeSet::new(&tri, [EdgeId(0), EdgeId(1)]).unwrap();
        assert!(!induces_star_forest(&tri, &two));
        let p4 = Graph::path(4);
        let three = EdgeSet::new(&p4, p4.edge_ids()).unwrap();
        assert!(!induces_star_forest(&p4, &three));
    }
}
