use std::collections::BinaryHeap;

use crate::graph::Graph;

/// A perfect elimination ordering via maximum cardinality search, or `None`
/// when the graph is not chordal.
pub fn compute_peo(g: &Graph) -> Option<Vec<usize>> {
    let order = mcs_elimination_order(g);
    is_peo(g, &order).then_some(order)
}

/// Reverse of the maximum cardinality search visiting order. Ties prefer the
/// lowest vertex id.
pub fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut heap: BinaryHeap<(usize, std::cmp::Reverse<usize>)> =
        (0..n).map(|v| (0, std::cmp::Reverse(v))).collect();
    let mut visit = Vec::with_capacity(n);
    while let Some((w, std::cmp::Reverse(v))) = heap.pop() {
        if done[v] || w != weight[v] {
            continue;
        }
        done[v] = true;
        visit.push(v);
        for u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
                heap.push((weight[u], std::cmp::Reverse(u)));
            }
        }
    }
    visit.reverse();
    visit
}

/// Each vertex's later neighbors form a clique.
pub fn is_peo(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return false;
        }
        position[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g
            .neighbors(v)
            .filter(|&w| position[w] > position[v])
            .collect();
        // the earliest later neighbor must see all the others
        let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}
