use eop_core::generators::{gen_block, gen_proper_interval, gen_split, gen_tree};
use eop_core::graph::{induces_star_forest, is_eop_set, Graph};
use eop_core::oracle::{brute_force_eop, SearchBudget};
use eop_core::solver::{solve_block_graph, solve_proper_interval, solve_split_graph};
use eop_core::EopSolution;

fn oracle(g: &Graph) -> usize {
    brute_force_eop(g, SearchBudget::with_max_edges(128))
        .unwrap()
        .value
}

fn check(g: &Graph, s: &EopSolution, label: &str) {
    assert!(
        is_eop_set(g, s.witness.ids()).unwrap(),
        "{label}: witness is not a packing"
    );
    assert_eq!(s.witness.len(), s.value, "{label}: witness size");
    assert!(
        induces_star_forest(g, &s.witness),
        "{label}: witness is not a star forest"
    );
    assert_eq!(
        s.value,
        oracle(g),
        "{label}: value differs from oracle on {:?}",
        g.edges()
    );
}

#[test]
fn proper_interval_matches_oracle() {
    for seed in 0..150 {
        let n = 1 + (seed as usize % 12);
        let g = gen_proper_interval(n, (seed % 7) as f64 / 7.0, seed).unwrap();
        check(
            &g,
            &solve_proper_interval(&g).unwrap(),
            &format!("pig seed {seed}"),
        );
    }
}

#[test]
fn block_graphs_match_oracle() {
    for seed in 0..150 {
        let g = gen_block(1 + seed as usize % 6, 2 + seed as usize % 3, seed).unwrap();
        check(
            &g,
            &solve_block_graph(&g).unwrap(),
            &format!("block seed {seed}"),
        );
    }
}

#[test]
fn trees_match_oracle() {
    for seed in 0..150 {
        let g = gen_tree(1 + seed as usize % 14, seed).unwrap();
        check(
            &g,
            &solve_block_graph(&g).unwrap(),
            &format!("tree seed {seed}"),
        );
    }
}

#[test]
fn split_graphs_match_oracle() {
    for seed in 0..150 {
        let k = seed as usize % 7;
        let s = (seed as usize / 7) % 9;
        let g = gen_split(k, s, (seed % 5) as f64 / 4.0, seed).unwrap();
        check(
            &g,
            &solve_split_graph(&g).unwrap(),
            &format!("split seed {seed}"),
        );
    }
}
