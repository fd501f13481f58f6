//! Seeded instance generators.
//!
//! All randomness comes from SplitMix64 seeded with the raw 64-bit seed
//! (state = seed). Derived values use only the raw output `x`:
//!
//! * unit float: `(x >> 11) as f64 * 2^-53`, uniform in `[0, 1)`;
//! * integer below `n`: `(x as u128 * n as u128) >> 64`.
//!
//! so a corpus can be reproduced outside Rust from the seed alone.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters of one generated instance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum GenSpec {
    ProperInterval {
        n: usize,
        density: f64,
        seed: u64,
    },
    Block {
        n_blocks: usize,
        max_block_size: usize,
        seed: u64,
    },
    Split {
        k_size: usize,
        s_size: usize,
        p: f64,
        seed: u64,
    },
    Tree {
        n: usize,
        seed: u64,
    },
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            GenSpec::ProperInterval { n, density, seed } => gen_proper_interval(n, density, seed),
            GenSpec::Block {
                n_blocks,
                max_block_size,
                seed,
            } => gen_block(n_blocks, max_block_size, seed),
            GenSpec::Split {
                k_size,
                s_size,
                p,
                seed,
            } => gen_split(k_size, s_size, p, seed),
            GenSpec::Tree { n, seed } => gen_tree(n, seed),
        }
    }
}

/// Thin wrapper fixing the float and range derivations.
#[derive(Clone, Debug)]
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Fisher–Yates shuffle of `0..n`, swapping `i` with `below(i + 1)` for
    /// `i` from `n - 1` down to 1.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.below(i + 1);
            perm.swap(i, j);
        }
        perm
    }
}

fn check_unit(name: &str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must lie in [0, 1], got {x}"
        )))
    }
}

/// Unit intervals whose consecutive left endpoints differ by
/// `unit() * (1 - density)`; overlapping intervals are adjacent. Gaps stay
/// below 1, so the graph is connected. Vertices are shuffled afterwards.
pub fn gen_proper_interval(n: usize, density: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    check_unit("density", density)?;
    let mut rng = Rng::new(seed);
    let mut left = Vec::with_capacity(n);
    let mut x = 0.0f64;
    for i in 0..n {
        if i > 0 {
            x += rng.unit() * (1.0 - density);
        }
        left.push(x);
    }
    let perm = rng.permutation(n);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if left[j] - left[i] > 1.0 {
                break;
            }
            pairs.push((perm[i], perm[j]));
        }
    }
    Graph::new(n, pairs)
}

/// Grows a tree of cliques: each new block has `2..=max_block_size`
/// vertices and is glued at a uniformly chosen existing vertex.
pub fn gen_block(n_blocks: usize, max_block_size: usize, seed: u64) -> Result<Graph> {
    if n_blocks == 0 {
        return Err(Error::InvalidParameter(
            "n_blocks must be at least 1".into(),
        ));
    }
    if max_block_size < 2 {
        return Err(Error::InvalidParameter(
            "max_block_size must be at least 2".into(),
        ));
    }
    let mut rng = Rng::new(seed);
    let mut n = 1;
    let mut pairs = Vec::new();
    for _ in 0..n_blocks {
        let size = 2 + rng.below(max_block_size - 1);
        let attach = rng.below(n);
        let members: Vec<usize> = std::iter::once(attach).chain(n..n + size - 1).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                pairs.push((a, b));
            }
        }
        n += size - 1;
    }
    let perm = rng.permutation(n);
    Graph::new(n, pairs.into_iter().map(|(a, b)| (perm[a], perm[b])))
}

/// `K = 0..k_size` is a clique, `S = k_size..k_size + s_size` independent;
/// each `K`–`S` pair, in clique-major order, is an edge with probability `p`.
pub fn gen_split(k_size: usize, s_size: usize, p: f64, seed: u64) -> Result<Graph> {
    check_unit("p", p)?;
    let mut rng = Rng::new(seed);
    let mut pairs = Vec::new();
    for x in 0..k_size {
        for y in x + 1..k_size {
            pairs.push((x, y));
        }
    }
    for x in 0..k_size {
        for s in k_size..k_size + s_size {
            if rng.unit() < p {
                pairs.push((x, s));
            }
        }
    }
    Graph::new(k_size + s_size, pairs)
}

/// Random tree on `n` vertices: `gen_block(n - 1, 2, seed)`.
pub fn gen_tree(n: usize, seed: u64) -> Result<Graph> {
    match n {
        0 => Err(Error::InvalidParameter("n must be at least 1".into())),
        1 => Ok(Graph::empty(1)),
        _ => gen_block(n - 1, 2, seed),
    }
}
