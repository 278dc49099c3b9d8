//! Deterministic graph generators.
//!
//! Random graphs draw from SplitMix64, fixed so that other implementations
//! can reproduce the same corpora bit for bit:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15          (wrapping)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9    (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB    (wrapping)
//! output z ^ (z >> 31)
//! ```
//!
//! The initial state is the seed. Edge slots `(u, v)`, `u < v`, are visited
//! in lexicographic order and each consumes one draw; the edge is kept when
//! `draw % denominator < numerator`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count for [`enumerate_labeled_graphs`].
pub const MAX_LABELED_VERTICES: usize = 6;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

fn slots(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// `G(n, p)` with `p = numerator / denominator`.
pub fn random_graph(n: usize, numerator: u64, denominator: u64, seed: u64) -> Result<Graph> {
    if denominator == 0 || numerator > denominator {
        return Err(Error::InvalidProbability {
            numerator,
            denominator,
        });
    }
    let mut rng = SplitMix64::new(seed);
    let edges: Vec<_> = slots(n)
        .filter(|_| rng.next_u64() % denominator < numerator)
        .collect();
    Graph::new(n, edges)
}

/// All `2^C(n,2)` labeled graphs on `n` vertices. Bit `i` of the mask selects
/// the `i`-th edge slot in lexicographic order; masks ascend.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Error::guard("vertex count", n, MAX_LABELED_VERTICES)?;
    let all: Vec<(usize, usize)> = slots(n).collect();
    Ok((0u64..1 << all.len()).map(move |mask| labeled_graph(n, &all, mask)))
}

/// Graph number `mask` in [`enumerate_labeled_graphs`] order.
pub fn labeled_graph_from_mask(n: usize, mask: u64) -> Graph {
    let all: Vec<(usize, usize)> = slots(n).collect();
    labeled_graph(n, &all, mask)
}

fn labeled_graph(n: usize, slots: &[(usize, usize)], mask: u64) -> Graph {
    let edges = slots
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).expect("slots are simple")
}

pub fn labeled_graph_count(n: usize) -> u64 {
    1 << (n * n.saturating_sub(1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_outputs() {
        // Reference values of SplitMix64 seeded with 0.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn extreme_probabilities() {
        for seed in [0, 1, 42, u64::MAX] {
            assert_eq!(random_graph(5, 0, 1, seed).unwrap(), Graph::empty(5));
            assert_eq!(random_graph(4, 1, 1, seed).unwrap(), Graph::complete(4));
        }
    }

    #[test]
    fn invalid_probability() {
        assert!(random_graph(3, 2, 1, 0).is_err());
        assert!(random_graph(3, 0, 0, 0).is_err());
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_labeled_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert!(enumerate_labeled_graphs(7).is_err());
        let total: u64 = (0..=6).map(labeled_graph_count).sum();
        assert_eq!(total, 33_868);
    }

    #[test]
    fn labeled_order() {
        let gs: Vec<_> = enumerate_labeled_graphs(3).unwrap().collect();
        assert_eq!(gs[0], Graph::empty(3));
        assert_eq!(gs[1].edges(), &[(0, 1)]);
        assert_eq!(gs[2].edges(), &[(0, 2)]);
        assert_eq!(gs[4].edges(), &[(1, 2)]);
        assert_eq!(gs[7], Graph::complete(3));
        assert_eq!(labeled_graph_from_mask(3, 5), gs[5]);
    }
}
