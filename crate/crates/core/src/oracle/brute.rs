//! Bitmask graphs and exhaustive matching search, independent of the
//! blossom engine and of the component code in `graph`.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::matching::MatchingNumber;

/// Adjacency as bitmasks; at most 64 vertices.
#[derive(Clone, Debug)]
pub(crate) struct MaskGraph {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Self {
        assert!(g.n() <= 64, "bitmask oracle supports at most 64 vertices");
        let mut adj = vec![0u64; g.n()];
        for &(u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        MaskGraph { n: g.n(), adj }
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Connected components of the subgraph induced by `mask`, by minimum vertex.
    pub fn components(&self, mut mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while mask != 0 {
            let mut comp = mask & mask.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & mask & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            out.push(comp);
            mask &= !comp;
        }
        out
    }

    /// Perfect matching of the subgraph induced by `mask`, by branching on
    /// the partner of the lowest vertex.
    pub fn has_pm(&self, mask: u64, memo: &mut HashMap<u64, bool>) -> bool {
        if mask == 0 {
            return true;
        }
        if mask.count_ones() % 2 == 1 {
            return false;
        }
        if let Some(&hit) = memo.get(&mask) {
            return hit;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut partners = self.adj[v] & rest;
        let mut found = false;
        while partners != 0 && !found {
            let w = partners.trailing_zeros();
            partners &= partners - 1;
            found = self.has_pm(rest & !(1 << w), memo);
        }
        memo.insert(mask, found);
        found
    }

    /// Matching number of the subgraph induced by `mask`: the lowest vertex
    /// is either left exposed or matched to one of its neighbors.
    pub fn nu(&self, mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&hit) = memo.get(&mask) {
            return hit;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let cap = mask.count_ones() as usize / 2;
        let mut best = 0;
        let mut partners = self.adj[v] & rest;
        while partners != 0 && best < cap {
            let w = partners.trailing_zeros();
            partners &= partners - 1;
            best = best.max(1 + self.nu(rest & !(1 << w), memo));
        }
        if best < cap {
            best = best.max(self.nu(rest, memo));
        }
        memo.insert(mask, best);
        best
    }

    pub fn is_factor_critical(&self, mask: u64, memo: &mut HashMap<u64, bool>) -> bool {
        if mask.count_ones().is_multiple_of(2) {
            return false;
        }
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if !self.has_pm(mask & !(1 << v), memo) {
                return false;
            }
        }
        true
    }
}

/// Exhaustive-search matching number; usable wherever the production
/// engine is, on graphs with at most 64 vertices (practically far fewer).
#[derive(Clone, Copy, Debug, Default)]
pub struct BruteForce;

impl MatchingNumber for BruteForce {
    fn matching_number(&self, g: &Graph) -> usize {
        let mg = MaskGraph::new(g);
        mg.nu(mg.full(), &mut HashMap::new())
    }

    fn has_perfect_matching(&self, g: &Graph) -> bool {
        let mg = MaskGraph::new(g);
        mg.has_pm(mg.full(), &mut HashMap::new())
    }

    fn is_factor_critical(&self, g: &Graph) -> bool {
        let mg = MaskGraph::new(g);
        mg.is_factor_critical(mg.full(), &mut HashMap::new())
    }
}
