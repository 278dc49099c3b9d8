use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::Matching;

/// Largest edge count accepted by [`enumerate_matchings`].
pub const MAX_ENUMERATION_EDGES: usize = 24;

/// Every matching of `g` exactly once, starting with the empty matching.
///
/// Matchings are visited in lexicographic order of their sorted edge-index
/// lists, edges indexed by their position in `g.edges()`.
pub fn enumerate_matchings(g: &Graph) -> Result<MatchingIter<'_>> {
    Error::guard("edge count", g.edge_count(), MAX_ENUMERATION_EDGES)?;
    Ok(MatchingIter {
        g,
        chosen: Vec::new(),
        used: vec![false; g.n()],
        started: false,
        done: false,
    })
}

/// Maximum matching size by enumeration.
pub fn brute_nu(g: &Graph) -> Result<usize> {
    Ok(enumerate_matchings(g)?.map(|m| m.size()).max().unwrap_or(0))
}

pub struct MatchingIter<'g> {
    g: &'g Graph,
    chosen: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl MatchingIter<'_> {
    fn first_compatible(&self, from: usize) -> Option<usize> {
        (from..self.g.edge_count()).find(|&e| {
            let (u, v) = self.g.edges()[e];
            !self.used[u] && !self.used[v]
        })
    }

    fn set(&mut self, e: usize, on: bool) {
        let (u, v) = self.g.edges()[e];
        self.used[u] = on;
        self.used[v] = on;
    }

    fn current(&self) -> Matching {
        Matching::from_pairs(self.g, self.chosen.iter().map(|&e| self.g.edges()[e]))
            .expect("enumerated edges are disjoint")
    }
}

impl Iterator for MatchingIter<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        let from = self.chosen.last().map_or(0, |&e| e + 1);
        if let Some(e) = self.first_compatible(from) {
            self.chosen.push(e);
            self.set(e, true);
            return Some(self.current());
        }
        while let Some(last) = self.chosen.pop() {
            self.set(last, false);
            if let Some(e) = self.first_compatible(last + 1) {
                self.chosen.push(e);
                self.set(e, true);
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}
