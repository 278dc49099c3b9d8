//! Maximum-cardinality matching in general graphs.
//!
//! The engine is Edmonds' blossom algorithm: for every exposed vertex in
//! ascending order it grows an alternating BFS tree, contracting odd cycles
//! (blossoms) by redirecting their vertices to a common base, until it finds
//! an augmenting path or exhausts the tree. Neighbors are scanned in
//! ascending order and the first augmenting path found is used, so the
//! result is a fixed function of the graph.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{delete_vertices, BipartiteMinor, Graph, VertexSet};

/// A set of vertex-disjoint edges, stored as a mate table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<Option<usize>>,
    size: usize,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
            size: 0,
        }
    }

    /// Builds a matching of `g` from explicit pairs, checking that every
    /// pair is an edge and no vertex is used twice.
    pub fn from_pairs<I>(g: &Graph, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut m = Matching::empty(g.n());
        for (u, v) in pairs {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidMatching(format!("{u}-{v} is not an edge")));
            }
            if m.mate[u].is_some() || m.mate[v].is_some() {
                return Err(Error::InvalidMatching(format!(
                    "edge {u}-{v} shares a vertex with another matched edge"
                )));
            }
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
            m.size += 1;
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn n(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn is_exposed(&self, v: usize) -> bool {
        self.mate[v].is_none()
    }

    /// Matched edges `(u, v)` with `u < v`, ascending.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// Checks the mate table against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.mate.len() != g.n() {
            return Err(Error::InvalidMatching(format!(
                "mate table has {} entries for a graph on {} vertices",
                self.mate.len(),
                g.n()
            )));
        }
        let mut matched = 0;
        for (u, m) in self.mate.iter().enumerate() {
            if let Some(v) = *m {
                if self.mate.get(v).copied().flatten() != Some(u) {
                    return Err(Error::InvalidMatching(format!(
                        "mate of {u} is not symmetric"
                    )));
                }
                if !g.has_edge(u, v) {
                    return Err(Error::InvalidMatching(format!("{u}-{v} is not an edge")));
                }
                matched += 1;
            }
        }
        if matched != 2 * self.size {
            return Err(Error::InvalidMatching(
                "size disagrees with mate table".into(),
            ));
        }
        Ok(())
    }
}

/// Computes a maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    BlossomSearch::new(g).run()
}

/// Maximum matching of a bipartite minor, computed by the general engine on
/// [`BipartiteMinor::as_graph`]. Left node `i` is vertex `i`, right node `j`
/// is vertex `left_len + j`.
pub fn bipartite_maximum_matching(h: &BipartiteMinor) -> Matching {
    maximum_matching(&h.as_graph())
}

/// Anything able to report the matching number of a graph.
///
/// The predicates built on top of it are shared between the production
/// engine and the brute-force oracle, so the two can be cross-run.
pub trait MatchingNumber {
    fn matching_number(&self, g: &Graph) -> usize;

    fn has_perfect_matching(&self, g: &Graph) -> bool {
        g.n().is_multiple_of(2) && 2 * self.matching_number(g) == g.n()
    }

    fn is_factor_critical(&self, g: &Graph) -> bool {
        if g.n().is_multiple_of(2) {
            return false;
        }
        (0..g.n()).all(|v| {
            let rest = delete_vertices(g, &VertexSet::from_iter([v]))
                .expect("vertex in range")
                .graph;
            self.has_perfect_matching(&rest)
        })
    }
}

/// The blossom engine as a [`MatchingNumber`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Blossom;

impl MatchingNumber for Blossom {
    fn matching_number(&self, g: &Graph) -> usize {
        maximum_matching(g).size()
    }
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    Blossom.has_perfect_matching(g)
}

/// True iff `G - v` has a perfect matching for every vertex `v`.
pub fn is_factor_critical(g: &Graph) -> bool {
    Blossom.is_factor_critical(g)
}

pub fn exposed_vertices(g: &Graph, m: &Matching) -> Result<VertexSet> {
    m.validate(g)?;
    Ok((0..g.n()).filter(|&v| m.is_exposed(v)).collect())
}

const NONE: usize = usize::MAX;

struct BlossomSearch<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    /// Tree parent of each outer-labelled vertex's predecessor edge.
    parent: Vec<usize>,
    /// Base of the blossom each vertex currently belongs to.
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> BlossomSearch<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        BlossomSearch {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Matching {
        let n = self.g.n();
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(end) = self.find_augmenting_path(root) {
                self.augment(end);
            }
        }
        let mate: Vec<Option<usize>> = self
            .mate
            .iter()
            .map(|&m| (m != NONE).then_some(m))
            .collect();
        let size = mate.iter().filter(|m| m.is_some()).count() / 2;
        Matching { mate, size }
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn lowest_common_base(&self, a: usize, b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        let mut a = a;
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_blossom_path(&mut self, mut v: usize, blossom_base: usize, mut child: usize) {
        while self.base[v] != blossom_base {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn contract(&mut self, v: usize, w: usize) {
        let b = self.lowest_common_base(v, w);
        self.in_blossom.iter_mut().for_each(|x| *x = false);
        self.mark_blossom_path(v, b, w);
        self.mark_blossom_path(w, b, v);
        for i in 0..self.g.n() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.in_tree[i] {
                    self.in_tree[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.in_tree.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        debug_assert!(root < n);

        while let Some(v) = self.queue.pop_front() {
            for &w in self.g.neighbors(v) {
                if self.base[v] == self.base[w] || self.mate[v] == w {
                    continue;
                }
                let w_outer =
                    w == root || (self.mate[w] != NONE && self.parent[self.mate[w]] != NONE);
                if w_outer {
                    self.contract(v, w);
                } else if self.parent[w] == NONE {
                    self.parent[w] = v;
                    if self.mate[w] == NONE {
                        return Some(w);
                    }
                    let m = self.mate[w];
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}
