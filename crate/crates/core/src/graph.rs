//! Simple undirected graphs on dense vertex ids, vertex subsets, the
//! components of `G - S` and the bipartite minor `<G, S>`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted ascending. Adjacency
/// lists are sorted ascending as well, which fixes the scan order of every
/// algorithm in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range ids, self-loops and parallel edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(Error::DuplicateEdge { u, v });
        }
        Ok(Self::from_canonical(n, list))
    }

    /// `edges` must already be canonical: `u < v < n`, sorted, duplicate-free.
    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_canonical(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::from_canonical(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::from_canonical(n, edges)
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Self::from_canonical(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::new(10, edges).expect("petersen edges are simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Builds a validated vertex subset of this graph.
    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, members: I) -> Result<VertexSet> {
        let set = VertexSet::from_iter(members);
        self.check(&set)?;
        Ok(set)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    pub(crate) fn check(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    /// Vertices outside `s` adjacent to some member of `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut inside = vec![false; self.n];
        for v in s.iter() {
            inside[v] = true;
        }
        let mut hit = vec![false; self.n];
        for v in s.iter() {
            for &w in &self.adj[v] {
                if !inside[w] {
                    hit[w] = true;
                }
            }
        }
        VertexSet((0..self.n).filter(|&v| hit[v]).collect())
    }

    /// Subgraph induced by `keep`, relabeled densely in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Result<Subgraph> {
        self.check(keep)?;
        let mut to_new = vec![None; self.n];
        for (i, v) in keep.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((to_new[u]?, to_new[v]?)))
            .collect();
        Ok(Subgraph {
            graph: Graph::from_canonical(keep.len(), edges),
            to_old: keep.as_slice().to_vec(),
            to_new,
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            edges: &'a [(usize, usize)],
        }
        Repr {
            n: self.n,
            edges: &self.edges,
        }
        .serialize(serializer)
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    /// Members of `0..n` not in `self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    /// Subset of `0..n` encoded by the low `n` bits of `mask`.
    pub fn from_mask(mask: u64, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| mask >> v & 1 == 1).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

/// A graph derived from a host graph by keeping a subset of its vertices.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// New id -> host id.
    pub to_old: Vec<usize>,
    /// Host id -> new id, `None` for removed vertices.
    pub to_new: Vec<Option<usize>>,
}

/// `G - S`, relabeled densely with the label maps recorded.
pub fn delete_vertices(g: &Graph, s: &VertexSet) -> Result<Subgraph> {
    g.check(s)?;
    g.induced(&s.complement(g.n()))
}

/// Connected components of `G - S`, split by parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSplit {
    pub odd_components: Vec<VertexSet>,
    pub even_components: Vec<VertexSet>,
    pub deleted: VertexSet,
}

impl ComponentSplit {
    /// Number of odd components, `od(S)`.
    pub fn od(&self) -> usize {
        self.odd_components.len()
    }

    /// All components ordered by their minimum vertex.
    pub fn components(&self) -> Vec<&VertexSet> {
        let mut all: Vec<_> = self
            .odd_components
            .iter()
            .chain(&self.even_components)
            .collect();
        all.sort_by_key(|c| c.first());
        all
    }
}

pub fn component_split(g: &Graph, s: &VertexSet) -> Result<ComponentSplit> {
    g.check(s)?;
    let mut seen = vec![false; g.n()];
    for v in s.iter() {
        seen[v] = true;
    }
    let mut odd = Vec::new();
    let mut even = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut members = Vec::new();
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let component: VertexSet = members.into_iter().collect();
        if component.len() % 2 == 1 {
            odd.push(component);
        } else {
            even.push(component);
        }
    }
    Ok(ComponentSplit {
        odd_components: odd,
        even_components: even,
        deleted: s.clone(),
    })
}

/// `<G, S>`: the vertices of `S` against one contracted node per odd
/// `S`-component. Right nodes are ordered by the minimum original vertex of
/// their component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteMinor {
    pub left: VertexSet,
    /// Right node `j` stands for the odd component `right[j]`.
    pub right: Vec<VertexSet>,
    /// `(left index, right index)` pairs, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteMinor {
    /// Builds a minor directly from its parts; used for hand-made instances.
    pub fn from_parts(
        left: VertexSet,
        right: Vec<VertexSet>,
        mut edges: Vec<(usize, usize)>,
    ) -> Self {
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges
            .iter()
            .all(|&(i, j)| i < left.len() && j < right.len()));
        BipartiteMinor { left, right, edges }
    }

    pub fn left_len(&self) -> usize {
        self.left.len()
    }

    pub fn right_len(&self) -> usize {
        self.right.len()
    }

    /// Right-node neighbors of each left index.
    pub fn left_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.left_len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
        }
        adj
    }

    /// The minor as an ordinary graph: left node `i` becomes vertex `i`,
    /// right node `j` becomes vertex `left_len + j`.
    pub fn as_graph(&self) -> Graph {
        let k = self.left_len();
        Graph::new(
            k + self.right_len(),
            self.edges.iter().map(|&(i, j)| (i, k + j)),
        )
        .expect("minor edges are simple")
    }

    /// The minor with right node `j` removed.
    pub fn without_right(&self, j: usize) -> BipartiteMinor {
        let mut right = self.right.clone();
        right.remove(j);
        let edges = self
            .edges
            .iter()
            .filter(|&&(_, r)| r != j)
            .map(|&(l, r)| (l, if r > j { r - 1 } else { r }))
            .collect();
        BipartiteMinor {
            left: self.left.clone(),
            right,
            edges,
        }
    }
}

pub fn bipartite_minor(g: &Graph, s: &VertexSet) -> Result<BipartiteMinor> {
    let split = component_split(g, s)?;
    minor_from_split(g, &split)
}

pub(crate) fn minor_from_split(g: &Graph, split: &ComponentSplit) -> Result<BipartiteMinor> {
    let s = &split.deleted;
    if s.len() + split.od() < 2 {
        return Err(Error::MinorUndefined {
            s: s.len(),
            od: split.od(),
        });
    }
    let mut owner = vec![None; g.n()];
    for (j, comp) in split.odd_components.iter().enumerate() {
        for v in comp.iter() {
            owner[v] = Some(j);
        }
    }
    let mut edges = Vec::new();
    for (i, u) in s.iter().enumerate() {
        for &w in g.neighbors(u) {
            if let Some(j) = owner[w] {
                edges.push((i, j));
            }
        }
    }
    // Odd components are already ordered by minimum vertex.
    Ok(BipartiteMinor::from_parts(
        s.clone(),
        split.odd_components.clone(),
        edges,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop { vertex: 1 }));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::new(4, [(2, 0), (3, 0), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(3), &[0]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn delete_center_of_path() {
        let sub = delete_vertices(&Graph::path(3), &set(&[1])).unwrap();
        assert_eq!(sub.graph, Graph::empty(2));
        assert_eq!(sub.to_old, vec![0, 2]);
        assert_eq!(sub.to_new, vec![Some(0), None, Some(1)]);
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = Graph::petersen();
        let sub = delete_vertices(&g, &VertexSet::new()).unwrap();
        assert_eq!(sub.graph, g);
        assert_eq!(sub.to_old, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn delete_two_from_k4() {
        let sub = delete_vertices(&Graph::complete(4), &set(&[0, 1])).unwrap();
        assert_eq!(sub.graph, Graph::complete(2));
        assert_eq!(sub.to_old, vec![2, 3]);
    }

    #[test]
    fn delete_out_of_range() {
        assert!(matches!(
            delete_vertices(&Graph::path(3), &set(&[3])),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn split_examples() {
        let p3 = component_split(&Graph::path(3), &set(&[1])).unwrap();
        assert_eq!(p3.odd_components, vec![set(&[0]), set(&[2])]);
        assert!(p3.even_components.is_empty());
        assert_eq!(p3.od(), 2);

        let k4 = component_split(&Graph::complete(4), &VertexSet::new()).unwrap();
        assert!(k4.odd_components.is_empty());
        assert_eq!(k4.even_components, vec![set(&[0, 1, 2, 3])]);

        let k1 = component_split(&Graph::empty(1), &VertexSet::new()).unwrap();
        assert_eq!(k1.odd_components, vec![set(&[0])]);
    }

    #[test]
    fn minor_examples() {
        let h = bipartite_minor(&Graph::path(3), &set(&[1])).unwrap();
        assert_eq!(h.left, set(&[1]));
        assert_eq!(h.right, vec![set(&[0]), set(&[2])]);
        assert_eq!(h.edges, vec![(0, 0), (0, 1)]);

        let h = bipartite_minor(&Graph::star(3), &set(&[0])).unwrap();
        assert_eq!(h.right_len(), 3);
        assert_eq!(h.edges, vec![(0, 0), (0, 1), (0, 2)]);

        assert_eq!(
            bipartite_minor(&Graph::complete(2), &VertexSet::new()),
            Err(Error::MinorUndefined { s: 0, od: 0 })
        );
    }

    #[test]
    fn minor_drops_even_components_and_inner_edges() {
        // S = {0, 1} adjacent; {2} odd; {3, 4} even.
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 3), (3, 4)]).unwrap();
        let h = bipartite_minor(&g, &set(&[0, 1])).unwrap();
        assert_eq!(h.right, vec![set(&[2])]);
        assert_eq!(h.edges, vec![(0, 0)]);
    }

    #[test]
    fn without_right_reindexes() {
        let h = bipartite_minor(&Graph::star(3), &set(&[0])).unwrap();
        let h1 = h.without_right(1);
        assert_eq!(h1.right, vec![set(&[1]), set(&[3])]);
        assert_eq!(h1.edges, vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn petersen_is_cubic() {
        let g = Graph::petersen();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }
}
