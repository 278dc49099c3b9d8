//! Sweeps over all `2^n` vertex subsets.

use std::collections::HashMap;

use crate::decomposition::DeficiencyProfile;
use crate::error::{Error, Result};
use crate::graph::{BipartiteMinor, Graph, VertexSet};

use super::brute::MaskGraph;

/// Largest vertex count accepted by the subset sweeps.
pub const MAX_SWEEP_VERTICES: usize = 16;

/// Which quantity breaks ties among maximum-deficiency sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tiebreak {
    /// Vertices in components (any parity) without a perfect matching.
    NoPerfectMatchingVertices,
    /// Vertices in odd components.
    OddComponentVertices,
}

/// Subsets attaining the maximum deficiency and, among those, the minimum
/// tiebreak quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    /// Ascending in the lexicographic order of their member lists; never empty.
    pub candidates: Vec<VertexSet>,
    pub max_df: i64,
    pub min_tiebreak: usize,
    pub tiebreak: Tiebreak,
}

impl ExtremalResult {
    pub fn unique(&self) -> bool {
        self.candidates.len() == 1
    }
}

#[derive(Clone, Copy, Debug)]
struct SubsetStats {
    mask: u64,
    od: usize,
    s: usize,
    no_pm: usize,
    odd_vertices: usize,
}

impl SubsetStats {
    fn df(&self) -> i64 {
        self.od as i64 - self.s as i64
    }
}

fn sweep(g: &Graph) -> Result<Vec<SubsetStats>> {
    Error::guard("vertex count", g.n(), MAX_SWEEP_VERTICES)?;
    let mg = MaskGraph::new(g);
    let full = mg.full();
    let mut memo = HashMap::new();
    let mut out = Vec::with_capacity(1 << g.n());
    for mask in 0..=full {
        let mut stats = SubsetStats {
            mask,
            od: 0,
            s: mask.count_ones() as usize,
            no_pm: 0,
            odd_vertices: 0,
        };
        for comp in mg.components(full & !mask) {
            let size = comp.count_ones() as usize;
            if size % 2 == 1 {
                stats.od += 1;
                stats.odd_vertices += size;
                stats.no_pm += size;
            } else if !mg.has_pm(comp, &mut memo) {
                stats.no_pm += size;
            }
        }
        out.push(stats);
    }
    Ok(out)
}

/// Deficiency profiles of every subset, in bitmask order.
pub fn all_profiles(g: &Graph) -> Result<Vec<DeficiencyProfile>> {
    Ok(sweep(g)?
        .into_iter()
        .map(|st| DeficiencyProfile {
            set: VertexSet::from_mask(st.mask, g.n()),
            od: st.od,
            s: st.s,
            df: st.df(),
            no_pm_vertices: st.no_pm,
        })
        .collect())
}

fn select(g: &Graph, stats: &[SubsetStats], tiebreak: Tiebreak) -> ExtremalResult {
    let key = |st: &SubsetStats| match tiebreak {
        Tiebreak::NoPerfectMatchingVertices => st.no_pm,
        Tiebreak::OddComponentVertices => st.odd_vertices,
    };
    let max_df = stats
        .iter()
        .map(SubsetStats::df)
        .max()
        .expect("at least the empty set");
    let best = stats.iter().filter(|st| st.df() == max_df);
    let min_tiebreak = best.clone().map(key).min().expect("nonempty");
    let mut candidates: Vec<VertexSet> = best
        .filter(|st| key(st) == min_tiebreak)
        .map(|st| VertexSet::from_mask(st.mask, g.n()))
        .collect();
    candidates.sort();
    ExtremalResult {
        candidates,
        max_df,
        min_tiebreak,
        tiebreak,
    }
}

/// Among maximum-deficiency subsets, those minimizing the number of vertices
/// in components without a perfect matching.
pub fn extremal_set(g: &Graph) -> Result<ExtremalResult> {
    Ok(select(g, &sweep(g)?, Tiebreak::NoPerfectMatchingVertices))
}

/// Among Tutte-Berge sets (maximum deficiency), those minimizing the number
/// of vertices in odd components.
pub fn remark3_set(g: &Graph) -> Result<ExtremalResult> {
    Ok(select(g, &sweep(g)?, Tiebreak::OddComponentVertices))
}

/// Perfect matching exists iff no subset has positive deficiency.
pub fn tutte_check(g: &Graph) -> Result<bool> {
    Ok(sweep(g)?.iter().map(SubsetStats::df).max().unwrap_or(0) <= 0)
}

/// Maximum deficiency over all subsets.
pub fn max_deficiency(g: &Graph) -> Result<i64> {
    Ok(sweep(g)?.iter().map(SubsetStats::df).max().unwrap_or(0))
}

/// Hall's condition with surplus `k` by direct enumeration of every
/// non-empty left subset.
pub fn hall_by_enumeration(h: &BipartiteMinor, surplus: usize) -> Result<bool> {
    Error::guard("left side", h.left_len(), MAX_SWEEP_VERTICES)?;
    Error::guard("right side", h.right_len(), 64)?;
    let nbr: Vec<u64> = h
        .left_adjacency()
        .iter()
        .map(|r| r.iter().fold(0u64, |m, &j| m | 1 << j))
        .collect();
    let k = h.left_len();
    Ok((1u64..1 << k).all(|t| {
        let reach = (0..k)
            .filter(|&i| t >> i & 1 == 1)
            .fold(0u64, |m, i| m | nbr[i]);
        reach.count_ones() >= t.count_ones() + surplus as u32
    }))
}
