//! Deficiency bookkeeping, the Gallai-Edmonds decomposition and the
//! predicates that characterize a Gallai-Edmonds set.
//!
//! A set `S` is Gallai-Edmonds when
//! (a) every even `S`-component has a perfect matching,
//! (b) every odd `S`-component is factor-critical, and
//! (c) a non-empty `S` satisfies Hall's condition with surplus one in the
//!     bipartite minor `<G, S>`.

use crate::error::Result;
use crate::graph::{
    component_split, minor_from_split, BipartiteMinor, ComponentSplit, Graph, VertexSet,
};
use crate::matching::{maximum_matching, Blossom, MatchingNumber};
use crate::report::{VerificationReport, Witness};

/// Deficiency data of a vertex set `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeficiencyProfile {
    pub set: VertexSet,
    /// Number of odd `S`-components.
    pub od: usize,
    /// `|S|`.
    pub s: usize,
    /// `od - s`; negative when `S` is large relative to its odd components.
    pub df: i64,
    /// Total number of vertices in `S`-components (either parity) that have
    /// no perfect matching.
    pub no_pm_vertices: usize,
}

pub fn deficiency_profile(g: &Graph, s: &VertexSet) -> Result<DeficiencyProfile> {
    deficiency_profile_with(g, s, &Blossom)
}

pub fn deficiency_profile_with(
    g: &Graph,
    s: &VertexSet,
    engine: &impl MatchingNumber,
) -> Result<DeficiencyProfile> {
    let split = component_split(g, s)?;
    let mut no_pm_vertices = 0;
    for comp in split.components() {
        if comp.len() % 2 == 1 || !engine.has_perfect_matching(&g.induced(comp)?.graph) {
            no_pm_vertices += comp.len();
        }
    }
    Ok(DeficiencyProfile {
        set: s.clone(),
        od: split.od(),
        s: s.len(),
        df: split.od() as i64 - s.len() as i64,
        no_pm_vertices,
    })
}

/// The partition `V = D ⊎ A ⊎ C` together with the components of `G - A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub n: usize,
    /// Vertices exposed by at least one maximum matching.
    pub d: VertexSet,
    /// Neighborhood of `D`; the Gallai-Edmonds set.
    pub a: VertexSet,
    /// Everything else.
    pub c: VertexSet,
    pub split: ComponentSplit,
    pub nu: usize,
    /// `n - 2ν`, the maximum deficiency.
    pub deficiency: usize,
}

/// `{ v : ν(G - v) = ν(G) }`.
pub fn compute_d(g: &Graph) -> VertexSet {
    compute_d_with(g, &Blossom)
}

pub fn compute_d_with(g: &Graph, engine: &impl MatchingNumber) -> VertexSet {
    let nu = engine.matching_number(g);
    (0..g.n())
        .filter(|&v| {
            let rest = crate::graph::delete_vertices(g, &VertexSet::from_iter([v]))
                .expect("vertex in range");
            engine.matching_number(&rest.graph) == nu
        })
        .collect()
}

/// Computes `(D, A, C)`.
///
/// # Panics
///
/// If `D` differs from the union of the odd `A`-components, which can only
/// happen when the matching engine is wrong.
pub fn gallai_edmonds(g: &Graph) -> Decomposition {
    let nu = maximum_matching(g).size();
    let d = compute_d(g);
    let a = g.neighborhood(&d);
    let c = d.union(&a).complement(g.n());
    let split = component_split(g, &a).expect("neighborhood lies inside the graph");
    let odd_union: VertexSet = split.odd_components.iter().flat_map(|c| c.iter()).collect();
    assert_eq!(
        odd_union, d,
        "engine bug: D differs from the union of odd A-components on {g:?}"
    );
    Decomposition {
        n: g.n(),
        d,
        a,
        c,
        split,
        nu,
        deficiency: g.n() - 2 * nu,
    }
}

impl Decomposition {
    /// Re-checks the structural invariants of `self` against `g` with the
    /// production engine: partition, `A = N(D)`, the component unions,
    /// `df(A) = n - 2ν` and conditions (a)(b)(c) for `A`.
    pub fn check_invariants(&self, g: &Graph) -> VerificationReport {
        let mut r = VerificationReport::new();
        let n = g.n();
        let union = self.d.union(&self.a).union(&self.c);
        let sizes = self.d.len() + self.a.len() + self.c.len();
        r.check(
            "D, A, C partition V",
            union == g.all_vertices() && sizes == n,
            || Witness::new("D, A, C overlap or miss a vertex").with_graph(g),
        );
        r.check("A = N(D)", g.neighborhood(&self.d) == self.a, || {
            Witness::new("A differs from the neighborhood of D")
                .with_graph(g)
                .with_subset(&self.a)
        });
        let odd: VertexSet = self
            .split
            .odd_components
            .iter()
            .flat_map(|c| c.iter())
            .collect();
        let even: VertexSet = self
            .split
            .even_components
            .iter()
            .flat_map(|c| c.iter())
            .collect();
        r.check("D = union of odd A-components", odd == self.d, || {
            Witness::new("D differs from the odd A-components")
                .with_graph(g)
                .with_subset(&odd)
        });
        r.check("C = union of even A-components", even == self.c, || {
            Witness::new("C differs from the even A-components")
                .with_graph(g)
                .with_subset(&even)
        });
        let df = self.split.od() as i64 - self.a.len() as i64;
        let matching = maximum_matching(g);
        r.check(
            "df(A) = n - 2nu",
            df == self.deficiency as i64
                && self.nu == matching.size()
                && self.deficiency + 2 * self.nu == n,
            || {
                Witness::new(format!("df(A) = {df}, deficiency = {}", self.deficiency))
                    .with_graph(g)
            },
        );
        r.check(
            "maximum matching is valid",
            matching.validate(g).is_ok(),
            || {
                Witness::new("engine produced an invalid matching")
                    .with_graph(g)
                    .with_matching(matching.pairs())
            },
        );
        match verify_ge_conditions(g, &self.a) {
            Ok(ge) => r.absorb("A: ", ge),
            Err(e) => {
                r.check("A: conditions", false, || {
                    Witness::new(e.to_string()).with_graph(g)
                });
            }
        }
        if let Some(w) = r.witness.as_mut() {
            if w.graph.is_none() {
                w.graph = Some(g.clone());
            }
        }
        r
    }
}

/// `df(S) = n - 2ν(G)`.
pub fn is_tutte_berge(g: &Graph, s: &VertexSet) -> Result<bool> {
    let split = component_split(g, s)?;
    let df = split.od() as i64 - s.len() as i64;
    Ok(df == (g.n() - 2 * maximum_matching(g).size()) as i64)
}

/// Checks `n - 2ν(G) = max_df`, with `max_df` the maximum deficiency over
/// all subsets as computed elsewhere.
pub fn tutte_berge_formula_check(g: &Graph, max_df: i64) -> bool {
    (g.n() - 2 * maximum_matching(g).size()) as i64 == max_df
}

/// Hall surplus demanded of the left side of a bipartite minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surplus {
    Zero,
    One,
}

impl Surplus {
    pub fn value(self) -> usize {
        match self {
            Surplus::Zero => 0,
            Surplus::One => 1,
        }
    }
}

pub fn hall_condition(h: &BipartiteMinor, surplus: Surplus) -> bool {
    hall_condition_with(h, surplus, &Blossom)
}

/// Hall's condition on the left side of `h`.
///
/// Surplus one is checked as: no isolated left node, and the left side stays
/// coverable after deleting any single right node. A violating `T` with
/// `|N(T)| <= |T|` either has `N(T)` empty (an isolated node) or loses a
/// neighbor when some `y ∈ N(T)` is deleted, breaking plain Hall in `h - y`.
/// Conversely deleting one right node shrinks each `|N(T)|` by at most one.
pub fn hall_condition_with(
    h: &BipartiteMinor,
    surplus: Surplus,
    engine: &impl MatchingNumber,
) -> bool {
    hall_violation_with(h, surplus, engine).is_none()
}

/// Why Hall's condition with surplus fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallViolation {
    /// Left side cannot be covered.
    NotCoverable,
    /// Left node (by index) has no neighbor.
    IsolatedLeft(usize),
    /// Left side cannot be covered once this right node is removed.
    NotCoverableWithout(usize),
}

fn covers_left(h: &BipartiteMinor, engine: &impl MatchingNumber) -> bool {
    engine.matching_number(&h.as_graph()) == h.left_len()
}

pub fn hall_violation_with(
    h: &BipartiteMinor,
    surplus: Surplus,
    engine: &impl MatchingNumber,
) -> Option<HallViolation> {
    match surplus {
        Surplus::Zero => (!covers_left(h, engine)).then_some(HallViolation::NotCoverable),
        Surplus::One => {
            if h.left_len() == 0 {
                return None;
            }
            if let Some(i) = h.left_adjacency().iter().position(Vec::is_empty) {
                return Some(HallViolation::IsolatedLeft(i));
            }
            (0..h.right_len())
                .find(|&j| !covers_left(&h.without_right(j), engine))
                .map(HallViolation::NotCoverableWithout)
        }
    }
}

pub const CLAUSE_A: &str = "(a) even components have perfect matchings";
pub const CLAUSE_B: &str = "(b) odd components are factor-critical";
pub const CLAUSE_C: &str = "(c) Hall surplus one in <G,S>";

/// Checks conditions (a), (b), (c) for `S`.
pub fn verify_ge_conditions(g: &Graph, s: &VertexSet) -> Result<VerificationReport> {
    verify_ge_conditions_with(g, s, &Blossom)
}

pub fn verify_ge_conditions_with(
    g: &Graph,
    s: &VertexSet,
    engine: &impl MatchingNumber,
) -> Result<VerificationReport> {
    let split = component_split(g, s)?;
    let mut report = VerificationReport::new();

    let mut bad_even = None;
    for comp in &split.even_components {
        if !engine.has_perfect_matching(&g.induced(comp)?.graph) {
            bad_even = Some(comp);
            break;
        }
    }
    report.check(CLAUSE_A, bad_even.is_none(), || {
        Witness::new("even component without a perfect matching").with_subset(bad_even.unwrap())
    });

    let mut bad_odd = None;
    for comp in &split.odd_components {
        if !engine.is_factor_critical(&g.induced(comp)?.graph) {
            bad_odd = Some(comp);
            break;
        }
    }
    report.check(CLAUSE_B, bad_odd.is_none(), || {
        Witness::new("odd component that is not factor-critical").with_subset(bad_odd.unwrap())
    });

    if s.is_empty() {
        report.check(CLAUSE_C, true, || unreachable!());
    } else {
        match minor_from_split(g, &split) {
            Err(_) => {
                report.check(CLAUSE_C, false, || {
                    Witness::new("minor undefined: S is a single vertex with no odd components")
                        .with_subset(s)
                });
            }
            Ok(h) => {
                let violation = hall_violation_with(&h, Surplus::One, engine);
                report.check(CLAUSE_C, violation.is_none(), || match violation.unwrap() {
                    HallViolation::IsolatedLeft(i) => Witness::new(format!(
                        "vertex {} of S has no neighbor in an odd component",
                        h.left.as_slice()[i]
                    ))
                    .with_subset(s),
                    HallViolation::NotCoverableWithout(j) => {
                        Witness::new("S cannot be matched once this odd component is removed")
                            .with_subset(&h.right[j])
                    }
                    HallViolation::NotCoverable => unreachable!("surplus one never reports this"),
                });
            }
        }
    }
    Ok(report)
}
