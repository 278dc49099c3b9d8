//! Maximum matchings in general graphs and the Gallai-Edmonds decomposition.
//!
//! - [`graph`]: simple graphs, vertex sets, `G - S` components and the
//!   bipartite minor `<G, S>`.
//! - [`matching`]: the blossom engine and perfect-matching predicates.
//! - [`decomposition`]: deficiency, `(D, A, C)`, and the Gallai-Edmonds
//!   conditions.
//! - [`oracle`]: exhaustive search used to certify all of the above.
//! - [`io`]: edgelist/DIMACS parsing, JSON/DOT output, generators.

pub mod decomposition;
pub mod error;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod report;

pub use decomposition::{
    compute_d, deficiency_profile, gallai_edmonds, hall_condition, is_tutte_berge,
    tutte_berge_formula_check, verify_ge_conditions, Decomposition, DeficiencyProfile, Surplus,
};
pub use error::{Error, Result};
pub use graph::{
    bipartite_minor, component_split, delete_vertices, BipartiteMinor, ComponentSplit, Graph,
    Subgraph, VertexSet,
};
pub use matching::{
    bipartite_maximum_matching, exposed_vertices, has_perfect_matching, is_factor_critical,
    maximum_matching, Matching, MatchingNumber,
};
pub use report::{Clause, VerificationReport, Witness};
