//! Per-clause verification results with a counterexample for the first
//! failing clause.

use std::fmt;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
}

/// Counterexample payload attached to the first failing clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub clause: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<Graph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<(usize, usize)>>,
}

impl Witness {
    pub fn new(detail: impl Into<String>) -> Self {
        Witness {
            clause: String::new(),
            detail: detail.into(),
            graph: None,
            subset: None,
            matching: None,
        }
    }

    pub fn with_graph(mut self, g: &Graph) -> Self {
        self.graph = Some(g.clone());
        self
    }

    pub fn with_subset(mut self, s: &VertexSet) -> Self {
        self.subset = Some(s.clone());
        self
    }

    pub fn with_matching(mut self, pairs: Vec<(usize, usize)>) -> Self {
        self.matching = Some(pairs);
        self
    }
}

/// Ordered clause results. `passed()` holds iff every clause passed, and
/// `witness` is present iff some clause failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub clauses: Vec<Clause>,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a clause. On the first failure, `witness` is evaluated and kept.
    pub fn check<F>(&mut self, name: &str, passed: bool, witness: F) -> bool
    where
        F: FnOnce() -> Witness,
    {
        self.clauses.push(Clause {
            name: name.to_string(),
            passed,
        });
        if !passed && self.witness.is_none() {
            let mut w = witness();
            w.clause = name.to_string();
            self.witness = Some(w);
        }
        passed
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<bool> {
        self.clauses
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.passed)
    }

    /// Appends another report's clauses, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for c in other.clauses {
            self.clauses.push(Clause {
                name: format!("{prefix}{}", c.name),
                passed: c.passed,
            });
        }
        if self.witness.is_none() {
            if let Some(mut w) = other.witness {
                w.clause = format!("{prefix}{}", w.clause);
                self.witness = Some(w);
            }
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {}: {}", w.clause, w.detail)?;
            if let Some(g) = &w.graph {
                writeln!(f, "  graph: n={} edges={:?}", g.n(), g.edges())?;
            }
            if let Some(s) = &w.subset {
                writeln!(f, "  subset: {:?}", s.as_slice())?;
            }
            if let Some(m) = &w.matching {
                writeln!(f, "  matching: {m:?}")?;
            }
        }
        write!(
            f,
            "overall: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}
