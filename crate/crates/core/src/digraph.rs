//! Ordered, s-labelled Eulerian digraphs given by their cycle partition.
//!
//! A digraph is stored as its ordered list of cycles. Each cycle lists
//! distinct vertex labels; its first edge runs from the first listed vertex
//! to the second (a one-vertex cycle is a loop). Edges, degrees and the
//! vertex set are derived from the cycles, so parallel edges and several
//! loops on one vertex are all representable.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::matrix::{DyckMatrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("digraph has no cycles")]
    NoCycles,
    #[error("cycle {cycle} is empty")]
    EmptyCycle { cycle: usize },
    #[error("cycle {cycle} visits v{vertex} twice")]
    RepeatedVertex { cycle: usize, vertex: usize },
    #[error("NotInFamily: {0}")]
    NotInFamily(MatrixError),
}

/// The `position`-th edge of cycle `cycle` (both 1-based), labelled
/// `e<cycle><position>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub cycle: usize,
    pub position: usize,
    pub from: usize,
    pub to: usize,
}

impl Edge {
    pub fn label(&self) -> String {
        format!("e{}{}", self.cycle, self.position)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelledEulerianDigraph {
    cycles: Vec<Vec<usize>>,
}

impl LabelledEulerianDigraph {
    /// Builds a digraph from ordered cycles of vertex labels.
    pub fn new(cycles: Vec<Vec<usize>>) -> Result<Self, DigraphError> {
        if cycles.is_empty() {
            return Err(DigraphError::NoCycles);
        }
        for (i, c) in cycles.iter().enumerate() {
            if c.is_empty() {
                return Err(DigraphError::EmptyCycle { cycle: i + 1 });
            }
            let mut seen = BTreeSet::new();
            for &v in c {
                if !seen.insert(v) {
                    return Err(DigraphError::RepeatedVertex {
                        cycle: i + 1,
                        vertex: v,
                    });
                }
            }
        }
        Ok(LabelledEulerianDigraph { cycles })
    }

    /// Cycle `i` lists the 1-columns of row `i` in increasing order;
    /// column `j` (0-based) becomes vertex `v{j+1}`.
    pub fn from_matrix(m: &DyckMatrix) -> Self {
        let cycles = m
            .iter_rows()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(j, &b)| b.then_some(j + 1))
                    .collect()
            })
            .collect();
        LabelledEulerianDigraph { cycles }
    }

    /// Cycle matrix after renumbering vertices by first appearance.
    pub fn to_matrix(&self) -> Result<DyckMatrix, DigraphError> {
        DyckMatrix::from_grid(&self.canonical_grid()).map_err(DigraphError::NotInFamily)
    }

    /// The 0/1 incidence grid under first-appearance renumbering, before any
    /// validation.
    pub fn canonical_grid(&self) -> Vec<Vec<u8>> {
        let mut index: HashMap<usize, usize> = HashMap::new();
        for &v in self.cycles.iter().flatten() {
            let next = index.len();
            index.entry(v).or_insert(next);
        }
        self.cycles
            .iter()
            .map(|c| {
                let mut row = vec![0u8; index.len()];
                for v in c {
                    row[index[v]] = 1;
                }
                row
            })
            .collect()
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Distinct vertex labels, ascending.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.cycles.iter().flatten().copied().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    /// Length of each cycle, in cycle order.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// Every edge, cycle by cycle, each cycle starting at its first edge.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.cycles.iter().enumerate().flat_map(|(i, c)| {
            (0..c.len()).map(move |m| Edge {
                cycle: i + 1,
                position: m + 1,
                from: c[m],
                to: c[(m + 1) % c.len()],
            })
        })
    }

    /// `(in, out)` degree of each vertex over the edge multiset.
    pub fn degrees(&self) -> BTreeMap<usize, (usize, usize)> {
        let mut deg: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for e in self.edges() {
            deg.entry(e.to).or_default().0 += 1;
            deg.entry(e.from).or_default().1 += 1;
        }
        deg
    }

    pub fn is_balanced(&self) -> bool {
        self.degrees().values().all(|(i, o)| i == o)
    }

    /// Checks both family conditions and lists every violation.
    pub fn verify_family(&self) -> FamilyReport {
        let sets: Vec<BTreeSet<usize>> = self
            .cycles
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        let mut violations = Vec::new();
        for i in 0..sets.len() {
            for j in 0..sets.len() {
                if i == j || !sets[i].is_subset(&sets[j]) {
                    continue;
                }
                // equal sets are reported once
                if sets[i] == sets[j] && i > j {
                    continue;
                }
                violations.push(FamilyViolation::Containment {
                    inner: i + 1,
                    outer: j + 1,
                });
            }
        }
        for i in 0..self.cycles.len().saturating_sub(1) {
            let shared = sets[i].intersection(&sets[i + 1]).count();
            let (a, b) = (&self.cycles[i][..shared], &self.cycles[i + 1][..shared]);
            if a != b {
                violations.push(FamilyViolation::SharedNotInitial { first: i + 1 });
            }
        }
        FamilyReport { violations }
    }

    /// DOT text: vertices `v<label>` in ascending order, then one labelled
    /// edge per line in cycle order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in self.vertices() {
            writeln!(out, "  v{v};").unwrap();
        }
        for e in self.edges() {
            writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, e.label()).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Digraph of a Dyck matrix.
pub fn matrix_to_digraph(m: &DyckMatrix) -> LabelledEulerianDigraph {
    LabelledEulerianDigraph::from_matrix(m)
}

/// Cycle matrix of a digraph, if it belongs to the family.
pub fn digraph_to_matrix(g: &LabelledEulerianDigraph) -> Result<DyckMatrix, DigraphError> {
    g.to_matrix()
}

/// A broken family condition. Cycle indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyViolation {
    /// E1: the vertex set of `inner` lies inside that of `outer`.
    Containment { inner: usize, outer: usize },
    /// E2: cycles `first` and `first + 1` share vertices that are not the
    /// common initial segment of both.
    SharedNotInitial { first: usize },
}

impl fmt::Display for FamilyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyViolation::Containment { inner, outer } => {
                write!(f, "E1: cycle {inner} contained in cycle {outer}")
            }
            FamilyViolation::SharedNotInitial { first } => write!(
                f,
                "E2: cycles {first} and {} share non-initial vertices",
                first + 1
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyReport {
    pub violations: Vec<FamilyViolation>,
}

impl FamilyReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}
