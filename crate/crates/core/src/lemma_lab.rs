//! Exhaustive case checks over small partially filled approval matrices.
//!
//! Each template is a 4 × 5 matrix (rows are candidates, columns voters
//! 1..5) with eight free cells named `x y z t u v p q`. All 256 fillings are
//! enumerated; a filling is *consistent* when its formula graph admits a
//! complementary pairs partition and the hypothesis holds on the graphs of
//! that matrix alone. A *violation* is a consistent filling whose graphs
//! miss one of the concluded formula-graph edges.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::formula_graph::{
    build_formula_graph, complementary_pairs_partition, ComplementaryPartition, FormulaGraph, Pair,
};
use crate::nb::extract_nb_constraints;
use crate::profile::ApprovalProfile;

/// Names of the free cells, in the order used for counting.
pub const VARIABLES: [char; 8] = ['x', 'y', 'z', 't', 'u', 'v', 'p', 'q'];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    /// Edges `(1,2) -- (1,4)` and `(2,3) -- (2,5)` with distinct colors.
    L13,
    /// Edges `(1,2) -- (4,2)` and `(2,3) -- (2,5)` with distinct colors.
    L14,
    /// As `L13`, with the color conditions replaced by two missing edges.
    L15,
    /// As `L14`, with the color conditions replaced by two missing edges.
    L16,
}

impl LemmaId {
    pub const ALL: [LemmaId; 4] = [LemmaId::L13, LemmaId::L14, LemmaId::L15, LemmaId::L16];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::L13 => "L13",
            LemmaId::L14 => "L14",
            LemmaId::L15 => "L15",
            LemmaId::L16 => "L16",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownLemma;

impl fmt::Display for UnknownLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of L13, L14, L15, L16")
    }
}

impl core::error::Error for UnknownLemma {}

impl FromStr for LemmaId {
    type Err = UnknownLemma;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or(UnknownLemma)
    }
}

/// A matrix cell: a fixed bit or the index of a free variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Fixed(u8),
    Free(usize),
}

use Cell::{Fixed as F, Free as V};

const X: Cell = V(0);
const Y: Cell = V(1);
const Z: Cell = V(2);
const T: Cell = V(3);
const U: Cell = V(4);
const VV: Cell = V(5);
const P: Cell = V(6);
const Q: Cell = V(7);

// (1,2) -- (1,4) and (2,3) -- (2,5)
const ONE_COMMON_ONE_OPPOSITE: [[Cell; 5]; 4] = [
    [F(0), F(1), X, F(1), Z],
    [F(1), F(0), Y, F(0), T],
    [U, F(0), F(1), P, F(1)],
    [VV, F(1), F(0), Q, F(0)],
];

// (1,2) -- (4,2) and (2,3) -- (2,5): column 4 of the first two rows swapped
const TWO_COMMON: [[Cell; 5]; 4] = [
    [F(0), F(1), X, F(0), Z],
    [F(1), F(0), Y, F(1), T],
    [U, F(0), F(1), P, F(1)],
    [VV, F(1), F(0), Q, F(0)],
];

/// Hypothesis and conclusion of one case check. Voters are 1-based here,
/// matching the usual way these configurations are written down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaTemplate {
    pub id: LemmaId,
    pub skeleton: [[Cell; 5]; 4],
    /// Formula-graph edges that must be present.
    pub required_edges: Vec<(Pair, Pair)>,
    /// Formula-graph edges that must be absent.
    pub forbidden_edges: Vec<(Pair, Pair)>,
    /// `(1,2)` and `(2,3)` carry different colors, and `(1,3)` is either
    /// absent from the colorful graph or carries a third color.
    pub distinct_colors: bool,
    /// Formula-graph edges the case check expects to find.
    pub conclusion_edges: Vec<(Pair, Pair)>,
}

impl LemmaTemplate {
    pub fn new(id: LemmaId) -> Self {
        let one_opposite = ((1, 2), (1, 4));
        let common = ((1, 2), (4, 2));
        let second = ((2, 3), (2, 5));
        let forbidden = alloc::vec![((1, 2), (3, 2)), ((1, 2), (5, 2))];
        match id {
            LemmaId::L13 => LemmaTemplate {
                id,
                skeleton: ONE_COMMON_ONE_OPPOSITE,
                required_edges: alloc::vec![one_opposite, second],
                forbidden_edges: Vec::new(),
                distinct_colors: true,
                conclusion_edges: alloc::vec![
                    ((1, 3), (1, 5)),
                    ((4, 3), (4, 5)),
                    ((2, 3), (4, 3)),
                    ((2, 5), (4, 5)),
                ],
            },
            LemmaId::L14 => LemmaTemplate {
                id,
                skeleton: TWO_COMMON,
                required_edges: alloc::vec![common, second],
                forbidden_edges: Vec::new(),
                distinct_colors: true,
                conclusion_edges: alloc::vec![
                    ((4, 3), (1, 3)),
                    ((4, 3), (4, 5)),
                    ((1, 3), (1, 5)),
                    ((4, 5), (1, 5)),
                ],
            },
            LemmaId::L15 => LemmaTemplate {
                id,
                skeleton: ONE_COMMON_ONE_OPPOSITE,
                required_edges: alloc::vec![one_opposite, second],
                forbidden_edges: forbidden,
                distinct_colors: false,
                conclusion_edges: alloc::vec![((1, 3), (1, 5))],
            },
            LemmaId::L16 => LemmaTemplate {
                id,
                skeleton: TWO_COMMON,
                required_edges: alloc::vec![common, second],
                forbidden_edges: forbidden,
                distinct_colors: false,
                conclusion_edges: alloc::vec![((1, 3), (1, 5))],
            },
        }
    }

    /// Fills the free cells; `values[i]` is the value of `VARIABLES[i]`.
    pub fn fill(&self, values: &[u8; 8]) -> ApprovalProfile {
        let mut entries = Vec::with_capacity(20);
        for row in &self.skeleton {
            for cell in row {
                entries.push(match *cell {
                    Cell::Fixed(b) => b,
                    Cell::Free(i) => values[i],
                });
            }
        }
        ApprovalProfile::new(4, 5, &entries).expect("template cells are bits")
    }

    fn holds(&self, g: &FormulaGraph, part: &ComplementaryPartition) -> bool {
        let edge = |(u, v): (Pair, Pair)| g.has_edge(zero_based(u), zero_based(v));
        if !self.required_edges.iter().all(|&e| edge(e)) {
            return false;
        }
        if self.forbidden_edges.iter().any(|&e| edge(e)) {
            return false;
        }
        if self.distinct_colors {
            let color = |u: Pair| part.locate(zero_based(u)).0;
            let (c12, c23, c13) = (color((1, 2)), color((2, 3)), color((1, 3)));
            if c12 == c23 {
                return false;
            }
            let in_colorful = part.component_size(zero_based((1, 3))) > 1;
            if in_colorful && (c13 == c12 || c13 == c23) {
                return false;
            }
        }
        true
    }

    fn concludes(&self, g: &FormulaGraph) -> bool {
        self.conclusion_edges
            .iter()
            .all(|&(u, v)| g.has_edge(zero_based(u), zero_based(v)))
    }
}

fn zero_based((i, j): Pair) -> Pair {
    (i - 1, j - 1)
}

/// Tally of one exhaustive case check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub lemma: LemmaId,
    pub total: usize,
    pub consistent: usize,
    pub violations: usize,
    /// Consistent fillings in binary counting order of `(x, y, z, t, u, v, p, q)`.
    pub consistent_assignments: Vec<[u8; 8]>,
    pub violating_assignments: Vec<[u8; 8]>,
}

impl CaseReport {
    pub fn inconsistent(&self) -> usize {
        self.total - self.consistent
    }
}

/// The `index`-th assignment in binary counting order, `x` most significant.
pub fn assignment(index: u32) -> [u8; 8] {
    core::array::from_fn(|i| ((index >> (7 - i)) & 1) as u8)
}

/// Runs all 256 fillings of `template`.
pub fn enumerate_lemma_cases(template: &LemmaTemplate) -> CaseReport {
    let mut report = CaseReport {
        lemma: template.id,
        total: 256,
        consistent: 0,
        violations: 0,
        consistent_assignments: Vec::new(),
        violating_assignments: Vec::new(),
    };
    for index in 0..256 {
        let values = assignment(index);
        let profile = template.fill(&values);
        let g = build_formula_graph(&extract_nb_constraints(&profile.to_weak_orders()));
        let Ok(part) = complementary_pairs_partition(&g) else {
            continue;
        };
        if !template.holds(&g, &part) {
            continue;
        }
        report.consistent += 1;
        report.consistent_assignments.push(values);
        if !template.concludes(&g) {
            report.violations += 1;
            report.violating_assignments.push(values);
        }
    }
    report
}
