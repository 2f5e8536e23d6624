//! Choosing an acyclic orientation of a colorful graph and reading an axis
//! off it.
//!
//! For graphs induced by approval ballots, the min-rule settles every color
//! that sits in a three-colored triangle: such colors are bicliques
//! `A × B`, and orienting each one from the side with the smaller minimum
//! to the other never closes a cycle. Other colors keep their base
//! direction. For arbitrary constraint sets, [`fpt_solve`] tries all `2^ℓ`
//! orientations instead.

use alloc::vec::Vec;
use core::fmt;

use crate::colorful_graph::{ColorfulGraph, NotBiclique, Orientation};
use crate::nb::Axis;
use crate::Error;

/// The min-rule could not produce an acyclic orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinRuleError {
    /// Precondition failure: some color is cyclic on its own.
    MonochromaticCycle { color: usize, cycle: Vec<usize> },
    /// A triangle color is not a biclique. Never happens for approval input.
    NotBiclique(NotBiclique),
    /// The final orientation has a cycle. Never happens for approval input.
    Cyclic(Vec<usize>),
}

impl MinRuleError {
    /// True for the outcomes that indicate the graph was not induced by
    /// approval ballots (or a bug), as opposed to a violated precondition.
    pub fn is_structure_violation(&self) -> bool {
        !matches!(self, MinRuleError::MonochromaticCycle { .. })
    }
}

impl fmt::Display for MinRuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinRuleError::MonochromaticCycle { color, cycle } => {
                write!(f, "color {color} has the cycle {cycle:?}")
            }
            MinRuleError::NotBiclique(nb) => write!(f, "triangle color is not a biclique: {nb:?}"),
            MinRuleError::Cyclic(cycle) => {
                write!(f, "min-rule orientation has the cycle {cycle:?}")
            }
        }
    }
}

impl core::error::Error for MinRuleError {}

/// Orients each triangle color `A × B` as `A → B` iff `min A < min B`;
/// every other color keeps its base direction. The result is re-checked
/// for acyclicity.
pub fn min_rule_orientation(g: &ColorfulGraph) -> Result<Orientation, MinRuleError> {
    if let Some((color, cycle)) = g.has_monochromatic_cycle() {
        return Err(MinRuleError::MonochromaticCycle { color, cycle });
    }
    let mut o = Orientation::keep_all(g.color_count());
    for color in g.triangle_colors() {
        let b = g
            .biclique_decomposition(color)
            .map_err(MinRuleError::NotBiclique)?;
        // sides are nonempty and disjoint, so the minima differ
        if b.sources[0] > b.targets[0] {
            o.toggle(color);
        }
    }
    let oriented = g
        .apply_orientation(&o)
        .expect("orientation sized to the graph");
    match oriented.find_cycle() {
        None => Ok(o),
        Some(cycle) => Err(MinRuleError::Cyclic(cycle)),
    }
}

/// The first acyclic orientation in binary counting order (keep before
/// flip, color 0 most significant), or `None` if every orientation has a
/// cycle. Refuses graphs with more than `cap` colors.
pub fn fpt_solve(g: &ColorfulGraph, cap: usize) -> Result<Option<Orientation>, Error> {
    let colors = g.color_count();
    if colors > cap || colors >= 64 {
        return Err(Error::CapExceeded { size: colors, cap });
    }
    if g.has_monochromatic_cycle().is_some() {
        return Ok(None);
    }
    for index in 0..(1u64 << colors) {
        let o = Orientation::from_counter(colors, index);
        if g.apply_orientation(&o)?.is_acyclic() {
            return Ok(Some(o));
        }
    }
    Ok(None)
}

/// Topological order of the oriented graph, smallest voter first among the
/// available ones.
pub fn orientation_to_axis(g: &ColorfulGraph, o: &Orientation) -> Result<Axis, Error> {
    let order = g
        .apply_orientation(o)?
        .topological_order()
        .map_err(Error::Cyclic)?;
    Axis::new(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_colors() {
        let g = ColorfulGraph::from_colors(3, Vec::new()).unwrap();
        assert_eq!(min_rule_orientation(&g), Ok(Orientation::keep_all(0)));
        assert_eq!(fpt_solve(&g, 20), Ok(Some(Orientation::keep_all(0))));
        assert_eq!(
            orientation_to_axis(&g, &Orientation::keep_all(0)),
            Ok(Axis::identity(3))
        );
    }

    #[test]
    fn min_rule_breaks_single_edge_triangle() {
        // A = {0}, B = {1}, C = {2} with base edges 0→1, 1→2, 2→0
        let g = ColorfulGraph::from_colors(
            3,
            alloc::vec![
                alloc::vec![(0, 1)],
                alloc::vec![(1, 2)],
                alloc::vec![(2, 0)],
            ],
        )
        .unwrap();
        assert!(g.base_digraph().find_cycle().is_some());
        let o = min_rule_orientation(&g).unwrap();
        assert_eq!(o.flips(), &[false, false, true]);
        let axis = orientation_to_axis(&g, &o).unwrap();
        assert_eq!(axis.order(), &[0, 1, 2]);
    }

    #[test]
    fn single_color_keeps_base() {
        let g = ColorfulGraph::from_colors(3, alloc::vec![alloc::vec![(0, 1), (2, 1)]]).unwrap();
        assert_eq!(fpt_solve(&g, 20), Ok(Some(Orientation::keep_all(1))));
    }

    #[test]
    fn monochromatic_cycle_is_a_precondition_failure() {
        let g = ColorfulGraph::from_colors(3, alloc::vec![alloc::vec![(0, 1), (1, 2), (2, 0)]])
            .unwrap();
        let err = min_rule_orientation(&g).unwrap_err();
        assert!(!err.is_structure_violation());
        assert_eq!(fpt_solve(&g, 20), Ok(None));
    }

    #[test]
    fn triangle_color_that_is_not_a_biclique() {
        // color 0 is the path 0→1→3: triangle (0,1,2) uses it but it is no biclique
        let g = ColorfulGraph::from_colors(
            4,
            alloc::vec![
                alloc::vec![(0, 1), (1, 3)],
                alloc::vec![(1, 2)],
                alloc::vec![(2, 0)],
            ],
        )
        .unwrap();
        let err = min_rule_orientation(&g).unwrap_err();
        assert!(err.is_structure_violation());
    }

    #[test]
    fn fpt_cap() {
        let g =
            ColorfulGraph::from_colors(3, alloc::vec![alloc::vec![(0, 1)], alloc::vec![(1, 2)]])
                .unwrap();
        assert_eq!(
            fpt_solve(&g, 1),
            Err(Error::CapExceeded { size: 2, cap: 1 })
        );
    }
}
