//! End-to-end recognition, and the brute-force oracle it is tested against.

use alloc::vec::Vec;

use crate::colorful_graph::build_colorful_graph;
use crate::extend::{extend_to_single_crossing, is_sc, ssc_violation};
use crate::formula_graph::{build_formula_graph, complementary_pairs_partition, ComplementClash};
use crate::nb::{extract_nb_constraints, first_permutation, Axis};
use crate::orient::{min_rule_orientation, orientation_to_axis, MinRuleError};
use crate::profile::{LinearProfile, WeakOrderProfile};
use crate::Error;

/// Why a profile is not possibly single-crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// Some ordered voter pair is forced equal to its own reversal.
    ComplementClash(ComplementClash),
    /// The edges of one color already contain a directed cycle.
    MonochromaticCycle { color: usize, cycle: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognitionOutcome {
    Accept {
        axis: Axis,
        linear_profile: LinearProfile,
    },
    Reject(Rejection),
}

impl RecognitionOutcome {
    pub fn is_accept(&self) -> bool {
        matches!(self, RecognitionOutcome::Accept { .. })
    }

    pub fn axis(&self) -> Option<&Axis> {
        match self {
            RecognitionOutcome::Accept { axis, .. } => Some(axis),
            RecognitionOutcome::Reject(_) => None,
        }
    }
}

/// Decides whether `p` is possibly single-crossing and, if so, returns an
/// axis together with a single-crossing linear profile extending `p`.
///
/// Polynomial and exact for approval ballots (2-weak orders). Profiles
/// with three or more indifference classes are accepted as input, but the
/// min-rule step may then report [`Error::StructureViolation`].
///
/// Every accepted answer is re-verified before it is returned; a failed
/// verification is reported as [`Error::Internal`].
pub fn recognize_psc(p: &WeakOrderProfile) -> Result<RecognitionOutcome, Error> {
    let inst = extract_nb_constraints(p);
    let fg = build_formula_graph(&inst);
    let part = match complementary_pairs_partition(&fg) {
        Ok(part) => part,
        Err(clash) => {
            return Ok(RecognitionOutcome::Reject(Rejection::ComplementClash(
                clash,
            )));
        }
    };
    let cg = build_colorful_graph(&part);
    if let Some((color, cycle)) = cg.has_monochromatic_cycle() {
        return Ok(RecognitionOutcome::Reject(Rejection::MonochromaticCycle {
            color,
            cycle,
        }));
    }
    let orientation = match min_rule_orientation(&cg) {
        Ok(o) => o,
        Err(MinRuleError::MonochromaticCycle { .. }) => {
            return Err(Error::Internal(
                "monochromatic cycle missed by the cycle check",
            ));
        }
        Err(e) => return Err(Error::StructureViolation(e)),
    };
    let axis = orientation_to_axis(&cg, &orientation)?;
    if ssc_violation(p, &axis)?.is_some() {
        return Err(Error::Internal(
            "recovered axis is not seemingly single-crossing",
        ));
    }
    let linear_profile = extend_to_single_crossing(p, &axis)?;
    if !is_sc(&linear_profile, &axis)? {
        return Err(Error::Internal("completed profile is not single-crossing"));
    }
    if !linear_profile.extends(p) {
        return Err(Error::Internal(
            "completed profile does not extend the ballots",
        ));
    }
    Ok(RecognitionOutcome::Accept {
        axis,
        linear_profile,
    })
}

/// The lexicographically smallest axis along which `p` is seemingly
/// single-crossing, searching all `n!` axes. Refuses more than `cap` voters.
pub fn brute_force_psc(p: &WeakOrderProfile, cap: usize) -> Result<Option<Axis>, Error> {
    let n = p.voters();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    Ok(first_permutation(n, |axis| {
        matches!(ssc_violation(p, axis), Ok(None))
    }))
}
