//! Single-crossing checks along a given axis, and completion of a
//! seemingly single-crossing weak-order profile into a single-crossing
//! linear profile on the same axis.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::nb::Axis;
use crate::profile::{LinearProfile, WeakOrderProfile};
use crate::Error;

/// Voters `i ◁ j ◁ k` and candidates `a, b` with `a ≻_i b`, `b ≻_j a`,
/// `a ≻_k b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SscViolation {
    pub voters: (usize, usize, usize),
    pub candidates: (usize, usize),
}

impl fmt::Display for SscViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.voters;
        let (a, b) = self.candidates;
        write!(
            f,
            "voters {i}, {j}, {k} flip back and forth on candidates {a}, {b}"
        )
    }
}

fn check_axis(p: &WeakOrderProfile, axis: &Axis) -> Result<(), Error> {
    if axis.len() != p.voters() {
        return Err(Error::DimensionMismatch {
            expected: p.voters(),
            found: axis.len(),
        });
    }
    Ok(())
}

/// The first violation of the seemingly single-crossing condition, scanning
/// candidate pairs in lexicographic order.
pub fn ssc_violation(p: &WeakOrderProfile, axis: &Axis) -> Result<Option<SscViolation>, Error> {
    check_axis(p, axis)?;
    let m = p.candidates();
    for a in 0..m {
        for b in a + 1..m {
            if let Some(v) = pair_violation(p, axis, a, b) {
                return Ok(Some(v));
            }
        }
    }
    Ok(None)
}

// The nonzero signs of a - b along the axis must change at most once.
fn pair_violation(p: &WeakOrderProfile, axis: &Axis, a: usize, b: usize) -> Option<SscViolation> {
    let mut first: Option<(usize, i64)> = None;
    let mut middle: Option<usize> = None;
    for &v in axis.order() {
        let s = (p.score(v, a) - p.score(v, b)).signum();
        if s == 0 {
            continue;
        }
        match (first, middle) {
            (None, _) => first = Some((v, s)),
            (Some((_, s0)), None) if s != s0 => middle = Some(v),
            (Some((i, s0)), Some(j)) if s == s0 => {
                let candidates = if s0 > 0 { (a, b) } else { (b, a) };
                return Some(SscViolation {
                    voters: (i, j, v),
                    candidates,
                });
            }
            _ => {}
        }
    }
    None
}

pub fn is_ssc(p: &WeakOrderProfile, axis: &Axis) -> Result<bool, Error> {
    Ok(ssc_violation(p, axis)?.is_none())
}

/// For linear orders the seemingly, possibly and plain single-crossing
/// notions coincide.
pub fn is_sc(p: &LinearProfile, axis: &Axis) -> Result<bool, Error> {
    is_ssc(&p.to_weak_orders(), axis)
}

/// Completes every weak order into a linear order so that the result is
/// single-crossing along `axis`.
///
/// Candidates that every voter ties are collapsed onto the smallest of them
/// and reinserted directly below it afterwards, in increasing id order. For
/// the remaining candidates, each pair `(a, b)` is decided for the voter at
/// axis position `i` by the closest voter at or before `i` that is not
/// indifferent between them, or failing that the closest one after `i`.
pub fn extend_to_single_crossing(
    p: &WeakOrderProfile,
    axis: &Axis,
) -> Result<LinearProfile, Error> {
    if let Some(w) = ssc_violation(p, axis)? {
        return Err(Error::NotSsc(w));
    }
    let n = p.voters();
    let m = p.candidates();

    // candidate -> representative with an identical score column
    let mut first_with_column: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut clones: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut reps: Vec<usize> = Vec::new();
    for c in 0..m {
        let column: Vec<i64> = (0..n).map(|v| p.score(v, c)).collect();
        match first_with_column.get(&column) {
            Some(&rep) => clones[rep].push(c),
            None => {
                first_with_column.insert(column, c);
                reps.push(c);
            }
        }
    }

    let r = reps.len();
    // wins[pos * r + x] = number of reps beaten by reps[x] at axis position pos
    let mut wins = vec![0usize; n * r];
    let mut signs = vec![0i64; n];
    for x in 0..r {
        for y in x + 1..r {
            let (a, b) = (reps[x], reps[y]);
            for (pos, &v) in axis.order().iter().enumerate() {
                signs[pos] = (p.score(v, a) - p.score(v, b)).signum();
            }
            let first = signs
                .iter()
                .copied()
                .find(|&s| s != 0)
                .ok_or(Error::Internal(
                    "distinct candidate columns must differ for some voter",
                ))?;
            let mut last = first;
            for (pos, &s) in signs.iter().enumerate() {
                if s != 0 {
                    last = s;
                }
                if last > 0 {
                    wins[pos * r + x] += 1;
                } else {
                    wins[pos * r + y] += 1;
                }
            }
        }
    }

    let mut rankings = vec![Vec::new(); n];
    for (pos, &voter) in axis.order().iter().enumerate() {
        let row = &wins[pos * r..(pos + 1) * r];
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by_key(|&x| core::cmp::Reverse(row[x]));
        // a tournament is transitive iff its win counts are r-1, r-2, …, 0
        if order
            .iter()
            .enumerate()
            .any(|(rank, &x)| row[x] != r - 1 - rank)
        {
            return Err(Error::Internal("pairwise completion is not transitive"));
        }
        let mut ranking = Vec::with_capacity(m);
        for x in order {
            ranking.push(reps[x]);
            ranking.extend_from_slice(&clones[reps[x]]);
        }
        rankings[voter] = ranking;
    }
    LinearProfile::new(rankings)
}
