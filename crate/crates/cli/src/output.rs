//! Result records shared by the text and JSON renderings.

use serde::Serialize;

use psc_core::formula_graph::Pair;
use psc_core::nb::Axis;
use psc_core::pipeline::{RecognitionOutcome, Rejection};
use psc_core::profile::LinearProfile;

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `pair` reaches its own reversal along `path`.
    ComplementClash {
        pair: [usize; 2],
        path: Vec<[usize; 2]>,
    },
    MonochromaticCycle {
        color: usize,
        cycle: Vec<usize>,
    },
}

#[derive(Debug, Serialize)]
pub struct OutcomeRecord {
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axis: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

pub fn axis_ids(axis: &Axis) -> Vec<usize> {
    axis.order().iter().map(|v| v + 1).collect()
}

pub fn profile_ids(p: &LinearProfile) -> Vec<Vec<usize>> {
    p.rankings()
        .iter()
        .map(|r| r.iter().map(|c| c + 1).collect())
        .collect()
}

fn pair_ids((i, j): Pair) -> [usize; 2] {
    [i + 1, j + 1]
}

impl OutcomeRecord {
    pub fn new(outcome: &RecognitionOutcome, emit_axis: bool, emit_profile: bool) -> Self {
        match outcome {
            RecognitionOutcome::Accept {
                axis,
                linear_profile,
            } => OutcomeRecord {
                outcome: "accept",
                axis: emit_axis.then(|| axis_ids(axis)),
                profile: emit_profile.then(|| profile_ids(linear_profile)),
                witness: None,
            },
            RecognitionOutcome::Reject(rejection) => OutcomeRecord {
                outcome: "reject",
                axis: None,
                profile: None,
                witness: Some(witness(rejection)),
            },
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("outcome: {}\n", self.outcome);
        if let Some(axis) = &self.axis {
            out.push_str(&format!("axis: {}\n", join(axis)));
        }
        if let Some(profile) = &self.profile {
            out.push_str("profile:\n");
            out.push_str(&format_rankings(profile));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness: {}\n", w.to_text()));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("records serialize");
        s.push('\n');
        s
    }
}

pub fn witness(r: &Rejection) -> Witness {
    match r {
        Rejection::ComplementClash(c) => Witness::ComplementClash {
            pair: pair_ids(c.witness),
            path: c.path.iter().map(|&u| pair_ids(u)).collect(),
        },
        Rejection::MonochromaticCycle { color, cycle } => Witness::MonochromaticCycle {
            color: *color,
            cycle: cycle.iter().map(|v| v + 1).collect(),
        },
    }
}

impl Witness {
    pub fn to_text(&self) -> String {
        match self {
            Witness::ComplementClash { pair, path } => {
                let steps: Vec<String> = path
                    .iter()
                    .map(|p| format!("({},{})", p[0], p[1]))
                    .collect();
                format!(
                    "complement-clash ({},{}) reaches ({},{}) via {}",
                    pair[0],
                    pair[1],
                    pair[1],
                    pair[0],
                    steps.join(" ")
                )
            }
            Witness::MonochromaticCycle { color, cycle } => {
                format!("monochromatic-cycle color {color} through {}", join(cycle))
            }
        }
    }
}

pub fn join(ids: &[usize]) -> String {
    ids.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// One line per voter, candidates best first.
pub fn format_rankings(rankings: &[Vec<usize>]) -> String {
    rankings.iter().map(|r| join(r) + "\n").collect()
}
