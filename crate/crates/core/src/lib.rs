//! Recognition of possibly single-crossing electorates from approval ballots.
//!
//! Approval ballots are turned into non-betweenness constraints over the
//! voters. Those constraints are resolved through the *formula graph*
//! (ordered voter pairs joined by equality constraints) and the *colorful
//! graph* (one edge color per complementary pair of components). An acyclic
//! orientation of the colorful graph gives a voter axis, and the weak
//! orders are then completed into a single-crossing linear profile along it.
//!
//! The crate is `no_std` and only needs `alloc`. All voter and candidate ids
//! in this crate are 0-based; the command-line front end converts to the
//! 1-based ids used in input files.
//!
//! ```
//! use psc_core::profile::ApprovalProfile;
//! use psc_core::pipeline::{recognize_psc, RecognitionOutcome};
//!
//! let p = ApprovalProfile::from_rows(&[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
//! match recognize_psc(&p.to_weak_orders()).unwrap() {
//!     RecognitionOutcome::Accept { axis, .. } => assert_eq!(axis.len(), 3),
//!     RecognitionOutcome::Reject(_) => unreachable!(),
//! }
//! ```
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod colorful_graph;
pub mod digraph;
mod error;
pub mod extend;
pub mod formula_graph;
pub mod lemma_lab;
pub mod nb;
pub mod orient;
pub mod pipeline;
pub mod profile;
mod union_find;

pub use error::Error;

/// Default upper bound on the ground size for exhaustive permutation search.
pub const DEFAULT_NB_BRUTE_CAP: usize = 9;
/// Default upper bound on the voter count for the brute-force PSC oracle.
pub const DEFAULT_PSC_BRUTE_CAP: usize = 8;
/// Default upper bound on the number of colors for the exhaustive orientation search.
pub const DEFAULT_FPT_COLOR_CAP: usize = 20;
