//! Congruence lattices of finite linear Kripke frames.
//!
//! A congruence of a frame is a bisimulation that is also an equivalence
//! relation; on the line `L_n` (nodes `{0,…,n}`, `x R y` iff `|x−y| ≤ 1`)
//! every congruence has a closed canonical form `⟨k; r̄⟩`. This crate
//! provides:
//!
//! - [`frame`]: general frames, partitions, quotients, and the
//!   bisimulation-based congruence test;
//! - [`congruence`]: the canonical form — construction, validation,
//!   enumeration, and derived data (step, frequency, extremes, mirroring);
//! - [`lattice`]: order, meet, join, permutability, the nontriviality
//!   criterion, and the catalog of joinable shapes;
//! - [`trajectory`]: foldings and bouncing-particle trajectory diagrams
//!   with exact crossing geometry, plus ASCII/SVG renderers;
//! - [`oracle`]: brute-force ground truth over all partitions;
//! - [`verify`]: exhaustive cross-validation sweeps driven by the CLI and
//!   the acceptance tests.
//!
//! The hot sweeps are data-parallel via rayon under the `parallel` feature
//! (enabled by default) and fall back to identical sequential loops
//! without it.

pub mod congruence;
pub mod error;
pub mod frame;
pub mod lattice;
pub mod oracle;
mod par;
pub mod render;
pub mod trajectory;
pub mod verify;

pub use congruence::{delta, enumerate, validate, CanonicalCongruence, Kind, ValidationReport};
pub use error::Error;
pub use frame::{equivalence_closure, BinaryRelation, Frame, Partition};
