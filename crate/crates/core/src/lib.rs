//! Skew-aware Hoeffding bounds for sums of independent, bounded, zero-mean
//! random variables.
//!
//! For a zero-mean variable supported on `[a, b]` with `a < 0 < b`, the
//! classical lemma bounds the moment generating function by
//! `exp(s² A² / 2)` where `A = (b - a) / 2`. When the support is skewed to the
//! left (`-a > b`) the same argument yields the smaller scale
//! `G = sqrt(|a| b)` for the upper tail. This crate implements both lemmas,
//! the one- and two-sided Chernoff tail bounds they imply for heterogeneous
//! sums, the algebraic inversions of those bounds, and a harness that
//! certifies every inequality numerically.
//!
//! Modules:
//! - [`interval`]: validated supports and per-interval scales.
//! - [`mgf`]: the cumulant function of the extremal two-point law and the MGF bounds.
//! - [`tail`]: mixed scales, tail bounds and inversions.
//! - [`verify`]: discrete distributions, Monte Carlo tails and certification checks.
//! - [`io`]: interval-list CSV parsing and CSV report formatting.

pub mod error;
pub mod interval;
pub mod io;
pub mod mgf;
pub mod par;
pub mod tail;
pub mod verify;

pub use error::{BoundError, Result};
pub use interval::{Interval, SkewClass, TailDirection};
pub use mgf::MgfBoundKind;
pub use par::Execution;
pub use tail::{
    DeviationForm, IntervalSet, MixedScales, Sidedness, TailBoundReport,
};
