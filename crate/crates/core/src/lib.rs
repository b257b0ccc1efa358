//! Exact-arithmetic toolkit for flattened Catalan words.
//!
//! A Catalan word is a word over the nonnegative integers that starts at 0
//! and never rises by more than 1 from one letter to the next. It is
//! *flattened* when the leading letters of its maximal weak-ascent runs
//! appear in weakly increasing order.
//!
//! The crate provides:
//!
//! * [`words`] — word values, validity predicates, first-return
//!   decomposition, streaming lexicographic enumeration, and lattice-diagram
//!   rendering;
//! * [`stats`] — the ten subword statistics (runs of ascents/descents, weak
//!   variants, ℓ-valleys, valleys, symmetric valleys, ℓ-peaks, peaks,
//!   symmetric peaks) and enumeration-backed distributions;
//! * [`series`] — sparse bivariate polynomials over big integers, the
//!   catalog of rational generating functions for every statistic, triangle
//!   expansion by coefficient recurrence, and closed-form evaluators;
//! * [`bijections`] — constructive correspondences with even compositions,
//!   order-consecutive partitions, and dotted binary words, plus the
//!   run-transporting involution;
//! * [`verify`] — a harness that cross-checks enumeration, series
//!   expansion, and closed forms against each other and against embedded
//!   published sequence prefixes.
//!
//! Everything is exact: counts are big integers and no floating point is
//! used anywhere.

pub mod bijections;
pub mod series;
pub mod stats;
pub mod verify;
pub mod words;

pub use bijections::{Composition, DottedBinaryWord, OrderConsecutivePartition};
pub use series::{RationalBgf, Triangle};
pub use stats::{Distribution, StatKind};
pub use verify::CheckReport;
pub use words::{FirstReturnSplit, Word};

#[cfg(test)]
pub(crate) mod testutil;
