//! Even and odd compositions with restricted parts.
//!
//! Counts compositions by length parity under several part restrictions,
//! evaluates the closed formulas for the signed counts, reproduces their
//! generating functions as truncated power series, and checks every identity
//! against exhaustive enumeration.
//!
//! * [`comb`]: compositions, partitions, restriction classes, enumeration.
//! * [`closed_forms`]: exact closed formulas and the recurrence.
//! * [`series`]: truncated power series in one and two variables.
//! * [`bijection`]: part-wise maps onto unrestricted compositions.
//! * [`partitions`]: partition classes and classical partition identities.
//! * [`seq`]: period detection and OEIS b-files.
//! * [`verify`]: theorem sweeps, optionally parallel (feature `parallel`).

pub mod bijection;
pub mod catalog;
pub mod closed_forms;
pub mod comb;
pub mod error;
pub mod partitions;
pub mod seq;
pub mod series;
pub mod sweep;
pub mod verify;

pub use comb::{
    enumerate_compositions, signed_count, signed_count_distinct, Composition, CompositionClass,
    Partition, SignedCount,
};
pub use error::{Error, Result};
pub use partitions::{enumerate_partitions, PartitionClass};
pub use sweep::Exec;
pub use verify::{verify, SweepConfig, Theorem, VerificationReport};
