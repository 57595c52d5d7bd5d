//! Numerical semigroups: invariants, the Wilf function and Eliahou number,
//! executable checks of the bounds relating them to the concentration, and
//! parameterized family sweeps.

pub mod error;
pub mod fuzz;
pub mod invariants;
pub mod output;
pub mod semigroup;
pub mod sweep;
pub mod theorems;
pub mod wilf;

pub use error::{Error, Result};
pub use invariants::{report, AperySet, InvariantReport, PartitionProfile};
pub use semigroup::{GapSet, GeneratorSpec, NumericalSemigroup};
