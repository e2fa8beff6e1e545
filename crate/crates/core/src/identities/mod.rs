//! Executable identity catalog.
//!
//! Each entry recomputes both sides of one identity over a bounded range and
//! compares them by exact equality in ℚ(q) (or, in specialized mode, after
//! substituting a rational value for q). Independent classical recurrences
//! serve as oracles for the q → 1 limits.

mod catalog;
mod classical;
mod context;
mod report;

pub use catalog::{catalog_ids, verify, verify_all, verify_with, Comparison, Ranges};
pub use classical::{classical_bernoulli, classical_euler};
pub use context::{Context, Corruption, CorruptionTarget, FamilyId};
pub use report::{IdentityReport, Side, Status, Witness};
