//! Exact q-umbral calculus over the rational function field ℚ(q).
//!
//! The crate builds the q-Euler and q-Bernoulli polynomial families (of every
//! order r) from their generating functions in the divided-power q-umbral
//! algebra, and checks the identities relating them by exact symbolic
//! equality.
//!
//! Layers, bottom-up:
//! - [`qscalar`]: polynomials in q over ℚ and the canonical field ℚ(q).
//! - [`qcomb`]: q-integers, q-factorials, q-binomials, q-multinomials.
//! - [`dpseries`]: truncated divided-power series `Σ a_k t^k/[k]_q!`.
//! - [`xpoly`]: polynomials in x over ℚ(q), q-derivative, Jackson integral, parser.
//! - [`umbral`]: the pairing `<f(t) | p(x)>`, operator action, connection coefficients.
//! - [`families`]: number and polynomial families, each by two independent paths.
//! - [`identities`]: the executable identity catalog and classical oracles.
//! - [`output`]: JSON / CSV / LaTeX rendering used by the command-line tool.

pub mod dpseries;
pub mod error;
pub mod families;
pub mod identities;
pub mod output;
pub mod qcomb;
pub mod qscalar;
pub mod umbral;
pub mod xpoly;

pub use dpseries::DPSeries;
pub use error::{Error, ParseError, Result};
pub use families::{FamilyKind, PolyFamily};
pub use identities::{IdentityReport, Status};
pub use qscalar::{BigRat, QNumPoly, QRat};
pub use xpoly::XPoly;
