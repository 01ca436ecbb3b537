//! Exact computations for base rings of transversal polymatroids.
//!
//! The crate covers one family of presentations indexed by `(n, i, j)` and,
//! through brute-force oracles, arbitrary transversal presentations of `n`
//! sets over `[n]`:
//!
//! * [`presentation`]: presentations, base sets and the exchange axiom.
//! * [`linalg`]: big-integer determinants, rank, Hermite normal form.
//! * [`feasibility`]: exact rational linear feasibility.
//! * [`cone`]: facet normals and extremal rays of the generated cone.
//! * [`canonical`]: canonical-module generators, type and a-invariant.
//! * [`hilbert`]: Hilbert function, Ehrhart counts and the h-vector.
//!
//! Everything here is `no_std` (with `alloc`); file formats and the command
//! line live in the `transpoly` crate.

#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod canonical;
pub mod combinat;
pub mod cone;
pub mod error;
pub mod feasibility;
pub mod hilbert;
pub mod linalg;
pub mod presentation;

pub use canonical::{CanonicalGenerators, TypeReport};
pub use cone::{ConeRepresentation, NormalLabel, NormalVector};
pub use error::Error;
pub use hilbert::{ConjectureMode, ConjectureOutcome, ConjectureReport, HilbertSummary};
pub use linalg::{IntegerMatrix, LatticeBasis};
pub use presentation::{ExponentVector, FamilyCase, FamilyParams, Presentation};

pub type Result<T> = core::result::Result<T, Error>;
