//! Finite-dimensional formally real Jordan algebras and their quantum
//! mechanics.
//!
//! The crate constructs the five classes of simple formally real Jordan
//! algebras — spin factors J(Q), Hermitian matrices over ℝ, ℂ and ℍ, and the
//! exceptional 27-dimensional algebra of 3×3 octonionic Hermitian matrices —
//! and implements the machinery a quantum formulation needs on top of them:
//!
//! * spectral decomposition into idempotents and Jordan frames of primitive
//!   idempotents ([`spectral`]),
//! * density elements, expectation values and purity ([`states`]),
//! * derivations D = [L_x, L_y], associator-driven time evolution and the
//!   equivalent commutator picture for the complex Hermitian class
//!   ([`dynamics`]),
//! * a seeded property suite that verifies every algebraic identity the
//!   construction is supposed to satisfy ([`check`]).
//!
//! See the `examples/` directory for one runnable program per capability,
//! and the `jordanalg` binary for a scriptable CLI over the same machinery.

pub mod algebra;
pub mod check;
pub mod composition;
pub mod config;
pub mod dynamics;
pub mod error;
pub mod realization;
pub mod spectral;
pub mod states;

pub use algebra::{associator, Algebra, AlgebraClass, AlgebraDescriptor, AlgebraSpec, Element};
pub use composition::{CompositionScalar, Level};
pub use config::Tolerances;
pub use error::{JordanError, Result};
pub use realization::CompositionMatrix;
