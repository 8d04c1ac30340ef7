//! A four-component hypercomplex algebra over complex scalars.
//!
//! The central operation is a non-commutative, non-associative product on
//! vectors `(t, x, y, z)` whose norm — the plain sum of squared components,
//! without conjugation — is multiplicative. That single fact buys exact
//! two-sided inverses, closed-form left/right factor solvers, a quadratic
//! equation solver, and a rotation engine in which one sandwich formula
//! covers classical rotations, Lorentz boosts, and mirror reflections.
//!
//! The crate also ships a randomized identity suite ([`verify`]) and an
//! instrumented operation-count benchmark ([`bench`]) comparing the
//! 4-component composition against 3×3 matrix composition.

pub mod basis;
pub mod bench;
pub mod error;
pub mod fourvector;
pub mod kernels;
pub mod matrix;
pub mod rotation;
pub mod scalar;
pub mod solve;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use fourvector::Fourvector;
pub use scalar::ComplexScalar;
