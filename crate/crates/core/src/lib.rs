//! Exact computation of symmetric Macdonald polynomials, interpolation
//! Macdonald polynomials, and the Fourier pairing, together with machine
//! verification of the identities relating them (orthogonality, norm
//! formula, label-argument symmetry, binomial expansion).
//!
//! All arithmetic is exact: coefficients live in Q(q,t) (symbolic mode) or
//! in Q at a fixed rational point (q0, t0) (numeric mode). Every identity
//! check is equality of canonical forms; there are no tolerances anywhere.

pub mod error;
pub mod field;
pub mod partition;
pub mod sympoly;
pub mod linalg;
pub mod macdonald;
pub mod cache;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, Mode, QtPoly, Rat, Scalar};
pub use partition::{OrderVariant, Partition, SpectralPoint, StripMove};
pub use sympoly::SymPoly;
