//! Exact cohomology of complex Lie algebras relative to subalgebras.
//!
//! Everything is computed over the Gaussian rationals Q(i) with
//! arbitrary-precision arithmetic; there is no floating point anywhere.
//! The crate covers the Chevalley-Eilenberg complex with coefficients,
//! the bigraded spaces attached to a subalgebra, relative (basic)
//! complexes, the associated filtration spectral sequence, Chevalley
//! constructions of the classical small rank-2 root systems with their
//! compact real structures, and consistency checks tying the pieces
//! together.

pub mod config;
pub mod error;
pub mod scalar;
pub mod matrix;
pub mod subspace;
pub mod exterior;
pub mod lie;
pub mod rep;
pub mod cochain;
pub mod bigraded;
pub mod spectral;
pub mod roots;
pub mod theorem;
pub mod files;
pub mod report;
pub mod sampling;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use matrix::Matrix;
pub use subspace::Subspace;
pub use lie::LieAlgebra;
pub use rep::Representation;
