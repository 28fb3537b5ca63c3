//! Exact computation of degree-2 Ikeda (Saito-Kurokawa) lifts from level-one
//! Hecke eigenforms, together with the machinery around them: Siegel
//! Eisenstein coefficients, interpolation of local polynomials across
//! weights, Fourier-Jacobi and theta decompositions, octonion/Jordan
//! arithmetic and symbolic standard L-factor identities.

pub mod arith;
pub mod elliptic;
pub mod error;
pub mod jacobi;
pub mod jordan;
pub mod lfactor;
pub mod lift;
pub mod siegel;

pub use error::{Error, Result};
