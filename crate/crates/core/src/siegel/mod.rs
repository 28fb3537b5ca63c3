//! Degree-2 Siegel modular forms: half-integral indices and their
//! reduction, Eisenstein coefficients, expansions, Phi-operator and Hecke
//! operators.

mod eisenstein;
mod expansion;
mod hecke;
mod index;

pub use eisenstein::{cohen_h, eisenstein_coeff, eisenstein_coeff_lnorm, eisenstein_normalizer};
pub use expansion::{
    eisenstein_expansion, phi_operator, tabulate, FourierCoefficients, SiegelEisenstein, SiegelExpansion,
};
pub use hecke::{eigen_ratio, hecke_coefficient, hecke_tp_degree2, EigenRatio};
pub use index::{reduce_index, reduced, reduced_by_disc, reduced_indices, FourierIndex, Unimodular};
