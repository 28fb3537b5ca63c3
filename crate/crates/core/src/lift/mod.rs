//! The degree-2 lift: local polynomials interpolated from Eisenstein
//! coefficients across weights, specialized at Satake parameters.

mod engine;
mod laurent;
mod local;
mod maass;

pub use engine::{
    degeneration_check, lift_coeff, lift_expand, lift_formula, DegenerationReport, EisensteinDegeneration, Lift,
    LiftExpansion, ProductReading, Provenance, SatakeSource,
};
pub use laurent::SymLaurent;
pub use local::{
    disc_primes, index_split, interpolate_local_poly, interpolate_unconstrained, interpolation_check, ladders,
    local_factor_at_weight, local_key, unconstrained_ladder, local_poly, local_representative, CompatibleFamilySample,
    InterpolationReport, LocalKey, WeightLadder, BASE_WEIGHT, CACHE_DIR_ENV,
};
pub use maass::{maass_check, maass_relation, MaassExponentResult, MaassReport};
