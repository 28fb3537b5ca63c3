//! Level-one elliptic modular forms.

mod eigen;
mod modular;
mod series;

pub use eigen::{eigenform, ramanujan_gate, satake_power_sum, Eigenform, RamanujanReport, SatakeSymbol};
pub use modular::{cusp_dim, cusp_space_basis, delta, eisenstein_series, hecke_tp, modular_dim};
pub use series::QSeries;

#[cfg(test)]
mod tests;
