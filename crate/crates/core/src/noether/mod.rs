//! Lagrangian densities, Noether invariants and their mode-sum coefficients
//! for the second-order spinor Lagrangian, in Euclidean variables.

pub mod density;
pub mod invariants;
pub mod modes;
pub mod params;
pub mod variation;

pub use invariants::{
    alpha3_charge_bilinear, branch_masses, charge_density_samples, euler_lagrange_residual, invariants,
    lagrangian_density, mode_charge_coefficient, mode_hamiltonian_coefficient, mode_sums, quadrature,
    spin_tensor_sample, InvariantReport,
};
pub use modes::{anticommutator_normalization, Mode, ModeSet};
pub use params::{EuclideanCouplings, LagrangianParams};
pub use variation::{variation_report, VariationReport};
