//! Complex 4×4 matrix arithmetic and the representation-dependent constant
//! matrices: γ_μ, γ⁵, σ_μν, C, Θ, Ξ, the Majorana unitary and the O(4,2)
//! generators.

pub mod conformal;
pub mod conjugation;
pub mod dense;
pub mod gammas;
pub mod matrix;

pub use conformal::{conformal_generators, generator, ConformalGenerators};
pub use conjugation::{
    charge_conjugation_chiral, conjugation_report, majorana_unitary, wigner_theta, wigner_xi,
    ConjugationReport, WignerPair,
};
pub use gammas::{build_gammas, charge_conjugation_matrix, sigma_tensor, GammaSet, Metric, Representation};
pub use matrix::{c, ComplexMatrix4, Matrix2, Spinor, Spinor2, I, ONE, ZERO};
