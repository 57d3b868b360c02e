//! Second- and third-order Barut operators, their spectra and the lepton
//! mass formulas.

pub mod field;
pub mod leptons;
pub mod operators;
pub mod params;
pub mod spectrum;
pub mod third_order;

pub use field::{field_equation_pair, FieldEquationPair};
pub use leptons::{lepton_table, muon_mass, tau_mass, tau_mass_with, LeptonTable};
pub use operators::{
    barut_operator, superposition_coordinate, superposition_operator, factorization_defect, p_slash, p_square, split_factor,
    CoordinateOperator,
};
pub use params::{alpha2_physical, param_map, param_map_inverse, BarutParams, CanonicalParams};
pub use spectrum::{
    canonical_masses, closed_form_masses, distinct_masses, null_dimensions, second_order_spectrum,
    second_order_spectrum_in, MassState,
    SpectrumReport,
};
pub use third_order::{
    coupled_system, determinant_ratio, third_order_operator, Branch, CoupledSystem, DeterminantRatioReport,
    ThirdOrder,
};
