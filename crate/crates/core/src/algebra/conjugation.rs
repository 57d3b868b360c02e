//! Wigner operators, the charge-conjugation matrix and the Majorana unitary.
//!
//! All block forms below are written in the chiral basis Ψ = (φ_R, φ_L).

use num_complex::Complex64;

use super::matrix::{ComplexMatrix4, Matrix2, I, ONE, ZERO};

/// Θ_{1/2} = −iσ₂.
pub fn wigner_theta() -> Matrix2 {
    Matrix2::new(ZERO, -ONE, ONE, ZERO)
}

/// Ξ_{1/2}(φ) = diag(e^{iφ}, e^{−iφ}).
pub fn wigner_xi(phi: f64) -> Matrix2 {
    Matrix2::new(Complex64::from_polar(1.0, phi), ZERO, ZERO, Complex64::from_polar(1.0, -phi))
}

/// The pair (Θ_{1/2}, Ξ_{1/2}(φ)) at a fixed azimuth.
#[derive(Debug, Clone, Copy)]
pub struct WignerPair {
    pub theta: Matrix2,
    pub xi: Matrix2,
    pub phi: f64,
}

impl WignerPair {
    pub fn new(phi: f64) -> Self {
        Self { theta: wigner_theta(), xi: wigner_xi(phi), phi }
    }

    pub fn xi_inverse(&self) -> Matrix2 {
        wigner_xi(-self.phi)
    }
}

/// C with off-diagonal blocks iΘ and −iΘ, as it enters the antilinear
/// charge conjugation operator C·K (K = complex conjugation).
pub fn charge_conjugation_chiral() -> ComplexMatrix4 {
    let t = wigner_theta();
    ComplexMatrix4::from_blocks(Matrix2::zero(), t * I, t * (-I), Matrix2::zero())
}

/// The chiral → Majorana unitary
///
/// ```text
///     1 ⎡ 1 − iΘ    1 + iΘ ⎤
/// U = - ⎢                  ⎥
///     2 ⎣ −1 − iΘ   1 − iΘ ⎦
/// ```
///
/// The ½ prefactor is kept only if it yields a unitary matrix; otherwise the
/// matrix is rescaled by the common diagonal of U U†.
pub fn majorana_unitary() -> ComplexMatrix4 {
    let raw = majorana_unitary_block_form();
    let gram = raw * raw.dagger();
    if gram.approx_eq(&ComplexMatrix4::identity(), 1e-14) {
        raw
    } else {
        raw * (1.0 / gram.0[0][0].re.sqrt())
    }
}

/// The block form exactly as written, without any normalization check.
pub fn majorana_unitary_block_form() -> ComplexMatrix4 {
    let it = wigner_theta() * I;
    let one = Matrix2::identity();
    ComplexMatrix4::from_blocks(one - it, one + it, one * -1.0 - it, one - it) * 0.5
}

/// Identities satisfied by C, evaluated numerically against a γ set in the
/// chiral representation.
#[derive(Debug, Clone)]
pub struct ConjugationReport {
    /// ‖C C⁻¹ − 1‖
    pub inverse_defect: f64,
    /// C² = sign · 1; `None` if C² is not proportional to the identity.
    pub square_sign: Option<f64>,
    /// max_μ ‖C γ^μ* C⁻¹ + γ^μ‖ (antilinear conjugation flips every γ)
    pub conjugate_flip_defect: f64,
    /// Per μ: ‖C γ^μ C⁻¹ + (γ^μ)ᵀ‖
    pub transpose_flip_defects: [f64; 4],
    /// max_μ ‖(Cγ⁰) γ^μ (Cγ⁰)⁻¹ + (γ^μ)ᵀ‖
    pub transpose_flip_defect_c_gamma0: f64,
    /// ‖U C U⁻¹ + C‖, the literal similarity statement
    pub similarity_minus_c_defect: f64,
    /// ‖U C U⁻¹ − C‖
    pub similarity_plus_c_defect: f64,
    /// ‖U C Uᵀ + 1‖: the antilinear operator C·K becomes −K in the Majorana basis
    pub antilinear_to_minus_k_defect: f64,
}

pub fn conjugation_report(gammas_chiral: &[ComplexMatrix4; 4], u: &ComplexMatrix4) -> ConjugationReport {
    let cm = charge_conjugation_chiral();
    let c_inv = cm.inverse().expect("C is invertible");
    let id = ComplexMatrix4::identity();
    let sq = cm * cm;
    let square_sign = [1.0, -1.0].into_iter().find(|&s| sq.approx_eq(&(id * s), 1e-12));
    let conjugate_flip_defect = gammas_chiral
        .iter()
        .map(|g| (cm * g.conj() * c_inv + *g).max_norm())
        .fold(0.0, f64::max);
    let transpose_flip_defects = std::array::from_fn(|mu| {
        let g = gammas_chiral[mu];
        (cm * g * c_inv + g.transpose()).max_norm()
    });
    let cg0 = cm * gammas_chiral[0];
    let cg0_inv = cg0.inverse().expect("Cγ⁰ invertible");
    let transpose_flip_defect_c_gamma0 = gammas_chiral
        .iter()
        .map(|g| (cg0 * *g * cg0_inv + g.transpose()).max_norm())
        .fold(0.0, f64::max);
    let u_inv = u.dagger();
    let sim = *u * cm * u_inv;
    ConjugationReport {
        inverse_defect: (cm * c_inv).distance(&id),
        square_sign,
        conjugate_flip_defect,
        transpose_flip_defects,
        transpose_flip_defect_c_gamma0,
        similarity_minus_c_defect: (sim + cm).max_norm(),
        similarity_plus_c_defect: (sim - cm).max_norm(),
        antilinear_to_minus_k_defect: (*u * cm * u.transpose() + id).max_norm(),
    }
}
