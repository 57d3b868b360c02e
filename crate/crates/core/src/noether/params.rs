use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Couplings of
///
/// ```text
/// L = α₁[Ψ̄γ^μ∂_μΨ − ∂_μΨ̄γ^μΨ] − α₄Ψ̄Ψ + α₂ ∂_μΨ̄∂^μΨ + α₃ ∂_μΨ̄σ^{μν}∂_νΨ
/// ```
///
/// stored in the Minkowski form. [`LagrangianParams::euclidean`] gives the
/// couplings multiplying the same structures once x₄ = it and the Hermitian
/// γ₄ = γ⁰, γ_k = −iγᵏ are used.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LagrangianParams {
    pub alpha1: Complex64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub alpha4: f64,
}

/// Couplings in the Euclidean form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EuclideanCouplings {
    pub alpha1: Complex64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub alpha4: f64,
}

impl LagrangianParams {
    pub fn dirac(m: f64) -> Self {
        Self { alpha1: Complex64::new(0.0, 0.5), alpha2: 0.0, alpha3: 0.0, alpha4: m }
    }

    pub fn new(alpha1: Complex64, alpha2: f64, alpha3: f64, alpha4: f64) -> Self {
        Self { alpha1, alpha2, alpha3, alpha4 }
    }

    /// With ∂_t = i∂₄ and γᵏ = iγ_k, γ^μ∂_μ = i γ_μ∂_μ (Euclidean sum), so α₁
    /// picks up a factor i, both second-derivative couplings flip sign and α₄
    /// is unchanged.
    pub fn euclidean(&self) -> EuclideanCouplings {
        EuclideanCouplings {
            alpha1: self.alpha1 * Complex64::i(),
            alpha2: -self.alpha2,
            alpha3: -self.alpha3,
            alpha4: self.alpha4,
        }
    }

    /// α₄ that puts mass m on shell for the first-order branch, given α₁ and α₂:
    /// −2iα₁ m + α₂ m² − α₄ = 0.
    pub fn on_shell_alpha4(alpha1: Complex64, alpha2: f64, m: f64) -> Complex64 {
        -alpha1 * Complex64::new(0.0, 2.0 * m) + alpha2 * m * m
    }
}
