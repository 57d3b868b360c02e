//! Momentum-space images of the Barut-type operators.
//!
//! Plane waves are e^{−ip·x} in the Minkowski metric, so i∂_μ → p_μ and
//! ∂_μ∂^μ → −p². Operators are built from p̂ = γ^μp_μ and p² written in the
//! variables of the requested metric: in Euclidean variables (p₄ = iE)
//! p̂ = −i γ_μp_μ and p² = −p_μp_μ.

use num_complex::Complex64;

use super::params::{BarutParams, CanonicalParams};
use crate::algebra::{build_gammas, GammaSet, Metric, Representation};
use crate::poly::PolyOperator;

/// p̂ = γ^μ p_μ expressed in the variables of `g.metric`.
pub fn p_slash(g: &GammaSet) -> PolyOperator {
    let s = PolyOperator::slash(g);
    match g.metric {
        Metric::Minkowski => s,
        Metric::Euclidean => s.scale(Complex64::new(0.0, -1.0)),
    }
}

/// p² = p_μ p^μ (Minkowski invariant) in the variables of `metric`.
pub fn p_square(metric: Metric) -> PolyOperator {
    let s = PolyOperator::square(metric);
    match metric {
        Metric::Minkowski => s,
        Metric::Euclidean => -s,
    }
}

/// c₁ γ^μ∂_μ + c₂ ∂_μ∂^μ + c₀ in coordinate space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoordinateOperator {
    pub slash: Complex64,
    pub box_: Complex64,
    pub one: Complex64,
}

impl CoordinateOperator {
    pub fn new(slash: Complex64, box_: Complex64, one: Complex64) -> Self {
        Self { slash, box_, one }
    }

    /// Action on e^{−ip·x} (∂ → −ip).
    pub fn on_positive_frequency(&self, g: &GammaSet) -> PolyOperator {
        self.image(g, Complex64::new(0.0, -1.0))
    }

    /// Action from the right on e^{+ip·x} (∂ → +ip).
    pub fn on_negative_frequency(&self, g: &GammaSet) -> PolyOperator {
        self.image(g, Complex64::new(0.0, 1.0))
    }

    fn image(&self, g: &GammaSet, d: Complex64) -> PolyOperator {
        p_slash(g).scale(self.slash * d) + p_square(g.metric).scale(self.box_ * d * d) + PolyOperator::scalar_c(self.one)
    }
}

/// p̂ − α₂p² − κ.
pub fn barut_operator(c: &CanonicalParams, rep: Representation, metric: Metric) -> PolyOperator {
    let g = build_gammas(rep, metric);
    p_slash(&g) - p_square(metric).scale_real(c.alpha2) - PolyOperator::scalar(c.kappa)
}

/// 2a p̂/m − a²p²/m² + b² − 1.
pub fn superposition_operator(p: &BarutParams, rep: Representation, metric: Metric) -> PolyOperator {
    let g = build_gammas(rep, metric);
    let (a, m) = (p.a, p.m);
    p_slash(&g).scale_real(2.0 * a / m) - p_square(metric).scale_real(a * a / (m * m))
        + PolyOperator::scalar(p.b * p.b - 1.0)
}

/// Coordinate form of the superposition operator:
/// 2a iγ^μ∂_μ/m + a²∂^μ∂_μ/m² + b² − 1.
pub fn superposition_coordinate(p: &BarutParams) -> CoordinateOperator {
    CoordinateOperator::new(
        Complex64::new(0.0, 2.0 * p.a / p.m),
        Complex64::new(p.a * p.a / (p.m * p.m), 0.0),
        Complex64::new(p.b * p.b - 1.0, 0.0),
    )
}

/// a p̂/m − 1 − s b: s = +1 gives mass m(1 + b)/a, s = −1 gives m(1 − b)/a.
pub fn split_factor(p: &BarutParams, s: f64, rep: Representation, metric: Metric) -> PolyOperator {
    let g = build_gammas(rep, metric);
    p_slash(&g).scale_real(p.a / p.m) - PolyOperator::scalar(1.0 + s * p.b)
}

/// Largest coefficient of (a p̂/m − 1 − b)(a p̂/m − 1 + b) + the superposition operator.
pub fn factorization_defect(p: &BarutParams, rep: Representation, metric: Metric) -> f64 {
    let prod = &split_factor(p, 1.0, rep, metric) * &split_factor(p, -1.0, rep, metric);
    (prod + superposition_operator(p, rep, metric)).max_coefficient()
}
