use num_complex::Complex64;

use super::operators::CoordinateOperator;
use crate::algebra::{build_gammas, Metric, Representation};
use crate::noether::LagrangianParams;
use crate::poly::PolyOperator;

/// The field equation 2α₁γ^μ∂_μ − α₂∂_μ∂^μ − α₄ and its Dirac conjugate
/// Ψ̄[2α₁γ^μ∂⃖_μ + α₂∂⃖_μ∂⃖^μ + α₄].
#[derive(Debug, Clone)]
pub struct FieldEquationPair {
    pub forward: CoordinateOperator,
    pub conjugate: CoordinateOperator,
    /// forward on e^{−ip·x}: −2iα₁p̂ + α₂p² − α₄.
    pub forward_momentum: PolyOperator,
    /// conjugate acting from the right on e^{+ip·x}: 2iα₁p̂ − α₂p² + α₄.
    pub conjugate_momentum: PolyOperator,
}

pub fn field_equation_pair(l: &LagrangianParams, rep: Representation) -> FieldEquationPair {
    let g = build_gammas(rep, Metric::Minkowski);
    let two_a1 = l.alpha1 * 2.0;
    let forward = CoordinateOperator::new(two_a1, Complex64::new(-l.alpha2, 0.0), Complex64::new(-l.alpha4, 0.0));
    let conjugate = CoordinateOperator::new(two_a1, Complex64::new(l.alpha2, 0.0), Complex64::new(l.alpha4, 0.0));
    FieldEquationPair {
        forward_momentum: forward.on_positive_frequency(&g),
        conjugate_momentum: conjugate.on_negative_frequency(&g),
        forward,
        conjugate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barut::operators::p_slash;

    #[test]
    fn dirac_limit() {
        let pair = field_equation_pair(&LagrangianParams::dirac(1.5), Representation::Chiral);
        let g = build_gammas(Representation::Chiral, Metric::Minkowski);
        let dirac = p_slash(&g) - PolyOperator::scalar(1.5);
        assert!(pair.forward_momentum.distance(&dirac) < 1e-15);
        // ū(p̂ − m) = 0 from the right: the conjugate image is −(p̂ − m).
        assert!((pair.conjugate_momentum + dirac).max_coefficient() < 1e-15);
    }

    #[test]
    fn conjugate_sign_pattern() {
        let l = LagrangianParams::new(Complex64::new(0.2, 0.7), 0.4, 0.1, 2.0);
        let pair = field_equation_pair(&l, Representation::Chiral);
        assert_eq!(pair.conjugate.box_.re.signum(), 1.0);
        assert_eq!(pair.conjugate.one.re.signum(), 1.0);
        assert_eq!(pair.forward.box_.re.signum(), -1.0);
        assert_eq!(pair.conjugate.slash, pair.forward.slash);
    }
}
