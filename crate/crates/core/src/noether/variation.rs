//! Symbolic Euler–Lagrange variation of a quadratic spinor Lagrangian.
//!
//! A term c (∂^α Ψ̄) Γ (∂^β Ψ) is stored with the multi-indices α, β. The
//! result of varying is a polynomial in ∂_μ with matrix coefficients, held in
//! a [`PolyOperator`] whose variables are read as derivatives rather than
//! momenta.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::params::EuclideanCouplings;
use crate::algebra::{ComplexMatrix4, ONE};
use crate::noether::density::Frame;
use crate::poly::{Exponent, PolyOperator};

#[derive(Debug, Clone, PartialEq)]
pub struct LagrangianTerm {
    pub coefficient: Complex64,
    pub left: Exponent,
    pub matrix: ComplexMatrix4,
    pub right: Exponent,
    /// Which coupling (1..=4) the term belongs to.
    pub coupling: usize,
}

fn unit(k: usize) -> Exponent {
    let mut e = [0; 4];
    e[k] = 1;
    e
}

fn sum(a: Exponent, b: Exponent) -> Exponent {
    std::array::from_fn(|k| a[k] + b[k])
}

fn order(e: &Exponent) -> u8 {
    e.iter().sum()
}

/// The Euclidean Lagrangian as a list of bilinear terms.
pub fn lagrangian_terms(c: &EuclideanCouplings, f: &Frame) -> Vec<LagrangianTerm> {
    let id = ComplexMatrix4::identity();
    let none = [0; 4];
    let mut out = Vec::new();
    for mu in 0..4 {
        out.push(LagrangianTerm { coefficient: c.alpha1, left: none, matrix: f.gamma[mu], right: unit(mu), coupling: 1 });
        out.push(LagrangianTerm { coefficient: -c.alpha1, left: unit(mu), matrix: f.gamma[mu], right: none, coupling: 1 });
        out.push(LagrangianTerm { coefficient: c.alpha2.into(), left: unit(mu), matrix: id, right: unit(mu), coupling: 2 });
        for nu in 0..4 {
            out.push(LagrangianTerm { coefficient: c.alpha3.into(), left: unit(mu), matrix: f.sigma[mu][nu], right: unit(nu), coupling: 3 });
        }
    }
    out.push(LagrangianTerm { coefficient: (-c.alpha4).into(), left: none, matrix: id, right: none, coupling: 4 });
    out
}

/// ∂L/∂Ψ̄ − ∂_μ ∂L/∂(∂_μΨ̄): the operator acting on Ψ.
pub fn vary_bar(terms: &[LagrangianTerm]) -> PolyOperator {
    let mut op = PolyOperator::zero();
    for t in terms {
        let sign = match order(&t.left) {
            0 => ONE,
            1 => -ONE,
            n => panic!("derivative order {n} on Ψ̄ is not supported"),
        };
        op.add_term(sum(t.left, t.right), t.matrix * (t.coefficient * sign));
    }
    op
}

/// ∂L/∂Ψ − ∂_μ ∂L/∂(∂_μΨ): the operator acting on Ψ̄ from the right.
pub fn vary_psi(terms: &[LagrangianTerm]) -> PolyOperator {
    let mut op = PolyOperator::zero();
    for t in terms {
        let sign = match order(&t.right) {
            0 => ONE,
            1 => -ONE,
            n => panic!("derivative order {n} on Ψ is not supported"),
        };
        op.add_term(sum(t.left, t.right), t.matrix * (t.coefficient * sign));
    }
    op
}

/// 2α₁γ_μ∂_μ − α₂∂_μ∂_μ − α₄.
pub fn expected_forward(c: &EuclideanCouplings, f: &Frame) -> PolyOperator {
    let mut op = PolyOperator::scalar_c((-c.alpha4).into());
    for mu in 0..4 {
        op.add_term(unit(mu), f.gamma[mu] * (c.alpha1 * 2.0));
        op.add_term(sum(unit(mu), unit(mu)), ComplexMatrix4::identity() * -c.alpha2);
    }
    op
}

/// Ψ̄[2α₁γ_μ∂⃖_μ + α₂∂⃖_μ∂⃖_μ + α₄].
pub fn expected_conjugate(c: &EuclideanCouplings, f: &Frame) -> PolyOperator {
    let mut op = PolyOperator::scalar_c(c.alpha4.into());
    for mu in 0..4 {
        op.add_term(unit(mu), f.gamma[mu] * (c.alpha1 * 2.0));
        op.add_term(sum(unit(mu), unit(mu)), ComplexMatrix4::identity() * c.alpha2);
    }
    op
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VariationReport {
    /// Coefficient distance between the varied operator on Ψ and the field equation.
    pub forward_defect: f64,
    /// Distance between the varied operator on Ψ̄ and minus the field equation.
    pub conjugate_defect: f64,
    /// Largest coefficient the α₃ terms leave in either equation.
    pub alpha3_contribution: f64,
}

pub fn variation_report(c: &EuclideanCouplings) -> VariationReport {
    let f = Frame::default();
    let terms = lagrangian_terms(c, &f);
    let a3: Vec<LagrangianTerm> = terms.iter().filter(|t| t.coupling == 3).cloned().collect();
    VariationReport {
        forward_defect: vary_bar(&terms).distance(&expected_forward(c, &f)),
        conjugate_defect: vary_psi(&terms).distance(&-expected_conjugate(c, &f)),
        alpha3_contribution: vary_bar(&a3).max_coefficient().max(vary_psi(&a3).max_coefficient()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Representation;
    use crate::barut::field::field_equation_pair;
    use crate::fourvec::FourVector;
    use crate::noether::params::LagrangianParams;

    #[test]
    fn variation_matches_field_equation() {
        let p = LagrangianParams::new(Complex64::new(0.1, 0.6), 0.35, 1.7, 0.8);
        let r = variation_report(&p.euclidean());
        assert!(r.forward_defect < 1e-15);
        assert!(r.conjugate_defect < 1e-15);
        assert_eq!(r.alpha3_contribution, 0.0);
    }

    #[test]
    fn euclidean_variation_matches_minkowski_operator() {
        // On e^{iq·x}, q = (k, iE): ∂ → iq reproduces the Minkowski operator at p = (E, k).
        let p = LagrangianParams::new(Complex64::new(0.0, 0.5), 0.2, 0.0, 1.3);
        let f = Frame::default();
        let op = vary_bar(&lagrangian_terms(&p.euclidean(), &f));
        let pair = field_equation_pair(&p, Representation::Chiral);
        let k = [0.3, -0.7, 0.2];
        let e = 1.9;
        let q = [k[0], k[1], k[2]].map(|v| Complex64::new(0.0, v)).into_iter().chain([Complex64::new(-e, 0.0)]);
        let iq: [Complex64; 4] = q.collect::<Vec<_>>().try_into().unwrap();
        let mk = pair.forward_momentum.eval_at(&FourVector::minkowski(e, k));
        assert!(op.eval(&iq).distance(&mk) < 1e-14);
    }
}
