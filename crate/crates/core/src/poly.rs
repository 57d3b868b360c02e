//! Matrix-valued polynomials in the four momentum variables.
//!
//! A [`PolyOperator`] is Σ_α C_α p^α with C_α a 4×4 complex matrix and α a
//! multi-index over the storage-order components of a [`FourVector`]. It is
//! the momentum-space image (i∂_μ → p_μ on e^{−ip·x}) of every differential
//! operator in the crate.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::algebra::dense::{eigenvalues, CMatrix};
use crate::algebra::{ComplexMatrix4, GammaSet, Metric};
use crate::error::{Error, Result};
use crate::fourvec::FourVector;

pub type Exponent = [u8; 4];

/// Coefficients below this modulus are dropped after arithmetic.
const PRUNE: f64 = 0.0;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolyOperator {
    pub terms: BTreeMap<Exponent, ComplexMatrix4>,
}

fn unit(k: usize) -> Exponent {
    let mut e = [0; 4];
    e[k] = 1;
    e
}

fn add_exp(a: Exponent, b: Exponent) -> Exponent {
    std::array::from_fn(|k| a[k] + b[k])
}

fn degree_of(e: &Exponent) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

impl PolyOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(m: ComplexMatrix4) -> Self {
        let mut p = Self::zero();
        p.add_term([0; 4], m);
        p
    }

    pub fn scalar(s: f64) -> Self {
        Self::constant(ComplexMatrix4::identity() * s)
    }

    pub fn scalar_c(s: Complex64) -> Self {
        Self::constant(ComplexMatrix4::identity() * s)
    }

    pub fn monomial(e: Exponent, m: ComplexMatrix4) -> Self {
        let mut p = Self::zero();
        p.add_term(e, m);
        p
    }

    /// p̂ = g_μν γ^μ p^ν.
    pub fn slash(g: &GammaSet) -> Self {
        let diag = g.metric_diag();
        let mut p = Self::zero();
        for k in 0..4 {
            p.add_term(unit(k), g.mu[k] * diag[k]);
        }
        p
    }

    /// p² · 1 in the given metric.
    pub fn square(metric: Metric) -> Self {
        let diag = metric.diagonal();
        let mut p = Self::zero();
        for k in 0..4 {
            p.add_term(add_exp(unit(k), unit(k)), ComplexMatrix4::identity() * diag[k]);
        }
        p
    }

    pub fn add_term(&mut self, e: Exponent, m: ComplexMatrix4) {
        let entry = self.terms.entry(e).or_insert_with(ComplexMatrix4::zero);
        *entry += m;
        if entry.max_norm() <= PRUNE {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|m| *m = *m * s);
        out
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Left-multiply every coefficient by a constant matrix.
    pub fn left_mul(&self, m: &ComplexMatrix4) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|c| *c = *m * *c);
        out
    }

    pub fn right_mul(&self, m: &ComplexMatrix4) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|c| *c = *c * *m);
        out
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().filter(|(_, m)| m.max_norm() > 0.0).map(|(e, _)| degree_of(e)).max().unwrap_or(0)
    }

    pub fn coefficient(&self, e: Exponent) -> ComplexMatrix4 {
        self.terms.get(&e).copied().unwrap_or_default()
    }

    /// Largest coefficient-wise max-norm difference.
    pub fn distance(&self, other: &Self) -> f64 {
        let mut keys: Vec<&Exponent> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().map(|e| self.coefficient(*e).distance(&other.coefficient(*e))).fold(0.0, f64::max)
    }

    pub fn max_coefficient(&self) -> f64 {
        self.terms.values().map(|m| m.max_norm()).fold(0.0, f64::max)
    }

    /// [self, m] coefficient-wise.
    pub fn commutator_with(&self, m: &ComplexMatrix4) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.commutator(m));
        }
        out
    }

    pub fn eval(&self, p: &[Complex64; 4]) -> ComplexMatrix4 {
        self.terms.iter().fold(ComplexMatrix4::zero(), |acc, (e, c)| {
            let w: Complex64 = (0..4).map(|k| p[k].powu(e[k] as u32)).product();
            acc + *c * w
        })
    }

    pub fn eval_at(&self, p: &FourVector) -> ComplexMatrix4 {
        self.eval(&p.components)
    }

    pub fn det_at(&self, p: &[Complex64; 4]) -> Complex64 {
        self.eval(p).det()
    }

    /// Collapse to a univariate matrix polynomial in component `var`, the
    /// other components fixed to `fixed`. Returns coefficients by power.
    pub fn univariate(&self, var: usize, fixed: &[Complex64; 4]) -> Vec<ComplexMatrix4> {
        let d = self.terms.keys().map(|e| e[var] as usize).max().unwrap_or(0);
        let mut out = vec![ComplexMatrix4::zero(); d + 1];
        for (e, c) in &self.terms {
            let w: Complex64 = (0..4).filter(|&k| k != var).map(|k| fixed[k].powu(e[k] as u32)).product();
            out[e[var] as usize] += *c * w;
        }
        while out.len() > 1 && out.last().map(|m| m.max_norm() == 0.0).unwrap_or(false) {
            out.pop();
        }
        out
    }

    /// All roots of det P(p_var) = 0 with the other components fixed, by block
    /// companion linearization.
    pub fn roots_in(&self, var: usize, fixed: &[Complex64; 4]) -> Result<Vec<Complex64>> {
        companion_roots(&self.univariate(var, fixed))
    }
}

/// Eigenvalues of the block companion matrix of Σ_k C_k x^k.
pub fn companion_roots(coeffs: &[ComplexMatrix4]) -> Result<Vec<Complex64>> {
    let d = coeffs.len().saturating_sub(1);
    if d == 0 {
        return Ok(Vec::new());
    }
    let lead_inv = coeffs[d].inverse().ok_or(Error::SingularLeadingCoefficient)?;
    if coeffs[d].det().norm() < 1e-14 * coeffs[d].max_norm().powi(4) {
        return Err(Error::SingularLeadingCoefficient);
    }
    let n = 4 * d;
    let mut comp = CMatrix::zeros(n, n);
    for blk in 0..d - 1 {
        for k in 0..4 {
            comp[(4 * blk + k, 4 * (blk + 1) + k)] = Complex64::new(1.0, 0.0);
        }
    }
    for (blk, c) in coeffs[..d].iter().enumerate() {
        let b = -(lead_inv * *c);
        for r in 0..4 {
            for k in 0..4 {
                comp[(4 * (d - 1) + r, 4 * blk + k)] = b.0[r][k];
            }
        }
    }
    Ok(eigenvalues(&comp))
}

impl Add for PolyOperator {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, m) in rhs.terms {
            self.add_term(e, m);
        }
        self
    }
}

impl Sub for PolyOperator {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for PolyOperator {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale_real(-1.0)
    }
}

impl Mul for &PolyOperator {
    type Output = PolyOperator;
    fn mul(self, rhs: &PolyOperator) -> PolyOperator {
        let mut out = PolyOperator::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(*ea, *eb), *ca * *cb);
            }
        }
        out
    }
}

impl Mul for PolyOperator {
    type Output = PolyOperator;
    fn mul(self, rhs: PolyOperator) -> PolyOperator {
        &self * &rhs
    }
}

/// A rows × cols grid of 4×4 polynomial blocks acting on stacked 4-spinors.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockOperator {
    pub rows: usize,
    pub cols: usize,
    /// Row-major.
    pub blocks: Vec<PolyOperator>,
}

impl BlockOperator {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, blocks: vec![PolyOperator::zero(); rows * cols] }
    }

    pub fn block(&self, r: usize, c: usize) -> &PolyOperator {
        &self.blocks[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, op: PolyOperator) {
        self.blocks[r * self.cols + c] = op;
    }

    /// Composition with a constant block matrix on the right.
    pub fn compose_constant(&self, rhs: &[Vec<ComplexMatrix4>]) -> Self {
        let cols = rhs.first().map(Vec::len).unwrap_or(0);
        assert_eq!(rhs.len(), self.cols, "block shapes do not match");
        let mut out = Self::zero(self.rows, cols);
        for r in 0..self.rows {
            for c in 0..cols {
                let sum = (0..self.cols)
                    .fold(PolyOperator::zero(), |acc, k| acc + self.block(r, k).right_mul(&rhs[k][c]));
                out.set(r, c, sum);
            }
        }
        out
    }

    pub fn eval(&self, p: &[Complex64; 4]) -> CMatrix {
        let evals: Vec<ComplexMatrix4> = self.blocks.iter().map(|b| b.eval(p)).collect();
        CMatrix::from_fn(4 * self.rows, 4 * self.cols, |r, c| evals[(r / 4) * self.cols + c / 4].0[r % 4][c % 4])
    }

    pub fn distance(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.distance(b)).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_gammas, Representation};

    #[test]
    fn slash_squared_is_p_squared() {
        for metric in [Metric::Minkowski, Metric::Euclidean] {
            let g = build_gammas(Representation::Chiral, metric);
            let s = PolyOperator::slash(&g);
            assert!((&s * &s).distance(&PolyOperator::square(metric)) < 1e-12);
        }
    }

    #[test]
    fn dirac_operator_roots_at_rest() {
        let g = build_gammas(Representation::DiracStandard, Metric::Minkowski);
        let op = PolyOperator::slash(&g) - PolyOperator::scalar(2.0);
        let zero = [Complex64::new(0.0, 0.0); 4];
        let mut roots: Vec<f64> = op.roots_in(0, &zero).unwrap().iter().map(|z| z.re).collect();
        roots.sort_by(f64::total_cmp);
        let expected = [-2.0, -2.0, 2.0, 2.0];
        for (r, e) in roots.iter().zip(expected) {
            assert!((r - e).abs() < 1e-12);
        }
    }

    #[test]
    fn eval_matches_det_factorization() {
        let g = build_gammas(Representation::Chiral, Metric::Minkowski);
        let op = PolyOperator::slash(&g) - PolyOperator::scalar(1.0);
        let p = FourVector::minkowski(1.7, [0.2, -0.5, 0.9]);
        let p2 = p.square();
        // det(p̂ − m) = (p² − m²)²
        assert!((op.det_at(&p.components) - (p2 - 1.0).powu(2)).norm() < 1e-12);
    }
}
