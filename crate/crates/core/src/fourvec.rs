//! Four-vectors with a metric tag.
//!
//! Components are stored in the same order as [`GammaSet::mu`]:
//! Minkowski `(p⁰, p¹, p², p³)`, Euclidean `(p₁, p₂, p₃, p₄)` with p₄ = iE.
//!
//! [`GammaSet::mu`]: crate::algebra::GammaSet

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::Metric;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourVector {
    pub components: [Complex64; 4],
    pub metric: Metric,
}

impl FourVector {
    pub fn new(components: [Complex64; 4], metric: Metric) -> Self {
        Self { components, metric }
    }

    pub fn minkowski(e: f64, p: [f64; 3]) -> Self {
        Self::new([e, p[0], p[1], p[2]].map(|x| Complex64::new(x, 0.0)), Metric::Minkowski)
    }

    /// Positive-energy on-shell momentum, E = √(p² + m²).
    pub fn on_shell(p: [f64; 3], m: f64) -> Result<Self> {
        if !(m > 0.0) {
            return Err(Error::NonPositiveMass(m));
        }
        Ok(Self::minkowski(energy(p, m), p))
    }

    /// Euclidean image of a Minkowski vector: (p¹, p², p³, i p⁰).
    pub fn to_euclidean(&self) -> Self {
        match self.metric {
            Metric::Euclidean => *self,
            Metric::Minkowski => {
                let c = self.components;
                Self::new([c[1], c[2], c[3], c[0] * Complex64::i()], Metric::Euclidean)
            }
        }
    }

    pub fn to_minkowski(&self) -> Self {
        match self.metric {
            Metric::Minkowski => *self,
            Metric::Euclidean => {
                let c = self.components;
                Self::new([-c[3] * Complex64::i(), c[0], c[1], c[2]], Metric::Minkowski)
            }
        }
    }

    pub fn time(&self) -> Complex64 {
        self.components[self.metric.time_index()]
    }

    /// Real spatial part (imaginary parts dropped).
    pub fn spatial(&self) -> [f64; 3] {
        std::array::from_fn(|k| self.components[self.metric.space_index(k + 1)].re)
    }

    pub fn dot(&self, other: &Self) -> Complex64 {
        assert_eq!(self.metric, other.metric, "metric mismatch in dot product");
        let g = self.metric.diagonal();
        (0..4).map(|k| self.components[k] * other.components[k] * g[k]).sum()
    }

    pub fn square(&self) -> Complex64 {
        self.dot(self)
    }
}

pub fn norm3(p: [f64; 3]) -> f64 {
    p.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub fn energy(p: [f64; 3], m: f64) -> f64 {
    (norm3(p).powi(2) + m * m).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn on_shell_invariant_mass() {
        let p = FourVector::on_shell([0.3, -0.4, 1.2], 0.7).unwrap();
        assert!((p.square().re - 0.49).abs() < 1e-14);
        let e = p.to_euclidean();
        assert!((e.square().re + 0.49).abs() < 1e-14);
        assert!(e.to_minkowski().components.iter().zip(p.components).all(|(a, b)| (a - b).norm() < 1e-15));
    }

    #[test]
    fn rejects_bad_mass() {
        assert_eq!(FourVector::on_shell([0.0; 3], 0.0), Err(Error::NonPositiveMass(0.0)));
    }
}
