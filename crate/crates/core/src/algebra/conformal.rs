//! The 15 generators N_ab = (i/2) γ_a γ_b, γ_a ∈ {γ⁰, γ¹, γ², γ³, γ⁵, i·1}.

use num_complex::Complex64;

use super::dense::{least_squares, rank, CMatrix};
use super::gammas::GammaSet;
use super::matrix::{ComplexMatrix4, I};
use crate::error::{Error, Result};

pub const SLOT_COUNT: usize = 6;

fn slots(g: &GammaSet) -> [ComplexMatrix4; SLOT_COUNT] {
    [g.mu[0], g.mu[1], g.mu[2], g.mu[3], g.five, ComplexMatrix4::identity() * I]
}

/// N_ab for a single ordered pair. The sixth slot is the scalar i·1, so
/// N_a6 = (i/2) γ_a (i·1) = −γ_a / 2.
pub fn generator(g: &GammaSet, a: usize, b: usize) -> Result<ComplexMatrix4> {
    if a >= SLOT_COUNT {
        return Err(Error::IndexOutOfRange(a));
    }
    if b >= SLOT_COUNT {
        return Err(Error::IndexOutOfRange(b));
    }
    if a == b {
        return Err(Error::RepeatedIndex(a));
    }
    let s = slots(g);
    Ok(s[a] * s[b] * (I * 0.5))
}

#[derive(Debug, Clone)]
pub struct ConformalGenerators {
    /// (a, b) with a < b, in lexicographic order.
    pub labels: Vec<(usize, usize)>,
    pub matrices: Vec<ComplexMatrix4>,
}

pub fn conformal_generators(g: &GammaSet) -> ConformalGenerators {
    let mut labels = Vec::with_capacity(15);
    let mut matrices = Vec::with_capacity(15);
    for a in 0..SLOT_COUNT {
        for b in a + 1..SLOT_COUNT {
            labels.push((a, b));
            matrices.push(generator(g, a, b).expect("a < b"));
        }
    }
    ConformalGenerators { labels, matrices }
}

fn as_columns(ms: &[ComplexMatrix4]) -> CMatrix {
    let flat: Vec<[Complex64; 16]> = ms.iter().map(|m| m.flatten()).collect();
    CMatrix::from_fn(16, ms.len(), |r, k| flat[k][r])
}

impl ConformalGenerators {
    /// Number of linearly independent generators.
    pub fn independent_count(&self) -> usize {
        rank(&as_columns(&self.matrices), 1e-10)
    }

    /// Worst least-squares residual of [N_ab, N_cd] against span{N, 1}.
    pub fn closure_residual(&self) -> f64 {
        let mut basis = self.matrices.clone();
        basis.push(ComplexMatrix4::identity());
        let a = as_columns(&basis);
        let mut worst: f64 = 0.0;
        for (i, x) in self.matrices.iter().enumerate() {
            for y in &self.matrices[i + 1..] {
                let (_, r) = least_squares(&a, &x.commutator(y).flatten());
                worst = worst.max(r);
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gammas::{build_gammas, Metric, Representation};

    #[test]
    fn fifteen_independent_generators() {
        let gens = conformal_generators(&build_gammas(Representation::Chiral, Metric::Minkowski));
        assert_eq!(gens.matrices.len(), 15);
        assert_eq!(gens.independent_count(), 15);
    }

    #[test]
    fn closure_under_commutation() {
        for rep in Representation::ALL {
            let gens = conformal_generators(&build_gammas(rep, Metric::Minkowski));
            assert!(gens.closure_residual() < 1e-10);
        }
    }

    #[test]
    fn repeated_index_rejected() {
        let g = build_gammas(Representation::Chiral, Metric::Minkowski);
        assert_eq!(generator(&g, 2, 2), Err(Error::RepeatedIndex(2)));
        assert_eq!(generator(&g, 0, 6), Err(Error::IndexOutOfRange(6)));
    }

    #[test]
    fn sixth_slot_convention() {
        let g = build_gammas(Representation::Chiral, Metric::Minkowski);
        let n = generator(&g, 1, 5).unwrap();
        assert!(n.approx_eq(&(g.mu[1] * -0.5), 1e-15));
    }
}
