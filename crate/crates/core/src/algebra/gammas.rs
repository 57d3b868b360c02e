//! γ matrices in the chiral, Dirac-standard and Majorana bases, for the
//! Minkowski (+,−,−,−) and Euclidean (x₄ = it) metrics.
//!
//! The chiral basis is canonical: Ψ = (φ_R, φ_L) with
//! γ⁰ = [[0, 1], [1, 0]], γᵏ = [[0, −σ_k], [σ_k, 0]], so that
//! p̂ = [[0, p₀ + σ·p], [p₀ − σ·p, 0]] and γ⁵ = diag(1, 1, −1, −1).
//! The other bases are reached with fixed unitaries, Ψ_rep = T Ψ_chiral.
//!
//! Index layout of [`GammaSet::mu`]:
//! * Minkowski: `[γ⁰, γ¹, γ², γ³]` (upper indices)
//! * Euclidean: `[γ₁, γ₂, γ₃, γ₄]` with γ₄ = γ⁰ and γ_k = −iγᵏ (all Hermitian)

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::conjugation::{charge_conjugation_chiral, majorana_unitary};
use super::matrix::{ComplexMatrix4, Matrix2, I};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Chiral,
    DiracStandard,
    Majorana,
}

impl Representation {
    pub const ALL: [Representation; 3] = [Self::Chiral, Self::DiracStandard, Self::Majorana];

    /// Unitary T with Ψ_rep = T Ψ_chiral.
    pub fn from_chiral(self) -> ComplexMatrix4 {
        match self {
            Self::Chiral => ComplexMatrix4::identity(),
            Self::DiracStandard => {
                let one = Matrix2::identity();
                ComplexMatrix4::from_blocks(one, one, one, one * -1.0) * std::f64::consts::FRAC_1_SQRT_2
            }
            Self::Majorana => majorana_unitary(),
        }
    }
}

impl std::str::FromStr for Representation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "chiral" | "weyl" => Ok(Self::Chiral),
            "dirac" | "dirac_standard" | "standard" => Ok(Self::DiracStandard),
            "majorana" => Ok(Self::Majorana),
            other => Err(format!("unknown representation `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Minkowski,
    Euclidean,
}

impl Metric {
    /// Diagonal of the metric tensor in the storage order of [`GammaSet::mu`].
    pub fn diagonal(self) -> [f64; 4] {
        match self {
            Self::Minkowski => [1.0, -1.0, -1.0, -1.0],
            Self::Euclidean => [1.0; 4],
        }
    }

    /// Storage index of the time-like component.
    pub fn time_index(self) -> usize {
        match self {
            Self::Minkowski => 0,
            Self::Euclidean => 3,
        }
    }

    /// Storage index of spatial component k ∈ {1, 2, 3}.
    pub fn space_index(self, k: usize) -> usize {
        match self {
            Self::Minkowski => k,
            Self::Euclidean => k - 1,
        }
    }
}

/// Four γ matrices and γ⁵ for one (representation, metric) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaSet {
    pub rep: Representation,
    pub metric: Metric,
    pub mu: [ComplexMatrix4; 4],
    pub five: ComplexMatrix4,
}

fn chiral_minkowski() -> ([ComplexMatrix4; 4], ComplexMatrix4) {
    let z = Matrix2::zero();
    let one = Matrix2::identity();
    let g0 = ComplexMatrix4::from_blocks(z, one, one, z);
    let gk = |k| {
        let s = Matrix2::pauli(k);
        ComplexMatrix4::from_blocks(z, s * -1.0, s, z)
    };
    let mu = [g0, gk(1), gk(2), gk(3)];
    let five = (mu[0] * mu[1] * mu[2] * mu[3]) * I;
    (mu, five)
}

pub fn build_gammas(rep: Representation, metric: Metric) -> GammaSet {
    let (mink, five) = chiral_minkowski();
    let mu = match metric {
        Metric::Minkowski => mink,
        Metric::Euclidean => [mink[1] * -I, mink[2] * -I, mink[3] * -I, mink[0]],
    };
    let t = rep.from_chiral();
    let td = t.dagger();
    GammaSet { rep, metric, mu: mu.map(|g| t * g * td), five: t * five * td }
}

impl GammaSet {
    pub fn metric_diag(&self) -> [f64; 4] {
        self.metric.diagonal()
    }

    /// p̂ = g_μν γ^μ p^ν for components in storage order.
    pub fn slash(&self, p: &[Complex64; 4]) -> ComplexMatrix4 {
        let g = self.metric_diag();
        (0..4).fold(ComplexMatrix4::zero(), |acc, k| acc + self.mu[k] * (p[k] * g[k]))
    }

    pub fn slash_real(&self, p: &[f64; 4]) -> ComplexMatrix4 {
        self.slash(&p.map(|x| Complex64::new(x, 0.0)))
    }

    /// Largest deviation from {γ_μ, γ_ν} = 2 g_μν over all 16 pairs.
    pub fn clifford_defect(&self) -> f64 {
        let g = self.metric_diag();
        let id = ComplexMatrix4::identity();
        let mut worst: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                let target = if a == b { id * (2.0 * g[a]) } else { ComplexMatrix4::zero() };
                worst = worst.max(self.mu[a].anticommutator(&self.mu[b]).distance(&target));
            }
        }
        worst
    }

    /// max ‖{γ⁵, γ_μ}‖ together with ‖(γ⁵)² − 1‖.
    pub fn gamma5_defect(&self) -> f64 {
        let anti = self.mu.iter().map(|g| self.five.anticommutator(g).max_norm()).fold(0.0, f64::max);
        anti.max((self.five * self.five).distance(&ComplexMatrix4::identity()))
    }

    /// ‖iγ⁰γ¹γ²γ³ − γ⁵‖ for the Minkowski set; for the Euclidean set the
    /// equivalent product −γ₁γ₂γ₃γ₄ is used.
    pub fn gamma5_product_defect(&self) -> f64 {
        let prod = match self.metric {
            Metric::Minkowski => self.mu[0] * self.mu[1] * self.mu[2] * self.mu[3] * I,
            Metric::Euclidean => -(self.mu[0] * self.mu[1] * self.mu[2] * self.mu[3]),
        };
        prod.distance(&self.five)
    }

    /// Charge conjugation matrix of the antilinear operator C·K in this basis:
    /// C_rep = T C Tᵀ.
    pub fn charge_conjugation(&self) -> ComplexMatrix4 {
        charge_conjugation_matrix(self.rep)
    }
}

/// C in representation `rep`. In the chiral basis this is the block
/// form; elsewhere the antilinear C·K is carried along, C_rep = T C Tᵀ.
pub fn charge_conjugation_matrix(rep: Representation) -> ComplexMatrix4 {
    let t = rep.from_chiral();
    t * charge_conjugation_chiral() * t.transpose()
}

/// σ_μν = (i/2)[γ_μ, γ_ν] in storage order.
pub fn sigma_tensor(g: &GammaSet) -> [[ComplexMatrix4; 4]; 4] {
    std::array::from_fn(|a| std::array::from_fn(|b| g.mu[a].commutator(&g.mu[b]) * (I * 0.5)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_for_every_pair() {
        for rep in Representation::ALL {
            for metric in [Metric::Minkowski, Metric::Euclidean] {
                let g = build_gammas(rep, metric);
                assert!(g.clifford_defect() < 1e-12, "{rep:?} {metric:?}");
                assert!(g.gamma5_defect() < 1e-12, "{rep:?} {metric:?}");
                assert!(g.gamma5_product_defect() < 1e-12, "{rep:?} {metric:?}");
            }
        }
    }

    #[test]
    fn majorana_gammas_pure_imaginary() {
        let g = build_gammas(Representation::Majorana, Metric::Minkowski);
        for m in &g.mu {
            assert!(m.max_real_part() < 1e-12);
        }
    }

    #[test]
    fn chiral_gamma5_diagonal() {
        let g = build_gammas(Representation::Chiral, Metric::Minkowski);
        let expected = ComplexMatrix4::from_real([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
        ]);
        assert!(g.five.approx_eq(&expected, 1e-12));
    }

    #[test]
    fn dirac_standard_gamma0_diagonal() {
        let g = build_gammas(Representation::DiracStandard, Metric::Minkowski);
        let expected = ComplexMatrix4::from_real([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
        ]);
        assert!(g.mu[0].approx_eq(&expected, 1e-12));
    }

    #[test]
    fn euclidean_gammas_hermitian() {
        for rep in Representation::ALL {
            let g = build_gammas(rep, Metric::Euclidean);
            for m in &g.mu {
                assert!(m.hermiticity_defect() < 1e-12);
            }
        }
    }

    #[test]
    fn representation_change_is_similarity() {
        let base = build_gammas(Representation::Chiral, Metric::Minkowski);
        let maj = build_gammas(Representation::Majorana, Metric::Minkowski);
        let u = Representation::Majorana.from_chiral();
        for k in 0..4 {
            assert!((u * base.mu[k] * u.inverse().unwrap()).approx_eq(&maj.mu[k], 1e-12));
        }
    }

    #[test]
    fn sigma_antisymmetric_and_traceless() {
        for rep in Representation::ALL {
            let s = sigma_tensor(&build_gammas(rep, Metric::Minkowski));
            for a in 0..4 {
                assert_eq!(s[a][a].max_norm(), 0.0);
                for b in 0..4 {
                    assert!((s[a][b] + s[b][a]).max_norm() < 1e-12);
                    assert!(s[a][b].trace().norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn sigma12_dirac_standard_block_form() {
        // Oracle: direct commutator of the Dirac-standard matrices written out by hand.
        let z = Matrix2::zero();
        let one = Matrix2::identity();
        let g1 = ComplexMatrix4::from_blocks(z, Matrix2::pauli(1), Matrix2::pauli(1) * -1.0, z);
        let g2 = ComplexMatrix4::from_blocks(z, Matrix2::pauli(2), Matrix2::pauli(2) * -1.0, z);
        let by_hand = (g1 * g2 - g2 * g1) * (I * 0.5);
        let s3 = Matrix2::pauli(3);
        let block = ComplexMatrix4::from_blocks(s3, z, z, s3);
        assert!(by_hand.approx_eq(&block, 1e-15));
        let _ = one;
        let s = sigma_tensor(&build_gammas(Representation::DiracStandard, Metric::Minkowski));
        assert!(s[1][2].approx_eq(&block, 1e-12));
    }

    #[test]
    fn majorana_c_is_minus_identity() {
        let c = charge_conjugation_matrix(Representation::Majorana);
        assert!(c.approx_eq(&(ComplexMatrix4::identity() * -1.0), 1e-12));
    }
}
