//! The third-order operator and the coupled four-field system it comes from.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::operators::{p_slash, p_square};
use super::params::BarutParams;
use super::spectrum::{attach_roots, distinct_masses, rest_roots, SpectrumReport};
use crate::algebra::dense::determinant;
use crate::algebra::{build_gammas, ComplexMatrix4, Metric, Representation, I};
use crate::error::Result;
use crate::poly::{BlockOperator, PolyOperator};

/// Signs (s₁, s₂) in m(1 + s₁b₁ + s₂b₂)/a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Branch {
    pub s1: i8,
    pub s2: i8,
}

impl Branch {
    pub const ALL: [Branch; 4] = [
        Branch { s1: 1, s2: 1 },
        Branch { s1: 1, s2: -1 },
        Branch { s1: -1, s2: 1 },
        Branch { s1: -1, s2: -1 },
    ];

    pub fn label(&self) -> String {
        let c = |s: i8| if s > 0 { '+' } else { '-' };
        format!("({},{})", c(self.s1), c(self.s2))
    }

    pub fn mass(&self, p: &BarutParams) -> f64 {
        p.m * (1.0 + self.s1 as f64 * p.b1 + self.s2 as f64 * p.b2) / p.a
    }
}

impl std::str::FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let t: String = s.chars().filter(|c| !"() ".contains(*c)).collect();
        let compact: Vec<String> = if !t.contains(',') && t.len() == 2 { t.chars().map(String::from).collect() } else { Vec::new() };
        let parts: Vec<&str> = if compact.is_empty() { t.split(',').collect() } else { compact.iter().map(String::as_str).collect() };
        let sign = |x: &str| match x {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            _ => Err(format!("bad branch sign `{x}`")),
        };
        match parts.as_slice() {
            [a, b] => Ok(Branch { s1: sign(a)?, s2: sign(b)? }),
            _ => Err(format!("branch must look like (+,-), got `{s}`")),
        }
    }
}

/// p̂ − M_branch.
pub fn first_factor(p: &BarutParams, branch: Branch) -> PolyOperator {
    let g = build_gammas(Representation::Chiral, Metric::Minkowski);
    p_slash(&g) - PolyOperator::scalar(branch.mass(p))
}

/// p̂ − (a/2m)p² + m(b₁² − 1)/2a.
pub fn second_factor(p: &BarutParams) -> PolyOperator {
    let g = build_gammas(Representation::Chiral, Metric::Minkowski);
    p_slash(&g) - p_square(Metric::Minkowski).scale_real(p.a / (2.0 * p.m))
        + PolyOperator::scalar(p.m * (p.b1 * p.b1 - 1.0) / (2.0 * p.a))
}

/// (p̂ − M)(p̂ − αp² − κ) expanded with p̂² = p²:
/// (1 + Mα)p² − αp²p̂ − (κ + M)p̂ + Mκ.
pub fn expanded_third_order(p: &BarutParams, branch: Branch) -> PolyOperator {
    let g = build_gammas(Representation::Chiral, Metric::Minkowski);
    let alpha = p.a / (2.0 * p.m);
    let kappa = p.m * (1.0 - p.b1 * p.b1) / (2.0 * p.a);
    let big_m = branch.mass(p);
    let sq = p_square(Metric::Minkowski);
    let sl = p_slash(&g);
    sq.scale_real(1.0 + big_m * alpha) - (&sq * &sl).scale_real(alpha) - sl.scale_real(kappa + big_m)
        + PolyOperator::scalar(big_m * kappa)
}

#[derive(Debug, Clone)]
pub struct ThirdOrder {
    pub branch: Branch,
    pub factored: (PolyOperator, PolyOperator),
    pub expanded: PolyOperator,
    /// Coefficient-wise distance between the expanded form and the product.
    pub product_defect: f64,
    pub spectrum: SpectrumReport,
    /// Distinct |E| among all rest-frame roots.
    pub distinct: Vec<f64>,
}

pub fn third_order_operator(p: &BarutParams, branch: Branch) -> Result<ThirdOrder> {
    p.validate()?;
    let f1 = first_factor(p, branch);
    let f2 = second_factor(p);
    let expanded = expanded_third_order(p, branch);
    let product_defect = (&f1 * &f2).distance(&expanded);
    let cands = vec![
        (branch.mass(p), format!("first{}", branch.label())),
        (p.m * (1.0 + p.b1) / p.a, "second(+b1)".to_string()),
        (p.m * (1.0 - p.b1) / p.a, "second(-b1)".to_string()),
    ];
    let roots = rest_roots(&expanded)?;
    let spectrum = attach_roots(&expanded, &merge(cands), roots);
    let distinct = distinct_masses(&expanded, 1e-7)?.into_iter().map(|(m, _)| m).collect();
    Ok(ThirdOrder { branch, factored: (f1, f2), expanded, product_defect, spectrum, distinct })
}

fn merge(mut c: Vec<(f64, String)>) -> Vec<(f64, String)> {
    c.sort_by(|x, y| x.0.abs().total_cmp(&y.0.abs()));
    let mut out: Vec<(f64, String)> = Vec::new();
    for (m, l) in c {
        match out.last_mut() {
            Some(last) if (last.0.abs() - m.abs()).abs() <= 1e-12 * m.abs().max(1e-300) => {
                last.1 = format!("{}+{}", last.1, l);
            }
            _ => out.push((m, l)),
        }
    }
    out
}

/// The two first-order equations in (φ, χ, φ̃, χ̃):
///
/// ```text
/// (a p̂/m − 1)φ − b₁χ + i b₂ γ⁵ φ̃ = 0
/// (a p̂/m − 1)χ − b₁φ − i b₂ γ⁵ χ̃ = 0
/// ```
///
/// and their restriction by Ψ₁ = −iγ⁵Ψ₄, Ψ₂ = iγ⁵Ψ₃, i.e.
/// φ̃ = iγ⁵χ, χ̃ = −iγ⁵φ.
#[derive(Debug, Clone)]
pub struct CoupledSystem {
    /// 2 × 4 blocks acting on (φ, χ, φ̃, χ̃).
    pub full: BlockOperator,
    /// 4 × 2 constant blocks: (φ, χ) ↦ (φ, χ, φ̃, χ̃).
    pub embedding: Vec<Vec<ComplexMatrix4>>,
    /// full ∘ embedding.
    pub reduced: BlockOperator,
    /// [[D − 1, −(b₁ + b₂)], [−(b₁ + b₂), D − 1]], D = a p̂/m.
    pub reduced_closed_form: BlockOperator,
    pub reduction_defect: f64,
}

pub fn coupled_system(p: &BarutParams) -> Result<CoupledSystem> {
    p.validate()?;
    let g = build_gammas(Representation::Chiral, Metric::Minkowski);
    let d1 = p_slash(&g).scale_real(p.a / p.m) - PolyOperator::scalar(1.0);
    let id = ComplexMatrix4::identity();
    let zero = ComplexMatrix4::zero();
    let ig5 = g.five * I;

    let mut full = BlockOperator::zero(2, 4);
    full.set(0, 0, d1.clone());
    full.set(0, 1, PolyOperator::scalar(-p.b1));
    full.set(0, 2, PolyOperator::constant(ig5 * p.b2));
    full.set(1, 0, PolyOperator::scalar(-p.b1));
    full.set(1, 1, d1.clone());
    full.set(1, 3, PolyOperator::constant(ig5 * -p.b2));

    let embedding = vec![vec![id, zero], vec![zero, id], vec![zero, ig5], vec![-ig5, zero]];
    let reduced = full.compose_constant(&embedding);

    let s = p.b1 + p.b2;
    let mut closed = BlockOperator::zero(2, 2);
    closed.set(0, 0, d1.clone());
    closed.set(0, 1, PolyOperator::scalar(-s));
    closed.set(1, 0, PolyOperator::scalar(-s));
    closed.set(1, 1, d1);
    let reduction_defect = reduced.distance(&closed);
    Ok(CoupledSystem { full, embedding, reduced, reduced_closed_form: closed, reduction_defect })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeterminantRatioReport {
    /// det(reduced) / [det(p̂ − M₊₊) det(p̂ − M₋₋)] at each sample.
    pub ratios: Vec<Complex64>,
    /// (a/m)⁸, the value the ratio must take.
    pub expected: f64,
    /// max |ratio − expected| / expected.
    pub max_relative_deviation: f64,
}

/// Compare the reduced-system determinant against the product of the
/// third-order first-factor determinants for the (+,+) and (−,−) branches.
pub fn determinant_ratio(p: &BarutParams, momenta: &[[f64; 4]]) -> Result<DeterminantRatioReport> {
    let sys = coupled_system(p)?;
    let fpp = first_factor(p, Branch { s1: 1, s2: 1 });
    let fmm = first_factor(p, Branch { s1: -1, s2: -1 });
    let expected = (p.a / p.m).powi(8);
    let ratios: Vec<Complex64> = momenta
        .iter()
        .map(|q| {
            let z = q.map(|x| Complex64::new(x, 0.0));
            determinant(&sys.reduced.eval(&z)) / (fpp.det_at(&z) * fmm.det_at(&z))
        })
        .collect();
    let max_relative_deviation = ratios.iter().map(|r| (r - expected).norm() / expected).fold(0.0, f64::max);
    Ok(DeterminantRatioReport { ratios, expected, max_relative_deviation })
}
