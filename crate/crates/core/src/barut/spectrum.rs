//! Mass spectra from rest-frame determinant roots.
//!
//! At p = 0 an operator becomes a matrix polynomial in E; its roots are the
//! eigenvalues of the block companion matrix. Each root is then confirmed by
//! the smallest singular value of the operator at that energy.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::operators::superposition_operator;
use super::params::{BarutParams, CanonicalParams};
use crate::algebra::dense::{null_space, relative_smallest_singular_value, to_dynamic};
use crate::algebra::{Metric, Representation};
use crate::error::Result;
use crate::fourvec::FourVector;
use crate::poly::PolyOperator;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassState {
    /// Closed-form mass.
    pub mass: f64,
    /// Mean |E| of the rest-frame roots attached to this mass.
    pub numeric: f64,
    /// Number of rest-frame roots (counted with multiplicity) at E = ±mass.
    pub multiplicity: usize,
    pub branch: String,
    /// σ_min/σ_max of the operator at E = mass, p = 0.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub masses: Vec<MassState>,
    pub roots: Vec<Complex64>,
    pub warnings: Vec<String>,
}

impl SpectrumReport {
    /// Largest |numeric − mass| / max(mass, tiny).
    pub fn max_relative_error(&self) -> f64 {
        self.masses.iter().map(|s| relative(s.numeric, s.mass)).fold(0.0, f64::max)
    }

    pub fn total_roots(&self) -> usize {
        self.masses.iter().map(|s| s.multiplicity).sum()
    }
}

fn relative(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs().max(f64::MIN_POSITIVE)
}

pub fn rest_roots(op: &PolyOperator) -> Result<Vec<Complex64>> {
    let zero = [Complex64::new(0.0, 0.0); 4];
    op.roots_in(0, &zero)
}

pub fn rest_point(e: f64) -> [Complex64; 4] {
    [Complex64::new(e, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)]
}

/// Attach every root to the nearest candidate |mass| and summarize.
pub fn attach_roots(
    op: &PolyOperator,
    candidates: &[(f64, String)],
    roots: Vec<Complex64>,
) -> SpectrumReport {
    let mut buckets: Vec<Vec<f64>> = vec![Vec::new(); candidates.len()];
    let mut warnings = Vec::new();
    for z in &roots {
        if z.im.abs() > 1e-6 * z.norm().max(1.0) {
            warnings.push(format!("complex root {z} ignored"));
            continue;
        }
        let e = z.re.abs();
        let k = (0..candidates.len())
            .min_by(|&i, &j| (e - candidates[i].0.abs()).abs().total_cmp(&(e - candidates[j].0.abs()).abs()))
            .expect("at least one candidate");
        buckets[k].push(e);
    }
    let masses = candidates
        .iter()
        .zip(buckets)
        .map(|((mass, branch), hits)| {
            let numeric = if hits.is_empty() { f64::NAN } else { hits.iter().sum::<f64>() / hits.len() as f64 };
            let residual = relative_smallest_singular_value(&to_dynamic(&op.eval(&rest_point(mass.abs()))));
            MassState { mass: mass.abs(), numeric, multiplicity: hits.len(), branch: branch.clone(), residual }
        })
        .collect();
    SpectrumReport { masses, roots, warnings }
}

/// Merge candidates whose masses coincide to 1e-12 relative.
fn dedup_candidates(mut c: Vec<(f64, String)>) -> Vec<(f64, String)> {
    c.sort_by(|x, y| x.0.abs().total_cmp(&y.0.abs()));
    let mut out: Vec<(f64, String)> = Vec::new();
    for (m, label) in c {
        match out.last_mut() {
            Some(last) if (last.0.abs() - m.abs()).abs() <= 1e-12 * m.abs().max(1e-300) => {
                last.1 = format!("{},{}", last.1, label);
            }
            _ => out.push((m, label)),
        }
    }
    out
}

/// {m(1 + b)/a, m(1 − b)/a}.
pub fn closed_form_masses(p: &BarutParams) -> [f64; 2] {
    [p.m * (1.0 + p.b) / p.a, p.m * (1.0 - p.b) / p.a]
}

/// Spectrum of 2a p̂/m − a²p²/m² + b² − 1.
pub fn second_order_spectrum(p: &BarutParams) -> Result<SpectrumReport> {
    second_order_spectrum_in(p, Representation::Chiral)
}

pub fn second_order_spectrum_in(p: &BarutParams, rep: Representation) -> Result<SpectrumReport> {
    p.validate()?;
    let op = superposition_operator(p, rep, Metric::Minkowski);
    let [hi, lo] = closed_form_masses(p);
    let cands = dedup_candidates(vec![(hi, "+b".to_string()), (lo, "-b".to_string())]);
    let mut report = attach_roots(&op, &cands, rest_roots(&op)?);
    for s in &report.masses {
        if s.mass < 1e-12 * p.m {
            report.warnings.push(format!("massless root on branch {}", s.branch));
        }
    }
    Ok(report)
}

/// Roots M of α₂M² − M + κ = 0; a single root κ when α₂ = 0.
pub fn canonical_masses(c: &CanonicalParams) -> Vec<f64> {
    if c.alpha2 == 0.0 {
        return vec![c.kappa];
    }
    let disc = 1.0 - 4.0 * c.alpha2 * c.kappa;
    if disc < 0.0 {
        return Vec::new();
    }
    let r = disc.sqrt();
    vec![(1.0 + r) / (2.0 * c.alpha2), (1.0 - r) / (2.0 * c.alpha2)]
}

/// Distinct |E| among the real rest-frame roots, clustered at `rel_tol`,
/// with the number of roots in each cluster.
pub fn distinct_masses(op: &PolyOperator, rel_tol: f64) -> Result<Vec<(f64, usize)>> {
    let mut es: Vec<f64> = rest_roots(op)?
        .into_iter()
        .filter(|z| z.im.abs() <= 1e-6 * z.norm().max(1.0))
        .map(|z| z.re.abs())
        .collect();
    es.sort_by(f64::total_cmp);
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for e in es {
        match out.last_mut() {
            Some((mean, n, sum)) if (e - *mean).abs() <= rel_tol * e.max(1.0) => {
                *n += 1;
                *sum += e;
                *mean = *sum / *n as f64;
            }
            _ => out.push((e, 1, e)),
        }
    }
    Ok(out.into_iter().map(|(m, n, _)| (m, n)).collect())
}

/// Null-space dimensions of op at (±√(p² + M²), p).
pub fn null_dimensions(op: &PolyOperator, p: [f64; 3], mass: f64, rel_tol: f64) -> [usize; 2] {
    let e = (p.iter().map(|x| x * x).sum::<f64>() + mass * mass).sqrt();
    [e, -e].map(|e0| {
        let v = FourVector::minkowski(e0, p);
        null_space(&to_dynamic(&op.eval_at(&v)), rel_tol).len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barut::operators::barut_operator;

    #[test]
    fn dirac_degenerate() {
        let r = second_order_spectrum(&BarutParams::new(1.0, 0.0, 1.0).unwrap()).unwrap();
        assert_eq!(r.masses.len(), 1);
        assert_eq!(r.masses[0].multiplicity, 8);
        assert!(r.max_relative_error() < 1e-10);
    }

    #[test]
    fn split_masses() {
        let r = second_order_spectrum(&BarutParams::new(1.0, 0.5, 1.0).unwrap()).unwrap();
        let got: Vec<(f64, usize)> = r.masses.iter().map(|s| (s.mass, s.multiplicity)).collect();
        assert_eq!(got, vec![(0.5, 4), (1.5, 4)]);
        assert!(r.max_relative_error() < 1e-10);
        assert!(r.masses.iter().all(|s| s.residual < 1e-12));
    }

    #[test]
    fn representation_independent() {
        let p = BarutParams::new(0.8, 0.35, 1.7).unwrap();
        let base = second_order_spectrum(&p).unwrap();
        for rep in Representation::ALL {
            let r = second_order_spectrum_in(&p, rep).unwrap();
            for (x, y) in r.masses.iter().zip(&base.masses) {
                assert_eq!(x.multiplicity, y.multiplicity);
                assert!((x.numeric - y.numeric).abs() < 1e-12 * y.mass);
            }
        }
    }

    #[test]
    fn massless_root_flagged() {
        let r = second_order_spectrum(&BarutParams::new(2.0, 1.0, 1.0).unwrap()).unwrap();
        assert!(r.warnings.iter().any(|w| w.contains("massless")));
        assert_eq!(r.total_roots(), 8);
    }

    #[test]
    fn canonical_operator_roots() {
        let c = CanonicalParams { alpha2: 0.5, kappa: 0.375 };
        let ms = distinct_masses(&barut_operator(&c, Representation::Chiral, Metric::Minkowski), 1e-8).unwrap();
        assert_eq!(ms.len(), 2);
        assert!((ms[0].0 - 0.5).abs() < 1e-12 && (ms[1].0 - 1.5).abs() < 1e-12);
        let mut closed = canonical_masses(&c);
        closed.sort_by(f64::total_cmp);
        assert!((closed[0] - 0.5).abs() < 1e-15 && (closed[1] - 1.5).abs() < 1e-15);
    }

    #[test]
    fn four_solutions_per_mass() {
        let p = BarutParams::new(1.2, 0.3, 0.8).unwrap();
        let op = superposition_operator(&p, Representation::Chiral, Metric::Minkowski);
        for m in closed_form_masses(&p) {
            assert_eq!(null_dimensions(&op, [0.3, -0.4, 0.2], m, 1e-9), [2, 2]);
        }
    }
}
