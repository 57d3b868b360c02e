//! The squared Dirac operator with minimal coupling, its free Lagrangian,
//! chirality, the general current and the split of the Barut operator into a
//! first-order and a scalar second-order piece.
//!
//! Coordinates are Minkowski x^μ = (t, x, y, z); test functions are
//! polynomials in x^μ times e^{−ip·x} with constant spinor coefficients.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::matrix::spinor;
use crate::algebra::{build_gammas, sigma_tensor, ComplexMatrix4, GammaSet, Metric, Representation, Spinor, I, ZERO};
use crate::barut::operators::{barut_operator, p_slash, p_square};
use crate::barut::params::CanonicalParams;
use crate::error::{Error, Result};
use crate::poly::{Exponent, PolyOperator};
use crate::spinors::{build_u_spinor, dirac_bilinear, Helicity};

const MINKOWSKI: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Σ_α c_α x^α e^{−ip·x}.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    pub terms: BTreeMap<Exponent, Spinor>,
    /// Contravariant p^μ.
    pub p: [Complex64; 4],
}

impl TestFunction {
    pub fn monomial(alpha: Exponent, p: [f64; 4], w: Spinor) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(alpha, w);
        Self { terms, p: p.map(|v| Complex64::new(v, 0.0)) }
    }

    pub fn plane_wave(p: [f64; 4], w: Spinor) -> Self {
        Self::monomial([0; 4], p, w)
    }

    fn empty_like(&self) -> Self {
        Self { terms: BTreeMap::new(), p: self.p }
    }

    fn push(&mut self, e: Exponent, c: Spinor) {
        let slot = self.terms.entry(e).or_insert([ZERO; 4]);
        *slot = spinor::add(slot, &c);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.push(*e, *c);
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (*e, spinor::scale(c, s))).collect();
        Self { terms, p: self.p }
    }

    pub fn apply(&self, m: &ComplexMatrix4) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (*e, m.apply(c))).collect();
        Self { terms, p: self.p }
    }

    /// ∂/∂x^μ.
    pub fn d(&self, mu: usize) -> Self {
        let p_lower = self.p[mu] * MINKOWSKI[mu];
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            if e[mu] > 0 {
                let mut lowered = *e;
                lowered[mu] -= 1;
                out.push(lowered, spinor::scale(c, Complex64::new(e[mu] as f64, 0.0)));
            }
            out.push(*e, spinor::scale(c, -I * p_lower));
        }
        out
    }

    /// Multiplication by x^ν.
    pub fn times_x(&self, nu: usize) -> Self {
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            let mut raised = *e;
            raised[nu] += 1;
            out.push(raised, *c);
        }
        out
    }

    pub fn value(&self, x: &[f64; 4]) -> Spinor {
        let phase_arg: Complex64 = (0..4).map(|k| self.p[k] * MINKOWSKI[k] * x[k]).sum();
        let phase = (-I * phase_arg).exp();
        let mut out = [ZERO; 4];
        for (e, c) in &self.terms {
            let mono: f64 = (0..4).map(|k| x[k].powi(e[k] as i32)).product();
            out = spinor::add(&out, &spinor::scale(c, phase * mono));
        }
        out
    }

    pub fn max_coefficient(&self) -> f64 {
        self.terms.values().map(spinor::max_abs).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldFamily {
    Free,
    Constant,
    Uniform,
}

impl std::str::FromStr for FieldFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(Self::Free),
            "constant" => Ok(Self::Constant),
            "uniform" => Ok(Self::Uniform),
            other => Err(Error::Unsupported(format!("field family `{other}`; expected free, constant or uniform"))),
        }
    }
}

/// A_μ(x) = a_μ − ½F_μν x^ν with constant a and F (lower indices).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EMField {
    pub family: FieldFamily,
    pub e: f64,
    pub a: [f64; 4],
    pub f: [[f64; 4]; 4],
}

impl EMField {
    pub fn free() -> Self {
        Self { family: FieldFamily::Free, e: 0.0, a: [0.0; 4], f: [[0.0; 4]; 4] }
    }

    pub fn constant(e: f64, a: [f64; 4]) -> Self {
        Self { family: FieldFamily::Constant, e, a, f: [[0.0; 4]; 4] }
    }

    pub fn uniform(e: f64, a: [f64; 4], f: [[f64; 4]; 4]) -> Result<Self> {
        for mu in 0..4 {
            for nu in 0..4 {
                if f[mu][nu] != -f[nu][mu] {
                    return Err(Error::InvalidParameter(format!("F must be antisymmetric; F[{mu}][{nu}] = {}", f[mu][nu])));
                }
            }
        }
        Ok(Self { family: FieldFamily::Uniform, e, a, f })
    }

    /// Uniform magnetic field along z: F₁₂ = −F₂₁ = B.
    pub fn magnetic_z(e: f64, b: f64) -> Self {
        let mut f = [[0.0; 4]; 4];
        f[1][2] = b;
        f[2][1] = -b;
        Self { family: FieldFamily::Uniform, e, a: [0.0; 4], f }
    }

    pub fn potential(&self, x: &[f64; 4]) -> [f64; 4] {
        std::array::from_fn(|mu| self.a[mu] - 0.5 * (0..4).map(|nu| self.f[mu][nu] * x[nu]).sum::<f64>())
    }

    /// max |∂_μA_ν − ∂_νA_μ − F_μν| from unit differences of the (linear) potential.
    pub fn curl_defect(&self) -> f64 {
        let origin = [0.0; 4];
        let a0 = self.potential(&origin);
        let grad: [[f64; 4]; 4] = std::array::from_fn(|mu| {
            let mut x = origin;
            x[mu] = 1.0;
            let a1 = self.potential(&x);
            std::array::from_fn(|nu| a1[nu] - a0[nu])
        });
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                worst = worst.max((grad[mu][nu] - grad[nu][mu] - self.f[mu][nu]).abs());
            }
        }
        worst
    }

    /// D_μψ = (i∂_μ − eA_μ)ψ.
    pub fn covariant(&self, mu: usize, psi: &TestFunction) -> TestFunction {
        let mut out = psi.d(mu).scale(I).add(&psi.scale(Complex64::new(-self.e * self.a[mu], 0.0)));
        for nu in 0..4 {
            let c = 0.5 * self.e * self.f[mu][nu];
            if c != 0.0 {
                out = out.add(&psi.times_x(nu).scale(Complex64::new(c, 0.0)));
            }
        }
        out
    }

    /// ½ e σ^{μν}F_μν.
    pub fn spin_term(&self, g: &GammaSet) -> ComplexMatrix4 {
        let sigma = sigma_tensor(g);
        let mut out = ComplexMatrix4::zero();
        for mu in 0..4 {
            for nu in 0..4 {
                out += sigma[mu][nu] * (0.5 * self.e * self.f[mu][nu]);
            }
        }
        out
    }
}

/// [(i∂ − eA)_μ(i∂ − eA)^μ − ½eσ^{μν}F_μν − m²]ψ.
pub fn fgm_apply(field: &EMField, m: f64, psi: &TestFunction, rep: Representation) -> TestFunction {
    let g = build_gammas(rep, Metric::Minkowski);
    let mut out = psi.scale(Complex64::new(-m * m, 0.0)).add(&psi.apply(&field.spin_term(&g)).scale(Complex64::new(-1.0, 0.0)));
    for mu in 0..4 {
        let dd = field.covariant(mu, &field.covariant(mu, psi));
        out = out.add(&dd.scale(Complex64::new(MINKOWSKI[mu], 0.0)));
    }
    out
}

/// [(i∂̂ − eÂ)(i∂̂ − eÂ) − m²]ψ, expanded as γ^μγ^ν D_μD_ν term by term.
pub fn slashed_square_apply(field: &EMField, m: f64, psi: &TestFunction, rep: Representation) -> TestFunction {
    let g = build_gammas(rep, Metric::Minkowski);
    let mut out = psi.scale(Complex64::new(-m * m, 0.0));
    for mu in 0..4 {
        for nu in 0..4 {
            let dd = field.covariant(mu, &field.covariant(nu, psi));
            out = out.add(&dd.apply(&(g.mu[mu] * g.mu[nu])));
        }
    }
    out
}

/// Monomials x^α with |α| ≤ 2 times e^{−ip·x} times each unit spinor.
pub fn test_basis(p: [f64; 4]) -> Vec<TestFunction> {
    let mut exps: Vec<Exponent> = vec![[0; 4]];
    for a in 0..4 {
        let mut e = [0; 4];
        e[a] = 1;
        exps.push(e);
        for b in a..4 {
            let mut e2 = e;
            e2[b] += 1;
            exps.push(e2);
        }
    }
    let mut out = Vec::new();
    for e in exps {
        for k in 0..4 {
            let mut w = [ZERO; 4];
            w[k] = Complex64::new(1.0, 0.0);
            out.push(TestFunction::monomial(e, p, w));
        }
    }
    out
}

pub const BASIS_MOMENTUM: [f64; 4] = [1.3, 0.2, -0.4, 0.5];

/// max over the test basis of ‖slashed form − expanded form‖, relative to the
/// size of the expanded form.
pub fn squared_dirac_identity(field: &EMField, m: f64, rep: Representation) -> f64 {
    test_basis(BASIS_MOMENTUM)
        .iter()
        .map(|psi| {
            let a = slashed_square_apply(field, m, psi, rep);
            let b = fgm_apply(field, m, psi, rep);
            a.add(&b.scale(Complex64::new(-1.0, 0.0))).max_coefficient() / b.max_coefficient().max(1.0)
        })
        .fold(0.0, f64::max)
}

/// (i∂̂Ψ)‾(i∂̂Ψ) − m²Ψ̄Ψ at x, with (i∂̂Ψ)‾ = −i∂_μΨ̄γ^μ.
pub fn free_fgm_lagrangian(psi: &TestFunction, m: f64, x: &[f64; 4], rep: Representation) -> Complex64 {
    let g = build_gammas(rep, Metric::Minkowski);
    let slashed = (0..4).fold([ZERO; 4], |acc, mu| {
        spinor::add(&acc, &spinor::scale(&g.mu[mu].apply(&psi.d(mu).value(x)), I))
    });
    let v = psi.value(x);
    let g0 = g.mu[0];
    dirac_bilinear_in(&slashed, &g0, &slashed) - m * m * dirac_bilinear_in(&v, &g0, &v)
}

/// ψ†γ⁰χ with γ⁰ given explicitly, so the bar is correct in any basis.
fn dirac_bilinear_in(psi: &Spinor, g0: &ComplexMatrix4, chi: &Spinor) -> Complex64 {
    spinor::inner(psi, &g0.apply(chi))
}

/// Mean of the free Lagrangian over an n³ grid of the box [0, L)³ at t = 0.
pub fn free_fgm_lagrangian_average(psi: &TestFunction, m: f64, l: f64, n: usize, rep: Representation) -> Complex64 {
    let step = l / n as f64;
    let mut sum = ZERO;
    for idx in 0..n * n * n {
        let x = [0.0, (idx % n) as f64 * step, ((idx / n) % n) as f64 * step, (idx / (n * n)) as f64 * step];
        sum += free_fgm_lagrangian(psi, m, &x, rep);
    }
    sum / (n * n * n) as f64
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Gamma5Report {
    /// Largest coefficient of [(p² − m²)·1, γ⁵] as a momentum polynomial.
    pub free_commutator: f64,
    /// max ‖[σ^{μν}, γ⁵]‖.
    pub sigma_commutator: f64,
    /// max over the test basis of ‖Op(γ⁵ψ) − γ⁵Op(ψ)‖.
    pub basis_commutator: f64,
    /// Residuals of P_±ψ for plane-wave solutions ψ (empty for the uniform family).
    pub projected_residuals: Vec<f64>,
}

impl Gamma5Report {
    pub fn max_defect(&self) -> f64 {
        self.projected_residuals.iter().copied().fold(self.free_commutator.max(self.sigma_commutator).max(self.basis_commutator), f64::max)
    }
}

pub fn gamma5_structure(field: &EMField, m: f64, rep: Representation) -> Result<Gamma5Report> {
    if !(m > 0.0) {
        return Err(Error::NonPositiveMass(m));
    }
    let g = build_gammas(rep, Metric::Minkowski);
    let free = p_square(Metric::Minkowski) - PolyOperator::scalar(m * m);
    let free_commutator = free.commutator_with(&g.five).max_coefficient();
    let sigma = sigma_tensor(&g);
    let sigma_commutator = sigma.iter().flatten().map(|s| s.commutator(&g.five).max_norm()).fold(0.0, f64::max);
    let basis_commutator = test_basis(BASIS_MOMENTUM)
        .iter()
        .map(|psi| {
            let a = fgm_apply(field, m, &psi.apply(&g.five), rep);
            let b = fgm_apply(field, m, psi, rep).apply(&g.five);
            a.add(&b.scale(Complex64::new(-1.0, 0.0))).max_coefficient()
        })
        .fold(0.0, f64::max);

    let mut projected_residuals = Vec::new();
    if field.family != FieldFamily::Uniform {
        // (p − ea)² = m² with p − ea = (√(k² + m²), k).
        let k = [0.3, -0.5, 0.2];
        let e0 = (k.iter().map(|v| v * v).sum::<f64>() + m * m).sqrt();
        let kin = [e0, k[0], k[1], k[2]];
        let upper_a: [f64; 4] = std::array::from_fn(|mu| field.a[mu] * MINKOWSKI[mu]);
        let p: [f64; 4] = std::array::from_fn(|mu| kin[mu] + field.e * upper_a[mu]);
        let id = ComplexMatrix4::identity();
        for w in [[1.0, 0.5, -0.2, 0.3], [0.1, -1.0, 0.7, 0.4]] {
            let psi = TestFunction::plane_wave(p, w.map(|v| Complex64::new(v, 0.0)));
            for s in [1.0, -1.0] {
                let proj = (id + g.five * s) * 0.5;
                let r = fgm_apply(field, m, &psi.apply(&proj), rep).max_coefficient();
                projected_residuals.push(r);
            }
        }
    }
    Ok(Gamma5Report { free_commutator, sigma_commutator, basis_commutator, projected_residuals })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionReport {
    /// Weight of p̂ − m.
    pub dirac_coefficient: f64,
    /// Weight of (p² − m²)/m.
    pub fgm_coefficient: f64,
    /// Weight of the identity.
    pub constant: f64,
    /// Residual of the coefficient match, computed in exact rational arithmetic.
    pub exact_residual: f64,
    /// Residual of the same match recomputed in floating point.
    pub float_residual: f64,
}

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite coefficient")
}

/// Real coordinates (Re, Im of every matrix entry of every coefficient) over
/// the given exponent set.
fn coordinates(op: &PolyOperator, exps: &[Exponent]) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(exps.len() * 32);
    for e in exps {
        let c = op.coefficient(*e);
        for r in 0..4 {
            for k in 0..4 {
                out.push(rational(c[(r, k)].re));
                out.push(rational(c[(r, k)].im));
            }
        }
    }
    out
}

/// Solve the square system m x = b exactly; `None` if singular.
fn solve_exact(mut m: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                for k in col..n {
                    let v = &f * &m[col][k];
                    m[r][k] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &m[i][i]).collect())
}

/// Write `target` as λ₁(p̂ − m) + λ₂(p² − m²)/m + c·1 by least squares on the
/// coefficients, carried out exactly.
pub fn decompose_operator(target: &PolyOperator, m: f64, rep: Representation) -> Result<DecompositionReport> {
    if !(m > 0.0) {
        return Err(Error::NonPositiveMass(m));
    }
    let g = build_gammas(rep, Metric::Minkowski);
    let dirac = p_slash(&g) - PolyOperator::scalar(m);
    let fgm = (p_square(Metric::Minkowski) - PolyOperator::scalar(m * m)).scale_real(1.0 / m);
    let one = PolyOperator::scalar(1.0);
    let basis = [&dirac, &fgm, &one];

    let mut exps: Vec<Exponent> = target.terms.keys().copied().collect();
    for b in basis {
        exps.extend(b.terms.keys().copied());
    }
    exps.sort();
    exps.dedup();

    let cols: Vec<Vec<BigRational>> = basis.iter().map(|b| coordinates(b, &exps)).collect();
    let rhs = coordinates(target, &exps);
    let dot = |a: &[BigRational], b: &[BigRational]| a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y);
    let normal: Vec<Vec<BigRational>> = (0..3).map(|i| (0..3).map(|j| dot(&cols[i], &cols[j])).collect()).collect();
    let proj: Vec<BigRational> = (0..3).map(|i| dot(&cols[i], &rhs)).collect();
    let lambda = solve_exact(normal, proj).ok_or_else(|| Error::InvalidParameter("degenerate decomposition basis".into()))?;

    let mut exact_residual = BigRational::zero();
    for (idx, t) in rhs.iter().enumerate() {
        let fit = (0..3).fold(BigRational::zero(), |acc, i| acc + &lambda[i] * &cols[i][idx]);
        let r = num_traits::Signed::abs(&(t - fit));
        if r > exact_residual {
            exact_residual = r;
        }
    }

    let l: Vec<f64> = lambda.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect();
    let rebuilt = dirac.scale_real(l[0]) + fgm.scale_real(l[1]) + one.scale_real(l[2]);
    Ok(DecompositionReport {
        dirac_coefficient: l[0],
        fgm_coefficient: l[1],
        constant: l[2],
        exact_residual: exact_residual.to_f64().unwrap_or(f64::INFINITY),
        float_residual: rebuilt.distance(target),
    })
}

/// The Barut operator p̂ − α₂p² − κ split into Dirac and scalar second-order parts.
pub fn barut_decomposition(canon: &CanonicalParams, m: f64, rep: Representation) -> Result<DecompositionReport> {
    decompose_operator(&barut_operator(canon, rep, Metric::Minkowski), m, rep)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneralCurrentParams {
    pub alpha1: Complex64,
    pub alpha2: Complex64,
    pub alpha3: Complex64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurrentReport {
    /// J^μ = α₁ ū₂γ^μu₁ + α₂ P^μ ū₂u₁ + α₃ ū₂σ^{μν}u₁ q_ν, P = p₁ + p₂, q = p₂ − p₁.
    pub current: [Complex64; 4],
    /// Pieces multiplying α₁, α₂, α₃.
    pub pieces: [[Complex64; 4]; 3],
    /// q_μ J^μ.
    pub divergence: Complex64,
}

/// The general current between u(p₁, h₁) and ū(p₂, h₂), both of mass m.
pub fn general_current(
    params: &GeneralCurrentParams,
    p1: [f64; 3],
    h1: Helicity,
    p2: [f64; 3],
    h2: Helicity,
    m: f64,
) -> Result<CurrentReport> {
    let u1 = build_u_spinor(p1, h1, 1.0, 0.0, m)?;
    let u2 = build_u_spinor(p2, h2, 1.0, 0.0, m)?;
    let g = build_gammas(Representation::Chiral, Metric::Minkowski);
    let sigma = sigma_tensor(&g);
    let four = |p: [f64; 3]| [(p.iter().map(|v| v * v).sum::<f64>() + m * m).sqrt(), p[0], p[1], p[2]];
    let (k1, k2) = (four(p1), four(p2));
    let big_p: [f64; 4] = std::array::from_fn(|mu| k1[mu] + k2[mu]);
    let q_lower: [f64; 4] = std::array::from_fn(|mu| (k2[mu] - k1[mu]) * MINKOWSKI[mu]);
    let scalar = dirac_bilinear(&u2.components, &ComplexMatrix4::identity(), &u1.components);
    let vector: [Complex64; 4] = std::array::from_fn(|mu| dirac_bilinear(&u2.components, &g.mu[mu], &u1.components));
    let tensor: [Complex64; 4] = std::array::from_fn(|mu| {
        let s = (0..4).fold(ComplexMatrix4::zero(), |acc, nu| acc + sigma[mu][nu] * q_lower[nu]);
        dirac_bilinear(&u2.components, &s, &u1.components)
    });
    let pieces = [vector, std::array::from_fn(|mu| scalar * big_p[mu]), tensor];
    let current: [Complex64; 4] =
        std::array::from_fn(|mu| params.alpha1 * pieces[0][mu] + params.alpha2 * pieces[1][mu] + params.alpha3 * pieces[2][mu]);
    let divergence = (0..4).map(|mu| current[mu] * q_lower[mu]).sum();
    Ok(CurrentReport { current, pieces, divergence })
}

/// ū₂γ^μu₁ − [P^μ ū₂u₁ + i ū₂σ^{μν}q_ν u₁]/2m, largest component.
pub fn gordon_defect(p1: [f64; 3], h1: Helicity, p2: [f64; 3], h2: Helicity, m: f64) -> Result<f64> {
    let gordon = GeneralCurrentParams {
        alpha1: ZERO,
        alpha2: Complex64::new(1.0 / (2.0 * m), 0.0),
        alpha3: Complex64::new(0.0, 1.0 / (2.0 * m)),
    };
    let r = general_current(&gordon, p1, h1, p2, h2, m)?;
    Ok((0..4).map(|mu| (r.pieces[0][mu] - r.current[mu]).norm()).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barut::spectrum::canonical_masses;

    fn w() -> Spinor {
        [Complex64::new(0.3, 0.1), Complex64::new(-0.5, 0.0), Complex64::new(0.2, 0.4), Complex64::new(1.0, -0.2)]
    }

    #[test]
    fn free_plane_wave_is_annihilated() {
        let m = 1.4;
        let k = [0.2, -0.3, 0.6];
        let e = (k.iter().map(|v| v * v).sum::<f64>() + m * m).sqrt();
        let psi = TestFunction::plane_wave([e, k[0], k[1], k[2]], w());
        assert!(fgm_apply(&EMField::free(), m, &psi, Representation::Chiral).max_coefficient() < 1e-14);
    }

    #[test]
    fn constant_potential_shifts_momentum() {
        let (m, e) = (1.0, 0.7);
        let a = [0.4, -0.1, 0.3, 0.2];
        let p = [1.9, 0.3, -0.2, 0.5];
        let field = EMField::constant(e, a);
        let got = fgm_apply(&field, m, &TestFunction::plane_wave(p, w()), Representation::Chiral);
        let shifted: [f64; 4] = std::array::from_fn(|mu| p[mu] - e * a[mu] * MINKOWSKI[mu]);
        let free = fgm_apply(&EMField::free(), m, &TestFunction::plane_wave(shifted, w()), Representation::Chiral);
        assert!(got.add(&TestFunction { terms: free.terms.clone(), p: got.p }.scale(Complex64::new(-1.0, 0.0))).max_coefficient() < 1e-14);
        let s2 = shifted[0].powi(2) - shifted[1..].iter().map(|v| v * v).sum::<f64>();
        let want = spinor::scale(&w(), Complex64::new(s2 - m * m, 0.0));
        assert!(spinor::norm(&spinor::sub(&got.terms[&[0; 4]], &want)) < 1e-14);
    }

    #[test]
    fn identity_holds_for_every_family() {
        let mut f = [[0.0; 4]; 4];
        f[0][1] = 0.3;
        f[1][0] = -0.3;
        f[2][3] = -0.8;
        f[3][2] = 0.8;
        f[1][2] = 0.5;
        f[2][1] = -0.5;
        let fields = [EMField::free(), EMField::constant(0.6, [0.2, 0.1, -0.4, 0.3]), EMField::uniform(0.9, [0.1, 0.0, 0.2, 0.0], f).unwrap()];
        for field in fields {
            assert!(field.curl_defect() < 1e-15);
            for rep in Representation::ALL {
                assert!(squared_dirac_identity(&field, 1.2, rep) < 1e-13, "{:?} {rep:?}", field.family);
            }
        }
    }

    #[test]
    fn magnetic_spin_term() {
        // ½eσ^{μν}F_μν = eσ^{12}B for F₁₂ = B.
        let field = EMField::magnetic_z(0.5, 2.0);
        let g = build_gammas(Representation::Chiral, Metric::Minkowski);
        let sigma = sigma_tensor(&g);
        assert!(field.spin_term(&g).distance(&(sigma[1][2] * 1.0)) < 1e-15);
    }

    #[test]
    fn chirality_is_preserved() {
        for field in [EMField::free(), EMField::constant(0.6, [0.2, 0.1, -0.4, 0.3]), EMField::magnetic_z(0.4, 1.5)] {
            let r = gamma5_structure(&field, 1.1, Representation::DiracStandard).unwrap();
            assert_eq!(r.free_commutator, 0.0);
            assert!(r.max_defect() < 1e-13, "{r:?}");
        }
    }

    #[test]
    fn lagrangian_on_and_off_shell() {
        let m = 1.0;
        let k = [2.0 * std::f64::consts::PI / 8.0, 0.0, 0.0];
        let e = (k[0] * k[0] + m * m).sqrt();
        let psi = TestFunction::plane_wave([e, k[0], k[1], k[2]], w());
        assert!(free_fgm_lagrangian_average(&psi, m, 8.0, 4, Representation::Chiral).norm() < 1e-14);
        let zero = TestFunction::plane_wave([e, k[0], k[1], k[2]], [ZERO; 4]);
        assert_eq!(free_fgm_lagrangian(&zero, m, &[0.0; 4], Representation::Chiral), ZERO);
        let m2 = 1.3;
        let e2 = (k[0] * k[0] + m2 * m2).sqrt();
        let psi2 = TestFunction::plane_wave([e2, k[0], k[1], k[2]], w());
        let g0 = build_gammas(Representation::Chiral, Metric::Minkowski).mu[0];
        let want = (m2 * m2 - m * m) * dirac_bilinear_in(&w(), &g0, &w());
        let got = free_fgm_lagrangian_average(&psi2, m, 8.0, 4, Representation::Chiral);
        assert!((got - want).norm() < 1e-13);
    }

    #[test]
    fn barut_splits_exactly() {
        for (a2, kappa) in [(0.0, 1.0), (0.31, 0.77), (1e-3, 250.0), (0.5, 0.0)] {
            let r = barut_decomposition(&CanonicalParams { alpha2: a2, kappa }, 1.3, Representation::Chiral).unwrap();
            assert_eq!(r.exact_residual, 0.0);
            assert!((r.dirac_coefficient - 1.0).abs() < 1e-15);
            assert!((r.fgm_coefficient + a2 * 1.3).abs() < 1e-15);
        }
        let cubic = &p_slash(&build_gammas(Representation::Chiral, Metric::Minkowski)) * &p_square(Metric::Minkowski);
        assert!(decompose_operator(&cubic, 1.0, Representation::Chiral).unwrap().exact_residual > 0.1);
    }

    #[test]
    fn null_mode_gives_mass_gap() {
        let c = CanonicalParams { alpha2: 0.5, kappa: 0.375 };
        let m = 0.9;
        for mi in canonical_masses(&c) {
            let k = [0.1, 0.2, -0.3];
            let e = (k.iter().map(|v| v * v).sum::<f64>() + mi * mi).sqrt();
            let psi = TestFunction::plane_wave([e, k[0], k[1], k[2]], w());
            let out = fgm_apply(&EMField::free(), m, &psi, Representation::Chiral);
            let want = spinor::scale(&w(), Complex64::new(mi * mi - m * m, 0.0));
            assert!(spinor::norm(&spinor::sub(&out.terms[&[0; 4]], &want)) < 1e-14);
        }
    }

    #[test]
    fn current_structure() {
        let m = 0.8;
        let p = [0.3, -0.2, 0.5];
        let dirac = GeneralCurrentParams { alpha1: Complex64::new(1.0, 0.0), alpha2: ZERO, alpha3: ZERO };
        let r = general_current(&dirac, p, Helicity::Plus, p, Helicity::Plus, m).unwrap();
        assert!(r.current[0].re > 0.0);
        assert!(r.pieces[2].iter().all(|z| z.norm() == 0.0));
        for (h1, h2) in [(Helicity::Plus, Helicity::Minus), (Helicity::Minus, Helicity::Minus)] {
            assert!(gordon_defect([0.3, 0.1, -0.7], h1, [-0.4, 0.9, 0.2], h2, m).unwrap() < 1e-13);
            let any = GeneralCurrentParams { alpha1: Complex64::new(0.7, 0.0), alpha2: Complex64::new(0.2, 0.0), alpha3: Complex64::new(-0.3, 0.0) };
            let r = general_current(&any, [0.3, 0.1, -0.7], h1, [-0.4, 0.9, 0.2], h2, m).unwrap();
            assert!(r.divergence.norm() < 1e-13);
        }
    }

    #[test]
    fn unknown_family_rejected() {
        assert!("solenoid".parse::<FieldFamily>().is_err());
    }
}
