//! Boosts, helicity 2-spinors and the bispinors u_h(p), v_h(p).
//!
//! All 4-spinors here live in the chiral basis Ψ = (φ_R, φ_L). The 2-spinor
//! basis is the helicity basis with symmetric azimuthal phases
//!
//! ```text
//! χ₊ = ( e^{−iφ/2} cos θ/2,  e^{iφ/2} sin θ/2)
//! χ₋ = (−e^{−iφ/2} sin θ/2,  e^{iφ/2} cos θ/2)
//! ```
//!
//! for which χ_h* = Ξ(φ) χ_h and Θ χ_{−h}* = (−1)^{1/2+h} χ_h. At p = 0 the
//! direction is taken along ẑ with φ = 0.
//!
//! v-spinors are the charge conjugates v_h = C u_h*.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::matrix::spinor;
use crate::algebra::{
    build_gammas, charge_conjugation_chiral, wigner_theta, wigner_xi, ComplexMatrix4, Matrix2, Metric,
    Representation, Spinor, Spinor2, I, ZERO,
};
use crate::error::{Error, Result};
use crate::fourvec::{energy, norm3, FourVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Helicity {
    #[serde(rename = "+1/2")]
    Plus,
    #[serde(rename = "-1/2")]
    Minus,
}

impl Helicity {
    pub const BOTH: [Helicity; 2] = [Self::Plus, Self::Minus];

    pub fn value(self) -> f64 {
        match self {
            Self::Plus => 0.5,
            Self::Minus => -0.5,
        }
    }

    /// 2h = ±1.
    pub fn sign(self) -> f64 {
        2.0 * self.value()
    }

    pub fn flip(self) -> Self {
        match self {
            Self::Plus => Self::Minus,
            Self::Minus => Self::Plus,
        }
    }

    pub fn from_value(h: f64) -> Result<Self> {
        if (h - 0.5).abs() < 1e-12 {
            Ok(Self::Plus)
        } else if (h + 0.5).abs() < 1e-12 {
            Ok(Self::Minus)
        } else {
            Err(Error::InvalidParameter(format!("helicity must be ±1/2, got {h}")))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpinorKind {
    Particle,
    Antiparticle,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinorState {
    pub components: Spinor,
    pub momentum: FourVector,
    pub helicity: Helicity,
    pub kind: SpinorKind,
}

impl SpinorState {
    /// ψ̄ χ = ψ† γ⁰ χ.
    pub fn bar_dot(&self, other: &SpinorState) -> Complex64 {
        dirac_bilinear(&self.components, &ComplexMatrix4::identity(), &other.components)
    }

    pub fn right(&self) -> Spinor2 {
        spinor::upper(&self.components)
    }

    pub fn left(&self) -> Spinor2 {
        spinor::lower(&self.components)
    }
}

/// ψ̄ Γ χ with ψ̄ = ψ†γ⁰ in the chiral basis.
pub fn dirac_bilinear(psi: &Spinor, gamma: &ComplexMatrix4, chi: &Spinor) -> Complex64 {
    let g0 = build_gammas(Representation::Chiral, Metric::Minkowski).mu[0];
    let rhs = (g0 * *gamma).apply(chi);
    spinor::inner(psi, &rhs)
}

/// (Λ_R, Λ_L) = exp(±σ·φ/2).
#[derive(Debug, Clone, Copy)]
pub struct BoostPair {
    pub lambda_r: Matrix2,
    pub lambda_l: Matrix2,
}

impl BoostPair {
    /// (cosh φ, sinh φ) recovered from the eigenvalues e^{±φ/2} of Λ_R.
    pub fn rapidity(&self) -> (f64, f64) {
        let half_tr = self.lambda_r.trace().re / 2.0;
        let det = self.lambda_r.det().re;
        let top = half_tr + (half_tr * half_tr - det).max(0.0).sqrt();
        let phi = 2.0 * top.ln();
        (phi.cosh(), phi.sinh())
    }
}

/// Λ_{R,L} = (E + m ± σ·p) / √(2m(E + m)). The closed form has no
/// cancellation as |p| → 0 and returns the identity at rest.
pub fn boost_pair(p: [f64; 3], m: f64) -> Result<BoostPair> {
    if !(m > 0.0) {
        return Err(Error::NonPositiveMass(m));
    }
    let e = energy(p, m);
    let norm = 1.0 / (2.0 * m * (e + m)).sqrt();
    let base = Matrix2::identity() * (e + m);
    let sp = Matrix2::sigma_dot(p);
    Ok(BoostPair { lambda_r: (base + sp) * norm, lambda_l: (base - sp) * norm })
}

/// (θ, φ) of the momentum direction, (0, 0) at rest.
pub fn direction_angles(p: [f64; 3]) -> (f64, f64) {
    let r = norm3(p);
    if r == 0.0 {
        return (0.0, 0.0);
    }
    let theta = (p[2] / r).clamp(-1.0, 1.0).acos();
    let phi = if p[0] == 0.0 && p[1] == 0.0 { 0.0 } else { p[1].atan2(p[0]) };
    (theta, phi)
}

pub fn helicity_basis(p: [f64; 3], h: Helicity) -> Spinor2 {
    let (theta, phi) = direction_angles(p);
    let (s, c) = (theta / 2.0).sin_cos();
    let em = Complex64::from_polar(1.0, -phi / 2.0);
    let ep = Complex64::from_polar(1.0, phi / 2.0);
    match h {
        Helicity::Plus => [em * c, ep * s],
        Helicity::Minus => [-em * s, ep * c],
    }
}

/// Coefficients and phases of the rest-frame relation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RestRelationParams {
    pub a: Complex64,
    pub b: Complex64,
    pub theta1: f64,
    pub theta2: f64,
    pub phi: f64,
}

impl RestRelationParams {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        Self { a, b, theta1: 0.0, theta2: 0.0, phi: 0.0 }
    }
}

/// φ_L^h(0) = a (−1)^{1/2−h} e^{i(θ₁+θ₂)} Θ [φ_R^{−h}(0)]* + b e^{2iθ_h} Ξ⁻¹ [φ_R^h(0)]*
///
/// θ_h is θ₁ for h = +1/2 and θ₂ for h = −1/2.
pub fn rest_relation(params: &RestRelationParams, h: Helicity, phi_r_h: &Spinor2, phi_r_minus_h: &Spinor2) -> Spinor2 {
    let conj = |v: &Spinor2| v.map(|z| z.conj());
    let sign = if h == Helicity::Plus { 1.0 } else { -1.0 };
    let theta_h = if h == Helicity::Plus { params.theta1 } else { params.theta2 };
    let t1 = wigner_theta().apply(&conj(phi_r_minus_h));
    let t2 = wigner_xi(-params.phi).apply(&conj(phi_r_h));
    let ca = params.a * sign * Complex64::from_polar(1.0, params.theta1 + params.theta2);
    let cb = params.b * Complex64::from_polar(1.0, 2.0 * theta_h);
    [ca * t1[0] + cb * t2[0], ca * t1[1] + cb * t2[1]]
}

/// The two sign branches of the boosted system; branch s carries the mass
/// m(1 − s b)/a.
pub fn dispersion_residuals(a: f64, b: f64) -> [f64; 2] {
    [1.0, -1.0].map(|s: f64| (1.0 - s * b).powi(2) - a * a)
}

/// Branch sign s selected for (a, b): the one whose mass m(1 − s b)/a equals
/// m. Ties (b = 0) resolve to s = +1.
pub fn select_branch(a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    let [rp, rm] = dispersion_residuals(a, b).map(f64::abs);
    let (s, r) = if rm < rp { (-1.0, rm) } else { (1.0, rp) };
    if r > tol {
        return Err(Error::Incompatible {
            reason: format!("no branch with mass m for a = {a}, b = {b}; need (1 ∓ b)² = a²"),
            residual: r,
        });
    }
    if (1.0 - s * b) / a <= 0.0 {
        return Err(Error::Incompatible { reason: "branch has non-positive mass ratio (1 − s b)/a".into(), residual: r });
    }
    Ok(s)
}

/// Unnormalized-sign u_h = (R χ_h, L χ_h) with L = A_h R/(1 − s b),
/// A_h = a(p₀ − 2h|p|)/m.
fn direct_u(p: [f64; 3], h: Helicity, a: f64, b: f64, m: f64, s: f64) -> Spinor {
    let e = energy(p, m);
    let ah = a * (e - h.sign() * norm3(p)) / m;
    let k = 1.0 - s * b;
    let r = (k / (2.0 * ah)).sqrt();
    let l = ah * r / k;
    let chi = helicity_basis(p, h);
    spinor::join(chi.map(|z| z * r), chi.map(|z| z * l))
}

/// u_h(p) solving the boosted pair of rest-frame relations, normalized to
/// ū u = 1. The pair (u_+, u_−) returned for the two helicities solves the
/// coupled system jointly.
pub fn build_u_spinor(p: [f64; 3], h: Helicity, a: f64, b: f64, m: f64) -> Result<SpinorState> {
    let momentum = FourVector::on_shell(p, m)?;
    let s = select_branch(a, b, 1e-10)?;
    let mut components = direct_u(p, h, a, b, m, s);
    if h == Helicity::Minus {
        components = spinor::scale(&components, Complex64::new(s, 0.0));
    }
    Ok(SpinorState { components, momentum, helicity: h, kind: SpinorKind::Particle })
}

/// v_h = C u_h*.
pub fn build_v_spinor(p: [f64; 3], h: Helicity, a: f64, b: f64, m: f64) -> Result<SpinorState> {
    let u = build_u_spinor(p, h, a, b, m)?;
    Ok(charge_conjugate(&u))
}

pub fn charge_conjugate(u: &SpinorState) -> SpinorState {
    let components = charge_conjugation_chiral().apply(&spinor::conj(&u.components));
    let kind = match u.kind {
        SpinorKind::Particle => SpinorKind::Antiparticle,
        SpinorKind::Antiparticle => SpinorKind::Particle,
    };
    SpinorState { components, momentum: u.momentum, helicity: u.helicity, kind }
}

fn check_pair(u_h: &SpinorState, u_mh: &SpinorState) -> Result<()> {
    let dp = (0..4).map(|k| (u_h.momentum.components[k] - u_mh.momentum.components[k]).norm()).fold(0.0, f64::max);
    if dp > 1e-12 || u_h.momentum.metric != u_mh.momentum.metric {
        return Err(Error::MomentumMismatch(format!("spinor momenta differ by {dp:e}")));
    }
    if u_h.helicity == u_mh.helicity {
        return Err(Error::InvalidParameter("spinor pair must have opposite helicities".into()));
    }
    Ok(())
}

/// ‖[a p̂/m − 1] u_h + i b (−1)^{1/2−h} γ⁵ C u*_{−h}‖
pub fn mixed_helicity_residual(u_h: &SpinorState, u_mh: &SpinorState, a: f64, b: f64, m: f64) -> Result<f64> {
    check_pair(u_h, u_mh)?;
    let g = build_gammas(Representation::Chiral, Metric::Minkowski);
    let p = u_h.momentum.to_minkowski();
    let op = g.slash(&p.components) * (a / m) - ComplexMatrix4::identity();
    let sign = if u_h.helicity == Helicity::Plus { 1.0 } else { -1.0 };
    let mix = (g.five * charge_conjugation_chiral()) * (I * (b * sign));
    let r = spinor::add(&op.apply(&u_h.components), &mix.apply(&spinor::conj(&u_mh.components)));
    Ok(spinor::norm(&r))
}

/// Worst residual of the two boosted 2-spinor relations
///
/// ```text
/// φ_L^h = a (p₀ − σ·p)/m φ_R^h + b (−1)^{1/2+h} Θ Ξ φ_R^{−h}
/// φ_R^h = a (p₀ + σ·p)/m φ_L^h + b (−1)^{1/2+h} Θ Ξ φ_L^{−h}
/// ```
///
/// with Ξ at the azimuth of p.
pub fn two_spinor_residual(u_h: &SpinorState, u_mh: &SpinorState, a: f64, b: f64, m: f64) -> Result<f64> {
    check_pair(u_h, u_mh)?;
    let p = u_h.momentum.to_minkowski();
    let e = p.time().re;
    let sp = Matrix2::sigma_dot(p.spatial());
    let id = Matrix2::identity();
    let (_, phi) = direction_angles(p.spatial());
    let sign = if u_h.helicity == Helicity::Plus { -1.0 } else { 1.0 };
    let mix = wigner_theta() * wigner_xi(phi) * sign * b;
    let lhs_l = u_h.left();
    let rhs_l = add2(((id * e - sp) * (a / m)).apply(&u_h.right()), mix.apply(&u_mh.right()));
    let lhs_r = u_h.right();
    let rhs_r = add2(((id * e + sp) * (a / m)).apply(&u_h.left()), mix.apply(&u_mh.left()));
    Ok(diff2(&lhs_l, &rhs_l).max(diff2(&lhs_r, &rhs_r)))
}

fn add2(x: Spinor2, y: Spinor2) -> Spinor2 {
    [x[0] + y[0], x[1] + y[1]]
}

fn diff2(x: &Spinor2, y: &Spinor2) -> f64 {
    ((x[0] - y[0]).norm_sqr() + (x[1] - y[1]).norm_sqr()).sqrt()
}

/// Gram matrix G_ij = ψ̄_i ψ_j.
pub fn normalization_check(states: &[SpinorState]) -> Vec<Vec<Complex64>> {
    states.iter().map(|x| states.iter().map(|y| x.bar_dot(y)).collect()).collect()
}

/// Largest deviation of a Gram matrix from ±δ according to the kinds.
pub fn gram_defect(states: &[SpinorState]) -> f64 {
    let g = normalization_check(states);
    let mut worst: f64 = 0.0;
    for (i, row) in g.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            let target = if i != j {
                ZERO
            } else if states[i].kind == SpinorKind::Particle {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(-1.0, 0.0)
            };
            worst = worst.max((z - target).norm());
        }
    }
    worst
}
