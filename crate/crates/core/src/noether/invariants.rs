//! Energy, charge and their per-coupling pieces for a mode set.
//!
//! The closed form pairs every Ψ̄ term with every Ψ term of equal spatial
//! lattice vector; the box integral of the pair is L³ times the pair density
//! at the origin. The quadrature sums the same densities over a uniform grid.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::density::{charge_density, current, isolate, spin_tensor, stress_44, stress_tensor, field_equation, FieldData, Frame};
use super::modes::{signed_mass_spinor, FieldTerm, Mode, ModeSet};
use super::params::{EuclideanCouplings, LagrangianParams};
use crate::algebra::matrix::spinor;
use crate::algebra::{Spinor, I, ZERO};
use crate::error::Result;
use crate::fourvec::energy;
use crate::spinors::{dirac_bilinear, Helicity};

pub const SIGN_CONVENTION: &str = "Euclidean couplings (i a1, -a2, -a3, a4); x4 = it, p4 = iE; \
Psi-bar = Psi^dagger gamma_4; H = -int T44, Q = -i int J4; \
normal ordering reorders b b^dagger -> -b^dagger b";

/// Contributions of α₁, α₂, α₃, α₄ in that order.
pub type Breakdown = [Complex64; 4];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurrentSample {
    pub x: [f64; 3],
    pub j: [Complex64; 4],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorSample {
    pub x: [f64; 3],
    pub t: [[Complex64; 4]; 4],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpinSample {
    pub x: [f64; 3],
    pub s: [[[Complex64; 4]; 4]; 4],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvariantReport {
    pub time: f64,
    pub hamiltonian: Complex64,
    pub charge: Complex64,
    pub hamiltonian_terms: Breakdown,
    pub charge_terms: Breakdown,
    /// Σ_modes coefficient × occupancy before reordering.
    pub hamiltonian_mode_sum: Complex64,
    pub charge_mode_sum: Complex64,
    /// Same sums after the fermionic reordering of antiparticle quadratics.
    pub hamiltonian_normal_ordered: Complex64,
    pub charge_normal_ordered: Complex64,
    pub current_samples: Vec<CurrentSample>,
    pub stress_samples: Vec<TensorSample>,
    pub spin_samples: Vec<SpinSample>,
    pub sign_convention: String,
}

fn add(a: Breakdown, b: Breakdown) -> Breakdown {
    std::array::from_fn(|k| a[k] + b[k])
}

fn total(b: &Breakdown) -> Complex64 {
    b.iter().sum()
}

/// (−T₄₄, −iJ₄) split by coupling.
fn energy_charge_densities(c: &EuclideanCouplings, d: &FieldData, f: &Frame) -> (Breakdown, Breakdown) {
    let mut h = [ZERO; 4];
    let mut q = [ZERO; 4];
    for k in 0..4 {
        let ck = isolate(c, k + 1);
        h[k] = -stress_44(&ck, d, f);
        q[k] = charge_density(&ck, d, f);
    }
    (h, q)
}

/// Closed-form box integrals of (−T₄₄, −iJ₄).
pub fn closed_form(c: &EuclideanCouplings, terms: &[FieldTerm], volume: f64, t: f64) -> (Breakdown, Breakdown) {
    let f = Frame::default();
    let mut h = [ZERO; 4];
    let mut q = [ZERO; 4];
    for left in terms {
        for right in terms.iter().filter(|r| r.lattice == left.lattice) {
            let (dh, dq) = energy_charge_densities(c, &FieldData::pair(left, right, t, &f), &f);
            h = add(h, dh.map(|z| z * volume));
            q = add(q, dq.map(|z| z * volume));
        }
    }
    (h, q)
}

#[derive(Debug, Clone, Copy, Default)]
struct Kahan {
    sum: Complex64,
    carry: Complex64,
}

impl Kahan {
    fn push(&mut self, x: Complex64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Uniform n³-point quadrature of (−T₄₄, −iJ₄) over one box period, with
/// compensated summation.
pub fn quadrature(c: &EuclideanCouplings, modes: &ModeSet, t: f64, n: usize) -> Result<(Breakdown, Breakdown)> {
    let terms = modes.terms()?;
    let f = Frame::default();
    let step = modes.l / n as f64;
    let weight = step.powi(3);
    let mut h = [Kahan::default(); 4];
    let mut q = [Kahan::default(); 4];
    for x in grid(n, step) {
        let (dh, dq) = energy_charge_densities(c, &FieldData::at(&terms, &x, t, &f), &f);
        for k in 0..4 {
            h[k].push(dh[k] * weight);
            q[k].push(dq[k] * weight);
        }
    }
    Ok((h.map(|s| s.sum), q.map(|s| s.sum)))
}

fn grid(n: usize, step: f64) -> impl Iterator<Item = [f64; 3]> {
    (0..n * n * n).map(move |idx| [idx % n, (idx / n) % n, idx / (n * n)].map(|i| i as f64 * step))
}

/// −(2E²/m)(α₁ + mα₂), with the couplings taken as given.
pub fn mode_hamiltonian_coefficient(alpha1: Complex64, alpha2: f64, p: [f64; 3], m: f64) -> Complex64 {
    let e = energy(p, m);
    -(2.0 * e * e / m) * (alpha1 + m * alpha2)
}

/// ū_h σ_{i4} p_i u_{h'} with the Euclidean σ.
pub fn alpha3_charge_bilinear(p: [f64; 3], h: Helicity, h2: Helicity, m: f64) -> Result<Complex64> {
    let f = Frame::default();
    let u = signed_mass_spinor(p, h, m)?;
    let u2 = signed_mass_spinor(p, h2, m)?;
    let s = (0..3).fold(crate::algebra::ComplexMatrix4::zero(), |acc, i| acc + f.sigma[i][3] * p[i]);
    Ok(dirac_bilinear(&u.components, &s, &u2.components))
}

/// −(2E/m)[(α₁ + mα₂)δ_{hh'} − iα₃ ū_h σ_{i4}p_i u_{h'}].
pub fn mode_charge_coefficient(
    alpha1: Complex64,
    alpha2: f64,
    alpha3: f64,
    p: [f64; 3],
    h: Helicity,
    h2: Helicity,
    m: f64,
) -> Result<Complex64> {
    let e = energy(p, m);
    let delta = if h == h2 { 1.0 } else { 0.0 };
    let bil = alpha3_charge_bilinear(p, h, h2, m)?;
    Ok(-(2.0 * e / m) * ((alpha1 + m * alpha2) * delta - I * alpha3 * bil))
}

/// (raw H, raw Q, normal-ordered H, normal-ordered Q) from the per-mode
/// coefficients evaluated with Euclidean couplings.
pub fn mode_sums(c: &EuclideanCouplings, modes: &ModeSet) -> Result<[Complex64; 4]> {
    let mut out = [ZERO; 4];
    let vol = modes.volume();
    // Repeated (n, h, M) entries describe one mode; their amplitudes add.
    let mut merged: BTreeMap<([i32; 3], bool, u64), (Mode, Complex64, Complex64)> = BTreeMap::new();
    for mode in &modes.modes {
        let key = (mode.n, mode.helicity()? == Helicity::Plus, mode.signed_mass(modes.m).to_bits());
        let entry = merged.entry(key).or_insert((*mode, ZERO, ZERO));
        entry.1 += mode.a;
        entry.2 += mode.b;
    }
    for (mode, a, b) in merged.into_values() {
        let h = mode.helicity()?;
        let mass = mode.signed_mass(modes.m);
        let p = mode.momentum(modes.l);
        let ch = mode_hamiltonian_coefficient(c.alpha1, c.alpha2, p, mass);
        let cq = mode_charge_coefficient(c.alpha1, c.alpha2, c.alpha3, p, h, h, mass)?;
        let (na, nb) = (a.norm_sqr() / vol, b.norm_sqr() / vol);
        out[0] += ch * (na - nb);
        out[1] += cq * (na + nb);
        out[2] += ch * (na + nb);
        out[3] += cq * (na - nb);
    }
    Ok(out)
}

/// Sample points: the box corner and its centre.
fn sample_points(l: f64) -> Vec<[f64; 3]> {
    vec![[0.0; 3], [0.5 * l; 3]]
}

pub fn invariants(params: &LagrangianParams, modes: &ModeSet, t: f64) -> Result<InvariantReport> {
    let c = params.euclidean();
    let terms = modes.terms()?;
    let (h, q) = closed_form(&c, &terms, modes.volume(), t);
    let sums = mode_sums(&c, modes)?;
    let f = Frame::default();
    let mut current_samples = Vec::new();
    let mut stress_samples = Vec::new();
    let mut spin_samples = Vec::new();
    for x in sample_points(modes.l) {
        let d = FieldData::at(&terms, &x, t, &f);
        current_samples.push(CurrentSample { x, j: current(&c, &d, &f) });
        stress_samples.push(TensorSample { x, t: stress_tensor(&c, &d, &f) });
        spin_samples.push(SpinSample { x, s: spin_tensor(&c, &d, &f) });
    }
    Ok(InvariantReport {
        time: t,
        hamiltonian: total(&h),
        charge: total(&q),
        hamiltonian_terms: h,
        charge_terms: q,
        hamiltonian_mode_sum: sums[0],
        charge_mode_sum: sums[1],
        hamiltonian_normal_ordered: sums[2],
        charge_normal_ordered: sums[3],
        current_samples,
        stress_samples,
        spin_samples,
        sign_convention: SIGN_CONVENTION.to_string(),
    })
}

/// Spin tensor S_μν,λ of the mode set at (x, t).
pub fn spin_tensor_sample(params: &LagrangianParams, modes: &ModeSet, x: [f64; 3], t: f64) -> Result<[[[Complex64; 4]; 4]; 4]> {
    let f = Frame::default();
    let d = FieldData::at(&modes.terms()?, &x, t, &f);
    Ok(spin_tensor(&params.euclidean(), &d, &f))
}

/// Lagrangian density of the mode set at (x, t).
pub fn lagrangian_density(params: &LagrangianParams, modes: &ModeSet, x: [f64; 3], t: f64) -> Result<Complex64> {
    let f = Frame::default();
    let d = FieldData::at(&modes.terms()?, &x, t, &f);
    Ok(super::density::lagrangian(&params.euclidean(), &d, &f))
}

/// max over an n³ grid at t of |[2α₁γ·∂ − α₂∂² − α₄]Ψ|, divided by the sum of
/// the term amplitudes so the value does not scale with the field.
pub fn euler_lagrange_residual(params: &LagrangianParams, modes: &ModeSet, t: f64, n: usize) -> Result<f64> {
    let terms = modes.terms()?;
    let scale: f64 = terms.iter().map(|term| spinor::norm(&term.spinor)).sum();
    if scale == 0.0 {
        return Ok(0.0);
    }
    let c = params.euclidean();
    let f = Frame::default();
    let step = modes.l / n as f64;
    let worst = grid(n, step).map(|x| spinor::norm(&field_equation(&c, &terms, &x, t, &f))).fold(0.0, f64::max);
    Ok(worst / scale)
}

/// Real part of −iJ₄ on an n³ grid.
pub fn charge_density_samples(params: &LagrangianParams, modes: &ModeSet, t: f64, n: usize) -> Result<Vec<f64>> {
    let terms = modes.terms()?;
    let c = params.euclidean();
    let f = Frame::default();
    let step = modes.l / n as f64;
    Ok(grid(n, step).map(|x| charge_density(&c, &FieldData::at(&terms, &x, t, &f), &f).re).collect())
}

/// Masses of the two first-order branches of −2iα₁p̂ + α₂p² − α₄ = 0 at
/// p̂ = M: the roots of α₂M² − 2iα₁M − α₄ = 0. Real only when α₁ is
/// imaginary; returns the real parts ordered (positive, negative).
pub fn branch_masses(params: &LagrangianParams) -> Option<[f64; 2]> {
    let b = -2.0 * I * params.alpha1;
    if params.alpha2 == 0.0 || b.im.abs() > 1e-14 * b.norm().max(1.0) {
        return None;
    }
    let (a, b) = (params.alpha2, b.re);
    let disc = b * b + 4.0 * a * params.alpha4;
    if disc < 0.0 {
        return None;
    }
    let r = disc.sqrt();
    let (x, y) = ((-b + r) / (2.0 * a), (-b - r) / (2.0 * a));
    Some(if x >= y { [x, y] } else { [y, x] })
}

/// Helper used by tests and the CLI: σ₃ expectation of the 2-spinor halves.
pub fn sigma3_expectation(s: &Spinor) -> f64 {
    let z = |v: Complex64| v.norm_sqr();
    z(s[0]) - z(s[1]) + z(s[2]) - z(s[3])
}
