//! Pointwise densities built from Ψ, ∂Ψ, Ψ̄ and ∂Ψ̄ in Euclidean variables.
//!
//! Every density is a bilinear form in (Ψ̄-side data, Ψ-side data), so the
//! same functions serve the pointwise quadrature and the pairwise closed form.

use num_complex::Complex64;

use super::modes::FieldTerm;
use super::params::EuclideanCouplings;
use crate::algebra::matrix::spinor;
use crate::algebra::{build_gammas, sigma_tensor, ComplexMatrix4, Metric, Representation, Spinor, I, ZERO};

/// Euclidean chiral γ matrices and σ_μν, shared by every density.
#[derive(Debug, Clone)]
pub struct Frame {
    pub gamma: [ComplexMatrix4; 4],
    pub sigma: [[ComplexMatrix4; 4]; 4],
}

impl Default for Frame {
    fn default() -> Self {
        let g = build_gammas(Representation::Chiral, Metric::Euclidean);
        Self { gamma: g.mu, sigma: sigma_tensor(&g) }
    }
}

/// Ψ and Ψ̄ with first derivatives at one point. `bar` is the row Ψ†γ₄.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldData {
    pub psi: Spinor,
    pub dpsi: [Spinor; 4],
    pub bar: Spinor,
    pub dbar: [Spinor; 4],
}

fn bar_of(s: &Spinor, g4: &ComplexMatrix4) -> Spinor {
    std::array::from_fn(|k| (0..4).map(|r| s[r].conj() * g4[(r, k)]).sum())
}

fn row_times(row: &Spinor, m: &ComplexMatrix4) -> Spinor {
    std::array::from_fn(|k| (0..4).map(|r| row[r] * m[(r, k)]).sum())
}

fn dot(row: &Spinor, col: &Spinor) -> Complex64 {
    (0..4).map(|k| row[k] * col[k]).sum()
}

fn sandwich(row: &Spinor, m: &ComplexMatrix4, col: &Spinor) -> Complex64 {
    dot(row, &m.apply(col))
}

impl FieldData {
    pub fn zero() -> Self {
        Self { psi: [ZERO; 4], dpsi: [[ZERO; 4]; 4], bar: [ZERO; 4], dbar: [[ZERO; 4]; 4] }
    }

    fn add_psi(&mut self, t: &FieldTerm, ph: Complex64) {
        let s = spinor::scale(&t.spinor, ph);
        self.psi = spinor::add(&self.psi, &s);
        for mu in 0..4 {
            self.dpsi[mu] = spinor::add(&self.dpsi[mu], &spinor::scale(&s, I * t.q[mu]));
        }
    }

    fn add_bar(&mut self, t: &FieldTerm, ph: Complex64, f: &Frame) {
        let b = spinor::scale(&bar_of(&t.spinor, &f.gamma[3]), ph.conj());
        self.bar = spinor::add(&self.bar, &b);
        for mu in 0..4 {
            self.dbar[mu] = spinor::add(&self.dbar[mu], &spinor::scale(&b, -I * t.q[mu]));
        }
    }

    /// Full field at spatial point x, time t.
    pub fn at(terms: &[FieldTerm], x: &[f64; 3], t: f64, f: &Frame) -> Self {
        let mut d = Self::zero();
        for term in terms {
            let ph = term.phase(x, t);
            d.add_psi(term, ph);
            d.add_bar(term, ph, f);
        }
        d
    }

    /// Ψ̄ from `left` only and Ψ from `right` only, spatial phases dropped.
    pub fn pair(left: &FieldTerm, right: &FieldTerm, t: f64, f: &Frame) -> Self {
        let origin = [0.0; 3];
        let mut d = Self::zero();
        d.add_bar(left, left.phase(&origin, t), f);
        d.add_psi(right, right.phase(&origin, t));
        d
    }
}

/// Couplings with every entry but one (1-based index) set to zero.
pub fn isolate(c: &EuclideanCouplings, k: usize) -> EuclideanCouplings {
    EuclideanCouplings {
        alpha1: if k == 1 { c.alpha1 } else { ZERO },
        alpha2: if k == 2 { c.alpha2 } else { 0.0 },
        alpha3: if k == 3 { c.alpha3 } else { 0.0 },
        alpha4: if k == 4 { c.alpha4 } else { 0.0 },
    }
}

/// α₁[Ψ̄γ_μ∂_μΨ − ∂_μΨ̄γ_μΨ] − α₄Ψ̄Ψ + α₂∂_μΨ̄∂_μΨ + α₃∂_μΨ̄σ_μν∂_νΨ.
pub fn lagrangian(c: &EuclideanCouplings, d: &FieldData, f: &Frame) -> Complex64 {
    let mut kin = ZERO;
    let mut grad = ZERO;
    let mut tensor = ZERO;
    for mu in 0..4 {
        kin += sandwich(&d.bar, &f.gamma[mu], &d.dpsi[mu]) - sandwich(&d.dbar[mu], &f.gamma[mu], &d.psi);
        grad += dot(&d.dbar[mu], &d.dpsi[mu]);
        for nu in 0..4 {
            tensor += sandwich(&d.dbar[mu], &f.sigma[mu][nu], &d.dpsi[nu]);
        }
    }
    c.alpha1 * kin - c.alpha4 * dot(&d.bar, &d.psi) + c.alpha2 * grad + c.alpha3 * tensor
}

/// ∂L/∂(∂_μΨ) as a row: α₁Ψ̄γ_μ + α₂∂_μΨ̄ + α₃∂_αΨ̄σ_αμ.
fn momentum_row(c: &EuclideanCouplings, d: &FieldData, f: &Frame, mu: usize) -> Spinor {
    let mut r = spinor::add(&spinor::scale(&row_times(&d.bar, &f.gamma[mu]), c.alpha1), &spinor::scale(&d.dbar[mu], c.alpha2.into()));
    for a in 0..4 {
        r = spinor::add(&r, &spinor::scale(&row_times(&d.dbar[a], &f.sigma[a][mu]), c.alpha3.into()));
    }
    r
}

/// ∂L/∂(∂_μΨ̄) as a column: −α₁γ_μΨ + α₂∂_μΨ + α₃σ_μν∂_νΨ.
fn momentum_col(c: &EuclideanCouplings, d: &FieldData, f: &Frame, mu: usize) -> Spinor {
    let mut r = spinor::add(&spinor::scale(&f.gamma[mu].apply(&d.psi), -c.alpha1), &spinor::scale(&d.dpsi[mu], c.alpha2.into()));
    for nu in 0..4 {
        r = spinor::add(&r, &spinor::scale(&f.sigma[mu][nu].apply(&d.dpsi[nu]), c.alpha3.into()));
    }
    r
}

/// T_μν = −[∂L/∂(∂_μΨ) ∂_νΨ + ∂_νΨ̄ ∂L/∂(∂_μΨ̄)] + L δ_μν.
pub fn stress_tensor(c: &EuclideanCouplings, d: &FieldData, f: &Frame) -> [[Complex64; 4]; 4] {
    let l = lagrangian(c, d, f);
    let rows: [Spinor; 4] = std::array::from_fn(|mu| momentum_row(c, d, f, mu));
    let cols: [Spinor; 4] = std::array::from_fn(|mu| momentum_col(c, d, f, mu));
    std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let delta = if mu == nu { l } else { ZERO };
            -(dot(&rows[mu], &d.dpsi[nu]) + dot(&d.dbar[nu], &cols[mu])) + delta
        })
    })
}

/// T₄₄ alone, without building the other fifteen components.
pub fn stress_44(c: &EuclideanCouplings, d: &FieldData, f: &Frame) -> Complex64 {
    let l = lagrangian(c, d, f);
    -(dot(&momentum_row(c, d, f, 3), &d.dpsi[3]) + dot(&d.dbar[3], &momentum_col(c, d, f, 3))) + l
}

/// J_μ = −i[∂L/∂(∂_μΨ) Ψ − Ψ̄ ∂L/∂(∂_μΨ̄)].
pub fn current(c: &EuclideanCouplings, d: &FieldData, f: &Frame) -> [Complex64; 4] {
    std::array::from_fn(|mu| -I * (dot(&momentum_row(c, d, f, mu), &d.psi) - dot(&d.bar, &momentum_col(c, d, f, mu))))
}

/// −iJ₄, whose box integral is the charge.
pub fn charge_density(c: &EuclideanCouplings, d: &FieldData, f: &Frame) -> Complex64 {
    -I * current(c, d, f)[3]
}

/// S_μν,λ = −i[∂L/∂(∂_λΨ) N_μν Ψ + Ψ̄ N̄_μν ∂L/∂(∂_λΨ̄)] with N = σ/2 on Ψ
/// and N̄ = −σ/2 on Ψ̄.
pub fn spin_tensor(c: &EuclideanCouplings, d: &FieldData, f: &Frame) -> [[[Complex64; 4]; 4]; 4] {
    let rows: [Spinor; 4] = std::array::from_fn(|l| momentum_row(c, d, f, l));
    let cols: [Spinor; 4] = std::array::from_fn(|l| momentum_col(c, d, f, l));
    std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let n = f.sigma[mu][nu] * 0.5;
            std::array::from_fn(|l| -I * (sandwich(&rows[l], &n, &d.psi) - sandwich(&d.bar, &n, &cols[l])))
        })
    })
}

/// The spin tensor written out term by term:
///
/// ```text
/// −(i/2){α₁[Ψ̄γ_λσ_μνΨ + Ψ̄σ_μνγ_λΨ] + α₂[∂_λΨ̄σ_μνΨ − Ψ̄σ_μν∂_λΨ]
///        + α₃[∂_αΨ̄σ_αλσ_μνΨ − Ψ̄σ_μνσ_λα∂_αΨ]}
/// ```
pub fn spin_tensor_expanded(c: &EuclideanCouplings, d: &FieldData, f: &Frame) -> [[[Complex64; 4]; 4]; 4] {
    std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let s = f.sigma[mu][nu];
            std::array::from_fn(|l| {
                let g = f.gamma[l];
                let t1 = sandwich(&d.bar, &(g * s + s * g), &d.psi);
                let t2 = sandwich(&d.dbar[l], &s, &d.psi) - sandwich(&d.bar, &s, &d.dpsi[l]);
                let t3: Complex64 = (0..4)
                    .map(|a| sandwich(&d.dbar[a], &(f.sigma[a][l] * s), &d.psi) - sandwich(&d.bar, &(s * f.sigma[l][a]), &d.dpsi[a]))
                    .sum();
                -I * 0.5 * (c.alpha1 * t1 + c.alpha2 * t2 + c.alpha3 * t3)
            })
        })
    })
}

/// [2α₁γ_μ∂_μ − α₂∂_μ∂_μ − α₄]Ψ at one point, from the plane-wave terms.
pub fn field_equation(c: &EuclideanCouplings, terms: &[FieldTerm], x: &[f64; 3], t: f64, f: &Frame) -> Spinor {
    let mut out = [ZERO; 4];
    for term in terms {
        let q2: Complex64 = term.q.iter().map(|v| v * v).sum();
        let slash = (0..4).fold(ComplexMatrix4::zero(), |acc, mu| acc + f.gamma[mu] * term.q[mu]);
        let op = slash * (c.alpha1 * 2.0 * I) + ComplexMatrix4::identity() * (c.alpha2 * q2 - c.alpha4);
        out = spinor::add(&out, &spinor::scale(&op.apply(&term.spinor), term.phase(x, t)));
    }
    out
}
