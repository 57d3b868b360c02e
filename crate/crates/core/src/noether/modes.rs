//! Classical mode sums in a periodic box of side L.
//!
//! Ψ(x) = (1/L³) Σ [u_h(k) a e^{i(k·x − Et)} + v_h(k) b* e^{−i(k·x − Et)}]
//!
//! In Euclidean variables (x₄ = it, p₄ = iE) each term is s e^{iq·x} with
//! q = (k, iE) for particles and q = (−k, −iE) for antiparticles, so
//! ∂_μ acts as i q_μ on Ψ and as −i q_μ on Ψ̄.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::matrix::spinor;
use crate::algebra::{build_gammas, Metric, Representation, Spinor};
use crate::error::{Error, Result};
use crate::fourvec::energy;
use crate::spinors::{build_u_spinor, build_v_spinor, charge_conjugate, Helicity, SpinorState};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mode {
    /// Lattice vector; k = 2πn/L.
    pub n: [i32; 3],
    /// ±1/2.
    pub h: f64,
    /// Particle amplitude.
    pub a: Complex64,
    /// Antiparticle amplitude.
    pub b: Complex64,
    /// Signed mass of this mode; defaults to the set's mass. A negative value
    /// selects the branch (p̂ + |M|)u = 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeSet {
    #[serde(rename = "L")]
    pub l: f64,
    pub m: f64,
    pub modes: Vec<Mode>,
}

/// One plane-wave term s e^{iq·x} of Ψ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldTerm {
    pub spinor: Spinor,
    /// Euclidean (q₁, q₂, q₃, q₄).
    pub q: [Complex64; 4],
    /// Spatial lattice vector of e^{iq·x}.
    pub lattice: [i32; 3],
}

impl FieldTerm {
    /// e^{iq·x} at spatial point x and time t (x₄ = it).
    pub fn phase(&self, x: &[f64; 3], t: f64) -> Complex64 {
        let spatial: f64 = (0..3).map(|k| self.q[k].re * x[k]).sum();
        let temporal = self.q[3] * Complex64::new(0.0, t);
        (Complex64::new(0.0, spatial) + Complex64::i() * temporal).exp()
    }
}

/// u-spinor of signed mass M: the Dirac spinor for M > 0, γ⁵u(|M|) for M < 0.
pub fn signed_mass_spinor(k: [f64; 3], h: Helicity, mass: f64) -> Result<SpinorState> {
    let u = build_u_spinor(k, h, 1.0, 0.0, mass.abs())?;
    if mass > 0.0 {
        return Ok(u);
    }
    let g5 = build_gammas(Representation::Chiral, Metric::Minkowski).five;
    Ok(SpinorState { components: g5.apply(&u.components), ..u })
}

fn signed_mass_v(k: [f64; 3], h: Helicity, mass: f64) -> Result<SpinorState> {
    if mass > 0.0 {
        return build_v_spinor(k, h, 1.0, 0.0, mass);
    }
    Ok(charge_conjugate(&signed_mass_spinor(k, h, mass)?))
}

impl Mode {
    pub fn helicity(&self) -> Result<Helicity> {
        Helicity::from_value(self.h)
    }

    pub fn momentum(&self, l: f64) -> [f64; 3] {
        self.n.map(|v| 2.0 * PI * v as f64 / l)
    }

    pub fn signed_mass(&self, default: f64) -> f64 {
        self.mass.unwrap_or(default)
    }
}

impl ModeSet {
    pub fn new(l: f64, m: f64, modes: Vec<Mode>) -> Result<Self> {
        let s = Self { l, m, modes };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.m > 0.0) {
            return Err(Error::NonPositiveMass(self.m));
        }
        if !(self.l > 0.0) || !self.l.is_finite() {
            return Err(Error::InvalidParameter(format!("box length must be positive, got {}", self.l)));
        }
        for mode in &self.modes {
            mode.helicity()?;
            if let Some(mm) = mode.mass {
                if mm == 0.0 || !mm.is_finite() {
                    return Err(Error::InvalidParameter(format!("mode mass must be nonzero and finite, got {mm}")));
                }
            }
        }
        Ok(())
    }

    pub fn volume(&self) -> f64 {
        self.l.powi(3)
    }

    pub fn energy(&self, mode: &Mode) -> f64 {
        energy(mode.momentum(self.l), mode.signed_mass(self.m).abs())
    }

    /// Every plane-wave term of Ψ, amplitudes and the 1/L³ included.
    pub fn terms(&self) -> Result<Vec<FieldTerm>> {
        self.validate()?;
        let inv_vol = 1.0 / self.volume();
        let mut out = Vec::with_capacity(2 * self.modes.len());
        for mode in &self.modes {
            let h = mode.helicity()?;
            let k = mode.momentum(self.l);
            let mass = mode.signed_mass(self.m);
            let e = energy(k, mass.abs());
            if mode.a != Complex64::new(0.0, 0.0) {
                let u = signed_mass_spinor(k, h, mass)?;
                out.push(FieldTerm {
                    spinor: spinor::scale(&u.components, mode.a * inv_vol),
                    q: [k[0], k[1], k[2]].map(|v| Complex64::new(v, 0.0)).into_iter().chain([Complex64::new(0.0, e)]).collect::<Vec<_>>().try_into().expect("4 components"),
                    lattice: mode.n,
                });
            }
            if mode.b != Complex64::new(0.0, 0.0) {
                let v = signed_mass_v(k, h, mass)?;
                out.push(FieldTerm {
                    spinor: spinor::scale(&v.components, mode.b.conj() * inv_vol),
                    q: [-k[0], -k[1], -k[2]].map(|v| Complex64::new(v, 0.0)).into_iter().chain([Complex64::new(0.0, -e)]).collect::<Vec<_>>().try_into().expect("4 components"),
                    lattice: mode.n.map(|v| -v),
                });
            }
        }
        Ok(out)
    }

    /// Scale every amplitude by c.
    pub fn scaled(&self, c: Complex64) -> Self {
        let modes = self.modes.iter().map(|m| Mode { a: m.a * c, b: m.b * c, ..*m }).collect();
        Self { l: self.l, m: self.m, modes }
    }
}

/// (2π)³(m/E)δ³(p − k)δ_{hh'} on the box: L³ m/E when the lattice vectors and
/// helicities agree, zero otherwise.
pub fn anticommutator_normalization(n_p: [i32; 3], n_k: [i32; 3], h: f64, h2: f64, l: f64, m: f64) -> f64 {
    if n_p != n_k || (h - h2).abs() > 1e-12 {
        return 0.0;
    }
    let k = n_p.map(|v| 2.0 * PI * v as f64 / l);
    l.powi(3) * m / energy(k, m)
}
