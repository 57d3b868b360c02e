//! The Majorana basis, the real split of the superposition equation and its
//! recombination.
//!
//! In the Majorana basis every γ^μ is purely imaginary, so iγ^μ∂_μ has real
//! coefficients and the first-order operators
//!
//! ```text
//! O₁ = a iγ^μ∂_μ/m − 1 − b      (mass m(1 + b)/a)
//! O₂ = a iγ^μ∂_μ/m − 1 + b      (mass m(1 − b)/a)
//! ```
//!
//! map real fields to real fields. With O₁Ψ₁ = 0 and O₂Ψ₂ = 0 the sums
//! φ = Ψ₁ + Ψ₂ and χ = Ψ₁ − Ψ₂ satisfy (D − 1)φ = bχ and (D − 1)χ = bφ,
//! hence the second-order equation, which equals −O₁O₂.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::dense::{null_space, to_dynamic};
use crate::algebra::matrix::spinor;
use crate::algebra::{build_gammas, ComplexMatrix4, GammaSet, Metric, Representation, Spinor};
use crate::barut::{superposition_coordinate, BarutParams, CoordinateOperator};
use crate::error::{Error, Result};
use crate::fourvec::{energy, FourVector};
use crate::poly::PolyOperator;

const UNITARITY_TOL: f64 = 1e-12;

fn check_unitary(u: &ComplexMatrix4) -> Result<()> {
    let d = u.unitarity_defect();
    if d > UNITARITY_TOL {
        return Err(Error::NotUnitary(d));
    }
    Ok(())
}

/// Ψ ↦ UΨ.
pub fn to_majorana(psi: &Spinor, u: &ComplexMatrix4) -> Result<Spinor> {
    check_unitary(u)?;
    Ok(u.apply(psi))
}

/// Ψ ↦ U†Ψ.
pub fn from_majorana(psi: &Spinor, u: &ComplexMatrix4) -> Result<Spinor> {
    check_unitary(u)?;
    Ok(u.dagger().apply(psi))
}

/// O ↦ U O U⁻¹.
pub fn transform_operator(o: &ComplexMatrix4, u: &ComplexMatrix4) -> Result<ComplexMatrix4> {
    check_unitary(u)?;
    Ok(*u * *o * u.dagger())
}

/// Coordinate-space coefficients of c_slash γ^μ∂_μ + c_one: the four matrices
/// multiplying ∂_μ followed by the constant matrix.
pub fn coordinate_coefficients(op: &CoordinateOperator, g: &GammaSet) -> [ComplexMatrix4; 5] {
    assert_eq!(op.box_, Complex64::new(0.0, 0.0), "first-order operators only");
    let id = ComplexMatrix4::identity();
    [g.mu[0] * op.slash, g.mu[1] * op.slash, g.mu[2] * op.slash, g.mu[3] * op.slash, id * op.one]
}

#[derive(Debug, Clone)]
pub struct SplitEquations {
    pub rep: Representation,
    pub first: CoordinateOperator,
    pub second: CoordinateOperator,
    /// Largest |Im| over every coordinate-space coefficient of both operators.
    pub max_imag: f64,
}

/// The two first-order operators, with the realness of their coefficients
/// measured in `rep` (real only in the Majorana basis).
pub fn split_equations(p: &BarutParams, rep: Representation) -> Result<SplitEquations> {
    p.validate()?;
    let g = build_gammas(rep, Metric::Minkowski);
    let d = Complex64::new(0.0, p.a / p.m);
    let first = CoordinateOperator::new(d, Complex64::new(0.0, 0.0), Complex64::new(-1.0 - p.b, 0.0));
    let second = CoordinateOperator::new(d, Complex64::new(0.0, 0.0), Complex64::new(-1.0 + p.b, 0.0));
    let max_imag = coordinate_coefficients(&first, &g)
        .iter()
        .chain(coordinate_coefficients(&second, &g).iter())
        .map(|c| c.max_imag_part())
        .fold(0.0, f64::max);
    Ok(SplitEquations { rep, first, second, max_imag })
}

/// Re(w e^{−ip·x}) for real Minkowski p.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealPlaneWave {
    pub w: Spinor,
    pub p: [f64; 4],
}

impl RealPlaneWave {
    fn phase(&self, x: &[f64; 4]) -> Complex64 {
        let px = self.p[0] * x[0] - self.p[1] * x[1] - self.p[2] * x[2] - self.p[3] * x[3];
        Complex64::from_polar(1.0, -px)
    }

    pub fn value(&self, x: &[f64; 4]) -> [f64; 4] {
        let e = self.phase(x);
        self.w.map(|z| (z * e).re)
    }

    /// (L ψ)(x) for a coordinate operator L with real coefficients in the
    /// basis of `g`. Taking Re commutes with such an L.
    pub fn apply(&self, op: &CoordinateOperator, g: &GammaSet, x: &[f64; 4]) -> [f64; 4] {
        let pv = self.p.map(|v| Complex64::new(v, 0.0));
        let out = op.on_positive_frequency(g).eval(&pv).apply(&self.w);
        let e = self.phase(x);
        out.map(|z| (z * e).re)
    }

    /// The same, without discarding the imaginary part: L(w e^{−ip·x}).
    pub fn apply_complex(&self, op: &CoordinateOperator, g: &GammaSet, x: &[f64; 4]) -> Spinor {
        let pv = self.p.map(|v| Complex64::new(v, 0.0));
        let e = self.phase(x);
        op.on_positive_frequency(g).eval(&pv).apply(&self.w).map(|z| z * e)
    }
}

/// A real solution Re(w e^{−ip·x}) of the given first-order Majorana-basis
/// operator at spatial momentum k, with mass `mass` and the null-vector index
/// `which` ∈ {0, 1} scaled by a complex amplitude.
pub fn real_plane_wave(
    op: &CoordinateOperator,
    k: [f64; 3],
    mass: f64,
    which: usize,
    amplitude: Complex64,
) -> Result<RealPlaneWave> {
    if !(mass > 0.0) {
        return Err(Error::NonPositiveMass(mass));
    }
    let g = build_gammas(Representation::Majorana, Metric::Minkowski);
    let p = [energy(k, mass), k[0], k[1], k[2]];
    let m = op.on_positive_frequency(&g).eval(&p.map(|v| Complex64::new(v, 0.0)));
    let ns = null_space(&to_dynamic(&m), 1e-10);
    let v = ns.get(which).ok_or_else(|| Error::Incompatible {
        reason: format!("operator has {} null vectors at mass {mass}", ns.len()),
        residual: ns.len() as f64,
    })?;
    let w: Spinor = std::array::from_fn(|i| v[i] * amplitude);
    Ok(RealPlaneWave { w, p })
}

/// Ψ₁, Ψ₂ as sums of real plane waves, with φ = Ψ₁ + Ψ₂ and χ = Ψ₁ − Ψ₂.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct MajoranaSplit {
    pub psi1: Vec<RealPlaneWave>,
    pub psi2: Vec<RealPlaneWave>,
}

fn add4(a: [f64; 4], b: [f64; 4], s: f64) -> [f64; 4] {
    std::array::from_fn(|i| a[i] + s * b[i])
}

fn norm4(a: &[f64; 4]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

impl MajoranaSplit {
    fn apply_sum(waves: &[RealPlaneWave], op: &CoordinateOperator, g: &GammaSet, x: &[f64; 4]) -> [f64; 4] {
        waves.iter().fold([0.0; 4], |acc, w| add4(acc, w.apply(op, g, x), 1.0))
    }

    pub fn psi1(&self, x: &[f64; 4]) -> [f64; 4] {
        self.psi1.iter().fold([0.0; 4], |acc, w| add4(acc, w.value(x), 1.0))
    }

    pub fn psi2(&self, x: &[f64; 4]) -> [f64; 4] {
        self.psi2.iter().fold([0.0; 4], |acc, w| add4(acc, w.value(x), 1.0))
    }

    pub fn phi(&self, x: &[f64; 4]) -> [f64; 4] {
        add4(self.psi1(x), self.psi2(x), 1.0)
    }

    pub fn chi(&self, x: &[f64; 4]) -> [f64; 4] {
        add4(self.psi1(x), self.psi2(x), -1.0)
    }
}

/// n⁴ points of a periodic lattice with the given spacing.
pub fn lattice_points(n: usize, spacing: f64) -> Vec<[f64; 4]> {
    let mut out = Vec::with_capacity(n.pow(4));
    for i in 0..n.pow(4) {
        let idx = [i % n, (i / n) % n, (i / n / n) % n, i / n / n / n];
        out.push(idx.map(|k| k as f64 * spacing));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RecombineReport {
    /// max |O₁Ψ₁|, |O₂Ψ₂| over the sample points.
    pub first_order: f64,
    /// max over the sample points of |E φ|, |E χ| with E the second-order operator.
    pub second_order: f64,
    /// max of the coupled pair (D − 1)φ − bχ, (D − 1)χ − bφ.
    pub coupled: f64,
}

impl RecombineReport {
    pub fn residual(&self) -> f64 {
        self.first_order.max(self.second_order).max(self.coupled)
    }
}

/// Residuals of the real split and of the recombined equations on the
/// sample points. Requires b ≠ 0.
pub fn recombine(split: &MajoranaSplit, p: &BarutParams, points: &[[f64; 4]]) -> Result<RecombineReport> {
    p.validate()?;
    if p.b == 0.0 {
        return Err(Error::ZeroSplitting);
    }
    let g = build_gammas(Representation::Majorana, Metric::Minkowski);
    let eqs = split_equations(p, Representation::Majorana)?;
    let second = superposition_coordinate(p);
    let d1 = CoordinateOperator::new(eqs.first.slash, Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0));
    let mut rep = RecombineReport { first_order: 0.0, second_order: 0.0, coupled: 0.0 };
    for x in points {
        let o1 = MajoranaSplit::apply_sum(&split.psi1, &eqs.first, &g, x);
        let o2 = MajoranaSplit::apply_sum(&split.psi2, &eqs.second, &g, x);
        rep.first_order = rep.first_order.max(norm4(&o1)).max(norm4(&o2));

        let e1 = MajoranaSplit::apply_sum(&split.psi1, &second, &g, x);
        let e2 = MajoranaSplit::apply_sum(&split.psi2, &second, &g, x);
        rep.second_order = rep.second_order.max(norm4(&add4(e1, e2, 1.0))).max(norm4(&add4(e1, e2, -1.0)));

        let d_psi1 = MajoranaSplit::apply_sum(&split.psi1, &d1, &g, x);
        let d_psi2 = MajoranaSplit::apply_sum(&split.psi2, &d1, &g, x);
        let (phi, chi) = (split.phi(x), split.chi(x));
        let c1 = add4(add4(d_psi1, d_psi2, 1.0), chi, -p.b);
        let c2 = add4(add4(d_psi1, d_psi2, -1.0), phi, -p.b);
        rep.coupled = rep.coupled.max(norm4(&c1)).max(norm4(&c2));
    }
    Ok(rep)
}

/// Momentum images of O₁ and O₂ in a given basis.
pub fn split_momentum_operators(p: &BarutParams, rep: Representation) -> Result<(PolyOperator, PolyOperator)> {
    let eqs = split_equations(p, rep)?;
    let g = build_gammas(rep, Metric::Minkowski);
    Ok((eqs.first.on_positive_frequency(&g), eqs.second.on_positive_frequency(&g)))
}

/// |O ψ| for a complex plane wave ψ = w e^{−ip·x} at the origin.
pub fn plane_wave_residual(op: &PolyOperator, w: &Spinor, p: &FourVector) -> f64 {
    spinor::norm(&op.eval_at(p).apply(w))
}
