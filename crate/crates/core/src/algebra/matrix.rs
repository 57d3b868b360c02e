//! Dense 2×2 and 4×4 complex matrices.
//!
//! Everything in the crate that is a constant of the representation (γ
//! matrices, σ tensor, charge conjugation, the Majorana unitary) or the value
//! of a momentum-space operator at a point lives in a [`ComplexMatrix4`].
//! The sizes are fixed, so the storage is a plain array and every value is
//! `Copy`.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// A 4-component complex column vector (bispinor).
pub type Spinor = [Complex64; 4];
/// A 2-component complex column vector (Weyl spinor).
pub type Spinor2 = [Complex64; 2];

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Complex 2×2 matrix, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct Matrix2(pub [[Complex64; 2]; 2]);

impl Matrix2 {
    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self([[a, b], [c, d]])
    }

    pub fn zero() -> Self {
        Self([[ZERO; 2]; 2])
    }

    pub fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    /// Pauli matrix σ_k for k = 1, 2, 3.
    pub fn pauli(k: usize) -> Self {
        match k {
            1 => Self::new(ZERO, ONE, ONE, ZERO),
            2 => Self::new(ZERO, -I, I, ZERO),
            3 => Self::new(ONE, ZERO, ZERO, -ONE),
            _ => panic!("Pauli index must be 1, 2 or 3, got {k}"),
        }
    }

    /// σ·n for a real 3-vector n.
    pub fn sigma_dot(n: [f64; 3]) -> Self {
        (1..=3).fold(Self::zero(), |acc, k| acc + Self::pauli(k) * n[k - 1])
    }

    pub fn dagger(&self) -> Self {
        let m = &self.0;
        Self::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn conj(&self) -> Self {
        let m = &self.0;
        Self::new(m[0][0].conj(), m[0][1].conj(), m[1][0].conj(), m[1][1].conj())
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn apply(&self, v: &Spinor2) -> Spinor2 {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    pub fn max_norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        out.0.iter_mut().flatten().for_each(|z| *z *= s);
        out
    }
}

impl Add for Matrix2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for r in 0..2 {
            for k in 0..2 {
                out.0[r][k] += rhs.0[r][k];
            }
        }
        out
    }
}

impl Sub for Matrix2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs * -1.0
    }
}

impl Mul for Matrix2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for r in 0..2 {
            for k in 0..2 {
                out.0[r][k] = self.0[r][0] * rhs.0[0][k] + self.0[r][1] * rhs.0[1][k];
            }
        }
        out
    }
}

impl Mul<f64> for Matrix2 {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

impl Mul<Complex64> for Matrix2 {
    type Output = Self;
    fn mul(self, rhs: Complex64) -> Self {
        self.scale(rhs)
    }
}

impl fmt::Debug for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Complex 4×4 matrix, row-major.
#[derive(Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ComplexMatrix4(pub [[Complex64; 4]; 4]);

impl Default for ComplexMatrix4 {
    fn default() -> Self {
        Self::zero()
    }
}

impl ComplexMatrix4 {
    pub fn zero() -> Self {
        Self([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        Self::diagonal([ONE; 4])
    }

    pub fn diagonal(d: [Complex64; 4]) -> Self {
        let mut m = Self::zero();
        for (k, z) in d.into_iter().enumerate() {
            m.0[k][k] = z;
        }
        m
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for k in 0..4 {
                m.0[r][k] = Complex64::new(rows[r][k], 0.0);
            }
        }
        m
    }

    /// Assemble from 2×2 blocks `[[a, b], [c, d]]`.
    pub fn from_blocks(a: Matrix2, b: Matrix2, c: Matrix2, d: Matrix2) -> Self {
        let mut m = Self::zero();
        for r in 0..2 {
            for k in 0..2 {
                m.0[r][k] = a.0[r][k];
                m.0[r][k + 2] = b.0[r][k];
                m.0[r + 2][k] = c.0[r][k];
                m.0[r + 2][k + 2] = d.0[r][k];
            }
        }
        m
    }

    /// Extract the 2×2 block at block-row `br`, block-column `bc`.
    pub fn block(&self, br: usize, bc: usize) -> Matrix2 {
        let mut out = Matrix2::zero();
        for r in 0..2 {
            for k in 0..2 {
                out.0[r][k] = self.0[2 * br + r][2 * bc + k];
            }
        }
        out
    }

    pub fn dagger(&self) -> Self {
        let mut out = Self::zero();
        for r in 0..4 {
            for k in 0..4 {
                out.0[r][k] = self.0[k][r].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero();
        for r in 0..4 {
            for k in 0..4 {
                out.0[r][k] = self.0[k][r];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let mut out = *self;
        out.0.iter_mut().flatten().for_each(|z| *z = f(*z));
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|k| self.0[k][k]).sum()
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest |Re| over all entries.
    pub fn max_real_part(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.re.abs()).fold(0.0, f64::max)
    }

    /// Largest |Im| over all entries.
    pub fn max_imag_part(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).max_norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance(other) < tol
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        let mut out = [ZERO; 4];
        for (r, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|k| self.0[r][k] * v[k]).sum();
        }
        out
    }

    /// Unitarity defect ‖M M† − 1‖_max.
    pub fn unitarity_defect(&self) -> f64 {
        (*self * self.dagger()).distance(&Self::identity())
    }

    /// Hermiticity defect ‖M − M†‖_max.
    pub fn hermiticity_defect(&self) -> f64 {
        self.distance(&self.dagger())
    }

    /// Determinant by partial-pivot LU.
    pub fn det(&self) -> Complex64 {
        let mut a = self.0;
        let mut det = ONE;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .unwrap();
            if a[pivot][col].norm() == 0.0 {
                return ZERO;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col];
            det *= p;
            for r in col + 1..4 {
                let f = a[r][col] / p;
                for k in col..4 {
                    let v = a[col][k];
                    a[r][k] -= f * v;
                }
            }
        }
        det
    }

    /// Inverse by Gauss–Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.0;
        let mut inv = Self::identity().0;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .unwrap();
            if a[pivot][col].norm() < 1e-300 {
                return None;
            }
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let p = a[col][col];
            for k in 0..4 {
                a[col][k] /= p;
                inv[col][k] /= p;
            }
            for r in 0..4 {
                if r != col {
                    let f = a[r][col];
                    if f != ZERO {
                        for k in 0..4 {
                            let (ak, ik) = (a[col][k], inv[col][k]);
                            a[r][k] -= f * ak;
                            inv[r][k] -= f * ik;
                        }
                    }
                }
            }
        }
        Some(Self(inv))
    }

    /// Row-major flattening, used when a matrix is treated as a vector in C¹⁶.
    pub fn flatten(&self) -> [Complex64; 16] {
        let mut out = [ZERO; 16];
        for r in 0..4 {
            for k in 0..4 {
                out[4 * r + k] = self.0[r][k];
            }
        }
        out
    }
}

impl Index<(usize, usize)> for ComplexMatrix4 {
    type Output = Complex64;
    fn index(&self, (r, k): (usize, usize)) -> &Complex64 {
        &self.0[r][k]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix4 {
    fn index_mut(&mut self, (r, k): (usize, usize)) -> &mut Complex64 {
        &mut self.0[r][k]
    }
}

impl Add for ComplexMatrix4 {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for ComplexMatrix4 {
    fn add_assign(&mut self, rhs: Self) {
        for r in 0..4 {
            for k in 0..4 {
                self.0[r][k] += rhs.0[r][k];
            }
        }
    }
}

impl Sub for ComplexMatrix4 {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl SubAssign for ComplexMatrix4 {
    fn sub_assign(&mut self, rhs: Self) {
        for r in 0..4 {
            for k in 0..4 {
                self.0[r][k] -= rhs.0[r][k];
            }
        }
    }
}

impl Neg for ComplexMatrix4 {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl Mul for ComplexMatrix4 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for r in 0..4 {
            for k in 0..4 {
                out.0[r][k] = (0..4).map(|j| self.0[r][j] * rhs.0[j][k]).sum();
            }
        }
        out
    }
}

impl Mul<Complex64> for ComplexMatrix4 {
    type Output = Self;
    fn mul(self, rhs: Complex64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<f64> for ComplexMatrix4 {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

impl fmt::Debug for ComplexMatrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.0 {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:>9.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Spinor helpers.
pub mod spinor {
    use super::*;

    pub fn zero() -> Spinor {
        [ZERO; 4]
    }

    pub fn conj(v: &Spinor) -> Spinor {
        v.map(|z| z.conj())
    }

    pub fn add(a: &Spinor, b: &Spinor) -> Spinor {
        std::array::from_fn(|k| a[k] + b[k])
    }

    pub fn sub(a: &Spinor, b: &Spinor) -> Spinor {
        std::array::from_fn(|k| a[k] - b[k])
    }

    pub fn scale(a: &Spinor, s: Complex64) -> Spinor {
        a.map(|z| z * s)
    }

    /// a† b
    pub fn inner(a: &Spinor, b: &Spinor) -> Complex64 {
        a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
    }

    pub fn norm(a: &Spinor) -> f64 {
        a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(a: &Spinor) -> f64 {
        a.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn join(upper: Spinor2, lower: Spinor2) -> Spinor {
        [upper[0], upper[1], lower[0], lower[1]]
    }

    pub fn upper(v: &Spinor) -> Spinor2 {
        [v[0], v[1]]
    }

    pub fn lower(v: &Spinor) -> Spinor2 {
        [v[2], v[3]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ComplexMatrix4 {
        let mut m = ComplexMatrix4::zero();
        for r in 0..4 {
            for k in 0..4 {
                m.0[r][k] = c((r * 4 + k) as f64 * 0.3 - 1.0, (r as f64 - k as f64) * 0.7);
            }
            m.0[r][r] += c(3.0, 0.0);
        }
        m
    }

    #[test]
    fn inverse_round_trip() {
        let m = sample();
        let inv = m.inverse().unwrap();
        assert!((m * inv).approx_eq(&ComplexMatrix4::identity(), 1e-12));
        assert!((inv * m).approx_eq(&ComplexMatrix4::identity(), 1e-12));
    }

    #[test]
    fn det_of_product_factorises() {
        let a = sample();
        let b = sample().dagger() + ComplexMatrix4::identity();
        let lhs = (a * b).det();
        let rhs = a.det() * b.det();
        assert!((lhs - rhs).norm() < 1e-9 * rhs.norm());
    }

    #[test]
    fn det_of_diagonal() {
        let m = ComplexMatrix4::diagonal([c(2.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(3.0, 0.0)]);
        assert!((m.det() - c(0.0, -6.0)).norm() < 1e-15);
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let mut m = sample();
        m.0[3] = m.0[0];
        assert!(m.inverse().is_none() || m.det().norm() < 1e-10);
        assert!(m.det().norm() < 1e-10);
    }

    #[test]
    fn blocks_round_trip() {
        let m = sample();
        let back = ComplexMatrix4::from_blocks(m.block(0, 0), m.block(0, 1), m.block(1, 0), m.block(1, 1));
        assert_eq!(m, back);
    }

    #[test]
    fn pauli_algebra() {
        let (s1, s2, s3) = (Matrix2::pauli(1), Matrix2::pauli(2), Matrix2::pauli(3));
        assert!((s1 * s2 - s3 * I).max_norm() < 1e-15);
        assert!((s2 * s2 - Matrix2::identity()).max_norm() < 1e-15);
    }
}
