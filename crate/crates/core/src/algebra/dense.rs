//! Thin bridge to `nalgebra` for the dense factorizations the fixed-size
//! types do not carry themselves: SVD (ranks, null spaces, least squares) and
//! the Schur eigenvalues used by the companion-matrix root finder.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::matrix::ComplexMatrix4;

pub type CMatrix = DMatrix<Complex64>;

pub fn to_dynamic(m: &ComplexMatrix4) -> CMatrix {
    CMatrix::from_fn(4, 4, |r, k| m.0[r][k])
}

/// Singular values in descending order.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Numerical rank with relative threshold `rel_tol · σ_max`.
pub fn rank(m: &CMatrix, rel_tol: f64) -> usize {
    let sv = singular_values(m);
    let top = sv.first().copied().unwrap_or(0.0);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}

/// Orthonormal basis of the numerical null space (columns), relative threshold.
pub fn null_space(m: &CMatrix, rel_tol: f64) -> Vec<Vec<Complex64>> {
    let n = m.ncols();
    // Pad to square so the SVD exposes every right-singular vector.
    let rows = m.nrows().max(n);
    let padded = CMatrix::from_fn(rows, n, |r, k| if r < m.nrows() { m[(r, k)] } else { Complex64::new(0.0, 0.0) });
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let top = svd.singular_values.iter().copied().fold(0.0, f64::max);
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| top == 0.0 || s <= rel_tol * top)
        .map(|(i, _)| (0..n).map(|k| v_t[(i, k)].conj()).collect())
        .collect()
}

/// Least-squares solution of `a x = b` and the residual norm ‖a x − b‖₂.
pub fn least_squares(a: &CMatrix, b: &[Complex64]) -> (Vec<Complex64>, f64) {
    let rhs = nalgebra::DVector::from_column_slice(b);
    let svd = a.clone().svd(true, true);
    let x = svd.solve(&rhs, 1e-13).expect("SVD with U and V^T");
    let resid = (a * &x - &rhs).norm();
    (x.iter().copied().collect(), resid)
}

pub fn determinant(m: &CMatrix) -> Complex64 {
    m.clone().determinant()
}

/// σ_min / σ_max, zero for the zero matrix.
pub fn relative_smallest_singular_value(m: &CMatrix) -> f64 {
    let sv = singular_values(m);
    match (sv.first(), sv.last()) {
        (Some(&top), Some(&low)) if top > 0.0 => low / top,
        _ => 0.0,
    }
}

/// Eigenvalues of a general complex square matrix via the Schur form.
pub fn eigenvalues(m: &CMatrix) -> Vec<Complex64> {
    let schur = m.clone().schur();
    let (_, t) = schur.unpack();
    (0..t.nrows()).map(|k| t[(k, k)]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::c;

    #[test]
    fn eigenvalues_of_triangular() {
        let m = CMatrix::from_row_slice(
            3,
            3,
            &[c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 2.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-3.0, 0.0)],
        );
        let mut ev = eigenvalues(&m);
        ev.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((ev[0] - c(-3.0, 0.0)).norm() < 1e-12);
        assert!((ev[1] - c(0.0, 2.0)).norm() < 1e-12);
        assert!((ev[2] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn null_space_of_rank_one() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0)]);
        assert_eq!(rank(&m, 1e-12), 1);
        let ns = null_space(&m, 1e-12);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert!((v[0] + v[1]).norm() < 1e-12);
    }

    #[test]
    fn least_squares_exact_system() {
        let a = CMatrix::from_row_slice(3, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        let (x, r) = least_squares(&a, &[c(2.0, 0.0), c(3.0, 0.0), c(5.0, 0.0)]);
        assert!(r < 1e-12);
        assert!((x[0] - c(2.0, 0.0)).norm() < 1e-12 && (x[1] - c(3.0, 0.0)).norm() < 1e-12);
    }
}
