//! Independent high-accuracy `cos(A)`, `sin(A)` for measuring errors.
//!
//! `A` is scaled until `‖A‖₁ ≤ 2⁻²⁰`, the plain Taylor series is summed and
//! the double-angle formulas are applied in double-double arithmetic. The
//! recursion carries `E = I − cos` instead of `cos` itself:
//!
//! `E ← 4E − 2E²`, `S ← 2S − 2SE`
//!
//! which is `C ← 2C² − I`, `S ← 2SC` rewritten so that nothing cancels while
//! `cos ≈ I`.

use nalgebra::DMatrix;

use super::dd::DdMatrix;
use crate::error::Result;
use crate::matrix::{norm1, DenseMatrix};

const SCALED_NORM: f64 = 1.0 / 1_048_576.0;
const SERIES_DEGREE: u32 = 13;

#[derive(Clone, Debug, PartialEq)]
pub struct ReferencePair {
    pub cos: DenseMatrix,
    pub sin: DenseMatrix,
    /// Number of double-angle steps taken.
    pub doublings: u32,
}

pub fn reference_cos_sin(a: &DenseMatrix) -> Result<ReferencePair> {
    a.ensure_square()?;
    a.ensure_finite()?;
    let n = a.rows();
    let mut s = 0u32;
    let mut norm = norm1(a);
    while norm > SCALED_NORM {
        norm *= 0.5;
        s += 1;
    }
    let x = DdMatrix::from_dense(a).map(|v| v.scale(f64::powi(2.0, -(s as i32))));

    // E = x²/2! − x⁴/4! + …, S = x − x³/3! + …
    let mut e = DdMatrix::zeros(n);
    let mut sin = DdMatrix::zeros(n);
    let mut term = DdMatrix::identity(n);
    for j in 1..=SERIES_DEGREE {
        term = term.mul(&x).map(|v| v.div_f64(j as f64));
        let (target, negate) = if j % 2 == 1 {
            (&mut sin, (j / 2) % 2 == 1)
        } else {
            (&mut e, (j / 2) % 2 == 0)
        };
        *target = target.zip(&term, |acc, t| if negate { acc - t } else { acc + t });
    }

    for _ in 0..s {
        let e2 = e.mul(&e);
        let se = sin.mul(&e);
        e = e.zip(&e2, |a, b| a.scale(4.0) - b.scale(2.0));
        sin = sin.zip(&se, |a, b| a.scale(2.0) - b.scale(2.0));
    }
    let cos = DdMatrix::identity(n).zip(&e, |i, v| i - v);
    Ok(ReferencePair {
        cos: cos.to_dense(),
        sin: sin.to_dense(),
        doublings: s,
    })
}

fn to_nalgebra(a: &DenseMatrix) -> DMatrix<f64> {
    DMatrix::from_row_slice(a.rows(), a.cols(), a.data())
}

/// Spectral norm.
pub fn norm2(a: &DenseMatrix) -> f64 {
    if a.data().iter().all(|&v| v == 0.0) {
        return 0.0;
    }
    to_nalgebra(a).singular_values().max()
}

/// `‖approx − exact‖₂ / ‖exact‖₂`, or the absolute error when `exact = 0`.
pub fn relative_error(approx: &DenseMatrix, exact: &DenseMatrix) -> f64 {
    let diff = norm2(&approx.sub(exact).expect("same shape"));
    let scale = norm2(exact);
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// `cos` and `sin` of a symmetric matrix through its eigendecomposition.
pub fn symmetric_cos_sin(a: &DenseMatrix) -> (DenseMatrix, DenseMatrix) {
    let eig = to_nalgebra(a).symmetric_eigen();
    let q = &eig.eigenvectors;
    let apply = |f: fn(f64) -> f64| {
        let d = DMatrix::from_diagonal(&eig.eigenvalues.map(f));
        let m = q * d * q.transpose();
        DenseMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
    };
    (apply(f64::cos), apply(f64::sin))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_matrix() {
        let r = reference_cos_sin(&DenseMatrix::zeros(3, 3)).unwrap();
        assert_eq!(r.cos, DenseMatrix::identity(3));
        assert_eq!(r.sin, DenseMatrix::zeros(3, 3));
    }

    #[test]
    fn diagonal_matches_scalar_functions() {
        let xs = [-100.0, -31.7, -3.0, -1e-3, 0.0, 2e-7, 0.5, 1.0, 7.25, 55.5, 100.0];
        let r = reference_cos_sin(&DenseMatrix::diag(&xs)).unwrap();
        for (i, &x) in xs.iter().enumerate() {
            assert!((r.cos[(i, i)] - f64::cos(x)).abs() <= 1e-14, "cos {x}");
            assert!((r.sin[(i, i)] - f64::sin(x)).abs() <= 1e-14, "sin {x}");
        }
    }

    #[test]
    fn symmetric_matches_eigendecomposition() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let b = DenseMatrix::from_fn(6, 6, |_, _| rng.gen_range(-1.0..1.0));
        let a = DenseMatrix::from_fn(6, 6, |i, j| b[(i, j)] + b[(j, i)]);
        let r = reference_cos_sin(&a).unwrap();
        let (c, s) = symmetric_cos_sin(&a);
        assert!(relative_error(&r.cos, &c) <= 1e-12);
        assert!(relative_error(&r.sin, &s) <= 1e-12);
    }

    #[test]
    fn pythagorean_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = DenseMatrix::from_fn(5, 5, |_, _| rng.gen_range(-2.0..2.0));
        let r = reference_cos_sin(&a).unwrap();
        let c = DdMatrix::from_dense(&r.cos);
        let s = DdMatrix::from_dense(&r.sin);
        let sum = c.mul(&c).zip(&s.mul(&s), |x, y| x + y).to_dense();
        let scale = 1.0 + norm1(&r.cos).powi(2) + norm1(&r.sin).powi(2);
        assert!(sum.max_abs_diff(&DenseMatrix::identity(5)) <= 1e-13 * scale);
    }

    #[test]
    fn relative_error_basics() {
        let a = DenseMatrix::identity(2);
        assert_eq!(relative_error(&a, &a), 0.0);
        let b = a.scaled(1.0 + 1e-10);
        assert!((relative_error(&b, &a) - 1e-10).abs() < 1e-16);
    }
}
