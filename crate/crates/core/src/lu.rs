//! LU with partial pivoting, used for the rational baseline where two right
//! hand sides share one denominator.

use crate::error::{Error, Result};
use crate::ledger::CostLedger;
use crate::matrix::{norm1, DenseMatrix};

/// Pivots smaller than this multiple of `ε·‖D‖₁` are treated as zero.
pub const PIVOT_TOLERANCE: f64 = 1e3;

struct Lu {
    n: usize,
    lu: Vec<f64>,
    perm: Vec<usize>,
}

impl Lu {
    fn factor(d: &DenseMatrix) -> Result<Lu> {
        let n = d.rows();
        let threshold = PIVOT_TOLERANCE * f64::EPSILON * norm1(d);
        let mut lu = d.data().to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let (p, pivot) = (k..n)
                .map(|i| (i, lu[i * n + k].abs()))
                .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pivot <= threshold || pivot == 0.0 {
                return Err(Error::Singular { pivot, threshold });
            }
            if p != k {
                for j in 0..n {
                    lu.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            let pkk = lu[k * n + k];
            for i in k + 1..n {
                let l = lu[i * n + k] / pkk;
                lu[i * n + k] = l;
                if l != 0.0 {
                    for j in k + 1..n {
                        lu[i * n + j] -= l * lu[k * n + j];
                    }
                }
            }
        }
        Ok(Lu { n, lu, perm })
    }

    fn solve(&self, rhs: &DenseMatrix) -> DenseMatrix {
        let n = self.n;
        let m = rhs.cols();
        let mut x = DenseMatrix::from_fn(n, m, |i, j| rhs[(self.perm[i], j)]);
        for j in 0..m {
            for i in 0..n {
                let mut s = x[(i, j)];
                for k in 0..i {
                    s -= self.lu[i * n + k] * x[(k, j)];
                }
                x[(i, j)] = s;
            }
            for i in (0..n).rev() {
                let mut s = x[(i, j)];
                for k in i + 1..n {
                    s -= self.lu[i * n + k] * x[(k, j)];
                }
                x[(i, j)] = s / self.lu[i * n + i];
            }
        }
        x
    }
}

/// Solves `D X₁ = R₁` and `D X₂ = R₂` with a single factorization of `D`.
///
/// Charges one factorization and two solves (7/3 product-equivalents).
pub fn lu_solve_pair(
    denominator: &DenseMatrix,
    rhs1: &DenseMatrix,
    rhs2: &DenseMatrix,
    ledger: &mut CostLedger,
) -> Result<(DenseMatrix, DenseMatrix)> {
    denominator.ensure_square()?;
    for rhs in [rhs1, rhs2] {
        if rhs.rows() != denominator.rows() {
            return Err(Error::DimensionMismatch {
                op: "lu_solve_pair",
                left: denominator.shape(),
                right: rhs.shape(),
            });
        }
    }
    let lu = Lu::factor(denominator)?;
    ledger.charge_factorization();
    let x1 = lu.solve(rhs1);
    ledger.charge_solve();
    let x2 = lu.solve(rhs2);
    ledger.charge_solve();
    Ok((x1, x2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ledger::ProductCount;
    use crate::matrix::{linear_combination, matmul};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_denominator_returns_rhs() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = DenseMatrix::from_fn(4, 4, |_, _| rng.gen_range(-3.0..3.0));
        let mut ledger = CostLedger::new();
        let (x1, x2) = lu_solve_pair(&DenseMatrix::identity(4), &r, &r, &mut ledger).unwrap();
        assert_eq!(x1, r);
        assert_eq!(x2, r);
        assert_eq!(ledger.total(), ProductCount::from_thirds(7));
    }

    #[test]
    fn diagonal_inverse() {
        let d = DenseMatrix::diag(&[2.0, 4.0]);
        let i = DenseMatrix::identity(2);
        let (x, _) = lu_solve_pair(&d, &i, &i, &mut CostLedger::new()).unwrap();
        assert_eq!(x, DenseMatrix::diag(&[0.5, 0.25]));
    }

    #[test]
    fn residual_on_well_conditioned_system() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let d = DenseMatrix::from_fn(5, 5, |i, j| {
            rng.gen_range(-1.0..1.0) + if i == j { 6.0 } else { 0.0 }
        });
        let r1 = DenseMatrix::from_fn(5, 5, |_, _| rng.gen_range(-1.0..1.0));
        let r2 = DenseMatrix::from_fn(5, 3, |_, _| rng.gen_range(-1.0..1.0));
        let (x1, x2) = lu_solve_pair(&d, &r1, &r2, &mut CostLedger::new()).unwrap();
        for (x, r) in [(&x1, &r1), (&x2, &r2)] {
            let dx = matmul(&d, x, &mut CostLedger::new()).unwrap();
            let res = linear_combination(&[(1.0, &dx), (-1.0, r)]).unwrap();
            assert!(norm1(&res) <= 1e-12 * norm1(r));
        }
    }

    #[test]
    fn singular_denominator_rejected() {
        let d = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        let i = DenseMatrix::identity(2);
        let mut ledger = CostLedger::new();
        assert!(matches!(
            lu_solve_pair(&d, &i, &i, &mut ledger),
            Err(Error::Singular { .. })
        ));
        assert_eq!(ledger.total(), ProductCount::ZERO);
    }
}
