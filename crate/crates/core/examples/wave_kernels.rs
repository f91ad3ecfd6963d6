//! Solution operator of u'' + A u = 0 through c(t²A) and s(t, A):
//! u(t) = c(t²A) u₀ + s(t, A) u₀'.

use trigmat::{wave_cos_sin, DenseMatrix, Precision};

pub fn run_example() -> trigmat::Result<()> {
    // Stiffness matrix of a chain of three unit masses and four unit springs.
    let a = DenseMatrix::from_rows(&[
        vec![2.0, -1.0, 0.0],
        vec![-1.0, 2.0, -1.0],
        vec![0.0, -1.0, 2.0],
    ])?;
    let u0 = [1.0, 0.0, 0.0];
    let v0 = [0.0, 0.0, 0.0];
    for t in [0.0, 0.5, 2.0, 10.0] {
        let report = wave_cos_sin(&a, t, Precision::Double)?;
        let (c, s) = (&report.result.c_part, &report.result.s_part);
        let u: Vec<f64> = (0..3)
            .map(|i| (0..3).map(|j| c[(i, j)] * u0[j] + s[(i, j)] * v0[j]).sum())
            .collect();
        println!(
            "t = {t:>4}: {} s = {:<2} products {:<3} u = [{:+.6}, {:+.6}, {:+.6}]",
            report.scheme_used, report.scaling_exponent, report.total_products.to_string(), u[0], u[1], u[2]
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> trigmat::Result<()> {
    run_example()
}
