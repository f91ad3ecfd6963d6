//! cos(A) and sin(A) of a small non-normal matrix, with the scheme and
//! scaling the driver picked and a check against the reference evaluator.

use trigmat::verify::{reference_cos_sin, relative_error};
use trigmat::{cos_sin, DenseMatrix, Precision};

pub fn run_example() -> trigmat::Result<()> {
    let a = DenseMatrix::from_rows(&[
        vec![0.5, 2.0, 0.0],
        vec![-1.0, 0.25, 3.0],
        vec![0.0, 0.1, -0.75],
    ])?;
    let reference = reference_cos_sin(&a)?;
    for precision in [Precision::Double, Precision::Single] {
        let report = cos_sin(&a, precision)?;
        println!(
            "{precision}: {} with s = {}, {} products",
            report.scheme_used, report.scaling_exponent, report.total_products
        );
        println!(
            "  relative error cos {:.2e}, sin {:.2e}",
            relative_error(&report.result.cos_part, &reference.cos),
            relative_error(&report.result.sin_part, &reference.sin)
        );
    }
    let report = cos_sin(&a, Precision::Double)?;
    println!("cos(A) =\n{}", report.result.cos_part.to_text());
    println!("sin(A) =\n{}", report.result.sin_part.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> trigmat::Result<()> {
    run_example()
}
