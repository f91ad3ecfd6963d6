//! Factored Taylor against the order-8 Padé baseline over a range of norms:
//! product counts (LU solves included) and accuracy.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trigmat::verify::{reference_cos_sin, relative_error};
use trigmat::{cos_sin, norm1, pade_cos_sin, DenseMatrix, Precision};

pub fn run_example() -> trigmat::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let base = DenseMatrix::from_fn(8, 8, |_, _| rng.gen_range(-1.0..1.0));
    println!("{:>8} {:>10} {:>9} {:>10} {:>9} {:>10}", "norm", "taylor", "products", "pade", "products", "err ratio");
    for norm in [1e-3, 0.05, 0.5, 2.0, 10.0, 100.0] {
        let a = base.scaled(norm / norm1(&base));
        let reference = reference_cos_sin(&a)?;
        let t = cos_sin(&a, Precision::Double)?;
        let p = pade_cos_sin(&a, Precision::Double)?;
        let err = |r: &trigmat::CosSinResult| {
            relative_error(&r.cos_part, &reference.cos).max(relative_error(&r.sin_part, &reference.sin))
        };
        println!(
            "{:>8} {:>10} {:>9} {:>10} {:>9} {:>10.2}",
            norm,
            format!("{}/s{}", t.scheme_used, t.scaling_exponent),
            t.total_products.to_string(),
            format!("s{}", p.scaling_exponent),
            p.total_products.to_string(),
            err(&t.result) / err(&p.result).max(f64::EPSILON / 2.0)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> trigmat::Result<()> {
    run_example()
}
