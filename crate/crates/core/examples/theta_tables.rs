//! Shipped thresholds next to the values recomputed from the exact
//! error series.

use trigmat::driver::ThetaTable;
use trigmat::verify::{compute_theta, Output, Variant};
use trigmat::Precision;

pub fn run_example() -> trigmat::Result<()> {
    for precision in [Precision::Double, Precision::Single] {
        println!("{precision} precision");
        let tables = [ThetaTable::taylor(precision), ThetaTable::pade8(precision), ThetaTable::wave(precision)];
        for entry in tables.iter().flat_map(|t| &t.entries) {
            let fresh = compute_theta(Variant::Scheme(entry.scheme), precision)?;
            for (output, shipped) in [(Output::Cosine, entry.theta_cos), (Output::Sine, entry.theta_sin)] {
                let recomputed = fresh.theta(output);
                println!(
                    "  {:<10} {:<6} shipped {:>11.4e}  recomputed {:>11.5e}  rel delta {:>9.2e}",
                    entry.scheme.to_string(),
                    format!("{output:?}").to_lowercase(),
                    shipped,
                    recomputed,
                    (recomputed - shipped).abs() / shipped
                );
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> trigmat::Result<()> {
    run_example()
}
