//! Replays every scheme on the scalar polynomial `x` in exact arithmetic and
//! compares the coefficients with the true series.

use trigmat::verify::{check_order, Output, Variant};

pub fn run_example() -> trigmat::Result<()> {
    println!("{:<18} {:<6} {:>5} {:>6} {:>12} {:>9}", "scheme", "output", "order", "exact", "max rel err", "1st miss");
    for variant in Variant::all() {
        for output in Output::BOTH {
            let c = check_order(variant, output)?;
            let first = c.first_mismatch.map_or("-".to_string(), |d| d.to_string());
            println!(
                "{:<18} {:<6} {:>5} {:>6} {:>12.3e} {:>9}",
                variant.to_string(),
                format!("{output:?}").to_lowercase(),
                c.claimed_order,
                c.exact,
                c.max_rel_mismatch,
                first
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> trigmat::Result<()> {
    run_example()
}
