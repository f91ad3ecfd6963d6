//! Runs both methods over a corpus and prints the summary plus the first
//! CSV rows.

use trigmat::bench::{run_bench, write_csv};
use trigmat::gallery::{generate_corpus, CorpusSpec};
use trigmat::Precision;

pub fn run_example() -> trigmat::Result<()> {
    let corpus = generate_corpus(&CorpusSpec::sized(8, 60, 7))?;
    let report = run_bench(&corpus, Precision::Double)?;
    println!("{}", report.summary);
    let mut csv = Vec::new();
    write_csv(&report.records[..6], &mut csv)?;
    print!("{}", String::from_utf8_lossy(&csv));
    for o in &report.overscaled {
        println!("overscaled: matrix {} ({}) s {} vs {}", o.matrix_id, o.class_tag, o.scaling_s, o.scaling_from_square);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> trigmat::Result<()> {
    run_example()
}
