//! Generates a small corpus and tallies it by class.

use std::collections::BTreeMap;

use trigmat::gallery::{generate_corpus, CorpusSpec};
use trigmat::norm1;

pub fn run_example() -> trigmat::Result<()> {
    let corpus = generate_corpus(&CorpusSpec::sized(8, 200, 2024))?;
    let mut by_class: BTreeMap<String, (usize, f64, f64)> = BTreeMap::new();
    for e in &corpus {
        let family = e.class_tag().split(':').next().unwrap_or_default().to_string();
        let n = norm1(&e.matrix);
        let slot = by_class.entry(family).or_insert((0, f64::INFINITY, 0.0));
        slot.0 += 1;
        slot.1 = slot.1.min(n);
        slot.2 = slot.2.max(n);
    }
    println!("{:<10} {:>5} {:>11} {:>11}", "class", "count", "min norm", "max norm");
    for (class, (count, lo, hi)) in by_class {
        println!("{class:<10} {count:>5} {lo:>11.3e} {hi:>11.3e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> trigmat::Result<()> {
    run_example()
}
