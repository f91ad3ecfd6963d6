//! Taylor against Padé over a corpus: errors against the reference
//! evaluator, product counts and wall time per entry.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::driver::{cos_sin, pade_cos_sin, select_scheme, ComputationReport, Precision, ThetaTable};
use crate::error::Result;
use crate::gallery::CorpusEntry;
use crate::matrix::{matmul, norm1};
use crate::schemes::CosSinResult;
use crate::verify::{reference_cos_sin, relative_error, ReferencePair};
use crate::CostLedger;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Taylor,
    Pade,
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub matrix_id: usize,
    pub class_tag: String,
    pub norm: f64,
    pub method: Method,
    pub rel_err_cos: f64,
    pub rel_err_sin: f64,
    /// Product equivalents, LU counted as 1/3.
    pub products: f64,
    pub scaling_s: u32,
    /// Seconds.
    pub wall_time: f64,
}

/// A row whose scaling exponent is at least two above what the norm of `A²`
/// would call for.
#[derive(Clone, Debug, PartialEq)]
pub struct Overscaled {
    pub matrix_id: usize,
    pub class_tag: String,
    pub method: Method,
    pub scaling_s: u32,
    pub scaling_from_square: u32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub taylor_better: usize,
    pub equal: usize,
    pub pade_better: usize,
}

impl Tally {
    fn add(&mut self, taylor: f64, pade: f64, floor: f64) {
        let (t, p) = (taylor.max(floor), pade.max(floor));
        if t < p {
            self.taylor_better += 1;
        } else if t == p {
            self.equal += 1;
        } else if t > p {
            self.pade_better += 1;
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BenchSummary {
    pub entries: usize,
    pub cos: Tally,
    pub sin: Tally,
    /// Entries where Taylor used at most as many products as Padé.
    pub taylor_not_costlier: usize,
    /// Entries without a finite reference, left out of the tallies.
    pub skipped: usize,
}

impl fmt::Display for BenchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} entries | cos: taylor<pade {}, equal {}, taylor>pade {} | sin: taylor<pade {}, equal {}, taylor>pade {} | taylor products <= pade on {} | no reference {}",
            self.entries,
            self.cos.taylor_better,
            self.cos.equal,
            self.cos.pade_better,
            self.sin.taylor_better,
            self.sin.equal,
            self.sin.pade_better,
            self.taylor_not_costlier,
            self.skipped
        )
    }
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    /// Taylor then Padé for each entry, in corpus order.
    pub records: Vec<RunRecord>,
    pub summary: BenchSummary,
    pub overscaled: Vec<Overscaled>,
}

fn errors(result: &CosSinResult, reference: Option<&ReferencePair>) -> (f64, f64) {
    match reference {
        Some(r) => (relative_error(&result.cos_part, &r.cos), relative_error(&result.sin_part, &r.sin)),
        None => (f64::NAN, f64::NAN),
    }
}

fn finite_reference(entry: &CorpusEntry) -> Option<ReferencePair> {
    reference_cos_sin(&entry.matrix)
        .ok()
        .filter(|r| r.cos.data().iter().chain(r.sin.data()).all(|v| v.is_finite()))
}

fn record(
    entry: &CorpusEntry,
    method: Method,
    run: impl FnOnce() -> Result<ComputationReport<CosSinResult>>,
    reference: Option<&ReferencePair>,
) -> Result<RunRecord> {
    let start = Instant::now();
    let report = run()?;
    let wall_time = start.elapsed().as_secs_f64();
    let (rel_err_cos, rel_err_sin) = errors(&report.result, reference);
    Ok(RunRecord {
        matrix_id: entry.index,
        class_tag: entry.class_tag(),
        norm: norm1(&entry.matrix),
        method,
        rel_err_cos,
        rel_err_sin,
        products: report.total_products.as_f64(),
        scaling_s: report.scaling_exponent,
        wall_time,
    })
}

struct EntryRun {
    taylor: RunRecord,
    pade: RunRecord,
    has_reference: bool,
    scaling_from_square: [u32; 2],
}

fn run_entry(entry: &CorpusEntry, precision: Precision) -> Result<EntryRun> {
    let reference = finite_reference(entry);
    let taylor = record(entry, Method::Taylor, || cos_sin(&entry.matrix, precision), reference.as_ref())?;
    let pade = record(entry, Method::Pade, || pade_cos_sin(&entry.matrix, precision), reference.as_ref())?;
    let square = matmul(&entry.matrix, &entry.matrix, &mut CostLedger::new())?;
    let sharper = norm1(&square).sqrt();
    let scaling_from_square = [ThetaTable::taylor(precision), ThetaTable::pade8(precision)].map(|t| select_scheme(sharper, &t).1);
    Ok(EntryRun {
        taylor,
        pade,
        has_reference: reference.is_some(),
        scaling_from_square,
    })
}

/// Runs both methods on every entry. Entries run in parallel; the output
/// order follows the corpus.
pub fn run_bench(entries: &[CorpusEntry], precision: Precision) -> Result<BenchReport> {
    let runs: Vec<EntryRun> = entries.par_iter().map(|e| run_entry(e, precision)).collect::<Result<_>>()?;
    let floor = precision.unit_roundoff();
    let mut summary = BenchSummary {
        entries: runs.len(),
        ..BenchSummary::default()
    };
    let mut overscaled = Vec::new();
    let mut records = Vec::with_capacity(2 * runs.len());
    for run in runs {
        if run.has_reference {
            summary.cos.add(run.taylor.rel_err_cos, run.pade.rel_err_cos, floor);
            summary.sin.add(run.taylor.rel_err_sin, run.pade.rel_err_sin, floor);
        } else {
            summary.skipped += 1;
        }
        if run.taylor.products <= run.pade.products {
            summary.taylor_not_costlier += 1;
        }
        for (rec, &alt) in [&run.taylor, &run.pade].into_iter().zip(&run.scaling_from_square) {
            if rec.scaling_s >= alt + 2 {
                overscaled.push(Overscaled {
                    matrix_id: rec.matrix_id,
                    class_tag: rec.class_tag.clone(),
                    method: rec.method,
                    scaling_s: rec.scaling_s,
                    scaling_from_square: alt,
                });
            }
        }
        records.push(run.taylor);
        records.push(run.pade);
    }
    Ok(BenchReport {
        records,
        summary,
        overscaled,
    })
}

pub fn write_csv<W: Write>(records: &[RunRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
