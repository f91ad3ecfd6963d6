//! Reproducible corpus of test matrices.
//!
//! Five randomized classes plus the nine `[[1, λ], [0, −1]]` matrices with
//! `λ = 1, 10, …, 10⁸`. Each matrix is rescaled to a log-uniform target
//! 1-norm, so the corpus spans the whole range of scaling exponents.

mod special;

use std::fmt;
use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

pub use special::SPECIALS;

use crate::error::{Error, Result};
use crate::matrix::{norm1, DenseMatrix};

pub const LAMBDA_EXPONENTS: std::ops::RangeInclusive<i32> = 0..=8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixClass {
    /// Structured matrix from [`SPECIALS`].
    Special(&'static str),
    /// Dense, standard normal entries.
    Normal,
    /// Dense, uniform entries on `(0, 1)`.
    Uniform01,
    /// Dense, uniform entries on `(−0.5, 0.5)`.
    UniformCentered,
    /// Strictly upper triangular with random bandwidth.
    Nilpotent,
    /// `[[1, 10ᵏ], [0, −1]]`, before rescaling.
    Involutory { lambda_exp: i32 },
}

impl MatrixClass {
    pub fn is_involutory(&self) -> bool {
        matches!(self, MatrixClass::Involutory { .. })
    }
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixClass::Special(name) => write!(f, "special:{name}"),
            MatrixClass::Normal => f.write_str("randn"),
            MatrixClass::Uniform01 => f.write_str("rand01"),
            MatrixClass::UniformCentered => f.write_str("randc"),
            MatrixClass::Nilpotent => f.write_str("nilpotent"),
            MatrixClass::Involutory { lambda_exp } => write!(f, "lambda:1e{lambda_exp}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassCounts {
    pub special: usize,
    pub normal: usize,
    pub uniform01: usize,
    pub uniform_centered: usize,
    pub nilpotent: usize,
    /// Emit the nine `λ` matrices.
    pub involutory: bool,
}

impl ClassCounts {
    const WEIGHTS: [usize; 5] = [690, 400, 500, 501, 400];

    /// Splits `total` over the classes in the default proportions, nine
    /// entries going to the `λ` family.
    pub fn proportional(total: usize) -> Self {
        let lambda = LAMBDA_EXPONENTS.count();
        let involutory = total >= lambda;
        let rest = if involutory { total - lambda } else { total };
        let weight_sum: usize = Self::WEIGHTS.iter().sum();
        let mut c = Self::WEIGHTS.map(|w| rest * w / weight_sum);
        c[0] += rest - c.iter().sum::<usize>();
        ClassCounts {
            special: c[0],
            normal: c[1],
            uniform01: c[2],
            uniform_centered: c[3],
            nilpotent: c[4],
            involutory,
        }
    }

    pub fn total(&self) -> usize {
        self.special
            + self.normal
            + self.uniform01
            + self.uniform_centered
            + self.nilpotent
            + if self.involutory { LAMBDA_EXPONENTS.count() } else { 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorpusSpec {
    pub dimension_cap: usize,
    pub counts: ClassCounts,
    pub seed: u64,
    /// Open interval for the log-uniform target 1-norms.
    pub norm_range: (f64, f64),
}

impl CorpusSpec {
    pub const NORM_RANGE: (f64, f64) = (1e-4, 12589.254117941673); // 10^4.1

    /// 2500 matrices of dimension at most 16.
    pub fn desk(seed: u64) -> Self {
        CorpusSpec::sized(16, 2500, seed)
    }

    /// 250 matrices of dimension at most 64.
    pub fn wide(seed: u64) -> Self {
        CorpusSpec::sized(64, 250, seed)
    }

    pub fn sized(dimension_cap: usize, total: usize, seed: u64) -> Self {
        CorpusSpec {
            dimension_cap,
            counts: ClassCounts::proportional(total),
            seed,
            norm_range: Self::NORM_RANGE,
        }
    }

    fn validate(&self) -> Result<()> {
        let (lo, hi) = self.norm_range;
        if self.counts.total() == 0 {
            return Err(Error::InvalidSpec("corpus would be empty".into()));
        }
        if self.dimension_cap < 2 {
            return Err(Error::InvalidSpec(format!("dimension cap {} is below 2", self.dimension_cap)));
        }
        if !(lo > 0.0 && lo < hi && hi.is_finite()) {
            return Err(Error::InvalidSpec(format!("norm range ({lo}, {hi}) is not a positive interval")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusEntry {
    pub index: usize,
    pub class: MatrixClass,
    pub matrix: DenseMatrix,
}

impl CorpusEntry {
    pub fn class_tag(&self) -> String {
        self.class.to_string()
    }
}

fn dense(n: usize, rng: &mut ChaCha8Rng, sample: impl Fn(&mut ChaCha8Rng) -> f64) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |_, _| sample(rng))
}

fn nilpotent(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let band = rng.gen_range(1..n);
    DenseMatrix::from_fn(n, n, |i, j| {
        if j > i && j - i <= band {
            rng.sample(StandardNormal)
        } else {
            0.0
        }
    })
}

pub fn involutory(lambda: f64) -> DenseMatrix {
    DenseMatrix::from_rows(&[vec![1.0, lambda], vec![0.0, -1.0]]).expect("2×2")
}

/// Deterministic in `spec`; same seed, same bits.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusEntry>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let c = &spec.counts;
    let mut raw: Vec<(MatrixClass, DenseMatrix)> = Vec::with_capacity(c.total());
    let dim = |rng: &mut ChaCha8Rng| rng.gen_range(2..=spec.dimension_cap);

    for i in 0..c.special {
        let (name, build) = SPECIALS[i % SPECIALS.len()];
        let n = dim(&mut rng);
        raw.push((MatrixClass::Special(name), build(n, &mut rng)));
    }
    for _ in 0..c.normal {
        let n = dim(&mut rng);
        raw.push((MatrixClass::Normal, dense(n, &mut rng, |r| r.sample(StandardNormal))));
    }
    for _ in 0..c.uniform01 {
        let n = dim(&mut rng);
        raw.push((MatrixClass::Uniform01, dense(n, &mut rng, |r| r.gen::<f64>())));
    }
    for _ in 0..c.uniform_centered {
        let n = dim(&mut rng);
        raw.push((MatrixClass::UniformCentered, dense(n, &mut rng, |r| r.gen::<f64>() - 0.5)));
    }
    for _ in 0..c.nilpotent {
        let n = dim(&mut rng);
        raw.push((MatrixClass::Nilpotent, nilpotent(n, &mut rng)));
    }
    if c.involutory {
        for k in LAMBDA_EXPONENTS {
            raw.push((MatrixClass::Involutory { lambda_exp: k }, involutory(10f64.powi(k))));
        }
    }

    let (lo, hi) = (spec.norm_range.0.ln(), spec.norm_range.1.ln());
    raw.into_iter()
        .enumerate()
        .map(|(index, (class, m))| {
            let target = rng.gen_range(lo..hi).exp();
            let norm = norm1(&m);
            if norm == 0.0 {
                return Err(Error::InvalidSpec(format!("{class} produced a zero matrix")));
            }
            Ok(CorpusEntry {
                index,
                class,
                matrix: m.scaled(target / norm),
            })
        })
        .collect()
}

#[derive(Serialize)]
struct ManifestRow<'a> {
    index: usize,
    class: &'a str,
    dimension: usize,
    norm: f64,
}

pub fn matrix_file_name(index: usize) -> String {
    format!("m{index:05}.txt")
}

/// Writes one matrix file per entry and `manifest.csv` into `dir`.
pub fn write_corpus(entries: &[CorpusEntry], dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut manifest = csv::Writer::from_path(dir.join("manifest.csv"))?;
    for e in entries {
        e.matrix.write(dir.join(matrix_file_name(e.index)))?;
        let class = e.class_tag();
        manifest.serialize(ManifestRow {
            index: e.index,
            class: &class,
            dimension: e.matrix.rows(),
            norm: norm1(&e.matrix),
        })?;
    }
    manifest.flush()?;
    Ok(())
}
