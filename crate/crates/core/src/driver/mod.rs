//! Scaling and squaring around the factored schemes.
//!
//! The input is scaled by `2⁻ˢ`, the cheapest adequate scheme is evaluated,
//! and `s` double-angle steps recover the result. Each step costs two
//! products in both pipelines:
//!
//! * cos/sin: `S ← 2SC`, `C ← 2C² − I`
//! * wave kernels: `s(2t, A) = 2 s(t, A) c(t²A)`, `c(4t²A) = 2c(t²A)² − I`

mod theta;
mod wave_theta;

use std::fmt;
use std::str::FromStr;

pub use theta::{ThetaEntry, ThetaTable, PADE_LITERATURE};

use crate::error::{Error, Result};
use crate::ledger::{CostLedger, ProductCount};
use crate::matrix::{linear_combination, matmul, norm1, DenseMatrix};
use crate::schemes::{pade8_cos_sin, taylor_cos_sin, wave_kernels, CosSinResult, SchemeId, WaveResult};

/// Accuracy target. Arithmetic is binary64 either way; this only picks the
/// threshold table.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Precision {
    #[default]
    Double,
    Single,
}

impl Precision {
    pub fn unit_roundoff(self) -> f64 {
        match self {
            Precision::Double => f64::powi(2.0, -53),
            Precision::Single => f64::powi(2.0, -24),
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Precision::Double => "double",
            Precision::Single => "single",
        })
    }
}

impl FromStr for Precision {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "double" => Ok(Precision::Double),
            "single" => Ok(Precision::Single),
            other => Err(format!("unknown precision {other:?} (expected double or single)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComputationReport<R> {
    pub result: R,
    pub scheme_used: SchemeId,
    pub scaling_exponent: u32,
    /// Scheme cost plus two products per doubling step.
    pub total_products: ProductCount,
}

fn doublings_needed(norm: f64, theta: f64, factor: f64) -> u32 {
    let mut s = 0;
    let mut scaled = norm;
    while scaled > theta {
        scaled /= factor;
        s += 1;
    }
    s
}

/// Picks the scheme and scaling exponent for a given norm.
///
/// If some scheme covers `norm` unscaled, the cheapest such scheme wins.
/// Otherwise every scheme is paired with its minimal exponent and the lowest
/// total cost (scheme cost + 2s) wins, ties going to fewer doublings.
pub fn select_scheme(norm: f64, table: &ThetaTable) -> (SchemeId, u32) {
    debug_assert!(norm >= 0.0);
    if let Some(e) = table.entries.iter().find(|e| norm <= e.theta_eff()) {
        return (e.scheme, 0);
    }
    table
        .entries
        .iter()
        .map(|e| {
            let s = doublings_needed(norm, e.theta_eff(), table.norm_factor_per_doubling);
            (e.cost + ProductCount::products(2 * s as u64), s, e.scheme)
        })
        .min_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)))
        .map(|(_, s, scheme)| (scheme, s))
        .expect("non-empty threshold table")
}

/// Multiplies by `2^exp` exactly, splitting huge exponents so the factor
/// itself never under- or overflows.
fn scale_pow2(m: &DenseMatrix, exp: i32) -> DenseMatrix {
    let mut out = m.clone();
    let mut left = exp;
    while left != 0 {
        let step = left.clamp(-512, 512);
        out = out.scaled(f64::powi(2.0, step));
        left -= step;
    }
    out
}

fn check_input(a: &DenseMatrix) -> Result<()> {
    a.ensure_square()?;
    a.ensure_finite()
}

/// One double-angle step for a (cos-like, sin-like) pair.
fn double_angle(c: &DenseMatrix, s: &DenseMatrix, id: &DenseMatrix, ledger: &mut CostLedger) -> (DenseMatrix, DenseMatrix) {
    let sc = matmul(s, c, ledger).expect("square operands");
    let cc = matmul(c, c, ledger).expect("square operands");
    let s2 = sc.scaled(2.0);
    let c2 = linear_combination(&[(2.0, &cc), (-1.0, id)]).expect("square operands");
    (c2, s2)
}

fn recover(
    mut c: DenseMatrix,
    mut s: DenseMatrix,
    steps: u32,
    ledger: &mut CostLedger,
) -> (DenseMatrix, DenseMatrix) {
    let id = DenseMatrix::identity(c.rows());
    for _ in 0..steps {
        (c, s) = double_angle(&c, &s, &id, ledger);
    }
    (c, s)
}

fn cos_sin_with(
    a: &DenseMatrix,
    table: &ThetaTable,
    eval: impl FnOnce(&DenseMatrix, SchemeId, &mut CostLedger) -> Result<CosSinResult>,
) -> Result<ComputationReport<CosSinResult>> {
    check_input(a)?;
    let norm = norm1(a);
    if !norm.is_finite() {
        return Err(Error::NonFinite { row: 0, col: 0 });
    }
    let (scheme, s) = select_scheme(norm, table);
    let scaled = scale_pow2(a, -(s as i32));
    let mut ledger = CostLedger::new();
    let base = eval(&scaled, scheme, &mut ledger)?;
    let (cos_part, sin_part) = recover(base.cos_part, base.sin_part, s, &mut ledger);
    Ok(ComputationReport {
        result: CosSinResult {
            cos_part,
            sin_part,
            cost: ledger,
        },
        scheme_used: scheme,
        scaling_exponent: s,
        total_products: ledger.total(),
    })
}

/// `cos(A)` and `sin(A)` with the factored Taylor schemes.
pub fn cos_sin(a: &DenseMatrix, precision: Precision) -> Result<ComputationReport<CosSinResult>> {
    cos_sin_with(a, &ThetaTable::taylor(precision), taylor_cos_sin)
}

/// `cos(A)` and `sin(A)` with the order-8 Padé baseline.
pub fn pade_cos_sin(a: &DenseMatrix, precision: Precision) -> Result<ComputationReport<CosSinResult>> {
    cos_sin_with(a, &ThetaTable::pade8(precision), |m, _, ledger| pade8_cos_sin(m, ledger))
}

/// `c(t²A)` and `s(t, A)`. Scaling halves `t`, i.e. divides `t²A` by 4 per step.
pub fn wave_cos_sin(a: &DenseMatrix, t: f64, precision: Precision) -> Result<ComputationReport<WaveResult>> {
    check_input(a)?;
    if !t.is_finite() {
        return Err(Error::NonFinite { row: 0, col: 0 });
    }
    let table = ThetaTable::wave(precision);
    let norm = norm1(a) * (t * t);
    if !norm.is_finite() {
        return Err(Error::NonFinite { row: 0, col: 0 });
    }
    let (scheme, s) = select_scheme(norm, &table);
    let t_scaled = t * f64::powi(2.0, -(s as i32));
    let mut ledger = CostLedger::new();
    let base = wave_kernels(a, t_scaled, scheme, &mut ledger)?;
    let (c_part, s_part) = recover(base.c_part, base.s_part, s, &mut ledger);
    Ok(ComputationReport {
        result: WaveResult {
            c_part,
            s_part,
            cost: ledger,
        },
        scheme_used: scheme,
        scaling_exponent: s,
        total_products: ledger.total(),
    })
}
