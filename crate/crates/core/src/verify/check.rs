//! Order conditions and norm thresholds from the exact expansions.

use std::fmt::Write as _;

use num_rational::BigRational;

use super::series::{expansion, expansion_degree, Output, Variant};
use super::surd::{ln_abs_rational, QuadSurd};
use crate::driver::Precision;
use crate::error::Result;
use crate::schemes::SchemeId;

/// Number of nonzero error-series terms summed when bounding the truncation error.
pub const TAIL_TERMS: usize = 150;
const BRACKET: (f64, f64) = (1e-8, 100.0);

/// How far past the claimed order a rational expansion is searched for the
/// first mismatch.
const RATIONAL_LOOKAHEAD: usize = 40;

#[derive(Clone, Debug, PartialEq)]
pub struct OrderCheck {
    pub variant: Variant,
    pub output: Output,
    pub claimed_order: u32,
    /// Every coefficient through the claimed order is exactly right.
    pub exact: bool,
    /// Largest relative coefficient error through the claimed order; for
    /// degrees where the true coefficient vanishes the absolute value is used.
    pub max_rel_mismatch: f64,
    /// First degree above the claimed order where scheme and series differ.
    pub first_mismatch: Option<u32>,
}

impl OrderCheck {
    /// Order holds to `tolerance` and is not exceeded.
    pub fn holds(&self, tolerance: f64) -> bool {
        (self.exact || self.max_rel_mismatch <= tolerance) && self.first_mismatch == Some(self.claimed_order + 1 + self.parity_gap())
    }

    // For the odd and even trigonometric kernels the next possible mismatch
    // is two degrees up when the claimed order has the wrong parity.
    fn parity_gap(&self) -> u32 {
        let kernel = self.variant.kernel(self.output);
        match kernel.stride() {
            1 => 0,
            _ => {
                let next = self.claimed_order + 1;
                let odd_kernel = kernel == super::series::Kernel::Sin;
                u32::from((next % 2 == 1) != odd_kernel)
            }
        }
    }
}

fn difference(scheme: &QuadSurd, truth: &BigRational) -> QuadSurd {
    scheme - &QuadSurd::from_rational(truth.clone())
}

fn relative(diff: &QuadSurd, truth: &BigRational) -> f64 {
    if diff.is_zero() {
        return 0.0;
    }
    let ln_diff = diff.ln_abs();
    if truth == &BigRational::from_integer(0.into()) {
        ln_diff.exp()
    } else {
        (ln_diff - ln_abs_rational(truth)).exp()
    }
}

pub fn check_order(variant: Variant, output: Output) -> Result<OrderCheck> {
    let claimed = variant.claimed_order(output) as usize;
    let horizon = match expansion_degree(variant, output)? {
        Some(d) => d.max(claimed) + 3,
        None => claimed + RATIONAL_LOOKAHEAD,
    };
    let scheme = expansion(variant, output, horizon)?;
    let truth = variant.kernel(output).series(horizon);
    let diffs: Vec<QuadSurd> = scheme.iter().zip(&truth).map(|(s, t)| difference(s, t)).collect();
    let exact = diffs[..=claimed].iter().all(QuadSurd::is_zero);
    let max_rel_mismatch = diffs[..=claimed]
        .iter()
        .zip(&truth)
        .map(|(d, t)| relative(d, t))
        .fold(0.0, f64::max);
    let first_mismatch = (claimed + 1..=horizon).find(|&d| !diffs[d].is_zero()).map(|d| d as u32);
    Ok(OrderCheck {
        variant,
        output,
        claimed_order: claimed as u32,
        exact,
        max_rel_mismatch,
        first_mismatch,
    })
}

/// `ln |coefficient|` of the error series `scheme − f` beyond the claimed
/// order, keyed by degree.
pub fn error_tail(variant: Variant, output: Output, terms: usize) -> Result<Vec<(u32, f64)>> {
    let kernel = variant.kernel(output);
    let claimed = variant.claimed_order(output) as usize;
    let mut horizon = claimed + kernel.stride() * terms;
    if let Some(d) = expansion_degree(variant, output)? {
        horizon = horizon.max(d);
    }
    let scheme = expansion(variant, output, horizon)?;
    let truth = kernel.series(horizon);
    Ok((claimed + 1..=horizon)
        .filter_map(|d| {
            let diff = difference(&scheme[d], &truth[d]);
            (!diff.is_zero()).then(|| (d as u32, diff.ln_abs()))
        })
        .collect())
}

/// Bound `Σ |e_d| θ^d` on the truncation error.
pub fn tail_bound(tail: &[(u32, f64)], theta: f64) -> f64 {
    let ln_theta = theta.ln();
    tail.iter().map(|&(d, ln_c)| (ln_c + d as f64 * ln_theta).exp()).sum()
}

/// Largest `θ` with `tail_bound(θ) ≤ u`, by bisection in `ln θ`.
pub fn solve_theta(tail: &[(u32, f64)], u: f64) -> f64 {
    let (mut lo, mut hi) = BRACKET;
    if tail.is_empty() || tail_bound(tail, hi) <= u {
        return hi;
    }
    if tail_bound(tail, lo) > u {
        return lo;
    }
    while hi / lo - 1.0 > 1e-12 {
        let mid = (lo * hi).sqrt();
        if tail_bound(tail, mid) <= u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaComputation {
    pub variant: Variant,
    pub precision: Precision,
    pub tail_terms: usize,
    pub theta_cos: f64,
    pub theta_sin: f64,
}

impl ThetaComputation {
    pub fn theta(&self, output: Output) -> f64 {
        match output {
            Output::Cosine => self.theta_cos,
            Output::Sine => self.theta_sin,
        }
    }
}

pub fn compute_theta(variant: Variant, precision: Precision) -> Result<ThetaComputation> {
    let u = precision.unit_roundoff();
    let theta = |output| -> Result<f64> { Ok(solve_theta(&error_tail(variant, output, TAIL_TERMS)?, u)) };
    Ok(ThetaComputation {
        variant,
        precision,
        tail_terms: TAIL_TERMS,
        theta_cos: theta(Output::Cosine)?,
        theta_sin: theta(Output::Sine)?,
    })
}

/// Truncates to five significant digits, never rounding up.
fn floor_sig5(x: f64) -> String {
    let s = format!("{x:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent form");
    format!("{}e{}", &mantissa[..6], exp)
}

/// Source text of the checked-in wave threshold table.
pub fn render_wave_theta_source() -> Result<String> {
    let mut out = String::from(
        "// Generated by `verify::render_wave_theta_source`; thresholds in ‖t²A‖₁.\n// (products, θ cos, θ sin)\n",
    );
    for (name, precision) in [("WAVE_THETA_DOUBLE", Precision::Double), ("WAVE_THETA_SINGLE", Precision::Single)] {
        writeln!(out, "pub(crate) const {name}: [(u8, f64, f64); 3] = [").unwrap();
        for scheme in SchemeId::WAVE {
            let t = compute_theta(Variant::Scheme(scheme), precision)?;
            writeln!(
                out,
                "    ({}, {}, {}),",
                scheme.k_products(),
                floor_sig5(t.theta_cos),
                floor_sig5(t.theta_sin)
            )
            .unwrap();
        }
        out.push_str("];\n");
    }
    Ok(out)
}
