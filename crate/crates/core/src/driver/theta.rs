//! Norm thresholds below which each scheme meets the unit roundoff.

use super::wave_theta::{WAVE_THETA_DOUBLE, WAVE_THETA_SINGLE};
use super::Precision;
use crate::ledger::ProductCount;
use crate::schemes::SchemeId;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaEntry {
    pub scheme: SchemeId,
    pub theta_cos: f64,
    pub theta_sin: f64,
    pub cost: ProductCount,
}

impl ThetaEntry {
    fn new(scheme: SchemeId, theta_cos: f64, theta_sin: f64) -> Self {
        ThetaEntry {
            scheme,
            theta_cos,
            theta_sin,
            cost: scheme.cost(),
        }
    }

    /// Both outputs have to meet the target, so the smaller threshold rules.
    pub fn theta_eff(&self) -> f64 {
        self.theta_cos.min(self.theta_sin)
    }
}

/// Thresholds for one family of schemes at one precision, sorted by cost.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaTable {
    pub precision: Precision,
    pub entries: Vec<ThetaEntry>,
    /// How much one doubling step shrinks the norm the thresholds refer to:
    /// 2 for `‖A‖`, 4 for the wave variable `‖t²A‖`.
    pub norm_factor_per_doubling: f64,
}

// (cos, sin) pairs for 3, 4, 6 and 7 products.
const TAYLOR_DOUBLE: [(f64, f64); 4] = [
    (6.5633e-3, 1.777e-2),
    (1.1495e-1, 8.0438e-2),
    (9.8108e-1, 1.1184),
    (2.5675, 1.8554),
];

const TAYLOR_SINGLE: [(f64, f64); 4] = [
    (1.8709e-1, 3.1386e-1),
    (8.5756e-1, 7.492e-1),
    (2.9935, 3.2152),
    (5.5555, 4.3819),
];

const PADE8_DOUBLE: (f64, f64) = (1.3959e-1, 1.1213e-1);
const PADE8_SINGLE: (f64, f64) = (1.0218, 9.9511e-1);

/// Published thresholds for the diagonal Padé schemes of orders 4, 8, 16
/// and 24 with their costs in thirds. Only order 8 is implemented; the rest
/// is reference data for comparison tables.
pub const PADE_LITERATURE: [(u32, u64, [f64; 2], [f64; 2]); 4] = [
    // (order, cost in thirds, double (cos, sin), single (cos, sin))
    (4, 16, [6.5633e-3, 2.4019e-3], [1.8687e-1, 1.3355e-1]),
    (8, 22, [1.3959e-1, 1.1213e-1], [1.0218, 9.9511e-1]),
    (16, 31, [1.3879, 1.3784], [3.8571, 3.8569]),
    (24, 37, [3.7288, 3.7287], [7.1575, 7.1575]),
];

impl ThetaTable {
    pub fn taylor(precision: Precision) -> Self {
        let values = match precision {
            Precision::Double => TAYLOR_DOUBLE,
            Precision::Single => TAYLOR_SINGLE,
        };
        ThetaTable {
            precision,
            entries: SchemeId::TAYLOR
                .iter()
                .zip(values)
                .map(|(&s, (c, si))| ThetaEntry::new(s, c, si))
                .collect(),
            norm_factor_per_doubling: 2.0,
        }
    }

    pub fn pade8(precision: Precision) -> Self {
        let (c, s) = match precision {
            Precision::Double => PADE8_DOUBLE,
            Precision::Single => PADE8_SINGLE,
        };
        ThetaTable {
            precision,
            entries: vec![ThetaEntry::new(SchemeId::PADE_8, c, s)],
            norm_factor_per_doubling: 2.0,
        }
    }

    /// Thresholds in `‖t²A‖₁`, generated by the verification module.
    pub fn wave(precision: Precision) -> Self {
        let values = match precision {
            Precision::Double => WAVE_THETA_DOUBLE,
            Precision::Single => WAVE_THETA_SINGLE,
        };
        ThetaTable {
            precision,
            entries: values
                .iter()
                .map(|&(k, c, s)| {
                    let scheme = SchemeId::WAVE.into_iter().find(|w| w.k_products() == k).expect("wave scheme");
                    ThetaEntry::new(scheme, c, s)
                })
                .collect(),
            norm_factor_per_doubling: 4.0,
        }
    }

    pub fn entry(&self, scheme: SchemeId) -> Option<&ThetaEntry> {
        self.entries.iter().find(|e| e.scheme == scheme)
    }
}
