//! Cost accounting in product-equivalent units.
//!
//! One dense matrix-matrix product counts as one unit. Additions and scalar
//! multiples are free. An LU factorization counts 1/3 and a multi right-hand
//! side solve against an existing factorization counts 1, so an explicit
//! inverse costs 4/3 and two solves sharing one factorization cost 7/3.

use std::fmt;
use std::ops::Add;

/// Exact product-equivalent count, stored in thirds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductCount {
    thirds: u64,
}

impl ProductCount {
    pub const ZERO: ProductCount = ProductCount { thirds: 0 };

    pub const fn products(n: u64) -> Self {
        ProductCount { thirds: 3 * n }
    }

    pub const fn from_thirds(thirds: u64) -> Self {
        ProductCount { thirds }
    }

    pub const fn thirds(self) -> u64 {
        self.thirds
    }

    pub fn as_f64(self) -> f64 {
        self.thirds as f64 / 3.0
    }

    /// Whole part and remaining thirds, e.g. `(7, 1)` for 7⅓.
    pub const fn split(self) -> (u64, u64) {
        (self.thirds / 3, self.thirds % 3)
    }
}

impl Add for ProductCount {
    type Output = ProductCount;

    fn add(self, rhs: ProductCount) -> ProductCount {
        ProductCount {
            thirds: self.thirds + rhs.thirds,
        }
    }
}

impl fmt::Display for ProductCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.split() {
            (whole, 0) => write!(f, "{whole}"),
            (whole, rem) => write!(f, "{whole}+{rem}/3"),
        }
    }
}

/// Counters that only ever increase.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CostLedger {
    products: u64,
    lu_factorizations: u64,
    lu_solves: u64,
}

impl CostLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn products(&self) -> u64 {
        self.products
    }

    pub fn lu_factorizations(&self) -> u64 {
        self.lu_factorizations
    }

    pub fn lu_solves(&self) -> u64 {
        self.lu_solves
    }

    pub fn charge_product(&mut self) {
        self.products += 1;
    }

    pub fn charge_factorization(&mut self) {
        self.lu_factorizations += 1;
    }

    pub fn charge_solve(&mut self) {
        self.lu_solves += 1;
    }

    pub fn total(&self) -> ProductCount {
        ProductCount::from_thirds(3 * self.products + self.lu_factorizations + 3 * self.lu_solves)
    }

    /// Folds another ledger's counts into this one.
    pub fn absorb(&mut self, other: &CostLedger) {
        self.products += other.products;
        self.lu_factorizations += other.lu_factorizations;
        self.lu_solves += other.lu_solves;
    }
}
