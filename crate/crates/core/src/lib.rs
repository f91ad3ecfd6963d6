//! Matrix cosine and sine computed together from factored Taylor
//! polynomials with scaling and squaring.
//!
//! The crate is organised bottom-up:
//!
//! * [`matrix`], [`ledger`], [`lu`]: dense real matrices, product-equivalent
//!   cost accounting and a shared-factorization solver.
//! * [`schemes`]: the factored cosine/sine schemes (3, 4, 6 and 7 products),
//!   the wave kernels `c(t²A)`, `s(t, A)` and an order-8 Padé baseline.
//! * [`driver`]: threshold-driven scheme selection, scaling by powers of
//!   two and double-angle recovery.
//! * [`verify`]: exact polynomial replay of each scheme, threshold
//!   recomputation and an extended-precision reference evaluator.
//! * [`gallery`], [`bench`]: a reproducible test corpus and the accuracy and
//!   cost comparison run over it.

pub mod bench;
pub mod cli;
pub mod driver;
pub mod error;
pub mod gallery;
pub mod ledger;
pub mod lu;
pub mod matrix;
pub mod schemes;
pub mod verify;

pub use driver::{cos_sin, pade_cos_sin, select_scheme, wave_cos_sin, ComputationReport, Precision, ThetaTable};
pub use error::{Error, Result};
pub use ledger::{CostLedger, ProductCount};
pub use matrix::{linear_combination, matmul, norm1, DenseMatrix};
pub use schemes::{CosSinResult, Family, SchemeId, WaveResult};
