//! Factored polynomial schemes for `cos(A)`, `sin(A)` and the wave kernels,
//! plus the order-8 Padé baseline.
//!
//! Every evaluator is written once against [`SchemeOps`]. Instantiated with
//! [`MatrixOps`] it runs in binary64 and charges products to a
//! [`CostLedger`]; the verification module instantiates the same code with
//! exact scalar polynomials to read off the polynomial each scheme computes.

pub mod coefficients;
pub(crate) mod factored;

use std::fmt;

use crate::error::{Error, Result};
use crate::ledger::{CostLedger, ProductCount};
use crate::lu::lu_solve_pair;
use crate::matrix::{linear_combination, product, DenseMatrix};

use coefficients::{pade8, Coefficient};
use factored::{core_deg12, core_deg2, core_deg4, core_deg8, sin_inner_deg4, EvenPair};

/// The three primitive operations a scheme is built from.
pub trait SchemeOps {
    type Elem: Clone;
    type Coef: Coefficient;

    fn identity(&self) -> Self::Elem;

    /// The only operation that costs anything.
    fn product(&mut self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn combine(&self, terms: &[(Self::Coef, &Self::Elem)]) -> Self::Elem;
}

/// Square-matrix instantiation of [`SchemeOps`].
pub struct MatrixOps<'a> {
    n: usize,
    ledger: &'a mut CostLedger,
}

impl<'a> MatrixOps<'a> {
    pub fn new(n: usize, ledger: &'a mut CostLedger) -> Self {
        MatrixOps { n, ledger }
    }
}

impl SchemeOps for MatrixOps<'_> {
    type Elem = DenseMatrix;
    type Coef = f64;

    fn identity(&self) -> DenseMatrix {
        DenseMatrix::identity(self.n)
    }

    fn product(&mut self, a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
        self.ledger.charge_product();
        product(a, b)
    }

    fn combine(&self, terms: &[(f64, &DenseMatrix)]) -> DenseMatrix {
        linear_combination(terms).expect("scheme operands share one shape")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    CosSinTaylor,
    WaveKernel,
    Pade8,
}

/// A concrete scheme: its family and the number of products it spends on
/// the cosine/sine pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchemeId {
    family: Family,
    k_products: u8,
}

impl SchemeId {
    pub const TAYLOR_3: SchemeId = SchemeId::raw(Family::CosSinTaylor, 3);
    pub const TAYLOR_4: SchemeId = SchemeId::raw(Family::CosSinTaylor, 4);
    pub const TAYLOR_6: SchemeId = SchemeId::raw(Family::CosSinTaylor, 6);
    pub const TAYLOR_7: SchemeId = SchemeId::raw(Family::CosSinTaylor, 7);
    pub const WAVE_3: SchemeId = SchemeId::raw(Family::WaveKernel, 3);
    pub const WAVE_4: SchemeId = SchemeId::raw(Family::WaveKernel, 4);
    pub const WAVE_5: SchemeId = SchemeId::raw(Family::WaveKernel, 5);
    pub const PADE_8: SchemeId = SchemeId::raw(Family::Pade8, 5);

    pub const TAYLOR: [SchemeId; 4] = [Self::TAYLOR_3, Self::TAYLOR_4, Self::TAYLOR_6, Self::TAYLOR_7];
    pub const WAVE: [SchemeId; 3] = [Self::WAVE_3, Self::WAVE_4, Self::WAVE_5];

    const fn raw(family: Family, k_products: u8) -> Self {
        SchemeId { family, k_products }
    }

    pub fn new(family: Family, k_products: u8) -> Result<Self> {
        let ok = match family {
            Family::CosSinTaylor => matches!(k_products, 3 | 4 | 6 | 7),
            Family::WaveKernel => matches!(k_products, 3..=5),
            Family::Pade8 => k_products == 5,
        };
        if ok {
            Ok(Self::raw(family, k_products))
        } else {
            Err(Error::UnknownScheme(format!("{family:?} with {k_products} products")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k_products(&self) -> u8 {
        self.k_products
    }

    /// Product-equivalents for one evaluation of the pair.
    pub fn cost(&self) -> ProductCount {
        match self.family {
            Family::Pade8 => ProductCount::from_thirds(22),
            _ => ProductCount::products(self.k_products as u64),
        }
    }

    /// Order of the cosine-like output: degree in `A` for cos/sin schemes,
    /// degree in `B = t²A` for wave kernels.
    pub fn cos_order(&self) -> u32 {
        match (self.family, self.k_products) {
            (Family::CosSinTaylor, 3) => 4,
            (Family::CosSinTaylor, 4) => 8,
            (Family::CosSinTaylor, 6) => 16,
            (Family::CosSinTaylor, _) => 24,
            (Family::WaveKernel, 3) => 4,
            (Family::WaveKernel, 4) => 8,
            (Family::WaveKernel, _) => 12,
            (Family::Pade8, _) => 8,
        }
    }

    /// Order of the sine-like output, in the same variable as
    /// [`cos_order`](Self::cos_order).
    pub fn sin_order(&self) -> u32 {
        match (self.family, self.k_products) {
            (Family::CosSinTaylor, 3) => 5,
            (Family::CosSinTaylor, 4) => 7,
            (Family::CosSinTaylor, 6) => 17,
            (Family::CosSinTaylor, _) => 21,
            (Family::WaveKernel, 3) => 4,
            (Family::WaveKernel, 4) => 8,
            (Family::WaveKernel, _) => 10,
            (Family::Pade8, _) => 7,
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::CosSinTaylor => write!(f, "taylor-k{}", self.k_products),
            Family::WaveKernel => write!(f, "wave-k{}", self.k_products),
            Family::Pade8 => write!(f, "pade8"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CosSinResult {
    pub cos_part: DenseMatrix,
    pub sin_part: DenseMatrix,
    /// Cost of producing this pair.
    pub cost: CostLedger,
}

/// `c ≈ cos(√(t²A))` and `s ≈ (√A)⁻¹ sin(√(t²A))`, formed without a square root.
#[derive(Clone, Debug)]
pub struct WaveResult {
    pub c_part: DenseMatrix,
    pub s_part: DenseMatrix,
    pub cost: CostLedger,
}

fn run<T>(
    n: usize,
    ledger: &mut CostLedger,
    f: impl FnOnce(&mut MatrixOps<'_>) -> T,
) -> (T, CostLedger) {
    let mut local = CostLedger::new();
    let out = f(&mut MatrixOps::new(n, &mut local));
    ledger.absorb(&local);
    (out, local)
}

fn expect_family(scheme: SchemeId, family: Family) -> Result<()> {
    if scheme.family == family {
        Ok(())
    } else {
        Err(Error::UnknownScheme(scheme.to_string()))
    }
}

/// Generic Taylor cos/sin pair: `y = A²`, shared core, then `sin = A·inner`.
pub(crate) fn taylor_pair<O: SchemeOps>(ops: &mut O, a: &O::Elem, k: u8) -> (O::Elem, O::Elem) {
    let a2 = ops.product(a, a);
    let EvenPair { cos, sin_inner } = match k {
        3 => core_deg2(ops, &a2),
        4 => core_deg4(ops, &a2).pair,
        6 => core_deg8(ops, &a2),
        7 => core_deg12(ops, &a2),
        _ => unreachable!("validated scheme"),
    };
    let sin = ops.product(a, &sin_inner);
    (cos, sin)
}

/// `T₈ᶜ` together with the order-9 sine: five products.
pub(crate) fn taylor_cos8_sin9_generic<O: SchemeOps>(ops: &mut O, a: &O::Elem) -> (O::Elem, O::Elem) {
    let a2 = ops.product(a, a);
    let st = core_deg4(ops, &a2);
    let inner = sin_inner_deg4(ops, &st);
    let sin = ops.product(a, &inner);
    (st.pair.cos, sin)
}

/// Wave kernels in `b = t²A`; the sine output is `s/t`.
pub(crate) fn wave_pair<O: SchemeOps>(ops: &mut O, b: &O::Elem, k: u8) -> (O::Elem, O::Elem) {
    let EvenPair { cos, sin_inner } = match k {
        3 => {
            let st = core_deg4(ops, b);
            let inner = sin_inner_deg4(ops, &st);
            EvenPair {
                cos: st.pair.cos,
                sin_inner: inner,
            }
        }
        4 => core_deg8(ops, b),
        5 => core_deg12(ops, b),
        _ => unreachable!("validated scheme"),
    };
    (cos, sin_inner)
}

/// Two-product wave pair: `P₄ᶜ` with the order-3 sine that reuses its blocks.
pub(crate) fn wave_mixed3_pair<O: SchemeOps>(ops: &mut O, b: &O::Elem) -> (O::Elem, O::Elem) {
    let st = core_deg4(ops, b);
    (st.pair.cos, st.pair.sin_inner)
}

pub(crate) struct PadeParts<E> {
    pub cos_numerator: E,
    pub sin_numerator: E,
    pub denominator: E,
}

/// Five products: `A², A⁴, A⁶, A⁸` and the odd numerator.
pub(crate) fn pade8_parts<O: SchemeOps>(ops: &mut O, a: &O::Elem) -> PadeParts<O::Elem> {
    let c = pade8::<O::Coef>();
    let id = ops.identity();
    let a2 = ops.product(a, a);
    let a4 = ops.product(&a2, &a2);
    let a6 = ops.product(&a4, &a2);
    let a8 = ops.product(&a4, &a4);
    let powers = [&id, &a2, &a4, &a6, &a8];
    let poly = |coefs: &[O::Coef]| -> Vec<(O::Coef, &O::Elem)> {
        coefs.iter().cloned().zip(powers.iter().copied()).collect()
    };
    let denominator = ops.combine(&poly(&c.denominator));
    let cos_numerator = ops.combine(&poly(&c.cos_numerator));
    let odd = ops.combine(&poly(&c.sin_numerator));
    let sin_numerator = ops.product(a, &odd);
    PadeParts {
        cos_numerator,
        sin_numerator,
        denominator,
    }
}

/// Taylor-based cosine and sine of a square matrix without scaling.
pub fn taylor_cos_sin(a: &DenseMatrix, scheme: SchemeId, ledger: &mut CostLedger) -> Result<CosSinResult> {
    a.ensure_square()?;
    expect_family(scheme, Family::CosSinTaylor)?;
    let ((cos_part, sin_part), cost) = run(a.rows(), ledger, |ops| taylor_pair(ops, a, scheme.k_products));
    Ok(CosSinResult {
        cos_part,
        sin_part,
        cost,
    })
}

/// Order-9 sine (five products). The order-8 cosine falls out of the same
/// intermediates, see [`taylor_cos8_sin9`].
pub fn taylor_sin9(a: &DenseMatrix, ledger: &mut CostLedger) -> Result<DenseMatrix> {
    a.ensure_square()?;
    let (sin, _) = run(a.rows(), ledger, |ops| {
        let a2 = ops.product(a, a);
        let st = core_deg4(ops, &a2);
        let inner = sin_inner_deg4(ops, &st);
        ops.product(a, &inner)
    });
    Ok(sin)
}

/// `T₈ᶜ` and `T₉ˢ` in five products.
pub fn taylor_cos8_sin9(a: &DenseMatrix, ledger: &mut CostLedger) -> Result<CosSinResult> {
    a.ensure_square()?;
    let ((cos_part, sin_part), cost) = run(a.rows(), ledger, |ops| taylor_cos8_sin9_generic(ops, a));
    Ok(CosSinResult {
        cos_part,
        sin_part,
        cost,
    })
}

fn wave_input(a: &DenseMatrix, t: f64) -> Result<DenseMatrix> {
    a.ensure_square()?;
    if !t.is_finite() {
        return Err(Error::NonFinite { row: 0, col: 0 });
    }
    Ok(a.scaled(t * t))
}

/// `c(t²A)` and `s(t, A)` from one of the wave schemes, without scaling.
pub fn wave_kernels(a: &DenseMatrix, t: f64, scheme: SchemeId, ledger: &mut CostLedger) -> Result<WaveResult> {
    expect_family(scheme, Family::WaveKernel)?;
    let b = wave_input(a, t)?;
    let ((c_part, inner), cost) = run(a.rows(), ledger, |ops| wave_pair(ops, &b, scheme.k_products));
    Ok(WaveResult {
        c_part,
        s_part: inner.scaled(t),
        cost,
    })
}

/// `P₄ᶜ` with the order-3 companion sine: two products.
pub fn wave_kernels_mixed3(a: &DenseMatrix, t: f64, ledger: &mut CostLedger) -> Result<WaveResult> {
    let b = wave_input(a, t)?;
    let ((c_part, inner), cost) = run(a.rows(), ledger, |ops| wave_mixed3_pair(ops, &b));
    Ok(WaveResult {
        c_part,
        s_part: inner.scaled(t),
        cost,
    })
}

/// Order-8 diagonal Padé cosine and sine sharing one LU factorization.
/// Costs 7⅓ product-equivalents.
pub fn pade8_cos_sin(a: &DenseMatrix, ledger: &mut CostLedger) -> Result<CosSinResult> {
    a.ensure_square()?;
    let mut local = CostLedger::new();
    let parts = pade8_parts(&mut MatrixOps::new(a.rows(), &mut local), a);
    let solved = lu_solve_pair(&parts.denominator, &parts.cos_numerator, &parts.sin_numerator, &mut local);
    ledger.absorb(&local);
    let (cos_part, sin_part) = solved?;
    Ok(CosSinResult {
        cos_part,
        sin_part,
        cost: local,
    })
}
