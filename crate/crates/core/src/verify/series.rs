//! Exact scalar expansions of every scheme and of the functions they
//! approximate.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{PolyOps, ScalarPoly};
use super::surd::QuadSurd;
use crate::error::{Error, Result};
use crate::schemes::{
    pade8_parts, taylor_cos8_sin9_generic, taylor_pair, wave_mixed3_pair, wave_pair, Family, SchemeId,
};

/// A scalar function with a known power series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// `cos x`
    Cos,
    /// `sin x`
    Sin,
    /// `cos √y`, the wave cosine in `y = t²a`
    WaveC,
    /// `sin √y / √y`, the wave sine divided by `t`
    WaveS,
}

impl Kernel {
    /// Exact Taylor coefficients for degrees `0..=max_degree`.
    pub fn series(self, max_degree: usize) -> Vec<BigRational> {
        let mut fact = BigInt::one();
        let mut factorials = vec![fact.clone()];
        let top = 2 * max_degree + 1;
        for n in 1..=top {
            fact *= n;
            factorials.push(fact.clone());
        }
        (0..=max_degree)
            .map(|d| {
                let (num, den) = match self {
                    Kernel::Cos if d % 2 == 0 => (sign(d / 2), d),
                    Kernel::Sin if d % 2 == 1 => (sign((d - 1) / 2), d),
                    Kernel::WaveC => (sign(d), 2 * d),
                    Kernel::WaveS => (sign(d), 2 * d + 1),
                    _ => return BigRational::zero(),
                };
                BigRational::new(BigInt::from(num), factorials[den].clone())
            })
            .collect()
    }

    /// Degree stride of the nonzero coefficients.
    pub fn stride(self) -> usize {
        match self {
            Kernel::Cos | Kernel::Sin => 2,
            Kernel::WaveC | Kernel::WaveS => 1,
        }
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Every evaluator whose scalar expansion can be checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Scheme(SchemeId),
    /// Order-8 cosine with the order-9 sine, five products.
    TaylorCos8Sin9,
    /// Order-4 wave cosine with the order-3 sine, two products.
    WaveMixed3,
}

/// Which of the two outputs of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Output {
    Cosine,
    Sine,
}

impl Output {
    pub const BOTH: [Output; 2] = [Output::Cosine, Output::Sine];
}

impl Variant {
    /// The variants with a full order and threshold check.
    pub fn all() -> Vec<Variant> {
        let mut v: Vec<Variant> = SchemeId::TAYLOR.iter().map(|&s| Variant::Scheme(s)).collect();
        v.push(Variant::TaylorCos8Sin9);
        v.extend(SchemeId::WAVE.iter().map(|&s| Variant::Scheme(s)));
        v.push(Variant::WaveMixed3);
        v.push(Variant::Scheme(SchemeId::PADE_8));
        v
    }

    pub fn kernel(self, output: Output) -> Kernel {
        let wave = match self {
            Variant::Scheme(s) => s.family() == Family::WaveKernel,
            Variant::TaylorCos8Sin9 => false,
            Variant::WaveMixed3 => true,
        };
        match (wave, output) {
            (false, Output::Cosine) => Kernel::Cos,
            (false, Output::Sine) => Kernel::Sin,
            (true, Output::Cosine) => Kernel::WaveC,
            (true, Output::Sine) => Kernel::WaveS,
        }
    }

    pub fn claimed_order(self, output: Output) -> u32 {
        let (c, s) = match self {
            Variant::Scheme(id) => (id.cos_order(), id.sin_order()),
            Variant::TaylorCos8Sin9 => (8, 9),
            Variant::WaveMixed3 => (4, 3),
        };
        match output {
            Output::Cosine => c,
            Output::Sine => s,
        }
    }

    pub fn is_rational(self) -> bool {
        self == Variant::Scheme(SchemeId::PADE_8)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Scheme(s) => write!(f, "{s}"),
            Variant::TaylorCos8Sin9 => f.write_str("taylor-cos8-sin9"),
            Variant::WaveMixed3 => f.write_str("wave-mixed3"),
        }
    }
}

/// The two polynomials a polynomial scheme produces, with the number of
/// products the replay performed.
#[derive(Clone, Debug)]
pub struct Replay {
    pub cosine: ScalarPoly,
    pub sine: ScalarPoly,
    pub products: u64,
}

impl Replay {
    pub fn output(&self, output: Output) -> &ScalarPoly {
        match output {
            Output::Cosine => &self.cosine,
            Output::Sine => &self.sine,
        }
    }
}

/// Runs the same code that evaluates the matrix scheme on the scalar
/// polynomial `x`, in exact arithmetic.
pub fn replay(variant: Variant) -> Result<Replay> {
    let mut ops = PolyOps::default();
    let x = ScalarPoly::x();
    let (cosine, sine) = match variant {
        Variant::Scheme(s) => match s.family() {
            Family::CosSinTaylor => taylor_pair(&mut ops, &x, s.k_products()),
            Family::WaveKernel => wave_pair(&mut ops, &x, s.k_products()),
            Family::Pade8 => {
                return Err(Error::InvalidSpec(format!("{s} is rational; use its series expansion")))
            }
        },
        Variant::TaylorCos8Sin9 => taylor_cos8_sin9_generic(&mut ops, &x),
        Variant::WaveMixed3 => wave_mixed3_pair(&mut ops, &x),
    };
    Ok(Replay {
        cosine,
        sine,
        products: ops.products,
    })
}

fn rational_poly(p: &ScalarPoly) -> Vec<BigRational> {
    p.coefficients()
        .iter()
        .map(|c| {
            assert!(c.radical_part().is_zero(), "rational scheme");
            c.rational_part().clone()
        })
        .collect()
}

/// Power series of `num/den` up to `max_degree`; `den(0)` must be nonzero.
pub fn divide_series(num: &[BigRational], den: &[BigRational], max_degree: usize) -> Vec<BigRational> {
    let d0 = den[0].clone();
    let mut out: Vec<BigRational> = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let mut acc = num.get(n).cloned().unwrap_or_else(BigRational::zero);
        for (k, dk) in den.iter().enumerate().skip(1).take(n) {
            if !dk.is_zero() {
                acc -= dk * &out[n - k];
            }
        }
        out.push(acc / &d0);
    }
    out
}

/// Scalar expansion of one output of a variant for degrees `0..=max_degree`.
pub fn expansion(variant: Variant, output: Output, max_degree: usize) -> Result<Vec<QuadSurd>> {
    if variant.is_rational() {
        let mut ops = PolyOps::default();
        let parts = pade8_parts(&mut ops, &ScalarPoly::x());
        let num = match output {
            Output::Cosine => &parts.cos_numerator,
            Output::Sine => &parts.sin_numerator,
        };
        let series = divide_series(&rational_poly(num), &rational_poly(&parts.denominator), max_degree);
        return Ok(series.into_iter().map(QuadSurd::from_rational).collect());
    }
    let r = replay(variant)?;
    let p = r.output(output);
    Ok((0..=max_degree).map(|d| p.coeff(d)).collect())
}

/// Highest degree that can be nonzero in the expansion, if finite.
pub fn expansion_degree(variant: Variant, output: Output) -> Result<Option<usize>> {
    if variant.is_rational() {
        return Ok(None);
    }
    Ok(replay(variant)?.output(output).degree())
}
