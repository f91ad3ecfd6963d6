//! Exact arithmetic in `ℚ(√36681)`, the smallest field containing every
//! published coefficient (decimal literals are read as exact rationals).

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::schemes::coefficients::{Coefficient, RADICAND};

/// `rational + radical·√36681`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurd {
    rational: BigRational,
    radical: BigRational,
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `√36681` to 60 decimal places as an exact rational.
fn sqrt_radicand() -> &'static BigRational {
    static SQRT: OnceLock<BigRational> = OnceLock::new();
    SQRT.get_or_init(|| {
        let scale = BigInt::from(10).pow(60);
        let root = (BigInt::from(RADICAND) * &scale * &scale).sqrt();
        BigRational::new(root, scale)
    })
}

/// Natural log of `|n|` for arbitrarily large integers.
fn ln_abs_int(n: &BigInt) -> f64 {
    let bits = n.bits();
    let shift = bits.saturating_sub(64);
    let top = (n.abs() >> shift).to_f64().expect("64-bit head");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of `|r|`, valid far outside the binary64 range.
pub fn ln_abs_rational(r: &BigRational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_abs_int(r.numer()) - ln_abs_int(r.denom())
}

/// Binary64 value of a rational, going through logarithms when the value is
/// outside the range a direct conversion handles.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    match r.to_f64() {
        Some(v) if v.is_finite() && (v != 0.0 || r.is_zero()) => v,
        _ => {
            let mag = ln_abs_rational(r).exp();
            if r.is_negative() {
                -mag
            } else {
                mag
            }
        }
    }
}

/// Parses a decimal literal (optionally with exponent) into an exact rational.
pub fn parse_decimal(lit: &str) -> BigRational {
    let lit = lit.trim();
    let (mantissa, exp) = match lit.find(['e', 'E']) {
        Some(pos) => (&lit[..pos], lit[pos + 1..].parse::<i32>().expect("decimal exponent")),
        None => (lit, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits: BigInt = format!("{int_part}{frac_part}").parse().expect("decimal digits");
    let digits = if negative { -digits } else { digits };
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    if scale >= 0 {
        BigRational::from_integer(digits * ten.pow(scale as u32))
    } else {
        BigRational::new(digits, ten.pow((-scale) as u32))
    }
}

impl QuadSurd {
    pub fn from_rational(r: BigRational) -> Self {
        QuadSurd {
            rational: r,
            radical: BigRational::zero(),
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.radical
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }

    /// Rational approximation accurate to about 60 digits relative to the
    /// radical part, so cancellation between the parts is resolved.
    pub fn approx_rational(&self) -> BigRational {
        if self.radical.is_zero() {
            return self.rational.clone();
        }
        &self.rational + &self.radical * sqrt_radicand()
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.approx_rational())
    }

    pub fn ln_abs(&self) -> f64 {
        ln_abs_rational(&self.approx_rational())
    }

    fn mul_ref(&self, rhs: &QuadSurd) -> QuadSurd {
        let d = BigRational::from_integer(BigInt::from(RADICAND));
        QuadSurd {
            rational: &self.rational * &rhs.rational + &self.radical * &rhs.radical * d,
            radical: &self.rational * &rhs.radical + &self.radical * &rhs.rational,
        }
    }
}

impl Coefficient for QuadSurd {
    fn ratio(num: i64, den: i64) -> Self {
        QuadSurd::from_rational(ratio(num, den))
    }

    fn surd(p: (i64, i64), q: (i64, i64)) -> Self {
        QuadSurd {
            rational: ratio(p.0, p.1),
            radical: ratio(q.0, q.1),
        }
    }

    fn decimal(lit: &str) -> Self {
        QuadSurd::from_rational(parse_decimal(lit))
    }

    fn zero() -> Self {
        QuadSurd::from_rational(BigRational::zero())
    }

    fn one() -> Self {
        QuadSurd::from_rational(BigRational::one())
    }
}

impl Add for &QuadSurd {
    type Output = QuadSurd;

    fn add(self, rhs: &QuadSurd) -> QuadSurd {
        QuadSurd {
            rational: &self.rational + &rhs.rational,
            radical: &self.radical + &rhs.radical,
        }
    }
}

impl Sub for &QuadSurd {
    type Output = QuadSurd;

    fn sub(self, rhs: &QuadSurd) -> QuadSurd {
        QuadSurd {
            rational: &self.rational - &rhs.rational,
            radical: &self.radical - &rhs.radical,
        }
    }
}

impl Mul for &QuadSurd {
    type Output = QuadSurd;

    fn mul(self, rhs: &QuadSurd) -> QuadSurd {
        self.mul_ref(rhs)
    }
}

impl Neg for &QuadSurd {
    type Output = QuadSurd;

    fn neg(self) -> QuadSurd {
        QuadSurd {
            rational: -&self.rational,
            radical: -&self.radical,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing_is_exact() {
        assert_eq!(parse_decimal("0.25"), ratio(1, 4));
        assert_eq!(parse_decimal("-1.5e-3"), ratio(-3, 2000));
        assert_eq!(parse_decimal("12e2"), ratio(1200, 1));
        assert_eq!(parse_decimal("1"), ratio(1, 1));
    }

    #[test]
    fn radical_squares_to_radicand() {
        let r = QuadSurd::surd((0, 1), (1, 1));
        let sq = &r * &r;
        assert_eq!(sq, QuadSurd::ratio(RADICAND, 1));
    }

    #[test]
    fn float_conversion_resolves_cancellation() {
        // (−1533 + 7√36681)/2500 loses a digit in naive binary64.
        let x3 = QuadSurd::surd((-1533, 2500), (7, 2500));
        let expected = -0.07693603514686911;
        assert!((x3.to_f64() - expected).abs() < 1e-16);
        let tiny = QuadSurd::from_rational(BigRational::new(BigInt::one(), BigInt::from(10).pow(400)));
        assert!((tiny.ln_abs() + 400.0 * std::f64::consts::LN_10).abs() < 1e-9);
    }
}
