//! Coefficient tables for the factored schemes.
//!
//! Every constant is written in the form it was published in: exact
//! fractions, closed forms in `√36681`, or 20-digit decimals. A
//! [`Coefficient`] type decides how to realise each form, so the same table
//! feeds both binary64 evaluation and exact polynomial replay.

/// The radicand appearing in the degree-16 cosine coefficients.
pub const RADICAND: i64 = 36681;

/// A scalar type the schemes can be instantiated with.
pub trait Coefficient: Clone {
    fn ratio(num: i64, den: i64) -> Self;

    /// `p + q·√36681` with rational `p = p.0/p.1` and `q = q.0/q.1`.
    fn surd(p: (i64, i64), q: (i64, i64)) -> Self;

    /// A decimal literal such as `"-1.03893360877457159499e-6"`.
    fn decimal(lit: &str) -> Self;

    fn zero() -> Self {
        Self::ratio(0, 1)
    }

    fn one() -> Self {
        Self::ratio(1, 1)
    }
}

impl Coefficient for f64 {
    fn ratio(num: i64, den: i64) -> f64 {
        num as f64 / den as f64
    }

    fn surd(p: (i64, i64), q: (i64, i64)) -> f64 {
        p.0 as f64 / p.1 as f64 + (q.0 as f64 / q.1 as f64) * (RADICAND as f64).sqrt()
    }

    fn decimal(lit: &str) -> f64 {
        lit.parse().expect("coefficient literal")
    }
}

/// Degree-16 cosine scheme, shared with the order-8 wave kernel.
#[derive(Clone, Debug)]
pub struct Cos16<C> {
    pub x: [C; 9],
}

/// Mixed order-17 sine companion, shared with the order-8 wave sine kernel.
#[derive(Clone, Debug)]
pub struct Sin17<C> {
    pub z: [C; 9],
}

/// Degree-24 cosine scheme, shared with the order-12 wave kernel.
/// `a[i][j]` multiplies `A^{2i}` in `C_{j+1}`.
#[derive(Clone, Debug)]
pub struct Cos24<C> {
    pub a: [[C; 4]; 4],
}

/// Mixed order-23 sine companion, shared with the order-11 wave sine kernel.
#[derive(Clone, Debug)]
pub struct Sin23<C> {
    pub z: [C; 12],
}

/// Order-8 diagonal Padé data in powers of `A²`.
#[derive(Clone, Debug)]
pub struct Pade8<C> {
    /// `1, A², A⁴, A⁶, A⁸` coefficients of the shared denominator.
    pub denominator: [C; 5],
    /// `1, A², A⁴, A⁶, A⁸` coefficients of the cosine numerator.
    pub cos_numerator: [C; 5],
    /// `1, A², A⁴, A⁶` coefficients of the sine numerator (times `A`).
    pub sin_numerator: [C; 4],
}

pub fn cos16<C: Coefficient>() -> Cos16<C> {
    Cos16 {
        x: [
            C::zero(), // unused, keeps 1-based indices
            C::ratio(7, 500),
            C::ratio(-7, 60000),
            C::surd((-1533, 2500), (7, 2500)),
            C::surd((-5 * 124581, 10594584), (-5 * 391, 10594584)),
            C::ratio(9775, 10594584),
            C::surd((-5 * 1001, 508540032), (-5, 508540032)),
            C::ratio(3125, 889945056),
            C::surd((1549211, 63063000), (3246, 63063000)),
        ],
    }
}

pub fn sin17<C: Coefficient>() -> Sin17<C> {
    Sin17 {
        z: [
            C::ratio(8887, 4794),
            C::ratio(-1897, 3196),
            C::ratio(25259, 575280),
            C::ratio(-965093875, 9674368704),
            C::ratio(-4093, 4794),
            C::ratio(25698275, 29023106112),
            C::ratio(-3907675, 348277273344),
            C::ratio(11865625, 3656911370112),
            C::ratio(25, 308756448),
        ],
    }
}

pub fn cos24<C: Coefficient>() -> Cos24<C> {
    let d = C::decimal;
    Cos24 {
        a: [
            [
                C::zero(),
                d("0.55751443809990408029"),
                d("0.75936877868464999248"),
                C::zero(),
            ],
            [
                C::zero(),
                d("-0.61577924683458386455"),
                d("-0.01560333979813817129"),
                d("-0.039649968743474473091"),
            ],
            [
                d("0.02264979811206039519"),
                d("0.00747198841446687051"),
                d("0.00010936989591908396"),
                d("0.000155490073503821463"),
            ],
            [
                d("-0.00013110924142135755"),
                d("-0.00003362444420476012"),
                d("-1.03893360877457159499e-6"),
                d("-1.126739663071170022488e-6"),
            ],
        ],
    }
}

pub fn sin23<C: Coefficient>() -> Sin23<C> {
    let d = C::decimal;
    Sin23 {
        z: [
            d("0.10090808375109885598"),
            d("-0.07668753546445299316"),
            d("0.00084924846993243257"),
            d("-0.00001220406904464391"),
            d("0.98499703159318860027"),
            d("-0.84925233648155398756"),
            C::one(),
            d("0.00095544138280925799"),
            d("4.56337109377154270633e-6"),
            d("2.73461259403000427141e-8"),
            d("0.00048550288474842477"),
            d("-4.15891109384923342531e-7"),
        ],
    }
}

/// Numerator and denominator of `r₄(iA)` split into cosine and sine parts,
/// i.e. `|p₄(ix)|²` and the real and imaginary parts of `p₄(ix)²` with
/// `p₄(y) = 1 + y/2 + 3y²/28 + y³/84 + y⁴/1680`.
pub fn pade8<C: Coefficient>() -> Pade8<C> {
    Pade8 {
        denominator: [
            C::one(),
            C::ratio(1, 28),
            C::ratio(3, 3920),
            C::ratio(1, 70560),
            C::ratio(1, 2822400),
        ],
        cos_numerator: [
            C::one(),
            C::ratio(-13, 28),
            C::ratio(289, 11760),
            C::ratio(-19, 70560),
            C::ratio(1, 2822400),
        ],
        sin_numerator: [
            C::one(),
            C::ratio(-11, 84),
            C::ratio(37, 11760),
            C::ratio(-1, 70560),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_match_published_decimals() {
        let c = cos16::<f64>();
        assert_eq!(c.x[1], 0.014);
        // x₃ = (−1533 + 7√36681)/2500 ≈ −0.07694
        assert!((c.x[3] + 0.076_94).abs() < 1e-5, "{}", c.x[3]);
        assert!(c.x[8] > 0.0 && c.x[4] < 0.0 && c.x[6] < 0.0);
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn decimal_literals_parse() {
        let s = sin23::<f64>();
        assert_eq!(s.z[6], 1.0);
        assert_eq!(s.z[11], -4.15891109384923342531e-7);
        let c = cos24::<f64>();
        assert_eq!(c.a[3][2], -1.03893360877457159499e-6);
    }
}
