use super::surd::QuadSurd;
use crate::schemes::coefficients::Coefficient;
use crate::schemes::SchemeOps;

/// Dense univariate polynomial with exact coefficients, lowest degree first.
/// Trailing zeros are always trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarPoly {
    coefficients: Vec<QuadSurd>,
}

impl ScalarPoly {
    pub fn new(mut coefficients: Vec<QuadSurd>) -> Self {
        while coefficients.last().is_some_and(QuadSurd::is_zero) {
            coefficients.pop();
        }
        ScalarPoly { coefficients }
    }

    pub fn zero() -> Self {
        ScalarPoly::new(Vec::new())
    }

    pub fn constant(c: QuadSurd) -> Self {
        ScalarPoly::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        ScalarPoly::new(vec![QuadSurd::zero(), QuadSurd::one()])
    }

    pub fn coefficients(&self) -> &[QuadSurd] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> QuadSurd {
        self.coefficients.get(degree).cloned().unwrap_or_else(QuadSurd::zero)
    }

    pub fn scale(&self, c: &QuadSurd) -> Self {
        ScalarPoly::new(self.coefficients.iter().map(|v| v * c).collect())
    }

    pub fn add(&self, other: &ScalarPoly) -> Self {
        let n = self.coefficients.len().max(other.coefficients.len());
        ScalarPoly::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &ScalarPoly) -> Self {
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return ScalarPoly::zero();
        }
        let mut out = vec![QuadSurd::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        ScalarPoly::new(out)
    }
}

/// Replays a scheme on scalar polynomials, counting products.
#[derive(Default)]
pub struct PolyOps {
    pub products: u64,
}

impl SchemeOps for PolyOps {
    type Elem = ScalarPoly;
    type Coef = QuadSurd;

    fn identity(&self) -> ScalarPoly {
        ScalarPoly::constant(QuadSurd::one())
    }

    fn product(&mut self, a: &ScalarPoly, b: &ScalarPoly) -> ScalarPoly {
        self.products += 1;
        a.mul(b)
    }

    fn combine(&self, terms: &[(QuadSurd, &ScalarPoly)]) -> ScalarPoly {
        terms
            .iter()
            .fold(ScalarPoly::zero(), |acc, (c, p)| acc.add(&p.scale(c)))
    }
}
