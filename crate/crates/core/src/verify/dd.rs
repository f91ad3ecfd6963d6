//! Double-double arithmetic (about 32 significant digits) and matrices over it.

use std::ops::{Add, Mul, Neg, Sub};

use crate::matrix::DenseMatrix;

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Exact scaling by a power of two.
    pub fn scale(self, p: f64) -> Dd {
        Dd {
            hi: self.hi * p,
            lo: self.lo * p,
        }
    }

    pub fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        let (p, e) = two_prod(q1, d);
        let (s, t) = two_sum(self.hi, -p);
        let r = s + (t - e + self.lo);
        let q2 = r / d;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }
}

impl Add for Dd {
    type Output = Dd;

    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for Dd {
    type Output = Dd;

    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;

    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

/// Square row-major matrix of double-doubles.
#[derive(Clone, Debug, PartialEq)]
pub struct DdMatrix {
    n: usize,
    data: Vec<Dd>,
}

impl DdMatrix {
    pub fn zeros(n: usize) -> Self {
        DdMatrix {
            n,
            data: vec![Dd::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DdMatrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Dd::ONE;
        }
        m
    }

    pub fn from_dense(a: &DenseMatrix) -> Self {
        DdMatrix {
            n: a.rows(),
            data: a.data().iter().map(|&x| Dd::from_f64(x)).collect(),
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.n, self.n, |i, j| self.data[i * self.n + j].to_f64())
    }

    pub fn map(&self, f: impl Fn(Dd) -> Dd) -> Self {
        DdMatrix {
            n: self.n,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn zip(&self, other: &DdMatrix, f: impl Fn(Dd, Dd) -> Dd) -> Self {
        DdMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn mul(&self, other: &DdMatrix) -> Self {
        let n = self.n;
        let mut out = DdMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Dd::ZERO {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.data[idx] = out.data[idx] + a * other.data[k * n + j];
                }
            }
        }
        out
    }
}
