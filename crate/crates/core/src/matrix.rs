//! Row-major dense real matrices and the handful of kernels the schemes need.

use std::fmt::Write as _;
use std::ops::{Index, IndexMut};
use std::path::Path;

use crate::error::{Error, Result};
use crate::ledger::CostLedger;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major data, rejecting empty shapes and
    /// non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::InvalidShape {
                rows,
                cols,
                len: data.len(),
            });
        }
        if let Some(pos) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                row: pos / cols,
                col: pos % cols,
            });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidShape {
                rows: rows.len(),
                cols,
                len: rows.iter().map(Vec::len).sum(),
            });
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn diag(entries: &[f64]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i] } else { 0.0 })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn ensure_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn ensure_finite(&self) -> Result<()> {
        match self.data.iter().position(|v| !v.is_finite()) {
            None => Ok(()),
            Some(pos) => Err(Error::NonFinite {
                row: pos / self.cols,
                col: pos % self.cols,
            }),
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == 0.0))
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(self.shape(), other.shape());
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `self - other`, checked.
    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        linear_combination(&[(1.0, self), (-1.0, other)])
    }

    /// Parses the whitespace text format: a `rows cols` header line followed
    /// by `rows` lines of `cols` reals.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (hline, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or(Error::Parse {
                line: 1,
                msg: "missing header".into(),
            })?;
        let header_err = |msg: &str| Error::Parse {
            line: hline + 1,
            msg: format!("malformed header {:?}: {msg}", header.trim()),
        };
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(header_err("expected `rows cols`"));
        }
        let rows: usize = dims[0].parse().map_err(|_| header_err("bad row count"))?;
        let cols: usize = dims[1].parse().map_err(|_| header_err("bad column count"))?;
        if rows == 0 || cols == 0 {
            return Err(header_err("dimensions must be positive"));
        }

        let mut data = Vec::with_capacity(rows * cols);
        let mut seen = 0;
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            if seen == rows {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("unexpected extra row (header declares {rows})"),
                });
            }
            let before = data.len();
            for tok in line.split_whitespace() {
                let v: f64 = tok.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("not a real number: {tok:?}"),
                })?;
                if !v.is_finite() {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("non-finite entry {tok:?}"),
                    });
                }
                data.push(v);
            }
            if data.len() - before != cols {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected {cols} entries, found {}", data.len() - before),
                });
            }
            seen += 1;
        }
        if seen != rows {
            return Err(Error::Parse {
                line: text.lines().count() + 1,
                msg: format!("expected {rows} rows, found {seen}"),
            });
        }
        DenseMatrix::new(rows, cols, data)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Text form that parses back to the identical bits.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{v:e}");
            }
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Dense product `a * b`; charges one product to the ledger.
pub fn matmul(a: &DenseMatrix, b: &DenseMatrix, ledger: &mut CostLedger) -> Result<DenseMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            op: "matmul",
            left: a.shape(),
            right: b.shape(),
        });
    }
    ledger.charge_product();
    Ok(product(a, b))
}

pub(crate) fn product(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    debug_assert_eq!(a.cols, b.rows);
    let (n, m) = (a.rows, b.cols);
    let mut out = vec![0.0; n * m];
    for i in 0..n {
        let out_row = &mut out[i * m..(i + 1) * m];
        for (k, &aik) in a.row(i).iter().enumerate() {
            if aik == 0.0 {
                continue;
            }
            for (o, &bkj) in out_row.iter_mut().zip(b.row(k)) {
                *o += aik * bkj;
            }
        }
    }
    DenseMatrix {
        rows: n,
        cols: m,
        data: out,
    }
}

/// Maximum absolute column sum.
pub fn norm1(a: &DenseMatrix) -> f64 {
    (0..a.cols)
        .map(|j| (0..a.rows).map(|i| a[(i, j)].abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `Σ cᵢ Mᵢ` over matrices of equal shape. Free in the cost model.
pub fn linear_combination(terms: &[(f64, &DenseMatrix)]) -> Result<DenseMatrix> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::InvalidShape {
            rows: 0,
            cols: 0,
            len: 0,
        });
    };
    let shape = first.shape();
    if let Some((_, bad)) = terms.iter().find(|(_, m)| m.shape() != shape) {
        return Err(Error::DimensionMismatch {
            op: "linear_combination",
            left: shape,
            right: bad.shape(),
        });
    }
    let mut data = vec![0.0; shape.0 * shape.1];
    for (c, m) in terms {
        if *c == 0.0 {
            continue;
        }
        for (d, v) in data.iter_mut().zip(&m.data) {
            *d += c * v;
        }
    }
    Ok(DenseMatrix {
        rows: shape.0,
        cols: shape.1,
        data,
    })
}
