//! Structured test matrices with known pathologies: non-normality, defective
//! eigenvalues, high nilpotency index, extreme conditioning.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::DenseMatrix;

type Builder = fn(usize, &mut ChaCha8Rng) -> DenseMatrix;

/// `(name, builder)`; every builder accepts any dimension `n ≥ 2`.
pub const SPECIALS: [(&str, Builder); 25] = [
    ("jordan", jordan),
    ("circulant", circulant),
    ("frank", frank),
    ("tridiag", tridiag),
    ("householder", householder),
    ("rotation", rotation),
    ("hilbert", hilbert),
    ("lehmer", lehmer),
    ("minij", minij),
    ("pascal", pascal),
    ("kahan", kahan),
    ("grcar", grcar),
    ("clement", clement),
    ("moler", moler),
    ("lotkin", lotkin),
    ("parter", parter),
    ("ris", ris),
    ("gearmat", gearmat),
    ("triw", triw),
    ("cauchy", cauchy),
    ("fiedler", fiedler),
    ("redheff", redheff),
    ("companion", companion),
    ("forsythe", forsythe),
    ("chow", chow),
];

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// Single Jordan block with a random eigenvalue.
fn jordan(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let lambda = normal(rng);
    DenseMatrix::from_fn(n, n, |i, j| match j as isize - i as isize {
        0 => lambda,
        1 => 1.0,
        _ => 0.0,
    })
}

fn circulant(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let row: Vec<f64> = (0..n).map(|_| normal(rng)).collect();
    DenseMatrix::from_fn(n, n, |i, j| row[(j + n - i) % n])
}

/// Upper Hessenberg with ill-conditioned eigenvalues.
fn frank(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| if j + 1 >= i { (n - i.max(j)) as f64 } else { 0.0 })
}

fn tridiag(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let (sub, diag, sup) = (normal(rng), normal(rng), normal(rng));
    DenseMatrix::from_fn(n, n, |i, j| match j as isize - i as isize {
        -1 => sub,
        0 => diag,
        1 => sup,
        _ => 0.0,
    })
}

/// `I − 2vvᵀ/vᵀv`, involutory.
fn householder(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let v: Vec<f64> = (0..n).map(|_| normal(rng)).collect();
    let vv: f64 = v.iter().map(|x| x * x).sum();
    DenseMatrix::from_fn(n, n, |i, j| f64::from(i == j) - 2.0 * v[i] * v[j] / vv)
}

/// Skew-symmetric generator of rotations.
fn rotation(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let b = DenseMatrix::from_fn(n, n, |_, _| normal(rng));
    DenseMatrix::from_fn(n, n, |i, j| b[(i, j)] - b[(j, i)])
}

fn hilbert(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| 1.0 / (i + j + 1) as f64)
}

fn lehmer(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| (i.min(j) + 1) as f64 / (i.max(j) + 1) as f64)
}

fn minij(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| (i.min(j) + 1) as f64)
}

/// Symmetric Pascal matrix, `binom(i + j, i)`.
fn pascal(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    let mut p = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            p[(i, j)] = if i == 0 || j == 0 { 1.0 } else { p[(i - 1, j)] + p[(i, j - 1)] };
        }
    }
    p
}

/// Upper triangular, `diag(sⁱ)` times unit upper triangular with `−c` above.
fn kahan(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    let (s, c) = 1.2f64.sin_cos();
    DenseMatrix::from_fn(n, n, |i, j| {
        let scale = s.powi(i as i32);
        match j.cmp(&i) {
            std::cmp::Ordering::Less => 0.0,
            std::cmp::Ordering::Equal => scale,
            std::cmp::Ordering::Greater => -c * scale,
        }
    })
}

/// Toeplitz with sensitive eigenvalues.
fn grcar(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| match j as isize - i as isize {
        -1 => -1.0,
        0..=3 => 1.0,
        _ => 0.0,
    })
}

/// Tridiagonal with zero diagonal and eigenvalues `±(n−1), ±(n−3), …`.
fn clement(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            (n - 1 - i) as f64
        } else if i == j + 1 {
            i as f64
        } else {
            0.0
        }
    })
}

/// `LᵀL` with `L` unit lower triangular, −1 below the diagonal.
fn moler(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| if i == j { (i + 1) as f64 } else { i.min(j) as f64 - 1.0 })
}

fn lotkin(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| if i == 0 { 1.0 } else { 1.0 / (i + j + 1) as f64 })
}

fn parter(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| 1.0 / (i as f64 - j as f64 + 0.5))
}

fn ris(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| 0.5 / (n as f64 - (i + j) as f64 - 0.5))
}

fn gearmat(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    let mut g = DenseMatrix::from_fn(n, n, |i, j| if i.abs_diff(j) == 1 { 1.0 } else { 0.0 });
    g[(0, n - 1)] = 1.0;
    g[(n - 1, 0)] = -1.0;
    g
}

/// Unit upper triangular with −1 above the diagonal.
fn triw(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| match j.cmp(&i) {
        std::cmp::Ordering::Less => 0.0,
        std::cmp::Ordering::Equal => 1.0,
        std::cmp::Ordering::Greater => -1.0,
    })
}

fn cauchy(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| 1.0 / (i + j + 2) as f64)
}

fn fiedler(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| i.abs_diff(j) as f64)
}

fn redheff(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| if j == 0 || (j + 1) % (i + 1) == 0 { 1.0 } else { 0.0 })
}

/// Companion matrix of a random monic polynomial.
fn companion(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let c: Vec<f64> = (0..n).map(|_| normal(rng)).collect();
    DenseMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            -c[j]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    })
}

/// Nilpotent Jordan block with a tiny corner perturbation.
fn forsythe(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    let mut f = DenseMatrix::from_fn(n, n, |i, j| if j == i + 1 { 1.0 } else { 0.0 });
    f[(n - 1, 0)] = 1e-10;
    f
}

/// Lower Hessenberg matrix of ones.
fn chow(n: usize, _: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| if j <= i + 1 { 1.0 } else { 0.0 })
}
