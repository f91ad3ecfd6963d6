//! Factored polynomial evaluations in an even variable `y`.
//!
//! The cosine/sine Taylor schemes take `y = A²` and finish the sine with one
//! more product by `A`. The wave kernels take `y = B = t²A` and finish the
//! sine with a free scalar multiple of `t`. Everything in between is shared,
//! so each routine below returns the cosine-like polynomial together with the
//! sine "inner" polynomial `sin(x)/x` expressed in `y`.

use super::coefficients::{cos16, cos24, sin17, sin23, Coefficient};
use super::SchemeOps;

pub(crate) struct EvenPair<E> {
    pub cos: E,
    pub sin_inner: E,
}

fn r<C: Coefficient>(num: i64, den: i64) -> C {
    C::ratio(num, den)
}

/// One product. Cosine through `y²`, sine inner through `y²`.
pub(crate) fn core_deg2<O: SchemeOps>(ops: &mut O, y: &O::Elem) -> EvenPair<O::Elem> {
    let id = ops.identity();
    let y2 = ops.product(y, y);
    let cos = ops.combine(&[(r(1, 1), &id), (r(-1, 2), y), (r(1, 24), &y2)]);
    let sin_inner = ops.combine(&[(r(1, 1), &id), (r(-1, 6), y), (r(1, 120), &y2)]);
    EvenPair { cos, sin_inner }
}

/// Intermediate state of the two-product degree-4 scheme.
pub(crate) struct Deg4<E> {
    pub id: E,
    pub y: E,
    pub y2: E,
    pub pair: EvenPair<E>,
}

/// Two products. Cosine exact through `y⁴`; the sine inner reuses the same
/// top block scaled by `6!/7!`, so it is exact only through `y³`.
pub(crate) fn core_deg4<O: SchemeOps>(ops: &mut O, y: &O::Elem) -> Deg4<O::Elem> {
    let id = ops.identity();
    let y2 = ops.product(y, y);
    let tail = ops.combine(&[(r(-1, 720), y), (r(1, 40320), &y2)]);
    let y4 = ops.product(&y2, &tail);
    let cos = ops.combine(&[
        (r(1, 1), &id),
        (r(-1, 2), y),
        (r(1, 24), &y2),
        (r(1, 1), &y4),
    ]);
    let sin_inner = ops.combine(&[
        (r(1, 1), &id),
        (r(-1, 6), y),
        (r(1, 120), &y2),
        (r(1, 7), &y4),
    ]);
    Deg4 {
        id,
        y: y.clone(),
        y2,
        pair: EvenPair { cos, sin_inner },
    }
}

/// One extra product on top of [`core_deg4`]: sine inner exact through `y⁴`.
pub(crate) fn sin_inner_deg4<O: SchemeOps>(ops: &mut O, st: &Deg4<O::Elem>) -> O::Elem {
    let tail = ops.combine(&[(r(-1, 5040), &st.y), (r(1, 362880), &st.y2)]);
    let top = ops.product(&st.y2, &tail);
    ops.combine(&[
        (r(1, 1), &st.id),
        (r(-1, 6), &st.y),
        (r(1, 120), &st.y2),
        (r(1, 1), &top),
    ])
}

/// Four products: cosine exact through `y⁸` (three products), then one more
/// for a degree-12 sine inner exact through `y⁸`.
pub(crate) fn core_deg8<O: SchemeOps>(ops: &mut O, y: &O::Elem) -> EvenPair<O::Elem> {
    let x = cos16::<O::Coef>().x;
    let z = sin17::<O::Coef>().z;
    let id = ops.identity();

    let y2 = ops.product(y, y);
    let f = ops.combine(&[(x[1].clone(), y), (x[2].clone(), &y2)]);
    let y4 = ops.product(&y2, &f);
    let left = ops.combine(&[(x[3].clone(), &y2), (r(1, 1), &y4)]);
    let right = ops.combine(&[
        (x[4].clone(), &id),
        (x[5].clone(), y),
        (x[6].clone(), &y2),
        (x[7].clone(), &y4),
    ]);
    let y8 = ops.product(&left, &right);
    let cos = ops.combine(&[
        (r(1, 1), &id),
        (r(-1, 2), y),
        (x[8].clone(), &y2),
        (r(1, 1), &y8),
    ]);

    // The leading two coefficients of this factor are both z₅.
    let g = ops.combine(&[
        (z[5].clone(), &id),
        (z[5].clone(), y),
        (z[6].clone(), &y2),
        (z[7].clone(), &y4),
        (z[8].clone(), &cos),
    ]);
    let c12 = ops.product(&g, &y4);
    let sin_inner = ops.combine(&[
        (z[0].clone(), &id),
        (z[1].clone(), y),
        (z[2].clone(), &y2),
        (z[3].clone(), &y4),
        (z[4].clone(), &cos),
        (r(1, 1), &c12),
    ]);
    EvenPair { cos, sin_inner }
}

/// Five products: cosine exact through `y¹²` (four products), then one more
/// for a degree-24 sine inner exact through `y¹¹`.
pub(crate) fn core_deg12<O: SchemeOps>(ops: &mut O, y: &O::Elem) -> EvenPair<O::Elem> {
    let a = cos24::<O::Coef>().a;
    let z = sin23::<O::Coef>().z;
    let id = ops.identity();

    let y2 = ops.product(y, y);
    let y3 = ops.product(&y2, y);
    let block = |ops: &O, j: usize| {
        ops.combine(&[
            (a[0][j].clone(), &id),
            (a[1][j].clone(), y),
            (a[2][j].clone(), &y2),
            (a[3][j].clone(), &y3),
        ])
    };
    let d1 = block(ops, 0);
    let d2 = block(ops, 1);
    let d3 = block(ops, 2);
    let d4 = block(ops, 3);
    let d4sq = ops.product(&d4, &d4);
    let y6 = ops.combine(&[(r(1, 1), &d3), (r(1, 1), &d4sq)]);
    let left = ops.combine(&[(r(1, 1), &d2), (r(1, 1), &y6)]);
    let y12 = ops.product(&left, &y6);
    let cos = ops.combine(&[(r(1, 1), &d1), (r(1, 1), &y12)]);

    let g = ops.combine(&[
        (z[6].clone(), &id),
        (z[7].clone(), y),
        (z[8].clone(), &y2),
        (z[9].clone(), &y3),
        (z[10].clone(), &y6),
        (z[11].clone(), &cos),
    ]);
    let c24 = ops.product(&g, &cos);
    let sin_inner = ops.combine(&[
        (z[0].clone(), &id),
        (z[1].clone(), y),
        (z[2].clone(), &y2),
        (z[3].clone(), &y3),
        (z[4].clone(), &y6),
        (z[5].clone(), &cos),
        (r(1, 1), &c24),
    ]);
    EvenPair { cos, sin_inner }
}
