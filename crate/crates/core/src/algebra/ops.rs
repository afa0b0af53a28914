use num_traits::Zero;

use super::matrix::to_matrix;
use super::table::{gram, structure_table};
use super::{AlgebraKind, Vec8};
use crate::error::{Error, Result};
use crate::scalar::QSqrt3;

/// The product of `kind`: Okubo `*`, para-octonion `∙`, octonion `·`.
pub fn mul(kind: AlgebraKind, x: &Vec8, y: &Vec8) -> Vec8 {
    structure_table(kind).mul(x, y)
}

/// `⟨x, y⟩ = n(x+y) − n(x) − n(y)`, from the Gram matrix.
pub fn polar(x: &Vec8, y: &Vec8) -> QSqrt3 {
    gram().bilinear(x, y)
}

/// `n(x) = ½⟨x, x⟩`. The same quadratic form serves all three algebras.
pub fn norm(x: &Vec8) -> QSqrt3 {
    polar(x, x).scale(&crate::scalar::Rational::new(1.into(), 2.into()))
}

/// `n(x) = Tr(X²)/6` evaluated on the matrix image.
pub fn norm_via_matrix(x: &Vec8) -> QSqrt3 {
    to_matrix(x).trace_sq() * QSqrt3::from_ratio(1, 6)
}

/// The octonion unit, which is the Okubo idempotent `e` and the para-unit.
pub fn unit() -> Vec8 {
    Vec8::e()
}

/// Octonion conjugation `x̄ = ⟨x,e⟩e − x`.
pub fn conjugate_oct(x: &Vec8) -> Vec8 {
    let mut out = -x;
    out[0] += &polar(x, &Vec8::e());
    out
}

/// `τ(x) = ⟨x,e⟩e − x*e`.
pub fn trivolution(x: &Vec8) -> Vec8 {
    let xe = mul(AlgebraKind::Okubo, x, &Vec8::e());
    let mut out = -&xe;
    out[0] += &polar(x, &Vec8::e());
    out
}

/// `τ²(x) = (x*e)*e`.
pub fn trivolution_sq(x: &Vec8) -> Vec8 {
    let e = Vec8::e();
    let xe = mul(AlgebraKind::Okubo, x, &e);
    mul(AlgebraKind::Okubo, &xe, &e)
}

/// The two-sided inverse for the octonion product, `x̄/n(x)`.
pub fn inverse(x: &Vec8) -> Result<Vec8> {
    let n = norm(x);
    if n.is_zero() {
        return Err(Error::DivisionByZeroElement);
    }
    Ok(conjugate_oct(x).scale(&n.inv()?))
}

fn inv_norm(a: &Vec8) -> Result<QSqrt3> {
    if a.is_zero() {
        return Err(Error::DivisionByZeroElement);
    }
    norm(a).inv()
}

/// The solution `x` of `a∘x = b`.
pub fn try_solve_left(kind: AlgebraKind, a: &Vec8, b: &Vec8) -> Result<Vec8> {
    let k = inv_norm(a)?;
    let x = match kind {
        AlgebraKind::Octonion => mul(kind, &conjugate_oct(a), b),
        _ => mul(kind, b, a),
    };
    Ok(x.scale(&k))
}

/// The solution `x` of `x∘a = b`.
pub fn try_solve_right(kind: AlgebraKind, a: &Vec8, b: &Vec8) -> Result<Vec8> {
    let k = inv_norm(a)?;
    let x = match kind {
        AlgebraKind::Octonion => mul(kind, b, &conjugate_oct(a)),
        _ => mul(kind, a, b),
    };
    Ok(x.scale(&k))
}

/// Panicking form of [`try_solve_left`] for callers that already know
/// `a ≠ 0`.
pub fn solve_left(kind: AlgebraKind, a: &Vec8, b: &Vec8) -> Vec8 {
    try_solve_left(kind, a, b).expect("solve_left with a = 0")
}

pub fn solve_right(kind: AlgebraKind, a: &Vec8, b: &Vec8) -> Vec8 {
    try_solve_right(kind, a, b).expect("solve_right with a = 0")
}
