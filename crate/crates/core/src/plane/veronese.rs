//! Veronese coordinates: points and lines as vectors `(x₁, x₂, x₃; λ₁, λ₂, λ₃)`
//! in `A³ × ℝ³`, with incidence given by the vanishing of `β`.
//!
//! For the Okubo and para-octonion planes the conditions are
//! `λ₁x₁ = x₂∘x₃` (cyclic) and `n(x₁) = λ₂λ₃` (cyclic). In the octonion plane
//! the left sides are conjugated: `λ₁x̄₁ = x₂·x₃`, and the point map carries a
//! conjugate in the second slot, `(x, y) ↦ (x, ȳ, y·x̄; n(y), n(x), 1)`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{PjLine, PjPoint, Plane};
use crate::algebra::{conjugate_oct, norm, polar, AlgebraKind, Vec8};
use crate::error::{Error, Result};
use crate::scalar::QSqrt3;

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VeroneseVec {
    pub x1: Vec8,
    pub x2: Vec8,
    pub x3: Vec8,
    pub l1: QSqrt3,
    pub l2: QSqrt3,
    pub l3: QSqrt3,
}

impl VeroneseVec {
    pub fn new(x: [Vec8; 3], l: [QSqrt3; 3]) -> Self {
        let [x1, x2, x3] = x;
        let [l1, l2, l3] = l;
        VeroneseVec {
            x1,
            x2,
            x3,
            l1,
            l2,
            l3,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x1.is_zero()
            && self.x2.is_zero()
            && self.x3.is_zero()
            && self.l1.is_zero()
            && self.l2.is_zero()
            && self.l3.is_zero()
    }

    pub fn scale(&self, k: &QSqrt3) -> Self {
        VeroneseVec::new(
            [self.x1.scale(k), self.x2.scale(k), self.x3.scale(k)],
            [&self.l1 * k, &self.l2 * k, &self.l3 * k],
        )
    }

    /// `(x₂, x₃, x₁; λ₂, λ₃, λ₁)`, the coordinate rotation behind triality.
    pub fn cyclic_shift(&self) -> Self {
        VeroneseVec::new(
            [self.x2.clone(), self.x3.clone(), self.x1.clone()],
            [self.l2.clone(), self.l3.clone(), self.l1.clone()],
        )
    }
}

fn lift(plane: Plane, x: &Vec8) -> Vec8 {
    if plane.kind == AlgebraKind::Octonion {
        conjugate_oct(x)
    } else {
        x.clone()
    }
}

/// The Veronese representative of a point. Its `λ` are norms and `1`, so
/// they are nonnegative with positive sum.
pub fn point_to_veronese(plane: Plane, p: &PjPoint) -> VeroneseVec {
    let z = Vec8::zero;
    let zero = QSqrt3::zero;
    let one = || QSqrt3::from_int(1);
    match p {
        PjPoint::Affine { x, y } => {
            let (x2, x3) = match plane.kind {
                AlgebraKind::Octonion => (conjugate_oct(y), plane.mul(y, &conjugate_oct(x))),
                _ => (y.clone(), plane.mul(x, y)),
            };
            VeroneseVec::new([x.clone(), x2, x3], [norm(y), norm(x), one()])
        }
        PjPoint::Slope { s } => VeroneseVec::new([z(), z(), s.clone()], [norm(s), one(), zero()]),
        PjPoint::Infinity => VeroneseVec::new([z(), z(), z()], [one(), zero(), zero()]),
    }
}

/// The Veronese vector of a line, chosen so that `β(point, line) = 0`
/// exactly when the point is on the line.
pub fn line_to_veronese(plane: Plane, l: &PjLine) -> VeroneseVec {
    let z = Vec8::zero;
    let zero = QSqrt3::zero;
    let one = || QSqrt3::from_int(1);
    match l {
        PjLine::Finite { s, t } => {
            let (x1, x2) = match plane.kind {
                AlgebraKind::Octonion => (plane.mul(&conjugate_oct(s), t), -conjugate_oct(t)),
                _ => (plane.mul(t, s), -t),
            };
            VeroneseVec::new([x1, x2, -s], [one(), norm(s), norm(t)])
        }
        PjLine::Vertical { c } => VeroneseVec::new([-c, z(), z()], [zero(), one(), norm(c)]),
        PjLine::Infinity => VeroneseVec::new([z(), z(), z()], [zero(), zero(), one()]),
    }
}

/// The six Veronese conditions for the plane's algebra.
pub fn is_veronese(plane: Plane, v: &VeroneseVec) -> bool {
    let xs = [&v.x1, &v.x2, &v.x3];
    let ls = [&v.l1, &v.l2, &v.l3];
    (0..3).all(|k| {
        let (a, b) = ((k + 1) % 3, (k + 2) % 3);
        let lhs = lift(plane, xs[k]).scale(ls[k]);
        lhs == plane.mul(xs[a], xs[b]) && norm(xs[k]) == ls[a] * ls[b]
    })
}

/// `β(v, w) = Σ (⟨xᵥ, yᵥ⟩ + λᵥηᵥ)`.
pub fn beta(v: &VeroneseVec, w: &VeroneseVec) -> QSqrt3 {
    polar(&v.x1, &w.x1)
        + polar(&v.x2, &w.x2)
        + polar(&v.x3, &w.x3)
        + &v.l1 * &w.l1
        + &v.l2 * &w.l2
        + &v.l3 * &w.l3
}

/// `q(v) = ½β(v, v)`.
pub fn qform(v: &VeroneseVec) -> QSqrt3 {
    beta(v, v) * QSqrt3::from_ratio(1, 2)
}

/// Rescales so that `λ₁ + λ₂ + λ₃ = 1`. The flag is false when the sum is
/// zero and `v` is returned unchanged.
pub fn normalize_veronese(plane: Plane, v: &VeroneseVec) -> Result<(VeroneseVec, bool)> {
    if v.is_zero() || !is_veronese(plane, v) {
        return Err(Error::NotVeronese);
    }
    let sum = &(&v.l1 + &v.l2) + &v.l3;
    if sum.is_zero() {
        return Ok((v.clone(), false));
    }
    Ok((v.scale(&sum.inv()?), true))
}

/// Reads a point back from any nonzero multiple of its representative.
pub fn veronese_to_point(plane: Plane, v: &VeroneseVec) -> Result<PjPoint> {
    if v.is_zero() || !is_veronese(plane, v) {
        return Err(Error::NotVeronese);
    }
    if !v.l3.is_zero() {
        let k = v.l3.inv()?;
        let x = v.x1.scale(&k);
        let y = lift(plane, &v.x2.scale(&k));
        return Ok(PjPoint::affine(x, y));
    }
    if !v.l2.is_zero() {
        return Ok(PjPoint::slope(v.x3.scale(&v.l2.inv()?)));
    }
    Ok(PjPoint::Infinity)
}

/// Reads a line back from any nonzero multiple of its Veronese vector.
pub fn veronese_to_line(plane: Plane, v: &VeroneseVec) -> Result<PjLine> {
    if v.is_zero() || !is_veronese(plane, v) {
        return Err(Error::NotVeronese);
    }
    if !v.l1.is_zero() {
        let k = v.l1.inv()?;
        let s = -v.x3.scale(&k);
        let t = -lift(plane, &v.x2.scale(&k));
        return Ok(PjLine::finite(s, t));
    }
    if !v.l2.is_zero() {
        return Ok(PjLine::vertical(-v.x1.scale(&v.l2.inv()?)));
    }
    Ok(PjLine::Infinity)
}
