//! Affine and projective planes over the three algebras.
//!
//! Points and lines are tagged unions over the affine chart plus the
//! elements at infinity. A line `[s, t]` is the point set `y = s∘x + t`;
//! `[c]` is the vertical line `x = c`; `[∞]` carries the slope points
//! `(s)` and `(∞)`.
//!
//! ```
//! use cayley_plane::plane::{Plane, PjPoint, PjLine};
//! use cayley_plane::{AlgebraKind, Vec8};
//!
//! let plane = Plane::new(AlgebraKind::Okubo);
//! let o = PjPoint::origin();
//! let p = PjPoint::affine(Vec8::e(), Vec8::e());
//! let l = plane.join(&o, &p).unwrap();
//! assert_eq!(l, PjLine::finite(Vec8::e(), Vec8::zero()));
//! ```

pub mod sample;
pub mod veronese;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{mul, norm, try_solve_left, try_solve_right, AlgebraKind, Vec8};
use crate::error::{Error, Result};
use crate::scalar::QSqrt3;

pub use veronese::{
    beta, is_veronese, line_to_veronese, normalize_veronese, point_to_veronese, qform,
    veronese_to_line, veronese_to_point, VeroneseVec,
};

/// A point of the projective completion.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PjPoint {
    /// `(x, y)`
    Affine { x: Vec8, y: Vec8 },
    /// `(s)`, the common point at infinity of the lines of slope `s`.
    Slope { s: Vec8 },
    /// `(∞)`, the common point of the vertical lines.
    Infinity,
}

/// A line of the projective completion.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PjLine {
    /// `[s, t]`: `y = s∘x + t`.
    Finite { s: Vec8, t: Vec8 },
    /// `[c]`: `x = c`.
    Vertical { c: Vec8 },
    /// `[∞]`
    Infinity,
}

impl PjPoint {
    pub fn affine(x: Vec8, y: Vec8) -> Self {
        PjPoint::Affine { x, y }
    }

    pub fn slope(s: Vec8) -> Self {
        PjPoint::Slope { s }
    }

    pub fn origin() -> Self {
        PjPoint::affine(Vec8::zero(), Vec8::zero())
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, PjPoint::Affine { .. })
    }

    pub fn coords(&self) -> Option<(&Vec8, &Vec8)> {
        match self {
            PjPoint::Affine { x, y } => Some((x, y)),
            _ => None,
        }
    }
}

impl PjLine {
    pub fn finite(s: Vec8, t: Vec8) -> Self {
        PjLine::Finite { s, t }
    }

    pub fn vertical(c: Vec8) -> Self {
        PjLine::Vertical { c }
    }
}

impl fmt::Display for PjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PjPoint::Affine { x, y } => write!(f, "({x}, {y})"),
            PjPoint::Slope { s } => write!(f, "({s})"),
            PjPoint::Infinity => f.write_str("(∞)"),
        }
    }
}

impl fmt::Debug for PjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PjLine::Finite { s, t } => write!(f, "[{s}, {t}]"),
            PjLine::Vertical { c } => write!(f, "[{c}]"),
            PjLine::Infinity => f.write_str("[∞]"),
        }
    }
}

impl fmt::Debug for PjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The plane over one of the three algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Plane {
    pub kind: AlgebraKind,
}

impl Plane {
    pub fn new(kind: AlgebraKind) -> Self {
        Plane { kind }
    }

    pub fn mul(&self, x: &Vec8, y: &Vec8) -> Vec8 {
        mul(self.kind, x, y)
    }

    /// `s∘x + t`, the ordinate of the point of `[s, t]` over `x`.
    pub fn eval(&self, s: &Vec8, x: &Vec8, t: &Vec8) -> Vec8 {
        &self.mul(s, x) + t
    }

    /// The slope `s` with `s∘(x₁−x₂) = y₁−y₂`.
    pub fn slope_through(&self, x1: &Vec8, y1: &Vec8, x2: &Vec8, y2: &Vec8) -> Result<Vec8> {
        try_solve_right(self.kind, &(x1 - x2), &(y1 - y2))
    }

    /// The line through two distinct points.
    pub fn join(&self, p: &PjPoint, q: &PjPoint) -> Result<PjLine> {
        use PjPoint::*;
        if p == q {
            return Err(Error::EqualPoints);
        }
        let line = match (p, q) {
            (Affine { x: x1, y: y1 }, Affine { x: x2, y: y2 }) => {
                if x1 == x2 {
                    PjLine::vertical(x1.clone())
                } else {
                    let s = self.slope_through(x1, y1, x2, y2)?;
                    let t = y1 - &self.mul(&s, x1);
                    PjLine::finite(s, t)
                }
            }
            (Affine { x, y }, Slope { s }) | (Slope { s }, Affine { x, y }) => {
                let t = y - &self.mul(s, x);
                PjLine::finite(s.clone(), t)
            }
            (Affine { x, .. }, Infinity) | (Infinity, Affine { x, .. }) => {
                PjLine::vertical(x.clone())
            }
            _ => PjLine::Infinity,
        };
        debug_assert!(self.incident(p, &line) && self.incident(q, &line));
        Ok(line)
    }

    /// The common point of two distinct lines.
    pub fn meet(&self, l: &PjLine, m: &PjLine) -> Result<PjPoint> {
        use PjLine::*;
        if l == m {
            return Err(Error::EqualLines);
        }
        let point = match (l, m) {
            (Finite { s: s1, t: t1 }, Finite { s: s2, t: t2 }) => {
                if s1 == s2 {
                    PjPoint::slope(s1.clone())
                } else {
                    let x = try_solve_left(self.kind, &(s1 - s2), &(t2 - t1))?;
                    let y = self.eval(s1, &x, t1);
                    PjPoint::affine(x, y)
                }
            }
            (Finite { s, t }, Vertical { c }) | (Vertical { c }, Finite { s, t }) => {
                PjPoint::affine(c.clone(), self.eval(s, c, t))
            }
            (Finite { s, .. }, Infinity) | (Infinity, Finite { s, .. }) => {
                PjPoint::slope(s.clone())
            }
            _ => PjPoint::Infinity,
        };
        debug_assert!(self.incident(&point, l) && self.incident(&point, m));
        Ok(point)
    }

    pub fn incident(&self, p: &PjPoint, l: &PjLine) -> bool {
        match (p, l) {
            (PjPoint::Affine { x, y }, PjLine::Finite { s, t }) => *y == self.eval(s, x, t),
            (PjPoint::Affine { x, .. }, PjLine::Vertical { c }) => x == c,
            (PjPoint::Affine { .. }, PjLine::Infinity) => false,
            (PjPoint::Slope { s }, PjLine::Finite { s: s2, .. }) => s == s2,
            (PjPoint::Slope { .. }, PjLine::Vertical { .. }) => false,
            (PjPoint::Slope { .. }, PjLine::Infinity) => true,
            (PjPoint::Infinity, PjLine::Finite { .. }) => false,
            (PjPoint::Infinity, _) => true,
        }
    }

    /// Whether three points lie on a common line. Coincident points count
    /// as collinear.
    pub fn collinear(&self, a: &PjPoint, b: &PjPoint, c: &PjPoint) -> Result<bool> {
        if a == b || a == c || b == c {
            return Ok(true);
        }
        Ok(self.incident(c, &self.join(a, b)?))
    }

    /// `d = n(x₁−x₂)² + n(y₁−y₂)²` between affine points.
    pub fn distance(&self, p: &PjPoint, q: &PjPoint) -> Result<QSqrt3> {
        let ((x1, y1), (x2, y2)) = match (p.coords(), q.coords()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::InfiniteElement),
        };
        let dx = norm(&(x1 - x2));
        let dy = norm(&(y1 - y2));
        Ok(dx.square() + dy.square())
    }

    /// The parallel to `l` through `p`: the line joining `p` with the point
    /// at infinity of `l`.
    pub fn parallel(&self, l: &PjLine, p: &PjPoint) -> Result<PjLine> {
        let at_inf = match l {
            PjLine::Finite { s, .. } => PjPoint::slope(s.clone()),
            PjLine::Vertical { .. } => PjPoint::Infinity,
            PjLine::Infinity => return Err(Error::InfiniteElement),
        };
        if !p.is_affine() {
            return Err(Error::InfiniteElement);
        }
        self.join(p, &at_inf)
    }

    /// The point of `l` selected by `param`: the abscissa on a finite line,
    /// the ordinate on a vertical one, the slope on `[∞]` (`0` gives `(∞)`).
    pub fn some_point_on(&self, l: &PjLine, param: &Vec8) -> PjPoint {
        match l {
            PjLine::Finite { s, t } => PjPoint::affine(param.clone(), self.eval(s, param, t)),
            PjLine::Vertical { c } => PjPoint::affine(c.clone(), param.clone()),
            PjLine::Infinity => {
                if param.is_zero() {
                    PjPoint::Infinity
                } else {
                    PjPoint::slope(param.clone())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{random_vec8, trial_rng};
    use proptest::prelude::*;

    fn q(s: &str) -> QSqrt3 {
        s.parse().unwrap()
    }

    fn i(k: usize) -> Vec8 {
        Vec8::basis(k)
    }

    fn okubo() -> Plane {
        Plane::new(AlgebraKind::Okubo)
    }

    #[test]
    fn join_examples() {
        let p = okubo();
        let e = Vec8::e();
        let z = Vec8::zero();
        assert_eq!(
            p.join(&PjPoint::origin(), &PjPoint::affine(e.clone(), e.clone()))
                .unwrap(),
            PjLine::finite(e.clone(), z.clone())
        );
        assert_eq!(
            p.join(&PjPoint::origin(), &PjPoint::Infinity).unwrap(),
            PjLine::vertical(z.clone())
        );
        let mut sq = Vec8::zero();
        sq[0] = q("2");
        sq[4] = q("-sqrt3");
        assert_eq!(
            p.join(&PjPoint::affine(i(1), i(1)), &PjPoint::origin())
                .unwrap(),
            PjLine::finite(sq, z)
        );
        assert_eq!(
            p.join(&PjPoint::Infinity, &PjPoint::Infinity),
            Err(Error::EqualPoints)
        );
    }

    #[test]
    fn meet_examples() {
        let p = okubo();
        let e = Vec8::e();
        let z = Vec8::zero();
        assert_eq!(
            p.meet(
                &PjLine::finite(z.clone(), z.clone()),
                &PjLine::vertical(z.clone())
            )
            .unwrap(),
            PjPoint::origin()
        );
        assert_eq!(
            p.meet(
                &PjLine::finite(e.clone(), z.clone()),
                &PjLine::finite(e.clone(), e.clone())
            )
            .unwrap(),
            PjPoint::slope(e.clone())
        );
        assert_eq!(
            p.meet(
                &PjLine::finite(e.clone(), z.clone()),
                &PjLine::finite(z.clone(), e.clone())
            )
            .unwrap(),
            PjPoint::affine(e.clone(), e.clone())
        );
        assert_eq!(
            p.meet(&PjLine::Infinity, &PjLine::Infinity),
            Err(Error::EqualLines)
        );
    }

    #[test]
    fn incidence_examples() {
        let p = okubo();
        let e = Vec8::e();
        let l = PjLine::finite(e.clone(), Vec8::zero());
        assert!(p.incident(&PjPoint::affine(e.clone(), e.clone()), &l));
        assert!(!p.incident(&PjPoint::affine(i(1), i(1)), &l));
        assert!(p.incident(&PjPoint::Infinity, &PjLine::Infinity));
    }

    #[test]
    fn distance_examples() {
        let p = okubo();
        let o = PjPoint::origin();
        assert_eq!(
            p.distance(&o, &PjPoint::affine(Vec8::e(), Vec8::zero()))
                .unwrap(),
            q("1")
        );
        assert_eq!(p.distance(&o, &o).unwrap(), q("0"));
        assert_eq!(
            p.distance(&o, &PjPoint::affine(i(1), i(1))).unwrap(),
            q("2")
        );
        assert_eq!(
            p.distance(&o, &PjPoint::Infinity),
            Err(Error::InfiniteElement)
        );
    }

    #[test]
    fn quadrangle_has_no_three_collinear() {
        for kind in AlgebraKind::ALL {
            let p = Plane::new(kind);
            let e = Vec8::e();
            let quad = [
                PjPoint::origin(),
                PjPoint::affine(e.clone(), e.clone()),
                PjPoint::slope(Vec8::zero()),
                PjPoint::Infinity,
            ];
            for a in 0..4 {
                for b in a + 1..4 {
                    for c in b + 1..4 {
                        assert!(!p.collinear(&quad[a], &quad[b], &quad[c]).unwrap());
                    }
                }
            }
        }
    }

    fn arb_point(kind: AlgebraKind) -> impl Strategy<Value = PjPoint> {
        (any::<u64>(), 0u8..10).prop_map(move |(seed, tag)| {
            let mut rng = trial_rng(seed, kind as u64);
            match tag {
                0 => PjPoint::Infinity,
                1 | 2 => PjPoint::slope(random_vec8(&mut rng)),
                _ => PjPoint::affine(random_vec8(&mut rng), random_vec8(&mut rng)),
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn join_then_meet(p in arb_point(AlgebraKind::Okubo), q in arb_point(AlgebraKind::Okubo), kind_ix in 0usize..3) {
            let plane = Plane::new(AlgebraKind::ALL[kind_ix]);
            prop_assume!(p != q);
            let l = plane.join(&p, &q).unwrap();
            prop_assert!(plane.incident(&p, &l));
            prop_assert!(plane.incident(&q, &l));
            let r = PjPoint::affine(Vec8::basis(2), Vec8::basis(3));
            if !plane.incident(&r, &l) {
                let m = plane.join(&p, &r).unwrap();
                prop_assert_eq!(plane.meet(&l, &m).unwrap(), p.clone());
            }
        }
    }
}
