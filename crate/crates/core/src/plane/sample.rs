//! Random points and lines for the property suites. Affine elements
//! dominate, but every variant is drawn.

use rand::Rng;

use super::{PjLine, PjPoint, Plane};
use crate::algebra::{random_nonzero, random_vec8, Vec8};

pub fn random_affine<R: Rng + ?Sized>(rng: &mut R) -> PjPoint {
    PjPoint::affine(random_vec8(rng), random_vec8(rng))
}

pub fn random_point<R: Rng + ?Sized>(rng: &mut R) -> PjPoint {
    match rng.gen_range(0..20) {
        0 => PjPoint::Infinity,
        1 | 2 => PjPoint::slope(random_vec8(rng)),
        _ => random_affine(rng),
    }
}

pub fn random_line<R: Rng + ?Sized>(rng: &mut R) -> PjLine {
    match rng.gen_range(0..20) {
        0 => PjLine::Infinity,
        1..=3 => PjLine::vertical(random_vec8(rng)),
        _ => PjLine::finite(random_vec8(rng), random_vec8(rng)),
    }
}

/// A random point on `l`, covering its point at infinity too.
pub fn random_point_on<R: Rng + ?Sized>(plane: Plane, l: &PjLine, rng: &mut R) -> PjPoint {
    let at_infinity = rng.gen_range(0..8) == 0;
    match l {
        PjLine::Finite { s, .. } if at_infinity => PjPoint::slope(s.clone()),
        PjLine::Vertical { .. } if at_infinity => PjPoint::Infinity,
        PjLine::Infinity if at_infinity => PjPoint::Infinity,
        _ => plane.some_point_on(l, &random_vec8(rng)),
    }
}

/// A random point off `l`.
pub fn random_point_off<R: Rng + ?Sized>(plane: Plane, l: &PjLine, rng: &mut R) -> PjPoint {
    loop {
        let p = random_point(rng);
        if !plane.incident(&p, l) {
            return p;
        }
    }
}

/// A random point on `l` distinct from every point in `avoid`.
pub fn random_point_on_avoiding<R: Rng + ?Sized>(
    plane: Plane,
    l: &PjLine,
    avoid: &[&PjPoint],
    rng: &mut R,
) -> PjPoint {
    loop {
        let p = plane.some_point_on(l, &random_nonzero(rng));
        if !avoid.contains(&&p) {
            return p;
        }
    }
}

/// `n` distinct random points on `l`.
pub fn distinct_points_on<R: Rng + ?Sized>(
    plane: Plane,
    l: &PjLine,
    n: usize,
    rng: &mut R,
) -> Vec<PjPoint> {
    let mut out: Vec<PjPoint> = Vec::with_capacity(n);
    while out.len() < n {
        let p = plane.some_point_on(l, &random_vec8(rng));
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// A random nonzero slope.
pub fn random_slope<R: Rng + ?Sized>(rng: &mut R) -> Vec8 {
    random_nonzero(rng)
}
