//! The planar ternary ring of the Okubo plane, read in octonion labels.
//!
//! Coordinatizing with the quadrangle `(0,0), (e,e), (0), (∞)` labels each
//! Okubo coordinate by the same vector, so `θ(s, x, t)` is the ordinate of
//! the point of `[s, t]` over `x`, i.e. `s*x + t` with the Okubo product.

use serde::{Deserialize, Serialize};

use crate::algebra::{mul, AlgebraKind, Vec8};

/// `θ(s, x, t) = s*x + t`.
pub fn ptr_theta(s: &Vec8, x: &Vec8, t: &Vec8) -> Vec8 {
    &mul(AlgebraKind::Okubo, s, x) + t
}

/// The PTR multiplication `θ(s, x, 0)`.
pub fn ptr_product(s: &Vec8, x: &Vec8) -> Vec8 {
    ptr_theta(s, x, &Vec8::zero())
}

/// The PTR addition `θ(e, x, t)`.
pub fn ptr_sum(x: &Vec8, t: &Vec8) -> Vec8 {
    ptr_theta(&Vec8::e(), x, t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PtrWitness {
    pub s: Vec8,
    pub x: Vec8,
    /// `θ(s, x, 0)`
    pub theta: Vec8,
    /// `s·x` in the octonions
    pub product: Vec8,
}

impl PtrWitness {
    pub fn verify(&self) -> bool {
        self.theta == ptr_product(&self.s, &self.x)
            && self.product == mul(AlgebraKind::Octonion, &self.s, &self.x)
            && self.theta != self.product
    }
}

/// The first basis pair, in row order, where `θ(s, x, 0) ≠ s·x`.
pub fn ptr_nonlinearity_witness() -> PtrWitness {
    for si in 0..8 {
        for xi in 0..8 {
            let (s, x) = (Vec8::basis(si), Vec8::basis(xi));
            let theta = ptr_product(&s, &x);
            let product = mul(AlgebraKind::Octonion, &s, &x);
            if theta != product {
                return PtrWitness {
                    s,
                    x,
                    theta,
                    product,
                };
            }
        }
    }
    unreachable!("the Okubo and octonion products differ on e*i1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> crate::QSqrt3 {
        s.parse().unwrap()
    }

    #[test]
    fn theta_examples() {
        let e = Vec8::e();
        let i1 = Vec8::basis(1);
        assert_eq!(ptr_theta(&e, &e, &Vec8::zero()), e);
        let mut want = Vec8::zero();
        want[1] = q("1/2");
        want[5] = q("-1/2*sqrt3");
        assert_eq!(ptr_theta(&e, &i1, &Vec8::zero()), want);
        let t = Vec8::basis(6);
        assert_eq!(ptr_theta(&Vec8::zero(), &i1, &t), t);
    }

    #[test]
    fn witness_is_e_i1() {
        let w = ptr_nonlinearity_witness();
        assert_eq!(w.s, Vec8::e());
        assert_eq!(w.x, Vec8::basis(1));
        assert_eq!(w.product, Vec8::basis(1));
        assert!(w.verify());
    }

    #[test]
    fn unit_slope_contrast() {
        // In the octonion plane the unit slope acts as the identity; in the
        // Okubo plane it acts as left multiplication by e.
        for k in 0..8 {
            let x = Vec8::basis(k);
            assert_eq!(mul(AlgebraKind::Octonion, &Vec8::e(), &x), x);
        }
        assert_ne!(ptr_product(&Vec8::e(), &Vec8::basis(1)), Vec8::basis(1));
    }
}
