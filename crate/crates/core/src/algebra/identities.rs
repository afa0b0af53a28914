use std::fmt;

use serde::{Deserialize, Serialize};

use super::ops::{conjugate_oct, mul, norm, polar, trivolution, trivolution_sq};
use super::{AlgebraKind, Vec8};
use crate::scalar::QSqrt3;

/// The identities the harness knows how to test. Each takes up to three
/// arguments `x, y, z`; unused ones are ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdentityName {
    /// `((x∘y)∘x)∘z = x∘(y∘(x∘z))`
    Moufang1,
    /// `((z∘x)∘y)∘x = z∘(x∘(y∘x))`
    Moufang2,
    /// `(x∘y)∘(z∘x) = x∘((y∘z)∘x)`
    Moufang3,
    /// `(x∘y)∘x = x∘(y∘x)`
    Flexible,
    /// `(x∘x)∘y = x∘(x∘y)`
    AlternativeLeft,
    /// `(x∘y)∘y = x∘(y∘y)`
    AlternativeRight,
    /// `n(x∘y) = n(x)n(y)`
    Composition,
    /// `(x∘y)∘x = n(x)y`
    SymmetricComposition,
    /// `⟨x∘y, z⟩ = ⟨x, y∘z⟩`
    NormAssociative,
}

impl IdentityName {
    pub const ALL: [IdentityName; 9] = [
        IdentityName::Moufang1,
        IdentityName::Moufang2,
        IdentityName::Moufang3,
        IdentityName::Flexible,
        IdentityName::AlternativeLeft,
        IdentityName::AlternativeRight,
        IdentityName::Composition,
        IdentityName::SymmetricComposition,
        IdentityName::NormAssociative,
    ];

    pub const MOUFANG: [IdentityName; 3] = [
        IdentityName::Moufang1,
        IdentityName::Moufang2,
        IdentityName::Moufang3,
    ];

    /// The five laws that fail in the two symmetric composition algebras.
    pub const NON_ALTERNATIVE: [IdentityName; 5] = [
        IdentityName::Moufang1,
        IdentityName::Moufang2,
        IdentityName::Moufang3,
        IdentityName::AlternativeLeft,
        IdentityName::AlternativeRight,
    ];

    /// Whether the identity is expected to hold universally in `kind`.
    pub fn holds_in(self, kind: AlgebraKind) -> bool {
        use IdentityName::*;
        match self {
            Flexible | Composition => true,
            SymmetricComposition | NormAssociative => kind.is_symmetric(),
            Moufang1 | Moufang2 | Moufang3 | AlternativeLeft | AlternativeRight => {
                kind == AlgebraKind::Octonion
            }
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One side of an identity: an element or a scalar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Side {
    Element(Vec8),
    Scalar(QSqrt3),
}

/// Both sides of `name` evaluated at `(x, y, z)`.
pub fn identity_sides(
    kind: AlgebraKind,
    name: IdentityName,
    x: &Vec8,
    y: &Vec8,
    z: &Vec8,
) -> (Side, Side) {
    use IdentityName::*;
    let m = |a: &Vec8, b: &Vec8| mul(kind, a, b);
    let el = Side::Element;
    match name {
        Moufang1 => (el(m(&m(&m(x, y), x), z)), el(m(x, &m(y, &m(x, z))))),
        Moufang2 => (el(m(&m(&m(z, x), y), x)), el(m(z, &m(x, &m(y, x))))),
        Moufang3 => (el(m(&m(x, y), &m(z, x))), el(m(x, &m(&m(y, z), x)))),
        Flexible => (el(m(&m(x, y), x)), el(m(x, &m(y, x)))),
        AlternativeLeft => (el(m(&m(x, x), y)), el(m(x, &m(x, y)))),
        AlternativeRight => (el(m(&m(x, y), y)), el(m(x, &m(y, y)))),
        Composition => (
            Side::Scalar(norm(&m(x, y))),
            Side::Scalar(&norm(x) * &norm(y)),
        ),
        SymmetricComposition => (el(m(&m(x, y), x)), el(y.scale(&norm(x)))),
        NormAssociative => (
            Side::Scalar(polar(&m(x, y), z)),
            Side::Scalar(polar(x, &m(y, z))),
        ),
    }
}

/// Evaluates both sides exactly and compares them.
pub fn check_identity(kind: AlgebraKind, name: IdentityName, x: &Vec8, y: &Vec8, z: &Vec8) -> bool {
    let (l, r) = identity_sides(kind, name, x, y, z);
    l == r
}

/// Labels of the six conversions checked by [`table2_crosscheck_detail`].
pub const TABLE2_LABELS: [&str; 6] = [
    "x*y = tau(xbar).tau2(ybar)",
    "x∙y = xbar.ybar",
    "x.y = (e*x)*(y*e)",
    "x∙y = tau2(x)*tau(y)",
    "x*y = tau(x)∙tau2(y)",
    "x.y = (1∙x)∙(y∙1)",
];

/// The six conversions between the three products, each as a boolean.
pub fn table2_crosscheck_detail(x: &Vec8, y: &Vec8) -> [bool; 6] {
    use AlgebraKind::*;
    let e = Vec8::e();
    let okubo = mul(Okubo, x, y);
    let para = mul(ParaOctonion, x, y);
    let oct = mul(Octonion, x, y);
    let xb = conjugate_oct(x);
    let yb = conjugate_oct(y);
    [
        okubo == mul(Octonion, &trivolution(&xb), &trivolution_sq(&yb)),
        para == mul(Octonion, &xb, &yb),
        oct == mul(Okubo, &mul(Okubo, &e, x), &mul(Okubo, y, &e)),
        para == mul(Okubo, &trivolution_sq(x), &trivolution(y)),
        okubo == mul(ParaOctonion, &trivolution(x), &trivolution_sq(y)),
        oct == mul(
            ParaOctonion,
            &mul(ParaOctonion, &e, x),
            &mul(ParaOctonion, y, &e),
        ),
    ]
}

/// True when all six conversions hold at `(x, y)`.
pub fn table2_crosscheck(x: &Vec8, y: &Vec8) -> bool {
    table2_crosscheck_detail(x, y).iter().all(|&b| b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::random::{random_vec8, trial_rng};
    use proptest::prelude::*;

    #[test]
    fn table2_on_basis() {
        assert!(table2_crosscheck(&Vec8::e(), &Vec8::e()));
        assert!(table2_crosscheck(&Vec8::basis(1), &Vec8::basis(2)));
        for i in 0..8 {
            for j in 0..8 {
                assert!(
                    table2_crosscheck(&Vec8::basis(i), &Vec8::basis(j)),
                    "({i},{j})"
                );
            }
        }
    }

    #[test]
    fn octonion_is_not_symmetric_composition() {
        let i1 = Vec8::basis(1);
        let z = Vec8::zero();
        assert!(!check_identity(
            AlgebraKind::Octonion,
            IdentityName::SymmetricComposition,
            &i1,
            &i1,
            &z
        ));
        // (i1·i1)·i1 = −i1
        let (l, _) = identity_sides(
            AlgebraKind::Octonion,
            IdentityName::SymmetricComposition,
            &i1,
            &i1,
            &z,
        );
        assert_eq!(l, Side::Element(-&i1));
    }

    #[test]
    fn okubo_alternative_left_fails_at_e_i4() {
        let z = Vec8::zero();
        assert!(!check_identity(
            AlgebraKind::Okubo,
            IdentityName::AlternativeLeft,
            &Vec8::e(),
            &Vec8::basis(4),
            &z
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn expected_identities_hold(seed in any::<u64>()) {
            let mut rng = trial_rng(seed, 0);
            let (x, y, z) = (random_vec8(&mut rng), random_vec8(&mut rng), random_vec8(&mut rng));
            for kind in AlgebraKind::ALL {
                for name in IdentityName::ALL {
                    if name.holds_in(kind) {
                        prop_assert!(check_identity(kind, name, &x, &y, &z), "{} {}", kind, name);
                    }
                }
            }
            prop_assert!(table2_crosscheck(&x, &y));
        }
    }
}
