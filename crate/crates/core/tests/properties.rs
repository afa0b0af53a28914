use cayley_plane::algebra::{mul, norm, solve_left, trivolution};
use cayley_plane::collineation::Collineation;
use cayley_plane::plane::{beta, line_to_veronese, point_to_veronese, PjLine, PjPoint, Plane};
use cayley_plane::{AlgebraKind, QSqrt3, Vec8};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = QSqrt3> {
    (-3i64..=3, 1i64..=2, any::<bool>()).prop_map(|(p, q, irr)| {
        if irr {
            QSqrt3::from_parts(0, 1, p, q)
        } else {
            QSqrt3::from_ratio(p, q)
        }
    })
}

fn vec8() -> impl Strategy<Value = Vec8> {
    proptest::array::uniform8(scalar()).prop_map(Vec8::new)
}

fn kind() -> impl Strategy<Value = AlgebraKind> {
    prop_oneof![
        Just(AlgebraKind::Octonion),
        Just(AlgebraKind::ParaOctonion),
        Just(AlgebraKind::Okubo)
    ]
}

fn point() -> impl Strategy<Value = PjPoint> {
    prop_oneof![
        6 => (vec8(), vec8()).prop_map(|(x, y)| PjPoint::affine(x, y)),
        2 => vec8().prop_map(PjPoint::slope),
        1 => Just(PjPoint::Infinity),
    ]
}

fn line() -> impl Strategy<Value = PjLine> {
    prop_oneof![
        6 => (vec8(), vec8()).prop_map(|(s, t)| PjLine::finite(s, t)),
        2 => vec8().prop_map(PjLine::vertical),
        1 => Just(PjLine::Infinity),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative(k in kind(), x in vec8(), y in vec8()) {
        prop_assert_eq!(norm(&mul(k, &x, &y)), norm(&x) * norm(&y));
    }

    #[test]
    fn left_division_inverts(k in kind(), a in vec8(), b in vec8()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(mul(k, &a, &solve_left(k, &a, &b)), b);
    }

    #[test]
    fn tau_is_okubo_automorphism(x in vec8(), y in vec8()) {
        let k = AlgebraKind::Okubo;
        prop_assert_eq!(trivolution(&mul(k, &x, &y)), mul(k, &trivolution(&x), &trivolution(&y)));
    }

    #[test]
    fn join_contains_both_points(k in kind(), p in point(), q in point()) {
        prop_assume!(p != q);
        let plane = Plane::new(k);
        let l = plane.join(&p, &q).unwrap();
        prop_assert!(plane.incident(&p, &l) && plane.incident(&q, &l));
    }

    #[test]
    fn meet_lies_on_both_lines(k in kind(), l in line(), m in line()) {
        prop_assume!(l != m);
        let plane = Plane::new(k);
        let p = plane.meet(&l, &m).unwrap();
        prop_assert!(plane.incident(&p, &l) && plane.incident(&p, &m));
    }

    #[test]
    fn beta_vanishes_iff_incident(k in kind(), p in point(), l in line()) {
        let plane = Plane::new(k);
        let b = beta(&point_to_veronese(plane, &p), &line_to_veronese(plane, &l));
        prop_assert_eq!(b == QSqrt3::from_int(0), plane.incident(&p, &l));
    }

    #[test]
    fn triality_keeps_incidence(k in kind(), p in point(), l in line()) {
        let plane = Plane::new(k);
        let t = Collineation::triality(k);
        prop_assert_eq!(plane.incident(&t.map_point(&p), &t.map_line(&l)), plane.incident(&p, &l));
    }

    #[test]
    fn phi_keeps_incidence(p in point(), l in line()) {
        let okubo = Plane::new(AlgebraKind::Okubo);
        let oct = Plane::new(AlgebraKind::Octonion);
        let phi = Collineation::Phi;
        prop_assert_eq!(oct.incident(&phi.map_point(&p), &phi.map_line(&l)), okubo.incident(&p, &l));
    }

    #[test]
    fn point_json_round_trip(p in point()) {
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<PjPoint>(&text).unwrap(), p);
    }
}
