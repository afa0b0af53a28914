//! Values computed independently with sympy from the 3x3 matrix model and
//! frozen here.

use cayley_plane::algebra::{conjugate_oct, mul, norm, trivolution};
use cayley_plane::{AlgebraKind, QSqrt3, Vec8};

fn v(parts: [&str; 8]) -> Vec8 {
    Vec8::parse_coords(&parts).unwrap()
}

fn x() -> Vec8 {
    v(["1", "0", "1/2", "0", "0", "sqrt3", "0", "-1"])
}

fn y() -> Vec8 {
    v(["0", "1", "0", "-1/2*sqrt3", "2", "0", "3/2", "0"])
}

#[test]
fn okubo_basis_products() {
    let b = Vec8::basis;
    let k = AlgebraKind::Okubo;
    let half = v(["0", "0", "0", "1/2*sqrt3", "0", "0", "0", "-1/2"]);
    assert_eq!(mul(k, &b(1), &b(2)), half);
    assert_eq!(mul(k, &b(5), &b(6)), half);
    assert_eq!(
        mul(k, &b(4), &b(4)),
        v(["2", "0", "0", "0", "-sqrt3", "0", "0", "0"])
    );
}

#[test]
fn octonion_basis_product_off_orthonormal() {
    let got = mul(AlgebraKind::Octonion, &Vec8::basis(1), &Vec8::basis(5));
    assert_eq!(got, v(["-sqrt3", "0", "0", "0", "2", "0", "0", "0"]));
}

#[test]
fn products_of_fixed_vectors() {
    assert_eq!(
        mul(AlgebraKind::Okubo, &x(), &y()),
        v([
            "3/2 + 5/4*sqrt3",
            "1/8 - 11/4*sqrt3",
            "-1/4 + 5/4*sqrt3",
            "5/4 + 3/4*sqrt3",
            "-5/4",
            "-3/4 - 3/8*sqrt3",
            "5/4 - 5/4*sqrt3",
            "1/4 + 1/4*sqrt3",
        ])
    );
    assert_eq!(
        mul(AlgebraKind::Octonion, &x(), &y()),
        v([
            "9/2 + 3/4*sqrt3",
            "1 + sqrt3",
            "1/2 + 1/2*sqrt3",
            "-1 - 1/2*sqrt3",
            "1/2 - 3*sqrt3",
            "9/2 - 1/4*sqrt3",
            "2",
            "-1/2 + 1/2*sqrt3",
        ])
    );
    assert_eq!(
        mul(AlgebraKind::ParaOctonion, &x(), &y()),
        v([
            "9/2 + 11/4*sqrt3",
            "-1 + sqrt3",
            "1/2 - 1/2*sqrt3",
            "-1 + 1/2*sqrt3",
            "-7/2 - 3*sqrt3",
            "-3/2 - 1/4*sqrt3",
            "-1",
            "-1/2 + 5/2*sqrt3",
        ])
    );
}

#[test]
fn norms_and_maps_of_fixed_vectors() {
    assert_eq!(norm(&x()), QSqrt3::from_ratio(21, 4));
    assert_eq!(norm(&y()), QSqrt3::from_int(8));
    assert_eq!(
        trivolution(&x()),
        v([
            "1",
            "3/2",
            "-1/4",
            "0",
            "0",
            "-1/2*sqrt3",
            "-1/4*sqrt3",
            "-1"
        ])
    );
    assert_eq!(
        conjugate_oct(&x()),
        v(["1", "0", "-1/2", "0", "0", "-sqrt3", "0", "1"])
    );
}
