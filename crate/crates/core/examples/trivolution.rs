//! The order-three automorphism τ(x) = ⟨x,e⟩e − x*e.

use cayley_plane::algebra::{mul, trivolution, trivolution_sq, LinMap8};
use cayley_plane::{AlgebraKind, Vec8};

fn main() {
    let tau = LinMap8::from_linear(trivolution);
    for k in 0..8 {
        let b = Vec8::basis(k);
        println!("tau({}) = {}", Vec8::basis_name(k), trivolution(&b));
    }
    println!("tau^3 = id: {}", tau.pow(3).is_identity());
    println!(
        "tau^2 = x -> (x*e)*e: {}",
        tau.pow(2) == LinMap8::from_linear(trivolution_sq)
    );

    let (x, y) = (Vec8::basis(1), Vec8::basis(6));
    for kind in [AlgebraKind::Okubo, AlgebraKind::Octonion] {
        let lhs = trivolution(&mul(kind, &x, &y));
        let rhs = mul(kind, &trivolution(&x), &trivolution(&y));
        println!("{kind}: tau(i1 i6) = tau(i1) tau(i6): {}", lhs == rhs);
    }
}
