//! The ternary ring read off the Okubo plane is not s·x + t.

use cayley_plane::algebra::mul;
use cayley_plane::theorems::{ptr_nonlinearity_witness, ptr_sum, ptr_theta};
use cayley_plane::{AlgebraKind, Vec8};

fn main() {
    let w = ptr_nonlinearity_witness();
    println!("theta({}, {}, 0) = {}", w.s, w.x, w.theta);
    println!("{} . {}       = {}", w.s, w.x, w.product);
    println!("witness verifies: {}", w.verify());

    let (x, t) = (Vec8::basis(3), Vec8::basis(7));
    println!("theta(e, i3, i7) = {}", ptr_theta(&Vec8::e(), &x, &t));
    println!("x + t via the ring: {}", ptr_sum(&x, &t));
    println!(
        "e . i3 in the octonions: {}",
        mul(AlgebraKind::Octonion, &Vec8::e(), &x)
    );
}
