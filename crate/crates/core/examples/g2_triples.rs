//! Triples (A, B, C) of linear maps with B(s*x) = C(s)*A(x) on the Okubo
//! algebra.

use cayley_plane::algebra::{trivolution, LinMap8};
use cayley_plane::collineation::{g2_triple_check, g2_triple_witness};

fn main() {
    let id = LinMap8::identity();
    let tau = LinMap8::from_linear(trivolution);
    println!("(id, id, id):   {}", g2_triple_check(&id, &id, &id, 200, 0));
    println!(
        "(tau, tau, tau): {}",
        g2_triple_check(&tau, &tau, &tau, 200, 0)
    );
    match g2_triple_witness(&tau, &id, &id, 200, 0) {
        Some(w) => {
            println!(
                "(tau, id, id) fails {} at x = {}, s = {}",
                w.condition, w.x, w.s
            );
            println!("  lhs = {}", w.lhs);
            println!("  rhs = {}", w.rhs);
        }
        None => println!("(tau, id, id): no failure found"),
    }
}
