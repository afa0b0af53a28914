//! Prints the three multiplication tables on the basis, the Gram matrix and
//! its leading minors.

use cayley_plane::algebra::{gram, structure_table};
use cayley_plane::{AlgebraKind, Vec8};

fn main() {
    for kind in AlgebraKind::ALL {
        let t = structure_table(kind);
        println!("{kind} ({} nonzero constants)", t.nonzero_count());
        for i in 0..8 {
            let row: Vec<String> = (0..8)
                .map(|j| format!("{}", t.basis_product(i, j)))
                .collect();
            println!("  {:>2} | {}", Vec8::basis_name(i), row.join(" ; "));
        }
    }

    let g = gram();
    println!("gram matrix:");
    for row in &g.g {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", cells.join(", "));
    }
    let minors: Vec<String> = g.leading_minors().iter().map(ToString::to_string).collect();
    println!("leading minors: {}", minors.join(", "));
    println!("positive definite: {}", g.is_positive_definite());
}
