//! The maps carrying the Okubo plane onto the octonion and para-octonion
//! planes, and the coordinate swap that is not a collineation.

use cayley_plane::collineation::{
    is_isometry, okubo_swap, preserves_incidence, swap_non_collineation_witness,
    transported_reflection, transported_reflection_closed_form, Collineation,
};
use cayley_plane::plane::PjPoint;
use cayley_plane::Vec8;

fn main() -> cayley_plane::Result<()> {
    for c in [Collineation::Phi, Collineation::PPhi] {
        println!("{}", preserves_incidence(&c, 100, 0));
        println!("{}", is_isometry(&c, 100, 0));
    }

    let p = PjPoint::affine(Vec8::basis(1), Vec8::basis(5));
    let image = Collineation::Phi.map_point(&p);
    println!("Phi{p} = {image}");
    println!("back: {}", Collineation::PhiInv.map_point(&image));

    println!("swap{p} = {}", okubo_swap(&p)?);
    println!("transported reflection: {}", transported_reflection(&p)?);
    println!(
        "closed form:            {}",
        transported_reflection_closed_form(&p)?
    );

    if let Some(w) = swap_non_collineation_witness() {
        println!(
            "collinear on {}: {}, {}, {}",
            w.line, w.points[0], w.points[1], w.points[2]
        );
        println!("swapped images not collinear: {}", w.verify()?);
    }
    Ok(())
}
