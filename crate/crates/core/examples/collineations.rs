//! Elations and triality acting on points and lines.

use cayley_plane::collineation::{preserves_incidence, Collineation};
use cayley_plane::plane::{PjLine, PjPoint, Plane};
use cayley_plane::{AlgebraKind, Vec8};

fn main() -> cayley_plane::Result<()> {
    let kind = AlgebraKind::Okubo;
    let plane = Plane::new(kind);
    let (e, i1, i2) = (Vec8::e(), Vec8::basis(1), Vec8::basis(2));

    let maps = [
        Collineation::translation(kind, i1.clone(), i2.clone()),
        Collineation::shear(kind, i1.clone()),
        Collineation::triality(kind),
    ];
    let l = PjLine::finite(i1.clone(), e.clone());
    let p = PjPoint::affine(i2.clone(), plane.eval(&i1, &i2, &e));
    println!("p = {p}, l = {l}, incident: {}", plane.incident(&p, &l));
    for c in &maps {
        let (p2, l2) = (c.apply_point(plane, &p)?, c.apply_line(plane, &l)?);
        println!("{}: {p2} on {l2}: {}", c.label(), plane.incident(&p2, &l2));
    }

    let tri = Collineation::triality(kind);
    let thrice = tri.compose(&tri)?.compose(&tri)?;
    println!("triality^3 fixes p: {}", thrice.map_point(&p) == p);

    for c in &maps {
        let r = preserves_incidence(c, 50, 1);
        println!("{r}");
    }
    Ok(())
}
