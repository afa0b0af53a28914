//! Lines through points and points on lines in the three planes.

use cayley_plane::plane::{PjLine, PjPoint, Plane};
use cayley_plane::{AlgebraKind, Vec8};

fn main() -> cayley_plane::Result<()> {
    let e = Vec8::e();
    let i1 = Vec8::basis(1);
    for kind in AlgebraKind::ALL {
        let plane = Plane::new(kind);
        let p = PjPoint::affine(e.clone(), i1.clone());
        let q = PjPoint::affine(i1.clone(), Vec8::zero());
        let l = plane.join(&p, &q)?;
        println!("{kind}: {p} v {q} = {l}");

        let m = PjLine::finite(e.clone(), Vec8::zero());
        let r = plane.meet(&l, &m)?;
        println!("  {l} ^ {m} = {r}");
        println!(
            "  on both: {}",
            plane.incident(&r, &l) && plane.incident(&r, &m)
        );

        let par = plane.parallel(&m, &p)?;
        println!("  parallel to {m} through {p}: {par}");
        println!("  meets {m} at {}", plane.meet(&m, &par)?);

        // (0,0), (e,e), (i1,i1)
        let diag = plane.collinear(
            &PjPoint::origin(),
            &PjPoint::affine(e.clone(), e.clone()),
            &PjPoint::affine(i1.clone(), i1.clone()),
        )?;
        println!("  diagonal points collinear: {diag}");
    }
    Ok(())
}
