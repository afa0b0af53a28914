//! Veronese coordinates of points and lines and the incidence form β.

use cayley_plane::algebra::trial_rng;
use cayley_plane::plane::sample::{random_line, random_point_off, random_point_on};
use cayley_plane::plane::{
    beta, is_veronese, line_to_veronese, point_to_veronese, veronese_to_point, Plane,
};
use cayley_plane::AlgebraKind;

fn main() -> cayley_plane::Result<()> {
    let mut rng = trial_rng(7, 0);
    for kind in AlgebraKind::ALL {
        let plane = Plane::new(kind);
        let l = random_line(&mut rng);
        let on = random_point_on(plane, &l, &mut rng);
        let off = random_point_off(plane, &l, &mut rng);

        let (lv, pv, qv) = (
            line_to_veronese(plane, &l),
            point_to_veronese(plane, &on),
            point_to_veronese(plane, &off),
        );
        println!("{kind}");
        println!("  line {l}");
        println!(
            "  Veronese conditions hold: {}",
            is_veronese(plane, &lv) && is_veronese(plane, &pv)
        );
        println!("  beta(on)  = {}", beta(&pv, &lv));
        println!("  beta(off) = {}", beta(&qv, &lv));

        // Any nonzero multiple of a Veronese vector names the same point.
        let scaled = pv.scale(&"2 - sqrt3".parse()?);
        println!(
            "  recovered from a multiple: {}",
            veronese_to_point(plane, &scaled)? == on
        );
    }
    Ok(())
}
