//! Little Desargues holds in every plane; a configuration with the center
//! off the axis breaks the full theorem.

use cayley_plane::plane::Plane;
use cayley_plane::theorems::{desargues_falsify, little_desargues_build, little_desargues_verify};
use cayley_plane::AlgebraKind;

fn main() -> cayley_plane::Result<()> {
    for kind in AlgebraKind::ALL {
        let plane = Plane::new(kind);
        let mut ok = 0;
        for seed in 0..20 {
            let cfg = little_desargues_build(plane, seed)?;
            if little_desargues_verify(plane, &cfg)? {
                ok += 1;
            }
        }
        println!("{kind}: little Desargues held in {ok}/20 configurations");

        match desargues_falsify(plane, 0, 1000) {
            Some(cfg) => println!(
                "  full Desargues fails: center {} off axis {}, l1 on axis: {}",
                cfg.center,
                cfg.axis,
                cfg.conclusion_holds()
            ),
            None => println!("  no counterexample found"),
        }
    }
    Ok(())
}
