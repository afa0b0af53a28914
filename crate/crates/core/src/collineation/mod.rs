//! Closed-form collineations and the isomorphisms between the three planes.
//!
//! Endo-maps of one plane: translations, shears, triality and (octonion
//! plane only) the reflection `ρ`. Cross-plane maps: `Φ` from the Okubo to
//! the octonion plane, `pΦ` from the Okubo to the para-octonion plane, and
//! their inverses. Maps compose into chains with checked kinds.
//!
//! ```
//! use cayley_plane::collineation::Collineation;
//! use cayley_plane::plane::PjPoint;
//! use cayley_plane::AlgebraKind;
//!
//! let tri = Collineation::Triality { kind: AlgebraKind::Okubo };
//! assert_eq!(tri.map_point(&PjPoint::Infinity), PjPoint::origin());
//! ```

mod checks;
pub mod g2;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    conjugate_oct, inverse, norm, trivolution, trivolution_sq, AlgebraKind, Vec8,
};
use crate::error::{Error, Result};
use crate::plane::{PjLine, PjPoint, Plane};

pub use checks::{
    is_isometry, okubo_swap, preserves_incidence, swap_non_collineation_witness,
    transported_reflection, transported_reflection_closed_form, SwapWitness,
};
pub use g2::{g2_triple_check, g2_triple_witness, G2Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Collineation {
    Identity {
        kind: AlgebraKind,
    },
    /// `(x, y) → (x+a, y+b)`
    Translation {
        kind: AlgebraKind,
        a: Vec8,
        b: Vec8,
    },
    /// `(x, y) → (x, y + a∘x)`
    Shear {
        kind: AlgebraKind,
        a: Vec8,
    },
    /// The cyclic permutation of Veronese coordinates, in chart form.
    Triality {
        kind: AlgebraKind,
    },
    /// Okubo → octonion.
    Phi,
    /// Octonion → Okubo.
    PhiInv,
    /// Okubo → para-octonion.
    PPhi,
    /// Para-octonion → Okubo.
    PPhiInv,
    /// `(x, y) → (y, x)` on the octonion plane.
    OctReflection,
    /// Apply `parts` left to right.
    Composite {
        parts: Vec<Collineation>,
    },
}

fn scaled_inv(x: &Vec8) -> Vec8 {
    x.scale(&norm(x).inv().expect("nonzero"))
}

fn bar(x: &Vec8) -> Vec8 {
    conjugate_oct(x)
}

impl Collineation {
    pub fn translation(kind: AlgebraKind, a: Vec8, b: Vec8) -> Self {
        Collineation::Translation { kind, a, b }
    }

    pub fn shear(kind: AlgebraKind, a: Vec8) -> Self {
        Collineation::Shear { kind, a }
    }

    pub fn triality(kind: AlgebraKind) -> Self {
        Collineation::Triality { kind }
    }

    pub fn source(&self) -> AlgebraKind {
        use Collineation::*;
        match self {
            Identity { kind }
            | Translation { kind, .. }
            | Shear { kind, .. }
            | Triality { kind } => *kind,
            Phi | PPhi => AlgebraKind::Okubo,
            PhiInv | OctReflection => AlgebraKind::Octonion,
            PPhiInv => AlgebraKind::ParaOctonion,
            Composite { parts } => parts.first().map_or(AlgebraKind::Okubo, Self::source),
        }
    }

    pub fn target(&self) -> AlgebraKind {
        use Collineation::*;
        match self {
            Phi | OctReflection => AlgebraKind::Octonion,
            PPhi => AlgebraKind::ParaOctonion,
            PhiInv | PPhiInv => AlgebraKind::Okubo,
            Composite { parts } => parts.last().map_or(AlgebraKind::Okubo, Self::target),
            other => other.source(),
        }
    }

    /// Image of a point of the source plane. No kind check.
    pub fn map_point(&self, p: &PjPoint) -> PjPoint {
        use Collineation::*;
        match self {
            Identity { .. } => p.clone(),
            Translation { a, b, .. } => match p {
                PjPoint::Affine { x, y } => PjPoint::affine(x + a, y + b),
                other => other.clone(),
            },
            Shear { kind, a } => match p {
                PjPoint::Affine { x, y } => {
                    let y2 = Plane::new(*kind).eval(a, x, y);
                    PjPoint::affine(x.clone(), y2)
                }
                PjPoint::Slope { s } => PjPoint::slope(s + a),
                PjPoint::Infinity => PjPoint::Infinity,
            },
            Triality { kind } => triality_point(Plane::new(*kind), p),
            Phi => chart_point(p, |x| trivolution_sq(&bar(x)), |s| trivolution(&bar(s))),
            PhiInv => chart_point(p, |x| trivolution(&bar(x)), |s| trivolution_sq(&bar(s))),
            PPhi => chart_point(p, trivolution_sq, trivolution),
            PPhiInv => chart_point(p, trivolution, trivolution_sq),
            OctReflection => match p {
                PjPoint::Affine { x, y } => PjPoint::affine(y.clone(), x.clone()),
                PjPoint::Slope { s } if s.is_zero() => PjPoint::Infinity,
                PjPoint::Slope { s } => PjPoint::slope(inverse(s).expect("nonzero")),
                PjPoint::Infinity => PjPoint::slope(Vec8::zero()),
            },
            Composite { parts } => parts.iter().fold(p.clone(), |q, c| c.map_point(&q)),
        }
    }

    /// Image of a line of the source plane. No kind check.
    pub fn map_line(&self, l: &PjLine) -> PjLine {
        use Collineation::*;
        match self {
            Identity { .. } => l.clone(),
            Translation { kind, a, b } => match l {
                PjLine::Finite { s, t } => {
                    let sa = Plane::new(*kind).mul(s, a);
                    PjLine::finite(s.clone(), &(t - &sa) + b)
                }
                PjLine::Vertical { c } => PjLine::vertical(c + a),
                PjLine::Infinity => PjLine::Infinity,
            },
            Shear { a, .. } => match l {
                PjLine::Finite { s, t } => PjLine::finite(s + a, t.clone()),
                other => other.clone(),
            },
            Triality { kind } => triality_line(Plane::new(*kind), l),
            Phi => chart_line(l, |s| trivolution(&bar(s)), |c| trivolution_sq(&bar(c))),
            PhiInv => chart_line(l, |s| trivolution_sq(&bar(s)), |c| trivolution(&bar(c))),
            PPhi => chart_line(l, trivolution, trivolution_sq),
            PPhiInv => chart_line(l, trivolution_sq, trivolution),
            OctReflection => match l {
                PjLine::Finite { s, t } if s.is_zero() => PjLine::vertical(t.clone()),
                PjLine::Finite { s, t } => {
                    let si = inverse(s).expect("nonzero");
                    let t2 = -Plane::new(AlgebraKind::Octonion).mul(&si, t);
                    PjLine::finite(si, t2)
                }
                PjLine::Vertical { c } => PjLine::finite(Vec8::zero(), c.clone()),
                PjLine::Infinity => PjLine::Infinity,
            },
            Composite { parts } => parts.iter().fold(l.clone(), |m, c| c.map_line(&m)),
        }
    }

    /// Image of a point, checking that `plane` is the source plane.
    pub fn apply_point(&self, plane: Plane, p: &PjPoint) -> Result<PjPoint> {
        self.check_source(plane)?;
        Ok(self.map_point(p))
    }

    pub fn apply_line(&self, plane: Plane, l: &PjLine) -> Result<PjLine> {
        self.check_source(plane)?;
        Ok(self.map_line(l))
    }

    fn check_source(&self, plane: Plane) -> Result<()> {
        if plane.kind != self.source() {
            return Err(Error::KindMismatch {
                expected: self.source(),
                got: plane.kind,
            });
        }
        Ok(())
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &Collineation) -> Result<Collineation> {
        if self.target() != next.source() {
            return Err(Error::KindMismatch {
                expected: self.target(),
                got: next.source(),
            });
        }
        let mut parts = Vec::new();
        for c in [self, next] {
            match c {
                Collineation::Composite { parts: inner } => parts.extend(inner.iter().cloned()),
                other => parts.push(other.clone()),
            }
        }
        Ok(Collineation::Composite { parts })
    }

    pub fn invert(&self) -> Collineation {
        use Collineation::*;
        match self {
            Identity { kind } => Identity { kind: *kind },
            Translation { kind, a, b } => Translation {
                kind: *kind,
                a: -a,
                b: -b,
            },
            Shear { kind, a } => Shear { kind: *kind, a: -a },
            Triality { kind } => Composite {
                parts: vec![Triality { kind: *kind }, Triality { kind: *kind }],
            },
            Phi => PhiInv,
            PhiInv => Phi,
            PPhi => PPhiInv,
            PPhiInv => PPhi,
            OctReflection => OctReflection,
            Composite { parts } => Composite {
                parts: parts.iter().rev().map(Collineation::invert).collect(),
            },
        }
    }

    pub fn source_plane(&self) -> Plane {
        Plane::new(self.source())
    }

    pub fn target_plane(&self) -> Plane {
        Plane::new(self.target())
    }

    pub fn label(&self) -> String {
        use Collineation::*;
        match self {
            Identity { kind } => format!("identity({kind})"),
            Translation { kind, .. } => format!("translation({kind})"),
            Shear { kind, .. } => format!("shear({kind})"),
            Triality { kind } => format!("triality({kind})"),
            Phi => "phi".into(),
            PhiInv => "phi_inv".into(),
            PPhi => "pphi".into(),
            PPhiInv => "pphi_inv".into(),
            OctReflection => "rho".into(),
            Composite { parts } => {
                let names: Vec<String> = parts.iter().map(Collineation::label).collect();
                names.join(" ; ")
            }
        }
    }
}

/// Maps that act by `(x, y) → (f(x), y)`, `(s) → (g(s))`, fixing `(∞)`.
fn chart_point(p: &PjPoint, f: impl Fn(&Vec8) -> Vec8, g: impl Fn(&Vec8) -> Vec8) -> PjPoint {
    match p {
        PjPoint::Affine { x, y } => PjPoint::affine(f(x), y.clone()),
        PjPoint::Slope { s } => PjPoint::slope(g(s)),
        PjPoint::Infinity => PjPoint::Infinity,
    }
}

/// The matching line action `[s, t] → [g(s), t]`, `[c] → [f(c)]`.
fn chart_line(l: &PjLine, g: impl Fn(&Vec8) -> Vec8, f: impl Fn(&Vec8) -> Vec8) -> PjLine {
    match l {
        PjLine::Finite { s, t } => PjLine::finite(g(s), t.clone()),
        PjLine::Vertical { c } => PjLine::vertical(f(c)),
        PjLine::Infinity => PjLine::Infinity,
    }
}

/// `u⁻¹` in the sense the triality display needs: `u/n(u)` for the two
/// symmetric algebras, `ū/n(u)` for the octonions.
fn tri_inv(plane: Plane, u: &Vec8) -> Vec8 {
    if plane.kind == AlgebraKind::Octonion {
        inverse(u).expect("nonzero")
    } else {
        scaled_inv(u)
    }
}

fn triality_point(plane: Plane, p: &PjPoint) -> PjPoint {
    match p {
        PjPoint::Affine { x, y } if y.is_zero() => PjPoint::slope(x.clone()),
        PjPoint::Affine { x, y } => {
            let yi = tri_inv(plane, y);
            let y2 = match plane.kind {
                AlgebraKind::Octonion => plane.mul(x, &yi),
                _ => plane.mul(x, y).scale(&norm(y).inv().expect("nonzero")),
            };
            PjPoint::affine(yi, y2)
        }
        PjPoint::Slope { s } if s.is_zero() => PjPoint::Infinity,
        PjPoint::Slope { s } => PjPoint::affine(Vec8::zero(), tri_inv(plane, s)),
        PjPoint::Infinity => PjPoint::origin(),
    }
}

fn triality_line(plane: Plane, l: &PjLine) -> PjLine {
    match l {
        PjLine::Finite { s, t } if s.is_zero() && t.is_zero() => PjLine::Infinity,
        PjLine::Finite { s, t } if s.is_zero() => PjLine::vertical(tri_inv(plane, t)),
        PjLine::Finite { s, t } => {
            let si = tri_inv(plane, s);
            let s2 = match plane.kind {
                AlgebraKind::Octonion => -plane.mul(&si, t),
                _ => -plane.mul(t, s).scale(&norm(s).inv().expect("nonzero")),
            };
            PjLine::finite(s2, si)
        }
        PjLine::Vertical { c } => PjLine::finite(c.clone(), Vec8::zero()),
        PjLine::Infinity => PjLine::vertical(Vec8::zero()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{random_vec8, trial_rng};
    use crate::plane::sample::{random_line, random_point, random_point_on};
    use crate::plane::{line_to_veronese, point_to_veronese, veronese_to_line, veronese_to_point};
    use proptest::prelude::*;

    fn all_endo(kind: AlgebraKind, a: &Vec8, b: &Vec8) -> Vec<Collineation> {
        let mut v = vec![
            Collineation::translation(kind, a.clone(), b.clone()),
            Collineation::shear(kind, a.clone()),
            Collineation::triality(kind),
        ];
        if kind == AlgebraKind::Octonion {
            v.push(Collineation::OctReflection);
        }
        v
    }

    #[test]
    fn fixed_examples() {
        let a = Vec8::basis(1);
        let b = Vec8::basis(2);
        let t = Collineation::translation(AlgebraKind::Okubo, a.clone(), b.clone());
        assert_eq!(t.map_point(&PjPoint::origin()), PjPoint::affine(a, b));
        for kind in AlgebraKind::ALL {
            assert_eq!(
                Collineation::triality(kind).map_point(&PjPoint::Infinity),
                PjPoint::origin()
            );
            let tri = Collineation::triality(kind);
            assert_eq!(
                tri.map_line(&PjLine::Infinity),
                PjLine::vertical(Vec8::zero())
            );
            assert_eq!(
                tri.map_line(&PjLine::vertical(Vec8::zero())),
                PjLine::finite(Vec8::zero(), Vec8::zero())
            );
            assert_eq!(
                tri.map_line(&PjLine::finite(Vec8::zero(), Vec8::zero())),
                PjLine::Infinity
            );
        }
        let s = Vec8::basis(3) + Vec8::basis(1);
        assert_eq!(
            Collineation::Phi.map_point(&PjPoint::slope(s.clone())),
            PjPoint::slope(trivolution(&conjugate_oct(&s)))
        );
    }

    #[test]
    fn kind_checks() {
        let okubo = Plane::new(AlgebraKind::Okubo);
        let oct = Plane::new(AlgebraKind::Octonion);
        assert!(Collineation::Phi
            .apply_point(oct, &PjPoint::Infinity)
            .is_err());
        assert!(Collineation::Phi
            .apply_point(okubo, &PjPoint::Infinity)
            .is_ok());
        assert!(Collineation::Phi.compose(&Collineation::PPhiInv).is_err());
        assert!(Collineation::Phi
            .compose(&Collineation::OctReflection)
            .is_ok());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn triality_is_the_veronese_rotation(seed in any::<u64>(), kind_ix in 0usize..3) {
            let plane = Plane::new(AlgebraKind::ALL[kind_ix]);
            let mut rng = trial_rng(seed, 0);
            let tri = Collineation::triality(plane.kind);
            let p = random_point(&mut rng);
            let via = veronese_to_point(plane, &point_to_veronese(plane, &p).cyclic_shift()).unwrap();
            prop_assert_eq!(tri.map_point(&p), via);
            let l = random_line(&mut rng);
            let via = veronese_to_line(plane, &line_to_veronese(plane, &l).cyclic_shift()).unwrap();
            prop_assert_eq!(tri.map_line(&l), via);
            let thrice = tri.compose(&tri).unwrap().compose(&tri).unwrap();
            prop_assert_eq!(thrice.map_point(&p), p.clone());
            prop_assert_eq!(thrice.map_line(&l), l.clone());
        }

        #[test]
        fn endo_maps_preserve_incidence(seed in any::<u64>(), kind_ix in 0usize..3) {
            let kind = AlgebraKind::ALL[kind_ix];
            let plane = Plane::new(kind);
            let mut rng = trial_rng(seed, 1);
            let (a, b) = (random_vec8(&mut rng), random_vec8(&mut rng));
            for c in all_endo(kind, &a, &b) {
                let l = random_line(&mut rng);
                let p = random_point_on(plane, &l, &mut rng);
                prop_assert!(plane.incident(&c.map_point(&p), &c.map_line(&l)), "{}", c.label());
                let inv = c.invert();
                prop_assert_eq!(inv.map_point(&c.map_point(&p)), p.clone());
                prop_assert_eq!(inv.map_line(&c.map_line(&l)), l.clone());
            }
        }

        #[test]
        fn cross_plane_maps(seed in any::<u64>()) {
            let mut rng = trial_rng(seed, 2);
            let okubo = Plane::new(AlgebraKind::Okubo);
            for c in [Collineation::Phi, Collineation::PPhi] {
                let l = random_line(&mut rng);
                let p = random_point_on(okubo, &l, &mut rng);
                let tgt = c.target_plane();
                prop_assert!(tgt.incident(&c.map_point(&p), &c.map_line(&l)));
                let back = c.compose(&c.invert()).unwrap();
                prop_assert_eq!(back.map_point(&p), p.clone());
                prop_assert_eq!(back.map_line(&l), l.clone());
            }
        }

        #[test]
        fn translation_and_shear_fix_their_axes(seed in any::<u64>()) {
            let mut rng = trial_rng(seed, 3);
            let (a, b, s, t) = (random_vec8(&mut rng), random_vec8(&mut rng), random_vec8(&mut rng), random_vec8(&mut rng));
            let kind = AlgebraKind::Okubo;
            let tr = Collineation::translation(kind, a.clone(), b);
            prop_assert_eq!(tr.map_point(&PjPoint::slope(s.clone())), PjPoint::slope(s.clone()));
            let sh = Collineation::shear(kind, a);
            let on_axis = PjPoint::affine(Vec8::zero(), t.clone());
            prop_assert_eq!(sh.map_point(&on_axis), on_axis);
            prop_assert_eq!(sh.map_line(&PjLine::vertical(s.clone())), PjLine::vertical(s));
        }
    }
}
