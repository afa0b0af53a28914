use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::Collineation;
use crate::algebra::{conjugate_oct, trial_rng, trivolution, trivolution_sq, AlgebraKind, Vec8};
use crate::error::{Error, Result};
use crate::plane::sample::{random_affine, random_line, random_point_off, random_point_on};
use crate::plane::{PjLine, PjPoint, Plane};
use crate::report::{Failure, TheoremReport};

/// Samples incident and non-incident pairs on both sides of `c` and checks
/// that incidence is preserved and reflected.
pub fn preserves_incidence(c: &Collineation, trials: u64, seed: u64) -> TheoremReport {
    let start = Instant::now();
    let mut report = TheoremReport::new(
        format!("preserves_incidence[{}]", c.label()),
        c.source(),
        seed,
        trials,
    );
    let inv = c.invert();
    let (src, tgt) = (c.source_plane(), c.target_plane());
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        for (map, from, to, dir) in [(c, src, tgt, "forward"), (&inv, tgt, src, "inverse")] {
            let l = random_line(&mut rng);
            let on = random_point_on(from, &l, &mut rng);
            let off = random_point_off(from, &l, &mut rng);
            let ml = map.map_line(&l);
            for (p, want) in [(on, true), (off, false)] {
                let mp = map.map_point(&p);
                if to.incident(&mp, &ml) != want {
                    report.fail(Failure::new(
                        json!({"trial": trial, "direction": dir, "point": p, "line": l}),
                        json!({"incident": want}),
                        json!({"point": mp, "line": ml}),
                    ));
                }
            }
        }
    }
    report.cap_failures(10);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Checks `d(c(p), c(q)) = d(p, q)` on random affine pairs. Images at
/// infinity count as failures.
pub fn is_isometry(c: &Collineation, trials: u64, seed: u64) -> TheoremReport {
    let start = Instant::now();
    let mut report =
        TheoremReport::new(format!("isometry[{}]", c.label()), c.source(), seed, trials);
    let (src, tgt) = (c.source_plane(), c.target_plane());
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let p = random_affine(&mut rng);
        let q = random_affine(&mut rng);
        let (mp, mq) = (c.map_point(&p), c.map_point(&q));
        let before = src.distance(&p, &q).expect("affine");
        match tgt.distance(&mp, &mq) {
            Ok(after) if after == before => {}
            other => report.fail(Failure::new(
                json!({"trial": trial, "p": p, "q": q}),
                before,
                other.map_err(|e| e.to_string()),
            )),
        }
    }
    report.cap_failures(10);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// `(x, y) → (y, x)` on affine points of any plane.
pub fn okubo_swap(p: &PjPoint) -> Result<PjPoint> {
    match p {
        PjPoint::Affine { x, y } => Ok(PjPoint::affine(y.clone(), x.clone())),
        _ => Err(Error::InfiniteElement),
    }
}

/// `(x, y) → (τ(ȳ), τ²(x̄))`.
pub fn transported_reflection_closed_form(p: &PjPoint) -> Result<PjPoint> {
    match p {
        PjPoint::Affine { x, y } => Ok(PjPoint::affine(
            trivolution(&conjugate_oct(y)),
            trivolution_sq(&conjugate_oct(x)),
        )),
        _ => Err(Error::InfiniteElement),
    }
}

/// The octonionic reflection transported to the Okubo plane, computed as
/// `Φ⁻¹ ∘ ρ ∘ Φ` and checked against the closed form.
pub fn transported_reflection(p: &PjPoint) -> Result<PjPoint> {
    let closed = transported_reflection_closed_form(p)?;
    let composite = Collineation::Composite {
        parts: vec![
            Collineation::Phi,
            Collineation::OctReflection,
            Collineation::PhiInv,
        ],
    };
    let via = composite.map_point(p);
    if via != closed {
        return Err(Error::RepresentationViolation(format!(
            "transported reflection: composite {via} vs closed form {closed}"
        )));
    }
    Ok(closed)
}

/// Three collinear points of the Okubo plane whose swapped images are not
/// collinear.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapWitness {
    pub line: PjLine,
    pub points: [PjPoint; 3],
}

impl SwapWitness {
    /// Re-checks the witness from its data.
    pub fn verify(&self) -> Result<bool> {
        let plane = Plane::new(AlgebraKind::Okubo);
        if !self.points.iter().all(|p| plane.incident(p, &self.line)) {
            return Ok(false);
        }
        let [a, b, c] = &self.points;
        if a == b || a == c || b == c {
            return Ok(false);
        }
        let (a2, b2, c2) = (okubo_swap(a)?, okubo_swap(b)?, okubo_swap(c)?);
        Ok(!plane.collinear(&a2, &b2, &c2)?)
    }
}

/// Scans lines `[s, 0]` with `s` a basis element for three points whose
/// images under the swap are not collinear.
pub fn swap_non_collineation_witness() -> Option<SwapWitness> {
    let plane = Plane::new(AlgebraKind::Okubo);
    for si in 0..8 {
        let s = Vec8::basis(si);
        let line = PjLine::finite(s.clone(), Vec8::zero());
        let a = PjPoint::origin();
        for xi in 0..8 {
            for zi in xi + 1..8 {
                let b = plane.some_point_on(&line, &Vec8::basis(xi));
                let c = plane.some_point_on(&line, &Vec8::basis(zi));
                let w = SwapWitness {
                    line: line.clone(),
                    points: [a.clone(), b, c],
                };
                if w.verify().unwrap_or(false) {
                    return Some(w);
                }
            }
        }
    }
    None
}
