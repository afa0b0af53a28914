//! Random Desargues configurations.
//!
//! The builder follows the classical eight-step construction: pick an axis
//! `ℓ` and a center `p`, a triangle vertex `a` with its partner `a′` on `ap`,
//! then `b′` and `c′` are forced by sending `ab` and `ac` through their
//! meets with `ℓ`. The theorem asks whether `cb` and `c′b′` also meet on `ℓ`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::trial_rng;
use crate::error::{Error, Result};
use crate::plane::sample::{
    random_line, random_point_off, random_point_on, random_point_on_avoiding,
};
use crate::plane::{PjLine, PjPoint, Plane};

/// Retry cap for each random draw.
pub const MAX_RETRIES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesarguesConfig {
    pub plane: Plane,
    pub center: PjPoint,
    pub axis: PjLine,
    pub a: PjPoint,
    pub b: PjPoint,
    pub c: PjPoint,
    pub a2: PjPoint,
    pub b2: PjPoint,
    pub c2: PjPoint,
    /// `cb ∩ c′b′`
    pub l1: PjPoint,
    /// `ac ∩ ℓ`
    pub l2: PjPoint,
    /// `ab ∩ ℓ`
    pub l3: PjPoint,
}

fn degenerate(e: Error) -> Error {
    match e {
        Error::EqualPoints | Error::EqualLines => Error::DegenerateConfig(e.to_string()),
        other => other,
    }
}

impl DesarguesConfig {
    /// The intersection `cb ∩ c′b′`, recomputed.
    pub fn compute_l1(&self) -> Result<PjPoint> {
        let pl = self.plane;
        let cb = pl.join(&self.c, &self.b).map_err(degenerate)?;
        let cb2 = pl.join(&self.c2, &self.b2).map_err(degenerate)?;
        pl.meet(&cb, &cb2).map_err(degenerate)
    }

    /// Every incidence the construction imposes, excluding the conclusion
    /// `l1 ∈ ℓ` and the position of the center.
    pub fn construction_holds(&self) -> Result<bool> {
        let pl = self.plane;
        let j = |x: &PjPoint, y: &PjPoint| pl.join(x, y).map_err(degenerate);
        let checks = [
            pl.incident(&self.a2, &j(&self.a, &self.center)?),
            pl.incident(&self.b2, &j(&self.b, &self.center)?),
            pl.incident(&self.c2, &j(&self.c, &self.center)?),
            pl.incident(&self.l3, &self.axis),
            pl.incident(&self.l3, &j(&self.a, &self.b)?),
            pl.incident(&self.l3, &j(&self.a2, &self.b2)?),
            pl.incident(&self.l2, &self.axis),
            pl.incident(&self.l2, &j(&self.a, &self.c)?),
            pl.incident(&self.l2, &j(&self.a2, &self.c2)?),
            self.compute_l1()? == self.l1,
        ];
        Ok(checks.iter().all(|&b| b))
    }

    pub fn center_on_axis(&self) -> bool {
        self.plane.incident(&self.center, &self.axis)
    }

    /// Whether the conclusion `l1 ∈ ℓ` holds.
    pub fn conclusion_holds(&self) -> bool {
        self.plane.incident(&self.l1, &self.axis)
    }
}

fn attempt<T>(mut f: impl FnMut() -> Result<Option<T>>) -> Result<T> {
    for _ in 0..MAX_RETRIES {
        if let Some(v) = f()? {
            return Ok(v);
        }
    }
    Err(Error::DegenerateAfterRetries(MAX_RETRIES))
}

fn build_once<R: Rng>(
    plane: Plane,
    center_on_axis: bool,
    rng: &mut R,
) -> Result<Option<DesarguesConfig>> {
    let axis = random_line(rng);
    let center = if center_on_axis {
        random_point_on(plane, &axis, rng)
    } else {
        random_point_off(plane, &axis, rng)
    };
    let a = attempt(|| {
        let a = random_point_off(plane, &axis, rng);
        Ok((a != center).then_some(a))
    })?;
    let ap = plane.join(&a, &center)?;
    let a2 = attempt(|| {
        let q = random_point_on_avoiding(plane, &ap, &[&a, &center], rng);
        Ok((!plane.incident(&q, &axis)).then_some(q))
    })?;
    let b = attempt(|| {
        let b = random_point_off(plane, &axis, rng);
        Ok((b != center && !plane.incident(&b, &ap)).then_some(b))
    })?;
    let bp = plane.join(&b, &center)?;
    let l3 = plane.meet(&plane.join(&a, &b)?, &axis)?;
    let Ok(b2) = plane.join(&l3, &a2).and_then(|m| plane.meet(&m, &bp)) else {
        return Ok(None);
    };
    let c = attempt(|| {
        let c = random_point_off(plane, &axis, rng);
        Ok((c != center && !plane.incident(&c, &ap) && !plane.incident(&c, &bp)).then_some(c))
    })?;
    let cp = plane.join(&c, &center)?;
    let l2 = plane.meet(&plane.join(&a, &c)?, &axis)?;
    let Ok(c2) = plane.join(&l2, &a2).and_then(|m| plane.meet(&m, &cp)) else {
        return Ok(None);
    };
    let mut cfg = DesarguesConfig {
        plane,
        center,
        axis,
        a,
        b,
        c,
        a2,
        b2,
        c2,
        l1: PjPoint::Infinity,
        l2,
        l3,
    };
    match cfg.compute_l1() {
        Ok(l1) => {
            cfg.l1 = l1;
            Ok(Some(cfg))
        }
        Err(_) => Ok(None),
    }
}

/// A configuration with the center on the axis, drawn from `rng`.
pub fn build_config<R: Rng>(
    plane: Plane,
    center_on_axis: bool,
    rng: &mut R,
) -> Result<DesarguesConfig> {
    attempt(|| build_once(plane, center_on_axis, rng))
}

/// A little-Desargues configuration (center on the axis) for `seed`.
pub fn little_desargues_build(plane: Plane, seed: u64) -> Result<DesarguesConfig> {
    build_config(plane, true, &mut trial_rng(seed, 0))
}

/// Recomputes `l1` and checks that it lies on the axis.
pub fn little_desargues_verify(plane: Plane, cfg: &DesarguesConfig) -> Result<bool> {
    let cfg = DesarguesConfig {
        plane,
        ..cfg.clone()
    };
    let l1 = cfg.compute_l1()?;
    Ok(plane.incident(&l1, &cfg.axis))
}

/// Searches configurations with the center off the axis for one where the
/// conclusion fails.
pub fn desargues_falsify(plane: Plane, seed: u64, max_trials: u64) -> Option<DesarguesConfig> {
    (0..max_trials).find_map(|trial| {
        let cfg = build_config(plane, false, &mut trial_rng(seed, trial)).ok()?;
        (!cfg.conclusion_holds()).then_some(cfg)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraKind;

    #[test]
    fn seed_one_builds_a_valid_config() {
        for kind in AlgebraKind::ALL {
            let plane = Plane::new(kind);
            let cfg = little_desargues_build(plane, 1).unwrap();
            assert!(cfg.center_on_axis());
            assert!(cfg.construction_holds().unwrap());
            assert!(little_desargues_verify(plane, &cfg).unwrap());
        }
    }

    #[test]
    fn little_desargues_on_a_few_seeds() {
        for kind in AlgebraKind::ALL {
            let plane = Plane::new(kind);
            for seed in 0..5 {
                let cfg = little_desargues_build(plane, seed).unwrap();
                assert!(
                    little_desargues_verify(plane, &cfg).unwrap(),
                    "{kind} seed {seed}"
                );
            }
        }
    }

    #[test]
    fn full_desargues_fails() {
        for kind in AlgebraKind::ALL {
            let plane = Plane::new(kind);
            let w = desargues_falsify(plane, 0, 50).expect("witness");
            assert!(!w.center_on_axis());
            assert!(w.construction_holds().unwrap());
            assert!(!w.conclusion_holds());
        }
    }
}
