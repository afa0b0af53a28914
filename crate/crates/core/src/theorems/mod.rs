//! Theorem-level checks: Desargues configurations, the planar ternary ring,
//! collinearity in the Okubo and octonion planes, and Moufang failures.
//!
//! Expected-failure checks produce a [`Witness`] that can be replayed from
//! its serialized form with [`replay`].

pub mod desargues;
pub mod ptr;

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algebra::{
    check_identity, random_vec8, trial_rng, AlgebraKind, IdentityName, LinMap8, Vec8,
};
use crate::collineation::{g2::g2_check_at, G2Witness, SwapWitness};
use crate::error::Result;
use crate::plane::{PjLine, PjPoint, Plane};
use crate::report::{Failure, TheoremReport, Verdict};

pub use desargues::{
    build_config, desargues_falsify, little_desargues_build, little_desargues_verify,
    DesarguesConfig,
};
pub use ptr::{ptr_nonlinearity_witness, ptr_product, ptr_sum, ptr_theta, PtrWitness};

/// A serialized counterexample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// `name` fails in `kind` at `(x, y, z)`.
    Identity {
        kind: AlgebraKind,
        identity: IdentityName,
        x: Vec8,
        y: Vec8,
        z: Vec8,
    },
    /// A configuration with the center off the axis where `l1 ∉ ℓ`.
    Desargues {
        config: Box<DesarguesConfig>,
    },
    Ptr(PtrWitness),
    /// `(y, y)` is not on the line through `(0,0)` and `(x, x)`.
    NonCollinear {
        kind: AlgebraKind,
        x: Vec8,
        y: Vec8,
    },
    Swap(SwapWitness),
    G2 {
        a: Box<LinMap8>,
        b: Box<LinMap8>,
        c: Box<LinMap8>,
        failure: G2Witness,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Identity {
                kind,
                identity,
                x,
                y,
                z,
            } => write!(f, "{identity} fails in {kind} at x = {x}, y = {y}, z = {z}"),
            Witness::Desargues { config } => write!(
                f,
                "{}: center {} off axis {}, l1 = {}",
                config.plane.kind, config.center, config.axis, config.l1
            ),
            Witness::Ptr(w) => write!(
                f,
                "theta({}, {}, 0) = {} but s.x = {}",
                w.s, w.x, w.theta, w.product
            ),
            Witness::NonCollinear { kind, x, y } => {
                write!(f, "{kind}: (0,0), ({x},{x}), ({y},{y}) not collinear")
            }
            Witness::Swap(w) => write!(
                f,
                "{}, {}, {} on {} have non-collinear swaps",
                w.points[0], w.points[1], w.points[2], w.line
            ),
            Witness::G2 { failure, .. } => write!(
                f,
                "{} fails at x = {}, s = {}",
                failure.condition, failure.x, failure.s
            ),
        }
    }
}

/// Re-checks a witness from its data alone. `Ok(true)` means it still
/// demonstrates the failure it claims.
pub fn replay(w: &Witness) -> Result<bool> {
    Ok(match w {
        Witness::Identity {
            kind,
            identity,
            x,
            y,
            z,
        } => !check_identity(*kind, *identity, x, y, z),
        Witness::Desargues { config } => {
            !config.center_on_axis() && config.construction_holds()? && !config.conclusion_holds()
        }
        Witness::Ptr(p) => p.verify(),
        Witness::NonCollinear { kind, x, y } => !on_diagonal_line(Plane::new(*kind), x, y)?,
        Witness::Swap(s) => s.verify()?,
        Witness::G2 { a, b, c, failure } => {
            if failure.condition.ends_with("(e) = e") {
                let m = match &failure.condition[..1] {
                    "A" => a,
                    "B" => b,
                    _ => c,
                };
                m.apply(&Vec8::e()) != Vec8::e()
            } else {
                g2_check_at(a, b, c, &failure.x, &failure.s).is_some()
            }
        }
    })
}

fn on_diagonal_line(plane: Plane, x: &Vec8, y: &Vec8) -> Result<bool> {
    let l = plane.join(&PjPoint::origin(), &PjPoint::affine(x.clone(), x.clone()))?;
    Ok(plane.incident(&PjPoint::affine(y.clone(), y.clone()), &l))
}

/// The diagonal points `(x, x)`: collinear with the origin on `[e, 0]` in
/// the octonion plane; the Okubo and para planes get a witness that they are
/// not.
pub fn collinearity_witness(plane: Plane, trials: u64, seed: u64) -> TheoremReport {
    let start = Instant::now();
    let mut report = TheoremReport::new("collinearity", plane.kind, seed, trials);
    if plane.kind == AlgebraKind::Octonion {
        let diag = PjLine::finite(Vec8::e(), Vec8::zero());
        for trial in 0..trials {
            let mut rng = trial_rng(seed, trial);
            let (x, y) = (random_vec8(&mut rng), random_vec8(&mut rng));
            for v in [&x, &y] {
                let p = PjPoint::affine(v.clone(), v.clone());
                if !plane.incident(&p, &diag) {
                    report.fail(Failure::new(
                        json!({"trial": trial, "x": v}),
                        "on [e,0]",
                        "off",
                    ));
                }
            }
        }
    } else {
        report.trials = 0;
        'scan: for xi in 0..8 {
            for yi in 0..8 {
                if xi == yi {
                    continue;
                }
                let (x, y) = (Vec8::basis(xi), Vec8::basis(yi));
                if !on_diagonal_line(plane, &x, &y).unwrap_or(true) {
                    report.witnesses.push(Witness::NonCollinear {
                        kind: plane.kind,
                        x,
                        y,
                    });
                    break 'scan;
                }
            }
        }
        if report.witnesses.is_empty() {
            report.fail_msg("no non-collinear diagonal triple among basis pairs");
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// One violating triple per non-alternative law for the Okubo and para
/// algebras (basis scan first, then random triples); for the octonions a
/// check that no Moufang or alternative law fails on random triples.
pub fn moufang_failure_witness(kind: AlgebraKind, trials: u64, seed: u64) -> TheoremReport {
    let start = Instant::now();
    let mut report = TheoremReport::new("moufang_failure", kind, seed, trials);
    if kind == AlgebraKind::Octonion {
        for trial in 0..trials {
            let mut rng = trial_rng(seed, trial);
            let (x, y, z) = (
                random_vec8(&mut rng),
                random_vec8(&mut rng),
                random_vec8(&mut rng),
            );
            for name in IdentityName::NON_ALTERNATIVE {
                if !check_identity(kind, name, &x, &y, &z) {
                    report.fail(Failure::new(
                        json!({"trial": trial, "identity": name, "x": x, "y": y, "z": z}),
                        "holds",
                        "violated",
                    ));
                }
            }
        }
        report.cap_failures(10);
    } else {
        for name in IdentityName::NON_ALTERNATIVE {
            match find_violation(kind, name, trials, seed) {
                Some(w) => report.witnesses.push(w),
                None => report.fail(Failure::new(
                    json!({"identity": name}),
                    "a violating triple",
                    "none found",
                )),
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

fn find_violation(
    kind: AlgebraKind,
    name: IdentityName,
    trials: u64,
    seed: u64,
) -> Option<Witness> {
    let w = |x: Vec8, y: Vec8, z: Vec8| Witness::Identity {
        kind,
        identity: name,
        x,
        y,
        z,
    };
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let (x, y, z) = (Vec8::basis(i), Vec8::basis(j), Vec8::basis(k));
                if !check_identity(kind, name, &x, &y, &z) {
                    return Some(w(x, y, z));
                }
            }
        }
    }
    (0..trials).find_map(|trial| {
        let mut rng = trial_rng(seed, trial);
        let (x, y, z) = (
            random_vec8(&mut rng),
            random_vec8(&mut rng),
            random_vec8(&mut rng),
        );
        (!check_identity(kind, name, &x, &y, &z)).then(|| w(x, y, z))
    })
}

/// Sets the verdict of an expected-failure check: pass iff a witness was
/// found and every witness replays.
pub fn settle_witnesses(report: &mut TheoremReport) {
    for w in report.witnesses.clone() {
        if !replay(&w).unwrap_or(false) {
            report.fail(Failure::new(&w, "replayable witness", "does not replay"));
        }
    }
    if report.verdict != Verdict::Fail && report.witnesses.is_empty() {
        report.fail_msg("no witness found");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn okubo_diagonal_witness_is_e_i1() {
        let r = collinearity_witness(Plane::new(AlgebraKind::Okubo), 0, 0);
        assert!(r.passed());
        assert_eq!(
            r.witnesses[0],
            Witness::NonCollinear {
                kind: AlgebraKind::Okubo,
                x: Vec8::e(),
                y: Vec8::basis(1)
            }
        );
    }

    #[test]
    fn octonion_diagonal_is_a_line() {
        let r = collinearity_witness(Plane::new(AlgebraKind::Octonion), 20, 3);
        assert!(r.passed() && r.failures.is_empty());
    }

    #[test]
    fn moufang_witnesses_replay_through_json() {
        for kind in [AlgebraKind::Okubo, AlgebraKind::ParaOctonion] {
            let r = moufang_failure_witness(kind, 50, 0);
            assert!(r.passed(), "{r}");
            assert_eq!(r.witnesses.len(), 5);
            let text = serde_json::to_string(&r).unwrap();
            let back: TheoremReport = serde_json::from_str(&text).unwrap();
            for w in &back.witnesses {
                assert!(replay(w).unwrap(), "{w}");
            }
        }
        let r = moufang_failure_witness(AlgebraKind::Octonion, 20, 0);
        assert!(r.failures.is_empty());
    }
}
