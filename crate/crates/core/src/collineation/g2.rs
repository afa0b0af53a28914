//! The triple condition `B(s*x) = C(s)*A(x)` together with the constraints
//! that tie it to the idempotent `e`.

use serde::{Deserialize, Serialize};

use crate::algebra::{mul, random_vec8, trial_rng, AlgebraKind, LinMap8, Vec8};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G2Witness {
    /// Which condition failed.
    pub condition: String,
    pub trial: Option<u64>,
    pub x: Vec8,
    pub s: Vec8,
    pub lhs: Vec8,
    pub rhs: Vec8,
}

fn ok(x: &Vec8, y: &Vec8) -> Vec8 {
    mul(AlgebraKind::Okubo, x, y)
}

/// Evaluates the conditions at one `(x, s)`, returning the first violation.
pub fn g2_check_at(a: &LinMap8, b: &LinMap8, c: &LinMap8, x: &Vec8, s: &Vec8) -> Option<G2Witness> {
    let e = Vec8::e();
    let w = |condition: &str, lhs: Vec8, rhs: Vec8| {
        (lhs != rhs).then(|| G2Witness {
            condition: condition.into(),
            trial: None,
            x: x.clone(),
            s: s.clone(),
            lhs,
            rhs,
        })
    };
    w(
        "B(s*x) = C(s)*A(x)",
        b.apply(&ok(s, x)),
        ok(&c.apply(s), &a.apply(x)),
    )
    .or_else(|| w("B(e*x) = e*A(x)", b.apply(&ok(&e, x)), ok(&e, &a.apply(x))))
    .or_else(|| w("B(x*e) = C(x)*e", b.apply(&ok(x, &e)), ok(&c.apply(x), &e)))
}

/// The first violation found, checking the fixed-point constraints on `e`
/// and then `trials` random pairs.
pub fn g2_triple_witness(
    a: &LinMap8,
    b: &LinMap8,
    c: &LinMap8,
    trials: u64,
    seed: u64,
) -> Option<G2Witness> {
    let e = Vec8::e();
    for (name, m) in [("A(e) = e", a), ("B(e) = e", b), ("C(e) = e", c)] {
        let img = m.apply(&e);
        if img != e {
            return Some(G2Witness {
                condition: name.into(),
                trial: None,
                x: e.clone(),
                s: e.clone(),
                lhs: img,
                rhs: e,
            });
        }
    }
    (0..trials).find_map(|trial| {
        let mut rng = trial_rng(seed, trial);
        let x = random_vec8(&mut rng);
        let s = random_vec8(&mut rng);
        g2_check_at(a, b, c, &x, &s).map(|mut w| {
            w.trial = Some(trial);
            w
        })
    })
}

/// True when every condition holds on all samples.
pub fn g2_triple_check(a: &LinMap8, b: &LinMap8, c: &LinMap8, trials: u64, seed: u64) -> bool {
    g2_triple_witness(a, b, c, trials, seed).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::trivolution;

    #[test]
    fn spec_examples() {
        let id = LinMap8::identity();
        let tau = LinMap8::from_linear(trivolution);
        assert!(g2_triple_check(&id, &id, &id, 50, 1));
        assert!(g2_triple_check(&tau, &tau, &tau, 50, 1));
        let w = g2_triple_witness(&tau, &id, &id, 50, 1).expect("witness");
        assert_eq!(w.condition, "B(s*x) = C(s)*A(x)");
        assert!(g2_check_at(&tau, &id, &id, &w.x, &w.s).is_some());
    }
}
