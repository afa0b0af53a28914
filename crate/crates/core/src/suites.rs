//! The verification suites behind the CLI commands. Each returns a list of
//! reports in a fixed order; the outcome depends only on the arguments.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    self, check_identity, conjugate_oct, gram, identity_sides, mul, norm, okubo_matrix_mul,
    random_nonzero, random_vec8, solve_left, solve_right, structure_table,
    table2_crosscheck_detail, to_matrix, trial_rng, trivolution, AlgebraKind, IdentityName,
    LinMap8, Vec8, TABLE2_LABELS,
};
use crate::collineation::{
    g2_triple_witness, is_isometry, preserves_incidence, swap_non_collineation_witness,
    transported_reflection_closed_form, Collineation,
};
use crate::plane::sample::{
    random_affine, random_line, random_point, random_point_off, random_point_on,
};
use crate::plane::{
    beta, is_veronese, line_to_veronese, point_to_veronese, PjLine, PjPoint, Plane,
};
use crate::report::{Failure, TheoremReport, Verdict};
use crate::scalar::QSqrt3;
use crate::theorems::{
    self, build_config, collinearity_witness, desargues_falsify, moufang_failure_witness,
    ptr_nonlinearity_witness, ptr_product, ptr_theta, settle_witnesses, Witness,
};

/// Number of Desargues trials searched for a full-Desargues counterexample.
pub const DESARGUES_FALSIFY_BUDGET: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    PlaneAxioms,
    Veronese,
    Collineations,
    Isometry,
    Desargues,
    Ptr,
    G2,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Identities,
        Suite::PlaneAxioms,
        Suite::Veronese,
        Suite::Collineations,
        Suite::Isometry,
        Suite::Desargues,
        Suite::Ptr,
        Suite::G2,
    ];

    pub fn run(self, kinds: &[AlgebraKind], seed: u64, trials: u64) -> Vec<TheoremReport> {
        match self {
            Suite::Identities => identities(kinds, seed, trials),
            Suite::PlaneAxioms => plane_axioms(kinds, seed, trials),
            Suite::Veronese => veronese(kinds, seed, trials),
            Suite::Collineations => collineations(kinds, seed, trials),
            Suite::Isometry => isometry(seed, trials),
            Suite::Desargues => desargues(kinds, seed, trials),
            Suite::Ptr => ptr(seed, trials),
            Suite::G2 => g2(seed, trials),
        }
    }
}

/// Runs a closure per trial and records a failure whenever it returns one.
fn trial_loop(
    name: &str,
    kind: impl std::fmt::Display,
    seed: u64,
    trials: u64,
    mut body: impl FnMut(u64) -> Option<Failure>,
) -> TheoremReport {
    let start = Instant::now();
    let mut r = TheoremReport::new(name, kind, seed, trials);
    for t in 0..trials {
        if let Some(f) = body(t) {
            r.fail(f);
        }
    }
    r.cap_failures(10);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r
}

fn single(
    name: &str,
    kind: impl std::fmt::Display,
    seed: u64,
    body: impl FnOnce(&mut TheoremReport),
) -> TheoremReport {
    let start = Instant::now();
    let mut r = TheoremReport::new(name, kind, seed, 1);
    body(&mut r);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r
}

fn expect<T: Serialize>(ok: bool, inputs: Value, expected: T, got: T) -> Option<Failure> {
    (!ok).then(|| Failure::new(inputs, expected, got))
}

// ---------------------------------------------------------------- algebra

/// The trivolution exactly as printed in the reference table, for
/// comparison with the derived one.
pub fn printed_tau() -> LinMap8 {
    let h = QSqrt3::from_ratio(-1, 2);
    let r = QSqrt3::from_parts(0, 1, 1, 2);
    let mut images: Vec<Vec8> = (0..8).map(Vec8::basis).collect();
    let mut set = |k: usize, own: usize, other: usize, sign: i64| {
        let mut v = Vec8::zero();
        v[own] = h.clone();
        v[other] = r.scale(&num_rational::BigRational::from_integer(sign.into()));
        images[k] = v;
    };
    set(2, 2, 5, 1);
    set(5, 5, 2, -1);
    set(4, 4, 6, 1);
    set(6, 6, 4, -1);
    LinMap8::from_fn(|i, j| images[j][i].clone())
}

pub fn identities(kinds: &[AlgebraKind], seed: u64, trials: u64) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for &kind in kinds {
        out.push(trial_loop("composition", kind, seed, trials, |t| {
            let mut rng = trial_rng(seed, t);
            let (x, y) = (random_vec8(&mut rng), random_vec8(&mut rng));
            let (l, r) = (norm(&mul(kind, &x, &y)), &norm(&x) * &norm(&y));
            expect(l == r, json!({"x": x, "y": y}), r.clone(), l)
        }));

        let mut sym = trial_loop(
            "symmetric_composition",
            kind,
            seed,
            if kind.is_symmetric() { trials } else { 0 },
            |t| {
                let mut rng = trial_rng(seed, t);
                let (x, y) = (random_vec8(&mut rng), random_vec8(&mut rng));
                let z = Vec8::zero();
                let (l, r) = identity_sides(kind, IdentityName::SymmetricComposition, &x, &y, &z);
                expect(l == r, json!({"x": x, "y": y}), r, l)
            },
        );
        if !kind.is_symmetric() {
            let i1 = Vec8::basis(1);
            sym.witnesses.push(Witness::Identity {
                kind,
                identity: IdentityName::SymmetricComposition,
                x: i1.clone(),
                y: i1,
                z: Vec8::zero(),
            });
            settle_witnesses(&mut sym);
        }
        out.push(sym);

        for name in [IdentityName::Flexible, IdentityName::NormAssociative] {
            if !name.holds_in(kind) {
                continue;
            }
            out.push(trial_loop(
                &format!("identity[{name}]"),
                kind,
                seed,
                trials,
                |t| {
                    let mut rng = trial_rng(seed, t);
                    let (x, y, z) = (
                        random_vec8(&mut rng),
                        random_vec8(&mut rng),
                        random_vec8(&mut rng),
                    );
                    let ok = check_identity(kind, name, &x, &y, &z);
                    expect(ok, json!({"x": x, "y": y, "z": z}), "holds", "violated")
                },
            ));
        }

        if kind == AlgebraKind::Octonion {
            out.push(trial_loop("moufang", kind, seed, trials, |t| {
                let mut rng = trial_rng(seed, t);
                let (x, y, z) = (
                    random_vec8(&mut rng),
                    random_vec8(&mut rng),
                    random_vec8(&mut rng),
                );
                let bad: Vec<IdentityName> = IdentityName::NON_ALTERNATIVE
                    .into_iter()
                    .filter(|&n| !check_identity(kind, n, &x, &y, &z))
                    .collect();
                expect(bad.is_empty(), json!({"x": x, "y": y, "z": z}), vec![], bad)
            }));
        } else {
            let mut r = moufang_failure_witness(kind, trials, seed);
            settle_witnesses(&mut r);
            out.push(r);
        }

        out.push(trial_loop("division", kind, seed, trials, |t| {
            let mut rng = trial_rng(seed, t);
            let (a, b) = (random_nonzero(&mut rng), random_vec8(&mut rng));
            let l = solve_left(kind, &a, &b);
            let r = solve_right(kind, &a, &b);
            let ok = mul(kind, &a, &l) == b && mul(kind, &r, &a) == b;
            expect(
                ok,
                json!({"a": a, "b": b}),
                "a∘x = b and x∘a = b",
                "mismatch",
            )
        }));
    }

    out.push(trial_loop("norm_positive", "all", seed, trials, |t| {
        let x = random_nonzero(&mut trial_rng(seed, t));
        let n = norm(&x);
        let via = algebra::norm_via_matrix(&x);
        expect(
            n.is_positive() && n == via,
            json!({"x": x}),
            "n(x) > 0, both paths equal",
            "",
        )
    }));

    out.push(single("structure_table_vs_matrix", "okubo", seed, |r| {
        let t = structure_table(AlgebraKind::Okubo);
        let b = algebra::basis_matrices();
        for i in 0..8 {
            for j in 0..8 {
                let direct = okubo_matrix_mul(&b[i], &b[j]);
                let via = to_matrix(&t.basis_product(i, j));
                if direct.as_ref() != Ok(&via) {
                    r.fail(Failure::new(
                        json!({"i": i, "j": j}),
                        "table = matrix oracle",
                        "mismatch",
                    ));
                }
            }
        }
        r.trials = 64;
    }));

    out.push(single("gram_positive_definite", "all", seed, |r| {
        let g = gram();
        let minors = g.leading_minors();
        if !g.is_positive_definite() {
            r.fail(Failure::new(json!({}), "all leading minors > 0", &minors));
        }
        r.note(format!(
            "leading minors: {}",
            minors
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }));

    out.push(single("basis_orthonormality", "all", seed, |r| {
        r.verdict = Verdict::Info;
        let g = gram();
        if g.is_orthonormal() {
            r.note("basis is orthonormal");
        } else {
            for (i, j) in g.off_diagonal() {
                r.note(format!(
                    "<{}, {}> = {} (basis not orthogonal)",
                    Vec8::basis_name(i),
                    Vec8::basis_name(j),
                    g.g[i][j]
                ));
            }
        }
    }));

    out.push(trial_loop("table2_crosscheck", "all", seed, trials, |t| {
        let mut rng = trial_rng(seed, t);
        let (x, y) = (random_vec8(&mut rng), random_vec8(&mut rng));
        let detail = table2_crosscheck_detail(&x, &y);
        let bad: Vec<&str> = TABLE2_LABELS
            .iter()
            .zip(detail)
            .filter(|(_, ok)| !ok)
            .map(|(l, _)| *l)
            .collect();
        expect(bad.is_empty(), json!({"x": x, "y": y}), vec![], bad)
    }));

    let tau = LinMap8::from_linear(trivolution);
    out.push(single("tau_order_three", "all", seed, |r| {
        if !tau.pow(3).is_identity() {
            r.fail(Failure::new(
                json!({}),
                "tau^3 = id",
                format!("{:?}", tau.pow(3)),
            ));
        }
        if tau.is_identity() {
            r.fail_msg("tau is the identity");
        }
    }));

    out.push(trial_loop(
        "tau_automorphism",
        "okubo+octonion",
        seed,
        trials,
        |t| {
            let mut rng = trial_rng(seed, t);
            let (x, y) = (random_vec8(&mut rng), random_vec8(&mut rng));
            let bad: Vec<AlgebraKind> = [AlgebraKind::Okubo, AlgebraKind::Octonion]
                .into_iter()
                .filter(|&k| trivolution(&mul(k, &x, &y)) != mul(k, &tau.apply(&x), &tau.apply(&y)))
                .collect();
            expect(bad.is_empty(), json!({"x": x, "y": y}), vec![], bad)
        },
    ));

    out.push(single("tau_printed_table", "all", seed, |r| {
        r.verdict = Verdict::Info;
        let printed = printed_tau();
        let mut differs = Vec::new();
        for k in 0..8 {
            let (d, p) = (tau.apply(&Vec8::basis(k)), printed.apply(&Vec8::basis(k)));
            if d != p {
                differs.push(Vec8::basis_name(k));
                r.note(format!(
                    "tau({}): derived {d}, printed {p}",
                    Vec8::basis_name(k)
                ));
            }
        }
        if differs.is_empty() {
            r.note("printed table matches the derived trivolution");
        }
        let fixed: Vec<&str> = (0..8)
            .filter(|&k| tau.apply(&Vec8::basis(k)) == Vec8::basis(k))
            .map(Vec8::basis_name)
            .collect();
        r.note(format!("derived tau fixes {}", fixed.join(", ")));
        let e = Vec8::e();
        let (i2, i4) = (Vec8::basis(2), Vec8::basis(4));
        let auto = [(&e, &i2), (&i2, &i4), (&i4, &Vec8::basis(6))]
            .iter()
            .all(|(x, y)| {
                printed.apply(&mul(AlgebraKind::Octonion, x, y))
                    == mul(AlgebraKind::Octonion, &printed.apply(x), &printed.apply(y))
            });
        r.note(format!(
            "printed map is {}an automorphism of the derived octonion product on basis samples",
            if auto { "" } else { "not " }
        ));
    }));

    out
}

// ---------------------------------------------------------------- plane

pub fn plane_axioms(kinds: &[AlgebraKind], seed: u64, trials: u64) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for &kind in kinds {
        let plane = Plane::new(kind);
        out.push(trial_loop("join", kind, seed, trials, |t| {
            let mut rng = trial_rng(seed, t);
            let p = random_point(&mut rng);
            let mut q = random_point(&mut rng);
            while q == p {
                q = random_point(&mut rng);
            }
            let l = match plane.join(&p, &q) {
                Ok(l) => l,
                Err(e) => {
                    return Some(Failure::new(
                        json!({"p": p, "q": q}),
                        "a line",
                        e.to_string(),
                    ))
                }
            };
            let r = random_point_on(plane, &l, &mut rng);
            // uniqueness: any third point of l, joined to p or q, gives l back
            let unique = plane.join(&q, &p).as_ref() == Ok(&l)
                && (r == p || plane.join(&p, &r).as_ref() == Ok(&l))
                && (r == q || plane.join(&q, &r).as_ref() == Ok(&l));
            let ok = plane.incident(&p, &l) && plane.incident(&q, &l) && unique;
            expect(ok, json!({"p": p, "q": q}), "incident and unique", "failed")
        }));

        out.push(trial_loop("meet", kind, seed, trials, |t| {
            let mut rng = trial_rng(seed, t);
            let l = random_line(&mut rng);
            let mut m = random_line(&mut rng);
            while m == l {
                m = random_line(&mut rng);
            }
            let p = match plane.meet(&l, &m) {
                Ok(p) => p,
                Err(e) => {
                    return Some(Failure::new(
                        json!({"l": l, "m": m}),
                        "a point",
                        e.to_string(),
                    ))
                }
            };
            let ok = plane.incident(&p, &l)
                && plane.incident(&p, &m)
                && plane.meet(&m, &l).as_ref() == Ok(&p)
                && plane
                    .join(&p, &random_point_off(plane, &l, &mut rng))
                    .is_ok();
            expect(ok, json!({"l": l, "m": m}), "incident to both", "failed")
        }));

        out.push(trial_loop("parallel", kind, seed, trials, |t| {
            let mut rng = trial_rng(seed, t);
            let l = loop {
                let l = random_line(&mut rng);
                if l != PjLine::Infinity {
                    break l;
                }
            };
            let p = loop {
                let p = random_affine(&mut rng);
                if !plane.incident(&p, &l) {
                    break p;
                }
            };
            let par = match plane.parallel(&l, &p) {
                Ok(par) => par,
                Err(e) => {
                    return Some(Failure::new(
                        json!({"l": l, "p": p}),
                        "a parallel",
                        e.to_string(),
                    ))
                }
            };
            let disjoint = plane
                .meet(&l, &par)
                .map(|q| !q.is_affine())
                .unwrap_or(false);
            // any other line through p meets l in an affine point
            let other = plane.join(&p, &random_point_on(plane, &l, &mut rng)).ok();
            let unique = other.is_none_or(|m| {
                m == par || plane.meet(&l, &m).map(|q| q.is_affine()).unwrap_or(false)
            });
            let samples_off = (0..3).all(|_| {
                let q = random_point_on(plane, &par, &mut rng);
                !q.is_affine() || !plane.incident(&q, &l)
            });
            let ok = plane.incident(&p, &par) && disjoint && unique && samples_off;
            expect(
                ok,
                json!({"l": l, "p": p}),
                "unique disjoint parallel",
                "failed",
            )
        }));

        out.push(single("quadrangle", kind, seed, |r| {
            let e = Vec8::e();
            let quad = [
                PjPoint::origin(),
                PjPoint::affine(e.clone(), e.clone()),
                PjPoint::slope(Vec8::zero()),
                PjPoint::Infinity,
            ];
            let mut lines = Vec::new();
            for a in 0..4 {
                for b in a + 1..4 {
                    let l = plane.join(&quad[a], &quad[b]).expect("distinct");
                    for (c, pt) in quad.iter().enumerate() {
                        if c != a && c != b && plane.incident(pt, &l) {
                            r.fail(Failure::new(
                                json!({"line": l, "point": pt}),
                                "no third quadrangle point",
                                "incident",
                            ));
                        }
                    }
                    lines.push(l.to_string());
                }
            }
            r.trials = 6;
            r.note(format!("joining lines: {}", lines.join("; ")));
        }));

        let mut col = collinearity_witness(plane, trials, seed);
        if kind != AlgebraKind::Octonion {
            settle_witnesses(&mut col);
        }
        out.push(col);
    }
    out
}

pub fn veronese(kinds: &[AlgebraKind], seed: u64, trials: u64) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for &kind in kinds {
        let plane = Plane::new(kind);
        out.push(trial_loop("veronese_conditions", kind, seed, trials, |t| {
            let mut rng = trial_rng(seed, t);
            let p = random_point(&mut rng);
            let l = random_line(&mut rng);
            let (pv, lv) = (point_to_veronese(plane, &p), line_to_veronese(plane, &l));
            let ok = is_veronese(plane, &pv) && is_veronese(plane, &lv);
            expect(
                ok,
                json!({"point": p, "line": l}),
                "both Veronese",
                "violated",
            )
        }));
        out.push(trial_loop("beta_incident", kind, seed, trials, |t| {
            let mut rng = trial_rng(seed, t);
            let l = random_line(&mut rng);
            let p = random_point_on(plane, &l, &mut rng);
            let b = beta(&point_to_veronese(plane, &p), &line_to_veronese(plane, &l));
            expect(
                b == QSqrt3::from_int(0),
                json!({"point": p, "line": l}),
                QSqrt3::from_int(0),
                b,
            )
        }));
        out.push(trial_loop("beta_non_incident", kind, seed, trials, |t| {
            let mut rng = trial_rng(seed, t);
            let l = random_line(&mut rng);
            let p = random_point_off(plane, &l, &mut rng);
            let b = beta(&point_to_veronese(plane, &p), &line_to_veronese(plane, &l));
            let nonzero = b != QSqrt3::from_int(0);
            expect(
                nonzero,
                json!({"point": p, "line": l}),
                "nonzero".to_string(),
                b.to_string(),
            )
        }));
    }
    out
}

// ---------------------------------------------------------------- collineations

pub fn collineations(kinds: &[AlgebraKind], seed: u64, trials: u64) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    let mut rng = trial_rng(seed, u64::MAX);
    for &kind in kinds {
        let (a, b) = (random_nonzero(&mut rng), random_nonzero(&mut rng));
        let mut maps = vec![
            Collineation::translation(kind, a.clone(), b),
            Collineation::shear(kind, a),
            Collineation::triality(kind),
        ];
        if kind == AlgebraKind::Octonion {
            maps.push(Collineation::OctReflection);
        }
        for c in &maps {
            out.push(preserves_incidence(c, trials, seed));
        }
        let tri = Collineation::triality(kind);
        let thrice = tri
            .compose(&tri)
            .and_then(|c| c.compose(&tri))
            .expect("same kind");
        out.push(trial_loop(
            "triality_order_three",
            kind,
            seed,
            trials,
            |t| {
                let mut rng = trial_rng(seed, t);
                let p = random_point(&mut rng);
                let l = random_line(&mut rng);
                let ok = thrice.map_point(&p) == p && thrice.map_line(&l) == l;
                expect(ok, json!({"point": p, "line": l}), "identity", "moved")
            },
        ));
    }
    if kinds.contains(&AlgebraKind::Okubo) {
        for c in [Collineation::Phi, Collineation::PPhi] {
            out.push(preserves_incidence(&c, trials, seed));
            let back = c.compose(&c.invert()).expect("kinds match");
            let fwd = c.invert().compose(&c).expect("kinds match");
            out.push(trial_loop(
                &format!("round_trip[{}]", c.label()),
                "okubo",
                seed,
                trials,
                |t| {
                    let mut rng = trial_rng(seed, t);
                    let p = random_point(&mut rng);
                    let l = random_line(&mut rng);
                    let ok = back.map_point(&p) == p
                        && back.map_line(&l) == l
                        && fwd.map_point(&p) == p
                        && fwd.map_line(&l) == l;
                    expect(ok, json!({"point": p, "line": l}), "identity", "moved")
                },
            ));
        }

        let mut swap = single("swap_not_collineation", "okubo", seed, |r| {
            if let Some(w) = swap_non_collineation_witness() {
                r.witnesses.push(Witness::Swap(w));
            }
        });
        settle_witnesses(&mut swap);
        out.push(swap);

        let composite = Collineation::Composite {
            parts: vec![
                Collineation::Phi,
                Collineation::OctReflection,
                Collineation::PhiInv,
            ],
        };
        out.push(trial_loop(
            "transported_reflection",
            "okubo",
            seed,
            trials,
            |t| {
                let p = random_affine(&mut trial_rng(seed, t));
                let closed = transported_reflection_closed_form(&p).expect("affine");
                let via = composite.map_point(&p);
                let twice = transported_reflection_closed_form(&closed).expect("affine");
                expect(
                    via == closed && twice == p,
                    json!({"point": p}),
                    closed.clone(),
                    via,
                )
            },
        ));
    }
    out
}

pub fn isometry(seed: u64, trials: u64) -> Vec<TheoremReport> {
    let mut rng = trial_rng(seed, u64::MAX);
    let (a, b) = (random_nonzero(&mut rng), random_nonzero(&mut rng));
    [
        Collineation::Phi,
        Collineation::PPhi,
        Collineation::PhiInv,
        Collineation::translation(AlgebraKind::Okubo, a, b),
    ]
    .iter()
    .map(|c| is_isometry(c, trials, seed))
    .collect()
}

// ---------------------------------------------------------------- theorems

pub fn desargues(kinds: &[AlgebraKind], seed: u64, trials: u64) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for &kind in kinds {
        let plane = Plane::new(kind);
        out.push(trial_loop("little_desargues", kind, seed, trials, |t| {
            let cfg = match build_config(plane, true, &mut trial_rng(seed, t)) {
                Ok(cfg) => cfg,
                Err(e) => {
                    return Some(Failure::new(
                        json!({"trial": t}),
                        "a configuration",
                        e.to_string(),
                    ))
                }
            };
            let construction = cfg.construction_holds().unwrap_or(false);
            let verified = theorems::little_desargues_verify(plane, &cfg).unwrap_or(false);
            expect(
                construction && verified && cfg.center_on_axis(),
                json!({"config": cfg}),
                "l1 on axis",
                "l1 off axis",
            )
        }));

        let start = Instant::now();
        let mut full = TheoremReport::new(
            "full_desargues_counterexample",
            kind,
            seed,
            DESARGUES_FALSIFY_BUDGET,
        );
        if let Some(cfg) = desargues_falsify(plane, seed, DESARGUES_FALSIFY_BUDGET) {
            full.witnesses.push(Witness::Desargues {
                config: Box::new(cfg),
            });
        }
        settle_witnesses(&mut full);
        full.elapsed_ms = start.elapsed().as_millis() as u64;
        out.push(full);
    }
    out
}

pub fn ptr(seed: u64, trials: u64) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    let mut w = single("ptr_nonlinearity", "okubo", seed, |r| {
        r.witnesses.push(Witness::Ptr(ptr_nonlinearity_witness()));
    });
    settle_witnesses(&mut w);
    out.push(w);

    out.push(trial_loop(
        "ptr_unit_slope_contrast",
        "okubo",
        seed,
        trials,
        |t| {
            let mut rng = trial_rng(seed, t);
            let (x, tt) = (random_vec8(&mut rng), random_vec8(&mut rng));
            let e = Vec8::e();
            let okubo = Plane::new(AlgebraKind::Okubo);
            let ok = ptr_product(&e, &x) == mul(AlgebraKind::Okubo, &e, &x)
                && mul(AlgebraKind::Octonion, &e, &x) == x
                && ptr_theta(&Vec8::zero(), &x, &tt) == tt
                && okubo.incident(
                    &PjPoint::affine(x.clone(), ptr_theta(&e, &x, &tt)),
                    &PjLine::finite(e, tt.clone()),
                );
            expect(
                ok,
                json!({"x": x, "t": tt}),
                "theta(e,x,0) = e*x, e.x = x",
                "mismatch",
            )
        },
    ));
    out
}

pub fn g2(seed: u64, trials: u64) -> Vec<TheoremReport> {
    let id = LinMap8::identity();
    let tau = LinMap8::from_linear(trivolution);
    let tau2 = LinMap8::from_linear(algebra::trivolution_sq);
    let mut out = Vec::new();
    for (name, a, b, c) in [
        ("g2[id,id,id]", &id, &id, &id),
        ("g2[tau,tau,tau]", &tau, &tau, &tau),
        ("g2[tau2,tau2,tau2]", &tau2, &tau2, &tau2),
    ] {
        let start = Instant::now();
        let mut r = TheoremReport::new(name, "okubo", seed, trials);
        if let Some(w) = g2_triple_witness(a, b, c, trials, seed) {
            r.fail(Failure::new(
                json!({"x": w.x, "s": w.s}),
                &w.condition,
                json!({"lhs": w.lhs, "rhs": w.rhs}),
            ));
        }
        r.elapsed_ms = start.elapsed().as_millis() as u64;
        out.push(r);
    }
    let start = Instant::now();
    let mut r = TheoremReport::new("g2[tau,id,id]_fails", "okubo", seed, trials);
    if let Some(w) = g2_triple_witness(&tau, &id, &id, trials, seed) {
        r.witnesses.push(Witness::G2 {
            a: Box::new(tau.clone()),
            b: Box::new(id.clone()),
            c: Box::new(id.clone()),
            failure: w,
        });
    }
    settle_witnesses(&mut r);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    out.push(r);
    out
}

/// The three structure tables and the Gram matrix, as exact strings.
pub fn dump_tables() -> Value {
    let tables: Vec<Value> = AlgebraKind::ALL
        .iter()
        .map(|&k| json!({"kind": k, "coeff": structure_table(k).coeff}))
        .collect();
    json!({
        "basis": (0..8).map(Vec8::basis_name).collect::<Vec<_>>(),
        "tables": tables,
        "gram": gram().g,
        "conjugation": LinMap8::from_linear(conjugate_oct).m,
        "tau": LinMap8::from_linear(trivolution).m,
    })
}

/// Runs the selected suites in the fixed command order.
pub fn run_suites(
    suites: &[Suite],
    kinds: &[AlgebraKind],
    seed: u64,
    trials: u64,
) -> Vec<TheoremReport> {
    suites
        .iter()
        .flat_map(|s| s.run(kinds, seed, trials))
        .collect()
}
