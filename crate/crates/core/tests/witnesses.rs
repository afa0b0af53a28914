//! Every witness the suites produce survives a JSON round trip and replays.

use cayley_plane::report::TheoremReport;
use cayley_plane::suites::{run_suites, Suite};
use cayley_plane::theorems::replay;
use cayley_plane::AlgebraKind;

#[test]
fn witnesses_replay_from_json() {
    let suites = [
        Suite::Identities,
        Suite::PlaneAxioms,
        Suite::Collineations,
        Suite::Ptr,
        Suite::G2,
    ];
    let reports = run_suites(&suites, &AlgebraKind::ALL, 0, 3);
    let text = serde_json::to_string(&reports).unwrap();
    let back: Vec<TheoremReport> = serde_json::from_str(&text).unwrap();
    let mut count = 0;
    for r in &back {
        for w in &r.witnesses {
            assert!(replay(w).unwrap(), "{}: {w}", r.name);
            count += 1;
        }
    }
    // symmetric composition, 2x5 Moufang, 2 collinearity, swap, ptr, g2
    assert_eq!(count, 16);
}
