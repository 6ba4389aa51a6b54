use std::time::Instant;

use gcg::exec::Schedule;
use gcg::localrule::{
    builtin_rule, check_local_rule, identity, inflate, sprout, turtle, CheckMode, LocalRule,
    RuleClause,
};
use gcg::pathlang::grid;
use gcg::{Atom, Gcg, NamedGraph, Signature, Suffix, VertexName};

const LIMIT: usize = 5_000_000;

#[test]
fn identity_is_local_exhaustively() {
    let sig = Signature::unlabeled("ab");
    let start = Instant::now();
    let report = check_local_rule(
        &identity(&sig, 0),
        &CheckMode::Exhaustive { limit: LIMIT },
        Schedule::Parallel,
    )
    .unwrap();
    assert!(report.passes(), "{report}");
    assert!(report.exhaustive);
    assert_eq!(report.disks_checked.len(), 3);
    eprintln!("{report}took {:?}", start.elapsed());
}

#[test]
fn sprout_and_turtle_are_local_exhaustively() {
    let sig = Signature::unlabeled("ab");
    for rule in [sprout(&sig), turtle(&sig).unwrap()] {
        let report = check_local_rule(
            &rule,
            &CheckMode::Exhaustive { limit: LIMIT },
            Schedule::Parallel,
        )
        .unwrap();
        assert!(report.passes(), "{report}");
    }
}

#[test]
fn inflate_is_local_on_grid_fixtures() {
    let fixtures: Vec<Gcg> = [
        (3, 3, false),
        (4, 3, false),
        (3, 3, true),
        (4, 5, true),
        (1, 4, false),
    ]
    .into_iter()
    .map(|(n, m, w)| grid(n, m, w).unwrap())
    .collect();
    let sig = fixtures[0].signature().clone();
    let report = check_local_rule(
        &inflate(&sig).unwrap(),
        &CheckMode::Fixtures(fixtures),
        Schedule::Parallel,
    )
    .unwrap();
    assert!(report.passes(), "{report}");
    assert!(!report.exhaustive);
}

#[test]
fn inflate_radius_zero_is_exhaustively_consistent_with_neighbours() {
    // the radius-1 and radius-2 disk families over four ports are too large to
    // enumerate, so the check aborts with a partial report
    let sig = Signature::unlabeled("abcd");
    let report = check_local_rule(
        &inflate(&sig).unwrap(),
        &CheckMode::Exhaustive { limit: 20_000 },
        Schedule::Parallel,
    )
    .unwrap();
    assert!(report.dynamics_ok && report.bounded_ok);
    assert!(report.aborted.is_some());
    assert!(!report.passes());
}

/// Identity everywhere except on `disk`, where `patch` is returned.
fn sabotaged(sig: &std::sync::Arc<Signature>, disk: Gcg, patch: NamedGraph) -> LocalRule {
    let id = identity(sig, 0);
    LocalRule::new("sabotaged", sig.clone(), 0, 1, 1, move |d: &Gcg| {
        if *d == disk {
            Ok(patch.clone())
        } else {
            id.eval_raw(d)
        }
    })
}

#[test]
fn sabotaged_identity_fails_nontrivial_consistency() {
    let sig = Signature::unlabeled("ab");
    let disk = middle_of_path(&sig);
    // the pointer is named {(ε, 1)} instead of {(ε, ε)}
    let mut patch = NamedGraph::new(sig.clone());
    patch
        .add_vertex(
            VertexName::single(Atom::word(Default::default(), Suffix(1))),
            None,
        )
        .unwrap();
    let bad = sabotaged(&sig, disk.clone(), patch);
    let report = check_local_rule(
        &bad,
        &CheckMode::Exhaustive { limit: LIMIT },
        Schedule::Parallel,
    )
    .unwrap();
    assert!(!report.passes());
    assert!(!report.nontrivial_consistency_ok);
    let ce = report
        .counterexamples
        .iter()
        .find(|c| c.clause == RuleClause::NontrivialConsistency)
        .unwrap();
    assert_eq!(ce.detail, "patches do not overlap");
    let u = ce.disk.index_of(&ce.offset).unwrap();
    assert!(ce.disk.disk(0) == disk || ce.disk.disk_at(u, 0).0 == disk);
    assert!(ce.reverify(&bad));
    assert!(!ce.reverify(&identity(&sig, 0)));
}

#[test]
fn renamed_neighbours_are_inconsistent() {
    let sig = Signature::unlabeled("ab");
    let disk = middle_of_path(&sig);
    let mut patch = NamedGraph::new(sig.clone());
    patch
        .add_vertex(VertexName::single(Atom::origin()), None)
        .unwrap();
    for v in 1..disk.len() {
        patch
            .add_vertex(
                VertexName::single(Atom::word(disk.word(v).clone(), Suffix(1))),
                None,
            )
            .unwrap();
    }
    for e in disk.edges() {
        patch.add_edge(e.a, e.b, None).unwrap();
    }
    let bad = sabotaged(&sig, disk, patch);
    let report = check_local_rule(
        &bad,
        &CheckMode::Exhaustive { limit: LIMIT },
        Schedule::Parallel,
    )
    .unwrap();
    assert!(report.dynamics_ok && report.bounded_ok);
    assert!(!report.nontrivial_consistency_ok, "{report}");
    for ce in &report.counterexamples {
        assert!(ce.reverify(&bad));
    }
}

/// The radius-0 disk of the middle of a path: ε with neighbours on both ports.
fn middle_of_path(sig: &std::sync::Arc<Signature>) -> Gcg {
    let mut g = NamedGraph::new(sig.clone());
    for i in 0..3 {
        g.add_vertex(VertexName::id(format!("v{i}")), None).unwrap();
    }
    g.add_edge((0, gcg::Port(0)), (1, gcg::Port(1)), None)
        .unwrap();
    g.add_edge((1, gcg::Port(0)), (2, gcg::Port(1)), None)
        .unwrap();
    Gcg::from_pointed(&gcg::PointedGraph::from_index(g, 1)).unwrap()
}

#[test]
fn schedules_give_identical_reports() {
    let sig = Signature::unlabeled("ab");
    let rule = builtin_rule("sprout", &sig).unwrap();
    let mode = CheckMode::Exhaustive { limit: LIMIT };
    let a = check_local_rule(&rule, &mode, Schedule::Sequential).unwrap();
    let b = check_local_rule(&rule, &mode, Schedule::Parallel).unwrap();
    assert_eq!(a, b);
}
