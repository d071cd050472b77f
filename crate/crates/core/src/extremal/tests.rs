use super::*;
use crate::fractional::{int, rat};
use crate::graph::{make_complete, make_cycle};
use crate::minor::{circumference, max_disjoint_cycles};

fn spec(s: &str) -> GraphFamilySpec {
    s.parse().unwrap()
}

#[test]
fn forests_are_the_triangle_free_minors() {
    for n in 1..=7 {
        let rec = ex_minor(n, &spec("C3")).unwrap();
        assert_eq!(rec.ex_value, n - 1, "n = {n}");
        validate_record(&rec).unwrap();
    }
}

#[test]
fn k4_minor_free_maximum() {
    let rec = ex_minor(5, &spec("K4")).unwrap();
    assert_eq!(rec.ex_value, 7);
    validate_record(&rec).unwrap();
}

#[test]
fn two_triangles_at_six() {
    let bar = make_bar_k(3, 6).unwrap();
    assert_eq!(bar.e(), 12);
    let rec = ex_minor(6, &spec("2C3")).unwrap();
    assert!(rec.ex_value >= 12);
    // more than 3(n-2) = 12 edges force two disjoint cycles
    assert_eq!(rec.ex_value, 12);
    validate_record(&rec).unwrap();
}

#[test]
fn monotone_in_n_and_in_the_pattern() {
    let mut prev = 0;
    for n in 1..=6 {
        let one = ex_minor(n, &spec("K4")).unwrap().ex_value;
        assert!(one >= prev);
        prev = one;
        let single = ex_minor(n, &spec("C3")).unwrap().ex_value;
        let double = ex_minor(n, &spec("2C3")).unwrap().ex_value;
        assert!(double >= single);
    }
}

#[test]
fn budget_and_degenerate_patterns() {
    assert!(matches!(ex_minor(8, &spec("C3")), Err(GraphError::BudgetExceeded { n: 8, budget: 7 })));
    assert!(ex_minor_graph(4, &Graph::empty(2)).is_err());
    // a pattern larger than the host is never a minor
    assert_eq!(ex_minor(4, &spec("K5")).unwrap().ex_value, 6);
}

#[test]
fn tampered_records_fail_validation() {
    let mut rec = ex_minor(5, &spec("C4")).unwrap();
    validate_record(&rec).unwrap();
    let (u, v) = rec.witness.edges().next().unwrap();
    rec.witness = rec.witness.without_edge(u, v);
    assert!(validate_record(&rec).is_err());
    let mut rec = ex_minor(5, &spec("C4")).unwrap();
    rec.h_key = "5:0".into();
    assert!(validate_record(&rec).is_err());
}

#[test]
fn lower_bound_construction() {
    let c3 = make_cycle(3).unwrap();
    let rep = density_supremum_lower_bound(&c3, 8).unwrap();
    assert_eq!((rep.tau, rep.t), (2, 1));
    for row in &rep.rows {
        assert_eq!(row.density, rat(row.n as i64 - 1, row.n as i64));
    }
    assert!(rep.ok());

    let two = disjoint_union(&[c3.clone(), c3.clone()]);
    let rep = density_supremum_lower_bound(&two, 12).unwrap();
    assert_eq!((rep.tau, rep.t), (4, 3));
    assert_eq!((rep.value.clone(), rep.at_n), (rat(5, 2), 12));
    assert!(rep.rows.iter().all(|r| r.minor_free == Some(true)));
    assert!(rep.ok());

    // 2K4: bound approaches k(t-1)-1 = 5 from below
    let k4 = make_complete(4).unwrap();
    let rep = density_supremum_lower_bound(&disjoint_union(&[k4.clone(), k4]), 14).unwrap();
    assert_eq!(rep.t, 5);
    assert!(rep.value < int(5) && rep.value > rat(7, 2));
    assert!(rep.ok());
}

#[test]
fn known_constants() {
    assert_eq!(known_extremal_constant(&make_cycle(5).unwrap()), Some(int(2)));
    assert_eq!(known_extremal_constant(&make_cycle(3).unwrap()), Some(int(1)));
    assert_eq!(known_extremal_constant(&make_complete(5).unwrap()), Some(int(3)));
    assert_eq!(known_extremal_constant(&make_complete(10).unwrap()), None);
    assert_eq!(known_extremal_constant(&Graph::empty(3)), None);
}

#[test]
fn union_bounds_for_small_cycle_unions() {
    let c3 = make_cycle(3).unwrap();
    let rep = verify_union_bound(&[c3.clone(), c3.clone()], 6).unwrap();
    assert_eq!((rep.upper_bound.clone(), rep.lower_bound.clone(), rep.tight), (int(3), int(3), true));
    assert!(rep.ok());
    let rep = verify_union_bound(&[c3, make_cycle(4).unwrap()], 6).unwrap();
    assert_eq!(rep.upper_bound, rat(7, 2));
    assert!(!rep.tight);
    assert!(rep.ok());
    assert!(verify_union_bound(&[Graph::empty(3)], 4).is_err());
}

#[test]
fn long_cycle_example_holds_for_every_class() {
    // n = 6, k = 4: more than 7.5 edges
    for g in classes_with_edges(6, 8).unwrap() {
        assert!(circumference(&g).unwrap() >= 4);
    }
    // n = 6, k = 3: more than n - 1 edges
    for g in classes_with_edges(6, 6).unwrap() {
        assert!(circumference(&g).unwrap() >= 3);
    }
}

#[test]
fn disjoint_cycle_thresholds() {
    assert_eq!(dirac_justesen_threshold(7, 2), int(15));
    assert_eq!(dirac_justesen_threshold(6, 2), int(12));
    for g in classes_with_edges(7, 16).unwrap() {
        assert!(max_disjoint_cycles(&g).unwrap() >= 2);
    }
    // at the threshold itself the statement is sharp
    assert!(classes_with_edges(6, 12).unwrap().iter().any(|g| max_disjoint_cycles(g).unwrap() < 2));
}

#[test]
fn random_checks_are_clean_and_reproducible() {
    let a = check_erdos_gallai(8, 60, 1).unwrap();
    assert!(a.ok());
    let b = check_erdos_gallai(8, 60, 1).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let d = check_dirac_justesen(9, 20, 2).unwrap();
    assert!(d.ok());
    assert!(check_dirac_justesen(5, 1, 0).is_err());
    assert!(check_erdos_gallai(15, 1, 0).is_err());
}

#[test]
fn probe_with_zero_weights() {
    let rep = probe_partition_conjecture(&ProbeConfig::new(6, int(0), int(0))).unwrap();
    assert!(rep.ok());
    assert!(rep.graphs_checked > 0);
}

#[test]
fn probe_reports_counterexamples_from_a_doctored_predicate() {
    // with s = t = 1 the first graphs appear at n = 7 (K7) and n = 8 (24 edges)
    let cfg = ProbeConfig::new(8, int(1), int(1));
    let honest = probe_partition_conjecture(&cfg).unwrap();
    assert!(honest.ok());
    assert_eq!(honest.rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![7, 8]);
    // demand more edges in the first part than any part can have
    let rep = probe_with(&cfg, |g| spanning_split(g, &int(100), &int(1)).is_some()).unwrap();
    assert!(!rep.ok());
    assert_eq!(rep.counterexamples.len(), rep.graphs_checked);
    let rep = probe_with(&cfg, |g| g.e() != 21).unwrap();
    assert_eq!(rep.counterexamples, vec![make_complete(7).unwrap()]);
}

#[test]
fn sampled_rows_above_the_exhaustive_range() {
    let mut cfg = ProbeConfig::new(9, int(1), int(0));
    cfg.samples = 20;
    cfg.seed = 4;
    let rep = probe_partition_conjecture(&cfg).unwrap();
    assert!(rep.ok());
    let last = rep.rows.last().unwrap();
    assert_eq!((last.n, last.edges, last.exhaustive, last.graphs), (9, 18, false, 20));
    assert!(probe_partition_conjecture(&ProbeConfig::new(11, int(1), int(0))).is_err());
}

#[test]
fn spanning_split_examples() {
    let k5 = make_complete(5).unwrap();
    let (a, b) = spanning_split(&k5, &int(1), &int(0)).unwrap();
    assert_eq!(a.len() + b.len(), 5);
    assert!(spanning_split(&make_cycle(4).unwrap(), &int(2), &int(0)).is_none());
}

#[test]
fn ledger_appends_then_verifies() {
    let path = std::env::temp_dir().join(format!("ledger-test-{}.jsonl", std::process::id()));
    let _ = std::fs::remove_file(&path);
    let ledger = Ledger::new(&path);
    let rec = ex_minor(5, &spec("C3")).unwrap();
    assert_eq!(ledger.record(&rec).unwrap(), LedgerOutcome::Appended);
    assert_eq!(ledger.record(&rec).unwrap(), LedgerOutcome::Verified);
    // C3 and K3 share the canonical key
    let alias = ex_minor(5, &spec("K3")).unwrap();
    assert_eq!(ledger.record(&alias).unwrap(), LedgerOutcome::Verified);
    let mut wrong = rec.clone();
    wrong.ex_value += 1;
    assert!(matches!(ledger.record(&wrong), Err(LedgerError::Mismatch { stored: 4, computed: 5, .. })));
    assert_eq!(ledger.load().unwrap().len(), 1);
    std::fs::write(&path, "not json\n").unwrap();
    assert!(matches!(ledger.load(), Err(LedgerError::Parse { line: 1, .. })));
    std::fs::remove_file(&path).unwrap();
}
