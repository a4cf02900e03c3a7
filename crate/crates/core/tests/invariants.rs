//! Invariants checked over the enumeration stream.

mod common;

use std::collections::HashSet;

use common::*;
use stabilitylab_core::critical::{classify_defect, critical_reduce, is_alpha_critical, Classification};
use stabilitylab_core::enumeration::{
    atlas_read, atlas_write, enumerate_canonical, enumerate_filtered, verify_theorem, AtlasRecord, Filter,
    Predicate, TheoremId, VerifyParams,
};
use stabilitylab_core::generators::clique;
use stabilitylab_core::structure::{hall_matching, is_even_subdivision_k4, is_odd_cycle, HallCertificate};
use stabilitylab_core::{
    alpha, canonical_form, is_isomorphic, is_stable, is_tight_stable, parse_graph6, stability_bound, write_graph6,
    Error, Graph, VertexSet,
};

fn stream(n: usize) -> impl Iterator<Item = Graph> {
    enumerate_canonical(n).unwrap()
}

#[test]
fn no_duplicate_classes_up_to_nine() {
    for n in 1..=9 {
        let mut seen = HashSet::new();
        for g in stream(n) {
            assert!(seen.insert(canonical_form(&g).form), "duplicate at n={n}");
        }
    }
}

#[test]
fn graph6_round_trip_up_to_nine() {
    for n in 1..=9 {
        for g in stream(n) {
            let back = parse_graph6(&write_graph6(&g).unwrap()).unwrap();
            assert_eq!(back, g);
        }
    }
}

#[test]
fn alpha_matches_oracle_up_to_eight() {
    for n in 1..=8 {
        for g in stream(n) {
            assert_eq!(alpha(&g).alpha, naive_alpha(&g), "{g:?}");
        }
    }
}

#[test]
fn bound_soundness_and_heredity_up_to_nine() {
    for n in 2..=9 {
        for g in stream(n) {
            for k in 1..=3.min(n - 1) {
                for l in 0..k {
                    let r = is_stable(&g, k, l).unwrap();
                    if r.stable {
                        assert!(r.alpha <= stability_bound(n, k, l).unwrap());
                    }
                }
                if k >= 2 && is_tight_stable(&g, k, 0).unwrap() {
                    for v in 0..n {
                        let (h, _) = g.delete_vertices(VertexSet::from_iter([v])).unwrap();
                        assert!(is_tight_stable(&h, k - 1, 0).unwrap(), "{g:?} minus {v}");
                    }
                }
            }
        }
    }
}

#[test]
fn critical_oracle_and_kernel_inheritance() {
    for n in 1..=7 {
        for g in stream(n) {
            assert_eq!(is_alpha_critical(&g).critical, naive_critical(&g), "{g:?}");
            let kernel = critical_reduce(&g).kernel;
            assert!(kernel.is_spanning_subgraph_of(&g));
            assert_eq!(alpha(&kernel).alpha, alpha(&g).alpha);
            assert!(is_alpha_critical(&kernel).critical);
            for k in 1..=2.min(n - 1) {
                if is_stable(&g, k, 0).unwrap().stable {
                    assert!(is_stable(&kernel, k, 0).unwrap().stable, "{g:?} kernel loses ({k},0)");
                }
            }
        }
    }
}

#[test]
fn andrasfai_and_classification_totality() {
    for n in 1..=8 {
        for g in stream(n) {
            if !g.is_connected() || !is_alpha_critical(&g).critical {
                continue;
            }
            let class = classify_defect(&g).unwrap();
            match class.defect {
                1 => assert_eq!(class.classification, Classification::OddCycle, "{g:?}"),
                2 => assert!(is_even_subdivision_k4(&g).is_some(), "{g:?}"),
                3 if g.min_degree() >= 3 => assert!(class.classification.named().is_some(), "{g:?}"),
                _ => {}
            }
        }
    }
}

#[test]
fn hall_dichotomy_up_to_eight() {
    for n in 2..=8 {
        for g in stream(n) {
            let stable = is_stable(&g, 1, 0).unwrap().stable;
            let a = alpha(&g);
            match hall_matching(&g, a.witness).unwrap() {
                HallCertificate::Matching(m) => {
                    m.validate(&g).unwrap();
                    assert_eq!(m.len(), a.alpha);
                }
                HallCertificate::Violator(z) => {
                    assert!(!stable, "violator in a (1,0)-stable graph {g:?}");
                    let nbrs = z.iter().fold(0u64, |acc, v| acc | g.neighbors(v).mask());
                    assert!((nbrs.count_ones() as usize) < z.len());
                }
            }
        }
    }
}

#[test]
fn tight_two_odd_iff_odd_cycle() {
    for n in [5, 7, 9] {
        for g in stream(n) {
            assert_eq!(is_tight_stable(&g, 2, 0).unwrap(), is_odd_cycle(&g), "{g:?}");
        }
    }
}

#[test]
fn vertex_deletions_all_odd_cycles_only_for_k4() {
    let k4 = clique(4).unwrap();
    for n in 2..=8 {
        for g in stream(n) {
            let all = (0..n).all(|v| is_odd_cycle(&g.delete_vertices(VertexSet::from_iter([v])).unwrap().0));
            assert_eq!(all, is_isomorphic(&g, &k4), "{g:?}");
        }
    }
}

#[test]
fn prune_soundness_up_to_eight() {
    for n in 3..=8 {
        for k in 1..=3usize.min(n - 1) {
            let plain = Filter::new(vec![Predicate::Tight { k, l: 0 }]);
            let pruned = plain.clone().with_prune().unwrap();
            let a: Vec<String> = enumerate_filtered(n, &plain, 1).unwrap().into_iter().map(|r| r.g6).collect();
            let b: Vec<String> = enumerate_filtered(n, &pruned, 1).unwrap().into_iter().map(|r| r.g6).collect();
            assert_eq!(a, b, "n={n} k={k}");
        }
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let mut one = VerifyParams::new(4, 8);
    one.jobs = 1;
    let mut three = one.clone();
    three.jobs = 3;
    for t in [TheoremId::T2, TheoremId::T1b, TheoremId::L21] {
        assert_eq!(verify_theorem(t, &one).unwrap(), verify_theorem(t, &three).unwrap());
    }
    let f = Filter::new(vec![Predicate::Connected]);
    assert_eq!(enumerate_filtered(7, &f, 1).unwrap(), enumerate_filtered(7, &f, 4).unwrap());
}

#[test]
fn filtered_examples() {
    let tight = |k| Filter::new(vec![Predicate::Tight { k, l: 0 }]);
    let one = |n, k| {
        let rs = enumerate_filtered(n, &tight(k), 1).unwrap();
        assert_eq!(rs.len(), 1, "n={n} k={k}");
        rs[0].graph().unwrap()
    };
    assert!(is_isomorphic(&one(5, 2), &stabilitylab_core::generators::cycle(5).unwrap()));
    assert!(is_isomorphic(&one(7, 2), &stabilitylab_core::generators::cycle(7).unwrap()));
    assert!(is_isomorphic(&one(4, 3), &clique(4).unwrap()));
}

#[test]
fn atlas_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let records = enumerate_filtered(6, &Filter::default(), 1).unwrap();
    assert_eq!(records.len(), 156);
    let (first, second) = (dir.path().join("a.jsonl"), dir.path().join("b.jsonl"));
    atlas_write(&records, &first).unwrap();
    let back = atlas_read(&first).unwrap();
    assert_eq!(back, records);
    atlas_write(&back, &second).unwrap();
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
}

#[test]
fn atlas_rejects_tampering_at_the_right_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("atlas.jsonl");
    let records = enumerate_filtered(4, &Filter::default(), 1).unwrap();
    atlas_write(&records, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut bad: AtlasRecord = serde_json::from_str(&lines[2]).unwrap();
    bad.alpha += 1;
    lines[2] = serde_json::to_string(&bad).unwrap();
    std::fs::write(&path, lines.join("\n") + "\n").unwrap();
    match atlas_read(&path) {
        Err(Error::Atlas { line, reason }) => {
            assert_eq!(line, 3);
            assert!(reason.contains("alpha"), "{reason}");
        }
        other => panic!("expected an atlas error, got {other:?}"),
    }
}

#[test]
fn empty_atlas() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.jsonl");
    atlas_write(&[], &path).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), b"");
    assert!(atlas_read(&path).unwrap().is_empty());
}

#[test]
fn verification_examples() {
    let r = verify_theorem(TheoremId::Sur, &VerifyParams::new(5, 5)).unwrap();
    assert_eq!(r.matches.len(), 1);
    let mut p = VerifyParams::new(10, 10);
    p.extended = true;
    p.prune = true;
    let r = verify_theorem(TheoremId::Cor, &p).unwrap();
    assert!(r.matches.is_empty() && r.counterexamples.is_empty());
    assert!(matches!(verify_theorem(TheoremId::Cor, &VerifyParams::new(10, 10)), Err(Error::Range(_))));
}
