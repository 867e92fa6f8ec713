//! Exhaustive checks over every connected graph of small order: the
//! odd-face conditions and the factor-witness search must both agree with
//! polyhedrality of the cover computed directly.

use std::collections::BTreeMap;

use kpoly::canon::certificate;
use kpoly::planar::{is_planar, is_polyhedron};
use kpoly::products::cover;
use kpoly::recognition::{classify_odd_faces, find_factor_witness, verify_factor_witness, ConditionTag};
use kpoly::Graph;

/// All graphs on `n` vertices up to isomorphism, by adding one vertex with
/// every possible neighbourhood to the graphs on `n - 1` vertices.
fn all_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(1)]];
    for n in 2..=max_n {
        let mut next: BTreeMap<_, Graph> = BTreeMap::new();
        for g in &levels[n - 2] {
            for mask in 0u32..(1 << (n - 1)) {
                let extra = (0..n - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, n - 1));
                let h = Graph::new(n, g.edges().iter().copied().chain(extra)).unwrap();
                next.entry(certificate(&h).unwrap()).or_insert(h);
            }
        }
        levels.push(next.into_values().collect());
    }
    levels
}

#[test]
fn graph_counts_match_known_values() {
    let counts: Vec<usize> = all_graphs(6).iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
}

#[test]
fn conditions_and_witnesses_agree_with_cover_polyhedrality() {
    let levels = all_graphs(7);
    let mut checked = 0;
    let mut polyhedral = 0;
    for g in levels.iter().flatten().filter(|g| g.n() >= 4 && g.is_connected()) {
        let expected = is_polyhedron(&cover(g).0);
        polyhedral += usize::from(expected);
        let witness = find_factor_witness(g).unwrap();
        assert_eq!(witness.is_some(), expected, "witness search disagrees on {g:?}");
        if let Some(w) = &witness {
            assert!(verify_factor_witness(g, w).unwrap().valid);
        }
        if is_planar(g) {
            let c = classify_odd_faces(g).unwrap();
            assert_eq!(c.tag != ConditionTag::None, expected, "conditions disagree on {g:?}: {c:?}");
        }
        checked += 1;
    }
    assert!(checked == 992 && polyhedral == 4, "checked {checked}, polyhedral {polyhedral}");
}
