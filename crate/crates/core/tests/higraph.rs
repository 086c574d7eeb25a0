use std::collections::BTreeSet;

use pathdga::higraph::glue;
use pathdga::{
    catalog, composition, hypercube, morse, Error, HiEdge, Hypergraph, VertexAssignment, VertexSet,
};
use proptest::prelude::*;

fn hg(v: &[&str], e: &[(&[&str], &[&str])]) -> Hypergraph {
    let edges: Vec<(Vec<&str>, Vec<&str>)> =
        e.iter().map(|(s, t)| (s.to_vec(), t.to_vec())).collect();
    Hypergraph::new(v, &edges).unwrap()
}

fn edge(h: &Hypergraph, s: &[&str], t: &[&str]) -> HiEdge {
    let set = |names: &[&str]| pathdga::VSet::from_ids(names.iter().map(|n| h.vertex(n).unwrap()));
    HiEdge::new(set(s), set(t))
}

#[test]
fn validation_examples() {
    assert!(hg(&["K"], &[(&["K"], &["K"])]).validate().is_ok());
    let cyc = hg(&["a", "b"], &[(&["a"], &["b"]), (&["b"], &["a"])])
        .validate()
        .unwrap_err();
    assert!(cyc
        .lines()
        .iter()
        .any(|l| l == "ACYCLICITY ({a}>{b}) ({b}>{a})"));
    let miss = hg(&["a", "b", "c"], &[(&["a"], &["b"]), (&["b"], &["c"])])
        .validate()
        .unwrap_err();
    assert_eq!(
        miss.lines(),
        ["TRANSITIVITY ({a}>{b}) ({b}>{c}) missing ({a}>{c})"]
    );
    let err = Hypergraph::new(&["a"], &[(vec!["a"], vec!["b"])]).unwrap_err();
    assert!(matches!(err, Error::UndeclaredVertex(ref v) if v == "b"));
    assert!(matches!(
        Hypergraph::new(&["a.b"], &[]),
        Err(Error::InvalidVertexName(_))
    ));
}

#[test]
fn empty_ends_are_allowed() {
    // an edge with empty source glued after a loop is itself
    let h = hg(&["a"], &[(&["a"], &["a"]), (&[], &["a"])]).validate();
    assert!(h.is_ok());
}

#[test]
fn glue_examples() {
    let h = hg(
        &["a", "b", "c"],
        &[(&["a"], &["b"]), (&["b"], &["c"]), (&["a"], &["c"])],
    );
    assert_eq!(
        glue(edge(&h, &["a"], &["b"]), edge(&h, &["b"], &["c"])),
        Ok(edge(&h, &["a"], &["c"]))
    );
    let k = morse().edges()[0];
    assert_eq!(glue(k, k), Ok(k));
    let mu2 = composition(2).unwrap();
    let la = edge(&mu2, &["0-1"], &["0-1"]);
    let eps = edge(&mu2, &["0-1", "1-2"], &["0-2"]);
    assert_eq!(mu2.glue(la, eps), Ok(eps));
    assert_eq!(glue(eps, la), Err(Error::NotAdjacent));
}

#[test]
fn shapes_and_balance() {
    let m = morse();
    assert!(m.is_tree_like() && m.is_rake_like());
    let mu2 = composition(2).unwrap();
    assert!(mu2.is_tree_like() && !mu2.is_rake_like());
    let rev = mu2.reversed();
    assert!(rev.is_rake_like() && !rev.is_tree_like());
    assert!(mu2.is_balanced(&VertexAssignment::uniform1()));
    let a = mu2.vertex("0-1").unwrap();
    let psi = VertexAssignment {
        two: pathdga::VSet::singleton(a),
    };
    let eps = edge(&mu2, &["0-1", "1-2"], &["0-2"]);
    assert_eq!(mu2.balance_violation(&psi), Some((eps, 2)));
    assert!(m.is_balanced(&VertexAssignment::uniform2(&m)));
}

#[test]
fn flip_examples() {
    let mu2 = composition(2).unwrap();
    let (same, _) = mu2.flip(&VertexAssignment::uniform1()).unwrap();
    assert_eq!(same, mu2);
    let eps = edge(&mu2, &["0-1", "1-2"], &["0-2"]);
    let two = VertexAssignment::uniform2(&mu2);
    assert_eq!(two.flip_edge(eps), edge(&mu2, &["0-2"], &["0-1", "1-2"]));
    assert!(matches!(mu2.flip(&two), Err(Error::NotBalanced(_))));
    let rev = mu2.reversed();
    let (back, pairs) = rev.flip(&VertexAssignment::uniform2(&rev)).unwrap();
    assert!(back.is_tree_like());
    assert_eq!(back, mu2);
    assert_eq!(pairs.len(), 4);
    let m = morse();
    let (mf, _) = m.flip(&VertexAssignment::uniform2(&m)).unwrap();
    assert_eq!(mf, m);
}

#[test]
fn catalog_counts() {
    let c = |h: &pathdga::Higraph| (h.names().len(), h.edges().len());
    assert_eq!(c(&morse()), (1, 1));
    assert_eq!(c(&composition(1).unwrap()), (1, 1));
    assert_eq!(c(&composition(2).unwrap()), (3, 4));
    assert_eq!(c(&composition(3).unwrap()), (6, 11));
    for n in 1..=5 {
        assert!(composition(n)
            .unwrap()
            .hypergraph()
            .clone()
            .validate()
            .is_ok());
    }
    for n in 1..=4 {
        let h = hypercube(n).unwrap();
        // comparable pairs of {0,1}^n, loops included: 3^n
        assert_eq!(h.edges().len(), 3usize.pow(n as u32));
    }
    assert!(matches!(
        catalog("nope", None),
        Err(Error::UnknownCatalog(_))
    ));
    assert!(catalog("composition", Some(2)).is_ok());
}

#[test]
fn tree_like_iff_uniform1_balanced() {
    let mut all = vec![morse()];
    all.extend((1..=4).map(|n| composition(n).unwrap()));
    all.extend((1..=3).map(|n| hypercube(n).unwrap()));
    for h in all {
        let r = h.reversed();
        for g in [h, r] {
            assert_eq!(
                g.is_balanced(&VertexAssignment::uniform1()),
                g.is_tree_like()
            );
            assert_eq!(
                g.is_balanced(&VertexAssignment::uniform2(&g)),
                g.is_rake_like()
            );
        }
    }
}

type Raw = (BTreeSet<usize>, BTreeSet<usize>);

/// The two axioms written out over plain sets.
fn axioms_hold(edges: &BTreeSet<Raw>) -> bool {
    for e1 in edges {
        for e2 in edges {
            let meet: BTreeSet<usize> = e1.1.intersection(&e2.0).copied().collect();
            if !meet.is_empty() {
                if meet.len() != 1 {
                    return false;
                }
                let k = *meet.iter().next().unwrap();
                let rest_s: BTreeSet<usize> = e2.0.iter().copied().filter(|&v| v != k).collect();
                let rest_t: BTreeSet<usize> = e1.1.iter().copied().filter(|&v| v != k).collect();
                if !e1.0.is_disjoint(&rest_s) || !rest_t.is_disjoint(&e2.1) {
                    return false;
                }
                let s = e1.0.union(&rest_s).copied().collect();
                let t = rest_t.union(&e2.1).copied().collect();
                if !edges.contains(&(s, t)) {
                    return false;
                }
            }
            let back: BTreeSet<usize> = e2.1.intersection(&e1.0).copied().collect();
            if !meet.is_empty() && !back.is_empty() {
                let is_loop = e1 == e2 && e1.0.len() == 1 && e1.0 == e1.1;
                if !is_loop {
                    return false;
                }
            }
        }
    }
    true
}

fn small_set(n: usize) -> impl Strategy<Value = BTreeSet<usize>> {
    proptest::collection::btree_set(0..n, 0..=2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn validation_matches_axioms(
        n in 1usize..=4,
        raw in proptest::collection::vec((small_set(4), small_set(4)), 0..7),
        with_loops in any::<bool>(),
    ) {
        let mut edges: BTreeSet<Raw> = raw
            .into_iter()
            .map(|(s, t)| (s.into_iter().filter(|&v| v < n).collect(), t.into_iter().filter(|&v| v < n).collect()))
            .collect();
        if with_loops {
            for v in 0..n {
                edges.insert(([v].into(), [v].into()));
            }
        }
        let names: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
        let list: Vec<(Vec<String>, Vec<String>)> = edges
            .iter()
            .map(|(s, t)| (s.iter().map(|&v| names[v].clone()).collect(), t.iter().map(|&v| names[v].clone()).collect()))
            .collect();
        let h = Hypergraph::new(&names, &list).unwrap();
        let ok = h.validate();
        prop_assert_eq!(ok.is_ok(), axioms_hold(&edges));
        if let Ok(h) = ok {
            for &e1 in h.edges() {
                for &e2 in h.edges() {
                    if let Ok(g) = glue(e1, e2) {
                        prop_assert!(h.contains(&g));
                    }
                }
            }
        }
    }
}
