use pathdga::bigraph::{
    classify_good_weight, good_breaks, is_good, is_legal, lifts, weight, AbstractEdge,
    AbstractPath, GoodForm,
};
use pathdga::moves::valid_markers;
use pathdga::text::{display, parse_path, BiNotation};
use pathdga::{
    composition, morse, BiPath, Bigraph, BigraphDga, Counts, Flavor, Hypergraph, VertexAssignment,
    VertexSet,
};

fn p(g: &Bigraph, s: &str) -> BiPath {
    parse_path(&BiNotation { graph: g }, s).unwrap()
}

fn is_interior_single(q: &BiPath) -> bool {
    q.len() == 1 && !q.node(0).mu
}

#[test]
fn blowup_counts() {
    let g = Bigraph::blowup(morse());
    assert_eq!(g.interior_edges().count(), 4);
    assert_eq!(g.boundary_edges().count(), 4);
    let mut w: Vec<i64> = g.edges().iter().map(|e| e.weight()).collect();
    w.sort_unstable();
    assert_eq!(w, [0, 1, 1, 1, 1, 1, 1, 2]);
    assert_eq!(p(&g, "Bsu").node(0).weight(), 0);
    assert_eq!(p(&g, "Bus").node(0).weight(), 2);

    let mu2 = composition(2).unwrap();
    let eps = *mu2.edges().iter().find(|e| !e.is_loop()).unwrap();
    let (inner, outer) = lifts(eps);
    assert_eq!((inner.len(), outer.len()), (8, 8));
    assert_eq!(Bigraph::blowup(mu2.clone()).edges().len(), 40);
    assert_eq!(Bigraph::boundary(mu2).edges().len(), 20);
    assert_eq!(Bigraph::boundary(morse()).edges().len(), 4);
    for e in composition(3).unwrap().edges() {
        let (a, b) = lifts(*e);
        let n = 1 << (e.source.len() + e.target.len());
        assert_eq!((a.len(), b.len()), (n, n));
    }
}

#[test]
fn counts_examples() {
    let g = Bigraph::blowup(morse());
    let eight = p(&g, "Bus·Bsu·Bus");
    let c = Counts::of(&eight);
    assert_eq!((c.o, c.u, c.s, c.b, c.s1, c.u2), (0, 1, 1, 3, 0, 0));
    assert_eq!(weight(&eight), 4);
    assert!(is_legal(&eight));
    let chain = p(&g, "Dos·Bsu·Duo");
    let c = Counts::of(&chain);
    assert_eq!((c.o, c.u, c.s, c.b, c.g()), (0, 1, 1, 1, 1));
    let c = Counts::of(&p(&g, "Doo"));
    assert_eq!((c.o, c.u, c.s, c.b, c.b_s), (0, 0, 0, 0, Some(0)));
    assert!(!is_legal(&p(&g, "Bsu")));
    // a two-target edge is not tree-like
    let loops = ["a", "b", "c"].map(|v| (vec![v], vec![v]));
    let mut edges = vec![(vec!["a"], vec!["b", "c"])];
    edges.extend(loops);
    let h = Hypergraph::new(&["a", "b", "c"], &edges)
        .unwrap()
        .validate()
        .unwrap();
    let bg = Bigraph::blowup(h);
    let wide = bg.interior_edges().find(|e| e.target.len() == 2).unwrap();
    assert!(Counts::of(&BiPath::single(wide)).b_s().is_err());
}

#[test]
fn abstract_forms() {
    let g = Bigraph::blowup(morse());
    let dus = p(&g, "Dus").node(0).abstract_edge();
    assert_eq!(
        dus,
        AbstractEdge {
            mu: false,
            source: [0, 1, 0],
            target: [0, 0, 1]
        }
    );
    let ap = AbstractPath::of(&p(&g, "Dos·Bsu"));
    assert_eq!(ap.nodes.len(), 2);
    assert_eq!(ap.arrows.len(), 1);
    assert_eq!(ap.arrows[0].2, Flavor::S);
    assert!(ap.slots_ok());
    assert_eq!(ap.weight(), 1);
    for e in g.edges() {
        assert!(e.abstract_edge().satisfies_conditions());
        assert_eq!(e.abstract_edge().weight(), e.weight());
    }
}

#[test]
fn good_forms() {
    let g = Bigraph::blowup(morse());
    let one = VertexAssignment::uniform1();
    let two = VertexAssignment::uniform2(g.base());
    assert_eq!(
        classify_good_weight(&p(&g, "Doo"), &one),
        GoodForm::SingleInterior
    );
    assert_eq!(
        classify_good_weight(&p(&g, "Dus·Bsu"), &one),
        GoodForm::BoundaryStar
    );
    let chain = p(&g, "Dos·Bsu·Duo");
    for psi in [&one, &two] {
        assert!(is_good(&chain, psi));
        assert_eq!(good_breaks(&chain, psi).len(), 1);
        assert!(matches!(
            classify_good_weight(&chain, psi),
            GoodForm::Case(_)
        ));
    }
}

fn catalog() -> Vec<(&'static str, BigraphDga)> {
    vec![
        ("morse", BigraphDga::new(Bigraph::blowup(morse()))),
        (
            "mu2",
            BigraphDga::new(Bigraph::blowup(composition(2).unwrap())),
        ),
    ]
}

#[test]
fn weight_formulas() {
    for (name, d) in catalog() {
        let one = VertexAssignment::uniform1();
        let n = BiNotation { graph: d.graph() };
        let paths = d.paths(4, 6);
        assert!(!paths.is_empty());
        for q in &paths {
            let w = weight(q);
            let c = Counts::of(q);
            let (o, b) = (c.o as i64, c.b as i64);
            assert_eq!(
                w,
                1 + o + b - c.s1 as i64 - c.u2 as i64,
                "{name} {}",
                display(&n, q)
            );
            if is_legal(q) {
                assert_eq!(w, 1 + o + b);
                assert_eq!(w == 1, is_interior_single(q));
            }
            if let Some(bs) = c.b_s {
                if is_legal(q) || is_good(q, &one) {
                    assert_eq!(w, 1 + c.g() as i64 + bs as i64, "{name} {}", display(&n, q));
                }
            }
            if is_legal(q) && w == 2 {
                // form Ia: two interior edges; form Ib: a legal star around one boundary edge
                let boundary: Vec<usize> = (0..q.len()).filter(|&v| q.node(v).mu).collect();
                match boundary[..] {
                    [] => assert_eq!(q.len(), 2),
                    [x] => assert_eq!(q.neighbors(x).len() + 1, q.len()),
                    _ => panic!("{name} {}", display(&n, q)),
                }
            }
        }
    }
}

#[test]
fn one_two_glue() {
    for (name, d) in catalog() {
        let n = BiNotation { graph: d.graph() };
        let mut psis = vec![VertexAssignment::uniform1()];
        if d.graph().base().is_rake_like() {
            psis.push(VertexAssignment::uniform2(d.graph().base()));
        }
        for psi in &psis {
            let mut seen = [0usize; 2];
            for q in d
                .paths(2, 6)
                .iter()
                .filter(|q| weight(q) == 2 && is_good(q, psi))
            {
                let form = classify_good_weight(q, psi);
                let good = good_breaks(q, psi).len();
                assert_eq!(form.good_breaks(), Some(good), "{name} {}", display(&n, q));
                let moves = valid_markers(d.graph(), q).len();
                assert_eq!(
                    moves,
                    if good == 1 { 1 } else { 2 },
                    "{name} {}",
                    display(&n, q)
                );
                seen[good] += 1;
            }
            assert!(seen[0] > 0 && seen[1] > 0);
        }
    }
}
