use pathdga::{composition, Bigraph, BigraphDga, HigraphDga, VertexAssignment};

#[test]
fn mu2_relative_structure_counts() {
    let d = BigraphDga::new(Bigraph::blowup(composition(2).unwrap()));
    let r = d.check_structure(&VertexAssignment::uniform1()).unwrap();
    assert!(r.equal, "{r}");
    assert_eq!(
        (
            r.expansion.total,
            r.expansion.cancelled_pairs,
            r.expansion.survivors
        ),
        (254, 40, 174)
    );
    assert_eq!(r.product_terms, 174);
}

#[test]
fn higraph_structure_small_catalog() {
    for n in 1..=4 {
        let r = HigraphDga::new(composition(n).unwrap()).check_structure();
        assert!(r.equal, "composition {n}: {r}");
    }
}
