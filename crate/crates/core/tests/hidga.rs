use std::collections::BTreeMap;

use pathdga::hidga::{glue_all, gluing_sequences};
use pathdga::text::{element_text, parse_edge, parse_path, HiNotation};
use pathdga::{composition, hypercube, morse, HiElement, HiPath, Higraph, HigraphDga};

fn catalog() -> Vec<(String, Higraph)> {
    let mut out = vec![("morse".to_string(), morse())];
    for n in 1..=4 {
        out.push((format!("composition {n}"), composition(n).unwrap()));
    }
    for n in 1..=3 {
        out.push((format!("hypercube {n}"), hypercube(n).unwrap()));
    }
    out
}

#[test]
fn delta_examples() {
    let h = composition(2).unwrap();
    let n = HiNotation { graph: &h };
    let d = HigraphDga::new(h.clone());
    let eps = parse_edge(&n, "{0-1,1-2>0-2}").unwrap();
    let got = d.delta(&HiElement::from_path(HiPath::single(eps)));
    let want: HiElement = [
        "{0-1>0-1}·{0-1,1-2>0-2}",
        "{1-2>1-2}·{0-1,1-2>0-2}",
        "{0-1,1-2>0-2}·{0-2>0-2}",
    ]
    .iter()
    .map(|s| parse_path(&n, s).unwrap())
    .collect();
    assert_eq!(element_text(&n, &got), element_text(&n, &want));
    let m = HigraphDga::new(morse());
    assert_eq!(m.refinements(morse().edges()[0]).len(), 1);
    assert_eq!(
        glue_all(&parse_path(&n, "{0-1>0-1}·{0-1,1-2>0-2}·{0-2>0-2}").unwrap()),
        eps
    );
}

#[test]
fn structure_across_catalog() {
    for (name, h) in catalog() {
        let r = HigraphDga::new(h).check_structure();
        assert!(r.equal, "{name}: {r}");
        assert_eq!(r.expansion.cancelled_pairs, 0, "{name}: {r}");
        assert_eq!(r.ambiguous_products, 0, "{name}: {r}");
        assert_eq!(r.expansion.survivors, r.product_terms, "{name}: {r}");
    }
}

#[test]
fn d_squared() {
    assert_eq!(HigraphDga::new(morse()).check_d_squared(5), Ok(()));
    assert_eq!(
        HigraphDga::new(composition(2).unwrap()).check_d_squared(4),
        Ok(())
    );
    assert_eq!(
        HigraphDga::new(composition(3).unwrap()).check_d_squared(3),
        Ok(())
    );
    assert_eq!(
        HigraphDga::new(hypercube(2).unwrap()).check_d_squared(3),
        Ok(())
    );
}

#[test]
fn adjointness() {
    for h in [morse(), composition(2).unwrap(), composition(3).unwrap()] {
        let d = HigraphDga::new(h);
        for a in d.paths(4) {
            let up = d.delta(&HiElement::from_path(a.clone()));
            for b in up.iter() {
                assert!(d.partial(&HiElement::from_path(b.clone())).contains(&a));
            }
            let down = d.partial(&HiElement::from_path(a.clone()));
            for b in down.iter() {
                assert!(d.delta(&HiElement::from_path(b.clone())).contains(&a));
            }
            assert_eq!(up.len(), d.delta_path(&a).reduce().len());
        }
    }
}

#[test]
fn factorial_counts() {
    // k-step sequence counts between fixed paths are divisible by k!
    for h in [composition(2).unwrap(), composition(3).unwrap()] {
        let d = HigraphDga::new(h);
        for p in d.paths(5) {
            for k in 1..=3usize {
                let mut by_end: BTreeMap<HiPath, usize> = BTreeMap::new();
                for s in gluing_sequences(&p, k, None) {
                    *by_end.entry(s.terminal().clone()).or_default() += 1;
                }
                let fact: usize = (1..=k).product();
                for count in by_end.values() {
                    assert_eq!(count % fact, 0);
                }
            }
        }
    }
}
