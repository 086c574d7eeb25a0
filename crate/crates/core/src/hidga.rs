//! The path DGA of a higraph, graded by length.

use std::collections::HashMap;

use crate::algebra::{Element, Multiset, StructureReport};
use crate::higraph::{HiEdge, Higraph, VSet};
use crate::path::{grow_paths, Alphabet, Contraction, Path};

pub type HiPath = Path<HiEdge>;
pub type HiElement = Element<HiEdge>;

pub struct HigraphDga {
    graph: Higraph,
    alphabet: Alphabet<HiEdge>,
    length2: HashMap<(VSet, VSet), Vec<HiPath>>,
}

impl HigraphDga {
    pub fn new(graph: Higraph) -> Self {
        let alphabet = Alphabet::new(graph.edges().iter().copied());
        let mut length2: HashMap<(VSet, VSet), Vec<HiPath>> = HashMap::new();
        for p in grow_paths(&alphabet, 2, |_| true) {
            if p.len() == 2 {
                length2.entry((p.source(), p.target())).or_default().push(p);
            }
        }
        HigraphDga {
            graph,
            alphabet,
            length2,
        }
    }

    pub fn graph(&self) -> &Higraph {
        &self.graph
    }

    pub fn alphabet(&self) -> &Alphabet<HiEdge> {
        &self.alphabet
    }

    /// All paths with at most `max_len` nodes, in canonical order.
    pub fn paths(&self, max_len: usize) -> Vec<HiPath> {
        grow_paths(&self.alphabet, max_len, |_| true)
    }

    /// Length-2 paths with the given ends.
    pub fn refinements(&self, e: HiEdge) -> &[HiPath] {
        self.length2
            .get(&(e.source, e.target))
            .map_or(&[], |v| v.as_slice())
    }

    /// Every refinement of one node to a length-2 path, with multiplicity.
    pub fn delta_path(&self, p: &HiPath) -> Multiset<HiEdge> {
        let mut out = Multiset::new();
        for v in 0..p.len() {
            for r in self.refinements(p.node(v)) {
                if let Ok(s) = p.refine(v, r) {
                    out.insert(s.path);
                }
            }
        }
        out
    }

    pub fn delta(&self, x: &HiElement) -> HiElement {
        let mut out = Multiset::new();
        for p in x.iter() {
            out.extend(self.delta_path(p));
        }
        out.reduce()
    }

    pub fn partial_path(&self, p: &HiPath) -> Multiset<HiEdge> {
        (0..p.breaks()).map(|a| glue_at_break(p, a).path).collect()
    }

    pub fn partial(&self, x: &HiElement) -> HiElement {
        let mut out = Multiset::new();
        for p in x.iter() {
            out.extend(self.partial_path(p));
        }
        out.reduce()
    }

    /// The sum of all edges.
    pub fn d(&self) -> HiElement {
        self.graph
            .edges()
            .iter()
            .map(|&e| Path::single(e))
            .collect()
    }

    pub fn check_structure(&self) -> StructureReport {
        let d = self.d();
        let mut expansion = Multiset::new();
        for p in d.iter() {
            expansion.extend(self.delta_path(p));
        }
        let product = d.product(&d);
        let lhs = expansion.reduce();
        let rhs = product.terms.reduce();
        StructureReport {
            expansion: expansion.report(),
            product_terms: rhs.len(),
            ambiguous_products: product.ambiguous,
            equal: lhs == rhs,
        }
    }

    /// Checks `δ² = 0` and `∂² = 0` on every path of length at most
    /// `max_length`; returns the first failing path.
    pub fn check_d_squared(&self, max_length: usize) -> Result<(), HiPath> {
        for p in self.paths(max_length) {
            let single = HiElement::from_path(p.clone());
            if !self.delta(&self.delta(&single)).is_zero()
                || !self.partial(&self.partial(&single)).is_zero()
            {
                return Err(p);
            }
        }
        Ok(())
    }
}

/// Contracts the arrow `a` to the glued edge.
pub fn glue_at_break(p: &HiPath, a: usize) -> Contraction<HiEdge> {
    let arrow = p.arrow(a);
    glue_subtree(p, &[arrow.from, arrow.to])
}

/// Contracts a subtree to the single edge with the subpath's ends.
pub fn glue_subtree(p: &HiPath, subtree: &[usize]) -> Contraction<HiEdge> {
    let (s, t) = p.subpath_ends(subtree).expect("subtree of the path");
    p.contract(subtree, HiEdge::new(s, t))
        .expect("gluing a subtree always yields a path")
}

/// One step of a gluing sequence: the break glued and the result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiStep {
    pub arrow: usize,
    pub result: Contraction<HiEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiSequence {
    pub initial: HiPath,
    pub steps: Vec<HiStep>,
}

impl HiSequence {
    pub fn terminal(&self) -> &HiPath {
        self.steps.last().map_or(&self.initial, |s| &s.result.path)
    }
}

/// Glues the breaks of a tuple of distinct arrows of `p` in order,
/// following each arrow through the earlier contractions.
pub fn tuple_to_sequence(p: &HiPath, breaks: &[usize]) -> Option<HiSequence> {
    let mut current: Vec<Option<usize>> = (0..p.breaks()).map(Some).collect();
    let mut path = p.clone();
    let mut steps = Vec::new();
    for &b in breaks {
        let a = (*current.get(b)?)?;
        let c = glue_at_break(&path, a);
        for slot in current.iter_mut() {
            *slot = slot.and_then(|x| c.arrow_map[x]);
        }
        path = c.path.clone();
        steps.push(HiStep {
            arrow: a,
            result: c,
        });
    }
    Some(HiSequence {
        initial: p.clone(),
        steps,
    })
}

/// The tuple of arrows of the initial path glued by a sequence.
pub fn sequence_to_tuple(seq: &HiSequence) -> Vec<usize> {
    let mut out = Vec::with_capacity(seq.steps.len());
    for (i, step) in seq.steps.iter().enumerate() {
        let mut a = step.arrow;
        for earlier in seq.steps[..i].iter().rev() {
            a = earlier.result.arrow_preimage(a).expect("arrow survives");
        }
        out.push(a);
    }
    out
}

/// Every `k`-step gluing sequence starting at `p`, optionally ending at
/// `terminal`.
pub fn gluing_sequences(p: &HiPath, k: usize, terminal: Option<&HiPath>) -> Vec<HiSequence> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn dfs(
        path: &HiPath,
        k: usize,
        stack: &mut Vec<HiStep>,
        initial: &HiPath,
        terminal: Option<&HiPath>,
        out: &mut Vec<HiSequence>,
    ) {
        if stack.len() == k {
            if terminal.is_none_or(|t| t == path) {
                out.push(HiSequence {
                    initial: initial.clone(),
                    steps: stack.clone(),
                });
            }
            return;
        }
        for a in 0..path.breaks() {
            let c = glue_at_break(path, a);
            let next = c.path.clone();
            stack.push(HiStep {
                arrow: a,
                result: c,
            });
            dfs(&next, k, stack, initial, terminal, out);
            stack.pop();
        }
    }
    dfs(p, k, &mut stack, p, terminal, &mut out);
    out
}

/// The edge `(s(p), t(p))`; a member of the higraph by transitivity.
pub fn glue_all(p: &HiPath) -> HiEdge {
    HiEdge::new(p.source(), p.target())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::higraph::{composition, morse};

    fn chain(e: HiEdge, n: usize) -> HiPath {
        let links: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Path::build(vec![e; n], &links).unwrap().path
    }

    #[test]
    fn morse_structure() {
        let dga = HigraphDga::new(morse());
        let r = dga.check_structure();
        assert!(r.equal);
        assert_eq!(r.expansion.total, 1);
        assert_eq!(r.expansion.cancelled_pairs, 0);
    }

    #[test]
    fn mu2_structure() {
        let dga = HigraphDga::new(composition(2).unwrap());
        let r = dga.check_structure();
        assert!(r.equal);
        assert_eq!(
            (
                r.expansion.total,
                r.expansion.cancelled_pairs,
                r.product_terms
            ),
            (6, 0, 6)
        );
    }

    #[test]
    fn morse_sequences() {
        let k = morse().edges()[0];
        let p3 = chain(k, 3);
        let single = Path::single(k);
        assert_eq!(gluing_sequences(&p3, 2, Some(&single)).len(), 2);
        let p4 = chain(k, 4);
        let seqs = gluing_sequences(&p4, 3, Some(&single));
        assert_eq!(seqs.len(), 6);
        for s in &seqs {
            let t = sequence_to_tuple(s);
            assert_eq!(tuple_to_sequence(&p4, &t).as_ref(), Some(s));
        }
    }

    #[test]
    fn delta_and_partial_of_loop() {
        let dga = HigraphDga::new(morse());
        let k = morse().edges()[0];
        let two = chain(k, 2);
        assert_eq!(
            dga.delta(&HiElement::from_path(Path::single(k))),
            HiElement::from_path(two.clone())
        );
        assert_eq!(
            dga.partial(&HiElement::from_path(two)),
            HiElement::from_path(Path::single(k))
        );
        assert!(dga.delta(&HiElement::zero()).is_zero());
    }
}
