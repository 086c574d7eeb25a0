//! The path DGA of a bigraph, graded by weight, and of a boundary bigraph,
//! graded by length.

use std::collections::HashMap;

use crate::algebra::{Element, Multiset, StructureReport};
use crate::bigraph::{flip_path, is_good, weight, BiEdge, BiPath, BiSet, Bigraph, Flavor};
use crate::error::{Error, Result};
use crate::higraph::{HiEdge, VertexAssignment};
use crate::moves::all_moves;
use crate::path::{grow_paths, Alphabet, Path, VertexSet};

pub type BiElement = Element<BiEdge>;

type Ends = (BiSet, BiSet);

pub struct BigraphDga {
    graph: Bigraph,
    alphabet: Alphabet<BiEdge>,
    interior: HashMap<Ends, Vec<BiPath>>,
    boundary: HashMap<Ends, Vec<BiPath>>,
}

impl BigraphDga {
    pub fn new(graph: Bigraph) -> Self {
        let alphabet = Alphabet::new(graph.edges().iter().copied());
        let mut interior: HashMap<Ends, Vec<BiPath>> = HashMap::new();
        let mut boundary: HashMap<Ends, Vec<BiPath>> = HashMap::new();
        let edges: Vec<BiEdge> = graph.edges().to_vec();
        // two edges meeting at one vertex: interior pairs at an interior
        // vertex, boundary pairs at a boundary vertex
        for &e1 in &edges {
            for &e2 in &edges {
                if e1.mu != e2.mu {
                    continue;
                }
                let Ok(p) = Path::concatenate(&Path::single(e1), &Path::single(e2)) else {
                    continue;
                };
                let table = if e1.mu { &mut boundary } else { &mut interior };
                table.entry((p.source(), p.target())).or_default().push(p);
            }
        }
        if !graph.is_boundary_only() {
            for b in graph.boundary_edges() {
                for p in boundary_stars(&alphabet, b) {
                    interior
                        .entry((p.source(), p.target()))
                        .or_default()
                        .push(p);
                }
            }
        }
        for list in interior.values_mut().chain(boundary.values_mut()) {
            list.sort();
            list.dedup();
        }
        BigraphDga {
            graph,
            alphabet,
            interior,
            boundary,
        }
    }

    pub fn graph(&self) -> &Bigraph {
        &self.graph
    }

    pub fn alphabet(&self) -> &Alphabet<BiEdge> {
        &self.alphabet
    }

    /// The refinements used by the differential at a node labeled `e`.
    pub fn refinements(&self, e: BiEdge) -> &[BiPath] {
        let table = if e.mu { &self.boundary } else { &self.interior };
        table
            .get(&(e.source, e.target))
            .map_or(&[], |v| v.as_slice())
    }

    pub fn delta_edge(&self, e: BiEdge) -> Result<BiElement> {
        self.graph.require(&e)?;
        Ok(self.refinements(e).iter().cloned().collect())
    }

    pub fn delta_path(&self, p: &BiPath) -> Multiset<BiEdge> {
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

    pub fn delta(&self, x: &BiElement) -> BiElement {
        let mut out = Multiset::new();
        for p in x.iter() {
            out.extend(self.delta_path(p));
        }
        out.reduce()
    }

    pub fn partial_path(&self, p: &BiPath) -> Multiset<BiEdge> {
        all_moves(&self.graph, p)
            .into_iter()
            .map(|m| m.contraction.path)
            .collect()
    }

    pub fn partial(&self, x: &BiElement) -> BiElement {
        let mut out = Multiset::new();
        for p in x.iter() {
            out.extend(self.partial_path(p));
        }
        out.reduce()
    }

    /// The grading: weight for bigraphs, length for boundary bigraphs.
    pub fn grade(&self, p: &BiPath) -> i64 {
        if self.graph.is_boundary_only() {
            p.len() as i64
        } else {
            weight(p)
        }
    }

    /// The sum of all `psi`-good weight-one paths.
    pub fn d_tilde(&self, psi: &VertexAssignment) -> Result<BiElement> {
        if self.graph.is_boundary_only() {
            return Ok(self.d_bar());
        }
        let flipped = self.graph.flip(psi)?;
        let alphabet = Alphabet::new(flipped.edges().iter().copied());
        let mut out = BiElement::zero();
        for e in flipped.interior_edges() {
            if e.target.len() == 1 && e.target.count(Flavor::O) == 1 {
                out.toggle(flip_path(&Path::single(e), psi));
            }
        }
        for b in flipped.boundary_edges() {
            if b.target.len() != 1 || b.target.count(Flavor::U) != 1 {
                continue;
            }
            for p in fed_stars(&alphabet, b) {
                out.toggle(flip_path(&p, psi));
            }
        }
        debug_assert!(out.iter().all(|p| is_good(p, psi) && weight(p) == 1));
        Ok(out)
    }

    /// The sum of all boundary edges.
    pub fn d_bar(&self) -> BiElement {
        self.graph.boundary_edges().map(Path::single).collect()
    }

    fn check(&self, d: &BiElement) -> StructureReport {
        let mut expansion = Multiset::new();
        for p in d.iter() {
            expansion.extend(self.delta_path(p));
        }
        let product = d.product(d);
        let lhs = expansion.reduce();
        let rhs = product.terms.reduce();
        StructureReport {
            expansion: expansion.report(),
            product_terms: rhs.len(),
            ambiguous_products: product.ambiguous,
            equal: lhs == rhs,
        }
    }

    /// Checks `δ̃D̃ψ = D̃ψ∘D̃ψ`, counting the expansion with multiplicity.
    pub fn check_structure(&self, psi: &VertexAssignment) -> Result<StructureReport> {
        let d = self.d_tilde(psi)?;
        Ok(self.check(&d))
    }

    /// Checks `δ̄D̄ = D̄∘D̄` using boundary refinements only.
    pub fn check_structure_boundary(&self) -> StructureReport {
        let d = self.d_bar();
        let mut expansion = Multiset::new();
        for p in d.iter() {
            for r in self.refinements(p.node(0)) {
                expansion.insert(r.clone());
            }
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

    /// All paths with grade at most `max_grade` and at most `max_length`
    /// nodes.
    pub fn paths(&self, max_grade: i64, max_length: usize) -> Vec<BiPath> {
        if self.graph.is_boundary_only() {
            return grow_paths(
                &self.alphabet,
                max_length.min(max_grade.max(0) as usize),
                |_| true,
            );
        }
        let widest = self.widest_base_edge() as i64;
        grow_paths(&self.alphabet, max_length, |p| {
            weight(p) - (widest - ends(p)) <= max_grade
        })
        .into_iter()
        .filter(|p| weight(p) <= max_grade)
        .collect()
    }

    /// The most ends any base edge has.
    ///
    /// Every path glues to a base edge, so its ends are bounded by this, and
    /// a node's weight is at least two minus its number of ends. Growing a
    /// path `p` can therefore lower its weight by at most
    /// `widest - ends(p)`.
    fn widest_base_edge(&self) -> usize {
        self.graph
            .base()
            .edges()
            .iter()
            .map(|e| e.source.len() + e.target.len())
            .max()
            .unwrap_or(0)
    }

    /// Checks `δ̃² = 0` on every edge and `∂̃² = 0` on every path within the
    /// bounds; returns the first failing path.
    pub fn check_d_squared(
        &self,
        max_grade: i64,
        max_length: usize,
    ) -> std::result::Result<(), BiPath> {
        for &e in self.graph.edges() {
            let once = self.delta(&BiElement::from_path(Path::single(e)));
            if !self.delta(&once).is_zero() {
                return Err(Path::single(e));
            }
        }
        for p in self.paths(max_grade, max_length) {
            let single = BiElement::from_path(p.clone());
            if !self.partial(&self.partial(&single)).is_zero() {
                return Err(p);
            }
        }
        Ok(())
    }

    /// Groups the terms of `D̃ψ` by the flavors of their single source and
    /// target vertex. Needs a base whose edges are all one to one.
    pub fn complex_matrix(&self, psi: &VertexAssignment) -> Result<BlockMatrix> {
        if !self.graph.base().is_simple() {
            return Err(Error::Shape);
        }
        if self.graph.is_boundary_only() {
            return Ok(BlockMatrix::group(&self.d_bar(), |f| {
                if f == Flavor::S {
                    0
                } else {
                    1
                }
            }));
        }
        let d = self.d_tilde(psi)?;
        Ok(BlockMatrix::group(
            &d,
            |f| if f == Flavor::O { 0 } else { 1 },
        ))
    }
}

/// A 2×2 block decomposition: `entries[row][col]` holds the terms whose
/// target lies in block `row` and whose source lies in block `col`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    pub entries: [[BiElement; 2]; 2],
}

impl BlockMatrix {
    fn group(d: &BiElement, block: impl Fn(Flavor) -> usize) -> BlockMatrix {
        let mut entries: [[BiElement; 2]; 2] = Default::default();
        for p in d.iter() {
            let s = p.source().vertices()[0].flavor;
            let t = p.target().vertices()[0].flavor;
            entries[block(t)][block(s)].toggle(p.clone());
        }
        BlockMatrix { entries }
    }
}

/// A boundary edge with exactly one interior edge on each stable source
/// and each unstable target: the legal interior stars of `b`.
fn boundary_stars(alphabet: &Alphabet<BiEdge>, b: BiEdge) -> Vec<BiPath> {
    let feeds: Vec<_> = BiSet::lift(b.source.with_flavor(Flavor::S), Flavor::S).vertices();
    let drains: Vec<_> = BiSet::lift(b.target.with_flavor(Flavor::U), Flavor::U).vertices();
    let mut slots: Vec<Vec<(BiEdge, bool)>> = Vec::new();
    for &k in &feeds {
        slots.push(
            alphabet
                .targeting(k)
                .iter()
                .filter(|e| !e.mu)
                .map(|&e| (e, true))
                .collect(),
        );
    }
    for &k in &drains {
        slots.push(
            alphabet
                .sourcing(k)
                .iter()
                .filter(|e| !e.mu)
                .map(|&e| (e, false))
                .collect(),
        );
    }
    attach_all(b, &slots)
}

/// A boundary edge with one interior edge targeting exactly each of its
/// stable sources: the second weight-one form on the tree-like side.
fn fed_stars(alphabet: &Alphabet<BiEdge>, b: BiEdge) -> Vec<BiPath> {
    let feeds: Vec<_> = BiSet::lift(b.source.with_flavor(Flavor::S), Flavor::S).vertices();
    let slots: Vec<Vec<(BiEdge, bool)>> = feeds
        .iter()
        .map(|&k| {
            alphabet
                .targeting(k)
                .iter()
                .filter(|e| !e.mu && e.target == BiSet::singleton(k))
                .map(|&e| (e, true))
                .collect()
        })
        .collect();
    attach_all(b, &slots)
}

/// Every way to attach one edge from each slot to the center `b`; `true`
/// marks a feeder (arrow into `b`), `false` a consumer.
fn attach_all(b: BiEdge, slots: &[Vec<(BiEdge, bool)>]) -> Vec<BiPath> {
    let mut out = Vec::new();
    let mut choice = vec![0usize; slots.len()];
    if slots.iter().any(|s| s.is_empty()) {
        return out;
    }
    loop {
        let mut nodes = vec![b];
        let mut links = Vec::with_capacity(slots.len());
        for (i, slot) in slots.iter().enumerate() {
            let (e, feeder) = slot[choice[i]];
            nodes.push(e);
            links.push(if feeder { (i + 1, 0) } else { (0, i + 1) });
        }
        if let Ok(built) = Path::build(nodes, &links) {
            out.push(built.path);
        }
        // odometer over slot choices
        let mut i = 0;
        loop {
            if i == slots.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < slots[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// The base edge under a bigraph path, obtained by gluing everything.
fn ends(p: &BiPath) -> i64 {
    (p.source().len() + p.target().len()) as i64
}

pub fn base_of(p: &BiPath) -> HiEdge {
    HiEdge::new(p.source().base(), p.target().base())
}
