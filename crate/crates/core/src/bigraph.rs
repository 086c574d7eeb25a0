//! The blow-up of a higraph into flavored interior and boundary edges.

use std::fmt;

use crate::error::{Error, Result};
use crate::higraph::{HiEdge, Higraph, VSet, VertexAssignment, VertexId};
use crate::path::{Edge, Path, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    O,
    U,
    S,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::O, Flavor::U, Flavor::S];

    pub fn letter(self) -> char {
        match self {
            Flavor::O => 'o',
            Flavor::U => 'u',
            Flavor::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Flavor> {
        match c {
            'o' => Some(Flavor::O),
            'u' => Some(Flavor::U),
            's' => Some(Flavor::S),
            _ => None,
        }
    }

    pub fn is_boundary(self) -> bool {
        self != Flavor::O
    }

    /// Exchanges unstable and stable.
    pub fn dual(self) -> Flavor {
        match self {
            Flavor::O => Flavor::O,
            Flavor::U => Flavor::S,
            Flavor::S => Flavor::U,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiVertex {
    pub base: VertexId,
    pub flavor: Flavor,
}

/// A set of flavored vertices: one bitmask per flavor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiSet(pub [u64; 3]);

impl BiSet {
    pub fn lift(base: VSet, flavor: Flavor) -> BiSet {
        let mut m = [0; 3];
        m[flavor as usize] = base.0;
        BiSet(m)
    }

    pub fn with_flavor(self, flavor: Flavor) -> VSet {
        VSet(self.0[flavor as usize])
    }

    pub fn count(self, flavor: Flavor) -> usize {
        self.0[flavor as usize].count_ones() as usize
    }

    /// The projection to base vertices.
    pub fn base(self) -> VSet {
        VSet(self.0[0] | self.0[1] | self.0[2])
    }

    /// True if no base vertex appears with two flavors.
    pub fn is_injective(self) -> bool {
        self.base().len() == self.len()
    }

    pub fn counts(self) -> [u32; 3] {
        [
            self.0[0].count_ones(),
            self.0[1].count_ones(),
            self.0[2].count_ones(),
        ]
    }
}

impl VertexSet for BiSet {
    type Vertex = BiVertex;

    fn singleton(v: BiVertex) -> Self {
        let mut m = [0; 3];
        m[v.flavor as usize] = 1 << v.base.0;
        BiSet(m)
    }
    fn contains(self, v: BiVertex) -> bool {
        self.0[v.flavor as usize] >> v.base.0 & 1 == 1
    }
    fn union(self, o: Self) -> Self {
        BiSet([self.0[0] | o.0[0], self.0[1] | o.0[1], self.0[2] | o.0[2]])
    }
    fn intersection(self, o: Self) -> Self {
        BiSet([self.0[0] & o.0[0], self.0[1] & o.0[1], self.0[2] & o.0[2]])
    }
    fn difference(self, o: Self) -> Self {
        BiSet([
            self.0[0] & !o.0[0],
            self.0[1] & !o.0[1],
            self.0[2] & !o.0[2],
        ])
    }
    fn len(self) -> usize {
        self.0.iter().map(|m| m.count_ones() as usize).sum()
    }
    fn vertices(self) -> Vec<BiVertex> {
        let mut out = Vec::with_capacity(self.len());
        for f in Flavor::ALL {
            for base in VSet(self.0[f as usize]).vertices() {
                out.push(BiVertex { base, flavor: f });
            }
        }
        out.sort();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiEdge {
    pub mu: bool,
    pub source: BiSet,
    pub target: BiSet,
}

impl Edge for BiEdge {
    type Set = BiSet;
    fn source(&self) -> BiSet {
        self.source
    }
    fn target(&self) -> BiSet {
        self.target
    }
}

impl BiEdge {
    pub fn new(mu: bool, source: BiSet, target: BiSet) -> Self {
        BiEdge { mu, source, target }
    }

    pub fn is_boundary(&self) -> bool {
        self.mu
    }

    pub fn base(&self) -> HiEdge {
        HiEdge::new(self.source.base(), self.target.base())
    }

    pub fn weight(&self) -> i64 {
        if self.mu {
            2 - self.source.count(Flavor::S) as i64 - self.target.count(Flavor::U) as i64
        } else {
            1
        }
    }

    /// Conditions 0 and 1 plus injective projection.
    pub fn is_well_formed(&self) -> bool {
        let flavors_ok = if self.mu {
            self.source.count(Flavor::O) == 0 && self.target.count(Flavor::O) == 0
        } else {
            self.source.count(Flavor::S) == 0 && self.target.count(Flavor::U) == 0
        };
        flavors_ok && self.source.is_injective() && self.target.is_injective()
    }

    pub fn abstract_edge(&self) -> AbstractEdge {
        AbstractEdge {
            mu: self.mu,
            source: self.source.counts(),
            target: self.target.counts(),
        }
    }

    /// Moves ends at vertices valued 2 to the other side, exchanging
    /// unstable and stable there.
    pub fn flip(&self, psi: &VertexAssignment) -> BiEdge {
        let two = psi.two.0;
        let keep = |s: BiSet| BiSet([s.0[0] & !two, s.0[1] & !two, s.0[2] & !two]);
        let moved = |s: BiSet| BiSet([s.0[0] & two, s.0[2] & two, s.0[1] & two]);
        BiEdge {
            mu: self.mu,
            source: keep(self.source).union(moved(self.target)),
            target: keep(self.target).union(moved(self.source)),
        }
    }
}

pub type BiPath = Path<BiEdge>;

/// Every lift of a base edge: interior lifts first, then boundary lifts.
pub fn lifts(e: HiEdge) -> (Vec<BiEdge>, Vec<BiEdge>) {
    let src = e.source.vertices();
    let tgt = e.target.vertices();
    let n = src.len() + tgt.len();
    let mut interior = Vec::with_capacity(1 << n);
    let mut boundary = Vec::with_capacity(1 << n);
    for mask in 0u64..1 << n {
        let pick = |i: usize, a: Flavor, b: Flavor| if mask >> i & 1 == 0 { a } else { b };
        let build = |mu: bool, sf: (Flavor, Flavor), tf: (Flavor, Flavor)| {
            let mut s = BiSet::default();
            for (i, &v) in src.iter().enumerate() {
                s = s.union(BiSet::singleton(BiVertex {
                    base: v,
                    flavor: pick(i, sf.0, sf.1),
                }));
            }
            let mut t = BiSet::default();
            for (j, &v) in tgt.iter().enumerate() {
                t = t.union(BiSet::singleton(BiVertex {
                    base: v,
                    flavor: pick(src.len() + j, tf.0, tf.1),
                }));
            }
            BiEdge::new(mu, s, t)
        };
        interior.push(build(false, (Flavor::O, Flavor::U), (Flavor::O, Flavor::S)));
        boundary.push(build(true, (Flavor::U, Flavor::S), (Flavor::U, Flavor::S)));
    }
    (interior, boundary)
}

/// A bigraph, or a boundary bigraph when `boundary_only` is set.
#[derive(Clone, Debug)]
pub struct Bigraph {
    base: Higraph,
    edges: Vec<BiEdge>,
    boundary_only: bool,
}

impl Bigraph {
    pub fn blowup(base: Higraph) -> Self {
        Self::build(base, false)
    }

    pub fn boundary(base: Higraph) -> Self {
        Self::build(base, true)
    }

    fn build(base: Higraph, boundary_only: bool) -> Self {
        let mut edges = Vec::new();
        for &e in base.edges() {
            let (i, b) = lifts(e);
            if !boundary_only {
                edges.extend(i);
            }
            edges.extend(b);
        }
        edges.sort();
        edges.dedup();
        Bigraph {
            base,
            edges,
            boundary_only,
        }
    }

    pub fn base(&self) -> &Higraph {
        &self.base
    }

    pub fn edges(&self) -> &[BiEdge] {
        &self.edges
    }

    pub fn is_boundary_only(&self) -> bool {
        self.boundary_only
    }

    pub fn interior_edges(&self) -> impl Iterator<Item = BiEdge> + '_ {
        self.edges.iter().copied().filter(|e| !e.mu)
    }

    pub fn boundary_edges(&self) -> impl Iterator<Item = BiEdge> + '_ {
        self.edges.iter().copied().filter(|e| e.mu)
    }

    pub fn contains(&self, e: &BiEdge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Membership straight from the defining conditions.
    pub fn admits(&self, e: &BiEdge) -> bool {
        e.is_well_formed() && self.base.contains(&e.base()) && !(self.boundary_only && !e.mu)
    }

    pub fn require(&self, e: &BiEdge) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::EdgeNotInBigraph(format!("{e:?}")))
        }
    }

    /// The bigraph of the flipped higraph.
    pub fn flip(&self, psi: &VertexAssignment) -> Result<Bigraph> {
        let (flipped, _) = self.base.flip(psi)?;
        Ok(Self::build(flipped, self.boundary_only))
    }
}

pub fn weight(p: &BiPath) -> i64 {
    p.nodes().iter().map(BiEdge::weight).sum()
}

/// Flips every node and reverses the arrows whose break vertex is valued 2.
pub fn flip_path(p: &BiPath, psi: &VertexAssignment) -> BiPath {
    let nodes: Vec<BiEdge> = p.nodes().iter().map(|e| e.flip(psi)).collect();
    let links: Vec<(usize, usize)> = p
        .arrows()
        .iter()
        .map(|a| {
            if psi.value(a.label.base) == 2 {
                (a.to, a.from)
            } else {
                (a.from, a.to)
            }
        })
        .collect();
    Path::build(nodes, &links)
        .expect("flipping preserves path conditions")
        .path
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbstractEdge {
    pub mu: bool,
    /// Counts of (o, u, s) source ends.
    pub source: [u32; 3],
    /// Counts of (o, u, s) target ends.
    pub target: [u32; 3],
}

impl AbstractEdge {
    pub fn weight(&self) -> i64 {
        if self.mu {
            2 - self.source[2] as i64 - self.target[1] as i64
        } else {
            1
        }
    }

    pub fn satisfies_conditions(&self) -> bool {
        if self.mu {
            self.source[0] == 0 && self.target[0] == 0
        } else {
            self.source[2] == 0 && self.target[1] == 0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractPath {
    pub nodes: Vec<AbstractEdge>,
    /// (from, to, break flavor)
    pub arrows: Vec<(usize, usize, Flavor)>,
}

impl AbstractPath {
    pub fn of(p: &BiPath) -> AbstractPath {
        AbstractPath {
            nodes: p.nodes().iter().map(BiEdge::abstract_edge).collect(),
            arrows: p
                .arrows()
                .iter()
                .map(|a| (a.from, a.to, a.label.flavor))
                .collect(),
        }
    }

    /// The six slot inequalities at every node.
    pub fn slots_ok(&self) -> bool {
        (0..self.nodes.len()).all(|v| {
            Flavor::ALL.iter().all(|&f| {
                let inc = self.arrows.iter().filter(|a| a.1 == v && a.2 == f).count() as u32;
                let out = self.arrows.iter().filter(|a| a.0 == v && a.2 == f).count() as u32;
                self.nodes[v].source[f as usize] >= inc && self.nodes[v].target[f as usize] >= out
            })
        })
    }

    pub fn weight(&self) -> i64 {
        self.nodes.iter().map(AbstractEdge::weight).sum()
    }
}

/// The counting functions on a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    pub o: usize,
    pub u: usize,
    pub s: usize,
    pub b: usize,
    /// Boundary edges with a stable outgoing end; only for tree-like paths.
    pub b_s: Option<usize>,
    pub s1: usize,
    pub u2: usize,
}

impl Counts {
    pub fn of(p: &BiPath) -> Counts {
        let mut c = Counts {
            o: 0,
            u: 0,
            s: 0,
            b: 0,
            b_s: None,
            s1: p.source().count(Flavor::S),
            u2: p.target().count(Flavor::U),
        };
        for a in p.arrows() {
            match a.label.flavor {
                Flavor::O => c.o += 1,
                Flavor::U => c.u += 1,
                Flavor::S => c.s += 1,
            }
        }
        c.b = p.nodes().iter().filter(|e| e.mu).count();
        if p.nodes().iter().all(|e| e.target.len() == 1) {
            c.b_s = Some(
                p.nodes()
                    .iter()
                    .filter(|e| e.mu && e.target.count(Flavor::S) == 1)
                    .count(),
            );
        }
        c
    }

    pub fn g(&self) -> usize {
        self.o + self.u
    }

    pub fn b_s(&self) -> Result<usize> {
        self.b_s.ok_or(Error::NotTreeLike)
    }
}

pub fn is_legal(p: &BiPath) -> bool {
    p.source().count(Flavor::S) == 0 && p.target().count(Flavor::U) == 0
}

pub fn is_boundary_path(p: &BiPath) -> bool {
    p.nodes().iter().all(|e| e.mu)
}

/// Whether a flavored vertex is good under `psi`.
pub fn is_good_vertex(v: BiVertex, psi: &VertexAssignment) -> bool {
    match v.flavor {
        Flavor::O => true,
        Flavor::U => psi.value(v.base) == 1,
        Flavor::S => psi.value(v.base) == 2,
    }
}

pub fn is_good(p: &BiPath, psi: &VertexAssignment) -> bool {
    let all = p
        .source()
        .vertices()
        .into_iter()
        .chain(p.target().vertices());
    all.into_iter().all(|v| is_good_vertex(v, psi))
}

pub fn good_breaks(p: &BiPath, psi: &VertexAssignment) -> Vec<usize> {
    p.arrows()
        .iter()
        .enumerate()
        .filter(|(_, a)| is_good_vertex(a.label, psi))
        .map(|(i, _)| i)
        .collect()
}

/// Shapes of good tree-like paths of weight one and two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GoodForm {
    /// A single interior edge.
    SingleInterior,
    /// A boundary edge whose incoming ends are each fed by at most one
    /// interior edge through a stable break.
    BoundaryStar,
    /// Weight two, identified by the one break that is not a stable break
    /// following an interior edge.
    Case(u8),
    Other,
}

impl GoodForm {
    pub fn good_breaks(self) -> Option<usize> {
        match self {
            GoodForm::SingleInterior | GoodForm::BoundaryStar => Some(0),
            GoodForm::Case(6) => Some(0),
            GoodForm::Case(_) => Some(1),
            GoodForm::Other => None,
        }
    }
}

/// Classifies a `psi`-good path after flipping it to the tree-like side.
pub fn classify_good_weight(p: &BiPath, psi: &VertexAssignment) -> GoodForm {
    if !is_good(p, psi) {
        return GoodForm::Other;
    }
    let q = flip_path(p, psi);
    if !q.nodes().iter().all(|e| e.target.len() == 1) {
        return GoodForm::Other;
    }
    let finals: Vec<usize> = (0..q.len())
        .filter(|&v| q.out_arrows(v).next().is_none())
        .collect();
    let [last] = finals[..] else {
        return GoodForm::Other;
    };
    let fin = q.node(last);
    let plain =
        |a: &crate::path::Arrow<BiVertex>| a.label.flavor == Flavor::S && !q.node(a.from).mu;
    let rogue: Vec<usize> = (0..q.breaks()).filter(|&i| !plain(&q.arrow(i))).collect();
    match (weight(&q), rogue.len()) {
        (1, 0) => {
            if q.len() == 1 && !fin.mu {
                GoodForm::SingleInterior
            } else if fin.mu && q.arrows().iter().all(|a| a.to == last) {
                GoodForm::BoundaryStar
            } else {
                GoodForm::Other
            }
        }
        (2, 1) => {
            let e = q.arrow(rogue[0]);
            match (e.label.flavor, fin.mu) {
                (Flavor::O, false) => GoodForm::Case(1),
                (Flavor::O, true) => GoodForm::Case(2),
                (Flavor::U, false) => GoodForm::Case(3),
                (Flavor::U, true) if !q.node(e.to).mu => GoodForm::Case(4),
                (Flavor::U, true) => GoodForm::Case(5),
                (Flavor::S, true) => GoodForm::Case(6),
                _ => GoodForm::Other,
            }
        }
        _ => GoodForm::Other,
    }
}
