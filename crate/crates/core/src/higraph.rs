//! Higraphs: directed hypergraphs closed under gluing and free of cycles
//! other than loops.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::path::{self, Edge};

pub const MAX_VERTICES: usize = 64;

/// Index of a vertex. Indices follow the lexicographic order of names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u8);

/// A set of vertices as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VSet(pub u64);

impl VSet {
    pub fn from_ids(ids: impl IntoIterator<Item = VertexId>) -> Self {
        VSet(ids.into_iter().fold(0, |m, v| m | 1 << v.0))
    }
}

impl path::VertexSet for VSet {
    type Vertex = VertexId;

    fn singleton(v: VertexId) -> Self {
        VSet(1 << v.0)
    }
    fn contains(self, v: VertexId) -> bool {
        self.0 >> v.0 & 1 == 1
    }
    fn union(self, other: Self) -> Self {
        VSet(self.0 | other.0)
    }
    fn intersection(self, other: Self) -> Self {
        VSet(self.0 & other.0)
    }
    fn difference(self, other: Self) -> Self {
        VSet(self.0 & !other.0)
    }
    fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    fn vertices(self) -> Vec<VertexId> {
        let mut bits = self.0;
        let mut out = Vec::with_capacity(bits.count_ones() as usize);
        while bits != 0 {
            let i = bits.trailing_zeros();
            out.push(VertexId(i as u8));
            bits &= bits - 1;
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HiEdge {
    pub source: VSet,
    pub target: VSet,
}

impl HiEdge {
    pub fn new(source: VSet, target: VSet) -> Self {
        HiEdge { source, target }
    }

    pub fn is_loop(&self) -> bool {
        use path::VertexSet;
        self.source.len() == 1 && self.source == self.target
    }
}

impl Edge for HiEdge {
    type Set = VSet;
    fn source(&self) -> VSet {
        self.source
    }
    fn target(&self) -> VSet {
        self.target
    }
}

/// Glues `e1` and `e2` along the single vertex of `t(e1) ∩ s(e2)`.
pub fn glue(e1: HiEdge, e2: HiEdge) -> Result<HiEdge> {
    use path::VertexSet;
    let meet = e1.target.intersection(e2.source);
    if meet.len() != 1 {
        return Err(Error::NotAdjacent);
    }
    Ok(HiEdge {
        source: e1.source.union(e2.source.difference(meet)),
        target: e1.target.difference(meet).union(e2.target),
    })
}

fn check_name(name: &str) -> Result<()> {
    let bad = |c: char| c.is_whitespace() || ".|>[]{},;".contains(c);
    if name.is_empty() || name.chars().any(bad) {
        return Err(Error::InvalidVertexName(name.to_string()));
    }
    Ok(())
}

/// Vertex names plus an edge set, not yet checked against the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    names: Vec<String>,
    edges: Vec<HiEdge>,
}

impl Hypergraph {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(Vec<S>, Vec<S>)]) -> Result<Self> {
        let mut names: Vec<String> = Vec::with_capacity(vertices.len());
        for v in vertices {
            check_name(v.as_ref())?;
            names.push(v.as_ref().to_string());
        }
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0].clone()));
            }
        }
        if names.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(names.len()));
        }
        let index: HashMap<&str, VertexId> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), VertexId(i as u8)))
            .collect();
        let lookup = |list: &[S]| -> Result<VSet> {
            let mut set = VSet::default();
            for n in list {
                let id = index
                    .get(n.as_ref())
                    .ok_or_else(|| Error::UndeclaredVertex(n.as_ref().to_string()))?;
                set = VSet(set.0 | 1 << id.0);
            }
            Ok(set)
        };
        let mut seen = BTreeSet::new();
        let mut list = Vec::with_capacity(edges.len());
        for (s, t) in edges {
            let e = HiEdge::new(lookup(s)?, lookup(t)?);
            if !seen.insert(e) {
                let g = Hypergraph {
                    names: names.clone(),
                    edges: Vec::new(),
                };
                return Err(Error::DuplicateEdge(g.edge_text(e)));
            }
            list.push(e);
        }
        list.sort();
        Ok(Hypergraph { names, edges: list })
    }

    fn from_ids(names: Vec<String>, edges: BTreeSet<HiEdge>) -> Self {
        Hypergraph {
            names,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn edges(&self) -> &[HiEdge] {
        &self.edges
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0 as usize]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
            .map(|i| VertexId(i as u8))
    }

    pub fn all_vertices(&self) -> VSet {
        VSet::from_ids((0..self.names.len()).map(|i| VertexId(i as u8)))
    }

    pub fn contains(&self, e: &HiEdge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn set_text(&self, set: VSet) -> String {
        use path::VertexSet;
        let mut names: Vec<&str> = set.vertices().into_iter().map(|v| self.name(v)).collect();
        names.sort_unstable();
        names.join(",")
    }

    /// `{a,b>c}`
    pub fn edge_text(&self, e: HiEdge) -> String {
        format!(
            "{{{}>{}}}",
            self.set_text(e.source),
            self.set_text(e.target)
        )
    }

    /// `({a,b}>{c})`, the form used in violation reports.
    pub fn report_text(&self, e: HiEdge) -> String {
        format!(
            "({{{}}}>{{{}}})",
            self.set_text(e.source),
            self.set_text(e.target)
        )
    }

    /// Checks transitivity and acyclicity, collecting every violation.
    pub fn validate(self) -> std::result::Result<Higraph, ViolationReport> {
        use path::VertexSet;
        let mut violations = Vec::new();
        for (i, &e1) in self.edges.iter().enumerate() {
            for (j, &e2) in self.edges.iter().enumerate() {
                let meet = e1.target.intersection(e2.source);
                if meet.is_empty() {
                    continue;
                }
                if meet.len() > 1 {
                    violations.push(Violation::Transitivity {
                        first: e1,
                        second: e2,
                        problem: TransitivityProblem::Overlap(meet),
                    });
                } else {
                    let rest_s = e2.source.difference(meet);
                    let rest_t = e1.target.difference(meet);
                    let glued = glue(e1, e2).expect("single vertex meet");
                    if !e1.source.is_disjoint(rest_s) || !rest_t.is_disjoint(e2.target) {
                        violations.push(Violation::Transitivity {
                            first: e1,
                            second: e2,
                            problem: TransitivityProblem::NotDisjoint(glued),
                        });
                    } else if !self.contains(&glued) {
                        violations.push(Violation::Transitivity {
                            first: e1,
                            second: e2,
                            problem: TransitivityProblem::Missing(glued),
                        });
                    }
                }
                let back = e2.target.intersection(e1.source);
                let cyclic = !back.is_empty();
                if cyclic && i < j {
                    violations.push(Violation::Acyclicity {
                        first: e1,
                        second: e2,
                    });
                } else if cyclic && i == j && !e1.is_loop() {
                    violations.push(Violation::Acyclicity {
                        first: e1,
                        second: e1,
                    });
                }
            }
        }
        if violations.is_empty() {
            Ok(Higraph { inner: self })
        } else {
            Err(ViolationReport {
                graph: self,
                violations,
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransitivityProblem {
    Missing(HiEdge),
    Overlap(VSet),
    NotDisjoint(HiEdge),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    Transitivity {
        first: HiEdge,
        second: HiEdge,
        problem: TransitivityProblem,
    },
    Acyclicity {
        first: HiEdge,
        second: HiEdge,
    },
}

#[derive(Clone, Debug)]
pub struct ViolationReport {
    pub graph: Hypergraph,
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn lines(&self) -> Vec<String> {
        let g = &self.graph;
        self.violations
            .iter()
            .map(|v| match *v {
                Violation::Acyclicity { first, second } => {
                    format!(
                        "ACYCLICITY {} {}",
                        g.report_text(first),
                        g.report_text(second)
                    )
                }
                Violation::Transitivity {
                    first,
                    second,
                    problem,
                } => {
                    let detail = match problem {
                        TransitivityProblem::Missing(e) => format!("missing {}", g.report_text(e)),
                        TransitivityProblem::Overlap(s) => format!("overlap {{{}}}", g.set_text(s)),
                        TransitivityProblem::NotDisjoint(e) => {
                            format!("overlapping union {}", g.report_text(e))
                        }
                    };
                    format!(
                        "TRANSITIVITY {} {} {}",
                        g.report_text(first),
                        g.report_text(second),
                        detail
                    )
                }
            })
            .collect()
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// A hypergraph that satisfies both higraph axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Higraph {
    inner: Hypergraph,
}

impl std::ops::Deref for Higraph {
    type Target = Hypergraph;
    fn deref(&self) -> &Hypergraph {
        &self.inner
    }
}

impl Higraph {
    pub fn hypergraph(&self) -> &Hypergraph {
        &self.inner
    }

    pub fn is_tree_like(&self) -> bool {
        use path::VertexSet;
        self.edges().iter().all(|e| e.target.len() == 1)
    }

    pub fn is_rake_like(&self) -> bool {
        use path::VertexSet;
        self.edges().iter().all(|e| e.source.len() == 1)
    }

    /// True if every edge has one source and one target vertex.
    pub fn is_simple(&self) -> bool {
        self.is_tree_like() && self.is_rake_like()
    }

    /// The first edge violating the balance equation, with its score.
    pub fn balance_violation(&self, psi: &VertexAssignment) -> Option<(HiEdge, usize)> {
        self.edges().iter().find_map(|&e| {
            let score = psi.score(e);
            (score != 1).then_some((e, score))
        })
    }

    pub fn is_balanced(&self, psi: &VertexAssignment) -> bool {
        self.balance_violation(psi).is_none()
    }

    /// Moves every end with value 2 to the opposite side of its edge.
    ///
    /// Returns the flipped higraph with pairs (original edge, flipped edge).
    pub fn flip(&self, psi: &VertexAssignment) -> Result<(Higraph, Vec<(HiEdge, HiEdge)>)> {
        if let Some((e, _)) = self.balance_violation(psi) {
            return Err(Error::NotBalanced(self.edge_text(e)));
        }
        let pairs: Vec<(HiEdge, HiEdge)> = self
            .edges()
            .iter()
            .map(|&e| (e, psi.flip_edge(e)))
            .collect();
        let edges = pairs.iter().map(|p| p.1).collect();
        let flipped = Hypergraph::from_ids(self.names.clone(), edges)
            .validate()
            .expect("flipping a balanced higraph preserves the axioms");
        Ok((flipped, pairs))
    }

    /// The same vertices with every edge reversed.
    pub fn reversed(&self) -> Higraph {
        let edges = self
            .edges()
            .iter()
            .map(|e| HiEdge::new(e.target, e.source))
            .collect();
        Hypergraph::from_ids(self.names.clone(), edges)
            .validate()
            .expect("reversal preserves the axioms")
    }

    pub fn glue(&self, e1: HiEdge, e2: HiEdge) -> Result<HiEdge> {
        glue(e1, e2)
    }
}

/// A map from vertices to {1, 2}, stored as the set of vertices sent to 2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexAssignment {
    pub two: VSet,
}

impl VertexAssignment {
    pub fn uniform1() -> Self {
        VertexAssignment { two: VSet(0) }
    }

    pub fn uniform2(h: &Hypergraph) -> Self {
        VertexAssignment {
            two: h.all_vertices(),
        }
    }

    pub fn value(&self, v: VertexId) -> u8 {
        use path::VertexSet;
        if self.two.contains(v) {
            2
        } else {
            1
        }
    }

    pub fn score(&self, e: HiEdge) -> usize {
        use path::VertexSet;
        e.source.intersection(self.two).len() + e.target.difference(self.two).len()
    }

    pub fn flip_edge(&self, e: HiEdge) -> HiEdge {
        use path::VertexSet;
        HiEdge {
            source: e
                .source
                .difference(self.two)
                .union(e.target.intersection(self.two)),
            target: e
                .target
                .difference(self.two)
                .union(e.source.intersection(self.two)),
        }
    }
}

/// The named catalog families.
pub fn catalog(name: &str, n: Option<usize>) -> Result<Higraph> {
    let need = |n: Option<usize>| match n {
        Some(n) if n >= 1 => Ok(n),
        _ => Err(Error::UnknownCatalog(format!(
            "{name} needs a parameter n >= 1"
        ))),
    };
    let h = match name {
        "morse" => morse(),
        "composition" => composition(need(n)?)?,
        "hypercube" => hypercube(need(n)?)?,
        other => return Err(Error::UnknownCatalog(other.to_string())),
    };
    Ok(h)
}

/// One vertex `K` and one loop.
pub fn morse() -> Higraph {
    Hypergraph::new(&["K"], &[(vec!["K"], vec!["K"])])
        .expect("well formed")
        .validate()
        .expect("valid")
}

/// Vertices `i-j` for `0 <= i < j <= n`; a loop at each vertex and one edge
/// per chain `i0 < ... < ik` with `k >= 2`.
pub fn composition(n: usize) -> Result<Higraph> {
    let label = |i: usize, j: usize| format!("{i}-{j}");
    let mut names = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            names.push(label(i, j));
        }
    }
    if names.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(names.len()));
    }
    let mut edges: Vec<(Vec<String>, Vec<String>)> = names
        .iter()
        .map(|v| (vec![v.clone()], vec![v.clone()]))
        .collect();
    for i in 0..=n {
        for j in i + 2..=n {
            // interior points of the chain as a bitmask over i+1..j
            let inner = j - i - 1;
            for mask in 1u64..1 << inner {
                let mut chain = vec![i];
                chain.extend((0..inner).filter(|b| mask >> b & 1 == 1).map(|b| i + 1 + b));
                chain.push(j);
                let source = chain.windows(2).map(|w| label(w[0], w[1])).collect();
                edges.push((source, vec![label(i, j)]));
            }
        }
    }
    let h = Hypergraph::new(&names, &edges)?;
    Ok(h.validate().expect("composition higraphs are valid"))
}

/// Vertices `{0,1}^n`; loops plus an edge from `u` to `v` whenever `u > v`
/// in the product order.
pub fn hypercube(n: usize) -> Result<Higraph> {
    if 1usize
        .checked_shl(n as u32)
        .is_none_or(|c| c > MAX_VERTICES)
    {
        return Err(Error::TooManyVertices(
            1usize.checked_shl(n as u32).unwrap_or(usize::MAX),
        ));
    }
    let label = |x: usize| {
        (0..n)
            .map(|b| if x >> (n - 1 - b) & 1 == 1 { '1' } else { '0' })
            .collect::<String>()
    };
    let count = 1usize << n;
    let names: Vec<String> = (0..count).map(label).collect();
    let mut edges = Vec::new();
    for u in 0..count {
        for v in 0..count {
            if u & v == v {
                edges.push((vec![label(u)], vec![label(v)]));
            }
        }
    }
    let h = Hypergraph::new(&names, &edges)?;
    Ok(h.validate().expect("hypercube higraphs are valid"))
}
