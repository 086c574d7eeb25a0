//! Paths as labeled directed trees over any edge alphabet.
//!
//! A [`Path`] is always stored in canonical order: nodes are listed in the
//! preorder of the least rooted serialization, and arrow `i` is the arrow
//! joining node `i + 1` to its parent. Two paths are isomorphic exactly when
//! they compare equal, so `Path` can be used directly as a set element.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A finite set of vertices with cheap set algebra.
pub trait VertexSet: Copy + Eq + Ord + Hash + fmt::Debug + Default {
    type Vertex: Copy + Eq + Ord + Hash + fmt::Debug;

    fn singleton(v: Self::Vertex) -> Self;
    fn contains(self, v: Self::Vertex) -> bool;
    fn union(self, other: Self) -> Self;
    fn intersection(self, other: Self) -> Self;
    fn difference(self, other: Self) -> Self;
    fn len(self) -> usize;
    fn vertices(self) -> Vec<Self::Vertex>;

    fn is_empty(self) -> bool {
        self.len() == 0
    }

    /// The element of a one-element set.
    fn only(self) -> Option<Self::Vertex> {
        if self.len() == 1 {
            self.vertices().pop()
        } else {
            None
        }
    }

    fn is_disjoint(self, other: Self) -> bool {
        self.intersection(other).is_empty()
    }
}

/// An edge whose source and target are vertex sets.
pub trait Edge: Copy + Eq + Ord + Hash + fmt::Debug {
    type Set: VertexSet;

    fn source(&self) -> Self::Set;
    fn target(&self) -> Self::Set;
}

/// Vertex type of an edge alphabet.
pub type Vx<E> = <<E as Edge>::Set as VertexSet>::Vertex;

/// A break of a path: `from`'s edge is concatenated with `to`'s edge at `label`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow<V> {
    pub from: usize,
    pub to: usize,
    pub label: V,
}

/// A position on a path: a node or an arrow, by canonical index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marker {
    Node(usize),
    Arrow(usize),
}

impl fmt::Display for Marker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Marker::Node(i) => write!(f, "node{i}"),
            Marker::Arrow(i) => write!(f, "arrow{i}"),
        }
    }
}

/// A non-empty directed tree whose nodes are labeled by edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path<E: Edge> {
    nodes: Vec<E>,
    arrows: Vec<Arrow<Vx<E>>>,
}

/// A freshly built path together with the position maps from the input
/// indexing to canonical indexing.
#[derive(Clone, Debug)]
pub struct Built<E: Edge> {
    pub path: Path<E>,
    pub node_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

/// Result of replacing a subtree by another path.
#[derive(Clone, Debug)]
pub struct Swapped<E: Edge> {
    pub path: Path<E>,
    /// Old node -> new node, `None` for removed nodes.
    pub node_map: Vec<Option<usize>>,
    /// Old arrow -> new arrow, `None` for arrows inside the removed subtree.
    pub arrow_map: Vec<Option<usize>>,
    /// Replacement node -> new node.
    pub inserted_nodes: Vec<usize>,
    /// Replacement arrow -> new arrow.
    pub inserted_arrows: Vec<usize>,
}

/// Result of contracting a subtree to a single node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction<E: Edge> {
    pub path: Path<E>,
    /// The projection on nodes; every contracted node maps to `center`.
    pub node_map: Vec<usize>,
    /// The bijection from uncontracted arrows to arrows of the result.
    pub arrow_map: Vec<Option<usize>>,
    pub center: usize,
    pub contracted: Vec<usize>,
}

impl<E: Edge> Contraction<E> {
    /// Inverse of the projection on nodes away from the center.
    pub fn node_preimage(&self, new: usize) -> Option<usize> {
        if new == self.center {
            return None;
        }
        self.node_map.iter().position(|&m| m == new)
    }

    pub fn arrow_preimage(&self, new: usize) -> Option<usize> {
        self.arrow_map.iter().position(|&m| m == Some(new))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Dir {
    // Child consumes a target of the parent.
    Down,
    // Child feeds a source of the parent.
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Tok<E, V> {
    Node(E),
    Child(Dir, V),
    Close,
}

fn resolve_label<E: Edge>(from: &E, to: &E, arrow: usize) -> Result<Vx<E>> {
    let meet = from.target().intersection(to.source());
    match meet.len() {
        0 => Err(Error::EmptyIntersection(arrow)),
        1 => Ok(meet.only().expect("one element")),
        _ => Err(Error::AmbiguousIntersection),
    }
}

impl<E: Edge> Path<E> {
    pub fn single(edge: E) -> Self {
        Path {
            nodes: vec![edge],
            arrows: Vec::new(),
        }
    }

    /// Validates the tree and both path conditions and canonicalizes.
    pub fn build(nodes: Vec<E>, links: &[(usize, usize)]) -> Result<Built<E>> {
        let n = nodes.len();
        if n == 0 {
            return Err(Error::EmptyPath);
        }
        if links.len() + 1 != n {
            return Err(Error::NotATree);
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in links {
            if a >= n || b >= n || a == b {
                return Err(Error::NotATree);
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::NotATree);
            }
            parent[ra] = rb;
        }
        let mut arrows = Vec::with_capacity(links.len());
        for (i, &(a, b)) in links.iter().enumerate() {
            let label = resolve_label(&nodes[a], &nodes[b], i)?;
            arrows.push(Arrow {
                from: a,
                to: b,
                label,
            });
        }
        for i in 0..arrows.len() {
            for j in i + 1..arrows.len() {
                let (x, y) = (&arrows[i], &arrows[j]);
                if x.label == y.label && (x.from == y.from || x.to == y.to) {
                    return Err(Error::DuplicateBreak(i, j));
                }
            }
        }
        Ok(canonicalize_raw(nodes, arrows))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nodes(&self) -> &[E] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> E {
        self.nodes[i]
    }

    pub fn arrows(&self) -> &[Arrow<Vx<E>>] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> Arrow<Vx<E>> {
        self.arrows[i]
    }

    pub fn breaks(&self) -> usize {
        self.arrows.len()
    }

    pub fn markers(&self) -> impl Iterator<Item = Marker> {
        (0..self.nodes.len())
            .map(Marker::Node)
            .chain((0..self.arrows.len()).map(Marker::Arrow))
    }

    pub fn has_marker(&self, m: Marker) -> bool {
        match m {
            Marker::Node(i) => i < self.nodes.len(),
            Marker::Arrow(i) => i < self.arrows.len(),
        }
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.to == v)
            .map(|(i, _)| i)
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.from == v)
            .map(|(i, _)| i)
    }

    /// Nodes adjacent to `v`, in arrow order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter_map(|a| {
                if a.from == v {
                    Some(a.to)
                } else if a.to == v {
                    Some(a.from)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn arrow_between(&self, a: usize, b: usize) -> Option<usize> {
        self.arrows.iter().position(|x| x.from == a && x.to == b)
    }

    /// True if every node has at most one incoming and one outgoing arrow.
    pub fn is_chain(&self) -> bool {
        let mut ins = vec![0usize; self.len()];
        let mut outs = vec![0usize; self.len()];
        for a in &self.arrows {
            outs[a.from] += 1;
            ins[a.to] += 1;
        }
        ins.iter().zip(&outs).all(|(&i, &o)| i <= 1 && o <= 1)
    }

    /// Nodes of a chain in flow order; `None` if the path is not a chain.
    pub fn flow_order(&self) -> Option<Vec<usize>> {
        if !self.is_chain() {
            return None;
        }
        let mut start = (0..self.len()).filter(|&v| self.in_arrows(v).next().is_none());
        let mut cur = start.next()?;
        let mut order = vec![cur];
        while let Some(a) = self.out_arrows(cur).next() {
            cur = self.arrows[a].to;
            order.push(cur);
        }
        Some(order)
    }

    fn free_sources(&self, v: usize, inside: Option<&[bool]>) -> E::Set {
        let mut s = self.nodes[v].source();
        for a in &self.arrows {
            if a.to == v && inside.is_none_or(|m| m[a.from]) {
                s = s.difference(E::Set::singleton(a.label));
            }
        }
        s
    }

    fn free_targets(&self, v: usize, inside: Option<&[bool]>) -> E::Set {
        let mut t = self.nodes[v].target();
        for a in &self.arrows {
            if a.from == v && inside.is_none_or(|m| m[a.to]) {
                t = t.difference(E::Set::singleton(a.label));
            }
        }
        t
    }

    pub fn source(&self) -> E::Set {
        (0..self.len()).fold(E::Set::default(), |acc, v| {
            acc.union(self.free_sources(v, None))
        })
    }

    pub fn target(&self) -> E::Set {
        (0..self.len()).fold(E::Set::default(), |acc, v| {
            acc.union(self.free_targets(v, None))
        })
    }

    /// Source vertices with the node sourcing each of them.
    pub fn sourcing(&self) -> Vec<(Vx<E>, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            for x in self.free_sources(v, None).vertices() {
                out.push((x, v));
            }
        }
        out.sort();
        out
    }

    /// Target vertices with the node targeting each of them.
    pub fn targeting(&self) -> Vec<(Vx<E>, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            for x in self.free_targets(v, None).vertices() {
                out.push((x, v));
            }
        }
        out.sort();
        out
    }

    pub fn sourcing_node(&self, x: Vx<E>) -> Option<usize> {
        (0..self.len()).find(|&v| self.free_sources(v, None).contains(x))
    }

    pub fn targeting_node(&self, x: Vx<E>) -> Option<usize> {
        (0..self.len()).find(|&v| self.free_targets(v, None).contains(x))
    }

    fn subset_mask(&self, subtree: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.len()];
        for &v in subtree {
            if v >= self.len() {
                return Err(Error::BadSubtree);
            }
            mask[v] = true;
        }
        let count = mask.iter().filter(|&&b| b).count();
        if count == 0 {
            return Err(Error::BadSubtree);
        }
        let internal = self
            .arrows
            .iter()
            .filter(|a| mask[a.from] && mask[a.to])
            .count();
        // A subset of a tree is connected iff it spans count - 1 arrows.
        if internal + 1 != count {
            return Err(Error::BadSubtree);
        }
        Ok(mask)
    }

    /// Source and target of the subpath supported on `subtree`.
    pub fn subpath_ends(&self, subtree: &[usize]) -> Result<(E::Set, E::Set)> {
        let mask = self.subset_mask(subtree)?;
        let mut s = E::Set::default();
        let mut t = E::Set::default();
        for v in 0..self.len() {
            if mask[v] {
                s = s.union(self.free_sources(v, Some(&mask)));
                t = t.union(self.free_targets(v, Some(&mask)));
            }
        }
        Ok((s, t))
    }

    /// The subpath supported on `subtree` as a standalone path.
    pub fn subpath(&self, subtree: &[usize]) -> Result<Path<E>> {
        let mask = self.subset_mask(subtree)?;
        let keep: Vec<usize> = (0..self.len()).filter(|&v| mask[v]).collect();
        let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let nodes = keep.iter().map(|&v| self.nodes[v]).collect();
        let links: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .filter(|a| mask[a.from] && mask[a.to])
            .map(|a| (index[&a.from], index[&a.to]))
            .collect();
        Ok(Path::build(nodes, &links)?.path)
    }

    /// Joins `first` and `second` at the unique vertex of `t(first) ∩ s(second)`.
    pub fn concatenate(first: &Path<E>, second: &Path<E>) -> Result<Path<E>> {
        let meet = first.target().intersection(second.source());
        let k = match meet.len() {
            0 => return Err(Error::NotComposable),
            1 => meet.only().expect("one element"),
            _ => return Err(Error::AmbiguousIntersection),
        };
        let from = first.targeting_node(k).expect("target vertex has a node");
        let to = second.sourcing_node(k).expect("source vertex has a node");
        Self::join(first, from, second, to)
    }

    /// Disjoint union of two trees plus one arrow `first[from] -> second[to]`.
    pub fn join(first: &Path<E>, from: usize, second: &Path<E>, to: usize) -> Result<Path<E>> {
        let offset = first.len();
        let mut nodes = first.nodes.clone();
        nodes.extend_from_slice(&second.nodes);
        let mut links: Vec<(usize, usize)> = first.arrows.iter().map(|a| (a.from, a.to)).collect();
        links.extend(
            second
                .arrows
                .iter()
                .map(|a| (a.from + offset, a.to + offset)),
        );
        links.push((from, to + offset));
        Ok(Path::build(nodes, &links)?.path)
    }

    /// Replaces the subpath on `subtree` by `replacement`, which must have
    /// the same source and target.
    pub fn swap(&self, subtree: &[usize], replacement: &Path<E>) -> Result<Swapped<E>> {
        let mask = self.subset_mask(subtree)?;
        let (s, t) = self.subpath_ends(subtree)?;
        if s != replacement.source() || t != replacement.target() {
            return Err(Error::EndsMismatch);
        }
        let mut nodes = Vec::new();
        let mut old_to_raw = vec![None; self.len()];
        for v in 0..self.len() {
            if !mask[v] {
                old_to_raw[v] = Some(nodes.len());
                nodes.push(self.nodes[v]);
            }
        }
        let offset = nodes.len();
        nodes.extend_from_slice(&replacement.nodes);
        let mut links = Vec::new();
        let mut old_arrow_to_raw = vec![None; self.arrows.len()];
        for (i, a) in self.arrows.iter().enumerate() {
            let link = match (mask[a.from], mask[a.to]) {
                (false, false) => Some((old_to_raw[a.from].unwrap(), old_to_raw[a.to].unwrap())),
                (false, true) => {
                    let n = replacement
                        .sourcing_node(a.label)
                        .ok_or(Error::EndsMismatch)?;
                    Some((old_to_raw[a.from].unwrap(), n + offset))
                }
                (true, false) => {
                    let n = replacement
                        .targeting_node(a.label)
                        .ok_or(Error::EndsMismatch)?;
                    Some((n + offset, old_to_raw[a.to].unwrap()))
                }
                (true, true) => None,
            };
            if let Some(l) = link {
                old_arrow_to_raw[i] = Some(links.len());
                links.push(l);
            }
        }
        let inserted_offset = links.len();
        links.extend(
            replacement
                .arrows
                .iter()
                .map(|a| (a.from + offset, a.to + offset)),
        );
        let built = Path::build(nodes, &links)?;
        Ok(Swapped {
            node_map: old_to_raw
                .iter()
                .map(|r| r.map(|x| built.node_map[x]))
                .collect(),
            arrow_map: old_arrow_to_raw
                .iter()
                .map(|r| r.map(|x| built.arrow_map[x]))
                .collect(),
            inserted_nodes: (0..replacement.len())
                .map(|i| built.node_map[i + offset])
                .collect(),
            inserted_arrows: (0..replacement.arrows.len())
                .map(|i| built.arrow_map[i + inserted_offset])
                .collect(),
            path: built.path,
        })
    }

    /// Replaces the edge at `node` by a compatible path.
    pub fn refine(&self, node: usize, replacement: &Path<E>) -> Result<Swapped<E>> {
        self.swap(&[node], replacement)
    }

    /// Contracts the subtree to one node labeled `edge`, whose ends must
    /// agree with those of the subpath.
    pub fn contract(&self, subtree: &[usize], edge: E) -> Result<Contraction<E>> {
        let swapped = self.swap(subtree, &Path::single(edge))?;
        let center = swapped.inserted_nodes[0];
        let mut contracted: Vec<usize> = subtree.to_vec();
        contracted.sort_unstable();
        contracted.dedup();
        Ok(Contraction {
            node_map: swapped
                .node_map
                .iter()
                .map(|m| m.unwrap_or(center))
                .collect(),
            arrow_map: swapped.arrow_map,
            center,
            contracted,
            path: swapped.path,
        })
    }

    /// All one-node extensions at a free end.
    pub fn extensions(&self, alphabet: &Alphabet<E>) -> Vec<Path<E>> {
        let mut out = Vec::new();
        let n = self.len();
        let base_links: Vec<(usize, usize)> = self.arrows.iter().map(|a| (a.from, a.to)).collect();
        let mut push = |edge: E, link: (usize, usize)| {
            let mut nodes = self.nodes.clone();
            nodes.push(edge);
            let mut links = base_links.clone();
            links.push(link);
            if let Ok(b) = Path::build(nodes, &links) {
                out.push(b.path);
            }
        };
        for (k, v) in self.targeting() {
            for &e in alphabet.sourcing(k) {
                if self.nodes[v].target().intersection(e.source()).len() == 1 {
                    push(e, (v, n));
                }
            }
        }
        for (k, v) in self.sourcing() {
            for &e in alphabet.targeting(k) {
                if e.target().intersection(self.nodes[v].source()).len() == 1 {
                    push(e, (n, v));
                }
            }
        }
        out
    }
}

fn canonicalize_raw<E: Edge>(nodes: Vec<E>, arrows: Vec<Arrow<Vx<E>>>) -> Built<E> {
    let n = nodes.len();
    // neighbor lists: (key, neighbor, arrow index)
    let mut adj: Vec<Vec<((Dir, Vx<E>), usize, usize)>> = vec![Vec::new(); n];
    for (i, a) in arrows.iter().enumerate() {
        adj[a.from].push(((Dir::Down, a.label), a.to, i));
        adj[a.to].push(((Dir::Up, a.label), a.from, i));
    }
    for list in &mut adj {
        list.sort_by_key(|x| x.0);
    }

    let serialize =
        |root: usize, order: &mut Vec<usize>, via: &mut Vec<usize>| -> Vec<Tok<E, Vx<E>>> {
            let mut toks = Vec::with_capacity(3 * n);
            // explicit stack: (node, parent, next neighbor index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            toks.push(Tok::Node(nodes[root]));
            order.push(root);
            while let Some(top) = stack.last_mut() {
                let (v, p, i) = *top;
                if i < adj[v].len() {
                    top.2 += 1;
                    let (key, w, arrow) = adj[v][i];
                    if w == p {
                        continue;
                    }
                    toks.push(Tok::Child(key.0, key.1));
                    toks.push(Tok::Node(nodes[w]));
                    order.push(w);
                    via.push(arrow);
                    stack.push((w, v, 0));
                } else {
                    toks.push(Tok::Close);
                    stack.pop();
                }
            }
            toks
        };

    let mut best: Option<(Vec<Tok<E, Vx<E>>>, Vec<usize>, Vec<usize>)> = None;
    for root in 0..n {
        let mut order = Vec::with_capacity(n);
        let mut via = Vec::with_capacity(n.saturating_sub(1));
        let toks = serialize(root, &mut order, &mut via);
        if best.as_ref().is_none_or(|b| toks < b.0) {
            best = Some((toks, order, via));
        }
    }
    let (_, order, via) = best.expect("non-empty tree");
    let mut node_map = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        node_map[old] = new;
    }
    let mut arrow_map = vec![0; arrows.len()];
    let mut new_arrows = Vec::with_capacity(arrows.len());
    for (new, &old) in via.iter().enumerate() {
        arrow_map[old] = new;
        let a = arrows[old];
        new_arrows.push(Arrow {
            from: node_map[a.from],
            to: node_map[a.to],
            label: a.label,
        });
    }
    let new_nodes = order.iter().map(|&v| nodes[v]).collect();
    Built {
        path: Path {
            nodes: new_nodes,
            arrows: new_arrows,
        },
        node_map,
        arrow_map,
    }
}

/// An edge list indexed by the vertices edges source and target.
#[derive(Clone, Debug)]
pub struct Alphabet<E: Edge> {
    edges: Vec<E>,
    by_source: HashMap<Vx<E>, Vec<E>>,
    by_target: HashMap<Vx<E>, Vec<E>>,
}

impl<E: Edge> Alphabet<E> {
    pub fn new(edges: impl IntoIterator<Item = E>) -> Self {
        let mut list: Vec<E> = edges.into_iter().collect();
        list.sort();
        list.dedup();
        let mut by_source: HashMap<_, Vec<E>> = HashMap::new();
        let mut by_target: HashMap<_, Vec<E>> = HashMap::new();
        for &e in &list {
            for v in e.source().vertices() {
                by_source.entry(v).or_default().push(e);
            }
            for v in e.target().vertices() {
                by_target.entry(v).or_default().push(e);
            }
        }
        Alphabet {
            edges: list,
            by_source,
            by_target,
        }
    }

    pub fn edges(&self) -> &[E] {
        &self.edges
    }

    pub fn sourcing(&self, v: Vx<E>) -> &[E] {
        self.by_source.get(&v).map_or(&[], |x| x.as_slice())
    }

    pub fn targeting(&self, v: Vx<E>) -> &[E] {
        self.by_target.get(&v).map_or(&[], |x| x.as_slice())
    }
}

/// Breadth-first growth of all paths up to `max_len` nodes.
///
/// A path is kept and extended only while `admit` accepts it, so the
/// result is complete for any property that every path inherits from
/// some path with one leaf fewer. Output is sorted canonically.
pub fn grow_paths<E: Edge>(
    alphabet: &Alphabet<E>,
    max_len: usize,
    mut admit: impl FnMut(&Path<E>) -> bool,
) -> Vec<Path<E>> {
    let mut all = Vec::new();
    if max_len == 0 {
        return all;
    }
    let mut level: Vec<Path<E>> = alphabet
        .edges()
        .iter()
        .map(|&e| Path::single(e))
        .filter(|p| admit(p))
        .collect();
    let mut len = 1;
    loop {
        all.extend(level.iter().cloned());
        if len == max_len || level.is_empty() {
            break;
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for p in &level {
            for q in p.extensions(alphabet) {
                if !seen.contains(&q) && admit(&q) {
                    seen.insert(q.clone());
                    next.push(q);
                }
            }
        }
        level = next;
        len += 1;
    }
    all.sort();
    all
}

/// All paths with exactly `length` nodes, optionally with fixed ends.
pub fn enumerate_paths<E: Edge>(
    alphabet: &Alphabet<E>,
    length: usize,
    source: Option<E::Set>,
    target: Option<E::Set>,
) -> Vec<Path<E>> {
    grow_paths(alphabet, length, |_| true)
        .into_iter()
        .filter(|p| p.len() == length)
        .filter(|p| source.is_none_or(|s| p.source() == s))
        .filter(|p| target.is_none_or(|t| p.target() == t))
        .collect()
}
