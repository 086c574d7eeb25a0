//! Gluing moves on bigraph paths, marker transport and gluing sequences.

use std::fmt;

use crate::bigraph::{BiEdge, BiPath, Bigraph, Flavor};
use crate::error::{Error, Result};
use crate::path::{Contraction, Marker};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    Ia,
    Ib,
    II,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Ia => "Ia",
            MoveKind::Ib => "Ib",
            MoveKind::II => "II",
        })
    }
}

/// The node together with its adjacent interior nodes, sorted.
pub fn star_interior(p: &BiPath, node: usize) -> Vec<usize> {
    let mut star = vec![node];
    star.extend(p.neighbors(node).into_iter().filter(|&w| !p.node(w).mu));
    star.sort_unstable();
    star
}

/// The move a marker would perform: its kind, the subtree it contracts,
/// and the replacement edge. Membership is not checked here.
fn candidate(p: &BiPath, x: Marker) -> Option<(MoveKind, Vec<usize>, BiEdge)> {
    match x {
        Marker::Arrow(i) => {
            let a = *p.arrows().get(i)?;
            let (m1, m2) = (p.node(a.from).mu, p.node(a.to).mu);
            let kind = match (m1, m2) {
                (false, false) => MoveKind::Ia,
                (true, true) => MoveKind::II,
                _ => return None,
            };
            let sub = vec![a.from, a.to];
            let (s, t) = p.subpath_ends(&sub).ok()?;
            Some((kind, sub, BiEdge::new(kind == MoveKind::II, s, t)))
        }
        Marker::Node(v) => {
            if v >= p.len() || !p.node(v).mu {
                return None;
            }
            let star = star_interior(p, v);
            let (s, t) = p.subpath_ends(&star).ok()?;
            if s.count(Flavor::S) != 0 || t.count(Flavor::U) != 0 {
                return None;
            }
            Some((MoveKind::Ib, star, BiEdge::new(false, s, t)))
        }
    }
}

/// The result of a gluing move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glued {
    pub marker: Marker,
    pub kind: MoveKind,
    pub contraction: Contraction<BiEdge>,
}

impl Glued {
    pub fn path(&self) -> &BiPath {
        &self.contraction.path
    }
}

/// Applies the move at `x`, or reports that the marker is not valid.
pub fn apply_move(g: &Bigraph, p: &BiPath, x: Marker) -> Result<Glued> {
    if !p.has_marker(x) {
        return Err(Error::NoSuchMarker(x));
    }
    let (kind, sub, edge) = candidate(p, x).ok_or(Error::InvalidMarker(x))?;
    if !g.contains(&edge) {
        return Err(Error::InvalidMarker(x));
    }
    let contraction = p
        .contract(&sub, edge)
        .map_err(|_| Error::InvalidMarker(x))?;
    Ok(Glued {
        marker: x,
        kind,
        contraction,
    })
}

pub fn is_valid(g: &Bigraph, p: &BiPath, x: Marker) -> bool {
    apply_move(g, p, x).is_ok()
}

/// All valid markers with their move kinds, nodes first.
pub fn valid_markers(g: &Bigraph, p: &BiPath) -> Vec<(Marker, MoveKind)> {
    p.markers()
        .filter_map(|x| apply_move(g, p, x).ok().map(|m| (x, m.kind)))
        .collect()
}

/// Every gluing of `p` at a valid marker.
pub fn all_moves(g: &Bigraph, p: &BiPath) -> Vec<Glued> {
    p.markers()
        .filter_map(|x| apply_move(g, p, x).ok())
        .collect()
}

/// Transports a marker of the original path across the move `first`.
pub fn pi_tilde(p: &BiPath, first: &Glued, x: Marker) -> Result<Marker> {
    let c = &first.contraction;
    match x {
        Marker::Node(v) => {
            if v >= p.len() {
                return Err(Error::NoSuchMarker(x));
            }
            Ok(Marker::Node(c.node_map[v]))
        }
        Marker::Arrow(i) => {
            if i >= p.breaks() {
                return Err(Error::NoSuchMarker(x));
            }
            let Some(image) = c.arrow_map[i] else {
                return Err(Error::InContractedArrows(x));
            };
            let a = p.arrow(i);
            if let Marker::Node(x1) = first.marker {
                if a.label.flavor.is_boundary() {
                    if a.to == x1 {
                        return Ok(Marker::Node(c.node_map[a.from]));
                    }
                    if a.from == x1 {
                        return Ok(Marker::Node(c.node_map[a.to]));
                    }
                }
            }
            Ok(Marker::Arrow(image))
        }
    }
}

/// Pulls a marker of the glued path back to the original path.
///
/// A boundary node next to the contracted node pulls back to the arrow
/// joining it to the Ib node only when such an arrow exists; a boundary node
/// attached to one of the absorbed interior nodes pulls back to itself.
pub fn pi_tilde_inv(p: &BiPath, first: &Glued, y: Marker) -> Result<Marker> {
    let c = &first.contraction;
    let q = &c.path;
    if !q.has_marker(y) {
        return Err(Error::NoSuchMarker(y));
    }
    let center = c.center;
    match y {
        Marker::Arrow(j) => Ok(Marker::Arrow(c.arrow_preimage(j).expect("arrow bijection"))),
        Marker::Node(w) => {
            match first.marker {
                Marker::Node(x1) => {
                    if w == center {
                        return Ok(Marker::Node(x1));
                    }
                    if q.node(w).mu {
                        let joining = q
                            .arrow_between(w, center)
                            .or_else(|| q.arrow_between(center, w));
                        if let Some(j) = joining {
                            let old = c.arrow_preimage(j).expect("arrow bijection");
                            let a = p.arrow(old);
                            if a.from == x1 || a.to == x1 {
                                return Ok(Marker::Arrow(old));
                            }
                        }
                    }
                }
                Marker::Arrow(a1) => {
                    if w == center {
                        let a = p.arrow(a1);
                        return Ok(Marker::Node(if a.label.flavor == Flavor::U {
                            a.to
                        } else {
                            a.from
                        }));
                    }
                }
            }
            Ok(Marker::Node(
                c.node_preimage(w).expect("node off the center"),
            ))
        }
    }
}

/// A chain of moves starting at `initial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingSequence {
    pub initial: BiPath,
    pub steps: Vec<Glued>,
}

impl GluingSequence {
    pub fn terminal(&self) -> &BiPath {
        self.steps.last().map_or(&self.initial, |s| s.path())
    }

    pub fn markers(&self) -> Vec<Marker> {
        self.steps.iter().map(|s| s.marker).collect()
    }
}

/// Populates the triangular matrix column by column; succeeds iff the
/// tuple is completely valid. Failing cells are reported 1-based, as
/// (row, column).
pub fn tuple_to_sequence(g: &Bigraph, p: &BiPath, tuple: &[Marker]) -> Result<GluingSequence> {
    for (i, &x) in tuple.iter().enumerate() {
        if tuple[..i].contains(&x) || !is_valid(g, p, x) {
            return Err(Error::NotCompletelyValid { row: i + 1, col: 1 });
        }
    }
    let mut column: Vec<Marker> = tuple.to_vec();
    let mut path = p.clone();
    let mut steps = Vec::with_capacity(tuple.len());
    for j in 0..tuple.len() {
        let step = apply_move(g, &path, column[j]).map_err(|_| Error::NotCompletelyValid {
            row: j + 1,
            col: j + 1,
        })?;
        for i in j + 1..tuple.len() {
            let moved = pi_tilde(&path, &step, column[i])
                .ok()
                .filter(|&y| is_valid(g, step.path(), y));
            column[i] = moved.ok_or(Error::NotCompletelyValid {
                row: i + 1,
                col: j + 2,
            })?;
        }
        path = step.path().clone();
        steps.push(step);
    }
    Ok(GluingSequence {
        initial: p.clone(),
        steps,
    })
}

pub fn is_completely_valid(g: &Bigraph, p: &BiPath, tuple: &[Marker]) -> bool {
    tuple_to_sequence(g, p, tuple).is_ok()
}

/// Pulls every step back to the initial path.
pub fn sequence_to_tuple(seq: &GluingSequence) -> Vec<Marker> {
    let k = seq.steps.len();
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let mut x = seq.steps[i].marker;
        for j in (0..i).rev() {
            let before = if j == 0 {
                &seq.initial
            } else {
                seq.steps[j - 1].path()
            };
            x = pi_tilde_inv(before, &seq.steps[j], x).expect("markers stay defined");
        }
        out.push(x);
    }
    out
}

/// All `k`-step gluing sequences from `p`, depth first in marker order.
pub fn gluing_sequences(
    g: &Bigraph,
    p: &BiPath,
    k: usize,
    terminal: Option<&BiPath>,
) -> Vec<GluingSequence> {
    fn dfs(
        g: &Bigraph,
        path: &BiPath,
        k: usize,
        terminal: Option<&BiPath>,
        stack: &mut Vec<Glued>,
        initial: &BiPath,
        out: &mut Vec<GluingSequence>,
    ) {
        if stack.len() == k {
            if terminal.is_none_or(|t| t == path) {
                out.push(GluingSequence {
                    initial: initial.clone(),
                    steps: stack.clone(),
                });
            }
            return;
        }
        for m in all_moves(g, path) {
            let next = m.path().clone();
            stack.push(m);
            dfs(g, &next, k, terminal, stack, initial, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    dfs(g, p, k, terminal, &mut Vec::new(), p, &mut out);
    out
}

/// The transposed 2-tuple, checked to be completely valid.
pub fn transpose_pair(g: &Bigraph, p: &BiPath, pair: (Marker, Marker)) -> Result<(Marker, Marker)> {
    tuple_to_sequence(g, p, &[pair.0, pair.1])?;
    tuple_to_sequence(g, p, &[pair.1, pair.0])?;
    Ok((pair.1, pair.0))
}

/// How the contracted subtrees of two valid markers overlap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Interaction {
    Disjoint,
    /// Two interior arrows sharing an interior node.
    InteriorChain,
    /// Two boundary arrows sharing a boundary node.
    BoundaryChain,
    /// An Ib node and an interior arrow at one of its interior neighbors.
    StarAndInteriorArrow,
    /// Two Ib nodes sharing an interior neighbor.
    TwoStars,
    /// An Ib node and a boundary arrow at that node.
    StarAndBoundaryArrow,
    Unexpected,
}

pub fn interaction(g: &Bigraph, p: &BiPath, x: Marker, y: Marker) -> Option<Interaction> {
    let a = apply_move(g, p, x).ok()?;
    let b = apply_move(g, p, y).ok()?;
    let ca = &a.contraction.contracted;
    let cb = &b.contraction.contracted;
    if !ca.iter().any(|v| cb.contains(v)) {
        return Some(Interaction::Disjoint);
    }
    use MoveKind::*;
    Some(match (a.kind, b.kind) {
        (Ia, Ia) => Interaction::InteriorChain,
        (II, II) => Interaction::BoundaryChain,
        (Ib, Ia) | (Ia, Ib) => Interaction::StarAndInteriorArrow,
        (Ib, Ib) => Interaction::TwoStars,
        (Ib, II) | (II, Ib) => Interaction::StarAndBoundaryArrow,
        _ => Interaction::Unexpected,
    })
}
