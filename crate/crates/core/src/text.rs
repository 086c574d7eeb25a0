//! Text forms of edges, paths and elements, and a parser for path specs.
//!
//! Edges print as `{a,b>c}` (higraph) or `[0;a.o,b.u>c.o]` (bigraph). Over
//! the one-vertex loop higraph, bigraph edges print as the aliases `Doo`,
//! `Dos`, `Duo`, `Dus`, `Bss`, `Bsu`, `Bus`, `Buu`: `D` for interior, `B` for
//! boundary, then the source and target flavors.
//!
//! A path prints as a `·`-joined chain in flow order when it is a chain, and
//! otherwise in the nested canonical form
//! `edge(>v=child,<w=child)`, where `>v=` attaches a child that consumes the
//! target `v` and `<w=` attaches a child that feeds the source `w`.
//!
//! Path specs accept both forms, and the direction marker of an attachment
//! may be omitted when only one direction fits.

use crate::algebra::Element;
use crate::bigraph::{BiEdge, BiSet, BiVertex, Bigraph, Flavor};
use crate::error::{Error, Result};
use crate::higraph::{HiEdge, Higraph, VSet, VertexId};
use crate::moves::GluingSequence;
use crate::path::{Edge, Path, VertexSet, Vx};

/// How a family of edges is written and read.
pub trait Notation {
    type E: Edge;

    fn edge_text(&self, e: &Self::E) -> String;
    fn vertex_text(&self, v: Vx<Self::E>) -> String;
    /// Parses a complete edge token.
    fn parse_edge(&self, token: &str, offset: usize) -> Result<Self::E>;
    fn parse_vertex(&self, token: &str, offset: usize) -> Result<Vx<Self::E>>;
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn split_ends(body: &str, offset: usize) -> Result<(&str, &str)> {
    let mut parts = body.splitn(2, '>');
    let s = parts.next().unwrap_or("");
    let t = parts
        .next()
        .ok_or_else(|| parse_err(offset, "edge needs '>' between source and target"))?;
    Ok((s, t))
}

fn tokens(list: &str) -> impl Iterator<Item = &str> {
    list.split(',').map(str::trim).filter(|t| !t.is_empty())
}

pub struct HiNotation<'a> {
    pub graph: &'a Higraph,
}

impl HiNotation<'_> {
    fn set(&self, list: &str, offset: usize) -> Result<VSet> {
        let mut ids = Vec::new();
        for t in tokens(list) {
            ids.push(self.parse_vertex(t, offset)?);
        }
        Ok(VSet::from_ids(ids))
    }
}

impl Notation for HiNotation<'_> {
    type E = HiEdge;

    fn edge_text(&self, e: &HiEdge) -> String {
        self.graph.edge_text(*e)
    }

    fn vertex_text(&self, v: VertexId) -> String {
        self.graph.name(v).to_string()
    }

    fn parse_edge(&self, token: &str, offset: usize) -> Result<HiEdge> {
        let body = token
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| {
                parse_err(
                    offset,
                    format!("expected an edge like {{a>b}}, found {token:?}"),
                )
            })?;
        let (s, t) = split_ends(body, offset)?;
        let e = HiEdge::new(self.set(s, offset)?, self.set(t, offset)?);
        if !self.graph.contains(&e) {
            return Err(parse_err(
                offset,
                format!("{} is not an edge of the higraph", self.graph.edge_text(e)),
            ));
        }
        Ok(e)
    }

    fn parse_vertex(&self, token: &str, offset: usize) -> Result<VertexId> {
        self.graph
            .vertex(token.trim())
            .ok_or_else(|| Error::UndeclaredVertex(token.trim().to_string()))
            .map_err(|e| parse_err(offset, e.to_string()))
    }
}

pub struct BiNotation<'a> {
    pub graph: &'a Bigraph,
}

impl BiNotation<'_> {
    fn base(&self) -> &Higraph {
        self.graph.base()
    }

    /// True for the one-vertex loop higraph, where aliases apply.
    pub fn uses_aliases(&self) -> bool {
        let b = self.base();
        b.names().len() == 1 && b.edges().len() == 1 && b.edges()[0].is_loop()
    }

    fn set_text(&self, s: BiSet) -> String {
        let mut toks: Vec<String> = s
            .vertices()
            .into_iter()
            .map(|v| self.vertex_text(v))
            .collect();
        toks.sort();
        toks.join(",")
    }

    fn set(&self, list: &str, offset: usize) -> Result<BiSet> {
        let mut s = BiSet::default();
        for t in tokens(list) {
            s = s.union(BiSet::singleton(self.parse_vertex(t, offset)?));
        }
        Ok(s)
    }

    fn alias(&self, token: &str, offset: usize) -> Result<BiEdge> {
        let c: Vec<char> = token.chars().collect();
        let bad = || parse_err(offset, format!("unknown edge {token:?}"));
        if c.len() != 3 {
            return Err(bad());
        }
        let mu = match c[0] {
            'D' => false,
            'B' => true,
            _ => return Err(bad()),
        };
        let fs = Flavor::from_letter(c[1]).ok_or_else(bad)?;
        let ft = Flavor::from_letter(c[2]).ok_or_else(bad)?;
        let k = VertexId(0);
        Ok(BiEdge::new(
            mu,
            BiSet::singleton(BiVertex {
                base: k,
                flavor: fs,
            }),
            BiSet::singleton(BiVertex {
                base: k,
                flavor: ft,
            }),
        ))
    }

    /// The edge text used in listings: `[mu; src > tgt]`.
    pub fn listing_text(&self, e: &BiEdge) -> String {
        format!(
            "[{}; {} > {}]",
            e.mu as u8,
            self.set_text(e.source).replace(',', ", "),
            self.set_text(e.target).replace(',', ", ")
        )
    }
}

impl Notation for BiNotation<'_> {
    type E = BiEdge;

    fn edge_text(&self, e: &BiEdge) -> String {
        if self.uses_aliases() && e.source.len() == 1 && e.target.len() == 1 {
            let f = |s: BiSet| s.vertices()[0].flavor.letter();
            return format!(
                "{}{}{}",
                if e.mu { 'B' } else { 'D' },
                f(e.source),
                f(e.target)
            );
        }
        format!(
            "[{};{}>{}]",
            e.mu as u8,
            self.set_text(e.source),
            self.set_text(e.target)
        )
    }

    fn vertex_text(&self, v: BiVertex) -> String {
        format!("{}.{}", self.base().name(v.base), v.flavor)
    }

    fn parse_edge(&self, token: &str, offset: usize) -> Result<BiEdge> {
        let e = if let Some(body) = token.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let (mu, rest) = body
                .split_once(';')
                .ok_or_else(|| parse_err(offset, "bigraph edge needs 'mu;' prefix"))?;
            let mu = match mu.trim() {
                "0" => false,
                "1" => true,
                other => {
                    return Err(parse_err(
                        offset,
                        format!("mu must be 0 or 1, found {other:?}"),
                    ))
                }
            };
            let (s, t) = split_ends(rest, offset)?;
            BiEdge::new(mu, self.set(s, offset)?, self.set(t, offset)?)
        } else if self.uses_aliases() {
            self.alias(token, offset)?
        } else {
            return Err(parse_err(
                offset,
                format!("expected an edge like [0;a.o>b.s], found {token:?}"),
            ));
        };
        if !self.graph.contains(&e) {
            return Err(Error::EdgeNotInBigraph(self.edge_text(&e)));
        }
        Ok(e)
    }

    fn parse_vertex(&self, token: &str, offset: usize) -> Result<BiVertex> {
        let token = token.trim();
        let (name, flavor) = token.rsplit_once('.').ok_or_else(|| {
            parse_err(offset, format!("bigraph vertex needs a flavor: {token:?}"))
        })?;
        let mut fl = flavor.chars();
        let flavor = match (fl.next().and_then(Flavor::from_letter), fl.next()) {
            (Some(f), None) => f,
            _ => return Err(parse_err(offset, format!("unknown flavor in {token:?}"))),
        };
        let base = self.base().vertex(name).ok_or_else(|| {
            parse_err(offset, format!("REFERENCE: vertex {name} is not declared"))
        })?;
        Ok(BiVertex { base, flavor })
    }
}

/// The nested canonical form.
pub fn canonical<N: Notation>(n: &N, p: &Path<N::E>) -> String {
    fn node<N: Notation>(n: &N, p: &Path<N::E>, v: usize, out: &mut String) {
        out.push_str(&n.edge_text(&p.node(v)));
        // children of v are the nodes whose parent arrow touches v
        let children: Vec<usize> = (v + 1..p.len())
            .filter(|&w| {
                let a = p.arrow(w - 1);
                (a.from == v && a.to == w) || (a.to == v && a.from == w)
            })
            .collect();
        if children.is_empty() {
            return;
        }
        out.push('(');
        for (i, &w) in children.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let a = p.arrow(w - 1);
            out.push(if a.from == v { '>' } else { '<' });
            out.push_str(&n.vertex_text(a.label));
            out.push('=');
            node(n, p, w, out);
        }
        out.push(')');
    }
    let mut out = String::new();
    node(n, p, 0, &mut out);
    out
}

/// Flow-order chain text when possible, canonical form otherwise.
pub fn display<N: Notation>(n: &N, p: &Path<N::E>) -> String {
    match p.flow_order() {
        Some(order) => order
            .iter()
            .map(|&v| n.edge_text(&p.node(v)))
            .collect::<Vec<_>>()
            .join("·"),
        None => canonical(n, p),
    }
}

/// Terms sorted by their text and joined by ` + `; zero prints as `0`.
pub fn element_text<N: Notation>(n: &N, x: &Element<N::E>) -> String {
    let mut terms: Vec<String> = x.iter().map(|p| display(n, p)).collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort();
    terms.join(" + ")
}

/// One line per step: `kind@marker : path`.
pub fn sequence_lines(n: &BiNotation<'_>, seq: &GluingSequence) -> Vec<String> {
    seq.steps
        .iter()
        .map(|s| format!("{}@{} : {}", s.kind, s.marker, display(n, s.path())))
        .collect()
}

struct Parser<'a, N: Notation> {
    n: &'a N,
    src: &'a str,
    pos: usize,
}

impl<'a, N: Notation> Parser<'a, N> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        parse_err(self.pos, message)
    }

    fn edge(&mut self) -> Result<N::E> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let len = match rest.chars().next() {
            Some('[') => rest.find(']').map(|i| i + 1),
            Some('{') => rest.find('}').map(|i| i + 1),
            Some(c) if c.is_alphanumeric() => Some(
                rest.find(|c: char| !c.is_alphanumeric())
                    .unwrap_or(rest.len()),
            ),
            _ => None,
        }
        .ok_or_else(|| self.err("expected an edge"))?;
        self.pos += len;
        self.n.parse_edge(&self.src[start..start + len], start)
    }

    fn separator(&mut self) -> bool {
        self.eat("·") || self.eat("*")
    }

    /// `item (· item)*`, items joined by concatenation.
    fn path(&mut self) -> Result<Path<N::E>> {
        let mut acc = self.item()?;
        while self.separator() {
            let at = self.pos;
            let next = self.item()?;
            acc = Path::concatenate(&acc, &next).map_err(|e| parse_err(at, e.to_string()))?;
        }
        Ok(acc)
    }

    fn item(&mut self) -> Result<Path<N::E>> {
        let e = self.edge()?;
        let mut nodes = vec![e];
        let mut links = Vec::new();
        if self.eat("(") {
            loop {
                self.skip_ws();
                let at = self.pos;
                let dir = if self.eat(">") {
                    Some(true)
                } else if self.eat("<") {
                    Some(false)
                } else {
                    None
                };
                self.skip_ws();
                let eq = self
                    .rest()
                    .find('=')
                    .ok_or_else(|| self.err("attachment needs 'vertex='"))?;
                let vtok = &self.src[self.pos..self.pos + eq];
                let v = self.n.parse_vertex(vtok, self.pos)?;
                self.pos += eq + 1;
                let child = self.path()?;
                let down_ok = e.target().contains(v) && child.source().contains(v);
                let up_ok = e.source().contains(v) && child.target().contains(v);
                let down = match dir {
                    Some(d) => d,
                    None if down_ok && !up_ok => true,
                    None if up_ok && !down_ok => false,
                    None => {
                        return Err(parse_err(
                            at,
                            "attachment direction is ambiguous or impossible",
                        ))
                    }
                };
                let offset = nodes.len();
                let link = if down {
                    let w = child
                        .sourcing_node(v)
                        .ok_or_else(|| parse_err(at, "child does not source the vertex"))?;
                    (0, w + offset)
                } else {
                    let w = child
                        .targeting_node(v)
                        .ok_or_else(|| parse_err(at, "child does not target the vertex"))?;
                    (w + offset, 0)
                };
                nodes.extend_from_slice(child.nodes());
                links.extend(
                    child
                        .arrows()
                        .iter()
                        .map(|a| (a.from + offset, a.to + offset)),
                );
                links.push(link);
                if self.eat(")") {
                    break;
                }
                if !self.eat(",") {
                    return Err(self.err("expected ',' or ')'"));
                }
            }
        }
        let at = self.pos;
        Path::build(nodes, &links)
            .map(|b| b.path)
            .map_err(|e| parse_err(at, e.to_string()))
    }
}

pub fn parse_path<N: Notation>(n: &N, spec: &str) -> Result<Path<N::E>> {
    let mut p = Parser {
        n,
        src: spec,
        pos: 0,
    };
    let path = p.path()?;
    p.skip_ws();
    if p.pos != spec.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(path)
}

pub fn parse_edge<N: Notation>(n: &N, spec: &str) -> Result<N::E> {
    let mut p = Parser {
        n,
        src: spec,
        pos: 0,
    };
    let e = p.edge()?;
    p.skip_ws();
    if p.pos != spec.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}
