//! Linear combinations of paths with coefficients in the two-element field.

use std::collections::{btree_map, BTreeMap, BTreeSet};

use crate::error::Error;
use crate::path::{Edge, Path};

/// A finite set of paths, read as their sum over F2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<E: Edge> {
    terms: BTreeSet<Path<E>>,
}

impl<E: Edge> Default for Element<E> {
    fn default() -> Self {
        Element {
            terms: BTreeSet::new(),
        }
    }
}

impl<E: Edge> Element<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path<E>) -> Self {
        let mut e = Self::zero();
        e.toggle(p);
        e
    }

    /// Adds one copy of `p`; a second copy cancels the first.
    pub fn toggle(&mut self, p: Path<E>) {
        if !self.terms.remove(&p) {
            self.terms.insert(p);
        }
    }

    pub fn add(&mut self, other: &Element<E>) {
        for p in &other.terms {
            self.toggle(p.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, p: &Path<E>) -> bool {
        self.terms.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Path<E>> {
        self.terms.iter()
    }

    pub fn terms(&self) -> &BTreeSet<Path<E>> {
        &self.terms
    }

    /// The grading of a homogeneous element under `grade`, `None` if the
    /// element is zero or mixed.
    pub fn degree(&self, grade: impl Fn(&Path<E>) -> i64) -> Option<i64> {
        let mut it = self.terms.iter().map(grade);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// All concatenations `p · q`; undefined products are zero.
    pub fn product(&self, other: &Element<E>) -> Product<E> {
        let mut out = Multiset::new();
        let mut ambiguous = 0;
        for p in &self.terms {
            for q in &other.terms {
                match Path::concatenate(p, q) {
                    Ok(r) => out.insert(r),
                    Err(Error::AmbiguousIntersection) => ambiguous += 1,
                    Err(_) => {}
                }
            }
        }
        Product {
            terms: out,
            ambiguous,
        }
    }
}

impl<E: Edge> FromIterator<Path<E>> for Element<E> {
    fn from_iter<I: IntoIterator<Item = Path<E>>>(iter: I) -> Self {
        let mut e = Self::zero();
        for p in iter {
            e.toggle(p);
        }
        e
    }
}

/// The path pairing: parity of the number of common terms.
pub fn pair<E: Edge>(a: &Element<E>, b: &Element<E>) -> bool {
    a.terms.intersection(&b.terms).count() % 2 == 1
}

/// Output of a product along with the count of pairs skipped because
/// their ends met in more than one vertex.
#[derive(Clone, Debug)]
pub struct Product<E: Edge> {
    pub terms: Multiset<E>,
    pub ambiguous: usize,
}

/// Paths counted with multiplicity, before reduction mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiset<E: Edge> {
    counts: BTreeMap<Path<E>, usize>,
}

impl<E: Edge> Default for Multiset<E> {
    fn default() -> Self {
        Multiset {
            counts: BTreeMap::new(),
        }
    }
}

impl<E: Edge> Multiset<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: Path<E>) {
        *self.counts.entry(p).or_insert(0) += 1;
    }

    pub fn extend(&mut self, other: Multiset<E>) {
        for (p, c) in other.counts {
            *self.counts.entry(p).or_insert(0) += c;
        }
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn multiplicity(&self, p: &Path<E>) -> usize {
        self.counts.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Path<E>, usize> {
        self.counts.iter()
    }

    pub fn reduce(&self) -> Element<E> {
        Element {
            terms: self
                .counts
                .iter()
                .filter(|(_, &c)| c % 2 == 1)
                .map(|(p, _)| p.clone())
                .collect(),
        }
    }

    pub fn report(&self) -> ExpansionReport {
        ExpansionReport {
            total: self.total(),
            cancelled_pairs: self.counts.values().map(|c| c / 2).sum(),
            survivors: self.counts.values().filter(|&&c| c % 2 == 1).count(),
        }
    }
}

impl<E: Edge> FromIterator<Path<E>> for Multiset<E> {
    fn from_iter<I: IntoIterator<Item = Path<E>>>(iter: I) -> Self {
        let mut m = Self::new();
        for p in iter {
            m.insert(p);
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    pub total: usize,
    pub cancelled_pairs: usize,
    pub survivors: usize,
}

/// Outcome of checking a structure equation `δD = D∘D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub expansion: ExpansionReport,
    /// Number of terms of `D∘D` over F2.
    pub product_terms: usize,
    pub ambiguous_products: usize,
    pub equal: bool,
}

impl std::fmt::Display for StructureReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "expansion={} cancelled_pairs={} survivors={} equal={}",
            self.expansion.total,
            self.expansion.cancelled_pairs,
            self.expansion.survivors,
            self.equal
        )
    }
}
