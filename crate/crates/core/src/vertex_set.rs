//! Sets of vertices drawn from `1..=63`, packed into a single machine word.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// Largest ambient size a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 63;

/// A finite set of vertices `{v : 1 <= v <= 63}`.
///
/// Vertex `v` is stored in bit `v - 1`. Ordering is by cardinality first, then
/// lexicographic on the ascending list of members, so `{3} < {1,2} < {1,3} < {2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits & !(1 << 63))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "ambient size {n} exceeds {MAX_VERTICES}");
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    /// Builds a set from 1-based vertex labels, rejecting anything outside `1..=n`.
    pub fn try_from_vertices<I>(vertices: I, n: usize) -> Result<Self, Error>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > n || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    /// Builds a set from 1-based vertex labels.
    ///
    /// Panics on a label outside `1..=63`; use [`VertexSet::try_from_vertices`] for
    /// untrusted input.
    pub fn of(vertices: &[usize]) -> Self {
        Self::try_from_vertices(vertices.iter().copied(), MAX_VERTICES)
            .expect("vertex label out of range")
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(self.0 | (1 << (v - 1)))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_superset(self, other: VertexSet) -> bool {
        other.is_subset(self)
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// `{1..=n} \ self`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        VertexSet::full(n).difference(self)
    }

    /// Largest member, or `None` for the empty set.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, including `∅` and `self`, in decreasing bit order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// Relabels the members of `self` lying in `support` onto `1..=|support|`,
    /// preserving order.
    pub fn compress(self, support: VertexSet) -> Self {
        let mut out = 0u64;
        for (i, v) in support.iter().enumerate() {
            if self.contains(v) {
                out |= 1 << i;
            }
        }
        VertexSet(out)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // the smallest differing vertex belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    #[inline]
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

/// All `k`-element subsets of `{1..=n}` in increasing bit order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n <= MAX_VERTICES);
    let limit = 1u64 << n;
    let start = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::successors(start, move |&x| {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        let next = (((r ^ x) >> 2) / c) | r;
        (next < limit).then_some(next)
    })
    .map(VertexSet)
}

/// Sorts and deduplicates, then keeps only the inclusion-maximal sets.
pub(crate) fn maximal_antichain(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.cmp(a));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Sorts and deduplicates, then keeps only the inclusion-minimal sets.
pub(crate) fn minimal_antichain(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable();
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Inclusion-minimal sets meeting every set in `edges`.
///
/// Computed incrementally, one edge at a time. An empty edge admits no
/// transversal; an empty edge list has the single transversal `∅`.
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut edges = edges.to_vec();
    edges.sort_unstable();
    edges.dedup();
    let mut current = vec![VertexSet::EMPTY];
    for &edge in &edges {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if !t.is_disjoint(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        current = minimal_antichain(next);
        if current.is_empty() {
            break;
        }
    }
    current
}
