//! Simplicial complexes stored as a canonical antichain of facets.
//!
//! Two degenerate complexes are kept apart throughout: the *void* complex has no
//! faces at all (`facets = []`), while the *irrelevant* complex has exactly one
//! face, the empty set (`facets = [∅]`).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{maximal_antichain, minimal_transversals, VertexSet, MAX_VERTICES};

/// Dimension of a complex: `max |F| - 1`, or `-∞` for the void complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dimension {
    NegInfinity,
    Finite(isize),
}

impl Dimension {
    pub fn finite(self) -> Option<isize> {
        match self {
            Dimension::NegInfinity => None,
            Dimension::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::NegInfinity => f.write_str("-inf"),
            Dimension::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets` on the vertex set `{1..=n}`.
    ///
    /// Duplicates and sets contained in other sets are dropped; the surviving
    /// facets are stored in canonical order.
    pub fn normalize<I>(facets: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::AmbientSize(n));
        }
        let ambient = VertexSet::full(n);
        let facets: Vec<VertexSet> = facets.into_iter().collect();
        if let Some(bad) = facets.iter().find(|f| !f.is_subset(ambient)) {
            let vertex = bad.difference(ambient).iter().next().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(Self::from_sets(n, facets))
    }

    /// Like [`SimplicialComplex::normalize`] but for already-validated input.
    pub(crate) fn from_sets(n: usize, facets: Vec<VertexSet>) -> Self {
        SimplicialComplex {
            n,
            facets: maximal_antichain(facets),
        }
    }

    /// Trusts that `facets` is already a canonically ordered antichain.
    pub(crate) fn from_antichain(n: usize, facets: Vec<VertexSet>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![] }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `{1..=n}`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    /// Boundary of the full simplex on `{1..=n}`: all `(n-1)`-element subsets.
    pub fn simplex_boundary(n: usize) -> Self {
        let full = VertexSet::full(n);
        Self::from_sets(n, full.iter().map(|v| full.without(v)).collect())
    }

    pub fn ambient_size(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [VertexSet::full(self.n)]
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Union of all faces.
    pub fn vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn dimension(&self) -> Dimension {
        match self.facets.last() {
            None => Dimension::NegInfinity,
            Some(f) => Dimension::Finite(f.len() as isize - 1),
        }
    }

    /// Largest facet cardinality, i.e. the Krull dimension of the face ring.
    pub fn max_facet_cardinality(&self) -> Option<usize> {
        self.facets.last().map(|f| f.len())
    }

    pub fn facet_cardinalities(&self) -> Result<BTreeSet<usize>> {
        if self.is_void() {
            return Err(Error::VoidComplex("facet_cardinalities"));
        }
        Ok(self.facets.iter().map(|f| f.len()).collect())
    }

    /// Every face, in canonical order.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Faces grouped by dimension: entry `k + 1` lists the faces of dimension `k`.
    pub fn faces_by_dimension(&self) -> Vec<Vec<VertexSet>> {
        let Some(top) = self.max_facet_cardinality() else {
            return vec![];
        };
        let mut out = vec![Vec::new(); top + 1];
        for face in self.faces() {
            out[face.len()].push(face);
        }
        out
    }

    /// Faces of dimension `k`, in canonical order.
    pub fn faces_of_dim(&self, k: isize) -> Vec<VertexSet> {
        if k < -1 {
            return vec![];
        }
        let size = (k + 1) as usize;
        let mut out: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| f.len() >= size)
            .flat_map(|f| f.subsets().filter(move |s| s.len() == size))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of faces of each dimension `-1, 0, ..., dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dimension().iter().map(Vec::len).collect()
    }

    /// `Σ_{k ≥ -1} (-1)^k f_k`, counted from the faces directly.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(idx, &count)| {
                // idx = k + 1
                if idx % 2 == 0 {
                    -(count as i64)
                } else {
                    count as i64
                }
            })
            .sum()
    }

    /// `lk(s) = {τ : τ ∩ s = ∅, τ ∪ s ∈ Δ}`.
    pub fn link(&self, s: VertexSet) -> Result<Self> {
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| s.is_subset(**f))
            .map(|f| f.difference(s))
            .collect();
        if facets.is_empty() {
            return Err(Error::NotAFace(s));
        }
        // removing a common subset preserves the antichain property
        let mut facets = facets;
        facets.sort_unstable();
        Ok(Self::from_antichain(self.n, facets))
    }

    /// Restriction to the faces inside `a`, relabelled onto `1..=|a|`.
    ///
    /// The result may have ambient size zero when `a` is empty.
    pub fn induced_subcomplex(&self, a: VertexSet) -> Self {
        let a = a.intersection(VertexSet::full(self.n));
        let facets = self
            .facets
            .iter()
            .map(|f| f.intersection(a).compress(a))
            .collect();
        Self::from_sets(a.len(), facets)
    }

    /// The subcomplex generated by all faces of dimension at least `j`.
    pub fn generated_skeleton(&self, j: isize) -> Result<Self> {
        if self.is_void() {
            return Err(Error::VoidComplex("generated_skeleton"));
        }
        let facets = self
            .facets
            .iter()
            .copied()
            .filter(|f| f.len() as isize > j)
            .collect();
        Ok(Self::from_antichain(self.n, facets))
    }

    /// The subcomplex whose facets are exactly the `i`-dimensional faces.
    pub fn pure_skeleton(&self, i: isize) -> Result<Self> {
        let dimension = match self.dimension() {
            Dimension::NegInfinity => return Err(Error::VoidComplex("pure_skeleton")),
            Dimension::Finite(d) => d,
        };
        if i > dimension {
            return Err(Error::DimensionTooLarge {
                requested: i,
                dimension,
            });
        }
        if i < -1 {
            return Err(Error::DimensionTooLarge {
                requested: i,
                dimension,
            });
        }
        Ok(Self::from_antichain(self.n, self.faces_of_dim(i)))
    }

    /// Inclusion-minimal subsets of `{1..=n}` that are not faces.
    ///
    /// A set fails to be a face exactly when it meets the complement of every
    /// facet, so these are the minimal transversals of the facet complements.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>> {
        if self.is_void() {
            return Err(Error::VoidComplex("minimal_nonfaces"));
        }
        Ok(self.minimal_nonfaces_unchecked())
    }

    /// Also defined on the void complex, where the only minimal non-face is `∅`.
    pub(crate) fn minimal_nonfaces_unchecked(&self) -> Vec<VertexSet> {
        let complements: Vec<VertexSet> =
            self.facets.iter().map(|f| f.complement(self.n)).collect();
        minimal_transversals(&complements)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "> on {}", self.n)
    }
}
