//! Alexander duality and squarefree monomial ideals.

use std::collections::BTreeSet;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::{k_subsets, minimal_antichain, minimal_transversals, VertexSet};

/// A squarefree monomial ideal in `K[x_1, ..., x_n]`, stored by the supports of its
/// minimal generators.
///
/// The zero ideal has no generators; the unit ideal is generated by `x_∅ = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    n: usize,
    generators: Vec<VertexSet>,
}

impl SquarefreeIdeal {
    /// The ideal generated by `x_A` for each `A` in `supports`, minimalized.
    pub fn new<I>(n: usize, supports: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > crate::MAX_VERTICES {
            return Err(Error::AmbientSize(n));
        }
        let ambient = VertexSet::full(n);
        let supports: Vec<VertexSet> = supports.into_iter().collect();
        if let Some(bad) = supports.iter().find(|s| !s.is_subset(ambient)) {
            let vertex = bad.difference(ambient).iter().next().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(Self::from_supports(n, supports))
    }

    pub(crate) fn from_supports(n: usize, supports: Vec<VertexSet>) -> Self {
        SquarefreeIdeal {
            n,
            generators: minimal_antichain(supports),
        }
    }

    pub fn zero(n: usize) -> Self {
        SquarefreeIdeal {
            n,
            generators: vec![],
        }
    }

    pub fn unit(n: usize) -> Self {
        SquarefreeIdeal {
            n,
            generators: vec![VertexSet::EMPTY],
        }
    }

    pub fn ambient_size(&self) -> usize {
        self.n
    }

    /// Supports of the minimal generators, in canonical order.
    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators == [VertexSet::EMPTY]
    }

    /// Whether the squarefree monomial `x_B` lies in the ideal.
    pub fn contains_monomial(&self, b: VertexSet) -> bool {
        self.generators.iter().any(|g| g.is_subset(b))
    }

    /// All generators have the same degree.
    pub fn is_equigenerated(&self) -> bool {
        self.generators.windows(2).all(|w| w[0].len() == w[1].len())
    }
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0) in {} variables", self.n);
        }
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if g.is_empty() {
                write!(f, "1")?;
            }
            for v in g.iter() {
                write!(f, "x{v}")?;
            }
        }
        write!(f, ") in {} variables", self.n)
    }
}

/// `Δ* = {V \ σ : σ ∉ Δ}`.
///
/// Its facets are the complements of the minimal non-faces of `Δ`. The void
/// complex and the full simplex are exchanged.
pub fn alexander_dual(c: &SimplicialComplex) -> SimplicialComplex {
    let n = c.ambient_size();
    let mut facets: Vec<VertexSet> = c
        .minimal_nonfaces_unchecked()
        .into_iter()
        .map(|nf| nf.complement(n))
        .collect();
    // complementation reverses inclusion, so the antichain survives
    facets.sort_unstable();
    SimplicialComplex::from_antichain(n, facets)
}

/// The Stanley–Reisner ideal `I_Δ`, generated by the minimal non-faces.
pub fn ideal_of_complex(c: &SimplicialComplex) -> Result<SquarefreeIdeal> {
    if c.is_void() {
        return Err(Error::VoidComplex("ideal_of_complex"));
    }
    Ok(SquarefreeIdeal {
        n: c.ambient_size(),
        generators: c.minimal_nonfaces_unchecked(),
    })
}

/// The complex whose faces are the supports `A` with `x_A ∉ I`.
pub fn complex_of_ideal(ideal: &SquarefreeIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("complex_of_ideal"));
    }
    // A avoids every generator iff V \ A is a transversal of the generators
    let n = ideal.n;
    let mut facets: Vec<VertexSet> = minimal_transversals(&ideal.generators)
        .into_iter()
        .map(|t| t.complement(n))
        .collect();
    facets.sort_unstable();
    Ok(SimplicialComplex::from_antichain(n, facets))
}

/// The ideal generated by every squarefree monomial of degree exactly `j` in `I`.
pub fn squarefree_component(ideal: &SquarefreeIdeal, j: usize) -> SquarefreeIdeal {
    if j > ideal.n {
        return SquarefreeIdeal::zero(ideal.n);
    }
    let generators: Vec<VertexSet> = k_subsets(ideal.n, j)
        .filter(|s| ideal.contains_monomial(*s))
        .collect();
    SquarefreeIdeal::from_supports(ideal.n, generators)
}

/// Degrees of the minimal generators.
pub fn generation_degrees(ideal: &SquarefreeIdeal) -> Result<BTreeSet<usize>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("generation_degrees"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("generation_degrees"));
    }
    Ok(ideal.generators.iter().map(|g| g.len()).collect())
}
