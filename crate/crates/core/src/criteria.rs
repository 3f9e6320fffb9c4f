//! Cohen–Macaulay type predicates, each realized combinatorially.
//!
//! Route A works on the complex itself: Reisner's link criterion for CM and the
//! pure-skeleton criterion for sequential CM. Route B works on the Stanley–Reisner
//! ideal of the Alexander dual: componentwise linearity via Eagon–Reiner on each
//! squarefree degree slice, plus the set of generation degrees.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::complex::{Dimension, SimplicialComplex};
use crate::duality::{
    alexander_dual, complex_of_ideal, generation_degrees, ideal_of_complex, squarefree_component,
    SquarefreeIdeal,
};
use crate::error::{Error, Result};
use crate::homology::{reduced_betti_numbers, FieldSpec};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "CM")]
    Cm,
    #[serde(rename = "ACM")]
    Acm,
    #[serde(rename = "SCM_NOT_ACM")]
    ScmNotAcm,
    #[serde(rename = "NOT_SCM")]
    NotScm,
}

impl Verdict {
    pub const ALL: [Verdict; 4] = [
        Verdict::Cm,
        Verdict::Acm,
        Verdict::ScmNotAcm,
        Verdict::NotScm,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Verdict::Cm => "CM",
            Verdict::Acm => "ACM",
            Verdict::ScmNotAcm => "SCM_NOT_ACM",
            Verdict::NotScm => "NOT_SCM",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    A,
    B,
    Both,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::A => "a",
            Route::B => "b",
            Route::Both => "both",
        })
    }
}

/// A face whose link has nonvanishing reduced homology below its top dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CmWitness {
    pub face: VertexSet,
    pub degree: isize,
}

/// Outcome of Reisner's criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmCheck {
    pub witness: Option<CmWitness>,
}

impl CmCheck {
    pub fn is_cm(&self) -> bool {
        self.witness.is_none()
    }
}

/// Reisner: `c` is CM over `field` iff `H̃_i(lk σ) = 0` for all faces `σ` and all
/// `i < dim lk σ`.
///
/// Faces are visited in canonical order starting from `∅`, so the reported witness
/// is the first failure in that order.
pub fn is_cohen_macaulay(c: &SimplicialComplex, field: FieldSpec) -> Result<CmCheck> {
    if c.is_void() {
        return Err(Error::VoidComplex("is_cohen_macaulay"));
    }
    for face in c.faces() {
        let link = c.link(face)?;
        let Dimension::Finite(dim) = link.dimension() else {
            unreachable!("links of faces are never void");
        };
        if dim <= -1 {
            continue;
        }
        let betti = reduced_betti_numbers(&link, field)?;
        // betti[idx] is H̃_{idx-1}; inspect i in -1..dim
        if let Some(idx) = (0..dim as usize + 1).find(|&idx| betti[idx] != 0) {
            return Ok(CmCheck {
                witness: Some(CmWitness {
                    face,
                    degree: idx as isize - 1,
                }),
            });
        }
    }
    Ok(CmCheck { witness: None })
}

/// Linear resolution via Eagon–Reiner: `I` has a linear resolution iff the
/// Alexander dual of the complex of `I` is Cohen–Macaulay.
///
/// Ideals generated in more than one degree are never linear.
pub fn has_linear_resolution_er(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("has_linear_resolution_er"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("has_linear_resolution_er"));
    }
    if !ideal.is_equigenerated() {
        return Ok(false);
    }
    let sigma = complex_of_ideal(ideal)?;
    Ok(is_cohen_macaulay(&alexander_dual(&sigma), field)?.is_cm())
}

/// Graded Betti numbers `β_{i,j}` of a squarefree monomial ideal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})` sorted by `(i, j)`.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// Every nonzero `β_{i,j}` sits on the strand `j = i + degree`.
    pub fn is_linear_strand(&self, degree: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + degree)
    }

    fn add(&mut self, i: usize, j: usize, value: usize) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }
}

/// Hochster's formula: `β_{i,j}(I) = Σ_{|A| = j} dim H̃_{j-i-2}(Σ|_A)`, where `Σ` is
/// the complex whose Stanley–Reisner ideal is `I`.
///
/// Sums over all `2^n` vertex subsets.
pub fn graded_betti_hochster(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("graded_betti_hochster"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("graded_betti_hochster"));
    }
    let sigma = complex_of_ideal(ideal)?;
    let mut table = BettiTable::default();
    for a in VertexSet::full(ideal.ambient_size()).subsets() {
        let j = a.len();
        if j == 0 {
            continue;
        }
        let restricted = sigma.induced_subcomplex(a);
        let betti = reduced_betti_numbers(&restricted, field)?;
        for (idx, &b) in betti.iter().enumerate() {
            // b = dim H̃_h with h = idx - 1 = j - i - 2
            if idx < j {
                table.add(j - 1 - idx, j, b);
            }
        }
    }
    Ok(table)
}

/// Per-degree outcome of the componentwise linearity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeLinearity {
    pub degree: usize,
    pub linear: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComponentwiseLinearity {
    pub table: Vec<DegreeLinearity>,
}

impl ComponentwiseLinearity {
    pub fn is_linear(&self) -> bool {
        self.table.iter().all(|d| d.linear)
    }
}

/// Componentwise linearity, tested on the squarefree slices `I_[j]`.
pub fn is_componentwise_linear(
    ideal: &SquarefreeIdeal,
    field: FieldSpec,
) -> Result<ComponentwiseLinearity> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("is_componentwise_linear"));
    }
    let Some(lowest) = ideal.generators().first().map(|g| g.len()) else {
        return Ok(ComponentwiseLinearity::default());
    };
    let mut table = Vec::new();
    for degree in lowest..=ideal.ambient_size() {
        let slice = squarefree_component(ideal, degree);
        if slice.is_zero() {
            continue;
        }
        table.push(DegreeLinearity {
            degree,
            linear: has_linear_resolution_er(&slice, field)?,
        });
    }
    Ok(ComponentwiseLinearity { table })
}

/// Sequential CM-ness via pure skeleta: every `Δ^[i]`, `0 <= i <= dim`, is CM.
pub fn is_scm_skeleton(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let Dimension::Finite(dim) = c.dimension() else {
        return Err(Error::VoidComplex("is_scm_skeleton"));
    };
    for i in 0..=dim {
        if !is_cohen_macaulay(&c.pure_skeleton(i)?, field)?.is_cm() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Stanley–Reisner ideal of the Alexander dual, `I_{Δ*}`.
pub fn dual_ideal(c: &SimplicialComplex) -> Result<SquarefreeIdeal> {
    if c.is_void() {
        return Err(Error::VoidComplex("dual_ideal"));
    }
    if c.is_full_simplex() {
        return Err(Error::FullSimplex("dual_ideal"));
    }
    ideal_of_complex(&alexander_dual(c))
}

/// Sequential CM-ness via componentwise linearity of `I_{Δ*}`.
pub fn is_scm_dual(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(is_componentwise_linear(&dual_ideal(c)?, field)?.is_linear())
}

/// Whether `cardinalities` is exactly `{d - 1, d}` for some `d`.
pub fn is_consecutive_pair(cardinalities: &BTreeSet<usize>) -> bool {
    let v: Vec<usize> = cardinalities.iter().copied().collect();
    v.len() == 2 && v[1] == v[0] + 1
}

pub(crate) fn acm_route_a(cm: bool, scm: bool, cardinalities: &BTreeSet<usize>) -> bool {
    !cm && scm && is_consecutive_pair(cardinalities)
}

pub(crate) fn acm_route_b(componentwise_linear: bool, degrees: &BTreeSet<usize>) -> bool {
    componentwise_linear && is_consecutive_pair(degrees)
}

/// Route A: not CM, sequentially CM by skeleta, and facet cardinalities `{d-1, d}`.
pub fn is_acm_route_a(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let cards = c.facet_cardinalities()?;
    if !is_consecutive_pair(&cards) {
        return Ok(false);
    }
    let cm = is_cohen_macaulay(c, field)?.is_cm();
    Ok(acm_route_a(cm, !cm && is_scm_skeleton(c, field)?, &cards))
}

/// Route B: `I_{Δ*}` componentwise linear and generated in two consecutive degrees.
pub fn is_acm_route_b(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let ideal = dual_ideal(c)?;
    let degrees = generation_degrees(&ideal)?;
    if !is_consecutive_pair(&degrees) {
        return Ok(false);
    }
    let cl = is_componentwise_linear(&ideal, field)?.is_linear();
    Ok(acm_route_b(cl, &degrees))
}

/// Verdict together with the evidence that produced it.
///
/// Route A demands non-CM explicitly when declaring ACM. Route B does not need
/// to: two distinct generation degrees of `I_{Δ*}` force two facet
/// cardinalities, and a non-pure complex is never CM.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub verdict: Verdict,
    pub route: Route,
    pub field: FieldSpec,
    pub facet_cardinalities: BTreeSet<usize>,
    /// First failing `(face, degree)` of Reisner's criterion, if any.
    pub cm_witness: Option<CmWitness>,
    /// Route A only.
    pub scm_skeleton: Option<bool>,
    /// Route B only; `None` for the full simplex.
    pub dual_generator_degrees: Option<BTreeSet<usize>>,
    /// Route B only; `None` for the full simplex.
    pub componentwise_table: Option<Vec<DegreeLinearity>>,
}

fn report_route_a(c: &SimplicialComplex, field: FieldSpec, cm: CmCheck) -> Result<ClassReport> {
    let cards = c.facet_cardinalities()?;
    let mut scm_skeleton = None;
    let verdict = if cm.is_cm() {
        Verdict::Cm
    } else {
        let scm = is_scm_skeleton(c, field)?;
        scm_skeleton = Some(scm);
        if acm_route_a(false, scm, &cards) {
            Verdict::Acm
        } else if scm {
            Verdict::ScmNotAcm
        } else {
            Verdict::NotScm
        }
    };
    Ok(ClassReport {
        verdict,
        route: Route::A,
        field,
        facet_cardinalities: cards,
        cm_witness: cm.witness,
        scm_skeleton,
        dual_generator_degrees: None,
        componentwise_table: None,
    })
}

fn report_route_b(c: &SimplicialComplex, field: FieldSpec, cm: CmCheck) -> Result<ClassReport> {
    let cards = c.facet_cardinalities()?;
    let mut report = ClassReport {
        verdict: Verdict::Cm,
        route: Route::B,
        field,
        facet_cardinalities: cards,
        cm_witness: cm.witness,
        scm_skeleton: None,
        dual_generator_degrees: None,
        componentwise_table: None,
    };
    if c.is_full_simplex() {
        return Ok(report);
    }
    let ideal = dual_ideal(c)?;
    let degrees = generation_degrees(&ideal)?;
    let cl = is_componentwise_linear(&ideal, field)?;
    report.verdict = if cm.is_cm() {
        Verdict::Cm
    } else if acm_route_b(cl.is_linear(), &degrees) {
        Verdict::Acm
    } else if cl.is_linear() {
        Verdict::ScmNotAcm
    } else {
        Verdict::NotScm
    };
    report.dual_generator_degrees = Some(degrees);
    report.componentwise_table = Some(cl.table);
    Ok(report)
}

/// Classifies `c` as CM, ACM, SCM but not ACM, or not SCM.
///
/// With [`Route::Both`] the two routes are computed independently and any
/// disagreement is returned as [`Error::RouteDisagreement`].
pub fn classify(c: &SimplicialComplex, field: FieldSpec, route: Route) -> Result<ClassReport> {
    if c.is_void() {
        return Err(Error::VoidComplex("classify"));
    }
    debug_assert!(c.ambient_size() <= MAX_VERTICES);
    let cm = if c.is_full_simplex() {
        CmCheck { witness: None }
    } else {
        is_cohen_macaulay(c, field)?
    };
    match route {
        Route::A => report_route_a(c, field, cm),
        Route::B => report_route_b(c, field, cm),
        Route::Both => {
            let a = report_route_a(c, field, cm)?;
            let b = report_route_b(c, field, cm)?;
            if a.verdict != b.verdict {
                return Err(Error::RouteDisagreement(Box::new((a, b))));
            }
            Ok(ClassReport {
                route: Route::Both,
                scm_skeleton: a.scm_skeleton,
                ..b
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::of(v)
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::normalize(facets.iter().map(|f| vs(f)), n).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> SquarefreeIdeal {
        SquarefreeIdeal::new(n, gens.iter().map(|g| vs(g))).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        cx(3, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    fn edge_and_point() -> SimplicialComplex {
        cx(3, &[&[1, 2], &[3]])
    }

    fn two_edges() -> SimplicialComplex {
        cx(4, &[&[1, 2], &[3, 4]])
    }

    fn fields() -> [FieldSpec; 3] {
        [
            FieldSpec::Rational,
            FieldSpec::gf(2).unwrap(),
            FieldSpec::gf(3).unwrap(),
        ]
    }

    #[test]
    fn reisner_examples() {
        for f in fields() {
            assert!(is_cohen_macaulay(&hollow_triangle(), f).unwrap().is_cm());
            let w = is_cohen_macaulay(&two_edges(), f).unwrap().witness.unwrap();
            assert_eq!((w.face, w.degree), (VertexSet::EMPTY, 0));
            let w = is_cohen_macaulay(&edge_and_point(), f)
                .unwrap()
                .witness
                .unwrap();
            assert_eq!((w.face, w.degree), (VertexSet::EMPTY, 0));
            assert!(is_cohen_macaulay(&SimplicialComplex::irrelevant(2), f)
                .unwrap()
                .is_cm());
        }
        assert!(is_cohen_macaulay(&SimplicialComplex::void(2), FieldSpec::Rational).is_err());
    }

    #[test]
    fn reisner_fails_at_a_vertex_link() {
        // two triangles glued at vertex 3: connected but lk{3} is two edges
        let bowtie = cx(5, &[&[1, 2, 3], &[3, 4, 5]]);
        let w = is_cohen_macaulay(&bowtie, FieldSpec::Rational)
            .unwrap()
            .witness
            .unwrap();
        assert_eq!((w.face, w.degree), (vs(&[3]), 0));
    }

    #[test]
    fn linear_resolution_examples() {
        for f in fields() {
            assert!(has_linear_resolution_er(&ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]), f).unwrap());
            assert!(!has_linear_resolution_er(&ideal(4, &[&[1, 2], &[3, 4]]), f).unwrap());
            assert!(has_linear_resolution_er(&ideal(3, &[&[3]]), f).unwrap());
            assert!(!has_linear_resolution_er(&ideal(3, &[&[3], &[1, 2]]), f).unwrap());
        }
        assert!(has_linear_resolution_er(&SquarefreeIdeal::zero(3), FieldSpec::Rational).is_err());
        assert!(has_linear_resolution_er(&SquarefreeIdeal::unit(3), FieldSpec::Rational).is_err());
    }

    #[test]
    fn hochster_examples() {
        let q = FieldSpec::Rational;
        let t = graded_betti_hochster(&ideal(3, &[&[3]]), q).unwrap();
        assert_eq!(t.nonzero().collect::<Vec<_>>(), vec![((0, 1), 1)]);

        let t = graded_betti_hochster(&ideal(4, &[&[1, 2], &[3, 4]]), q).unwrap();
        assert_eq!(
            t.nonzero().collect::<Vec<_>>(),
            vec![((0, 2), 2), ((1, 4), 1)]
        );

        let t = graded_betti_hochster(&ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]), q).unwrap();
        assert_eq!(
            t.nonzero().collect::<Vec<_>>(),
            vec![((0, 2), 3), ((1, 3), 2)]
        );
        assert!(t.is_linear_strand(2));

        assert!(graded_betti_hochster(&SquarefreeIdeal::zero(2), q).is_err());
    }

    #[test]
    fn componentwise_examples() {
        for f in fields() {
            let cl = is_componentwise_linear(&ideal(3, &[&[3], &[1, 2]]), f).unwrap();
            assert!(cl.is_linear());
            assert_eq!(
                cl.table.iter().map(|d| d.degree).collect::<Vec<_>>(),
                vec![1, 2, 3]
            );
            assert!(!is_componentwise_linear(&ideal(4, &[&[1, 2], &[3, 4]]), f)
                .unwrap()
                .is_linear());
            let zero = is_componentwise_linear(&SquarefreeIdeal::zero(3), f).unwrap();
            assert!(zero.is_linear() && zero.table.is_empty());
        }
        assert!(is_componentwise_linear(&SquarefreeIdeal::unit(3), FieldSpec::Rational).is_err());
    }

    #[test]
    fn scm_examples() {
        for f in fields() {
            assert!(is_scm_skeleton(&edge_and_point(), f).unwrap());
            assert!(!is_scm_skeleton(&two_edges(), f).unwrap());
            assert!(is_scm_skeleton(&hollow_triangle(), f).unwrap());
            assert!(is_scm_skeleton(&SimplicialComplex::irrelevant(3), f).unwrap());

            assert!(is_scm_dual(&edge_and_point(), f).unwrap());
            assert!(!is_scm_dual(&two_edges(), f).unwrap());
            assert!(is_scm_dual(&cx(2, &[&[1], &[2]]), f).unwrap());
        }
        assert!(is_scm_dual(&SimplicialComplex::simplex(3), FieldSpec::Rational).is_err());
        assert!(is_scm_dual(&SimplicialComplex::void(3), FieldSpec::Rational).is_err());
        assert!(is_scm_skeleton(&SimplicialComplex::void(3), FieldSpec::Rational).is_err());
    }

    #[test]
    fn acm_examples() {
        let three = cx(4, &[&[1, 2], &[1, 3], &[4]]);
        for f in fields() {
            assert!(is_acm_route_a(&edge_and_point(), f).unwrap());
            assert!(!is_acm_route_a(&two_edges(), f).unwrap());
            assert!(!is_acm_route_a(&hollow_triangle(), f).unwrap());
            assert!(is_acm_route_b(&edge_and_point(), f).unwrap());
            assert!(!is_acm_route_b(&two_edges(), f).unwrap());
            assert!(is_acm_route_b(&three, f).unwrap());
            assert!(is_acm_route_a(&three, f).unwrap());
        }
        let degrees = generation_degrees(&dual_ideal(&three).unwrap()).unwrap();
        assert_eq!(degrees, [2, 3].into_iter().collect());
    }

    #[test]
    fn non_scm_with_two_cardinalities() {
        // a triangle plus a disjoint edge: cardinalities {2,3} but the pure
        // 2-skeleton is fine while the 1-skeleton is disconnected
        let c = cx(5, &[&[1, 2, 3], &[4, 5]]);
        for f in fields() {
            assert!(!is_acm_route_a(&c, f).unwrap());
            assert!(!is_acm_route_b(&c, f).unwrap());
            assert_eq!(
                classify(&c, f, Route::Both).unwrap().verdict,
                Verdict::NotScm
            );
        }
    }

    #[test]
    fn classify_examples() {
        let q = FieldSpec::Rational;
        let r = classify(&edge_and_point(), q, Route::Both).unwrap();
        assert_eq!(r.verdict, Verdict::Acm);
        assert_eq!(r.dual_generator_degrees, Some([1, 2].into_iter().collect()));
        assert_eq!(r.scm_skeleton, Some(true));
        assert_eq!(
            classify(&hollow_triangle(), q, Route::Both)
                .unwrap()
                .verdict,
            Verdict::Cm
        );
        assert_eq!(
            classify(&two_edges(), q, Route::Both).unwrap().verdict,
            Verdict::NotScm
        );

        let full = classify(&SimplicialComplex::simplex(3), q, Route::Both).unwrap();
        assert_eq!(full.verdict, Verdict::Cm);
        assert_eq!(full.dual_generator_degrees, None);
        assert!(classify(&SimplicialComplex::void(3), q, Route::A).is_err());
    }

    #[test]
    fn scm_not_acm() {
        // a triangle with a whisker edge and an isolated vertex: cardinalities {1,2,3}
        let c = cx(5, &[&[1, 2, 3], &[3, 4], &[5]]);
        for route in [Route::A, Route::B, Route::Both] {
            let r = classify(&c, FieldSpec::Rational, route).unwrap();
            assert_eq!(r.verdict, Verdict::ScmNotAcm, "route {route}");
        }
    }
}
