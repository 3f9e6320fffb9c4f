//! Exhaustive and randomized cross-checking of the equivalences.
//!
//! Each complex is pushed through the configured checks; a failing check is
//! recorded as data in the [`HarnessReport`], never raised as an error. Reports
//! from disjoint shards merge by addition, so the final report does not depend on
//! how the work was split across workers.

mod enumerate;
mod random;

pub use enumerate::{enumerate_complexes, Complexes, MAX_EXHAUSTIVE_VERTICES};
pub use random::{random_complex, MAX_RANDOM_VERTICES};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::criteria::{
    acm_route_a, acm_route_b, dual_ideal, graded_betti_hochster, has_linear_resolution_er,
    is_cohen_macaulay, is_componentwise_linear, is_scm_skeleton, Verdict,
};
use crate::duality::{alexander_dual, generation_degrees};
use crate::error::{Error, Result};
use crate::homology::{boundary_matrix, reduced_betti_numbers, FieldSpec};
use enumerate::{Layout, Shard};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Check {
    /// Reisner CM of `Δ` against Eagon–Reiner linearity of `I_{Δ*}`.
    Er,
    /// Skeleton SCM against componentwise linearity of `I_{Δ*}`.
    Hh,
    /// Route A ACM against route B ACM.
    Main,
    /// `(Δ*)* = Δ`.
    Involution,
    /// Alternating sum of reduced Betti numbers against the face count.
    Euler,
    /// Eagon–Reiner linearity against the Hochster Betti strand.
    Betti,
    /// Generation degrees of `I_{Δ*}` against facet cardinalities.
    Degrees,
    /// `∂ ∘ ∂ = 0`.
    Boundary,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Er,
        Check::Hh,
        Check::Main,
        Check::Involution,
        Check::Euler,
        Check::Betti,
        Check::Degrees,
        Check::Boundary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Er => "ER",
            Check::Hh => "HH",
            Check::Main => "MAIN",
            Check::Involution => "INVOLUTION",
            Check::Euler => "EULER",
            Check::Betti => "BETTI",
            Check::Degrees => "DEGREES",
            Check::Boundary => "BOUNDARY",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::HarnessConfig(format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mode {
    Exhaustive,
    Random { seed: u64, count: u64, density: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct HarnessConfig {
    pub n: usize,
    pub fields: Vec<FieldSpec>,
    pub mode: Mode,
    pub checks: BTreeSet<Check>,
    pub workers: usize,
}

impl HarnessConfig {
    pub fn exhaustive(n: usize, fields: Vec<FieldSpec>, checks: &[Check]) -> Self {
        HarnessConfig {
            n,
            fields,
            mode: Mode::Exhaustive,
            checks: checks.iter().copied().collect(),
            workers: 1,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        match self.mode {
            Mode::Exhaustive if !(1..=MAX_EXHAUSTIVE_VERTICES).contains(&self.n) => {
                Err(Error::HarnessConfig(format!(
                    "exhaustive mode needs 1 <= n <= {MAX_EXHAUSTIVE_VERTICES}, got {}",
                    self.n
                )))
            }
            Mode::Random { density, .. }
                if !(1..=MAX_RANDOM_VERTICES).contains(&self.n)
                    || !(0.0..=1.0).contains(&density) =>
            {
                Err(Error::HarnessConfig(format!(
                    "random mode needs 1 <= n <= {MAX_RANDOM_VERTICES} and density in [0, 1]"
                )))
            }
            _ if self.workers == 0 => Err(Error::HarnessConfig("workers must be positive".into())),
            _ if self.fields.is_empty() => Err(Error::HarnessConfig(
                "at least one field is required".into(),
            )),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counter {
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Histogram {
    #[serde(rename = "CM")]
    pub cm: u64,
    #[serde(rename = "ACM")]
    pub acm: u64,
    #[serde(rename = "SCM_NOT_ACM")]
    pub scm_not_acm: u64,
    #[serde(rename = "NOT_SCM")]
    pub not_scm: u64,
}

impl Histogram {
    fn record(&mut self, v: Verdict) {
        match v {
            Verdict::Cm => self.cm += 1,
            Verdict::Acm => self.acm += 1,
            Verdict::ScmNotAcm => self.scm_not_acm += 1,
            Verdict::NotScm => self.not_scm += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.cm + self.acm + self.scm_not_acm + self.not_scm
    }

    fn merge(&mut self, other: &Histogram) {
        self.cm += other.cm;
        self.acm += other.acm;
        self.scm_not_acm += other.scm_not_acm;
        self.not_scm += other.not_scm;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub ambient_size: usize,
    pub facets: Vec<Vec<usize>>,
    pub check: Check,
    /// `None` for field-independent checks.
    pub field: Option<FieldSpec>,
    pub detail: String,
}

impl Failure {
    fn new(c: &SimplicialComplex, check: Check, field: Option<FieldSpec>, detail: String) -> Self {
        Failure {
            ambient_size: c.ambient_size(),
            facets: c.facets().iter().map(|f| f.to_vec()).collect(),
            check,
            field,
            detail,
        }
    }

    /// The offending complex, for writing a reproducer.
    pub fn complex(&self) -> SimplicialComplex {
        let facets = self.facets.iter().map(|f| {
            crate::VertexSet::try_from_vertices(f.iter().copied(), self.ambient_size)
                .expect("failure records only hold valid facets")
        });
        SimplicialComplex::normalize(facets, self.ambient_size)
            .expect("failure records only hold valid complexes")
    }
}

/// Aggregated outcome of a harness run.
///
/// `histogram` is filled only when the MAIN check runs; it then counts every
/// non-void complex once per field.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub complexes_checked: u64,
    pub skipped_void: u64,
    pub checks: BTreeMap<Check, Counter>,
    pub histogram: BTreeMap<FieldSpec, Histogram>,
    pub failures: Vec<Failure>,
}

impl HarnessReport {
    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(mut self, other: HarnessReport) -> HarnessReport {
        self.complexes_checked += other.complexes_checked;
        self.skipped_void += other.skipped_void;
        for (check, counter) in other.checks {
            let entry = self.checks.entry(check).or_default();
            entry.passed += counter.passed;
            entry.failed += counter.failed;
        }
        for (field, h) in other.histogram {
            self.histogram.entry(field).or_default().merge(&h);
        }
        self.failures.extend(other.failures);
        self
    }

    fn finish(mut self) -> Self {
        self.failures.sort();
        self
    }

    fn tally(
        &mut self,
        c: &SimplicialComplex,
        check: Check,
        field: Option<FieldSpec>,
        outcome: std::result::Result<(), String>,
    ) {
        let counter = self.checks.entry(check).or_default();
        match outcome {
            Ok(()) => counter.passed += 1,
            Err(detail) => {
                counter.failed += 1;
                self.failures.push(Failure::new(c, check, field, detail));
            }
        }
    }
}

/// Runs every configured check on every generated complex.
pub fn run(cfg: &HarnessConfig) -> Result<HarnessReport> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::HarnessConfig(e.to_string()))?;
    let report = pool.install(|| match cfg.mode {
        Mode::Exhaustive => {
            let layout = Layout::new(cfg.n)?;
            let shards: Vec<Shard> = layout.shards();
            shards
                .par_iter()
                .map(|shard| {
                    let mut report = HarnessReport::default();
                    for c in Complexes::shard(&layout, shard) {
                        check_complex(&c, cfg, &mut report)?;
                    }
                    Ok(report)
                })
                .try_reduce(HarnessReport::default, |a, b| Ok(a.merge(b)))
        }
        Mode::Random {
            seed,
            count,
            density,
        } => (0..count)
            .into_par_iter()
            .map(|i| {
                let mut report = HarnessReport::default();
                let c = random_complex(cfg.n, seed.wrapping_add(i), density)?;
                check_complex(&c, cfg, &mut report)?;
                Ok(report)
            })
            .try_reduce(HarnessReport::default, |a, b| Ok(a.merge(b))),
    })?;
    Ok(report.finish())
}

fn expect(ok: bool, detail: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

/// Evaluates one complex against the configured checks, appending to `report`.
pub fn check_complex(
    c: &SimplicialComplex,
    cfg: &HarnessConfig,
    report: &mut HarnessReport,
) -> Result<()> {
    let wants = |check| cfg.checks.contains(&check);
    report.complexes_checked += 1;

    if wants(Check::Involution) {
        let twice = alexander_dual(&alexander_dual(c));
        report.tally(
            c,
            Check::Involution,
            None,
            expect(&twice == c, || format!("double dual is {twice}")),
        );
    }

    if c.is_void() {
        report.skipped_void += 1;
        return Ok(());
    }

    let n = c.ambient_size();
    let full = c.is_full_simplex();
    let cards = c.facet_cardinalities()?;
    let ideal = if full { None } else { Some(dual_ideal(c)?) };

    if wants(Check::Degrees) {
        if let Some(ideal) = &ideal {
            let degrees = generation_degrees(ideal)?;
            let expected: BTreeSet<usize> = cards.iter().map(|k| n - k).collect();
            let top = *cards.last().expect("non-void");
            let pattern = degrees.len() != 2
                || !crate::criteria::is_consecutive_pair(&degrees)
                || degrees == BTreeSet::from([n - top, n - (top - 1)]);
            report.tally(
                c,
                Check::Degrees,
                None,
                expect(degrees == expected && pattern, || {
                    format!("generation degrees {degrees:?}, expected {expected:?}")
                }),
            );
        }
    }

    if wants(Check::Boundary) {
        let top = cards.last().copied().unwrap_or(0);
        let mut ok = Ok(());
        for k in 0..top.saturating_sub(1) {
            let lower = boundary_matrix(c, k)?;
            let upper = boundary_matrix(c, k + 1)?;
            let zero = lower
                .product(&upper)
                .is_some_and(|m| m.iter().flatten().all(|&x| x == 0));
            if !zero {
                ok = Err(format!("boundary composition nonzero at k = {k}"));
                break;
            }
        }
        report.tally(c, Check::Boundary, None, ok);
    }

    for &field in &cfg.fields {
        check_field(c, field, &cards, ideal.as_ref(), cfg, report)?;
    }
    Ok(())
}

fn check_field(
    c: &SimplicialComplex,
    field: FieldSpec,
    cards: &BTreeSet<usize>,
    ideal: Option<&crate::SquarefreeIdeal>,
    cfg: &HarnessConfig,
    report: &mut HarnessReport,
) -> Result<()> {
    let wants = |check| cfg.checks.contains(&check);
    let f = Some(field);

    if wants(Check::Euler) {
        let betti = reduced_betti_numbers(c, field)?;
        let alternating: i64 = betti
            .iter()
            .enumerate()
            .map(|(idx, &b)| if idx % 2 == 0 { -(b as i64) } else { b as i64 })
            .sum();
        let chi = c.reduced_euler_characteristic();
        report.tally(
            c,
            Check::Euler,
            f,
            expect(alternating == chi, || {
                format!("betti alternating sum {alternating}, face count {chi}")
            }),
        );
    }

    let needs_cm = wants(Check::Er) || wants(Check::Main) || wants(Check::Hh);
    if !needs_cm && !wants(Check::Betti) {
        return Ok(());
    }

    let cm = c.is_full_simplex() || is_cohen_macaulay(c, field)?.is_cm();

    let er = match ideal {
        Some(ideal) if wants(Check::Er) || wants(Check::Betti) => {
            Some(has_linear_resolution_er(ideal, field)?)
        }
        _ => None,
    };

    if wants(Check::Er) {
        if let Some(er) = er {
            let pure = cards.len() == 1;
            report.tally(
                c,
                Check::Er,
                f,
                expect(cm == er && (pure || !cm), || {
                    format!("Reisner CM = {cm}, dual ideal linear = {er}, pure = {pure}")
                }),
            );
        }
    }

    if wants(Check::Betti) {
        if let (Some(ideal), Some(er)) = (ideal, er) {
            if ideal.is_equigenerated() {
                let degree = ideal.generators()[0].len();
                let strand = graded_betti_hochster(ideal, field)?.is_linear_strand(degree);
                report.tally(
                    c,
                    Check::Betti,
                    f,
                    expect(strand == er, || {
                        format!("Hochster strand linear = {strand}, Eagon-Reiner = {er}")
                    }),
                );
            }
        }
    }

    if !(wants(Check::Main) || wants(Check::Hh)) {
        return Ok(());
    }

    // route A ingredients; HH compares the skeleton test even on CM complexes
    let scm_a = if cm && !wants(Check::Hh) {
        true
    } else {
        is_scm_skeleton(c, field)?
    };
    // route B ingredients; the full simplex has no dual ideal and is CM
    let (scm_b, degrees) = match ideal {
        Some(ideal) => (
            is_componentwise_linear(ideal, field)?.is_linear(),
            generation_degrees(ideal)?,
        ),
        None => (true, BTreeSet::new()),
    };

    if wants(Check::Hh) {
        report.tally(
            c,
            Check::Hh,
            f,
            expect(scm_a == scm_b, || {
                format!("skeleton SCM = {scm_a}, dual componentwise linear = {scm_b}")
            }),
        );
    }

    if wants(Check::Main) {
        let acm_a = acm_route_a(cm, scm_a, cards);
        let acm_b = acm_route_b(scm_b, &degrees);
        let verdict = |acm: bool, scm: bool| match (cm, acm, scm) {
            (true, _, _) => Verdict::Cm,
            (false, true, _) => Verdict::Acm,
            (false, false, true) => Verdict::ScmNotAcm,
            (false, false, false) => Verdict::NotScm,
        };
        let va = verdict(acm_a, scm_a);
        let vb = verdict(acm_b, scm_b);
        report.histogram.entry(field).or_default().record(va);
        report.tally(
            c,
            Check::Main,
            f,
            expect(acm_a == acm_b && va == vb, || {
                format!("route A says {va}, route B says {vb}")
            }),
        );
    }
    Ok(())
}
