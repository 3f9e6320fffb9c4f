//! JSON documents emitted by `check --json` and `verify --json`.

use acmkit_core::harness::{Check, HarnessConfig, HarnessReport, Mode};
use acmkit_core::{ClassReport, DegreeLinearity, FieldSpec};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct CmFailure {
    pub face: Vec<usize>,
    pub degree: isize,
}

#[derive(Debug, Serialize)]
pub struct Witnesses {
    pub cm_failure: Option<CmFailure>,
    pub scm_skeleton: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct CheckTimings {
    pub classify: u64,
}

/// `check --json`. Field order is part of the format.
#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub schema: u32,
    pub input: String,
    pub ambient_size: usize,
    pub field: FieldSpec,
    pub route: String,
    pub verdict: String,
    pub facet_cardinalities: Vec<usize>,
    pub dual_generator_degrees: Option<Vec<usize>>,
    pub componentwise_table: Option<Vec<DegreeLinearity>>,
    pub witnesses: Witnesses,
    pub timings_ms: CheckTimings,
}

impl ReportJson {
    pub fn new(input: &str, ambient_size: usize, report: &ClassReport, millis: u64) -> Self {
        ReportJson {
            schema: SCHEMA_VERSION,
            input: input.to_owned(),
            ambient_size,
            field: report.field,
            route: report.route.to_string(),
            verdict: report.verdict.to_string(),
            facet_cardinalities: report.facet_cardinalities.iter().copied().collect(),
            dual_generator_degrees: report
                .dual_generator_degrees
                .as_ref()
                .map(|d| d.iter().copied().collect()),
            componentwise_table: report.componentwise_table.clone(),
            witnesses: Witnesses {
                cm_failure: report.cm_witness.map(|w| CmFailure {
                    face: w.face.to_vec(),
                    degree: w.degree,
                }),
                scm_skeleton: report.scm_skeleton,
            },
            timings_ms: CheckTimings { classify: millis },
        }
    }
}

/// `check --json` when the two routes disagree.
#[derive(Debug, Serialize)]
pub struct DisagreementJson {
    pub schema: u32,
    pub input: String,
    pub error: &'static str,
    pub route_a: ReportJson,
    pub route_b: ReportJson,
}

#[derive(Debug, Serialize)]
pub struct ConfigJson {
    pub vertices: usize,
    pub mode: &'static str,
    pub seed: Option<u64>,
    pub count: Option<u64>,
    pub density: Option<f64>,
    pub fields: Vec<FieldSpec>,
    pub checks: Vec<Check>,
    pub jobs: usize,
}

impl From<&HarnessConfig> for ConfigJson {
    fn from(cfg: &HarnessConfig) -> Self {
        let (mode, seed, count, density) = match cfg.mode {
            Mode::Exhaustive => ("exhaustive", None, None, None),
            Mode::Random {
                seed,
                count,
                density,
            } => ("random", Some(seed), Some(count), Some(density)),
        };
        ConfigJson {
            vertices: cfg.n,
            mode,
            seed,
            count,
            density,
            fields: cfg.fields.clone(),
            checks: cfg.checks.iter().copied().collect(),
            jobs: cfg.workers,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyTimings {
    pub run: u64,
}

/// `verify --json`.
#[derive(Debug, Serialize)]
pub struct VerifyJson<'a> {
    pub schema: u32,
    pub config: ConfigJson,
    pub report: &'a HarnessReport,
    pub timings_ms: VerifyTimings,
}
