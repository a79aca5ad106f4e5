//! The `check` pipeline: combinatorial condition, T(q), then the link
//! condition under a metric preset, collected into one serializable report.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::complex::build_complex;
use crate::graph::{girth, min_weight_cycle};
use crate::metrics::{verify_link_condition, MetricError, MetricSpec, VertexCheck};
use crate::pieces::{check_c, max_piece_length, CVerdict, PieceError};
use crate::presentation::{subdivide, Presentation};
use crate::tcond::{check_t, TError, TVerdict, WitnessRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Girth,
    Cp,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOptions {
    pub mode: Mode,
    pub p: usize,
    pub q: usize,
    pub max_cycle_len: usize,
    /// Explicit preset; otherwise chosen from `(p, q)`.
    pub preset: Option<String>,
    #[serde(skip)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StageStatus {
    Pass,
    Skipped,
    Indeterminate,
    Violated,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub name: String,
    pub status: StageStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub component: String,
    pub darts: Vec<String>,
    /// Fewest pieces covering the cycle (C(p) mode only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pieces: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub cycle: Option<CycleWitness>,
    pub jasmine: Option<WitnessRecord>,
    pub link_cycle: Option<VertexCheck>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Violated,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub input_digest: String,
    pub options: CheckOptions,
    pub preset: Option<String>,
    pub stages: Vec<Stage>,
    pub witnesses: Witnesses,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, f64>>,
}

#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Pieces(#[from] PieceError),
    #[error(transparent)]
    T(#[from] TError),
    #[error("internal consistency violation: {0}")]
    Inconsistent(String),
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// Presets whose theorem hypotheses are implied by passing girth/C(p) and T(q).
fn preset_is_implied(name: &str, p: usize, q: usize) -> bool {
    let (p0, q0) = match name {
        "3,6-euclidean" => (3, 6),
        "4,5-euclidean" | "4,5-hyperbolic" => (4, 5),
        "3,7-hyperbolic" => (3, 7),
        _ => return false,
    };
    p >= p0 && q >= q0
}

pub fn run_check(p: &Presentation, input: &[u8], options: &CheckOptions) -> Result<CheckReport, CheckError> {
    let mut timing = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timing: &mut BTreeMap<String, f64>| {
        timing.insert(name.to_string(), clock.elapsed().as_secs_f64() * 1e3);
        clock = Instant::now();
    };
    let preset = options
        .preset
        .clone()
        .or_else(|| MetricSpec::default_preset_name(options.p, options.q).map(str::to_string));
    let spec = preset.as_deref().map(MetricSpec::preset).transpose()?;
    let mut witnesses = Witnesses::default();
    let mut stages = Vec::new();

    let first = match options.mode {
        Mode::Girth => girth_stage(p, options.p, &mut witnesses),
        Mode::Cp => cp_stage(p, options.p, options.max_cycle_len, &mut witnesses)?,
    };
    stages.push(first);
    lap("combinatorial", &mut timing);

    let complex = build_complex(p);
    let t = match check_t(&complex, options.q)? {
        TVerdict::NoJasmineWitness => Stage {
            name: format!("T({})", options.q),
            status: StageStatus::Pass,
            detail: "no jasmine witness".into(),
        },
        TVerdict::Violated(w) => {
            let rec = w.to_record(p);
            let detail = format!("jasmine witness with h = {} at {}", rec.h, rec.vertex);
            witnesses.jasmine = Some(rec);
            Stage { name: format!("T({})", options.q), status: StageStatus::Violated, detail }
        }
    };
    stages.push(t);
    lap("t_condition", &mut timing);

    let link = match (&spec, &preset) {
        (Some(spec), Some(name)) => {
            // C(p) mode certifies the subdivided complex
            let subdivided;
            let target = match options.mode {
                Mode::Girth => p,
                Mode::Cp => {
                    subdivided = subdivide(p, options.p);
                    &subdivided
                }
            };
            let report = verify_link_condition(&build_complex(target), spec);
            let on = if options.mode == Mode::Cp { "subdivided complex" } else { "complex" };
            match report.first_failure() {
                None => Stage {
                    name: format!("link condition [{name}]"),
                    status: StageStatus::Pass,
                    detail: format!("every link cycle on the {on} has length at least 2 pi"),
                },
                Some(bad) => {
                    let total = bad.min_cycle_total.map(|t| t.to_string()).unwrap_or_default();
                    let detail = format!("cycle of length {total} at {} on the {on}", bad.vertex);
                    witnesses.link_cycle = Some(bad.clone());
                    Stage { name: format!("link condition [{name}]"), status: StageStatus::Fail, detail }
                }
            }
        }
        _ => Stage {
            name: "link condition".into(),
            status: StageStatus::Skipped,
            detail: format!("no preset for (p, q) = ({}, {})", options.p, options.q),
        },
    };
    let combinatorial_pass = stages.iter().all(|s| s.status == StageStatus::Pass);
    if let Some(name) = &preset {
        if combinatorial_pass && link.status == StageStatus::Fail && preset_is_implied(name, options.p, options.q) {
            return Err(CheckError::Inconsistent(format!(
                "conditions hold for (p, q) = ({}, {}) but the link condition fails under {name}: {}",
                options.p, options.q, link.detail
            )));
        }
    }
    stages.push(link);
    lap("link_condition", &mut timing);

    let worst = stages.iter().map(|s| s.status).max().unwrap_or(StageStatus::Pass);
    let verdict = match worst {
        StageStatus::Violated | StageStatus::Fail => Verdict::Violated,
        StageStatus::Indeterminate => Verdict::Indeterminate,
        StageStatus::Pass | StageStatus::Skipped => Verdict::Pass,
    };
    Ok(CheckReport {
        input_digest: digest(input),
        options: options.clone(),
        preset,
        stages,
        witnesses,
        verdict,
        timing_ms: options.timing.then_some(timing),
    })
}

fn girth_stage(p: &Presentation, p_param: usize, witnesses: &mut Witnesses) -> Stage {
    let name = format!("girth >= {p_param}");
    let shortest = p
        .components()
        .iter()
        .filter_map(|c| min_weight_cycle(&c.graph, |_| 1usize).map(|(len, cycle)| (len, c, cycle)))
        .min_by_key(|(len, _, _)| *len);
    match shortest {
        Some((len, c, cycle)) if len < p_param => {
            debug_assert_eq!(girth(&c.graph), Some(len));
            witnesses.cycle = Some(CycleWitness { component: c.name.clone(), darts: cycle.names(&c.graph), pieces: None });
            Stage { name, status: StageStatus::Violated, detail: format!("component {} has girth {len}", c.name) }
        }
        Some((len, _, _)) => Stage { name, status: StageStatus::Pass, detail: format!("smallest girth {len}") },
        None => Stage { name, status: StageStatus::Pass, detail: "no cycles".into() },
    }
}

fn cp_stage(p: &Presentation, p_param: usize, max_cycle_len: usize, witnesses: &mut Witnesses) -> Result<Stage, PieceError> {
    let name = format!("C({p_param})");
    let longest = max_piece_length(p);
    Ok(match check_c(p, p_param, max_cycle_len)? {
        CVerdict::Holds { searched_len } => Stage {
            name,
            status: StageStatus::Pass,
            detail: format!("max piece length {longest}; exhaustive up to cycle length {searched_len}"),
        },
        CVerdict::Indeterminate { bound } => Stage {
            name,
            status: StageStatus::Indeterminate,
            detail: format!("pieces are unbounded; no violation up to cycle length {bound}"),
        },
        CVerdict::Violated { cover } => {
            let first = cover.cycle.darts()[0];
            let c = &p.components()[p.component_of_dart(first)];
            let k = cover.min_pieces.expect("violations are coverable");
            let detail = format!("cycle of length {} in {} is {k} pieces", cover.cycle.len(), c.name);
            witnesses.cycle = Some(CycleWitness {
                component: c.name.clone(),
                darts: cover.cycle.darts().iter().map(|&d| p.gamma_dart_name(d)).collect(),
                pieces: Some(k),
            });
            Stage { name, status: StageStatus::Violated, detail }
        }
    })
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INPUT: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

pub fn exit_code(report: &CheckReport) -> i32 {
    match report.verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Violated => EXIT_VIOLATED,
        Verdict::Indeterminate => EXIT_INDETERMINATE,
    }
}
