//! Serializable artifact shapes and formatting helpers.
//!
//! Emission is deterministic: struct fields serialize in declaration order,
//! maps are ordered, and no hash-based container is ever serialized.

use morsewalk::lattice_walk::StepProbabilities;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::BTreeMap;

/// Exact rational as a decimal string: `"45/11"`, integers as `"11"`.
pub fn rational_str(r: &BigRational) -> String {
    r.to_string()
}

pub fn rational_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Serialize)]
pub struct ProbReport {
    pub p_r: String,
    pub p_l: String,
    pub p_d: String,
}

impl ProbReport {
    pub fn new(probs: &StepProbabilities) -> Self {
        ProbReport {
            p_r: rational_str(probs.p_r()),
            p_l: rational_str(probs.p_l()),
            p_d: rational_str(probs.p_d()),
        }
    }
}

/// One statistic row shared by `moments` and `dist`.
#[derive(Serialize)]
pub struct StatRow {
    pub statistic: String,
    pub closed_form: String,
    pub closed_form_float: f64,
    pub mc_estimate: Option<f64>,
    pub std_error: Option<f64>,
}

impl StatRow {
    pub fn closed_only(statistic: impl Into<String>, value: &BigRational) -> Self {
        StatRow {
            statistic: statistic.into(),
            closed_form: rational_str(value),
            closed_form_float: rational_f64(value),
            mc_estimate: None,
            std_error: None,
        }
    }
}

#[derive(Serialize)]
pub struct MomentsArtifact {
    pub probabilities: ProbReport,
    pub seed: u64,
    pub trials: u64,
    pub max_steps: usize,
    pub censored: u64,
    pub statistics: Vec<StatRow>,
}

#[derive(Serialize)]
pub struct DistArtifact {
    pub probabilities: ProbReport,
    pub law: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    pub max_n: u64,
    pub rows: Vec<StatRow>,
}

#[derive(Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum TrialReport {
    Completed {
        steps: String,
        length: usize,
        genus: u32,
    },
    Censored {
        steps_taken: usize,
        x: i64,
        y: i64,
    },
}

#[derive(Serialize)]
pub struct SimulateArtifact {
    pub probabilities: ProbReport,
    pub seed: u64,
    pub max_steps: usize,
    pub trials: u64,
    pub results: Vec<TrialReport>,
}

#[derive(Serialize)]
pub struct GraphArtifact {
    pub genus: u64,
    pub max_crit: u64,
    pub vertices: usize,
    pub edges: u64,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Asserted lower bound on every degree (Catalan(genus) - 1 by default).
    pub degree_bound: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjacency: Option<Vec<Vec<u32>>>,
}

#[derive(Serialize)]
pub struct DomsetArtifact {
    pub genus: u64,
    pub max_crit: u64,
    pub method: &'static str,
    pub seed: u64,
    pub size: usize,
    /// First-moment size bound at the graph's actual minimum degree.
    pub bound: f64,
    pub vertices: Vec<u32>,
    pub walks: Vec<String>,
    pub attempts: Option<u64>,
}

/// Pretty JSON with a trailing newline (byte-identical across runs).
pub fn to_json_string<T: Serialize>(artifact: &T) -> String {
    let mut s = serde_json::to_string_pretty(artifact).expect("artifact serialization");
    s.push('\n');
    s
}

/// Naive CSV over the fixed statistic-row columns; row names never contain
/// commas or quotes.
pub fn rows_to_csv(rows: &[StatRow]) -> String {
    let mut out = String::from("statistic,closed_form,closed_form_float,mc_estimate,std_error\n");
    for row in rows {
        debug_assert!(!row.statistic.contains([',', '"']));
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.statistic,
            row.closed_form,
            row.closed_form_float,
            opt(row.mc_estimate),
            opt(row.std_error),
        ));
    }
    out
}
