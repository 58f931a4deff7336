//! JSON report shapes emitted by the command-line interface.
//!
//! Field order is fixed by declaration order and `wall_ms` is always
//! present (null under `--no-timing`), so two runs of the same command on
//! the same input with timing suppressed produce byte-identical output.
//! Vertices in reports are 1-based to line up with the DIMACS files they
//! describe; diagnostic reason strings keep the library's 0-based ids and
//! say so.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::detect::Witness;
use crate::solver::{CliquePartition, ColorPartition, SolveTrace};

/// An induced forbidden pattern, with 1-based vertex labels.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessReport {
    pub pattern: String,
    pub vertices: Vec<usize>,
}

impl WitnessReport {
    pub fn from_witness(w: &Witness) -> Self {
        WitnessReport {
            pattern: w.pattern.name().to_string(),
            vertices: w.vertices.iter().map(|&v| v + 1).collect(),
        }
    }
}

/// Recursion summary of one solve.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TraceReport {
    pub recursion_nodes: usize,
    pub steps: BTreeMap<String, usize>,
}

impl TraceReport {
    pub fn from_trace(trace: &SolveTrace) -> Self {
        TraceReport {
            recursion_nodes: trace.node_count(),
            steps: trace
                .step_counts()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        }
    }
}

/// The one report shape shared by recognize, cover, color, verify, and
/// oracle runs; fields irrelevant to a command are omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_class: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceReport>,
    pub warnings: Vec<String>,
    pub wall_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str, input: &str, n: usize, m: usize) -> Self {
        Report {
            command: command.to_string(),
            input: input.to_string(),
            n,
            m,
            class: None,
            in_class: None,
            witness: None,
            value: None,
            parts: None,
            colors: None,
            verified: None,
            valid: None,
            reason: None,
            trace: None,
            warnings: Vec::new(),
            wall_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}

/// Clique parts in emission order, vertices 1-based and ascending.
pub fn cover_parts(cover: &CliquePartition) -> Vec<Vec<usize>> {
    cover
        .parts()
        .iter()
        .map(|p| p.iter().map(|v| v + 1).collect())
        .collect()
}

/// Color classes in color order, vertices 1-based and ascending.
pub fn coloring_parts(coloring: &ColorPartition) -> Vec<Vec<usize>> {
    coloring
        .classes()
        .iter()
        .map(|p| p.iter().map(|v| v + 1).collect())
        .collect()
}

/// One solved instance inside a bench run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchInstance {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub value: usize,
    pub recursion_nodes: usize,
    pub ms: Option<f64>,
}

/// Median solve time across the instances that share a vertex count.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchPoint {
    pub n: usize,
    pub runs: usize,
    pub median_ms: Option<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchReport {
    pub command: String,
    pub config: String,
    pub instances: Vec<BenchInstance>,
    pub per_n: Vec<BenchPoint>,
    /// Least-squares slope of log time against log size; the growth
    /// exponent if time follows a power law.
    pub slope: Option<f64>,
    pub wall_ms: Option<f64>,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}

/// Median of a sample; `None` when empty. Averages the middle pair on
/// even counts.
pub fn median(samples: &[f64]) -> Option<f64> {
    if samples.is_empty() {
        return None;
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("timings are finite"));
    let mid = sorted.len() / 2;
    Some(if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    })
}

/// Least-squares slope of `ln y` against `ln x`. Needs two distinct
/// sizes; nonpositive times are clamped to a microsecond floor so a
/// too-fast measurement cannot produce an infinite log.
pub fn fit_log_log_slope(points: &[(usize, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(n, _)| *n > 0)
        .map(|&(n, t)| ((n as f64).ln(), t.max(1e-3).ln()))
        .collect();
    let distinct = {
        let mut xs: Vec<u64> = logs.iter().map(|(x, _)| x.to_bits()).collect();
        xs.sort_unstable();
        xs.dedup();
        xs.len()
    };
    if distinct < 2 {
        return None;
    }
    let k = logs.len() as f64;
    let mean_x = logs.iter().map(|(x, _)| x).sum::<f64>() / k;
    let mean_y = logs.iter().map(|(_, y)| y).sum::<f64>() / k;
    let num: f64 = logs.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let den: f64 = logs.iter().map(|(x, _)| (x - mean_x) * (x - mean_x)).sum();
    Some(num / den)
}
