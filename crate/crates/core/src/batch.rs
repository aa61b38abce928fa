//! Many graphs times many weight sets, fanned out across worker threads.
//! Results always come back in input order.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::formats::parse_graph6_batch;
use crate::graph::Graph;
use crate::oracle::{find_proper, is_proper_assignment};
use crate::par::{self, Execution};
use crate::rational::WeightSet;
use crate::weighter::{weight_with_set, Branch, Options};

#[derive(Clone, Debug)]
pub struct BatchConfig {
    pub sets: Vec<WeightSet>,
    pub jobs: usize,
    /// Cross-check against exhaustive search when `m` is at most this.
    pub oracle_cap: usize,
    pub options: Options,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Proper,
    /// Input outside the guarantee: not regular, or a K2 component.
    Rejected,
    FallbackExhausted,
    InternalError,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunResult {
    pub set: WeightSet,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<Branch>,
    /// `Some(true)` when the exhaustive search also found a proper weighting
    /// and accepts ours.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineResult {
    pub line: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parse_error: Option<String>,
    pub runs: Vec<RunResult>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub lines: usize,
    pub parse_errors: usize,
    pub runs: usize,
    pub proper: usize,
    pub rejected: usize,
    pub fallback_exhausted: usize,
    pub internal_errors: usize,
    /// Runs on accepted inputs with a non-arithmetic set, and how many succeeded.
    pub guaranteed_runs: usize,
    pub guaranteed_proper: usize,
    pub oracle_checked: usize,
    pub oracle_agreed: usize,
    /// Proper runs over runs on accepted inputs; 1.0 when there are none.
    pub success_rate: f64,
    pub guaranteed_success_rate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub results: Vec<LineResult>,
    pub summary: Summary,
}

impl BatchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

pub fn run_batch(corpus: &str, config: &BatchConfig) -> BatchReport {
    let parsed = parse_graph6_batch(corpus);
    let exec = if config.jobs > 1 {
        Execution::Parallel
    } else {
        Execution::Sequential
    };
    let results = par::with_threads(config.jobs.max(1), || {
        par::map(exec, &parsed, |(line, graph)| match graph {
            Ok(g) => LineResult {
                line: *line,
                n: Some(g.n()),
                m: Some(g.m()),
                parse_error: None,
                runs: config.sets.iter().map(|q| run_one(g, q, config)).collect(),
            },
            Err(e) => LineResult {
                line: *line,
                n: None,
                m: None,
                parse_error: Some(e.to_string()),
                runs: Vec::new(),
            },
        })
    });
    let summary = summarize(&results);
    BatchReport { results, summary }
}

fn run_one(g: &Graph, q: &WeightSet, config: &BatchConfig) -> RunResult {
    let mut out = RunResult {
        set: q.clone(),
        status: Status::Proper,
        branch: None,
        oracle_agrees: None,
        message: None,
    };
    match weight_with_set(g, q, &config.options) {
        Ok(cert) => {
            out.branch = Some(cert.branch);
            if g.m() <= config.oracle_cap {
                let agrees = cert.weights().is_ok_and(|w| is_proper_assignment(g, q, &w))
                    && matches!(find_proper(g, q, config.oracle_cap), Ok(Some(_)));
                out.oracle_agrees = Some(agrees);
            }
        }
        Err(e) => {
            out.status = match e {
                Error::NotRegular | Error::NotNice(..) | Error::DegreeTooSmall { .. } => Status::Rejected,
                Error::FallbackExhausted(_) => Status::FallbackExhausted,
                _ => Status::InternalError,
            };
            out.message = Some(e.to_string());
        }
    }
    out
}

fn summarize(results: &[LineResult]) -> Summary {
    let mut s = Summary {
        lines: results.len(),
        ..Summary::default()
    };
    let mut accepted = 0usize;
    for line in results {
        if line.parse_error.is_some() {
            s.parse_errors += 1;
        }
        for run in &line.runs {
            s.runs += 1;
            match run.status {
                Status::Proper => s.proper += 1,
                Status::Rejected => s.rejected += 1,
                Status::FallbackExhausted => s.fallback_exhausted += 1,
                Status::InternalError => s.internal_errors += 1,
            }
            if run.status != Status::Rejected {
                accepted += 1;
                if !run.set.is_arithmetic() {
                    s.guaranteed_runs += 1;
                    s.guaranteed_proper += usize::from(run.status == Status::Proper);
                }
            }
            if let Some(agrees) = run.oracle_agrees {
                s.oracle_checked += 1;
                s.oracle_agreed += usize::from(agrees);
            }
        }
    }
    let rate = |num: usize, den: usize| if den == 0 { 1.0 } else { num as f64 / den as f64 };
    s.success_rate = rate(s.proper, accepted);
    s.guaranteed_success_rate = rate(s.guaranteed_proper, s.guaranteed_runs);
    s
}
