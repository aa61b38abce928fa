use std::collections::BTreeSet;

use num_traits::Zero;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{layered_partition_with, LayeredPartition, MisStrategy};
use crate::rational::{Rational, WeightSet};
use crate::verifier::{audit, AuditReport, AuditStage};

use super::log::{ConstructionLog, Milestone};
use super::state::{check_gaps, WeightState};
use super::{lemma3, phase1, phase2, Branch, Construction, MisMode, Options};

/// A finished `{-d1, 0, d2}` construction together with its log.
pub struct Built<'g> {
    pub state: WeightState<'g>,
    pub construction: Construction,
    pub log: ConstructionLog,
    pub audits: Vec<AuditReport>,
}

/// Proper `{-d1, 0, d2}`-weighting of a `k`-regular graph, `k >= 3`.
pub fn weight_regular(g: &Graph, d1: Rational, d2: Rational, options: &Options) -> Result<Certificate> {
    let built = construct(g, d1.clone(), d2.clone(), options)?;
    let q = WeightSet::centered(&d1, &d2)?;
    let mut cert = Certificate::build(
        g,
        &q,
        &built.state.weights(),
        Branch::Centered,
        Some(built.construction),
        built.log,
    )?;
    if !cert.is_proper() {
        return Err(Error::Invariant(format!(
            "construction finished with {} conflicts",
            cert.verdict.conflict_count
        )));
    }
    if options.audit {
        cert.audits = built.audits;
    }
    Ok(cert)
}

/// Runs the construction and returns the final state. In optimistic mode a
/// failed matching marks the responsible layer exact and starts over.
pub fn construct<'g>(g: &'g Graph, d1: Rational, d2: Rational, options: &Options) -> Result<Built<'g>> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    if k < 3 {
        return Err(Error::DegreeTooSmall { k, min: 3 });
    }
    check_gaps(&d1, &d2)?;
    let mut exact: BTreeSet<usize> = BTreeSet::new();
    let mut retries = Vec::new();
    loop {
        let partition = layered_partition_with(g, |i| match options.mis {
            MisMode::Exact => MisStrategy::Exact,
            MisMode::Optimistic if exact.contains(&i) => MisStrategy::Exact,
            MisMode::Optimistic => MisStrategy::Greedy,
        });
        match attempt(g, partition, d1.clone(), d2.clone(), options) {
            Err(Error::Saturation(f)) if options.mis == MisMode::Optimistic => {
                let layer = f.layer.ok_or(Error::Saturation(f.clone()))?;
                if !exact.insert(layer) {
                    return Err(Error::Saturation(f));
                }
                retries.push(Milestone::ExactRetry {
                    layer,
                    violator: f.violator,
                });
            }
            Ok(mut built) => {
                retries.append(&mut built.log.milestones);
                built.log.milestones = retries;
                return Ok(built);
            }
            Err(e) => return Err(e),
        }
    }
}

fn attempt<'g>(
    g: &'g Graph,
    partition: LayeredPartition,
    d1: Rational,
    d2: Rational,
    options: &Options,
) -> Result<Built<'g>> {
    let mut log = ConstructionLog::default();
    let problems = partition.check(g);
    if !problems.is_empty() {
        return Err(Error::Invariant(format!("layered partition: {}", problems.join("; "))));
    }
    log.push(Milestone::Partition {
        layer_sizes: partition.layers().iter().map(|l| l.len()).collect(),
        exact_layers: (0..partition.len()).filter(|&i| partition.is_exact(i)).collect(),
    });
    let last = partition.last().unwrap_or(0);
    let mut state = WeightState::new(g, partition, d1, d2)?;
    let mut audits = Vec::new();
    let mut gate = |state: &WeightState<'_>, stage: AuditStage, log: &mut ConstructionLog| -> Result<()> {
        let report = audit(state, stage);
        log.push(Milestone::Audit {
            stage,
            passed: report.passed(),
        });
        let ok = report.passed();
        let summary = report.summary();
        audits.push(report);
        if ok {
            Ok(())
        } else {
            Err(Error::Invariant(summary))
        }
    };
    let construction = if last <= 1 {
        debug_assert!(last == 1 || g.m().is_zero());
        lemma3::run(&mut state)?;
        gate(&state, AuditStage::Lemma3, &mut log)?;
        Construction::Bipartite
    } else {
        phase1::phase1(&mut state, &mut log, options.check_steps)?;
        gate(&state, AuditStage::PostPhase1, &mut log)?;
        phase2::phase2(&mut state, &mut log, options.check_steps)?;
        gate(&state, AuditStage::PostPhase2, &mut log)?;
        Construction::TwoPhase
    };
    Ok(Built {
        state,
        construction,
        log,
        audits,
    })
}
