//! Exhaustive search over all `3^m` weightings with incremental conflict
//! pruning: edges are decided in id order, lightest weight first, and an edge
//! is checked as soon as every edge at both of its endpoints is decided.

use std::ops::{AddAssign, SubAssign};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::par::{self, Execution};
use crate::rational::{Rational, WeightSet};
use crate::weighter::{weight_with_set, Branch, Options};

pub const DEFAULT_CAP: usize = 20;

/// Edges fixed before the search tree is split across workers.
const SPLIT_DEPTH: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    First,
    Count,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    First(Option<Vec<Rational>>),
    Count(u64),
}

pub fn brute_force_search(g: &Graph, q: &WeightSet, mode: SearchMode, cap: usize) -> Result<SearchOutcome> {
    brute_force_search_with(g, q, mode, cap, Execution::Parallel)
}

pub fn brute_force_search_with(
    g: &Graph,
    q: &WeightSet,
    mode: SearchMode,
    cap: usize,
    exec: Execution,
) -> Result<SearchOutcome> {
    if g.m() > cap {
        return Err(Error::OracleCap { m: g.m(), cap });
    }
    let (scaled, _) = q.scaled_integers();
    let out = match small_values(&scaled, g.max_degree()) {
        Some(vals) => Search::new(g, vals).run(mode, exec),
        None => Search::new(g, scaled).run(mode, exec),
    };
    Ok(match out {
        Raw::First(a) => SearchOutcome::First(a.map(|a| a.iter().map(|&i| q.values()[i as usize].clone()).collect())),
        Raw::Count(c) => SearchOutcome::Count(c),
    })
}

pub fn find_proper(g: &Graph, q: &WeightSet, cap: usize) -> Result<Option<Vec<Rational>>> {
    match brute_force_search(g, q, SearchMode::First, cap)? {
        SearchOutcome::First(w) => Ok(w),
        SearchOutcome::Count(_) => unreachable!(),
    }
}

pub fn count_proper(g: &Graph, q: &WeightSet, cap: usize) -> Result<u64> {
    match brute_force_search(g, q, SearchMode::Count, cap)? {
        SearchOutcome::Count(c) => Ok(c),
        SearchOutcome::First(_) => unreachable!(),
    }
}

/// Whether `weights` is one of the proper weightings the search enumerates,
/// decided on the search's own integer representation.
pub fn is_proper_assignment(g: &Graph, q: &WeightSet, weights: &[Rational]) -> bool {
    if weights.len() != g.m() {
        return false;
    }
    let Some(idx) = weights.iter().map(|w| q.index_of(w)).collect::<Option<Vec<_>>>() else {
        return false;
    };
    let (scaled, _) = q.scaled_integers();
    let mut dw = vec![BigInt::zero(); g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        dw[u] += &scaled[idx[e]];
        dw[v] += &scaled[idx[e]];
    }
    g.edges().iter().all(|&(u, v)| dw[u] != dw[v])
}

fn small_values(scaled: &[BigInt; 3], max_degree: usize) -> Option<[i128; 3]> {
    let limit = i128::MAX / (max_degree.max(1) as i128 * 2);
    let mut out = [0i128; 3];
    for (o, s) in out.iter_mut().zip(scaled) {
        *o = s.to_i128().filter(|v| v.abs() <= limit)?;
    }
    Some(out)
}

enum Raw {
    First(Option<Vec<u8>>),
    Count(u64),
}

trait Acc: Clone + PartialEq + Zero + Send + Sync + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self> {}
impl<T> Acc for T where T: Clone + PartialEq + Zero + Send + Sync + for<'a> AddAssign<&'a T> + for<'a> SubAssign<&'a T> {}

struct Search<'g, T> {
    g: &'g Graph,
    vals: [T; 3],
    /// Edges whose endpoints become fully decided once edge `e` is set.
    check_at: Vec<Vec<EdgeId>>,
}

impl<'g, T: Acc> Search<'g, T> {
    fn new(g: &'g Graph, vals: [T; 3]) -> Self {
        let last: Vec<Option<EdgeId>> = (0..g.n()).map(|v| g.incident(v).iter().map(|&(_, e)| e).max()).collect();
        let mut check_at = vec![Vec::new(); g.m()];
        for (f, &(u, v)) in g.edges().iter().enumerate() {
            let done = last[u].max(last[v]).expect("edge endpoints have edges");
            check_at[done].push(f);
        }
        Self { g, vals, check_at }
    }

    fn run(&self, mode: SearchMode, exec: Execution) -> Raw {
        let m = self.g.m();
        let depth = SPLIT_DEPTH.min(m);
        let prefixes: Vec<Vec<u8>> = (0..3usize.pow(depth as u32))
            .map(|mut code| {
                let mut p = vec![0u8; depth];
                for slot in p.iter_mut().rev() {
                    *slot = (code % 3) as u8;
                    code /= 3;
                }
                p
            })
            .collect();
        match mode {
            SearchMode::First => Raw::First(par::find_map_first(exec, &prefixes, |p| self.search_prefix(p, true).1)),
            SearchMode::Count => Raw::Count(par::map(exec, &prefixes, |p| self.search_prefix(p, false).0).iter().sum()),
        }
    }

    /// Plays out a prefix and searches below it: `(count, first found)`.
    fn search_prefix(&self, prefix: &[u8], stop_at_first: bool) -> (u64, Option<Vec<u8>>) {
        let mut dw = vec![T::zero(); self.g.n()];
        let mut assign = vec![0u8; self.g.m()];
        for (e, &x) in prefix.iter().enumerate() {
            self.apply(e, x, &mut dw, &mut assign);
            if !self.ok_at(e, &dw) {
                return (0, None);
            }
        }
        let mut count = 0;
        let found = self.dfs(prefix.len(), &mut dw, &mut assign, stop_at_first, &mut count);
        (count, found.then_some(assign))
    }

    fn apply(&self, e: EdgeId, x: u8, dw: &mut [T], assign: &mut [u8]) {
        let (u, v) = self.g.edge(e);
        dw[u] += &self.vals[x as usize];
        dw[v] += &self.vals[x as usize];
        assign[e] = x;
    }

    fn undo(&self, e: EdgeId, x: u8, dw: &mut [T]) {
        let (u, v) = self.g.edge(e);
        dw[u] -= &self.vals[x as usize];
        dw[v] -= &self.vals[x as usize];
    }

    fn ok_at(&self, e: EdgeId, dw: &[T]) -> bool {
        self.check_at[e].iter().all(|&f| {
            let (u, v) = self.g.edge(f);
            dw[u] != dw[v]
        })
    }

    fn dfs(&self, e: EdgeId, dw: &mut [T], assign: &mut [u8], stop: bool, count: &mut u64) -> bool {
        if e == self.g.m() {
            *count += 1;
            return stop;
        }
        for x in 0..3u8 {
            self.apply(e, x, dw, assign);
            if self.ok_at(e, dw) && self.dfs(e + 1, dw, assign, stop, count) {
                return true;
            }
            self.undo(e, x, dw);
        }
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossCheckVerdict {
    /// The construction is proper and the search found a proper weighting too.
    Agree,
    /// The construction is proper but the search found nothing: a search bug.
    OracleMissed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub branch: Branch,
    pub constructed_member: bool,
    pub oracle_found: bool,
    pub verdict: CrossCheckVerdict,
}

/// Builds a weighting and compares it with the exhaustive search.
pub fn cross_check(g: &Graph, q: &WeightSet, options: &Options, cap: usize) -> Result<CrossCheck> {
    if g.m() > cap {
        return Err(Error::OracleCap { m: g.m(), cap });
    }
    let cert = weight_with_set(g, q, options)?;
    let w = cert.weights()?;
    let constructed_member = is_proper_assignment(g, q, &w);
    let oracle_found = find_proper(g, q, cap)?.is_some();
    if !constructed_member {
        return Err(Error::Invariant("constructed weighting is not proper".into()));
    }
    Ok(CrossCheck {
        branch: cert.branch,
        constructed_member,
        oracle_found,
        verdict: if oracle_found {
            CrossCheckVerdict::Agree
        } else {
            CrossCheckVerdict::OracleMissed
        },
    })
}
