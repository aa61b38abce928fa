//! Arithmetic-progression weight sets on graphs of degree >= 3: exhaustive
//! search on small graphs, seeded conflict-descent local search otherwise.

use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::rational::{Rational, WeightSet};

/// Largest edge count searched exhaustively.
pub const EXHAUSTIVE_MAX_EDGES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalSearchBudget {
    pub restarts: usize,
    pub steps_per_restart: usize,
    pub seed: u64,
}

impl Default for LocalSearchBudget {
    fn default() -> Self {
        Self {
            restarts: 20,
            steps_per_restart: 200_000,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FallbackRoute {
    Exhaustive,
    LocalSearch,
}

pub fn arithmetic_fallback(g: &Graph, q: &WeightSet, budget: LocalSearchBudget) -> Result<(Vec<Rational>, FallbackRoute)> {
    if g.m() <= EXHAUSTIVE_MAX_EDGES {
        return match oracle::find_proper(g, q, EXHAUSTIVE_MAX_EDGES)? {
            Some(w) => Ok((w, FallbackRoute::Exhaustive)),
            None => Err(Error::FallbackExhausted(format!("exhaustive search over {} edges found nothing", g.m()))),
        };
    }
    local_search(g, q, budget)
        .map(|w| (w, FallbackRoute::LocalSearch))
        .ok_or_else(|| {
            Error::FallbackExhausted(format!(
                "local search gave up after {} restarts of {} steps",
                budget.restarts, budget.steps_per_restart
            ))
        })
}

/// Minimises the number of conflicting edges by single-edge reweighting
/// around a random conflict, with occasional random moves.
pub fn local_search(g: &Graph, q: &WeightSet, budget: LocalSearchBudget) -> Option<Vec<Rational>> {
    let (scaled, _) = q.scaled_integers();
    let vals: Vec<i128> = scaled.iter().map(ToPrimitive::to_i128).collect::<Option<_>>()?;
    let m = g.m();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    for _ in 0..budget.restarts {
        let mut w: Vec<usize> = (0..m).map(|_| rng.gen_range(0..3)).collect();
        let mut dw = vec![0i128; g.n()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            dw[u] += vals[w[e]];
            dw[v] += vals[w[e]];
        }
        let conflicts_at = |dw: &[i128], x: usize| g.neighbors(x).filter(|&y| dw[x] == dw[y]).count();
        for _ in 0..budget.steps_per_restart {
            let bad: Vec<usize> = (0..m).filter(|&e| {
                let (u, v) = g.edge(e);
                dw[u] == dw[v]
            }).collect();
            if bad.is_empty() {
                return Some(w.iter().map(|&x| q.values()[x].clone()).collect());
            }
            let (u, v) = g.edge(*bad.choose(&mut rng).unwrap());
            let mut moves: Vec<(usize, usize)> = Vec::new();
            for &(_, e) in g.incident(u).iter().chain(g.incident(v)) {
                for x in 0..3 {
                    if x != w[e] {
                        moves.push((e, x));
                    }
                }
            }
            let chosen = if rng.gen_bool(0.1) {
                *moves.choose(&mut rng).unwrap()
            } else {
                let mut best = Vec::new();
                let mut best_delta = i64::MAX;
                for &(e, x) in &moves {
                    let (a, b) = g.edge(e);
                    let before = (conflicts_at(&dw, a) + conflicts_at(&dw, b)) as i64;
                    let delta = vals[x] - vals[w[e]];
                    dw[a] += delta;
                    dw[b] += delta;
                    let after = (conflicts_at(&dw, a) + conflicts_at(&dw, b)) as i64;
                    dw[a] -= delta;
                    dw[b] -= delta;
                    let d = after - before;
                    if d < best_delta {
                        best_delta = d;
                        best.clear();
                    }
                    if d == best_delta {
                        best.push((e, x));
                    }
                }
                *best.choose(&mut rng).unwrap()
            };
            let (e, x) = chosen;
            let (a, b) = g.edge(e);
            let delta = vals[x] - vals[w[e]];
            dw[a] += delta;
            dw[b] += delta;
            w[e] = x;
        }
    }
    None
}
