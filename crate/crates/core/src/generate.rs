//! Random regular graphs via the pairing (configuration) model.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const RESAMPLES: usize = 100;
const SWAPS_PER_POINT: usize = 200;

/// Simple `k`-regular graph on `n` vertices, deterministic in `seed`.
///
/// Up to 100 uniform pairings are tried; if none is simple, the last one is
/// repaired with degree-preserving edge swaps. Dense requests (`2k > n - 1`)
/// are answered with the complement of a sparse one.
pub fn gen_random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if !(n * k).is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("n*k = {} is odd", n * k)));
    }
    if k > 0 && k >= n {
        return Err(Error::InvalidParameters(format!("degree {k} needs more than {n} vertices")));
    }
    if 2 * k > n.saturating_sub(1) {
        let sparse = gen_random_regular(n, n - 1 - k, seed)?;
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        return Graph::from_edges(n, edges.filter(|&(u, v)| !sparse.has_edge(u, v)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    let mut pairs = Vec::new();
    for _ in 0..RESAMPLES {
        points.shuffle(&mut rng);
        pairs = points.chunks(2).map(|c| (c[0], c[1])).collect::<Vec<_>>();
        if is_simple(&pairs) {
            return Graph::from_edges(n, pairs);
        }
    }
    repair(&mut pairs, &mut rng, SWAPS_PER_POINT * points.len().max(1))?;
    Graph::from_edges(n, pairs)
}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

fn is_simple(pairs: &[(Vertex, Vertex)]) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(pairs.len());
    pairs.iter().all(|&(u, v)| u != v && seen.insert(key(u, v)))
}

fn repair(pairs: &mut [(Vertex, Vertex)], rng: &mut ChaCha8Rng, budget: usize) -> Result<()> {
    let mut count: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for &(u, v) in pairs.iter() {
        *count.entry(key(u, v)).or_default() += 1;
    }
    let is_bad = |count: &HashMap<_, usize>, (u, v): (Vertex, Vertex)| u == v || count[&key(u, v)] > 1;
    for _ in 0..budget {
        let bad: Vec<usize> = (0..pairs.len()).filter(|&i| is_bad(&count, pairs[i])).collect();
        let Some(&b) = bad.first() else {
            return Ok(());
        };
        let j = rng.gen_range(0..pairs.len());
        if j == b {
            continue;
        }
        let (x, y) = pairs[b];
        let (mut c, mut d) = pairs[j];
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut c, &mut d);
        }
        if x == c || y == d {
            continue;
        }
        let (e1, e2) = (key(x, c), key(y, d));
        if e1 == e2 || count.get(&e1).copied().unwrap_or(0) > 0 || count.get(&e2).copied().unwrap_or(0) > 0 {
            continue;
        }
        for old in [key(x, y), key(c, d)] {
            let slot = count.get_mut(&old).unwrap();
            *slot -= 1;
            if *slot == 0 {
                count.remove(&old);
            }
        }
        *count.entry(e1).or_default() += 1;
        *count.entry(e2).or_default() += 1;
        pairs[b] = (x, c);
        pairs[j] = (y, d);
    }
    if pairs.iter().all(|&p| !is_bad(&count, p)) {
        Ok(())
    } else {
        Err(Error::BudgetExhausted("edge-swap repair did not reach a simple graph".into()))
    }
}
