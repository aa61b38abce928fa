//! Exact maximum independent set by branch and bound.
//!
//! Branches on a maximum-degree vertex (take it, then discard it), applies
//! the degree <= 1 reduction, splits disconnected remainders into separately
//! solved components, solves max-degree-2 remainders (disjoint cycles) in
//! closed form and prunes with a greedy clique-cover upper bound. All choices
//! break ties by smallest vertex index, so the result is deterministic.

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    maximum_independent_set_within(g, &VertexSet::full(g.n()))
}

/// Maximum independent set of `G[allowed]`.
pub fn maximum_independent_set_within(g: &Graph, allowed: &VertexSet) -> VertexSet {
    let picked = solve(g, allowed.clone());
    VertexSet::from_iter_in(g.n(), picked)
}

/// Minimum-degree greedy; the result is maximal in `G[allowed]`.
pub fn greedy_independent_set(g: &Graph, allowed: &VertexSet) -> VertexSet {
    let mut p = allowed.clone();
    let mut out = VertexSet::new(g.n());
    while !p.is_empty() {
        let v = p
            .iter()
            .min_by_key(|&v| (g.neighbor_set(v).intersection_len(&p), v))
            .unwrap();
        out.insert(v);
        p.remove(v);
        p.difference_with(g.neighbor_set(v));
    }
    out
}

fn deg_in(g: &Graph, v: Vertex, p: &VertexSet) -> usize {
    g.neighbor_set(v).intersection_len(p)
}

/// Takes every vertex of degree <= 1 in `G[p]` until none is left.
fn reduce(g: &Graph, p: &mut VertexSet, taken: &mut Vec<Vertex>) {
    loop {
        let Some(v) = p.iter().find(|&v| deg_in(g, v, p) <= 1) else {
            return;
        };
        taken.push(v);
        p.remove(v);
        p.difference_with(g.neighbor_set(v));
    }
}

fn solve(g: &Graph, p: VertexSet) -> Vec<Vertex> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    // Any maximal set is a valid starting incumbent.
    best.extend(greedy_independent_set(g, &p).iter());
    branch(g, p, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn branch(g: &Graph, mut p: VertexSet, current: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
    let mark = current.len();
    reduce(g, &mut p, current);
    if p.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        current.truncate(mark);
        return;
    }
    if current.len() + clique_cover_bound(g, &p) <= best.len() {
        current.truncate(mark);
        return;
    }
    let components = components_within(g, &p);
    if components.len() > 1 {
        for comp in components {
            current.extend(solve(g, comp));
        }
        if current.len() > best.len() {
            *best = current.clone();
        }
        current.truncate(mark);
        return;
    }
    let (v, dv) = p
        .iter()
        .map(|v| (v, deg_in(g, v, &p)))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .unwrap();
    if dv <= 2 {
        current.extend(cycle_cover(g, &p));
        if current.len() > best.len() {
            *best = current.clone();
        }
        current.truncate(mark);
        return;
    }
    // Take v.
    let mut with = p.clone();
    with.remove(v);
    with.difference_with(g.neighbor_set(v));
    current.push(v);
    branch(g, with, current, best);
    current.pop();
    // Discard v.
    p.remove(v);
    branch(g, p, current, best);
    current.truncate(mark);
}

/// Number of cliques in a greedy clique cover of `G[p]`; an upper bound on
/// its independence number.
fn clique_cover_bound(g: &Graph, p: &VertexSet) -> usize {
    let mut commons: Vec<VertexSet> = Vec::new();
    for v in p.iter() {
        match commons.iter_mut().find(|c| c.contains(v)) {
            Some(c) => c.intersect_with(g.neighbor_set(v)),
            None => {
                let mut c = g.neighbor_set(v).clone();
                c.intersect_with(p);
                commons.push(c);
            }
        }
    }
    commons.len()
}

fn components_within(g: &Graph, p: &VertexSet) -> Vec<VertexSet> {
    let mut left = p.clone();
    let mut out = Vec::new();
    while let Some(s) = left.first() {
        let mut comp = VertexSet::new(g.n());
        comp.insert(s);
        let mut frontier = comp.clone();
        loop {
            let mut next = VertexSet::new(g.n());
            for v in frontier.iter() {
                next.union_with(g.neighbor_set(v));
            }
            next.intersect_with(p);
            next.difference_with(&comp);
            if next.is_empty() {
                break;
            }
            comp.union_with(&next);
            frontier = next;
        }
        left.difference_with(&comp);
        out.push(comp);
    }
    out
}

/// Closed form for `G[p]` with maximum degree <= 2: every other vertex along
/// each path (from its smaller end) or cycle (from its smallest vertex).
fn cycle_cover(g: &Graph, p: &VertexSet) -> Vec<Vertex> {
    let mut out = Vec::new();
    let mut seen = VertexSet::new(g.n());
    let nbrs = |v: Vertex| g.neighbor_set(v).intersection(p).to_vec();
    // Paths first, starting from endpoints.
    for v in p.iter() {
        if seen.contains(v) || nbrs(v).len() > 1 {
            continue;
        }
        let walk = walk_from(v, &nbrs);
        for (i, &u) in walk.iter().enumerate() {
            seen.insert(u);
            if i % 2 == 0 {
                out.push(u);
            }
        }
    }
    for v in p.iter() {
        if seen.contains(v) {
            continue;
        }
        let walk = walk_from(v, &nbrs);
        let take = walk.len() / 2;
        for (i, &u) in walk.iter().enumerate() {
            seen.insert(u);
            if i % 2 == 0 && i / 2 < take {
                out.push(u);
            }
        }
    }
    out
}

fn walk_from(start: Vertex, nbrs: &impl Fn(Vertex) -> Vec<Vertex>) -> Vec<Vertex> {
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = nbrs(cur).into_iter().find(|&u| u != prev && u != start);
        match next {
            Some(u) if !walk.contains(&u) => {
                walk.push(u);
                prev = cur;
                cur = u;
            }
            _ => return walk,
        }
    }
}
