//! 2-regular graphs: a transfer-matrix DP around each cycle.
//!
//! Walking a cycle `v0 v1 ... v(L-1)` with edge `e_j = v_j v_(j+1)`, the state
//! after choosing `e_j` is `(w(e_0), w(e_1), w(e_(j-1)), w(e_j))`. Adding
//! `e_(j+1)` settles the degree of `v_(j+1)` and hence the edge `e_j`; closing
//! the cycle settles `e_(L-1)` and `e_0`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::rational::{Rational, WeightSet};

type State = (u8, u8, u8, u8);

/// A proper weighting by edge id, or `None` if some cycle has none.
pub fn weight_cycle(g: &Graph, q: &WeightSet) -> Result<Option<Vec<Rational>>> {
    if g.regularity() != Some(2) {
        return Err(Error::NotRegular);
    }
    let mut levels = vec![0u8; g.m()];
    for comp in g.components() {
        let edges = cycle_edges(g, &comp);
        match solve_cycle(q, edges.len()) {
            Some(seq) => {
                for (e, x) in edges.into_iter().zip(seq) {
                    levels[e] = x;
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(levels.into_iter().map(|x| q.values()[x as usize].clone()).collect()))
}

/// Edge ids in cyclic order, starting at the smallest vertex towards its
/// smaller neighbour.
fn cycle_edges(g: &Graph, comp: &[Vertex]) -> Vec<EdgeId> {
    let start = comp[0];
    let mut out = Vec::with_capacity(comp.len());
    let (first, e0) = g.incident(start)[0];
    out.push(e0);
    let (mut prev, mut cur) = (start, first);
    while cur != start {
        let &(next, e) = g.incident(cur).iter().find(|&&(u, _)| u != prev).unwrap();
        out.push(e);
        prev = cur;
        cur = next;
    }
    out
}

fn solve_cycle(q: &WeightSet, len: usize) -> Option<Vec<u8>> {
    let w = q.values();
    let deg = |a: u8, b: u8| &w[a as usize] + &w[b as usize];
    // layers[j] maps a state after choosing e_j to its predecessor state.
    let mut layers: Vec<BTreeMap<State, State>> = Vec::with_capacity(len);
    let mut start = BTreeMap::new();
    for a in 0..3 {
        for b in 0..3 {
            start.insert((a, b, a, b), (a, b, a, b));
        }
    }
    layers.push(BTreeMap::new());
    layers.push(start);
    for _ in 2..len {
        let prev_layer = layers.last().unwrap();
        let mut next = BTreeMap::new();
        for &s in prev_layer.keys() {
            let (f0, f1, p, c) = s;
            for x in 0..3 {
                // Edge e_j between v_j (sees p, c) and v_(j+1) (sees c, x).
                if deg(p, c) != deg(c, x) {
                    next.entry((f0, f1, c, x)).or_insert(s);
                }
            }
        }
        layers.push(next);
    }
    let last = layers.last().unwrap();
    let (&end, _) = last.iter().find(|(&(f0, f1, p, c), _)| {
        // e_(L-1) joins v_(L-1) (sees p, c) and v_0 (sees c, f0);
        // e_0 joins v_0 and v_1 (sees f0, f1).
        deg(p, c) != deg(c, f0) && deg(c, f0) != deg(f0, f1)
    })?;
    let mut seq = vec![0u8; len];
    let mut s = end;
    for j in (1..len).rev() {
        seq[j] = s.3;
        if j == 1 {
            seq[0] = s.2;
        } else {
            s = layers[j][&s];
        }
    }
    Some(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::verifier::verify_proper;

    fn brute_exists(g: &Graph, q: &WeightSet) -> bool {
        let m = g.m();
        (0..3usize.pow(m as u32)).any(|mut code| {
            let w: Vec<Rational> = (0..m)
                .map(|_| {
                    let x = q.values()[code % 3].clone();
                    code /= 3;
                    x
                })
                .collect();
            verify_proper(g, &w, q).unwrap().is_proper()
        })
    }

    #[test]
    fn triangle_uses_all_three_weights() {
        let g = Graph::cycle(3);
        let q = WeightSet::from_ints(-1, 0, 2).unwrap();
        let w = weight_cycle(&g, &q).unwrap().unwrap();
        let mut sorted = w.clone();
        sorted.sort();
        assert_eq!(sorted, vec![int(-1), int(0), int(2)]);
        assert!(verify_proper(&g, &w, &q).unwrap().is_proper());
    }

    #[test]
    fn c4_and_c5() {
        let c4 = Graph::cycle(4);
        let q = WeightSet::from_ints(1, 2, 3).unwrap();
        // Enumeration confirms (1,1,2,2) around C4 is proper.
        let sample = [int(1), int(1), int(2), int(2)];
        let ids: Vec<_> = (0..4).map(|i| c4.edge_id(i, (i + 1) % 4).unwrap()).collect();
        let mut w = vec![int(0); 4];
        for (k, e) in ids.into_iter().enumerate() {
            w[e] = sample[k].clone();
        }
        assert!(verify_proper(&c4, &w, &q).unwrap().is_proper());
        let w = weight_cycle(&c4, &q).unwrap().unwrap();
        assert!(verify_proper(&c4, &w, &q).unwrap().is_proper());

        let c5 = Graph::cycle(5);
        let q = WeightSet::from_ints(0, 1, 7).unwrap();
        assert!(brute_exists(&c5, &q));
        let w = weight_cycle(&c5, &q).unwrap().unwrap();
        assert!(verify_proper(&c5, &w, &q).unwrap().is_proper());
    }

    #[test]
    fn many_cycles_and_unions() {
        let q = WeightSet::from_ints(-3, -1, 0).unwrap();
        for n in 3..=12 {
            let g = Graph::cycle(n);
            let w = weight_cycle(&g, &q).unwrap().unwrap();
            assert!(verify_proper(&g, &w, &q).unwrap().is_proper(), "C{n}");
        }
        let g = Graph::cycle(3).disjoint_union(&Graph::cycle(4)).disjoint_union(&Graph::cycle(5));
        let w = weight_cycle(&g, &q).unwrap().unwrap();
        assert!(verify_proper(&g, &w, &q).unwrap().is_proper());
    }

    #[test]
    fn rejects_non_cycles() {
        let q = WeightSet::from_ints(1, 2, 3).unwrap();
        assert!(weight_cycle(&Graph::complete(4), &q).is_err());
        assert!(weight_cycle(&Graph::path(4), &q).is_err());
    }
}
