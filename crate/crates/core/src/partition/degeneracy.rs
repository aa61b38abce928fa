use crate::graph::{Graph, Vertex};

/// Smallest-last ordering (repeatedly remove a minimum-degree vertex, lowest
/// index first) and the degeneracy, i.e. the largest degree seen at removal.
pub fn degeneracy_order(g: &Graph) -> (Vec<Vertex>, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        degeneracy = degeneracy.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    (order, degeneracy)
}

/// Greedy colouring along the reversed smallest-last order, using the
/// smallest colour absent from already-coloured neighbours. Uses at most
/// degeneracy + 1 colours.
pub fn degeneracy_coloring(g: &Graph) -> Vec<usize> {
    let (order, _) = degeneracy_order(g);
    let mut color = vec![usize::MAX; g.n()];
    for &v in order.iter().rev() {
        let taken: Vec<usize> = g.neighbors(v).map(|u| color[u]).filter(|&c| c != usize::MAX).collect();
        color[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    color
}

pub fn color_count(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |&c| c + 1)
}
