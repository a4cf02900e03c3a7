use crate::graph::{bit, Bits, Graph};

/// Finds a bijection `target → G` mapping every edge of `target` onto an
/// edge of `G`, i.e. a spanning copy of `target` inside `G`. The result is
/// indexed by target vertex.
///
/// Target vertices are placed in decreasing-degree order; a host vertex is a
/// candidate only if its degree is at least the target vertex's and it is
/// adjacent to the images of all already-placed target neighbors.
pub fn spanning_embedding(g: &Graph, target: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if target.n() != n || target.edge_count() > g.edge_count() {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&t| std::cmp::Reverse(target.degree(t)));
    let mut image = vec![usize::MAX; n];
    if place(g, target, &order, 0, 0, &mut image) {
        Some(image)
    } else {
        None
    }
}

fn place(g: &Graph, target: &Graph, order: &[usize], depth: usize, used: u64, image: &mut [usize]) -> bool {
    if depth == order.len() {
        return true;
    }
    let t = order[depth];
    let need = target.degree(t);
    let mut cand = g.vertex_mask() & !used;
    for u in Bits(target.nbr_mask(t)) {
        if image[u] != usize::MAX {
            cand &= g.nbr_mask(image[u]);
        }
    }
    for v in Bits(cand) {
        if g.degree(v) < need {
            continue;
        }
        image[t] = v;
        if place(g, target, order, depth + 1, used | bit(v), image) {
            return true;
        }
    }
    image[t] = usize::MAX;
    false
}
