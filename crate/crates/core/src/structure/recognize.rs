use serde::{Deserialize, Serialize};

use crate::graph::{bit, Bits, Graph};

/// Connected, 2-regular, odd order.
pub fn is_odd_cycle(g: &Graph) -> bool {
    g.n() % 2 == 1 && g.n() >= 3 && g.rows().iter().all(|r| r.count_ones() == 2) && g.is_connected()
}

/// Walks the cycle through the component `comp` of a 2-regular graph,
/// starting at its smallest vertex towards its smaller neighbor.
pub(crate) fn cycle_order(g: &Graph, comp: u64) -> Vec<usize> {
    let start = comp.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (g.nbr_mask(start) & comp).trailing_zeros() as usize;
    while cur != start && order.len() <= comp.count_ones() as usize {
        order.push(cur);
        let next = (g.nbr_mask(cur) & comp & !bit(prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    order
}

/// Branch structure of a topological K4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4Subdivision {
    /// The four branch vertices, increasing.
    pub branch: [usize; 4],
    /// Six branch paths, endpoints included, ordered by endpoint pair.
    pub paths: Vec<Vec<usize>>,
}

impl K4Subdivision {
    /// Internal vertex count of each path.
    pub fn internal_counts(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.len() - 2).collect()
    }
}

/// Recognizes even subdivisions of K4: four vertices of degree 3, all others
/// of degree 2, six internally disjoint paths joining distinct pairs of
/// branch vertices, each with an even number of internal vertices.
pub fn is_even_subdivision_k4(g: &Graph) -> Option<K4Subdivision> {
    let n = g.n();
    let mut branch_mask = 0u64;
    for v in 0..n {
        match g.degree(v) {
            3 => branch_mask |= bit(v),
            2 => {}
            _ => return None,
        }
    }
    if branch_mask.count_ones() != 4 {
        return None;
    }
    let branch: Vec<usize> = Bits(branch_mask).collect();
    let mut paths: Vec<Vec<usize>> = Vec::with_capacity(6);
    for &b in &branch {
        for first in Bits(g.nbr_mask(b)) {
            let mut path = vec![b];
            let (mut prev, mut cur) = (b, first);
            while branch_mask & bit(cur) == 0 {
                if path.len() > n {
                    return None;
                }
                path.push(cur);
                let next = (g.nbr_mask(cur) & !bit(prev)).trailing_zeros() as usize;
                prev = cur;
                cur = next;
            }
            path.push(cur);
            if cur == b {
                return None;
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort_by_key(|p| (p[0], p[p.len() - 1]));
    if paths.len() != 6 || paths.windows(2).any(|w| (w[0][0], w[0].last()) == (w[1][0], w[1].last())) {
        return None;
    }
    let covered: usize = 4 + paths.iter().map(|p| p.len() - 2).sum::<usize>();
    if covered != n || paths.iter().any(|p| (p.len() - 2) % 2 == 1) {
        return None;
    }
    Some(K4Subdivision {
        branch: [branch[0], branch[1], branch[2], branch[3]],
        paths,
    })
}
