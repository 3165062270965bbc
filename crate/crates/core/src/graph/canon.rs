//! Canonical forms for small graphs.
//!
//! Vertices are first split by iterated color refinement (an
//! isomorphism-invariant ordered partition); the code is then the minimum
//! upper-triangle adjacency string over every labeling that respects the cell
//! order. Exact, and cheap whenever refinement separates most vertices.

use super::Graph;

/// Order followed by the packed upper triangle (row-major, `i < j`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub order: usize,
    pub bits: Vec<u64>,
}

impl CanonicalCode {
    /// The graph in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let mut g = Graph::empty(n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    g.insert_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&color);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap())
            .collect();
        let next_classes = sorted.len();
        color = next;
        if next_classes == classes {
            return color;
        }
        classes = next_classes;
    }
}

fn count_distinct(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64).max(1)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                // most significant first so that Vec<u64> ordering is lexicographic
                bits[k / 64] |= 1u64 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

/// Canonical code: two graphs are isomorphic iff their codes are equal.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let n = g.order();
    let color = refine(g);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); count_distinct(&color)];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    let mut best: Option<Vec<u64>> = None;
    let mut order = Vec::with_capacity(n);
    let mut cells_work = cells.clone();
    search(g, &mut cells_work, 0, &mut order, &mut best);
    CanonicalCode {
        order: n,
        bits: best.unwrap_or_default(),
    }
}

// Enumerates every ordering that lists cell 0 first, then cell 1, ...
fn search(
    g: &Graph,
    cells: &mut [Vec<usize>],
    cell: usize,
    order: &mut Vec<usize>,
    best: &mut Option<Vec<u64>>,
) {
    if cell == cells.len() {
        let code = encode(g, order);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    if cells[cell].is_empty() {
        search(g, cells, cell + 1, order, best);
        return;
    }
    let members = cells[cell].clone();
    for (i, &v) in members.iter().enumerate() {
        cells[cell].remove(i);
        order.push(v);
        search(g, cells, cell, order, best);
        order.pop();
        cells[cell].insert(i, v);
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_graphs_share_a_code() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let h = g.relabel(&[5, 3, 1, 0, 2, 4]);
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert!(is_isomorphic(&g, &h));
        let c = canonical_code(&g);
        assert_eq!(canonical_code(&c.to_graph()), c);
    }

    #[test]
    fn regular_graphs_are_distinguished() {
        // C6 versus two triangles: same degree sequence, refinement cannot split
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&two_k3));
        assert!(!is_isomorphic(&c6, &two_k3));
    }
}
