//! Simple undirected graphs stored as neighbor bitsets.
//!
//! Rows are packed into `u64` words. Graphs of order at most 64 occupy a
//! single word per row and expose [`Graph::mask`] for the solvers; larger
//! orders fall back to multi-word rows and are still accepted by parsing,
//! encoding, traversal and planarity testing.

mod canon;
mod graph6;
mod labeling;

pub use canon::{canonical_code, is_isomorphic, CanonicalCode};
pub use graph6::{parse_graph6, parse_graph6_lines, to_graph6};
pub use labeling::{Role, VertexLabeling};

use crate::error::{Error, Result};
use std::fmt;

/// Single-word vertex set for graphs of order at most 64.
pub type Mask = u64;

/// Largest order handled by the single-word fast path.
pub const MASK_BITS: usize = 64;

#[inline]
pub fn bit(v: usize) -> Mask {
    1u64 << v
}

/// Iterates the set bits of a mask in increasing order.
pub fn iter_mask(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

#[inline]
pub fn full_mask(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameters(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::path(n);
        g.insert_edge(n - 1, 0);
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        total as usize / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| iter_mask(w).map(move |b| i * 64 + b))
    }

    /// Whether the single-word fast path applies.
    #[inline]
    pub fn fits_mask(&self) -> bool {
        self.n <= MASK_BITS
    }

    /// Open neighborhood of `v` as a mask. Only valid when [`Graph::fits_mask`].
    #[inline]
    pub fn mask(&self, v: usize) -> Mask {
        debug_assert!(self.fits_mask());
        self.rows[v * self.words]
    }

    /// Open neighborhoods of all vertices; fails above 64 vertices.
    pub fn masks(&self) -> Result<Vec<Mask>> {
        if !self.fits_mask() {
            return Err(Error::TooLarge { n: self.n });
        }
        Ok((0..self.n).map(|v| self.mask(v)).collect())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        Ok(count == self.n)
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.row(v).iter().all(|&w| w == 0))
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// Copy with one extra vertex `n` joined to `nbrs`.
    pub fn with_new_vertex(&self, nbrs: impl IntoIterator<Item = usize>) -> Graph {
        let mut g = Graph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for u in nbrs {
            g.insert_edge(u, self.n);
        }
        g
    }

    /// Copy with the given edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.rows[u * self.words + v / 64] &= !(1u64 << (v % 64));
        g.rows[v * self.words + u / 64] &= !(1u64 << (u % 64));
        g
    }

    /// Symmetry and irreflexivity of the adjacency rows.
    pub fn check_invariants(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u) && self.neighbors(u).all(|v| v < self.n && self.has_edge(v, u))
        })
    }

    /// Bipartition of the vertex set if one exists; each component is colored
    /// starting from its smallest vertex on side 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// If the graph is `K_{p,q}` with `p, q >= 1`, its two parts (the part
    /// holding vertex 0 first).
    pub fn complete_bipartite_parts(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.n < 2 {
            return None;
        }
        let side = self.bipartition()?;
        let a: Vec<usize> = (0..self.n).filter(|&v| side[v] == side[0]).collect();
        let b: Vec<usize> = (0..self.n).filter(|&v| side[v] != side[0]).collect();
        if b.is_empty() || self.edge_count() != a.len() * b.len() {
            return None;
        }
        Some((a, b))
    }

    pub fn is_complete_bipartite(&self) -> bool {
        self.complete_bipartite_parts().is_some()
    }

    /// Graphviz rendering; labels come from `labeling` when given.
    pub fn to_dot(&self, labeling: Option<&VertexLabeling>) -> String {
        let names = labeling.map(|l| l.vertex_names(self.n));
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            match names.as_ref().and_then(|n| n[v].as_ref()) {
                Some(name) => s.push_str(&format!("  {v} [label=\"{name}\"];\n")),
                None => s.push_str(&format!("  {v};\n")),
            }
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// `K_{p,q}`: part `A = 0..p`, part `B = p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<(Graph, VertexLabeling)> {
    if p == 0 || q == 0 {
        return Err(Error::ZeroPart { p, q });
    }
    let mut g = Graph::empty(p + q);
    for u in 0..p {
        for v in p..p + q {
            g.insert_edge(u, v);
        }
    }
    let mut labeling = VertexLabeling::new();
    labeling.insert_part("A", (0..p).collect());
    labeling.insert_part("B", (p..p + q).collect());
    Ok((g, labeling))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_collapses_duplicates() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g, Graph::complete(3));
        assert!(g.check_invariants());
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::SelfLoop { v: 1 })
        );
    }

    #[test]
    fn small_standard_graphs() {
        let two = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(two.edge_count(), 0);
        assert!(!two.is_connected().unwrap());
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert!(c4.is_connected().unwrap());
        assert_eq!(Graph::empty(0).is_connected(), Err(Error::EmptyGraph));
    }

    #[test]
    fn complete_bipartite_shapes() {
        let (c4, _) = complete_bipartite(2, 2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(is_isomorphic(&c4, &Graph::cycle(4).unwrap()));
        let (star, _) = complete_bipartite(1, 3).unwrap();
        assert_eq!(star.degree(0), 3);
        let (k33, l) = complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert!((0..6).all(|v| k33.degree(v) == 3));
        assert!(l.validate(6).is_ok());
        assert!(k33.is_connected().unwrap());
        assert_eq!(complete_bipartite(0, 3).unwrap_err(), Error::ZeroPart { p: 0, q: 3 });
        let (k23, _) = complete_bipartite(2, 3).unwrap();
        assert!(k23.is_connected().unwrap());
        assert_eq!(k23.degree_sequence(), vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn complete_bipartite_recognition() {
        assert!(complete_bipartite(2, 5).unwrap().0.is_complete_bipartite());
        assert!(!Graph::path(4).is_complete_bipartite());
        assert!(Graph::path(3).is_complete_bipartite());
        assert!(!Graph::complete(3).is_complete_bipartite());
        assert!(!Graph::empty(1).is_complete_bipartite());
    }

    #[test]
    fn large_order_fallback() {
        let g = Graph::path(100);
        assert!(!g.fits_mask());
        assert_eq!(g.edge_count(), 99);
        assert!(g.is_connected().unwrap());
        assert!(g.has_edge(70, 71));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert!(g.masks().is_err());
    }

    #[test]
    fn dot_uses_labels() {
        let (g, l) = complete_bipartite(1, 1).unwrap();
        let dot = g.to_dot(Some(&l));
        assert!(dot.contains("0 -- 1"));
        assert!(dot.contains("label=\"A\""));
    }
}
