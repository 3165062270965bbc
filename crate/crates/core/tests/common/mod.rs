//! Slow, obviously-correct reference implementations used as test oracles.
//! Nothing here calls into the solvers under test; graphs are plain
//! adjacency matrices.
#![allow(dead_code)]

use domchrom::Graph;
use rand::Rng;
use std::collections::BTreeSet;

pub type Adj = Vec<Vec<bool>>;

pub fn adj_of(g: &Graph) -> Adj {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn graph_of(adj: &Adj) -> Graph {
    let n = adj.len();
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn connected(adj: &Adj) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect()
}

pub fn naive_gamma(adj: &Adj) -> usize {
    let n = adj.len();
    (1..=n)
        .find(|&k| {
            subsets_of_size(n, k)
                .iter()
                .any(|s| (0..n).all(|v| s.contains(&v) || s.iter().any(|&d| adj[v][d])))
        })
        .unwrap()
}

pub fn naive_gamma_t(adj: &Adj) -> Option<usize> {
    let n = adj.len();
    (1..=n).find(|&k| {
        subsets_of_size(n, k)
            .iter()
            .any(|s| (0..n).all(|v| s.iter().any(|&d| adj[v][d])))
    })
}

/// Every set partition of `0..n`, as restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(v: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if v == n {
            let k = cur.iter().copied().max().map_or(0, |m| m + 1);
            let mut classes = vec![vec![]; k];
            for (u, &c) in cur.iter().enumerate() {
                classes[c].push(u);
            }
            out.push(classes);
            return;
        }
        for c in 0..=max.min(n) {
            cur.push(c);
            go(v + 1, n, cur, if c == max { max + 1 } else { max }, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(0, n, &mut vec![], 0, &mut out);
    out
}

pub fn independent(adj: &Adj, class: &[usize]) -> bool {
    class.iter().all(|&u| class.iter().all(|&v| !adj[u][v]))
}

pub fn proper(adj: &Adj, p: &[Vec<usize>]) -> bool {
    p.iter().all(|c| independent(adj, c))
}

/// Own-singleton convention.
pub fn dominates(adj: &Adj, v: usize, class: &[usize]) -> bool {
    class == [v] || class.iter().all(|&u| adj[v][u])
}

pub fn dominator(adj: &Adj, p: &[Vec<usize>]) -> bool {
    proper(adj, p) && (0..adj.len()).all(|v| p.iter().any(|c| dominates(adj, v, c)))
}

pub fn dominated(adj: &Adj, p: &[Vec<usize>]) -> bool {
    proper(adj, p) && p.iter().all(|c| (0..adj.len()).any(|v| c.iter().all(|&u| adj[v][u])))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveInvariants {
    pub gamma: usize,
    pub gamma_t: Option<usize>,
    pub chi: usize,
    pub chi_d: usize,
    pub chi_dom: Option<usize>,
}

pub fn naive_invariants(adj: &Adj) -> NaiveInvariants {
    let parts = all_partitions(adj.len());
    let min_k = |pred: &dyn Fn(&[Vec<usize>]) -> bool| parts.iter().filter(|p| pred(p)).map(Vec::len).min();
    NaiveInvariants {
        gamma: naive_gamma(adj),
        gamma_t: naive_gamma_t(adj),
        chi: min_k(&|p| proper(adj, p)).unwrap(),
        chi_d: min_k(&|p| dominator(adj, p)).unwrap(),
        chi_dom: if adj.len() == 1 { None } else { min_k(&|p| dominated(adj, p)) },
    }
}

/// Complete bipartite with both sides nonempty, by trying every split.
pub fn naive_complete_bipartite(adj: &Adj) -> bool {
    let n = adj.len();
    (1u32..(1 << n) - 1).any(|m| {
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                let cross = (m >> u & 1) != (m >> v & 1);
                adj[u][v] == cross
            })
        })
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = vec![];
    go(&mut vec![], &mut vec![false; n], &mut out);
    out
}

/// Minimum upper-triangle string over all n! relabelings.
pub fn naive_canonical(adj: &Adj) -> Vec<bool> {
    let n = adj.len();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut s = vec![];
            for i in 0..n {
                for j in i + 1..n {
                    s.push(adj[p[i]][p[j]]);
                }
            }
            s
        })
        .min()
        .unwrap_or_default()
}

/// All connected graphs of order n up to isomorphism, by filtering every
/// labeled graph.
pub fn naive_connected_classes(n: usize) -> BTreeSet<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = BTreeSet::new();
    for m in 0u64..1 << pairs.len() {
        let mut adj = vec![vec![false; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if m >> i & 1 == 1 {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
        if connected(&adj) {
            out.insert(naive_canonical(&adj));
        }
    }
    out
}

/// Independent graph6 decoder: (order, sorted edge list).
pub fn decode_graph6(s: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes: Vec<u32> = s.bytes().map(|b| b as u32 - 63).collect();
    let (n, rest) = if bytes[0] < 63 {
        (bytes[0] as usize, &bytes[1..])
    } else if bytes[1] < 63 {
        ((bytes[1] << 12 | bytes[2] << 6 | bytes[3]) as usize, &bytes[4..])
    } else {
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = n << 6 | b as usize;
        }
        (n, &bytes[8..])
    };
    let bit = |k: usize| rest[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut edges = vec![];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort();
    (n, edges)
}

fn has_k5_subgraph(adj: &Adj) -> bool {
    subsets_of_size(adj.len(), 5)
        .iter()
        .any(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || adj[u][v])))
}

fn has_k33_subgraph(adj: &Adj) -> bool {
    subsets_of_size(adj.len(), 6).iter().any(|s| {
        subsets_of_size(6, 3).iter().any(|side| {
            let a: Vec<usize> = side.iter().map(|&i| s[i]).collect();
            let b: Vec<usize> = s.iter().copied().filter(|v| !a.contains(v)).collect();
            a.iter().all(|&u| b.iter().all(|&v| adj[u][v]))
        })
    })
}

fn contract(adj: &Adj, u: usize, v: usize) -> Adj {
    // merge v into u, drop v
    let n = adj.len();
    let keep: Vec<usize> = (0..n).filter(|&x| x != v).collect();
    keep.iter()
        .map(|&a| {
            keep.iter()
                .map(|&b| {
                    if a == b {
                        return false;
                    }
                    let a_nb = |x: usize| adj[a][x] || (a == u && adj[v][x]);
                    a_nb(b) || (b == u && adj[v][a])
                })
                .collect()
        })
        .collect()
}

/// Whether some sequence of edge contractions yields a graph containing
/// `K_5` or `K_{3,3}` as a subgraph. Exponential; meant for n <= 7.
pub fn has_kuratowski_minor(adj: &Adj) -> bool {
    fn go(adj: &Adj, seen: &mut BTreeSet<Vec<bool>>) -> bool {
        if adj.len() < 5 || !seen.insert(adj.iter().flatten().copied().collect()) {
            return false;
        }
        if has_k5_subgraph(adj) || has_k33_subgraph(adj) {
            return true;
        }
        let n = adj.len();
        for u in 0..n {
            for v in u + 1..n {
                if adj[u][v] && go(&contract(adj, u, v), seen) {
                    return true;
                }
            }
        }
        false
    }
    go(adj, &mut BTreeSet::new())
}

pub fn random_connected(rng: &mut impl Rng, n: usize) -> Adj {
    loop {
        let p: f64 = rng.gen_range(0.2..0.8);
        let mut adj = vec![vec![false; n]; n];
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    adj[u][v] = true;
                    adj[v][u] = true;
                }
            }
        }
        if connected(&adj) {
            return adj;
        }
    }
}
