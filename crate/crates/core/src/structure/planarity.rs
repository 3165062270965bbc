//! Left-right planarity test with certificates.
//!
//! A planar graph gets a rotation system; a non-planar one gets a Kuratowski
//! subdivision found by deleting edges while the rest stays non-planar.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// Clockwise neighbor order around every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub rotation: Vec<Vec<usize>>,
}

/// A subdivision of `K_5` or `K_{3,3}`: branch vertices joined pairwise by
/// internally disjoint paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// All branch vertices, sorted. For `K_{3,3}` also split into `sides`.
    pub branch_vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sides: Option<[Vec<usize>; 2]>,
    /// One path per branch pair, endpoints included.
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    Embedding(Embedding),
    Kuratowski(KuratowskiWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub certificate: Certificate,
}

impl PlanarityVerdict {
    /// Re-checks the certificate against `g` without the planarity code.
    pub fn verify(&self, g: &Graph) -> bool {
        match (&self.certificate, self.planar) {
            (Certificate::Embedding(e), true) => e.verify(g),
            (Certificate::Kuratowski(w), false) => w.verify(g),
            _ => false,
        }
    }
}

impl Embedding {
    /// Euler's formula `V - E + F = 2` on every component, with faces traced
    /// from the rotation system.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.rotation.len() != n {
            return false;
        }
        let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
        for v in 0..n {
            let mut rot = self.rotation[v].clone();
            rot.sort_unstable();
            if rot != g.neighbors(v).collect::<Vec<_>>() {
                return false;
            }
            for (i, &w) in self.rotation[v].iter().enumerate() {
                pos.insert((v, w), i);
            }
        }
        let comps = g.components();
        let mut comp_of = vec![0; n];
        for (c, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = c;
            }
        }
        let mut faces = vec![0usize; comps.len()];
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (u, v) in g.edges() {
            for start in [(u, v), (v, u)] {
                if seen.contains(&start) {
                    continue;
                }
                faces[comp_of[start.0]] += 1;
                let mut dart = start;
                loop {
                    seen.insert(dart);
                    let (a, b) = dart;
                    let rot = &self.rotation[b];
                    let next = rot[(pos[&(b, a)] + 1) % rot.len()];
                    dart = (b, next);
                    if dart == start {
                        break;
                    }
                }
            }
        }
        comps.iter().enumerate().all(|(c, comp)| {
            let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            let f = if edges == 0 { 1 } else { faces[c] };
            comp.len() + f == edges + 2
        })
    }
}

impl KuratowskiWitness {
    /// Re-walks every path: consecutive vertices adjacent, endpoints are the
    /// right branch pairs (each exactly once), interiors pairwise disjoint and
    /// free of branch vertices.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut branch = self.branch_vertices.clone();
        branch.sort_unstable();
        branch.dedup();
        if branch.len() != self.branch_vertices.len() || branch.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let mut needed: BTreeSet<(usize, usize)> = BTreeSet::new();
        match (self.kind, &self.sides) {
            (KuratowskiKind::K5, None) if branch.len() == 5 => {
                for (i, &a) in branch.iter().enumerate() {
                    for &b in &branch[i + 1..] {
                        needed.insert((a, b));
                    }
                }
            }
            (KuratowskiKind::K33, Some([s, t])) if s.len() == 3 && t.len() == 3 => {
                let mut all: Vec<usize> = s.iter().chain(t).copied().collect();
                all.sort_unstable();
                if all != branch {
                    return false;
                }
                for &a in s {
                    for &b in t {
                        needed.insert((a.min(b), a.max(b)));
                    }
                }
            }
            _ => return false,
        }
        let mut used_interior: BTreeSet<usize> = BTreeSet::new();
        let mut got: BTreeSet<(usize, usize)> = BTreeSet::new();
        for path in &self.paths {
            if path.len() < 2 {
                return false;
            }
            if path.windows(2).any(|w| w[0] >= g.order() || w[1] >= g.order() || !g.has_edge(w[0], w[1])) {
                return false;
            }
            let (a, b) = (path[0], path[path.len() - 1]);
            if !got.insert((a.min(b), a.max(b))) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if branch.binary_search(&v).is_ok() || !used_interior.insert(v) {
                    return false;
                }
            }
        }
        got == needed
    }
}

/// Planarity verdict with a checkable certificate.
pub fn is_planar(g: &Graph) -> PlanarityVerdict {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    match lr_embedding(&adj) {
        Some(rotation) => PlanarityVerdict {
            planar: true,
            certificate: Certificate::Embedding(Embedding { rotation }),
        },
        None => PlanarityVerdict {
            planar: false,
            certificate: Certificate::Kuratowski(kuratowski_subdivision(&adj)),
        },
    }
}

// Deletes every edge whose removal keeps the graph non-planar. What remains
// (minus isolated vertices) is a subdivision of K5 or K3,3.
fn kuratowski_subdivision(adj: &[Vec<usize>]) -> KuratowskiWitness {
    let n = adj.len();
    let mut h: Vec<Vec<usize>> = adj.to_vec();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect();
    for (u, v) in edges {
        h[u].retain(|&x| x != v);
        h[v].retain(|&x| x != u);
        if lr_embedding(&h).is_some() {
            h[u].push(v);
            h[v].push(u);
        }
    }
    for row in h.iter_mut() {
        row.sort_unstable();
    }
    let branch: Vec<usize> = (0..n).filter(|&v| h[v].len() >= 3).collect();
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in &h[b] {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while h[cur].len() == 2 {
                let next = if h[cur][0] == prev { h[cur][1] } else { h[cur][0] };
                path.push(next);
                prev = cur;
                cur = next;
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort();
    if branch.len() == 5 {
        KuratowskiWitness {
            kind: KuratowskiKind::K5,
            branch_vertices: branch,
            sides: None,
            paths,
        }
    } else {
        let first = branch[0];
        let mut far: Vec<usize> = paths
            .iter()
            .filter(|p| p[0] == first)
            .map(|p| p[p.len() - 1])
            .collect();
        far.sort_unstable();
        let near: Vec<usize> = branch.iter().copied().filter(|v| !far.contains(v)).collect();
        KuratowskiWitness {
            kind: KuratowskiKind::K33,
            branch_vertices: branch,
            sides: Some([near, far]),
            paths,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// State of the left-right test. Oriented edges are numbered in creation
/// order; `src`/`dst` give their endpoints.
struct Lr<'a> {
    adj: &'a [Vec<usize>],
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    roots: Vec<usize>,
    src: Vec<usize>,
    dst: Vec<usize>,
    eid: HashMap<(usize, usize), usize>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    lowpt_edge: Vec<usize>,
    refs: Vec<Option<usize>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
}

impl<'a> Lr<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Lr {
            adj,
            height: vec![None; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            src: Vec::new(),
            dst: Vec::new(),
            eid: HashMap::new(),
            out: vec![Vec::new(); n],
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting_depth: Vec::new(),
            lowpt_edge: Vec::new(),
            refs: Vec::new(),
            side: Vec::new(),
            stack: Vec::new(),
            stack_bottom: Vec::new(),
        }
    }

    fn orient_edge(&mut self, v: usize, w: usize) -> usize {
        let e = self.src.len();
        self.src.push(v);
        self.dst.push(w);
        self.eid.insert((v, w), e);
        self.out[v].push(e);
        self.lowpt.push(0);
        self.lowpt2.push(0);
        self.nesting_depth.push(0);
        self.lowpt_edge.push(usize::MAX);
        self.refs.push(None);
        self.side.push(1);
        self.stack_bottom.push(0);
        e
    }

    fn h(&self, v: usize) -> usize {
        self.height[v].expect("visited vertex")
    }

    fn orientation(&mut self, v: usize) {
        let e = self.parent_edge[v];
        let hv = self.h(v);
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if self.eid.contains_key(&(v, w)) || self.eid.contains_key(&(w, v)) {
                continue;
            }
            let vw = self.orient_edge(v, w);
            self.lowpt[vw] = hv;
            self.lowpt2[vw] = hv;
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.orientation(w);
                }
                Some(hw) => self.lowpt[vw] = hw,
            }
            self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < hv {
                self.nesting_depth[vw] += 1;
            }
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high.expect("nonempty interval has high")] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on stack"),
        }
    }

    fn testing(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let hv = self.h(v);
        let ordered = self.out[v].clone();
        for (idx, &ei) in ordered.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.testing(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < hv {
                let e = e.expect("return edge below a root");
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges of ei on stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("right interval nonempty");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(l) = p.right.low {
                    self.refs[l] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.refs[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(l) = p.left.low {
                self.refs[l] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            let top = self.stack.last().expect("return edge interval");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        if let Some(r) = self.refs[e] {
            let s = self.sign(r);
            self.side[e] *= s;
            self.refs[e] = None;
        }
        self.side[e]
    }
}

/// Doubly linked cyclic neighbor lists.
struct Rotation {
    cw: HashMap<(usize, usize), usize>,
    ccw: HashMap<(usize, usize), usize>,
    first: Vec<Option<usize>>,
}

impl Rotation {
    fn add_cw(&mut self, s: usize, t: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.cw.insert((s, t), t);
                self.ccw.insert((s, t), t);
                self.first[s] = Some(t);
            }
            Some(r) => {
                let after = self.cw[&(s, r)];
                self.cw.insert((s, r), t);
                self.cw.insert((s, t), after);
                self.ccw.insert((s, after), t);
                self.ccw.insert((s, t), r);
            }
        }
    }

    fn add_ccw(&mut self, s: usize, t: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(s, t, None),
            Some(r) => {
                let before = self.ccw[&(s, r)];
                self.add_cw(s, t, Some(before));
                if self.first[s] == Some(r) {
                    self.first[s] = Some(t);
                }
            }
        }
    }

    fn add_first(&mut self, s: usize, t: usize) {
        let r = self.first[s];
        self.add_ccw(s, t, r);
    }

    fn lists(&self) -> Vec<Vec<usize>> {
        (0..self.first.len())
            .map(|v| {
                let mut out = Vec::new();
                if let Some(start) = self.first[v] {
                    let mut w = start;
                    loop {
                        out.push(w);
                        w = self.cw[&(v, w)];
                        if w == start {
                            break;
                        }
                    }
                }
                out
            })
            .collect()
    }
}

struct Embedder<'a> {
    lr: &'a Lr<'a>,
    ordered: Vec<Vec<usize>>,
    rot: Rotation,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
}

impl Embedder<'_> {
    fn visit(&mut self, v: usize) {
        for i in 0..self.ordered[v].len() {
            let ei = self.ordered[v][i];
            let w = self.lr.dst[ei];
            if self.lr.parent_edge[w] == Some(ei) {
                self.rot.add_first(w, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.visit(w);
            } else if self.lr.side[ei] == 1 {
                self.rot.add_cw(w, v, Some(self.right_ref[w]));
            } else {
                self.rot.add_ccw(w, v, Some(self.left_ref[w]));
                self.left_ref[w] = v;
            }
        }
    }
}

/// Rotation system of a planar graph, or `None` if the graph is not planar.
fn lr_embedding(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut lr = Lr::new(adj);
    for v in 0..n {
        if lr.height[v].is_none() {
            lr.height[v] = Some(0);
            lr.roots.push(v);
            lr.orientation(v);
        }
    }
    for v in 0..n {
        let mut out = std::mem::take(&mut lr.out[v]);
        out.sort_by_key(|&e| lr.nesting_depth[e]);
        lr.out[v] = out;
    }
    for r in lr.roots.clone() {
        if !lr.testing(r) {
            return None;
        }
    }
    for e in 0..lr.src.len() {
        let s = lr.sign(e);
        lr.nesting_depth[e] *= s;
    }
    let mut ordered = lr.out.clone();
    for row in ordered.iter_mut() {
        row.sort_by_key(|&e| lr.nesting_depth[e]);
    }
    let mut rot = Rotation {
        cw: HashMap::new(),
        ccw: HashMap::new(),
        first: vec![None; n],
    };
    for (v, row) in ordered.iter().enumerate() {
        let mut prev = None;
        for &e in row {
            let w = lr.dst[e];
            rot.add_cw(v, w, prev);
            prev = Some(w);
        }
    }
    let roots = lr.roots.clone();
    let mut emb = Embedder {
        lr: &lr,
        ordered,
        rot,
        left_ref: vec![usize::MAX; n],
        right_ref: vec![usize::MAX; n],
    };
    for r in roots {
        emb.visit(r);
    }
    Some(emb.rot.lists())
}
