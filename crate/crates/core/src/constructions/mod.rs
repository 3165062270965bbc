//! Builders for the D(k) graph families.
//!
//! Vertices are numbered class by class; inside a class the order is
//! `x, y, z, w` followed by the padding vertices `u_1..u_t`.

mod d3;

pub use d3::{
    build_d3, enumerate_d3_blueprints, validate_blueprint, D3Blueprint, D3Verdict, D3Violation,
    Rule4Target,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabeling};

/// Parameters of the odd construction: odd `k >= 3`, order `n >= 4k - 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DOddSpec {
    k: usize,
    n: usize,
}

impl DOddSpec {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k % 2 == 0 {
            return Err(Error::InvalidParameters(format!("k must be odd, got {k}")));
        }
        if k < 3 {
            return Err(Error::InvalidParameters(format!("k must be at least 3, got {k}")));
        }
        if n < 4 * k - 3 {
            return Err(Error::InvalidParameters(format!(
                "n must be at least 4k-3 = {}, got {n}",
                4 * k - 3
            )));
        }
        Ok(DOddSpec { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of padding vertices `t = n - (4k - 3)`.
    pub fn t(&self) -> usize {
        self.n - (4 * self.k - 3)
    }
}

/// Parameters of the even construction: even `k >= 4`, order `n >= 3k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DEvenSpec {
    k: usize,
    n: usize,
}

impl DEvenSpec {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k % 2 == 1 {
            return Err(Error::InvalidParameters(format!("k must be even, got {k}")));
        }
        if k < 4 {
            return Err(Error::InvalidParameters(format!("k must be at least 4, got {k}")));
        }
        if n < 3 * k {
            return Err(Error::InvalidParameters(format!(
                "n must be at least 3k = {}, got {n}",
                3 * k
            )));
        }
        Ok(DEvenSpec { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of padding vertices `t = n - 3k`.
    pub fn t(&self) -> usize {
        self.n - 3 * self.k
    }
}

struct Layout {
    labeling: VertexLabeling,
    next: usize,
}

impl Layout {
    fn new() -> Self {
        Layout {
            labeling: VertexLabeling::new(),
            next: 0,
        }
    }

    fn vertex(&mut self, name: String) -> usize {
        let v = self.next;
        self.next += 1;
        self.labeling.insert_vertex(name, v);
        v
    }
}

/// Odd construction. Parts `P_1..P_{k-1}` hold `x_i, y_i, z_i, w_i` (with
/// `U` appended to `P_1`), `P_k = {x_k}`.
pub fn build_d_odd(spec: DOddSpec) -> (Graph, VertexLabeling) {
    let k = spec.k;
    let t = spec.t();
    let mut lay = Layout::new();
    // x[i], y[i], z[i], w[i] for i in 1..k (index 0 unused)
    let (mut x, mut y, mut z, mut w) = (vec![0; k + 1], vec![0; k], vec![0; k], vec![0; k]);
    let mut u = Vec::with_capacity(t);
    let mut parts = Vec::with_capacity(k);
    for i in 1..k {
        x[i] = lay.vertex(format!("x{i}"));
        y[i] = lay.vertex(format!("y{i}"));
        z[i] = lay.vertex(format!("z{i}"));
        w[i] = lay.vertex(format!("w{i}"));
        let mut part = vec![x[i], y[i], z[i], w[i]];
        if i == 1 {
            for j in 1..=t {
                let v = lay.vertex(format!("u{j}"));
                u.push(v);
                part.push(v);
            }
        }
        parts.push(part);
    }
    x[k] = lay.vertex(format!("x{k}"));
    parts.push(vec![x[k]]);
    debug_assert_eq!(lay.next, spec.n);

    let mut g = Graph::empty(spec.n);
    for i in 1..=(k - 1) / 2 {
        let (even, odd) = (2 * i, 2 * i - 1);
        for a in [x[even], y[even], z[even]] {
            for b in [x[odd], y[odd], z[odd]] {
                g.insert_edge(a, b);
            }
        }
        g.insert_edge(w[odd], y[even]);
        g.insert_edge(w[odd], z[even]);
        g.insert_edge(w[even], y[odd]);
        g.insert_edge(w[even], z[odd]);
    }
    for i in 1..=k {
        for j in i + 1..=k {
            g.insert_edge(x[i], x[j]);
        }
    }
    for i in 1..k {
        g.insert_edge(x[k], w[i]);
    }
    for &v in &u {
        g.insert_edge(x[k], v);
        g.insert_edge(v, y[2]);
        g.insert_edge(v, z[2]);
    }

    let mut labeling = lay.labeling;
    for (i, part) in parts.into_iter().enumerate() {
        labeling.insert_part(format!("P{}", i + 1), part);
    }
    labeling.insert_set("X", x[1..k].to_vec());
    labeling.insert_set("Y", y[1..].to_vec());
    labeling.insert_set("Z", z[1..].to_vec());
    labeling.insert_set("W", w[1..].to_vec());
    labeling.insert_set("U", u);
    (g, labeling)
}

/// Even construction. Parts `P_i = {x_i, y_i, z_i}` with `U` appended to `P_1`.
pub fn build_d_even(spec: DEvenSpec) -> (Graph, VertexLabeling) {
    let k = spec.k;
    let t = spec.t();
    let mut lay = Layout::new();
    let mut parts: Vec<Vec<usize>> = Vec::with_capacity(k);
    let (mut xs, mut ys, mut zs, mut us) = (vec![], vec![], vec![], vec![]);
    for i in 1..=k {
        let x = lay.vertex(format!("x{i}"));
        let y = lay.vertex(format!("y{i}"));
        let z = lay.vertex(format!("z{i}"));
        xs.push(x);
        ys.push(y);
        zs.push(z);
        let mut part = vec![x, y, z];
        if i == 1 {
            for j in 1..=t {
                let v = lay.vertex(format!("u{j}"));
                us.push(v);
                part.push(v);
            }
        }
        parts.push(part);
    }
    debug_assert_eq!(lay.next, spec.n);

    let mut g = Graph::empty(spec.n);
    for i in 0..k / 2 {
        for &a in &parts[2 * i] {
            for &b in &parts[2 * i + 1] {
                g.insert_edge(a, b);
            }
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            g.insert_edge(xs[i], xs[j]);
        }
    }

    let mut labeling = lay.labeling;
    for (i, part) in parts.into_iter().enumerate() {
        labeling.insert_part(format!("P{}", i + 1), part);
    }
    labeling.insert_set("X", xs);
    labeling.insert_set("Y", ys);
    labeling.insert_set("Z", zs);
    labeling.insert_set("U", us);
    (g, labeling)
}
