//! The three-class family: independent sets `V_1`, `V_2` (each of size at
//! least 3) and `V_3 = {x_3}`, wired by five rules.
//!
//! Fixed vertex layout for a blueprint with `|V_1| = a`, `|V_2| = b`:
//!
//! | index              | role                               |
//! |--------------------|------------------------------------|
//! | `0`                | `x_1`                              |
//! | `1`                | `y_2`                              |
//! | `2..a`             | remaining `V_1` vertices           |
//! | `a`                | `x_2`                              |
//! | `a + 1`            | `y_1`                              |
//! | `a + 2`            | `y_3`                              |
//! | `a + 3..a + b`     | remaining `V_2` vertices           |
//! | `a + b`            | `x_3`                              |
//!
//! Base edges are `x_i y_i`. Rule 1 joins `y_1` to all of `V_1` and `y_2` to
//! all of `V_2`; rule 2 joins `x_1 x_3` plus `x_1` to a chosen subset of
//! `V_2 - {y_3}`; rule 3 joins `y_3` to a chosen subset of `V_1 - {x_1}`;
//! rule 4 sends every vertex of `(V_1 - {x_1, y_2}) ∪ (V_2 - {y_1, y_3})`
//! either to the whole opposite class or to `x_3`, never dominating both,
//! with `x_3` keeping two non-neighbors on each side; rule 5 forbids a
//! non-adjacent cross pair that are each other's only cross non-neighbor.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabeling};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule4Target {
    /// Joined to every vertex of the opposite class.
    Opposite,
    /// Joined to `x_3`.
    V3,
}

/// Free choices of the construction, addressed by vertex index in the
/// fixed layout documented at module level.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct D3Blueprint {
    pub a: usize,
    pub b: usize,
    /// Extra neighbors of `x_1`, drawn from `V_2 - {y_3}`.
    pub rule2: BTreeSet<usize>,
    /// Extra neighbors of `y_3`, drawn from `V_1 - {x_1}`.
    pub rule3: BTreeSet<usize>,
    /// Target of every rule-4 vertex.
    pub rule4: BTreeMap<usize, Rule4Target>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum D3Violation {
    /// `|V_1| >= 3` and `|V_2| >= 3`.
    ClassSize { class: usize, size: usize },
    Rule2OutOfRange { vertex: usize },
    Rule3OutOfRange { vertex: usize },
    Rule4Unassigned { vertex: usize },
    Rule4NotApplicable { vertex: usize },
    /// A rule-4 vertex ends up dominating both the opposite class and `V_3`.
    Rule4Both { vertex: usize },
    /// `x_3` has fewer than two non-neighbors in `V_class`.
    Rule4Tail { class: usize, non_neighbors: usize },
    /// Non-adjacent `x in V_1`, `y in V_2`, each the other's only cross non-neighbor.
    Rule5 { x: usize, y: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct D3Verdict {
    pub valid: bool,
    pub violations: Vec<D3Violation>,
}

impl D3Blueprint {
    pub fn order(&self) -> usize {
        self.a + self.b + 1
    }

    pub fn x1(&self) -> usize {
        0
    }

    pub fn y2(&self) -> usize {
        1
    }

    pub fn x2(&self) -> usize {
        self.a
    }

    pub fn y1(&self) -> usize {
        self.a + 1
    }

    pub fn y3(&self) -> usize {
        self.a + 2
    }

    pub fn x3(&self) -> usize {
        self.a + self.b
    }

    pub fn v1(&self) -> std::ops::Range<usize> {
        0..self.a
    }

    pub fn v2(&self) -> std::ops::Range<usize> {
        self.a..self.a + self.b
    }

    /// `(V_1 - {x_1, y_2}) ∪ (V_2 - {y_1, y_3})`, in index order.
    pub fn rule4_vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (2..self.a).collect();
        out.push(self.a);
        out.extend(self.a + 3..self.a + self.b);
        out
    }

    fn in_v1(&self, v: usize) -> bool {
        v < self.a
    }

    /// Role names for the fixed layout.
    pub fn labeling(&self) -> VertexLabeling {
        let mut l = VertexLabeling::new();
        l.insert_vertex("x1", self.x1());
        l.insert_vertex("y2", self.y2());
        l.insert_vertex("x2", self.x2());
        l.insert_vertex("y1", self.y1());
        l.insert_vertex("y3", self.y3());
        l.insert_vertex("x3", self.x3());
        for v in 2..self.a {
            l.insert_vertex(format!("v1_{}", v - 1), v);
        }
        for v in self.a + 3..self.a + self.b {
            l.insert_vertex(format!("v2_{}", v - self.a - 2), v);
        }
        l.insert_part("V1", self.v1().collect());
        l.insert_part("V2", self.v2().collect());
        l.insert_part("V3", vec![self.x3()]);
        l
    }

    // Applies the five rules without judging the result.
    pub(crate) fn assemble(&self) -> Graph {
        let mut g = Graph::empty(self.order());
        let (x1, y2, x2, y1, y3, x3) = (self.x1(), self.y2(), self.x2(), self.y1(), self.y3(), self.x3());
        g.insert_edge(x1, y1);
        g.insert_edge(x2, y2);
        g.insert_edge(x3, y3);
        for v in self.v1() {
            g.insert_edge(y1, v);
        }
        for v in self.v2() {
            g.insert_edge(y2, v);
        }
        g.insert_edge(x1, x3);
        for &v in &self.rule2 {
            g.insert_edge(x1, v);
        }
        for &v in &self.rule3 {
            g.insert_edge(y3, v);
        }
        for (&v, &target) in &self.rule4 {
            match target {
                Rule4Target::V3 => g.insert_edge(v, x3),
                Rule4Target::Opposite => {
                    let other = if self.in_v1(v) { self.v2() } else { self.v1() };
                    for w in other {
                        g.insert_edge(v, w);
                    }
                }
            }
        }
        g
    }
}

/// Checks a blueprint against all five rules and lists every violation.
pub fn validate_blueprint(bp: &D3Blueprint) -> D3Verdict {
    let mut violations = Vec::new();
    if bp.a < 3 {
        violations.push(D3Violation::ClassSize { class: 1, size: bp.a });
    }
    if bp.b < 3 {
        violations.push(D3Violation::ClassSize { class: 2, size: bp.b });
    }
    if !violations.is_empty() {
        return D3Verdict {
            valid: false,
            violations,
        };
    }
    for &v in &bp.rule2 {
        if !bp.v2().contains(&v) || v == bp.y3() {
            violations.push(D3Violation::Rule2OutOfRange { vertex: v });
        }
    }
    for &v in &bp.rule3 {
        if !bp.v1().contains(&v) || v == bp.x1() {
            violations.push(D3Violation::Rule3OutOfRange { vertex: v });
        }
    }
    let rule4 = bp.rule4_vertices();
    for &v in &rule4 {
        if !bp.rule4.contains_key(&v) {
            violations.push(D3Violation::Rule4Unassigned { vertex: v });
        }
    }
    for &v in bp.rule4.keys() {
        if !rule4.contains(&v) {
            violations.push(D3Violation::Rule4NotApplicable { vertex: v });
        }
    }
    if !violations.is_empty() {
        return D3Verdict {
            valid: false,
            violations,
        };
    }

    let g = bp.assemble();
    let x3 = bp.x3();
    for &v in &rule4 {
        let other = if bp.in_v1(v) { bp.v2() } else { bp.v1() };
        if g.has_edge(v, x3) && other.clone().all(|w| g.has_edge(v, w)) {
            violations.push(D3Violation::Rule4Both { vertex: v });
        }
    }
    for (class, range) in [(1, bp.v1()), (2, bp.v2())] {
        let non = range.filter(|&v| !g.has_edge(x3, v)).count();
        if non < 2 {
            violations.push(D3Violation::Rule4Tail {
                class,
                non_neighbors: non,
            });
        }
    }
    for x in bp.v1() {
        for y in bp.v2() {
            if g.has_edge(x, y) {
                continue;
            }
            let x_other = bp.v2().any(|w| w != y && !g.has_edge(x, w));
            let y_other = bp.v1().any(|w| w != x && !g.has_edge(y, w));
            if !x_other && !y_other {
                violations.push(D3Violation::Rule5 { x, y });
            }
        }
    }
    D3Verdict {
        valid: violations.is_empty(),
        violations,
    }
}

/// Builds the graph of a valid blueprint.
pub fn build_d3(bp: &D3Blueprint) -> Result<(Graph, VertexLabeling)> {
    let verdict = validate_blueprint(bp);
    if !verdict.valid {
        let reasons: Vec<String> = verdict
            .violations
            .iter()
            .map(|v| match v {
                D3Violation::ClassSize { class: 1, .. } => "a >= 3 required".to_string(),
                D3Violation::ClassSize { .. } => "b >= 3 required".to_string(),
                other => format!("{other:?}"),
            })
            .collect();
        return Err(Error::InvalidBlueprint(reasons.join("; ")));
    }
    Ok((bp.assemble(), bp.labeling()))
}

/// Valid blueprints with `|V_1| = a`, `|V_2| = b`, at most `limit` of them.
///
/// Only non-redundant choices are generated: rule-2 and rule-3 sets draw
/// from rule-4 vertices sent to `V_3` (every other candidate is already
/// joined by rules 1 and 4), so distinct blueprints give distinct graphs.
/// Order: rule-4 assignment (as a binary counter over
/// [`D3Blueprint::rule4_vertices`], `Opposite = 0`), then rule-2 subset,
/// then rule-3 subset.
pub fn enumerate_d3_blueprints(
    a: usize,
    b: usize,
    limit: usize,
) -> Result<impl Iterator<Item = D3Blueprint>> {
    if a < 3 || b < 3 {
        return Err(Error::InvalidParameters(format!(
            "both classes need at least 3 vertices, got a={a}, b={b}"
        )));
    }
    let template = D3Blueprint {
        a,
        b,
        rule2: BTreeSet::new(),
        rule3: BTreeSet::new(),
        rule4: BTreeMap::new(),
    };
    let r4 = template.rule4_vertices();
    assert!(r4.len() < 63, "blueprint space too large to enumerate");
    let iter = (0u64..1 << r4.len()).flat_map(move |assign| {
        let rule4: BTreeMap<usize, Rule4Target> = r4
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let t = if assign >> i & 1 == 1 {
                    Rule4Target::V3
                } else {
                    Rule4Target::Opposite
                };
                (v, t)
            })
            .collect();
        let to_v3 = |in_v1: bool| -> Vec<usize> {
            rule4
                .iter()
                .filter(|(&v, &t)| t == Rule4Target::V3 && (v < a) == in_v1)
                .map(|(&v, _)| v)
                .collect()
        };
        let (r2, r3) = (to_v3(false), to_v3(true));
        let rule4 = rule4.clone();
        (0u64..1 << r2.len()).flat_map(move |m2| {
            let rule2: BTreeSet<usize> = subset(&r2, m2);
            let rule4 = rule4.clone();
            let r3 = r3.clone();
            (0u64..1 << r3.len()).map(move |m3| D3Blueprint {
                a,
                b,
                rule2: rule2.clone(),
                rule3: subset(&r3, m3),
                rule4: rule4.clone(),
            })
        })
    });
    Ok(iter.filter(|bp| validate_blueprint(bp).valid).take(limit))
}

fn subset(items: &[usize], mask: u64) -> BTreeSet<usize> {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}
