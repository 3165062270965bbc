//! Checkers for structural statements about D(k) graphs: planarity with
//! certificates, chains between color classes, the domination pattern of
//! optimal dominator colorings, transversals, and membership in the
//! three-class family.

mod membership;
mod planarity;

pub use membership::{is_in_class_d3, is_in_class_d3_until, D3Membership};
pub use planarity::{
    is_planar, Certificate, Embedding, KuratowskiKind, KuratowskiWitness, PlanarityVerdict,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{
    chromatic_number, dominates_set, dominator_chromatic_number, domination_number,
    for_each_coloring, Coloring, ColoringKind,
};
use serde::{Deserialize, Serialize};
use std::ops::ControlFlow;

/// `V_i -> V_j -> V_l`: `x_i` dominates `V_j`, `x_j` dominates `V_l`, `x_l` dominates `V_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainWitness {
    pub classes: [usize; 3],
    pub vertices: [usize; 3],
}

impl ChainWitness {
    pub fn verify(&self, g: &Graph, coloring: &Coloring) -> bool {
        let cls = coloring.classes();
        let [i, j, l] = self.classes;
        let [a, b, c] = self.vertices;
        i != j
            && j != l
            && l != i
            && [i, j, l].iter().all(|&x| x < cls.len())
            && cls[i].contains(&a)
            && cls[j].contains(&b)
            && cls[l].contains(&c)
            && dominates_set(g, a, &cls[j])
            && dominates_set(g, b, &cls[l])
            && dominates_set(g, c, &cls[i])
    }
}

/// Lexicographically first chain `(i, j, l)` of a proper coloring with at
/// least three classes; each vertex is the smallest one that works.
pub fn find_chain(g: &Graph, coloring: &Coloring) -> Result<Option<ChainWitness>> {
    let k = coloring.k();
    if k < 3 {
        return Err(Error::TooFewClasses(k));
    }
    if !coloring.is_proper(g) {
        return Err(Error::InvalidColoring("coloring is not proper".into()));
    }
    let cls = coloring.classes();
    // dom[i][j]: smallest vertex of V_i dominating V_j
    let dom: Vec<Vec<Option<usize>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let mut members = cls[i].clone();
                    members.sort_unstable();
                    members.into_iter().find(|&v| i != j && dominates_set(g, v, &cls[j]))
                })
                .collect()
        })
        .collect();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                if i == j || j == l || l == i {
                    continue;
                }
                if let (Some(a), Some(b), Some(c)) = (dom[i][j], dom[j][l], dom[l][i]) {
                    return Ok(Some(ChainWitness {
                        classes: [i, j, l],
                        vertices: [a, b, c],
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem1Failure {
    ClassNotDominated,
    VertexDominatesNone,
    VertexDominatesSeveral,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Counterexample {
    pub coloring: Coloring,
    /// Offending vertex, or the class index for `ClassNotDominated`.
    pub index: usize,
    pub failure: Theorem1Failure,
}

/// How vertex `vertex` fared across all optimal dominator colorings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexTally {
    pub vertex: usize,
    pub min_dominated: usize,
    pub max_dominated: usize,
    /// Colorings where the vertex is alone in its class and dominates no
    /// other class, so it dominates only through the own-singleton rule.
    pub own_singleton_only: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub k: usize,
    pub colorings_checked: usize,
    pub all_classes_dominated: bool,
    pub every_vertex_dominates_exactly_one: bool,
    /// At most [`Theorem1Report::MAX_COUNTEREXAMPLES`] are kept.
    pub counterexamples: Vec<Theorem1Counterexample>,
    pub vertex_tallies: Vec<VertexTally>,
}

impl Theorem1Report {
    pub const MAX_COUNTEREXAMPLES: usize = 32;

    pub fn holds(&self) -> bool {
        self.all_classes_dominated && self.every_vertex_dominates_exactly_one
    }

    /// Whether the statement survives when own-singleton domination is not counted.
    pub fn holds_without_own_singleton(&self) -> bool {
        self.holds() && self.vertex_tallies.iter().all(|t| t.own_singleton_only == 0)
    }
}

/// Checks, on every optimal dominator coloring of a D(k) graph, that each
/// class is dominated by some vertex and each vertex dominates exactly one
/// class (own-singleton convention throughout).
pub fn check_theorem1(g: &Graph) -> Result<Theorem1Report> {
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let (gamma, _) = domination_number(g)?;
    let (chi, _) = chromatic_number(g)?;
    let (chi_d, _) = dominator_chromatic_number(g)?;
    if !(gamma == chi && chi == chi_d) {
        return Err(Error::NotDk { gamma, chi, chi_d });
    }
    let n = g.order();
    let mut report = Theorem1Report {
        k: chi_d,
        colorings_checked: 0,
        all_classes_dominated: true,
        every_vertex_dominates_exactly_one: true,
        counterexamples: Vec::new(),
        vertex_tallies: (0..n)
            .map(|v| VertexTally {
                vertex: v,
                min_dominated: usize::MAX,
                max_dominated: 0,
                own_singleton_only: 0,
            })
            .collect(),
    };
    for_each_coloring(g, ColoringKind::Dominator, chi_d, |c| {
        report.colorings_checked += 1;
        let cls = c.classes();
        let push = |report: &mut Theorem1Report, index, failure| {
            if report.counterexamples.len() < Theorem1Report::MAX_COUNTEREXAMPLES {
                report.counterexamples.push(Theorem1Counterexample {
                    coloring: c.clone(),
                    index,
                    failure,
                });
            }
        };
        for (i, class) in cls.iter().enumerate() {
            if !(0..n).any(|v| dominates_set(g, v, class)) {
                report.all_classes_dominated = false;
                push(&mut report, i, Theorem1Failure::ClassNotDominated);
            }
        }
        for v in 0..n {
            let dominated: Vec<usize> =
                (0..cls.len()).filter(|&i| dominates_set(g, v, &cls[i])).collect();
            let tally = &mut report.vertex_tallies[v];
            tally.min_dominated = tally.min_dominated.min(dominated.len());
            tally.max_dominated = tally.max_dominated.max(dominated.len());
            if dominated.len() == 1 && cls[dominated[0]] == [v] {
                tally.own_singleton_only += 1;
            }
            if dominated.len() != 1 {
                report.every_vertex_dominates_exactly_one = false;
                let failure = if dominated.is_empty() {
                    Theorem1Failure::VertexDominatesNone
                } else {
                    Theorem1Failure::VertexDominatesSeveral
                };
                push(&mut report, v, failure);
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(report)
}

/// One vertex per class forming a total dominating set, chosen
/// lexicographically (class by class, smallest vertex first).
pub fn find_total_dominating_transversal(g: &Graph, coloring: &Coloring) -> Option<Vec<usize>> {
    let n = g.order();
    if coloring.order() != n || n == 0 {
        return None;
    }
    let mut classes: Vec<Vec<usize>> = coloring.classes().to_vec();
    for c in &mut classes {
        c.sort_unstable();
    }
    // reach[i][u]: some vertex of class i is adjacent to u
    let reach: Vec<Vec<bool>> = classes
        .iter()
        .map(|c| (0..n).map(|u| c.iter().any(|&v| g.has_edge(u, v))).collect())
        .collect();
    fn go(
        g: &Graph,
        classes: &[Vec<usize>],
        reach: &[Vec<bool>],
        i: usize,
        covered: &mut Vec<usize>,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let n = covered.len();
        if (0..n).any(|u| covered[u] == 0 && !reach[i..].iter().any(|r| r[u])) {
            return false;
        }
        if i == classes.len() {
            return true;
        }
        for &v in &classes[i] {
            chosen.push(v);
            for u in g.neighbors(v) {
                covered[u] += 1;
            }
            if go(g, classes, reach, i + 1, covered, chosen) {
                return true;
            }
            for u in g.neighbors(v) {
                covered[u] -= 1;
            }
            chosen.pop();
        }
        false
    }
    let mut covered = vec![0; n];
    let mut chosen = Vec::new();
    go(g, &classes, &reach, 0, &mut covered, &mut chosen).then_some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_d_odd, DOddSpec};
    use crate::graph::complete_bipartite;
    use crate::invariants::is_total_dominating;

    #[test]
    fn chain_on_triangle_with_pendant() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let c = Coloring::new(vec![vec![0], vec![1], vec![2], vec![3]], 4).unwrap();
        let w = find_chain(&g, &c).unwrap().unwrap();
        assert_eq!(w.classes, [0, 1, 2]);
        assert_eq!(w.vertices, [0, 1, 2]);
        assert!(w.verify(&g, &c));
        let c4 = Graph::cycle(4).unwrap();
        let bip = Coloring::new(vec![vec![0, 2], vec![1, 3]], 4).unwrap();
        assert_eq!(find_chain(&c4, &bip), Err(Error::TooFewClasses(2)));
    }

    #[test]
    fn theorem1_examples() {
        let (g, _) = build_d_odd(DOddSpec::new(3, 9).unwrap());
        let r = check_theorem1(&g).unwrap();
        assert!(r.holds() && r.colorings_checked > 0 && r.counterexamples.is_empty());
        let r = check_theorem1(&complete_bipartite(2, 3).unwrap().0).unwrap();
        assert!(r.holds());
        assert_eq!(
            check_theorem1(&Graph::path(4)),
            Err(Error::NotDk {
                gamma: 2,
                chi: 2,
                chi_d: 3
            })
        );
        assert!(check_theorem1(&Graph::path(4)).unwrap_err().to_string().contains("not a D(k) graph"));
    }

    #[test]
    fn transversal_examples() {
        let (g, l) = build_d_odd(DOddSpec::new(3, 9).unwrap());
        let c = Coloring::new(l.parts(), 9).unwrap();
        let t = find_total_dominating_transversal(&g, &c).unwrap();
        assert_eq!(t.len(), 3);
        assert!(is_total_dominating(&g, &t));
        let c4 = Graph::cycle(4).unwrap();
        let bip = Coloring::new(vec![vec![0, 2], vec![1, 3]], 4).unwrap();
        assert_eq!(find_total_dominating_transversal(&c4, &bip), Some(vec![0, 1]));
    }
}
