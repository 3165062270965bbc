//! Exact domination and coloring invariants with optimal witnesses.
//!
//! A vertex *dominates* a color class when it is adjacent to every member of
//! the class, or when the class is exactly `{v}` (own-singleton convention).
//! Dominator colorings use that convention; dominated colorings require a
//! vertex adjacent to the whole class.

mod coloring;
mod domination;
mod report;

pub use coloring::{
    chromatic_number, clique_number, dominated_chromatic_number, dominator_chromatic_number,
    enumerate_optimal_dominator_colorings, find_coloring, for_each_coloring, ColoringKind,
};
pub use domination::{domination_number, total_domination_number};
pub use report::{classify_dk, dk_value, invariant_report, InvariantRecord, InvariantReport};

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Partition of the vertex set into color classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
}

impl Coloring {
    /// Checks that `classes` are non-empty, disjoint and cover `0..n`.
    /// Independence is not required here; see [`Coloring::is_proper`].
    pub fn new(classes: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for class in &classes {
            if class.is_empty() {
                return Err(Error::InvalidColoring("empty color class".into()));
            }
            for &v in class {
                if v >= n {
                    return Err(Error::InvalidColoring(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidColoring(format!("vertex {v} colored twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidColoring(format!("vertex {v} uncolored")));
        }
        Ok(Coloring { classes })
    }

    /// Builds a coloring from a color per vertex; classes come out ordered
    /// by their smallest vertex.
    pub fn from_colors(colors: &[usize]) -> Self {
        let mut relabel: Vec<Option<usize>> = Vec::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (v, &c) in colors.iter().enumerate() {
            if c >= relabel.len() {
                relabel.resize(c + 1, None);
            }
            let idx = *relabel[c].get_or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(v);
        }
        Coloring { classes }
    }

    /// Same partition with classes sorted internally and ordered by smallest vertex.
    pub fn canonical(&self) -> Self {
        let mut classes = self.classes.clone();
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort();
        Coloring { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn order(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// Color index per vertex.
    pub fn colors(&self) -> Vec<usize> {
        let mut out = vec![0; self.order()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = i;
            }
        }
        out
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&v))
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.order() == g.order()
            && self.classes.iter().all(|c| {
                c.iter()
                    .enumerate()
                    .all(|(i, &u)| c[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
            })
    }

    /// Proper, and every vertex dominates at least one class.
    pub fn is_dominator(&self, g: &Graph) -> bool {
        self.is_proper(g)
            && (0..g.order()).all(|v| self.classes.iter().any(|c| dominates_set(g, v, c)))
    }

    /// Proper, and every class has a vertex adjacent to all of its members.
    pub fn is_dominated(&self, g: &Graph) -> bool {
        self.is_proper(g)
            && self
                .classes
                .iter()
                .all(|c| (0..g.order()).any(|w| c.iter().all(|&u| g.has_edge(w, u))))
    }
}

/// `v` dominates `class`: adjacent to all of it, or `class == {v}`.
pub fn dominates_set(g: &Graph, v: usize, class: &[usize]) -> bool {
    (class.len() == 1 && class[0] == v) || class.iter().all(|&u| g.has_edge(v, u))
}

/// Whether vertex `v` dominates class `i` of `coloring`.
pub fn dominates_class(g: &Graph, v: usize, coloring: &Coloring, i: usize) -> Result<bool> {
    if v >= g.order() {
        return Err(Error::IndexOutOfRange {
            index: v,
            limit: g.order(),
        });
    }
    let class = coloring.classes.get(i).ok_or(Error::IndexOutOfRange {
        index: i,
        limit: coloring.k(),
    })?;
    Ok(dominates_set(g, v, class))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominationKind {
    Plain,
    Total,
}

/// A dominating (or total dominating) vertex set, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominatingWitness {
    pub vertices: Vec<usize>,
    pub kind: DominationKind,
}

impl DominatingWitness {
    pub fn is_valid(&self, g: &Graph) -> bool {
        match self.kind {
            DominationKind::Plain => is_dominating(g, &self.vertices),
            DominationKind::Total => is_total_dominating(g, &self.vertices),
        }
    }
}

/// Every vertex is in `set` or adjacent to a member of it.
pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    (0..g.order()).all(|v| set.contains(&v) || set.iter().any(|&d| g.has_edge(v, d)))
}

/// Every vertex (members included) has a neighbor in `set`.
pub fn is_total_dominating(g: &Graph, set: &[usize]) -> bool {
    (0..g.order()).all(|v| set.iter().any(|&d| g.has_edge(v, d)))
}
