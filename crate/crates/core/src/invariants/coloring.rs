//! Backtracking over set partitions into independent sets.
//!
//! Vertices are assigned in a fixed order and may only open the next unused
//! class, so each partition is visited once. Dominator and dominated
//! constraints are pruned incrementally from per-class member masks.

use super::Coloring;
use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, iter_mask, Graph, Mask};
use std::ops::ControlFlow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColoringKind {
    Proper,
    Dominator,
    Dominated,
}

const UNSET: u8 = u8::MAX;

struct PartitionSearch<'a> {
    nbr: &'a [Mask],
    kind: ColoringKind,
    k: usize,
    order: Vec<usize>,
    color: Vec<u8>,
    members: Vec<Mask>,
    common: Vec<Mask>,
    used: usize,
    unassigned: Mask,
}

impl<'a> PartitionSearch<'a> {
    fn new(nbr: &'a [Mask], kind: ColoringKind, k: usize, order: Vec<usize>) -> Self {
        let n = nbr.len();
        PartitionSearch {
            nbr,
            kind,
            k,
            order,
            color: vec![UNSET; n],
            members: vec![0; k],
            common: vec![full_mask(n); k],
            used: 0,
            unassigned: full_mask(n),
        }
    }

    fn n(&self) -> usize {
        self.nbr.len()
    }

    // Can w still end up dominating some class?
    fn may_dominate(&self, w: usize) -> bool {
        let nw = self.nbr[w];
        (0..self.k).any(|c| {
            let m = self.members[c];
            if m == 0 {
                self.unassigned & (nw | bit(w)) != 0
            } else {
                m & !nw == 0 || m == bit(w)
            }
        })
    }

    fn feasible(&self) -> bool {
        if self.used == self.k {
            for u in iter_mask(self.unassigned) {
                if (0..self.k).all(|c| self.members[c] & self.nbr[u] != 0) {
                    return false;
                }
            }
        }
        match self.kind {
            ColoringKind::Proper => true,
            ColoringKind::Dominator => (0..self.n()).all(|w| self.may_dominate(w)),
            ColoringKind::Dominated => (0..self.used).all(|c| self.common[c] != 0),
        }
    }

    fn run<F>(&mut self, pos: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u8]) -> ControlFlow<()>,
    {
        let n = self.n();
        if pos == n {
            return if self.used == self.k {
                visit(&self.color)
            } else {
                ControlFlow::Continue(())
            };
        }
        let v = self.order[pos];
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.members[c] & self.nbr[v] != 0 {
                continue;
            }
            let opens = c == self.used;
            let used_after = self.used + opens as usize;
            if n - pos - 1 < self.k - used_after {
                continue;
            }
            let saved_common = self.common[c];
            self.color[v] = c as u8;
            self.members[c] |= bit(v);
            self.common[c] &= self.nbr[v];
            self.unassigned &= !bit(v);
            self.used = used_after;
            let flow = if self.feasible() {
                self.run(pos + 1, visit)
            } else {
                ControlFlow::Continue(())
            };
            self.used -= opens as usize;
            self.unassigned |= bit(v);
            self.common[c] = saved_common;
            self.members[c] &= !bit(v);
            self.color[v] = UNSET;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn degree_order(nbr: &[Mask]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..nbr.len()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(nbr[v].count_ones()), v));
    order
}

fn exists(nbr: &[Mask], kind: ColoringKind, k: usize) -> bool {
    let mut search = PartitionSearch::new(nbr, kind, k, degree_order(nbr));
    search.run(0, &mut |_| ControlFlow::Break(())).is_break()
}

/// Whether a coloring of `kind` with exactly `k` classes exists.
pub(crate) fn has_coloring(g: &Graph, kind: ColoringKind, k: usize) -> Result<bool> {
    let nbr = g.masks()?;
    Ok(k >= 1 && k <= nbr.len() && exists(&nbr, kind, k))
}

/// Lexicographically least color vector (classes numbered by smallest
/// vertex) among colorings of `kind` with exactly `k` classes.
pub fn find_coloring(g: &Graph, kind: ColoringKind, k: usize) -> Result<Option<Coloring>> {
    let nbr = g.masks()?;
    if k == 0 || k > nbr.len() {
        return Ok(None);
    }
    let mut found = None;
    let mut search = PartitionSearch::new(&nbr, kind, k, (0..nbr.len()).collect());
    let _ = search.run(0, &mut |colors| {
        found = Some(to_coloring(colors));
        ControlFlow::Break(())
    });
    Ok(found)
}

fn to_coloring(colors: &[u8]) -> Coloring {
    let c: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
    Coloring::from_colors(&c)
}

/// Visits every coloring of `kind` with exactly `k` classes, once per
/// partition, classes ordered by smallest vertex. Stops when `visit` breaks.
pub fn for_each_coloring<F>(g: &Graph, kind: ColoringKind, k: usize, mut visit: F) -> Result<()>
where
    F: FnMut(Coloring) -> ControlFlow<()>,
{
    let nbr = g.masks()?;
    if k == 0 || k > nbr.len() {
        return Ok(());
    }
    let mut search = PartitionSearch::new(&nbr, kind, k, (0..nbr.len()).collect());
    let _ = search.run(0, &mut |colors| visit(to_coloring(colors)));
    Ok(())
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let nbr = g.masks()?;
    fn expand(nbr: &[Mask], size: usize, cand: Mask, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= !bit(v);
            expand(nbr, size + 1, rest & nbr[v], best);
        }
    }
    let mut best = 0;
    expand(&nbr, 0, full_mask(nbr.len()), &mut best);
    Ok(best)
}

fn minimum(g: &Graph, kind: ColoringKind, from: usize) -> Result<(usize, Coloring)> {
    let nbr = g.masks()?;
    let n = nbr.len();
    for k in from.max(1)..=n {
        if exists(&nbr, kind, k) {
            let witness = find_coloring(g, kind, k)?.expect("decision and witness searches agree");
            return Ok((k, witness));
        }
    }
    unreachable!("{kind:?} coloring with n classes always exists on valid input")
}

/// Chromatic number and the lexicographically least optimal coloring.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let lb = clique_number(g)?;
    minimum(g, ColoringKind::Proper, lb)
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Dominator chromatic number; connected graphs only.
pub fn dominator_chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    require_connected(g)?;
    let (chi, _) = chromatic_number(g)?;
    minimum(g, ColoringKind::Dominator, chi)
}

/// Dominated chromatic number; connected graphs with at least two vertices.
pub fn dominated_chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    require_connected(g)?;
    if g.order() == 1 {
        return Err(Error::SingleVertex);
    }
    let (chi, _) = chromatic_number(g)?;
    minimum(g, ColoringKind::Dominated, chi)
}

/// Every dominator coloring with exactly `k = chi_d(G)` classes.
pub fn enumerate_optimal_dominator_colorings(g: &Graph, k: usize) -> Result<Vec<Coloring>> {
    let (chi_d, _) = dominator_chromatic_number(g)?;
    if k != chi_d {
        return Err(Error::NotOptimal {
            requested: k,
            actual: chi_d,
        });
    }
    let mut out = Vec::new();
    for_each_coloring(g, ColoringKind::Dominator, k, |c| {
        out.push(c);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}
