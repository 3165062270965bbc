use super::{DominatingWitness, DominationKind};
use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, iter_mask, Graph, Mask};

/// Domination number and the lexicographically least minimum dominating set.
pub fn domination_number(g: &Graph) -> Result<(usize, DominatingWitness)> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let sets: Vec<Mask> = g
        .masks()?
        .iter()
        .enumerate()
        .map(|(v, &m)| m | bit(v))
        .collect();
    let (size, vertices) = solve_cover(&sets);
    Ok((
        size,
        DominatingWitness {
            vertices,
            kind: DominationKind::Plain,
        },
    ))
}

/// Total domination number; undefined when some vertex is isolated.
pub fn total_domination_number(g: &Graph) -> Result<(usize, DominatingWitness)> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let sets = g.masks()?;
    let (size, vertices) = solve_cover(&sets);
    Ok((
        size,
        DominatingWitness {
            vertices,
            kind: DominationKind::Total,
        },
    ))
}

// `sets[v]` is what vertex v covers. Both neighborhood systems are symmetric,
// so `sets[u]` is also the set of vertices able to cover u.
fn solve_cover(sets: &[Mask]) -> (usize, Vec<usize>) {
    let n = sets.len();
    let universe = full_mask(n);
    let mut best = greedy_cover(sets, universe);
    branch(sets, universe, 0, &mut best);
    let witness = lex_least_cover(sets, universe, best)
        .expect("a cover of optimal size exists");
    (best, iter_mask(witness).collect())
}

fn greedy_cover(sets: &[Mask], universe: Mask) -> usize {
    let mut uncovered = universe;
    let mut count = 0;
    while uncovered != 0 {
        let v = (0..sets.len())
            .max_by_key(|&v| ((sets[v] & uncovered).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        uncovered &= !sets[v];
        count += 1;
    }
    count
}

fn lower_bound(sets: &[Mask], uncovered: Mask) -> usize {
    let max_gain = sets
        .iter()
        .map(|&s| (s & uncovered).count_ones())
        .max()
        .unwrap_or(0) as usize;
    if max_gain == 0 {
        return usize::MAX / 2;
    }
    (uncovered.count_ones() as usize).div_ceil(max_gain)
}

// Improves `best` to the minimum cover size; branches on the covers of the
// uncovered element with the fewest candidates.
fn branch(sets: &[Mask], uncovered: Mask, count: usize, best: &mut usize) {
    if uncovered == 0 {
        *best = (*best).min(count);
        return;
    }
    if count + lower_bound(sets, uncovered) >= *best {
        return;
    }
    let pivot = iter_mask(uncovered)
        .min_by_key(|&u| sets[u].count_ones())
        .unwrap();
    let mut cands: Vec<usize> = iter_mask(sets[pivot]).collect();
    cands.sort_by_key(|&w| std::cmp::Reverse((sets[w] & uncovered).count_ones()));
    for w in cands {
        branch(sets, uncovered & !sets[w], count + 1, best);
    }
}

// Include-first search in index order: the first cover found of size at most
// `size` is the lexicographically least one.
fn lex_least_cover(sets: &[Mask], universe: Mask, size: usize) -> Option<Mask> {
    fn go(sets: &[Mask], idx: usize, chosen: Mask, uncovered: Mask, left: usize) -> Option<Mask> {
        if uncovered == 0 {
            return Some(chosen);
        }
        if left == 0 || idx == sets.len() || lower_bound(sets, uncovered) > left {
            return None;
        }
        let later = !full_mask(idx);
        if iter_mask(uncovered).any(|u| sets[u] & later == 0) {
            return None;
        }
        go(sets, idx + 1, chosen | bit(idx), uncovered & !sets[idx], left - 1)
            .or_else(|| go(sets, idx + 1, chosen, uncovered, left))
    }
    go(sets, 0, 0, universe, size)
}
