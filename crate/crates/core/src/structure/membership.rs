use crate::constructions::{validate_blueprint, D3Blueprint, Rule4Target};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

/// A blueprint together with the vertex map realizing it:
/// `mapping[i]` is the vertex of the input graph playing layout index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct D3Membership {
    pub blueprint: D3Blueprint,
    pub mapping: Vec<usize>,
}

impl D3Membership {
    /// Rebuilds the blueprint, maps it onto `g` and compares edge sets.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        let mut sorted = self.mapping.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() || self.blueprint.order() != n {
            return false;
        }
        if !validate_blueprint(&self.blueprint).valid {
            return false;
        }
        let h = self.blueprint.assemble();
        (0..n).all(|i| (i + 1..n).all(|j| h.has_edge(i, j) == g.has_edge(self.mapping[i], self.mapping[j])))
    }
}

/// Searches role assignments under which `g` is built by a valid blueprint.
pub fn is_in_class_d3(g: &Graph) -> Option<D3Membership> {
    is_in_class_d3_until(g, None).expect("no deadline set")
}

/// As [`is_in_class_d3`], giving up with `DeadlineExceeded` once `deadline` passes.
pub fn is_in_class_d3_until(g: &Graph, deadline: Option<Instant>) -> Result<Option<D3Membership>> {
    let n = g.order();
    if n < 7 {
        return Ok(None);
    }
    let mut apexes: Vec<usize> = (0..n).collect();
    apexes.sort_by_key(|&v| (g.degree(v), v));
    for x3 in apexes {
        // x3 keeps two non-neighbors on each side
        if g.degree(x3) + 5 > n {
            continue;
        }
        let Some((side_a, side_b)) = bipartition_without(g, x3) else {
            continue;
        };
        for (v1, v2) in [(&side_a, &side_b), (&side_b, &side_a)] {
            if v1.len() < 3 || v2.len() < 3 {
                continue;
            }
            let full = |v: usize, other: &[usize]| other.iter().all(|&w| g.has_edge(v, w));
            let y1s: Vec<usize> = v2.iter().copied().filter(|&v| full(v, v1)).collect();
            let y2s: Vec<usize> = v1.iter().copied().filter(|&v| full(v, v2)).collect();
            for &y1 in &y1s {
                for &y2 in &y2s {
                    for &x1 in v1.iter().filter(|&&v| v != y2 && g.has_edge(v, x3)) {
                        for &y3 in v2.iter().filter(|&&v| v != y1 && g.has_edge(v, x3)) {
                            if deadline.is_some_and(|d| Instant::now() >= d) {
                                return Err(Error::DeadlineExceeded);
                            }
                            let m = assign(g, v1, v2, x3, [x1, y2, y1, y3]);
                            if m.verify(g) {
                                return Ok(Some(m));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

// Sides of G - x3 when it is connected and bipartite, each sorted.
fn bipartition_without(g: &Graph, x3: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let start = (0..n).find(|&v| v != x3)?;
    let mut side = vec![u8::MAX; n];
    side[start] = 0;
    let mut queue = vec![start];
    let mut reached = 1;
    while let Some(u) = queue.pop() {
        for w in g.neighbors(u) {
            if w == x3 {
                continue;
            }
            if side[w] == u8::MAX {
                side[w] = 1 - side[u];
                reached += 1;
                queue.push(w);
            } else if side[w] == side[u] {
                return None;
            }
        }
    }
    if reached != n - 1 {
        return None;
    }
    let a = (0..n).filter(|&v| v != x3 && side[v] == 0).collect();
    let b = (0..n).filter(|&v| v != x3 && side[v] == 1).collect();
    Some((a, b))
}

// Reads the blueprint off `g` for a fixed choice of distinguished vertices.
// Only the V3-assigned rule-4 vertices can carry rule-2/rule-3 edges.
fn assign(g: &Graph, v1: &[usize], v2: &[usize], x3: usize, roles: [usize; 4]) -> D3Membership {
    let [x1, y2, y1, y3] = roles;
    let (a, b) = (v1.len(), v2.len());
    let rest2: Vec<usize> = v2.iter().copied().filter(|&v| v != y1 && v != y3).collect();
    let mut mapping = vec![x1, y2];
    mapping.extend(v1.iter().copied().filter(|&v| v != x1 && v != y2));
    mapping.push(rest2[0]);
    mapping.push(y1);
    mapping.push(y3);
    mapping.extend(rest2[1..].iter().copied());
    mapping.push(x3);
    let mut bp = D3Blueprint {
        a,
        b,
        rule2: BTreeSet::new(),
        rule3: BTreeSet::new(),
        rule4: BTreeMap::new(),
    };
    for i in bp.rule4_vertices() {
        let target = if g.has_edge(mapping[i], x3) {
            Rule4Target::V3
        } else {
            Rule4Target::Opposite
        };
        bp.rule4.insert(i, target);
        if target == Rule4Target::V3 {
            if i >= a && g.has_edge(mapping[i], x1) {
                bp.rule2.insert(i);
            }
            if i < a && g.has_edge(mapping[i], y3) {
                bp.rule3.insert(i);
            }
        }
    }
    D3Membership {
        blueprint: bp,
        mapping,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_d3, build_d_odd, enumerate_d3_blueprints, DOddSpec};
    use crate::graph::complete_bipartite;

    #[test]
    fn odd_construction_is_a_member() {
        let (g, _) = build_d_odd(DOddSpec::new(3, 9).unwrap());
        let m = is_in_class_d3(&g).expect("member");
        assert!(m.verify(&g));
    }

    #[test]
    fn bipartite_is_not() {
        assert!(is_in_class_d3(&complete_bipartite(3, 3).unwrap().0).is_none());
        assert!(is_in_class_d3(&complete_bipartite(4, 4).unwrap().0).is_none());
    }

    #[test]
    fn round_trip_relabeled() {
        for bp in enumerate_d3_blueprints(3, 4, 20).unwrap() {
            let (g, _) = build_d3(&bp).unwrap();
            let n = g.order();
            let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % n).collect();
            let h = g.relabel(&perm);
            let m = is_in_class_d3(&h).expect("relabeled member");
            assert!(m.verify(&h));
        }
    }

    #[test]
    fn expired_deadline() {
        let (g, _) = build_d_odd(DOddSpec::new(3, 9).unwrap());
        assert_eq!(
            is_in_class_d3_until(&g, Some(Instant::now())),
            Err(Error::DeadlineExceeded)
        );
    }
}
