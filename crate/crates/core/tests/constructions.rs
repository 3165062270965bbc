mod common;

use common::{adj_of, naive_gamma};
use domchrom::constructions::{
    build_d3, build_d_even, build_d_odd, enumerate_d3_blueprints, validate_blueprint, D3Blueprint,
    DEvenSpec, DOddSpec, Rule4Target,
};
use domchrom::graph::to_graph6;
use domchrom::invariants::{classify_dk, is_dominating};
use std::collections::{BTreeMap, BTreeSet};

#[test]
fn odd_family_is_dk() {
    for (k, n) in [(3, 9), (3, 10), (3, 11), (5, 17)] {
        let (g, l) = build_d_odd(DOddSpec::new(k, n).unwrap());
        let (dk, r) = classify_dk(&g).unwrap();
        assert_eq!(dk, Some(k), "D^odd({k},{n})");
        assert_eq!((r.gamma_t, r.chi_dom), (Some(k), Some(k)));
        let mut xs = l.set("X");
        xs.push(l.vertex(&format!("x{k}")));
        assert!(is_dominating(&g, &xs));
        assert_eq!(n, 4 * (k - 1) + 1 + l.set("U").len());
    }
}

#[test]
fn even_family_is_dk() {
    for (k, n) in [(4, 12), (4, 14), (6, 18)] {
        let (g, l) = build_d_even(DEvenSpec::new(k, n).unwrap());
        let (dk, r) = classify_dk(&g).unwrap();
        assert_eq!(dk, Some(k), "D^even({k},{n})");
        assert_eq!((r.gamma_t, r.chi_dom), (Some(k), Some(k)));
        assert!(is_dominating(&g, &l.set("X")));
        for i in 0..k / 2 {
            // P_{2i+1} and P_{2i+2} restricted to x, y, z form K_{3,3}
            let a: Vec<usize> = ["x", "y", "z"].iter().map(|r| l.vertex(&format!("{r}{}", 2 * i + 1))).collect();
            let b: Vec<usize> = ["x", "y", "z"].iter().map(|r| l.vertex(&format!("{r}{}", 2 * i + 2))).collect();
            assert!(a.iter().all(|&u| b.iter().all(|&v| g.has_edge(u, v))));
        }
    }
}

#[test]
fn small_odd_instance_against_subset_oracle() {
    let (g, _) = build_d_odd(DOddSpec::new(3, 9).unwrap());
    assert_eq!(naive_gamma(&adj_of(&g)), 3);
}

#[test]
fn construct_goldens() {
    let (g, _) = build_d_odd(DOddSpec::new(3, 9).unwrap());
    assert_eq!(to_graph6(&g), "H?zvbAX");
    assert_eq!(g.edge_count(), 17);
    let (g, _) = build_d_even(DEvenSpec::new(4, 12).unwrap());
    assert_eq!(g.edge_count(), 22);
}

// Every raw choice of rule-2 subset, rule-3 subset and rule-4 targets.
fn brute_force_blueprints(a: usize, b: usize) -> Vec<D3Blueprint> {
    let template = D3Blueprint {
        a,
        b,
        rule2: BTreeSet::new(),
        rule3: BTreeSet::new(),
        rule4: BTreeMap::new(),
    };
    let r2: Vec<usize> = (a..a + b).filter(|&v| v != template.y3()).collect();
    let r3: Vec<usize> = (1..a).collect();
    let r4 = template.rule4_vertices();
    let mut out = vec![];
    for m4 in 0u32..1 << r4.len() {
        for m2 in 0u32..1 << r2.len() {
            for m3 in 0u32..1 << r3.len() {
                let pick = |items: &[usize], m: u32| -> BTreeSet<usize> {
                    items.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect()
                };
                let rule4 = r4
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (v, if m4 >> i & 1 == 1 { Rule4Target::V3 } else { Rule4Target::Opposite }))
                    .collect();
                out.push(D3Blueprint {
                    rule2: pick(&r2, m2),
                    rule3: pick(&r3, m3),
                    rule4,
                    ..template.clone()
                });
            }
        }
    }
    out
}

// Rules applied directly from their statement, checked from scratch.
fn oracle_valid(bp: &D3Blueprint) -> Option<Vec<Vec<bool>>> {
    let (a, b) = (bp.a, bp.b);
    let n = a + b + 1;
    let mut adj = vec![vec![false; n]; n];
    let mut join = |u: usize, v: usize| {
        adj[u][v] = true;
        adj[v][u] = true;
    };
    let (x1, y2, x2, y1, y3, x3) = (0, 1, a, a + 1, a + 2, a + b);
    join(x1, y1);
    join(x2, y2);
    join(x3, y3);
    (0..a).for_each(|v| join(y1, v));
    (a..a + b).for_each(|v| join(y2, v));
    join(x1, x3);
    bp.rule2.iter().for_each(|&v| join(x1, v));
    bp.rule3.iter().for_each(|&v| join(y3, v));
    for (&v, &t) in &bp.rule4 {
        match t {
            Rule4Target::V3 => join(v, x3),
            Rule4Target::Opposite => {
                let other = if v < a { a..a + b } else { 0..a };
                other.for_each(|w| join(v, w));
            }
        }
    }
    let v1: Vec<usize> = (0..a).collect();
    let v2: Vec<usize> = (a..a + b).collect();
    for &v in v1.iter().chain(&v2) {
        if v == x1 || v == y2 || v == y1 || v == y3 {
            continue;
        }
        let opp = if v < a { &v2 } else { &v1 };
        if adj[v][x3] && opp.iter().all(|&w| adj[v][w]) {
            return None;
        }
    }
    if v1.iter().filter(|&&v| !adj[x3][v]).count() < 2 || v2.iter().filter(|&&v| !adj[x3][v]).count() < 2 {
        return None;
    }
    for &x in &v1 {
        for &y in &v2 {
            if adj[x][y] {
                continue;
            }
            let lonely_x = v2.iter().all(|&w| w == y || adj[x][w]);
            let lonely_y = v1.iter().all(|&w| w == x || adj[y][w]);
            if lonely_x && lonely_y {
                return None;
            }
        }
    }
    Some(adj)
}

#[test]
fn blueprint_enumeration_matches_brute_force() {
    for (a, b) in [(3, 3), (3, 4), (4, 3), (4, 4)] {
        let mut oracle: BTreeSet<Vec<Vec<bool>>> = BTreeSet::new();
        for bp in brute_force_blueprints(a, b) {
            let expect = oracle_valid(&bp);
            assert_eq!(validate_blueprint(&bp).valid, expect.is_some(), "{bp:?}");
            if let Some(adj) = expect {
                oracle.insert(adj);
            }
        }
        let listed: Vec<D3Blueprint> = enumerate_d3_blueprints(a, b, usize::MAX).unwrap().collect();
        let graphs: BTreeSet<Vec<Vec<bool>>> =
            listed.iter().map(|bp| adj_of(&build_d3(bp).unwrap().0)).collect();
        assert_eq!(graphs.len(), listed.len(), "distinct blueprints give distinct graphs");
        assert_eq!(graphs, oracle, "a={a} b={b}");
    }
}

#[test]
fn blueprint_graphs_are_d3_with_five_cycle() {
    for (a, b) in [(3, 4), (4, 4), (3, 5)] {
        for bp in enumerate_d3_blueprints(a, b, 40).unwrap() {
            let (g, l) = build_d3(&bp).unwrap();
            assert_eq!(classify_dk(&g).unwrap().0, Some(3), "{bp:?}");
            let cyc = ["y2", "y1", "x1", "x3", "y3", "y2"].map(|r| l.vertex(r));
            assert!(cyc.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
    }
}

#[test]
fn order_seven_has_no_valid_blueprint() {
    assert_eq!(enumerate_d3_blueprints(3, 3, usize::MAX).unwrap().count(), 0);
    assert!(brute_force_blueprints(3, 3).iter().all(|bp| oracle_valid(bp).is_none()));
}
