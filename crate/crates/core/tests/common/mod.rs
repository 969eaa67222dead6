//! Shared fixtures: exhaustive graph enumeration up to isomorphism, a
//! brute-force isomorphism test and seeded random graphs.

#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use ktmd::metric::critical_union;
use ktmd::solver::DimensionProfile;
use ktmd::{
    dimension_profile, twin_classes, Diameter, DistanceMatrix, Graph, SolverConfig, Truncation,
};
use rand::Rng;

/// Upper-triangle adjacency bits, pair `(u, v)` with `u < v` at `v(v-1)/2 + u`.
fn bits_of(g: &Graph) -> u64 {
    g.edges()
        .fold(0, |acc, (u, v)| acc | 1 << pair_bit(u.min(v), u.max(v)))
}

fn pair_bit(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u
}

fn graph_of(n: usize, bits: u64) -> Graph {
    let edges = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| bits >> pair_bit(u, v) & 1 == 1);
    Graph::new(n, edges).expect("valid enumeration")
}

/// Smallest adjacency code over all relabellings that list vertices by
/// nondecreasing degree.
fn canonical(n: usize, bits: u64) -> u64 {
    let mut deg = vec![0; n];
    for v in 0..n {
        for u in 0..v {
            if bits >> pair_bit(u, v) & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    let mut best = u64::MAX;
    for perm in (0..n).permutations(n) {
        // perm[i] is the old vertex placed at position i
        if perm.windows(2).any(|w| deg[w[0]] > deg[w[1]]) {
            continue;
        }
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                if bits >> pair_bit(a, b) & 1 == 1 {
                    code |= 1 << pair_bit(i, j);
                }
            }
        }
        best = best.min(code);
    }
    best
}

/// One representative per isomorphism class of graphs of order `n`
/// (connected or not), for `1 <= n <= 8`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n));
    let mut classes: Vec<u64> = vec![0];
    for m in 2..=n {
        let mut seen = HashSet::new();
        for &code in &classes {
            for nbrs in 0u64..1 << (m - 1) {
                let mut bits = code;
                for u in 0..m - 1 {
                    if nbrs >> u & 1 == 1 {
                        bits |= 1 << pair_bit(u, m - 1);
                    }
                }
                seen.insert(canonical(m, bits));
            }
        }
        classes = seen.into_iter().sorted().collect();
    }
    classes.into_iter().map(|b| graph_of(n, b)).collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Brute-force isomorphism test over all bijections.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    (0..n)
        .permutations(n)
        .any(|p| g.edges().all(|(u, v)| h.has_edge(p[u], p[v])))
}

/// `G(n, p)` conditioned on connectivity by resampling.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::new(n, edges).expect("valid random graph");
        if g.is_connected() {
            return g;
        }
    }
}

/// Structural properties every exact profile must satisfy, over
/// `t = 1..=D(G)+1` and all feasible `k`. Returns one message per violation.
pub fn property_violations(g: &Graph, cfg: &SolverConfig) -> Vec<String> {
    let n = g.order();
    let dm = DistanceMatrix::new(g);
    let diameter = match dm.diameter() {
        Diameter::Finite(d) => d,
        Diameter::Unreachable => n,
    };
    let profile =
        dimension_profile(&dm, diameter + 1, cfg).expect("profile of a graph with n >= 2");
    let mut out = Vec::new();
    for (t, k) in profile.chain_violations() {
        out.push(format!("monotony or chain broken at t={t} k={k}"));
    }
    let all_twins = twin_classes(g).iter().all(|c| c.len() > 1);
    for row in &profile.rows {
        let t = row.t;
        let tt = Truncation::new(t).unwrap();
        let d = row.dimensional;
        for (i, cell) in row.cells.iter().enumerate() {
            let k = i + 1;
            match cell.value {
                Some(v) if v <= n - d + k => {}
                other => out.push(format!(
                    "upper bound n - d_t + k fails at t={t} k={k}: {other:?}"
                )),
            }
        }
        let top = &row.cells[d - 1];
        let value = top.value.expect("k = d_t is feasible");
        let crit = critical_union(&dm, tt, d);
        let basis = top.basis.as_ref().expect("solved results carry a basis");
        if !crit.is_subset(basis) || value < crit.len() {
            out.push(format!(
                "critical union not contained in the basis at t={t}"
            ));
        }
        if (value == n) != (crit.len() == n) {
            out.push(format!("value n iff full critical union fails at t={t}"));
        }
        if crit.len() + 1 == n && value != n - 1 {
            out.push(format!(
                "critical union of size n - 1 but value {value} at t={t}"
            ));
        }
        if t >= 2 && d >= 2 && (row.value(2) == Some(n)) != all_twins {
            out.push(format!(
                "k = 2 value n iff all twin classes non-singleton fails at t={t}"
            ));
        }
    }
    out
}

pub fn profile_of(g: &Graph, t_max: usize) -> DimensionProfile {
    dimension_profile(&DistanceMatrix::new(g), t_max, &SolverConfig::default()).unwrap()
}
