//! Balls around a vertex set and the family `𝒢_B(G)` of graphs on `V(G)` that
//! keep every neighbourhood inside `B_{D_t(G)-2}(B)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{DistanceMatrix, Truncation};
use crate::solver::is_generator;
use crate::vertex_set::VertexSet;

/// How the free pairs of a family member are decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeChoice {
    /// Keep the free pairs exactly as in `G`, giving `G` itself.
    KeepAll,
    /// Each free pair becomes an edge with probability 1/2, from a ChaCha8 stream.
    Seeded(u64),
    /// Exactly these free pairs become edges.
    Explicit(Vec<(usize, usize)>),
}

/// `B_r(B) = ⋃_{x∈B} {y : d_t(x, y) <= r}`, for `0 <= r <= min{D(G), t}`.
/// On a disconnected graph `D(G)` is taken to be `t`.
pub fn ball(dm: &DistanceMatrix, b: &VertexSet, radius: usize, t: Truncation) -> Result<VertexSet> {
    check_universe(dm, b)?;
    if b.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let max = truncated_diameter(dm, t);
    if radius > max {
        return Err(Error::RadiusOutOfRange { radius, max });
    }
    let mut out = VertexSet::empty(dm.order());
    for y in 0..dm.order() {
        if b.iter().any(|x| dm.truncated(t, x, y) <= radius) {
            out.insert(y);
        }
    }
    Ok(out)
}

/// `D_t(G) = min{D(G), t}`, with `D(G) = ∞` for disconnected graphs.
pub fn truncated_diameter(dm: &DistanceMatrix, t: Truncation) -> usize {
    match dm.diameter() {
        crate::metric::Diameter::Finite(d) => d.min(t.get()),
        crate::metric::Diameter::Unreachable => t.get(),
    }
}

/// The protected ball `B_{D_t(G)-2}(B)`; empty when `D_t(G) < 2`.
pub fn protected_ball(dm: &DistanceMatrix, b: &VertexSet, t: Truncation) -> Result<VertexSet> {
    check_universe(dm, b)?;
    if b.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    match truncated_diameter(dm, t).checked_sub(2) {
        Some(radius) => ball(dm, b, radius, t),
        None => Ok(VertexSet::empty(dm.order())),
    }
}

/// Pairs `u < v` with both ends outside the protected ball; a complete graph
/// has none.
pub fn free_pairs(g: &Graph, b: &VertexSet, t: Truncation) -> Result<Vec<(usize, usize)>> {
    if g.is_complete() {
        return Ok(Vec::new());
    }
    let dm = DistanceMatrix::new(g);
    let outside = protected_ball(&dm, b, t)?.complement().to_vec();
    let mut out = Vec::with_capacity(outside.len() * outside.len().saturating_sub(1) / 2);
    for (i, &u) in outside.iter().enumerate() {
        out.extend(outside[i + 1..].iter().map(|&v| (u, v)));
    }
    Ok(out)
}

/// A member of `𝒢_B(G)`: edges touching the protected ball are copied from
/// `G`, free pairs follow `choice`. For complete `G` the family is `{G}`.
pub fn family_member(
    g: &Graph,
    b: &VertexSet,
    t: Truncation,
    choice: &EdgeChoice,
) -> Result<Graph> {
    if b.universe() != g.order() {
        return Err(Error::UniverseMismatch {
            expected: g.order(),
            got: b.universe(),
        });
    }
    if b.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if g.is_complete() {
        return Ok(g.clone());
    }
    let free = free_pairs(g, b, t)?;
    let is_free = |u: usize, v: usize| free.binary_search(&(u.min(v), u.max(v))).is_ok();
    let mut edges: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| !is_free(u, v)).collect();
    match choice {
        EdgeChoice::KeepAll => edges.extend(g.edges().filter(|&(u, v)| is_free(u, v))),
        EdgeChoice::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            edges.extend(free.iter().copied().filter(|_| rng.gen_bool(0.5)));
        }
        EdgeChoice::Explicit(chosen) => {
            for &(u, v) in chosen {
                if !is_free(u, v) {
                    return Err(Error::NotAFreePair { u, v });
                }
                edges.push((u, v));
            }
        }
    }
    Graph::new(g.order(), edges)
}

/// [`family_member`] after checking that `B` is a `(k, t)`-metric generator
/// of `G`.
pub fn family_member_checked(
    g: &Graph,
    b: &VertexSet,
    t: Truncation,
    k: usize,
    choice: &EdgeChoice,
) -> Result<Graph> {
    let dm = DistanceMatrix::new(g);
    check_universe(&dm, b)?;
    if let Some((x, y)) = is_generator(&dm, t, k, b).failing {
        return Err(Error::NotAGenerator {
            k,
            t: t.get(),
            x,
            y,
        });
    }
    family_member(g, b, t, choice)
}

fn check_universe(dm: &DistanceMatrix, b: &VertexSet) -> Result<()> {
    if b.universe() != dm.order() {
        return Err(Error::UniverseMismatch {
            expected: dm.order(),
            got: b.universe(),
        });
    }
    Ok(())
}
