//! Exhaustive search, kept independent of the pair table and the
//! branch-and-bound so it can serve as a test oracle.

use std::time::Instant;

use itertools::Itertools;

use super::{check_query, DimensionResult, SolveStats, Status};
use crate::error::{Error, Result};
use crate::metric::{DistanceMatrix, Truncation};
use crate::vertex_set::VertexSet;

pub const DEFAULT_ORACLE_LIMIT: usize = 20;
const MASK_BITS: usize = 64;

/// Distinguishing sets as bit masks, straight from the distances.
fn pair_masks(dm: &DistanceMatrix, t: Truncation) -> Vec<((usize, usize), u64)> {
    let n = dm.order();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            let mask = (0..n)
                .filter(|&z| dm.truncated(t, z, x) != dm.truncated(t, z, y))
                .fold(0u64, |m, z| m | 1 << z);
            out.push(((x, y), mask));
        }
    }
    out
}

fn resolves(masks: &[((usize, usize), u64)], k: usize, set: u64) -> bool {
    masks
        .iter()
        .all(|&(_, m)| (m & set).count_ones() as usize >= k)
}

/// [`brute_force_dimension_with_limit`] with the default limit of 20 vertices.
pub fn brute_force_dimension(
    dm: &DistanceMatrix,
    t: Truncation,
    k: usize,
) -> Result<DimensionResult> {
    brute_force_dimension_with_limit(dm, t, k, DEFAULT_ORACLE_LIMIT)
}

/// Tries subsets by increasing size, lexicographically within a size, and
/// returns the first generator. The limit is capped at 64 vertices.
pub fn brute_force_dimension_with_limit(
    dm: &DistanceMatrix,
    t: Truncation,
    k: usize,
    limit: usize,
) -> Result<DimensionResult> {
    check_query(dm, k)?;
    let n = dm.order();
    let limit = limit.min(MASK_BITS);
    if n > limit {
        return Err(Error::OracleLimitExceeded { order: n, limit });
    }
    let start = Instant::now();
    let masks = pair_masks(dm, t);
    if let Some(&(pair, _)) = masks.iter().find(|&&(_, m)| (m.count_ones() as usize) < k) {
        let stats = SolveStats {
            nodes: 0,
            elapsed: start.elapsed(),
        };
        return Ok(DimensionResult::no_generator(k, t, pair, stats));
    }
    let mut tried = 0u64;
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            tried += 1;
            let set = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            if resolves(&masks, k, set) {
                let basis = VertexSet::from_members(n, combo).expect("indices are in range");
                return Ok(DimensionResult {
                    status: Status::Solved,
                    k,
                    t: t.get(),
                    value: Some(size),
                    basis: Some(basis),
                    lower_bound: size,
                    deficient_pair: None,
                    stats: SolveStats {
                        nodes: tried,
                        elapsed: start.elapsed(),
                    },
                });
            }
        }
    }
    unreachable!("the full vertex set resolves every pair once no pair is deficient")
}

/// Number of `(k, t)`-metric generators with exactly `size` vertices.
pub fn generators_of_size(
    dm: &DistanceMatrix,
    t: Truncation,
    k: usize,
    size: usize,
) -> Result<usize> {
    Ok(generators_with_size(dm, t, k, size)?.count())
}

/// Every `(k, t)`-metric generator with exactly `size` vertices, in
/// lexicographic order, produced lazily.
pub fn generators_with_size(
    dm: &DistanceMatrix,
    t: Truncation,
    k: usize,
    size: usize,
) -> Result<impl Iterator<Item = VertexSet>> {
    check_query(dm, k)?;
    let n = dm.order();
    if n > MASK_BITS {
        return Err(Error::OracleLimitExceeded {
            order: n,
            limit: MASK_BITS,
        });
    }
    let masks = pair_masks(dm, t);
    Ok((0..n).combinations(size).filter_map(move |combo| {
        let set = combo.iter().fold(0u64, |m, &v| m | 1 << v);
        resolves(&masks, k, set)
            .then(|| VertexSet::from_members(n, combo).expect("indices are in range"))
    }))
}
