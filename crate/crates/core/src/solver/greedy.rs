use std::time::Instant;

use super::{check_query, DimensionResult, SolveStats, Status, TieBreak};
use crate::error::Result;
use crate::metric::{DistanceMatrix, PairTable, Truncation};
use crate::vertex_set::VertexSet;

/// Multicover greedy: repeatedly add the vertex lying in the most pairs that
/// still need cover, then drop chosen vertices that became redundant.
/// Status is `UpperBoundOnly`, or `NoGenerator` when `k > 𝔡_t(G)`.
pub fn greedy_generator(dm: &DistanceMatrix, t: Truncation, k: usize) -> Result<DimensionResult> {
    check_query(dm, k)?;
    let start = Instant::now();
    let table = dm.pairs(t);
    let t = table.truncation();
    if let Some(r) = table.records().iter().find(|r| r.size() < k) {
        let stats = SolveStats {
            nodes: 0,
            elapsed: start.elapsed(),
        };
        return Ok(DimensionResult::no_generator(k, t, (r.x, r.y), stats));
    }
    let set = greedy_cover(&table, k, TieBreak::LowestIndex);
    Ok(DimensionResult {
        status: Status::UpperBoundOnly,
        k,
        t: t.get(),
        value: Some(set.len()),
        basis: Some(set),
        lower_bound: k,
        deficient_pair: None,
        stats: SolveStats {
            nodes: 0,
            elapsed: start.elapsed(),
        },
    })
}

/// Greedy `k`-multicover of every pair. The caller guarantees every pair has
/// at least `k` members.
pub(crate) fn greedy_cover(table: &PairTable, k: usize, tie_break: TieBreak) -> VertexSet {
    let n = table.order();
    let records = table.records();
    let mut cover: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (p, r) in records.iter().enumerate() {
        for v in r.set.iter() {
            cover[v].push(p);
        }
    }
    let mut need = vec![k; records.len()];
    let mut remaining = if k == 0 { 0 } else { records.len() };
    let mut gain: Vec<usize> = cover.iter().map(Vec::len).collect();
    let mut chosen = vec![false; n];
    while remaining > 0 {
        let pick = (0..n).filter(|&v| !chosen[v] && gain[v] > 0);
        let v = match tie_break {
            TieBreak::LowestIndex => pick.rev().max_by_key(|&v| gain[v]),
            TieBreak::HighestIndex => pick.max_by_key(|&v| gain[v]),
        }
        .expect("every deficient pair has an unchosen member");
        chosen[v] = true;
        for &p in &cover[v] {
            if need[p] > 0 {
                need[p] -= 1;
                if need[p] == 0 {
                    remaining -= 1;
                    for u in records[p].set.iter() {
                        gain[u] -= 1;
                    }
                }
            }
        }
    }
    // hits[p] = |S ∩ 𝒟(p)|; drop v when every pair it hits keeps k others
    let mut hits: Vec<usize> = records
        .iter()
        .map(|r| r.set.iter().filter(|&v| chosen[v]).count())
        .collect();
    for v in (0..n).rev() {
        if chosen[v] && cover[v].iter().all(|&p| hits[p] > k) {
            chosen[v] = false;
            for &p in &cover[v] {
                hits[p] -= 1;
            }
        }
    }
    VertexSet::from_members(n, (0..n).filter(|&v| chosen[v])).expect("indices are in range")
}
