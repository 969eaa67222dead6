//! `(k, t)`-metric generators and the `(k, t)`-metric dimension.
//!
//! The dimension is the optimum of a set `k`-multicover instance: every vertex
//! pair must be hit `k` times, and vertex `v` hits pair `{x, y}` iff
//! `v ∈ 𝒟_t(x, y)`.

mod brute;
mod exact;
mod greedy;

use std::time::Duration;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::metric::{DistanceMatrix, Truncation};
use crate::vertex_set::VertexSet;

pub use brute::{
    brute_force_dimension, brute_force_dimension_with_limit, generators_of_size,
    generators_with_size, DEFAULT_ORACLE_LIMIT,
};
pub use exact::exact_dimension;
pub use greedy::greedy_generator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    /// Optimal value and basis.
    Solved,
    /// Some pair has fewer than `k` distinguishing vertices.
    NoGenerator,
    /// A valid generator whose optimality is not established.
    UpperBoundOnly,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

/// Outcome of a dimension query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionResult {
    pub status: Status,
    pub k: usize,
    /// The truncation level actually searched (clamped to the diameter on
    /// connected graphs).
    pub t: usize,
    pub value: Option<usize>,
    pub basis: Option<VertexSet>,
    /// Proven lower bound on the dimension (0 for `NoGenerator`).
    pub lower_bound: usize,
    /// For `NoGenerator`, the first pair with `|𝒟_t(x, y)| < k`.
    pub deficient_pair: Option<(usize, usize)>,
    pub stats: SolveStats,
}

impl DimensionResult {
    pub(crate) fn no_generator(
        k: usize,
        t: Truncation,
        pair: (usize, usize),
        stats: SolveStats,
    ) -> Self {
        Self {
            status: Status::NoGenerator,
            k,
            t: t.get(),
            value: None,
            basis: None,
            lower_bound: 0,
            deficient_pair: Some(pair),
            stats,
        }
    }
}

/// Vertex preference when several candidates cover equally many deficient pairs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    LowestIndex,
    HighestIndex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Search nodes allowed before giving up with the incumbent.
    pub node_budget: u64,
    pub threads: usize,
    /// Force every undecided vertex of a pair whose remaining demand equals
    /// its remaining candidates.
    pub forced_pruning: bool,
    pub tie_break: TieBreak,
}

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 1,
            forced_pruning: true,
            tie_break: TieBreak::LowestIndex,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.node_budget == 0 || self.threads == 0 {
            return Err(Error::InapplicableInputs(
                "node budget and thread count must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Result of [`is_generator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub ok: bool,
    /// Lexicographically first pair with `|𝒟_t(x, y) ∩ S| < k`.
    pub failing: Option<(usize, usize)>,
}

/// Whether `s` is a `(k, t)`-metric generator. Panics if `s` lives in a
/// different universe.
pub fn is_generator(dm: &DistanceMatrix, t: Truncation, k: usize, s: &VertexSet) -> GeneratorCheck {
    assert_eq!(
        s.universe(),
        dm.order(),
        "vertex set universe differs from graph order"
    );
    let failing = dm.pairs(t).first_failing_pair(s, k);
    GeneratorCheck {
        ok: failing.is_none(),
        failing,
    }
}

pub(crate) fn check_query(dm: &DistanceMatrix, k: usize) -> Result<()> {
    if dm.order() < 2 {
        return Err(Error::TooSmall);
    }
    if k == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    Ok(())
}

/// One row of a [`DimensionProfile`]: all feasible `k` at a fixed `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub t: usize,
    /// `𝔡_t(G)`, the largest feasible `k`.
    pub dimensional: usize,
    /// Entry `k - 1` holds the result for `k`.
    pub cells: Vec<DimensionResult>,
}

impl ProfileRow {
    pub fn value(&self, k: usize) -> Option<usize> {
        self.cells.get(k.checked_sub(1)?)?.value
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionProfile {
    pub rows: Vec<ProfileRow>,
}

impl DimensionProfile {
    pub fn row(&self, t: usize) -> Option<&ProfileRow> {
        self.rows.iter().find(|r| r.t == t)
    }

    /// Cells where `dim_k^{t+1} > dim_k^t` or `dim_{k+1}^t <= dim_k^t`, as
    /// `(t, k)`; both are impossible, so this is empty for a correct table.
    pub fn chain_violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for row in &self.rows {
            for k in 1..row.cells.len() {
                if let (Some(a), Some(b)) = (row.value(k), row.value(k + 1)) {
                    if b <= a {
                        out.push((row.t, k));
                    }
                }
            }
        }
        for pair in self.rows.windows(2) {
            let (lo, hi) = (&pair[0], &pair[1]);
            for k in 1..=hi.cells.len() {
                if let (Some(a), Some(b)) = (lo.value(k), hi.value(k)) {
                    if b > a {
                        out.push((hi.t, k));
                    }
                }
            }
        }
        out
    }
}

/// `dim_k^t(G)` for every `t` in `1..=t_max` and every `k` in `1..=𝔡_t(G)`.
/// Rows are reported at the requested `t` even when the search clamps it.
pub fn dimension_profile(
    dm: &DistanceMatrix,
    t_max: usize,
    cfg: &SolverConfig,
) -> Result<DimensionProfile> {
    check_query(dm, 1)?;
    Truncation::new(t_max)?;
    let mut rows = Vec::with_capacity(t_max);
    for t in 1..=t_max {
        let tt = Truncation::new(t)?;
        let (dimensional, _) = crate::metric::min_distinguishing_number(dm, tt)?;
        let cells = (1..=dimensional)
            .map(|k| exact_dimension(dm, tt, k, cfg))
            .collect::<Result<Vec<_>>>()?;
        rows.push(ProfileRow {
            t,
            dimensional,
            cells,
        });
    }
    Ok(DimensionProfile { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn t(v: usize) -> Truncation {
        Truncation::new(v).unwrap()
    }

    #[test]
    fn whole_vertex_set_is_a_generator_up_to_the_threshold() {
        let dm = DistanceMatrix::new(&cycle(7).unwrap());
        let v = VertexSet::full(7);
        assert!(is_generator(&dm, t(2), 4, &v).ok);
        assert!(!is_generator(&dm, t(2), 5, &v).ok);
    }

    #[test]
    fn empty_set_fails_on_first_pair() {
        let dm = DistanceMatrix::new(&path(3).unwrap());
        let check = is_generator(&dm, t(2), 1, &VertexSet::empty(3));
        assert_eq!(
            check,
            GeneratorCheck {
                ok: false,
                failing: Some((0, 1))
            }
        );
    }

    #[test]
    fn profile_rows_for_p4_and_c6() {
        let cfg = SolverConfig::default();
        let p4 = dimension_profile(&DistanceMatrix::new(&path(4).unwrap()), 2, &cfg).unwrap();
        let row = p4.row(2).unwrap();
        assert_eq!(
            (1..=3).map(|k| row.value(k)).collect::<Vec<_>>(),
            vec![Some(2), Some(3), Some(4)]
        );
        let c6 = dimension_profile(&DistanceMatrix::new(&cycle(6).unwrap()), 2, &cfg).unwrap();
        let row = c6.row(2).unwrap();
        assert_eq!(
            (1..=4).map(|k| row.value(k)).collect::<Vec<_>>(),
            vec![Some(2), Some(3), Some(5), Some(6)]
        );
        assert!(p4.chain_violations().is_empty());
        assert!(c6.chain_violations().is_empty());
    }

    #[test]
    fn t_one_row_is_discrete() {
        let dm = DistanceMatrix::new(&path(5).unwrap());
        let p = dimension_profile(&dm, 1, &SolverConfig::default()).unwrap();
        assert_eq!(p.rows[0].dimensional, 2);
        assert_eq!(p.rows[0].value(1), Some(4));
        assert_eq!(p.rows[0].value(2), Some(5));
    }

    #[test]
    fn queries_reject_tiny_graphs_and_zero_k() {
        let k1 = DistanceMatrix::new(&complete(1).unwrap());
        assert_eq!(
            exact_dimension(&k1, t(1), 1, &SolverConfig::default()),
            Err(Error::TooSmall)
        );
        let k3 = DistanceMatrix::new(&complete(3).unwrap());
        assert_eq!(
            exact_dimension(&k3, t(1), 0, &SolverConfig::default()),
            Err(Error::ZeroMultiplicity)
        );
    }

    #[test]
    fn json_shape() {
        let dm = DistanceMatrix::new(&path(4).unwrap());
        let r = exact_dimension(&dm, t(2), 1, &SolverConfig::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "Solved");
        assert_eq!(v["value"], 2);
        assert!(v["basis"].is_array());
        assert!(v["stats"]["nodes"].is_u64());
    }
}
