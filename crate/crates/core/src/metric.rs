//! Geodesic distances, the truncated metric `d_t(x, y) = min{d(x, y), t}` and
//! the distinguishing sets `𝒟_t(x, y) = {z : d_t(z, x) ≠ d_t(z, y)}`.
//!
//! Vertices in different components are at distance [`DistanceMatrix::unreachable`],
//! which truncates to `t`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::num::NonZeroUsize;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Truncation level `t >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Truncation(NonZeroUsize);

impl Truncation {
    pub fn new(t: usize) -> Result<Self> {
        NonZeroUsize::new(t)
            .map(Self)
            .ok_or(Error::InvalidTruncation)
    }

    pub fn get(self) -> usize {
        self.0.get()
    }
}

/// Graph diameter; `Unreachable` for disconnected graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Unreachable,
}

/// All-pairs geodesic distances, plus a per-`t` cache of distinguishing sets.
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    connected: bool,
    cache: Mutex<HashMap<usize, Arc<PairTable>>>,
}

impl DistanceMatrix {
    /// One breadth-first search per source, `O(n (n + m))` total.
    pub fn new(graph: &Graph) -> Self {
        let n = graph.order();
        let sentinel = n as u32;
        let rows: Vec<Vec<u32>> = (0..n)
            .into_par_iter()
            .map(|s| {
                let mut row = vec![sentinel; n];
                row[s] = 0;
                let mut queue = std::collections::VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    for &w in graph.neighbors(u) {
                        if row[w] == sentinel {
                            row[w] = row[u] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                row
            })
            .collect();
        let connected = rows[0].iter().all(|&d| d != sentinel);
        Self {
            n,
            dist: rows.concat(),
            connected,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Sentinel distance between vertices of different components; equals `n`,
    /// which exceeds every finite distance.
    pub fn unreachable(&self) -> usize {
        self.n
    }

    /// Raw distance, possibly [`DistanceMatrix::unreachable`].
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.dist[x * self.n + y] as usize
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// `d_t(x, y)`; unreachable pairs map to `t`.
    pub fn truncated(&self, t: Truncation, x: usize, y: usize) -> usize {
        match self.get(x, y) {
            d if d == self.n => t.get(),
            d => d.min(t.get()),
        }
    }

    pub fn diameter(&self) -> Diameter {
        if !self.connected {
            return Diameter::Unreachable;
        }
        Diameter::Finite(self.dist.iter().copied().max().unwrap_or(0) as usize)
    }

    /// Largest finite distance, i.e. the maximum diameter over components.
    pub fn max_component_diameter(&self) -> usize {
        let sentinel = self.n as u32;
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != sentinel)
            .max()
            .unwrap_or(0) as usize
    }

    /// The truncation level actually used for `t`: on a connected graph any
    /// `t` at or above the diameter gives the same metric, so it is clamped.
    /// Disconnected graphs are never clamped.
    pub fn effective_truncation(&self, t: Truncation) -> Truncation {
        match self.diameter() {
            Diameter::Finite(d) if d >= 1 && t.get() > d => Truncation::new(d).expect("d >= 1"),
            _ => t,
        }
    }

    /// `𝒟_t(x, y)`.
    pub fn distinguishing_set(&self, t: Truncation, x: usize, y: usize) -> Result<VertexSet> {
        for v in [x, y] {
            if v >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    order: self.n,
                });
            }
        }
        if x == y {
            return Err(Error::EqualVertices(x));
        }
        Ok(self.distinguishing_set_unchecked(t, x, y))
    }

    fn distinguishing_set_unchecked(&self, t: Truncation, x: usize, y: usize) -> VertexSet {
        let mut set = VertexSet::empty(self.n);
        for z in 0..self.n {
            if self.truncated(t, z, x) != self.truncated(t, z, y) {
                set.insert(z);
            }
        }
        set
    }

    /// Distinguishing sets of every pair at level `t`, built once per
    /// effective truncation level and shared afterwards.
    pub fn pairs(&self, t: Truncation) -> Arc<PairTable> {
        let t = self.effective_truncation(t);
        let mut cache = self.cache.lock().expect("pair cache poisoned");
        cache
            .entry(t.get())
            .or_insert_with(|| Arc::new(PairTable::build(self, t)))
            .clone()
    }

    /// Whitespace-separated grid; unreachable entries print as `inf`.
    pub fn to_grid_string(&self) -> String {
        let mut out = String::new();
        for x in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|y| match self.get(x, y) {
                    d if d == self.n => "inf".to_string(),
                    d => d.to_string(),
                })
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

impl std::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DistanceMatrix")
            .field("n", &self.n)
            .field("connected", &self.connected)
            .finish()
    }
}

/// One unordered pair `x < y` with its distinguishing set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRecord {
    pub x: usize,
    pub y: usize,
    pub set: VertexSet,
}

impl PairRecord {
    pub fn size(&self) -> usize {
        self.set.len()
    }
}

/// Every pair `x < y` in lexicographic order, with `𝒟_t(x, y)`.
#[derive(Clone, Debug)]
pub struct PairTable {
    n: usize,
    t: Truncation,
    records: Vec<PairRecord>,
}

impl PairTable {
    pub fn build(dm: &DistanceMatrix, t: Truncation) -> Self {
        let n = dm.order();
        let records = (0..n)
            .into_par_iter()
            .flat_map_iter(|x| {
                (x + 1..n).map(move |y| PairRecord {
                    x,
                    y,
                    set: dm.distinguishing_set_unchecked(t, x, y),
                })
            })
            .collect();
        Self { n, t, records }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn truncation(&self) -> Truncation {
        self.t
    }

    pub fn records(&self) -> &[PairRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Position of the pair `{x, y}` in [`PairTable::records`].
    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        let (x, y) = (x.min(y), x.max(y));
        if x == y || y >= self.n {
            return None;
        }
        // rows before x hold (n-1) + (n-2) + ... + (n-x) pairs
        Some(x * (2 * self.n - x - 1) / 2 + (y - x - 1))
    }

    pub fn record(&self, x: usize, y: usize) -> Option<&PairRecord> {
        self.index_of(x, y).map(|i| &self.records[i])
    }

    /// `𝔡_t(G)` with the lexicographically smallest pair attaining it.
    pub fn min_distinguishing_number(&self) -> Result<(usize, (usize, usize))> {
        self.records
            .iter()
            .min_by_key(|r| r.size())
            .map(|r| (r.size(), (r.x, r.y)))
            .ok_or(Error::TooSmall)
    }

    /// `𝔇_{t,k}(G)`: union of the distinguishing sets of size exactly `k`.
    pub fn critical_union(&self, k: usize) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for r in self.records.iter().filter(|r| r.size() == k) {
            out.union_with(&r.set);
        }
        out
    }

    /// First pair (lexicographically) with `|𝒟_t(x, y) ∩ s| < k`.
    pub fn first_failing_pair(&self, s: &VertexSet, k: usize) -> Option<(usize, usize)> {
        self.records
            .iter()
            .find(|r| r.set.intersection_count(s) < k)
            .map(|r| (r.x, r.y))
    }
}

/// `d_t(x, y)` straight from a matrix.
pub fn d_t(dm: &DistanceMatrix, t: Truncation, x: usize, y: usize) -> usize {
    dm.truncated(t, x, y)
}

/// `𝔡_t(G)` and a witness pair. Fails with `TooSmall` when `n < 2`.
pub fn min_distinguishing_number(
    dm: &DistanceMatrix,
    t: Truncation,
) -> Result<(usize, (usize, usize))> {
    if dm.order() < 2 {
        return Err(Error::TooSmall);
    }
    dm.pairs(t).min_distinguishing_number()
}

pub fn critical_union(dm: &DistanceMatrix, t: Truncation, k: usize) -> VertexSet {
    dm.pairs(t).critical_union(k)
}

/// Classes of the twin relation (`N(x) = N(y)` or `N[x] = N[y]`), each sorted,
/// ordered by smallest member.
pub fn twin_classes(graph: &Graph) -> Vec<Vec<usize>> {
    let n = graph.order();
    let open: Vec<VertexSet> = (0..n).map(|v| graph.open_neighborhood(v)).collect();
    let closed: Vec<VertexSet> = (0..n).map(|v| graph.closed_neighborhood(v)).collect();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v].is_some() {
            continue;
        }
        let id = classes.len();
        let mut members = vec![v];
        class_of[v] = Some(id);
        for w in v + 1..n {
            if class_of[w].is_none() && (open[v] == open[w] || closed[v] == closed[w]) {
                class_of[w] = Some(id);
                members.push(w);
            }
        }
        classes.push(members);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    fn t(v: usize) -> Truncation {
        Truncation::new(v).unwrap()
    }

    fn k1_union_k2() -> Graph {
        Graph::new(3, [(1, 2)]).unwrap()
    }

    #[test]
    fn path_and_complete_distances() {
        assert_eq!(DistanceMatrix::new(&path(4).unwrap()).get(0, 3), 3);
        let k5 = DistanceMatrix::new(&complete(5).unwrap());
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(k5.get(x, y), usize::from(x != y));
            }
        }
    }

    #[test]
    fn disconnected_pairs_are_unreachable() {
        let dm = DistanceMatrix::new(&k1_union_k2());
        assert_eq!(dm.get(0, 1), dm.unreachable());
        assert_eq!(dm.get(1, 2), 1);
        assert_eq!(dm.diameter(), Diameter::Unreachable);
        assert_eq!(d_t(&dm, t(4), 0, 2), 4);
    }

    #[test]
    fn truncation_examples() {
        let dm = DistanceMatrix::new(&path(5).unwrap());
        assert_eq!(d_t(&dm, t(2), 0, 4), 2);
        assert_eq!(d_t(&dm, t(3), 2, 2), 0);
        assert_eq!(Truncation::new(0), Err(Error::InvalidTruncation));
    }

    #[test]
    fn diameters() {
        assert_eq!(
            DistanceMatrix::new(&path(6).unwrap()).diameter(),
            Diameter::Finite(5)
        );
        assert_eq!(
            DistanceMatrix::new(&complete(7).unwrap()).diameter(),
            Diameter::Finite(1)
        );
    }

    #[test]
    fn antipodal_c4_pair_is_only_itself() {
        let dm = DistanceMatrix::new(&cycle(4).unwrap());
        let s = dm.distinguishing_set(t(2), 0, 2).unwrap();
        assert_eq!(s.to_vec(), vec![0, 2]);
        assert_eq!(
            dm.distinguishing_set(t(2), 1, 1),
            Err(Error::EqualVertices(1))
        );
    }

    #[test]
    fn path_first_pair_set_has_t_plus_one_members() {
        for n in 5..10 {
            let dm = DistanceMatrix::new(&path(n).unwrap());
            for tt in 2..=n - 2 {
                let s = dm.distinguishing_set(t(tt), 0, 1).unwrap();
                assert_eq!(s.to_vec(), (0..=tt).collect::<Vec<_>>(), "n={n} t={tt}");
            }
        }
    }

    #[test]
    fn dimensional_numbers_from_the_families() {
        let p7 = DistanceMatrix::new(&path(7).unwrap());
        assert_eq!(min_distinguishing_number(&p7, t(3)).unwrap().0, 4);
        let c7 = DistanceMatrix::new(&cycle(7).unwrap());
        assert_eq!(min_distinguishing_number(&c7, t(2)).unwrap().0, 4);
        assert_eq!(min_distinguishing_number(&c7, t(3)).unwrap().0, 6);
        for g in [
            path(5).unwrap(),
            cycle(6).unwrap(),
            star(4).unwrap(),
            k1_union_k2(),
        ] {
            let dm = DistanceMatrix::new(&g);
            assert_eq!(min_distinguishing_number(&dm, t(1)).unwrap().0, 2);
        }
        let k1 = DistanceMatrix::new(&complete(1).unwrap());
        assert_eq!(min_distinguishing_number(&k1, t(1)), Err(Error::TooSmall));
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let dm = DistanceMatrix::new(&star(5).unwrap());
        assert_eq!(min_distinguishing_number(&dm, t(2)).unwrap(), (2, (1, 2)));
    }

    #[test]
    fn critical_union_examples() {
        use crate::generators::{fan, wheel};
        let f = DistanceMatrix::new(&fan(4).unwrap());
        let w = DistanceMatrix::new(&wheel(5).unwrap());
        for tt in 2..5 {
            assert_eq!(critical_union(&f, t(tt), 3), VertexSet::full(5));
            assert_eq!(critical_union(&w, t(tt), 4), VertexSet::full(6));
        }
        let p5 = DistanceMatrix::new(&path(5).unwrap());
        assert!(critical_union(&p5, t(2), 2).is_empty());
    }

    #[test]
    fn twin_class_examples() {
        assert_eq!(
            twin_classes(&complete(5).unwrap()),
            vec![vec![0, 1, 2, 3, 4]]
        );
        assert_eq!(
            twin_classes(&path(4).unwrap()),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            twin_classes(&star(5).unwrap()),
            vec![vec![0], vec![1, 2, 3, 4]]
        );
    }

    #[test]
    fn clamping_only_for_connected_graphs() {
        let p4 = DistanceMatrix::new(&path(4).unwrap());
        assert_eq!(p4.effective_truncation(t(9)), t(3));
        assert_eq!(p4.pairs(t(9)).truncation(), t(3));
        let dis = DistanceMatrix::new(&k1_union_k2());
        assert_eq!(dis.effective_truncation(t(9)), t(9));
    }

    #[test]
    fn index_of_matches_record_order() {
        let dm = DistanceMatrix::new(&cycle(7).unwrap());
        let table = dm.pairs(t(2));
        for (i, r) in table.records().iter().enumerate() {
            assert_eq!(table.index_of(r.x, r.y), Some(i));
            assert_eq!(table.index_of(r.y, r.x), Some(i));
        }
        assert_eq!(table.index_of(3, 3), None);
    }

    #[test]
    fn grid_export() {
        let dm = DistanceMatrix::new(&k1_union_k2());
        assert_eq!(dm.to_grid_string(), "0 inf inf\ninf 0 1\ninf 1 0\n");
    }
}
