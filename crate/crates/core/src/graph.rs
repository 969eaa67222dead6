//! Immutable simple undirected graphs on vertices `0..n`.
//!
//! Constructed graphs (products, gadgets) carry optional structured labels so
//! that tests and reports can address vertices by role instead of raw index.
//! Labels never take part in equality.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A structured vertex name: a role string plus a coordinate tuple, e.g.
/// `b` with coordinates `[2, 1]` for the pendant vertex `b_{2,1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Label {
    pub role: String,
    pub coords: Vec<usize>,
}

impl Label {
    pub fn new(role: impl Into<String>, coords: impl Into<Vec<usize>>) -> Self {
        Self {
            role: role.into(),
            coords: coords.into(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.role)?;
        if !self.coords.is_empty() {
            f.write_str("_")?;
            for (i, c) in self.coords.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
    /// Per vertex, its labels (primary label first). A vertex produced by
    /// identifying two vertices carries both names.
    labels: Option<Vec<Vec<Label>>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidOrder {
                what: "graph",
                detail: "order must be at least 1".into(),
            });
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { index: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Ok(Self {
            adj,
            edges: twice / 2,
            labels: None,
        })
    }

    /// Attaches labels, one non-empty list per vertex. Primary labels must be
    /// pairwise distinct and no label may name two vertices.
    pub fn with_labels(mut self, labels: Vec<Vec<Label>>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::InvalidLabels(format!(
                "{} label lists for {} vertices",
                labels.len(),
                self.order()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for (v, list) in labels.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::InvalidLabels(format!("vertex {v} has no label")));
            }
            for l in list {
                if !seen.insert(l.clone()) {
                    return Err(Error::InvalidLabels(format!("label {l} used twice")));
                }
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn open_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.order());
        for &w in &self.adj[v] {
            s.insert(w);
        }
        s
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.open_neighborhood(v);
        s.insert(v);
        s
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edges == n * (n - 1) / 2
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Disjoint union with `other`; `self` keeps indices `0..n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::new(off + other.order(), edges).expect("union of valid graphs is valid")
    }

    pub fn labels(&self, v: usize) -> &[Label] {
        self.labels.as_ref().map(|l| l[v].as_slice()).unwrap_or(&[])
    }

    pub fn is_labelled(&self) -> bool {
        self.labels.is_some()
    }

    /// Looks a vertex up by any of its labels.
    pub fn vertex(&self, label: &Label) -> Option<usize> {
        self.labels
            .as_ref()?
            .iter()
            .position(|list| list.contains(label))
    }

    /// Shorthand for [`Graph::vertex`] with an inline label.
    pub fn vertex_by(&self, role: &str, coords: &[usize]) -> Option<usize> {
        self.vertex(&Label::new(role, coords.to_vec()))
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
