//! The gadget `H_k` (odd `k >= 3`, `r = (k-1)/2`) and the reduction graph
//! obtained by hanging a copy of `H_k` on every leaf of `G ⊙ N_r`.
//!
//! Gadget indices are 1-based as in the construction: spokes `a_1..a_r`,
//! `c_1..c_r`, `b_1..b_{k-1}`, `d_1..d_{k-1}`, and pendant vertices
//! `w_{l,q}` with `q` in `1..=r+1` hanging off spoke `w_l`.
//!
//! Vertex order: `a, b, c, d`, then the `a`, `c`, `b`, `d` spokes, then the
//! pendant sets `A_l`, `B_l`, `C_l`, `D_l` in that order.

use crate::error::{Error, Result};
use crate::generators::corona;
use crate::graph::{Graph, Label};
use crate::vertex_set::VertexSet;

/// Which side of the gadget a spoke or pendant belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
    C,
    D,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::A, Side::B, Side::C, Side::D];

    pub fn role(self) -> &'static str {
        match self {
            Side::A => "a",
            Side::B => "b",
            Side::C => "c",
            Side::D => "d",
        }
    }
}

/// `H_k` together with index accessors for every named vertex.
#[derive(Clone, Debug)]
pub struct GadgetLayout {
    k: usize,
    graph: Graph,
}

/// Order of `H_k`, `(3k² + 6k - 1) / 2`.
pub fn gadget_order(k: usize) -> usize {
    (3 * k * k + 6 * k - 1) / 2
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidK(k));
    }
    Ok(())
}

impl GadgetLayout {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        (self.k - 1) / 2
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Number of spokes on a side: `r` for `A`/`C`, `k-1` for `B`/`D`.
    pub fn spoke_count(&self, side: Side) -> usize {
        match side {
            Side::A | Side::C => self.r(),
            Side::B | Side::D => self.k - 1,
        }
    }

    /// The core vertex `a`, `b`, `c` or `d`.
    pub fn core(&self, side: Side) -> usize {
        match side {
            Side::A => 0,
            Side::B => 1,
            Side::C => 2,
            Side::D => 3,
        }
    }

    fn spoke_offset(&self, side: Side) -> usize {
        let (r, k) = (self.r(), self.k);
        match side {
            Side::A => 4,
            Side::C => 4 + r,
            Side::B => 4 + 2 * r,
            Side::D => 4 + 2 * r + (k - 1),
        }
    }

    fn pendant_offset(&self, side: Side) -> usize {
        let base = 4 + 2 * self.r() + 2 * (self.k - 1);
        let before: usize = Side::ALL
            .iter()
            .take_while(|&&s| s != side)
            .map(|&s| self.spoke_count(s))
            .sum();
        base + before * (self.r() + 1)
    }

    /// Spoke `w_l`, `l` in `1..=spoke_count(side)`.
    pub fn spoke(&self, side: Side, l: usize) -> usize {
        assert!(
            (1..=self.spoke_count(side)).contains(&l),
            "spoke index {l} out of range"
        );
        self.spoke_offset(side) + l - 1
    }

    /// Pendant `w_{l,q}`, `q` in `1..=r+1`.
    pub fn pendant(&self, side: Side, l: usize, q: usize) -> usize {
        assert!(
            (1..=self.spoke_count(side)).contains(&l),
            "spoke index {l} out of range"
        );
        assert!(
            (1..=self.r() + 1).contains(&q),
            "pendant index {q} out of range"
        );
        self.pendant_offset(side) + (l - 1) * (self.r() + 1) + q - 1
    }

    /// The pendant set `W_l`.
    pub fn pendant_set(&self, side: Side, l: usize) -> Vec<usize> {
        (1..=self.r() + 1)
            .map(|q| self.pendant(side, l, q))
            .collect()
    }

    /// `V(H_k) ∖ {a_1, c_1, b_{k-1}, d_{k-1}, d_{1,1}, d_{r+1,1}}`, the explicit
    /// generator of size `R - 6` proposed for `H_k`.
    pub fn removal_certificate(&self) -> VertexSet {
        let mut s = VertexSet::full(self.order());
        for v in self.certificate_removed() {
            s.remove(v);
        }
        s
    }

    /// The six vertices left out by [`GadgetLayout::removal_certificate`].
    pub fn certificate_removed(&self) -> [usize; 6] {
        let (k, r) = (self.k, self.r());
        [
            self.spoke(Side::A, 1),
            self.spoke(Side::C, 1),
            self.spoke(Side::B, k - 1),
            self.spoke(Side::D, k - 1),
            self.pendant(Side::D, 1, 1),
            self.pendant(Side::D, r + 1, 1),
        ]
    }
}

/// Builds `H_k`. Fails with `InvalidK` unless `k` is odd and at least 3.
pub fn gadget_h(k: usize) -> Result<GadgetLayout> {
    check_k(k)?;
    let r = (k - 1) / 2;
    // accessors only depend on k, so a placeholder graph is enough to use them
    let shell = GadgetLayout {
        k,
        graph: Graph::new(1, [])?,
    };
    let n = gadget_order(k);
    let mut edges = Vec::new();
    let core = |s| shell.core(s);
    let spoke = |s, l| shell.spoke(s, l);
    let pendant = |s, l, q| shell.pendant(s, l, q);

    edges.push((core(Side::A), core(Side::B)));
    edges.push((core(Side::C), core(Side::D)));
    for i in 1..=r {
        for (x, y, s) in [(Side::A, Side::B, Side::A), (Side::C, Side::D, Side::C)] {
            edges.push((core(x), spoke(s, i)));
            edges.push((core(y), spoke(s, i)));
        }
    }
    for j in 1..k {
        edges.push((core(Side::B), spoke(Side::B, j)));
        edges.push((core(Side::D), spoke(Side::D, j)));
    }
    edges.push((core(Side::A), spoke(Side::B, k - 1)));
    edges.push((core(Side::C), spoke(Side::D, k - 1)));
    for side in Side::ALL {
        for l in 1..=shell.spoke_count(side) {
            for q in 1..=r + 1 {
                edges.push((spoke(side, l), pendant(side, l, q)));
            }
        }
    }
    for (first, second) in [(Side::A, Side::B), (Side::C, Side::D)] {
        let classes: Vec<Vec<usize>> = [first, second]
            .into_iter()
            .flat_map(|s| (1..=shell.spoke_count(s)).map(move |l| (s, l)))
            .map(|(s, l)| shell.pendant_set(s, l))
            .collect();
        for (i, x) in classes.iter().enumerate() {
            for y in &classes[i + 1..] {
                edges.extend(x.iter().flat_map(|&u| y.iter().map(move |&v| (u, v))));
            }
        }
    }
    // column-j bicliques between the A/C pendants and the two halves of B/D
    for j in 1..=r + 1 {
        for i in 1..=r {
            for q in 1..=r {
                edges.push((pendant(Side::A, i, j), pendant(Side::C, q, j)));
                edges.push((pendant(Side::B, i, j), pendant(Side::D, q, j)));
                edges.push((pendant(Side::B, r + i, j), pendant(Side::D, r + q, j)));
            }
        }
    }

    let mut labels = vec![Vec::new(); n];
    for side in Side::ALL {
        labels[core(side)].push(Label::new(side.role(), []));
        for l in 1..=shell.spoke_count(side) {
            labels[spoke(side, l)].push(Label::new(side.role(), [l]));
            for q in 1..=r + 1 {
                labels[pendant(side, l, q)].push(Label::new(side.role(), [l, q]));
            }
        }
    }
    let graph = Graph::new(n, edges)?.with_labels(labels)?;
    Ok(GadgetLayout { k, graph })
}

/// The reduction graph built from a connected `G` and odd `k`, with its index
/// layout.
///
/// Indices: `G` keeps `0..n`; leaf `j` (0-based, `j < r`) of base vertex `i`
/// sits at `n + i·r + j` and doubles as `b_1` of its gadget copy; the other
/// `R - 1` vertices of each copy follow copy by copy in gadget order.
#[derive(Clone, Debug)]
pub struct ReductionLayout {
    graph: Graph,
    gadget: GadgetLayout,
    base_order: usize,
}

impl ReductionLayout {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn gadget(&self) -> &GadgetLayout {
        &self.gadget
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// Number of gadget copies, `n·r`.
    pub fn copies(&self) -> usize {
        self.base_order * self.gadget.r()
    }

    /// The corona leaf `(u_i, v_j)`, identified with `b_1` of copy `(i, j)`.
    pub fn leaf(&self, i: usize, j: usize) -> usize {
        assert!(
            i < self.base_order && j < self.gadget.r(),
            "copy ({i}, {j}) out of range"
        );
        self.base_order + i * self.gadget.r() + j
    }

    /// Global index of gadget vertex `local` in copy `(i, j)`.
    pub fn copy_vertex(&self, i: usize, j: usize, local: usize) -> usize {
        let b1 = self.gadget.spoke(Side::B, 1);
        if local == b1 {
            return self.leaf(i, j);
        }
        let per_copy = self.gadget.order() - 1;
        let copy = i * self.gadget.r() + j;
        let shifted = if local > b1 { local - 1 } else { local };
        self.base_order + self.copies() + copy * per_copy + shifted
    }

    /// Maps a vertex set of `H_k` into copy `(i, j)`.
    pub fn lift(&self, i: usize, j: usize, set: &VertexSet) -> Vec<usize> {
        set.iter().map(|v| self.copy_vertex(i, j, v)).collect()
    }
}

/// Builds the reduction graph for `G` and `k`: `G ⊙ N_r` with every leaf
/// identified with `b_1` of a fresh copy of `H_k`. Order `n(1 + r·R)`.
pub fn reduction_graph(g: &Graph, k: usize) -> Result<ReductionLayout> {
    check_k(k)?;
    if g.order() < 2 {
        return Err(Error::TooSmall);
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    let gadget = gadget_h(k)?;
    let r = gadget.r();
    let n = g.order();
    let empty_r = Graph::new(r, [])?;
    let base = corona(g, &vec![empty_r; n])?;
    let mut layout = ReductionLayout {
        graph: base.clone(),
        gadget,
        base_order: n,
    };
    let total = n + layout.copies() * layout.gadget.order();
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut labels: Vec<Vec<Label>> = (0..base.order()).map(|v| base.labels(v).to_vec()).collect();
    labels.resize(total, Vec::new());
    let h = layout.gadget.graph();
    for i in 0..n {
        for j in 0..r {
            edges.extend(
                h.edges()
                    .map(|(u, v)| (layout.copy_vertex(i, j, u), layout.copy_vertex(i, j, v))),
            );
            for local in 0..h.order() {
                let own = &h.labels(local)[0];
                let mut coords = vec![i, j];
                coords.extend(&own.coords);
                labels[layout.copy_vertex(i, j, local)].push(Label::new(own.role.clone(), coords));
            }
        }
    }
    layout.graph = Graph::new(total, edges)?.with_labels(labels)?;
    Ok(layout)
}
