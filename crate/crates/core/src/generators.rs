//! Named graph families and graph products.
//!
//! Index conventions: hubs of stars, wheels and fans are vertex 0; the rim
//! follows in path/cycle order. In `join(G, H)` the vertices of `G` come
//! first. Lexicographic products are indexed blockwise in family order, and
//! corona products keep the base graph at `0..n` followed by the attached
//! copies in family order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Label};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    CompleteBipartite,
    Wheel,
    Fan,
}

impl GraphKind {
    pub const ALL: [GraphKind; 8] = [
        GraphKind::Path,
        GraphKind::Cycle,
        GraphKind::Complete,
        GraphKind::Empty,
        GraphKind::Star,
        GraphKind::CompleteBipartite,
        GraphKind::Wheel,
        GraphKind::Fan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
            GraphKind::Complete => "complete",
            GraphKind::Empty => "empty",
            GraphKind::Star => "star",
            GraphKind::CompleteBipartite => "complete_bipartite",
            GraphKind::Wheel => "wheel",
            GraphKind::Fan => "fan",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('_', "-") == s)
            .ok_or_else(|| format!("unknown graph kind '{s}'"))
    }
}

fn check_min(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidOrder {
            what,
            detail: format!("needs n >= {min}, got {n}"),
        });
    }
    Ok(())
}

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    check_min("path", n, 1)?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    check_min("cycle", n, 3)?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    check_min("complete", n, 1)?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `N_n`, the edgeless graph.
pub fn empty(n: usize) -> Result<Graph> {
    check_min("empty", n, 1)?;
    Graph::new(n, [])
}

/// `K_{1,n-1}` on `n` vertices with hub 0.
pub fn star(n: usize) -> Result<Graph> {
    check_min("star", n, 1)?;
    Graph::new(n, (1..n).map(|v| (0, v)))
}

/// `K_{r,s}`: `0..r` on one side, `r..r+s` on the other.
pub fn complete_bipartite(r: usize, s: usize) -> Result<Graph> {
    check_min("complete_bipartite", r, 1)?;
    check_min("complete_bipartite", s, 1)?;
    Graph::new(r + s, (0..r).flat_map(|u| (r..r + s).map(move |v| (u, v))))
}

/// `W_{1,n} = K_1 + C_n`, order `n + 1`.
pub fn wheel(n: usize) -> Result<Graph> {
    check_min("wheel", n, 3)?;
    Ok(join(&complete(1)?, &cycle(n)?))
}

/// `F_{1,n} = K_1 + P_n`, order `n + 1`.
pub fn fan(n: usize) -> Result<Graph> {
    check_min("fan", n, 2)?;
    Ok(join(&complete(1)?, &path(n)?))
}

/// Dispatches on `kind`. `params` is `[n]` for every kind except
/// `CompleteBipartite`, which takes `[r, s]`.
pub fn generate(kind: GraphKind, params: &[usize]) -> Result<Graph> {
    let want = if kind == GraphKind::CompleteBipartite {
        2
    } else {
        1
    };
    if params.len() != want {
        return Err(Error::InvalidOrder {
            what: kind.name(),
            detail: format!("expected {want} size parameter(s), got {}", params.len()),
        });
    }
    match kind {
        GraphKind::Path => path(params[0]),
        GraphKind::Cycle => cycle(params[0]),
        GraphKind::Complete => complete(params[0]),
        GraphKind::Empty => empty(params[0]),
        GraphKind::Star => star(params[0]),
        GraphKind::CompleteBipartite => complete_bipartite(params[0], params[1]),
        GraphKind::Wheel => wheel(params[0]),
        GraphKind::Fan => fan(params[0]),
    }
}

/// `G + H`: disjoint union plus every edge between the two copies.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let across = (0..g.order()).flat_map(|u| (0..h.order()).map(move |v| (u, v + off)));
    let edges = g
        .edges()
        .chain(h.edges().map(|(u, v)| (u + off, v + off)))
        .chain(across);
    Graph::new(off + h.order(), edges).expect("join of valid graphs is valid")
}

/// `G ∘ 𝓗`: vertex `(u_i, v)` sits at `offset(i) + v`. Two vertices are
/// adjacent iff their base vertices are adjacent in `G`, or they share a block
/// and are adjacent in that block's graph. Labels are `lex_(i,v)`.
pub fn lexicographic(g: &Graph, family: &[Graph]) -> Result<Graph> {
    if family.len() != g.order() {
        return Err(Error::FamilySizeMismatch {
            expected: g.order(),
            got: family.len(),
        });
    }
    let offsets = block_offsets(0, family);
    let total = offsets.last().copied().unwrap_or(0) + family.last().map_or(0, Graph::order);
    let mut edges = Vec::new();
    for (i, h) in family.iter().enumerate() {
        edges.extend(h.edges().map(|(a, b)| (offsets[i] + a, offsets[i] + b)));
    }
    for (i, j) in g.edges() {
        for a in 0..family[i].order() {
            for b in 0..family[j].order() {
                edges.push((offsets[i] + a, offsets[j] + b));
            }
        }
    }
    let labels = family
        .iter()
        .enumerate()
        .flat_map(|(i, h)| (0..h.order()).map(move |v| vec![Label::new("lex", [i, v])]))
        .collect();
    Graph::new(total, edges)?.with_labels(labels)
}

/// `G ⊙ 𝓗`: `G` keeps `0..n`, then each `H_i` in order; every vertex of
/// `H_i` is joined to base vertex `i`. Labels are `base_i` and `attached_(i,v)`.
pub fn corona(g: &Graph, family: &[Graph]) -> Result<Graph> {
    if family.len() != g.order() {
        return Err(Error::FamilySizeMismatch {
            expected: g.order(),
            got: family.len(),
        });
    }
    let n = g.order();
    let offsets = block_offsets(n, family);
    let total = n + family.iter().map(Graph::order).sum::<usize>();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, h) in family.iter().enumerate() {
        edges.extend(h.edges().map(|(a, b)| (offsets[i] + a, offsets[i] + b)));
        edges.extend((0..h.order()).map(|v| (i, offsets[i] + v)));
    }
    let mut labels: Vec<Vec<Label>> = (0..n).map(|i| vec![Label::new("base", [i])]).collect();
    for (i, h) in family.iter().enumerate() {
        labels.extend((0..h.order()).map(|v| vec![Label::new("attached", [i, v])]));
    }
    Graph::new(total, edges)?.with_labels(labels)
}

fn block_offsets(start: usize, family: &[Graph]) -> Vec<usize> {
    family
        .iter()
        .scan(start, |acc, h| {
            let here = *acc;
            *acc += h.order();
            Some(here)
        })
        .collect()
}
