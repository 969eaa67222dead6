//! The built-in verification suite: every closed form checked against the
//! solvers on a fixed list of desk-scale instances.

use super::predict::{
    clause_predictions, predict_dimension, predict_dimensional, predict_gadget, Shape,
};
use super::{
    check_common_generator, check_corona_theorem, check_lexicographic_theorem,
    check_reduction_identity,
};
use super::{show, CheckLine, CheckOptions, Payload, Report};
use crate::error::Result;
use crate::gadget::gadget_h;
use crate::generators::{complete, complete_bipartite, cycle, fan, path, star, wheel};
use crate::graph::Graph;
use crate::metric::{critical_union, min_distinguishing_number, DistanceMatrix, Truncation};
use crate::solver::{exact_dimension, is_generator, SolverConfig};
use crate::vertex_set::VertexSet;

type Group = fn(&CheckOptions) -> Result<Report>;

/// Each group with the tag prefixes it can emit.
const GROUPS: &[(&[&str], Group)] = &[
    (
        &[
            "path-dimensional",
            "cycle-dimensional",
            "twin-pair",
            "n-minus-one",
        ],
        dimensional_group,
    ),
    (&["path-adjacency", "cycle-adjacency"], adjacency_tables),
    (
        &[
            "value-equals-k",
            "path-short-window",
            "path-interval",
            "odd-cycle-long",
            "even-cycle-long",
            "cycle-interval",
            "threshold-upper-bound",
            "infeasible-above-threshold",
            "all-twins",
        ],
        clause_scan,
    ),
    (
        &[
            "star-twins",
            "complete-discrete",
            "critical-union-full",
            "discrete-truncation",
        ],
        named_values,
    ),
    (&["gadget"], gadget_group),
    (&["lexicographic"], lexicographic_group),
    (&["corona"], corona_group),
    (&["common-generator"], common_generator_group),
    (&["reduction"], reduction_group),
];

/// Runs the groups whose tags contain `filter` (all when `None`) and keeps
/// only matching lines.
pub fn run_suite(filter: Option<&str>, opts: &CheckOptions) -> Result<Report> {
    let mut report = Report::default();
    for (tags, group) in GROUPS {
        let selected = match filter {
            None => true,
            Some(f) => tags.iter().any(|t| t.contains(f) || f.starts_with(t)),
        };
        if selected {
            report.extend(group(opts)?);
        }
    }
    if let Some(f) = filter {
        report.lines.retain(|l| l.tag.contains(f));
    }
    Ok(report)
}

fn tt(t: usize) -> Truncation {
    Truncation::new(t).expect("suite truncation levels are positive")
}

fn dimension(g: &Graph, t: usize, k: usize, cfg: &SolverConfig) -> Result<Option<usize>> {
    Ok(exact_dimension(&DistanceMatrix::new(g), tt(t), k, cfg)?.value)
}

fn exact_line(tag: &str, instance: String, expected: usize, got: Option<usize>) -> CheckLine {
    CheckLine::new(tag, instance, expected, show(got), got == Some(expected))
}

fn dimensional_group(_: &CheckOptions) -> Result<Report> {
    let mut report = Report::default();
    for n in 4..=14 {
        for t in 2..=6 {
            for (shape, name, g) in [(Shape::Path, "P", path(n)?), (Shape::Cycle, "C", cycle(n)?)] {
                let p = predict_dimensional(shape, n, t);
                let (got, _) = min_distinguishing_number(&DistanceMatrix::new(&g), tt(t))?;
                if let Payload::Exact(v) = p.payload {
                    report.push(CheckLine::new(
                        p.tag,
                        format!("{name}_{n} t={t}"),
                        v,
                        got,
                        v == got,
                    ));
                }
            }
        }
    }
    for n in 3..=8 {
        for (name, g) in [("K_1,n-1", star(n)?), ("K_n", complete(n)?)] {
            let (got, _) = min_distinguishing_number(&DistanceMatrix::new(&g), tt(3))?;
            report.push(CheckLine::new(
                "twin-pair",
                format!("{name} n={n} t=3"),
                2,
                got,
                got == 2,
            ));
        }
    }
    for (name, g) in [
        ("K_1+K_2", Graph::new(3, [(1, 2)])?),
        ("N_3", Graph::new(3, [])?),
    ] {
        for t in 1..=4 {
            let (got, _) = min_distinguishing_number(&DistanceMatrix::new(&g), tt(t))?;
            report.push(CheckLine::new(
                "n-minus-one-dimensional",
                format!("{name} t={t}"),
                2,
                got,
                got == 2,
            ));
        }
    }
    Ok(report)
}

fn adjacency_tables(opts: &CheckOptions) -> Result<Report> {
    let mut report = Report::default();
    for n in 4..=12 {
        let g = path(n)?;
        for k in 1..=3 {
            if let Payload::Exact(v) = predict_dimension(Shape::Path, n, k, 2).payload {
                report.push(exact_line(
                    "path-adjacency",
                    format!("P_{n} k={k} t=2"),
                    v,
                    dimension(&g, 2, k, &opts.solver)?,
                ));
            }
        }
    }
    for n in 5..=12 {
        let g = cycle(n)?;
        for k in 1..=4 {
            if let Payload::Exact(v) = predict_dimension(Shape::Cycle, n, k, 2).payload {
                report.push(exact_line(
                    "cycle-adjacency",
                    format!("C_{n} k={k} t=2"),
                    v,
                    dimension(&g, 2, k, &opts.solver)?,
                ));
            }
        }
    }
    Ok(report)
}

/// Every applicable clause for paths and cycles of order 3..=10.
fn clause_scan(opts: &CheckOptions) -> Result<Report> {
    let mut report = Report::default();
    for n in 3..=10 {
        for t in 2..=5 {
            for (shape, name, g) in [(Shape::Path, "P", path(n)?), (Shape::Cycle, "C", cycle(n)?)] {
                let dm = DistanceMatrix::new(&g);
                let (d, _) = min_distinguishing_number(&dm, tt(t))?;
                for k in 1..=d + 1 {
                    let got = exact_dimension(&dm, tt(t), k, &opts.solver)?.value;
                    for p in clause_predictions(shape, n, k, t) {
                        if let Some(ok) = p.admits(got) {
                            report.push(CheckLine::new(
                                p.tag,
                                format!("{name}_{n} k={k} t={t}"),
                                &p.payload,
                                show(got),
                                ok,
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

fn named_values(opts: &CheckOptions) -> Result<Report> {
    let cfg = &opts.solver;
    let mut report = Report::default();
    for n in 4..=8 {
        for t in [2, 3] {
            report.push(exact_line(
                "star-twins",
                format!("K_1,{} k=2 t={t}", n - 1),
                n - 1,
                dimension(&star(n)?, t, 2, cfg)?,
            ));
        }
    }
    for t in 2..=4 {
        for (name, g, k) in [("F_1,4", fan(4)?, 3), ("W_1,5", wheel(5)?, 4)] {
            let dm = DistanceMatrix::new(&g);
            let full = critical_union(&dm, tt(t), k) == VertexSet::full(g.order());
            let got = exact_dimension(&dm, tt(t), k, cfg)?.value;
            let pass = full && got == Some(g.order());
            report.push(CheckLine::new(
                "critical-union-full",
                format!("{name} k={k} t={t}"),
                g.order(),
                show(got),
                pass,
            ));
        }
    }
    for n in 2..=7 {
        let g = complete(n)?;
        for t in 1..=3 {
            for k in 1..=3 {
                let p = predict_dimension(Shape::Complete, n, k, t);
                let got = dimension(&g, t, k, cfg)?;
                let tag = if p.tag == "infeasible-above-threshold" {
                    "complete-discrete"
                } else {
                    p.tag
                };
                if let Some(ok) = p.admits(got) {
                    report.push(CheckLine::new(
                        tag,
                        format!("K_{n} k={k} t={t}"),
                        &p.payload,
                        show(got),
                        ok,
                    ));
                }
            }
        }
    }
    for (name, g) in [
        ("K_2,3", complete_bipartite(2, 3)?),
        ("P_6", path(6)?),
        ("C_5", cycle(5)?),
    ] {
        let n = g.order();
        report.push(exact_line(
            "discrete-truncation",
            format!("{name} k=1 t=1"),
            n - 1,
            dimension(&g, 1, 1, cfg)?,
        ));
        report.push(exact_line(
            "discrete-truncation",
            format!("{name} k=2 t=1"),
            n,
            dimension(&g, 1, 2, cfg)?,
        ));
    }
    Ok(report)
}

fn gadget_group(opts: &CheckOptions) -> Result<Report> {
    let mut report = Report::default();
    for k in [3, 5] {
        let predicted = predict_gadget(k)?;
        let h = gadget_h(k)?;
        let g = h.graph();
        let name = format!("H_{k}");
        report.push(CheckLine::new(
            "gadget-order",
            &name,
            predicted.order,
            g.order(),
            predicted.order == g.order(),
        ));
        let degrees = g.degree_sequence();
        report.push(CheckLine::new(
            "gadget-degrees",
            &name,
            format!("{:?}", predicted.degrees),
            format!("{degrees:?}"),
            degrees == predicted.degrees,
        ));
        let dm = DistanceMatrix::new(g);
        let check = is_generator(&dm, tt(2), k, &h.removal_certificate());
        report.push(CheckLine::new(
            "gadget-removal-certificate",
            format!("{name} k={k} t=2"),
            "generator",
            check.failing.map_or("generator".to_string(), |(x, y)| {
                format!("pair ({}, {}) fails", g.labels(x)[0], g.labels(y)[0])
            }),
            check.ok,
        ));
        if k == 3 {
            let got = exact_dimension(&dm, tt(2), k, &opts.solver)?.value;
            report.push(exact_line(
                "gadget-dimension",
                format!("{name} k={k} t=2"),
                predicted.dimension,
                got,
            ));
        }
    }
    Ok(report)
}

fn lexicographic_group(opts: &CheckOptions) -> Result<Report> {
    let mut report = Report::default();
    for (g, family) in lexicographic_instances()? {
        for k in [1, 2] {
            for t in [3, 4] {
                report.extend(check_lexicographic_theorem(&g, &family, k, t, opts)?);
            }
        }
    }
    Ok(report)
}

fn lexicographic_instances() -> Result<Vec<(Graph, Vec<Graph>)>> {
    Ok(vec![
        (path(3)?, vec![path(4)?, complete(2)?, path(3)?]),
        (complete(2)?, vec![complete(2)?, complete(2)?]),
        (path(2)?, vec![path(3)?, path(3)?]),
    ])
}

fn corona_group(opts: &CheckOptions) -> Result<Report> {
    let mut report = Report::default();
    let instances = [
        (path(2)?, vec![path(3)?, path(3)?]),
        (path(3)?, vec![complete(2)?, complete(2)?, complete(2)?]),
        (path(2)?, vec![star(4)?, star(4)?]),
    ];
    for (g, family) in &instances {
        for k in [1, 2] {
            for t in [3, 4] {
                report.extend(check_corona_theorem(g, family, k, t, opts)?);
            }
        }
    }
    report.extend(check_corona_theorem(
        &path(2)?,
        &[complete(2)?, complete(2)?],
        3,
        3,
        opts,
    )?);
    Ok(report)
}

/// Nine vertices: a hub adjacent to a 4-vertex basis, plus four outer
/// vertices each joined to two basis vertices, two of them adjacent.
pub(crate) fn nine_vertex_example() -> Graph {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (5, 1),
        (5, 2),
        (6, 2),
        (6, 3),
        (7, 3),
        (7, 4),
        (8, 1),
        (8, 4),
        (5, 6),
    ];
    Graph::new(9, edges).expect("valid edge list")
}

fn common_generator_group(opts: &CheckOptions) -> Result<Report> {
    let g = nine_vertex_example();
    let b = VertexSet::from_members(9, [1, 2, 3, 4])?;
    check_common_generator(&g, &b, 2, 2, opts)
}

fn reduction_group(opts: &CheckOptions) -> Result<Report> {
    let mut report = Report::default();
    for n in [2, 3] {
        report.extend(check_reduction_identity(&path(n)?, 3, opts)?.0);
    }
    Ok(report)
}
