use serde::Serialize;

use super::{Payload, Prediction};
use crate::error::{Error, Result};
use crate::gadget::gadget_order;
use crate::graph::Graph;

/// Graph shapes with closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    Path,
    Cycle,
    Star,
    Complete,
    Generic,
}

/// `𝔡_t` for a shape of order `n`.
pub fn predict_dimensional(shape: Shape, n: usize, t: usize) -> Prediction {
    use Payload::Exact;
    if n < 2 || t == 0 {
        return Prediction::unknown();
    }
    if t == 1 {
        return Prediction::new("discrete-truncation", "𝔡_1(G) = 2", Exact(2));
    }
    if n == 2 {
        return Prediction::new("order-two", "𝔡_t(K_2) = 𝔡_t(N_2) = 2", Exact(2));
    }
    match shape {
        Shape::Path if t <= n - 2 => Prediction::new(
            "path-dimensional-short",
            "𝔡_t(P_n) = t + 1 for 2 <= t <= n - 2",
            Exact(t + 1),
        ),
        Shape::Path => Prediction::new(
            "path-dimensional-long",
            "𝔡_t(P_n) = n - 1 for t >= n - 2",
            Exact(n - 1),
        ),
        Shape::Cycle => {
            let short = if n % 2 == 1 {
                t <= (n - 1) / 2
            } else {
                t <= (n - 2) / 2
            };
            if short {
                Prediction::new(
                    "cycle-dimensional-short",
                    "𝔡_t(C_n) = 2t below half the order",
                    Exact(2 * t),
                )
            } else if n % 2 == 1 {
                Prediction::new(
                    "cycle-dimensional-odd-long",
                    "𝔡_t(C_n) = n - 1 for odd n, t >= (n-1)/2",
                    Exact(n - 1),
                )
            } else {
                Prediction::new(
                    "cycle-dimensional-even-long",
                    "𝔡_t(C_n) = n - 2 for even n, t >= (n-2)/2",
                    Exact(n - 2),
                )
            }
        }
        Shape::Star | Shape::Complete => {
            Prediction::new("twin-pair", "𝔡_t(G) = 2 when G has twins", Exact(2))
        }
        Shape::Generic => Prediction::unknown(),
    }
}

fn exact_of(p: &Prediction) -> Option<usize> {
    match p.payload {
        Payload::Exact(v) => Some(v),
        _ => None,
    }
}

/// Every closed form for `dim_k^t` that applies to the instance, most
/// specific first. An infeasibility claim, when present, is the only entry.
pub fn clause_predictions(shape: Shape, n: usize, k: usize, t: usize) -> Vec<Prediction> {
    use Payload::{Exact, Interval};
    if n < 2 || k == 0 || t == 0 {
        return Vec::new();
    }
    let threshold = exact_of(&predict_dimensional(shape, n, t));
    if let Some(d) = threshold {
        if k > d {
            return vec![Prediction::new(
                "infeasible-above-threshold",
                "no (k,t)-generator for k > 𝔡_t(G)",
                Payload::Infeasible,
            )];
        }
    }
    let mut out = Vec::new();
    if t == 1 {
        let v = if k == 1 { n - 1 } else { n };
        out.push(Prediction::new(
            "discrete-truncation",
            "dim_1^1(G) = n - 1, dim_2^1(G) = n",
            Exact(v),
        ));
        return out;
    }
    match shape {
        Shape::Complete => {
            let v = if k == 1 { n - 1 } else { n };
            out.push(Prediction::new(
                "complete-discrete",
                "dim_1(K_n) = n - 1, dim_2(K_n) = n",
                Exact(v),
            ));
        }
        Shape::Star if k == 2 && n >= 3 => {
            out.push(Prediction::new(
                "star-twins",
                "dim_2^t(K_{1,n-1}) = n - 1 for t >= 2",
                Exact(n - 1),
            ));
        }
        Shape::Path => path_clauses(n, k, t, &mut out),
        Shape::Cycle => cycle_clauses(n, k, t, &mut out),
        _ => {}
    }
    if let Some(d) = threshold {
        let floor = if value_can_equal_k(shape, n, k, t) {
            k
        } else {
            k + 1
        };
        out.push(Prediction::new(
            "threshold-upper-bound",
            "k <= dim_k^t(G) <= n - 𝔡_t(G) + k",
            Interval {
                lo: floor.min(n - d + k),
                hi: n - d + k,
            },
        ));
    }
    out
}

/// Whether `dim_k^t = k` is possible for the shape: only `k <= 2`,
/// `n <= t + 1` and a path (or a path plus an isolated vertex).
fn value_can_equal_k(shape: Shape, n: usize, k: usize, t: usize) -> bool {
    match shape {
        Shape::Path => k <= 2 && n <= t + 1,
        Shape::Generic => k <= 2 && n <= t + 1,
        Shape::Complete => n == 2 && k <= 2,
        // K_{1,1} and K_{1,2} are paths
        Shape::Star => n <= 3 && k <= 2 && n <= t + 1,
        Shape::Cycle => false,
    }
}

fn path_clauses(n: usize, k: usize, t: usize, out: &mut Vec<Prediction>) {
    use Payload::{Exact, Interval};
    if k <= 2 && n <= t + 1 {
        out.push(Prediction::new(
            "value-equals-k",
            "dim_k^t(P_n) = k for k <= 2, n <= t + 1",
            Exact(k),
        ));
    }
    if t == 2 && n >= 4 {
        match k {
            1 => out.push(Prediction::new(
                "path-adjacency",
                "dim_1^2(P_n) = ⌊(2n+2)/5⌋",
                Exact((2 * n + 2) / 5),
            )),
            2 => out.push(Prediction::new(
                "path-adjacency",
                "dim_2^2(P_n) = ⌈(n+1)/2⌉",
                Exact((n + 2) / 2),
            )),
            3 => out.push(Prediction::new(
                "path-adjacency",
                "dim_3^2(P_n) = n - ⌊(n-4)/5⌋",
                Exact(n - (n - 4) / 5),
            )),
            _ => {}
        }
    }
    if n >= 3 && k < n && n + k <= 2 * t + 3 && (k >= 3 || n >= t + 2) {
        out.push(Prediction::new(
            "path-short-window",
            "dim_k^t(P_n) = k + 1 for k + 1 <= n <= 2t - k + 3",
            Exact(k + 1),
        ));
    }
    if n >= 3 && t + 2 <= n && k <= t + 1 {
        out.push(Prediction::new(
            "path-interval",
            "k + 1 <= dim_k^t(P_n) <= n - t + k - 1",
            Interval {
                lo: k + 1,
                hi: n - t + k - 1,
            },
        ));
    }
}

fn cycle_clauses(n: usize, k: usize, t: usize, out: &mut Vec<Prediction>) {
    use Payload::{Exact, Interval};
    if n < 3 {
        return;
    }
    if t == 2 && n >= 5 {
        let v = match k {
            1 => Some((2 * n + 2) / 5),
            2 => Some(n.div_ceil(2)),
            3 => Some(n - n / 5),
            4 => Some(n),
            _ => None,
        };
        if let Some(v) = v {
            out.push(Prediction::new(
                "cycle-adjacency",
                "dim_k^2(C_n) for k <= 4",
                Exact(v),
            ));
        }
    }
    if n == 4 && t >= 2 {
        // antipodal vertices of C_4 are twins
        match k {
            1 => out.push(Prediction::new(
                "cycle-adjacency",
                "dim_1^2(C_n) = ⌊(2n+2)/5⌋",
                Exact(2),
            )),
            2 => out.push(Prediction::new(
                "all-twins",
                "dim_2^t(G) = n iff no vertex is twin-free",
                Exact(4),
            )),
            _ => {}
        }
    }
    let long = if n % 2 == 1 {
        2 * t + 1 >= n
    } else {
        2 * t + 2 >= n
    };
    if n % 2 == 1 && long && k < n {
        out.push(Prediction::new(
            "odd-cycle-long",
            "dim_k^t(C_n) = k + 1 for odd n, t >= (n-1)/2",
            Exact(k + 1),
        ));
    }
    if n.is_multiple_of(2) && long && k <= n - 2 {
        if 2 * k <= n - 2 {
            if n.is_multiple_of(4) && 2 * t == n - 2 && 2 * k == n - 2 {
                out.push(Prediction::new(
                    "even-cycle-long-corner",
                    "k + 1 <= dim_k^t(C_n) <= k + 2 at t = k = (n-2)/2",
                    Interval {
                        lo: k + 1,
                        hi: k + 2,
                    },
                ));
            } else {
                out.push(Prediction::new(
                    "even-cycle-long",
                    "dim_k^t(C_n) = k + 1 for k <= (n-2)/2",
                    Exact(k + 1),
                ));
            }
        } else {
            out.push(Prediction::new(
                "even-cycle-long",
                "dim_k^t(C_n) = k + 2 for n/2 <= k <= n - 2",
                Exact(k + 2),
            ));
        }
    }
    let short = if n % 2 == 1 {
        2 * t < n
    } else {
        2 * t + 2 <= n
    };
    if short && k <= 2 * t {
        out.push(Prediction::new(
            "cycle-interval",
            "k + 1 <= dim_k^t(C_n) <= n - 2t + k",
            Interval {
                lo: k + 1,
                hi: n - 2 * t + k,
            },
        ));
    }
}

/// The most specific claim about `dim_k^t`: the first exact clause, else the
/// intersection of all interval clauses, else `Unknown`.
pub fn predict_dimension(shape: Shape, n: usize, k: usize, t: usize) -> Prediction {
    let clauses = clause_predictions(shape, n, k, t);
    if let Some(p) = clauses
        .iter()
        .find(|p| matches!(p.payload, Payload::Exact(_) | Payload::Infeasible))
    {
        return p.clone();
    }
    let intervals: Vec<&Prediction> = clauses
        .iter()
        .filter(|p| matches!(p.payload, Payload::Interval { .. }))
        .collect();
    let best = intervals.first().map(|first| {
        let (mut lo, mut hi) = (0, usize::MAX);
        for p in &intervals {
            if let Payload::Interval { lo: l, hi: h } = p.payload {
                lo = lo.max(l);
                hi = hi.min(h);
            }
        }
        Prediction {
            payload: Payload::Interval { lo, hi },
            ..(*first).clone()
        }
    });
    best.unwrap_or_else(|| {
        if shape == Shape::Generic && n >= 2 && k >= 1 && t >= 2 {
            Prediction::new(
                "threshold-upper-bound",
                "k <= dim_k^t(G) <= n - 2 + k",
                Payload::Interval {
                    lo: k,
                    hi: n.min(n - 2 + k),
                },
            )
        } else {
            Prediction::unknown()
        }
    })
}

/// Order, degree multiset and `(k, 2)`-dimension of the gadget `H_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetPrediction {
    pub k: usize,
    pub order: usize,
    /// Sorted ascending.
    pub degrees: Vec<usize>,
    pub dimension: usize,
}

pub fn predict_gadget(k: usize) -> Result<GadgetPrediction> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidK(k));
    }
    let r = (k - 1) / 2;
    let order = gadget_order(k);
    let mut degrees = vec![r + 2, r + 2, 3 * r + 1, 3 * r + 1];
    degrees.extend(std::iter::repeat_n(r + 3, 2 * r));
    degrees.extend(std::iter::repeat_n(r + 2, 2 * (k - 2)));
    degrees.extend([r + 3, r + 3]);
    degrees.extend(std::iter::repeat_n(
        3 * r * (r + 1),
        2 * (r + k - 1) * (r + 1),
    ));
    degrees.sort_unstable();
    Ok(GadgetPrediction {
        k,
        order,
        degrees,
        dimension: order - 6,
    })
}

/// Connected, `n - 1` edges, maximum degree at most 2.
pub fn is_path(g: &Graph) -> bool {
    g.size() + 1 == g.order() && g.is_connected() && (0..g.order()).all(|v| g.degree(v) <= 2)
}

/// One isolated vertex plus a path on the others.
pub fn is_isolated_plus_path(g: &Graph) -> bool {
    let n = g.order();
    if n < 2 {
        return false;
    }
    let isolated: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    let rest = n - 1;
    match isolated.len() {
        1 => g.size() + 1 == rest && (0..n).all(|v| g.degree(v) <= 2) && g.components().len() == 2,
        2 => n == 2,
        _ => false,
    }
}

fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3
        && g.size() == g.order()
        && g.is_connected()
        && (0..g.order()).all(|v| g.degree(v) == 2)
}

/// The graphs with `𝔡_t(G) = n - 1` for `n >= 3`: `P_n` with `n <= t + 2`,
/// odd `C_n` with `n <= 2t + 1`, `K_1 ∪ K_2`, and `N_3`.
pub fn is_n_minus_one_dimensional_shape(g: &Graph, t: usize) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    (is_path(g) && n <= t + 2)
        || (is_cycle(g) && n % 2 == 1 && n <= 2 * t + 1)
        || (n == 3 && g.size() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    fn exact(p: Prediction) -> Option<usize> {
        exact_of(&p)
    }

    #[test]
    fn dimensional_examples() {
        assert_eq!(exact(predict_dimensional(Shape::Path, 9, 4)), Some(5));
        assert_eq!(exact(predict_dimensional(Shape::Cycle, 8, 3)), Some(6));
        assert_eq!(exact(predict_dimensional(Shape::Cycle, 8, 4)), Some(6));
        assert_eq!(exact(predict_dimensional(Shape::Star, 6, 2)), Some(2));
        assert_eq!(
            predict_dimensional(Shape::Generic, 6, 2).payload,
            Payload::Unknown
        );
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(exact(predict_dimension(Shape::Path, 10, 2, 2)), Some(6));
        assert_eq!(exact(predict_dimension(Shape::Cycle, 10, 3, 2)), Some(8));
        assert_eq!(exact(predict_dimension(Shape::Cycle, 6, 4, 2)), Some(6));
        assert_eq!(exact(predict_dimension(Shape::Path, 6, 3, 4)), Some(4));
        assert_eq!(exact(predict_dimension(Shape::Cycle, 7, 5, 3)), Some(6));
    }

    #[test]
    fn overlapping_clauses_agree() {
        let c5 = clause_predictions(Shape::Cycle, 5, 4, 2);
        let c6 = clause_predictions(Shape::Cycle, 6, 3, 2);
        for clauses in [c5, c6] {
            let exacts: Vec<usize> = clauses.iter().filter_map(exact_of).collect();
            assert!(exacts.len() >= 2, "{clauses:?}");
            assert!(exacts.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn c4_guard() {
        assert_eq!(
            predict_dimension(Shape::Cycle, 4, 3, 2).payload,
            Payload::Infeasible
        );
        assert_eq!(exact(predict_dimension(Shape::Cycle, 4, 2, 2)), Some(4));
    }

    #[test]
    fn corner_is_an_interval() {
        assert_eq!(
            predict_dimension(Shape::Cycle, 8, 3, 3).payload,
            Payload::Interval { lo: 4, hi: 5 }
        );
    }

    #[test]
    fn gadget_values() {
        let g3 = predict_gadget(3).unwrap();
        assert_eq!((g3.order, g3.dimension), (22, 16));
        assert_eq!(predict_gadget(5).unwrap().dimension, 46);
        assert_eq!(g3.degrees.iter().filter(|&&d| d == 6).count(), 12);
        assert_eq!(predict_gadget(4), Err(Error::InvalidK(4)));
    }

    #[test]
    fn shape_predicates() {
        assert!(is_path(&path(5).unwrap()));
        assert!(!is_path(&cycle(5).unwrap()));
        let k1_p3 = Graph::new(4, [(1, 2), (2, 3)]).unwrap();
        assert!(is_isolated_plus_path(&k1_p3));
        assert!(is_isolated_plus_path(&Graph::new(2, []).unwrap()));
        assert!(!is_isolated_plus_path(&Graph::new(3, []).unwrap()));
        assert!(is_n_minus_one_dimensional_shape(&cycle(7).unwrap(), 3));
        assert!(!is_n_minus_one_dimensional_shape(&cycle(6).unwrap(), 3));
        assert!(is_n_minus_one_dimensional_shape(
            &Graph::new(3, [(0, 1)]).unwrap(),
            2
        ));
    }
}
