//! `(k, t)`-metric dimension of finite simple graphs under the truncated
//! metric `d_t(x, y) = min{d(x, y), t}`.
//!
//! A set `S` of vertices is a `(k, t)`-metric generator when every pair of
//! distinct vertices is told apart (different `d_t`) by at least `k` members
//! of `S`; `dim_k^t(G)` is the smallest size of such a set.
//!
//! ```
//! use ktmd::{exact_dimension, generators::path, DistanceMatrix, SolverConfig, Truncation};
//!
//! let p6 = path(6).unwrap();
//! let dm = DistanceMatrix::new(&p6);
//! let r = exact_dimension(&dm, Truncation::new(2).unwrap(), 1, &SolverConfig::default()).unwrap();
//! assert_eq!(r.value, Some(2));
//! ```

pub mod edge_list;
pub mod error;
pub mod family;
pub mod gadget;
pub mod generators;
pub mod graph;
pub mod metric;
pub mod oracle;
pub mod solver;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Graph, Label};
pub use metric::{
    critical_union, d_t, min_distinguishing_number, twin_classes, Diameter, DistanceMatrix,
    PairRecord, PairTable, Truncation,
};
pub use solver::{
    brute_force_dimension, dimension_profile, exact_dimension, greedy_generator, is_generator,
    DimensionResult, SolverConfig, Status,
};
pub use vertex_set::VertexSet;
