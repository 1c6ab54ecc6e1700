//! Difference distance magic (DDM) labelings of oriented graphs.
//!
//! A labeling `f` of an oriented graph on `n` vertices is DDM when it is a
//! bijection onto `1..=n` and every vertex has weight
//! `Σ f(in-neighbours) − Σ f(out-neighbours) = 0`.
//!
//! Vertices are 0-based [`VertexId`]s in the API and 1-based in files,
//! messages and DOT output.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod constructions;
pub mod dot;
pub mod error;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod labeled;
pub mod search;

pub use algebra::{
    check_orthogonality, imbalance_vector, shift_labeling, skew_matrix, verify_ddm, weight_vector, ImbalanceVector,
    Labeling, SkewMatrix, Verdict, WeightVector,
};
pub use constructions::{
    attach_ornaments, augment_imbalance_one, chain, coalesce, construct_ddmog, disjoint_union_ddm, ornament_cycles,
    weight_classes, weighted_sum, weighted_sum_shifted_ddm, weighted_sum_zero_shift_ddm, windmill, WeightClasses,
};
pub use dot::{export_dot, export_dot_unlabeled};
pub use error::{Error, Result};
pub use graph::{OrientedGraph, VertexId};
pub use io::{parse, serialize, GraphDocument, ParseError};
pub use kernel::{kernel_feasibility, KernelInfo};
pub use labeled::{LabeledGraph, Provenance};
pub use search::{
    reversal, search_labeling, search_orientation, OrientationOutcome, SearchConfig, SearchMode, SearchOutcome,
    SearchStatus,
};
