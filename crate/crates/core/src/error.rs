use thiserror::Error;

/// Errors raised by graph construction, labeling arithmetic, the
/// constructions and the search drivers.
///
/// Vertices are stored 0-based; messages print them 1-based to match the
/// file and CLI surfaces.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {}", .0 + 1)]
    LoopEdge(usize),
    #[error("edges {} -> {} and {} -> {} form a 2-cycle", .0 + 1, .1 + 1, .1 + 1, .0 + 1)]
    TwoCycle(usize, usize),
    #[error("edge {} -> {} given twice", .0 + 1, .1 + 1)]
    DuplicateEdge(usize, usize),
    #[error("vertex {} out of range for order {order}", .vertex + 1)]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("vertex {} has no label", .0 + 1)]
    MissingLabel(usize),
    #[error("vertex {} would get non-positive label {label}", .vertex + 1)]
    NonPositiveLabel { vertex: usize, label: i64 },
    #[error("label {0} is not a positive integer")]
    InvalidLabel(i64),

    #[error("{0} is not a DDM labeled graph")]
    NotDdm(&'static str),
    #[error("graph imbalance is {0}, expected exactly 1")]
    ImbalanceNotOne(i64),
    #[error("second operand is not balanced (imbalance {0})")]
    SecondOperandNotBalanced(i64),
    #[error("component {index} is not balanced (imbalance {imbalance})")]
    ComponentNotBalanced { index: usize, imbalance: i64 },
    #[error("graph is not balanced (imbalance {0})")]
    NotBalanced(i64),
    #[error("order {0} is too small, need at least 5")]
    OrderTooSmall(usize),
    #[error("windmill needs k >= 1, got {0}")]
    InvalidK(usize),
    #[error("ornament count {ell} out of range 1..={max}")]
    EllOutOfRange { ell: usize, max: usize },

    #[error("weight {0} has no matching target label")]
    UncoveredWeightClass(i64),
    #[error("{operand} labels must be exactly {lo}..={hi}")]
    LabelRangeMismatch { operand: &'static str, lo: i64, hi: i64 },
    #[error("max |weight| {max} exceeds first operand order {order}")]
    MaxWeightExceedsN { max: i64, order: usize },
    #[error("label sums of weight classes +{0} and -{0} differ")]
    ClassSumMismatch(i64),
    #[error("weight {weight} lies outside 0 or {lo}..={hi} in absolute value")]
    WeightOutOfWindow { weight: i64, lo: i64, hi: i64 },

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("order {order} exceeds search cap {cap}")]
    OrderExceedsCap { order: usize, cap: usize },
    #[error("edge count {edges} exceeds search cap {cap}")]
    EdgeCountExceedsCap { edges: usize, cap: usize },
    #[error("search caps must be positive")]
    InvalidCap,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
