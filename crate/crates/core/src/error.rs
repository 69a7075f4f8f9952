//! Error types shared across the geometry and reduction layers.

use thiserror::Error;

/// Failures of exact geometric operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("tangency intervals of teeth {0} and {1} intersect on the inner circle")]
    TeethOverlap(usize, usize),
    #[error("tangential boundary contact could not be resolved ({0})")]
    TangencyUnresolved(&'static str),
    #[error("angle coincides exactly with the {threshold_deg} degree threshold")]
    ThresholdCoincidence { threshold_deg: String },
    #[error("moment curve parameter must be positive")]
    NonpositiveParameter,
    #[error("no positive-margin facet witness exists for sites {0} and {1}")]
    InfeasibleWitness(usize, usize),
}

/// Failures of combinatorial structures and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("vertex {vertex} has degree {degree}, above the allowed maximum {max}")]
    DegreeViolation {
        vertex: usize,
        degree: usize,
        max: usize,
    },
    #[error("element {0} is not contained in any set")]
    UncoverableElement(usize),
    #[error("instance exceeds the exact-solver budget: {0}")]
    BudgetExceeded(&'static str),
    #[error("invalid graph: {0}")]
    InvalidGraph(&'static str),
    #[error("invalid set system: {0}")]
    InvalidSystem(&'static str),
}

/// Failures while building or certifying a reduction instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
    #[error("set {0} is empty")]
    EmptySet(usize),
    #[error("element {element} appears in {count} sets, above the frequency bound {bound}")]
    FrequencyExceeded {
        element: usize,
        count: usize,
        bound: usize,
    },
    #[error("set {set} has {size} elements, above the size bound {bound}")]
    SetTooLarge {
        set: usize,
        size: usize,
        bound: usize,
    },
    #[error(
        "geometric membership of point {point} in shape {shape} disagrees with the source system"
    )]
    MembershipMismatch { point: usize, shape: usize },
    #[error("built instance violates condition {0}")]
    ConditionViolation(String),
    #[error("no perturbation in the denominator schedule broke all cocircularities")]
    PerturbationExhausted,
    #[error("certified intersection of triangles {0} and {1} disagrees with the source adjacency")]
    AdjacencyMismatch(usize, usize),
    #[error("delta must satisfy 0 < delta < 10 degrees")]
    DeltaOutOfRange,
    #[error("instance exceeds the construction scale cap: {0}")]
    ScaleCap(&'static str),
}
