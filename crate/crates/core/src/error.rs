use thiserror::Error;

/// Errors raised by the monomial, ideal, hypergraph and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("ambient dimension must be positive")]
    EmptyAmbient,

    #[error("m(1) undefined: the unit monomial has no largest variable")]
    UnitMonomial,

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("shift index j={j} must satisfy 1 <= j < m(u)={m}")]
    ShiftIndex { j: usize, m: usize },

    #[error("exponent or degree overflow")]
    Overflow,

    #[error("complement undefined: coordinate {index} has {d} > {c}")]
    ComplementUndefined { index: usize, c: u32, d: u32 },

    #[error("irreducible component needs at least one positive exponent")]
    ZeroVector,

    #[error("generator {generator} does not divide x^{vector}")]
    NotDividing { generator: String, vector: String },

    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined on the unit ideal")]
    UnitIdeal,

    #[error("hypergraph has no edges")]
    NoEdges,

    #[error("increment d must be a positive integer")]
    ZeroIncrement,

    #[error("vertex {vertex} in edge {edge} out of range 1..={n}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },

    #[error("edge 1 has {size} vertices; edges need at least 2")]
    FirstEdgeTooSmall { size: usize },

    #[error("edges not strictly nested: edge {index} is not a proper subset of edge {next}", next = .index + 1)]
    NotNested { index: usize },

    #[error("increment mismatch: |E_{next}| - |E_{index}| = {found}, expected d = {expected}", next = .index + 1)]
    IncrementMismatch {
        index: usize,
        expected: usize,
        found: i64,
    },

    #[error("infeasible instance: need 2 + (s-1)*d <= n, got n={n} d={d} s={s}")]
    Infeasible { n: usize, d: usize, s: usize },

    #[error("{count} generators exceed the oracle limit of {limit}; use a smaller instance or skip the regularity oracle")]
    TooManyGenerators { count: usize, limit: usize },

    #[error("ground set of {size} vertices exceeds the homology limit of {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },

    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("truncation of the {which} ideal at degree {degree} is not stable")]
    UnstableInput { which: &'static str, degree: u32 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
