use thiserror::Error;

/// Errors raised while validating, transforming or checking complexes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("duplicate identifier `{0}`")]
    DuplicateIdentifier(String),
    /// The chain breaks at `corner`: terminal(side_{corner-1}) != initial(side_corner).
    #[error("square `{square}`: boundary does not close up at corner {corner}")]
    CornerMismatch { square: String, corner: usize },
    #[error("simplex `{simplex}` violates facet_{i} . facet_{j} = facet_{} . facet_{i}", j - 1)]
    IdentityViolation { simplex: String, i: usize, j: usize },
    #[error("simplex `{simplex}` references missing facet `{facet}`")]
    MissingFacet { simplex: String, facet: String },
    #[error("simplex `{simplex}` of dimension {dim} references facet `{facet}` of dimension {facet_dim}")]
    DimensionGap { simplex: String, dim: usize, facet: String, facet_dim: usize },
    #[error("simplex `{simplex}` of dimension {dim} lists {found} facets")]
    BadArity { simplex: String, dim: usize, found: usize },
    #[error("slot {slot} is invalid for a simplex with {slots} slots")]
    InvalidSlot { slot: usize, slots: usize },
    #[error("clique budget of {0} exceeded")]
    CliqueBudgetExceeded(usize),
    #[error("VH partition does not match the complex: {0}")]
    PartitionMismatch(String),
    #[error("map is not locally injective at vertex `{0}`")]
    NotLocallyInjective(String),
    #[error("map does not preserve vertical/horizontal classes at edge `{0}`")]
    NotVhPreserving(String),
    #[error("map is not combinatorial: {0}")]
    NotCombinatorial(String),
    #[error("complex carries no simplexification provenance for `{0}`")]
    NotSimplexified(String),
    #[error("complex is not connected")]
    NotConnected,
    #[error("labeling is invalid on square `{0}`")]
    InvalidLabeling(String),
    #[error("labeling error: {0}")]
    BadLabel(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unknown corpus complex `{0}`")]
    UnknownName(String),
    #[error("too many edges for exhaustive enumeration: {edges} > {cap}")]
    TooManyEdges { edges: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
