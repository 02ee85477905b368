use thiserror::Error;

/// Reason a structurally well-formed graph document was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValidationReason {
    SelfLoop,
    DuplicateEdge,
    WeightAboveMinusTwo,
    Disconnected,
    DuplicateId,
    UnknownVertex,
    Empty,
}

impl ValidationReason {
    /// Stable snake_case code used in diagnostics.
    pub fn code(self) -> &'static str {
        match self {
            ValidationReason::SelfLoop => "self_loop",
            ValidationReason::DuplicateEdge => "duplicate_edge",
            ValidationReason::WeightAboveMinusTwo => "weight_above_minus_two",
            ValidationReason::Disconnected => "disconnected",
            ValidationReason::DuplicateId => "duplicate_id",
            ValidationReason::UnknownVertex => "unknown_vertex",
            ValidationReason::Empty => "empty_graph",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("schema error: {0}")]
    Schema(String),

    #[error("invalid graph ({}): {detail}", reason.code())]
    Validation {
        reason: ValidationReason,
        detail: String,
    },

    #[error("cycle domain does not match the graph ({cycle} entries, {graph} vertices)")]
    DomainMismatch { cycle: usize, graph: usize },

    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,

    #[error("graph is not rational")]
    NotRational,

    #[error("fundamental cycle is not almost reduced")]
    NotAlmostReduced,

    #[error("embedding dimension {0} is below 4")]
    EmbeddingDimensionTooSmall(i64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unknown configuration class: {0}")]
    UnknownClass(String),

    #[error("c^2 + K.c = {0} is odd")]
    Parity(i64),

    #[error("rationality criteria disagree (laufer={laufer}, artin={artin})")]
    CriterionDisagreement { laufer: bool, artin: bool },

    #[error("configuration around {core} has {count} black vertices")]
    MultipleBlackVertices { core: String, count: usize },

    #[error("configuration around {0} matches no catalog row")]
    NotInCatalog(String),

    #[error("(Z-E).(K-Z) = {pairing} but sum(s-1) = {sum}")]
    IdentityViolation { pairing: i64, sum: i64 },
}

/// Coarse grouping used by the CLI to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    /// The input is outside the class the invariants are defined for.
    Domain,
    /// An internal consistency check failed.
    Internal,
}

impl Error {
    pub(crate) fn validation(reason: ValidationReason, detail: impl Into<String>) -> Self {
        Error::Validation {
            reason,
            detail: detail.into(),
        }
    }

    pub fn severity(&self) -> Severity {
        match self {
            Error::Parity(_)
            | Error::CriterionDisagreement { .. }
            | Error::MultipleBlackVertices { .. }
            | Error::NotInCatalog(_)
            | Error::IdentityViolation { .. } => Severity::Internal,
            _ => Severity::Domain,
        }
    }

    /// Machine-readable diagnostic code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Schema(_) => "schema_error",
            Error::Validation { reason, .. } => reason.code(),
            Error::DomainMismatch { .. } => "domain_mismatch",
            Error::NotNegativeDefinite => "not_negative_definite",
            Error::NotRational => "not_rational",
            Error::NotAlmostReduced => "not_almost_reduced",
            Error::EmbeddingDimensionTooSmall(_) => "embedding_dimension_below_4",
            Error::InvalidParameters(_) => "invalid_parameters",
            Error::UnknownClass(_) => "unknown_class",
            Error::Parity(_) => "parity_error",
            Error::CriterionDisagreement { .. } => "criterion_disagreement",
            Error::MultipleBlackVertices { .. } => "multiple_black_vertices",
            Error::NotInCatalog(_) => "not_in_catalog",
            Error::IdentityViolation { .. } => "identity_violation",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
