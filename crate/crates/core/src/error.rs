use thiserror::Error;

use crate::indices::Index;
use crate::lsi::LsiMonomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dual undefined for non-admissible index ({0})")]
    NonAdmissible(Index),

    #[error("truncation past empty index: cannot truncate ({index}) by {steps}")]
    TruncationPastEmpty { index: Index, steps: u32 },

    #[error("weight {0} out of range (need at least 2)")]
    WeightTooSmall(u32),

    #[error("invalid index part {0} (parts must be positive)")]
    InvalidPart(u32),

    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),

    #[error("reduction not applicable at j={position} for {monomial}")]
    ReductionNotApplicable { monomial: LsiMonomial, position: usize },

    #[error("monomial outside declared basis: {0}")]
    OutsideBasis(LsiMonomial),

    #[error("expected a single pure pi term, found {0}")]
    NotPurePi(String),

    #[error("numeric domain error: {0}")]
    Domain(String),

    #[error("depth {depth} exceeds quadrature cap {cap}")]
    DepthCap { depth: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonAdmissible(_) => "non_admissible",
            Error::TruncationPastEmpty { .. } => "truncation_past_empty",
            Error::WeightTooSmall(_) => "weight_too_small",
            Error::InvalidPart(_) => "invalid_part",
            Error::InvalidMonomial(_) => "invalid_monomial",
            Error::ReductionNotApplicable { .. } => "reduction_not_applicable",
            Error::OutsideBasis(_) => "outside_basis",
            Error::NotPurePi(_) => "not_pure_pi",
            Error::Domain(_) => "domain",
            Error::DepthCap { .. } => "depth_cap",
            Error::Parse(_) => "parse",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
