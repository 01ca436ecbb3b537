use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A family parameter or presentation is outside its domain.
    ParameterDomain(String),
    /// Matrix or vector dimensions do not fit the operation.
    Shape(String),
    /// A hypothesis of a degree-split identity does not hold for the input.
    Domain(String),
    /// A brute-force search found generators at its degree cap, so a larger
    /// cap is required before the result can be trusted.
    Inconclusive { degree_cap: u32, generators_at_cap: usize },
    /// The base vectors do not span the ambient space.
    Degenerate { rank: usize, n: usize },
    /// Two independent computations disagreed where they must agree.
    InternalConsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ParameterDomain(msg) => write!(f, "parameter out of domain: {msg}"),
            Error::Shape(msg) => write!(f, "shape mismatch: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Inconclusive { degree_cap, generators_at_cap } => write!(
                f,
                "inconclusive: {generators_at_cap} generator(s) found at the degree cap {degree_cap}; \
                 rerun with a larger degree cap"
            ),
            Error::Degenerate { rank, n } => {
                write!(f, "base vectors span a space of rank {rank} < {n}")
            }
            Error::InternalConsistency(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
