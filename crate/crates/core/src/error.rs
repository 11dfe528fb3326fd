use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("need at least 2 distinct elements, got {0}")]
    TooFewElements(usize),

    #[error("duplicate element {0}")]
    DuplicateElement(u64),

    #[error("element {value} exceeds the supported limit {limit} after normalization")]
    ElementTooLarge { value: u64, limit: u64 },

    #[error("semigroup generators must be positive")]
    ZeroGenerator,

    #[error("semigroup generators are empty")]
    NoGenerators,

    #[error("generator gcd is {0}, membership would have infinitely many gaps")]
    GcdNotOne(u64),

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error(
        "{what} needs {required} bytes, budget is {budget} (set MONOCURVE_MEMORY_BUDGET to raise)"
    )]
    ResourceLimit {
        what: &'static str,
        required: u64,
        budget: u64,
    },

    #[error("exponent vector has length {got}, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("degree cap {0} is too small, need at least 2")]
    DegreeCapTooSmall(u64),

    #[error("fold count must be at least 1")]
    ZeroFold,

    #[error("operation requires at least 3 elements")]
    RequiresAtLeastTernary,

    #[error("sweep bounds invalid: n_max {n_max} (need >= 2), a_max {a_max} (need >= n_max - 1)")]
    BadSweepBounds { n_max: u64, a_max: u64 },
}

impl Error {
    /// A resource-style error, as opposed to a malformed-input error. The CLI
    /// maps the former to exit code 2 and the latter to exit code 1.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ElementTooLarge { .. } | Error::Overflow(_) | Error::ResourceLimit { .. }
        )
    }
}
