use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator specification: give at least one generator or a threshold")]
    EmptySpec,

    #[error(
        "generators have gcd {gcd} and no threshold is given; the complement would be infinite"
    )]
    NonCoprime { gcd: u64 },

    #[error("generators and thresholds must be positive")]
    ZeroGenerator,

    #[error("cannot parse semigroup spec {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("Apery base {base} is not a nonzero element of the semigroup")]
    BaseNotInSemigroup { base: u64 },

    #[error("operation is undefined for the trivial semigroup N")]
    TrivialSemigroup,

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("invalid sweep spec: {0}")]
    SpecInvalid(String),

    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
