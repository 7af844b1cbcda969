use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term {constant} is not a unit over the integers")]
    NonUnitConstantTerm { constant: BigInt },
    #[error("coefficient of q^{degree} is nonzero, so the series is not divisible by q^{power}")]
    InexactPowerDivision { degree: usize, power: usize },
    #[error("q^{degree} lies beyond the truncation order {order}")]
    OrderExceeded { degree: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("configuration violates the monotonicity or multiplicity constraints: {0}")]
    InvalidConfig(String),
    #[error("configuration is not admissible: {0}")]
    NotAdmissible(String),
    #[error("lambda configuration is malformed: {0}")]
    InvalidLambda(String),
}
