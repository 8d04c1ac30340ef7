use thiserror::Error;

/// Errors reported by algebra, solver and rotation operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The fourvector has (numerically) zero norm and cannot be inverted,
    /// normalized or used as a divisor. Nonzero complex fourvectors can
    /// have zero norm, so this is not restricted to the zero element.
    #[error("fourvector has zero norm and is not invertible")]
    ZeroNorm,

    /// A rotor operand does not have unit norm.
    #[error("not a unit rotor: |norm - 1| = {deviation:e} exceeds tolerance")]
    NotRotor { deviation: f64 },

    /// An operand that must be pure (zero scalar component) is not.
    #[error("expected a pure fourvector, scalar component has magnitude {magnitude:e}")]
    NotPure { magnitude: f64 },

    /// A reflection normal is not a pure unit fourvector.
    #[error("reflection normal is not a pure unit fourvector")]
    NotUnitNormal,

    /// A rotation axis is not unit length.
    #[error("rotation axis has length {length}, expected 1")]
    BadAxis { length: f64 },

    /// A numeric parameter is outside its valid range.
    #[error("invalid parameter: {0}")]
    BadParameter(String),

    /// A reflection chain needs at least one mirror normal.
    #[error("reflection chain requires at least one mirror normal")]
    EmptyChain,

    /// The reduced scalar quadratic has no root consistent with the
    /// linear constraints of the system.
    #[error("quadratic has no solution consistent with its linear constraints")]
    NoSolution,
}

pub type Result<T> = std::result::Result<T, Error>;
