use thiserror::Error;

/// Which transmitter/receiver pair a message refers to.
pub type UserIndex = u8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("power budget must be positive and finite, got {0}")]
    NonPositiveBudget(f64),

    #[error("channel gain {name} must be finite and nonzero, got {value}")]
    InvalidGain { name: &'static str, value: f64 },

    #[error("direct link h{user}{user} is at or below the noise level: log2(h^2 P) = {log_snr}")]
    BelowNoise { user: UserIndex, log_snr: f64 },

    #[error("power {name} must be finite and nonnegative, got {value}")]
    InvalidPower { name: &'static str, value: f64 },

    #[error("user {user} power budget exceeded: uses {used}, budget {budget}")]
    BudgetExceeded {
        user: UserIndex,
        used: f64,
        budget: f64,
    },

    #[error("gamma^2 must lie in (0, 1), got {0}")]
    GammaOutOfRange(f64),

    #[error("secrecy penalty unbounded: jamming power p_u{user} is zero")]
    ZeroJamming { user: UserIndex },

    #[error("lattice step must be positive and finite, got {0}")]
    InvalidStep(f64),

    #[error("lattices are not nested: step ratio {ratio} is not a positive integer")]
    NonIntegerNesting { ratio: f64 },

    #[error("power scaling entry b_eff({index}) is zero")]
    DegenerateScaling { index: usize },

    #[error("integer coefficient vector must be nonzero")]
    ZeroCoefficients,

    #[error("slope fit needs at least 3 points spanning 2 decades of P (got {points} points, {decades:.3} decades)")]
    InsufficientSpan { points: usize, decades: f64 },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("search grid is empty or has no feasible split")]
    EmptyGrid,

    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
