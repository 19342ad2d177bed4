//! Error type shared across the library.

use crate::game::GameFamily;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A payoff matrix contained NaN or an infinity.
    #[error("payoff values must all be finite")]
    NonFinitePayoff,

    /// A probability argument fell outside `[0, 1]`.
    #[error("{name} = {value} is not a probability in [0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },

    /// Initial-state amplitudes do not satisfy `|alpha|^2 + |beta|^2 = 1`.
    #[error("initial state is not normalized: |alpha|^2 + |beta|^2 = {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    /// The entanglement parameter `X = |alpha|^2` must lie in `[0, 1]`.
    #[error("entanglement parameter {0} lies outside [0, 1]")]
    EntanglementOutOfRange(f64),

    /// A closed form divides by a quantity that is numerically zero.
    #[error("degenerate denominator {name} (|{name}| = {magnitude:e} <= {eps:e})")]
    DegenerateDenominator {
        name: &'static str,
        magnitude: f64,
        eps: f64,
    },

    /// An operation was invoked on a game family it is not defined for.
    #[error("operation requires {expected}, got {found}")]
    FamilyMismatch {
        expected: &'static str,
        found: GameFamily,
    },

    /// Only ordered families have a canonical normalized exemplar.
    #[error("no normalized exemplar for family {0}")]
    NoExemplar(GameFamily),

    /// A grid or resolution parameter was below its minimum.
    #[error("{name} = {value} is below the minimum of {min}")]
    GridTooSmall {
        name: &'static str,
        value: usize,
        min: usize,
    },
}
