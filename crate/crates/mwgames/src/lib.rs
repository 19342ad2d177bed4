//! Marinatto-Weber quantization of 2x2 symmetric games.
//!
//! The crate models symmetric bimatrix games (stag hunt, Chicken, Leader,
//! Secret Meeting, Prisoner's Dilemma), computes classical and quantum
//! mixed-tactic payoffs, enumerates Nash equilibria, and classifies how the
//! payoff ordering of the stag-hunt equilibrium triple changes with the
//! entanglement of the initial state.
//!
//! In the Marinatto-Weber scheme the two players share the entangled state
//! `alpha|CC> + beta|DD>` and each mixes the identity with a bit-flip on
//! their own qubit (probabilities `p` and `q`); expected payoffs are traces
//! of diagonal payoff operators against the final density matrix. Every
//! closed-form payoff expression in [`analysis`] is cross-checkable against
//! the independent density-matrix engine in [`quantum`], and
//! [`analysis::brute_force_verify`] confirms equilibria by grid search over
//! unilateral deviations using the engine alone.

pub mod analysis;
pub mod classical;
pub mod cli;
pub mod error;
pub mod game;
pub mod quantum;
pub mod report;
pub mod sweep;

pub use classical::{ContinuumAxis, EquilibriumKind, NashEquilibrium};
pub use error::Error;
pub use game::{GameDefinition, GameFamily, PayoffMatrix, StrategyProfile};
pub use quantum::{DensityMatrix, Entanglement, InitialState, PayoffOperators};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Magnitude below which a denominator counts as degenerate.
pub const EPS_DENOMINATOR: f64 = 1e-12;

/// Magnitude below which a best-response bracket counts as vanishing.
pub const EPS_BRACKET: f64 = 1e-12;

/// Default tolerance for equilibrium verification and engine cross-checks.
pub const TOL_VERIFY: f64 = 1e-9;

/// Payoff-comparison tolerance when deciding regime boundaries.
pub const TOL_REGIME: f64 = 1e-9;

/// Maximum admissible Hermiticity defect of a density matrix.
pub const TOL_HERMITIAN: f64 = 1e-12;

/// Maximum admissible deviation of a density-matrix trace from one.
pub const TOL_TRACE: f64 = 1e-12;

/// Eigenvalues of a density matrix may undershoot zero by at most this much.
pub const PSD_SLACK: f64 = 1e-10;

/// Gate on `|alpha|^2 + |beta|^2 - 1` when constructing initial states.
pub const TOL_NORMALIZATION: f64 = 1e-9;

/// Default number of sweep steps over the entanglement parameter.
pub const DEFAULT_SWEEP_RESOLUTION: usize = 1000;

/// Default `(p, q)` grid edge for engine cross-checks.
pub const DEFAULT_VERIFY_GRID: usize = 101;

/// Default deviation-grid size for brute-force equilibrium checks.
pub const DEFAULT_DEVIATION_GRID: usize = 1001;
