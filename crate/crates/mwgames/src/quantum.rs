//! The quantized game engine: entangled initial states, identity/flip tactic
//! mixtures acting on a two-qubit density matrix, diagonal payoff operators,
//! and the closed-form payoff functions the engine validates.

use nalgebra::{Matrix2, Matrix4, SymmetricEigen, Vector4};
use num_complex::Complex64;

use crate::error::Error;
use crate::game::{PayoffMatrix, StrategyProfile};
use crate::{PSD_SLACK, TOL_HERMITIAN, TOL_NORMALIZATION, TOL_TRACE};

/// Basis order used throughout: `|CC>`, `|CD>`, `|DC>`, `|DD>`, with Alice's
/// qubit first.
pub const BASIS_LABELS: [&str; 4] = ["CC", "CD", "DC", "DD"];

/// The entanglement parameter `X = |alpha|^2` of the initial state.
///
/// Every closed-form result depends on the initial amplitudes only through
/// this single number; `X = 1/2` is the maximally entangled state and
/// `X = 1` recovers the classical game.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Entanglement(f64);

impl Entanglement {
    pub fn new(x: f64) -> Result<Self, Error> {
        if (0.0..=1.0).contains(&x) {
            Ok(Self(x))
        } else {
            Err(Error::EntanglementOutOfRange(x))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 - X`, the weight of the `|DD>` component.
    pub fn complement(self) -> f64 {
        1.0 - self.0
    }
}

/// Amplitudes of the entangled starting state `alpha|CC> + beta|DD>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialState {
    alpha: Complex64,
    beta: Complex64,
}

impl InitialState {
    /// Accepts amplitudes whose squared moduli sum to one within
    /// [`TOL_NORMALIZATION`].
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self, Error> {
        let norm_sqr = alpha.norm_sqr() + beta.norm_sqr();
        if (norm_sqr - 1.0).abs() > TOL_NORMALIZATION {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { alpha, beta })
    }

    /// Real non-negative amplitudes `sqrt(X)` and `sqrt(1 - X)`.
    pub fn from_entanglement(x: Entanglement) -> Self {
        Self {
            alpha: Complex64::new(x.value().sqrt(), 0.0),
            beta: Complex64::new(x.complement().sqrt(), 0.0),
        }
    }

    /// Amplitudes with the given moduli and arbitrary phases. Payoffs are
    /// phase-invariant, which the test suites exploit.
    pub fn with_phases(x: Entanglement, phase_cc: f64, phase_dd: f64) -> Self {
        Self {
            alpha: Complex64::from_polar(x.value().sqrt(), phase_cc),
            beta: Complex64::from_polar(x.complement().sqrt(), phase_dd),
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// `X = |alpha|^2`, clamped against normalization round-off.
    pub fn entanglement(&self) -> Entanglement {
        Entanglement(self.alpha.norm_sqr().clamp(0.0, 1.0))
    }
}

/// A 4x4 complex density matrix over the ordered basis
/// (`CC`, `CD`, `DC`, `DD`). Physical states are Hermitian, trace one and
/// positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: Matrix4<Complex64>,
}

impl DensityMatrix {
    pub(crate) fn from_matrix(m: Matrix4<Complex64>) -> Self {
        Self { m }
    }

    pub fn as_matrix(&self) -> &Matrix4<Complex64> {
        &self.m
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[(row, col)]
    }

    /// Real parts of the diagonal, ordered as [`BASIS_LABELS`].
    pub fn diagonal(&self) -> [f64; 4] {
        [
            self.m[(0, 0)].re,
            self.m[(1, 1)].re,
            self.m[(2, 2)].re,
            self.m[(3, 3)].re,
        ]
    }

    pub fn trace(&self) -> Complex64 {
        self.m.trace()
    }

    /// Largest modulus among `rho[i][j] - conj(rho[j][i])`.
    pub fn hermiticity_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.m[(i, j)] - self.m[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `|Tr(rho) - 1|`.
    pub fn trace_error(&self) -> f64 {
        (self.trace() - Complex64::new(1.0, 0.0)).norm()
    }

    /// Smallest eigenvalue of the Hermitian part of `rho`.
    pub fn min_eigenvalue(&self) -> f64 {
        let hermitian = (self.m + self.m.adjoint()) * Complex64::new(0.5, 0.0);
        let eigen = SymmetricEigen::new(hermitian);
        eigen.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Hermitian within [`TOL_HERMITIAN`], trace one within [`TOL_TRACE`],
    /// and eigenvalues above `-`[`PSD_SLACK`].
    pub fn is_physical(&self) -> bool {
        self.hermiticity_error() <= TOL_HERMITIAN
            && self.trace_error() <= TOL_TRACE
            && self.min_eigenvalue() >= -PSD_SLACK
    }
}

/// The 2x2 basis-exchange tactic: unitary, Hermitian and self-inverse.
pub fn flip_operator() -> Matrix2<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    Matrix2::new(zero, one, one, zero)
}

/// The rank-one projector onto `alpha|CC> + beta|DD>`.
///
/// Only the four corner entries are populated: `|alpha|^2` and `|beta|^2` on
/// the diagonal and `alpha conj(beta)` off it.
pub fn initial_density(state: &InitialState) -> DensityMatrix {
    let zero = Complex64::new(0.0, 0.0);
    let psi = Vector4::new(state.alpha(), zero, zero, state.beta());
    DensityMatrix::from_matrix(psi * psi.adjoint())
}

/// Applies the players' independent identity/flip mixtures to the state.
///
/// The result is the four-term mixture with weights `pq`, `p(1-q)`,
/// `(1-p)q`, `(1-p)(1-q)` conjugating by `I(x)I`, `I(x)U`, `U(x)I`, `U(x)U`
/// respectively, where `U` is the flip. Physicality is preserved.
pub fn evolve(rho: &DensityMatrix, s: StrategyProfile) -> DensityMatrix {
    let identity = Matrix2::identity();
    let flip = flip_operator();
    let (p, q) = (s.p(), s.q());

    let terms = [
        (p * q, identity.kronecker(&identity)),
        (p * (1.0 - q), identity.kronecker(&flip)),
        ((1.0 - p) * q, flip.kronecker(&identity)),
        ((1.0 - p) * (1.0 - q), flip.kronecker(&flip)),
    ];

    let mut out = Matrix4::zeros();
    for (weight, op) in terms {
        out += (op * rho.as_matrix() * op.adjoint()) * Complex64::new(weight, 0.0);
    }
    DensityMatrix::from_matrix(out)
}

/// Diagonal payoff observables for both players in the
/// (`CC`, `CD`, `DC`, `DD`) basis.
///
/// Alice weighs the outcomes `(a, d, b, c)`; Bob mirrors the off-diagonal
/// cells and weighs `(a, b, d, c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffOperators {
    pub weights_a: [f64; 4],
    pub weights_b: [f64; 4],
}

/// Builds both players' payoff operators from the bimatrix.
pub fn payoff_operators(m: &PayoffMatrix) -> PayoffOperators {
    let (a, b, c, d) = m.values();
    PayoffOperators {
        weights_a: [a, d, b, c],
        weights_b: [a, b, d, c],
    }
}

/// Expected payoffs `Tr(P rho)` of both players for a diagonal payoff
/// operator: the weighted sum of the diagonal populations. Imaginary parts
/// of the diagonal are round-off and are discarded.
pub fn expected_payoffs(rho: &DensityMatrix, ops: &PayoffOperators) -> (f64, f64) {
    let mut pay_a = 0.0;
    let mut pay_b = 0.0;
    for (i, (wa, wb)) in ops.weights_a.iter().zip(ops.weights_b.iter()).enumerate() {
        let z = rho.entry(i, i);
        debug_assert!(z.im.abs() < 1e-12, "diagonal entry {i} has imaginary part {}", z.im);
        pay_a += wa * z.re;
        pay_b += wb * z.re;
    }
    (pay_a, pay_b)
}

/// Closed-form expected payoffs as a function of the entanglement `X` and
/// the tactic profile, bilinear in `(p, q)`:
///
/// ```text
/// $_A = pq(a+c-b-d) + p[X(d-c) + (1-X)(b-a)]
///                   + q[X(b-c) + (1-X)(d-a)] + a(1-X) + cX
/// ```
///
/// and `$_B` with the `p` and `q` coefficients exchanged. Agrees with the
/// engine pipeline (`initial_density -> evolve -> expected_payoffs`) for any
/// phase choice of the amplitudes.
pub fn closed_form_payoffs(
    m: &PayoffMatrix,
    x: Entanglement,
    s: StrategyProfile,
) -> (f64, f64) {
    let (a, b, c, d) = m.values();
    let (p, q) = (s.p(), s.q());
    let xv = x.value();
    let yv = x.complement();

    let slope = a + c - b - d;
    let coeff_own = xv * (d - c) + yv * (b - a);
    let coeff_opp = xv * (b - c) + yv * (d - a);
    let base = a * yv + c * xv;

    let pay_a = p * q * slope + p * coeff_own + q * coeff_opp + base;
    let pay_b = p * q * slope + p * coeff_opp + q * coeff_own + base;
    (pay_a, pay_b)
}

/// Worst absolute disagreement between the engine pipeline and the closed
/// forms over a `(p, q)` grid at fixed `X`, for each given phase pair.
///
/// The payoff operators are passed in explicitly so that verification
/// fixtures can demonstrate the check catches inconsistent operators.
pub fn engine_closed_form_deviation(
    m: &PayoffMatrix,
    ops: &PayoffOperators,
    x: Entanglement,
    grid: usize,
    phases: &[(f64, f64)],
) -> f64 {
    assert!(grid >= 2, "grid must have at least two points");
    let mut worst: f64 = 0.0;
    for &(phase_cc, phase_dd) in phases {
        let rho0 = initial_density(&InitialState::with_phases(x, phase_cc, phase_dd));
        for i in 0..grid {
            for j in 0..grid {
                let p = i as f64 / (grid - 1) as f64;
                let q = j as f64 / (grid - 1) as f64;
                let s = StrategyProfile::new(p, q).expect("grid probabilities");
                let engine = expected_payoffs(&evolve(&rho0, s), ops);
                let closed = closed_form_payoffs(m, x, s);
                worst = worst
                    .max((engine.0 - closed.0).abs())
                    .max((engine.1 - closed.1).abs());
            }
        }
    }
    worst
}
