//! Classical mixed strategies: expected payoffs, deviation gains, and
//! Nash-equilibrium enumeration for symmetric 2x2 games.

use serde::Serialize;

use crate::error::Error;
use crate::game::{PayoffMatrix, StrategyProfile};
use crate::{EPS_BRACKET, EPS_DENOMINATOR};

/// Which probability coordinate ranges freely in a continuum of equilibria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContinuumAxis {
    RowProbability,
    ColumnProbability,
    Both,
}

/// How an equilibrium sits inside the strategy square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EquilibriumKind {
    /// Both probabilities are 0 or 1.
    Corner,
    /// Both probabilities lie strictly inside (0, 1).
    Interior,
    /// The best-response bracket vanishes identically; every profile on the
    /// given axis (or the whole square) is an equilibrium. The stored
    /// profile is a representative point.
    Continuum(ContinuumAxis),
}

/// A strategy profile from which no unilateral deviation profits, together
/// with both players' expected payoffs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NashEquilibrium {
    pub profile: StrategyProfile,
    pub payoff_a: f64,
    pub payoff_b: f64,
    pub kind: EquilibriumKind,
}

/// Expected payoffs `($_A, $_B)` under independent mixing.
///
/// Alice cooperates with probability `p`, Bob with probability `q`; each
/// outcome cell is weighted by its joint probability.
pub fn payoffs(m: &PayoffMatrix, s: StrategyProfile) -> (f64, f64) {
    let (a, b, c, d) = m.values();
    let (p, q) = (s.p(), s.q());
    let pay_a = p * q * a + p * (1.0 - q) * d + q * (1.0 - p) * b + (1.0 - p) * (1.0 - q) * c;
    let pay_b = p * q * a + p * (1.0 - q) * b + q * (1.0 - p) * d + (1.0 - p) * (1.0 - q) * c;
    (pay_a, pay_b)
}

/// The best-response bracket `K(t) = t(a - b) + (1 - t)(d - c)`.
///
/// A unilateral move of Alice from `p` to `p*` against `q` changes her
/// payoff by `(p* - p) K(q)`; the same bracket with `p` serves Bob. Its sign
/// therefore determines each player's best response.
pub fn bracket(m: &PayoffMatrix, t: f64) -> f64 {
    let (a, b, c, d) = m.values();
    t * (a - b) + (1.0 - t) * (d - c)
}

/// Payoff gains `(delta_A, delta_B)` of the profile `star` over unilateral
/// deviations to `dev`'s coordinates.
///
/// `delta_A` compares `star` with `(dev.p, star.q)`; `delta_B` compares it
/// with `(star.p, dev.q)`. Both are non-negative exactly when `star` is a
/// Nash equilibrium against those deviations.
pub fn payoff_delta(
    m: &PayoffMatrix,
    star: StrategyProfile,
    dev: StrategyProfile,
) -> (f64, f64) {
    let delta_a = (star.p() - dev.p()) * bracket(m, star.q());
    let delta_b = (star.q() - dev.q()) * bracket(m, star.p());
    (delta_a, delta_b)
}

/// The indifference probability `m = (c - d) / (a - b + c - d)` at which the
/// bracket vanishes; for stag-hunt orderings it lies in (0, 1).
pub fn interior_probability(m: &PayoffMatrix) -> Result<f64, Error> {
    let (a, b, c, d) = m.values();
    let den = a - b + c - d;
    if den.abs() <= EPS_DENOMINATOR {
        return Err(Error::DegenerateDenominator {
            name: "a - b + c - d",
            magnitude: den.abs(),
            eps: EPS_DENOMINATOR,
        });
    }
    Ok((c - d) / den)
}

/// Enumerates the Nash equilibria of the classical mixed-strategy game.
///
/// The enumeration is a sign analysis of the shared best-response bracket:
/// corners where both players' sign conditions hold, the interior
/// indifference point when it falls strictly inside (0, 1), and a continuum
/// entry when the bracket vanishes identically. For any stag-hunt matrix
/// this yields exactly `(1,1)`, `(0,0)` and the interior mix.
pub fn nash_equilibria(m: &PayoffMatrix) -> Vec<NashEquilibrium> {
    let (a, b, c, d) = m.values();
    let slope = (a - b) - (d - c);
    let intercept = d - c;
    enumerate_symmetric_equilibria(slope, intercept, |s| payoffs(m, s))
}

/// Sign analysis of an affine best-response bracket `B(t) = slope*t +
/// intercept` shared by both players of a symmetric game.
///
/// Used with the classical bracket and with its entangled generalization;
/// the caller supplies the payoff evaluator that annotates each equilibrium.
pub(crate) fn enumerate_symmetric_equilibria(
    slope: f64,
    intercept: f64,
    payoffs_at: impl Fn(StrategyProfile) -> (f64, f64),
) -> Vec<NashEquilibrium> {
    let bracket = |t: f64| slope * t + intercept;

    if slope.abs() <= EPS_BRACKET && intercept.abs() <= EPS_BRACKET {
        // Both players are indifferent everywhere: the whole square is an
        // equilibrium set. Report one representative entry.
        let profile = StrategyProfile::new(0.5, 0.5).expect("0.5 is a probability");
        let (payoff_a, payoff_b) = payoffs_at(profile);
        return vec![NashEquilibrium {
            profile,
            payoff_a,
            payoff_b,
            kind: EquilibriumKind::Continuum(ContinuumAxis::Both),
        }];
    }

    let mut found = Vec::new();
    for (p, q) in [(1.0, 1.0), (0.0, 0.0), (1.0, 0.0), (0.0, 1.0)] {
        let p_best = if p == 1.0 {
            bracket(q) >= -EPS_BRACKET
        } else {
            bracket(q) <= EPS_BRACKET
        };
        let q_best = if q == 1.0 {
            bracket(p) >= -EPS_BRACKET
        } else {
            bracket(p) <= EPS_BRACKET
        };
        if p_best && q_best {
            let profile = StrategyProfile::new(p, q).expect("corner probabilities");
            let (payoff_a, payoff_b) = payoffs_at(profile);
            found.push(NashEquilibrium {
                profile,
                payoff_a,
                payoff_b,
                kind: EquilibriumKind::Corner,
            });
        }
    }

    if slope.abs() > EPS_BRACKET {
        let root = -intercept / slope;
        if root > 0.0 && root < 1.0 {
            let profile = StrategyProfile::new(root, root).expect("root in (0, 1)");
            let (payoff_a, payoff_b) = payoffs_at(profile);
            found.push(NashEquilibrium {
                profile,
                payoff_a,
                payoff_b,
                kind: EquilibriumKind::Interior,
            });
        }
    }
    found
}
