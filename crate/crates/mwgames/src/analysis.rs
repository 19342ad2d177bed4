//! Equilibrium analysis of the quantized games: the entangled best-response
//! bracket, equilibrium enumeration, the stag-hunt payoff triple, the payoff
//! gap polynomials with their root thresholds, the seven-regime classifier,
//! the family comparison table, and brute-force verification through the
//! density-matrix engine.

use serde::Serialize;

use crate::classical::{enumerate_symmetric_equilibria, NashEquilibrium};
use crate::error::Error;
use crate::game::{GameFamily, PayoffMatrix, StrategyProfile};
use crate::quantum::{
    closed_form_payoffs, evolve, expected_payoffs, initial_density, payoff_operators,
    Entanglement, InitialState,
};
use crate::EPS_DENOMINATOR;

fn ensure_family(
    m: &PayoffMatrix,
    expected: GameFamily,
    description: &'static str,
) -> Result<(), Error> {
    let found = m.family();
    if found == expected {
        Ok(())
    } else {
        Err(Error::FamilyMismatch {
            expected: description,
            found,
        })
    }
}

fn denominator(value: f64, name: &'static str) -> Result<f64, Error> {
    if value.abs() <= EPS_DENOMINATOR {
        Err(Error::DegenerateDenominator {
            name,
            magnitude: value.abs(),
            eps: EPS_DENOMINATOR,
        })
    } else {
        Ok(value)
    }
}

/// The entangled best-response bracket `B(t) = slope * t + intercept` with
/// `slope = a + c - b - d` and `intercept = X(d - c) + (1 - X)(b - a)`.
///
/// A unilateral move of Alice from `p` to `p*` against `q` changes her
/// payoff by `(p* - p) B(q)`; Bob's deviations obey the same bracket in `p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BestResponseBracket {
    pub slope: f64,
    pub intercept: f64,
}

impl BestResponseBracket {
    pub fn new(m: &PayoffMatrix, x: Entanglement) -> Self {
        let (a, b, c, d) = m.values();
        Self {
            slope: a + c - b - d,
            intercept: x.value() * (d - c) + x.complement() * (b - a),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.slope * t + self.intercept
    }

    /// The zero of the bracket when it lies strictly inside (0, 1); both
    /// players are indifferent there, making it the interior equilibrium.
    pub fn interior_root(&self) -> Option<f64> {
        if self.slope.abs() <= crate::EPS_BRACKET {
            return None;
        }
        let root = -self.intercept / self.slope;
        (root > 0.0 && root < 1.0).then_some(root)
    }
}

/// Enumerates the Nash equilibria of the quantized game at entanglement `X`.
///
/// Sign analysis of the shared bracket: corner profiles whose mutual sign
/// conditions hold, the interior fixed point when the bracket's zero falls
/// inside (0, 1), and a continuum entry when the bracket vanishes
/// identically. Payoffs come from the closed forms.
pub fn nash_equilibria(m: &PayoffMatrix, x: Entanglement) -> Vec<NashEquilibrium> {
    let bracket = BestResponseBracket::new(m, x);
    enumerate_symmetric_equilibria(bracket.slope, bracket.intercept, |s| {
        closed_form_payoffs(m, x, s)
    })
}

/// The interior equilibrium probability of a stag-hunt-type game,
/// `[(c - d)X + (a - b)(1 - X)] / (a - b + c - d)`.
///
/// Affine in `X`; for stag-hunt orderings it lies in (0, 1) and matches the
/// classical indifference mix at `X = 1`.
pub fn interior_probability(m: &PayoffMatrix, x: Entanglement) -> Result<f64, Error> {
    let (a, b, c, d) = m.values();
    let den = denominator(a - b + c - d, "a - b + c - d")?;
    Ok(((c - d) * x.value() + (a - b) * x.complement()) / den)
}

/// Payoffs of the three stag-hunt equilibria at entanglement `X`, labeled by
/// profile: `p11` at (1, 1), `p00` at (0, 0), `pmq` at the interior mix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StagHuntPayoffs {
    pub p11: f64,
    pub p00: f64,
    pub pmq: f64,
}

/// Evaluates the stag-hunt equilibrium payoff triple:
///
/// ```text
/// $(1,1) = aX + c(1-X)
/// $(0,0) = cX + a(1-X)
/// $(m,m) = [(ac - bd) + X(1-X)(a+b-c-d)(a-b-c+d)] / (a - b + c - d)
/// ```
pub fn stag_hunt_payoffs(m: &PayoffMatrix, x: Entanglement) -> Result<StagHuntPayoffs, Error> {
    ensure_family(m, GameFamily::StagHunt, "a stag-hunt matrix (a > b > c > d)")?;
    let (a, b, c, d) = m.values();
    let den = denominator(a - b + c - d, "a - b + c - d")?;
    let xv = x.value();
    let yv = x.complement();
    Ok(StagHuntPayoffs {
        p11: a * xv + c * yv,
        p00: c * xv + a * yv,
        pmq: ((a * c - b * d) + xv * yv * (a + b - c - d) * (a - b - c + d)) / den,
    })
}

/// A quadratic `c2 x^2 + c1 x + c0` in the entanglement parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quadratic {
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

/// Real roots of a [`Quadratic`], degenerating gracefully.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadraticRoots {
    /// Both leading coefficients vanish: the polynomial is constant.
    Constant,
    /// The quadratic term vanishes; the single root of the linear part.
    Single(f64),
    /// Two real roots in ascending order.
    Pair(f64, f64),
    /// Negative discriminant.
    NoRealRoots,
}

impl Quadratic {
    pub fn eval(&self, x: f64) -> f64 {
        (self.c2 * x + self.c1) * x + self.c0
    }

    /// Roots with a numerically stable quadratic formula; coefficients with
    /// magnitude at most `eps` are treated as zero.
    pub fn roots(&self, eps: f64) -> QuadraticRoots {
        if self.c2.abs() <= eps {
            if self.c1.abs() <= eps {
                return QuadraticRoots::Constant;
            }
            return QuadraticRoots::Single(-self.c0 / self.c1);
        }
        let disc = self.c1 * self.c1 - 4.0 * self.c2 * self.c0;
        if disc < 0.0 {
            return QuadraticRoots::NoRealRoots;
        }
        let sq = disc.sqrt();
        let q = -0.5 * (self.c1 + self.c1.signum() * sq);
        let (r1, r2) = if q == 0.0 {
            (0.0, 0.0)
        } else {
            (q / self.c2, self.c0 / q)
        };
        QuadraticRoots::Pair(r1.min(r2), r1.max(r2))
    }
}

/// The payoff gaps between the corner equilibria and the interior one,
/// as quadratics in `X`:
/// `delta_11(X) = $(1,1) - $(m,m)` and `delta_00(X) = $(0,0) - $(m,m)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaPolynomials {
    pub delta_11: Quadratic,
    pub delta_00: Quadratic,
}

/// Expands the gap polynomials directly from the equilibrium payoff forms.
///
/// With `D = a - b + c - d` and curvature `C = (a+b-c-d)(a-b-c+d)/D`:
///
/// ```text
/// delta_11 = C x^2 + [(a-c) - C] x - (b-c)(c-d)/D
/// delta_00 = C x^2 - [(a-c) + C] x + (a-b)(a-d)/D
/// ```
///
/// The linear coefficients follow from the expansion and are validated in
/// the test suites against the closed-form roots `(b-c)/(a+b-c-d)` and
/// `(a-d)/(a+b-c-d)`.
pub fn delta_polynomials(m: &PayoffMatrix) -> Result<DeltaPolynomials, Error> {
    ensure_family(m, GameFamily::StagHunt, "a stag-hunt matrix (a > b > c > d)")?;
    let (a, b, c, d) = m.values();
    let den = denominator(a - b + c - d, "a - b + c - d")?;
    let curvature = (a + b - c - d) * (a - b - c + d) / den;
    Ok(DeltaPolynomials {
        delta_11: Quadratic {
            c2: curvature,
            c1: (a - c) - curvature,
            c0: -(b - c) * (c - d) / den,
        },
        delta_00: Quadratic {
            c2: curvature,
            c1: -(a - c) - curvature,
            c0: (a - b) * (a - d) / den,
        },
    })
}

/// The closed-form roots of the payoff gap polynomials.
///
/// `x1_plus` and `x0_minus` are the in-range roots at which `delta_11` and
/// `delta_00` change sign; they straddle `1/2` and sum to one for stag-hunt
/// matrices. The companion roots usually fall outside `[0, 1]` and are
/// reported only when their denominator is non-degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    /// `(b - c) / (a + b - c - d)`: sign change of `delta_11`.
    pub x1_plus: f64,
    /// `(c - d) / (b + c - a - d)`, absent when the denominator degenerates.
    pub x1_minus: Option<f64>,
    /// `(a - d) / (a + b - c - d)`: sign change of `delta_00`.
    pub x0_minus: f64,
    /// `(a - b) / (a - b - c + d)`, absent when the denominator degenerates.
    pub x0_plus: Option<f64>,
}

pub fn thresholds(m: &PayoffMatrix) -> Result<Thresholds, Error> {
    ensure_family(m, GameFamily::StagHunt, "a stag-hunt matrix (a > b > c > d)")?;
    let (a, b, c, d) = m.values();
    let sum_den = denominator(a + b - c - d, "a + b - c - d")?;
    let diff_den = a - b - c + d;
    let companion = (diff_den.abs() > EPS_DENOMINATOR).then_some(diff_den);
    Ok(Thresholds {
        x1_plus: (b - c) / sum_den,
        x1_minus: companion.map(|f| (c - d) / -f),
        x0_minus: (a - d) / sum_den,
        x0_plus: companion.map(|f| (a - b) / f),
    })
}

/// Which of the seven orderings of `$(0,0)`, `$(m,m)`, `$(1,1)` holds.
///
/// The regimes run 1..=7 as `X` sweeps 0 to 1; the even regimes are the
/// boundary equalities at `x1_plus`, `1/2` and `x0_minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegimeClassification {
    pub regime: u8,
    pub boundary: bool,
}

/// Classifies the payoff ordering at `X` by direct comparison of the three
/// equilibrium payoffs, treating differences within `tol` as equalities.
pub fn classify_regime(
    m: &PayoffMatrix,
    x: Entanglement,
    tol: f64,
) -> Result<RegimeClassification, Error> {
    let pays = stag_hunt_payoffs(m, x)?;
    let corner_gap = pays.p11 - pays.p00;
    let delta_11 = pays.p11 - pays.pmq;
    let delta_00 = pays.p00 - pays.pmq;

    let regime = if delta_11.abs() <= tol {
        2 // $(0,0) > $(m,m) = $(1,1)
    } else if delta_11 < 0.0 {
        1 // $(0,0) > $(m,m) > $(1,1)
    } else if corner_gap.abs() <= tol {
        4 // $(0,0) = $(1,1) > $(m,m)
    } else if delta_00.abs() <= tol {
        6 // $(1,1) > $(0,0) = $(m,m)
    } else if corner_gap < 0.0 {
        3 // $(0,0) > $(1,1) > $(m,m)
    } else if delta_00 < 0.0 {
        7 // $(1,1) > $(m,m) > $(0,0)
    } else {
        5 // $(1,1) > $(0,0) > $(m,m)
    };
    Ok(RegimeClassification {
        regime,
        boundary: regime % 2 == 0,
    })
}

/// Equilibrium payoff pairs of one of the Chicken/Leader/Secret Meeting
/// exemplars at entanglement `X`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilyEquilibria {
    pub family: GameFamily,
    pub exemplar: PayoffMatrix,
    /// `($_A, $_B)` at `(p, q) = (1, 0)`.
    pub pay_10: (f64, f64),
    /// `($_A, $_B)` at `(p, q) = (0, 1)`.
    pub pay_01: (f64, f64),
    /// The interior equilibrium probability; `1/2` at `X = 1/2`.
    pub interior_probability: f64,
    /// `($_A, $_B)` at the interior equilibrium.
    pub pay_interior: (f64, f64),
}

/// Evaluates the three equilibria of a Chicken, Leader or Secret Meeting
/// exemplar on its normalized payoff values.
pub fn family_table(family: GameFamily, x: Entanglement) -> Result<FamilyEquilibria, Error> {
    if !matches!(
        family,
        GameFamily::Chicken | GameFamily::Leader | GameFamily::SecretMeeting
    ) {
        return Err(Error::FamilyMismatch {
            expected: "one of chicken, leader, secret_meeting",
            found: family,
        });
    }
    let exemplar = family.exemplar()?;
    let bracket = BestResponseBracket::new(&exemplar, x);
    let root = bracket.interior_root().expect(
        "the chicken/leader/secret-meeting orderings keep the bracket zero inside (0, 1)",
    );
    let at = |p: f64, q: f64| {
        closed_form_payoffs(&exemplar, x, StrategyProfile::new(p, q).expect("probabilities"))
    };
    Ok(FamilyEquilibria {
        family,
        exemplar,
        pay_10: at(1.0, 0.0),
        pay_01: at(0.0, 1.0),
        interior_probability: root,
        pay_interior: at(root, root),
    })
}

/// Which player found the improving deviation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Player {
    Alice,
    Bob,
}

/// A single unilateral deviation and the payoff change it produced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Deviation {
    pub player: Player,
    pub profile: StrategyProfile,
    pub improvement: f64,
}

/// Outcome of a brute-force equilibrium check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerificationReport {
    pub candidate: StrategyProfile,
    pub candidate_payoffs: (f64, f64),
    pub grid: usize,
    pub tol: f64,
    /// The most profitable unilateral deviation found on the grid.
    pub worst: Deviation,
    /// True when no deviation improved a player by more than `tol`.
    pub verified: bool,
}

/// Checks a candidate equilibrium by grid search over unilateral
/// deviations, computing every payoff through the density-matrix engine
/// (never the closed forms). A refutation is a report, not an error.
pub fn brute_force_verify(
    m: &PayoffMatrix,
    x: Entanglement,
    candidate: StrategyProfile,
    grid: usize,
    tol: f64,
) -> VerificationReport {
    assert!(grid >= 2, "deviation grid needs at least two points");
    let rho0 = initial_density(&InitialState::from_entanglement(x));
    let ops = payoff_operators(m);
    let engine_payoffs = |s: StrategyProfile| expected_payoffs(&evolve(&rho0, s), &ops);

    let base = engine_payoffs(candidate);
    let mut worst = Deviation {
        player: Player::Alice,
        profile: candidate,
        improvement: f64::NEG_INFINITY,
    };
    for k in 0..grid {
        let t = k as f64 / (grid - 1) as f64;
        let alice = StrategyProfile::new(t, candidate.q()).expect("grid probabilities");
        let gain_a = engine_payoffs(alice).0 - base.0;
        if gain_a > worst.improvement {
            worst = Deviation {
                player: Player::Alice,
                profile: alice,
                improvement: gain_a,
            };
        }
        let bob = StrategyProfile::new(candidate.p(), t).expect("grid probabilities");
        let gain_b = engine_payoffs(bob).1 - base.1;
        if gain_b > worst.improvement {
            worst = Deviation {
                player: Player::Bob,
                profile: bob,
                improvement: gain_b,
            };
        }
    }
    VerificationReport {
        candidate,
        candidate_payoffs: base,
        grid,
        tol,
        verified: worst.improvement <= tol,
        worst,
    }
}

/// Equilibria at one entanglement value, ranked by total payoff.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedEquilibria {
    pub x: f64,
    /// Enumerated equilibria sorted by descending `payoff_a + payoff_b`.
    pub ranked: Vec<NashEquilibrium>,
    /// True when the top-ranked equilibrium is not a corner profile.
    pub top_is_noncorner: bool,
}

/// What the best-ranked equilibrium looks like at one end of the sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdObservation {
    pub x: f64,
    pub top_profile: StrategyProfile,
    /// True when the best-ranked equilibrium differs from the classically
    /// dominant mutual-defection profile `(0, 0)`.
    pub departs_from_mutual_defection: bool,
}

/// Exploration report for a Prisoner's Dilemma sweep. The end-point
/// observations are informational: the exploration records how the
/// equilibrium structure departs from the classical dominance picture, but
/// asserts nothing about it.
#[derive(Debug, Clone, PartialEq)]
pub struct PdExploration {
    pub rows: Vec<RankedEquilibria>,
    pub at_lowest_x: Option<PdObservation>,
    pub at_highest_x: Option<PdObservation>,
}

/// Enumerates and ranks the quantum equilibria of a Prisoner's Dilemma over
/// a grid of entanglement values.
pub fn explore_prisoners_dilemma(
    m: &PayoffMatrix,
    xs: &[Entanglement],
) -> Result<PdExploration, Error> {
    ensure_family(
        m,
        GameFamily::PrisonersDilemma,
        "a prisoner's dilemma matrix (b > a > c > d, b + d < 2a)",
    )?;

    let mut rows = Vec::with_capacity(xs.len());
    for &x in xs {
        let mut ranked = nash_equilibria(m, x);
        ranked.sort_by(|lhs, rhs| {
            let sum_l = lhs.payoff_a + lhs.payoff_b;
            let sum_r = rhs.payoff_a + rhs.payoff_b;
            sum_r
                .partial_cmp(&sum_l)
                .unwrap()
                .then(lhs.profile.p().partial_cmp(&rhs.profile.p()).unwrap())
                .then(lhs.profile.q().partial_cmp(&rhs.profile.q()).unwrap())
        });
        let top_is_noncorner = ranked
            .first()
            .is_some_and(|eq| !matches!(eq.kind, crate::classical::EquilibriumKind::Corner));
        rows.push(RankedEquilibria {
            x: x.value(),
            ranked,
            top_is_noncorner,
        });
    }

    let observe = |row: &RankedEquilibria| {
        row.ranked.first().map(|top| PdObservation {
            x: row.x,
            top_profile: top.profile,
            departs_from_mutual_defection: top.profile.p() > 1e-12 || top.profile.q() > 1e-12,
        })
    };
    let at_lowest_x = rows
        .iter()
        .min_by(|l, r| l.x.partial_cmp(&r.x).unwrap())
        .and_then(observe);
    let at_highest_x = rows
        .iter()
        .max_by(|l, r| l.x.partial_cmp(&r.x).unwrap())
        .and_then(observe);

    Ok(PdExploration {
        rows,
        at_lowest_x,
        at_highest_x,
    })
}
