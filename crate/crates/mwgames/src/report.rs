//! JSON report assembly for the CLI: game analysis at a fixed entanglement
//! and the composite verification run (engine-vs-closed-form agreement,
//! brute-force equilibrium checks, density-matrix physicality).

use serde::Serialize;

use crate::analysis::{
    brute_force_verify, classify_regime, explore_prisoners_dilemma, nash_equilibria, thresholds,
    Deviation, RegimeClassification, Thresholds,
};
use crate::classical::{ContinuumAxis, EquilibriumKind, NashEquilibrium};
use crate::error::Error;
use crate::game::{GameFamily, PayoffMatrix, StrategyProfile};
use crate::quantum::{
    engine_closed_form_deviation, evolve, initial_density, payoff_operators, Entanglement,
    InitialState,
};
use crate::{PSD_SLACK, TOL_HERMITIAN, TOL_TRACE};

/// Version tag present in every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

/// Deterministic amplitude phase pairs used by the verification run; the
/// first entry is the phase-free state, the rest exercise phase invariance.
pub const PHASE_PAIRS: [(f64, f64); 4] = [
    (0.0, 0.0),
    (0.9158797, 2.4871934),
    (3.3306689, 0.5772157),
    (5.0396842, 4.4428829),
];

#[derive(Debug, Clone, Serialize)]
pub struct EquilibriumEntry {
    pub p: f64,
    pub q: f64,
    pub payoff_a: f64,
    pub payoff_b: f64,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub continuum_axis: Option<ContinuumAxis>,
}

impl From<&NashEquilibrium> for EquilibriumEntry {
    fn from(eq: &NashEquilibrium) -> Self {
        let (kind, continuum_axis) = match eq.kind {
            EquilibriumKind::Corner => ("corner", None),
            EquilibriumKind::Interior => ("interior", None),
            EquilibriumKind::Continuum(axis) => ("continuum", Some(axis)),
        };
        Self {
            p: eq.profile.p(),
            q: eq.profile.q(),
            payoff_a: eq.payoff_a,
            payoff_b: eq.payoff_b,
            kind,
            continuum_axis,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EquilibriumCheck {
    pub p: f64,
    pub q: f64,
    pub worst_player: &'static str,
    pub worst_deviation_p: f64,
    pub worst_deviation_q: f64,
    pub worst_improvement: f64,
    pub verified: bool,
}

fn equilibrium_check(
    m: &PayoffMatrix,
    x: Entanglement,
    eq: &NashEquilibrium,
    grid: usize,
    tol: f64,
) -> EquilibriumCheck {
    let report = brute_force_verify(m, x, eq.profile, grid, tol);
    let Deviation {
        player,
        profile,
        improvement,
    } = report.worst;
    EquilibriumCheck {
        p: eq.profile.p(),
        q: eq.profile.q(),
        worst_player: match player {
            crate::analysis::Player::Alice => "alice",
            crate::analysis::Player::Bob => "bob",
        },
        worst_deviation_p: profile.p(),
        worst_deviation_q: profile.q(),
        worst_improvement: improvement,
        verified: report.verified,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationSummary {
    pub grid: usize,
    pub tol: f64,
    pub checks: Vec<EquilibriumCheck>,
    pub all_verified: bool,
}

fn verification_summary(
    m: &PayoffMatrix,
    x: Entanglement,
    equilibria: &[NashEquilibrium],
    grid: usize,
    tol: f64,
) -> VerificationSummary {
    let checks: Vec<EquilibriumCheck> = equilibria
        .iter()
        .map(|eq| equilibrium_check(m, x, eq, grid, tol))
        .collect();
    let all_verified = checks.iter().all(|c| c.verified);
    VerificationSummary {
        grid,
        tol,
        checks,
        all_verified,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PdRankedRow {
    pub x: f64,
    pub ranked: Vec<EquilibriumEntry>,
    pub top_is_noncorner: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PdObservationEntry {
    pub x: f64,
    pub top_p: f64,
    pub top_q: f64,
    pub departs_from_mutual_defection: bool,
}

/// Ranking of PD equilibria by payoff sum over a default entanglement grid,
/// with end-point observations (informational, not asserted).
#[derive(Debug, Clone, Serialize)]
pub struct PdExplorationEntry {
    pub note: &'static str,
    pub rows: Vec<PdRankedRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at_lowest_x: Option<PdObservationEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at_highest_x: Option<PdObservationEntry>,
}

fn pd_exploration_entry(m: &PayoffMatrix) -> Result<PdExplorationEntry, Error> {
    let xs: Vec<Entanglement> = (0..=10)
        .map(|k| Entanglement::new(k as f64 / 10.0).expect("grid point in range"))
        .collect();
    let exploration = explore_prisoners_dilemma(m, &xs)?;
    let observe = |obs: crate::analysis::PdObservation| PdObservationEntry {
        x: obs.x,
        top_p: obs.top_profile.p(),
        top_q: obs.top_profile.q(),
        departs_from_mutual_defection: obs.departs_from_mutual_defection,
    };
    Ok(PdExplorationEntry {
        note: "observational ranking by payoff sum; no dominance claim is asserted",
        rows: exploration
            .rows
            .iter()
            .map(|row| PdRankedRow {
                x: row.x,
                ranked: row.ranked.iter().map(EquilibriumEntry::from).collect(),
                top_is_noncorner: row.top_is_noncorner,
            })
            .collect(),
        at_lowest_x: exploration.at_lowest_x.map(observe),
        at_highest_x: exploration.at_highest_x.map(observe),
    })
}

/// The `analyze` report: classification, equilibria with payoffs,
/// stag-hunt thresholds and regime when applicable, and the brute-force
/// verification summary.
#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub game: PayoffMatrix,
    pub family: GameFamily,
    pub x: f64,
    pub equilibria: Vec<EquilibriumEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thresholds: Option<Thresholds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<RegimeClassification>,
    pub verification: VerificationSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd_exploration: Option<PdExplorationEntry>,
}

pub fn analyze(
    m: &PayoffMatrix,
    name: Option<String>,
    x: Entanglement,
    grid: usize,
    tol: f64,
) -> Result<AnalyzeReport, Error> {
    if grid < 2 {
        return Err(Error::GridTooSmall {
            name: "grid",
            value: grid,
            min: 2,
        });
    }
    let family = m.family();
    let equilibria = nash_equilibria(m, x);
    let verification = verification_summary(m, x, &equilibria, grid, tol);

    let (thresholds_entry, regime_entry) = if family == GameFamily::StagHunt {
        (
            Some(thresholds(m)?),
            Some(classify_regime(m, x, crate::TOL_REGIME)?),
        )
    } else {
        (None, None)
    };
    let pd_entry = if family == GameFamily::PrisonersDilemma {
        Some(pd_exploration_entry(m)?)
    } else {
        None
    };

    Ok(AnalyzeReport {
        schema_version: SCHEMA_VERSION,
        name,
        game: *m,
        family,
        x: x.value(),
        equilibria: equilibria.iter().map(EquilibriumEntry::from).collect(),
        thresholds: thresholds_entry,
        regime: regime_entry,
        verification,
        pd_exploration: pd_entry,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormCheck {
    pub grid: usize,
    pub phase_pairs: usize,
    pub max_deviation: f64,
    pub tol: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityCheck {
    pub cases: usize,
    pub max_hermiticity_error: f64,
    pub max_trace_error: f64,
    pub min_eigenvalue: f64,
    pub hermiticity_tol: f64,
    pub trace_tol: f64,
    pub eigenvalue_slack: f64,
    pub passed: bool,
}

/// The `verify` report: every oracle check at one entanglement value.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub game: PayoffMatrix,
    pub family: GameFamily,
    pub x: f64,
    pub closed_form_vs_engine: ClosedFormCheck,
    pub equilibria: VerificationSummary,
    pub density: DensityCheck,
    pub passed: bool,
}

pub fn verify(
    m: &PayoffMatrix,
    name: Option<String>,
    x: Entanglement,
    grid: usize,
    tol: f64,
) -> Result<VerifyReport, Error> {
    if grid < 2 {
        return Err(Error::GridTooSmall {
            name: "grid",
            value: grid,
            min: 2,
        });
    }

    let ops = payoff_operators(m);
    let max_deviation = engine_closed_form_deviation(m, &ops, x, grid, &PHASE_PAIRS);
    let closed_form_vs_engine = ClosedFormCheck {
        grid,
        phase_pairs: PHASE_PAIRS.len(),
        max_deviation,
        tol,
        passed: max_deviation <= tol,
    };

    let equilibria = nash_equilibria(m, x);
    let summary = verification_summary(m, x, &equilibria, grid, tol);

    let density = density_check(x, grid);

    let passed = closed_form_vs_engine.passed && summary.all_verified && density.passed;
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        name,
        game: *m,
        family: m.family(),
        x: x.value(),
        closed_form_vs_engine,
        equilibria: summary,
        density,
        passed,
    })
}

fn density_check(x: Entanglement, grid: usize) -> DensityCheck {
    let mut max_hermiticity_error: f64 = 0.0;
    let mut max_trace_error: f64 = 0.0;
    let mut min_eigenvalue = f64::INFINITY;
    let mut cases = 0;
    for &(phase_cc, phase_dd) in &PHASE_PAIRS {
        let rho0 = initial_density(&InitialState::with_phases(x, phase_cc, phase_dd));
        for i in 0..grid {
            for j in 0..grid {
                let p = i as f64 / (grid - 1) as f64;
                let q = j as f64 / (grid - 1) as f64;
                let rho = evolve(
                    &rho0,
                    StrategyProfile::new(p, q).expect("grid probabilities"),
                );
                max_hermiticity_error = max_hermiticity_error.max(rho.hermiticity_error());
                max_trace_error = max_trace_error.max(rho.trace_error());
                min_eigenvalue = min_eigenvalue.min(rho.min_eigenvalue());
                cases += 1;
            }
        }
    }
    DensityCheck {
        cases,
        max_hermiticity_error,
        max_trace_error,
        min_eigenvalue,
        hermiticity_tol: TOL_HERMITIAN,
        trace_tol: TOL_TRACE,
        eigenvalue_slack: PSD_SLACK,
        passed: max_hermiticity_error <= TOL_HERMITIAN
            && max_trace_error <= TOL_TRACE
            && min_eigenvalue >= -PSD_SLACK,
    }
}
