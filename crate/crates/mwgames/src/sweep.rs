//! Entanglement sweeps emitting plot-ready CSV: the stag-hunt equilibrium
//! curves with their regime column, the corner-pair curves of the other
//! ordered families, candidate curves for unclassified games, and the
//! three-family comparison table.

use std::io::{self, Write};

use crate::analysis::{
    classify_regime, family_table, interior_probability, nash_equilibria, stag_hunt_payoffs,
    BestResponseBracket,
};
use crate::classical::EquilibriumKind;
use crate::error::Error;
use crate::game::{GameFamily, PayoffMatrix, StrategyProfile};
use crate::quantum::{closed_form_payoffs, Entanglement};
use crate::TOL_REGIME;

/// One row of a stag-hunt sweep: the three equilibrium payoffs, the
/// interior probability and the payoff-ordering regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StagHuntRow {
    pub x: f64,
    pub p11: f64,
    pub p00: f64,
    pub pmq: f64,
    pub m_interior: f64,
    pub regime: u8,
}

/// One row for the Chicken/Leader/Secret Meeting families: payoff pairs at
/// the two corner equilibria and at the interior mix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerPairRow {
    pub x: f64,
    pub pay_10: (f64, f64),
    pub pay_01: (f64, f64),
    pub pay_interior: (f64, f64),
    pub m_interior: f64,
}

/// One row for Prisoner's Dilemma or unclassified games: candidate-profile
/// payoff curves plus the size of the equilibrium set at that `X`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidateRow {
    pub x: f64,
    pub p11: f64,
    pub p00: f64,
    /// Interior equilibrium payoff, when the bracket zero is interior.
    pub interior: Option<f64>,
    pub m_interior: Option<f64>,
    pub n_equilibria: usize,
}

/// Sweep data, shaped by the game family.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepTable {
    StagHunt(Vec<StagHuntRow>),
    CornerPair(Vec<CornerPairRow>),
    Candidates(Vec<CandidateRow>),
}

impl SweepTable {
    pub fn len(&self) -> usize {
        match self {
            SweepTable::StagHunt(rows) => rows.len(),
            SweepTable::CornerPair(rows) => rows.len(),
            SweepTable::Candidates(rows) => rows.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn grid(resolution: usize) -> impl Iterator<Item = f64> {
    (0..=resolution).map(move |k| k as f64 / resolution as f64)
}

/// Sweeps the equilibrium payoffs of `m` over `resolution + 1` evenly
/// spaced entanglement values in `[0, 1]`.
pub fn sweep(m: &PayoffMatrix, resolution: usize) -> Result<SweepTable, Error> {
    if resolution < 2 {
        return Err(Error::GridTooSmall {
            name: "resolution",
            value: resolution,
            min: 2,
        });
    }
    match m.family() {
        GameFamily::StagHunt => {
            let mut rows = Vec::with_capacity(resolution + 1);
            for xv in grid(resolution) {
                let x = Entanglement::new(xv).expect("grid point in range");
                let pays = stag_hunt_payoffs(m, x)?;
                rows.push(StagHuntRow {
                    x: xv,
                    p11: pays.p11,
                    p00: pays.p00,
                    pmq: pays.pmq,
                    m_interior: interior_probability(m, x)?,
                    regime: classify_regime(m, x, TOL_REGIME)?.regime,
                });
            }
            Ok(SweepTable::StagHunt(rows))
        }
        GameFamily::Chicken | GameFamily::Leader | GameFamily::SecretMeeting => {
            let mut rows = Vec::with_capacity(resolution + 1);
            for xv in grid(resolution) {
                let x = Entanglement::new(xv).expect("grid point in range");
                let row = corner_pair_row(m, x);
                rows.push(row);
            }
            Ok(SweepTable::CornerPair(rows))
        }
        GameFamily::PrisonersDilemma | GameFamily::Other => {
            let mut rows = Vec::with_capacity(resolution + 1);
            for xv in grid(resolution) {
                let x = Entanglement::new(xv).expect("grid point in range");
                rows.push(candidate_row(m, x));
            }
            Ok(SweepTable::Candidates(rows))
        }
    }
}

fn corner_pair_row(m: &PayoffMatrix, x: Entanglement) -> CornerPairRow {
    let at = |p: f64, q: f64| {
        closed_form_payoffs(m, x, StrategyProfile::new(p, q).expect("probabilities"))
    };
    let root = BestResponseBracket::new(m, x)
        .interior_root()
        .expect("the chicken/leader/secret-meeting orderings keep the bracket zero interior");
    CornerPairRow {
        x: x.value(),
        pay_10: at(1.0, 0.0),
        pay_01: at(0.0, 1.0),
        pay_interior: at(root, root),
        m_interior: root,
    }
}

fn candidate_row(m: &PayoffMatrix, x: Entanglement) -> CandidateRow {
    let at = |p: f64, q: f64| {
        closed_form_payoffs(m, x, StrategyProfile::new(p, q).expect("probabilities")).0
    };
    let equilibria = nash_equilibria(m, x);
    let interior = equilibria
        .iter()
        .find(|eq| matches!(eq.kind, EquilibriumKind::Interior));
    CandidateRow {
        x: x.value(),
        p11: at(1.0, 1.0),
        p00: at(0.0, 0.0),
        interior: interior.map(|eq| eq.payoff_a),
        m_interior: interior.map(|eq| eq.profile.p()),
        n_equilibria: equilibria.len(),
    }
}

/// One row of the three-family comparison table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyRow {
    pub family: GameFamily,
    pub x: f64,
    pub pay_10: (f64, f64),
    pub pay_01: (f64, f64),
    pub pay_interior: (f64, f64),
    pub m_interior: f64,
}

/// Equilibrium payoffs of the Chicken, Leader and Secret Meeting exemplars
/// over `resolution + 1` entanglement values.
pub fn families_table(resolution: usize) -> Result<Vec<FamilyRow>, Error> {
    if resolution < 2 {
        return Err(Error::GridTooSmall {
            name: "resolution",
            value: resolution,
            min: 2,
        });
    }
    let mut rows = Vec::new();
    for family in [GameFamily::Chicken, GameFamily::Leader, GameFamily::SecretMeeting] {
        for xv in grid(resolution) {
            let x = Entanglement::new(xv).expect("grid point in range");
            let entry = family_table(family, x)?;
            rows.push(FamilyRow {
                family,
                x: xv,
                pay_10: entry.pay_10,
                pay_01: entry.pay_01,
                pay_interior: entry.pay_interior,
                m_interior: entry.interior_probability,
            });
        }
    }
    Ok(rows)
}

/// Formats a value with 12 significant digits, avoiding scientific notation
/// for magnitudes in `[1e-4, 1e6)`. Deterministic and locale-independent.
pub fn format_number(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    let magnitude = value.abs();
    if (1e-4..1e6).contains(&magnitude) {
        let mut scaled = magnitude;
        let mut exponent: i32 = 0;
        while scaled >= 10.0 {
            scaled /= 10.0;
            exponent += 1;
        }
        while scaled < 1.0 {
            scaled *= 10.0;
            exponent -= 1;
        }
        let decimals = (11 - exponent).max(0) as usize;
        format!("{value:.decimals$}")
    } else {
        format!("{value:.11e}")
    }
}

fn csv_row(fields: &[String]) -> String {
    fields.join(",")
}

/// Writes the sweep as CSV with a header line; columns depend on the family
/// shape. Lines end with `\n`.
pub fn write_sweep_csv<W: Write>(table: &SweepTable, out: &mut W) -> io::Result<()> {
    match table {
        SweepTable::StagHunt(rows) => {
            writeln!(out, "X,P11,P00,Pmq,m_interior,regime")?;
            for r in rows {
                writeln!(
                    out,
                    "{}",
                    csv_row(&[
                        format_number(r.x),
                        format_number(r.p11),
                        format_number(r.p00),
                        format_number(r.pmq),
                        format_number(r.m_interior),
                        r.regime.to_string(),
                    ])
                )?;
            }
        }
        SweepTable::CornerPair(rows) => {
            writeln!(out, "X,P10_A,P10_B,P01_A,P01_B,Pmm_A,Pmm_B,m_interior")?;
            for r in rows {
                writeln!(
                    out,
                    "{}",
                    csv_row(&[
                        format_number(r.x),
                        format_number(r.pay_10.0),
                        format_number(r.pay_10.1),
                        format_number(r.pay_01.0),
                        format_number(r.pay_01.1),
                        format_number(r.pay_interior.0),
                        format_number(r.pay_interior.1),
                        format_number(r.m_interior),
                    ])
                )?;
            }
        }
        SweepTable::Candidates(rows) => {
            writeln!(out, "X,P11,P00,Pint,m_interior,n_equilibria")?;
            for r in rows {
                writeln!(
                    out,
                    "{}",
                    csv_row(&[
                        format_number(r.x),
                        format_number(r.p11),
                        format_number(r.p00),
                        r.interior.map(format_number).unwrap_or_default(),
                        r.m_interior.map(format_number).unwrap_or_default(),
                        r.n_equilibria.to_string(),
                    ])
                )?;
            }
        }
    }
    Ok(())
}

/// Writes the three-family comparison table as CSV.
pub fn write_families_csv<W: Write>(rows: &[FamilyRow], out: &mut W) -> io::Result<()> {
    writeln!(
        out,
        "family,X,P10_A,P10_B,P01_A,P01_B,Pmm_A,Pmm_B,m_interior"
    )?;
    for r in rows {
        writeln!(
            out,
            "{}",
            csv_row(&[
                r.family.to_string(),
                format_number(r.x),
                format_number(r.pay_10.0),
                format_number(r.pay_10.1),
                format_number(r.pay_01.0),
                format_number(r.pay_01.1),
                format_number(r.pay_interior.0),
                format_number(r.pay_interior.1),
                format_number(r.m_interior),
            ])
        )?;
    }
    Ok(())
}
