//! Payoff matrices of 2x2 symmetric games, family classification by payoff
//! ordering, and the canonical normalized exemplars.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Payoffs of a symmetric 2x2 bimatrix game, seen from the row player.
///
/// With moves C (cooperate) and D (defect), the row player (Alice) receives
/// `a` at (C, C), `d` at (C, D), `b` at (D, C) and `c` at (D, D); the column
/// player (Bob) receives the mirrored values, so the game is symmetric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PayoffMatrix {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl PayoffMatrix {
    /// Builds a matrix after checking that every payoff is finite.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self, Error> {
        if [a, b, c, d].iter().all(|v| v.is_finite()) {
            Ok(Self { a, b, c, d })
        } else {
            Err(Error::NonFinitePayoff)
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// All four payoffs as `(a, b, c, d)`.
    pub fn values(&self) -> (f64, f64, f64, f64) {
        (self.a, self.b, self.c, self.d)
    }

    /// The matrix with `b` and `d` exchanged.
    ///
    /// Swapping the off-diagonal payoffs exchanges the players' roles:
    /// Alice's payoff at `(p, q)` equals Bob's at `(q, p)` in the swapped
    /// game.
    pub fn swap_bd(&self) -> Self {
        Self {
            a: self.a,
            b: self.d,
            c: self.c,
            d: self.b,
        }
    }

    /// Classifies the game by the strict ordering of its payoffs.
    ///
    /// Classification is total: any tie among the four values, and any
    /// ordering outside the five recognized ones, yields
    /// [`GameFamily::Other`]. The Prisoner's Dilemma additionally requires
    /// `b + d < 2a`.
    pub fn family(&self) -> GameFamily {
        let Self { a, b, c, d } = *self;
        if a > b && b > c && c > d {
            GameFamily::StagHunt
        } else if b > a && a > d && d > c {
            GameFamily::Chicken
        } else if b > d && d > a && a > c {
            GameFamily::Leader
        } else if d > b && b > a && a > c {
            GameFamily::SecretMeeting
        } else if b > a && a > c && c > d && b + d < 2.0 * a {
            GameFamily::PrisonersDilemma
        } else {
            GameFamily::Other
        }
    }
}

/// The recognized payoff orderings of symmetric 2x2 games.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GameFamily {
    /// `a > b > c > d`: mutual cooperation dominates, defection is safer.
    StagHunt,
    /// `b > a > d > c`.
    Chicken,
    /// `b > d > a > c`.
    Leader,
    /// `d > b > a > c`.
    SecretMeeting,
    /// `b > a > c > d` with `b + d < 2a`.
    PrisonersDilemma,
    /// Any tie or unrecognized ordering.
    Other,
}

impl GameFamily {
    /// The canonical matrix with payoffs `{1, 2/3, 1/3, 0}` assigned in the
    /// family's order of magnitude; the Prisoner's Dilemma keeps its
    /// conventional `(a, b, c, d) = (5/6, 1, 1/3, 0)`.
    pub fn exemplar(self) -> Result<PayoffMatrix, Error> {
        const HI: f64 = 1.0;
        const MID_HI: f64 = 2.0 / 3.0;
        const MID_LO: f64 = 1.0 / 3.0;
        const LO: f64 = 0.0;
        match self {
            GameFamily::StagHunt => PayoffMatrix::new(HI, MID_HI, MID_LO, LO),
            GameFamily::Chicken => PayoffMatrix::new(MID_HI, HI, LO, MID_LO),
            GameFamily::Leader => PayoffMatrix::new(MID_LO, HI, LO, MID_HI),
            GameFamily::SecretMeeting => PayoffMatrix::new(MID_LO, MID_HI, LO, HI),
            GameFamily::PrisonersDilemma => PayoffMatrix::new(5.0 / 6.0, 1.0, 1.0 / 3.0, 0.0),
            GameFamily::Other => Err(Error::NoExemplar(self)),
        }
    }
}

impl fmt::Display for GameFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GameFamily::StagHunt => "stag_hunt",
            GameFamily::Chicken => "chicken",
            GameFamily::Leader => "leader",
            GameFamily::SecretMeeting => "secret_meeting",
            GameFamily::PrisonersDilemma => "prisoners_dilemma",
            GameFamily::Other => "other",
        };
        f.write_str(name)
    }
}

/// A pair of mixing probabilities: `p` is the chance Alice applies the
/// identity tactic (rather than the flip), `q` the same for Bob.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StrategyProfile {
    p: f64,
    q: f64,
}

impl StrategyProfile {
    pub fn new(p: f64, q: f64) -> Result<Self, Error> {
        let check = |name: &'static str, value: f64| {
            if (0.0..=1.0).contains(&value) {
                Ok(())
            } else {
                Err(Error::InvalidProbability { name, value })
            }
        };
        check("p", p)?;
        check("q", q)?;
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// The profile with the players' probabilities exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            p: self.q,
            q: self.p,
        }
    }
}

impl fmt::Display for StrategyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p = {}, q = {})", self.p, self.q)
    }
}

/// On-disk game description.
///
/// The JSON document carries only the four payoffs and an optional display
/// name; the family is always recomputed from the values, never read from
/// the file.
#[derive(Debug, Clone, Deserialize)]
pub struct GameDefinition {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    #[serde(default)]
    pub name: Option<String>,
}

impl GameDefinition {
    pub fn matrix(&self) -> Result<PayoffMatrix, Error> {
        PayoffMatrix::new(self.a, self.b, self.c, self.d)
    }
}
