//! Shared randomized-input generators for the integration suites.

use mwgames::{Entanglement, PayoffMatrix, StrategyProfile};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Any finite payoff matrix with values in [-2, 2].
pub fn random_matrix(rng: &mut ChaCha8Rng) -> PayoffMatrix {
    PayoffMatrix::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
    .expect("finite values")
}

/// A stag-hunt matrix (a > b > c > d) whose adjacent payoff gaps are at
/// least 0.03, keeping every denominator well conditioned.
pub fn random_stag_hunt(rng: &mut ChaCha8Rng) -> PayoffMatrix {
    loop {
        let mut v = [
            rng.gen_range(0.0..1.5),
            rng.gen_range(0.0..1.5),
            rng.gen_range(0.0..1.5),
            rng.gen_range(0.0..1.5),
        ];
        v.sort_by(|x, y| y.partial_cmp(x).unwrap());
        if v.windows(2).all(|w| w[0] - w[1] > 0.03) {
            return PayoffMatrix::new(v[0], v[1], v[2], v[3]).expect("finite values");
        }
    }
}

pub fn random_profile(rng: &mut ChaCha8Rng) -> StrategyProfile {
    StrategyProfile::new(rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0))
        .expect("sampled probabilities")
}

pub fn random_entanglement(rng: &mut ChaCha8Rng) -> Entanglement {
    Entanglement::new(rng.gen_range(0.0..=1.0)).expect("sampled in range")
}

pub fn random_phases(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let tau = std::f64::consts::TAU;
    (rng.gen_range(0.0..tau), rng.gen_range(0.0..tau))
}
