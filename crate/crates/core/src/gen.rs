//! Seeded random instance generation, shared by the CLI `gen` subcommand
//! and the test corpora. All draws come from a ChaCha8 stream, so a seed
//! pins the instance exactly.

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::game::Game;
use crate::reductions::X3cInstance;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random game: weights uniform in 0..=max_weight, quota uniform in
/// 1..=max(1, total weight).
pub fn random_game(rng: &mut impl Rng, players: usize, max_weight: u64) -> Result<Game> {
    if players == 0 {
        return Err(Error::EmptyWeights);
    }
    let weights: Vec<u64> = (0..players).map(|_| rng.gen_range(0..=max_weight)).collect();
    let total: u64 = weights.iter().sum();
    let quota = rng.gen_range(1..=total.max(1));
    Game::from_unsigned(
        weights.into_iter().map(BigUint::from).collect(),
        BigUint::from(quota),
    )
}

/// A random X3C instance: `set_count` 3-element subsets of a universe of
/// size `universe_size` (a multiple of 3), drawn uniformly.
pub fn random_x3c(rng: &mut impl Rng, universe_size: usize, set_count: usize) -> Result<X3cInstance> {
    if !universe_size.is_multiple_of(3) {
        return Err(Error::MalformedX3c(format!(
            "universe size {universe_size} is not a multiple of 3"
        )));
    }
    if universe_size < 3 && set_count > 0 {
        return Err(Error::MalformedX3c(
            "cannot draw 3-element sets from a universe smaller than 3".into(),
        ));
    }
    let mut elements: Vec<usize> = (0..universe_size).collect();
    let sets = (0..set_count)
        .map(|_| {
            elements.partial_shuffle(rng, 3);
            let mut s = [elements[0], elements[1], elements[2]];
            s.sort_unstable();
            s
        })
        .collect();
    X3cInstance::new(universe_size, sets)
}
