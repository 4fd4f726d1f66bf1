//! Definition-literal brute-force reference implementations.
//!
//! These are the ground truth for every optimized path in the crate: the
//! index backends, the reduction chain, and the test suites all check
//! against them. They evaluate the defining sums directly, with no
//! shortcuts, and refuse inputs beyond their validated capacity so a test
//! cannot silently trust an oracle outside its range.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::game::Game;
use crate::reductions::{CountValue, SubsetSumInstance, X3cInstance};

const X3C_UNIVERSE_CAP: usize = 120;
const X3C_SET_CAP: usize = 64;
const SUBSETSUM_CAP: usize = 24;
const ENUM_PLAYER_CAP: usize = 24;
const PERM_PLAYER_CAP: usize = 10;

/// Counts exact covers of an X3C instance by backtracking over the first
/// uncovered element. Duplicate family members count as distinct solutions.
pub fn count_x3c(instance: &X3cInstance) -> Result<CountValue> {
    if instance.universe_size() > X3C_UNIVERSE_CAP || instance.sets().len() > X3C_SET_CAP {
        return Err(Error::capacity(format!(
            "X3C oracle handles universe <= {X3C_UNIVERSE_CAP} and at most {X3C_SET_CAP} sets"
        )));
    }
    let full: u128 = if instance.universe_size() == 128 {
        u128::MAX
    } else {
        (1u128 << instance.universe_size()) - 1
    };
    let masks: Vec<u128> = instance
        .sets()
        .iter()
        .map(|s| s.iter().fold(0u128, |m, &e| m | 1 << e))
        .collect();
    // element -> sets containing it
    let mut by_element = vec![Vec::new(); instance.universe_size()];
    for (i, s) in instance.sets().iter().enumerate() {
        for &e in s {
            by_element[e].push(i);
        }
    }
    fn recurse(covered: u128, full: u128, masks: &[u128], by_element: &[Vec<usize>]) -> u128 {
        if covered == full {
            return 1;
        }
        let next = (!covered & full).trailing_zeros() as usize;
        let mut total: u128 = 0;
        for &i in &by_element[next] {
            if masks[i] & covered == 0 {
                total += recurse(covered | masks[i], full, masks, by_element);
            }
        }
        total
    }
    Ok(CountValue::from(BigUint::from(recurse(0, full, &masks, &by_element))))
}

/// Counts subsets summing to the target by exhaustive enumeration.
/// Positions are distinct even when values repeat; the empty subset sums
/// to 0.
pub fn count_subsetsum(instance: &SubsetSumInstance) -> Result<CountValue> {
    let m = instance.values().len();
    if m > SUBSETSUM_CAP {
        return Err(Error::capacity(format!(
            "subset-sum oracle handles at most {SUBSETSUM_CAP} values"
        )));
    }
    let mut count: u64 = 0;
    for mask in 0u64..(1u64 << m) {
        let mut sum = BigUint::zero();
        for (j, v) in instance.values().iter().enumerate() {
            if mask >> j & 1 == 1 {
                sum += v;
            }
        }
        if &sum == instance.target() {
            count += 1;
        }
    }
    Ok(CountValue::from(count))
}

fn check_enum_capacity(game: &Game, player: usize) -> Result<()> {
    game.check_player(player)?;
    let n = game.player_count();
    if n > ENUM_PLAYER_CAP {
        return Err(Error::capacity(format!(
            "enumeration oracle handles at most {ENUM_PLAYER_CAP} players, game has {n}"
        )));
    }
    Ok(())
}

/// Literal evaluation of the raw Banzhaf sum over all subsets of the other
/// players.
pub fn banzhaf_raw_enum(game: &Game, player: usize) -> Result<BigUint> {
    check_enum_capacity(game, player)?;
    let (swings, _) = swing_counts_by_size(game, player);
    Ok(swings.into_iter().sum())
}

/// Literal evaluation of the raw Shapley-Shubik sum over all subsets of the
/// other players, weighted by `|S|!(n-|S|-1)!`.
pub fn shapley_raw_enum(game: &Game, player: usize) -> Result<BigUint> {
    check_enum_capacity(game, player)?;
    let n = game.player_count();
    let (swings, _) = swing_counts_by_size(game, player);
    let mut raw = BigUint::zero();
    for (s, count) in swings.into_iter().enumerate() {
        raw += count * factorial(s) * factorial(n - s - 1);
    }
    Ok(raw)
}

/// Counts permutations in which the player is pivotal. Coincides with
/// `shapley_raw_enum` by the permutation characterization of the index.
pub fn shapley_raw_perm(game: &Game, player: usize) -> Result<BigUint> {
    game.check_player(player)?;
    let n = game.player_count();
    if n > PERM_PLAYER_CAP {
        return Err(Error::capacity(format!(
            "permutation oracle handles at most {PERM_PLAYER_CAP} players, game has {n}"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut count: u64 = 0;
    permute(&mut order, 0, &mut |perm| {
        let mut sum = BigUint::zero();
        for &p in perm {
            let before = sum >= *game.quota();
            sum += &game.weights()[p];
            if !before && sum >= *game.quota() {
                if p == player - 1 {
                    count += 1;
                }
                break;
            }
        }
    });
    Ok(BigUint::from(count))
}

fn permute(order: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == order.len() {
        visit(order);
        return;
    }
    for i in k..order.len() {
        order.swap(k, i);
        permute(order, k + 1, visit);
        order.swap(k, i);
    }
}

/// For each subset size s, how many subsets S of the other players have
/// `succ(S + {player}) - succ(S) = 1`. Shared by both enumeration oracles.
fn swing_counts_by_size(game: &Game, player: usize) -> (Vec<BigUint>, usize) {
    let n = game.player_count();
    let others: Vec<&BigUint> = game
        .weights()
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != player - 1)
        .map(|(_, w)| w)
        .collect();
    let w_i = &game.weights()[player - 1];
    let q = game.quota();
    let mut swings = vec![BigUint::zero(); n];
    for mask in 0u64..(1u64 << others.len()) {
        let mut sum = BigUint::zero();
        for (j, w) in others.iter().enumerate() {
            if mask >> j & 1 == 1 {
                sum += *w;
            }
        }
        // swing: S fails but S + {player} succeeds
        if sum < *q && &sum + w_i >= *q {
            swings[mask.count_ones() as usize] += BigUint::one();
        }
    }
    (swings, n)
}

pub(crate) fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}
