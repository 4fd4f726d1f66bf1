//! The power-comparison decision problem and the coalition-merge test.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::game::Game;
use crate::indices::{index_value, IndexKind, IndexValue, Strategy};

/// Outcome of an exact comparison. Carries both values so callers can
/// distinguish a tie from a strict loss.
#[derive(Debug, Clone)]
pub struct ComparisonVerdict {
    pub left_value: IndexValue,
    pub right_value: IndexValue,
    pub strictly_greater: bool,
}

impl ComparisonVerdict {
    fn from_values(left_value: IndexValue, right_value: IndexValue) -> ComparisonVerdict {
        let strictly_greater = left_value.normalized > right_value.normalized;
        ComparisonVerdict {
            left_value,
            right_value,
            strictly_greater,
        }
    }
}

impl Serialize for ComparisonVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ComparisonVerdict", 3)?;
        s.serialize_field("left", &self.left_value)?;
        s.serialize_field("right", &self.right_value)?;
        s.serialize_field("strictly_greater", &self.strictly_greater)?;
        s.end()
    }
}

/// Decides whether player `i`'s index value is strictly higher in the first
/// game. Games of unequal size are first equalized by appending weight-0
/// players to the smaller one, which leaves the original players'
/// normalized values unchanged; with equal player counts the scaling factor
/// coincides, so this is also a raw-value comparison. Ties are rejected.
pub fn power_compare(
    left: &Game,
    right: &Game,
    player: usize,
    kind: IndexKind,
    strategy: Strategy,
) -> Result<ComparisonVerdict> {
    let n = left.player_count().max(right.player_count());
    let left = pad_to(left, n);
    let right = pad_to(right, n);
    left.check_player(player)?;
    let lv = index_value(&left, player, kind, strategy)?;
    let rv = index_value(&right, player, kind, strategy)?;
    Ok(ComparisonVerdict::from_values(lv, rv))
}

fn pad_to(game: &Game, n: usize) -> Game {
    if game.player_count() < n {
        game.pad_with_dummies(n - game.player_count())
    } else {
        game.clone()
    }
}

/// Compares raw index values of designated players across two games.
///
/// For Banzhaf this reproduces the quota-padding construction: the smaller
/// game is padded with weight-q players (raw-Banzhaf-preserving), each
/// designated player is moved to the front, and the raw values of player 1
/// are compared. For Shapley-Shubik there is no raw-value-preserving
/// padding of this kind, so the raw values are compared as given, at the
/// players' original positions.
pub fn compare_raw(
    left: &Game,
    left_player: usize,
    right: &Game,
    right_player: usize,
    kind: IndexKind,
    strategy: Strategy,
) -> Result<ComparisonVerdict> {
    left.check_player(left_player)?;
    right.check_player(right_player)?;
    match kind {
        IndexKind::Banzhaf => {
            let n = left.player_count().max(right.player_count());
            let left = left
                .pad_with_quota_players(n - left.player_count())
                .move_player_to_front(left_player)?;
            let right = right
                .pad_with_quota_players(n - right.player_count())
                .move_player_to_front(right_player)?;
            let lv = index_value(&left, 1, kind, strategy)?;
            let rv = index_value(&right, 1, kind, strategy)?;
            Ok(ComparisonVerdict {
                strictly_greater: lv.raw > rv.raw,
                left_value: lv,
                right_value: rv,
            })
        }
        IndexKind::Shapley => {
            let lv = index_value(left, left_player, kind, strategy)?;
            let rv = index_value(right, right_player, kind, strategy)?;
            Ok(ComparisonVerdict {
                strictly_greater: lv.raw > rv.raw,
                left_value: lv,
                right_value: rv,
            })
        }
    }
}

/// Is it profitable for players 1 and 2 to merge? Forms the game
/// `(w1+w2, w3, ..., wn; q)` and tests whether the merged bloc's
/// Shapley-Shubik index strictly exceeds the sum of the two original
/// indices, all in exact rationals.
pub fn merge_profitability(game: &Game, strategy: Strategy) -> Result<ComparisonVerdict> {
    let n = game.player_count();
    if n < 2 {
        return Err(Error::TooFewPlayers {
            players: n,
            required: 2,
        });
    }
    let mut weights = game.weights().to_vec();
    let w2 = weights.remove(1);
    weights[0] += w2;
    let merged = Game::from_unsigned(weights, game.quota().clone())?;

    let merged_value = index_value(&merged, 1, IndexKind::Shapley, strategy)?;
    let first = index_value(game, 1, IndexKind::Shapley, strategy)?;
    let second = index_value(game, 2, IndexKind::Shapley, strategy)?;
    // SS(G,1) + SS(G,2) = (raw1 + raw2) / n!
    let scale = IndexKind::Shapley.scale(n);
    let raw_sum = &first.raw + &second.raw;
    let right_value = IndexValue {
        normalized: BigRational::new(BigInt::from(raw_sum.clone()), BigInt::from(scale.clone())),
        raw: raw_sum,
        scale,
    };
    Ok(ComparisonVerdict::from_values(merged_value, right_value))
}
