//! Weighted voting games and coalitions.
//!
//! A game is a sequence of nonnegative integer weights together with a quota.
//! A coalition succeeds when its total weight reaches the quota. Player
//! identity is positional: player `i` (1-based everywhere in the public
//! interface) owns the `i`'th weight; internal storage is 0-based.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json::FlexInt;

/// Widest game for which bitset coalitions and subset enumeration are
/// available. Wider games are accepted but enumeration paths refuse them.
pub const COALITION_BIT_CAP: usize = 64;

/// A weighted voting game `(w_1, ..., w_n; q)`.
///
/// Immutable after construction. A quota of 0 is permitted: every coalition
/// (including the empty one) then succeeds and no player is ever critical,
/// so all power indices are 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    weights: Vec<BigUint>,
    quota: BigUint,
}

impl Game {
    /// Validating constructor. Weights are taken signed so that malformed
    /// input is rejected here rather than at parse time.
    pub fn new(weights: Vec<BigInt>, quota: BigInt) -> Result<Game> {
        if weights.is_empty() {
            return Err(Error::EmptyWeights);
        }
        let mut checked = Vec::with_capacity(weights.len());
        for (idx, w) in weights.into_iter().enumerate() {
            match w.to_biguint() {
                Some(w) => checked.push(w),
                None => return Err(Error::NegativeWeight { player: idx + 1 }),
            }
        }
        let quota = quota.to_biguint().ok_or(Error::NegativeQuota)?;
        Ok(Game {
            weights: checked,
            quota,
        })
    }

    /// Constructor for weights already known to be nonnegative.
    pub fn from_unsigned(weights: Vec<BigUint>, quota: BigUint) -> Result<Game> {
        if weights.is_empty() {
            return Err(Error::EmptyWeights);
        }
        Ok(Game { weights, quota })
    }

    /// Convenience constructor from machine integers, for tests and examples.
    pub fn from_u64(weights: &[u64], quota: u64) -> Game {
        Game {
            weights: weights.iter().map(|&w| BigUint::from(w)).collect(),
            quota: BigUint::from(quota),
        }
    }

    pub fn player_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[BigUint] {
        &self.weights
    }

    pub fn quota(&self) -> &BigUint {
        &self.quota
    }

    /// Weight of player `i` (1-based).
    pub fn weight_of(&self, player: usize) -> Result<&BigUint> {
        self.check_player(player)?;
        Ok(&self.weights[player - 1])
    }

    pub fn check_player(&self, player: usize) -> Result<()> {
        if player == 0 || player > self.weights.len() {
            return Err(Error::PlayerOutOfRange {
                index: player,
                players: self.weights.len(),
            });
        }
        Ok(())
    }

    pub fn total_weight(&self) -> BigUint {
        self.weights.iter().sum()
    }

    /// The success predicate: 1 iff the coalition's total weight is at least
    /// the quota. The empty coalition succeeds exactly when the quota is 0.
    pub fn succ(&self, coalition: &Coalition) -> bool {
        let mut sum = BigUint::zero();
        for i in coalition.iter() {
            sum += &self.weights[i];
        }
        sum >= self.quota
    }

    /// Builds a coalition from 1-based member indices.
    pub fn coalition(&self, members: &[usize]) -> Result<Coalition> {
        let n = self.player_count();
        if n > COALITION_BIT_CAP {
            return Err(Error::capacity(format!(
                "bitset coalitions support at most {COALITION_BIT_CAP} players, game has {n}"
            )));
        }
        let mut mask: u64 = 0;
        for &m in members {
            self.check_player(m)?;
            mask |= 1 << (m - 1);
        }
        Ok(Coalition { mask })
    }

    /// Appends `t` weight-0 players. Existing players keep their positions,
    /// and their normalized index values are unchanged.
    pub fn pad_with_dummies(&self, t: usize) -> Game {
        let mut weights = self.weights.clone();
        weights.extend(std::iter::repeat_n(BigUint::zero(), t));
        Game {
            weights,
            quota: self.quota.clone(),
        }
    }

    /// Appends `t` players whose weight equals the quota. Any coalition
    /// containing such a player already succeeds, so the raw Banzhaf values
    /// of the original players are unchanged.
    pub fn pad_with_quota_players(&self, t: usize) -> Game {
        let mut weights = self.weights.clone();
        weights.extend(std::iter::repeat_n(self.quota.clone(), t));
        Game {
            weights,
            quota: self.quota.clone(),
        }
    }

    /// Moves player `i` (1-based) to position 1, keeping the relative order
    /// of the remaining players.
    pub fn move_player_to_front(&self, player: usize) -> Result<Game> {
        self.check_player(player)?;
        let mut weights = self.weights.clone();
        let w = weights.remove(player - 1);
        weights.insert(0, w);
        Ok(Game {
            weights,
            quota: self.quota.clone(),
        })
    }
}

/// A coalition over the players of a particular game, stored as a bitset.
/// Bit `j` corresponds to player `j + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Coalition {
    mask: u64,
}

impl Coalition {
    pub fn empty() -> Coalition {
        Coalition { mask: 0 }
    }

    pub fn from_mask(mask: u64) -> Coalition {
        Coalition { mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, player: usize) -> bool {
        (1..=64).contains(&player) && self.mask >> (player - 1) & 1 == 1
    }

    /// Iterates 0-based member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (0..64).filter(move |j| mask >> j & 1 == 1)
    }
}

#[derive(Serialize, Deserialize)]
struct GameJson {
    weights: Vec<FlexInt>,
    quota: FlexInt,
}

impl Serialize for Game {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GameJson {
            weights: self.weights.iter().map(FlexInt::from).collect(),
            quota: FlexInt::from(&self.quota),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Game {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = GameJson::deserialize(deserializer)?;
        Game::new(
            raw.weights.into_iter().map(|w| w.0).collect(),
            raw.quota.0,
        )
        .map_err(de::Error::custom)
    }
}
