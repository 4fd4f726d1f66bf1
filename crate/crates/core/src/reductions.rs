//! X3C and subset-sum instances, the count-preserving instance
//! transformations, and the reduction chain from exact-cover counting to
//! the raw Shapley-Shubik value of a designated player.
//!
//! The chain: an X3C instance is (optionally) normalized to universe/family
//! ratio 2/3 with family size 3n for n a power of 4, encoded as a
//! subset-sum instance in base m+1, and turned into the voting game
//! `(1, s_1, ..., s_m; q+1)`. The raw Shapley-Shubik value of player 1 in
//! that game is `(m-k)!k!` times the number of exact covers, and `psi`
//! inverts that scaling.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::game::Game;
use crate::oracles::factorial;

/// An exact-cover-by-3-sets instance: a universe of size 3k and an ordered
/// family of 3-element subsets. Family order is significant; duplicate sets
/// are distinct members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3cInstance {
    universe_size: usize,
    sets: Vec<[usize; 3]>,
}

impl X3cInstance {
    pub fn new(universe_size: usize, sets: Vec<[usize; 3]>) -> Result<X3cInstance> {
        if !universe_size.is_multiple_of(3) {
            return Err(Error::MalformedX3c(format!(
                "universe size {universe_size} is not a multiple of 3"
            )));
        }
        for (i, s) in sets.iter().enumerate() {
            if s[0] == s[1] || s[0] == s[2] || s[1] == s[2] {
                return Err(Error::MalformedX3c(format!(
                    "set {i} has repeated elements: {s:?}"
                )));
            }
            for &e in s {
                if e >= universe_size {
                    return Err(Error::MalformedX3c(format!(
                        "set {i} references element {e} outside the universe of size {universe_size}"
                    )));
                }
            }
        }
        Ok(X3cInstance {
            universe_size,
            sets,
        })
    }

    /// The fixed zero-solution instance used when malformed input must be
    /// replaced instead of rejected: elements 4 and 5 appear in no set, so
    /// no exact cover exists.
    pub fn zero_solution_fallback() -> X3cInstance {
        X3cInstance {
            universe_size: 6,
            sets: vec![[0, 1, 2], [0, 1, 3]],
        }
    }

    /// Lenient constructor mirroring the replace-malformed-input convention:
    /// invalid data yields the fixed zero-solution instance.
    pub fn new_lenient(universe_size: usize, sets: Vec<[usize; 3]>) -> X3cInstance {
        X3cInstance::new(universe_size, sets).unwrap_or_else(|_| X3cInstance::zero_solution_fallback())
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    /// k in the paper's notation: a third of the universe size.
    pub fn cover_size(&self) -> usize {
        self.universe_size / 3
    }

    pub fn sets(&self) -> &[[usize; 3]] {
        &self.sets
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    /// Whether k/m = 2/3 exactly (3k = 2m).
    pub fn has_two_thirds_ratio(&self) -> bool {
        3 * self.cover_size() == 2 * self.set_count()
    }

    /// For ratio-2/3 instances with k = 2n, m = 3n, returns n.
    pub fn ratio_parameter(&self) -> Option<usize> {
        if self.has_two_thirds_ratio() && self.set_count().is_multiple_of(3) {
            Some(self.set_count() / 3)
        } else {
            None
        }
    }

    /// Whether the instance is in the restricted form: ratio 2/3 and
    /// family size 3n for n a power of 4.
    pub fn is_x3c_prime(&self) -> bool {
        self.ratio_parameter().is_some_and(is_power_of_four)
    }
}

fn is_power_of_four(n: usize) -> bool {
    n.is_power_of_two() && n.trailing_zeros().is_multiple_of(2)
}

/// An exact nonnegative solution count: exact-cover counts, subset-sum
/// counts, and anything else the comparison machinery orders.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CountValue {
    #[serde(with = "crate::json::uint_string")]
    pub value: BigUint,
}

impl From<BigUint> for CountValue {
    fn from(value: BigUint) -> Self {
        CountValue { value }
    }
}

impl From<u64> for CountValue {
    fn from(value: u64) -> Self {
        CountValue {
            value: BigUint::from(value),
        }
    }
}

impl PartialEq<BigUint> for CountValue {
    fn eq(&self, other: &BigUint) -> bool {
        self.value == *other
    }
}

impl std::fmt::Display for CountValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.value.fmt(f)
    }
}

/// A subset-sum instance: nonnegative values and a target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetSumInstance {
    #[serde(with = "crate::json::uint_string_vec")]
    values: Vec<BigUint>,
    #[serde(with = "crate::json::uint_string")]
    target: BigUint,
}

impl SubsetSumInstance {
    pub fn new(values: Vec<BigUint>, target: BigUint) -> SubsetSumInstance {
        SubsetSumInstance { values, target }
    }

    pub fn from_u64(values: &[u64], target: u64) -> SubsetSumInstance {
        SubsetSumInstance {
            values: values.iter().map(|&v| BigUint::from(v)).collect(),
            target: BigUint::from(target),
        }
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn target(&self) -> &BigUint {
        &self.target
    }
}

/// Transformation g: three fresh elements and the single set covering them.
/// Any cover must pick the new set, so the solution count is unchanged.
pub fn transform_g(x: &X3cInstance) -> X3cInstance {
    let b = x.universe_size;
    let mut sets = x.sets.clone();
    sets.push([b, b + 1, b + 2]);
    X3cInstance {
        universe_size: b + 3,
        sets,
    }
}

/// Transformation h': six fresh elements b1..b6 with sets
/// B1={b1,b2,b3}, B2={b4,b5,b6}, B3={b1,b4,b5}. Only {B1,B2} can appear in
/// a cover, so the count is preserved while m grows by 3 and k by 2.
pub fn transform_h_prime(x: &X3cInstance) -> X3cInstance {
    let b = x.universe_size;
    let mut sets = x.sets.clone();
    sets.push([b, b + 1, b + 2]);
    sets.push([b + 3, b + 4, b + 5]);
    sets.push([b, b + 3, b + 4]);
    X3cInstance {
        universe_size: b + 6,
        sets,
    }
}

/// Transformation h'': h' plus B4={b1,b4,b6}, growing m by 4 and k by 2.
pub fn transform_h_dprime(x: &X3cInstance) -> X3cInstance {
    let b = x.universe_size;
    let mut sets = x.sets.clone();
    sets.push([b, b + 1, b + 2]);
    sets.push([b + 3, b + 4, b + 5]);
    sets.push([b, b + 3, b + 4]);
    sets.push([b, b + 3, b + 5]);
    X3cInstance {
        universe_size: b + 6,
        sets,
    }
}

/// Normalizes to k/m = 2/3: first h'' until 2m - 3k >= 0 (ceil((3k-2m)/2)
/// applications suffice, each raising 2m - 3k by 2), then exactly 2m - 3k
/// applications of g.
pub fn normalize_two_thirds(x: &X3cInstance) -> X3cInstance {
    let mut cur = x.clone();
    while 2 * cur.set_count() < 3 * cur.cover_size() {
        cur = transform_h_dprime(&cur);
    }
    let g_applications = 2 * cur.set_count() - 3 * cur.cover_size();
    for _ in 0..g_applications {
        cur = transform_g(&cur);
    }
    debug_assert!(cur.has_two_thirds_ratio());
    cur
}

/// Normalizes to the restricted form: ratio 2/3 with k = 2n, m = 3n and n a
/// power of 4. Ratio normalization first, then h' (which maps n to n+1
/// while keeping the ratio) until n is a power of 4.
pub fn normalize_x3c_prime(x: &X3cInstance) -> X3cInstance {
    let mut cur = normalize_two_thirds(x);
    while !cur.ratio_parameter().is_some_and(is_power_of_four) {
        cur = transform_h_prime(&cur);
    }
    cur
}

/// Brings two instances to identical universe and family sizes: both are
/// ratio-normalized, then the smaller one is grown by h' until the sizes
/// match. Counts are preserved on both sides.
pub fn equalize_pair(x: &X3cInstance, y: &X3cInstance) -> (X3cInstance, X3cInstance) {
    let mut x = normalize_two_thirds(x);
    let mut y = normalize_two_thirds(y);
    while x.universe_size < y.universe_size {
        x = transform_h_prime(&x);
    }
    while y.universe_size < x.universe_size {
        y = transform_h_prime(&y);
    }
    debug_assert_eq!(x.universe_size, y.universe_size);
    debug_assert_eq!(x.set_count(), y.set_count());
    (x, y)
}

/// The standard parsimonious encoding of exact cover as subset sum: element
/// j becomes digit j in base m+1, set S_i becomes the value with 1-digits
/// at its elements, and the target has every digit equal to 1. The base is
/// the smallest that is carry-free (each digit receives at most m
/// contributions), so a subset hits the target exactly when it covers every
/// element once; such a subset necessarily has exactly k sets.
pub fn x3c_to_subsetsum(x: &X3cInstance) -> Result<SubsetSumInstance> {
    let m = x.set_count();
    if m == 0 {
        return Err(Error::Degenerate(
            "X3C instance with an empty family has no subset-sum encoding".into(),
        ));
    }
    let base = BigUint::from(m + 1);
    let mut powers = Vec::with_capacity(x.universe_size);
    let mut p = BigUint::one();
    for _ in 0..x.universe_size {
        powers.push(p.clone());
        p *= &base;
    }
    let values = x
        .sets
        .iter()
        .map(|s| s.iter().map(|&e| &powers[e]).sum())
        .collect();
    let target = powers.iter().sum();
    Ok(SubsetSumInstance { values, target })
}

/// The Deng-Papadimitriou game for a subset-sum instance: a weight-1
/// designated player in front of the values, with quota q+1. Player 1 is
/// pivotal exactly after a subset summing to q, so its raw Shapley-Shubik
/// value counts solutions scaled by `(m-k)!k!` when every solution has k
/// elements.
pub fn subsetsum_to_game(instance: &SubsetSumInstance) -> Game {
    let mut weights = Vec::with_capacity(instance.values.len() + 1);
    weights.push(BigUint::one());
    weights.extend(instance.values.iter().cloned());
    let quota = &instance.target + BigUint::one();
    Game::from_unsigned(weights, quota).expect("weights nonempty")
}

/// The composed reduction: subset-sum encoding followed by the game
/// construction. Pass the output of [`normalize_x3c_prime`] when the
/// `psi`-inversion identity is needed.
pub fn phi(x: &X3cInstance) -> Result<Game> {
    Ok(subsetsum_to_game(&x3c_to_subsetsum(x)?))
}

/// `phi` with the restricted-form normalization applied first, so that
/// `psi(shapley_raw(phi(x), 1)) = #X3C(x)` holds.
pub fn phi_normalized(x: &X3cInstance) -> Result<Game> {
    phi(&normalize_x3c_prime(x))
}

/// Lower bracketing function n!(2n)!.
pub fn r1(n: usize) -> BigUint {
    factorial(n) * factorial(2 * n)
}

/// Upper bracketing function n!(2n)! * 2^(3n).
pub fn r2(n: usize) -> BigUint {
    r1(n) << (3 * n)
}

/// Inverts the reduction's scaling: finds the smallest t with
/// r1(4^t) <= x <= r2(4^t) and returns floor(x / r1(4^t)), or 0 when x = 0
/// or no t qualifies. The brackets are disjoint, so the answer is unique;
/// the loop stops as soon as r1(4^t) exceeds x, after O(log x) rounds.
pub fn psi(x: &BigUint) -> BigUint {
    if x.is_zero() {
        return BigUint::zero();
    }
    let mut t = 0u32;
    loop {
        let n = 4usize.pow(t);
        let lo = r1(n);
        if lo > *x {
            return BigUint::zero();
        }
        if *x <= r2(n) {
            return x.div_floor(&lo);
        }
        t += 1;
    }
}

/// Lemma-style comparison gadget: equalizes the two instances and reduces
/// both to games whose player 1 carries the cover counts scaled by the same
/// `(m-k)!k!` factor. Returns the two games and the designated player
/// (1-based), so that the count order equals the index order.
pub fn cmp_ss(x: &X3cInstance, y: &X3cInstance) -> Result<(Game, Game, usize)> {
    let (x, y) = equalize_pair(x, y);
    Ok((phi(&x)?, phi(&y)?, 1))
}

#[derive(Serialize, Deserialize)]
struct X3cJson {
    universe: usize,
    sets: Vec<Vec<usize>>,
}

impl Serialize for X3cInstance {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        X3cJson {
            universe: self.universe_size,
            sets: self.sets.iter().map(|s| s.to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for X3cInstance {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = X3cJson::deserialize(deserializer)?;
        let sets = raw
            .sets
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                <[usize; 3]>::try_from(s.as_slice())
                    .map_err(|_| de::Error::custom(format!("set {i} must have exactly 3 elements")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        X3cInstance::new(raw.universe, sets).map_err(de::Error::custom)
    }
}
