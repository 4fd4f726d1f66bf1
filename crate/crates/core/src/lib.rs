//! Exact power-index computation for weighted voting games.
//!
//! The crate computes raw and normalized Banzhaf and Shapley-Shubik power
//! indices with exact big-integer arithmetic, decides strict power
//! comparisons between games, and implements the counting-preserving
//! reduction chain from exact-cover-by-3-sets through subset sum to voting
//! games, together with the inverse scaling function that recovers cover
//! counts from raw Shapley-Shubik values. Brute-force reference
//! implementations of every counting problem live in [`oracles`] and serve
//! as ground truth for the optimized paths.
//!
//! Player indices are 1-based in every public interface, matching the
//! usual game notation `(w_1, ..., w_n; q)`.

pub mod compare;
pub mod error;
pub mod game;
pub mod gen;
pub mod indices;
pub mod json;
pub mod oracles;
pub mod reductions;

pub use compare::{compare_raw, merge_profitability, power_compare, ComparisonVerdict};
pub use error::{Error, Result};
pub use game::{Coalition, Game};
pub use indices::{
    banzhaf, banzhaf_raw, estimate_banzhaf, estimate_shapley, shapley, shapley_raw, Estimate,
    IndexKind, IndexValue, Strategy,
};
pub use reductions::{
    cmp_ss, equalize_pair, normalize_two_thirds, normalize_x3c_prime, phi, phi_normalized, psi,
    r1, r2, subsetsum_to_game, transform_g, transform_h_dprime, transform_h_prime,
    x3c_to_subsetsum, CountValue, SubsetSumInstance, X3cInstance,
};
