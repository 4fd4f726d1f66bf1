//! Acceptance suite: one test per criterion, each printing a pass line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! All arithmetic checks are exact; runtime bounds are asserted on the
//! computation region.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use powercmp::gen::{random_game, random_x3c, rng_from_seed};
use powercmp::indices::{
    banzhaf, banzhaf_raw, estimate_banzhaf, shapley, shapley_raw, IndexKind, Strategy,
};
use powercmp::oracles::{
    banzhaf_raw_enum, count_subsetsum, count_x3c, shapley_raw_enum, shapley_raw_perm,
};
use powercmp::reductions::{
    cmp_ss, equalize_pair, normalize_two_thirds, normalize_x3c_prime, phi, psi, r1, r2,
    transform_g, transform_h_dprime, transform_h_prime, x3c_to_subsetsum,
};
use powercmp::{merge_profitability, Coalition, Game, X3cInstance};

fn pass(criterion: usize, what: &str) {
    println!("PASS criterion {criterion}: {what}");
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The 500-game corpus shared by criteria 2-4: n <= 16, weights <= 100,
/// quota between 1 and the total weight.
fn random_game_corpus() -> Vec<Game> {
    let mut rng = rng_from_seed(0xC0FFEE);
    (0..500)
        .map(|_| {
            let n = rng.gen_range(1..=16);
            random_game(&mut rng, n, 100).unwrap()
        })
        .collect()
}

/// The 200-instance corpus shared by criteria 5-6: 3k <= 12, m <= 8.
fn random_x3c_corpus() -> Vec<X3cInstance> {
    let mut rng = rng_from_seed(0xBEEF);
    (0..200)
        .map(|_| {
            let k = rng.gen_range(1..=4usize);
            let m = rng.gen_range(1..=8usize);
            random_x3c(&mut rng, 3 * k, m).unwrap()
        })
        .collect()
}

#[test]
fn criterion_01_equal_power_example() {
    let g = Game::from_u64(&[8, 7, 2], 9);
    let start = Instant::now();
    for player in 1..=3 {
        let bz = banzhaf(&g, player).unwrap();
        let ss = shapley(&g, player).unwrap();
        assert_eq!(bz.normalized, ratio(1, 2));
        assert_eq!(ss.normalized, ratio(1, 3));
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_millis(1),
        "took {elapsed:?}, bound is 1 ms"
    );
    pass(1, "(8,7,2;9) has Banzhaf 1/2 and Shapley-Shubik 1/3 for all players");
}

#[test]
fn criterion_02_strategy_equivalence() {
    let start = Instant::now();
    for game in random_game_corpus() {
        let n = game.player_count();
        for player in 1..=n {
            let bz_dp = banzhaf_raw(&game, player, Strategy::WeightDp).unwrap();
            let ss_dp = shapley_raw(&game, player, Strategy::WeightDp).unwrap();
            assert_eq!(bz_dp, banzhaf_raw_enum(&game, player).unwrap());
            assert_eq!(ss_dp, shapley_raw_enum(&game, player).unwrap());
            if n <= 8 {
                assert_eq!(ss_dp, shapley_raw_perm(&game, player).unwrap());
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(2, "weight-DP matches enumeration and permutation oracles on 500 games");
}

#[test]
fn criterion_03_shapley_parity() {
    // n >= 4: every raw Shapley-Shubik value is even
    let mut rng = rng_from_seed(0x7E57);
    let two = BigUint::from(2u8);
    for _ in 0..500 {
        let n = rng.gen_range(4..=16);
        let game = random_game(&mut rng, n, 100).unwrap();
        for player in 1..=n {
            let raw = shapley_raw(&game, player, Strategy::Auto).unwrap();
            assert!((raw % &two).is_zero(), "odd raw value in {game:?}");
        }
    }
    // n <= 3: exhaustive, raw value never exceeds 3! = 6
    let six = BigUint::from(6u8);
    for n in 1..=3usize {
        let combos = 5usize.pow(n as u32);
        for weight_code in 0..combos {
            let mut code = weight_code;
            let weights: Vec<u64> = (0..n)
                .map(|_| {
                    let w = (code % 5) as u64;
                    code /= 5;
                    w
                })
                .collect();
            for quota in 0..=4u64 {
                let game = Game::from_u64(&weights, quota);
                for player in 1..=n {
                    let raw = shapley_raw(&game, player, Strategy::Auto).unwrap();
                    assert!(raw <= six);
                }
            }
        }
    }
    pass(3, "raw Shapley-Shubik is even for n >= 4 and at most 6 for n <= 3");
}

#[test]
fn criterion_04_efficiency_identity() {
    for game in random_game_corpus() {
        let n = game.player_count();
        let total: BigUint = (1..=n)
            .map(|p| shapley_raw(&game, p, Strategy::Auto).unwrap())
            .sum();
        let full = game.coalition(&(1..=n).collect::<Vec<_>>()).unwrap();
        let grand = u64::from(game.succ(&full));
        let empty = u64::from(game.succ(&Coalition::empty()));
        // succ(N) >= succ(empty) by monotonicity, so the difference is 0 or 1
        let expected = IndexKind::Shapley.scale(n) * BigUint::from(grand - empty);
        assert_eq!(total, expected, "identity fails for {game:?}");
    }
    pass(4, "sum of raw Shapley-Shubik values equals n!(succ(N) - succ(empty))");
}

#[test]
fn criterion_05_count_preservation() {
    let start = Instant::now();
    let corpus = random_x3c_corpus();
    for x in &corpus {
        let count = count_x3c(x).unwrap();
        assert_eq!(count_x3c(&transform_g(x)).unwrap(), count);
        assert_eq!(count_x3c(&transform_h_prime(x)).unwrap(), count);
        assert_eq!(count_x3c(&transform_h_dprime(x)).unwrap(), count);
        let ratio_normal = normalize_two_thirds(x);
        assert_eq!(3 * ratio_normal.cover_size(), 2 * ratio_normal.set_count());
        assert_eq!(count_x3c(&ratio_normal).unwrap(), count);
        assert_eq!(count_x3c(&normalize_x3c_prime(x)).unwrap(), count);
    }
    for pair in corpus.chunks(2) {
        if let [x, y] = pair {
            let (x2, y2) = equalize_pair(x, y);
            assert_eq!(x2.universe_size(), y2.universe_size());
            assert_eq!(x2.set_count(), y2.set_count());
            assert_eq!(count_x3c(&x2).unwrap(), count_x3c(x).unwrap());
            assert_eq!(count_x3c(&y2).unwrap(), count_x3c(y).unwrap());
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(5, "#X3C invariant under all transformations; ratio postcondition holds");
}

#[test]
fn criterion_06_parsimony_and_cardinality() {
    for x in random_x3c_corpus() {
        let encoded = x3c_to_subsetsum(&x).unwrap();
        assert_eq!(
            count_subsetsum(&encoded).unwrap(),
            count_x3c(&x).unwrap(),
            "parsimony fails for {x:?}"
        );
        // every subset hitting the target has exactly k elements
        let m = encoded.values().len();
        let k = x.cover_size();
        for mask in 0u64..(1 << m) {
            let sum: BigUint = encoded
                .values()
                .iter()
                .enumerate()
                .filter(|&(j, _)| mask >> j & 1 == 1)
                .map(|(_, v)| v)
                .sum();
            if sum == *encoded.target() {
                assert_eq!(mask.count_ones() as usize, k);
            }
        }
    }
    pass(6, "subset-sum encoding is parsimonious and target subsets have k elements");
}

#[test]
fn criterion_07_many_one_round_trip() {
    let start = Instant::now();
    let canonical = X3cInstance::new(6, vec![[0, 1, 2], [3, 4, 5], [0, 3, 4]]).unwrap();
    let game = phi(&canonical).unwrap();
    assert_eq!(game, Game::from_u64(&[1, 21, 1344, 321], 1366));
    let raw = shapley_raw(&game, 1, Strategy::Auto).unwrap();
    assert_eq!(raw, BigUint::from(2u8));
    assert_eq!(psi(&raw), BigUint::one());

    // further restricted instances with n = 1: universe 6, three sets
    let mut rng = rng_from_seed(0xAB);
    for _ in 0..20 {
        let x = random_x3c(&mut rng, 6, 3).unwrap();
        assert!(x.is_x3c_prime());
        let count = count_x3c(&x).unwrap();
        let raw = shapley_raw(&phi(&x).unwrap(), 1, Strategy::Auto).unwrap();
        assert_eq!(raw, r1(1) * &count.value);
        assert_eq!(psi(&raw), count.value);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(7, "psi inverts the reduction: psi(SS*(phi(X),1)) = #X3C'(X)");
}

#[test]
fn criterion_08_interval_disjointness() {
    for t in 0..=4u32 {
        let n = 4usize.pow(t);
        assert!(r2(n) < r1(4 * n), "overlap at t={t}");
    }
    pass(8, "the intervals [r1(4^t), r2(4^t)] are pairwise disjoint for t = 0..4");
}

#[test]
fn criterion_09_order_equivalence() {
    let start = Instant::now();
    let mut rng = rng_from_seed(0x109);
    for round in 0..50 {
        let (x, y) = {
            let mut draw = || {
                let k = rng.gen_range(1..=3usize);
                let m = rng.gen_range(1..=4usize);
                random_x3c(&mut rng, 3 * k, m).unwrap()
            };
            (draw(), draw())
        };
        let cx = count_x3c(&x).unwrap();
        let cy = count_x3c(&y).unwrap();
        let (gx, gy, player) = cmp_ss(&x, &y).unwrap();
        // huge weights: auto-selection must land on an enumeration strategy
        let ssx = shapley(&gx, player).unwrap();
        let ssy = shapley(&gy, player).unwrap();
        assert_eq!(
            cx > cy,
            ssx.normalized > ssy.normalized,
            "order mismatch in round {round}: #X3C {cx:?} vs {cy:?}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    pass(9, "#X3C order coincides with Shapley-Shubik order on the reduced games");
}

#[test]
fn criterion_10_padding_invariance() {
    let mut rng = rng_from_seed(0x0A0);
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let game = random_game(&mut rng, n, 30).unwrap();
        let quota_padded = game.pad_with_quota_players(1);
        let dummy_padded = game.pad_with_dummies(1);
        for player in 1..=n {
            assert_eq!(
                banzhaf_raw(&game, player, Strategy::Auto).unwrap(),
                banzhaf_raw(&quota_padded, player, Strategy::Auto).unwrap(),
                "quota padding changed raw Banzhaf in {game:?}"
            );
            assert_eq!(
                banzhaf(&game, player).unwrap().normalized,
                banzhaf(&dummy_padded, player).unwrap().normalized
            );
            assert_eq!(
                shapley(&game, player).unwrap().normalized,
                shapley(&dummy_padded, player).unwrap().normalized
            );
        }
    }
    pass(10, "quota players preserve raw Banzhaf; dummies preserve normalized indices");
}

#[test]
fn criterion_11_merge_profitability() {
    let start = Instant::now();
    let profitable = merge_profitability(&Game::from_u64(&[1, 1, 1], 2), Strategy::Auto).unwrap();
    assert!(profitable.strictly_greater);
    assert!(profitable.left_value.normalized.is_one());
    assert_eq!(profitable.right_value.normalized, ratio(2, 3));

    let not_profitable =
        merge_profitability(&Game::from_u64(&[2, 2, 1], 4), Strategy::Auto).unwrap();
    assert!(!not_profitable.strictly_greater);
    assert!(not_profitable.left_value.normalized.is_one());
    assert!(not_profitable.right_value.normalized.is_one());
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    pass(11, "merging is profitable in (1,1,1;2) and not in (2,2,1;4)");
}

#[test]
fn criterion_12_estimator_soundness() {
    let start = Instant::now();
    let g = Game::from_u64(&[8, 7, 2], 9);
    let truth = ratio(1, 2);
    let mut covered = 0;
    for seed in 0..20u64 {
        let estimate = estimate_banzhaf(&g, 1, 100_000, seed).unwrap();
        if estimate.covers(&truth) {
            covered += 1;
        }
    }
    assert!(covered >= 19, "only {covered}/20 estimates covered 1/2");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    pass(12, "at least 19 of 20 Banzhaf estimates cover 1/2 within the half-width");
}
