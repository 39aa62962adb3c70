//! Deterministic parameter vectors for the verification runs.
//!
//! Random entries come from `ChaCha8Rng` seeded per partition from the user
//! seed, so a report can be reproduced from `(λ, seed)` alone.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::partitions::Partition;
use crate::polyring::{rat, rat_frac, Rational};

use super::EvalParams;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatteryEntry {
    pub pattern: String,
    pub params: EvalParams,
}

fn entry(pattern: &str, values: Vec<Rational>) -> BatteryEntry {
    BatteryEntry { pattern: pattern.to_string(), params: EvalParams::new(values) }
}

/// Seed for the generator used with partition `lambda`.
pub fn partition_seed(seed: u64, lambda: &Partition) -> u64 {
    lambda
        .parts()
        .iter()
        .fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, &p| h.rotate_left(7).wrapping_mul(0x100_0000_01b3) ^ p as u64)
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = loop {
        let n: i64 = rng.gen_range(-4..=4);
        if n != 0 {
            break n;
        }
    };
    rat_frac(num, rng.gen_range(1..=3))
}

/// `len` nonzero small rationals; repetitions are possible.
pub fn random_params<R: Rng>(len: usize, rng: &mut R) -> EvalParams {
    EvalParams::new((0..len).map(|_| small_rational(rng)).collect())
}

fn random_distinct<R: Rng>(len: usize, rng: &mut R) -> EvalParams {
    let mut pool: Vec<Rational> = Vec::new();
    for den in 1..=3 {
        for num in -6..=6 {
            let r = rat_frac(num, den);
            if num != 0 && !pool.contains(&r) {
                pool.push(r);
            }
        }
    }
    pool.shuffle(rng);
    pool.truncate(len);
    EvalParams::new(pool)
}

/// All-zero, all-equal, distinct and mixed-repetition vectors, followed by
/// `trials` seeded random ones (the first of them with distinct entries).
pub fn parameter_battery(lambda: &Partition, trials: usize, seed: u64) -> Vec<BatteryEntry> {
    let k = lambda.part(0);
    let mut out = vec![
        entry("zero", vec![rat(0); k]),
        entry("equal", vec![rat_frac(3, 2); k]),
        entry("distinct", (1..=k as i64).map(rat).collect()),
    ];
    let mixed: Vec<Rational> = match k {
        0 => Vec::new(),
        1 => vec![rat(-2)],
        2 => vec![rat(-1), rat_frac(1, 3)],
        _ => {
            let rep = k.div_ceil(2);
            let mut v = vec![rat(2); rep];
            v.extend((0..k - rep).map(|i| rat_frac(-1 - i as i64, 3)));
            v
        }
    };
    out.push(entry(if k >= 3 { "mixed" } else { "alternate" }, mixed));
    let mut rng = ChaCha8Rng::seed_from_u64(partition_seed(seed, lambda));
    for i in 0..trials {
        if i == 0 {
            out.push(BatteryEntry { pattern: "random-distinct".into(), params: random_distinct(k, &mut rng) });
        } else {
            out.push(BatteryEntry { pattern: "random".into(), params: random_params(k, &mut rng) });
        }
    }
    out
}

/// Parameter vectors with at least two distinct labels (when `λ` has at
/// least two columns), for the splitting checks.
pub fn split_battery(lambda: &Partition, count: usize, seed: u64) -> Vec<EvalParams> {
    let k = lambda.part(0);
    let mut candidates: Vec<Vec<Rational>> = vec![
        (1..=k as i64).map(rat).collect(),
        (1..=k as i64).rev().map(rat).collect(),
        (0..k).map(|i| if i + 1 == k { rat(2) } else { rat(1) }).collect(),
        (0..k).map(|i| if i == 0 { rat(-1) } else { rat_frac(1, 2) }).collect(),
        (0..k).map(|i| if i % 2 == 0 { rat(1) } else { rat(3) }).collect(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(partition_seed(seed.wrapping_add(1), lambda));
    for _ in 0..4 * count {
        candidates.push(random_params(k, &mut rng).values().to_vec());
    }
    let mut out: Vec<EvalParams> = Vec::new();
    for c in candidates {
        let p = EvalParams::new(c);
        let blocks = {
            let mut v = p.values().to_vec();
            v.sort();
            v.dedup();
            v.len()
        };
        if (blocks >= 2 || k < 2) && !out.contains(&p) {
            out.push(p);
        }
        if out.len() == count {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_is_deterministic_and_covers_patterns() {
        let lam: Partition = "3,2".parse().unwrap();
        let a = parameter_battery(&lam, 3, 7);
        assert_eq!(a, parameter_battery(&lam, 3, 7));
        assert_ne!(a, parameter_battery(&lam, 3, 8));
        assert_eq!(a.len(), 7);
        assert!(a[0].params.is_zero());
        assert!(a[2].params.all_distinct());
        assert!(!a[3].params.all_distinct());
        assert!(a[4].params.all_distinct());
        assert!(a.iter().all(|e| e.params.len() == 3));
    }

    #[test]
    fn split_battery_has_several_blocks() {
        let lam: Partition = "2,2,1".parse().unwrap();
        let b = split_battery(&lam, 3, 1);
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|p| p.all_distinct()));
        let single: Partition = "1,1".parse().unwrap();
        assert!(!split_battery(&single, 3, 1).is_empty());
    }
}
