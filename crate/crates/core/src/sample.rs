//! Seeded random `s`-sets, `s`-points and `s`-cores for randomized checks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::abacus::{core_from_s_set, SSet};
use crate::geometry::SPoint;
use crate::partition::Partition;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A uniformly drawn spread `m` and then `a_r = r + s c_r` with
/// `c_r ∈ [-m, m]` summing to zero.
pub fn random_sset<R: Rng>(rng: &mut R, s: usize, max_spread: i64) -> SSet {
    assert!(s >= 2);
    let m = rng.gen_range(0..=max_spread.max(0));
    let mut shifts: Vec<i64> = (0..s - 1).map(|_| rng.gen_range(-m..=m)).collect();
    shifts.push(-shifts.iter().sum::<i64>());
    shifts.shuffle(rng);
    let si = s as i64;
    SSet::new((0..si).zip(shifts).map(|(r, c)| r + si * c).collect())
        .expect("shifted residues form an s-set")
}

/// Random `s`-core of size at most `max_size`, by rejection.
pub fn random_s_core<R: Rng>(rng: &mut R, s: usize, max_size: u64) -> Partition {
    loop {
        let q = random_sset(rng, s, 6);
        if q.core_size() <= max_size as u128 {
            return core_from_s_set(&q).expect("valid s-set");
        }
    }
}

/// Random `s`-point: a random `s`-set in random order.
pub fn random_spoint<R: Rng>(rng: &mut R, s: usize, max_spread: i64) -> SPoint {
    let mut coords = random_sset(rng, s, max_spread).elements().to_vec();
    coords.shuffle(rng);
    SPoint::new(coords).expect("permuted s-set is an s-point")
}
