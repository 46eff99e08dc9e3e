//! Beta-numbers, the `s`-runner abacus, and the bijection between `s`-cores
//! and `s`-sets.
//!
//! Abacus positions are integers; runner `r` carries the positions congruent
//! to `r` mod `s`, increasing downward. A beta-set always has charge zero:
//! its beads are `λ_i - i` for every `i ≥ 1`, so all sufficiently negative
//! positions are occupied.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Finite encoding of a beta-set: the heads `λ_i - i` for the positive parts,
/// followed implicitly by every integer below `-n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BetaSet {
    heads: Vec<i64>,
}

impl BetaSet {
    /// Checks that the heads strictly decrease and stay above the tail.
    pub fn new(heads: Vec<i64>) -> Result<Self> {
        if heads.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidBetaSet(format!(
                "heads not strictly decreasing: {heads:?}"
            )));
        }
        let tail_top = -(heads.len() as i64) - 1;
        if heads.last().is_some_and(|&h| h <= tail_top) {
            return Err(Error::InvalidBetaSet(format!(
                "head collides with the tail starting at {tail_top}"
            )));
        }
        Ok(BetaSet { heads })
    }

    pub fn heads(&self) -> &[i64] {
        &self.heads
    }

    /// Number of explicit heads.
    pub fn n(&self) -> usize {
        self.heads.len()
    }

    pub fn contains(&self, pos: i64) -> bool {
        pos < -(self.heads.len() as i64) || self.heads.binary_search_by(|h| pos.cmp(h)).is_ok()
    }
}

/// `s` integers, pairwise incongruent mod `s`, summing to `s(s-1)/2`.
/// Stored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SSet {
    elements: Vec<i64>,
}

pub(crate) fn check_residue_system(values: &[i64]) -> std::result::Result<(), String> {
    let s = values.len();
    if s < 2 {
        return Err(format!("need at least 2 entries, got {s}"));
    }
    let mut seen = vec![false; s];
    for &v in values {
        let r = v.rem_euclid(s as i64) as usize;
        if std::mem::replace(&mut seen[r], true) {
            return Err(format!("two entries congruent to {r} mod {s}"));
        }
    }
    let sum: i128 = values.iter().map(|&v| v as i128).sum();
    let want = (s as i128) * (s as i128 - 1) / 2;
    if sum != want {
        return Err(format!("entries sum to {sum}, expected {want}"));
    }
    Ok(())
}

impl SSet {
    pub fn new(mut elements: Vec<i64>) -> Result<Self> {
        check_residue_system(&elements).map_err(Error::InvalidSSet)?;
        elements.sort_unstable();
        Ok(SSet { elements })
    }

    /// `{0, 1, …, s-1}`, the s-set of the empty partition.
    pub fn origin(s: usize) -> Result<Self> {
        SSet::new((0..s as i64).collect())
    }

    pub fn s(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// The unique element congruent to `r` mod `s`.
    pub fn congruent_to(&self, r: i64) -> i64 {
        let s = self.s() as i64;
        let r = r.rem_euclid(s);
        *self
            .elements
            .iter()
            .find(|&&a| a.rem_euclid(s) == r)
            .expect("an s-set meets every residue class")
    }

    pub fn sum_of_squares(&self) -> i128 {
        self.elements
            .iter()
            .map(|&a| (a as i128) * (a as i128))
            .sum()
    }

    /// Size of the corresponding `s`-core: `(Σ a² - Σ r²) / 2s` with `r`
    /// running over `0..s`.
    pub fn core_size(&self) -> u128 {
        let s = self.s() as i128;
        let base: i128 = (0..s).map(|r| r * r).sum();
        ((self.sum_of_squares() - base) / (2 * s)) as u128
    }
}

impl fmt::Display for SSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("s-set must be bracketed: {s:?}")))?;
        SSet::new(parse_int_list(body)?)
    }
}

pub(crate) fn parse_int_list(body: &str) -> Result<Vec<i64>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("integer {tok:?}: {e}")))
        })
        .collect()
}

pub fn beta_set(p: &Partition) -> BetaSet {
    let heads = p
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| part as i64 - (i as i64 + 1))
        .collect();
    BetaSet { heads }
}

pub fn partition_from_beta_set(b: &BetaSet) -> Result<Partition> {
    let b = BetaSet::new(b.heads.clone())?;
    let parts = b
        .heads
        .iter()
        .enumerate()
        .map(|(i, &h)| {
            usize::try_from(h + i as i64 + 1)
                .map_err(|_| Error::InvalidBetaSet("negative part".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// Partition whose bead set is every position below `floor` together with
/// `above` (all `>= floor`). Fails unless the bead set has charge zero.
fn partition_from_beads(floor: i64, mut above: Vec<i64>) -> Result<Partition> {
    above.sort_unstable_by(|a, b| b.cmp(a));
    above.dedup();
    debug_assert!(above.iter().all(|&b| b >= floor));
    let k = above.len() as i64;
    if floor + k != 0 {
        return Err(Error::InvalidBetaSet(format!(
            "bead configuration has charge {}",
            floor + k
        )));
    }
    let parts = above
        .iter()
        .enumerate()
        .map(|(i, &b)| (b + i as i64 + 1) as usize)
        .collect();
    Partition::new(parts)
}

/// The `s`-core of `p`, by packing each runner's beads to the top.
pub fn core(p: &Partition, s: usize) -> Partition {
    assert!(s >= 1, "s must be positive");
    let b = beta_set(p);
    let floor = -(b.n() as i64);
    let si = s as i64;
    let mut counts = vec![0usize; s];
    for &h in b.heads() {
        counts[h.rem_euclid(si) as usize] += 1;
    }
    let mut beads = Vec::with_capacity(b.n());
    for (r, &c) in counts.iter().enumerate() {
        let first = floor + (r as i64 - floor).rem_euclid(si);
        beads.extend((0..c as i64).map(|m| first + m * si));
    }
    partition_from_beads(floor, beads).expect("repacking preserves charge")
}

/// Abacus test: every bead has a bead directly above it.
pub fn is_s_core(p: &Partition, s: usize) -> bool {
    assert!(s >= 1, "s must be positive");
    let b = beta_set(p);
    b.heads().iter().all(|&h| b.contains(h - s as i64))
}

/// `Q(λ)`: the first empty position on each runner of an `s`-core.
pub fn q_set(p: &Partition, s: usize) -> Result<SSet> {
    if s < 2 {
        return Err(Error::ModulusTooSmall { s, min: 2 });
    }
    if !is_s_core(p, s) {
        return Err(Error::NotCore { s });
    }
    let b = beta_set(p);
    let floor = -(b.n() as i64);
    let si = s as i64;
    let elements = (0..si)
        .map(|r| {
            let mut x = floor + (r - floor).rem_euclid(si);
            while b.contains(x) {
                x += si;
            }
            x
        })
        .collect();
    SSet::new(elements)
}

/// Inverse of [`q_set`]: a bead sits at `b` exactly when the element of `q`
/// on `b`'s runner lies below `b`.
pub fn core_from_s_set(q: &SSet) -> Result<Partition> {
    let s = q.s() as i64;
    let floor = q.elements()[0];
    let mut above = Vec::new();
    for &a in q.elements() {
        let mut b = a - s;
        while b >= floor {
            above.push(b);
            b -= s;
        }
    }
    partition_from_beads(floor, above)
}

/// Whether the `s`-core with s-set `q` is also a `t`-core, read off from `q`
/// alone: for every `a ∈ q` the element congruent to `a - t` is at least
/// `a - t`.
pub fn sset_core_is_t_core(q: &SSet, t: usize) -> bool {
    let t = t as i64;
    q.elements().iter().all(|&a| q.congruent_to(a - t) >= a - t)
}

/// Every `s`-set whose core has at most `max_size` boxes, ordered by the
/// runner shifts `c_r` in `a_r = r + s c_r`.
///
/// With `Σ c_r = 0` the size is `Σ_r (s c_r² + (2r - s + 1) c_r) / 2`, and
/// every summand is non-negative, so partial sums prune the search.
pub fn s_sets_up_to(s: usize, max_size: u64) -> Vec<SSet> {
    assert!(s >= 2, "s must be at least 2");
    let budget = 2 * max_size as i128;
    // |c|(|c| - 1) s <= 2 max_size
    let mut bound = 0i64;
    while (bound + 1) as i128 * bound as i128 * s as i128 <= budget {
        bound += 1;
    }
    let search = ShiftSearch { s, bound, budget };
    let mut out = Vec::new();
    search.run(&mut Vec::with_capacity(s), 0, &mut out);
    out
}

struct ShiftSearch {
    s: usize,
    bound: i64,
    /// Twice the size limit.
    budget: i128,
}

impl ShiftSearch {
    /// Twice the size contributed by shift `c` on runner `r`.
    fn term(&self, r: usize, c: i64) -> i128 {
        let (s, r, c) = (self.s as i128, r as i128, c as i128);
        s * c * c + (2 * r - s + 1) * c
    }

    fn run(&self, shifts: &mut Vec<i64>, used: i128, out: &mut Vec<SSet>) {
        let r = shifts.len();
        if r == self.s - 1 {
            let c = -shifts.iter().sum::<i64>();
            if used + self.term(r, c) <= self.budget {
                shifts.push(c);
                let si = self.s as i64;
                let elems = shifts
                    .iter()
                    .enumerate()
                    .map(|(r, &c)| r as i64 + si * c)
                    .collect();
                out.push(SSet::new(elems).expect("shifted residues form an s-set"));
                shifts.pop();
            }
            return;
        }
        for c in -self.bound..=self.bound {
            let u = used + self.term(r, c);
            if u <= self.budget {
                shifts.push(c);
                self.run(shifts, u, out);
                shifts.pop();
            }
        }
    }
}

/// Every `s`-core with at most `max_size` boxes, by size then parts.
pub fn s_cores_up_to(s: usize, max_size: u64) -> Vec<Partition> {
    let mut cores: Vec<Partition> = s_sets_up_to(s, max_size)
        .iter()
        .map(|q| core_from_s_set(q).expect("valid s-set"))
        .collect();
    cores.sort_by(|a, b| {
        a.size()
            .cmp(&b.size())
            .then_with(|| a.parts().cmp(b.parts()))
    });
    cores
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{brute_core, is_s_core_by_hooks, partitions_up_to};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sset(v: &[i64]) -> SSet {
        SSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn beta_sets() {
        assert_eq!(beta_set(&part("6,6,2,1")).heads(), &[5, 4, -1, -3]);
        assert!(beta_set(&part("")).heads().is_empty());
        assert_eq!(beta_set(&part("5,2,2,1")).heads(), &[4, 0, -1, -3]);
        let b = beta_set(&part("6,6,2,1"));
        let beads: Vec<i64> = (-8..=6).filter(|&x| b.contains(x)).collect();
        assert_eq!(beads, vec![-8, -7, -6, -5, -3, -1, 4, 5]);
    }

    #[test]
    fn beta_set_inverse() {
        let b = BetaSet::new(vec![5, 4, -1, -3]).unwrap();
        assert_eq!(partition_from_beta_set(&b).unwrap(), part("6,6,2,1"));
        assert_eq!(
            partition_from_beta_set(&BetaSet::new(vec![]).unwrap()).unwrap(),
            part("")
        );
        assert!(BetaSet::new(vec![2, -1, -1]).is_err());
        assert!(BetaSet::new(vec![-1, 2]).is_err());
        assert!(BetaSet::new(vec![2, -1, -4]).is_err());
    }

    #[test]
    fn core_examples() {
        assert_eq!(core(&part("6,6,2,1"), 5), part("5,2,2,1"));
        assert_eq!(core(&part("4,2,1,1"), 4), part(""));
        assert_eq!(core(&part("3,1,1"), 4), part("3,1,1"));
        assert_eq!(core(&part("7,3"), 1), part(""));
    }

    #[test]
    fn core_test_examples() {
        assert!(is_s_core(&part("5,2,2,1"), 5));
        assert!(!is_s_core(&part("6,6,2,1"), 5));
        assert!(is_s_core(&part(""), 7));
    }

    #[test]
    fn q_sets() {
        assert_eq!(
            q_set(&part("5,2,2,1"), 5).unwrap(),
            sset(&[5, -4, 2, -2, 9])
        );
        for s in 2..8 {
            assert_eq!(q_set(&part(""), s).unwrap(), SSet::origin(s).unwrap());
        }
        assert_eq!(q_set(&part("3,1,1"), 3).unwrap(), sset(&[-3, 1, 5]));
        assert_eq!(q_set(&part("6,6,2,1"), 5), Err(Error::NotCore { s: 5 }));
        assert_eq!(
            q_set(&part(""), 1),
            Err(Error::ModulusTooSmall { s: 1, min: 2 })
        );
    }

    #[test]
    fn cores_from_s_sets() {
        assert_eq!(
            core_from_s_set(&sset(&[5, -4, 2, -2, 9])).unwrap(),
            part("5,2,2,1")
        );
        for s in 2..8 {
            assert_eq!(
                core_from_s_set(&SSet::origin(s).unwrap()).unwrap(),
                part("")
            );
        }
        assert_eq!(core_from_s_set(&sset(&[-3, 1, 5])).unwrap(), part("3,1,1"));
    }

    #[test]
    fn sset_validation_and_text() {
        assert!(SSet::new(vec![0, 3, 0]).is_err());
        assert!(SSet::new(vec![0, 1, 5]).is_err());
        assert!(SSet::new(vec![7]).is_err());
        let q = sset(&[5, -4, 2, -2, 9]);
        assert_eq!(q.to_string(), "[-4,-2,2,5,9]");
        assert_eq!("[-4,-2,2,5,9]".parse::<SSet>().unwrap(), q);
        assert!("-4,-2,2,5,9".parse::<SSet>().is_err());
        assert_eq!(q.congruent_to(0), 5);
        assert_eq!(q.congruent_to(-1), 9);
    }

    #[test]
    fn abacus_core_matches_brute_force() {
        for p in partitions_up_to(16) {
            for s in 1..=7 {
                let c = core(&p, s);
                assert_eq!(c, brute_core(&p, s), "{p} s={s}");
                assert_eq!(is_s_core(&p, s), is_s_core_by_hooks(&p, s));
                assert_eq!(c == p, is_s_core(&p, s));
            }
        }
    }

    #[test]
    fn q_set_round_trip_on_cores() {
        for p in partitions_up_to(18) {
            for s in 2..=5 {
                if is_s_core(&p, s) {
                    let q = q_set(&p, s).unwrap();
                    assert_eq!(core_from_s_set(&q).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn core_size_from_sset() {
        assert_eq!(sset(&[-3, 1, 5]).core_size(), 5);
        assert_eq!(sset(&[5, -4, 2, -2, 9]).core_size(), 10);
        for p in partitions_up_to(14) {
            for s in 2..=5 {
                if is_s_core(&p, s) {
                    assert_eq!(q_set(&p, s).unwrap().core_size(), p.size() as u128);
                }
            }
        }
    }

    #[test]
    fn bounded_core_listing_matches_filter() {
        for s in 2..=6 {
            for n in [0, 1, 5, 16] {
                let mut want: Vec<Partition> = partitions_up_to(n)
                    .into_iter()
                    .filter(|p| is_s_core(p, s))
                    .collect();
                want.sort_by(|a, b| {
                    a.size()
                        .cmp(&b.size())
                        .then_with(|| a.parts().cmp(b.parts()))
                });
                assert_eq!(s_cores_up_to(s, n as u64), want, "s={s} n={n}");
            }
        }
        assert_eq!(s_cores_up_to(3, 30).len(), 38);
    }

    #[test]
    fn sset_t_core_shortcut() {
        for p in partitions_up_to(14) {
            for s in 2..=5 {
                if !is_s_core(&p, s) {
                    continue;
                }
                let q = q_set(&p, s).unwrap();
                for t in 1..=7 {
                    assert_eq!(
                        sset_core_is_t_core(&q, t),
                        is_s_core(&p, t),
                        "{p} s={s} t={t}"
                    );
                }
            }
        }
    }
}
