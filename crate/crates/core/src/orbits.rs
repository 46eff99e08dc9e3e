//! Level-`t` orbits of `s`-cores, the largest `(s,t)`-core `κ_{s,t}`, and the
//! containment chains that place every `(s,t)`-core inside it.
//!
//! An orbit of `χ_t` on `s`-cores is infinite, but it contains exactly one
//! `t`-core: the element minimising `Σ a²` over its `s`-set. Greedy descent
//! on that sum finds it, and two cores share an orbit exactly when they
//! descend to the same place.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::abacus::{core_from_s_set, q_set, sset_core_is_t_core, SSet};
use crate::actions::{chi_gen, chi_on_core, chi_on_sset};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::{
    check_coprime, in_rhomboid, separating_hyperplanes, side_of, tip, Hyperplane, SPoint,
};
use crate::partition::{contains, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentStep {
    pub generator: usize,
    pub sset: SSet,
}

/// Record of a greedy descent through a level-`t` orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitDescentTrace {
    pub initial: Partition,
    pub start: SSet,
    pub steps: Vec<DescentStep>,
    pub result: Partition,
}

impl OrbitDescentTrace {
    /// `Σ a²` for the starting s-set and after every step.
    pub fn sums_of_squares(&self) -> Vec<i128> {
        std::iter::once(&self.start)
            .chain(self.steps.iter().map(|st| &st.sset))
            .map(SSet::sum_of_squares)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub generator: usize,
    pub crossed: Hyperplane,
}

/// Gallery from an `s`-point of the rhomboid to its tip, with the `s`-core
/// of every point on the way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentChain {
    pub points: Vec<SPoint>,
    pub cores: Vec<Partition>,
    pub steps: Vec<ChainStep>,
}

fn check_pair(s: usize, t: usize) -> Result<()> {
    if s < 2 {
        return Err(Error::ModulusTooSmall { s, min: 2 });
    }
    check_coprime(s, t)
}

/// How many elements of `q` fall in each residue class mod `t`.
pub fn residue_multiset(q: &SSet, t: usize) -> Vec<usize> {
    assert!(t >= 1, "t must be positive");
    let mut counts = vec![0; t];
    for &a in q.elements() {
        counts[a.rem_euclid(t as i64) as usize] += 1;
    }
    counts
}

/// Walks down the level-`t` orbit of `lambda`, always taking the smallest
/// generator that strictly lowers `Σ a²`, and returns the `t`-core reached.
pub fn descend_to_t_core(
    lambda: &Partition,
    s: usize,
    t: usize,
) -> Result<(Partition, OrbitDescentTrace)> {
    check_pair(s, t)?;
    let start = q_set(lambda, s)?;
    let mut cur = start.clone();
    let mut steps = Vec::new();
    loop {
        let here = cur.sum_of_squares();
        let mut moved = false;
        for i in 0..s {
            let next = chi_on_sset(i, t, &cur)?;
            if next.sum_of_squares() < here {
                steps.push(DescentStep {
                    generator: i,
                    sset: next.clone(),
                });
                cur = next;
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }
    let point = SPoint::from_sset(&cur);
    if !sset_core_is_t_core(&cur, t) || !in_rhomboid(&point, t)? {
        return Err(Error::DescentStuck(format!("stopped at {cur}")));
    }
    let result = core_from_s_set(&cur)?;
    let trace = OrbitDescentTrace {
        initial: lambda.clone(),
        start,
        steps,
        result: result.clone(),
    };
    Ok((result, trace))
}

pub fn same_level_t_orbit(lambda: &Partition, mu: &Partition, s: usize, t: usize) -> Result<bool> {
    Ok(descend_to_t_core(lambda, s, t)?.0 == descend_to_t_core(mu, s, t)?.0)
}

/// `κ_{s,t}`: the `s`-core at the tip of the level-`t` rhomboid.
pub fn kappa(s: usize, t: usize) -> Result<Partition> {
    check_pair(s, t)?;
    core_from_s_set(&tip(s, t)?.to_sset())
}

/// `C(s+t, s) / (s+t)`.
pub fn anderson_count(s: usize, t: usize) -> Result<u128> {
    check_coprime(s, t)?;
    let n = (s + t) as u128;
    let k = s.min(t) as u128;
    let mut c: u128 = 1;
    for i in 1..=k {
        // c = C(n - k + i, i), exact at every step
        c = c.checked_mul(n - k + i).ok_or(Error::Overflow)? / i;
    }
    Ok(c / n)
}

/// Depth-first fill of the gap vector: prefix sums must stay pairwise
/// incongruent mod `s`, which also makes the first coordinate integral.
/// `slots[r]` holds the prefix sum with residue `r`. With `t_cores`, a new
/// coordinate `x` is also rejected when the earlier one congruent to `x - t`
/// lies below `x - t`, so only points of `(s,t)`-cores survive.
struct RhomboidSearch {
    s: usize,
    t: usize,
    t_cores: bool,
}

impl RhomboidSearch {
    fn run(&self, prefix: &mut Vec<i64>, slots: &mut [Option<i64>], out: &mut Vec<SPoint>) {
        let si = self.s as i64;
        if prefix.len() == self.s {
            let offset: i64 = prefix.iter().sum();
            let base = si * (si - 1) / 2 - offset;
            debug_assert_eq!(base.rem_euclid(si), 0);
            let first = base / si;
            out.push(SPoint::from_coords_unchecked(
                prefix.iter().map(|&x| first + x).collect(),
            ));
            return;
        }
        let last = *prefix.last().expect("prefix starts at 0");
        for d in 1..=self.t as i64 {
            let next = last + d;
            let r = next.rem_euclid(si) as usize;
            if slots[r].is_some() {
                continue;
            }
            if self.t_cores {
                let below = next - self.t as i64;
                if matches!(slots[below.rem_euclid(si) as usize], Some(y) if y < below) {
                    continue;
                }
            }
            slots[r] = Some(next);
            prefix.push(next);
            self.run(prefix, slots, out);
            prefix.pop();
            slots[r] = None;
        }
    }

    fn points(&self, exec: Exec) -> Vec<SPoint> {
        let si = self.s as i64;
        // one task per valid first gap
        let seeds: Vec<i64> = (1..=self.t as i64)
            .filter(|d| d.rem_euclid(si) != 0)
            .collect();
        exec.flat_map(&seeds, |&d| {
            let mut slots = vec![None; self.s];
            let mut prefix = vec![0];
            slots[0] = Some(0);
            let mut out = Vec::new();
            // the first gap passes the t-core test: its partner residue is empty or 0 >= d - t
            slots[d.rem_euclid(si) as usize] = Some(d);
            prefix.push(d);
            self.run(&mut prefix, &mut slots, &mut out);
            out
        })
    }
}

/// Every `s`-point of the level-`t` rhomboid, in lexicographic order of
/// their gap vectors.
pub fn rhomboid_points(s: usize, t: usize, exec: Exec) -> Result<Vec<SPoint>> {
    check_pair(s, t)?;
    Ok(RhomboidSearch {
        s,
        t,
        t_cores: false,
    }
    .points(exec))
}

/// All `(s,t)`-cores, sorted by size and then by parts.
pub fn enumerate_st_cores(s: usize, t: usize) -> Result<Vec<Partition>> {
    enumerate_st_cores_with(s, t, Exec::default())
}

pub fn enumerate_st_cores_with(s: usize, t: usize, exec: Exec) -> Result<Vec<Partition>> {
    check_pair(s, t)?;
    let points = RhomboidSearch {
        s,
        t,
        t_cores: true,
    }
    .points(exec);
    let mut cores = exec
        .map(&points, |p| {
            let q = p.to_sset();
            debug_assert!(sset_core_is_t_core(&q, t));
            core_from_s_set(&q)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    cores.sort_by(|a, b| {
        a.size()
            .cmp(&b.size())
            .then_with(|| a.parts().cmp(b.parts()))
    });
    Ok(cores)
}

/// `b <= a + 1` where `a, b ∈ Q(λ)` are congruent to `i - 1` and `i` mod `s`.
/// When it holds, `χ_1(σ_i)` only adds boxes to `λ`.
pub fn chi1_grows(lambda: &Partition, s: usize, i: usize) -> Result<bool> {
    if i >= s {
        return Err(Error::InvalidGenerator { index: i, s });
    }
    let q = q_set(lambda, s)?;
    let a = q.congruent_to(i as i64 - 1);
    let b = q.congruent_to(i as i64);
    Ok(b <= a + 1)
}

/// Gallery walk from `p` to the tip of the level-`t` rhomboid using the
/// level-1 generators, crossing only hyperplanes that separate the current
/// point from the tip (smallest generator first). Every crossing keeps the
/// origin behind it, so the cores grow weakly at every step.
///
/// `p` must lie in the rhomboid itself; a non-dominant point is rejected
/// with [`Error::NotDominant`] even when its dominant fold is inside.
pub fn containment_chain(p: &SPoint, s: usize, t: usize) -> Result<ContainmentChain> {
    check_pair(s, t)?;
    if p.s() != s {
        return Err(Error::DimensionMismatch(p.s(), s));
    }
    if !in_rhomboid(p, t)? {
        return Err(Error::OutsideRhomboid { t });
    }
    let nabla = tip(s, t)?;
    let budget = separating_hyperplanes(p, &nabla)?.len();

    let mut cur = p.clone();
    let mut points = vec![cur.clone()];
    let mut cores = vec![core_from_s_set(&cur.to_sset())?];
    let mut steps = Vec::new();
    while cur != nabla {
        if steps.len() >= budget {
            return Err(Error::ChainStuck(format!(
                "more than {budget} crossings from {p} without reaching {nabla}"
            )));
        }
        let mut chosen = None;
        for i in 0..s {
            let next = chi_gen(i, 1, &cur)?;
            let walls = separating_hyperplanes(&cur, &next)?;
            let [wall] = walls.as_slice() else {
                return Err(Error::ChainStuck(format!(
                    "{cur} and {next} are separated by {} hyperplanes",
                    walls.len()
                )));
            };
            if side_of(&next, wall) == side_of(&nabla, wall) {
                chosen = Some((i, next, *wall));
                break;
            }
        }
        let Some((generator, next, crossed)) = chosen else {
            return Err(Error::ChainStuck(format!("no wall of {cur} faces {nabla}")));
        };
        let core = core_from_s_set(&next.to_sset())?;
        let prev = cores.last().expect("chain is never empty");
        if !contains(&core, prev) {
            return Err(Error::ChainStuck(format!(
                "crossing {crossed} from {cur} shrinks ({prev}) to ({core})"
            )));
        }
        steps.push(ChainStep { generator, crossed });
        points.push(next.clone());
        cores.push(core);
        cur = next;
    }
    Ok(ContainmentChain {
        points,
        cores,
        steps,
    })
}

/// The part of the level-`t` orbit of `start` reachable without passing
/// through cores larger than `max_size`.
pub fn bounded_orbit(
    start: &Partition,
    s: usize,
    t: usize,
    max_size: u64,
) -> Result<BTreeSet<Partition>> {
    check_pair(s, t)?;
    let mut seen = BTreeSet::new();
    if start.size() > max_size {
        return Ok(seen);
    }
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..s {
            let next = chi_on_core(i, s, t, &cur)?;
            if next.size() <= max_size && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abacus::{core, is_s_core};
    use crate::partition::partitions_up_to;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sset(v: &[i64]) -> SSet {
        SSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn residue_counts() {
        assert_eq!(residue_multiset(&sset(&[0, 1, 2]), 4), vec![1, 1, 1, 0]);
        assert_eq!(residue_multiset(&sset(&[-4, 1, 6]), 4), vec![1, 1, 1, 0]);
    }

    #[test]
    fn descent_examples() {
        let (nu, trace) = descend_to_t_core(&part("4,2,1,1"), 3, 4).unwrap();
        assert_eq!(nu, part(""));
        assert!(!trace.steps.is_empty());
        let (nu, trace) = descend_to_t_core(&part("3,1,1"), 3, 4).unwrap();
        assert_eq!(nu, part("3,1,1"));
        assert!(trace.steps.is_empty());
        let (nu, _) = descend_to_t_core(&part("6,4,2"), 3, 4).unwrap();
        assert_eq!(nu, core(&part("6,4,2"), 4));
        assert_eq!(
            descend_to_t_core(&part("2"), 2, 4).unwrap_err(),
            Error::NotCoprime { s: 2, t: 4 }
        );
        assert_eq!(
            descend_to_t_core(&part("3"), 3, 4).unwrap_err(),
            Error::NotCore { s: 3 }
        );
    }

    #[test]
    fn descent_traces_strictly_decrease() {
        for p in partitions_up_to(16) {
            for (s, t) in [(2, 3), (3, 4), (3, 5), (4, 5), (5, 3)] {
                if !is_s_core(&p, s) {
                    continue;
                }
                let (nu, trace) = descend_to_t_core(&p, s, t).unwrap();
                assert_eq!(nu, core(&p, t));
                assert!(trace.sums_of_squares().windows(2).all(|w| w[1] < w[0]));
            }
        }
    }

    #[test]
    fn orbit_membership() {
        assert!(same_level_t_orbit(&part("2"), &part("2"), 3, 4).unwrap());
        assert!(same_level_t_orbit(&part("4,2,1,1"), &part(""), 3, 4).unwrap());
        assert!(!same_level_t_orbit(&part("3,1,1"), &part(""), 3, 4).unwrap());
    }

    #[test]
    fn kappas() {
        assert_eq!(kappa(3, 4).unwrap(), part("3,1,1"));
        assert_eq!(kappa(2, 3).unwrap(), part("1"));
        assert!(kappa(4, 6).is_err());
        assert!(kappa(1, 3).is_err());
    }

    #[test]
    fn anderson() {
        assert_eq!(anderson_count(3, 4).unwrap(), 5);
        assert_eq!(anderson_count(2, 3).unwrap(), 2);
        assert_eq!(anderson_count(4, 5).unwrap(), 14);
        assert_eq!(anderson_count(11, 12).unwrap(), 58786);
        assert!(anderson_count(4, 6).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let got = enumerate_st_cores(3, 4).unwrap();
        let want: Vec<Partition> = ["", "1", "1,1", "2", "3,1,1"]
            .iter()
            .map(|s| part(s))
            .collect();
        assert_eq!(got, want);
        assert_eq!(enumerate_st_cores(2, 3).unwrap(), vec![part(""), part("1")]);
        let k = kappa(3, 4).unwrap();
        assert!(got.iter().all(|c| contains(&k, c)));
    }

    #[test]
    fn enumeration_matches_partition_filter() {
        for (s, t) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 3), (4, 5), (5, 2)] {
            let bound = (s * s - 1) * (t * t - 1) / 24;
            let brute: Vec<Partition> = partitions_up_to(bound)
                .into_iter()
                .filter(|p| is_s_core(p, s) && is_s_core(p, t))
                .collect();
            let mut got = enumerate_st_cores(s, t).unwrap();
            let mut brute_sorted = brute;
            got.sort();
            brute_sorted.sort();
            assert_eq!(got, brute_sorted, "s={s} t={t}");
        }
    }

    #[test]
    fn sequential_and_parallel_enumeration_agree() {
        for (s, t) in [(3, 7), (5, 6), (6, 5)] {
            assert_eq!(
                enumerate_st_cores_with(s, t, Exec::Sequential).unwrap(),
                enumerate_st_cores_with(s, t, Exec::Parallel).unwrap()
            );
        }
    }

    #[test]
    fn rhomboid_point_counts() {
        // four corners plus the interior point of (1)
        let pts = rhomboid_points(3, 4, Exec::Sequential).unwrap();
        assert_eq!(pts.len(), 5);
        assert!(pts.contains(&SPoint::new(vec![-1, 1, 3]).unwrap()));
        assert!(pts.iter().all(|p| in_rhomboid(p, 4).unwrap()));
    }

    #[test]
    fn chains() {
        let o = crate::geometry::origin(3).unwrap();
        let chain = containment_chain(&o, 3, 4).unwrap();
        assert_eq!(chain.points.last().unwrap(), &tip(3, 4).unwrap());
        assert_eq!(chain.cores.first().unwrap(), &part(""));
        assert_eq!(chain.cores.last().unwrap(), &part("3,1,1"));
        assert_eq!(chain.steps.len(), 4);
        let at_tip = containment_chain(&tip(3, 4).unwrap(), 3, 4).unwrap();
        assert!(at_tip.steps.is_empty());
        let far = SPoint::new(vec![-10, 1, 12]).unwrap();
        assert_eq!(
            containment_chain(&far, 3, 4).unwrap_err(),
            Error::OutsideRhomboid { t: 4 }
        );
    }

    #[test]
    fn chains_from_every_rhomboid_point() {
        let k = kappa(4, 5).unwrap();
        for p in rhomboid_points(4, 5, Exec::Sequential).unwrap() {
            let chain = containment_chain(&p, 4, 5).unwrap();
            assert_eq!(chain.cores.last().unwrap(), &k);
            assert!(chain.cores.windows(2).all(|w| contains(&w[1], &w[0])));
        }
        // The segment from a non-dominant point leaves the rhomboid, and
        // the walk from (6,-1,0,1) would shrink (3) to (2).
        let q = SPoint::new(vec![6, -1, 0, 1]).unwrap();
        assert_eq!(containment_chain(&q, 4, 5).unwrap_err(), Error::NotDominant);
    }

    #[test]
    fn growth_condition_implies_containment() {
        for s in 2..6 {
            for i in 0..s {
                assert!(chi1_grows(&part(""), s, i).unwrap());
            }
        }
        // Q((1)) = {-1, 1, 3}: i = 0 gives a = -1, b = 3; i = 1 gives a = 3, b = 1
        assert!(!chi1_grows(&part("1"), 3, 0).unwrap());
        assert!(chi1_grows(&part("1"), 3, 1).unwrap());
        assert!(!contains(
            &chi_on_core(0, 3, 1, &part("1")).unwrap(),
            &part("1")
        ));
        for p in partitions_up_to(15) {
            for s in 2..=5 {
                if !is_s_core(&p, s) {
                    continue;
                }
                for i in 0..s {
                    if chi1_grows(&p, s, i).unwrap() {
                        assert!(contains(&chi_on_core(i, s, 1, &p).unwrap(), &p));
                    }
                }
            }
        }
    }

    #[test]
    fn bounded_orbit_of_empty() {
        let orbit = bounded_orbit(&part(""), 3, 4, 12).unwrap();
        assert!(orbit.contains(&part("4,2,1,1")));
        assert!(orbit.iter().all(|p| core(p, 4).is_empty()));
    }
}
