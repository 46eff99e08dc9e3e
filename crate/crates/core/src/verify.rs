//! Randomized and exhaustive property sweeps behind `alcove-cores verify`.
//!
//! Each suite is a list of named checks. A check counts the cases it tried,
//! the failures, and keeps the first failing case in sweep order, so the
//! report is the same for every execution strategy.

use std::fmt;

use serde::Serialize;

use crate::abacus::{core, core_from_s_set, is_s_core, q_set, s_cores_up_to};
use crate::actions::{alpha, chi1_residue, chi_gen, chi_on_core, psi_gen};
use crate::error::Error;
use crate::exec::Exec;
use crate::geometry::{
    alcove_key, in_rhomboid, reflect, reflect_hyperplane, separating_hyperplanes, side_of,
    Hyperplane, SPoint,
};
use crate::orbits::{
    anderson_count, containment_chain, descend_to_t_core, enumerate_st_cores_with, kappa,
    residue_multiset, rhomboid_points,
};
use crate::partition::{
    brute_core, contains, is_s_core_by_hooks, partitions_up_to, toggle_residue, Partition,
};
use crate::sample::{random_s_core, random_spoint, rng, TestRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    CoreOracle,
    Actions,
    Olsson,
    Vandehey,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::CoreOracle => "core-oracle",
            Suite::Actions => "actions",
            Suite::Olsson => "olsson",
            Suite::Vandehey => "vandehey",
            Suite::All => "all",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::CoreOracle,
                Suite::Actions,
                Suite::Olsson,
                Suite::Vandehey,
            ],
            one => vec![one],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub s_max: usize,
    pub t_max: usize,
    pub seed: u64,
    /// Random cases per `(s, t)` pair.
    pub trials: usize,
    pub exec: Exec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            s_max: 6,
            t_max: 7,
            seed: 42,
            trials: 1000,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    /// First failing case, if any.
    pub example: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<12} {:<44} {:>9} {:>8}  status",
            "suite", "check", "cases", "failed"
        )?;
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{:<12} {:<44} {:>9} {:>8}  {status}",
                c.suite, c.name, c.cases, c.failures
            )?;
            if let Some(ex) = &c.example {
                writeln!(f, "{:<12} first failure: {ex}", "")?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        if failed == 0 {
            write!(f, "all {} checks passed", self.checks.len())
        } else {
            write!(f, "{failed} of {} checks failed", self.checks.len())
        }
    }
}

/// Case counter that remembers the first failure.
#[derive(Debug, Default)]
struct Tally {
    cases: u64,
    failures: u64,
    example: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.example.is_none() {
                self.example = Some(describe());
            }
        }
    }

    /// Counts an `Err` as a failed case.
    fn record_result(&mut self, r: Result<bool, Error>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures += other.failures;
        if self.example.is_none() {
            self.example = other.example;
        }
        self
    }

    fn finish(self, suite: Suite, name: &'static str) -> CheckResult {
        CheckResult {
            suite: suite.name(),
            name,
            cases: self.cases,
            failures: self.failures,
            example: self.example,
        }
    }
}

fn merge_all(parts: Vec<Tally>) -> Tally {
    parts.into_iter().fold(Tally::default(), Tally::merge)
}

fn coprime(s: usize, t: usize) -> bool {
    num_integer::gcd(s, t) == 1
}

/// Independent stream per check and parameter pair.
fn stream(cfg: &VerifyConfig, tag: u64, s: usize, t: usize) -> TestRng {
    let mix = cfg
        .seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(tag << 32)
        .wrapping_add((s as u64) << 16)
        .wrapping_add(t as u64);
    rng(mix)
}

/// Coprime pairs with `2 <= s <= s_max`, `1 <= t <= t_max`.
fn action_pairs(cfg: &VerifyConfig) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for s in 2..=cfg.s_max {
        for t in 1..=cfg.t_max {
            if coprime(s, t) {
                v.push((s, t));
            }
        }
    }
    v
}

/// Coprime pairs with `2 <= s <= s_max`, `2 <= t <= t_max`.
fn level_pairs(cfg: &VerifyConfig) -> Vec<(usize, usize)> {
    action_pairs(cfg)
        .into_iter()
        .filter(|&(_, t)| t >= 2)
        .collect()
}

const ORACLE_MAX_SIZE: usize = 20;
const TOGGLE_MAX_SIZE: u64 = 30;
const RANDOM_CORE_MAX_SIZE: u64 = 200;
const CHAIN_MAX: usize = 6;

type Check = fn(&VerifyConfig) -> CheckResult;

fn checks_of(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::CoreOracle => vec![
            core_matches_brute_force,
            hook_test_matches_abacus,
            q_set_round_trip,
            chi1_toggles_residue,
        ],
        Suite::Actions => vec![
            generators_are_involutions,
            distant_generators_commute,
            braid_relations,
            actions_commute_on_alcoves,
            level_one_agreement,
            chi1_moves_to_adjacent_alcove,
            reflections_respect_sides,
            level_actions_keep_t_core,
        ],
        Suite::Olsson => vec![
            t_core_of_s_core_is_s_core,
            descent_matches_abacus,
            residue_multiset_decides_t_core,
        ],
        Suite::Vandehey => vec![
            kappa_size_and_cores,
            enumeration_matches_count,
            cores_lie_in_kappa,
            rhomboid_chains_reach_kappa,
        ],
        Suite::All => Vec::new(),
    }
}

/// Runs every check of `suite`, in parallel when `cfg.exec` allows, and
/// reports them in a fixed order.
pub fn run(suite: Suite, cfg: &VerifyConfig) -> Report {
    let checks: Vec<Check> = suite.members().into_iter().flat_map(checks_of).collect();
    Report {
        checks: cfg.exec.map(&checks, |c| c(cfg)),
    }
}

// core-oracle

fn oracle_corpus() -> Vec<Partition> {
    partitions_up_to(ORACLE_MAX_SIZE)
}

fn core_matches_brute_force(cfg: &VerifyConfig) -> CheckResult {
    let corpus = oracle_corpus();
    let parts = cfg.exec.map(&corpus, |p| {
        let mut t = Tally::default();
        for s in 1..=cfg.s_max {
            t.record(core(p, s) == brute_core(p, s), || {
                format!("core({p}) s={s}")
            });
        }
        t
    });
    merge_all(parts).finish(Suite::CoreOracle, "abacus core = rim-hook stripping")
}

fn hook_test_matches_abacus(cfg: &VerifyConfig) -> CheckResult {
    let corpus = oracle_corpus();
    let parts = cfg.exec.map(&corpus, |p| {
        let mut t = Tally::default();
        for s in 1..=cfg.s_max {
            t.record(is_s_core(p, s) == is_s_core_by_hooks(p, s), || {
                format!("({p}) s={s}")
            });
        }
        t
    });
    merge_all(parts).finish(Suite::CoreOracle, "hook-length test = abacus test")
}

fn q_set_round_trip(cfg: &VerifyConfig) -> CheckResult {
    let corpus = oracle_corpus();
    let parts = cfg.exec.map(&corpus, |p| {
        let mut t = Tally::default();
        for s in 2..=cfg.s_max {
            if !is_s_core(p, s) {
                continue;
            }
            let ok = q_set(p, s)
                .and_then(|q| Ok(core_from_s_set(&q)? == *p && q.core_size() == p.size() as u128));
            t.record_result(ok, || format!("({p}) s={s}"));
        }
        t
    });
    merge_all(parts).finish(Suite::CoreOracle, "s-set round trip and size")
}

fn chi1_toggles_residue(cfg: &VerifyConfig) -> CheckResult {
    let ss: Vec<usize> = (2..=cfg.s_max).collect();
    let parts = cfg.exec.map(&ss, |&s| {
        let mut t = Tally::default();
        for lambda in s_cores_up_to(s, TOGGLE_MAX_SIZE) {
            for i in 0..s {
                let ok = chi_on_core(i, s, 1, &lambda)
                    .and_then(|a| Ok(a == toggle_residue(&lambda, chi1_residue(i), s)?));
                t.record_result(ok, || format!("({lambda}) s={s} i={i}"));
            }
        }
        t
    });
    merge_all(parts).finish(Suite::CoreOracle, "level-1 generator = residue toggle")
}

// actions

/// Runs `body` on `cfg.trials` random points for every pair in `pairs`.
fn point_sweep(
    cfg: &VerifyConfig,
    tag: u64,
    pairs: Vec<(usize, usize)>,
    body: impl Fn(&mut Tally, usize, usize, &SPoint) + Sync + Send,
) -> Tally {
    let parts = cfg.exec.map(&pairs, |&(s, t)| {
        let mut r = stream(cfg, tag, s, t);
        let mut tally = Tally::default();
        for _ in 0..cfg.trials {
            let p = random_spoint(&mut r, s, 8);
            body(&mut tally, s, t, &p);
        }
        tally
    });
    merge_all(parts)
}

type Generator = fn(usize, usize, &SPoint) -> crate::Result<SPoint>;

const BOTH_ACTIONS: [(&str, Generator); 2] = [("psi", psi_gen), ("chi", chi_gen)];

fn generators_are_involutions(cfg: &VerifyConfig) -> CheckResult {
    point_sweep(cfg, 1, action_pairs(cfg), |tally, s, t, p| {
        for i in 0..s {
            for (name, g) in BOTH_ACTIONS {
                let ok = g(i, t, p).and_then(|q| Ok(g(i, t, &q)? == *p));
                tally.record_result(ok, || format!("{name} i={i} t={t} p={p}"));
            }
        }
    })
    .finish(Suite::Actions, "generators square to the identity")
}

fn distant_generators_commute(cfg: &VerifyConfig) -> CheckResult {
    let pairs = action_pairs(cfg)
        .into_iter()
        .filter(|&(s, _)| s >= 4)
        .collect();
    point_sweep(cfg, 2, pairs, |tally, s, t, p| {
        for i in 0..s {
            for j in i + 2..s {
                if (j + 1) % s == i {
                    continue;
                }
                for (name, g) in BOTH_ACTIONS {
                    let ok = g(i, t, p)
                        .and_then(|x| g(j, t, &x))
                        .and_then(|a| Ok(a == g(i, t, &g(j, t, p)?)?));
                    tally.record_result(ok, || format!("{name} i={i} j={j} t={t} p={p}"));
                }
            }
        }
    })
    .finish(Suite::Actions, "distant generators commute")
}

fn braid_relations(cfg: &VerifyConfig) -> CheckResult {
    let pairs = action_pairs(cfg)
        .into_iter()
        .filter(|&(s, _)| s >= 3)
        .collect();
    point_sweep(cfg, 3, pairs, |tally, s, t, p| {
        for i in 0..s {
            let j = (i + 1) % s;
            for (name, g) in BOTH_ACTIONS {
                let word = |a: usize, b: usize| -> crate::Result<SPoint> {
                    g(a, t, &g(b, t, &g(a, t, p)?)?)
                };
                let ok = word(i, j).and_then(|x| Ok(x == word(j, i)?));
                tally.record_result(ok, || format!("{name} i={i} j={j} t={t} p={p}"));
            }
        }
    })
    .finish(Suite::Actions, "braid relations")
}

fn actions_commute_on_alcoves(cfg: &VerifyConfig) -> CheckResult {
    point_sweep(cfg, 4, action_pairs(cfg), |tally, s, t, p| {
        for a in 0..s {
            for b in 0..s {
                let ok = chi_gen(b, t, p)
                    .and_then(|x| psi_gen(a, t, &x))
                    .and_then(|x| {
                        Ok(alcove_key(&x) == alcove_key(&chi_gen(b, t, &psi_gen(a, t, p)?)?))
                    });
                tally.record_result(ok, || format!("a={a} b={b} t={t} p={p}"));
            }
        }
    })
    .finish(Suite::Actions, "level-t actions commute on alcoves")
}

fn level_one_agreement(cfg: &VerifyConfig) -> CheckResult {
    let ss: Vec<usize> = (2..=cfg.s_max).collect();
    let parts = cfg.exec.map(&ss, |&s| {
        let mut tally = Tally::default();
        let o = crate::geometry::origin(s).expect("s >= 2");
        for i in 0..s {
            let ok = psi_gen(i, 1, &o).and_then(|a| Ok(a == chi_gen(i, 1, &o)?));
            tally.record_result(ok, || format!("s={s} i={i}"));
        }
        tally
    });
    merge_all(parts).finish(Suite::Actions, "level-1 actions agree at the origin")
}

fn chi1_moves_to_adjacent_alcove(cfg: &VerifyConfig) -> CheckResult {
    let pairs = (2..=cfg.s_max).map(|s| (s, 1)).collect();
    point_sweep(cfg, 5, pairs, |tally, s, _, p| {
        for i in 0..s {
            let ok = chi_gen(i, 1, p).and_then(|q| Ok(separating_hyperplanes(p, &q)?.len() == 1));
            tally.record_result(ok, || format!("i={i} p={p}"));
        }
    })
    .finish(Suite::Actions, "level-1 generators cross one wall")
}

fn reflections_respect_sides(cfg: &VerifyConfig) -> CheckResult {
    let pairs = (2..=cfg.s_max).map(|s| (s, 0)).collect();
    point_sweep(cfg, 6, pairs, |tally, s, _, p| {
        let c = p.coords();
        let (i, j) = (
            1 + c[0].rem_euclid(s as i64) as usize,
            1 + c[s - 1].rem_euclid(s as i64) as usize,
        );
        let (i, j) = if i == j { (1, s) } else { (i.min(j), i.max(j)) };
        let r = Hyperplane::new(i, j, c[1].rem_euclid(7) - 3).expect("indices ordered");
        let q = chi_gen(c[0].rem_euclid(s as i64) as usize, 1, p)
            .and_then(|x| chi_gen(c[1].rem_euclid(s as i64) as usize, 1, &x));
        let ok = q.and_then(|q| {
            let (rp, rq) = (reflect(p, &r)?, reflect(&q, &r)?);
            let mut image: Vec<Hyperplane> = separating_hyperplanes(p, &q)?
                .iter()
                .map(|h| reflect_hyperplane(h, &r))
                .collect();
            image.sort();
            let mut direct = separating_hyperplanes(&rp, &rq)?;
            direct.sort();
            let same_side = |h: &Hyperplane| side_of(p, h) == side_of(&q, h);
            let kept = nearby_hyperplanes(s).iter().all(|h| {
                let rh = reflect_hyperplane(h, &r);
                same_side(h) == (side_of(&rp, &rh) == side_of(&rq, &rh))
            });
            Ok(reflect(&rp, &r)? == *p && image == direct && kept)
        });
        tally.record_result(ok, || format!("p={p} r={r}"));
    })
    .finish(Suite::Actions, "reflections are involutions and keep sides")
}

/// A fixed spread of hyperplanes near the origin.
fn nearby_hyperplanes(s: usize) -> Vec<Hyperplane> {
    let mut v = Vec::new();
    for i in 1..=s {
        for j in i + 1..=s {
            for k in -2..=2 {
                v.push(Hyperplane { i, j, k });
            }
        }
    }
    v
}

fn level_actions_keep_t_core(cfg: &VerifyConfig) -> CheckResult {
    point_sweep(cfg, 7, action_pairs(cfg), |tally, s, t, p| {
        let t_core_of = |x: &SPoint| core_from_s_set(&x.to_sset()).map(|c| core(&c, t));
        let Ok(base) = t_core_of(p) else {
            tally.record(false, || format!("p={p}"));
            return;
        };
        for i in 0..s {
            for (name, g) in BOTH_ACTIONS {
                let ok = g(i, t, p).and_then(|q| Ok(t_core_of(&q)? == base));
                tally.record_result(ok, || format!("{name} i={i} t={t} p={p}"));
            }
        }
        let ok = alpha(p, t).and_then(|q| Ok(t_core_of(&q)? == base));
        tally.record_result(ok, || format!("alpha t={t} p={p}"));
    })
    .finish(Suite::Actions, "psi, chi and alpha keep the t-core")
}

// olsson

fn core_sweep(
    cfg: &VerifyConfig,
    tag: u64,
    body: impl Fn(&mut Tally, &mut TestRng, usize, usize, &Partition) + Sync + Send,
) -> Tally {
    let pairs: Vec<(usize, usize)> = level_pairs(cfg)
        .into_iter()
        .filter(|&(s, t)| s != t)
        .collect();
    let parts = cfg.exec.map(&pairs, |&(s, t)| {
        let mut r = stream(cfg, tag, s, t);
        let mut tally = Tally::default();
        for _ in 0..cfg.trials {
            let lambda = random_s_core(&mut r, s, RANDOM_CORE_MAX_SIZE);
            body(&mut tally, &mut r, s, t, &lambda);
        }
        tally
    });
    merge_all(parts)
}

fn t_core_of_s_core_is_s_core(cfg: &VerifyConfig) -> CheckResult {
    core_sweep(cfg, 11, |tally, _, s, t, lambda| {
        tally.record(is_s_core(&core(lambda, t), s), || {
            format!("({lambda}) s={s} t={t}")
        });
    })
    .finish(Suite::Olsson, "t-cores of s-cores stay s-cores")
}

fn descent_matches_abacus(cfg: &VerifyConfig) -> CheckResult {
    core_sweep(cfg, 12, |tally, _, s, t, lambda| {
        let ok = descend_to_t_core(lambda, s, t).map(|(nu, trace)| {
            nu == core(lambda, t) && trace.sums_of_squares().windows(2).all(|w| w[1] < w[0])
        });
        tally.record_result(ok, || format!("({lambda}) s={s} t={t}"));
    })
    .finish(Suite::Olsson, "orbit descent = abacus t-core")
}

fn residue_multiset_decides_t_core(cfg: &VerifyConfig) -> CheckResult {
    core_sweep(cfg, 13, |tally, r, s, t, lambda| {
        // a random partner, and one in the same level-t orbit
        let other = random_s_core(r, s, 60);
        let mut walked = q_set(lambda, s).map(|q| SPoint::from_sset(&q));
        for _ in 0..6 {
            let i = rand::Rng::gen_range(r, 0..s);
            walked = walked.and_then(|p| chi_gen(i, t, &p));
        }
        let partners = [
            Ok(other),
            walked.and_then(|p| core_from_s_set(&p.to_sset())),
        ];
        for mu in partners {
            let ok = mu.and_then(|mu| {
                let same_multiset =
                    residue_multiset(&q_set(lambda, s)?, t) == residue_multiset(&q_set(&mu, s)?, t);
                Ok(same_multiset == (core(lambda, t) == core(&mu, t)))
            });
            tally.record_result(ok, || format!("({lambda}) s={s} t={t}"));
        }
    })
    .finish(Suite::Olsson, "residue multiset decides the t-core")
}

// vandehey

fn vandehey_pairs(cfg: &VerifyConfig) -> Vec<(usize, usize)> {
    level_pairs(cfg)
        .into_iter()
        .filter(|&(s, t)| s != t)
        .collect()
}

fn kappa_size_and_cores(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    for (s, t) in vandehey_pairs(cfg) {
        let ok = kappa(s, t).map(|k| {
            let (s2, t2) = ((s * s - 1) as u64, (t * t - 1) as u64);
            k.size() * 24 == s2 * t2 && is_s_core(&k, s) && is_s_core(&k, t)
        });
        tally.record_result(ok, || format!("s={s} t={t}"));
    }
    tally.finish(
        Suite::Vandehey,
        "kappa is an (s,t)-core of the extremal size",
    )
}

fn enumeration_matches_count(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    for (s, t) in vandehey_pairs(cfg) {
        let ok = enumerate_st_cores_with(s, t, cfg.exec).and_then(|cores| {
            let all_cores = cores.iter().all(|c| is_s_core(c, s) && is_s_core(c, t));
            Ok(all_cores && cores.len() as u128 == anderson_count(s, t)?)
        });
        tally.record_result(ok, || format!("s={s} t={t}"));
    }
    tally.finish(Suite::Vandehey, "(s,t)-core count = C(s+t,s)/(s+t)")
}

fn cores_lie_in_kappa(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    for (s, t) in vandehey_pairs(cfg) {
        match (enumerate_st_cores_with(s, t, cfg.exec), kappa(s, t)) {
            (Ok(cores), Ok(k)) => {
                for c in cores {
                    tally.record(contains(&k, &c), || format!("({c}) s={s} t={t}"));
                }
            }
            (Err(e), _) | (_, Err(e)) => tally.record(false, || format!("s={s} t={t}: {e}")),
        }
    }
    tally.finish(Suite::Vandehey, "every (s,t)-core lies inside kappa")
}

fn rhomboid_chains_reach_kappa(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    for (s, t) in action_pairs(cfg) {
        if s > CHAIN_MAX || t > CHAIN_MAX {
            continue;
        }
        let (pts, k) = match (rhomboid_points(s, t, cfg.exec), kappa(s, t)) {
            (Ok(p), Ok(k)) => (p, k),
            (Err(e), _) | (_, Err(e)) => {
                tally.record(false, || format!("s={s} t={t}: {e}"));
                continue;
            }
        };
        let parts = cfg.exec.map(&pts, |p| {
            let mut one = Tally::default();
            let ok = containment_chain(p, s, t).and_then(|chain| {
                let monotone = chain.cores.windows(2).all(|w| contains(&w[1], &w[0]));
                let first_in = contains(&k, &chain.cores[0]);
                Ok(monotone && first_in && chain.cores.last() == Some(&k) && in_rhomboid(p, t)?)
            });
            one.record_result(ok, || format!("p={p} s={s} t={t}"));
            one
        });
        tally = tally.merge(merge_all(parts));
    }
    tally.finish(
        Suite::Vandehey,
        "rhomboid walks grow monotonically to kappa",
    )
}
