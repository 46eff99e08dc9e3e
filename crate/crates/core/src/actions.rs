//! Two level-`t` actions of the affine symmetric group on `s`-points.
//!
//! * `ψ_t` acts by reflections: `σ_i` (`1 <= i < s`) swaps coordinates `i` and
//!   `i+1`, and `σ_0` reflects in `H_{1s}^t`.
//! * `χ_t` acts by residues: `σ_i` adds `t` to the coordinate congruent to
//!   `(i-1)t` and subtracts `t` from the one congruent to `it` (mod `s`).
//!
//! `χ_t` commutes with reordering coordinates, so it also acts on `s`-sets and
//! through them on `s`-cores. Words are applied left to right.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::Serialize;

use crate::abacus::{core_from_s_set, q_set, SSet};
use crate::error::{Error, Result};
use crate::geometry::{check_coprime, SPoint};
use crate::partition::Partition;

/// Generator `σ_i`, `0 <= i < s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GeneratorIndex(usize);

impl GeneratorIndex {
    pub fn new(i: usize, s: usize) -> Result<Self> {
        if i >= s {
            return Err(Error::InvalidGenerator { index: i, s });
        }
        Ok(GeneratorIndex(i))
    }

    pub fn index(self) -> usize {
        self.0
    }
}

/// A word in the generators, not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rejects letters outside `0..s`.
    pub fn check(&self, s: usize) -> Result<()> {
        self.0
            .iter()
            .try_for_each(|&i| GeneratorIndex::new(i, s).map(|_| ()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, i) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("generator {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    Psi,
    Chi,
}

fn check_generator(i: usize, s: usize) -> Result<()> {
    GeneratorIndex::new(i, s).map(|_| ())
}

/// `ψ_t(σ_i)` applied to `p`.
pub fn psi_gen(i: usize, t: usize, p: &SPoint) -> Result<SPoint> {
    let s = p.s();
    check_generator(i, s)?;
    if t == 0 {
        return Err(Error::ZeroLevel);
    }
    let mut c = p.coords().to_vec();
    if i == 0 {
        let st = (s as i64).checked_mul(t as i64).ok_or(Error::Overflow)?;
        let first = c[s - 1].checked_sub(st).ok_or(Error::Overflow)?;
        let last = c[0].checked_add(st).ok_or(Error::Overflow)?;
        c[0] = first;
        c[s - 1] = last;
    } else {
        c.swap(i - 1, i);
    }
    Ok(SPoint::from_coords_unchecked(c))
}

/// Positions of the coordinates congruent to `(i-1)t` and `it` mod `s`.
fn chi_targets(i: usize, t: usize, coords: &[i64]) -> (usize, usize) {
    let s = coords.len() as i64;
    let want_up = ((i as i64 - 1) * t as i64).rem_euclid(s);
    let want_down = (i as i64 * t as i64).rem_euclid(s);
    let find = |r: i64| {
        coords
            .iter()
            .position(|&x| x.rem_euclid(s) == r)
            .expect("coordinates meet every residue class")
    };
    (find(want_up), find(want_down))
}

fn chi_coords(i: usize, t: usize, coords: &[i64]) -> Result<Vec<i64>> {
    let s = coords.len();
    check_generator(i, s)?;
    check_coprime(s, t)?;
    let (up, down) = chi_targets(i, t, coords);
    let mut c = coords.to_vec();
    c[up] = c[up].checked_add(t as i64).ok_or(Error::Overflow)?;
    c[down] = c[down].checked_sub(t as i64).ok_or(Error::Overflow)?;
    Ok(c)
}

/// `χ_t(σ_i)` applied to `p`.
pub fn chi_gen(i: usize, t: usize, p: &SPoint) -> Result<SPoint> {
    Ok(SPoint::from_coords_unchecked(chi_coords(i, t, p.coords())?))
}

pub fn chi_on_sset(i: usize, t: usize, q: &SSet) -> Result<SSet> {
    SSet::new(chi_coords(i, t, q.elements())?)
}

/// `χ_t(σ_i)` on an `s`-core, transported through its `s`-set.
pub fn chi_on_core(i: usize, s: usize, t: usize, lambda: &Partition) -> Result<Partition> {
    let q = q_set(lambda, s)?;
    core_from_s_set(&chi_on_sset(i, t, &q)?)
}

/// Box residue toggled by generator `i` of `χ_1` acting on cores.
///
/// Generator `σ_i` adds or removes the boxes of residue `i`; the
/// `residue_matching_is_identity` test pins this against
/// [`crate::partition::toggle_residue`].
pub const fn chi1_residue(i: usize) -> usize {
    i
}

pub fn apply_generator(action: Action, i: usize, t: usize, p: &SPoint) -> Result<SPoint> {
    match action {
        Action::Psi => psi_gen(i, t, p),
        Action::Chi => chi_gen(i, t, p),
    }
}

/// Applies the letters of `w` in order, first letter first.
pub fn apply_word(w: &Word, action: Action, t: usize, p: &SPoint) -> Result<SPoint> {
    w.check(p.s())?;
    w.letters()
        .iter()
        .try_fold(p.clone(), |acc, &i| apply_generator(action, i, t, &acc))
}

/// `α_t(p) = (p_s - (s-1)t, p_1 + t, …, p_{s-1} + t)`.
pub fn alpha(p: &SPoint, t: usize) -> Result<SPoint> {
    let s = p.s();
    let t = t as i64;
    let c = p.coords();
    let first = (s as i64 - 1)
        .checked_mul(t)
        .and_then(|x| c[s - 1].checked_sub(x))
        .ok_or(Error::Overflow)?;
    let mut out = Vec::with_capacity(s);
    out.push(first);
    for &x in &c[..s - 1] {
        out.push(x.checked_add(t).ok_or(Error::Overflow)?);
    }
    Ok(SPoint::from_coords_unchecked(out))
}

/// [`alpha`] on an arbitrary rational point.
pub fn alpha_rational(p: &[Rational64], t: usize) -> Vec<Rational64> {
    let s = p.len();
    let t = Rational64::from_integer(t as i64);
    let mut out = Vec::with_capacity(s);
    out.push(p[s - 1] - t * (s as i64 - 1));
    out.extend(p[..s - 1].iter().map(|&x| x + t));
    out
}
