//! The space `P^s` of real `s`-tuples summing to `s(s-1)/2`, cut into alcoves
//! by the hyperplanes `H_ij^k = { p : p_j - p_i = k s }`.
//!
//! Alcoves are never built as regions. Each alcove holds exactly one
//! `s`-point, so an [`SPoint`] (or its [`AlcoveKey`]) names the alcove.
//! All arithmetic is exact.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use serde::Serialize;

use crate::abacus::{check_residue_system, parse_int_list, SSet};
use crate::error::{Error, Result};

/// Ordered integer point of `P^s` with pairwise incongruent coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SPoint {
    coords: Vec<i64>,
}

/// `H_ij^k` with `1 <= i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Hyperplane {
    pub i: usize,
    pub j: usize,
    pub k: i64,
}

/// `floor((p_j - p_i) / s)` for every pair `i < j`, in lexicographic pair order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AlcoveKey(pub Vec<i64>);

impl SPoint {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        check_residue_system(&coords).map_err(Error::InvalidSPoint)?;
        Ok(SPoint { coords })
    }

    /// The dominant point listing `q` in ascending order.
    pub fn from_sset(q: &SSet) -> Self {
        SPoint {
            coords: q.elements().to_vec(),
        }
    }

    pub fn to_sset(&self) -> SSet {
        SSet::new(self.coords.clone()).expect("s-point coordinates form an s-set")
    }

    pub fn s(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coordinate `i`, 1-based.
    pub fn at(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] <= w[1])
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<i64>) -> Self {
        debug_assert!(check_residue_system(&coords).is_ok());
        SPoint { coords }
    }
}

impl fmt::Display for SPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for SPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("s-point must be parenthesised: {s:?}")))?;
        SPoint::new(parse_int_list(body)?)
    }
}

impl Hyperplane {
    pub fn new(i: usize, j: usize, k: i64) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::InvalidHyperplane(format!(
                "need 1 <= i < j, got i={i} j={j}"
            )));
        }
        Ok(Hyperplane { i, j, k })
    }

    fn check_dim(&self, s: usize) -> Result<()> {
        if self.j > s {
            return Err(Error::InvalidHyperplane(format!(
                "{self} does not live in P^{s}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{{{},{}}}^{}", self.i, self.j, self.k)
    }
}

pub fn origin(s: usize) -> Result<SPoint> {
    if s < 2 {
        return Err(Error::ModulusTooSmall { s, min: 2 });
    }
    Ok(SPoint {
        coords: (0..s as i64).collect(),
    })
}

/// Orthogonal reflection in `h`: `p ↦ p - (p_j - p_i - ks)(e_j - e_i)`.
pub fn reflect(p: &SPoint, h: &Hyperplane) -> Result<SPoint> {
    h.check_dim(p.s())?;
    let s = p.s() as i64;
    let (pi, pj) = (p.at(h.i), p.at(h.j));
    let shift = h.k.checked_mul(s).ok_or(Error::Overflow)?;
    let d = pj
        .checked_sub(pi)
        .and_then(|x| x.checked_sub(shift))
        .ok_or(Error::Overflow)?;
    let mut coords = p.coords.clone();
    coords[h.i - 1] = pi.checked_add(d).ok_or(Error::Overflow)?;
    coords[h.j - 1] = pj.checked_sub(d).ok_or(Error::Overflow)?;
    Ok(SPoint::from_coords_unchecked(coords))
}

/// Image of the hyperplane `h` under the reflection in `r`.
///
/// The reflection in `H_ij^k` swaps coordinates `i` and `j` and then shifts
/// them by `-ks` and `+ks`; pulling the defining equation of `h` back through
/// that map gives the image directly.
pub fn reflect_hyperplane(h: &Hyperplane, r: &Hyperplane) -> Hyperplane {
    let swap = |x: usize| {
        if x == r.i {
            r.j
        } else if x == r.j {
            r.i
        } else {
            x
        }
    };
    let offset = |x: usize| {
        if x == r.i {
            -r.k
        } else if x == r.j {
            r.k
        } else {
            0
        }
    };
    let (l, m) = (swap(h.i), swap(h.j));
    let n = h.k - (offset(h.j) - offset(h.i));
    if l < m {
        Hyperplane { i: l, j: m, k: n }
    } else {
        Hyperplane { i: m, j: l, k: -n }
    }
}

/// Sign of `p_j - p_i - ks`; never zero for an `s`-point.
pub fn side_of(p: &SPoint, h: &Hyperplane) -> i8 {
    let v = (p.at(h.j) as i128 - p.at(h.i) as i128) - h.k as i128 * p.s() as i128;
    debug_assert!(v != 0, "s-points never lie on hyperplanes");
    if v > 0 {
        1
    } else {
        -1
    }
}

/// Every hyperplane with `p` and `q` strictly on opposite sides.
pub fn separating_hyperplanes(p: &SPoint, q: &SPoint) -> Result<Vec<Hyperplane>> {
    if p.s() != q.s() {
        return Err(Error::DimensionMismatch(p.s(), q.s()));
    }
    let s = p.s() as i64;
    let mut out = Vec::new();
    for i in 1..=p.s() {
        for j in i + 1..=p.s() {
            let a = p.at(j) - p.at(i);
            let b = q.at(j) - q.at(i);
            let (lo, hi) = (a.min(b), a.max(b));
            // lo < ks < hi, and ks never equals either endpoint
            let first = lo.div_euclid(s) + 1;
            let last = hi.div_euclid(s);
            out.extend((first..=last).map(|k| Hyperplane { i, j, k }));
        }
    }
    Ok(out)
}

pub fn alcove_key(p: &SPoint) -> AlcoveKey {
    let s = p.s() as i64;
    let mut key = Vec::with_capacity(p.s() * (p.s() - 1) / 2);
    for i in 1..=p.s() {
        for j in i + 1..=p.s() {
            key.push((p.at(j) - p.at(i)).div_euclid(s));
        }
    }
    AlcoveKey(key)
}

/// Sorts the coordinates, folding `P^s` onto the dominant region.
pub fn fold_to_dominant(p: &SPoint) -> SPoint {
    let mut coords = p.coords.clone();
    coords.sort_unstable();
    SPoint { coords }
}

/// `1 <= p_{i+1} - p_i <= t` for every `i`. Requires a dominant point.
pub fn in_rhomboid(p: &SPoint, t: usize) -> Result<bool> {
    if !p.is_dominant() {
        return Err(Error::NotDominant);
    }
    Ok(p.coords.windows(2).all(|w| {
        let d = w[1] - w[0];
        d >= 1 && d <= t as i64
    }))
}

pub(crate) fn check_coprime(s: usize, t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroLevel);
    }
    if s.gcd(&t) != 1 {
        return Err(Error::NotCoprime { s, t });
    }
    Ok(())
}

/// The vertex of the level-`t` rhomboid opposite the origin:
/// coordinate `i` is `(s - 1 + t(2i - 1 - s)) / 2`.
pub fn tip(s: usize, t: usize) -> Result<SPoint> {
    if s < 2 {
        return Err(Error::ModulusTooSmall { s, min: 2 });
    }
    check_coprime(s, t)?;
    let (si, ti) = (s as i64, t as i64);
    let coords = (1..=si)
        .map(|i| {
            let twice = (si - 1).checked_add(ti.checked_mul(2 * i - 1 - si)?)?;
            debug_assert!(twice % 2 == 0);
            Some(twice / 2)
        })
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Overflow)?;
    SPoint::new(coords)
}

/// Vertices `x_0, …, x_{s-1}` of the fundamental alcove dilated by `t`
/// about `x_0 = ((s-1)/2, …, (s-1)/2)`.
pub fn simplex_vertices(s: usize, t: usize) -> Result<Vec<Vec<Rational64>>> {
    if s < 2 {
        return Err(Error::ModulusTooSmall { s, min: 2 });
    }
    if t == 0 {
        return Err(Error::ZeroLevel);
    }
    let (si, ti) = (s as i64, t as i64);
    let centre = Rational64::new(si - 1, 2);
    Ok((0..si)
        .map(|i| {
            (1..=si)
                .map(|j| {
                    let shift = if j <= i { (i - si) * ti } else { i * ti };
                    centre + shift
                })
                .collect()
        })
        .collect())
}

/// `(j - i)/s < k < (j - i)t/s`, i.e. `h` cuts through the level-`t` rhomboid.
pub fn hyperplane_meets_rhomboid(h: &Hyperplane, s: usize, t: usize) -> bool {
    let gap = (h.j - h.i) as i64;
    let ks = h.k * s as i64;
    gap < ks && ks < gap * t as i64
}

/// All hyperplanes meeting the level-`t` rhomboid.
pub fn rhomboid_hyperplanes(s: usize, t: usize) -> Vec<Hyperplane> {
    let mut out = Vec::new();
    for i in 1..=s {
        for j in i + 1..=s {
            let gap = (j - i) as i64;
            for k in 1..=gap * t as i64 / s as i64 + 1 {
                let h = Hyperplane { i, j, k };
                if hyperplane_meets_rhomboid(&h, s, t) {
                    out.push(h);
                }
            }
        }
    }
    out
}
