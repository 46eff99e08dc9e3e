//! Partitions and Young diagrams: hooks, the rim, rim hooks, residues.
//!
//! Everything here works directly on the diagram, with no reference to the
//! abacus. [`brute_core`] in particular removes rim hooks one at a time and
//! serves as the reference that [`crate::abacus::core`] is checked against.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition stored as its positive parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box `(row, col)` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { row, col }
    }

    /// `(col - row) mod s`.
    pub fn residue(&self, s: usize) -> usize {
        (self.col as i64 - self.row as i64).rem_euclid(s as i64) as usize
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A removable rim hook, listed from its top-right box down to its
/// bottom-left box.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RimHook {
    boxes: Vec<Node>,
}

/// Whether [`boxes_of_residue`] looks for addable or removable boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxKind {
    Addable,
    Removable,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(
                "zero part before a positive part".into(),
            ));
        }
        let mut total: u64 = 0;
        for &p in &parts {
            total = total.checked_add(p as u64).ok_or(Error::SizeOverflow)?;
        }
        if total > i64::MAX as u64 {
            return Err(Error::SizeOverflow);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-based); rows past the end read as zero.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn contains_node(&self, n: Node) -> bool {
        n.row >= 1 && n.col >= 1 && n.col <= self.part(n.row)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// All boxes of the diagram in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("partition part {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl RimHook {
    /// Validates `boxes` as one of the removable rim hooks of `p`.
    pub fn from_boxes(p: &Partition, boxes: Vec<Node>) -> Result<Self> {
        let wanted: BTreeSet<Node> = boxes.iter().copied().collect();
        if wanted.len() != boxes.len() || boxes.is_empty() {
            return Err(Error::InvalidHook);
        }
        removable_rim_hooks(p, boxes.len())
            .into_iter()
            .find(|h| h.boxes.iter().copied().collect::<BTreeSet<_>>() == wanted)
            .ok_or(Error::InvalidHook)
    }

    pub fn boxes(&self) -> &[Node] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// The highest-rightmost box.
    pub fn start(&self) -> Node {
        self.boxes[0]
    }
}

/// Sum of the parts.
pub fn size(p: &Partition) -> u64 {
    p.size()
}

/// `[inner] ⊆ [outer]`.
pub fn contains(outer: &Partition, inner: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(i, o)| i <= o)
}

/// Hook length (arm + leg + 1) of every box.
pub fn hook_lengths(p: &Partition) -> BTreeMap<Node, u64> {
    let conj = p.conjugate();
    p.nodes()
        .map(|n| {
            let arm = p.part(n.row) - n.col;
            let leg = conj.part(n.col) - n.row;
            (n, (arm + leg + 1) as u64)
        })
        .collect()
}

pub fn is_s_core_by_hooks(p: &Partition, s: usize) -> bool {
    assert!(s >= 1, "s must be positive");
    hook_lengths(p).values().all(|&h| h % s as u64 != 0)
}

/// Boxes `(i, j)` of `[p]` with `(i+1, j+1)` outside `[p]`.
pub fn rim(p: &Partition) -> BTreeSet<Node> {
    let mut out = BTreeSet::new();
    for row in 1..=p.len() {
        let from = p.part(row + 1).max(1);
        for col in from..=p.part(row) {
            out.insert(Node::new(row, col));
        }
    }
    out
}

/// The rim hook whose top-right box sits in `row` and whose bottom-left box
/// sits in column `col`.
fn hook_at(p: &Partition, conj: &Partition, row: usize, col: usize) -> RimHook {
    let last = conj.part(col);
    let mut boxes = Vec::new();
    for r in row..last {
        let lo = p.part(r + 1);
        for c in (lo..=p.part(r)).rev() {
            boxes.push(Node::new(r, c));
        }
    }
    for c in (col..=p.part(last)).rev() {
        boxes.push(Node::new(last, c));
    }
    RimHook { boxes }
}

/// Every rim `s`-hook of `p`, ordered by the row of its top-right box.
pub fn removable_rim_hooks(p: &Partition, s: usize) -> Vec<RimHook> {
    assert!(s >= 1, "s must be positive");
    let conj = p.conjugate();
    let mut out = Vec::new();
    for row in 1..=p.len() {
        // hook lengths strictly decrease along a row, so at most one match
        let hit = (1..=p.part(row)).find(|&col| {
            let h = (p.part(row) - col) + (conj.part(col) - row) + 1;
            h == s
        });
        if let Some(col) = hit {
            let hook = hook_at(p, &conj, row, col);
            debug_assert_eq!(hook.len(), s);
            out.push(hook);
        }
    }
    out
}

pub fn remove_rim_hook(p: &Partition, h: &RimHook) -> Result<Partition> {
    if h.is_empty() || !removable_rim_hooks(p, h.len()).contains(h) {
        return Err(Error::InvalidHook);
    }
    let mut parts = p.parts.clone();
    for n in &h.boxes {
        parts[n.row - 1] -= 1;
    }
    Partition::new(parts)
}

/// Reference s-core: strip the first rim `s`-hook until none remain.
pub fn brute_core(p: &Partition, s: usize) -> Partition {
    let mut cur = p.clone();
    while let Some(h) = removable_rim_hooks(&cur, s).into_iter().next() {
        cur = remove_rim_hook(&cur, &h).expect("hook came from removable_rim_hooks");
    }
    cur
}

fn addable_nodes(p: &Partition) -> Vec<Node> {
    (1..=p.len() + 1)
        .filter(|&r| r == 1 || p.part(r - 1) > p.part(r))
        .map(|r| Node::new(r, p.part(r) + 1))
        .collect()
}

fn removable_nodes(p: &Partition) -> Vec<Node> {
    (1..=p.len())
        .filter(|&r| p.part(r) > p.part(r + 1))
        .map(|r| Node::new(r, p.part(r)))
        .collect()
}

/// Addable or removable boxes whose residue `(col - row) mod s` equals `k`.
pub fn boxes_of_residue(p: &Partition, k: usize, s: usize, kind: BoxKind) -> BTreeSet<Node> {
    let pool = match kind {
        BoxKind::Addable => addable_nodes(p),
        BoxKind::Removable => removable_nodes(p),
    };
    pool.into_iter().filter(|n| n.residue(s) == k).collect()
}

/// Adds every addable box of residue `k`, or if there is none removes every
/// removable box of residue `k`.
pub fn toggle_residue(p: &Partition, k: usize, s: usize) -> Result<Partition> {
    if k >= s {
        return Err(Error::InvalidResidue { k, s });
    }
    if !is_s_core_by_hooks(p, s) {
        return Err(Error::NotCore { s });
    }
    let mut parts = p.parts.clone();
    let add = boxes_of_residue(p, k, s, BoxKind::Addable);
    if !add.is_empty() {
        for n in add {
            if n.row > parts.len() {
                parts.push(0);
            }
            parts[n.row - 1] += 1;
        }
    } else {
        for n in boxes_of_residue(p, k, s, BoxKind::Removable) {
            parts[n.row - 1] -= 1;
        }
    }
    Partition::new(parts)
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            cur.push(first);
            go(rest - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, smallest sizes first.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}
