//! Young diagram combinatorics for Schubert cells of `Gr_k(F^n)`.
//!
//! A cell is labelled by a partition `λ = (λ_1 ≤ … ≤ λ_k)` fitting in a
//! `k × (n-k)` box, or equivalently by its jump sequence `[λ_i + i]`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A partition stored as `k` weakly increasing parts, leading zeros included.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotWeaklyIncreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// The empty diagram with `k` (zero) parts.
    pub fn empty(k: usize) -> Self {
        Partition { parts: vec![0; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, i.e. the number of rows `k` of the ambient box.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Box count `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.parts.last().copied().unwrap_or(0)
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.len() == rows && self.largest() <= cols
    }

    fn check_box(&self, n: usize) -> Result<usize> {
        let k = self.len();
        if k > n {
            return Err(Error::KExceedsN { k, n });
        }
        let m = n - k;
        if self.largest() > m {
            return Err(Error::OutsideBox {
                parts: self.parts.clone(),
                rows: k,
                cols: m,
            });
        }
        Ok(m)
    }

    /// Jump sequence `[λ_i + i]` inside `[1, n]`.
    pub fn to_jumps(&self, n: usize) -> Result<JumpSequence> {
        self.check_box(n)?;
        let jumps = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + i + 1)
            .collect();
        Ok(JumpSequence { jumps, n })
    }

    pub fn from_jumps(jumps: &JumpSequence) -> Self {
        let parts = jumps
            .jumps
            .iter()
            .enumerate()
            .map(|(i, &j)| j - (i + 1))
            .collect();
        Partition { parts }
    }

    /// Number of boxes on the main diagonal: `#{i : λ_i ≥ k - i + 1}`.
    pub fn trace(&self) -> usize {
        let k = self.len();
        self.parts
            .iter()
            .enumerate()
            .filter(|&(i, &p)| p + i >= k)
            .count()
    }

    /// Young-diagram containment `self ⊆ other`, after padding both to a
    /// common number of parts with leading zeros.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        let k = self.len().max(other.len());
        (0..k).all(|i| self.padded(i, k) <= other.padded(i, k))
    }

    fn padded(&self, i: usize, k: usize) -> usize {
        let offset = k - self.len();
        if i < offset {
            0
        } else {
            self.parts[i - offset]
        }
    }

    /// The transpose `λ^T_i = #{j : λ_j > n - k - i}`, a partition with
    /// `n - k` parts labelling a cell of `Gr_{n-k}(F^n)`.
    pub fn transpose(&self, n: usize) -> Result<Partition> {
        let m = self.check_box(n)?;
        let parts = (1..=m)
            .map(|i| self.parts.iter().filter(|&&p| p > m - i).count())
            .collect();
        Ok(Partition { parts })
    }

    /// Sorted complement `[1, n] \ {λ_i + i}` of the jump sequence.
    pub fn jump_complement(&self, n: usize) -> Result<JumpComplement> {
        let jumps = self.to_jumps(n)?;
        let values = (1..=n).filter(|v| !jumps.jumps.contains(v)).collect();
        Ok(JumpComplement { values })
    }

    /// For every `h_i` in the jump complement, the pair
    /// `(#{j : λ_j + j > h_i}, #{j : λ_j > i - 1})`. The two counts agree.
    pub fn jump_complement_counts(&self, n: usize) -> Result<Vec<(usize, usize)>> {
        let jumps = self.to_jumps(n)?;
        let complement = self.jump_complement(n)?;
        Ok(complement
            .values
            .iter()
            .enumerate()
            .map(|(i, &h)| {
                let crossing = jumps.jumps.iter().filter(|&&j| j > h).count();
                let long_rows = self.parts.iter().filter(|&&p| p > i).count();
                (crossing, long_rows)
            })
            .collect())
    }

    /// Trace-preserving involution on the `k × (n-k)` box pairing box count
    /// `p` with `n·t - p`.
    ///
    /// A trace-`t` diagram is a `t × t` square in the corner of its `t`
    /// longest rows, plus a north region (the `k - t` shortest rows, inside
    /// a `(k-t) × t` box) and an east region (the overhang of the long rows,
    /// inside a `t × (n-k-t)` box). Each region is replaced by its
    /// complement rotated a half turn.
    pub fn duality_partner(&self, n: usize) -> Result<Partition> {
        let m = self.check_box(n)?;
        let k = self.len();
        let t = self.trace();
        let (north, east) = self.parts.split_at(k - t);
        let mut parts: Vec<usize> = north.iter().rev().map(|&x| t - x).collect();
        parts.extend(east.iter().rev().map(|&y| (m - t) - (y - t) + t));
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Strictly increasing pivot positions `j_1 < … < j_k` in `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JumpSequence {
    jumps: Vec<usize>,
    n: usize,
}

impl JumpSequence {
    pub fn new(jumps: Vec<usize>, n: usize) -> Result<Self> {
        let increasing = jumps.windows(2).all(|w| w[0] < w[1]);
        let in_range = jumps.iter().all(|&j| (1..=n).contains(&j));
        if !increasing || !in_range {
            return Err(Error::InvalidJumps { jumps, n });
        }
        Ok(JumpSequence { jumps, n })
    }

    pub fn jumps(&self) -> &[usize] {
        &self.jumps
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, position: usize) -> bool {
        self.jumps.binary_search(&position).is_ok()
    }

    /// `#{i : j_i ≥ k + 1}`.
    pub fn trace(&self) -> usize {
        let k = self.jumps.len();
        self.jumps.iter().filter(|&&j| j > k).count()
    }

    /// Dominance `self ≺ other`: coordinatewise `self_i ≤ other_i`.
    pub fn precedes(&self, other: &JumpSequence) -> bool {
        self.jumps.len() == other.jumps.len()
            && self.jumps.iter().zip(&other.jumps).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for JumpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, j) in self.jumps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "]")
    }
}

/// Positions of `[1, n]` not occupied by a jump, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpComplement {
    values: Vec<usize>,
}

impl JumpComplement {
    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Every partition with `k` parts bounded by `m`, ordered by box count and
/// then lexicographically by parts.
pub fn enumerate_partitions(k: usize, m: usize) -> Vec<Partition> {
    fn extend(prefix: &mut Vec<usize>, k: usize, m: usize, out: &mut Vec<Partition>) {
        if prefix.len() == k {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let lo = prefix.last().copied().unwrap_or(0);
        for v in lo..=m {
            prefix.push(v);
            extend(prefix, k, m, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(k), k, m, &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

/// Number of partitions of `p` into `k` weakly increasing parts, each at most
/// `m` (unbounded when `None`), with trace exactly `t`.
pub fn part(p: usize, k: usize, m: Option<usize>, t: usize) -> u64 {
    if t > k {
        return 0;
    }
    let m = m.unwrap_or(p).min(p);
    let mut memo = HashMap::new();
    count_parts(k, k, m, p, t, &mut memo)
}

// Fills λ_i for i = row, row-1, …, 1; every part is at most `cap` (the part
// to its right). Trace contributions come from λ_i ≥ k - i + 1.
fn count_parts(
    row: usize,
    k: usize,
    cap: usize,
    remaining: usize,
    trace_left: usize,
    memo: &mut HashMap<(usize, usize, usize, usize), u64>,
) -> u64 {
    if row == 0 {
        return u64::from(remaining == 0 && trace_left == 0);
    }
    if trace_left > row || remaining > cap * row {
        return 0;
    }
    let key = (row, cap, remaining, trace_left);
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let threshold = k - row + 1;
    let mut total = 0;
    for v in 0..=cap.min(remaining) {
        let on_diagonal = v >= threshold;
        if on_diagonal && trace_left == 0 {
            break;
        }
        let next_trace = trace_left - usize::from(on_diagonal);
        total += count_parts(row - 1, k, v, remaining - v, next_trace, memo);
    }
    memo.insert(key, total);
    total
}

/// Mod-2 Betti number of `Gr_k(F^n)` in (real) degree `d`: the number of
/// partitions of `d` in the `k × (n-k)` box.
pub fn betti(k: usize, n: usize, d: usize) -> Result<u64> {
    if k > n {
        return Err(Error::KExceedsN { k, n });
    }
    Ok((0..=k).map(|t| part(d, k, Some(n - k), t)).sum())
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
