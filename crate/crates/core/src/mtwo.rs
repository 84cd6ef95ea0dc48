//! Bigraded bookkeeping for free modules over `M2`, the cohomology of a point.

use std::fmt;

use crate::error::{Error, Result};

/// A bidegree `(p, q)`: topological dimension and weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub p: i64,
    pub q: i64,
}

impl Bidegree {
    pub const fn new(p: i64, q: i64) -> Self {
        Bidegree { p, q }
    }

    /// Fixed-set dimension `p - q`.
    pub const fn fixdim(self) -> i64 {
        self.p - self.q
    }

    pub const fn doubled(self) -> Self {
        Bidegree::new(2 * self.p, 2 * self.q)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl From<(i64, i64)> for Bidegree {
    fn from((p, q): (i64, i64)) -> Self {
        Bidegree::new(p, q)
    }
}

/// Dimension of `M2` in bidegree `(a, b)`.
///
/// The top cone `ρ^i τ^j` fills `0 ≤ a ≤ b`; the lower cone `θ/(ρ^i τ^j)`
/// fills `a ≤ 0, b ≤ a - 2`.
pub fn m2_dim(a: i64, b: i64) -> u64 {
    let top = 0 <= a && a <= b;
    let bottom = a <= 0 && b <= a - 2;
    u64::from(top || bottom)
}

/// A free `M2`-module, recorded by the multiset of its generator bidegrees.
///
/// Generators are kept sorted, so derived equality is module isomorphism.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankChart {
    generators: Vec<Bidegree>,
}

impl RankChart {
    pub fn new(mut generators: Vec<Bidegree>) -> Self {
        generators.sort_unstable();
        RankChart { generators }
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        RankChart::new(pairs.into_iter().map(Bidegree::from).collect())
    }

    pub fn generators(&self) -> &[Bidegree] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Multiplicity of `(p, q)` among the generators.
    pub fn free_rank_at(&self, p: i64, q: i64) -> u64 {
        let target = Bidegree::new(p, q);
        let lo = self.generators.partition_point(|g| *g < target);
        let hi = self.generators.partition_point(|g| *g <= target);
        (hi - lo) as u64
    }

    /// Dimension over `Z/2` of the cohomology group in bidegree `(p, q)`.
    pub fn group_rank_at(&self, p: i64, q: i64) -> u64 {
        self.generators
            .iter()
            .map(|g| m2_dim(p - g.p, q - g.q))
            .sum()
    }

    /// Number of generators in topological dimension `d`.
    pub fn dimension_total(&self, d: i64) -> u64 {
        self.generators.iter().filter(|g| g.p == d).count() as u64
    }

    /// Distinct generator bidegrees with multiplicities, in sorted order.
    pub fn entries(&self) -> Vec<(Bidegree, u64)> {
        let mut out: Vec<(Bidegree, u64)> = Vec::new();
        for &g in &self.generators {
            match out.last_mut() {
                Some((last, count)) if *last == g => *count += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }

    pub fn complexify(&self) -> RankChart {
        RankChart {
            generators: self.generators.iter().map(|g| g.doubled()).collect(),
        }
    }
}

impl FromIterator<Bidegree> for RankChart {
    fn from_iter<I: IntoIterator<Item = Bidegree>>(iter: I) -> Self {
        RankChart::new(iter.into_iter().collect())
    }
}

impl fmt::Display for RankChart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (g, m)) in self.entries().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if m == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Pairwise shift caused by a nonzero differential from `src` into the lower
/// cone on `tgt`: the source rises and the target falls by the difference in
/// fixed-set dimension.
pub fn kronholm_shift(src: Bidegree, tgt: Bidegree) -> Result<(Bidegree, Bidegree)> {
    let s = src.fixdim() - tgt.fixdim();
    if s <= 0 || tgt.p < src.p + 1 {
        return Err(Error::InadmissibleShift {
            src: src.to_string(),
            tgt: tgt.to_string(),
        });
    }
    Ok((
        Bidegree::new(src.p, src.q + s),
        Bidegree::new(tgt.p, tgt.q - s),
    ))
}
