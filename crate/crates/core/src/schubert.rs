//! Equivariant Schubert cell structures.
//!
//! An ordered decomposition of `R^{n,q}` into trivial (`+`) and sign (`-`)
//! lines makes every Schubert cell a representation cell `e^{p,q}`. The
//! list of those bidegrees is the ingredient table of the construction.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::mtwo::{Bidegree, RankChart};
use crate::young::{enumerate_partitions, Partition};

/// Ground field of the Grassmannian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Real,
    Complex,
    /// Complex Grassmannian with the conjugation action.
    ComplexConj,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "R",
            Field::Complex => "C",
            Field::ComplexConj => "Cconj",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" | "real" => Ok(Field::Real),
            "C" | "c" | "complex" => Ok(Field::Complex),
            "Cconj" | "cconj" | "conj" => Ok(Field::ComplexConj),
            other => Err(Error::Domain(format!("unknown field {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Ordered signs `s(1), …, s(n)` of the lines in a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignSequence {
    signs: Vec<Sign>,
}

impl SignSequence {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::EmptySigns);
        }
        Ok(SignSequence { signs })
    }

    /// `n` signs with `-` exactly at the given zero-based positions.
    pub fn with_minus_at(n: usize, minus: &[usize]) -> Result<Self> {
        let mut signs = vec![Sign::Plus; n];
        for &i in minus {
            if i >= n {
                return Err(Error::Domain(format!(
                    "sign position {i} out of range for n = {n}"
                )));
            }
            signs[i] = Sign::Minus;
        }
        SignSequence::new(signs)
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Number of minus signs, the `q` of `R^{n,q}`.
    pub fn weight(&self) -> usize {
        self.signs.iter().filter(|&&s| s == Sign::Minus).count()
    }

    /// Sign at the one-based position `i`.
    pub fn at(&self, i: usize) -> Sign {
        self.signs[i - 1]
    }

    pub fn reversed(&self) -> SignSequence {
        SignSequence {
            signs: self.signs.iter().rev().copied().collect(),
        }
    }

    /// The first `len` signs, if non-empty.
    pub fn prefix(&self, len: usize) -> Option<SignSequence> {
        (len >= 1 && len <= self.len()).then(|| SignSequence {
            signs: self.signs[..len].to_vec(),
        })
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::InvalidSign(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        SignSequence::new(signs)
    }
}

/// Weight of the Schubert cell `Ω_λ`: over jumps `κ`, the number of earlier
/// non-jump positions `i` whose sign differs from `s(κ)`.
pub fn cell_weight(lambda: &Partition, s: &SignSequence) -> Result<usize> {
    let jumps = lambda.to_jumps(s.len())?;
    Ok(jumps
        .jumps()
        .iter()
        .map(|&kappa| {
            (1..kappa)
                .filter(|&i| !jumps.contains(i) && s.at(i) != s.at(kappa))
                .count()
        })
        .sum())
}

/// Weight of `Ω_λ` by acting on its canonical matrix: scale each column by
/// its sign, rescale each row so its pivot is `+1` again, and count the free
/// entries that end up negated.
pub fn cell_weight_by_matrix(lambda: &Partition, s: &SignSequence) -> Result<usize> {
    let n = s.len();
    let jumps = lambda.to_jumps(n)?;
    let k = jumps.jumps().len();

    // 0 = forced zero, 1 = pivot, 2 = free entry; values track the sign.
    let mut kind = vec![vec![0u8; n]; k];
    let mut value = vec![vec![0i8; n]; k];
    for (r, &j) in jumps.jumps().iter().enumerate() {
        kind[r][j - 1] = 1;
        value[r][j - 1] = 1;
        for c in 1..j {
            if !jumps.contains(c) {
                kind[r][c - 1] = 2;
                value[r][c - 1] = 1;
            }
        }
    }
    for row in value.iter_mut() {
        for (c, v) in row.iter_mut().enumerate() {
            *v *= s.signs()[c].value();
        }
    }
    for (r, &j) in jumps.jumps().iter().enumerate() {
        if value[r][j - 1] < 0 {
            for v in value[r].iter_mut() {
                *v = -*v;
            }
        }
    }
    Ok((0..k)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .filter(|&(r, c)| kind[r][c] == 2 && value[r][c] < 0)
        .count())
}

/// One Schubert cell of a construction together with its bidegree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellEntry {
    pub label: Partition,
    pub bidegree: Bidegree,
}

/// Ingredient table: every Schubert cell of one construction, sorted by
/// `(p, q, label)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellTable {
    entries: Vec<CellEntry>,
    signs: SignSequence,
    field: Field,
    k: usize,
}

impl CellTable {
    pub fn entries(&self) -> &[CellEntry] {
        &self.entries
    }

    pub fn signs(&self) -> &SignSequence {
        &self.signs
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The chart obtained when every differential vanishes.
    pub fn chart(&self) -> RankChart {
        self.entries.iter().map(|e| e.bidegree).collect()
    }
}

/// Ingredient table of `Gr_k(F^n)` for the decomposition `s`.
///
/// Complex fields double each real bidegree. With the conjugation action the
/// signs are irrelevant and every cell is `e^{2|λ|, |λ|}`; only `s.len()`
/// is used.
pub fn ingredient_table(k: usize, s: &SignSequence, field: Field) -> Result<CellTable> {
    let n = s.len();
    if k > n {
        return Err(Error::KExceedsN { k, n });
    }
    let mut entries = enumerate_partitions(k, n - k)
        .into_iter()
        .map(|label| {
            let size = label.size() as i64;
            let bidegree = match field {
                Field::Real => Bidegree::new(size, cell_weight(&label, s)? as i64),
                Field::Complex => Bidegree::new(size, cell_weight(&label, s)? as i64).doubled(),
                Field::ComplexConj => Bidegree::new(2 * size, size),
            };
            Ok(CellEntry { label, bidegree })
        })
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by(|a, b| {
        a.bidegree
            .cmp(&b.bidegree)
            .then_with(|| a.label.cmp(&b.label))
    });
    Ok(CellTable {
        entries,
        signs: s.clone(),
        field,
        k,
    })
}

/// `+^{k-1} - +^{n-k}`, the decomposition whose cell weights are traces.
pub fn canonical_kn1_signs(k: usize, n: usize) -> Result<SignSequence> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!(
            "canonical signs need 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    SignSequence::with_minus_at(n, &[k - 1])
}

/// All sign sequences of length `n` with `q` minus signs, ordered
/// lexicographically by the positions of the minus signs.
///
/// With the conjugation action every sequence gives the same table, so only
/// the first is returned.
pub fn enumerate_decompositions(n: usize, q: usize, field: Field) -> Result<Vec<SignSequence>> {
    if n == 0 {
        return Err(Error::EmptySigns);
    }
    if q > n {
        return Err(Error::QExceedsN { q, n });
    }
    let all = (0..n)
        .combinations(q)
        .map(|minus| SignSequence::with_minus_at(n, &minus));
    match field {
        Field::ComplexConj => all.take(1).collect(),
        _ => all.collect(),
    }
}
