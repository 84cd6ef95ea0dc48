//! Closed-form rank charts.

use crate::error::{Error, Result};
use crate::mtwo::{Bidegree, RankChart};
use crate::young::{betti, part};

fn push(gens: &mut Vec<Bidegree>, p: i64, q: i64, mult: u64) {
    gens.extend(std::iter::repeat_n(Bidegree::new(p, q), mult as usize));
}

/// Projective space `P(R^{p,q})`.
pub fn proj_space(p: usize, q: usize) -> Result<RankChart> {
    if p == 0 || p < 2 * q {
        return Err(Error::Domain(format!(
            "projective space needs p >= 2q and p >= 1, got p = {p}, q = {q}"
        )));
    }
    let (p, q) = (p as i64, q as i64);
    if q == 0 {
        return Ok(RankChart::from_pairs((0..p).map(|j| (j, 0))));
    }
    let mut gens = vec![Bidegree::new(0, 0)];
    for i in 1..q {
        gens.push(Bidegree::new(2 * i - 1, i));
        gens.push(Bidegree::new(2 * i, i));
    }
    gens.extend((2 * q - 1..p).map(|j| Bidegree::new(j, q)));
    Ok(RankChart::new(gens))
}

/// `Gr_k(R^{n,1})`: the rank at `(p, q)` is the number of partitions of `p`
/// in the `k × (n-k)` box with trace `q`.
pub fn gr_kn1(k: usize, n: usize) -> Result<RankChart> {
    if k > n {
        return Err(Error::KExceedsN { k, n });
    }
    let m = n - k;
    let mut gens = Vec::new();
    for p in 0..=k * m {
        for t in 0..=k.min(m) {
            push(&mut gens, p as i64, t as i64, part(p, k, Some(m), t));
        }
    }
    Ok(RankChart::new(gens))
}

/// `Gr_2(R^{n,2})` for `n ≥ 3`.
pub fn gr_2n2(n: usize) -> Result<RankChart> {
    let small: &[(i64, i64)] = match n {
        0..=2 => {
            return Err(Error::Domain(format!(
                "Gr_2(R^(n,2)) needs n >= 3, got {n}"
            )));
        }
        3 => &[(0, 0), (1, 1), (2, 1)],
        4 => &[(0, 0), (1, 1), (2, 1), (2, 2), (3, 2), (4, 2)],
        5 => &[
            (0, 0),
            (1, 1),
            (2, 1),
            (2, 2),
            (3, 2),
            (3, 2),
            (4, 2),
            (4, 2),
            (5, 3),
            (6, 3),
        ],
        _ => &[],
    };
    if !small.is_empty() {
        return Ok(RankChart::from_pairs(small.iter().copied()));
    }

    let n = n as i64;
    let mut gens = Vec::new();
    push(&mut gens, 0, 0, 1);
    push(&mut gens, 1, 1, 1);
    push(&mut gens, 2, 1, 1);

    push(&mut gens, 2, 2, 1);
    push(&mut gens, 3, 2, 2);
    push(&mut gens, 4, 2, 3);
    for p in 5..=n - 2 {
        push(&mut gens, p, 2, 2);
    }
    push(&mut gens, n - 1, 2, 1);

    push(&mut gens, 5, 3, 1);
    for p in 6..=n {
        push(&mut gens, p, 3, 2);
    }
    push(&mut gens, n + 1, 3, 1);

    for p in 8..=n + 1 {
        push(&mut gens, p, 4, ceil_half(p - 7) as u64);
    }
    for p in n + 2..=2 * n - 4 {
        push(&mut gens, p, 4, (n - 1 - ceil_half(p)) as u64);
    }
    Ok(RankChart::new(gens))
}

fn ceil_half(x: i64) -> i64 {
    (x + 1).div_euclid(2)
}

/// Rank at `(p, q)` of `Gr_2(R^{∞,2})`.
pub fn inf_gr2_rank(p: usize, q: usize) -> u64 {
    if p >= 8 {
        return match q {
            4 => ceil_half(p as i64 - 7) as u64,
            2 | 3 => 2,
            _ => 0,
        };
    }
    const LOW: &[((usize, usize), u64)] = &[
        ((0, 0), 1),
        ((1, 1), 1),
        ((2, 1), 1),
        ((2, 2), 1),
        ((3, 2), 2),
        ((4, 2), 3),
        ((5, 2), 2),
        ((5, 3), 1),
        ((6, 2), 2),
        ((6, 3), 2),
        ((7, 2), 2),
        ((7, 3), 2),
    ];
    LOW.iter()
        .find(|(at, _)| *at == (p, q))
        .map_or(0, |&(_, r)| r)
}

/// Chart of `Gr_2(R^{∞,2})` through topological dimension `max_p`.
pub fn inf_gr2_chart(max_p: usize) -> RankChart {
    let mut gens = Vec::new();
    for p in 0..=max_p {
        for q in 0..=4 {
            push(&mut gens, p as i64, q as i64, inf_gr2_rank(p, q));
        }
    }
    RankChart::new(gens)
}

/// Rank at `(p, q)` of `Gr_k(R^{∞,1})`.
pub fn inf_kn1_rank(p: usize, q: usize, k: usize) -> u64 {
    part(p, k, None, q)
}

/// Chart of `Gr_k(R^{∞,1})` through topological dimension `max_p`.
pub fn inf_kn1_chart(k: usize, max_p: usize) -> RankChart {
    let mut gens = Vec::new();
    for p in 0..=max_p {
        for q in 0..=k {
            push(&mut gens, p as i64, q as i64, inf_kn1_rank(p, q, k));
        }
    }
    RankChart::new(gens)
}

/// Doubles every generator: the complex analogue of a real chart.
pub fn complexify(chart: &RankChart) -> RankChart {
    chart.complexify()
}

/// Complex Grassmannian `Gr_k(C^n)` with the conjugation action.
pub fn gr_conj(k: usize, n: usize) -> Result<RankChart> {
    if k > n {
        return Err(Error::KExceedsN { k, n });
    }
    let mut gens = Vec::new();
    for i in 0..=k * (n - k) {
        push(&mut gens, 2 * i as i64, i as i64, betti(k, n, i)?);
    }
    Ok(RankChart::new(gens))
}
