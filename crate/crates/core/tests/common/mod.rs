//! Brute-force oracles shared by the integration tests. None of these call
//! into the library.

#![allow(dead_code)]

use grassrank::RankChart;

/// Every weakly increasing `k`-tuple over `0..=m`, found by filtering all
/// `(m+1)^k` tuples.
pub fn brute_partitions(k: usize, m: usize) -> Vec<Vec<usize>> {
    let base = m + 1;
    let total = base.pow(k as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut tuple = vec![0; k];
        for slot in tuple.iter_mut().rev() {
            *slot = c % base;
            c /= base;
        }
        if tuple.windows(2).all(|w| w[0] <= w[1]) {
            out.push(tuple);
        }
    }
    out
}

/// Diagonal boxes of a weakly increasing tuple: row `i` (from 1) reaches the
/// diagonal when `λ_i ≥ k - i + 1`.
pub fn brute_trace(parts: &[usize]) -> usize {
    let k = parts.len();
    (1..=k).filter(|&i| parts[i - 1] > k - i).count()
}

pub fn brute_part(p: usize, k: usize, m: usize, t: usize) -> u64 {
    brute_partitions(k, m)
        .iter()
        .filter(|l| l.iter().sum::<usize>() == p && brute_trace(l) == t)
        .count() as u64
}

pub fn brute_betti(k: usize, n: usize, d: usize) -> u64 {
    brute_partitions(k, n - k)
        .iter()
        .filter(|l| l.iter().sum::<usize>() == d)
        .count() as u64
}

pub fn pascal(n: usize, k: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// A chart from `((p, q), multiplicity)` entries.
pub fn chart(entries: &[((i64, i64), usize)]) -> RankChart {
    RankChart::from_pairs(
        entries
            .iter()
            .flat_map(|&(at, m)| std::iter::repeat_n(at, m)),
    )
}

/// Every sign string of length `n`, as `+`/`-` text.
pub fn all_sign_strings(n: usize) -> Vec<String> {
    (0..1u32 << n)
        .map(|bits| {
            (0..n)
                .map(|i| if bits >> i & 1 == 1 { '-' } else { '+' })
                .collect()
        })
        .collect()
}
