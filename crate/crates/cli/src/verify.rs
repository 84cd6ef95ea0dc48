//! Cross-check battery run by `grassrank verify`.

use std::ops::RangeInclusive;

use grassrank::formulas::{gr_2n2, gr_kn1, inf_gr2_rank};
use grassrank::schubert::{
    canonical_kn1_signs, cell_weight, cell_weight_by_matrix, enumerate_decompositions,
    ingredient_table,
};
use grassrank::solver::explore_outcomes;
use grassrank::young::{betti, enumerate_partitions};
use grassrank::{Field, SignSequence, SolveOptions, SolveStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Kn1,
    TwoN2,
    Weights,
    Duality,
    Appendix,
    Stabilization,
    Conservation,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Kn1,
        Check::TwoN2,
        Check::Weights,
        Check::Duality,
        Check::Appendix,
        Check::Stabilization,
        Check::Conservation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Kn1 => "kn1",
            Check::TwoN2 => "2n2",
            Check::Weights => "weights",
            Check::Duality => "duality",
            Check::Appendix => "appendix",
            Check::Stabilization => "stabilization",
            Check::Conservation => "conservation",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Ranges {
    /// Ambient dimensions for the solver, weight, duality and appendix checks.
    pub n: RangeInclusive<usize>,
    /// Conservation enumerates every construction, so it gets its own cap.
    pub conservation_n: RangeInclusive<usize>,
    /// Topological dimensions for the stabilization check.
    pub p: RangeInclusive<usize>,
}

impl Ranges {
    pub fn up_to(max_n: usize, max_p: usize) -> Self {
        Ranges {
            n: 1..=max_n,
            conservation_n: 1..=max_n.min(6),
            p: 0..=max_p,
        }
    }

    #[allow(clippy::reversed_empty_ranges)]
    pub fn empty() -> Self {
        Ranges {
            n: 1..=0,
            conservation_n: 1..=0,
            p: 1..=0,
        }
    }
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub passed: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    fn record(&mut self, ok: bool, instance: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(instance());
        }
    }
}

pub fn run(check: Check, ranges: &Ranges, options: &SolveOptions) -> Outcome {
    let mut out = Outcome::default();
    match check {
        Check::Kn1 => kn1(ranges, options, &mut out),
        Check::TwoN2 => two_n2(ranges, options, &mut out),
        Check::Weights => weights(ranges, &mut out),
        Check::Duality => duality(ranges, &mut out),
        Check::Appendix => appendix(ranges, &mut out),
        Check::Stabilization => stabilization(ranges, &mut out),
        Check::Conservation => conservation(ranges, options, &mut out),
    }
    out
}

fn solves_to(
    k: usize,
    n: usize,
    q: usize,
    options: &SolveOptions,
    expected: &grassrank::RankChart,
) -> bool {
    match grassrank::solver::solve(k, n, q, Field::Real, options) {
        Ok(report) => {
            report.status == SolveStatus::Certified && report.result.as_ref() == Some(expected)
        }
        Err(_) => false,
    }
}

fn kn1(ranges: &Ranges, options: &SolveOptions, out: &mut Outcome) {
    for n in ranges.n.clone() {
        for k in 1..n {
            let expected = gr_kn1(k, n).expect("k < n");
            out.record(solves_to(k, n, 1, options, &expected), || {
                format!("Gr_{k}(R^({n},1))")
            });
        }
    }
}

fn two_n2(ranges: &Ranges, options: &SolveOptions, out: &mut Outcome) {
    for n in ranges.n.clone().filter(|&n| n >= 3) {
        let expected = gr_2n2(n).expect("n >= 3");
        out.record(solves_to(2, n, 2, options, &expected), || {
            format!("Gr_2(R^({n},2))")
        });
    }
}

fn sign_strings(n: usize) -> impl Iterator<Item = SignSequence> {
    (0..1u32 << n).map(move |bits| {
        let text: String = (0..n)
            .map(|i| if bits >> i & 1 == 1 { '-' } else { '+' })
            .collect();
        text.parse().expect("nonempty sign string")
    })
}

fn weights(ranges: &Ranges, out: &mut Outcome) {
    for n in ranges.n.clone() {
        for s in sign_strings(n) {
            for k in 0..=n {
                for lambda in enumerate_partitions(k, n - k) {
                    let a = cell_weight(&lambda, &s).ok();
                    let b = cell_weight_by_matrix(&lambda, &s).ok();
                    out.record(a.is_some() && a == b, || {
                        format!("weight of {lambda} under {s}")
                    });
                }
            }
        }
        for k in 1..=n {
            let s = canonical_kn1_signs(k, n).expect("1 <= k <= n");
            for lambda in enumerate_partitions(k, n - k) {
                let ok = cell_weight(&lambda, &s).ok() == Some(lambda.trace());
                out.record(ok, || {
                    format!("weight of {lambda} under {s} differs from its trace")
                });
            }
        }
    }
}

fn duality(ranges: &Ranges, out: &mut Outcome) {
    for n in ranges.n.clone() {
        for k in 0..=n {
            let chart = gr_kn1(k, n).expect("k <= n");
            let symmetric = chart.generators().iter().all(|g| {
                let mirrored = n as i64 * g.q - g.p;
                chart.free_rank_at(mirrored, g.q) == chart.free_rank_at(g.p, g.q)
            });
            out.record(symmetric, || format!("rank symmetry of Gr_{k}(R^({n},1))"));
            for lambda in enumerate_partitions(k, n - k) {
                let ok = lambda.duality_partner(n).is_ok_and(|d| {
                    d.trace() == lambda.trace()
                        && d.size() + lambda.size() == n * lambda.trace()
                        && d.duality_partner(n).is_ok_and(|back| back == lambda)
                });
                out.record(ok, || format!("duality partner of {lambda} in n = {n}"));
            }
        }
    }
}

fn appendix(ranges: &Ranges, out: &mut Outcome) {
    for n in ranges.n.clone() {
        for k in 0..=n {
            for lambda in enumerate_partitions(k, n - k) {
                let involution = lambda
                    .transpose(n)
                    .and_then(|t| t.transpose(n))
                    .is_ok_and(|back| back == lambda);
                out.record(involution, || format!("transpose of {lambda} in n = {n}"));
                let identity = lambda
                    .jump_complement_counts(n)
                    .is_ok_and(|counts| counts.iter().all(|(a, b)| a == b));
                out.record(identity, || {
                    format!("jump complement of {lambda} in n = {n}")
                });
            }
        }
    }
}

fn stabilization(ranges: &Ranges, out: &mut Outcome) {
    for p in ranges.p.clone() {
        for n in (p + 2).max(3)..=p + 4 {
            let chart = gr_2n2(n).expect("n >= 3");
            for q in 0..=4 {
                let ok = chart.free_rank_at(p as i64, q as i64) == inf_gr2_rank(p, q);
                out.record(ok, || format!("rank at ({p},{q}) of Gr_2(R^({n},2))"));
            }
        }
    }
}

fn conservation(ranges: &Ranges, options: &SolveOptions, out: &mut Outcome) {
    for n in ranges.conservation_n.clone() {
        for k in 1..n {
            let totals: Vec<u64> = (0..=k * (n - k))
                .map(|d| betti(k, n, d).expect("k < n"))
                .collect();
            for q in 1..=n.min(2) {
                let decompositions = enumerate_decompositions(n, q, Field::Real).expect("q <= n");
                for s in decompositions {
                    let table = ingredient_table(k, &s, Field::Real).expect("k < n");
                    let found =
                        explore_outcomes(&table, options.max_candidates, options.search_budget);
                    let ok = found.charts.iter().all(|chart| {
                        totals
                            .iter()
                            .enumerate()
                            .all(|(d, &b)| chart.dimension_total(d as i64) == b)
                    });
                    out.record(ok, || format!("outcomes of Gr_{k} under {s}"));
                }
            }
        }
    }
}
