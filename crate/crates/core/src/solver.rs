//! Constraint propagation across equivariant Schubert cell structures.
//!
//! Every construction of a Grassmannian gives an ingredient table. A nonzero
//! differential from one cell into the lower cone of another shifts both
//! generators, so each table yields a set of possible charts. The true chart
//! lies in all of them.

use std::collections::{BTreeSet, HashMap};

use rustc_hash::FxHashSet as HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mtwo::{kronholm_shift, Bidegree, RankChart};
use crate::schubert::{enumerate_decompositions, ingredient_table, CellTable, Field, SignSequence};

/// Pairs `(source, target)` of table indices that can carry a nonzero
/// differential: the source cell lies in the closure of the target cell and
/// has strictly larger fixed-set dimension.
pub fn admissible_pairs(table: &CellTable) -> Vec<(usize, usize)> {
    let entries = table.entries();
    let mut pairs = Vec::new();
    for (i, a) in entries.iter().enumerate() {
        for (j, b) in entries.iter().enumerate() {
            if i != j
                && a.bidegree.fixdim() > b.bidegree.fixdim()
                && a.label != b.label
                && a.label.is_contained_in(&b.label)
            {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Every chart reachable from `table` by a sequence of shifts, each along a
/// pair that is admissible at the moment it fires. Fails once more than
/// `cap` distinct charts appear.
pub fn candidate_outcomes(table: &CellTable, cap: usize) -> Result<BTreeSet<RankChart>> {
    let found = explore_outcomes(table, cap, u64::MAX);
    if found.complete {
        Ok(found.charts)
    } else {
        Err(Error::CandidateOverflow { cap })
    }
}

/// Charts found by a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcomes {
    pub charts: BTreeSet<RankChart>,
    /// Whether `charts` is every reachable chart.
    pub complete: bool,
}

/// Like [`candidate_outcomes`], but visits at most `budget` states and keeps
/// whatever it found when a limit is hit.
pub fn explore_outcomes(table: &CellTable, cap: usize, budget: u64) -> Outcomes {
    let (charts, complete) = Search::new(table, None).outcomes(cap, budget);
    Outcomes { charts, complete }
}

/// Whether some sequence of shifts turns `table` into `target`.
/// Returns `None` when the search exceeds `budget` states.
pub fn realizes(table: &CellTable, target: &RankChart, budget: u64) -> Option<bool> {
    Search::new(table, None).realizes(target, budget)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Only keep shift sequences that first reproduce the solved
    /// Grassmannian of the first `n - 1` coordinates.
    pub prefix_pruning: bool,
    /// Maximum number of distinct candidate charts per construction.
    pub max_candidates: usize,
    /// Solve each distinct labelled ingredient table once.
    pub dedup_tables: bool,
    /// Maximum number of search states per construction.
    pub search_budget: u64,
    /// Enumerate every construction even when one already certifies.
    pub verify_all: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            prefix_pruning: false,
            max_candidates: 100_000,
            dedup_tables: true,
            search_budget: 100_000,
            verify_all: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveStatus {
    /// A unique chart survived.
    Certified,
    /// Several charts survive every complete candidate set.
    Ambiguous,
    /// Some candidate set overflowed before a unique chart was found.
    Inconclusive,
    /// The constructions contradict each other under the differential model.
    Inconsistent,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Certified => "certified",
            SolveStatus::Ambiguous => "ambiguous",
            SolveStatus::Inconclusive => "inconclusive",
            SolveStatus::Inconsistent => "inconsistent",
        }
    }
}

/// What one construction contributed to a solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionWitness {
    pub signs: SignSequence,
    /// Other sign sequences producing the same labelled table.
    pub duplicates: Vec<SignSequence>,
    pub admissible_pairs: usize,
    /// Size of the candidate set, `None` on overflow or when skipped.
    pub candidates: Option<usize>,
    /// Whether the certified chart is reachable, `None` when undecided.
    pub contains_result: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub k: usize,
    pub n: usize,
    pub q: usize,
    pub field: Field,
    pub status: SolveStatus,
    pub result: Option<RankChart>,
    /// Surviving charts when no unique answer was found.
    pub candidates: Vec<RankChart>,
    pub witnesses: Vec<ConstructionWitness>,
    pub certifying: Option<SignSequence>,
}

impl SolveReport {
    /// Constructions whose membership check for the result was undecided.
    pub fn unverified(&self) -> usize {
        self.witnesses
            .iter()
            .filter(|w| w.contains_result.is_none())
            .count()
    }
}

/// Solves `Gr_k(F^{n,q})` by intersecting the candidate charts of every
/// construction.
pub fn solve(
    k: usize,
    n: usize,
    q: usize,
    field: Field,
    options: &SolveOptions,
) -> Result<SolveReport> {
    let mut memo = HashMap::new();
    solve_memo(k, n, q, field, options, &mut memo)
}

type Memo = HashMap<(usize, usize, usize), Option<RankChart>>;

fn solve_memo(
    k: usize,
    n: usize,
    q: usize,
    field: Field,
    options: &SolveOptions,
    memo: &mut Memo,
) -> Result<SolveReport> {
    if k > n {
        return Err(Error::KExceedsN { k, n });
    }
    let decompositions = enumerate_decompositions(n, q, field)?;

    let mut groups: Vec<(CellTable, Vec<SignSequence>)> = Vec::new();
    let mut seen: HashMap<Vec<(Vec<usize>, Bidegree)>, usize> = HashMap::new();
    for s in decompositions {
        let table = ingredient_table(k, &s, field)?;
        if options.dedup_tables {
            let key = table
                .entries()
                .iter()
                .map(|e| (e.label.parts().to_vec(), e.bidegree))
                .collect();
            if let Some(&g) = seen.get(&key) {
                groups[g].1.push(s);
                continue;
            }
            seen.insert(key, groups.len());
        }
        groups.push((table, Vec::new()));
    }

    let prefix_answers = if options.prefix_pruning && k < n && n > 1 {
        let mut answers = HashMap::new();
        for sub_q in [q.saturating_sub(1), q] {
            if sub_q > n - 1 || answers.contains_key(&sub_q) {
                continue;
            }
            let answer = match memo.get(&(k, n - 1, sub_q)) {
                Some(a) => a.clone(),
                None => {
                    let sub = solve_memo(k, n - 1, sub_q, field, options, memo)?;
                    let a = (sub.status == SolveStatus::Certified).then(|| sub.result.unwrap());
                    memo.insert((k, n - 1, sub_q), a.clone());
                    a
                }
            };
            answers.insert(sub_q, answer);
        }
        answers
    } else {
        HashMap::new()
    };

    let pair_counts: Vec<usize> = groups
        .iter()
        .map(|(t, _)| admissible_pairs(t).len())
        .collect();
    let mut certified: Option<(RankChart, usize)> = pair_counts
        .iter()
        .position(|&c| c == 0)
        .map(|g| (groups[g].0.chart(), g));

    let enumerate = certified.is_none() || options.verify_all;
    let sets: Vec<Option<BTreeSet<RankChart>>> = if enumerate {
        groups
            .par_iter()
            .map(|(table, _)| {
                let sub = prefix_answers
                    .get(
                        &table
                            .signs()
                            .prefix(n - 1)
                            .map_or(usize::MAX, |p| p.weight()),
                    )
                    .and_then(|a| a.as_ref())
                    .map(|a| (a, table.n() - 1));
                let (charts, complete) =
                    Search::new(table, sub).outcomes(options.max_candidates, options.search_budget);
                complete.then_some(charts)
            })
            .collect()
    } else {
        vec![None; groups.len()]
    };

    let mut status = SolveStatus::Certified;
    let mut candidates = Vec::new();

    if certified.is_none() {
        if let Some(g) = sets
            .iter()
            .position(|s| s.as_ref().is_some_and(|s| s.len() == 1))
        {
            let chart = sets[g].as_ref().unwrap().iter().next().unwrap().clone();
            certified = Some((chart, g));
        }
    }

    if certified.is_none() {
        let mut complete = sets.iter().flatten();
        let overflow = sets.iter().any(|s| s.is_none());
        match complete.next() {
            None => status = SolveStatus::Inconclusive,
            Some(first) => {
                let survivors: BTreeSet<RankChart> = complete.fold(first.clone(), |acc, s| {
                    acc.intersection(s).cloned().collect()
                });
                match survivors.len() {
                    0 => status = SolveStatus::Inconsistent,
                    1 => {
                        let chart = survivors.into_iter().next().unwrap();
                        certified = Some((chart, usize::MAX));
                    }
                    _ => {
                        status = if overflow {
                            SolveStatus::Inconclusive
                        } else {
                            SolveStatus::Ambiguous
                        };
                        candidates = survivors.into_iter().collect();
                    }
                }
            }
        }
    }

    let membership: Vec<Option<bool>> = match &certified {
        Some((chart, _)) => sets
            .iter()
            .map(|set| set.as_ref().map(|s| s.contains(chart)))
            .collect(),
        None => vec![None; groups.len()],
    };
    if membership.contains(&Some(false)) {
        status = SolveStatus::Inconsistent;
    }

    let witnesses = groups
        .iter()
        .zip(&sets)
        .zip(&pair_counts)
        .zip(&membership)
        .map(
            |((((table, dups), set), &pairs), &contains)| ConstructionWitness {
                signs: table.signs().clone(),
                duplicates: dups.clone(),
                admissible_pairs: pairs,
                candidates: set.as_ref().map(|s| s.len()),
                contains_result: contains,
            },
        )
        .collect();

    let (result, certifying) = match certified {
        Some((chart, g)) if status == SolveStatus::Certified => {
            (Some(chart), groups.get(g).map(|(t, _)| t.signs().clone()))
        }
        Some((chart, _)) => {
            candidates = vec![chart];
            (None, None)
        }
        None => (None, None),
    };

    Ok(SolveReport {
        k,
        n,
        q,
        field,
        status,
        result,
        candidates,
        witnesses,
        certifying,
    })
}

type State = Vec<u16>;
/// A chart as sorted packed `(p << 16) | q` words.
type Key = Vec<u32>;

fn pack(b: Bidegree) -> u32 {
    ((b.p as u32) << 16) | b.q as u32
}

fn unpack(w: u32) -> Bidegree {
    Bidegree::new(i64::from(w >> 16), i64::from(w & 0xffff))
}

/// Cells that can exchange fixed-set dimensions, with the pairs among them
/// in local indices.
struct Component {
    cells: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

/// Closure search over one ingredient table. A state assigns a weight to
/// every cell of a component; an admissible pair swaps the fixed-set
/// dimensions of its two cells.
struct Search<'a> {
    table: &'a CellTable,
    p: Vec<u16>,
    components: Vec<Component>,
    /// Cells that never take part in a shift.
    frozen: Vec<usize>,
    /// Cells of the prefix Grassmannian (indices into the single component)
    /// and its solved chart.
    inner: Option<(Vec<bool>, Key)>,
}

impl<'a> Search<'a> {
    fn new(table: &'a CellTable, prefix: Option<(&RankChart, usize)>) -> Self {
        let entries = table.entries();
        let len = entries.len();
        let mut nested = Vec::new();
        for (i, a) in entries.iter().enumerate() {
            for (j, b) in entries.iter().enumerate() {
                if i != j && a.label != b.label && a.label.is_contained_in(&b.label) {
                    nested.push((i, j));
                }
            }
        }

        // Over-approximate the fixed-set dimensions each cell can reach.
        let mut reach: Vec<BTreeSet<i64>> = entries
            .iter()
            .map(|e| BTreeSet::from([e.bidegree.fixdim()]))
            .collect();
        let mut live = vec![false; nested.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for (idx, &(s, t)) in nested.iter().enumerate() {
                let lo = *reach[t].first().unwrap();
                let hi = *reach[s].last().unwrap();
                if hi <= lo {
                    continue;
                }
                live[idx] = true;
                let up: Vec<i64> = reach[s].iter().copied().filter(|&a| a > lo).collect();
                let down: Vec<i64> = reach[t].iter().copied().filter(|&b| b < hi).collect();
                for a in up {
                    changed |= reach[t].insert(a);
                }
                for b in down {
                    changed |= reach[s].insert(b);
                }
            }
        }
        let pairs: Vec<(usize, usize)> = nested
            .iter()
            .zip(&live)
            .filter(|(_, &l)| l)
            .map(|(&p, _)| p)
            .collect();

        let mut active = vec![false; len];
        for &(s, t) in &pairs {
            active[s] = true;
            active[t] = true;
        }
        let frozen = (0..len).filter(|&i| !active[i]).collect();

        let components = if prefix.is_some() {
            let cells: Vec<usize> = (0..len).filter(|&i| active[i]).collect();
            vec![Self::localize(cells, &pairs)]
        } else {
            let mut parent: Vec<usize> = (0..len).collect();
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            for &(s, t) in &pairs {
                let (a, b) = (find(&mut parent, s), find(&mut parent, t));
                parent[a.max(b)] = a.min(b);
            }
            let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
            for i in (0..len).filter(|&i| active[i]) {
                let r = find(&mut parent, i);
                groups.entry(r).or_default().push(i);
            }
            groups
                .into_values()
                .map(|cells| Self::localize(cells, &pairs))
                .collect()
        };

        let inner = prefix.map(|(answer, n_prefix)| {
            let k = table.k();
            let in_prefix = |i: usize| entries[i].label.largest() + k <= n_prefix;
            let member = components
                .first()
                .map(|c| c.cells.iter().map(|&i| in_prefix(i)).collect())
                .unwrap_or_default();
            // what the shifting cells must contribute
            let fixed: Vec<Bidegree> = answer.generators().to_vec();
            let mut rest = fixed;
            for &i in &frozen {
                if in_prefix(i) {
                    if let Some(pos) = rest.iter().position(|g| *g == entries[i].bidegree) {
                        rest.remove(pos);
                    }
                }
            }
            let mut key: Key = rest.into_iter().map(pack).collect();
            key.sort_unstable();
            (member, key)
        });
        Search {
            table,
            p: entries.iter().map(|e| e.bidegree.p as u16).collect(),
            components,
            frozen,
            inner,
        }
    }

    fn localize(cells: Vec<usize>, pairs: &[(usize, usize)]) -> Component {
        let index: HashMap<usize, usize> = cells.iter().enumerate().map(|(l, &c)| (c, l)).collect();
        let pairs = pairs
            .iter()
            .filter_map(|(s, t)| Some((*index.get(s)?, *index.get(t)?)))
            .collect();
        Component { cells, pairs }
    }

    fn bidegree(&self, i: usize) -> Bidegree {
        self.table.entries()[i].bidegree
    }

    fn base(&self, comp: &Component) -> State {
        comp.cells
            .iter()
            .map(|&i| self.bidegree(i).q as u16)
            .collect()
    }

    fn chart(&self, comp: &Component, state: &State, filter: Option<&[bool]>) -> Key {
        let mut key: Key = comp
            .cells
            .iter()
            .zip(state)
            .enumerate()
            .filter(|(l, _)| filter.is_none_or(|f| f[*l]))
            .map(|(_, (&i, &q))| (u32::from(self.p[i]) << 16) | u32::from(q))
            .collect();
        key.sort_unstable();
        key
    }

    /// Calls `f` on every state one shift away, reusing `state` as scratch.
    fn for_each_successor(
        &self,
        comp: &Component,
        state: &mut State,
        inner_only: bool,
        mut f: impl FnMut(&State),
    ) {
        for &(s, t) in &comp.pairs {
            if inner_only {
                if let Some((member, _)) = &self.inner {
                    if !member[t] {
                        continue;
                    }
                }
            }
            let (ps, pt) = (self.p[comp.cells[s]], self.p[comp.cells[t]]);
            // cheap test of the fixed-set dimension inequality first
            if ps + state[t] <= pt + state[s] {
                continue;
            }
            let (qs, qt) = (state[s], state[t]);
            let src = Bidegree::new(i64::from(ps), i64::from(qs));
            let tgt = Bidegree::new(i64::from(pt), i64::from(qt));
            let (a, b) = kronholm_shift(src, tgt).expect("nested cells differ in dimension");
            state[s] = a.q as u16;
            state[t] = b.q as u16;
            f(state);
            state[s] = qs;
            state[t] = qt;
        }
    }

    /// Visits every state of `comp` reachable from `starts`. Returns `false`
    /// when the budget runs out.
    fn explore(
        &self,
        comp: &Component,
        starts: Vec<State>,
        inner_only: bool,
        budget: &mut u64,
        mut visit: impl FnMut(&State) -> Flow,
    ) -> bool {
        let mut seen: HashSet<State> = starts.iter().cloned().collect();
        let mut stack = starts;
        while let Some(mut state) = stack.pop() {
            if let Flow::Stop = visit(&state) {
                return true;
            }
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            self.for_each_successor(comp, &mut state, inner_only, |next| {
                if !seen.contains(next) {
                    seen.insert(next.clone());
                    stack.push(next.clone());
                }
            });
        }
        true
    }

    /// Starting states of a component: the unshifted table, or with a solved
    /// prefix, every state reached by shifts inside the prefix that
    /// reproduces its chart.
    fn starts(&self, comp: &Component, budget: &mut u64) -> Option<Vec<State>> {
        let Some((member, answer)) = &self.inner else {
            return Some(vec![self.base(comp)]);
        };
        let mut starts = Vec::new();
        let done = self.explore(comp, vec![self.base(comp)], true, budget, |state| {
            if self.chart(comp, state, Some(member)) == *answer {
                starts.push(state.clone());
            }
            Flow::Continue
        });
        done.then_some(starts)
    }

    /// Distinct sub-charts a component can end in.
    fn component_outcomes(
        &self,
        comp: &Component,
        cap: usize,
        budget: &mut u64,
    ) -> (HashSet<Key>, bool) {
        let Some(starts) = self.starts(comp, budget) else {
            return (HashSet::default(), false);
        };
        let mut charts = HashSet::default();
        let mut overflow = false;
        let done = self.explore(comp, starts, false, budget, |state| {
            charts.insert(self.chart(comp, state, None));
            if charts.len() > cap {
                overflow = true;
                return Flow::Stop;
            }
            Flow::Continue
        });
        (charts, done && !overflow)
    }

    fn frozen_generators(&self) -> Key {
        let mut key: Key = self
            .frozen
            .iter()
            .map(|&i| pack(self.bidegree(i)))
            .collect();
        key.sort_unstable();
        key
    }

    fn outcomes(&self, cap: usize, budget: u64) -> (BTreeSet<RankChart>, bool) {
        let mut budget = budget;
        let mut complete = true;
        let mut acc: HashSet<Key> = std::iter::once(self.frozen_generators()).collect();
        'components: for comp in &self.components {
            let (part, done) = self.component_outcomes(comp, cap, &mut budget);
            complete &= done;
            let mut next = HashSet::default();
            for a in &acc {
                for b in &part {
                    let mut gens = a.clone();
                    gens.extend_from_slice(b);
                    gens.sort_unstable();
                    next.insert(gens);
                    if next.len() > cap {
                        complete = false;
                        acc = next;
                        break 'components;
                    }
                }
            }
            acc = next;
        }
        let charts = acc
            .into_iter()
            .map(|key| key.into_iter().map(unpack).collect())
            .collect();
        (charts, complete)
    }

    fn realizes(&self, target: &RankChart, budget: u64) -> Option<bool> {
        // Peel components off the target one at a time.
        let mut remaining: Key = target.generators().iter().map(|&g| pack(g)).collect();
        remaining.sort_unstable();
        let Some(remaining) = remove_all(&remaining, &self.frozen_generators()) else {
            return Some(false);
        };
        let mut budget = budget;
        let mut frontier: HashSet<Key> = std::iter::once(remaining).collect();
        for comp in &self.components {
            let (part, done) = self.component_outcomes(comp, usize::MAX, &mut budget);
            if !done {
                return None;
            }
            let next: HashSet<Key> = frontier
                .iter()
                .flat_map(|rest| part.iter().filter_map(|sub| remove_all(rest, sub)))
                .collect();
            if next.is_empty() {
                return Some(false);
            }
            frontier = next;
        }
        Some(frontier.iter().any(|r| r.is_empty()))
    }
}

/// `whole - part` as sorted multisets, if `part` is contained in `whole`.
fn remove_all(whole: &[u32], part: &[u32]) -> Option<Key> {
    let mut out = Vec::with_capacity(whole.len());
    let mut j = 0;
    for &g in whole {
        if j < part.len() && part[j] == g {
            j += 1;
        } else {
            if j < part.len() && part[j] < g {
                return None;
            }
            out.push(g);
        }
    }
    (j == part.len()).then_some(out)
}

enum Flow {
    Continue,
    Stop,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{gr_2n2, gr_kn1};
    use crate::schubert::canonical_kn1_signs;

    fn table(k: usize, s: &str) -> CellTable {
        ingredient_table(k, &s.parse().unwrap(), Field::Real).unwrap()
    }

    fn labels(t: &CellTable, pairs: &[(usize, usize)]) -> Vec<(String, String)> {
        pairs
            .iter()
            .map(|&(a, b)| {
                (
                    t.entries()[a].label.to_string(),
                    t.entries()[b].label.to_string(),
                )
            })
            .collect()
    }

    #[test]
    fn pairs_of_plus_minus_plus_minus_plus() {
        let t = table(2, "+-+-+");
        let mut got = labels(&t, &admissible_pairs(&t));
        got.sort();
        let want = vec![
            ("(0,2)".to_string(), "(1,2)".to_string()),
            ("(1,1)".to_string(), "(1,2)".to_string()),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn canonical_tables_have_no_pairs() {
        for n in 1..=7 {
            for k in 1..=n {
                let t =
                    ingredient_table(k, &canonical_kn1_signs(k, n).unwrap(), Field::Real).unwrap();
                assert!(admissible_pairs(&t).is_empty(), "k = {k}, n = {n}");
                let outcomes = candidate_outcomes(&t, 10).unwrap();
                assert_eq!(outcomes.into_iter().collect::<Vec<_>>(), vec![t.chart()]);
            }
        }
    }

    #[test]
    fn point_has_one_outcome() {
        let t = table(0, "+");
        let outcomes = candidate_outcomes(&t, 10).unwrap();
        assert_eq!(
            outcomes.into_iter().collect::<Vec<_>>(),
            vec![RankChart::from_pairs([(0, 0)])]
        );
    }

    #[test]
    fn two_outcomes_for_minus_plus_minus_plus() {
        let t = table(2, "-+-+");
        let outcomes: Vec<RankChart> = candidate_outcomes(&t, 100).unwrap().into_iter().collect();
        let unshifted = RankChart::from_pairs([(0, 0), (1, 1), (2, 1), (2, 1), (3, 3), (4, 2)]);
        let shifted = RankChart::from_pairs([(0, 0), (1, 1), (2, 1), (2, 2), (3, 2), (4, 2)]);
        let mut want = vec![unshifted, shifted];
        want.sort();
        assert_eq!(outcomes, want);
    }

    #[test]
    fn overflow_is_reported() {
        let t = table(2, "-+-+");
        assert_eq!(
            candidate_outcomes(&t, 1),
            Err(Error::CandidateOverflow { cap: 1 })
        );
    }

    #[test]
    fn realizes_agrees_with_enumeration() {
        for s in ["-+-+", "+-+-+", "-++-+", "--+-+", "-+-++-"] {
            let t = table(2, s);
            let outcomes = candidate_outcomes(&t, 10_000).unwrap();
            for chart in &outcomes {
                assert_eq!(realizes(&t, chart, u64::MAX), Some(true), "{s}");
            }
            assert_eq!(
                realizes(&t, &RankChart::from_pairs([(0, 0)]), u64::MAX),
                Some(false)
            );
        }
    }

    #[test]
    fn small_solves() {
        let opts = SolveOptions::default();
        let r = solve(1, 3, 1, Field::Real, &opts).unwrap();
        assert_eq!(r.status, SolveStatus::Certified);
        assert_eq!(
            r.result,
            Some(RankChart::from_pairs([(0, 0), (1, 1), (2, 1)]))
        );
        let r = solve(2, 4, 2, Field::Real, &opts).unwrap();
        assert_eq!(r.result, Some(gr_2n2(4).unwrap()));
        let r = solve(2, 4, 1, Field::Real, &opts).unwrap();
        assert_eq!(r.result, Some(gr_kn1(2, 4).unwrap()));
        let r = solve(0, 3, 1, Field::Real, &opts).unwrap();
        assert_eq!(r.result, Some(RankChart::from_pairs([(0, 0)])));
        assert!(solve(4, 3, 1, Field::Real, &opts).is_err());
    }

    #[test]
    fn prefix_pruning_keeps_answer() {
        let opts = SolveOptions {
            prefix_pruning: true,
            ..SolveOptions::default()
        };
        let r = solve(2, 5, 2, Field::Real, &opts).unwrap();
        assert_eq!(r.status, SolveStatus::Certified);
        assert_eq!(r.result, Some(gr_2n2(5).unwrap()));
    }
}
