//! Exact transversal and 2-packing solvers with verifiable witnesses.
//!
//! Both solvers run a deterministic branch and bound under a node budget.
//! When the budget runs out they degrade to a certified interval instead
//! of guessing; callers can always distinguish the two outcomes.

use std::collections::BTreeSet;

use crate::incidence::{Indexed, LinearSystem};
use crate::segment::SegmentSystem;

/// Default branch-and-bound node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Result of an exact solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult<W> {
    Exact {
        value: usize,
        witness: W,
        nodes: u64,
    },
    /// The node budget ran out. The true value lies in `lower..=upper`;
    /// the witness certifies the reachable end of the interval (a cover
    /// of size `upper` for transversals, a packing of size `lower` for
    /// 2-packings).
    Interval {
        lower: usize,
        upper: usize,
        witness: W,
        nodes: u64,
    },
}

impl<W> SolveResult<W> {
    pub fn exact_value(&self) -> Option<usize> {
        match self {
            SolveResult::Exact { value, .. } => Some(*value),
            SolveResult::Interval { .. } => None,
        }
    }

    /// Inclusive bounds on the true value (equal for exact results).
    pub fn bounds(&self) -> (usize, usize) {
        match self {
            SolveResult::Exact { value, .. } => (*value, *value),
            SolveResult::Interval { lower, upper, .. } => (*lower, *upper),
        }
    }

    pub fn witness(&self) -> &W {
        match self {
            SolveResult::Exact { witness, .. } | SolveResult::Interval { witness, .. } => witness,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            SolveResult::Exact { nodes, .. } | SolveResult::Interval { nodes, .. } => *nodes,
        }
    }
}

enum Dfs {
    Found,
    NotFound,
    Out,
}

/// Minimum number of points meeting every line, with a witness set.
///
/// Iterative deepening between a greedy-disjoint-lines lower bound and a
/// greedy-cover upper bound; each depth branches on an uncovered line of
/// minimum size, trying its points in identifier order. The returned
/// witness is re-verified against every line before returning.
pub fn transversal_number(ls: &LinearSystem, budget: u64) -> SolveResult<BTreeSet<String>> {
    let ix = ls.indexed();
    let m = ix.lines.len();
    if m == 0 {
        return SolveResult::Exact {
            value: 0,
            witness: BTreeSet::new(),
            nodes: 0,
        };
    }

    let greedy_ids = greedy_cover_ids(&ix);
    let ub = greedy_ids.len();
    let lb = disjoint_lines_bound(&ix, &vec![false; m]);

    let mut nodes: u64 = 0;
    for k in lb..ub {
        let mut covered = vec![false; m];
        let mut chosen: Vec<usize> = Vec::new();
        match tau_dfs(&ix, &mut covered, 0, k, &mut chosen, &mut nodes, budget) {
            Dfs::Found => {
                let witness = ids_to_labels(&ix, &chosen);
                assert!(is_transversal(ls, &witness), "solver returned a non-cover");
                return SolveResult::Exact {
                    value: chosen.len(),
                    witness,
                    nodes,
                };
            }
            Dfs::NotFound => continue,
            Dfs::Out => {
                let witness = ids_to_labels(&ix, &greedy_ids);
                assert!(is_transversal(ls, &witness), "greedy cover is not a cover");
                return SolveResult::Interval {
                    lower: k,
                    upper: ub,
                    witness,
                    nodes,
                };
            }
        }
    }
    let witness = ids_to_labels(&ix, &greedy_ids);
    assert!(is_transversal(ls, &witness), "greedy cover is not a cover");
    SolveResult::Exact {
        value: ub,
        witness,
        nodes,
    }
}

fn tau_dfs(
    ix: &Indexed,
    covered: &mut [bool],
    n_covered: usize,
    k: usize,
    chosen: &mut Vec<usize>,
    nodes: &mut u64,
    budget: u64,
) -> Dfs {
    *nodes += 1;
    if *nodes > budget {
        return Dfs::Out;
    }
    if n_covered == covered.len() {
        return Dfs::Found;
    }
    if k == 0 || disjoint_lines_bound(ix, covered) > k {
        return Dfs::NotFound;
    }
    // Uncovered line of minimum size, earliest index on ties.
    let branch = (0..covered.len())
        .filter(|&l| !covered[l])
        .min_by_key(|&l| (ix.lines[l].len(), l))
        .expect("some line uncovered");
    for &p in &ix.lines[branch] {
        let newly: Vec<usize> = ix.point_lines[p]
            .iter()
            .copied()
            .filter(|&l| !covered[l])
            .collect();
        for &l in &newly {
            covered[l] = true;
        }
        chosen.push(p);
        match tau_dfs(ix, covered, n_covered + newly.len(), k - 1, chosen, nodes, budget) {
            Dfs::Found => return Dfs::Found,
            Dfs::Out => return Dfs::Out,
            Dfs::NotFound => {}
        }
        chosen.pop();
        for &l in &newly {
            covered[l] = false;
        }
    }
    Dfs::NotFound
}

/// Greedy lower bound: scan lines in index order, count a line when it is
/// disjoint from every line counted so far. Only uncovered lines count.
fn disjoint_lines_bound(ix: &Indexed, covered: &[bool]) -> usize {
    let mut used = vec![false; ix.labels.len()];
    let mut count = 0;
    for (l, line) in ix.lines.iter().enumerate() {
        if covered[l] || line.iter().any(|&p| used[p]) {
            continue;
        }
        for &p in line {
            used[p] = true;
        }
        count += 1;
    }
    count
}

fn greedy_cover_ids(ix: &Indexed) -> Vec<usize> {
    let m = ix.lines.len();
    let mut covered = vec![false; m];
    let mut left = m;
    let mut chosen = Vec::new();
    while left > 0 {
        // Point covering the most uncovered lines; lowest identifier wins ties.
        let best = (0..ix.labels.len())
            .max_by_key(|&p| {
                (
                    ix.point_lines[p].iter().filter(|&&l| !covered[l]).count(),
                    std::cmp::Reverse(p),
                )
            })
            .expect("nonempty point set");
        let gain: Vec<usize> = ix.point_lines[best]
            .iter()
            .copied()
            .filter(|&l| !covered[l])
            .collect();
        assert!(!gain.is_empty(), "uncoverable line (empty line in system?)");
        for &l in &gain {
            covered[l] = true;
        }
        left -= gain.len();
        chosen.push(best);
    }
    chosen
}

/// Greedy transversal by repeated maximum degree; a valid cover, not
/// necessarily optimal.
pub fn greedy_transversal(ls: &LinearSystem) -> BTreeSet<String> {
    let ix = ls.indexed();
    if ix.lines.is_empty() {
        return BTreeSet::new();
    }
    let witness = ids_to_labels(&ix, &greedy_cover_ids(&ix));
    assert!(is_transversal(ls, &witness));
    witness
}

/// Maximum number of lines no three of which pass through a common
/// point, with a witness list of line indices.
pub fn two_packing_number(ls: &LinearSystem, budget: u64) -> SolveResult<Vec<usize>> {
    let ix = ls.indexed();
    let m = ix.lines.len();
    let mut counts = vec![0u8; ix.labels.len()];
    let mut chosen: Vec<usize> = Vec::new();
    let mut best: Vec<usize> = Vec::new();
    let mut nodes: u64 = 0;
    let complete = nu2_dfs(&ix, 0, &mut counts, &mut chosen, &mut best, &mut nodes, budget);
    assert!(is_two_packing(ls, &best), "solver returned a non-packing");
    if complete {
        SolveResult::Exact {
            value: best.len(),
            witness: best,
            nodes,
        }
    } else {
        SolveResult::Interval {
            lower: best.len(),
            upper: m,
            witness: best,
            nodes,
        }
    }
}

fn nu2_dfs(
    ix: &Indexed,
    idx: usize,
    counts: &mut [u8],
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
    nodes: &mut u64,
    budget: u64,
) -> bool {
    *nodes += 1;
    if *nodes > budget {
        return false;
    }
    if idx == ix.lines.len() {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        return true;
    }
    if chosen.len() + (ix.lines.len() - idx) <= best.len() {
        return true; // pruned, still exhaustive
    }
    let mut complete = true;
    if ix.lines[idx].iter().all(|&p| counts[p] < 2) {
        for &p in &ix.lines[idx] {
            counts[p] += 1;
        }
        chosen.push(idx);
        complete &= nu2_dfs(ix, idx + 1, counts, chosen, best, nodes, budget);
        chosen.pop();
        for &p in &ix.lines[idx] {
            counts[p] -= 1;
        }
    }
    if complete {
        complete &= nu2_dfs(ix, idx + 1, counts, chosen, best, nodes, budget);
    }
    complete
}

/// For intersecting systems: pairing consecutive lines and picking each
/// pair's shared point covers everything, so `tau <= ceil(lines/2)`.
/// Returns the bound with its witness cover.
pub fn pairing_cover_bound(ls: &LinearSystem) -> Option<(usize, BTreeSet<String>)> {
    if !ls.is_intersecting() {
        return None;
    }
    let ix = ls.indexed();
    let m = ix.lines.len();
    let mut witness_ids = Vec::new();
    let mut i = 0;
    while i + 1 < m {
        let shared: Vec<usize> = ix.lines[i]
            .iter()
            .copied()
            .filter(|p| ix.lines[i + 1].contains(p))
            .collect();
        assert_eq!(shared.len(), 1, "intersecting pair must share one point");
        witness_ids.push(shared[0]);
        i += 2;
    }
    if i < m {
        witness_ids.push(ix.lines[i][0]); // least point of the odd line out
    }
    let witness = ids_to_labels(&ix, &witness_ids);
    assert!(is_transversal(ls, &witness));
    Some((m.div_ceil(2), witness))
}

/// True when `set` meets every line of the system.
pub fn is_transversal(ls: &LinearSystem, set: &BTreeSet<String>) -> bool {
    ls.lines()
        .iter()
        .all(|line| line.iter().any(|p| set.contains(p)))
}

/// True when no point lies on three of the chosen lines (indices must be
/// distinct and in range).
pub fn is_two_packing(ls: &LinearSystem, lines: &[usize]) -> bool {
    let chosen: BTreeSet<usize> = lines.iter().copied().collect();
    if chosen.len() != lines.len() || lines.iter().any(|&l| l >= ls.line_count()) {
        return false;
    }
    let mut counts: std::collections::BTreeMap<&str, usize> = Default::default();
    for &l in &chosen {
        for p in ls.line(l) {
            let c = counts.entry(p.as_str()).or_default();
            *c += 1;
            if *c >= 3 {
                return false;
            }
        }
    }
    true
}

fn ids_to_labels(ix: &Indexed, ids: &[usize]) -> BTreeSet<String> {
    ids.iter().map(|&p| ix.labels[p].clone()).collect()
}

/// Exact invariants of one small system, as computed by
/// [`SmallInvariantSolver`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallInvariants {
    pub tau: usize,
    pub nu2: usize,
    pub max_degree: usize,
    pub has_degree_one_point: bool,
}

/// Exact τ and ν₂ for segment systems with at most 20 lines and 128
/// points, computed on bit-mask representations: τ by dynamic
/// programming over covered-line subsets, ν₂ by scanning line subsets.
/// The exhaustive sweeps solve millions of tiny systems; this avoids
/// building the labeled form for each one. Buffers are reused across
/// calls.
#[derive(Debug, Default)]
pub struct SmallInvariantSolver {
    points: Vec<(i64, i64)>,
    point_lines: Vec<u32>,
    line_points: Vec<u128>,
    cover_cost: Vec<u8>,
}

impl SmallInvariantSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn solve(&mut self, ss: &SegmentSystem) -> SmallInvariants {
        let m = ss.line_count();
        assert!(m <= 20, "subset tables need at most 20 lines");
        self.points.clear();
        for s in ss.segments() {
            self.points.extend(s.points());
        }
        self.points.sort_unstable();
        self.points.dedup();
        let n = self.points.len();
        assert!(n <= 128, "point masks hold at most 128 points");

        self.point_lines.clear();
        self.point_lines.resize(n, 0);
        self.line_points.clear();
        self.line_points.resize(m, 0);
        for (l, s) in ss.segments().iter().enumerate() {
            for p in s.points() {
                let i = self.points.binary_search(&p).expect("own point");
                self.point_lines[i] |= 1 << l;
                self.line_points[l] |= 1 << i;
            }
        }

        let full: u32 = (1u32 << m) - 1;
        self.cover_cost.clear();
        self.cover_cost.resize(1 << m, 0);
        for set in 1..=full {
            let lowest = set.trailing_zeros() as usize;
            let mut best = u8::MAX;
            let mut pts = self.line_points[lowest];
            while pts != 0 {
                let i = pts.trailing_zeros() as usize;
                pts &= pts - 1;
                let rest = set & !self.point_lines[i];
                best = best.min(self.cover_cost[rest as usize] + 1);
            }
            self.cover_cost[set as usize] = best;
        }
        let tau = self.cover_cost[full as usize] as usize;

        let mut nu2 = 0usize;
        'subset: for set in 1..=full {
            if (set.count_ones() as usize) <= nu2 {
                continue;
            }
            for &pl in &self.point_lines {
                if (pl & set).count_ones() > 2 {
                    continue 'subset;
                }
            }
            nu2 = set.count_ones() as usize;
        }

        let max_degree = self
            .point_lines
            .iter()
            .map(|pl| pl.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let has_degree_one_point = self.point_lines.iter().any(|pl| pl.count_ones() == 1);
        SmallInvariants {
            tau,
            nu2,
            max_degree,
            has_degree_one_point,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    /// Subset-enumeration oracle for the minimum transversal.
    fn brute_tau(ls: &LinearSystem) -> usize {
        let points: Vec<&String> = ls.points().iter().collect();
        for k in 0..=points.len() {
            let mut pick = vec![false; points.len()];
            if try_cover(ls, &points, &mut pick, 0, k) {
                return k;
            }
        }
        unreachable!("the full point set always covers");
    }

    fn try_cover(
        ls: &LinearSystem,
        points: &[&String],
        pick: &mut Vec<bool>,
        from: usize,
        k: usize,
    ) -> bool {
        if k == 0 {
            let set: BTreeSet<String> = points
                .iter()
                .zip(pick.iter())
                .filter(|(_, &b)| b)
                .map(|(p, _)| (*p).clone())
                .collect();
            return is_transversal(ls, &set);
        }
        if from + k > points.len() {
            return false;
        }
        for i in from..points.len() {
            pick[i] = true;
            if try_cover(ls, points, pick, i + 1, k - 1) {
                pick[i] = false;
                return true;
            }
            pick[i] = false;
        }
        false
    }

    /// All-subsets oracle for the 2-packing number.
    fn brute_nu2(ls: &LinearSystem) -> usize {
        let m = ls.line_count();
        assert!(m <= 20, "oracle is exponential in the line count");
        (0u32..1 << m)
            .filter(|mask| {
                let subset: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
                is_two_packing(ls, &subset)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn fano_invariants_match_oracle() {
        let f = instances::fano();
        assert_eq!(brute_tau(&f), 3);
        assert_eq!(brute_nu2(&f), 4);
        let tau = transversal_number(&f, DEFAULT_NODE_BUDGET);
        assert_eq!(tau.exact_value(), Some(3));
        let nu2 = two_packing_number(&f, DEFAULT_NODE_BUDGET);
        assert_eq!(nu2.exact_value(), Some(4));
    }

    #[test]
    fn pendant_extension_matches_oracle() {
        let s = instances::fano_minus_line_with_pendants();
        assert_eq!(brute_tau(&s), 3);
        assert_eq!(brute_nu2(&s), 4);
        assert_eq!(
            transversal_number(&s, DEFAULT_NODE_BUDGET).exact_value(),
            Some(3)
        );
        assert_eq!(
            two_packing_number(&s, DEFAULT_NODE_BUDGET).exact_value(),
            Some(4)
        );
    }

    #[test]
    fn pencil_and_cycle_values() {
        let p = instances::pencil(5, 3);
        assert_eq!(transversal_number(&p, DEFAULT_NODE_BUDGET).exact_value(), Some(1));
        assert_eq!(two_packing_number(&p, DEFAULT_NODE_BUDGET).exact_value(), Some(2));

        let c = instances::cycle(6);
        assert_eq!(transversal_number(&c, DEFAULT_NODE_BUDGET).exact_value(), Some(3));
        // Max degree 2: every line fits in one 2-packing.
        assert_eq!(two_packing_number(&c, DEFAULT_NODE_BUDGET).exact_value(), Some(6));
    }

    #[test]
    fn single_and_empty_systems() {
        let empty = LinearSystem::from_lines(Vec::<Vec<String>>::new());
        assert_eq!(transversal_number(&empty, 10).exact_value(), Some(0));
        assert_eq!(two_packing_number(&empty, 10).exact_value(), Some(0));

        let single = LinearSystem::from_lines(vec![vec!["a", "b", "c"]]);
        assert_eq!(transversal_number(&single, 100).exact_value(), Some(1));
        assert_eq!(two_packing_number(&single, 100).exact_value(), Some(1));
    }

    #[test]
    fn two_disjoint_lines() {
        let s = LinearSystem::from_lines(vec![vec!["a", "b"], vec!["c", "d"]]);
        assert_eq!(transversal_number(&s, 100).exact_value(), Some(2));
        assert_eq!(two_packing_number(&s, 100).exact_value(), Some(2));
    }

    #[test]
    fn budget_exhaustion_yields_interval() {
        let f = instances::fano();
        match transversal_number(&f, 1) {
            SolveResult::Interval { lower, upper, witness, .. } => {
                assert!(lower <= 3 && 3 <= upper);
                assert!(is_transversal(&f, &witness));
            }
            other => panic!("expected interval under 1-node budget, got {other:?}"),
        }
        match two_packing_number(&f, 1) {
            SolveResult::Interval { lower, upper, .. } => {
                assert!(lower <= 4 && 4 <= upper);
            }
            other => panic!("expected interval, got {other:?}"),
        }
    }

    #[test]
    fn pairing_bound_on_intersecting_systems() {
        let f = instances::fano();
        let (bound, witness) = pairing_cover_bound(&f).unwrap();
        assert_eq!(bound, 4);
        assert!(is_transversal(&f, &witness));
        assert!(pairing_cover_bound(&instances::cycle(6)).is_none());
    }

    #[test]
    fn witnesses_are_verified_covers_and_packings() {
        for ls in [
            instances::fano(),
            instances::fano_minus_line(),
            instances::pencil(4, 4),
            instances::cycle(7),
            instances::triangle(),
        ] {
            let tau = transversal_number(&ls, DEFAULT_NODE_BUDGET);
            assert!(is_transversal(&ls, tau.witness()));
            assert_eq!(tau.exact_value().unwrap(), brute_tau(&ls));
            let nu2 = two_packing_number(&ls, DEFAULT_NODE_BUDGET);
            assert!(is_two_packing(&ls, nu2.witness()));
            assert_eq!(nu2.exact_value().unwrap(), brute_nu2(&ls));
        }
    }

    #[test]
    fn bitmask_solver_matches_branch_and_bound_on_random_lattice_systems() {
        use crate::segment::{Seg, SegmentSystem};
        use rand::{Rng, SeedableRng};
        fn primitive(d: (i64, i64)) -> bool {
            let (mut a, mut b) = (d.0.abs(), d.1.abs());
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a == 1
        }
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(20240811);
        let mut solver = SmallInvariantSolver::new();
        let mut checked = 0;
        while checked < 150 {
            let r = rng.gen_range(2..5usize);
            let n = rng.gen_range(1..6usize);
            let segs: Vec<Seg> = (0..n)
                .map(|_| {
                    let dir = loop {
                        let d = (rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64));
                        if primitive(d) {
                            break d;
                        }
                    };
                    let base = (rng.gen_range(-4..=4), rng.gen_range(-4..=4));
                    Seg::new(base, dir, r).unwrap()
                })
                .collect();
            let Ok(ss) = SegmentSystem::build(segs) else {
                continue;
            };
            checked += 1;
            let fast = solver.solve(&ss);
            let ls = ss.to_linear_system();
            assert_eq!(
                fast.tau,
                transversal_number(&ls, DEFAULT_NODE_BUDGET)
                    .exact_value()
                    .unwrap()
            );
            assert_eq!(
                fast.nu2,
                two_packing_number(&ls, DEFAULT_NODE_BUDGET)
                    .exact_value()
                    .unwrap()
            );
            assert_eq!(fast.max_degree, ls.max_degree());
            assert_eq!(
                fast.has_degree_one_point,
                ls.degrees().values().any(|&d| d == 1)
            );
        }
    }
}
