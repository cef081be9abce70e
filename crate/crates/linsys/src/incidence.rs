//! Finite linear systems: a set of points and a family of lines (point
//! sets) in which any two distinct lines share at most one point.
//!
//! Point identifiers are opaque ASCII tokens. Lines keep the index they
//! were given at construction; every operation that reports a line refers
//! to that index.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Default node budget for the isomorphism backtracker.
pub const DEFAULT_ISO_BUDGET: u64 = 10_000_000;

/// A finite point/line incidence structure.
///
/// Invariants checked by [`LinearSystem::validate`]:
/// - every line is a non-empty set of known points, with no token repeated;
/// - two distinct lines share at most one point;
/// - no two lines are equal as sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    points: BTreeSet<String>,
    /// Tokens sorted within each line; line order is the construction order.
    lines: Vec<Vec<String>>,
}

/// First violated invariant found by [`LinearSystem::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("line {line} is empty")]
    EmptyLine { line: usize },
    #[error("line {line} repeats point {point}")]
    DuplicatePointInLine { line: usize, point: String },
    #[error("line {line} uses unknown point {point}")]
    UnknownPoint { line: usize, point: String },
    #[error("lines {line_a} and {line_b} share two points ({0}, {1})", .shared.0, .shared.1)]
    PairSharesTwoPoints {
        line_a: usize,
        line_b: usize,
        shared: (String, String),
    },
    #[error("lines {line_a} and {line_b} are equal as sets")]
    DuplicateLine { line_a: usize, line_b: usize },
}

/// Outcome of the bounded isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    /// Systems are isomorphic; the witness maps points of the first pruned
    /// system onto points of the second.
    Isomorphic(BTreeMap<String, String>),
    NotIsomorphic,
    /// The node budget ran out before a decision was reached.
    BudgetExceeded,
}

impl LinearSystem {
    /// Builds a system whose point set is the union of the given lines.
    pub fn from_lines<L, T>(lines: L) -> Self
    where
        L: IntoIterator<Item = Vec<T>>,
        T: Into<String>,
    {
        let lines: Vec<Vec<String>> = lines
            .into_iter()
            .map(|l| {
                let mut l: Vec<String> = l.into_iter().map(Into::into).collect();
                l.sort();
                l
            })
            .collect();
        let points = lines.iter().flatten().cloned().collect();
        LinearSystem { points, lines }
    }

    /// Builds a system over an explicit point set; lines may then mention
    /// tokens outside it, which `validate` reports as `UnknownPoint`.
    pub fn with_points<P, L, T>(points: P, lines: L) -> Self
    where
        P: IntoIterator<Item = T>,
        L: IntoIterator<Item = Vec<T>>,
        T: Into<String>,
    {
        let points = points.into_iter().map(Into::into).collect();
        let lines = lines
            .into_iter()
            .map(|l| {
                let mut l: Vec<String> = l.into_iter().map(Into::into).collect();
                l.sort();
                l
            })
            .collect();
        LinearSystem { points, lines }
    }

    pub fn points(&self) -> &BTreeSet<String> {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<String>] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &[String] {
        &self.lines[i]
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    /// Checks every invariant and reports the first violation in a fixed
    /// scan order: per-line checks by line index, then all pairs (i, j)
    /// with i < j in lexicographic order.
    pub fn validate(&self) -> Result<(), SystemError> {
        for (i, line) in self.lines.iter().enumerate() {
            if line.is_empty() {
                return Err(SystemError::EmptyLine { line: i });
            }
            for w in line.windows(2) {
                if w[0] == w[1] {
                    return Err(SystemError::DuplicatePointInLine {
                        line: i,
                        point: w[0].clone(),
                    });
                }
            }
            for p in line {
                if !self.points.contains(p) {
                    return Err(SystemError::UnknownPoint {
                        line: i,
                        point: p.clone(),
                    });
                }
            }
        }
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                let shared = intersect_sorted(&self.lines[i], &self.lines[j]);
                if self.lines[i] == self.lines[j] {
                    return Err(SystemError::DuplicateLine { line_a: i, line_b: j });
                }
                if shared.len() >= 2 {
                    return Err(SystemError::PairSharesTwoPoints {
                        line_a: i,
                        line_b: j,
                        shared: (shared[0].clone(), shared[1].clone()),
                    });
                }
            }
        }
        Ok(())
    }

    /// Per-point degrees (number of lines through each point). Points on
    /// no line get degree 0.
    pub fn degrees(&self) -> BTreeMap<String, usize> {
        let mut deg: BTreeMap<String, usize> = self.points.iter().map(|p| (p.clone(), 0)).collect();
        for line in &self.lines {
            for p in line {
                if let Some(d) = deg.get_mut(p) {
                    *d += 1;
                }
            }
        }
        deg
    }

    /// Maximum point degree (0 for a system with no incidences).
    pub fn max_degree(&self) -> usize {
        self.degrees().values().copied().max().unwrap_or(0)
    }

    /// Returns `Some(r)` when every line has exactly `r` points, `None`
    /// for mixed sizes or for a system with no lines.
    pub fn uniformity(&self) -> Option<usize> {
        let mut sizes = self.lines.iter().map(|l| l.len());
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// True when every pair of distinct lines shares exactly one point.
    /// Vacuously true for fewer than two lines.
    pub fn is_intersecting(&self) -> bool {
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                if intersect_sorted(&self.lines[i], &self.lines[j]).len() != 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Repeatedly deletes points of degree at most one until none remain.
    ///
    /// Lines shrink with their points; lines left empty disappear, and
    /// lines that collapse onto the same point set are merged so the
    /// result is again a valid system. The result is a fixpoint:
    /// pruning twice equals pruning once.
    pub fn prune_low_degree(&self) -> LinearSystem {
        let mut points = self.points.clone();
        let mut lines = self.lines.clone();
        loop {
            let current = LinearSystem {
                points: points.clone(),
                lines: lines.clone(),
            };
            let deg = current.degrees();
            let keep: BTreeSet<String> = deg
                .iter()
                .filter(|(_, &d)| d >= 2)
                .map(|(p, _)| p.clone())
                .collect();
            if keep == points {
                break;
            }
            let mut next_lines: Vec<Vec<String>> = Vec::new();
            for line in &lines {
                let trimmed: Vec<String> =
                    line.iter().filter(|p| keep.contains(*p)).cloned().collect();
                if !trimmed.is_empty() && !next_lines.contains(&trimmed) {
                    next_lines.push(trimmed);
                }
            }
            points = next_lines.iter().flatten().cloned().collect();
            lines = next_lines;
        }
        LinearSystem { points, lines }
    }

    /// Removes the line at `index` (later lines shift down by one) and
    /// drops any point whose degree falls to zero.
    pub fn remove_line(&self, index: usize) -> Option<LinearSystem> {
        if index >= self.lines.len() {
            return None;
        }
        let lines: Vec<Vec<String>> = self
            .lines
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, l)| l.clone())
            .collect();
        let lined: BTreeSet<String> = lines.iter().flatten().cloned().collect();
        let points = self
            .points
            .iter()
            .filter(|p| {
                // Points that were isolated before stay; only degree that
                // drops to zero disappears.
                lined.contains(*p) || !self.lines[index].contains(*p)
            })
            .cloned()
            .collect();
        Some(LinearSystem { points, lines })
    }

    pub(crate) fn indexed(&self) -> Indexed {
        let labels: Vec<String> = self.points.iter().cloned().collect();
        let id: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_str(), i))
            .collect();
        let lines: Vec<Vec<usize>> = self
            .lines
            .iter()
            .map(|l| {
                let mut v: Vec<usize> = l.iter().map(|p| id[p.as_str()]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let mut point_lines = vec![Vec::new(); labels.len()];
        for (li, line) in lines.iter().enumerate() {
            for &p in line {
                point_lines[p].push(li);
            }
        }
        Indexed {
            labels,
            lines,
            point_lines,
        }
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} points, {} lines", self.points.len(), self.lines.len())
    }
}

/// Dense-index view used by solvers and graph builders.
pub(crate) struct Indexed {
    pub labels: Vec<String>,
    pub lines: Vec<Vec<usize>>,
    pub point_lines: Vec<Vec<usize>>,
}

fn intersect_sorted(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Decides whether two systems are isomorphic after both are pruned of
/// low-degree points (see [`LinearSystem::prune_low_degree`]).
///
/// The witness, when present, is a point bijection between the two pruned
/// systems under which the line families correspond. The backtracking is
/// node-budgeted; running out is reported as its own outcome, never as a
/// wrong answer.
pub fn are_isomorphic(a: &LinearSystem, b: &LinearSystem, budget: u64) -> IsoOutcome {
    let a = a.prune_low_degree();
    let b = b.prune_low_degree();
    let ia = a.indexed();
    let ib = b.indexed();

    if ia.labels.len() != ib.labels.len() || ia.lines.len() != ib.lines.len() {
        return IsoOutcome::NotIsomorphic;
    }
    let sig = |ix: &Indexed, p: usize| -> (usize, Vec<usize>) {
        let mut sizes: Vec<usize> = ix.point_lines[p].iter().map(|&l| ix.lines[l].len()).collect();
        sizes.sort_unstable();
        (ix.point_lines[p].len(), sizes)
    };
    let sig_a: Vec<_> = (0..ia.labels.len()).map(|p| sig(&ia, p)).collect();
    let sig_b: Vec<_> = (0..ib.labels.len()).map(|p| sig(&ib, p)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return IsoOutcome::NotIsomorphic;
    }
    let mut line_sizes_a: Vec<usize> = ia.lines.iter().map(Vec::len).collect();
    let mut line_sizes_b: Vec<usize> = ib.lines.iter().map(Vec::len).collect();
    line_sizes_a.sort_unstable();
    line_sizes_b.sort_unstable();
    if line_sizes_a != line_sizes_b {
        return IsoOutcome::NotIsomorphic;
    }

    // Size of the (unique) line through a pair of points, if any.
    let pair_line = |ix: &Indexed| -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for line in &ix.lines {
            for i in 0..line.len() {
                for j in i + 1..line.len() {
                    m.insert((line[i], line[j]), line.len());
                }
            }
        }
        m
    };
    let pairs_a = pair_line(&ia);
    let pairs_b = pair_line(&ib);
    let line_set_b: BTreeSet<Vec<usize>> = ib.lines.iter().cloned().collect();

    // Map points in order of decreasing degree (rarer, more constrained
    // points first), breaking ties by label for determinism.
    let n = ia.labels.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| {
        sig_a[y]
            .cmp(&sig_a[x])
            .then_with(|| ia.labels[x].cmp(&ia.labels[y]))
    });

    struct Search<'s> {
        ia: &'s Indexed,
        ib: &'s Indexed,
        sig_a: &'s [(usize, Vec<usize>)],
        sig_b: &'s [(usize, Vec<usize>)],
        pairs_a: &'s BTreeMap<(usize, usize), usize>,
        pairs_b: &'s BTreeMap<(usize, usize), usize>,
        line_set_b: &'s BTreeSet<Vec<usize>>,
        order: &'s [usize],
        map: Vec<Option<usize>>,
        used: Vec<bool>,
        nodes: u64,
        budget: u64,
    }

    enum Found {
        Yes,
        No,
        Out,
    }

    impl Search<'_> {
        fn consistent(&self, p: usize, q: usize) -> bool {
            for &p2 in self.order {
                if let Some(q2) = self.map[p2] {
                    let key_a = (p.min(p2), p.max(p2));
                    let key_b = (q.min(q2), q.max(q2));
                    if self.pairs_a.get(&key_a) != self.pairs_b.get(&key_b) {
                        return false;
                    }
                }
            }
            true
        }

        fn go(&mut self, depth: usize) -> Found {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Found::Out;
            }
            if depth == self.order.len() {
                // All points mapped injectively with matching pair
                // structure; confirm lines map onto lines.
                for line in &self.ia.lines {
                    let mut image: Vec<usize> =
                        line.iter().map(|&p| self.map[p].unwrap()).collect();
                    image.sort_unstable();
                    if !self.line_set_b.contains(&image) {
                        return Found::No;
                    }
                }
                return Found::Yes;
            }
            let p = self.order[depth];
            for q in 0..self.ib.labels.len() {
                if self.used[q] || self.sig_a[p] != self.sig_b[q] || !self.consistent(p, q) {
                    continue;
                }
                self.map[p] = Some(q);
                self.used[q] = true;
                match self.go(depth + 1) {
                    Found::Yes => return Found::Yes,
                    Found::Out => return Found::Out,
                    Found::No => {}
                }
                self.map[p] = None;
                self.used[q] = false;
            }
            Found::No
        }
    }

    let mut search = Search {
        ia: &ia,
        ib: &ib,
        sig_a: &sig_a,
        sig_b: &sig_b,
        pairs_a: &pairs_a,
        pairs_b: &pairs_b,
        line_set_b: &line_set_b,
        order: &order,
        map: vec![None; n],
        used: vec![false; n],
        nodes: 0,
        budget,
    };
    match search.go(0) {
        Found::Yes => {
            let witness = (0..n)
                .map(|p| (ia.labels[p].clone(), ib.labels[search.map[p].unwrap()].clone()))
                .collect();
            IsoOutcome::Isomorphic(witness)
        }
        Found::No => IsoOutcome::NotIsomorphic,
        Found::Out => IsoOutcome::BudgetExceeded,
    }
}

/// Isomorphism of the low-degree-pruned cores, the equivalence used when
/// comparing systems that differ only in pendant structure. Both systems
/// are pruned to their fixpoint and compared; no side conditions on line
/// sizes are enforced here.
pub fn is_core_isomorphic(a: &LinearSystem, b: &LinearSystem, budget: u64) -> IsoOutcome {
    are_isomorphic(a, b, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(lines: &[&[&str]]) -> LinearSystem {
        LinearSystem::from_lines(lines.iter().map(|l| l.iter().map(|s| s.to_string()).collect()))
    }

    #[test]
    fn validate_accepts_triangle() {
        let t = sys(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        assert_eq!(t.validate(), Ok(()));
        assert!(t.is_intersecting());
        assert_eq!(t.uniformity(), Some(2));
        assert_eq!(t.max_degree(), 2);
    }

    #[test]
    fn validate_rejects_two_shared_points() {
        let s = sys(&[&["a", "b", "c"], &["a", "b", "d"]]);
        assert_eq!(
            s.validate(),
            Err(SystemError::PairSharesTwoPoints {
                line_a: 0,
                line_b: 1,
                shared: ("a".into(), "b".into()),
            })
        );
    }

    #[test]
    fn validate_rejects_duplicate_token() {
        let s = sys(&[&["a", "a", "b"]]);
        assert_eq!(
            s.validate(),
            Err(SystemError::DuplicatePointInLine {
                line: 0,
                point: "a".into()
            })
        );
    }

    #[test]
    fn validate_rejects_empty_line() {
        let s = LinearSystem::from_lines(Vec::<Vec<String>>::from([vec![]]));
        assert_eq!(s.validate(), Err(SystemError::EmptyLine { line: 0 }));
    }

    #[test]
    fn validate_rejects_unknown_point() {
        let s = LinearSystem::with_points(vec!["a", "b"], vec![vec!["a", "z"]]);
        assert_eq!(
            s.validate(),
            Err(SystemError::UnknownPoint {
                line: 0,
                point: "z".into()
            })
        );
    }

    #[test]
    fn validate_rejects_duplicate_singleton_lines() {
        let s = sys(&[&["a"], &["a"]]);
        assert_eq!(
            s.validate(),
            Err(SystemError::DuplicateLine { line_a: 0, line_b: 1 })
        );
    }

    #[test]
    fn prune_single_line_gives_empty_system() {
        let s = sys(&[&["a", "b", "c"]]);
        let p = s.prune_low_degree();
        assert_eq!(p.point_count(), 0);
        assert_eq!(p.line_count(), 0);
    }

    #[test]
    fn prune_cherry_collapses_to_empty() {
        // Two lines sharing one point; the shared point survives round one
        // but its lines merge, so the fixpoint is empty.
        let s = sys(&[&["x", "a"], &["x", "b"]]);
        let p = s.prune_low_degree();
        assert_eq!(p.point_count(), 0);
        assert_eq!(p.line_count(), 0);
    }

    #[test]
    fn prune_is_idempotent_on_triangle() {
        let t = sys(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let once = t.prune_low_degree();
        assert_eq!(once, t, "triangle has no low-degree points");
        assert_eq!(once.prune_low_degree(), once);
    }

    #[test]
    fn remove_line_drops_orphaned_points() {
        let s = sys(&[&["a", "b"], &["b", "c"]]);
        let r = s.remove_line(1).unwrap();
        assert_eq!(r.line_count(), 1);
        assert!(!r.points().contains("c"));
        assert!(r.points().contains("a") && r.points().contains("b"));
        assert!(s.remove_line(5).is_none());
    }

    #[test]
    fn isomorphic_under_relabeling() {
        let a = sys(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let b = sys(&[&["u", "v"], &["v", "w"], &["u", "w"]]);
        match are_isomorphic(&a, &b, DEFAULT_ISO_BUDGET) {
            IsoOutcome::Isomorphic(map) => {
                assert_eq!(map.len(), 3);
                let image: BTreeSet<&String> = map.values().collect();
                assert_eq!(image.len(), 3);
            }
            other => panic!("expected isomorphism, got {other:?}"),
        }
    }

    #[test]
    fn pencil_and_triangle_are_not_isomorphic() {
        let triangle = sys(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let pencil = sys(&[&["x", "a"], &["x", "b"], &["x", "c"]]);
        assert_eq!(
            are_isomorphic(&triangle, &pencil, DEFAULT_ISO_BUDGET),
            IsoOutcome::NotIsomorphic
        );
    }

    #[test]
    fn tiny_budget_reports_exhaustion() {
        let a = sys(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let b = sys(&[&["u", "v"], &["v", "w"], &["u", "w"]]);
        assert_eq!(are_isomorphic(&a, &b, 1), IsoOutcome::BudgetExceeded);
    }
}
