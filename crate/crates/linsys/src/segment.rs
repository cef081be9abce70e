//! Integer-lattice segment systems.
//!
//! A segment is `len` consecutive lattice points along a primitive
//! direction; a segment system is a family of equal-length segments, no
//! two on the same Euclidean line. The induced linear system (points =
//! lattice points, lines = segment point sets) is automatically valid:
//! distinct Euclidean lines meet in at most one point.
//!
//! The module also hosts the exhaustive search for intersecting segment
//! systems inside a bounding box, with isomorph rejection under the
//! translation + dihedral symmetry group of the lattice (the eight
//! signed coordinate permutations). Systems are emitted exactly once per
//! symmetry class, as the class's canonical representative, without any
//! cross-branch bookkeeping: a system is emitted if and only if it
//! equals its own canonical form, which makes sharded runs merge
//! deterministically.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::incidence::LinearSystem;
use crate::solvers::{transversal_number, SolveResult};

pub type Point = (i64, i64);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SegmentError {
    #[error("direction ({0}, {1}) is not a primitive vector", dir.0, dir.1)]
    NonPrimitiveDirection { dir: Point },
    #[error("segment length {len} is below two")]
    LengthBelowTwo { len: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("segment {segment} has length {found}, expected {expected}")]
    MixedLengths {
        segment: usize,
        expected: usize,
        found: usize,
    },
    #[error("segments {first} and {second} lie on the same Euclidean line")]
    CollinearDuplicate { first: usize, second: usize },
    #[error("a segment system needs at least one segment")]
    Empty,
}

/// `len` consecutive lattice points starting at `base`, stepping by the
/// primitive vector `dir`, which is normalized so that `dir.0 > 0`, or
/// `dir.0 == 0` and `dir.1 > 0`. Construction flips a reversed direction
/// onto the other end, so equal point sets give equal segments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seg {
    base: Point,
    dir: Point,
    len: usize,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn cross(u: Point, v: Point) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

impl Seg {
    pub fn new(base: Point, dir: Point, len: usize) -> Result<Seg, SegmentError> {
        if gcd(dir.0, dir.1) != 1 {
            return Err(SegmentError::NonPrimitiveDirection { dir });
        }
        if len < 2 {
            return Err(SegmentError::LengthBelowTwo { len });
        }
        if dir.0 < 0 || (dir.0 == 0 && dir.1 < 0) {
            let k = (len - 1) as i64;
            Ok(Seg {
                base: (base.0 + k * dir.0, base.1 + k * dir.1),
                dir: (-dir.0, -dir.1),
                len,
            })
        } else {
            Ok(Seg { base, dir, len })
        }
    }

    pub fn base(&self) -> Point {
        self.base
    }

    pub fn dir(&self) -> Point {
        self.dir
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// The lattice points of the segment, in stepping order.
    pub fn points(&self) -> Vec<Point> {
        (0..self.len as i64)
            .map(|k| (self.base.0 + k * self.dir.0, self.base.1 + k * self.dir.1))
            .collect()
    }

    pub fn contains(&self, p: Point) -> bool {
        let d = (p.0 - self.base.0, p.1 - self.base.1);
        if cross(d, self.dir) != 0 {
            return false;
        }
        let k = if self.dir.0 != 0 {
            d.0 / self.dir.0
        } else {
            d.1 / self.dir.1
        };
        k >= 0
            && k < self.len as i64
            && d == (k * self.dir.0, k * self.dir.1)
    }

    /// The unique shared lattice point of two non-collinear segments, if
    /// their point sets meet.
    pub fn shared_point(&self, other: &Seg) -> Option<Point> {
        // Solve base_a + k·dir_a = base_b + j·dir_b over the integers.
        let den = cross(self.dir, other.dir);
        if den == 0 {
            // Parallel or collinear: either no shared point or a shared
            // run; report a shared point only for overlapping collinear
            // segments (callers reject those as duplicates separately).
            return self.points().into_iter().find(|&p| other.contains(p));
        }
        let d = (other.base.0 - self.base.0, other.base.1 - self.base.1);
        let k_num = cross(d, other.dir);
        if k_num % den != 0 {
            return None;
        }
        let k = k_num / den;
        if k < 0 || k >= self.len as i64 {
            return None;
        }
        let p = (self.base.0 + k * self.dir.0, self.base.1 + k * self.dir.1);
        if other.contains(p) {
            Some(p)
        } else {
            None
        }
    }

    /// Coefficients (a, b, c) of the Euclidean line a·x + b·y = c through
    /// the segment, normalized so (a, b) is primitive with a > 0, or
    /// a == 0 and b > 0. Equal keys mean the same line.
    pub fn line_key(&self) -> (i64, i64, i64) {
        let (mut a, mut b) = (self.dir.1, -self.dir.0);
        let mut c = a * self.base.0 + b * self.base.1;
        if a < 0 || (a == 0 && b < 0) {
            (a, b, c) = (-a, -b, -c);
        }
        (a, b, c)
    }

    fn encode(&self) -> (i64, i64, i64, i64) {
        (self.dir.0, self.dir.1, self.base.0, self.base.1)
    }
}

impl PartialOrd for Seg {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Seg {
    /// Direction-major order; the search relies on it for isomorph-free
    /// generation.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.dir, self.base, self.len).cmp(&(other.dir, other.base, other.len))
    }
}

/// An equal-length family of segments, pairwise on distinct Euclidean
/// lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentSystem {
    r: usize,
    segs: Vec<Seg>,
}

/// Witness for a triangle: three pairwise non-collinear points, each
/// pair consecutive lattice points on a common system line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleWitness {
    pub points: [Point; 3],
    /// Indices of the lines carrying (points[0], points[1]),
    /// (points[1], points[2]), (points[0], points[2]).
    pub lines: [usize; 3],
}

impl SegmentSystem {
    pub fn build(segs: Vec<Seg>) -> Result<SegmentSystem, BuildError> {
        let r = match segs.first() {
            Some(s) => s.len(),
            None => return Err(BuildError::Empty),
        };
        for (i, s) in segs.iter().enumerate() {
            if s.len() != r {
                return Err(BuildError::MixedLengths {
                    segment: i,
                    expected: r,
                    found: s.len(),
                });
            }
        }
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                if segs[i].line_key() == segs[j].line_key() {
                    return Err(BuildError::CollinearDuplicate { first: i, second: j });
                }
            }
        }
        Ok(SegmentSystem { r, segs })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn segments(&self) -> &[Seg] {
        &self.segs
    }

    pub fn line_count(&self) -> usize {
        self.segs.len()
    }

    /// All lattice points of the system, sorted and deduplicated.
    pub fn points(&self) -> Vec<Point> {
        let mut pts: Vec<Point> = self.segs.iter().flat_map(|s| s.points()).collect();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    /// The induced abstract system with `x,y` point labels.
    pub fn to_linear_system(&self) -> LinearSystem {
        LinearSystem::from_lines(
            self.segs
                .iter()
                .map(|s| {
                    s.points()
                        .into_iter()
                        .map(|(x, y)| format!("{x},{y}"))
                        .collect()
                })
                .collect::<Vec<_>>(),
        )
    }

    pub fn is_intersecting(&self) -> bool {
        for i in 0..self.segs.len() {
            for j in i + 1..self.segs.len() {
                if self.segs[i].shared_point(&self.segs[j]).is_none() {
                    return false;
                }
            }
        }
        true
    }

    /// Searches for three non-collinear points, pairwise consecutive on
    /// common system lines. Consecutive pairs are exactly the adjacent
    /// point pairs within one segment, so candidate edges are scanned
    /// per segment and joined.
    pub fn contains_triangle(&self) -> Option<TriangleWitness> {
        let mut edge_line: BTreeMap<(Point, Point), usize> = BTreeMap::new();
        for (li, s) in self.segs.iter().enumerate() {
            let pts = s.points();
            for w in pts.windows(2) {
                let key = (w[0].min(w[1]), w[0].max(w[1]));
                edge_line.entry(key).or_insert(li);
            }
        }
        let edges: Vec<(Point, Point)> = edge_line.keys().copied().collect();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                // Five distinct shapes of sharing one endpoint.
                let (p, q, s) = if c == a {
                    (b, a, d)
                } else if c == b {
                    (a, b, d)
                } else if d == a {
                    (b, a, c)
                } else if d == b {
                    (a, b, c)
                } else {
                    continue;
                };
                // p - q - s path; close it with edge (p, s).
                if cross((q.0 - p.0, q.1 - p.1), (s.0 - p.0, s.1 - p.1)) == 0 {
                    continue;
                }
                let close = (p.min(s), p.max(s));
                if let Some(&l3) = edge_line.get(&close) {
                    let l1 = edge_line[&(p.min(q), p.max(q))];
                    let l2 = edge_line[&(q.min(s), q.max(s))];
                    return Some(TriangleWitness {
                        points: [p, q, s],
                        lines: [l1, l2, l3],
                    });
                }
            }
        }
        None
    }

    /// Encoding used for canonical forms and deterministic output:
    /// sorted (dir, base) tuples.
    pub fn encoding(&self) -> Vec<(i64, i64, i64, i64)> {
        let mut e: Vec<_> = self.segs.iter().map(Seg::encode).collect();
        e.sort_unstable();
        e
    }

    /// Axis-aligned bounding box over all segment points, as
    /// (min corner, max corner).
    pub fn bbox(&self) -> (Point, Point) {
        let mut min = (i64::MAX, i64::MAX);
        let mut max = (i64::MIN, i64::MIN);
        for s in &self.segs {
            let a = s.base;
            let k = (s.len - 1) as i64;
            let b = (a.0 + k * s.dir.0, a.1 + k * s.dir.1);
            min.0 = min.0.min(a.0).min(b.0);
            min.1 = min.1.min(a.1).min(b.1);
            max.0 = max.0.max(a.0).max(b.0);
            max.1 = max.1.max(a.1).max(b.1);
        }
        (min, max)
    }

    fn translated(&self, t: Point) -> SegmentSystem {
        SegmentSystem {
            r: self.r,
            segs: self
                .segs
                .iter()
                .map(|s| Seg {
                    base: (s.base.0 + t.0, s.base.1 + t.1),
                    ..*s
                })
                .collect(),
        }
    }

    /// The system translated so its bounding-box corner sits at the
    /// origin, with segments sorted.
    pub fn normalized(&self) -> SegmentSystem {
        let (min, _) = self.bbox();
        let mut moved = self.translated((-min.0, -min.1));
        moved.segs.sort_unstable();
        moved
    }

    fn mapped(&self, g: u8) -> SegmentSystem {
        SegmentSystem {
            r: self.r,
            segs: self
                .segs
                .iter()
                .map(|s| {
                    Seg::new(dihedral(s.base, g), dihedral(s.dir, g), s.len)
                        .expect("symmetries preserve primitivity and length")
                })
                .collect(),
        }
    }

    /// The least bounding-box-normalized image of the system under the
    /// eight lattice symmetries: the canonical representative of its
    /// translation + dihedral class.
    pub fn canonical(&self) -> SegmentSystem {
        (0..8)
            .map(|g| self.mapped(g).normalized())
            .min_by(|a, b| a.encoding().cmp(&b.encoding()))
            .expect("eight group elements")
    }

    pub fn is_canonical(&self) -> bool {
        self.encoding() == self.canonical().encoding()
    }
}

/// The eight signed coordinate permutations of the square lattice.
fn dihedral(p: Point, g: u8) -> Point {
    let (x, y) = p;
    match g {
        0 => (x, y),
        1 => (-x, y),
        2 => (x, -y),
        3 => (-x, -y),
        4 => (y, x),
        5 => (-y, x),
        6 => (y, -x),
        7 => (-y, -x),
        _ => unreachable!("the dihedral group has eight elements"),
    }
}

// ---------------------------------------------------------------------
// Exhaustive search
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SearchParams {
    /// Segment length.
    pub r: usize,
    /// Emit systems with at most this many segments.
    pub max_lines: usize,
    /// Half-width B: all points of a system fit in a translate of
    /// [-B, B]² (bounding box at most 2B on each side).
    pub box_half_width: i64,
    /// Deterministic work split: (shard_count, shard_index) assigns each
    /// first-segment direction to one shard.
    pub shard: Option<(usize, usize)>,
    /// Emit only systems containing a triangle.
    pub require_triangle: bool,
}

/// Every intersecting `r`-segment system with at most `max_lines` lines
/// fitting the box, exactly once per translation + dihedral class, as
/// canonical representatives in deterministic order. The union of all
/// shards equals the unsharded stream.
pub fn enumerate(params: &SearchParams, mut visit: impl FnMut(&SegmentSystem)) {
    let mut driver = Driver {
        params,
        visit: &mut visit,
        budget: None,
        nodes: 0,
    };
    driver.run();
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Largest emitted system (canonical representative), if any.
    pub best: Option<SegmentSystem>,
    /// Search nodes explored.
    pub nodes: u64,
    /// False when the node budget stopped the search early.
    pub complete: bool,
}

/// Exhausts the same space as [`enumerate`] under a node budget,
/// tracking a system with the most lines. Deterministic; returns
/// best-so-far with `complete = false` when the budget runs out.
pub fn max_lines_search(params: &SearchParams, budget: u64) -> SearchOutcome {
    let mut best: Option<SegmentSystem> = None;
    let mut driver = Driver {
        params,
        visit: &mut |ss: &SegmentSystem| {
            if best.as_ref().is_none_or(|b| ss.line_count() > b.line_count()) {
                best = Some(ss.clone());
            }
        },
        budget: Some(budget),
        nodes: 0,
    };
    let complete = driver.run();
    let nodes = driver.nodes;
    SearchOutcome {
        best,
        nodes,
        complete,
    }
}

/// Candidate segment with its Euclidean-line key cached for the
/// narrowing filter.
#[derive(Clone, Copy)]
struct Cand {
    seg: Seg,
    key: (i64, i64, i64),
}

struct Driver<'a> {
    params: &'a SearchParams,
    visit: &'a mut dyn FnMut(&SegmentSystem),
    budget: Option<u64>,
    nodes: u64,
}

struct Node {
    segs: Vec<Seg>,
    bbox: (Point, Point),
    /// Reusable per-depth candidate buffers and canonical-check scratch,
    /// so the inner loop allocates nothing.
    pools: Vec<Vec<Cand>>,
    enc_id: Vec<(i64, i64, i64, i64)>,
    enc_img: Vec<(i64, i64, i64, i64)>,
}

/// True when segments on distinct Euclidean lines share a lattice
/// point. Division-free: with r small, the line-intersection parameter
/// is tested against each admissible integer directly.
fn meets(a: &Seg, b: &Seg) -> bool {
    let den = cross(a.dir, b.dir);
    if den == 0 {
        return false; // parallel, distinct lines
    }
    let d = (b.base.0 - a.base.0, b.base.1 - a.base.1);
    let k_num = cross(d, b.dir);
    for k in 0..a.len as i64 {
        let t = k * den;
        if t == k_num {
            let p = (a.base.0 + k * a.dir.0, a.base.1 + k * a.dir.1);
            let e = (p.0 - b.base.0, p.1 - b.base.1);
            for j in 0..b.len as i64 {
                if e == (j * b.dir.0, j * b.dir.1) {
                    return true;
                }
            }
            return false;
        }
        if (den > 0 && t > k_num) || (den < 0 && t < k_num) {
            return false;
        }
    }
    false
}

impl Driver<'_> {
    /// Returns false when stopped by the budget.
    fn run(&mut self) -> bool {
        let p = self.params;
        assert!(p.r >= 2, "segments have at least two points");
        assert!(p.box_half_width >= 1);
        let window = 2 * p.box_half_width;
        let step = (p.r - 1) as i64;
        let mut dirs: Vec<Point> = Vec::new();
        let reach = window / step;
        for dx in 0..=reach {
            for dy in -reach..=reach {
                if gcd(dx, dy) == 1 && (dx > 0 || dy > 0) {
                    dirs.push((dx, dy));
                }
            }
        }
        dirs.sort_unstable();

        for (i, &d) in dirs.iter().enumerate() {
            if let Some((count, index)) = p.shard {
                if i % count != index {
                    continue;
                }
            }
            let root = Seg::new((0, 0), d, p.r).expect("directions are primitive");
            let mut node = Node {
                segs: vec![root],
                bbox: (
                    (0.min(step * d.0), 0.min(step * d.1)),
                    (0.max(step * d.0), 0.max(step * d.1)),
                ),
                pools: (0..p.max_lines + 1).map(|_| Vec::new()).collect(),
                enc_id: Vec::new(),
                enc_img: Vec::new(),
            };
            let candidates = self.root_candidates(&node, &dirs, window);
            if !self.dfs(&mut node, &candidates, window) {
                return false;
            }
        }
        true
    }

    /// Segments greater than the root that share a point with it and
    /// keep the bounding box inside the window.
    fn root_candidates(&self, node: &Node, dirs: &[Point], window: i64) -> Vec<Cand> {
        let root = node.segs[0];
        let mut out = BTreeSet::new();
        for p in root.points() {
            for &d in dirs {
                for k in 0..self.params.r as i64 {
                    let base = (p.0 - k * d.0, p.1 - k * d.1);
                    let seg = Seg::new(base, d, self.params.r).unwrap();
                    if seg > root
                        && seg.line_key() != root.line_key()
                        && fits(node.bbox, &seg, window)
                    {
                        out.insert(seg);
                    }
                }
            }
        }
        out.into_iter()
            .map(|seg| Cand {
                key: seg.line_key(),
                seg,
            })
            .collect()
    }

    /// Visits the current system, then extends it with each candidate in
    /// order, narrowing the candidate list cumulatively. Returns false
    /// when the budget ran out.
    fn dfs(&mut self, node: &mut Node, candidates: &[Cand], window: i64) -> bool {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return false;
            }
        }
        self.emit(node);
        let depth = node.segs.len();
        if depth >= self.params.max_lines {
            return true;
        }
        for (i, c) in candidates.iter().enumerate() {
            let saved_bbox = node.bbox;
            node.segs.push(c.seg);
            node.bbox = grow(node.bbox, &c.seg);
            let mut narrowed = std::mem::take(&mut node.pools[depth]);
            narrowed.clear();
            narrowed.extend(candidates[i + 1..].iter().filter(|t| {
                t.key != c.key && meets(&t.seg, &c.seg) && fits(node.bbox, &t.seg, window)
            }));
            let ok = self.dfs(node, &narrowed, window);
            node.pools[depth] = narrowed;
            node.segs.pop();
            node.bbox = saved_bbox;
            if !ok {
                return false;
            }
        }
        true
    }

    /// Emits the current system when it is the canonical representative
    /// of its class: no dihedral image of it has a lexicographically
    /// smaller bounding-box-normalized encoding.
    fn emit(&mut self, node: &mut Node) {
        let (min, max) = node.bbox;
        node.enc_id.clear();
        for s in &node.segs {
            node.enc_id
                .push((s.dir.0, s.dir.1, s.base.0 - min.0, s.base.1 - min.1));
        }
        node.enc_id.sort_unstable();
        for g in 1..8 {
            let cmin = dihedral(min, g);
            let cmax = dihedral(max, g);
            let imin = (cmin.0.min(cmax.0), cmin.1.min(cmax.1));
            node.enc_img.clear();
            for s in &node.segs {
                let mut dir = dihedral(s.dir, g);
                let mut base = dihedral(s.base, g);
                if dir.0 < 0 || (dir.0 == 0 && dir.1 < 0) {
                    let k = (s.len - 1) as i64;
                    base = (base.0 + k * dir.0, base.1 + k * dir.1);
                    dir = (-dir.0, -dir.1);
                }
                node.enc_img
                    .push((dir.0, dir.1, base.0 - imin.0, base.1 - imin.1));
            }
            node.enc_img.sort_unstable();
            if node.enc_img < node.enc_id {
                return;
            }
        }
        let ss = SegmentSystem {
            r: self.params.r,
            segs: node
                .enc_id
                .iter()
                .map(|&(dx, dy, bx, by)| Seg {
                    base: (bx, by),
                    dir: (dx, dy),
                    len: self.params.r,
                })
                .collect(),
        };
        if self.params.require_triangle && ss.contains_triangle().is_none() {
            return;
        }
        (self.visit)(&ss);
    }
}

fn grow(bbox: (Point, Point), seg: &Seg) -> (Point, Point) {
    let a = seg.base;
    let k = (seg.len - 1) as i64;
    let b = (a.0 + k * seg.dir.0, a.1 + k * seg.dir.1);
    (
        (bbox.0 .0.min(a.0).min(b.0), bbox.0 .1.min(a.1).min(b.1)),
        (bbox.1 .0.max(a.0).max(b.0), bbox.1 .1.max(a.1).max(b.1)),
    )
}

fn fits(bbox: (Point, Point), seg: &Seg, window: i64) -> bool {
    let g = grow(bbox, seg);
    g.1 .0 - g.0 .0 <= window && g.1 .1 - g.0 .1 <= window
}

// ---------------------------------------------------------------------
// Conjectured transversal bound
// ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjectureVerdict {
    /// τ ≤ ⌈r/2⌉ verified exactly.
    Holds { tau: usize, bound: usize },
    /// τ > ⌈r/2⌉: a counterexample, with the exact value.
    Violated { tau: usize, bound: usize },
    /// Solver budget ran out before τ was pinned down on the deciding
    /// side of the bound.
    Inconclusive {
        lower: usize,
        upper: usize,
        bound: usize,
    },
    /// Hypotheses not met (needs intersecting and r ≥ 5).
    NotApplicable { reason: String },
}

/// Tests τ ≤ ⌈r/2⌉ on an intersecting segment system with r ≥ 5.
pub fn conjecture_check(ss: &SegmentSystem, budget: u64) -> ConjectureVerdict {
    if ss.r() < 5 {
        return ConjectureVerdict::NotApplicable {
            reason: format!("needs r >= 5, got r = {}", ss.r()),
        };
    }
    if !ss.is_intersecting() {
        return ConjectureVerdict::NotApplicable {
            reason: "system is not intersecting".into(),
        };
    }
    let bound = ss.r().div_ceil(2);
    match transversal_number(&ss.to_linear_system(), budget) {
        SolveResult::Exact { value, .. } => {
            if value <= bound {
                ConjectureVerdict::Holds { tau: value, bound }
            } else {
                ConjectureVerdict::Violated { tau: value, bound }
            }
        }
        SolveResult::Interval { lower, upper, .. } => {
            if upper <= bound {
                ConjectureVerdict::Holds { tau: upper, bound }
            } else if lower > bound {
                ConjectureVerdict::Violated { tau: lower, bound }
            } else {
                ConjectureVerdict::Inconclusive {
                    lower,
                    upper,
                    bound,
                }
            }
        }
    }
}
