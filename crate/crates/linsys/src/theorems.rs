//! Structured bound checks on linear and segment systems.
//!
//! Each check verifies one stated relationship between the transversal
//! number τ, the 2-packing number ν₂, the maximum point degree Δ, the
//! uniformity r, and the line count. A check first decides whether its
//! hypotheses hold on the given instance (`applicable`), then verifies
//! the conclusion exactly (`holds`). All bound arithmetic is integer;
//! solver budgets degrade `holds` to `None` only when the certified
//! interval fails to decide the comparison.
//!
//! Several statements are checked under hypotheses slightly stronger
//! than their usual form; each such gate carries a note in the record
//! explaining the counterexample that forces it.
//!
//! Statements about straight-line-realizable systems run as hard checks
//! only on instances built from actual lattice segments. A planar
//! incidence graph is treated as weak advisory evidence: planarity is
//! neither necessary nor sufficient for realizability (the incidence
//! graph of a realizable six-line configuration can exceed the planar
//! edge bound), so advisory outcomes never fail a report.

use crate::incidence::LinearSystem;
use crate::segment::SegmentSystem;
use crate::solvers::{transversal_number, two_packing_number, SolveResult};

/// How much realizability evidence accompanies an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Evidence {
    /// Nothing known; straight-line checks are skipped.
    Unknown,
    /// The incidence graph is planar. Heuristic signal only.
    LeviPlanar,
    /// Built from an explicit lattice-segment realization.
    Realized,
}

/// Whether a failed check marks the report as violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enforcement {
    Hard,
    Advisory,
}

/// Outcome of one check on one instance.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    /// Stable identifier, also used by the CLI check selector.
    pub id: &'static str,
    pub enforcement: Enforcement,
    /// Hypotheses met on this instance.
    pub applicable: bool,
    /// Conclusion verified / refuted; `None` when not applicable, when
    /// the record is an informational note, or when the solver interval
    /// left the comparison undecided.
    pub holds: Option<bool>,
    /// Computed quantities in fixed order, for rendering.
    pub details: Vec<(&'static str, String)>,
    /// Counterexample or witness description when `holds` is decided.
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

impl CheckRecord {
    fn new(id: &'static str, enforcement: Enforcement) -> Self {
        CheckRecord {
            id,
            enforcement,
            applicable: false,
            holds: None,
            details: Vec::new(),
            witness: None,
            notes: Vec::new(),
        }
    }

    /// An applicable hard check whose conclusion failed.
    pub fn is_violation(&self) -> bool {
        self.enforcement == Enforcement::Hard && self.applicable && self.holds == Some(false)
    }

    /// A hard check whose hypotheses held but whose conclusion the
    /// solver budget left undecided. Informational notes are advisory
    /// and never count here.
    pub fn is_inconclusive(&self) -> bool {
        self.enforcement == Enforcement::Hard && self.applicable && self.holds.is_none()
    }
}

/// All checks run against one instance.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub checks: Vec<CheckRecord>,
}

impl TheoremReport {
    pub fn has_violation(&self) -> bool {
        self.checks.iter().any(CheckRecord::is_violation)
    }

    pub fn violations(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.is_violation())
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Exact or interval knowledge of one invariant.
#[derive(Debug, Clone, Copy)]
struct Bounds {
    lo: usize,
    hi: usize,
}

impl Bounds {
    fn exact(&self) -> Option<usize> {
        (self.lo == self.hi).then_some(self.lo)
    }

    /// Three-valued comparison: is the invariant ≤ `bound`?
    fn at_most(&self, bound: usize) -> Option<bool> {
        if self.hi <= bound {
            Some(true)
        } else if self.lo > bound {
            Some(false)
        } else {
            None
        }
    }

    fn at_least(&self, bound: usize) -> Option<bool> {
        if self.lo >= bound {
            Some(true)
        } else if self.hi < bound {
            Some(false)
        } else {
            None
        }
    }

    fn equals(&self, value: usize) -> Option<bool> {
        if self.lo == value && self.hi == value {
            Some(true)
        } else if self.lo > value || self.hi < value {
            Some(false)
        } else {
            None
        }
    }

    fn render(&self) -> String {
        match self.exact() {
            Some(v) => v.to_string(),
            None => format!("[{}, {}]", self.lo, self.hi),
        }
    }
}

fn bounds_of<W>(result: &SolveResult<W>) -> Bounds {
    match result {
        SolveResult::Exact { value, .. } => Bounds {
            lo: *value,
            hi: *value,
        },
        SolveResult::Interval { lower, upper, .. } => Bounds {
            lo: *lower,
            hi: *upper,
        },
    }
}

/// Invariants shared by every check on one instance.
#[derive(Debug, Clone)]
pub struct Quantities {
    tau: Bounds,
    nu2: Bounds,
    max_degree: usize,
    uniformity: Option<usize>,
    intersecting: bool,
    line_count: usize,
    tau_overridden: bool,
}

impl Quantities {
    pub fn compute(ls: &LinearSystem, budget: u64) -> Quantities {
        Quantities {
            tau: bounds_of(&transversal_number(ls, budget)),
            nu2: bounds_of(&two_packing_number(ls, budget)),
            max_degree: ls.max_degree(),
            uniformity: ls.uniformity(),
            intersecting: ls.is_intersecting(),
            line_count: ls.line_count(),
            tau_overridden: false,
        }
    }

    /// Replaces τ with a forced value. Exists so the report pipeline's
    /// violation path can be exercised end to end; every record carries
    /// a note when this is in effect.
    pub fn override_tau(&mut self, tau: usize) {
        self.tau = Bounds { lo: tau, hi: tau };
        self.tau_overridden = true;
    }

    pub fn tau_exact(&self) -> Option<usize> {
        self.tau.exact()
    }

    pub fn nu2_exact(&self) -> Option<usize> {
        self.nu2.exact()
    }
}

fn push_common(rec: &mut CheckRecord, q: &Quantities) {
    if q.tau_overridden {
        rec.notes
            .push("tau was overridden by the caller; values are not solver output".into());
    }
}

/// Finishes a record whose conclusion is a three-valued result.
fn conclude(rec: &mut CheckRecord, q: &Quantities, holds: Option<bool>, on_fail: &str) {
    rec.applicable = true;
    rec.holds = holds;
    match holds {
        Some(false) => rec.witness = Some(on_fail.to_string()),
        None => rec
            .notes
            .push("solver budget exhausted before the comparison was decided".into()),
        Some(true) => {}
    }
    push_common(rec, q);
}

/// ⌈ν₂/2⌉ ≤ τ ≤ ν₂(ν₂−1)/2 for systems with at least three lines.
pub fn check_sandwich(q: &Quantities) -> CheckRecord {
    let mut rec = CheckRecord::new("sandwich", Enforcement::Hard);
    rec.details = vec![
        ("tau", q.tau.render()),
        ("nu2", q.nu2.render()),
        ("lines", q.line_count.to_string()),
    ];
    if q.line_count < 3 {
        rec.notes.push(
            "needs at least three lines: a single line has tau = 1 > 0, and two disjoint \
             lines have tau = 2 > 1, against the upper bound"
                .into(),
        );
        return rec;
    }
    let (lower, upper) = match q.nu2.exact() {
        Some(n) => (n.div_ceil(2), n * (n - 1) / 2),
        None => {
            rec.applicable = true;
            rec.notes
                .push("solver budget exhausted before nu2 was exact".into());
            return rec;
        }
    };
    rec.details.push(("lower_bound", lower.to_string()));
    rec.details.push(("upper_bound", upper.to_string()));
    let holds = merge_and(q.tau.at_least(lower), q.tau.at_most(upper));
    conclude(
        &mut rec,
        q,
        holds,
        &format!(
            "tau = {} escapes [{}..{}] given nu2 = {}",
            q.tau.render(),
            lower,
            upper,
            q.nu2.render()
        ),
    );
    rec
}

/// Δ = 2 forces τ ≤ ν₂ − 1; intersecting on top forces τ = ⌈ν₂/2⌉.
pub fn check_max_degree_two(q: &Quantities) -> CheckRecord {
    let mut rec = CheckRecord::new("max-degree-two", Enforcement::Hard);
    rec.details = vec![
        ("max_degree", q.max_degree.to_string()),
        ("tau", q.tau.render()),
        ("nu2", q.nu2.render()),
        ("intersecting", q.intersecting.to_string()),
    ];
    if q.max_degree != 2 {
        return rec;
    }
    let Some(nu2) = q.nu2.exact() else {
        rec.applicable = true;
        rec.notes
            .push("solver budget exhausted before nu2 was exact".into());
        return rec;
    };
    let mut holds = q.tau.at_most(nu2 - 1);
    if q.intersecting {
        holds = merge_and(holds, q.tau.equals(nu2.div_ceil(2)));
    }
    conclude(
        &mut rec,
        q,
        holds,
        &format!(
            "tau = {} with nu2 = {nu2} under max degree 2{}",
            q.tau.render(),
            if q.intersecting { " (intersecting)" } else { "" }
        ),
    );
    rec
}

/// |𝓛| = ν₂ exactly when no point lies on three lines.
pub fn check_packing_counts_lines(q: &Quantities) -> CheckRecord {
    let mut rec = CheckRecord::new("packing-counts-lines", Enforcement::Hard);
    rec.details = vec![
        ("lines", q.line_count.to_string()),
        ("nu2", q.nu2.render()),
        ("max_degree", q.max_degree.to_string()),
    ];
    let degree_side = q.max_degree <= 2;
    let count_side = q.nu2.equals(q.line_count);
    let holds = count_side.map(|c| c == degree_side);
    conclude(
        &mut rec,
        q,
        holds,
        &format!(
            "lines = {}, nu2 = {}, max degree = {} break the biconditional",
            q.line_count,
            q.nu2.render(),
            q.max_degree
        ),
    );
    rec
}

/// Gate shared by the straight-line statements: hard under a
/// realization, advisory under a planar incidence graph, skipped
/// otherwise.
fn straight_enforcement(evidence: Evidence) -> Option<Enforcement> {
    match evidence {
        Evidence::Realized => Some(Enforcement::Hard),
        Evidence::LeviPlanar => Some(Enforcement::Advisory),
        Evidence::Unknown => None,
    }
}

/// Straight-line systems with ν₂ ∈ {2,3,4} satisfy τ ≤ ν₂ − 1 —
/// checked for intersecting families with Δ ≥ 2.
pub fn check_small_packing(q: &Quantities, evidence: Evidence) -> CheckRecord {
    let mut rec = CheckRecord::new("small-packing", Enforcement::Hard);
    rec.details = vec![("tau", q.tau.render()), ("nu2", q.nu2.render())];
    let Some(enforcement) = straight_enforcement(evidence) else {
        rec.notes
            .push("no straight-line evidence; skipped".into());
        return rec;
    };
    rec.enforcement = enforcement;
    if enforcement == Enforcement::Advisory {
        rec.notes.push(
            "planar incidence graph is heuristic evidence only; outcome is advisory".into(),
        );
    }
    if !q.intersecting || q.max_degree < 2 {
        rec.notes.push(
            "restricted to intersecting families with a degree-2 point: two disjoint \
             crossing pairs are realizable with nu2 = 4 but tau = 4"
                .into(),
        );
        return rec;
    }
    let Some(nu2) = q.nu2.exact() else {
        rec.applicable = true;
        rec.notes
            .push("solver budget exhausted before nu2 was exact".into());
        return rec;
    };
    if !(2..=4).contains(&nu2) {
        return rec;
    }
    let holds = q.tau.at_most(nu2 - 1);
    conclude(
        &mut rec,
        q,
        holds,
        &format!("tau = {} > nu2 - 1 = {}", q.tau.render(), nu2 - 1),
    );
    rec
}

/// Intersecting r-uniform straight-line systems with r ≥ ν₂ and more
/// than ν₂ lines satisfy τ ≤ ν₂ − 1.
pub fn check_uniform_intersecting_tau(q: &Quantities, evidence: Evidence) -> CheckRecord {
    let mut rec = CheckRecord::new("uniform-intersecting-tau", Enforcement::Hard);
    rec.details = vec![
        ("r", render_uniformity(q)),
        ("tau", q.tau.render()),
        ("nu2", q.nu2.render()),
        ("lines", q.line_count.to_string()),
    ];
    let Some(enforcement) = straight_enforcement(evidence) else {
        rec.notes
            .push("no straight-line evidence; skipped".into());
        return rec;
    };
    rec.enforcement = enforcement;
    let (Some(r), Some(nu2)) = (q.uniformity, q.nu2.exact()) else {
        if q.uniformity.is_some() {
            rec.applicable = true;
            rec.notes
                .push("solver budget exhausted before nu2 was exact".into());
        }
        return rec;
    };
    if !q.intersecting || r < nu2 || q.line_count <= nu2 {
        if q.intersecting && r >= nu2 {
            rec.notes.push(
                "restricted to families with more than nu2 lines: a lone line has \
                 tau = 1 > nu2 - 1 = 0"
                    .into(),
            );
        }
        return rec;
    }
    let holds = q.tau.at_most(nu2 - 1);
    conclude(
        &mut rec,
        q,
        holds,
        &format!("tau = {} > nu2 - 1 = {}", q.tau.render(), nu2 - 1),
    );
    rec
}

/// Intersecting ν₂-uniform straight-line systems with ν₂ ≥ 3 have at
/// most ⌊(3ν₂+1)/2⌋ lines.
pub fn check_packing_uniform_lines(q: &Quantities, evidence: Evidence) -> CheckRecord {
    let mut rec = CheckRecord::new("packing-uniform-lines", Enforcement::Hard);
    rec.details = vec![
        ("r", render_uniformity(q)),
        ("nu2", q.nu2.render()),
        ("lines", q.line_count.to_string()),
    ];
    let Some(enforcement) = straight_enforcement(evidence) else {
        rec.notes
            .push("no straight-line evidence; skipped".into());
        return rec;
    };
    rec.enforcement = enforcement;
    let Some((r, nu2)) = uniform_packing_gate(q, &mut rec) else {
        return rec;
    };
    let _ = r;
    let bound = (3 * nu2 + 1) / 2;
    rec.details.push(("line_bound", bound.to_string()));
    let holds = Some(q.line_count <= bound);
    conclude(
        &mut rec,
        q,
        holds,
        &format!("{} lines exceed the bound {}", q.line_count, bound),
    );
    rec
}

/// Intersecting ν₂-uniform straight-line systems with ν₂ ≥ 3 satisfy
/// τ ≤ ⌊2(ν₂+1)/3⌋.
pub fn check_packing_uniform_tau(q: &Quantities, evidence: Evidence) -> CheckRecord {
    let mut rec = CheckRecord::new("packing-uniform-tau", Enforcement::Hard);
    rec.details = vec![
        ("r", render_uniformity(q)),
        ("tau", q.tau.render()),
        ("nu2", q.nu2.render()),
    ];
    let Some(enforcement) = straight_enforcement(evidence) else {
        rec.notes
            .push("no straight-line evidence; skipped".into());
        return rec;
    };
    rec.enforcement = enforcement;
    let Some((_, nu2)) = uniform_packing_gate(q, &mut rec) else {
        return rec;
    };
    let bound = (2 * (nu2 + 1)) / 3;
    rec.details.push(("tau_bound", bound.to_string()));
    rec.notes.push(
        "the hypothesis \"r >= nu2\" alongside nu2-uniformity forces r = nu2; \
         checked at r = nu2"
            .into(),
    );
    let holds = q.tau.at_most(bound);
    conclude(
        &mut rec,
        q,
        holds,
        &format!("tau = {} > {}", q.tau.render(), bound),
    );
    rec
}

/// Under the ν₂-uniform intersecting hypotheses with more than ν₂
/// lines, a point of degree at least ⌊ν₂/2⌋ + 2 pins τ to ⌈ν₂/2⌉.
pub fn check_high_degree_tau(q: &Quantities, evidence: Evidence) -> CheckRecord {
    let mut rec = CheckRecord::new("high-degree-tau", Enforcement::Hard);
    rec.details = vec![
        ("r", render_uniformity(q)),
        ("tau", q.tau.render()),
        ("nu2", q.nu2.render()),
        ("max_degree", q.max_degree.to_string()),
        ("lines", q.line_count.to_string()),
    ];
    let Some(enforcement) = straight_enforcement(evidence) else {
        rec.notes
            .push("no straight-line evidence; skipped".into());
        return rec;
    };
    rec.enforcement = enforcement;
    let Some((_, nu2)) = uniform_packing_gate(q, &mut rec) else {
        return rec;
    };
    if q.line_count <= nu2 || q.max_degree < nu2 / 2 + 2 {
        return rec;
    }
    let target = nu2.div_ceil(2);
    rec.details.push(("tau_target", target.to_string()));
    let holds = q.tau.equals(target);
    conclude(
        &mut rec,
        q,
        holds,
        &format!("tau = {} instead of {}", q.tau.render(), target),
    );
    rec
}

/// Shared gate: intersecting, uniform with r = ν₂, and ν₂ ≥ 3.
fn uniform_packing_gate(q: &Quantities, rec: &mut CheckRecord) -> Option<(usize, usize)> {
    let Some(r) = q.uniformity else {
        return None;
    };
    let Some(nu2) = q.nu2.exact() else {
        if q.intersecting {
            rec.applicable = true;
            rec.notes
                .push("solver budget exhausted before nu2 was exact".into());
        }
        return None;
    };
    (q.intersecting && r == nu2 && nu2 >= 3).then_some((r, nu2))
}

/// Informational record for the possibility claim that an intersecting
/// r-uniform system with ν₂ ≥ 3 and r = ν₂ − 1 admits a segment
/// realization. A possibility is not checkable on one abstract
/// instance, so this never carries a verdict.
pub fn note_representability(q: &Quantities) -> CheckRecord {
    let mut rec = CheckRecord::new("representability-note", Enforcement::Advisory);
    rec.details = vec![("r", render_uniformity(q)), ("nu2", q.nu2.render())];
    let (Some(r), Some(nu2)) = (q.uniformity, q.nu2.exact()) else {
        return rec;
    };
    if q.intersecting && nu2 >= 3 && r + 1 == nu2 {
        rec.applicable = true;
        rec.notes.push(
            "the claim asserts a realization exists; existence is not decidable from the \
             abstract instance alone, so no verdict is recorded"
                .into(),
        );
    }
    rec
}

fn render_uniformity(q: &Quantities) -> String {
    match q.uniformity {
        Some(r) => r.to_string(),
        None => "non-uniform".into(),
    }
}

fn merge_and(a: Option<bool>, b: Option<bool>) -> Option<bool> {
    match (a, b) {
        (Some(false), _) | (_, Some(false)) => Some(false),
        (Some(true), Some(true)) => Some(true),
        _ => None,
    }
}

// ---------------------------------------------------------------------
// Segment-specific checks
// ---------------------------------------------------------------------

/// Intersecting r-segment systems with r ≥ 3 have a point of degree 1
/// and satisfy τ ≤ r − 1.
pub fn check_pendant_point(ss: &SegmentSystem, q: &Quantities) -> CheckRecord {
    let mut rec = CheckRecord::new("pendant-point", Enforcement::Hard);
    let r = ss.r();
    rec.details = vec![("r", r.to_string()), ("tau", q.tau.render())];
    if !q.intersecting || r < 3 {
        return rec;
    }
    let ls = ss.to_linear_system();
    let has_pendant = ls.degrees().values().any(|&d| d == 1);
    rec.details
        .push(("degree_one_point", has_pendant.to_string()));
    let holds = merge_and(Some(has_pendant), q.tau.at_most(r - 1));
    conclude(
        &mut rec,
        q,
        holds,
        &format!(
            "degree-1 point exists: {has_pendant}; tau = {} against bound {}",
            q.tau.render(),
            r - 1
        ),
    );
    rec
}

/// Intersecting r-segment systems with r ≥ 3 and ν₂ ≥ 3 satisfy
/// r ≥ ν₂.
pub fn check_length_bounds_packing(ss: &SegmentSystem, q: &Quantities) -> CheckRecord {
    let mut rec = CheckRecord::new("length-bounds-packing", Enforcement::Hard);
    rec.details = vec![("r", ss.r().to_string()), ("nu2", q.nu2.render())];
    if !q.intersecting {
        return rec;
    }
    if ss.r() < 3 {
        rec.notes.push(
            "restricted to r >= 3: the lattice triangle is an intersecting 2-segment \
             system with nu2 = 3 > 2"
                .into(),
        );
        return rec;
    }
    let Some(nu2) = q.nu2.exact() else {
        rec.applicable = true;
        rec.notes
            .push("solver budget exhausted before nu2 was exact".into());
        return rec;
    };
    if nu2 < 3 {
        return rec;
    }
    let holds = Some(ss.r() >= nu2);
    conclude(
        &mut rec,
        q,
        holds,
        &format!("r = {} < nu2 = {}", ss.r(), nu2),
    );
    rec
}

/// Segment counterpart of the line-count bound: intersecting with
/// r = ν₂ ≥ 3 gives |𝓛| ≤ ⌊(3ν₂+1)/2⌋.
pub fn check_segment_line_count(ss: &SegmentSystem, q: &Quantities) -> CheckRecord {
    let mut rec = CheckRecord::new("segment-line-count", Enforcement::Hard);
    rec.details = vec![
        ("r", ss.r().to_string()),
        ("nu2", q.nu2.render()),
        ("lines", q.line_count.to_string()),
    ];
    let Some(nu2) = segment_uniform_gate(ss, q, &mut rec) else {
        return rec;
    };
    let bound = (3 * nu2 + 1) / 2;
    rec.details.push(("line_bound", bound.to_string()));
    let holds = Some(q.line_count <= bound);
    conclude(
        &mut rec,
        q,
        holds,
        &format!("{} lines exceed the bound {}", q.line_count, bound),
    );
    rec
}

/// Segment counterpart of the τ bound: intersecting with r = ν₂ ≥ 3
/// gives τ ≤ ⌊2(ν₂+1)/3⌋.
pub fn check_segment_tau(ss: &SegmentSystem, q: &Quantities) -> CheckRecord {
    let mut rec = CheckRecord::new("segment-tau", Enforcement::Hard);
    rec.details = vec![
        ("r", ss.r().to_string()),
        ("tau", q.tau.render()),
        ("nu2", q.nu2.render()),
    ];
    let Some(nu2) = segment_uniform_gate(ss, q, &mut rec) else {
        return rec;
    };
    let bound = (2 * (nu2 + 1)) / 3;
    rec.details.push(("tau_bound", bound.to_string()));
    let holds = q.tau.at_most(bound);
    conclude(
        &mut rec,
        q,
        holds,
        &format!("tau = {} > {}", q.tau.render(), bound),
    );
    rec
}

fn segment_uniform_gate(
    ss: &SegmentSystem,
    q: &Quantities,
    rec: &mut CheckRecord,
) -> Option<usize> {
    if !q.intersecting {
        return None;
    }
    let Some(nu2) = q.nu2.exact() else {
        rec.applicable = true;
        rec.notes
            .push("solver budget exhausted before nu2 was exact".into());
        return None;
    };
    (ss.r() == nu2 && nu2 >= 3).then_some(nu2)
}

/// Conjectured: intersecting r-segment systems with r ≥ 5 satisfy
/// τ ≤ ⌈r/2⌉. A violation here is a counterexample to an open
/// conjecture and is the headline result of any run that finds one.
pub fn check_half_length_conjecture(ss: &SegmentSystem, q: &Quantities) -> CheckRecord {
    let mut rec = CheckRecord::new("half-length-conjecture", Enforcement::Hard);
    let r = ss.r();
    rec.details = vec![("r", r.to_string()), ("tau", q.tau.render())];
    rec.notes.push("conjectured bound, not a theorem".into());
    if !q.intersecting || r < 5 {
        return rec;
    }
    let bound = r.div_ceil(2);
    rec.details.push(("tau_bound", bound.to_string()));
    let holds = q.tau.at_most(bound);
    conclude(
        &mut rec,
        q,
        holds,
        &format!(
            "COUNTEREXAMPLE CANDIDATE: tau = {} > {} on {:?}",
            q.tau.render(),
            bound,
            ss.encoding()
        ),
    );
    rec
}

// ---------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------

/// Every abstract check against one linear system.
pub fn abstract_report(q: &Quantities, evidence: Evidence) -> TheoremReport {
    TheoremReport {
        checks: vec![
            check_sandwich(q),
            check_max_degree_two(q),
            check_packing_counts_lines(q),
            check_small_packing(q, evidence),
            check_uniform_intersecting_tau(q, evidence),
            check_packing_uniform_lines(q, evidence),
            check_packing_uniform_tau(q, evidence),
            check_high_degree_tau(q, evidence),
            note_representability(q),
        ],
    }
}

/// Abstract checks on the induced system plus all segment-specific
/// checks.
pub fn segment_report(ss: &SegmentSystem, q: &Quantities) -> TheoremReport {
    let mut report = abstract_report(q, Evidence::Realized);
    report.checks.push(check_pendant_point(ss, q));
    report.checks.push(check_length_bounds_packing(ss, q));
    report.checks.push(check_segment_line_count(ss, q));
    report.checks.push(check_segment_tau(ss, q));
    report.checks.push(check_half_length_conjecture(ss, q));
    report
}

/// Identifiers accepted by check selectors, in report order.
pub const CHECK_IDS: &[&str] = &[
    "sandwich",
    "max-degree-two",
    "packing-counts-lines",
    "small-packing",
    "uniform-intersecting-tau",
    "packing-uniform-lines",
    "packing-uniform-tau",
    "high-degree-tau",
    "representability-note",
    "pendant-point",
    "length-bounds-packing",
    "segment-line-count",
    "segment-tau",
    "half-length-conjecture",
];
