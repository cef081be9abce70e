//! Point/line incidence graphs and the girth-based planar edge bound.
//!
//! The incidence graph (Levi graph) of a linear system has one vertex
//! per point, one per line, and an edge for each incidence. Its
//! planarity is exactly Zykov planarity of the set system (Walsh's
//! equivalence) and nothing more: it neither implies nor is implied by
//! the existence of a straight-segment drawing. The six lines through
//! four generic points witness the gap — that system is drawable with
//! segments, yet its incidence graph (the Heawood graph minus a vertex)
//! has 18 edges on 13 vertices with girth 6, over the planar limit of
//! 16.5. Reports therefore state planarity facts only and draw no
//! drawability conclusions.

use num_rational::Rational64;
use thiserror::Error;

use crate::graph::Graph;
use crate::incidence::LinearSystem;
use crate::planarity::{is_planar, validate_certificate, Certificate};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("edge bound needs girth >= 3 and at least 3 vertices, got girth {girth} on {vertices} vertices")]
    EdgeBound { vertices: usize, girth: usize },
    #[error("line-count bound needs a 2-packing number of at least 3, got {nu2}")]
    LineCount { nu2: usize },
}

#[derive(Debug, Clone)]
pub struct LeviReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// None for forests (no cycle at all).
    pub girth: Option<usize>,
    /// Planarity of the incidence graph, i.e. Zykov planarity of the
    /// system.
    pub planar: bool,
    pub certificate: Certificate,
    /// True when the edge count already exceeds the girth-based planar
    /// bound; implies `!planar`.
    pub exceeds_edge_bound: bool,
}

/// Builds the incidence graph: point vertices labeled `p:<token>` in
/// sorted order, then line vertices `l:<index>` in input order.
pub fn levi_graph(ls: &LinearSystem) -> Graph {
    let points: Vec<&String> = ls.points().iter().collect();
    let point_index: std::collections::BTreeMap<&String, usize> = points
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let mut labels: Vec<String> = points.iter().map(|p| format!("p:{p}")).collect();
    labels.extend((0..ls.lines().len()).map(|i| format!("l:{i}")));
    let mut g = Graph::new(labels);
    for (li, line) in ls.lines().iter().enumerate() {
        for p in line {
            g.add_edge(point_index[p], points.len() + li);
        }
    }
    g
}

/// Maximum edge count of a planar simple graph on `v` vertices with
/// girth at least `girth`: girth·(v − 2)/(girth − 2), exactly.
pub fn planar_edge_bound(v: usize, girth: usize) -> Result<Rational64, DomainError> {
    if girth < 3 || v < 3 {
        return Err(DomainError::EdgeBound { vertices: v, girth });
    }
    let (v, k) = (v as i64, girth as i64);
    Ok(Rational64::new(k * (v - 2), k - 2))
}

/// The two line-count bounds for intersecting ν₂-uniform straight-line
/// systems: the sharp rational 3(ν₂² − ν₂ − 1)/(2ν₂ − 3) and the relaxed
/// (3ν₂ + 1)/2.
///
/// For ν₂ ≥ 4 the sharp value slightly exceeds the relaxed one (e.g.
/// 33/5 > 13/2 at ν₂ = 4), so the chain between them only holds after
/// flooring; since line counts are integers the floors are what matter,
/// and ⌊exact⌋ ≤ ⌊relaxed⌋ always holds.
pub fn max_lines_bound(nu2: usize) -> Result<(Rational64, Rational64), DomainError> {
    if nu2 < 3 {
        return Err(DomainError::LineCount { nu2 });
    }
    let n = nu2 as i64;
    let exact = Rational64::new(3 * (n * n - n - 1), 2 * n - 3);
    let relaxed = Rational64::new(3 * n + 1, 2);
    debug_assert!(exact.floor() <= relaxed.floor());
    Ok((exact, relaxed))
}

/// Full planarity report for the incidence graph of a linear system.
pub fn levi_planarity_of(ls: &LinearSystem) -> LeviReport {
    let g = levi_graph(ls);
    let girth = g.girth();
    let (planar, certificate) = is_planar(&g);
    debug_assert!(validate_certificate(&g, &certificate));
    let exceeds_edge_bound = match girth {
        Some(k) if g.vertex_count() >= 3 => {
            let bound = planar_edge_bound(g.vertex_count(), k)
                .expect("cycle girth is at least 3");
            Rational64::from_integer(g.edge_count() as i64) > bound
        }
        _ => false,
    };
    assert!(
        !exceeds_edge_bound || !planar,
        "edge-bound pre-filter must agree with the planarity verdict"
    );
    LeviReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        girth,
        planar,
        certificate,
        exceeds_edge_bound,
    }
}
