//! Shared helpers for the integration suites: independent brute-force
//! oracles and seeded random instance generators.
//!
//! The oracles deliberately avoid the library's branch-and-bound
//! machinery — they enumerate subsets directly over bitmasks so that
//! agreement between the two is meaningful evidence.

use std::collections::BTreeSet;

use linsys::graph::Graph;
use linsys::incidence::LinearSystem;

use rand::seq::SliceRandom;
use rand::Rng;

/// Minimum number of points meeting every line, by exhaustive subset
/// enumeration. Supports up to 24 points.
pub fn oracle_tau(ls: &LinearSystem) -> usize {
    let points: Vec<&String> = ls.points().iter().collect();
    let n = points.len();
    assert!(n <= 24, "oracle is exponential in the point count");
    let index = |p: &String| points.binary_search(&p).unwrap();
    let line_masks: Vec<u32> = ls
        .lines()
        .iter()
        .map(|line| line.iter().fold(0u32, |m, p| m | 1 << index(p)))
        .collect();
    if line_masks.is_empty() {
        return 0;
    }
    let mut best = u32::MAX;
    for subset in 0u32..1 << n {
        if subset.count_ones() >= best {
            continue;
        }
        if line_masks.iter().all(|&l| l & subset != 0) {
            best = subset.count_ones();
        }
    }
    best as usize
}

/// Largest subfamily of lines covering every point at most twice, by
/// exhaustive subfamily enumeration. Supports up to 24 lines.
pub fn oracle_nu2(ls: &LinearSystem) -> usize {
    let points: Vec<&String> = ls.points().iter().collect();
    let index = |p: &String| points.binary_search(&p).unwrap();
    let m = ls.line_count();
    assert!(m <= 24, "oracle is exponential in the line count");
    let line_masks: Vec<u32> = ls
        .lines()
        .iter()
        .map(|line| line.iter().fold(0u32, |acc, p| acc | 1 << index(p)))
        .collect();
    let mut best = 0;
    for subset in 0u32..1 << m {
        if subset.count_ones() <= best {
            continue;
        }
        // Saturating per-point counters over the subfamily: a point
        // hits `over` once a third line covers it.
        let (mut once, mut twice, mut over) = (0u32, 0u32, 0u32);
        for i in 0..m {
            if subset & (1 << i) != 0 {
                let l = line_masks[i];
                over |= twice & l;
                twice |= once & l;
                once |= l;
            }
        }
        if over == 0 {
            best = subset.count_ones();
        }
    }
    best as usize
}

/// Random valid linear system: random small lines over at most
/// `max_points` points, rejecting any line that would share two points
/// with (or duplicate) an accepted one.
pub fn random_valid_system(
    rng: &mut impl Rng,
    max_points: usize,
    max_lines: usize,
) -> LinearSystem {
    let n = rng.gen_range(4..=max_points);
    let target = rng.gen_range(1..=max_lines);
    let mut accepted: Vec<BTreeSet<usize>> = Vec::new();
    let mut attempts = 0;
    while accepted.len() < target && attempts < 300 {
        attempts += 1;
        let size = rng.gen_range(2..=5.min(n));
        let mut pool: Vec<usize> = (0..n).collect();
        pool.shuffle(rng);
        let candidate: BTreeSet<usize> = pool.into_iter().take(size).collect();
        let ok = accepted.iter().all(|line| {
            line != &candidate && line.intersection(&candidate).count() <= 1
        });
        if ok {
            accepted.push(candidate);
        }
    }
    let ls = LinearSystem::from_lines(
        accepted
            .iter()
            .map(|line| line.iter().map(|i| format!("p{i}")).collect::<Vec<_>>()),
    );
    assert!(ls.validate().is_ok());
    ls
}

/// Random planar graph: a stacked triangulation (each new vertex is
/// placed inside a random triangular face and joined to its corners),
/// followed by random edge deletions. Subgraphs of planar graphs stay
/// planar.
pub fn random_planar_graph(rng: &mut impl Rng, max_extra: usize) -> Graph {
    let extra = rng.gen_range(0..=max_extra);
    let n = 3 + extra;
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (1, 2)];
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    for v in 3..n {
        // The chosen face stops being a face once v sits inside it, so
        // it is replaced rather than kept: stacking into a stale face
        // twice would build a K3,3.
        let slot = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[slot];
        edges.push((a, v));
        edges.push((b, v));
        edges.push((c, v));
        faces[slot] = [a, b, v];
        faces.push([a, c, v]);
        faces.push([b, c, v]);
    }
    let kept: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|_| rng.gen_range(0..4) > 0)
        .collect();
    Graph::from_edges(n, &kept)
}
