//! Built-in reference instances used by tests, docs, and the bundled
//! example files.

use crate::incidence::LinearSystem;

/// The seven-point, seven-line Fano plane.
///
/// ```text
///         1
///        / \
///       6   5
///      / (7) \
///     2---4---3
/// ```
/// Lines: 123 has the standard labelling below; every pair of lines meets
/// in exactly one point and every point lies on three lines.
pub const FANO_LINES: [[&str; 3]; 7] = [
    ["1", "2", "3"],
    ["1", "4", "5"],
    ["1", "6", "7"],
    ["2", "4", "6"],
    ["2", "5", "7"],
    ["3", "4", "7"],
    ["3", "5", "6"],
];

pub fn fano() -> LinearSystem {
    LinearSystem::from_lines(FANO_LINES.iter().map(|l| l.to_vec()))
}

/// Fano plane with its last line removed (six 3-point lines, still
/// pairwise intersecting).
pub fn fano_minus_line() -> LinearSystem {
    LinearSystem::from_lines(FANO_LINES[..6].iter().map(|l| l.to_vec()))
}

/// Fano minus a line, with one fresh pendant point appended to each of
/// the six remaining lines: a 4-uniform intersecting system with 13
/// points whose low-degree core is `fano_minus_line`.
pub fn fano_minus_line_with_pendants() -> LinearSystem {
    let lines = FANO_LINES[..6].iter().enumerate().map(|(i, l)| {
        let mut line: Vec<String> = l.iter().map(|s| s.to_string()).collect();
        line.push(format!("q{i}"));
        line
    });
    LinearSystem::from_lines(lines)
}

/// `k` lines of size `r` through a single common point `c`.
pub fn pencil(k: usize, r: usize) -> LinearSystem {
    let lines = (0..k).map(|i| {
        let mut line = vec!["c".to_string()];
        line.extend((1..r).map(|j| format!("p{i}_{j}")));
        line
    });
    LinearSystem::from_lines(lines)
}

/// The cycle on `n` vertices as a 2-uniform system (edges as lines).
pub fn cycle(n: usize) -> LinearSystem {
    let lines = (0..n).map(|i| vec![format!("v{i}"), format!("v{}", (i + 1) % n)]);
    LinearSystem::from_lines(lines)
}

/// Three 2-point lines pairwise meeting in three distinct points.
pub fn triangle() -> LinearSystem {
    LinearSystem::from_lines(vec![
        vec!["a", "b"],
        vec!["b", "c"],
        vec!["a", "c"],
    ])
}
