//! SVG rendering of segment systems.
//!
//! The drawing uses a fixed scale of 40 user units per lattice step
//! with a 20-unit margin on every side. The lattice y-axis points up,
//! SVG's y-axis points down, so y is flipped in the transform. Segments
//! are drawn as strokes and system points as radius-4 disks; a set of
//! points to highlight (typically a transversal witness) can be drawn
//! on top in a contrasting color.

use crate::segment::{Point, Seg, SegmentSystem};

const SCALE: i64 = 40;
const MARGIN: i64 = 20;
const POINT_RADIUS: i64 = 4;

/// Renders a complete standalone SVG 1.1 document.
///
/// Output is deterministic: segments are drawn in direction-then-base
/// order and points in coordinate order.
pub fn render_segments(ss: &SegmentSystem, highlight: &[Point]) -> String {
    let (min, max) = ss.bbox();
    let width = (max.0 - min.0) * SCALE + 2 * MARGIN;
    let height = (max.1 - min.1) * SCALE + 2 * MARGIN;
    let place = |p: Point| -> (i64, i64) {
        ((p.0 - min.0) * SCALE + MARGIN, (max.1 - p.1) * SCALE + MARGIN)
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(&format!(
        "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
    ));

    let mut segs: Vec<&Seg> = ss.segments().iter().collect();
    segs.sort();
    for seg in segs {
        let (x1, y1) = place(seg.base());
        let end = seg.points().last().copied().expect("segments are non-empty");
        let (x2, y2) = place(end);
        out.push_str(&format!(
            "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" \
             stroke=\"#30363d\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n"
        ));
    }

    for p in ss.points() {
        let (cx, cy) = place(p);
        let (fill, class) = if highlight.contains(&p) {
            ("#d62728", " class=\"transversal\"")
        } else {
            ("#1f6feb", "")
        };
        out.push_str(&format!(
            "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{POINT_RADIUS}\" fill=\"{fill}\"{class}/>\n"
        ));
    }

    out.push_str("</svg>\n");
    out
}
