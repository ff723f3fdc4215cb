//! SVG drawings of meandering diagrams, smooth drawings of intervals and
//! blossoming trees.
//!
//! Axis points sit [`SPACING`] units apart. Every arc is a semicircle: blue
//! above the axis, red below.

use std::fmt::Write as _;

use crate::blossoming::{delta, BlossomingTree};
use crate::error::Result;
use crate::intervals::TamariInterval;
use crate::meandering::MeanderingDiagram;

pub const SPACING: i64 = 40;
pub const MARGIN: i64 = 20;
pub const BLUE: &str = "#1f5fbf";
pub const RED: &str = "#c62828";
const BUD_LENGTH: i64 = 14;

/// A finished SVG document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure {
    pub svg: String,
    pub width: i64,
    pub height: i64,
}

/// A semicircle between two axis abscissae, above or below the axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub x1: i64,
    pub x2: i64,
    pub upper: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Marker {
    Black,
    White,
}

struct Canvas {
    width: i64,
    height: i64,
    axis: i64,
    arcs: Vec<Arc>,
    points: Vec<(i64, Marker)>,
    buds: Vec<(i64, i64)>,
}

impl Canvas {
    /// Room for `half_units` half-spacings along the axis.
    fn new(half_units: usize) -> Self {
        let span = SPACING * half_units as i64 / 2;
        Canvas {
            width: span + 2 * MARGIN,
            height: span + 2 * MARGIN,
            axis: MARGIN + span / 2,
            arcs: Vec::new(),
            points: Vec::new(),
            buds: Vec::new(),
        }
    }

    /// Abscissa of axis position `half / 2`.
    fn x(half: usize) -> i64 {
        MARGIN + SPACING * half as i64 / 2
    }

    fn arc(&mut self, a: usize, b: usize, upper: bool) {
        let (x1, x2) = (Self::x(a.min(b)), Self::x(a.max(b)));
        self.arcs.push(Arc { x1, x2, upper });
    }

    fn finish(self) -> Figure {
        let mut s = String::new();
        let (w, h, y) = (self.width, self.height, self.axis);
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        )
        .unwrap();
        writeln!(
            s,
            r#"<defs><marker id="bud" viewBox="0 0 6 6" refX="5" refY="3" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L6,3 L0,6 z"/></marker></defs>"#
        )
        .unwrap();
        writeln!(s, r##"<line class="axis" x1="0" y1="{y}" x2="{w}" y2="{y}" stroke="#bbbbbb"/>"##).unwrap();
        for a in &self.arcs {
            let r = (a.x2 - a.x1) / 2;
            let (color, sweep) = if a.upper { (BLUE, 1) } else { (RED, 0) };
            writeln!(
                s,
                r#"<path class="arc" d="M {} {y} A {r} {r} 0 0 {sweep} {} {y}" fill="none" stroke="{color}" stroke-width="2"/>"#,
                a.x1, a.x2
            )
            .unwrap();
        }
        for &(x, dir) in &self.buds {
            writeln!(
                s,
                r#"<line class="bud" x1="{x}" y1="{y}" x2="{}" y2="{y}" stroke="black" marker-end="url(#bud)"/>"#,
                x + dir * BUD_LENGTH
            )
            .unwrap();
        }
        for &(x, m) in &self.points {
            let fill = if m == Marker::Black { "black" } else { "white" };
            writeln!(s, r#"<circle cx="{x}" cy="{y}" r="4" fill="{fill}" stroke="black"/>"#).unwrap();
        }
        s.push_str("</svg>\n");
        Figure {
            svg: s,
            width: w,
            height: h,
        }
    }
}

fn meandering_canvas(m: &MeanderingDiagram) -> Canvas {
    let n = m.size();
    let mut c = Canvas::new(2 * n);
    for k in 0..=n {
        c.points.push((Canvas::x(2 * k), Marker::Black));
    }
    for t in 1..=n {
        c.points.push((Canvas::x(2 * t - 1), Marker::White));
        c.arc(2 * m.up()[t - 1], 2 * t - 1, true);
        c.arc(2 * t - 1, 2 * m.lo()[t - 1], false);
    }
    c
}

/// Black points at `0..=n`, white points at `t - 1/2`, blue arcs from
/// `up[t]` and red arcs to `lo[t]`.
pub fn render_meandering(m: &MeanderingDiagram) -> Figure {
    meandering_canvas(m).finish()
}

/// Smooth drawings on the leaves `0..=n`: the upper tree above the axis, the
/// lower tree below.
pub fn render_smooth(i: &TamariInterval) -> Figure {
    let n = i.size();
    let mut c = Canvas::new(n);
    for k in 0..=n {
        c.points.push((Canvas::x(k), Marker::Black));
    }
    for (a, b) in i.upper().smooth_arcs() {
        c.arc(a, b, true);
    }
    for (a, b) in i.lower().smooth_arcs() {
        c.arc(a, b, false);
    }
    c.finish()
}

/// The tree in the layout of its meandering diagram, with its two buds
/// drawn as arrows along the axis, one on each side of the node.
pub fn render_blossoming(b: &BlossomingTree) -> Result<Figure> {
    let mut c = meandering_canvas(&delta(b)?);
    for k in 0..b.node_count() {
        let x = Canvas::x(2 * k);
        c.buds.push((x, 1));
        c.buds.push((x, -1));
    }
    Ok(c.finish())
}

/// Arcs read back from the path elements of an emitted document.
pub fn emitted_arcs(svg: &str) -> Vec<Arc> {
    svg.lines()
        .filter(|l| l.contains(r#"class="arc""#))
        .filter_map(|l| {
            let d = l.split(r#"d=""#).nth(1)?.split('"').next()?;
            let f: Vec<&str> = d.split_whitespace().collect();
            // M x1 y A r r 0 0 sweep x2 y
            Some(Arc {
                x1: f.get(1)?.parse().ok()?,
                x2: f.get(9)?.parse().ok()?,
                upper: *f.get(8)? == "1",
            })
        })
        .collect()
}

/// Whether two semicircles meet away from their endpoints, computed from
/// their circles.
pub fn arcs_cross(a: &Arc, b: &Arc) -> bool {
    if a.upper != b.upper {
        return false;
    }
    let (c1, r1) = ((a.x1 + a.x2) as f64 / 2.0, (a.x2 - a.x1) as f64 / 2.0);
    let (c2, r2) = ((b.x1 + b.x2) as f64 / 2.0, (b.x2 - b.x1) as f64 / 2.0);
    if (c1 - c2).abs() < 1e-9 {
        return (r1 - r2).abs() < 1e-9;
    }
    let x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2.0 * (c2 - c1));
    let h2 = r1 * r1 - (x - c1) * (x - c1);
    h2 > 1e-6
}

/// No two arcs cross.
pub fn arcs_disjoint(arcs: &[Arc]) -> bool {
    arcs.iter()
        .enumerate()
        .all(|(k, a)| arcs[k + 1..].iter().all(|b| !arcs_cross(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blossoming::interval_to_blossoming;
    use crate::intervals::enumerate_intervals;
    use crate::meandering::phi_interval;

    #[test]
    fn size_one_has_two_arcs() {
        let m = MeanderingDiagram::new(vec![0], vec![1]).unwrap();
        let f = render_meandering(&m);
        assert_eq!(f.svg.matches(r#"class="arc""#).count(), 2);
        assert_eq!(emitted_arcs(&f.svg).len(), 2);
        assert!(f.svg.starts_with("<svg") && f.svg.ends_with("</svg>\n"));
    }

    #[test]
    fn crossing_geometry() {
        let a = Arc { x1: 0, x2: 40, upper: true };
        let b = Arc { x1: 20, x2: 60, upper: true };
        let nested = Arc { x1: 0, x2: 20, upper: true };
        let below = Arc { x1: 20, x2: 60, upper: false };
        assert!(arcs_cross(&a, &b));
        assert!(!arcs_cross(&a, &nested));
        assert!(!arcs_cross(&a, &below));
        assert!(!arcs_cross(&a, &Arc { x1: 40, x2: 80, upper: true }));
    }

    #[test]
    fn emitted_arcs_never_cross() {
        for n in 1..=5 {
            for i in enumerate_intervals(n).unwrap() {
                let m = render_meandering(&phi_interval(&i));
                let arcs = emitted_arcs(&m.svg);
                assert_eq!(arcs.len(), 2 * n);
                assert!(arcs_disjoint(&arcs), "{i}");
                assert!(arcs_disjoint(&emitted_arcs(&render_smooth(&i).svg)), "{i}");
                let b = render_blossoming(&interval_to_blossoming(&i)).unwrap();
                assert_eq!(b.svg.matches(r#"class="bud""#).count(), 2 * (n + 1));
                assert!(arcs_disjoint(&emitted_arcs(&b.svg)));
            }
        }
    }

    #[test]
    fn output_is_deterministic() {
        for i in enumerate_intervals(3).unwrap() {
            assert_eq!(render_smooth(&i), render_smooth(&i.clone()));
        }
    }
}
