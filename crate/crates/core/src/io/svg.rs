//! SVG rendering of torus diagrams.
//!
//! The unit square is drawn with its sides identified implicitly: segments
//! that wrap are cut where they leave the square and continue from the
//! opposite side. Output depends only on the diagram, so identical diagrams
//! give identical bytes.

use std::fmt::Write as _;

use crate::diagram::{PointSign, TorusDiagram, UNIT};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 20.0;

/// Splits the unwrapped segment `a → b` where it crosses the grid lines
/// `x, y ∈ UNIT·ℤ`, returning the pieces translated into the unit square.
fn torus_pieces(a: (i64, i64), b: (i64, i64)) -> Vec<((f64, f64), (f64, f64))> {
    let (dx, dy) = ((b.0 - a.0) as f64, (b.1 - a.1) as f64);
    let mut cuts = vec![0.0, 1.0];
    for (lo, hi, start, delta) in [
        (a.0.min(b.0), a.0.max(b.0), a.0, dx),
        (a.1.min(b.1), a.1.max(b.1), a.1, dy),
    ] {
        let mut k = lo.div_euclid(UNIT) + 1;
        while k * UNIT < hi {
            if k * UNIT > lo {
                cuts.push((k * UNIT - start) as f64 / delta);
            }
            k += 1;
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let at = |t: f64| (a.0 as f64 + t * dx, a.1 as f64 + t * dy);
    cuts.windows(2)
        .map(|w| {
            let (s, e) = (at(w[0]), at(w[1]));
            let mid = ((s.0 + e.0) / 2.0, (s.1 + e.1) / 2.0);
            let u = UNIT as f64;
            let shift = ((mid.0 / u).floor() * u, (mid.1 / u).floor() * u);
            (
                (s.0 - shift.0, s.1 - shift.1),
                (e.0 - shift.0, e.1 - shift.1),
            )
        })
        .collect()
}

fn fx(x: f64) -> f64 {
    MARGIN + SIZE * x / UNIT as f64
}

fn fy(y: f64) -> f64 {
    MARGIN + SIZE * (1.0 - y / UNIT as f64)
}

pub fn export_svg(diag: &TorusDiagram) -> String {
    let full = SIZE + 2.0 * MARGIN;
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{full}" height="{full}" viewBox="0 0 {full} {full}">"#
    );
    let _ = writeln!(
        w,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}" fill="white" stroke="black" stroke-width="1"/>"#
    );
    for arc in diag.arcs() {
        let mut runs: Vec<Vec<(f64, f64)>> = Vec::new();
        for seg in arc.segments() {
            for (s, e) in torus_pieces(seg.a, seg.b) {
                match runs.last_mut() {
                    Some(run) if run.last() == Some(&s) => run.push(e),
                    _ => runs.push(vec![s, e]),
                }
            }
        }
        for run in runs {
            let pts: Vec<String> = run
                .iter()
                .map(|&(x, y)| format!("{:.3},{:.3}", fx(x), fy(y)))
                .collect();
            let _ = writeln!(
                w,
                r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="1"/>"#,
                pts.join(" "),
                arc.color.svg_name()
            );
        }
    }
    for (id, p) in diag.bridge_points().iter().enumerate() {
        let (x, y) = (fx(p.position.x as f64), fy(p.position.y as f64));
        let label = match p.sign {
            PointSign::Plus => "+",
            PointSign::Minus => "-",
        };
        let _ = writeln!(
            w,
            r#"<circle id="p{id}" cx="{x:.3}" cy="{y:.3}" r="2.5" fill="black"/>"#
        );
        let _ = writeln!(
            w,
            r#"<text x="{:.3}" y="{:.3}" font-size="9" font-family="monospace">{label}</text>"#,
            x + 3.0,
            y - 3.0
        );
    }
    let _ = writeln!(w, "</svg>");
    out
}
