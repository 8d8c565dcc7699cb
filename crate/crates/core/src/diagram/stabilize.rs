//! Mini-stabilization: trading an A crossing for a new bridge pair.
//!
//! At a crossing the arc directed up and to the right is cut at two points
//! `p` (before the crossing) and `q` (after it). The two pieces keep their
//! outer endpoints, `p` becomes a `+` point and `q` a `−` point, and a B arc
//! and a C arc from `q` back to `p` bound a thin bigon around the crossing,
//! each passing once across the other A strand.

use std::collections::BTreeMap;

use super::assemble::wrap_path;
use super::geometry::{Param, Seg};
use super::links::{a_crossing_list, ACrossing};
use super::{Arc, BridgePoint, Color, Point, PointSign, TorusDiagram, UNIT};

fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

fn reversed(arc: &Arc) -> Arc {
    let mut vertices = arc.vertices.clone();
    vertices.reverse();
    let wraps = arc.wraps.iter().rev().map(|&(x, y)| (-x, -y)).collect();
    Arc {
        color: arc.color,
        endpoints: [arc.endpoints[1], arc.endpoints[0]],
        vertices,
        wraps,
    }
}

/// Unwrapped polyline of an arc, starting at its first vertex.
fn unwrap(arc: &Arc) -> Vec<(i64, i64)> {
    let mut pts = vec![(arc.vertices[0].x, arc.vertices[0].y)];
    for s in arc.segments() {
        let last = *pts.last().unwrap();
        let (dx, dy) = s.delta();
        pts.push((last.0 + dx, last.1 + dy));
    }
    pts
}

/// A planned cut: segment `segment` of an oriented arc at parameter `t`.
#[derive(Clone, Copy)]
struct Cut {
    segment: usize,
    t: Param,
}

/// The new B and C arcs around crossing `x` between `p` and `q`, in
/// unwrapped coordinates.
type Path = Vec<(i64, i64)>;

fn bigon(p: (i64, i64), x: (i64, i64), q: (i64, i64)) -> (Path, Path) {
    let room_b = x.0 - p.0;
    let room_c = (x.1 - x.0) - (p.1 - p.0);
    let e = room_b.min(room_c) / 2;
    let fits = e >= 1 && q.0 > x.0 && (q.1 - q.0) > (x.1 - x.0);
    if fits {
        (
            vec![q, (x.0 - e, x.1 + e), p],
            vec![q, (x.0 + e, x.1 - e), p],
        )
    } else {
        // once around the torus: leftward for B, down and right for C
        (
            vec![q, (p.0 - UNIT, p.1)],
            vec![q, (p.0 + UNIT, p.1 - UNIT)],
        )
    }
}

/// Removes every A crossing by mini-stabilization. Diagrams without A
/// crossings are returned unchanged.
pub fn mini_stabilize(diag: TorusDiagram) -> TorusDiagram {
    let mut diag = diag;
    loop {
        let crossings = a_crossing_list(&diag);
        if crossings.is_empty() {
            return diag;
        }
        diag = stabilize_round(diag, &crossings);
    }
}

/// Stabilizes at most one crossing per A segment.
fn stabilize_round(diag: TorusDiagram, crossings: &[ACrossing]) -> TorusDiagram {
    let (strands, mut points, arcs, mut s) = diag.into_parts();
    let forward: Vec<bool> = arcs
        .iter()
        .map(|a| points[a.endpoints[0]].sign == PointSign::Minus)
        .collect();
    let mut cuts: BTreeMap<usize, BTreeMap<usize, Cut>> = BTreeMap::new();
    for c in crossings {
        let oriented = |arc: usize, seg: Seg, segment: usize, t: Param| {
            if forward[arc] {
                (seg.delta(), segment, t)
            } else {
                let (dx, dy) = seg.delta();
                let back = Param {
                    num: t.den - t.num,
                    den: t.den,
                };
                ((-dx, -dy), arcs[arc].segment_count() - 1 - segment, back)
            }
        };
        let (d1, j1, t1) = oriented(c.arc, c.seg, c.segment, c.t);
        let (d2, j2, t2) = oriented(c.other_arc, c.other_seg, c.other_segment, c.u);
        // the more clockwise direction is the one heading up and right
        let (arc, cut) = if cross(d1, d2) > 0 {
            (c.arc, Cut { segment: j1, t: t1 })
        } else {
            (c.other_arc, Cut { segment: j2, t: t2 })
        };
        let per_arc = cuts.entry(arc).or_default();
        per_arc.entry(cut.segment).or_insert(cut);
    }

    let mut out = Vec::with_capacity(arcs.len());
    for (k, arc) in arcs.iter().enumerate() {
        let Some(plan) = cuts.get(&k) else {
            out.push(arc.clone());
            continue;
        };
        let arc = if forward[k] {
            arc.clone()
        } else {
            reversed(arc)
        };
        let path = unwrap(&arc);
        let mut piece = vec![path[0]];
        let mut piece_start = arc.endpoints[0];
        for (j, w) in path.windows(2).enumerate() {
            if let Some(cut) = plan.get(&j) {
                let seg = Seg { a: w[0], b: w[1] };
                let x = cut.t.point_on(seg);
                let p = cut.t.mid(Param::ZERO).point_on(seg);
                let q = cut.t.mid(Param::ONE).point_on(seg);
                let shift = (p.0.div_euclid(UNIT) * UNIT, p.1.div_euclid(UNIT) * UNIT);
                let local = |z: (i64, i64)| (z.0 - shift.0, z.1 - shift.1);
                let (pl, xl, ql) = (local(p), local(x), local(q));

                let p_id = points.len();
                let q_id = p_id + 1;
                for (z, sign) in [(pl, PointSign::Plus), (ql, PointSign::Minus)] {
                    let r = (z.0.rem_euclid(UNIT), z.1.rem_euclid(UNIT));
                    points.push(BridgePoint {
                        position: Point::new(r.0, r.1),
                        sign,
                    });
                }
                piece.push(p);
                out.push(polyline(Color::A, [piece_start, p_id], &piece));
                let (b, c) = bigon(pl, xl, ql);
                out.push(polyline(Color::B, [q_id, p_id], &b));
                out.push(polyline(Color::C, [q_id, p_id], &c));
                piece = vec![q];
                piece_start = q_id;
                s += 1;
            }
            piece.push(w[1]);
        }
        out.push(polyline(Color::A, [piece_start, arc.endpoints[1]], &piece));
    }
    TorusDiagram::new(strands, points, out, s).expect("stabilization preserves incidence")
}

fn polyline(color: Color, endpoints: [usize; 2], path: &[(i64, i64)]) -> Arc {
    let (vertices, wraps) = wrap_path(path);
    Arc {
        color,
        endpoints,
        vertices,
        wraps,
    }
}
