//! Diagrammatic test for transverse bridge position.
//!
//! With every arc oriented from its `−` end to its `+` end, A arcs must
//! climb, B arcs must run left, and C arcs must cross the slope-one
//! foliation downward (the functional `y − x` strictly decreases).

use serde::Serialize;

use super::{Color, PointSign, TorusDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// Both ends carry the same sign, so the arc has no orientation.
    EndpointSigns,
    /// The segment does not move in the direction its color requires.
    NotMonotone,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub arc: usize,
    pub color: Color,
    /// Segment index in stored order; `None` for endpoint violations.
    pub segment: Option<usize>,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransverseReport {
    pub arcs_checked: usize,
    pub violations: Vec<Violation>,
}

impl TransverseReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn monotone(color: Color, dx: i64, dy: i64) -> bool {
    match color {
        Color::A => dy > 0,
        Color::B => dx < 0,
        Color::C => dy - dx < 0,
    }
}

pub fn check_transverse(diag: &TorusDiagram) -> TransverseReport {
    let mut violations = Vec::new();
    for (k, arc) in diag.arcs().iter().enumerate() {
        let s0 = diag.bridge_points()[arc.endpoints[0]].sign;
        let s1 = diag.bridge_points()[arc.endpoints[1]].sign;
        let forward = match (s0, s1) {
            (PointSign::Minus, PointSign::Plus) => true,
            (PointSign::Plus, PointSign::Minus) => false,
            _ => {
                violations.push(Violation {
                    arc: k,
                    color: arc.color,
                    segment: None,
                    kind: ViolationKind::EndpointSigns,
                });
                continue;
            }
        };
        for (j, seg) in arc.segments().enumerate() {
            let (mut dx, mut dy) = seg.delta();
            if !forward {
                dx = -dx;
                dy = -dy;
            }
            if !monotone(arc.color, dx, dy) {
                violations.push(Violation {
                    arc: k,
                    color: arc.color,
                    segment: Some(j),
                    kind: ViolationKind::NotMonotone,
                });
            }
        }
    }
    TransverseReport {
        arcs_checked: diag.arcs().len(),
        violations,
    }
}
