//! Torus diagrams of surfaces in bridge position.
//!
//! Coordinates are integers in `[0, UNIT)`, so the flat torus has side
//! `UNIT` and every geometric predicate is exact. Serialized documents show
//! coordinates as fractions of the side with six decimals, which is exactly
//! this resolution.

mod assemble;
mod geometry;
mod links;
mod stabilize;
mod transverse;

pub use assemble::{assemble, build_tile, stack_tiles, Tile};
pub use links::{
    bridge_params, check_general_position, l2_is_smooth, pairwise_links, verify_trivial,
    BridgeParams, ComponentKind, Framing, Handlebody, LinkOrientation, PairwiseLinks,
    PositionIssue, PositionIssueKind, SplitComponent, TangleLink, TrivialityReport,
};
pub use stabilize::mini_stabilize;
pub use transverse::{check_transverse, TransverseReport, Violation, ViolationKind};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use geometry::Seg;

/// Side length of the torus in coordinate units.
pub const UNIT: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    fn in_range(self) -> bool {
        (0..UNIT).contains(&self.x) && (0..UNIT).contains(&self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl PointSign {
    pub fn symbol(self) -> char {
        match self {
            PointSign::Plus => '+',
            PointSign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BridgePoint {
    pub position: Point,
    pub sign: PointSign,
}

/// Which tangle an arc projects from: A = τ₁ (red), B = τ₂ (blue),
/// C = τ₃ (green).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    A,
    B,
    C,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::A, Color::B, Color::C];

    pub fn svg_name(self) -> &'static str {
        match self {
            Color::A => "red",
            Color::B => "blue",
            Color::C => "green",
        }
    }
}

/// A PL arc between two bridge points.
///
/// `vertices[0]` sits at `endpoints[0]` and the last vertex at
/// `endpoints[1]`. Segment `k` runs from `vertices[k]` to
/// `vertices[k + 1] + UNIT · wraps[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub color: Color,
    pub endpoints: [usize; 2],
    pub vertices: Vec<Point>,
    pub wraps: Vec<(i64, i64)>,
}

impl Arc {
    pub(crate) fn segments(&self) -> impl Iterator<Item = Seg> + '_ {
        self.vertices
            .windows(2)
            .zip(&self.wraps)
            .map(|(w, &(wx, wy))| Seg {
                a: (w[0].x, w[0].y),
                b: (w[1].x + wx * UNIT, w[1].y + wy * UNIT),
            })
    }

    pub fn segment_count(&self) -> usize {
        self.wraps.len()
    }
}

/// Bridge points and colored arcs on the central torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusDiagram {
    strands: usize,
    bridge_points: Vec<BridgePoint>,
    arcs: Vec<Arc>,
    stabilization_count: usize,
}

impl TorusDiagram {
    /// Validates and builds a diagram. Bridge point ids are indices into
    /// `bridge_points`.
    pub fn new(
        strands: usize,
        bridge_points: Vec<BridgePoint>,
        arcs: Vec<Arc>,
        stabilization_count: usize,
    ) -> Result<Self> {
        let d = Self {
            strands,
            bridge_points,
            arcs,
            stabilization_count,
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedDiagram(m));
        for (i, p) in self.bridge_points.iter().enumerate() {
            if !p.position.in_range() {
                return bad(format!("bridge point {i} lies outside the unit square"));
            }
        }
        let mut incidence: BTreeMap<(usize, Color), usize> = BTreeMap::new();
        for (k, arc) in self.arcs.iter().enumerate() {
            if arc.vertices.len() < 2 || arc.wraps.len() + 1 != arc.vertices.len() {
                return bad(format!(
                    "arc {k} needs n >= 2 vertices and n - 1 wrap pairs"
                ));
            }
            if let Some(v) = arc.vertices.iter().find(|v| !v.in_range()) {
                return bad(format!("arc {k} vertex {v:?} lies outside the unit square"));
            }
            for (end, &id) in arc.endpoints.iter().enumerate() {
                let Some(p) = self.bridge_points.get(id) else {
                    return bad(format!("arc {k} references missing bridge point {id}"));
                };
                let v = if end == 0 {
                    arc.vertices[0]
                } else {
                    *arc.vertices.last().unwrap()
                };
                if v != p.position {
                    return bad(format!(
                        "arc {k} does not start or end on bridge point {id}"
                    ));
                }
                *incidence.entry((id, arc.color)).or_default() += 1;
            }
            if arc.segments().any(|s| s.delta() == (0, 0)) {
                return bad(format!("arc {k} has a degenerate segment"));
            }
        }
        for id in 0..self.bridge_points.len() {
            for color in Color::ALL {
                let n = incidence.get(&(id, color)).copied().unwrap_or(0);
                if n != 1 {
                    return bad(format!(
                        "bridge point {id} meets {n} arcs of color {color:?}, expected 1"
                    ));
                }
            }
        }
        let plus = self
            .bridge_points
            .iter()
            .filter(|p| p.sign == PointSign::Plus)
            .count();
        if 2 * plus != self.bridge_points.len() {
            return bad(format!(
                "{plus} positive bridge points out of {}",
                self.bridge_points.len()
            ));
        }
        Ok(())
    }

    /// The diagram with no bridge points and no arcs.
    pub fn empty(strands: usize) -> Self {
        Self {
            strands,
            bridge_points: Vec::new(),
            arcs: Vec::new(),
            stabilization_count: 0,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bridge_points(&self) -> &[BridgePoint] {
        &self.bridge_points
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn stabilization_count(&self) -> usize {
        self.stabilization_count
    }

    /// Half the number of bridge points.
    pub fn bridge_index(&self) -> usize {
        self.bridge_points.len() / 2
    }

    pub fn arcs_of(&self, color: Color) -> impl Iterator<Item = (usize, &Arc)> {
        self.arcs
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.color == color)
    }

    /// Number of crossings among A arcs, counted on the torus.
    pub fn a_crossings(&self) -> usize {
        links::a_crossing_list(self).len()
    }

    pub(crate) fn into_parts(self) -> (usize, Vec<BridgePoint>, Vec<Arc>, usize) {
        (
            self.strands,
            self.bridge_points,
            self.arcs,
            self.stabilization_count,
        )
    }
}
