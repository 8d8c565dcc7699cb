//! Tiles and their vertical stacking.
//!
//! Layout of one tile, bottom to top, in rows of height `4v`:
//!
//! * one row per letter of g⁻¹, each drawing an A crossing;
//! * the band region, `k + 1` rows: two `+` points on columns 1 and 2 at
//!   height `2v`, two `−` points `4vk` above them, B arcs wrapping once
//!   leftward around the torus from each `−` point to the `+` point below
//!   it, and two C arcs descending from the `−` points while crossing each
//!   other `k` times;
//! * one row per letter of g, each drawing an A crossing.
//!
//! Column j sits at `x0 + (j − 1)·w` with `w ≤ v`, so every diagonal is at
//! least four times steeper than it is wide.

use super::links::ComponentKind;
use super::{Arc, BridgePoint, Color, Point, PointSign, TorusDiagram, UNIT};
use crate::error::{Error, Result};
use crate::quasipositive::{validate, BandFactor, Factorization, Sign};

/// The combinatorial content of one tile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tile {
    strands: usize,
    exponent: u32,
    lower: Vec<usize>,
    upper: Vec<usize>,
}

impl Tile {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Crossing generators of the g⁻¹ rows, bottom to top.
    pub fn lower_crossings(&self) -> &[usize] {
        &self.lower
    }

    /// Crossing generators of the g rows, bottom to top.
    pub fn upper_crossings(&self) -> &[usize] {
        &self.upper
    }

    /// A crossings drawn by the conjugator: one per letter of g and of g⁻¹.
    pub fn a_crossings(&self) -> usize {
        self.lower.len() + self.upper.len()
    }

    pub fn bridge_point_count(&self) -> usize {
        4
    }

    /// Crossings between the two C arcs in the band region.
    pub fn c_crossings(&self) -> usize {
        self.exponent as usize
    }

    /// The closed component this tile contributes to L₂.
    pub fn l2_component(&self) -> ComponentKind {
        ComponentKind::for_exponent(self.exponent)
    }

    fn rows(&self) -> usize {
        self.lower.len() + self.upper.len() + self.exponent as usize + 1
    }
}

/// The tile for `g σ₁^k g⁻¹`. Negative bands are rejected: their C arcs
/// would have to climb.
pub fn build_tile(factor: &BandFactor) -> Result<Tile> {
    if factor.sign() == Sign::Negative {
        return Err(Error::NegativeFactor { index: 0 });
    }
    let g: Vec<usize> = factor
        .conjugator()
        .letters()
        .iter()
        .map(|l| l.unsigned_abs() as usize)
        .collect();
    // Read top to bottom the tile spells g σ₁ g⁻¹, so bottom to top the g⁻¹
    // rows list g's letters forwards and the g rows list them backwards.
    let upper = g.iter().rev().copied().collect();
    Ok(Tile {
        strands: factor.strands(),
        exponent: factor.exponent(),
        lower: g,
        upper,
    })
}

struct Frame {
    y0: i64,
    v: i64,
}

struct Layout {
    x0: i64,
    w: i64,
    frames: Vec<Frame>,
}

impl Layout {
    fn new(tiles: &[Tile], strands: usize) -> Result<Self> {
        let n = tiles.len() as i64;
        let mut frames = Vec::with_capacity(tiles.len());
        for (i, tile) in tiles.iter().enumerate() {
            let i = i as i64;
            let y0 = i * UNIT / n;
            let band = (i + 1) * UNIT / n - y0;
            let v = band / (4 * tile.rows() as i64);
            frames.push(Frame { y0, v });
        }
        let min_v = frames.iter().map(|f| f.v).min().unwrap_or(0);
        let w = (min_v / 8) * 8;
        let rows: usize = tiles.iter().map(Tile::rows).sum();
        if w < 8 || (strands as i64 - 1) * w >= UNIT / 2 {
            return Err(Error::LayoutResolution { rows });
        }
        let x0 = UNIT / 2 - (strands as i64 - 1) * w / 2;
        Ok(Self { x0, w, frames })
    }

    fn x(&self, column: usize) -> i64 {
        self.x0 + (column as i64 - 1) * self.w
    }

    fn row_y(&self, tile: usize, row: usize) -> i64 {
        let f = &self.frames[tile];
        f.y0 + 4 * f.v * row as i64
    }

    fn lower_y(&self, tile: usize, t: &Tile) -> i64 {
        self.row_y(tile, t.lower.len()) + 2 * self.frames[tile].v
    }

    fn upper_y(&self, tile: usize, t: &Tile) -> i64 {
        self.lower_y(tile, t) + 4 * self.frames[tile].v * t.exponent as i64
    }
}

fn follow(mut column: usize, letters: &[usize]) -> usize {
    for &i in letters {
        if column == i {
            column += 1;
        } else if column == i + 1 {
            column -= 1;
        }
    }
    column
}

fn point_id(tile: usize, column: usize, upper: bool) -> usize {
    4 * tile + column - 1 + if upper { 2 } else { 0 }
}

/// Converts an unwrapped polyline into torus vertices plus wrap counts.
pub(crate) fn wrap_path(points: &[(i64, i64)]) -> (Vec<Point>, Vec<(i64, i64)>) {
    let vertices = points
        .iter()
        .map(|&(x, y)| Point::new(x.rem_euclid(UNIT), y.rem_euclid(UNIT)))
        .collect();
    let wraps = points
        .windows(2)
        .map(|p| {
            (
                p[1].0.div_euclid(UNIT) - p[0].0.div_euclid(UNIT),
                p[1].1.div_euclid(UNIT) - p[0].1.div_euclid(UNIT),
            )
        })
        .collect();
    (vertices, wraps)
}

struct Tracer<'a> {
    layout: &'a Layout,
    column: usize,
    points: Vec<(i64, i64)>,
}

impl Tracer<'_> {
    fn cross_rows(&mut self, tile: usize, first_row: usize, letters: &[usize], offset: i64) {
        let v = self.layout.frames[tile].v;
        for (r, &i) in letters.iter().enumerate() {
            let target = if self.column == i {
                i + 1
            } else if self.column == i + 1 {
                i
            } else {
                continue;
            };
            let y = self.layout.row_y(tile, first_row + r) + offset;
            let start = (self.layout.x(self.column), y);
            if self.points.last() != Some(&start) {
                self.points.push(start);
            }
            self.points.push((self.layout.x(target), y + 4 * v));
            self.column = target;
        }
    }
}

/// Follows the A strand leaving the `−` point on `column` of `tile` upward
/// until it reaches a `+` point. Returns the path and the terminal point id.
fn trace_a(
    layout: &Layout,
    tiles: &[Tile],
    tile: usize,
    column: usize,
) -> Result<(Vec<(i64, i64)>, usize)> {
    let n = tiles.len();
    let t = &tiles[tile];
    let mut tracer = Tracer {
        layout,
        column,
        points: vec![(layout.x(column), layout.upper_y(tile, t))],
    };
    let first_upper = t.lower.len() + t.exponent as usize + 1;
    tracer.cross_rows(tile, first_upper, &t.upper, 0);
    let mut offset = 0;
    let mut current = tile;
    for _ in 0..=2 * n {
        current += 1;
        if current == n {
            current = 0;
            offset += UNIT;
        }
        let t = &tiles[current];
        tracer.cross_rows(current, 0, &t.lower, offset);
        if tracer.column <= 2 {
            let end = (layout.x(tracer.column), layout.lower_y(current, t) + offset);
            tracer.points.push(end);
            return Ok((tracer.points, point_id(current, tracer.column, false)));
        }
        let first_upper = t.lower.len() + t.exponent as usize + 1;
        tracer.cross_rows(current, first_upper, &t.upper, offset);
    }
    Err(Error::MalformedDiagram(format!(
        "the strand leaving tile {tile} never returns to a band"
    )))
}

/// Stacks the tiles of `f` without checking that the product is Δ².
///
/// Tile `i` (factor `i`, 1-indexed) occupies the band
/// `[(i−1)/n, i/n)` of the torus, so factor n sits on top and factor 1 at
/// the bottom.
pub fn stack_tiles(f: &Factorization) -> Result<TorusDiagram> {
    let d = f.strands();
    if d < 2 {
        return Err(Error::TooFewStrands { min: 2, got: d });
    }
    if f.is_empty() {
        return Ok(TorusDiagram::empty(d));
    }
    let tiles = f
        .factors()
        .iter()
        .enumerate()
        .map(|(i, b)| build_tile(b).map_err(|_| Error::NegativeFactor { index: i }))
        .collect::<Result<Vec<_>>>()?;
    let layout = Layout::new(&tiles, d)?;

    let mut points = Vec::with_capacity(4 * tiles.len());
    let mut arcs = Vec::new();
    for (i, t) in tiles.iter().enumerate() {
        let (yl, yu) = (layout.lower_y(i, t), layout.upper_y(i, t));
        for (y, sign) in [(yl, PointSign::Plus), (yu, PointSign::Minus)] {
            for c in 1..=2 {
                points.push(BridgePoint {
                    position: Point::new(layout.x(c), y),
                    sign,
                });
            }
        }
        for c in 1..=2 {
            arcs.push(Arc {
                color: Color::B,
                endpoints: [point_id(i, c, true), point_id(i, c, false)],
                vertices: vec![Point::new(layout.x(c), yu), Point::new(layout.x(c), yl)],
                wraps: vec![(-1, 0)],
            });
        }
        let step = 4 * layout.frames[i].v;
        for start in 1..=2 {
            let mut column = start;
            let mut path = vec![(layout.x(column), yu)];
            for s in 1..=t.exponent as i64 {
                column = 3 - column;
                path.push((layout.x(column), yu - s * step));
            }
            let (vertices, wraps) = wrap_path(&path);
            arcs.push(Arc {
                color: Color::C,
                endpoints: [point_id(i, start, true), point_id(i, column, false)],
                vertices,
                wraps,
            });
        }
    }
    for (i, _) in tiles.iter().enumerate() {
        for c in 1..=2 {
            let (path, end) = trace_a(&layout, &tiles, i, c)?;
            let (vertices, wraps) = wrap_path(&path);
            arcs.push(Arc {
                color: Color::A,
                endpoints: [point_id(i, c, true), end],
                vertices,
                wraps,
            });
        }
    }
    // A strand that never passes through a band would be a closed A curve.
    for j in 1..=d {
        let mut column = j;
        let mut meets_band = false;
        for t in &tiles {
            column = follow(column, &t.lower);
            meets_band |= column <= 2;
            column = follow(column, &t.upper);
        }
        if !meets_band {
            return Err(Error::MalformedDiagram(format!(
                "the A strand through column {j} never passes through a band"
            )));
        }
    }
    TorusDiagram::new(d, points, arcs, 0)
}

/// Builds the torus diagram of a validated factorization of Δ², tiles stacked
/// in reverse order (factor n on top). The result generally still has A
/// crossings; see [`super::mini_stabilize`].
pub fn assemble(f: &Factorization) -> Result<TorusDiagram> {
    if f.strands() < 2 {
        return Err(Error::TooFewStrands {
            min: 2,
            got: f.strands(),
        });
    }
    if let Some(i) = f.factors().iter().position(|b| b.sign() == Sign::Negative) {
        return Err(Error::NegativeFactor { index: i });
    }
    if !validate(f).is_valid() {
        return Err(Error::InvalidFactorization);
    }
    stack_tiles(f)
}
