//! Exact segment predicates on the flat torus `[0, UNIT)²`.

use super::UNIT;

pub(crate) type P = (i64, i64);

/// A segment in unwrapped coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Seg {
    pub a: P,
    pub b: P,
}

impl Seg {
    pub fn shifted(self, sx: i64, sy: i64) -> Self {
        Seg {
            a: (self.a.0 + sx * UNIT, self.a.1 + sy * UNIT),
            b: (self.b.0 + sx * UNIT, self.b.1 + sy * UNIT),
        }
    }

    pub fn delta(self) -> P {
        (self.b.0 - self.a.0, self.b.1 - self.a.1)
    }

    fn bbox(self) -> (i64, i64, i64, i64) {
        (
            self.a.0.min(self.b.0),
            self.a.0.max(self.b.0),
            self.a.1.min(self.b.1),
            self.a.1.max(self.b.1),
        )
    }
}

fn cross(o: P, p: P, q: P) -> i128 {
    let (ax, ay) = ((p.0 - o.0) as i128, (p.1 - o.1) as i128);
    let (bx, by) = ((q.0 - o.0) as i128, (q.1 - o.1) as i128);
    ax * by - ay * bx
}

fn on_segment(s: Seg, p: P) -> bool {
    let (x0, x1, y0, y1) = s.bbox();
    cross(s.a, s.b, p) == 0 && (x0..=x1).contains(&p.0) && (y0..=y1).contains(&p.1)
}

/// Exact rational parameter `num / den` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Param {
    pub num: i128,
    pub den: i128,
}

impl Param {
    /// Point at this parameter along `s`, rounded to the nearest unit.
    pub fn point_on(self, s: Seg) -> P {
        let (dx, dy) = s.delta();
        let at = |base: i64, d: i64| -> i64 {
            let num = base as i128 * self.den + d as i128 * self.num;
            div_round(num, self.den) as i64
        };
        (at(s.a.0, dx), at(s.a.1, dy))
    }

    /// Midpoint of two parameters.
    pub fn mid(self, other: Param) -> Param {
        Param {
            num: self.num * other.den + other.num * self.den,
            den: 2 * self.den * other.den,
        }
    }

    pub const ZERO: Param = Param { num: 0, den: 1 };
    pub const ONE: Param = Param { num: 1, den: 1 };
}

fn div_round(num: i128, den: i128) -> i128 {
    (2 * num + den).div_euclid(2 * den)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Hit {
    /// Interiors cross at one point; parameters along each segment.
    Proper { t: Param, u: Param },
    /// The segments meet at `point`, an endpoint of at least one of them.
    Touch { point: P },
    /// Collinear with an overlap of positive length.
    Overlap,
}

/// Intersection of two segments in the plane.
pub(crate) fn intersect(s: Seg, t: Seg) -> Option<Hit> {
    let (sx0, sx1, sy0, sy1) = s.bbox();
    let (tx0, tx1, ty0, ty1) = t.bbox();
    if sx1 < tx0 || tx1 < sx0 || sy1 < ty0 || ty1 < sy0 {
        return None;
    }
    let d1 = cross(t.a, t.b, s.a);
    let d2 = cross(t.a, t.b, s.b);
    let d3 = cross(s.a, s.b, t.a);
    let d4 = cross(s.a, s.b, t.b);
    if d1.signum() * d2.signum() < 0 && d3.signum() * d4.signum() < 0 {
        let (sdx, sdy) = s.delta();
        let (tdx, tdy) = t.delta();
        let den = sdx as i128 * tdy as i128 - sdy as i128 * tdx as i128;
        let wx = (t.a.0 - s.a.0) as i128;
        let wy = (t.a.1 - s.a.1) as i128;
        let t_num = wx * tdy as i128 - wy * tdx as i128;
        let u_num = wx * sdy as i128 - wy * sdx as i128;
        let (t_num, u_num, den) = if den < 0 {
            (-t_num, -u_num, -den)
        } else {
            (t_num, u_num, den)
        };
        return Some(Hit::Proper {
            t: Param { num: t_num, den },
            u: Param { num: u_num, den },
        });
    }
    if d1 == 0 && d2 == 0 {
        // collinear
        let mut shared = Vec::new();
        for p in [s.a, s.b] {
            if on_segment(t, p) {
                shared.push(p);
            }
        }
        for p in [t.a, t.b] {
            if on_segment(s, p) && !shared.contains(&p) {
                shared.push(p);
            }
        }
        return match shared.len() {
            0 => None,
            1 => Some(Hit::Touch { point: shared[0] }),
            _ => Some(Hit::Overlap),
        };
    }
    for p in [s.a, s.b] {
        if on_segment(t, p) {
            return Some(Hit::Touch { point: p });
        }
    }
    for p in [t.a, t.b] {
        if on_segment(s, p) {
            return Some(Hit::Touch { point: p });
        }
    }
    None
}

/// Integer shifts `(sx, sy)` for which `t` shifted may meet `s`.
pub(crate) fn candidate_shifts(s: Seg, t: Seg) -> impl Iterator<Item = (i64, i64)> {
    let (sx0, sx1, sy0, sy1) = s.bbox();
    let (tx0, tx1, ty0, ty1) = t.bbox();
    let xs = (sx0 - tx1).div_euclid(UNIT)..=(sx1 - tx0).div_euclid(UNIT) + 1;
    let ys = (sy0 - ty1).div_euclid(UNIT)..=(sy1 - ty0).div_euclid(UNIT) + 1;
    xs.flat_map(move |x| ys.clone().map(move |y| (x, y)))
}

/// All intersections of `s` with the torus translates of `t`.
pub(crate) fn torus_hits(s: Seg, t: Seg) -> Vec<(Hit, (i64, i64))> {
    candidate_shifts(s, t)
        .filter_map(|(x, y)| intersect(s, t.shifted(x, y)).map(|h| (h, (x, y))))
        .collect()
}

/// Reduces a coordinate pair into the fundamental square.
pub(crate) fn reduce(p: P) -> P {
    (p.0.rem_euclid(UNIT), p.1.rem_euclid(UNIT))
}
