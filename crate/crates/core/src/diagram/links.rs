//! The pairwise unions `L₁ = τ_α ∪ −τ_β`, `L₂ = τ_β ∪ −τ_γ`,
//! `L₃ = τ_γ ∪ −τ_α`, bridge parameters, and the triviality certificates.

use std::fmt;

use serde::Serialize;

use super::geometry::{reduce, torus_hits, Hit, Param, Seg};
use super::{Color, TorusDiagram};
use crate::braid::{self, BraidWord};
use crate::error::{Error, Result};
use crate::quasipositive::Factorization;

/// A crossing between two A segments.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ACrossing {
    pub arc: usize,
    pub segment: usize,
    pub seg: Seg,
    pub t: Param,
    pub other_arc: usize,
    pub other_segment: usize,
    pub other_seg: Seg,
    pub u: Param,
}

struct IndexedSeg {
    arc: usize,
    segment: usize,
    seg: Seg,
}

fn segments_of(diag: &TorusDiagram, colors: &[Color]) -> Vec<IndexedSeg> {
    diag.arcs()
        .iter()
        .enumerate()
        .filter(|(_, a)| colors.contains(&a.color))
        .flat_map(|(k, a)| {
            a.segments().enumerate().map(move |(j, seg)| IndexedSeg {
                arc: k,
                segment: j,
                seg,
            })
        })
        .collect()
}

pub(crate) fn a_crossing_list(diag: &TorusDiagram) -> Vec<ACrossing> {
    let segs = segments_of(diag, &[Color::A]);
    let mut out = Vec::new();
    for (i, s) in segs.iter().enumerate() {
        for o in &segs[i + 1..] {
            for (hit, shift) in torus_hits(s.seg, o.seg) {
                if let Hit::Proper { t, u } = hit {
                    out.push(ACrossing {
                        arc: s.arc,
                        segment: s.segment,
                        seg: s.seg,
                        t,
                        other_arc: o.arc,
                        other_segment: o.segment,
                        other_seg: o.seg.shifted(shift.0, shift.1),
                        u,
                    });
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PositionIssueKind {
    /// An arc crosses or touches itself.
    NotEmbedded,
    /// Two segments share a stretch of positive length.
    Overlap,
    /// Two arcs meet tangentially or at a vertex instead of crossing.
    NonTransverse,
    /// An arc runs through a bridge point it does not end on.
    ThroughBridgePoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositionIssue {
    pub kind: PositionIssueKind,
    pub arcs: (usize, usize),
    pub bridge_point: Option<usize>,
}

/// Checks that arcs are embedded, pairwise transverse, and meet bridge
/// points only at their ends.
pub fn check_general_position(diag: &TorusDiagram) -> Vec<PositionIssue> {
    let segs = segments_of(diag, &Color::ALL);
    let points = diag.bridge_points();
    let mut issues = Vec::new();
    let shared_endpoint = |a: usize, b: usize, p: (i64, i64)| {
        let ea = diag.arcs()[a].endpoints;
        let eb = diag.arcs()[b].endpoints;
        ea.iter()
            .filter(|id| eb.contains(id))
            .any(|&id| (points[id].position.x, points[id].position.y) == reduce(p))
    };
    for (i, s) in segs.iter().enumerate() {
        for o in &segs[i + 1..] {
            let same = s.arc == o.arc;
            for (hit, _) in torus_hits(s.seg, o.seg) {
                let kind = match hit {
                    Hit::Proper { .. } if same => Some(PositionIssueKind::NotEmbedded),
                    Hit::Proper { .. } => None,
                    Hit::Overlap => Some(PositionIssueKind::Overlap),
                    Hit::Touch { point } => {
                        let adjacent = same && o.segment == s.segment + 1;
                        if adjacent || shared_endpoint(s.arc, o.arc, point) {
                            None
                        } else if same {
                            Some(PositionIssueKind::NotEmbedded)
                        } else {
                            Some(PositionIssueKind::NonTransverse)
                        }
                    }
                };
                if let Some(kind) = kind {
                    issues.push(PositionIssue {
                        kind,
                        arcs: (s.arc, o.arc),
                        bridge_point: None,
                    });
                }
            }
        }
    }
    for (id, p) in points.iter().enumerate() {
        let dot = Seg {
            a: (p.position.x, p.position.y),
            b: (p.position.x, p.position.y),
        };
        for s in &segs {
            let arc = &diag.arcs()[s.arc];
            let last = arc.segment_count() - 1;
            let touches = !torus_hits(s.seg, dot).is_empty();
            if !touches {
                continue;
            }
            let legit = (s.segment == 0 && arc.endpoints[0] == id)
                || (s.segment == last && arc.endpoints[1] == id);
            if !legit {
                issues.push(PositionIssue {
                    kind: PositionIssueKind::ThroughBridgePoint,
                    arcs: (s.arc, s.arc),
                    bridge_point: Some(id),
                });
            }
        }
    }
    issues
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn union_colors(diag: &TorusDiagram, colors: [Color; 2]) -> UnionFind {
    let mut uf = UnionFind::new(diag.bridge_points().len());
    for arc in diag.arcs() {
        if colors.contains(&arc.color) {
            uf.union(arc.endpoints[0], arc.endpoints[1]);
        }
    }
    uf
}

/// Closed components of the union of two colors.
fn closure_components(diag: &TorusDiagram, colors: [Color; 2]) -> usize {
    let mut uf = union_colors(diag, colors);
    (0..diag.bridge_points().len())
        .filter(|&i| uf.find(i) == i)
        .count()
}

/// Type of a split closed component of L₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComponentKind {
    Unknot,
    /// The torus link T(2, q).
    TorusLink {
        q: u32,
    },
}

impl ComponentKind {
    /// The component a band `σ₁^k` contributes: an unknot for a smooth band,
    /// `T(2, k + 1)` for an A_k singularity.
    pub fn for_exponent(k: u32) -> Self {
        if k <= 1 {
            ComponentKind::Unknot
        } else {
            ComponentKind::TorusLink { q: k + 1 }
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::Unknot => f.write_str("unknot"),
            ComponentKind::TorusLink { q } => write!(f, "T(2,{q})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitComponent {
    pub kind: ComponentKind,
    /// Bridge points on this component, ascending.
    pub bridge_points: Vec<usize>,
    /// Crossings among its C arcs.
    pub twists: usize,
}

/// Groups the B ∪ C cycles into split pieces: cycles whose projections meet
/// belong to the same piece.
fn l2_pieces(diag: &TorusDiagram) -> Vec<SplitComponent> {
    let npts = diag.bridge_points().len();
    let mut uf = union_colors(diag, [Color::B, Color::C]);
    let segs = segments_of(diag, &[Color::B, Color::C]);
    let mut c_crossings: Vec<usize> = Vec::new();
    for (i, s) in segs.iter().enumerate() {
        for o in &segs[i + 1..] {
            for (hit, _) in torus_hits(s.seg, o.seg) {
                let a = diag.arcs()[s.arc].endpoints[0];
                let b = diag.arcs()[o.arc].endpoints[0];
                match hit {
                    Hit::Proper { .. } => {
                        uf.union(a, b);
                        if diag.arcs()[s.arc].color == Color::C
                            && diag.arcs()[o.arc].color == Color::C
                        {
                            c_crossings.push(a);
                        }
                    }
                    Hit::Overlap => uf.union(a, b),
                    Hit::Touch { .. } => {}
                }
            }
        }
    }
    let mut pieces: std::collections::BTreeMap<usize, SplitComponent> = Default::default();
    for i in 0..npts {
        let root = uf.find(i);
        pieces
            .entry(root)
            .or_insert_with(|| SplitComponent {
                kind: ComponentKind::Unknot,
                bridge_points: Vec::new(),
                twists: 0,
            })
            .bridge_points
            .push(i);
    }
    for a in c_crossings {
        let root = uf.find(a);
        pieces.get_mut(&root).expect("piece exists").twists += 1;
    }
    pieces
        .into_values()
        .map(|mut p| {
            p.kind = if p.bridge_points.len() <= 2 {
                ComponentKind::Unknot
            } else {
                ComponentKind::for_exponent(p.twists as u32)
            };
            p
        })
        .collect()
}

/// True when every split component of L₂ is an unknot.
pub fn l2_is_smooth(diag: &TorusDiagram) -> bool {
    l2_pieces(diag)
        .iter()
        .all(|c| c.kind == ComponentKind::Unknot)
}

/// `(b; c₁, c₂, c₃)` together with the stabilization count `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeParams {
    pub b: usize,
    pub c1: usize,
    pub c2: usize,
    pub c3: usize,
    pub s: usize,
}

impl BridgeParams {
    /// Parameters with the stabilization contribution removed:
    /// `(b − s; c₁, c₂ − s, c₃)`.
    pub fn baseline(&self) -> BridgeParams {
        BridgeParams {
            b: self.b - self.s,
            c1: self.c1,
            c2: self.c2 - self.s,
            c3: self.c3,
            s: 0,
        }
    }

    /// `c₁ + c₂ + c₃ − b`, the Euler characteristic of the surface.
    pub fn euler_characteristic(&self) -> i64 {
        (self.c1 + self.c2 + self.c3) as i64 - self.b as i64
    }

    /// The tuple a smooth degree-`d` surface with `s` stabilizations has:
    /// `(2d(d−1) + s; d, d(d−1) + s, d)`.
    pub fn expected_smooth(d: usize, s: usize) -> BridgeParams {
        BridgeParams {
            b: 2 * d * (d - 1) + s,
            c1: d,
            c2: d * (d - 1) + s,
            c3: d,
            s,
        }
    }
}

impl fmt::Display for BridgeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {}, {})", self.b, self.c1, self.c2, self.c3)
    }
}

/// Reads the bridge parameters off a diagram with no A crossings.
pub fn bridge_params(diag: &TorusDiagram) -> Result<BridgeParams> {
    let crossings = diag.a_crossings();
    if crossings > 0 {
        return Err(Error::Unstabilized(crossings));
    }
    Ok(BridgeParams {
        b: diag.bridge_index(),
        c1: closure_components(diag, [Color::A, Color::B]),
        c2: l2_pieces(diag).len(),
        c3: closure_components(diag, [Color::C, Color::A]),
        s: diag.stabilization_count(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Handlebody {
    Alpha,
    Beta,
    Gamma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LinkOrientation {
    /// Oriented as the boundary of the disk system in `Y_λ`.
    Induced,
    /// Viewed from the neighbouring sector, with the orientation reversed.
    Reversed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Framing {
    /// Closure along the core of the handlebody.
    Surface,
    /// The closing curve is a (1,1) curve on the central torus, so `d`
    /// parallel copies form `T(d, d)` and a negative full twist unlinks them.
    OneOneCurve,
}

/// A link in a solid torus: an optional braid part plus split components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleLink {
    pub handlebody: Handlebody,
    pub orientation: LinkOrientation,
    pub framing: Framing,
    pub braid: Option<BraidWord>,
    pub components: Vec<SplitComponent>,
    /// Closed curves in the union of the two arc systems.
    pub closure_components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairwiseLinks {
    pub strands: usize,
    pub stabilizations: usize,
    pub l1: TangleLink,
    pub l2: TangleLink,
    pub l3: TangleLink,
}

/// Builds the three pairwise links of a stabilized diagram. The L₃ braid is
/// read from the tiles top to bottom, `gₙσ₁^{−εₙkₙ}gₙ⁻¹ ⋯ g₁σ₁^{−ε₁k₁}g₁⁻¹`.
pub fn pairwise_links(diag: &TorusDiagram, f: &Factorization) -> Result<PairwiseLinks> {
    let d = diag.strands();
    if f.strands() != d {
        return Err(Error::StrandMismatch {
            left: d,
            right: f.strands(),
        });
    }
    let crossings = diag.a_crossings();
    if crossings > 0 {
        return Err(Error::Unstabilized(crossings));
    }
    let mut l3_word = BraidWord::identity(d);
    for band in f.factors().iter().rev() {
        let core = BraidWord::generator(d, 1)?.pow(-band.signed_exponent());
        l3_word.extend(band.conjugator());
        l3_word.extend(&core);
        l3_word.extend(&band.conjugator().invert());
    }
    Ok(PairwiseLinks {
        strands: d,
        stabilizations: diag.stabilization_count(),
        l1: TangleLink {
            handlebody: Handlebody::Alpha,
            orientation: LinkOrientation::Induced,
            framing: Framing::Surface,
            // no A crossings remain, so the A ∪ B strands run straight around
            braid: Some(BraidWord::identity(d)),
            components: Vec::new(),
            closure_components: closure_components(diag, [Color::A, Color::B]),
        },
        l2: TangleLink {
            handlebody: Handlebody::Beta,
            orientation: LinkOrientation::Induced,
            framing: Framing::Surface,
            braid: None,
            components: l2_pieces(diag),
            closure_components: closure_components(diag, [Color::B, Color::C]),
        },
        l3: TangleLink {
            handlebody: Handlebody::Alpha,
            orientation: LinkOrientation::Reversed,
            framing: Framing::OneOneCurve,
            braid: Some(l3_word),
            components: Vec::new(),
            closure_components: closure_components(diag, [Color::C, Color::A]),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialityReport {
    /// L₁ is the closure of the trivial d-braid.
    pub l1_ok: bool,
    /// L₂ consists of split components of the expected types.
    pub l2_ok: bool,
    /// The L₃ braid equals Δ⁻², so L₃ is an unlink after the (1,1) framing.
    pub l3_ok: bool,
    pub l2_expected: Vec<ComponentKind>,
    pub l2_found: Vec<ComponentKind>,
}

impl TrivialityReport {
    pub fn passed(&self) -> bool {
        self.l1_ok && self.l2_ok && self.l3_ok
    }
}

pub fn verify_trivial(links: &PairwiseLinks, f: &Factorization) -> TrivialityReport {
    let d = links.strands;
    let identity = BraidWord::identity(d);
    let l1_ok = links.l1.closure_components == d
        && links
            .l1
            .braid
            .as_ref()
            .is_some_and(|w| braid::equal(w, &identity).unwrap_or(false));

    let mut expected: Vec<ComponentKind> = f
        .factors()
        .iter()
        .map(|b| ComponentKind::for_exponent(b.exponent()))
        .chain(std::iter::repeat_n(
            ComponentKind::Unknot,
            links.stabilizations,
        ))
        .collect();
    let mut found: Vec<ComponentKind> = links.l2.components.iter().map(|c| c.kind).collect();
    expected.sort();
    found.sort();
    let l2_ok = links.l2.braid.is_none() && expected == found;

    let inverse_twist = BraidWord::full_twist(d).expect("d >= 1").invert();
    let l3_ok = links.l3.closure_components == d
        && links
            .l3
            .braid
            .as_ref()
            .is_some_and(|w| braid::equal(w, &inverse_twist).unwrap_or(false));

    TrivialityReport {
        l1_ok,
        l2_ok,
        l3_ok,
        l2_expected: expected,
        l2_found: found,
    }
}
